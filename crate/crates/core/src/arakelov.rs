//! de Jong's invariant, the normalised theta function and Faltings' delta
//! invariant in genus two.

use crate::bounds::Verdict;
use crate::error::{Error, Result};
use crate::siegel::matrix::real;
use crate::siegel::theta::{delta_g, ln_abs, n_of, r_of};
use crate::siegel::SiegelPoint;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Float;
use std::f64::consts::PI;

/// `-log T <= 36 g^3`.
pub fn dejong_bound(g: usize) -> f64 {
    36.0 * (g as f64).powi(3)
}

/// Lower bound for Faltings' delta in genus two.
pub const DELTA_LOWER: f64 = -186.0;
/// `|Delta_g|` below this is reported as near-degenerate.
pub const DEGENERATE_DELTA: f64 = 1e-200;
/// `|Delta_2|` below this is treated as the product locus.
pub const PRODUCT_LOCUS: f64 = 1e-100;
/// Samples with `||theta||` below this are resampled once, then floored.
pub const THETA_FLOOR: f64 = 1e-300;
/// Strata per torus coordinate of `x`.
pub const STRATA: usize = 8;
pub const MIN_SAMPLES: usize = 10_000;

#[derive(Clone, Debug, PartialEq)]
pub struct DejongT {
    pub log_t: f64,
    /// `|Delta_g(tau)| < 1e-200`.
    pub near_degenerate: bool,
}

/// `log T = -2g log(2 pi) - (3g-1)/(8ng) log |Delta_g(tau) det(Im tau)^{2r}|`.
pub fn dejong_t(tau: &SiegelPoint) -> Result<DejongT> {
    let g = tau.genus();
    let gf = g as f64;
    let ld = ln_abs(&delta_g(tau)?);
    let w = ld + 2.0 * r_of(g) as f64 * tau.log_det_im();
    let log_t = -2.0 * gf * (2.0 * PI).ln() - (3.0 * gf - 1.0) / (8.0 * n_of(g) as f64 * gf) * w;
    Ok(DejongT {
        log_t,
        near_degenerate: ld < DEGENERATE_DELTA.ln(),
    })
}

pub fn verify_dejong(tau: &SiegelPoint) -> Result<Verdict> {
    let t = dejong_t(tau)?;
    let note = if t.near_degenerate { "Delta_g near zero" } else { "" };
    Ok(Verdict::le("dejong_t", -t.log_t, dejong_bound(tau.genus()), note))
}

/// Data for evaluating `||theta||` at one `tau`.
#[derive(Clone, Debug)]
pub struct NormalizedThetaContext {
    pub tau: SiegelPoint,
    pub g: usize,
    re: Vec<f64>,
    im: Vec<f64>,
    im_inv: Vec<f64>,
    /// Lower Cholesky factor of `Im tau`.
    pub cholesky: Vec<f64>,
    pub det_im: f64,
    radius: f64,
    /// `max |L L^T - Im tau|` at working precision.
    pub residual: f64,
}

impl NormalizedThetaContext {
    pub fn new(tau: &SiegelPoint) -> Result<Self> {
        let g = tau.genus();
        let y = tau.im();
        let l = real::cholesky(&y, g).ok_or_else(|| Error::Domain("Im tau not positive definite".into()))?;
        let prec = tau.prec();
        let mut residual = 0.0f64;
        for i in 0..g {
            for j in 0..g {
                let mut s = Float::new(prec);
                for k in 0..g {
                    s += Float::with_val(prec, &l[i * g + k] * &l[j * g + k]);
                }
                residual = residual.max((s - &y[i * g + j]).abs().to_f64());
            }
        }
        let im: Vec<f64> = y.iter().map(|x| x.to_f64()).collect();
        let re: Vec<f64> = tau.matrix().re().iter().map(|x| x.to_f64()).collect();
        let im_inv = invert_spd(&l, g);
        let lambda_min = real::sym_eigenvalues(&im, g)[0];
        if !(lambda_min >= crate::siegel::theta::LAMBDA_MIN_FLOOR) {
            return Err(Error::Conditioning { lambda_min });
        }
        let radius = (17.0 * std::f64::consts::LN_10 / (PI * lambda_min)).sqrt() + 1.0;
        Ok(NormalizedThetaContext {
            tau: tau.clone(),
            g,
            re,
            im,
            im_inv,
            cholesky: l.iter().map(|x| x.to_f64()).collect(),
            det_im: tau.det_im().to_f64(),
            radius,
            residual,
        })
    }

    /// `||theta||` at `z = x + tau u` with real torus coordinates `x`, `u`.
    pub fn at_torus(&self, x: &[f64], u: &[f64]) -> f64 {
        let g = self.g;
        // |theta(z)| exp(-pi y^T Y^-1 y) with y = Y u equals
        // |sum_m exp(-pi (m+u)^T Y (m+u)) exp(i phase)|.
        let lo: Vec<i64> = u.iter().map(|&c| (-c - self.radius).ceil() as i64).collect();
        let hi: Vec<i64> = u.iter().map(|&c| (-c + self.radius).floor() as i64).collect();
        let mut xu = x.to_vec();
        for i in 0..g {
            for j in 0..g {
                xu[i] += self.re[i * g + j] * u[j];
            }
        }
        let mut m = lo.clone();
        let mut sum = Complex64::new(0.0, 0.0);
        let mut w = vec![0.0; g];
        loop {
            for i in 0..g {
                w[i] = m[i] as f64 + u[i];
            }
            let mut quad = 0.0;
            let mut phase = 0.0;
            for i in 0..g {
                phase += 2.0 * m[i] as f64 * xu[i];
                for j in 0..g {
                    quad += w[i] * self.im[i * g + j] * w[j];
                    phase += m[i] as f64 * self.re[i * g + j] * m[j] as f64;
                }
            }
            sum += Complex64::from_polar((-PI * quad).exp(), PI * phase);
            let mut k = 0;
            loop {
                if k == g {
                    return self.det_im.powf(0.25) * sum.norm();
                }
                m[k] += 1;
                if m[k] <= hi[k] {
                    break;
                }
                m[k] = lo[k];
                k += 1;
            }
        }
    }
}

/// `(L L^T)^{-1}` from the Cholesky factor.
fn invert_spd(l: &[Float], g: usize) -> Vec<f64> {
    let l: Vec<f64> = l.iter().map(|x| x.to_f64()).collect();
    let mut linv = vec![0.0; g * g];
    for i in 0..g {
        linv[i * g + i] = 1.0 / l[i * g + i];
        for j in 0..i {
            let s: f64 = (j..i).map(|k| l[i * g + k] * linv[k * g + j]).sum();
            linv[i * g + j] = -s / l[i * g + i];
        }
    }
    let mut out = vec![0.0; g * g];
    for i in 0..g {
        for j in 0..g {
            out[i * g + j] = (0..g).map(|k| linv[k * g + i] * linv[k * g + j]).sum();
        }
    }
    out
}

/// `||theta||(z) = det(Y)^{1/4} exp(-pi y^T Y^{-1} y) |theta(z; tau)|`,
/// `y = Im z`.
pub fn normalized_theta(z: &[Complex64], ctx: &NormalizedThetaContext) -> f64 {
    let g = ctx.g;
    assert_eq!(z.len(), g);
    let y: Vec<f64> = z.iter().map(|c| c.im).collect();
    let u: Vec<f64> = (0..g)
        .map(|i| (0..g).map(|j| ctx.im_inv[i * g + j] * y[j]).sum())
        .collect();
    let mut x: Vec<f64> = z.iter().map(|c| c.re).collect();
    for i in 0..g {
        for j in 0..g {
            x[i] -= ctx.re[i * g + j] * u[j];
        }
    }
    ctx.at_torus(&x, &u)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonteCarlo {
    pub value: f64,
    pub stderr: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LogHResult {
    pub log_h: MonteCarlo,
    /// Estimate of the integral of `||theta||^2`, which is 1/2 in genus two.
    pub normalization: MonteCarlo,
    pub samples: usize,
    pub seed: u64,
    pub floored: usize,
}

/// `int log ||theta||` over the torus with Haar measure, stratified over `x`.
pub fn log_h(ctx: &NormalizedThetaContext, samples: usize, seed: u64) -> Result<LogHResult> {
    if samples < MIN_SAMPLES {
        return Err(Error::Domain(format!("{samples} samples, need at least {MIN_SAMPLES}")));
    }
    let g = ctx.g;
    let strata = STRATA.pow(g.min(2) as u32);
    let per = samples.div_ceil(strata);
    let mut floored = 0usize;
    let (mut mean_l, mut var_l, mut mean_n, mut var_n) = (0.0, 0.0, 0.0, 0.0);
    let w = 1.0 / strata as f64;
    for h in 0..strata {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(h as u64);
        let cell = [(h % STRATA) as f64, (h / STRATA) as f64];
        let (mut s1, mut s2, mut t1, mut t2) = (0.0, 0.0, 0.0, 0.0);
        for _ in 0..per {
            let draw = |rng: &mut ChaCha8Rng| {
                let x: Vec<f64> = (0..g)
                    .map(|i| {
                        let r: f64 = rng.gen();
                        if i < 2 {
                            (cell[i] + r) / STRATA as f64
                        } else {
                            r
                        }
                    })
                    .collect();
                let u: Vec<f64> = (0..g).map(|_| rng.gen()).collect();
                ctx.at_torus(&x, &u)
            };
            let mut v = draw(&mut rng);
            if v < THETA_FLOOR {
                v = draw(&mut rng);
            }
            let l = if v < THETA_FLOOR {
                floored += 1;
                THETA_FLOOR.ln()
            } else {
                v.ln()
            };
            s1 += l;
            s2 += l * l;
            t1 += v * v;
            t2 += v * v * v * v;
        }
        let n = per as f64;
        let (ml, mn) = (s1 / n, t1 / n);
        let vl = ((s2 / n - ml * ml) * n / (n - 1.0)).max(0.0);
        let vn = ((t2 / n - mn * mn) * n / (n - 1.0)).max(0.0);
        mean_l += w * ml;
        mean_n += w * mn;
        var_l += w * w * vl / n;
        var_n += w * w * vn / n;
    }
    Ok(LogHResult {
        log_h: MonteCarlo {
            value: mean_l,
            stderr: var_l.sqrt(),
        },
        normalization: MonteCarlo {
            value: mean_n,
            stderr: var_n.sqrt(),
        },
        samples: per * strata,
        seed,
        floored,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeltaResult {
    /// `+inf` on the product locus.
    pub delta: f64,
    /// Standard error of `delta`, four times that of `log ||H||`.
    pub delta_stderr: f64,
    pub log_h: MonteCarlo,
    /// `log ||Delta_2|| = (2r log det Im tau + log |Delta_2(tau)|) / 4`.
    pub log_norm_delta2: f64,
    pub normalization: MonteCarlo,
    pub samples: usize,
    pub seed: u64,
    pub floored: usize,
    pub product_locus: bool,
}

impl DeltaResult {
    /// `delta + 16 log(2 pi) + log ||Delta_2|| + 4 log ||H||`.
    pub fn recomposition_residual(&self) -> f64 {
        if self.product_locus {
            return 0.0;
        }
        self.delta + 16.0 * (2.0 * PI).ln() + self.log_norm_delta2 + 4.0 * self.log_h.value
    }

    /// `delta >= -186`, allowing three standard errors.
    pub fn lower_bound_check(&self) -> Verdict {
        if self.product_locus {
            return Verdict::exact("delta_lower", true, "product locus: delta infinite");
        }
        Verdict::le(
            "delta_lower",
            DELTA_LOWER,
            self.delta + 3.0 * self.delta_stderr,
            format!("delta = {:.4} +- {:.4}", self.delta, self.delta_stderr),
        )
    }
}

/// Faltings' delta `-16 log(2 pi) - log ||Delta_2|| - 4 log ||H||`.
pub fn faltings_delta_genus2(tau: &SiegelPoint, samples: usize, seed: u64) -> Result<DeltaResult> {
    if tau.genus() != 2 {
        return Err(Error::Domain(format!("genus {} is not 2", tau.genus())));
    }
    let ld = ln_abs(&delta_g(tau)?);
    let log_norm_delta2 = (2.0 * r_of(2) as f64 * tau.log_det_im() + ld) / 4.0;
    let ctx = NormalizedThetaContext::new(tau)?;
    let h = log_h(&ctx, samples, seed)?;
    let product_locus = ld < PRODUCT_LOCUS.ln();
    let delta = if product_locus {
        f64::INFINITY
    } else {
        -16.0 * (2.0 * PI).ln() - log_norm_delta2 - 4.0 * h.log_h.value
    };
    Ok(DeltaResult {
        delta,
        delta_stderr: 4.0 * h.log_h.stderr,
        log_h: h.log_h,
        log_norm_delta2,
        normalization: h.normalization,
        samples: h.samples,
        seed,
        floored: h.floored,
        product_locus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::siegel::theta::theta_constant;
    use crate::siegel::{SymplecticMatrix, ThetaCharacteristic};

    fn sample_tau() -> SiegelPoint {
        SiegelPoint::from_f64(2, &[(0.0, 1.7), (0.25, 0.1), (0.25, 0.1), (0.0, 1.9)], 256).unwrap()
    }

    #[test]
    fn dejong_examples() {
        let t = dejong_t(&SiegelPoint::i_identity(2, 256)).unwrap();
        assert!(t.log_t.is_finite() && t.near_degenerate);
        assert!(verify_dejong(&sample_tau()).unwrap().pass);
        let t1 = SiegelPoint::from_f64(1, &[(0.0, 1.0)], 256).unwrap();
        let d = crate::elliptic::periods::delta_q(t1.entry(0, 0)).unwrap();
        let want = -2.0 * (2.0 * PI).ln() - 0.25 * d.abs().ln().to_f64();
        assert!((dejong_t(&t1).unwrap().log_t - want).abs() < 1e-12);
    }

    #[test]
    fn context_and_zero() {
        let tau = sample_tau();
        let ctx = NormalizedThetaContext::new(&tau).unwrap();
        assert!(ctx.residual <= 1e-25);
        let z = [Complex64::new(0.0, 0.0); 2];
        let th = theta_constant(&ThetaCharacteristic::zero(2), &tau).unwrap();
        let want = ctx.det_im.powf(0.25) * th.abs().to_f64();
        assert!((normalized_theta(&z, &ctx) - want).abs() < 1e-13);
    }

    #[test]
    fn lattice_invariance() {
        let tau = sample_tau();
        let ctx = NormalizedThetaContext::new(&tau).unwrap();
        let t: Vec<Complex64> = tau.matrix().data.iter().map(|c| c.to_c64()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let z = [
                Complex64::new(rng.gen(), rng.gen()),
                Complex64::new(rng.gen(), rng.gen()),
            ];
            let a = normalized_theta(&z, &ctx);
            let shifted = [z[0] + t[0], z[1] + t[2]];
            let b = normalized_theta(&shifted, &ctx);
            let c = normalized_theta(&[z[0] + 1.0, z[1] - 1.0], &ctx);
            assert!((a - b).abs() < 1e-10 && (a - c).abs() < 1e-10, "{a} {b} {c}");
        }
    }

    #[test]
    fn theta_divisor_zero() {
        // The odd half period (1/2)(1,0) + tau (1/2)(1,0) is a zero of theta.
        let tau = sample_tau();
        let ctx = NormalizedThetaContext::new(&tau).unwrap();
        assert!(ctx.at_torus(&[0.5, 0.0], &[0.5, 0.0]) < 1e-12);
    }

    #[test]
    fn delta_sample() {
        let r = faltings_delta_genus2(&sample_tau(), 20_000, 11).unwrap();
        assert!((r.normalization.value - 0.5).abs() < 0.02, "{r:?}");
        assert!(r.log_h.value <= 0.5 + 3.0 * r.log_h.stderr);
        assert!(r.lower_bound_check().pass);
        assert!(r.recomposition_residual().abs() < 1e-12);
        let again = faltings_delta_genus2(&sample_tau(), 20_000, 11).unwrap();
        assert_eq!(r, again);
        let sigma = SymplecticMatrix::inversion(2);
        let moved = sigma.act(&sample_tau()).unwrap();
        let m = faltings_delta_genus2(&moved, 20_000, 12).unwrap();
        let s = (r.delta_stderr.powi(2) + m.delta_stderr.powi(2)).sqrt();
        assert!((r.delta - m.delta).abs() <= 3.0 * s + 1e-9, "{} {}", r.delta, m.delta);
    }

    #[test]
    fn too_few_samples() {
        let ctx = NormalizedThetaContext::new(&sample_tau()).unwrap();
        assert!(log_h(&ctx, 100, 0).is_err());
    }
}
