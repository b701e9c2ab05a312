use super::point::SiegelPoint;
use super::symplectic::SymplecticMatrix;
use crate::error::{Error, Result};
use crate::mp::{self, Complex};
use rug::Float;
use std::fmt;

/// Characteristic `(a, b)` in `(1/2 Z)^{2g}`, stored doubled and reduced
/// into `{0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaCharacteristic {
    pub a2: Vec<u8>,
    pub b2: Vec<u8>,
}

impl ThetaCharacteristic {
    pub fn zero(g: usize) -> Self {
        ThetaCharacteristic {
            a2: vec![0; g],
            b2: vec![0; g],
        }
    }

    pub fn from_doubled(a2: &[i64], b2: &[i64]) -> Self {
        assert_eq!(a2.len(), b2.len());
        ThetaCharacteristic {
            a2: a2.iter().map(|x| x.rem_euclid(2) as u8).collect(),
            b2: b2.iter().map(|x| x.rem_euclid(2) as u8).collect(),
        }
    }

    pub fn genus(&self) -> usize {
        self.a2.len()
    }

    pub fn a2_i64(&self) -> Vec<i64> {
        self.a2.iter().map(|&x| x as i64).collect()
    }

    pub fn b2_i64(&self) -> Vec<i64> {
        self.b2.iter().map(|&x| x as i64).collect()
    }

    /// `4 a.b mod 2`.
    pub fn parity(&self) -> u8 {
        let s: u32 = self.a2.iter().zip(&self.b2).map(|(&x, &y)| (x * y) as u32).sum();
        (s % 2) as u8
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 0
    }

    pub fn add(&self, o: &Self) -> Self {
        ThetaCharacteristic {
            a2: self.a2.iter().zip(&o.a2).map(|(x, y)| (x + y) % 2).collect(),
            b2: self.b2.iter().zip(&o.b2).map(|(x, y)| (x + y) % 2).collect(),
        }
    }
}

impl fmt::Debug for ThetaCharacteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = |v: &[u8]| {
            v.iter()
                .map(|&x| if x == 0 { "0" } else { "1/2" })
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "[{}; {}]", h(&self.a2), h(&self.b2))
    }
}

impl fmt::Display for ThetaCharacteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Absolute truncation target of the theta series.
pub const THETA_ABS_TOL: f64 = 1e-30;
/// Smallest eigenvalue of `Im tau` accepted without prior reduction.
pub const LAMBDA_MIN_FLOOR: f64 = 1e-6;

/// Box radius `M` so that `|m_i| <= M` captures the series to `THETA_ABS_TOL`.
pub fn truncation_radius(g: usize, a_inf: f64, lambda_min: f64) -> Result<i64> {
    if !(lambda_min >= LAMBDA_MIN_FLOOR) {
        return Err(Error::Conditioning { lambda_min });
    }
    let ln10 = std::f64::consts::LN_10;
    let t = (30.0 * ln10 + g as f64 * ln10) / (std::f64::consts::PI * lambda_min);
    Ok((a_inf + t.max(1.0).sqrt()).ceil() as i64)
}

/// `theta[(a2/2, b2/2)](tau, 0)` for arbitrary integer `a2`, `b2`.
pub fn theta_doubled(a2: &[i64], b2: &[i64], tau: &SiegelPoint) -> Result<Complex> {
    let g = tau.genus();
    if a2.len() != g || b2.len() != g {
        return Err(Error::Domain("characteristic length differs from genus".into()));
    }
    let prec = tau.prec();
    let a_inf = a2.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0) as f64 / 2.0;
    let m_max = truncation_radius(g, a_inf, tau.lambda_min())?;
    let pi = mp::pi(prec);
    let re: Vec<Float> = tau.matrix().re();
    let im: Vec<Float> = tau.matrix().im();
    let half = |x: i64| Float::with_val(prec, x) / 2u32;
    let b: Vec<Float> = b2.iter().map(|&x| half(x)).collect();

    // |m_i + a_i| <= M, symmetric about -a so odd characteristics cancel.
    let lo: Vec<i64> = a2.iter().map(|&x| -(2 * m_max + x).div_euclid(2)).collect();
    let hi: Vec<i64> = a2.iter().map(|&x| (2 * m_max - x).div_euclid(2)).collect();
    let mut m = lo.clone();
    let mut sum = Complex::zero(prec);
    let mut v = vec![Float::new(prec); g];
    loop {
        for i in 0..g {
            v[i] = half(2 * m[i] + a2[i]);
        }
        let mut q_re = Float::new(prec);
        let mut q_im = Float::new(prec);
        let mut vb = Float::new(prec);
        for i in 0..g {
            vb += Float::with_val(prec, &v[i] * &b[i]);
            for j in 0..g {
                let vv = Float::with_val(prec, &v[i] * &v[j]);
                q_re += Float::with_val(prec, &vv * &re[i * g + j]);
                q_im += vv * &im[i * g + j];
            }
        }
        let modulus = Float::with_val(prec, -(q_im * &pi)).exp();
        let phase = Float::with_val(prec, q_re + vb * 2u32) * &pi;
        let (s, c) = phase.sin_cos(Float::new(prec));
        sum = &sum + &Complex::new(Float::with_val(prec, &modulus * &c), modulus * s);

        let mut k = 0;
        loop {
            if k == g {
                return Ok(sum);
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

pub fn theta_constant(ch: &ThetaCharacteristic, tau: &SiegelPoint) -> Result<Complex> {
    theta_doubled(&ch.a2_i64(), &ch.b2_i64(), tau)
}

/// `eta_i` for `i` in `1..=2g+1`.
pub fn eta_basis(g: usize, i: usize) -> ThetaCharacteristic {
    assert!((1..=2 * g + 1).contains(&i), "index {i} outside 1..={}", 2 * g + 1);
    let mut a2 = vec![0u8; g];
    let mut b2 = vec![0u8; g];
    if i == 2 * g + 1 {
        b2.iter_mut().for_each(|x| *x = 1);
    } else {
        let k = (i + 1) / 2;
        a2[k - 1] = 1;
        let ones = if i % 2 == 1 { k - 1 } else { k };
        b2[..ones].iter_mut().for_each(|x| *x = 1);
    }
    ThetaCharacteristic { a2, b2 }
}

/// `eta_S = sum_{i in S} eta_i mod 1`.
pub fn eta_subset(g: usize, s: &[usize]) -> ThetaCharacteristic {
    s.iter()
        .fold(ThetaCharacteristic::zero(g), |acc, &i| acc.add(&eta_basis(g, i)))
}

/// Subsets of `{1..n}` of size `k`, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every subset `S` of `{1..2g+1}` with its `eta_S`.
pub fn mumford_characteristics(g: usize) -> Vec<(Vec<usize>, ThetaCharacteristic)> {
    (0..=2 * g + 1)
        .flat_map(|k| subsets(2 * g + 1, k))
        .map(|s| {
            let e = eta_subset(g, &s);
            (s, e)
        })
        .collect()
}

/// `S o U` with `U = {1, 3, ..., 2g+1}`.
pub fn sym_diff_u(g: usize, s: &[usize]) -> Vec<usize> {
    (1..=2 * g + 1)
        .filter(|i| s.contains(i) != (i % 2 == 1))
        .collect()
}

/// `eta_{S o U}` over `|S| = g + 1`, in the order of `subsets`.
pub fn delta_characteristics(g: usize) -> Vec<ThetaCharacteristic> {
    subsets(2 * g + 1, g + 1)
        .iter()
        .map(|s| eta_subset(g, &sym_diff_u(g, s)))
        .collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `n = C(2g, g+1)`.
pub fn n_of(g: usize) -> u64 {
    binomial(2 * g as u64, g as u64 + 1)
}

/// `r = C(2g+1, g+1)`.
pub fn r_of(g: usize) -> u64 {
    binomial(2 * g as u64 + 1, g as u64 + 1)
}

fn normalised_product(g: usize, chars: &[ThetaCharacteristic], tau: &SiegelPoint) -> Result<Complex> {
    let prec = tau.prec();
    let mut prod = Complex::one(prec);
    for c in chars {
        prod = &prod * &theta_constant(c, tau)?.powi(8);
    }
    let e = -4 * n_of(g) as i32 * (g as i32 + 1);
    Ok(prod.scale(&Float::with_val(prec, Float::i_exp(1, e))))
}

/// `Delta_g(tau) = 2^{-4n(g+1)} prod theta[eta_{S o U}](tau)^8`.
pub fn delta_g(tau: &SiegelPoint) -> Result<Complex> {
    let g = tau.genus();
    normalised_product(g, &delta_characteristics(g), tau)
}

/// `sigma Delta_g(tau)`: the same product over `sigma^{-1} eta_{S o U}`.
pub fn sigma_delta_g(sigma: &SymplecticMatrix, tau: &SiegelPoint) -> Result<Complex> {
    let g = tau.genus();
    let inv = sigma.inverse();
    let chars: Vec<_> = delta_characteristics(g)
        .iter()
        .map(|c| inv.act_char(c))
        .collect();
    normalised_product(g, &chars, tau)
}

/// `ln |z|` as f64; `-inf` at zero.
pub fn ln_abs(z: &Complex) -> f64 {
    if z.is_zero() {
        return f64::NEG_INFINITY;
    }
    z.abs().ln().to_f64()
}
