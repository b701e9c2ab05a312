//! Period lattices by the arithmetic-geometric mean, the modular
//! discriminant and the Faltings height.

use super::global::{global_invariants, GlobalInvariants};
use super::model::EllipticModel;
use crate::error::{Error, Result};
use crate::exactmath::integer::ln_integer;
use crate::exactmath::roots::squarefree_roots;
use crate::exactmath::RationalPolynomial;
use crate::mp::{self, Complex};
use rug::Float;

/// Largest reduction word accepted before giving up.
pub const MAX_REDUCTION_STEPS: usize = 10_000;

/// Relative tolerance for `j(tau)` against the exact invariant.
pub const J_MATCH_TOL: f64 = 1e-9;

/// AGM with the optimal choice of square root at every step.
pub fn agm(a: &Complex, b: &Complex) -> Complex {
    let prec = a.prec();
    let tol = Float::with_val(prec, Float::i_exp(1, -(prec as i32) + 8));
    let (mut a, mut b) = (a.clone(), b.clone());
    for _ in 0..4 * prec {
        let a1 = (&a + &b).scale_i64(1).scale(&Float::with_val(prec, 0.5));
        let mut b1 = (&a * &b).sqrt();
        if (&a1 - &b1).abs() > (&a1 + &b1).abs() {
            b1 = -b1;
        }
        let diff = (&a1 - &b1).abs();
        a = a1;
        b = b1;
        if diff <= Float::with_val(prec, &tol * a.abs()) {
            break;
        }
    }
    a
}

/// A `2x2` integer matrix `[[a, b], [c, d]]` of determinant one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sl2(pub [[i64; 2]; 2]);

impl Sl2 {
    pub const IDENTITY: Sl2 = Sl2([[1, 0], [0, 1]]);

    pub fn mul(&self, o: &Sl2) -> Sl2 {
        let (a, b) = (self.0, o.0);
        Sl2([
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ])
    }

    /// `(a tau + b) / (c tau + d)`.
    pub fn act(&self, tau: &Complex) -> Complex {
        let [[a, b], [c, d]] = self.0;
        let num = &tau.scale_i64(a) + &Complex::from_f64(tau.prec(), b as f64, 0.0);
        let den = &tau.scale_i64(c) + &Complex::from_f64(tau.prec(), d as f64, 0.0);
        &num / &den
    }
}

/// Reduce `tau` into the standard fundamental domain `|Re| <= 1/2`,
/// `|tau| >= 1`; returns the point and the matrix taking `tau` to it.
pub fn reduce_sl2(tau: &Complex) -> Result<(Complex, Sl2)> {
    if tau.im <= 0 {
        return Err(Error::Domain("tau must lie in the upper half plane".into()));
    }
    let prec = tau.prec();
    let mut t = tau.clone();
    let mut m = Sl2::IDENTITY;
    let eps = Float::with_val(prec, Float::i_exp(1, -(prec as i32) / 2));
    let one = Float::with_val(prec, 1) - &eps;
    for _ in 0..MAX_REDUCTION_STEPS {
        let n = t.re.to_f64().round() as i64;
        if n != 0 {
            t = &t - &Complex::from_f64(prec, n as f64, 0.0);
            m = Sl2([[1, -n], [0, 1]]).mul(&m);
        }
        if t.norm_sqr() < one {
            t = -t.recip();
            m = Sl2([[0, -1], [1, 0]]).mul(&m);
        } else {
            return Ok((t, m));
        }
    }
    Err(Error::Reduction(MAX_REDUCTION_STEPS))
}

/// `q prod (1 - q^n)^24` with `q = exp(2 pi i tau)`, truncated once
/// `24 |q|^{n+1} / (1 - |q|)` drops below `2^-prec`.
pub fn delta_q(tau: &Complex) -> Result<Complex> {
    let prec = tau.prec();
    let q = q_of(tau);
    let aq = q.abs().to_f64();
    if aq >= 1.0 {
        return Err(Error::Domain("|q| >= 1".into()));
    }
    let target = -(prec as f64) * std::f64::consts::LN_2;
    let one = Complex::one(prec);
    let mut prod = one.clone();
    let mut qn = q.clone();
    let mut n = 1u32;
    loop {
        prod = &prod * &(&one - &qn);
        let tail = (24.0f64).ln() + (n as f64 + 1.0) * aq.ln() - (1.0 - aq).ln();
        if tail < target || aq == 0.0 {
            break;
        }
        qn = &qn * &q;
        n += 1;
    }
    Ok(&q * &prod.powi(24))
}

fn q_of(tau: &Complex) -> Complex {
    let prec = tau.prec();
    let two_pi_i = Complex::new(Float::with_val(prec, 0), mp::pi(prec) * 2u32);
    (&two_pi_i * tau).exp()
}

/// `j(tau) = E_4^3 / Delta_q`.
pub fn j_of_tau(tau: &Complex) -> Result<Complex> {
    let prec = tau.prec();
    let q = q_of(tau);
    let aq = q.abs().to_f64();
    let target = -(prec as f64) * std::f64::consts::LN_2;
    let one = Complex::one(prec);
    let mut e4 = Complex::zero(prec);
    let mut qn = q.clone();
    let mut n = 1u32;
    loop {
        let term = (&qn / &(&one - &qn)).scale_i64((n as i64).pow(3));
        e4 = &e4 + &term;
        if (n as f64 + 1.0) * aq.ln() + 3.0 * ((n + 1) as f64).ln() + 2.0 < target || aq == 0.0 {
            break;
        }
        qn = &qn * &q;
        n += 1;
    }
    let e4 = &one + &e4.scale_i64(240);
    Ok(&e4.powi(3) / &delta_q(tau)?)
}

/// `log |(2 pi)^12 Delta(tau) Im(tau)^6|`.
pub fn archimedean_term(tau: &Complex) -> Result<Float> {
    let prec = tau.prec();
    let d = delta_q(tau)?;
    let two_pi = mp::pi(prec) * 2u32;
    Ok(two_pi.ln() * 12u32 + d.abs().ln() + tau.im.clone().ln() * 6u32)
}

/// A point of the fundamental domain for the period lattice of `model`.
#[derive(Clone, Debug)]
pub struct PeriodData {
    pub tau: Complex,
    /// The two periods whose ratio gave `tau` before reduction.
    pub omega: (Complex, Complex),
    pub j_residual: f64,
}

pub fn period_tau(model: &EllipticModel, prec: u32) -> Result<PeriodData> {
    let cubic = RationalPolynomial::new(model.two_division().to_vec());
    let e: Vec<Complex> = squarefree_roots(&cubic, prec)?.into_iter().map(|r| r.z).collect();
    let pi = Complex::real(mp::pi(prec));
    let mut cands: Vec<Complex> = Vec::new();
    for k in 0..3 {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        let a = (&e[k] - &e[i]).sqrt();
        let b = (&e[k] - &e[j]).sqrt();
        for bb in [b.clone(), -b] {
            let m = agm(&a, &bb);
            if !m.is_zero() {
                cands.push(&pi / &m);
            }
        }
    }
    let jf = Float::with_val(prec, &model.j);
    let jc = Complex::real(jf.clone());
    let scale = jf.to_f64().abs().max(1.0);
    let mut best: Option<PeriodData> = None;
    for a in 0..cands.len() {
        for b in 0..cands.len() {
            if a == b {
                continue;
            }
            let mut t = &cands[a] / &cands[b];
            if t.im.to_f64().abs() < 1e-30 {
                continue;
            }
            if t.im < 0 {
                t = -t;
            }
            let (tr, _) = reduce_sl2(&t)?;
            let jt = j_of_tau(&tr)?;
            let res = (&jt - &jc).abs().to_f64() / scale;
            if best.as_ref().is_none_or(|p| res < p.j_residual) {
                best = Some(PeriodData {
                    tau: tr,
                    omega: (cands[a].clone(), cands[b].clone()),
                    j_residual: res,
                });
            }
        }
    }
    match best {
        Some(p) if p.j_residual <= J_MATCH_TOL => Ok(p),
        Some(p) => Err(Error::precision(
            "no period ratio reproduces j",
            prec,
            format!("best relative residual {:e}", p.j_residual),
        )),
        None => Err(Error::precision("AGM produced no periods", prec, "")),
    }
}

#[derive(Clone, Debug)]
pub struct FaltingsHeightResult {
    /// Midpoint of the interval; exact when `exact`.
    pub h_f: f64,
    pub h_f_interval: (f64, f64),
    pub gamma_log_interval: (f64, f64),
    /// `tau` in the fundamental domain, as `(re, im)`.
    pub tau: (f64, f64),
    /// `log |(2 pi)^12 Delta(tau) Im(tau)^6|`.
    pub archimedean: f64,
    pub exact: bool,
    pub j_residual: f64,
}

pub fn faltings_height(model: &EllipticModel) -> Result<FaltingsHeightResult> {
    let gi = global_invariants(model)?;
    faltings_height_with(model, &gi, crate::DEFAULT_PREC)
}

/// `12 h_F = log Delta_min - log gamma - log|(2 pi)^12 Delta(tau) Im(tau)^6|`
/// with `log gamma` pinned to an interval away from semistable curves.
pub fn faltings_height_with(
    model: &EllipticModel,
    gi: &GlobalInvariants,
    prec: u32,
) -> Result<FaltingsHeightResult> {
    let pd = period_tau(model, prec)?;
    let arch = archimedean_term(&pd.tau)?.to_f64();
    let log_delta = ln_integer(&gi.delta_min);
    let gamma = gamma_log_interval(gi);
    let hi = (log_delta - gamma.0 - arch) / 12.0;
    let lo = (log_delta - gamma.1 - arch) / 12.0;
    Ok(FaltingsHeightResult {
        h_f: (lo + hi) / 2.0,
        h_f_interval: (lo, hi),
        gamma_log_interval: gamma,
        tau: (pd.tau.re.to_f64(), pd.tau.im.to_f64()),
        archimedean: arch,
        exact: gi.semistable,
        j_residual: pd.j_residual,
    })
}

/// `[L, L + 24 log 2]` with `L = sum_{T0} n_p log p + 6 sum_{T1} log p`;
/// zero for semistable curves.
pub fn gamma_log_interval(gi: &GlobalInvariants) -> (f64, f64) {
    if gi.semistable {
        return (0.0, 0.0);
    }
    let mut l = 0.0;
    for p in &gi.t0 {
        let n = gi.local(p).map(|d| d.n_p).unwrap_or(0);
        l += n as f64 * ln_integer(p);
    }
    for p in &gi.t1 {
        l += 6.0 * ln_integer(p);
    }
    (l, l + 24.0 * std::f64::consts::LN_2)
}
