use super::point::SiegelPoint;
use super::symplectic::SymplecticMatrix;
use super::theta::{delta_g, ln_abs, n_of, r_of, sigma_delta_g};
use crate::bounds::Verdict;
use crate::error::{Error, Result};
use crate::exactmath::integer::ipow;
use crate::exactmath::LogMagnitude;
use rug::{Integer, Rational};

/// Relative tolerance of the transformation identity.
pub const TRANSFORM_TOL: f64 = 1e-9;

/// `k_2 = (4/g^3)^{g-1} (3/4)^{g(g-1)/2}`.
pub fn minkowski_k2(g: usize) -> Rational {
    assert!(g >= 1);
    let g = g as u32;
    let gi = Integer::from(g);
    let num = ipow(&Integer::from(4), g - 1) * ipow(&Integer::from(3), g * (g - 1) / 2);
    let den = ipow(&ipow(&gi, 3), g - 1) * ipow(&Integer::from(4), g * (g - 1) / 2);
    Rational::from((num, den))
}

/// `k_1 = 2^{-4n(g+1)} (6/k_2 + 2)^{8gr} (2gr/k_2)^{2gr}`.
pub fn lemfg_k1(g: usize) -> LogMagnitude {
    let k2 = minkowski_k2(g).to_f64();
    let (n, r, gf) = (n_of(g) as f64, r_of(g) as f64, g as f64);
    LogMagnitude::new(
        -4.0 * n * (gf + 1.0) * std::f64::consts::LN_2
            + 8.0 * gf * r * (6.0 / k2 + 2.0).ln()
            + 2.0 * gf * r * (2.0 * gf * r / k2).ln(),
    )
}

/// `ln |Delta_g(tau)| + 2r ln det Im tau`.
pub fn weighted_log_delta(tau: &SiegelPoint) -> Result<f64> {
    let r = r_of(tau.genus()) as f64;
    Ok(ln_abs(&delta_g(tau)?) + 2.0 * r * tau.log_det_im())
}

/// Both sides of `|Delta_g(sigma tau)| det(Im sigma tau)^{2r} =
/// |sigma Delta_g(tau)| det(Im tau)^{2r}` in log form.
pub fn lemma_transform_sides(sigma: &SymplecticMatrix, tau: &SiegelPoint) -> Result<(f64, f64)> {
    if sigma.genus() != tau.genus() {
        return Err(Error::Domain("genus mismatch".into()));
    }
    let r = r_of(tau.genus()) as f64;
    let st = sigma.act(tau)?;
    let lhs = weighted_log_delta(&st)?;
    let rhs = ln_abs(&sigma_delta_g(sigma, tau)?) + 2.0 * r * tau.log_det_im();
    Ok((lhs, rhs))
}

pub fn verify_lemma_transform(sigma: &SymplecticMatrix, tau: &SiegelPoint) -> Result<Verdict> {
    let (lhs, rhs) = lemma_transform_sides(sigma, tau)?;
    let rel = if lhs == rhs { 0.0 } else { (lhs - rhs).exp_m1().abs() };
    Ok(Verdict {
        name: "lemma_transform".into(),
        pass: rel <= TRANSFORM_TOL,
        margin: TRANSFORM_TOL - rel,
        notes: format!("log sides {lhs:.12} vs {rhs:.12}"),
    })
}

/// `ln |Delta_g(tau)| + 2r ln det Im tau <= ln k_1`.
pub fn verify_lemfg(tau: &SiegelPoint) -> Result<Verdict> {
    let g = tau.genus();
    if !(1..=2).contains(&g) {
        return Err(Error::Unsupported(format!("genus {g}")));
    }
    let lhs = weighted_log_delta(tau)?;
    let k1 = lemfg_k1(g).ln();
    Ok(Verdict::le("lemfg", lhs, k1, format!("log k1 = {k1:.4}")))
}
