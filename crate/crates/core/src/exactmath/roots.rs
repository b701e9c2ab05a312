//! Complex root isolation by Aberth–Ehrlich iteration.

use super::poly::RationalPolynomial;
use crate::error::{Error, Result};
use crate::mp::{self, Complex};
use rug::Float;

/// A root approximation with a certified inclusion radius.
#[derive(Clone, Debug)]
pub struct IsolatedRoot {
    pub z: Complex,
    /// A closed disc of this radius around `z` contains exactly one root.
    pub radius: Float,
}

const MAX_ITER: usize = 2000;

/// All complex roots of a square-free polynomial, each in its own certified
/// disc.
pub fn squarefree_roots(f: &RationalPolynomial, prec: u32) -> Result<Vec<IsolatedRoot>> {
    let n = f.require_nonzero("roots")?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let (_, ints) = f.content_and_primitive();
    let coeffs: Vec<Float> = ints.iter().map(|c| Float::with_val(prec, c)).collect();
    let dcoeffs: Vec<Float> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| Float::with_val(prec, c * k as u32))
        .collect();

    if n == 1 {
        let z = Complex::real(-Float::with_val(prec, &coeffs[0] / &coeffs[1]));
        return Ok(vec![IsolatedRoot {
            z,
            radius: Float::with_val(prec, 0),
        }]);
    }

    // Cauchy bound on the root moduli for the starting circle.
    let lead = coeffs[n].clone().abs();
    let mut bound = Float::with_val(prec, 0);
    for c in &coeffs[..n] {
        let r = Float::with_val(prec, c / &lead).abs();
        if r > bound {
            bound = r;
        }
    }
    let radius0 = Float::with_val(prec, &bound + 1u32) / 2u32;
    let two_pi = mp::pi(prec) * 2u32;
    let mut z: Vec<Complex> = (0..n)
        .map(|k| {
            let t = Float::with_val(prec, &two_pi * k as u32) / n as u32 + 0.4;
            Complex::cis(&t).scale(&radius0)
        })
        .collect();

    let tol = Float::with_val(prec, Float::i_exp(1, -(prec as i32) + 16));
    let stall = 2f64.powi(-(prec.min(2000) as i32) / 2);
    let mut converged = false;
    let mut last_step = f64::INFINITY;
    for _ in 0..MAX_ITER {
        let mut max_step = Float::with_val(prec, 0);
        for i in 0..n {
            let fz = horner(&coeffs, &z[i]);
            let dfz = horner(&dcoeffs, &z[i]);
            if fz.is_zero() {
                continue;
            }
            if dfz.is_zero() {
                z[i] = &z[i] + &Complex::from_f64(prec, 1e-20, 1e-20);
                continue;
            }
            let w = &fz / &dfz;
            let mut s = Complex::zero(prec);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    s = &s + &(&z[i] - zj).recip();
                }
            }
            let denom = &Complex::one(prec) - &(&w * &s);
            let step = if denom.is_zero() { w } else { &w / &denom };
            let scale = {
                let a = z[i].abs();
                if a > 1 { a } else { Float::with_val(prec, 1) }
            };
            let rel = Float::with_val(prec, step.abs() / &scale);
            if rel > max_step {
                max_step = rel;
            }
            z[i] = &z[i] - &step;
        }
        let step = max_step.to_f64();
        // Either fully converged, or stalled at the conditioning floor; the
        // inclusion discs below decide whether the result is usable.
        if max_step < tol || (step < stall && step > 0.5 * last_step) {
            converged = true;
            break;
        }
        last_step = step;
    }
    if !converged {
        return Err(Error::precision(
            "Aberth iteration did not converge",
            prec,
            format!("degree {n}, last relative step {last_step:e}"),
        ));
    }

    // Inclusion discs of radius n|W_i| with
    // W_i = f(z_i) / (a_n prod_{j != i} (z_i - z_j)); pairwise disjoint discs
    // each contain exactly one root.
    let lead_c = Complex::real(coeffs[n].clone());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut prod = lead_c.clone();
        for (j, zj) in z.iter().enumerate() {
            if j != i {
                prod = &prod * &(&z[i] - zj);
            }
        }
        let w = &horner(&coeffs, &z[i]) / &prod;
        let radius = Float::with_val(prec, w.abs() * n as u32);
        out.push(IsolatedRoot {
            z: z[i].clone(),
            radius,
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            let d = (&out[i].z - &out[j].z).abs();
            let rr = Float::with_val(prec, &out[i].radius + &out[j].radius);
            if d <= rr {
                return Err(Error::precision(
                    "root discs overlap",
                    prec,
                    format!("roots {i} and {j} at distance {}", d.to_f64()),
                ));
            }
        }
    }
    Ok(out)
}

/// All roots with multiplicity, via the square-free decomposition.
pub fn roots_with_multiplicity(
    f: &RationalPolynomial,
    prec: u32,
) -> Result<Vec<(IsolatedRoot, u32)>> {
    f.require_nonzero("roots")?;
    let mut out = Vec::new();
    for (g, m) in f.squarefree_decomposition() {
        for r in squarefree_roots(&g, prec)? {
            out.push((r, m));
        }
    }
    Ok(out)
}

fn horner(coeffs: &[Float], z: &Complex) -> Complex {
    let mut acc = Complex::zero(z.prec());
    for c in coeffs.iter().rev() {
        acc = &acc * z;
        acc.re += c;
    }
    acc
}
