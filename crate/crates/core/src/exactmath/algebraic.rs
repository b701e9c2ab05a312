//! Algebraic numbers given by a minimal polynomial and an isolating disc,
//! Mahler measures, and exact recognition of Galois-stable numeric orbits.

use super::factor::{factor_rational_poly, rationalize};
use super::height::height_rational;
use super::poly::RationalPolynomial;
use super::roots::{roots_with_multiplicity, squarefree_roots};
use crate::error::{Error, Result};
use crate::mp::Complex;
use rug::{Float, Integer, Rational};

#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    /// Irreducible primitive integer polynomial with positive leading term.
    pub minpoly: RationalPolynomial,
    pub approx: Complex,
    /// The disc of this radius about `approx` isolates one root of `minpoly`.
    pub radius: Float,
}

impl AlgebraicNumber {
    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        let minpoly = RationalPolynomial::from_integers(&[Integer::from(-q.numer()), q.denom().clone()]);
        AlgebraicNumber {
            minpoly,
            approx: Complex::real(Float::with_val(prec, q)),
            radius: Float::with_val(prec, 0),
        }
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }

    /// The value when rational.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.degree() != 1 {
            return None;
        }
        let c = self.minpoly.coeffs();
        Some(-Rational::from(&c[0] / &c[1]))
    }

    /// Absolute logarithmic Weil height `log M(minpoly) / deg`.
    pub fn height(&self) -> Result<f64> {
        if let Some(q) = self.as_rational() {
            return Ok(height_rational(&q));
        }
        Ok(log_mahler_measure(&self.minpoly, self.approx.prec().max(128))?.to_f64()
            / self.degree() as f64)
    }
}

/// `log M(f)` with `M(f) = |a_n| prod max(1, |alpha_i|)`, at `prec` bits.
pub fn log_mahler_measure(f: &RationalPolynomial, prec: u32) -> Result<Float> {
    f.require_nonzero("Mahler measure")?;
    if !f.is_integral() {
        return Err(Error::Domain("Mahler measure needs integer coefficients".into()));
    }
    let lc = f.leading().unwrap().clone().abs();
    let mut acc = Float::with_val(prec, lc.numer()).ln();
    if f.degree() == Some(0) {
        return Ok(acc);
    }
    for (r, m) in roots_with_multiplicity(f, prec)? {
        let a = r.z.abs();
        if a > 1 {
            acc += a.ln() * m;
        }
    }
    Ok(acc)
}

pub fn mahler_measure(f: &RationalPolynomial) -> Result<f64> {
    Ok(log_mahler_measure(f, crate::DEFAULT_PREC)?.exp().to_f64())
}

/// Recognise the polynomial `prod (x - v)` over the given values as an
/// element of Q[x] whose coefficients have denominators at most `bound`.
///
/// The recognised polynomial is accepted only if its roots, recomputed at
/// twice the working precision, match the values one to one.
pub fn recognize_product(values: &[Complex], bound: &Integer) -> Result<RationalPolynomial> {
    if values.is_empty() {
        return Ok(RationalPolynomial::constant(Rational::from(1)));
    }
    let prec = values.iter().map(|v| v.prec()).min().unwrap();
    let pairs: Vec<(Complex, Complex)> = values.iter().map(|v| (Complex::one(prec), v.clone())).collect();
    recognize_linear_product(&pairs, bound)
}

/// Recognise `prod (d_i x - n_i)` over the pairs `(d_i, n_i)` as a
/// polynomial in Q[x] with denominators at most `bound`, checking that its
/// roots reproduce the quotients `n_i / d_i`.
pub fn recognize_linear_product(
    pairs: &[(Complex, Complex)],
    bound: &Integer,
) -> Result<RationalPolynomial> {
    if pairs.is_empty() {
        return Ok(RationalPolynomial::constant(Rational::from(1)));
    }
    let prec = pairs.iter().map(|(d, n)| d.prec().min(n.prec())).min().unwrap();
    let mut coeffs = vec![Complex::one(prec)];
    for (d, v) in pairs {
        let mut next = vec![Complex::zero(prec); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = &next[k + 1] + &(c * d);
            next[k] = &next[k] - &(c * v);
        }
        coeffs = next;
    }
    let values: Vec<Complex> = pairs.iter().map(|(d, n)| n / d).collect();
    let scale = coeffs
        .iter()
        .map(|c| c.abs().to_f64())
        .fold(1.0f64, f64::max);
    let im_tol = scale * 2f64.powi(-(prec as i32) / 2);
    let mut qs = Vec::with_capacity(coeffs.len());
    for (k, c) in coeffs.iter().enumerate() {
        if c.im.to_f64().abs() > im_tol {
            return Err(Error::precision(
                "orbit is not Galois stable",
                prec,
                format!("coefficient of x^{k} has imaginary part {:e}", c.im.to_f64()),
            ));
        }
        let q = rationalize(&c.re, bound).ok_or_else(|| {
            Error::precision(
                "rationalisation failed",
                prec,
                format!("coefficient of x^{k} ~ {:e} with denominator bound {bound}", c.re.to_f64()),
            )
        })?;
        qs.push(q);
    }
    let poly = RationalPolynomial::new(qs);

    let check_prec = 2 * prec;
    let mut roots: Vec<Complex> = Vec::new();
    for (r, m) in roots_with_multiplicity(&poly, check_prec)? {
        for _ in 0..m {
            roots.push(r.z.clone());
        }
    }
    let tol = scale.max(1.0) * 2f64.powi(-(prec as i32) / (2 * values.len().max(1) as i32).max(4));
    let mut taken = vec![false; roots.len()];
    for v in &values {
        let best = (0..roots.len())
            .filter(|&j| !taken[j])
            .min_by(|&a, &b| {
                let da = (&roots[a] - v).abs();
                let db = (&roots[b] - v).abs();
                da.partial_cmp(&db).unwrap()
            });
        match best {
            Some(j) if (&roots[j] - v).abs().to_f64() <= tol.max(1e-25) => taken[j] = true,
            _ => {
                return Err(Error::precision(
                    "recognised polynomial does not reproduce the orbit",
                    prec,
                    format!("value {v:?} unmatched"),
                ))
            }
        }
    }
    Ok(poly)
}

/// Exact minimal polynomials for a Galois-stable multiset of complex
/// numbers, returned in input order.
pub fn algebraic_from_orbit(values: &[Complex], bound: &Integer) -> Result<Vec<AlgebraicNumber>> {
    let poly = recognize_product(values, bound)?;
    assign_minimal_polynomials(values, &poly)
}

/// Attach to each value the irreducible factor of `poly` it is a root of.
pub fn assign_minimal_polynomials(
    values: &[Complex],
    poly: &RationalPolynomial,
) -> Result<Vec<AlgebraicNumber>> {
    let fac = factor_rational_poly(poly)?;
    let prec = values.iter().map(|v| v.prec()).min().unwrap_or(crate::DEFAULT_PREC);
    let mut isolated: Vec<(usize, Complex, Float)> = Vec::new();
    for (i, (g, _)) in fac.factors.iter().enumerate() {
        for r in squarefree_roots(g, 2 * prec)? {
            isolated.push((i, r.z, r.radius));
        }
    }
    values
        .iter()
        .map(|v| {
            let (i, z, rad) = isolated
                .iter()
                .min_by(|a, b| {
                    let da = (&a.1 - v).abs();
                    let db = (&b.1 - v).abs();
                    da.partial_cmp(&db).unwrap()
                })
                .ok_or_else(|| Error::precision("empty orbit", prec, ""))?;
            Ok(AlgebraicNumber {
                minpoly: fac.factors[*i].0.clone(),
                approx: z.with_prec(prec),
                radius: rad.clone(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_i64(cs)
    }

    #[test]
    fn mahler_examples() {
        assert!((mahler_measure(&p(&[-2, 1])).unwrap() - 2.0).abs() < 1e-15);
        assert!((mahler_measure(&p(&[1, 0, 1])).unwrap() - 1.0).abs() < 1e-15);
        assert!((mahler_measure(&p(&[1, -3, 2])).unwrap() - 2.0).abs() < 1e-15);
        assert!(mahler_measure(&RationalPolynomial::zero()).is_err());
    }

    #[test]
    fn orbit_examples() {
        let prec = 256;
        let vals: Vec<Complex> = [2.0, 0.5, -1.0, 2.0, 0.5, -1.0]
            .iter()
            .map(|&x| Complex::from_f64(prec, x, 0.0))
            .collect();
        let alg = algebraic_from_orbit(&vals, &Integer::from(16)).unwrap();
        let mut polys: Vec<String> = alg.iter().map(|a| a.minpoly.to_string()).collect();
        polys.sort();
        polys.dedup();
        assert_eq!(polys, vec!["2*x - 1", "x + 1", "x - 2"]);

        let i = [Complex::i(prec), -Complex::i(prec)];
        let alg = algebraic_from_orbit(&i, &Integer::from(1)).unwrap();
        assert_eq!(alg[0].minpoly, p(&[1, 0, 1]));

        let s2 = Float::with_val(prec, 2).sqrt();
        let vals = [
            Complex::real(Float::with_val(prec, 1 + &s2)),
            Complex::real(Float::with_val(prec, 1 - &s2)),
        ];
        let alg = algebraic_from_orbit(&vals, &Integer::from(1)).unwrap();
        assert_eq!(alg[1].minpoly, p(&[-1, -2, 1]));
        let h = alg[0].height().unwrap();
        assert!((h - (1.0 + 2f64.sqrt()).ln() / 2.0).abs() < 1e-14);
    }

    #[test]
    fn unstable_orbit_is_rejected() {
        let vals = [Complex::i(128)];
        assert!(matches!(
            algebraic_from_orbit(&vals, &Integer::from(1)),
            Err(Error::Precision { .. })
        ));
    }
}
