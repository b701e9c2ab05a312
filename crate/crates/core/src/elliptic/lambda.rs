use super::model::EllipticModel;
use crate::error::{Error, Result};
use crate::exactmath::algebraic::{algebraic_from_orbit, recognize_product, AlgebraicNumber};
use crate::exactmath::roots::squarefree_roots;
use crate::exactmath::RationalPolynomial;
use crate::mp::Complex;
use rug::{Float, Integer, Rational};

/// The Legendre parameters of a curve: the six cross ratios
/// `(e_i - e_j) / (e_i - e_k)` of the roots of the 2-division polynomial.
#[derive(Clone, Debug)]
pub struct LambdaData {
    /// Indexed by the permutations `(i, j, k)` of `(0, 1, 2)` in
    /// lexicographic order.
    pub values: Vec<AlgebraicNumber>,
    pub heights: Vec<f64>,
    pub h_min: f64,
    pub h_max: f64,
    /// `prod (x - lambda)` over the six values, recognised exactly.
    pub orbit_poly: RationalPolynomial,
    /// Largest relative residual of `j = 2^8 ((1-l)^2 + l)^3 / (l^2 (1-l)^2)`.
    pub j_residual: f64,
}

impl LambdaData {
    /// Distinct values, as the rational value when rational.
    pub fn rational_values(&self) -> Vec<Option<Rational>> {
        self.values.iter().map(|v| v.as_rational()).collect()
    }
}

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Tolerance for the j-identity, relative to `max(|j|, 1)`.
pub const J_IDENTITY_TOL: f64 = 1e-20;

pub fn lambda_data(model: &EllipticModel) -> Result<LambdaData> {
    let j = &model.j;
    let bound = Integer::from(j.denom() * 256u32);
    let bits = bound.significant_bits() * 2 + j.numer().significant_bits() + 128;
    let prec = bits.max(crate::DEFAULT_PREC);

    let cubic = RationalPolynomial::new(model.two_division().to_vec());
    let roots: Vec<Complex> = squarefree_roots(&cubic, prec)?
        .into_iter()
        .map(|r| r.z)
        .collect();
    if roots.len() != 3 {
        return Err(Error::Singular("2-division polynomial is not a cubic".into()));
    }
    let lams: Vec<Complex> = PERMS
        .iter()
        .map(|&[i, jj, k]| &(&roots[i] - &roots[jj]) / &(&roots[i] - &roots[k]))
        .collect();

    let jf = Float::with_val(prec, j);
    let scale = jf.to_f64().abs().max(1.0);
    let mut j_residual = 0f64;
    for l in &lams {
        let one = Complex::one(prec);
        let oml = &one - l;
        let num = (&oml.square() + l).powi(3).scale_i64(256);
        let den = &l.square() * &oml.square();
        let jl = &num / &den;
        let res = (&jl - &Complex::real(jf.clone())).abs().to_f64() / scale;
        j_residual = j_residual.max(res);
    }
    if j_residual > J_IDENTITY_TOL {
        return Err(Error::precision(
            "j-identity residual too large",
            prec,
            format!("{j_residual:e}"),
        ));
    }

    let orbit_poly = recognize_product(&lams, &bound)?;
    let values = algebraic_from_orbit(&lams, &bound)?;
    let heights = values
        .iter()
        .map(|v| v.height())
        .collect::<Result<Vec<_>>>()?;
    let h_min = heights.iter().cloned().fold(f64::INFINITY, f64::min);
    let h_max = heights.iter().cloned().fold(0.0, f64::max);
    Ok(LambdaData {
        values,
        heights,
        h_min,
        h_max,
        orbit_poly,
        j_residual,
    })
}

/// `(256 (x^2 - x + 1)^3 - j x^2 (x - 1)^2) / 256`, whose roots are the six
/// Legendre parameters of any curve with invariant `j`.
pub fn orbit_polynomial(j: &Rational) -> RationalPolynomial {
    let q = RationalPolynomial::from_i64(&[1, -1, 1]).pow(3);
    let w = &RationalPolynomial::from_i64(&[0, 0, 1]) * &RationalPolynomial::from_i64(&[-1, 1]).pow(2);
    let jw = w.scale(&Rational::from(j / 256u32));
    &q - &jw
}
