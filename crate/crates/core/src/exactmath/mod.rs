//! Exact arithmetic: integers, rational polynomials, factorisation, roots
//! and heights.

pub mod algebraic;
pub mod factor;
pub mod height;
pub mod integer;
pub mod poly;
pub mod roots;

pub use algebraic::{
    algebraic_from_orbit, log_mahler_measure, mahler_measure, recognize_product, AlgebraicNumber,
};
pub use factor::{factor_rational_poly, Factorization};
pub use height::{big_height_rational, height_rational, weil_height_poly, LogMagnitude};
pub use integer::{factor, radical, valuation, valuation_q};
pub use poly::RationalPolynomial;

use crate::error::Result;
use rug::Rational;

/// `(-1)^{n(n-1)/2} Res(f, f') / a_n`.
pub fn poly_discriminant(f: &RationalPolynomial) -> Result<Rational> {
    f.discriminant()
}
