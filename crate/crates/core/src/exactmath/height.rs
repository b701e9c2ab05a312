//! Logarithmic magnitudes and Weil heights.

use super::integer::ln_integer;
use super::poly::RationalPolynomial;
use crate::error::{Error, Result};
use rug::{Integer, Rational};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// A positive real stored as its natural logarithm.
///
/// Sums of `LogMagnitude`s are products of the underlying quantities.
#[derive(Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct LogMagnitude(f64);

impl LogMagnitude {
    /// Panics on a non-finite log.
    pub fn new(ln: f64) -> Self {
        assert!(ln.is_finite(), "LogMagnitude must be finite, got {ln}");
        LogMagnitude(ln)
    }

    pub fn try_new(ln: f64) -> Result<Self> {
        if ln.is_finite() {
            Ok(LogMagnitude(ln))
        } else {
            Err(Error::Domain(format!("non-finite log magnitude {ln}")))
        }
    }

    pub const ONE: LogMagnitude = LogMagnitude(0.0);

    pub fn from_value(x: f64) -> Result<Self> {
        if x > 0.0 && x.is_finite() {
            Ok(LogMagnitude(x.ln()))
        } else {
            Err(Error::Domain(format!("log magnitude of non-positive {x}")))
        }
    }

    pub fn from_integer(n: &Integer) -> Result<Self> {
        if *n <= 0 {
            return Err(Error::Domain(format!("log magnitude of non-positive {n}")));
        }
        Ok(LogMagnitude(ln_integer(n)))
    }

    pub fn ln(self) -> f64 {
        self.0
    }

    pub fn log10(self) -> f64 {
        self.0 / std::f64::consts::LN_10
    }

    /// `x^e`.
    pub fn pow(self, e: f64) -> Self {
        LogMagnitude::new(self.0 * e)
    }

    pub fn recip(self) -> Self {
        LogMagnitude(-self.0)
    }

    pub fn max(self, o: Self) -> Self {
        if o.0 > self.0 { o } else { self }
    }
}

impl fmt::Debug for LogMagnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp({})", self.0)
    }
}

impl fmt::Display for LogMagnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l10 = self.log10();
        if l10.abs() < 15.0 {
            write!(f, "{}", self.0.exp())
        } else {
            let e = l10.floor();
            write!(f, "{:.6}e{}", 10f64.powf(l10 - e), e as i64)
        }
    }
}

impl Add for LogMagnitude {
    type Output = LogMagnitude;
    fn add(self, o: Self) -> Self {
        LogMagnitude::new(self.0 + o.0)
    }
}

impl Sub for LogMagnitude {
    type Output = LogMagnitude;
    fn sub(self, o: Self) -> Self {
        LogMagnitude::new(self.0 - o.0)
    }
}

impl Mul<f64> for LogMagnitude {
    type Output = LogMagnitude;
    fn mul(self, e: f64) -> Self {
        self.pow(e)
    }
}

/// Projective height of the coefficient vector of `f`: the log of the
/// largest absolute coefficient of its primitive integer form.
pub fn weil_height_poly(f: &RationalPolynomial) -> Result<f64> {
    if f.is_zero() {
        return Err(Error::Domain("height of the zero polynomial".into()));
    }
    let (_, prim) = f.content_and_primitive();
    let m = prim.iter().map(|c| c.clone().abs()).max().unwrap();
    Ok(ln_integer(&m))
}

/// `h(p/q) = log max(|p|, |q|)` for `p/q` in lowest terms.
pub fn height_rational(x: &Rational) -> f64 {
    if *x == 0 {
        return 0.0;
    }
    let n = x.numer().clone().abs();
    let d = x.denom().clone();
    ln_integer(if n > d { &n } else { &d })
}

/// Multiplicative height `H(x) = max(|p|, |q|)`.
pub fn big_height_rational(x: &Rational) -> Integer {
    let n = x.numer().clone().abs();
    let d = x.denom().clone();
    if n > d { n } else { d }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heights_of_small_polynomials() {
        let ln2 = 2f64.ln();
        let f = RationalPolynomial::from_i64(&[-2, 1]);
        assert!((weil_height_poly(&f).unwrap() - ln2).abs() < 1e-15);
        let g = RationalPolynomial::from_i64(&[6, 0, 3]);
        assert!((weil_height_poly(&g).unwrap() - ln2).abs() < 1e-15);
        let h = RationalPolynomial::from_i64(&[2, -3, -3, 2]);
        assert!((weil_height_poly(&h).unwrap() - 3f64.ln()).abs() < 1e-15);
        assert!(weil_height_poly(&RationalPolynomial::zero()).is_err());
    }

    #[test]
    fn log_magnitude_algebra() {
        let a = LogMagnitude::from_value(8.0).unwrap();
        let b = LogMagnitude::from_value(2.0).unwrap();
        assert!(((a + b).ln() - 16f64.ln()).abs() < 1e-12);
        assert!(((a - b).ln() - 4f64.ln()).abs() < 1e-12);
        assert!((b.pow(10.0).ln() - 1024f64.ln()).abs() < 1e-12);
        assert!(LogMagnitude::try_new(f64::INFINITY).is_err());
        let big = LogMagnitude::new(1e17);
        assert!(format!("{big}").contains('e'));
    }

    #[test]
    fn rational_height() {
        assert_eq!(height_rational(&Rational::from((-3, 2))), 3f64.ln());
        assert_eq!(height_rational(&Rational::from(0)), 0.0);
        assert_eq!(big_height_rational(&Rational::from((4, -9))), 9);
    }
}
