//! Hyperelliptic Weierstrass models `y^2 + f2(x) y = f(x)`.
//!
//! The discriminant here is that of the given model; it is an upper bound
//! witness for the minimal discriminant, which is never computed.

use crate::bounds::Verdict;
use crate::error::{Error, Result};
use crate::exactmath::algebraic::{assign_minimal_polynomials, recognize_linear_product};
use crate::exactmath::factor::factor_rational_poly;
use crate::exactmath::height::height_rational;
use crate::exactmath::integer::ipow;
use crate::exactmath::roots::squarefree_roots;
use crate::exactmath::{AlgebraicNumber, RationalPolynomial};
use crate::mp::Complex;
use rug::{Integer, Rational};
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct HyperellipticModel {
    pub f: RationalPolynomial,
    pub f2: RationalPolynomial,
    pub genus: u32,
    /// `f + f2^2 / 4`.
    pub f0: RationalPolynomial,
    /// Leading coefficient of `f0`.
    pub a0: Rational,
    pub disc: Rational,
}

impl HyperellipticModel {
    pub fn new(f: RationalPolynomial, f2: RationalPolynomial) -> Result<Self> {
        let df = f.degree().unwrap_or(0);
        let df2 = f2.degree().unwrap_or(0);
        let top = df.max(2 * df2);
        if top < 3 {
            return Err(Error::Domain(format!(
                "max(2 deg f2, deg f) = {top} is too small for genus >= 1"
            )));
        }
        let genus = ((top - 1) / 2) as u32;
        let f0 = &f + &(&f2 * &f2).scale(&Rational::from((1, 4)));
        let d0 = f0.degree().unwrap_or(0);
        let g = genus as usize;
        if d0 != 2 * g + 1 && d0 != 2 * g + 2 {
            return Err(Error::Singular(format!(
                "deg f0 = {d0} drops below 2g+1 = {}",
                2 * g + 1
            )));
        }
        let a0 = f0.leading().cloned().expect("nonzero f0");
        let d = f0.discriminant()?;
        if d == 0 {
            return Err(Error::Singular(format!("f0 = {f0} has a repeated root")));
        }
        let mut disc = Rational::from(ipow(&Integer::from(2), 4 * genus)) * d;
        if d0 == 2 * g + 1 {
            disc *= Rational::from(&a0 * &a0);
        }
        Ok(HyperellipticModel {
            f,
            f2,
            genus,
            f0,
            a0,
            disc,
        })
    }

    /// Parse coefficient lists, constant term first, as "p/q" strings.
    pub fn parse(f: &[&str], f2: &[&str]) -> Result<Self> {
        Self::new(RationalPolynomial::parse(f)?, RationalPolynomial::parse(f2)?)
    }

    /// `nu = 2g + 1`.
    pub fn nu(&self) -> u32 {
        2 * self.genus + 1
    }

    /// Whether infinity is a branch point.
    pub fn odd_degree(&self) -> bool {
        self.f0.degree() == Some(2 * self.genus as usize + 1)
    }

    pub fn log_abs_disc(&self) -> f64 {
        let n = crate::exactmath::integer::ln_integer(&Integer::from(self.disc.numer().abs_ref()));
        let d = crate::exactmath::integer::ln_integer(self.disc.denom());
        n - d
    }
}

impl fmt::Display for HyperellipticModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f2.is_zero() {
            write!(f, "y^2 = {}", self.f)
        } else {
            write!(f, "y^2 + ({}) y = {}", self.f2, self.f)
        }
    }
}

/// `model_discriminant(f, f2)`.
pub fn model_discriminant(f: &RationalPolynomial, f2: &RationalPolynomial) -> Result<HyperellipticModel> {
    HyperellipticModel::new(f.clone(), f2.clone())
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceShift {
    pub theta: Integer,
    pub eta: Integer,
    /// `f(x + theta)`.
    pub shifted: RationalPolynomial,
}

/// Shift a monic integral odd-degree `f` so that its trace lies in `[0, nu)`.
pub fn trace_shift_normalize(f: &RationalPolynomial) -> Result<TraceShift> {
    let nu = f.require_nonzero("trace shift")?;
    if nu % 2 == 0 {
        return Err(Error::Domain(format!("degree {nu} is even")));
    }
    if !f.is_monic() || !f.is_integral() {
        return Err(Error::Domain(format!("{f} is not monic with integer coefficients")));
    }
    let tr = -f.coeff(nu - 1).numer().clone();
    let theta = tr.clone().div_rem_floor(Integer::from(nu)).0;
    let eta = tr - Integer::from(nu) * &theta;
    let shifted = f.shift(&Rational::from(&theta));
    Ok(TraceShift { theta, eta, shifted })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RescaleReport {
    pub a0: Integer,
    pub before: HyperellipticModel,
    pub after: HyperellipticModel,
    /// `a0^{4 nu}`.
    pub factor: Integer,
    pub holds: bool,
}

/// Build `y^2 = a0^2 f` with the least `a0 > 0` making `a0 f` integral and
/// compare discriminants with the predicted `a0^{4 nu}` scaling.
pub fn rescale_model(f: &RationalPolynomial) -> Result<RescaleReport> {
    let nu = f.require_nonzero("rescale")?;
    if nu % 2 == 0 || nu < 3 {
        return Err(Error::Domain(format!("degree {nu} is not odd and at least 3")));
    }
    let a0 = f
        .coeffs()
        .iter()
        .fold(Integer::from(1), |acc, c| acc.lcm(c.denom()));
    let zero = RationalPolynomial::zero();
    let before = HyperellipticModel::new(f.clone(), zero.clone())?;
    let sq = Rational::from(Integer::from(&a0 * &a0));
    let after = HyperellipticModel::new(f.scale(&sq), zero)?;
    let factor = ipow(&a0, 4 * nu as u32);
    let holds = after.disc == Rational::from(&before.disc * &factor);
    Ok(RescaleReport {
        a0,
        before,
        after,
        factor,
        holds,
    })
}

#[derive(Clone, Debug)]
pub struct CrossRatioSet {
    /// Finite branch points; infinity is implicit when `at_infinity`.
    pub branch_points: Vec<AlgebraicNumber>,
    pub at_infinity: bool,
    pub values: Vec<AlgebraicNumber>,
    pub h_lambda: f64,
    /// All branch points rational, heights exact.
    pub exact: bool,
}

impl CrossRatioSet {
    pub fn rational_values(&self) -> Vec<Rational> {
        self.values.iter().filter_map(|v| v.as_rational()).collect()
    }

    pub fn max_height(&self) -> Result<f64> {
        let mut h = 0.0f64;
        for v in &self.values {
            h = h.max(v.height()?);
        }
        Ok(h)
    }
}

/// Largest number of cross-ratio values recognised numerically.
pub const CROSS_RATIO_CAP: usize = 90;
const START_PREC: u32 = 256;
const MAX_PREC: u32 = 8192;

/// Ordered 4-tuples over `n` points with the 24 orderings collapsed to the
/// 6 distinct cross-ratio values.
fn quadruples(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let p = [a, b, c, d];
                    for [i, j, k, l] in [
                        [0, 1, 2, 3],
                        [0, 2, 1, 3],
                        [0, 3, 2, 1],
                        [0, 1, 3, 2],
                        [0, 2, 3, 1],
                        [0, 3, 1, 2],
                    ] {
                        out.push([p[i], p[j], p[k], p[l]]);
                    }
                }
            }
        }
    }
    out
}

/// Numerator and denominator of `(a-c)(b-d) / ((a-d)(b-c))`, `None` meaning
/// infinity, with factors containing infinity dropped.
fn cross_parts<T, S, M>(pts: &[Option<T>; 4], sub: S, mul: M, one: T) -> (T, T)
where
    T: Clone,
    S: Fn(&T, &T) -> T,
    M: Fn(&T, &T) -> T,
{
    let diff = |i: usize, j: usize| match (&pts[i], &pts[j]) {
        (Some(x), Some(y)) => sub(x, y),
        _ => one.clone(),
    };
    (
        mul(&diff(0, 2), &diff(1, 3)),
        mul(&diff(0, 3), &diff(1, 2)),
    )
}

/// Cross ratios of all 4-subsets of the branch points of `y^2 = f0`.
pub fn cross_ratio_set(f0: &RationalPolynomial) -> Result<CrossRatioSet> {
    let deg = f0.require_nonzero("cross ratios")?;
    if !f0.is_squarefree() {
        return Err(Error::Singular(format!("{f0} is not squarefree")));
    }
    let at_infinity = deg % 2 == 1;
    let n = deg + at_infinity as usize;
    if n < 4 {
        return Err(Error::Domain(format!("{n} branch points, need at least 4")));
    }
    let quads = quadruples(n);
    let fac = factor_rational_poly(f0)?;
    if fac.factors.iter().all(|(p, _)| p.degree() == Some(1)) {
        let roots: Vec<Rational> = fac
            .factors
            .iter()
            .map(|(p, _)| -Rational::from(&p.coeff(0) / &p.coeff(1)))
            .collect();
        return rational_cross_ratios(&roots, at_infinity, &quads);
    }
    if quads.len() > CROSS_RATIO_CAP {
        return Err(Error::Unsupported(format!(
            "{} cross-ratio values exceed the numeric cap {CROSS_RATIO_CAP}",
            quads.len()
        )));
    }
    let mut prec = START_PREC;
    loop {
        match numeric_cross_ratios(f0, at_infinity, &quads, prec) {
            Err(Error::Precision { .. }) if prec < MAX_PREC => prec *= 2,
            other => return other,
        }
    }
}

fn rational_cross_ratios(
    roots: &[Rational],
    at_infinity: bool,
    quads: &[[usize; 4]],
) -> Result<CrossRatioSet> {
    let pts: Vec<Option<Rational>> = roots
        .iter()
        .cloned()
        .map(Some)
        .chain(at_infinity.then_some(None))
        .collect();
    let mut values = Vec::with_capacity(quads.len());
    for q in quads {
        let four = [
            pts[q[0]].clone(),
            pts[q[1]].clone(),
            pts[q[2]].clone(),
            pts[q[3]].clone(),
        ];
        let (num, den) = cross_parts(
            &four,
            |a, b| Rational::from(a - b),
            |a, b| Rational::from(a * b),
            Rational::from(1),
        );
        values.push(num / den);
    }
    for v in &values {
        let inv = Rational::from(1) / v.clone();
        let comp = Rational::from(1) - v.clone();
        if !values.contains(&inv) || !values.contains(&comp) {
            return Err(Error::Domain(format!("cross-ratio set not closed at {v}")));
        }
    }
    let h = values.iter().map(height_rational).fold(0.0f64, f64::max);
    Ok(CrossRatioSet {
        branch_points: roots
            .iter()
            .map(|r| AlgebraicNumber::from_rational(r, START_PREC))
            .collect(),
        at_infinity,
        values: values
            .iter()
            .map(|v| AlgebraicNumber::from_rational(v, START_PREC))
            .collect(),
        h_lambda: h.max(1.0),
        exact: true,
    })
}

fn numeric_cross_ratios(
    f0: &RationalPolynomial,
    at_infinity: bool,
    quads: &[[usize; 4]],
    prec: u32,
) -> Result<CrossRatioSet> {
    let (_, prim) = f0.content_and_primitive();
    let lead = prim.last().cloned().expect("nonzero");
    let lead_c = Complex::real(rug::Float::with_val(prec, &lead));
    let roots = squarefree_roots(f0, prec)?;
    // A times a root is an algebraic integer.
    let pts: Vec<Option<Complex>> = roots
        .iter()
        .map(|r| Some(&r.z * &lead_c))
        .chain(at_infinity.then_some(None))
        .collect();
    let pairs: Vec<(Complex, Complex)> = quads
        .iter()
        .map(|q| {
            let four = [
                pts[q[0]].clone(),
                pts[q[1]].clone(),
                pts[q[2]].clone(),
                pts[q[3]].clone(),
            ];
            let (num, den) = cross_parts(&four, |a, b| a - b, |a, b| a * b, Complex::one(prec));
            (den, num)
        })
        .collect();
    let poly = recognize_linear_product(&pairs, &Integer::from(1))?;
    let values: Vec<Complex> = pairs.iter().map(|(d, n)| n / d).collect();
    let values = assign_minimal_polynomials(&values, &poly)?;
    let mut h = 0.0f64;
    for v in &values {
        h = h.max(v.height()?);
    }
    let branch_points = squarefree_roots(f0, prec)?
        .into_iter()
        .map(|r| {
            let minpoly = factor_rational_poly(f0)?
                .factors
                .into_iter()
                .map(|(p, _)| p)
                .min_by(|a, b| {
                    let ea = a.eval_complex(&r.z).abs();
                    let eb = b.eval_complex(&r.z).abs();
                    ea.partial_cmp(&eb).unwrap()
                })
                .expect("nonconstant");
            Ok(AlgebraicNumber {
                minpoly,
                approx: r.z,
                radius: r.radius,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CrossRatioSet {
        branch_points,
        at_infinity,
        values,
        h_lambda: h.max(1.0),
        exact: false,
    })
}

/// `log |Delta| <= 8 nu^3 (mu + log N + 2 log nu)` with the model
/// discriminant standing in for the minimal one.
pub fn propd_ii_bound_check(model: &HyperellipticModel, mu: f64, log_n: f64) -> Result<Verdict> {
    if model.genus < 2 {
        return Err(Error::Domain(format!("genus {} < 2", model.genus)));
    }
    if !(mu >= 1.0) {
        return Err(Error::Domain(format!("mu = {mu} < 1")));
    }
    if !(log_n >= 0.0) {
        return Err(Error::Domain(format!("log N = {log_n} < 0")));
    }
    let rhs = propd_ii_rhs(model.nu(), mu, log_n);
    Ok(Verdict::le(
        "propd_ii",
        model.log_abs_disc(),
        rhs,
        "model discriminant used as witness for the minimal one; a FAIL means not verified",
    ))
}

pub fn propd_ii_rhs(nu: u32, mu: f64, log_n: f64) -> f64 {
    let nu_f = nu as f64;
    8.0 * nu_f.powi(3) * (mu + log_n + 2.0 * nu_f.ln())
}
