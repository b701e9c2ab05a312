//! Dense univariate polynomials with rational coefficients.

use crate::error::{Error, Result};
use crate::mp::Complex;
use rug::{Integer, Rational};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients are stored from the constant term upwards and trimmed, so
/// the zero polynomial is the empty vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let neg = *c < 0;
            let a = Rational::from(c.abs_ref());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = a == 1;
            match (k, unit) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{a}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// From integer coefficients, constant term first.
    pub fn from_i64(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn from_integers(cs: &[Integer]) -> Self {
        Self::new(cs.iter().map(|c| Rational::from(c.clone())).collect())
    }

    /// `prod (x - r)` over the given rational roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::constant(Rational::from(1)), |acc, r| {
            &acc * &Self::new(vec![Rational::from(-r), Rational::from(1)])
        })
    }

    /// Parse coefficient strings (`"3"`, `"-1/4"`), constant term first.
    pub fn parse(cs: &[&str]) -> Result<Self> {
        let v = cs
            .iter()
            .map(|s| {
                Rational::from_str_radix(s.trim(), 10)
                    .map_err(|e| Error::Domain(format!("bad rational {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(v))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| *c == 1)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| *c.denom() == 1)
    }

    pub(crate) fn require_nonzero(&self, op: &str) -> Result<usize> {
        self.degree()
            .ok_or_else(|| Error::Domain(format!("{op}: zero polynomial")))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| Rational::from(a * c)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = Rational::from(l.recip_ref());
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| Rational::from(c * k as u32))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Horner evaluation at a multiprecision complex point.
    pub fn eval_complex(&self, z: &Complex) -> Complex {
        let p = z.prec();
        let mut acc = Complex::zero(p);
        for c in self.coeffs.iter().rev() {
            acc = &acc * z;
            acc.re += rug::Float::with_val(p, c);
        }
        acc
    }

    /// `f(x + t)`.
    pub fn shift(&self, t: &Rational) -> Self {
        let lin = Self::new(vec![t.clone(), Rational::from(1)]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(Rational::from(1));
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Polynomial division over Q; `rhs` must be nonzero.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        let dr = rhs.degree().expect("division by zero polynomial");
        let lc = rhs.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dr {
            return (Self::zero(), self.clone());
        }
        let mut quo = vec![Rational::new(); n - dr];
        for k in (0..n - dr).rev() {
            let c = Rational::from(&rem[k + dr] / &lc);
            if c != 0 {
                for (j, b) in rhs.coeffs.iter().enumerate() {
                    rem[k + j] -= Rational::from(&c * b);
                }
            }
            quo[k] = c;
        }
        rem.truncate(dr);
        (Self::new(quo), Self::new(rem))
    }

    /// Exact quotient if `rhs` divides `self`.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.primitive_rational();
        }
        a.monic()
    }

    /// Content as a positive rational and the primitive integer polynomial
    /// with positive leading coefficient: `self = content * primitive`.
    pub fn content_and_primitive(&self) -> (Rational, Vec<Integer>) {
        if self.is_zero() {
            return (Rational::new(), Vec::new());
        }
        let mut lcm = Integer::from(1);
        for c in &self.coeffs {
            lcm.lcm_mut(c.denom());
        }
        let ints: Vec<Integer> = self
            .coeffs
            .iter()
            .map(|c| Rational::from(c * &lcm).into_numer_denom().0)
            .collect();
        let mut g = Integer::new();
        for c in &ints {
            g.gcd_mut(c);
        }
        if *ints.last().unwrap() < 0 {
            g = -g;
        }
        let prim: Vec<Integer> = ints.iter().map(|c| Integer::from(c / &g)).collect();
        (Rational::from((g, lcm)), prim)
    }

    /// Same polynomial rescaled to primitive integer form (as a rational
    /// polynomial), used to keep Euclidean remainders small.
    pub fn primitive_rational(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self::from_integers(&self.content_and_primitive().1)
    }

    /// Resultant by the Euclidean recursion over Q.
    pub fn resultant(&self, rhs: &Self) -> Result<Rational> {
        let m = self.require_nonzero("resultant")?;
        let n = rhs.require_nonzero("resultant")?;
        Ok(resultant_rec(self, m, rhs, n))
    }

    /// `(-1)^{n(n-1)/2} Res(f, f') / a_n`.
    pub fn discriminant(&self) -> Result<Rational> {
        let n = self.require_nonzero("discriminant")?;
        if n == 0 {
            return Err(Error::Domain("discriminant of a constant".into()));
        }
        if n == 1 {
            return Ok(Rational::from(1));
        }
        let res = self.resultant(&self.derivative())?;
        let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        Ok(res * sign / self.leading().unwrap())
    }

    /// Yun's square-free decomposition: pairs `(g_i, i)` with `g_i` monic,
    /// square-free and pairwise coprime, `self = lc * prod g_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).unwrap();
        let mut c = df.exact_div(&a0).unwrap();
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).unwrap();
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.exact_div(&a).unwrap();
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }
}

fn resultant_rec(f: &RationalPolynomial, m: usize, g: &RationalPolynomial, n: usize) -> Rational {
    if n == 0 {
        // Res(f, c) = c^m
        let c = g.leading().unwrap().clone();
        return pow_q(&c, m as u32);
    }
    if m < n {
        let r = resultant_rec(g, n, f, m);
        return if (m * n) % 2 == 1 { -r } else { r };
    }
    // m >= n >= 1: Res(f, g) = (-1)^{mn} Res(g, f) and
    // Res(g, f) = lc(g)^{m - deg r} Res(g, r) with r = f mod g.
    let r = f.div_rem(g).1;
    let sign = if (m * n) % 2 == 1 { -1 } else { 1 };
    match r.degree() {
        None => Rational::new(),
        Some(k) => {
            let lc = g.leading().unwrap();
            let inner = resultant_rec(g, n, &r, k);
            pow_q(lc, (m - k) as u32) * inner * sign
        }
    }
}

fn pow_q(c: &Rational, e: u32) -> Rational {
    let mut acc = Rational::from(1);
    for _ in 0..e {
        acc *= c;
    }
    acc
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, o: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        RationalPolynomial::new(
            (0..n)
                .map(|k| self.coeff(k) + o.coeff(k))
                .collect(),
        )
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, o: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        RationalPolynomial::new(
            (0..n)
                .map(|k| self.coeff(k) - o.coeff(k))
                .collect(),
        )
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        self.scale(&Rational::from(-1))
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, o: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || o.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::new(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += Rational::from(a * b);
            }
        }
        RationalPolynomial::new(out)
    }
}
