//! Factorisation over Q at desk scale (degree at most 90).
//!
//! Rational roots are split off first; the remaining square-free part is
//! searched for factors whose roots form a conjugation-stable subset.  Factor
//! degrees are restricted beforehand by distinct-degree factorisation modulo a
//! few small primes, which also proves most large polynomials irreducible
//! without any search.

use super::integer::primes_up_to;
use super::poly::RationalPolynomial;
use super::roots::{squarefree_roots, IsolatedRoot};
use crate::error::{Error, Result};
use rug::{Float, Integer, Rational};

pub const DEGREE_CAP: usize = 90;

/// Upper bound on the number of root subsets examined per polynomial.
pub const SEARCH_BUDGET: u64 = 20_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    /// `f = content * prod factor^mult`.
    pub content: Rational,
    /// Primitive integer factors with positive leading coefficient.
    pub factors: Vec<(RationalPolynomial, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> RationalPolynomial {
        self.factors
            .iter()
            .fold(RationalPolynomial::constant(self.content.clone()), |acc, (g, m)| {
                &acc * &g.pow(*m)
            })
    }
}

/// Irreducible factors over Q with multiplicities.
pub fn factor_rational_poly(f: &RationalPolynomial) -> Result<Factorization> {
    let n = f.require_nonzero("factor")?;
    if n > DEGREE_CAP {
        return Err(Error::Unsupported(format!(
            "factorisation of degree {n} exceeds the cap {DEGREE_CAP}"
        )));
    }
    let mut factors: Vec<(RationalPolynomial, u32)> = Vec::new();
    for (g, m) in f.squarefree_decomposition() {
        let (_, prim) = g.content_and_primitive();
        for h in factor_squarefree(&prim)? {
            factors.push((RationalPolynomial::from_integers(&h), m));
        }
    }
    factors.sort_by(|a, b| {
        let (da, db) = (a.0.degree(), b.0.degree());
        da.cmp(&db)
            .then_with(|| a.1.cmp(&b.1))
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    let mut lc_prod = Rational::from(1);
    for (g, m) in &factors {
        for _ in 0..*m {
            lc_prod *= g.leading().unwrap();
        }
    }
    let content = Rational::from(f.leading().unwrap() / &lc_prod);
    let out = Factorization { content, factors };
    if out.expand() != *f {
        return Err(Error::precision(
            "factorisation does not reassemble",
            0,
            format!("input {f}"),
        ));
    }
    Ok(out)
}

pub fn is_irreducible(f: &RationalPolynomial) -> Result<bool> {
    let fac = factor_rational_poly(f)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

/// Factor a primitive square-free integer polynomial.
fn factor_squarefree(g: &[Integer]) -> Result<Vec<Vec<Integer>>> {
    let mut rest = g.to_vec();
    let mut out = Vec::new();
    if degree(&rest) <= 1 {
        return Ok(vec![rest]);
    }

    // Rational roots.
    let roots = roots_of(&rest, 256)?;
    let lc = rest.last().unwrap().clone().abs();
    for r in &roots {
        if r.z.im.clone().abs() > 1e-30 {
            continue;
        }
        if let Some(q) = rationalize(&r.z.re, &lc) {
            let lin = vec![Integer::from(-q.numer()), q.denom().clone()];
            if let Some(quo) = exact_div_int(&rest, &lin) {
                out.push(lin);
                rest = quo;
            }
        }
    }
    if degree(&rest) == 0 {
        return Ok(out);
    }
    if degree(&rest) == 1 {
        out.push(rest);
        return Ok(out);
    }

    let mut budget = SEARCH_BUDGET;
    loop {
        let n = degree(&rest);
        if n <= 1 {
            out.push(rest);
            break;
        }
        let allowed = allowed_degrees(&rest);
        if !(1..=n / 2).any(|k| allowed[k]) {
            out.push(rest);
            break;
        }
        match find_smallest_factor(&rest, &allowed, &mut budget)? {
            Some(h) => {
                rest = exact_div_int(&rest, &h).expect("verified divisor");
                out.push(h);
            }
            None => {
                out.push(rest);
                break;
            }
        }
    }
    Ok(out)
}

fn degree(p: &[Integer]) -> usize {
    p.len() - 1
}

fn roots_of(p: &[Integer], prec: u32) -> Result<Vec<IsolatedRoot>> {
    squarefree_roots(&RationalPolynomial::from_integers(p), prec)
}

fn exact_div_int(a: &[Integer], b: &[Integer]) -> Option<Vec<Integer>> {
    let (q, r) = RationalPolynomial::from_integers(a).div_rem(&RationalPolynomial::from_integers(b));
    if !r.is_zero() || !q.is_integral() {
        return None;
    }
    Some(
        q.coeffs()
            .iter()
            .map(|c| c.numer().clone())
            .collect(),
    )
}

/// Continued-fraction reconstruction with denominator at most `bound`,
/// accepted only when `|x - p/q| < 1/(4 q bound)`.
pub fn rationalize(x: &Float, bound: &Integer) -> Option<Rational> {
    let prec = x.prec();
    let mut rem = x.clone();
    let (mut p0, mut q0) = (Integer::from(0), Integer::from(1));
    let (mut p1, mut q1) = (Integer::from(1), Integer::from(0));
    let mut best: Option<Rational> = None;
    for _ in 0..4 * prec {
        let a = match rem.to_integer_round(rug::float::Round::Down) {
            Some((a, _)) => a,
            None => break,
        };
        let p2 = Integer::from(&a * &p1) + &p0;
        let q2 = Integer::from(&a * &q1) + &q0;
        if q2 > *bound {
            break;
        }
        let cand = Rational::from((p2.clone(), q2.clone()));
        let err = Float::with_val(prec, x - &cand).abs();
        let lim = Float::with_val(prec, Integer::from(&q2 * bound) * 4u32).recip();
        if err < lim {
            best = Some(cand);
        }
        let frac = Float::with_val(prec, &rem - &a);
        if frac.is_zero() {
            break;
        }
        rem = frac.recip();
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    best
}

/// `allowed[k]` is false when no factor of degree `k` can exist, by
/// distinct-degree factorisation modulo several primes.
fn allowed_degrees(g: &[Integer]) -> Vec<bool> {
    let n = degree(g);
    let mut allowed = vec![true; n + 1];
    let lc = g.last().unwrap();
    let mut used = 0;
    for p in primes_up_to(2000).into_iter().skip(1) {
        if used >= 6 {
            break;
        }
        let p = p as u32;
        if lc.mod_u(p) == 0 {
            continue;
        }
        let fp: Vec<u64> = g.iter().map(|c| c.mod_u(p) as u64).collect();
        let Some(degs) = ddf_mod_p(&fp, p as u64) else {
            continue;
        };
        used += 1;
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for d in degs {
            for s in (d..=n).rev() {
                if sums[s - d] {
                    sums[s] = true;
                }
            }
        }
        for k in 0..=n {
            allowed[k] &= sums[k];
        }
    }
    allowed
}

mod fp {
    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % p;
            }
            a = a * a % p;
            e >>= 1;
        }
        r
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let li = inv(m[dm], p);
        while r.len() > dm {
            let k = r.len() - 1 - dm;
            let c = r[r.len() - 1] * li % p;
            for (j, &mj) in m.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * mj % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        rem(&out, m, p)
    }

    pub fn powmod(a: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut r = vec![1u64];
        let mut b = rem(a, m, p);
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(&r, &b, m, p);
            }
            b = mulmod(&b, &b, m, p);
            e >>= 1;
        }
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        if let Some(&l) = x.last() {
            let li = inv(l, p);
            for c in x.iter_mut() {
                *c = *c * li % p;
            }
        }
        x
    }

    pub fn div(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let db = b.len() - 1;
        let li = inv(b[db], p);
        let mut r = a.to_vec();
        trim(&mut r);
        if r.len() <= db {
            return Vec::new();
        }
        let mut q = vec![0u64; r.len() - db];
        while r.len() > db {
            let k = r.len() - 1 - db;
            let c = r[r.len() - 1] * li % p;
            q[k] = c;
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * bj % p) % p;
            }
            trim(&mut r);
        }
        q
    }

    pub fn derivative(a: &[u64], p: u64) -> Vec<u64> {
        let mut d: Vec<u64> = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * (k as u64 % p) % p)
            .collect();
        trim(&mut d);
        d
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out: Vec<u64> = (0..n)
            .map(|k| {
                let x = a.get(k).copied().unwrap_or(0);
                let y = b.get(k).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut out);
        out
    }
}

/// Degrees of the irreducible factors of `f mod p`, or `None` when the
/// reduction drops degree or is not square-free.
fn ddf_mod_p(f: &[u64], p: u64) -> Option<Vec<usize>> {
    let mut f = f.to_vec();
    fp::trim(&mut f);
    let n = f.len().checked_sub(1)?;
    if n == 0 {
        return None;
    }
    let df = fp::derivative(&f, p);
    if df.is_empty() || fp::gcd(&f, &df, p).len() != 1 {
        return None;
    }
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let mut degs = Vec::new();
    let mut i = 1;
    while 2 * i <= f.len() - 1 {
        h = fp::powmod(&h, p, &f, p);
        let g = fp::gcd(&f, &fp::sub(&h, &x, p), p);
        let dg = g.len() - 1;
        if dg > 0 {
            for _ in 0..dg / i {
                degs.push(i);
            }
            f = fp::div(&f, &g, p);
            h = fp::rem(&h, &f, p);
        }
        i += 1;
    }
    if f.len() > 1 {
        degs.push(f.len() - 1);
    }
    Some(degs)
}

/// A real root or a complex-conjugate pair.
struct Unit {
    deg: usize,
    /// `lc * (sum of roots)` in double precision.
    trace: f64,
    /// `lc * sum |root|`, scale for the trace tolerance.
    scale: f64,
    /// Real quadratic or linear factor `x^2 + b x + c` / `x + b`.
    poly: Vec<Float>,
}

fn find_smallest_factor(
    g: &[Integer],
    allowed: &[bool],
    budget: &mut u64,
) -> Result<Option<Vec<Integer>>> {
    let n = degree(g);
    let lc = g.last().unwrap().clone();
    let norm2: Integer = g.iter().map(|c| Integer::from(c * c)).sum();
    // Mignotte: coefficients of any factor are below 2^n |g|_2; with the
    // extra leading coefficient this bounds the bits we must resolve.
    let bits = lc.significant_bits() + norm2.significant_bits() / 2 + n as u32 + 64;
    let prec = (2 * bits).max(256);
    let roots = roots_of(g, prec)?;
    let units = pair_units(&roots, &lc, prec)?;

    for k in 1..=n / 2 {
        if !allowed[k] {
            continue;
        }
        let mut chosen = Vec::new();
        if let Some(h) = search(&units, 0, k, 0.0, 0.0, &mut chosen, g, &lc, prec, bits, budget)? {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

fn pair_units(roots: &[IsolatedRoot], lc: &Integer, prec: u32) -> Result<Vec<Unit>> {
    let lcf = lc.to_f64();
    let tiny = Float::with_val(prec, Float::i_exp(1, -(prec as i32) / 2));
    let mut used = vec![false; roots.len()];
    let mut units = Vec::new();
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let z = &roots[i].z;
        if z.im.clone().abs() < tiny {
            units.push(Unit {
                deg: 1,
                trace: lcf * z.re.to_f64(),
                scale: (lcf * z.re.to_f64()).abs(),
                poly: vec![Float::with_val(prec, -&z.re), Float::with_val(prec, 1)],
            });
            continue;
        }
        let conj = z.conj();
        let j = (0..roots.len())
            .filter(|&j| !used[j])
            .min_by(|&a, &b| {
                let da = (&roots[a].z - &conj).abs();
                let db = (&roots[b].z - &conj).abs();
                da.partial_cmp(&db).unwrap()
            })
            .ok_or_else(|| Error::precision("unpaired complex root", prec, format!("{z:?}")))?;
        used[j] = true;
        let re = Float::with_val(prec, &z.re + &roots[j].z.re) / 2u32;
        let b = Float::with_val(prec, &re * -2i32);
        let c = z.norm_sqr();
        units.push(Unit {
            deg: 2,
            trace: lcf * 2.0 * re.to_f64(),
            scale: lcf * 2.0 * z.abs().to_f64(),
            poly: vec![c, b, Float::with_val(prec, 1)],
        });
    }
    Ok(units)
}

#[allow(clippy::too_many_arguments)]
fn search(
    units: &[Unit],
    start: usize,
    need: usize,
    trace: f64,
    scale: f64,
    chosen: &mut Vec<usize>,
    g: &[Integer],
    lc: &Integer,
    prec: u32,
    bits: u32,
    budget: &mut u64,
) -> Result<Option<Vec<Integer>>> {
    if need == 0 {
        if *budget == 0 {
            return Err(Error::Resource(format!(
                "factor search budget of {SEARCH_BUDGET} subsets exhausted at degree {}",
                degree(g)
            )));
        }
        *budget -= 1;
        if (trace - trace.round()).abs() > 1e-7 * (1.0 + scale) {
            return Ok(None);
        }
        return Ok(candidate(units, chosen, g, lc, prec, bits));
    }
    for u in start..units.len() {
        if units[u].deg > need {
            continue;
        }
        chosen.push(u);
        let r = search(
            units,
            u + 1,
            need - units[u].deg,
            trace + units[u].trace,
            scale + units[u].scale,
            chosen,
            g,
            lc,
            prec,
            bits,
            budget,
        )?;
        chosen.pop();
        if r.is_some() {
            return Ok(r);
        }
    }
    Ok(None)
}

fn candidate(
    units: &[Unit],
    chosen: &[usize],
    g: &[Integer],
    lc: &Integer,
    prec: u32,
    bits: u32,
) -> Option<Vec<Integer>> {
    let mut acc = vec![Float::with_val(prec, lc)];
    for &u in chosen {
        let q = &units[u].poly;
        let mut next = vec![Float::with_val(prec, 0); acc.len() + q.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                next[i + j] += Float::with_val(prec, a * b);
            }
        }
        acc = next;
    }
    let tol = Float::with_val(prec, Float::i_exp(1, -((prec - bits) as i32) / 2 - 8));
    let mut ints = Vec::with_capacity(acc.len());
    for c in &acc {
        let (r, _) = c.to_integer_round(rug::float::Round::Nearest)?;
        let err = Float::with_val(prec, c - &r).abs();
        if err > tol {
            return None;
        }
        ints.push(r);
    }
    let poly = RationalPolynomial::from_integers(&ints);
    let (_, prim) = poly.content_and_primitive();
    exact_div_int(g, &prim).map(|_| prim)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_i64(cs)
    }

    #[test]
    fn small_examples() {
        let f = factor_rational_poly(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
        let g = factor_rational_poly(&p(&[1, 0, 1])).unwrap();
        assert_eq!(g.factors, vec![(p(&[1, 0, 1]), 1)]);
        let h = &p(&[-1, 2]).pow(2) * &p(&[1, 1]);
        let fh = factor_rational_poly(&h).unwrap();
        assert_eq!(fh.factors, vec![(p(&[1, 1]), 1), (p(&[-1, 2]), 2)]);
        assert_eq!(fh.content, 1);
    }

    #[test]
    fn cyclotomic_splitting() {
        // x^12 - 1 = Phi1 Phi2 Phi3 Phi4 Phi6 Phi12
        let mut cs = vec![0i64; 13];
        cs[0] = -1;
        cs[12] = 1;
        let f = factor_rational_poly(&p(&cs)).unwrap();
        let degs: Vec<usize> = f.factors.iter().map(|(g, _)| g.degree().unwrap()).collect();
        assert_eq!(degs, vec![1, 1, 2, 2, 2, 4]);
    }

    #[test]
    fn product_of_quartics() {
        let a = p(&[2, 0, 0, 0, 1]); // x^4 + 2
        let b = p(&[-3, 1, 0, 0, 1]); // x^4 + x - 3
        let c = p(&[1, 1, 1]);
        let f = &(&a * &b) * &c;
        let fac = factor_rational_poly(&f).unwrap();
        assert_eq!(fac.factors.len(), 3);
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn degree_cap() {
        let mut cs = vec![0i64; 92];
        cs[91] = 1;
        cs[0] = 1;
        assert!(matches!(
            factor_rational_poly(&p(&cs)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn rationalize_respects_bound() {
        let x = Float::with_val(128, 355) / 113u32;
        let q = rationalize(&x, &Integer::from(1000)).unwrap();
        assert_eq!(q, Rational::from((355, 113)));
        assert!(rationalize(&x, &Integer::from(100)).is_none());
    }
}
