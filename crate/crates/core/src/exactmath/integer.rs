//! Integer helpers: valuations, radicals and factorisation of moderately
//! sized integers (trial division plus Pollard rho below `2^63`).

use crate::error::{Error, Result};
use rug::{Integer, Rational};

/// Largest cofactor handed to Pollard rho without an explicit override.
pub const FACTOR_CAP: u64 = 1 << 63;

const TRIAL_LIMIT: u32 = 10_000;

/// `v_p(n)`; `None` for `n = 0`.
pub fn valuation(n: &Integer, p: &Integer) -> Option<u32> {
    if *n == 0 {
        return None;
    }
    let mut m = n.clone();
    let mut v = 0;
    while m.is_divisible(p) {
        m /= p;
        v += 1;
    }
    Some(v)
}

/// `v_p(x)` for a nonzero rational.
pub fn valuation_q(x: &Rational, p: &Integer) -> Option<i64> {
    let vn = valuation(x.numer(), p)? as i64;
    let vd = valuation(x.denom(), p)? as i64;
    Some(vn - vd)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A nontrivial factor of the odd composite `n` (Brent's variant of rho).
fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_u64_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

/// Prime factorisation of `|n|` as sorted `(p, e)` pairs.
///
/// Trial division removes primes below 10^4; cofactors below [`FACTOR_CAP`]
/// use rho over `u64`, larger ones perfect-power detection and a bounded rho
/// over big integers, failing with a resource error past the budget.
pub fn factor(n: &Integer) -> Result<Vec<(Integer, u32)>> {
    factor_with_cap(n, FACTOR_CAP)
}

pub fn factor_with_cap(n: &Integer, cap: u64) -> Result<Vec<(Integer, u32)>> {
    if *n == 0 {
        return Err(Error::Domain("cannot factor zero".into()));
    }
    let mut m = n.clone().abs();
    let mut out: Vec<(Integer, u32)> = Vec::new();
    let mut p = 2u32;
    while p <= TRIAL_LIMIT && m > 1 {
        let pi = Integer::from(p);
        if m.is_divisible(&pi) {
            let mut e = 0;
            while m.is_divisible(&pi) {
                m /= &pi;
                e += 1;
            }
            out.push((pi, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        let mut ps = Vec::new();
        factor_big_into(m, cap, &mut ps)?;
        ps.sort_unstable();
        for q in ps {
            match out.last_mut() {
                Some((last, e)) if *last == q => *e += 1,
                _ => out.push((q, 1)),
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Iteration budget for rho on cofactors beyond `u64`.
const BIG_RHO_BUDGET: u64 = 4_000_000;

fn factor_big_into(m: Integer, cap: u64, out: &mut Vec<Integer>) -> Result<()> {
    if m == 1 {
        return Ok(());
    }
    if let Some(v) = m.to_u64().filter(|&v| v < cap) {
        let mut ps = Vec::new();
        factor_u64_into(v, &mut ps);
        out.extend(ps.into_iter().map(Integer::from));
        return Ok(());
    }
    if m.is_probably_prime(40) != rug::integer::IsPrime::No {
        out.push(m);
        return Ok(());
    }
    for k in (2..=m.significant_bits()).rev() {
        let (r, rem) = m.clone().root_rem(Integer::new(), k);
        if rem == 0 && r > 1 {
            let mut sub = Vec::new();
            factor_big_into(r, cap, &mut sub)?;
            for q in sub {
                out.extend(std::iter::repeat_n(q, k as usize));
            }
            return Ok(());
        }
    }
    let d = pollard_rho_big(&m).ok_or_else(|| {
        Error::Resource(format!("composite cofactor {m} resisted rho within {BIG_RHO_BUDGET} steps"))
    })?;
    let e = Integer::from(&m / &d);
    factor_big_into(d, cap, out)?;
    factor_big_into(e, cap, out)
}

/// Brent's rho with batched gcds over arbitrary integers.
fn pollard_rho_big(n: &Integer) -> Option<Integer> {
    if n.is_even() {
        return Some(Integer::from(2));
    }
    let mut steps = 0u64;
    for c in 1u32.. {
        let f = |x: &Integer| (Integer::from(x * x) + c) % n;
        let (mut y, mut r, mut q) = (Integer::from(2), 1u64, Integer::from(1));
        let mut g = Integer::from(1);
        let mut x = y.clone();
        let mut ys = y.clone();
        while g == 1 {
            x.clone_from(&y);
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys.clone_from(&y);
                for _ in 0..(r - k).min(128) {
                    y = f(&y);
                    q = q * Integer::from(&x - &y).abs() % n;
                }
                g = Integer::from(q.gcd_ref(n));
                k += 128;
            }
            r *= 2;
            steps += r;
            if steps > BIG_RHO_BUDGET {
                return None;
            }
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = Integer::from(Integer::from(&x - &ys).abs().gcd_ref(n));
                if g > 1 {
                    break;
                }
            }
        }
        if g != *n {
            return Some(g);
        }
        if c > 20 {
            return None;
        }
    }
    None
}

/// The primes dividing `n`.
pub fn prime_support(n: &Integer) -> Result<Vec<Integer>> {
    Ok(factor(n)?.into_iter().map(|(p, _)| p).collect())
}

/// Product of the distinct primes dividing `n` (`rad(0)` is undefined).
pub fn radical(n: &Integer) -> Result<Integer> {
    Ok(prime_support(n)?.into_iter().product())
}

/// All primes `<= limit`.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(k, &b)| b.then_some(k as u64))
        .collect()
}

/// `b^e`.
pub fn ipow(b: &Integer, e: u32) -> Integer {
    use rug::ops::Pow;
    Integer::from(b.pow(e))
}

/// Natural logarithm of a positive big integer, accurate for any size.
pub fn ln_integer(n: &Integer) -> f64 {
    assert!(*n > 0, "ln of non-positive integer");
    let bits = n.significant_bits();
    if bits < 1000 {
        return n.to_f64().ln();
    }
    let shift = bits - 64;
    let top = Integer::from(n >> shift).to_f64();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
