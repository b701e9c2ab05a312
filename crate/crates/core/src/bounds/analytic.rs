use super::field::FieldContext;
use super::verdict::{Check, Verdict};
use crate::exactmath::integer::{is_prime_u64, primes_up_to};

/// One evaluation of the prime counting estimates for a set of places `T`,
/// given by their norms.
#[derive(Clone, Debug, PartialEq)]
pub struct AnalyticRecord {
    pub eps: f64,
    pub t: usize,
    pub log_n_t: f64,
    pub log_n_prod: f64,
    /// Distinct rational primes under `T`.
    pub omega: usize,
    /// The `omega`-th prime, 0 when `omega = 0`.
    pub q: u64,
    pub theta_q: f64,
    /// Smallest `log k7` with `q < (1 + eps) theta(q) + log k7` at this `q`.
    pub log_k7_needed: f64,
    pub checks: Vec<Check>,
}

/// Rational prime below a prime power.
fn prime_base(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            break;
        }
        p += 1;
    }
    let p = if p * p > n { n } else { p };
    let mut r = n;
    while r % p == 0 {
        r /= p;
    }
    (r == 1 && is_prime_u64(p)).then_some(p)
}

/// `theta(q) = sum_{p <= q} log p`.
pub fn chebyshev_theta(q: u64) -> f64 {
    primes_up_to(q).iter().map(|&p| (p as f64).ln()).sum()
}

pub fn nth_prime(k: usize) -> u64 {
    if k == 0 {
        return 0;
    }
    let mut limit = 16u64;
    loop {
        let ps = primes_up_to(limit);
        if ps.len() >= k {
            return ps[k - 1];
        }
        limit *= 2;
    }
}

/// Evaluates `t <= eps log N_T + k4`-type estimates for `T`. `norms` are the
/// norms `N_v` of the places (prime powers). The sharp form needs `log k7`;
/// without it those checks are skipped.
pub fn chebyshev_and_analytic(ctx: &FieldContext, eps: f64, norms: &[u64], log_k7: Option<f64>) -> crate::Result<AnalyticRecord> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(crate::Error::Domain("need eps > 0".into()));
    }
    let mut primes = Vec::new();
    for &nv in norms {
        let p = prime_base(nv).ok_or_else(|| crate::Error::Domain(format!("{nv} is not a prime power")))?;
        primes.push(p);
    }
    primes.sort_unstable();
    primes.dedup();
    let t = norms.len();
    let log_n_t: f64 = norms.iter().map(|&n| (n as f64).ln()).sum();
    let log_n_prod: f64 = norms.iter().map(|&n| (n as f64).ln().ln()).sum();
    let log_rad: f64 = primes.iter().map(|&p| (p as f64).ln()).sum();
    let omega = primes.len();
    let q = nth_prime(omega);
    let theta_q = chebyshev_theta(q);
    let log_k7_needed = q as f64 - (1.0 + eps) * theta_q;
    let d = ctx.df();
    let tf = t as f64;
    let of = omega as f64;

    let mut checks: Vec<Check> = Vec::new();
    checks.push(if omega >= 1 {
        Verdict::le("omega_log_omega", of * of.ln(), q as f64, format!("omega = {omega}, q = {q}")).into()
    } else {
        Check::skipped("omega_log_omega", "T is empty")
    });
    checks.push(Verdict::le("t_le_d_omega", tf, d * of, "").into());
    match log_k7 {
        None => {
            checks.push(Check::skipped("rosser_schoenfeld", "k7 is not specified"));
            checks.push(Check::skipped("sharp_t", "k7 is not specified"));
            checks.push(Check::skipped("sharp_t_pow_t", "k7 is not specified"));
        }
        Some(lk7) => {
            let note = "conditional on k7";
            checks.push(if omega >= 1 {
                Verdict::le("rosser_schoenfeld", q as f64, (1.0 + eps) * theta_q + lk7, note).into()
            } else {
                Check::skipped("rosser_schoenfeld", "T is empty")
            });
            checks.push(if omega >= 1 {
                Verdict::le("omega_rad", of * of.ln(), (1.0 + eps) * log_rad + lk7, note).into()
            } else {
                Check::skipped("omega_rad", "T is empty")
            });
            checks.push(if omega >= 2 {
                let rhs = (d * (1.0 + eps) * log_n_t + d * lk7) / of.ln();
                Verdict::le("sharp_t", tf, rhs, note).into()
            } else {
                Check::skipped("sharp_t", "needs omega >= 2")
            });
            let lhs = if t == 0 { 0.0 } else { tf * tf.ln() };
            checks.push(Verdict::le("sharp_t_pow_t", lhs, d * (1.0 + eps) * log_n_t + d * lk7 + tf * d.ln(), note).into());
        }
    }
    Ok(AnalyticRecord {
        eps,
        t,
        log_n_t,
        log_n_prod,
        omega,
        q,
        theta_q,
        log_k7_needed,
        checks,
    })
}

/// Constants certified only for sets of rational primes with `N_T <= cap`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanResult {
    pub eps: f64,
    pub d: u32,
    pub cap: u64,
    pub sets: u64,
    /// `max (t - eps log N_T)`.
    pub k4: f64,
    /// `max (t log t - (d + eps) log N_T)`.
    pub log_k5: f64,
    /// `max (log n_T - eps log N_T)`.
    pub log_k6: f64,
    /// `max (q - (1 + eps) theta(q))` over `q` reached in the range.
    pub log_k7: f64,
    pub certified_range: String,
}

/// Exhaustive search over squarefree `N_T <= cap`.
pub fn scan_analytic_constants(eps: f64, d: u32, cap: u64) -> ScanResult {
    assert!(eps > 0.0 && d >= 1 && cap >= 1);
    let limit = cap.min(1 << 26);
    let primes = primes_up_to(limit.max(2));
    let df = d as f64;
    let mut acc = (0u64, 0f64, 0f64, 0f64, 0usize);
    fn dfs(primes: &[u64], start: usize, n: u64, cap: u64, t: usize, log_n: f64, log_prod: f64, eps: f64, df: f64, acc: &mut (u64, f64, f64, f64, usize)) {
        let tf = t as f64;
        acc.0 += 1;
        acc.1 = acc.1.max(tf - eps * log_n);
        let tt = if t == 0 { 0.0 } else { tf * tf.ln() };
        acc.2 = acc.2.max(tt - (df + eps) * log_n);
        acc.3 = acc.3.max(log_prod - eps * log_n);
        acc.4 = acc.4.max(t);
        for i in start..primes.len() {
            let p = primes[i];
            let Some(m) = n.checked_mul(p).filter(|&m| m <= cap) else { break };
            let lp = (p as f64).ln();
            dfs(primes, i + 1, m, cap, t + 1, log_n + lp, log_prod + lp.ln(), eps, df, acc);
        }
    }
    dfs(&primes, 0, 1, cap, 0, 0.0, 0.0, eps, df, &mut acc);
    let mut log_k7 = f64::NEG_INFINITY;
    let mut theta = 0.0;
    let max_omega = acc.4;
    for &p in primes.iter().take(max_omega) {
        theta += (p as f64).ln();
        log_k7 = log_k7.max(p as f64 - (1.0 + eps) * theta);
    }
    ScanResult {
        eps,
        d,
        cap,
        sets: acc.0,
        k4: acc.1,
        log_k5: acc.2,
        log_k6: acc.3,
        log_k7: if log_k7.is_finite() { log_k7 } else { 0.0 },
        certified_range: format!("sets of rational primes with squarefree N_T <= {cap}"),
    }
}
