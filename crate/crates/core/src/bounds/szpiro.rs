use super::field::FieldContext;
use super::ledger::ConstantsLedger;
use super::verdict::{Check, Verdict};
use crate::elliptic::GlobalInvariants;
use crate::exactmath::integer::ln_integer;
use crate::exactmath::LogMagnitude;
use rug::Integer;

/// Floor applied to `log Delta` before taking its logarithm.
pub const LOG_DELTA_FLOOR: f64 = 1e-9;

/// `log Delta <= c N^kappa`, compared as
/// `log max(log Delta, 1e-9) <= log c + kappa log N`.
pub fn verify_exponential_szpiro(log_delta: f64, n: &Integer, kappa: f64, log_c: LogMagnitude) -> Verdict {
    assert!(log_delta >= 0.0 && *n >= 1, "need log Delta >= 0 and N >= 1");
    let lhs = log_delta.max(LOG_DELTA_FLOOR).ln();
    let rhs = log_c.ln() + kappa * ln_integer(n);
    Verdict::le(
        "exp_szpiro",
        lhs,
        rhs,
        format!("log log Delta = {lhs:.6}, log c + kappa log N = {rhs:.6}"),
    )
}

/// `log Delta <= exp(c2 (log N)^kappa2)`, compared as
/// `log log Delta <= c2 (log N)^kappa2` in the form `log log log Delta <=
/// log c2 + kappa2 log log N`.
pub fn verify_doubly_exponential(log_delta: f64, n: &Integer, kappa: f64, log_c2: LogMagnitude) -> Verdict {
    assert!(log_delta >= 0.0 && *n >= 1);
    let l = log_delta.max(LOG_DELTA_FLOOR).ln();
    if l <= 0.0 {
        return Verdict::from_margin("exp_exp_szpiro", -l, "log Delta <= 1 <= exp(...)");
    }
    let lnn = ln_integer(n);
    if lnn == 0.0 {
        return Verdict::le("exp_exp_szpiro", l, 0.0, "N = 1: right side is e");
    }
    Verdict::le("exp_exp_szpiro", l.ln(), log_c2.ln() + kappa * lnn.ln(), "triple log space")
}

/// Exponential Szpiro with the explicit genus-one pair `kappa4 = 162d`.
pub fn szpiro162_check(g: &GlobalInvariants, ledger: &ConstantsLedger) -> Check {
    let e = ledger.get("c4_162").expect("ledger has c4_162");
    let (Some(kappa), Some(log_c)) = (e.kappa, e.log_c) else {
        return Check::skipped("szpiro162", "constant unavailable");
    };
    let mut v = verify_exponential_szpiro(ln_integer(&g.delta_min), &g.conductor, kappa, log_c);
    v.name = "szpiro162".into();
    v.into()
}

/// Same comparison with a parameterized ledger entry; skipped when the
/// parameter is missing.
pub fn conditional_check(name: &str, entry: &str, g: &GlobalInvariants, ledger: &ConstantsLedger) -> Check {
    match ledger.get(entry) {
        Some(e) => match (e.kappa, e.log_c) {
            (Some(kappa), Some(log_c)) => {
                let mut v = verify_exponential_szpiro(ln_integer(&g.delta_min), &g.conductor, kappa, log_c);
                v.name = name.into();
                v.notes = format!("conditional; {}", v.notes);
                v.into()
            }
            _ => Check::skipped(name, format!("{entry} needs its parameter")),
        },
        None => Check::skipped(name, format!("no ledger entry {entry}")),
    }
}

/// `6(dr + eps) log N_X + 6 eps log D_K + c'`.
pub fn theorem4_iii_bound(ctx: &FieldContext, r: f64, eps: f64, log_c_prime: f64, log_n: f64) -> f64 {
    assert!(r > 1.0 && eps > 1.0, "need r, eps > 1");
    6.0 * (ctx.df() * r + eps) * log_n + 6.0 * eps * ctx.log_dk() + log_c_prime
}

/// `log c'' + 6dr log N_X`.
pub fn lock_bound(ctx: &FieldContext, r: f64, log_c_second: f64, log_n: f64) -> f64 {
    log_c_second + 6.0 * ctx.df() * r * log_n
}

/// `r log N_T + (eps/n) log(N_S^{l-1} l^{sn}) + (eps/d) log D_K + (1/n) log c`.
#[allow(clippy::too_many_arguments)]
pub fn abc_conditional_mu(
    ctx: &FieldContext,
    l: u32,
    s: u32,
    n_t: &Integer,
    n_s: &Integer,
    r: f64,
    eps: f64,
    log_c: f64,
) -> f64 {
    assert!(r > 1.0 && eps > 1.0, "need r, eps > 1");
    assert!(l >= 1);
    let n = (l * ctx.d) as f64;
    let lf = l as f64;
    r * ln_integer(n_t)
        + eps / n * ((lf - 1.0) * ln_integer(n_s) + s as f64 * n * lf.ln())
        + eps / ctx.df() * ctx.log_dk()
        + log_c / n
}
