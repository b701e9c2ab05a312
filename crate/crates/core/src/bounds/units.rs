use super::field::FieldContext;
use super::verdict::Verdict;
use crate::error::{Error, Result};
use crate::exactmath::integer::ln_integer;
use crate::exactmath::LogMagnitude;
use rug::Integer;
use std::f64::consts::LN_2;

fn m_of(l: u32) -> u32 {
    l.max(6)
}

/// `log((2 m d N_T^{log m})^{15md - 1} D_K^{m-1})` with `m = max(6, l)`.
pub fn gyory_yu_mu_bound(ctx: &FieldContext, l: u32, n_t: &Integer) -> Result<LogMagnitude> {
    if l == 0 || *n_t < 1 {
        return Err(Error::Domain("need l >= 1 and N_T >= 1".into()));
    }
    let m = m_of(l) as f64;
    let d = ctx.df();
    let e = 15.0 * m * d - 1.0;
    Ok(LogMagnitude::new(
        e * ((2.0 * m * d).ln() + m.ln() * ln_integer(n_t)) + (m - 1.0) * ctx.log_dk(),
    ))
}

/// `log(D_K^l N_S^{l-1} l^{ns})`, `n = ld`.
pub fn dedekind_bound(ctx: &FieldContext, l: u32, s: u32, n_s: &Integer) -> Result<LogMagnitude> {
    if *n_s < 1 {
        return Err(Error::Domain("need N_S >= 1".into()));
    }
    let lf = l as f64;
    let n = lf * ctx.df();
    let ram = if l == 0 { 0.0 } else { n * s as f64 * lf.ln() };
    Ok(LogMagnitude::new(
        lf * ctx.log_dk() + (lf - 1.0).max(0.0) * ln_integer(n_s) + ram,
    ))
}

#[derive(Clone, Debug, PartialEq)]
pub struct PreciseBound {
    pub l: u32,
    pub t: u32,
    pub m: u32,
    pub n: u32,
    pub log_kappa_t: f64,
    pub log_c_k: f64,
    pub log_c_s: f64,
    /// `log(kappa_T N^l c_K c_S log(c_K c_S))`.
    pub log_mu_bound: f64,
    /// Upper bound for `log D_L` from the Dedekind estimate.
    pub log_d_l: f64,
    pub log_regulator_bound: f64,
    pub regulator: Option<Verdict>,
}

/// The explicit constants behind the `mu_U` bound. `n_s` is the product of
/// `log N_v` over the places in `S` (1 when `S` is empty); `log_r_u` is an
/// optional caller-supplied log regulator checked against its bound.
#[allow(clippy::too_many_arguments)]
pub fn precisebound_constants(
    ctx: &FieldContext,
    l: u32,
    t: u32,
    s: u32,
    n_s: &Integer,
    n_s_log_product: f64,
    log_r_u: Option<f64>,
) -> Result<PreciseBound> {
    if l == 0 || t == 0 {
        return Err(Error::Domain("need l >= 1 and t >= 1".into()));
    }
    if *n_s < 1 || n_s_log_product <= 0.0 || n_s_log_product.is_nan() {
        return Err(Error::Domain("need N_S >= 1 and n_S > 0".into()));
    }
    let lf = l as f64;
    let tf = t as f64;
    let d = ctx.df();
    let m = m_of(l);
    let mf = m as f64;
    let n = l * ctx.d;
    let nf = n as f64;
    let ldk = ctx.log_dk();
    let lns = ln_integer(n_s);
    let td = tf + d;
    let log_kappa_t = 34.0 * LN_2 + (2.0 * lf * td + 5.0) * td.ln().ln() + 7.0 * lf * td * LN_2;
    let log_c_k = lf / 2.0 * ldk + (nf - 1.0) * (3.0 * mf.powi(3) * d * d * ldk.max(1.0)).ln();
    let log_c_s = lf * (0.5 * lns + n_s_log_product.ln())
        + (mf * d - 1.0) * (tf.max(1.0).ln() + 2.0 * tf * mf.ln() + lns.max(1.0).ln());
    let inner = log_c_k + log_c_s;
    let log_mu_bound = log_kappa_t + lf * lns + inner + inner.max(f64::MIN_POSITIVE).ln();
    let log_d_l = dedekind_bound(ctx, l, s, n_s)?.ln();
    let log_regulator_bound = (nf - 1.0) * (2.0 * nf).ln()
        + 0.5 * log_d_l
        + (nf - 1.0) * log_d_l.max(0.0)
        + lf * (tf * lf.ln() + n_s_log_product.ln());
    let regulator = log_r_u.map(|r| {
        Verdict::le("regulator", r, log_regulator_bound, "log R_U against (2n)^(n-1) D_L^(1/2) max(1,D_L)^(n-1) (l^t n_S)^l")
    });
    Ok(PreciseBound {
        l,
        t,
        m,
        n,
        log_kappa_t,
        log_c_k,
        log_c_s,
        log_mu_bound,
        log_d_l,
        log_regulator_bound,
        regulator,
    })
}
