use super::field::FieldContext;
use crate::exactmath::LogMagnitude;
use std::f64::consts::LN_2;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum Provenance {
    Explicit,
    /// Depends on a named constant with no explicit value.
    Parameterized(&'static str),
}

#[derive(Clone, Debug, PartialEq)]
pub struct LedgerEntry {
    pub name: &'static str,
    /// Exponent of `N`, if the constant is paired with one.
    pub kappa: Option<f64>,
    /// `None` while a required parameter is missing.
    pub log_c: Option<LogMagnitude>,
    pub provenance: Provenance,
    pub formula: &'static str,
}

impl LedgerEntry {
    /// Usable in a verdict: explicit, or parameterized with the parameter given.
    pub fn usable(&self) -> bool {
        self.log_c.is_some()
    }

    pub fn is_explicit(&self) -> bool {
        self.provenance == Provenance::Explicit
    }
}

/// Optional values for the constants left unspecified.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LedgerParams {
    pub log_k0: Option<f64>,
    pub log_c_d: Option<f64>,
    pub log_k3_prime: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstantsLedger {
    pub ctx: FieldContext,
    pub g: u32,
    pub entries: Vec<LedgerEntry>,
}

/// `kappa(g) = 2(2g+1)(ceil((g+1)/2) + 1)`.
pub fn kappa_liu(g: u32) -> u32 {
    2 * (2 * g + 1) * ((g + 2) / 2 + 1)
}

pub fn kappa1(ctx: &FieldContext, g: u32) -> f64 {
    (8.0 * g as f64 * ctx.df()).powi(4) * (3.0 * ctx.hk.to_f64()).ln()
}

/// `log c_1 = kappa_1 log(3 D_K^{h_K})`.
pub fn log_c1(ctx: &FieldContext, g: u32) -> f64 {
    kappa1(ctx, g) * (3f64.ln() + ctx.hk.to_f64() * ctx.log_dk())
}

/// `log c_3 = 2^50 9^g d^2 log 2 + 24 g^4 log D_K`.
pub fn log_c3(ctx: &FieldContext, g: u32) -> f64 {
    2f64.powi(50) * 9f64.powi(g as i32) * ctx.df().powi(2) * LN_2
        + 24.0 * (g as f64).powi(4) * ctx.log_dk()
}

pub fn ledger(ctx: &FieldContext, g: u32) -> ConstantsLedger {
    ledger_with(ctx, g, &LedgerParams::default())
}

pub fn ledger_with(ctx: &FieldContext, g: u32, p: &LedgerParams) -> ConstantsLedger {
    assert!(g >= 1);
    let d = ctx.df();
    let gf = g as f64;
    let ldk = ctx.log_dk();
    let lm = |x: f64| Some(LogMagnitude::new(x));
    let param = |v: Option<f64>, rest: f64| v.map(|k| LogMagnitude::new(k + rest));
    let e = |name, kappa, log_c, provenance, formula| LedgerEntry {
        name,
        kappa,
        log_c,
        provenance,
        formula,
    };
    use Provenance::*;
    let entries = vec![
        e("c1", Some(kappa1(ctx, g)), lm(log_c1(ctx, g)), Explicit, "kappa1 = (8gd)^4 log(3 h_K), c1 = (3 D_K^h_K)^kappa1"),
        e(
            "c2",
            Some(6.0),
            param(p.log_k0, 15.0 * d * (4.0 * gf * d).ln() + 10.0 * ldk),
            Parameterized("k0"),
            "kappa2 = 6, c2 = k0 (4gd)^(15d) D_K^10",
        ),
        e(
            "c3_prime",
            Some(96.0 * d * gf.powi(4)),
            param(p.log_k3_prime, 24.0 * gf.powi(4) * ldk),
            Parameterized("k3'"),
            "kappa3 = 96 d g^4, c3' = k3' D_K^(24 g^4)",
        ),
        e(
            "c3",
            Some(d * (4.0 * gf).powi(8)),
            lm(log_c3(ctx, g)),
            Explicit,
            "exponent d (4g)^8, c3 = 2^(2^50 9^g d^2) D_K^(24 g^4)",
        ),
        e(
            "c4_22",
            Some(22.0 * d),
            param(p.log_c_d, 4.0 * ldk),
            Parameterized("c(d)"),
            "kappa4 = 22d, c4 = c(d) D_K^4",
        ),
        e(
            "c4_162",
            Some(162.0 * d),
            lm((18.0 * d).powi(2) * 5f64.ln() + 5.0 * ldk),
            Explicit,
            "kappa4 = 162d, c4 = 5^((18d)^2) D_K^5",
        ),
        e(
            "c5",
            Some(8f64.powi(8) * d.powi(4) * (3.0 * ctx.hk.to_f64()).ln()),
            lm(log_c1(ctx, 2).max(log_c3(ctx, 2))),
            Explicit,
            "kappa5 = 8^8 d^4 log(3 h_K), c5 = max(c1(2), c3(2))",
        ),
        e(
            "c6",
            Some(6.0),
            param(p.log_k0, 15.0 * d * (8.0 * d).ln() + 10.0 * ldk),
            Parameterized("k0"),
            "kappa6 = 6, c6 = k0 (8d)^(15d) D_K^10",
        ),
        e(
            "propd_i",
            None,
            lm(2f64.powi(23) * 9f64.powi(g as i32) * LN_2 + d.ln()),
            Explicit,
            "log D_X <= 2^(2^23 9^g) d mu_X",
        ),
        e("kappa_liu", Some(kappa_liu(g) as f64), lm(0.0), Explicit, "kappa(g) = 2(2g+1)(ceil((g+1)/2)+1)"),
    ];
    ConstantsLedger {
        ctx: ctx.clone(),
        g,
        entries,
    }
}

impl ConstantsLedger {
    pub fn get(&self, name: &str) -> Option<&LedgerEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Entries a default run may use.
    pub fn default_usable(&self) -> impl Iterator<Item = &LedgerEntry> {
        self.entries.iter().filter(|e| e.is_explicit() && e.usable())
    }
}

impl fmt::Display for ConstantsLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<12} {:>16} {:>22}  provenance", "name", "kappa", "log10 c")?;
        for e in &self.entries {
            let k = e.kappa.map_or("-".to_string(), |k| format!("{k:.6}"));
            let c = e.log_c.map_or("-".to_string(), |c| format!("{:.6e}", c.log10()));
            let p = match e.provenance {
                Provenance::Explicit => "explicit".to_string(),
                Provenance::Parameterized(s) => format!("parameterized({s})"),
            };
            writeln!(f, "{:<12} {:>16} {:>22}  {}", e.name, k, c, p)?;
        }
        Ok(())
    }
}
