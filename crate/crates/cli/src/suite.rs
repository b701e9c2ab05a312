use crate::cache::Cache;
use crate::records::CurveRecord;
use crate::report::{CheckEntry, InvariantsEntry, ReportEntry, Summary};
use rayon::prelude::*;
use std::io::Write;
use std::time::Instant;
use szpiro_core::bounds::szpiro::{conditional_check, szpiro162_check};
use szpiro_core::bounds::{ledger_with, FieldContext, LedgerParams};
use szpiro_core::elliptic::checks::{integral_j_divisibility, ogg_check, t0_exponent_check};
use szpiro_core::elliptic::{genus_one_checks, global_invariants, EllipticModel, GenusOneData, GlobalInvariants};

/// Checks that only read the global invariants.
pub const CHEAP_CHECKS: [&str; 3] = ["ogg", "integral_j_div", "t0_n_le_5f"];
/// Checks that need periods or Legendre parameters.
pub const PERIOD_CHECKS: [&str; 5] = ["arch_pin", "hf_hj", "eq_hs", "prophe_surrogate", "hj_hlambda"];
pub const LEDGER_CHECKS: [&str; 2] = ["szpiro162", "szpiro22"];

pub fn all_checks() -> Vec<&'static str> {
    CHEAP_CHECKS.iter().chain(&PERIOD_CHECKS).chain(&LEDGER_CHECKS).copied().collect()
}

/// Split a comma list, rejecting unknown names.
pub fn parse_checks(csv: &str) -> Result<Vec<String>, String> {
    let known = all_checks();
    let mut out = Vec::new();
    for name in csv.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if !known.contains(&name) {
            return Err(format!("unknown check `{name}`; known: {}", known.join(",")));
        }
        if !out.iter().any(|c| c == name) {
            out.push(name.to_string());
        }
    }
    if out.is_empty() {
        return Err("empty check list".into());
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub checks: Vec<String>,
    pub ctx: FieldContext,
    pub params: LedgerParams,
    pub cache: Option<Cache>,
    pub timing: bool,
}

impl SuiteOptions {
    pub fn new(checks: Vec<String>) -> Self {
        SuiteOptions {
            checks,
            ctx: FieldContext::rationals(),
            params: LedgerParams::default(),
            cache: None,
            timing: false,
        }
    }
}

fn invariants(rec: &CurveRecord, model: &EllipticModel, cache: Option<&Cache>) -> szpiro_core::Result<GlobalInvariants> {
    match cache {
        Some(c) => c.get_or_compute(&rec.a, model).map(|(g, _)| g),
        None => global_invariants(model),
    }
}

pub fn evaluate(rec: &CurveRecord, opts: &SuiteOptions) -> ReportEntry {
    let start = Instant::now();
    let mut entry = ReportEntry {
        label: rec.label.clone(),
        a: rec.a.clone().map(|x| x.to_string()),
        invariants: None,
        checks: Vec::new(),
        error: None,
        timing_ms: None,
    };
    let fail_all = |entry: &mut ReportEntry, msg: String| {
        entry.checks = opts.checks.iter().map(|c| CheckEntry::skip(c, &msg)).collect();
        entry.error = Some(msg);
    };
    let model = match EllipticModel::from_integers(&rec.a) {
        Ok(m) => m,
        Err(e) => {
            fail_all(&mut entry, e.to_string());
            return entry;
        }
    };
    let g = match invariants(rec, &model, opts.cache.as_ref()) {
        Ok(g) => g,
        Err(e) => {
            fail_all(&mut entry, e.to_string());
            return entry;
        }
    };
    entry.invariants = Some((&g).into());
    let wants_periods = opts.checks.iter().any(|c| PERIOD_CHECKS.contains(&c.as_str()));
    let g1 = wants_periods.then(|| genus_one_checks(&GenusOneData::from_global(&model, g.clone())));
    let ledger = ledger_with(&opts.ctx, 1, &opts.params);
    for name in &opts.checks {
        let check = match name.as_str() {
            "ogg" => ogg_check(&g).into(),
            "integral_j_div" => integral_j_divisibility(&g, &model),
            "t0_n_le_5f" => t0_exponent_check(&g).into(),
            "szpiro162" => szpiro162_check(&g, &ledger),
            "szpiro22" => conditional_check("szpiro22", "c4_22", &g, &ledger),
            other => g1
                .as_ref()
                .and_then(|cs| cs.iter().find(|c| c.name() == other).cloned())
                .unwrap_or_else(|| szpiro_core::Check::skipped(other, "not produced")),
        };
        entry.checks.push((&check).into());
    }
    if opts.timing {
        entry.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    entry
}

/// One report line per record, in input order.
pub fn run_suite(records: &[CurveRecord], opts: &SuiteOptions, out: &mut impl Write) -> std::io::Result<Summary> {
    let entries: Vec<ReportEntry> = records.par_iter().map(|r| evaluate(r, opts)).collect();
    let mut summary = Summary::default();
    for e in &entries {
        summary.records += 1;
        summary.errors += usize::from(e.error.is_some());
        summary.add(&e.checks);
        writeln!(out, "{}", e.to_line())?;
    }
    Ok(summary)
}

/// Invariants only, no checks.
pub fn run_invariants(records: &[CurveRecord], cache: Option<&Cache>, out: &mut impl Write) -> std::io::Result<Summary> {
    let entries: Vec<ReportEntry> = records
        .par_iter()
        .map(|rec| {
            let mut e = ReportEntry {
                label: rec.label.clone(),
                a: rec.a.clone().map(|x| x.to_string()),
                invariants: None,
                checks: Vec::new(),
                error: None,
                timing_ms: None,
            };
            match EllipticModel::from_integers(&rec.a).and_then(|m| invariants(rec, &m, cache)) {
                Ok(g) => e.invariants = Some(InvariantsEntry::from(&g)),
                Err(err) => e.error = Some(err.to_string()),
            }
            e
        })
        .collect();
    let mut summary = Summary::default();
    for e in &entries {
        summary.records += 1;
        summary.errors += usize::from(e.error.is_some());
        writeln!(out, "{}", e.to_line())?;
    }
    Ok(summary)
}
