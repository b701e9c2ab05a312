use crate::records::CurveRecord;
use crate::report::{CheckEntry, Status, Summary};
use rug::Integer;
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;
use szpiro_core::arakelov::{faltings_delta_genus2, verify_dejong};
use szpiro_core::bounds::frey_chain;
use szpiro_core::elliptic::checks::j_lambda_height_check;
use szpiro_core::elliptic::{lambda_data, EllipticModel};
use szpiro_core::siegel::theta::{delta_characteristics, ln_abs};
use szpiro_core::siegel::{delta_g, reduce_to_fundamental, theta_constant, verify_lemfg, SiegelPoint, ThetaCharacteristic};

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

fn tally(summary: &mut Summary, checks: &[CheckEntry]) {
    summary.records += 1;
    summary.add(checks);
}

#[derive(Serialize)]
struct FreyLine {
    triple: [String; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    radical: Option<String>,
    checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

pub fn run_frey(triples: &[[Integer; 3]], log_c4_prime: Option<f64>, out: &mut impl Write) -> std::io::Result<Summary> {
    let mut summary = Summary::default();
    for [a, b, c] in triples {
        let mut line = FreyLine {
            triple: [a.to_string(), b.to_string(), c.to_string()],
            radical: None,
            checks: Vec::new(),
            error: None,
        };
        match frey_chain(a, b, c, log_c4_prime) {
            Ok(cs) => {
                line.radical = szpiro_core::elliptic::support_radical(a, b, c).ok().map(|r| r.to_string());
                line.checks = cs.iter().map(CheckEntry::from).collect();
            }
            Err(e) => {
                summary.errors += 1;
                line.error = Some(e.to_string());
            }
        }
        tally(&mut summary, &line.checks);
        writeln!(out, "{}", serde_json::to_string(&line).expect("serialisable"))?;
    }
    Ok(summary)
}

pub fn run_lambda(records: &[CurveRecord], out: &mut impl Write) -> std::io::Result<Summary> {
    let mut summary = Summary::default();
    for rec in records {
        let mut v = json!({ "label": rec.display_label() });
        let mut checks = Vec::new();
        match EllipticModel::from_integers(&rec.a).and_then(|m| lambda_data(&m).map(|l| (m, l))) {
            Ok((m, l)) => {
                let values: Vec<String> = l
                    .values
                    .iter()
                    .map(|x| match x.as_rational() {
                        Some(q) => q.to_string(),
                        None => {
                            let z = x.approx.to_c64();
                            format!("{:.12}{:+.12}i", z.re, z.im)
                        }
                    })
                    .collect();
                v["j"] = json!(m.j.to_string());
                v["lambda"] = json!(values);
                v["heights"] = json!(l.heights);
                v["h_min"] = json!(l.h_min);
                v["h_max"] = json!(l.h_max);
                v["orbit_poly"] = json!(l.orbit_poly.to_string());
                v["j_residual"] = json!(l.j_residual);
                checks.push(CheckEntry::from(&j_lambda_height_check(&m, &l)));
            }
            Err(e) => {
                summary.errors += 1;
                v["error"] = json!(e.to_string());
            }
        }
        v["checks"] = serde_json::to_value(&checks).expect("serialisable");
        tally(&mut summary, &checks);
        writeln!(out, "{v}")?;
    }
    Ok(summary)
}

/// `g = 1` from 2 numbers, `g = 2` from 8 (row-major real/imaginary pairs).
pub fn parse_tau(nums: &[f64]) -> Result<SiegelPoint, String> {
    let g = match nums.len() {
        2 => 1,
        8 => 2,
        n => return Err(format!("tau needs 2 or 8 numbers, got {n}")),
    };
    let pairs: Vec<(f64, f64)> = nums.chunks(2).map(|c| (c[0], c[1])).collect();
    SiegelPoint::from_f64(g, &pairs, szpiro_core::DEFAULT_PREC).map_err(|e| e.to_string())
}

fn tau_json(t: &SiegelPoint) -> Value {
    json!(t.to_f64_pairs().iter().map(|(a, b)| [*a, *b]).collect::<Vec<_>>())
}

pub fn run_theta(tau: &SiegelPoint, out: &mut impl Write) -> std::io::Result<Summary> {
    let mut summary = Summary::default();
    let g = tau.genus();
    let mut v = json!({ "genus": g, "tau": tau_json(tau) });
    let mut checks = Vec::new();
    match reduce_to_fundamental(tau) {
        Ok((red, _)) => {
            v["reduced_tau"] = tau_json(&red);
            let mut thetas = Vec::new();
            for bits in 0..(1u32 << (2 * g)) {
                let a: Vec<i64> = (0..g).map(|i| ((bits >> i) & 1) as i64).collect();
                let b: Vec<i64> = (0..g).map(|i| ((bits >> (g + i)) & 1) as i64).collect();
                let ch = ThetaCharacteristic::from_doubled(&a, &b);
                match theta_constant(&ch, &red) {
                    Ok(t) => {
                        let z = t.to_c64();
                        thetas.push(json!({
                            "a2": a, "b2": b, "even": ch.is_even(),
                            "re": z.re, "im": z.im, "log_abs": finite(ln_abs(&t)),
                        }));
                    }
                    Err(e) => thetas.push(json!({ "a2": a, "b2": b, "error": e.to_string() })),
                }
            }
            v["thetas"] = json!(thetas);
            v["delta_characteristics"] = json!(delta_characteristics(g).len());
            match delta_g(&red) {
                Ok(d) => v["log_abs_delta_g"] = json!(finite(ln_abs(&d))),
                Err(e) => v["error"] = json!(e.to_string()),
            }
            for r in [verify_lemfg(&red), verify_dejong(&red)] {
                match r {
                    Ok(verdict) => checks.push(CheckEntry::from(&verdict)),
                    Err(e) => checks.push(CheckEntry::skip("theta", &e.to_string())),
                }
            }
        }
        Err(e) => {
            summary.errors += 1;
            v["error"] = json!(e.to_string());
        }
    }
    v["checks"] = serde_json::to_value(&checks).expect("serialisable");
    tally(&mut summary, &checks);
    writeln!(out, "{v}")?;
    Ok(summary)
}

pub fn run_delta2(tau: &SiegelPoint, samples: usize, seed: u64, out: &mut impl Write) -> std::io::Result<Summary> {
    let mut summary = Summary::default();
    let mut v = json!({ "tau": tau_json(tau), "samples": samples, "seed": seed });
    let mut checks = Vec::new();
    match faltings_delta_genus2(tau, samples, seed) {
        Ok(r) => {
            v = json!({
                "tau": tau_json(tau),
                "delta": finite(r.delta),
                "delta_stderr": r.delta_stderr,
                "log_h": r.log_h.value,
                "log_h_stderr": r.log_h.stderr,
                "log_norm_delta2": r.log_norm_delta2,
                "normalization": r.normalization.value,
                "normalization_stderr": r.normalization.stderr,
                "samples": r.samples,
                "seed": r.seed,
                "floored": r.floored,
                "product_locus": r.product_locus,
                "recomposition_residual": r.recomposition_residual(),
            });
            checks.push(CheckEntry::from(&r.lower_bound_check()));
            if let Ok(d) = verify_dejong(tau) {
                checks.push(CheckEntry::from(&d));
            }
        }
        Err(e) => {
            summary.errors += 1;
            v["error"] = json!(e.to_string());
        }
    }
    v["checks"] = serde_json::to_value(&checks).expect("serialisable");
    tally(&mut summary, &checks);
    writeln!(out, "{v}")?;
    Ok(summary)
}

pub fn status_of(pass: bool) -> Status {
    if pass {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Built-in quick pass over every check family.
pub fn run_selftest(out: &mut impl Write) -> std::io::Result<Summary> {
    let mut total = Summary::default();
    let mut merge = |s: Summary| {
        total.records += s.records;
        total.pass += s.pass;
        total.fail += s.fail;
        total.skip += s.skip;
        total.errors += s.errors;
    };
    let corpus = crate::records::parse_curves(szpiro_core::DESK_CORPUS).expect("built-in corpus parses");
    let opts = crate::suite::SuiteOptions::new(crate::suite::all_checks().into_iter().map(String::from).collect());
    merge(crate::suite::run_suite(&corpus[..corpus.len().min(6)], &opts, out)?);
    let triples: Vec<[Integer; 3]> = [(1, 8, 9), (5, 27, 32), (1, 48, 49), (3, 125, 128)]
        .iter()
        .map(|&(a, b, c)| [Integer::from(a), Integer::from(b), Integer::from(c)])
        .collect();
    merge(run_frey(&triples, None, out)?);
    merge(run_lambda(&corpus[..corpus.len().min(3)], out)?);
    let t1 = parse_tau(&[0.1, 1.2]).expect("fixed point");
    merge(run_theta(&t1, out)?);
    let t2 = parse_tau(&[0.1, 1.3, 0.2, 0.4, 0.2, 0.4, -0.15, 1.1]).expect("fixed point");
    merge(run_theta(&t2, out)?);
    merge(run_delta2(&t2, 10_000, 7, out)?);
    Ok(total)
}
