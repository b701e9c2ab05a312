use super::global::{global_invariants, GlobalInvariants};
use super::lambda::{lambda_data, LambdaData};
use super::model::EllipticModel;
use super::periods::{faltings_height_with, FaltingsHeightResult};
use crate::bounds::{Check, Verdict};
use crate::error::Result;
use crate::exactmath::height::{big_height_rational, height_rational};

/// Constant in `h_F(E) <= h(j)/12 + 2.37`.
pub const HF_HJ_CONST: f64 = 2.37;
/// Constant in `h_F(E) <= h(lambda)/2 + 3.36`.
pub const HF_LAMBDA_CONST: f64 = 3.36;
/// Constant in `h_F(E) <= mu_E/2 + 4`.
pub const HF_MU_CONST: f64 = 4.0;
/// Bound on `log |(2 pi)^12 Delta(tau) Im(tau)^6|` for reduced `tau`.
pub const ARCH_PIN: f64 = 16.0;

/// Everything the genus-one checks read.
#[derive(Clone, Debug)]
pub struct GenusOneData {
    pub model: EllipticModel,
    pub global: GlobalInvariants,
    pub lambda: Option<LambdaData>,
    pub faltings: Option<FaltingsHeightResult>,
    /// Reasons the optional parts are missing.
    pub errors: Vec<String>,
}

impl GenusOneData {
    pub fn compute(model: &EllipticModel) -> Result<Self> {
        let global = global_invariants(model)?;
        Ok(Self::from_global(model, global))
    }

    pub fn from_global(model: &EllipticModel, global: GlobalInvariants) -> Self {
        let mut errors = Vec::new();
        let lambda = lambda_data(model)
            .map_err(|e| errors.push(format!("lambda: {e}")))
            .ok();
        let faltings = faltings_height_with(model, &global, crate::DEFAULT_PREC)
            .map_err(|e| errors.push(format!("faltings height: {e}")))
            .ok();
        GenusOneData {
            model: model.clone(),
            global,
            lambda,
            faltings,
            errors,
        }
    }

    pub fn h_j(&self) -> f64 {
        height_rational(&self.model.j)
    }
}

pub fn ogg_check(g: &GlobalInvariants) -> Verdict {
    let bad: Vec<String> = g
        .bad_locals()
        .filter(|l| !l.ogg_holds())
        .map(|l| format!("p={} ({} n={} m={} f={})", l.p, l.kodaira, l.n_p, l.m_p, l.f_p))
        .collect();
    Verdict::exact("ogg", bad.is_empty(), bad.join("; "))
}

pub fn j_is_integral(model: &EllipticModel) -> bool {
    *model.j.denom() == 1
}

/// `Delta_E | N_E^5` for integral `j`.
pub fn integral_j_divisibility(g: &GlobalInvariants, model: &EllipticModel) -> Check {
    if !j_is_integral(model) {
        return Check::skipped("integral_j_div", format!("j = {} is not integral", model.j));
    }
    let n5 = crate::exactmath::integer::ipow(&g.conductor, 5);
    let holds = n5.is_divisible(&g.delta_min);
    let margin = crate::exactmath::integer::ln_integer(&n5)
        - crate::exactmath::integer::ln_integer(&g.delta_min);
    Check::Verdict(Verdict {
        name: "integral_j_div".into(),
        pass: holds,
        margin: if holds { margin.max(0.0) } else { margin.min(-1.0) },
        notes: format!("Delta_min = {}, N^5 = {}", g.delta_min, n5),
    })
}

/// `n_p <= 5 f_p` at every odd place of bad, potentially good reduction.
pub fn t0_exponent_check(g: &GlobalInvariants) -> Verdict {
    let mut margin = f64::INFINITY;
    let mut notes = Vec::new();
    for p in &g.t0 {
        let l = g.local(p).expect("T0 prime has local data");
        let m = 5.0 * l.f_p as f64 - l.n_p as f64;
        margin = margin.min(m);
        notes.push(format!("p={} n={} f={}", p, l.n_p, l.f_p));
    }
    if g.t0.is_empty() {
        margin = 0.0;
        notes.push("T0 empty".into());
    }
    Verdict::from_margin("t0_n_le_5f", margin, notes.join("; "))
}

/// Every check of the genus-one section on one curve.
pub fn genus_one_checks(d: &GenusOneData) -> Vec<Check> {
    let mut out: Vec<Check> = vec![
        ogg_check(&d.global).into(),
        integral_j_divisibility(&d.global, &d.model),
        t0_exponent_check(&d.global).into(),
    ];
    let hj = d.h_j();
    match &d.faltings {
        Some(f) => {
            let note = if f.exact {
                "exact".to_string()
            } else {
                format!("upper end of [{:.6}, {:.6}]", f.h_f_interval.0, f.h_f_interval.1)
            };
            let hf = f.h_f_interval.1;
            out.push(Verdict::le("arch_pin", f.archimedean, ARCH_PIN, format!("tau = {:?}", f.tau)).into());
            out.push(Verdict::le("hf_hj", hf, hj / 12.0 + HF_HJ_CONST, note.clone()).into());
            match &d.lambda {
                Some(l) => {
                    out.push(Verdict::le("eq_hs", hf, 0.5 * l.h_min + HF_LAMBDA_CONST, note.clone()).into());
                    out.push(
                        Verdict::le(
                            "prophe_surrogate",
                            hf,
                            0.5 * l.h_max + HF_MU_CONST,
                            format!("{note}; mu_E replaced by max h(lambda)"),
                        )
                        .into(),
                    );
                }
                None => {
                    out.push(Check::skipped("eq_hs", "lambda data unavailable"));
                    out.push(Check::skipped("prophe_surrogate", "lambda data unavailable"));
                }
            }
        }
        None => {
            for n in ["arch_pin", "hf_hj", "eq_hs", "prophe_surrogate"] {
                out.push(Check::skipped(n, d.errors.join("; ")));
            }
        }
    }
    match &d.lambda {
        Some(l) => out.push(j_lambda_height_check(&d.model, l).into()),
        None => out.push(Check::skipped("hj_hlambda", d.errors.join("; "))),
    }
    out
}

/// `H(j) <= 2^17 H(lambda)^6` for each of the six parameters; integer
/// comparison when `lambda` is rational, log space otherwise.
pub fn j_lambda_height_check(model: &EllipticModel, l: &LambdaData) -> Verdict {
    let hj = height_rational(&model.j);
    let big_hj = big_height_rational(&model.j);
    let mut margin = f64::INFINITY;
    let mut exact_ok = true;
    for (v, h) in l.values.iter().zip(&l.heights) {
        let m = 17.0 * std::f64::consts::LN_2 + 6.0 * h - hj;
        margin = margin.min(m);
        if let Some(q) = v.as_rational() {
            let hl = big_height_rational(&q);
            let rhs = crate::exactmath::integer::ipow(&hl, 6) << 17;
            exact_ok &= big_hj <= rhs;
        }
    }
    let mut v = Verdict::from_margin("hj_hlambda", margin, "");
    if !exact_ok {
        v.pass = false;
        v.notes = "exact integer comparison failed".into();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_on_small_curves() {
        for a in [[0, 0, 0, -1, 0], [0, 0, 1, 0, 0], [0, 0, 1, -1, 0]] {
            let e = EllipticModel::from_i64(a).unwrap();
            let d = GenusOneData::compute(&e).unwrap();
            for c in genus_one_checks(&d) {
                assert_ne!(c.passed(), Some(false), "{a:?}: {c:?}");
            }
        }
    }
}
