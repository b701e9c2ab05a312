use super::verdict::{Check, Verdict};
use crate::elliptic::{frey_curve, global_invariants, support_radical};
use crate::error::Result;
use crate::exactmath::integer::ln_integer;
use rug::Integer;

/// The Frey curve relations `N_E <= 2^8 S` and `|abc|^2 <= 2^8 Delta_E`,
/// plus the exponential abc report when `log c4'` is supplied.
pub fn frey_chain(a: &Integer, b: &Integer, c: &Integer, log_c4_prime: Option<f64>) -> Result<Vec<Check>> {
    let e = frey_curve(a, b, c)?;
    let gi = global_invariants(&e)?;
    let s = support_radical(a, b, c)?;
    let bound_n = Integer::from(&s * 256u32);
    let abc2 = Integer::from(Integer::from(a * b) * c).square();
    let bound_d = Integer::from(&gi.delta_min * 256u32);
    let mut out: Vec<Check> = vec![
        exact_le("frey_conductor", &gi.conductor, &bound_n, format!("N = {}, 2^8 S = {}", gi.conductor, bound_n)),
        exact_le("frey_discriminant", &abc2, &bound_d, format!("|abc|^2 = {abc2}, 2^8 Delta = {bound_d}")),
    ];
    let h = a.clone().abs().max(b.clone().abs()).max(c.clone().abs());
    out.push(match log_c4_prime {
        Some(lc) => {
            let rhs = lc + 22.0 * ln_integer(&s);
            let lhs = ln_integer(&h).max(1e-300).ln();
            let mut v = Verdict::le("frey_exp_abc", lhs, rhs, "conditional on c4'");
            v.notes = format!("log log max = {lhs:.6}, log c4' + 22 log S = {rhs:.6}; conditional");
            v.into()
        }
        None => Check::skipped("frey_exp_abc", "c4' is not specified"),
    });
    Ok(out)
}

fn exact_le(name: &str, lhs: &Integer, rhs: &Integer, notes: String) -> Check {
    let holds = lhs <= rhs;
    let margin = ln_integer(rhs) - ln_integer(lhs);
    Verdict {
        name: name.into(),
        pass: holds,
        margin: if holds { margin.max(0.0) } else { margin.min(-f64::MIN_POSITIVE) },
        notes,
    }
    .into()
}
