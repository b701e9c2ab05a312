use super::model::EllipticModel;
use super::tate::{tate_local, Kodaira, LocalReductionData};
use crate::error::Result;
use crate::exactmath::integer::{factor_with_cap, FACTOR_CAP};
use rug::Integer;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalInvariants {
    /// `|Delta_min| = prod p^{n_p}`.
    pub delta_min: Integer,
    /// Sign of the discriminant, shared by every model.
    pub sign: i32,
    pub conductor: Integer,
    /// Local data at every prime dividing the discriminant of the integral
    /// input model, including primes where that model is not minimal but the
    /// curve has good reduction.
    pub locals: Vec<LocalReductionData>,
    pub semistable: bool,
    /// Odd primes of bad, potentially good reduction.
    pub t0: Vec<Integer>,
    /// Odd primes of type `I_n*` with `n >= 1`.
    pub t1: Vec<Integer>,
    /// Primes of type `I_n` with `n >= 1`.
    pub t2: Vec<Integer>,
}

impl GlobalInvariants {
    pub fn bad_locals(&self) -> impl Iterator<Item = &LocalReductionData> {
        self.locals.iter().filter(|l| l.kodaira != Kodaira::I0)
    }

    pub fn local(&self, p: &Integer) -> Option<&LocalReductionData> {
        self.locals.iter().find(|l| l.p == *p)
    }

    /// `sign * |Delta_min|`.
    pub fn signed_delta_min(&self) -> Integer {
        Integer::from(&self.delta_min * self.sign)
    }
}

pub fn global_invariants(model: &EllipticModel) -> Result<GlobalInvariants> {
    global_invariants_with_cap(model, FACTOR_CAP)
}

/// As [`global_invariants`] with a caller-chosen factorisation cap.
pub fn global_invariants_with_cap(model: &EllipticModel, cap: u64) -> Result<GlobalInvariants> {
    let m = model.integral_model();
    let disc = m.disc.numer().clone();
    let sign = if disc < 0 { -1 } else { 1 };
    let mut locals = Vec::new();
    for (p, _) in factor_with_cap(&disc, cap)? {
        locals.push(tate_local(&m, &p)?);
    }
    let mut delta_min = Integer::from(1);
    let mut conductor = Integer::from(1);
    let (mut t0, mut t1, mut t2) = (Vec::new(), Vec::new(), Vec::new());
    for l in &locals {
        delta_min *= crate::exactmath::integer::ipow(&l.p, l.n_p);
        conductor *= crate::exactmath::integer::ipow(&l.p, l.f_p);
        let odd = l.p != 2;
        match l.kodaira {
            Kodaira::I0 => {}
            Kodaira::In(_) => t2.push(l.p.clone()),
            Kodaira::InStar(n) if n >= 1 && odd => t1.push(l.p.clone()),
            _ if odd && l.potential_good => t0.push(l.p.clone()),
            _ => {}
        }
    }
    let semistable = locals.iter().all(|l| l.kodaira.is_semistable());
    Ok(GlobalInvariants {
        delta_min,
        sign,
        conductor,
        locals,
        semistable,
        t0,
        t1,
        t2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(a: [i64; 5]) -> GlobalInvariants {
        global_invariants(&EllipticModel::from_i64(a).unwrap()).unwrap()
    }

    #[test]
    fn spec_examples() {
        let g = gi([0, -1, 1, 0, 0]);
        assert_eq!((g.delta_min.to_u64(), g.conductor.to_u64()), (Some(11), Some(11)));
        let g = gi([0, 0, 1, -1, 0]);
        assert_eq!((g.delta_min.to_u64(), g.conductor.to_u64()), (Some(37), Some(37)));
        assert!(g.semistable);
        let g = gi([0, 0, 0, -1, 0]);
        assert_eq!((g.delta_min.to_u64(), g.conductor.to_u64()), (Some(64), Some(32)));
        assert!(!g.semistable);
        let g = gi([0, 0, 1, 0, 0]);
        assert_eq!((g.delta_min.to_u64(), g.conductor.to_u64()), (Some(27), Some(27)));
        assert_eq!(g.sign, -1);
    }
}
