mod common;

use proptest::prelude::*;
use rug::Rational;
use szpiro_core::elliptic::EllipticModel;
use szpiro_core::exactmath::RationalPolynomial;
use szpiro_core::hyperelliptic::{
    cross_ratio_set, model_discriminant, rescale_model, trace_shift_normalize, HyperellipticModel,
};

fn rat_poly(nums: &[i64], dens: &[i64]) -> RationalPolynomial {
    RationalPolynomial::new(nums.iter().zip(dens).map(|(&n, &d)| Rational::from((n, d))).collect())
}

#[test]
fn cubic_model_matches_elliptic() {
    let m = model_discriminant(&RationalPolynomial::from_i64(&[1, 0, 0, 1]), &RationalPolynomial::zero());
    // y^2 = x^3 + 1
    assert_eq!(m.unwrap().disc, EllipticModel::from_i64([0, 0, 0, 0, 1]).unwrap().disc);
    let w = model_discriminant(&RationalPolynomial::from_i64(&[0, 0, 0, 1]), &RationalPolynomial::from_i64(&[1]));
    assert_eq!(w.unwrap().disc, Rational::from(-27));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn rescaling_scales_discriminant(
        deg in prop::sample::select(vec![3usize, 5]),
        nums in prop::collection::vec(-9i64..=9, 6),
        dens in prop::collection::vec(1i64..=6, 6),
    ) {
        let mut n = nums[..deg].to_vec();
        n.push(1);
        let mut d = dens[..deg].to_vec();
        d.push(1);
        let f = rat_poly(&n, &d);
        prop_assume!(f.discriminant().unwrap() != 0);
        let r = rescale_model(&f).unwrap();
        prop_assert!(r.holds);
        prop_assert_eq!(r.after.disc.clone(), Rational::from(&r.before.disc * &r.factor));
        prop_assert!(r.after.f.is_integral());
    }

    #[test]
    fn genus_one_models_agree_with_elliptic(a in prop::collection::vec(-6i64..=6, 5)) {
        let e = EllipticModel::from_i64([a[0], a[1], a[2], a[3], a[4]]);
        prop_assume!(e.is_ok());
        let f = RationalPolynomial::from_i64(&[a[4], a[3], a[1], 1]);
        let f2 = RationalPolynomial::from_i64(&[a[2], a[0]]);
        let h = HyperellipticModel::new(f, f2).unwrap();
        prop_assert_eq!(h.genus, 1);
        prop_assert_eq!(h.disc, e.unwrap().disc);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn trace_shift_keeps_discriminant(
        deg in prop::sample::select(vec![3usize, 5, 7]),
        c in prop::collection::vec(-30i64..=30, 7),
    ) {
        let mut v = c[..deg].to_vec();
        v.push(1);
        let f = RationalPolynomial::from_i64(&v);
        let t = trace_shift_normalize(&f).unwrap();
        prop_assert_eq!(t.shifted.discriminant().unwrap(), f.discriminant().unwrap());
        prop_assert!(t.eta >= 0 && t.eta < deg as i64);
        let tr = -t.shifted.coeff(deg - 1);
        prop_assert_eq!(tr, Rational::from(t.eta.clone()));
    }
}

#[test]
fn cross_ratio_orbits_are_closed() {
    for roots in [[0i64, 1, 3, 7, 12], [-2, 0, 1, 5, 9]] {
        let f = RationalPolynomial::from_roots(&roots.map(Rational::from));
        let s = cross_ratio_set(&f).unwrap();
        assert!(s.exact);
        let vals = s.rational_values();
        for v in &vals {
            assert!(vals.contains(&Rational::from(1 - v.clone())));
            assert!(vals.contains(&Rational::from(v.recip_ref())));
        }
    }
}
