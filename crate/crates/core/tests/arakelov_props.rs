mod common;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use szpiro_core::arakelov::{faltings_delta_genus2, normalized_theta, verify_dejong, NormalizedThetaContext};

#[test]
fn lattice_invariance_random_tau() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..5 {
        let tau = common::random_reduced_tau(2, &mut rng);
        let ctx = NormalizedThetaContext::new(&tau).unwrap();
        let t: Vec<Complex64> = tau.matrix().data.iter().map(|c| c.to_c64()).collect();
        for _ in 0..10 {
            let z = [Complex64::new(rng.gen(), rng.gen()), Complex64::new(rng.gen(), rng.gen())];
            let a = normalized_theta(&z, &ctx);
            let b = normalized_theta(&[z[0] + t[1], z[1] + t[3]], &ctx);
            let c = normalized_theta(&[z[0] - 1.0, z[1] + 2.0], &ctx);
            assert!((a - b).abs() < 1e-10 && (a - c).abs() < 1e-10, "{a} {b} {c}");
        }
    }
}

#[test]
fn dejong_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for g in [1, 2] {
        for _ in 0..20 {
            let tau = common::random_reduced_tau(g, &mut rng);
            assert!(verify_dejong(&tau).unwrap().pass);
        }
    }
}

#[test]
fn delta_symplectic_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let tau = common::random_reduced_tau(2, &mut rng);
    let base = faltings_delta_genus2(&tau, 20_000, 1).unwrap();
    assert!(base.lower_bound_check().pass);
    for k in 0..3 {
        let sigma = common::random_sp(2, &mut rng, 3);
        let moved = sigma.act(&tau).unwrap();
        let r = faltings_delta_genus2(&moved, 20_000, 100 + k).unwrap();
        let s = (base.delta_stderr.powi(2) + r.delta_stderr.powi(2)).sqrt();
        assert!((base.delta - r.delta).abs() <= 3.0 * s + 1e-9, "{} vs {}", base.delta, r.delta);
    }
}

#[test]
fn delta_reproducible_per_seed() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let tau = common::random_reduced_tau(2, &mut rng);
    let a = faltings_delta_genus2(&tau, 10_000, 9).unwrap();
    let b = faltings_delta_genus2(&tau, 10_000, 9).unwrap();
    let c = faltings_delta_genus2(&tau, 10_000, 10).unwrap();
    assert_eq!(a, b);
    assert_ne!(a.log_h.value, c.log_h.value);
    assert!(a.recomposition_residual().abs() < 1e-12);
}
