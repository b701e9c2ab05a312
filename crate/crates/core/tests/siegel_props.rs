mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use szpiro_core::siegel::lemmas::weighted_log_delta;
use szpiro_core::siegel::reduce::is_reduced;
use szpiro_core::siegel::{
    delta_characteristics, reduce_to_fundamental, theta_constant, verify_lemfg, verify_lemma_transform,
    ThetaCharacteristic,
};

#[test]
fn transformation_identity_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for g in [1usize, 2] {
        for _ in 0..12 {
            let tau = common::random_reduced_tau(g, &mut rng);
            let len = rng.gen_range(1..5);
            let sigma = common::random_sp(g, &mut rng, len);
            let v = verify_lemma_transform(&sigma, &tau).unwrap();
            assert!(v.pass, "g={g}: {v}");
        }
    }
}

#[test]
fn reduction_preserves_weighted_delta() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..15 {
        let tau = common::random_tau(2, &mut rng);
        let (red, sigma) = reduce_to_fundamental(&tau).unwrap();
        assert!(is_reduced(&red, 1e-9));
        assert!(sigma.is_symplectic());
        let a = weighted_log_delta(&tau).unwrap();
        let b = weighted_log_delta(&red).unwrap();
        assert!((a - b).abs() < 1e-8 * a.abs().max(1.0), "{a} {b}");
        let (again, _) = reduce_to_fundamental(&red).unwrap();
        assert!(again.matrix().max_dist(red.matrix()) < 1e-20);
    }
}

#[test]
fn odd_thetas_vanish_and_even_do_not() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..5 {
        let tau = common::random_reduced_tau(2, &mut rng);
        for a in 0..4i64 {
            for b in 0..4i64 {
                let c = ThetaCharacteristic::from_doubled(&[a & 1, a >> 1], &[b & 1, b >> 1]);
                let t = theta_constant(&c, &tau).unwrap().abs().to_f64();
                if c.is_even() {
                    assert!(t > 1e-3, "{c:?}");
                } else {
                    assert!(t < 1e-28, "{c:?}: {t}");
                }
            }
        }
    }
    assert_eq!(delta_characteristics(2).len(), 10);
    assert!(delta_characteristics(2).iter().all(|c| c.is_even()));
}

#[test]
fn lemfg_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..40 {
        let tau = common::random_reduced_tau(2, &mut rng);
        assert!(verify_lemfg(&tau).unwrap().pass);
    }
}
