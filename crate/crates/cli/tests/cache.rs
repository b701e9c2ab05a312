use rug::Integer;
use szpiro_cli::cache::{model_key, Cache};
use szpiro_core::elliptic::{global_invariants, EllipticModel};

fn ints(v: [i64; 5]) -> [Integer; 5] {
    v.map(Integer::from)
}

#[test]
fn store_then_load_is_identity() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    for a in [[0, -1, 1, -10, -20], [0, 0, 1, 0, 0], [1, -1, 1, -14, 29], [0, 0, 0, -1, 0]] {
        let a = ints(a);
        let g = global_invariants(&EllipticModel::from_integers(&a).unwrap()).unwrap();
        assert!(cache.load(&a).is_none());
        cache.store(&a, &g).unwrap();
        assert_eq!(cache.load(&a).unwrap(), g);
    }
}

#[test]
fn key_is_stable() {
    let a = ints([0, -1, 1, -10, -20]);
    assert_eq!(model_key(&a), model_key(&a.clone()));
    assert_eq!(model_key(&a).len(), 64);
    // sha256("0,-1,1,-10,-20")
    let text = "0,-1,1,-10,-20";
    use sha2::Digest;
    let expect: String = sha2::Sha256::digest(text).iter().map(|b| format!("{b:02x}")).collect();
    assert_eq!(model_key(&a), expect);
    assert_ne!(model_key(&a), model_key(&ints([0, -1, 1, -10, -21])));
}

#[test]
fn corrupt_entry_is_recomputed_and_overwritten() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let a = ints([0, 0, 1, -1, 0]);
    let model = EllipticModel::from_integers(&a).unwrap();
    std::fs::write(cache.path(&a), "{ not json").unwrap();
    assert!(cache.load(&a).is_none());
    let (g, hit) = cache.get_or_compute(&a, &model).unwrap();
    assert!(!hit);
    let (g2, hit2) = cache.get_or_compute(&a, &model).unwrap();
    assert!(hit2);
    assert_eq!(g, g2);
}

#[test]
fn entry_for_another_model_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let a = ints([0, 0, 1, -1, 0]);
    let b = ints([0, -1, 1, 0, 0]);
    let gb = global_invariants(&EllipticModel::from_integers(&b).unwrap()).unwrap();
    cache.store(&b, &gb).unwrap();
    std::fs::copy(cache.path(&b), cache.path(&a)).unwrap();
    assert!(cache.load(&a).is_none());
}
