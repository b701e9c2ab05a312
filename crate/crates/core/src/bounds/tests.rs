use super::*;
use crate::elliptic::{global_invariants, EllipticModel};
use crate::exactmath::LogMagnitude;
use rug::Integer;

fn q() -> FieldContext {
    FieldContext::rationals()
}

#[test]
fn field_context_validation() {
    assert!(FieldContext::new(1, Integer::from(5), Integer::from(1)).is_err());
    assert!(FieldContext::new(0, Integer::from(1), Integer::from(1)).is_err());
    assert!(FieldContext::new(2, Integer::from(5), Integer::from(1)).is_ok());
    assert!(FieldContext::new(2, Integer::from(5), Integer::from(10_000)).is_err());
    assert_eq!(FieldContext::parse("1,1,1").unwrap(), q());
    assert!(FieldContext::parse("1,1").is_err());
}

#[test]
fn ledger_values() {
    let l = ledger(&q(), 2);
    let c1 = l.get("c1").unwrap();
    assert!((c1.kappa.unwrap() - 65536.0 * 3f64.ln()).abs() < 1e-6);
    assert!((c1.kappa.unwrap() - 71998.66).abs() < 0.01);
    assert_eq!(ledger::kappa_liu(2), 30);
    assert_eq!(ledger::kappa_liu(1), 12);
    let c4 = l.get("c4_162").unwrap();
    assert_eq!(c4.kappa, Some(162.0));
    assert!((c4.log_c.unwrap().ln() - 324.0 * 5f64.ln()).abs() < 1e-9);
    assert!((c4.log_c.unwrap().ln() - 521.458).abs() < 1e-3);
    assert_eq!(l.get("c4_22").unwrap().kappa, Some(22.0));
    let c3 = l.get("c3").unwrap().log_c.unwrap().ln();
    assert!(c3.is_finite() && (c3 / 6.3241e16 - 1.0).abs() < 1e-3);
    for e in &l.entries {
        assert!(e.log_c.is_none_or(|c| c.ln().is_finite()), "{}", e.name);
    }
    assert!(l.default_usable().all(|e| e.is_explicit()));
    assert!(l.default_usable().all(|e| !matches!(e.name, "c2" | "c3_prime" | "c4_22" | "c6")));
    let p = LedgerParams { log_c_d: Some(1.0), ..Default::default() };
    let lp = ledger_with(&q(), 2, &p);
    assert!(lp.get("c4_22").unwrap().usable());
    assert!(lp.default_usable().all(|e| e.name != "c4_22"));
    assert!(format!("{l}").contains("parameterized(k0)"));
}

#[test]
fn exponential_szpiro_comparator() {
    let v = verify_exponential_szpiro(37f64.ln(), &Integer::from(37), 162.0, LogMagnitude::new(521.458));
    assert!(v.pass);
    let expect = 521.458 + 162.0 * 37f64.ln() - 37f64.ln().ln();
    assert!((v.margin - expect).abs() < 1e-9);
    assert!(verify_exponential_szpiro(0.0, &Integer::from(1), 162.0, LogMagnitude::new(0.0)).pass);
    let bad = verify_exponential_szpiro(1000f64.exp(), &Integer::from(2), 1.0, LogMagnitude::new(0.0));
    assert!(!bad.pass);
    assert!(verify_doubly_exponential(10.0, &Integer::from(11), 1.0, LogMagnitude::new(1.0)).pass);
    assert!(!verify_doubly_exponential(1e300, &Integer::from(3), 1.0, LogMagnitude::new(0.0)).pass);
}

#[test]
fn szpiro162_on_37a() {
    let e = EllipticModel::from_i64([0, 0, 1, -1, 0]).unwrap();
    let gi = global_invariants(&e).unwrap();
    let c = szpiro::szpiro162_check(&gi, &ledger(&q(), 1));
    assert_eq!(c.passed(), Some(true));
    let s = szpiro::conditional_check("szpiro22", "c4_22", &gi, &ledger(&q(), 1));
    assert_eq!(s.passed(), None);
}

#[test]
fn conditional_calculators() {
    let v = theorem4_iii_bound(&q(), 2.0, 2.0, 0.0, 37f64.ln());
    assert!((v - 24.0 * 37f64.ln()).abs() < 1e-12);
    assert!((v - 86.66).abs() < 0.01);
    assert_eq!(theorem4_iii_bound(&q(), 2.0, 2.0, 3.0, 0.0), 3.0);
    assert_eq!(lock_bound(&q(), 2.0, 1.0, 0.0), 1.0);
    let one = Integer::from(1);
    assert_eq!(abc_conditional_mu(&q(), 6, 1, &one, &one, 2.0, 2.0, 0.0), 6.0 * 2.0 / 6.0 * 6f64.ln());
    let six = Integer::from(6);
    let v = abc_conditional_mu(&q(), 6, 1, &six, &six, 2.0, 2.0, 0.0);
    assert!((v - (2.0 * 6f64.ln() + (11.0 / 3.0) * 6f64.ln())).abs() < 1e-12);
    assert!(abc_conditional_mu(&q(), 6, 1, &Integer::from(7), &six, 2.0, 2.0, 0.0) > v);
}

#[test]
fn frey_examples() {
    for (a, b, c) in [(1, 8, 9), (1, 1, 2), (3, 125, 128)] {
        let checks = frey_chain(&Integer::from(a), &Integer::from(b), &Integer::from(c), None).unwrap();
        assert_eq!(checks.len(), 3);
        assert_eq!(checks[0].passed(), Some(true), "{checks:?}");
        assert_eq!(checks[1].passed(), Some(true), "{checks:?}");
        assert_eq!(checks[2].passed(), None);
    }
    assert!(frey_chain(&Integer::from(1), &Integer::from(2), &Integer::from(4), None).is_err());
}

#[test]
fn units_bounds() {
    let v = gyory_yu_mu_bound(&q(), 6, &Integer::from(6)).unwrap().ln();
    let expect = 89.0 * (12f64.ln() + 6f64.ln() * 6f64.ln());
    assert!((v - expect).abs() < 1e-9);
    let one = gyory_yu_mu_bound(&q(), 1, &Integer::from(1)).unwrap().ln();
    assert!((one - 89.0 * 12f64.ln()).abs() < 1e-9);
    let p = precisebound_constants(&q(), 6, 2, 2, &Integer::from(6), 2f64.ln() * 3f64.ln(), Some(1.0)).unwrap();
    assert!((p.log_c_k - 5.0 * (3.0 * 216f64).ln()).abs() < 1e-9);
    let kt = 34.0 * 2f64.ln() + 41.0 * 3f64.ln().ln() + 126.0 * 2f64.ln();
    assert!((p.log_kappa_t - kt).abs() < 1e-9);
    assert!(p.regulator.unwrap().pass);
    assert!(precisebound_constants(&q(), 6, 0, 0, &Integer::from(1), 1.0, None).is_err());
}

#[test]
fn dedekind_table() {
    // (l, ramified primes, |D_L|)
    let fields: [(u32, &[u64], u64); 20] = [
        (2, &[2], 4),
        (2, &[2], 8),
        (2, &[3], 3),
        (2, &[5], 5),
        (2, &[7], 7),
        (2, &[2, 3], 12),
        (2, &[2, 3], 24),
        (2, &[2, 5], 20),
        (2, &[2, 5], 40),
        (2, &[2, 7], 28),
        (2, &[2, 7], 56),
        (2, &[11], 11),
        (2, &[13], 13),
        (2, &[3, 5], 15),
        (2, &[2, 3, 5], 120),
        (3, &[7], 49),
        (4, &[5], 125),
        (4, &[2], 256),
        (6, &[7], 16807),
        (4, &[2, 3], 144),
    ];
    for (l, ps, dl) in fields {
        let ns: Integer = ps.iter().map(|&p| Integer::from(p)).product();
        let b = dedekind_bound(&q(), l, ps.len() as u32, &ns).unwrap().ln();
        assert!((dl as f64).ln() <= b + 1e-12, "D_L = {dl} exceeds bound {}", b.exp());
    }
    let b = dedekind_bound(&q(), 2, 2, &Integer::from(6)).unwrap().ln();
    assert!((b - 96f64.ln()).abs() < 1e-12);
    let k = FieldContext::new(2, Integer::from(5), Integer::from(1)).unwrap();
    assert!((dedekind_bound(&k, 3, 0, &Integer::from(1)).unwrap().ln() - 3.0 * 5f64.ln()).abs() < 1e-12);
    assert!((dedekind_bound(&k, 1, 1, &Integer::from(7)).unwrap().ln() - 5f64.ln()).abs() < 1e-12);
}

#[test]
fn analytic_records() {
    let r = chebyshev_and_analytic(&q(), 0.5, &[2, 3, 5, 7, 11], None).unwrap();
    assert!((r.theta_q - 2310f64.ln()).abs() < 1e-12);
    assert_eq!((r.t, r.omega, r.q), (5, 5, 11));
    let e = chebyshev_and_analytic(&q(), 0.5, &[], Some(0.0)).unwrap();
    assert_eq!((e.t, e.log_n_t), (0, 0.0));
    assert!(e.checks.iter().all(|c| c.passed() != Some(false)));
    let w = chebyshev_and_analytic(&q(), 0.5, &[2, 3, 5, 7, 11], Some(r.log_k7_needed + 1.0)).unwrap();
    assert!(w.checks.iter().all(|c| c.passed() != Some(false)), "{:?}", w.checks);
    assert!(chebyshev_and_analytic(&q(), 0.5, &[6], None).is_err());
    assert!(chebyshev_and_analytic(&q(), 0.0, &[2], None).is_err());
}

#[test]
fn analytic_scan_small() {
    let s = scan_analytic_constants(0.5, 1, 1000);
    // brute force over all squarefree n <= 1000
    let mut k4 = 0f64;
    for n in 1u64..=1000 {
        let f = crate::exactmath::integer::factor(&Integer::from(n)).unwrap();
        if f.iter().any(|(_, e)| *e > 1) {
            continue;
        }
        k4 = k4.max(f.len() as f64 - 0.5 * (n as f64).ln());
    }
    assert!((s.k4 - k4).abs() < 1e-12);
    assert!(s.certified_range.contains("1000"));
}
