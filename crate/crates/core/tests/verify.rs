use class_spectrum::verify::{check_omega_lemma_with, omega_sweep, Verdict, Verifier};
use class_spectrum::GroupKind;

#[test]
fn scan_is_deterministic_and_certificates_validate() {
    let v = Verifier::new(400);
    let one = v.scan(23, 400, &GroupKind::ALL, 1).unwrap();
    let many = v.scan(23, 400, &GroupKind::ALL, 8).unwrap();
    assert_eq!(one.summary, many.summary);
    assert_eq!(one.certificates.len(), 2 * 378);
    for (a, b) in one.certificates.iter().zip(&many.certificates) {
        assert_eq!(a.without_timing(), b.without_timing());
        a.validate().unwrap();
    }
    assert!(one.summary.all_pass());
}

#[test]
fn rerun_is_byte_identical_without_timing() {
    let v = Verifier::new(1345);
    let a = v.check_case(1345, GroupKind::Sym).unwrap();
    let b = Verifier::new(1345).check_case(1345, GroupKind::Sym).unwrap();
    let json = |c: &class_spectrum::Certificate| serde_json::to_string(&c.without_timing()).unwrap();
    assert_eq!(json(&a), json(&b));
    // largest residual support in the classical range
    assert_eq!(a.support_m, 18);
    assert!(a.h_value <= a.h_sum_bound);
}

#[test]
fn prime_degrees_always_pass_the_omega_check() {
    let v = Verifier::new(50_000);
    for n in 3..=50_000u64 {
        if v.table().is_prime(n) {
            let c = check_omega_lemma_with(v.table(), n).unwrap();
            assert_eq!(c.ratio, 1u32.into());
            assert_eq!(c.verdict, Verdict::Pass);
        }
    }
}

#[test]
fn omega_inequality_failures_stop_at_5778() {
    let s = omega_sweep(1000, 1_000_000, 4).unwrap();
    assert!(s.failures.contains(&1360));
    assert!(!s.failures.contains(&1361) && !s.failures.contains(&1362));
    // the first failure past 1361 follows the prime 1381
    let above: Vec<u64> = s.failures.iter().copied().filter(|&n| n > 1361).collect();
    assert_eq!(above.first(), Some(&1391));
    assert_eq!(above.last(), Some(&5778));
    assert_eq!(above.len(), 202);
}
