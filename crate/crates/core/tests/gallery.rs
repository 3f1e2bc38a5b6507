use lie_algebroid::gallery::*;
use lie_algebroid::scalar::{GaussRational, Scalar};
use lie_algebroid::Error;

#[test]
fn sphere_instances() {
    for n in 1..=3 {
        let s = SphereInstance::new(n).unwrap();
        assert_eq!(s.algebroid.rank(), 2 * n);
        let checks = s.checks().unwrap();
        assert!(checks.structure_equations && checks.j_integrable);
        // J~ fails Jacobi once the rank exceeds two
        assert_eq!(checks.jtilde_poisson, n == 1);
    }
    let s = SphereInstance::new(1).unwrap();
    let a = &s.algebroid;
    let (x1, x2) = (Scalar::var(a.ring(), 0), Scalar::var(a.ring(), 1));
    assert_eq!(
        a.bracket(&a.e(0), &a.e(1)),
        a.e(0).scale(&x2).neg().add(&a.e(1).scale(&x1))
    );
    assert!(matches!(
        SphereInstance::new(0),
        Err(Error::PreconditionFailed(_))
    ));
}

#[test]
fn golden_formulas_hold_for_small_n() {
    for n in 1..=3 {
        let rep = golden_check(n).unwrap();
        assert!(rep.formulas_ok(), "{}", rep);
        let counts = rep.family_counts();
        assert_eq!(counts["bracket"].1, 4 * n * n);
        assert_eq!(counts["deformed"].1, n * n);
        assert_eq!(counts.contains_key("matrix"), n == 2);
    }
}

#[test]
fn golden_check_detects_a_wrong_formula() {
    let tampered = GOLDEN.replace(
        "jjtilde     e^a    e^b+n   | +1 x_a e^b+n",
        "jjtilde     e^a    e^b+n   | -1 x_a e^b+n",
    );
    assert_ne!(tampered, GOLDEN);
    let rep = golden_check_with(2, &tampered).unwrap();
    assert!(!rep.formulas_ok());
    assert_eq!(rep.mismatches().count(), 4);
    assert!(matches!(
        golden_check_with(1, "bogus e_a e_b | 1 y_a e_b"),
        Err(Error::Parse(_))
    ));
    assert!(matches!(
        golden_check_with(1, "nope e_a e_b | 1 x_a e_b"),
        Err(Error::Parse(_))
    ));
}

#[test]
fn n2_matrix() {
    let m = reproduce_n2_matrix().unwrap();
    assert_eq!(m.transpose(), m.neg());
    let r = m.ring();
    let want = &(&Scalar::var(r, 0).pow(2) + &Scalar::var(r, 2).pow(2)) - &Scalar::int(r, 1);
    assert_eq!(m.get(0, 2), &want);
    let pt = [
        GaussRational::frac(3, 5),
        GaussRational::from_int(0),
        GaussRational::from_int(0),
        GaussRational::frac(4, 5),
    ];
    assert_eq!(m.get(0, 1).eval(&pt).unwrap(), GaussRational::frac(-12, 25));
}

#[test]
fn compatibility_dichotomy() {
    for n in 1..=3 {
        let rep = SphereInstance::new(n).unwrap().compat_report().unwrap();
        assert!(rep.defect_matches, "{}", rep);
        assert!(!rep.plus.is_compatible());
        // both conditions are linear in the bisection, so -J~ cannot repair n = 1 either
        assert!(!rep.minus.is_compatible());
        assert!(rep.plus.sharp_commutes && rep.minus.sharp_commutes);
    }
}

#[test]
fn foliation_ranks() {
    for (n, count) in [(1, 20), (2, 25), (3, 25)] {
        let hist = foliation_rank_survey(n, count, 7).unwrap();
        assert_eq!(hist.len(), 1);
        assert_eq!(hist.get(&(2 * n - 2)), Some(&count));
    }
    assert!(foliation_rank_survey(2, 0, 7).is_err());
}
