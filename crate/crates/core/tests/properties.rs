use std::sync::Arc;

use lie_algebroid::catalogue;
use lie_algebroid::properties::*;
use lie_algebroid::scalar::{
    sample_points, CoordinateRing, GaussRational, Monomial, Scalar, Terms,
};
use num_rational::Ratio;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(0x5eed),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

type RawTerm = (i64, i64, i64, [u16; 4]);

fn raw_terms() -> impl Strategy<Value = Vec<RawTerm>> {
    prop::collection::vec(
        (
            -3i64..=3,
            -2i64..=2,
            1i64..=3,
            [0u16..=3, 0u16..=3, 0u16..=3, 0u16..=3],
        ),
        0..5,
    )
}

fn terms_of(raw: &[RawTerm]) -> Terms {
    let mut t = Terms::new();
    for (re, im, den, e) in raw {
        let c = GaussRational::new(
            Ratio::new(*re as i128, *den as i128),
            Ratio::new(*im as i128, *den as i128),
        );
        let slot = t
            .entry(Monomial(e.iter().copied().collect()))
            .or_insert_with(|| GaussRational::from_int(0));
        *slot += &c;
    }
    t.retain(|_, c| *c != GaussRational::from_int(0));
    t
}

fn sphere_ring() -> Arc<CoordinateRing> {
    catalogue::sphere_ring(2)
}

fn free_ring() -> Arc<CoordinateRing> {
    CoordinateRing::free(&["x1", "x2", "x3", "x4"])
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn reduction_is_a_ring_homomorphism(a in raw_terms(), b in raw_terms()) {
        let (ring, free) = (sphere_ring(), free_ring());
        let (fa, fb) = (Scalar::from_terms(&free, terms_of(&a)), Scalar::from_terms(&free, terms_of(&b)));
        let (ra, rb) = (Scalar::from_terms(&ring, terms_of(&a)), Scalar::from_terms(&ring, terms_of(&b)));
        prop_assert_eq!(Scalar::from_terms(&ring, (&fa + &fb).terms().clone()), &ra + &rb);
        prop_assert_eq!(Scalar::from_terms(&ring, (&fa * &fb).terms().clone()), &ra * &rb);
        prop_assert_eq!(ring.reduce(ra.terms().clone()), ra.terms().clone());
        prop_assert_eq!(ra.conj().conj(), ra.clone());
    }

    #[test]
    fn normal_forms_agree_pointwise(a in raw_terms(), seed in any::<u64>()) {
        let (ring, free) = (sphere_ring(), free_ring());
        let raw = Scalar::from_terms(&free, terms_of(&a));
        let reduced = Scalar::from_terms(&ring, terms_of(&a));
        for pt in sample_points(&ring, 5, seed).unwrap() {
            prop_assert_eq!(reduced.eval(&pt).unwrap(), raw.eval_unchecked(&pt));
        }
    }
}

proptest! {
    #![proptest_config(config(6))]

    #[test]
    fn suites_hold_for_arbitrary_seeds(seed in any::<u64>()) {
        let sizes = SuiteSizes {
            d_squared: 8, schouten: 6, bidegree: 6, del: 4, sigma: 2, corollary: 4, dual: 3, form_bracket: 3,
        };
        for o in run_all(&standard_instances(), sizes, seed) {
            prop_assert!(o.passed(), "{}", o);
        }
    }
}

#[test]
fn property_suites_hold_on_the_catalogue() {
    let inst = standard_instances();
    assert!(instances_are_acp(&inst));
    let sizes = SuiteSizes {
        bidegree: 24,
        sigma: 10,
        dual: 15,
        form_bracket: 15,
        ..SuiteSizes::default()
    };
    for o in run_all(&inst, sizes, lie_algebroid::cli::DEFAULT_SEED) {
        println!("{}", o);
        assert!(o.passed(), "{}", o);
    }
}

#[test]
fn bidegree_bounds_are_sharp_without_integrability() {
    // Heisenberg's standard structure is not integrable, so outer components must be allowed.
    let inst = standard_instances()
        .into_iter()
        .find(|i| i.name() == "heisenberg")
        .unwrap();
    let mut strict = inst.clone();
    strict
        .complex
        .retain(|j| !lie_algebroid::complex::nijenhuis(j).is_zero());
    assert_eq!(strict.complex.len(), 1);
    assert!(bidegree_bounds(&strict, 30, 1).passed());
    let z = holomorphic_frame(&strict.complex[0]);
    let br = strict.algebroid.schouten(&z[0], &z[1]);
    let table = lie_algebroid::complex::bigrade(&strict.complex[0], &br);
    assert!(table.bidegrees().contains(&(0, 1)));
}

#[test]
fn suites_report_failures() {
    let mut inst = standard_instances()
        .into_iter()
        .find(|i| i.name() == "so3")
        .unwrap();
    let alg = inst.algebroid.clone();
    inst.poisson = alg.mv(&[0, 1]);
    let o = dual_consistency(&inst, 3, 0);
    assert!(!o.passed());
    assert!(o.to_string().contains("FAILED"));
}
