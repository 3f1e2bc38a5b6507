use std::sync::Arc;

use lie_algebroid::algebroid::Morphism;
use lie_algebroid::catalogue;
use lie_algebroid::complex::{
    bigrade, check_ac_morphism, de_components, integrability_report, nijenhuis,
    nijenhuis_tensoriality_residual, Endo,
};
use lie_algebroid::linalg::SMatrix;
use lie_algebroid::scalar::{parse_scalar, GaussRational, Scalar};
use lie_algebroid::tensor::{Form, Multivector};
use lie_algebroid::Error;

#[test]
fn make_ac_structure_examples() {
    let a = Arc::new(catalogue::abelian(2));
    let ring = a.ring().clone();
    assert!(Endo::almost_complex(
        a.clone(),
        SMatrix::from_ints(&ring, &[vec![0, -1], vec![1, 0]])
    )
    .is_ok());
    let err = Endo::almost_complex(
        a.clone(),
        SMatrix::from_ints(&ring, &[vec![1, 0], vec![0, 1]]),
    )
    .unwrap_err();
    assert!(matches!(
        err,
        Error::NotAlmostComplex { row: 1, col: 1, .. }
    ));
    for n in 1..=3 {
        assert!(Endo::standard(Arc::new(catalogue::sphere(n))).is_ok());
    }
}

#[test]
fn projector_algebra() {
    let s = Arc::new(catalogue::sphere(2));
    let j = Endo::standard(s.clone()).unwrap();
    let (p10, p01) = (j.p10(), j.p01());
    let id = SMatrix::identity(s.ring(), 4);
    assert_eq!(p10.add(&p01), id);
    assert_eq!(p10.mul(&p10), p10);
    assert_eq!(p01.mul(&p01), p01);
    assert!(p10.mul(&p01).is_zero());
}

/// Independent oracle: in the complexified 2-dim space, the (1,0) vector is z = e1 - i e2 (J e1 = e2),
/// and e1 = (z + zbar)/2, e2 = i(z - zbar)/2, so
/// e1^e2 = (i/4)(z + zbar)^(z - zbar) = (i/4)(-z^zbar + zbar^z) = -(i/2) z^zbar, purely (1,1).
#[test]
fn bigrade_rank_two_bivector() {
    let a = Arc::new(catalogue::abelian(2));
    let j = Endo::standard(a.clone()).unwrap();
    let e12 = a.mv(&[0, 1]);
    let t = bigrade(&j, &e12);
    assert_eq!(t.bidegrees(), vec![(1, 1)]);
    assert_eq!(t.sum(&a.zero_mv(2)), e12);
    // Degree 1: (1,0)-part of e1 is (e1 - iJe1)/2.
    let t1 = bigrade(&j, &a.e(0));
    let i_half = GaussRational::new(0.into(), num_rational::Ratio::new(1, 2));
    let expected10 = a
        .e(0)
        .scale_const(&GaussRational::frac(1, 2))
        .sub(&a.e(1).scale_const(&i_half));
    assert_eq!(t1.get(1, 0).unwrap(), &expected10);
    // Slot eigen-equation: derivation action of J on a (p,q) tensor is i(p - q) times it.
    for ((p, q), piece) in &bigrade(&j, &a.e(0)).components {
        let lam = GaussRational::new(0.into(), ((*p as i128) - (*q as i128)).into());
        assert_eq!(j.derivation(piece), piece.scale_const(&lam));
    }
}

#[test]
fn bigrade_of_real_tensors_conjugates() {
    let s = Arc::new(catalogue::sphere(2));
    let j = Endo::standard(s.clone()).unwrap();
    let ring = s.ring().clone();
    let mut w = Form::zero(&ring, 4, 2);
    w.add_term(&[0, 1], parse_scalar(&ring, "x1*x3").unwrap());
    w.add_term(&[1, 3], parse_scalar(&ring, "x4 - 2").unwrap());
    w.add_term(&[0, 2], Scalar::one(&ring));
    let t = bigrade(&j, &w);
    assert_eq!(t.sum(&s.zero_form(2)), w);
    for (&(p, q), piece) in &t.components {
        let mirror = t.get(q, p).cloned().unwrap_or_else(|| s.zero_form(2));
        assert_eq!(piece.conj(), mirror);
        // (p,q)-forms: J* derivation eigenvalue i(p - q).
        let lam = GaussRational::new(0.into(), ((p as i128) - (q as i128)).into());
        assert_eq!(j.derivation(piece), piece.scale_const(&lam));
    }
}

#[test]
fn nijenhuis_examples() {
    assert!(nijenhuis(&Endo::standard(Arc::new(catalogue::abelian(4))).unwrap()).is_zero());
    for n in 1..=3 {
        assert!(nijenhuis(&Endo::standard(Arc::new(catalogue::sphere(n))).unwrap()).is_zero());
    }
    // Brute-force oracle for [e1,e2] = e3 with J e1 = e3, J e2 = e4 (block J0):
    // N(e1,e2) = [e3,e4] - J[e1,e4] - J[e3,e2] - [e1,e2] = -e3.
    let h = Arc::new(catalogue::heisenberg());
    let j = Endo::standard(h.clone()).unwrap();
    let n = nijenhuis(&j);
    assert_eq!(n.at(0, 1), &h.e(2).neg());
    // N(e1,e4) = [e3,-e2] - J[e1,-e2] - J[e3,e4] - [e1,e4] = J e3 = -e1.
    assert_eq!(n.at(0, 3), &h.e(0).neg());
    // N(e2,e3) = [e4,-e1] - J[e2,-e1] - J[e4,e3] - 0 = -J e3 = e1.
    assert_eq!(n.at(1, 2), &h.e(0));
    // N(e3,e4) = [e1,e2] = e3.
    assert_eq!(n.at(2, 3), &h.e(2));
}

#[test]
fn nijenhuis_is_tensorial_on_sphere() {
    let s = Arc::new(catalogue::sphere(2));
    let j = Endo::standard(s.clone()).unwrap();
    let f = parse_scalar(s.ring(), "x1*x2 + x3").unwrap();
    assert!(nijenhuis_tensoriality_residual(&j, &f).is_empty());
    // A non-constant non-integrable endomorphism is still tensorial.
    let ring = s.ring().clone();
    let g = Endo::new(
        s.clone(),
        SMatrix::from_fn(&ring, 4, 4, |a, b| {
            if a == b {
                Scalar::var(&ring, a)
            } else {
                Scalar::zero(&ring)
            }
        }),
    )
    .unwrap();
    assert!(nijenhuis_tensoriality_residual(&g, &f).is_empty());
}

#[test]
fn integrability_reports() {
    for alg in [
        catalogue::sphere(2),
        catalogue::abelian(4),
        catalogue::tangent_r4(),
    ] {
        let j = Endo::standard(Arc::new(alg)).unwrap();
        let r = integrability_report(&j).unwrap();
        assert_eq!(r.items(), [true; 5]);
    }
    let j = Endo::standard(Arc::new(catalogue::heisenberg())).unwrap();
    let r = integrability_report(&j).unwrap();
    assert_eq!(r.items(), [false; 5]);
}

#[test]
fn de_components_on_integrable_sphere() {
    let s = Arc::new(catalogue::sphere(2));
    let j = Endo::standard(s.clone()).unwrap();
    let ring = s.ring().clone();
    let c = de_components(&j, &s.function_form(Scalar::int(&ring, 3))).unwrap();
    assert!(c.d.is_zero() && c.dbar.is_zero());
    let w = s.function_form(parse_scalar(&ring, "x1*x4").unwrap());
    let c = de_components(&j, &w).unwrap();
    assert!(c.d_prime.is_zero() && c.d_second.is_zero());
    assert_eq!(c.d.add(&c.dbar), s.d(&w));
    let w10 = j.form_part10(&s.th(0).scale(&Scalar::var(&ring, 2)));
    let c = de_components(&j, &w10).unwrap();
    assert_eq!(c.bidegree, (1, 0));
    assert!(c.d_prime.is_zero() && c.d_second.is_zero());
    // Mixed forms are rejected.
    assert!(matches!(
        de_components(&j, &s.th(0)),
        Err(Error::NotPure(_))
    ));
}

#[test]
fn ac_morphisms() {
    let a = Arc::new(catalogue::abelian(2));
    let ring = a.ring().clone();
    let j = Endo::standard(a.clone()).unwrap();
    let id = Morphism::identity(a.clone());
    assert!(check_ac_morphism(&id, &j, &j).unwrap().is_almost_complex());
    // J commutes with itself and is a morphism of the abelian algebra.
    let phi = Morphism::new(a.clone(), a.clone(), j.matrix().clone()).unwrap();
    assert!(check_ac_morphism(&phi, &j, &j).unwrap().is_almost_complex());
    let flip = Morphism::new(
        a.clone(),
        a.clone(),
        SMatrix::from_ints(&ring, &[vec![1, 0], vec![0, -1]]),
    )
    .unwrap();
    assert!(!check_ac_morphism(&flip, &j, &j)
        .unwrap()
        .is_almost_complex());
    let _ = Multivector::tuples(2, 1);
}
