#![allow(clippy::needless_range_loop)]

use std::sync::Arc;

use lie_algebroid::algebroid::{Algebroid, Morphism};
use lie_algebroid::catalogue;
use lie_algebroid::complex::{nijenhuis, Endo};
use lie_algebroid::constructions::*;
use lie_algebroid::linalg::SMatrix;
use lie_algebroid::poisson::is_acp;
use lie_algebroid::random::Sampler;
use lie_algebroid::scalar::{GaussRational, Scalar};
use lie_algebroid::tensor::Multivector;
use lie_algebroid::Error;

fn gi() -> GaussRational {
    GaussRational::i()
}

fn q(n: i128, d: i128) -> GaussRational {
    GaussRational::frac(n, d)
}

fn arc(a: Algebroid) -> Arc<Algebroid> {
    Arc::new(a)
}

fn const_matrix(alg: &Algebroid, rows: &[&[i128]]) -> SMatrix {
    SMatrix::from_fn(alg.ring(), rows.len(), rows[0].len(), |r, c| {
        Scalar::int(alg.ring(), rows[r][c])
    })
}

/// `z_k = e_{2k-1} - i J e_{2k-1}` for a paired structure.
fn holo(j: &Endo, k: usize) -> Multivector {
    let alg = j.parent();
    let e = alg.e(2 * k);
    e.sub(&j.apply(&e).scale_const(&gi()))
}

fn abelian4_data() -> (Arc<Algebroid>, Endo, Multivector) {
    let a = arc(catalogue::abelian(4));
    let j = Endo::paired(a.clone()).unwrap();
    let pi = holo(&j, 0).wedge(&holo(&j, 1));
    (a, j, pi)
}

fn heisenberg_data() -> (Arc<Algebroid>, Endo, Multivector) {
    let a = arc(catalogue::heisenberg());
    let j = Endo::paired(a.clone()).unwrap();
    let pi = holo(&j, 0).wedge(&holo(&j, 1));
    (a, j, pi)
}

fn random_constant_connection(alg: &Arc<Algebroid>, seed: u64) -> Connection {
    let mut sm = Sampler::new(alg, seed);
    let m = alg.rank();
    let coeffs: Vec<Scalar> = (0..m * m * m).map(|_| sm.constant()).collect();
    Connection::new(alg.clone(), coeffs).unwrap()
}

#[test]
fn prolongation_examples() {
    let p = prolong(&arc(catalogue::abelian(2))).unwrap();
    let t = p.total();
    assert_eq!(t.rank(), 4);
    assert_eq!(t.ring().names(), &["y1".to_string(), "y2".to_string()]);
    for a in 0..4 {
        for b in 0..4 {
            assert!(t.bracket(&t.e(a), &t.e(b)).is_zero());
        }
    }
    assert!(t.anchor().get(2, 0).is_one() && t.anchor().get(3, 1).is_one());
    assert!(t.anchor().get(0, 0).is_zero());

    let p = prolong(&arc(catalogue::so3())).unwrap();
    assert_eq!(p.total().rank(), 6);
    assert_eq!(p.total().bracket(&p.x(0), &p.x(1)), p.x(2));
    assert!(p.total().bracket(&p.x(0), &p.v(1)).is_zero());

    let p = prolong(&arc(catalogue::sphere(1))).unwrap();
    assert_eq!(p.total().rank(), 4);
    assert_eq!(p.total().ring().nvars(), 4);
    assert_eq!(p.fiber_var(0).to_string(), "y1");
}

#[test]
fn prolongation_avoids_taken_fiber_names() {
    let ring = lie_algebroid::scalar::CoordinateRing::free(&["y1", "y2"]);
    let anchor = SMatrix::identity(&ring, 2);
    let a = Algebroid::new("ty", &ring, 2, anchor, |_, _, _| Scalar::zero(&ring)).unwrap();
    let p = prolong(&arc(a)).unwrap();
    assert_eq!(p.fiber_var(1).to_string(), "v2");
}

#[test]
fn vertical_and_complete_frame_lifts() {
    let so3 = arc(catalogue::so3());
    let p = prolong(&so3).unwrap();
    for a in 0..3 {
        assert_eq!(p.vlift(&so3.e(a)), p.v(a));
    }
    // e1^c = X1 - C^b_{1c} y^c V_b = X1 - y2 V3 + y3 V2
    let mut expected = p.x(0);
    expected.add_term(&[5], -&p.fiber_var(1));
    expected.add_term(&[4], p.fiber_var(2));
    assert_eq!(p.clift(&so3.e(0)), expected);

    let s1 = arc(catalogue::sphere(1));
    let p = prolong(&s1).unwrap();
    let f = Scalar::var(s1.ring(), 0);
    let s = s1.e(1).scale(&f);
    assert_eq!(p.vlift(&s), p.v(1).scale(&p.lift_fn(&f)));
    // degree-one complete lift formula with nonconstant components
    let m = 2;
    let sv = s.vector();
    let mut direct = p.total().zero_mv(1);
    for a in 0..m {
        direct = direct.add(&p.x(a).scale(&p.lift_fn(&sv[a])));
        let mut coef = Scalar::zero(p.total().ring());
        for c in 0..m {
            let mut inner = s1.rho(c, &sv[a]);
            for b in 0..m {
                inner = &inner - &(s1.c(b, c, a) * &sv[b]);
            }
            coef = &coef + &(&p.lift_fn(&inner) * &p.fiber_var(c));
        }
        direct = direct.add(&p.v(a).scale(&coef));
    }
    assert_eq!(p.clift(&s), direct);
}

#[test]
fn lift_bracket_laws() {
    for alg in [
        catalogue::so3(),
        catalogue::sphere(1),
        catalogue::heisenberg(),
    ] {
        let alg = arc(alg);
        let p = prolong(&alg).unwrap();
        let t = p.total();
        let mut sm = Sampler::new(&alg, 5).with_degree(1);
        for _ in 0..3 {
            let (s, u) = (sm.mv(1), sm.mv(1));
            let br = alg.bracket(&s, &u);
            assert!(t.bracket(&p.vlift(&s), &p.vlift(&u)).is_zero());
            assert_eq!(t.bracket(&p.vlift(&s), &p.clift(&u)), p.vlift(&br));
            assert_eq!(t.bracket(&p.clift(&s), &p.clift(&u)), p.clift(&br));
            // recursion on a decomposable bivector
            let w = s.wedge(&u);
            assert_eq!(
                p.clift(&w),
                p.clift(&s)
                    .wedge(&p.vlift(&u))
                    .add(&p.vlift(&s).wedge(&p.clift(&u)))
            );
            assert_eq!(p.vlift(&w), p.vlift(&s).wedge(&p.vlift(&u)));
        }
    }
}

#[test]
fn complete_lift_commutes_with_schouten() {
    let so3 = arc(catalogue::so3());
    let p = prolong(&so3).unwrap();
    let mut sm = Sampler::new(&so3, 17);
    for (ds, dt) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        for _ in 0..3 {
            let (s, t) = (sm.mv(ds), sm.mv(dt));
            let lhs = p.clift(&so3.schouten(&s, &t));
            let rhs = p.total().schouten(&p.clift(&s), &p.clift(&t));
            assert_eq!(lhs, rhs, "degrees ({}, {})", ds, dt);
        }
    }
}

#[test]
fn complete_lift_of_constant_structure_on_abelian_is_block_diagonal() {
    let (a, j, _) = abelian4_data();
    let p = prolong(&a).unwrap();
    let jc = clift_endo(&p, &j).unwrap();
    for r in 0..8 {
        for c in 0..8 {
            let expected = match (r < 4, c < 4) {
                (true, true) => j.matrix().get(r, c).clone(),
                (false, false) => j.matrix().get(r - 4, c - 4).clone(),
                _ => Scalar::zero(a.ring()),
            };
            assert_eq!(jc.matrix().get(r, c), &p.lift_fn(&expected));
        }
    }
}

#[test]
fn complete_lift_of_endomorphisms() {
    let cases: Vec<Endo> = vec![
        Endo::standard(arc(catalogue::sphere(1))).unwrap(),
        Endo::paired(arc(catalogue::heisenberg())).unwrap(),
        Endo::standard(arc(catalogue::heisenberg())).unwrap(),
        Endo::standard(arc(catalogue::tangent_r4())).unwrap(),
    ];
    for j in &cases {
        let alg = j.parent().clone();
        let p = prolong(&alg).unwrap();
        let jc = clift_endo(&p, j).unwrap();
        assert!(jc.is_almost_complex());
        let n = nijenhuis(j);
        let nc = nijenhuis(&jc);
        let mut sm = Sampler::new(&alg, 23).with_degree(1);
        for _ in 0..2 {
            let s = sm.mv(1);
            assert_eq!(jc.apply(&p.vlift(&s)), p.vlift(&j.apply(&s)));
            assert_eq!(jc.apply(&p.clift(&s)), p.clift(&j.apply(&s)));
        }
        for a in 0..alg.rank() {
            for b in 0..alg.rank() {
                let (s, t) = (alg.e(a), alg.e(b));
                let lhs = nc.eval(p.total(), &p.clift(&s), &p.clift(&t));
                assert_eq!(lhs, p.clift(&n.eval(&alg, &s, &t)));
            }
        }
        assert_eq!(nc.is_zero(), n.is_zero());
    }
    let sphere = &cases[0];
    let p = prolong(sphere.parent()).unwrap();
    assert!(nijenhuis(&clift_endo(&p, sphere).unwrap()).is_zero());
}

/// The lower-left block `K^a_b = (rho_c(J^a_b) - C^a_{db} J^d_c) y^c` as printed in the source
/// does not square to `-1` on Heisenberg; the commutator form `[J, ad_y]` does.
#[test]
fn printed_complete_lift_block_is_not_almost_complex() {
    let (alg, j, _) = heisenberg_data();
    let p = prolong(&alg).unwrap();
    let m = alg.rank();
    let ring = p.total().ring().clone();
    let jm = j.matrix();
    let mut mat = SMatrix::zeros(&ring, 2 * m, 2 * m);
    for a in 0..m {
        for b in 0..m {
            mat.set(a, b, p.lift_fn(jm.get(a, b)));
            mat.set(m + a, m + b, p.lift_fn(jm.get(a, b)));
            let mut k = Scalar::zero(&ring);
            for c in 0..m {
                let mut coef = alg.rho(c, jm.get(a, b));
                for d in 0..m {
                    coef = &coef - &(alg.c(d, b, a) * jm.get(d, c));
                }
                k = &k + &(&p.lift_fn(&coef) * &p.fiber_var(c));
            }
            mat.set(m + a, b, k);
        }
    }
    let printed = Endo::new(p.total().clone(), mat).unwrap();
    assert!(!printed.is_almost_complex());
    assert!(clift_endo(&p, &j).unwrap().is_almost_complex());
}

#[test]
fn complete_lift_of_acp_structure() {
    for (alg, j, pi) in [heisenberg_data(), abelian4_data()] {
        let p = prolong(&alg).unwrap();
        let jc = clift_endo(&p, &j).unwrap();
        assert!(is_acp(&j, &pi).unwrap().is_acp());
        assert!(is_acp(&jc, &p.clift(&pi)).unwrap().is_acp());
    }
}

#[test]
fn connection_examples() {
    let ab = arc(catalogue::abelian(2));
    let flat = Connection::zero(ab.clone());
    let (e1, e2) = (ab.e(0), ab.e(1));
    assert!(flat.torsion(&e1, &e2).is_zero());
    assert!(flat.curvature(&e1, &e2, &e1).is_zero());

    let so3 = arc(catalogue::so3());
    let flat = Connection::zero(so3.clone());
    assert_eq!(flat.torsion(&so3.e(0), &so3.e(1)), so3.e(2).neg());
}

#[test]
fn curvature_matches_triple_expansion() {
    let so3 = arc(catalogue::so3());
    for seed in 0..4 {
        let conn = random_constant_connection(&so3, seed);
        let m = 3;
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let mut expected = so3.zero_mv(1);
                    for f in 0..m {
                        let mut coef = Scalar::zero(so3.ring());
                        for d in 0..m {
                            coef = &coef + &(conn.gamma(b, c, d) * conn.gamma(a, d, f));
                            coef = &coef - &(conn.gamma(a, c, d) * conn.gamma(b, d, f));
                            coef = &coef - &(so3.c(a, b, d) * conn.gamma(d, c, f));
                        }
                        expected = expected.add(&so3.e(f).scale(&coef));
                    }
                    assert_eq!(conn.curvature(&so3.e(a), &so3.e(b), &so3.e(c)), expected);
                }
            }
        }
    }
}

#[test]
fn torsion_and_curvature_are_tensorial() {
    let s1 = arc(catalogue::sphere(1));
    let mut sm = Sampler::new(&s1, 3).with_degree(1);
    let coeffs: Vec<Scalar> = (0..8).map(|_| sm.scalar()).collect();
    let conn = Connection::new(s1.clone(), coeffs).unwrap();
    let f = Scalar::var(s1.ring(), 0);
    for _ in 0..2 {
        let (s, t, u) = (sm.mv(1), sm.mv(1), sm.mv(1));
        let fs = s.scale(&f);
        assert_eq!(conn.torsion(&fs, &t), conn.torsion(&s, &t).scale(&f));
        assert_eq!(
            conn.curvature(&s, &t, &u.scale(&f)),
            conn.curvature(&s, &t, &u).scale(&f)
        );
        assert_eq!(
            conn.curvature(&fs, &t, &u),
            conn.curvature(&s, &t, &u).scale(&f)
        );
    }
}

#[test]
fn horizontal_lift_examples() {
    let ab = arc(catalogue::abelian(2));
    let p = prolong(&ab).unwrap();
    let flat = Connection::zero(ab.clone());
    assert_eq!(hlift(&p, &flat, &ab.e(0)), p.x(0));
    assert!(p
        .total()
        .bracket(&hlift(&p, &flat, &ab.e(0)), &p.vlift(&ab.e(1)))
        .is_zero());

    let so3 = arc(catalogue::so3());
    let p = prolong(&so3).unwrap();
    let conn = random_constant_connection(&so3, 9);
    let j1 = j1_structure(&p, &conn).unwrap();
    for a in 0..3 {
        let (h, v) = (hlift(&p, &conn, &so3.e(a)), p.vlift(&so3.e(a)));
        assert_eq!(j1.apply(&h), v);
        assert_eq!(j1.apply(&v), h.neg());
    }
    let hp = horizontal_projector(&p, &conn);
    assert_eq!(hp.compose(&hp).matrix(), hp.matrix());
}

#[test]
fn horizontal_bracket_laws_and_curvature() {
    let so3 = arc(catalogue::so3());
    let p = prolong(&so3).unwrap();
    let t = p.total();
    for seed in 0..3 {
        let conn = if seed == 0 {
            Connection::zero(so3.clone())
        } else {
            random_constant_connection(&so3, seed)
        };
        let hp = horizontal_projector(&p, &conn);
        let nh = nijenhuis(&hp);
        for a in 0..3 {
            for b in 0..3 {
                let (s, u) = (so3.e(a), so3.e(b));
                let (sh, uh) = (hlift(&p, &conn, &s), hlift(&p, &conn, &u));
                let rv = p.fiber_linear_vlift(&conn.curvature_images(&s, &u));
                assert_eq!(
                    t.bracket(&sh, &uh),
                    hlift(&p, &conn, &so3.bracket(&s, &u)).sub(&rv)
                );
                assert_eq!(t.bracket(&sh, &p.vlift(&u)), p.vlift(&conn.nabla(&s, &u)));
                assert_eq!(nh.eval(t, &sh, &uh), rv.neg());
            }
        }
    }
}

#[test]
fn lifted_bivector_certificates() {
    let ab = arc(catalogue::abelian(2));
    let p = prolong(&ab).unwrap();
    let (pi, cert) =
        example_pi_on_prolongation(&p, &Connection::zero(ab.clone()), &ab.e(0), &ab.e(1)).unwrap();
    assert!(cert.sufficient() && cert.acp.is_acp());
    let (pi3, _) = example_pi_on_prolongation(
        &p,
        &Connection::zero(ab.clone()),
        &ab.e(0).scale_const(&q(3, 1)),
        &ab.e(1),
    )
    .unwrap();
    assert_eq!(pi3, pi.scale_const(&q(3, 1)));

    let so3 = arc(catalogue::so3());
    let p = prolong(&so3).unwrap();
    let (_, cert) =
        example_pi_on_prolongation(&p, &Connection::zero(so3.clone()), &so3.e(0), &so3.e(1))
            .unwrap();
    assert!(!cert.bracket_vanishes);
    assert!(cert.covariantly_constant && cert.curvature_vanishes);
    assert!(!cert.torsion_vanishes);
    assert!(!cert.sufficient());
    assert!(!cert.acp.is_acp());
}

#[test]
fn direct_product_examples() {
    let prod = direct_product(&arc(catalogue::so3()), &arc(catalogue::abelian(1))).unwrap();
    let a = &prod.algebroid;
    assert_eq!(a.rank(), 4);
    assert_eq!(a.bracket(&a.e(0), &a.e(1)), a.e(2));
    assert!(a.bracket(&a.e(0), &a.e(3)).is_zero());

    let s1 = arc(catalogue::sphere(1));
    let prod = direct_product(&s1, &s1).unwrap();
    let a = &prod.algebroid;
    assert_eq!(a.rank(), 4);
    assert_eq!(
        a.ring().names(),
        &["x1", "x2", "x1_2", "x2_2"].map(String::from)
    );
    assert_eq!(a.ring().relations().len(), 2);
    let x1 = Scalar::var(a.ring(), 0);
    assert!(a.anchor().get(0, 2).is_zero() && a.anchor().get(2, 0).is_zero());
    assert_eq!(prod.left_fn(&Scalar::var(s1.ring(), 0)), x1);
    assert!(a.bracket(&a.e(0), &a.e(2)).is_zero());
}

#[test]
fn product_of_acp_structures_is_acp() {
    let pairs = [
        (heisenberg_data(), abelian4_data()),
        (abelian4_data(), heisenberg_data()),
    ];
    for ((a1, j1, p1), (a2, j2, p2)) in pairs {
        let prod = direct_product(&a1, &a2).unwrap();
        let (j, pi, check) = prod.acp_data((&j1, &p1), (&j2, &p2)).unwrap();
        assert!(j.is_almost_complex());
        assert_eq!(pi.degree(), 2);
        assert!(check.is_acp());
    }
}

fn rotation_so3(so3: &Arc<Algebroid>) -> Morphism {
    let ring = so3.ring();
    let entries = [
        [q(3, 5), q(-4, 5), q(0, 1)],
        [q(4, 5), q(3, 5), q(0, 1)],
        [q(0, 1), q(0, 1), q(1, 1)],
    ];
    let mat = SMatrix::from_fn(ring, 3, 3, |r, c| {
        Scalar::constant(ring, entries[r][c].clone())
    });
    Morphism::new(so3.clone(), so3.clone(), mat).unwrap()
}

#[test]
fn graph_examples() {
    let so3 = arc(catalogue::so3());
    let (prod, sub) = graph(&Morphism::identity(so3.clone())).unwrap();
    assert_eq!(prod.algebroid.rank(), 6);
    assert_eq!(sub.closure, Certification::Symbolic);
    for c in 0..3 {
        assert_eq!(
            sub.sections()[c],
            prod.algebroid.e(c).add(&prod.algebroid.e(c + 3))
        );
    }
    assert_eq!(sub.annihilator().unwrap().len(), 3);

    let (_, sub) = graph(&rotation_so3(&so3)).unwrap();
    assert_eq!(sub.closure, Certification::Symbolic);

    let stretch = Morphism::new(
        so3.clone(),
        so3.clone(),
        const_matrix(&so3, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
    )
    .unwrap();
    assert!(matches!(graph(&stretch), Err(Error::NotMorphism(_))));

    let s1 = arc(catalogue::sphere(1));
    assert!(matches!(
        graph(&Morphism::identity(s1)),
        Err(Error::PreconditionFailed(_))
    ));
}

#[test]
fn subalgebroid_closure_and_certification() {
    let so3 = arc(catalogue::so3());
    let two = const_matrix(&so3, &[&[1, 0], &[0, 1], &[0, 0]]);
    assert!(matches!(
        Subalgebroid::new(so3.clone(), two, None),
        Err(Error::PreconditionFailed(_))
    ));
    let line = const_matrix(&so3, &[&[1], &[1], &[0]]);
    let sub = Subalgebroid::new(so3.clone(), line, None).unwrap();
    assert_eq!(sub.annihilator().unwrap().len(), 2);

    let s1 = arc(catalogue::sphere(1));
    let ring = s1.ring();
    let radial = SMatrix::from_fn(ring, 2, 1, |r, _| Scalar::var(ring, r));
    let sub = Subalgebroid::new(s1.clone(), radial, None).unwrap();
    assert_eq!(sub.closure, Certification::Pointwise { points: 25 });
    let j = Endo::standard(s1.clone()).unwrap();
    let rep = is_coisotropic(&sub, &j, &s1.zero_mv(2)).unwrap();
    assert_eq!(rep.certification, Certification::Pointwise { points: 25 });
    assert!(!rep.j_invariant && rep.holds);
}

#[test]
fn coisotropy_examples() {
    let (a, j, pi) = abelian4_data();
    let first = const_matrix(&a, &[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]);
    let sub = Subalgebroid::new(a.clone(), first, None).unwrap();
    let rep = is_coisotropic(&sub, &j, &a.zero_mv(2)).unwrap();
    assert!(rep.verdict());
    assert!(is_coisotropic(&sub, &j, &pi).unwrap().verdict());
    assert!(is_lagrangian(&sub, &j, &pi).unwrap().verdict());

    let full = Subalgebroid::new(a.clone(), SMatrix::identity(a.ring(), 4), None).unwrap();
    assert!(full.annihilator().unwrap().is_empty());
    assert!(is_coisotropic(&full, &j, &pi).unwrap().verdict());
    assert!(!is_lagrangian(&full, &j, &pi).unwrap().verdict());

    // a complex line outside the support of pi in C^3
    let a6 = arc(catalogue::abelian(6));
    let j6 = Endo::paired(a6.clone()).unwrap();
    let pi6 = holo(&j6, 0).wedge(&holo(&j6, 1));
    let last = SMatrix::from_fn(a6.ring(), 6, 2, |r, c| {
        Scalar::int(a6.ring(), (r == c + 4) as i128)
    });
    let sub = Subalgebroid::new(a6.clone(), last, None).unwrap();
    let rep = is_coisotropic(&sub, &j6, &pi6).unwrap();
    assert!(rep.j_invariant && !rep.holds);
    assert!(rep.witness.is_some());

    let mixed = const_matrix(&a, &[&[1], &[0], &[1], &[0]]);
    let sub = Subalgebroid::new(a.clone(), mixed, None).unwrap();
    assert!(!is_coisotropic(&sub, &j, &a.zero_mv(2)).unwrap().j_invariant);
}

fn abelian4_morphisms(a: &Arc<Algebroid>) -> Vec<(&'static str, Morphism)> {
    let mk = |rows: &[&[i128]]| Morphism::new(a.clone(), a.clone(), const_matrix(a, rows)).unwrap();
    vec![
        ("identity", Morphism::identity(a.clone())),
        // complex shear u2 -> u1 + u2
        (
            "shear",
            mk(&[&[1, 0, 1, 0], &[0, 1, 0, 1], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
        ),
        // diag(i, -i)
        (
            "rotation",
            mk(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]),
        ),
        // complex conjugation, not complex-linear
        (
            "conjugation",
            mk(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]),
        ),
    ]
}

#[test]
fn acp_morphism_examples() {
    let (a, j, pi) = abelian4_data();
    let id = Morphism::identity(a.clone());
    let rep = is_acp_morphism(&id, (&j, &pi), (&j, &pi)).unwrap();
    assert!(rep.is_acp_morphism() && rep.matrices);
    let two = pi.scale_const(&q(2, 1));
    let rep = is_acp_morphism(&id, (&j, &pi), (&j, &two)).unwrap();
    assert!(rep.almost_complex && !rep.pairs && !rep.matrices);
    let expected = [true, true, true, false];
    for ((name, phi), want) in abelian4_morphisms(&a).into_iter().zip(expected) {
        let rep = is_acp_morphism(&phi, (&j, &pi), (&j, &pi)).unwrap();
        assert_eq!(rep.is_acp_morphism(), want, "{}", name);
    }
}

#[test]
fn graph_theorem_cases() {
    let (a, j, pi) = abelian4_data();
    for (name, phi) in abelian4_morphisms(&a) {
        for target in [pi.clone(), pi.scale_const(&q(2, 1)), pi.scale_const(&gi())] {
            let rep = graph_theorem_check(&phi, (&j, &pi), (&j, &target)).unwrap();
            assert!(rep.agrees(), "{}: {:?}", name, rep);
        }
    }
    let id = Morphism::identity(a.clone());
    let rep = graph_theorem_check(&id, (&j, &pi), (&j, &pi)).unwrap();
    assert!(rep.acp_morphism && rep.graph_coisotropic && rep.graph_j_invariant);
    let rep = graph_theorem_check(&id, (&j, &pi), (&j, &pi.scale_const(&q(2, 1)))).unwrap();
    assert!(!rep.acp_morphism && !rep.graph_coisotropic);
    assert!(rep.witness.is_some());

    let (h, jh, ph) = heisenberg_data();
    let rep = graph_theorem_check(&Morphism::identity(h.clone()), (&jh, &ph), (&jh, &ph)).unwrap();
    assert!(rep.agrees() && rep.acp_morphism);
}
