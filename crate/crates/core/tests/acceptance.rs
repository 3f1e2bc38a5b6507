//! Acceptance criteria: one PASS/FAIL line per criterion.
//!
//! Every tolerance is exact equality in the quotient ring; the runtime budgets are pinned
//! below. Sub-checks that cannot hold (see README, "Known deviations") are marked and must
//! stay red; everything else must pass.

use std::sync::Arc;
use std::time::{Duration, Instant};

use lie_algebroid::algebroid::{Algebroid, Morphism};
use lie_algebroid::catalogue;
use lie_algebroid::cli::DEFAULT_SEED;
use lie_algebroid::complex::{bigrade, nijenhuis, Endo};
use lie_algebroid::constructions::{
    clift_endo, graph_theorem_check, hlift, horizontal_projector, prolong, Connection,
};
use lie_algebroid::gallery::{
    foliation_rank_survey, golden_check, reproduce_n2_matrix, SphereInstance,
};
use lie_algebroid::linalg::{GMatrix, SMatrix};
use lie_algebroid::poisson::{clp_cohomology, sigma, Sigma};
use lie_algebroid::properties::{holomorphic_frame, run_all, standard_instances, SuiteSizes};
use lie_algebroid::random::Sampler;
use lie_algebroid::scalar::{GaussRational, Scalar};
use lie_algebroid::tensor::Multivector;
use rand::Rng;

struct Part {
    label: String,
    ok: bool,
    /// Cannot hold under any faithful implementation; must fail.
    unattainable: bool,
}

struct Criterion {
    id: usize,
    title: &'static str,
    budget: Duration,
    elapsed: Duration,
    parts: Vec<Part>,
}

impl Criterion {
    fn run(
        id: usize,
        title: &'static str,
        budget_secs: u64,
        body: impl FnOnce(&mut Vec<Part>),
    ) -> Self {
        let start = Instant::now();
        let mut parts = Vec::new();
        body(&mut parts);
        Criterion {
            id,
            title,
            budget: Duration::from_secs(budget_secs),
            elapsed: start.elapsed(),
            parts,
        }
    }

    fn in_budget(&self) -> bool {
        self.elapsed <= self.budget
    }

    fn passed(&self) -> bool {
        self.in_budget() && !self.parts.is_empty() && self.parts.iter().all(|p| p.ok)
    }

    fn line(&self) -> String {
        let mut s = format!(
            "{} [{}] {} (exact; {:.2}s of {}s)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs()
        );
        for p in self.parts.iter().filter(|p| !p.ok) {
            let tag = if p.unattainable {
                "unattainable"
            } else {
                "failed"
            };
            s.push_str(&format!("\n       {}: {}", tag, p.label));
        }
        if !self.in_budget() {
            s.push_str("\n       failed: runtime budget exceeded");
        }
        s
    }
}

fn part(parts: &mut Vec<Part>, label: impl Into<String>, ok: bool) {
    parts.push(Part {
        label: label.into(),
        ok,
        unattainable: false,
    });
}

fn unattainable(parts: &mut Vec<Part>, label: impl Into<String>, ok: bool) {
    parts.push(Part {
        label: label.into(),
        ok,
        unattainable: true,
    });
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        0
    } else {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
}

fn pure_part(j: &Endo, t: &Multivector, p: usize, q: usize) -> Multivector {
    let zero = j.parent().zero_mv(t.degree());
    bigrade(j, t).part(p as i64, q as i64, &zero)
}

/// `dim H^{p,q}` by dense row reduction of `sigma^11` on the pure frame basis.
fn dense_dimension(j: &Endo, pi20: &Multivector, p: usize, q: usize) -> usize {
    let alg = j.parent();
    let m = alg.rank();
    let ranks = |p: usize, q: usize| -> (usize, usize) {
        let tuples = Multivector::tuples(m, p + q);
        let out = Multivector::tuples(m, p + q + 1);
        let mut span = Vec::new();
        let mut imgs = Vec::new();
        for tup in &tuples {
            let v = pure_part(j, &alg.mv(tup), p, q);
            span.push(
                tuples
                    .iter()
                    .map(|t| v.get(t).as_constant().unwrap())
                    .collect::<Vec<_>>(),
            );
            let w = sigma(j, pi20, &v, Sigma::OneOne);
            imgs.push(
                out.iter()
                    .map(|t| w.get(t).as_constant().unwrap())
                    .collect::<Vec<_>>(),
            );
        }
        let rank = |cols: &[Vec<GaussRational>], rows: usize| {
            if rows == 0 || cols.is_empty() {
                0
            } else {
                GMatrix::from_cols(cols, rows).rank()
            }
        };
        (rank(&span, tuples.len()), rank(&imgs, out.len()))
    };
    let (dim, out_rank) = ranks(p, q);
    let in_rank = if p > 0 { ranks(p - 1, q).1 } else { 0 };
    dim - out_rank - in_rank
}

fn paired_acp(alg: Algebroid) -> (Arc<Algebroid>, Endo, Multivector) {
    let a = Arc::new(alg);
    let j = Endo::paired(a.clone()).unwrap();
    let z = holomorphic_frame(&j);
    let pi = z[0].wedge(&z[1]);
    (a, j, pi)
}

fn const_matrix(a: &Algebroid, rows: &[&[i128]]) -> SMatrix {
    SMatrix::from_ints(
        a.ring(),
        &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
    )
}

fn criterion_1() -> Criterion {
    Criterion::run(1, "sphere golden suite n = 1, 2, 3", 60, |parts| {
        for n in 1..=3 {
            let rep = golden_check(n).unwrap();
            let counts = rep.family_counts();
            let total: usize = counts.values().map(|c| c.1).sum();
            part(
                parts,
                format!("n = {}: {} reference formulas", n, total),
                rep.formulas_ok() && total > 0,
            );
            part(
                parts,
                format!("n = {}: structure equations", n),
                rep.checks.structure_equations,
            );
            part(
                parts,
                format!("n = {}: N_J = 0", n),
                rep.checks.j_integrable,
            );
            let label = format!(
                "n = {}: is_poisson(J~) (Jacobi residual of J~ is nonzero for n >= 2)",
                n
            );
            if n == 1 {
                part(parts, label, rep.checks.jtilde_poisson);
            } else {
                unattainable(parts, label, rep.checks.jtilde_poisson);
            }
        }
    })
}

fn criterion_2() -> Criterion {
    Criterion::run(2, "n = 2 matrix", 5, |parts| {
        let m = reproduce_n2_matrix().unwrap();
        let rep = golden_check(2).unwrap();
        let entries: Vec<_> = rep
            .entries
            .iter()
            .filter(|e| e.family == "matrix")
            .collect();
        part(
            parts,
            "9 entries equal the reference matrix",
            entries.len() == 9 && entries.iter().all(|e| e.ok),
        );
        part(parts, "antisymmetric", m.add(&m.transpose()).is_zero());
    })
}

fn criterion_3() -> Criterion {
    Criterion::run(3, "compatibility dichotomy", 60, |parts| {
        let s1 = SphereInstance::new(1).unwrap().compat_report().unwrap();
        unattainable(
            parts,
            "n = 1: (-J~, J) compatible (the concomitant is linear in F and C(J~, J) != 0)",
            s1.minus.is_compatible(),
        );
        for n in 2..=3 {
            let r = SphereInstance::new(n).unwrap().compat_report().unwrap();
            part(
                parts,
                format!("n = {}: (+J~, J) not compatible", n),
                !r.plus.is_compatible(),
            );
            part(
                parts,
                format!("n = {}: (-J~, J) not compatible", n),
                !r.minus.is_compatible(),
            );
            part(
                parts,
                format!(
                    "n = {}: defect on (e^1, e^(1+n)) equals the 2 delta term",
                    n
                ),
                r.defect_matches,
            );
        }
    })
}

fn criterion_4() -> Criterion {
    Criterion::run(4, "foliation ranks", 10, |parts| {
        for n in 1..=3 {
            let hist = foliation_rank_survey(n, 25, DEFAULT_SEED).unwrap();
            let want = 2 * n - 2;
            part(
                parts,
                format!("n = {}: rank {} at 25 points, got {:?}", n, want, hist),
                hist.len() == 1 && hist.get(&want) == Some(&25),
            );
        }
    })
}

fn criterion_5() -> Criterion {
    Criterion::run(5, "property suites", 300, |parts| {
        let instances = standard_instances();
        for o in run_all(&instances, SuiteSizes::default(), DEFAULT_SEED) {
            let first = o.failures.first().cloned().unwrap_or_default();
            part(
                parts,
                format!("{} ({} cases) {}", o.name, o.cases, first),
                o.passed(),
            );
        }
    })
}

fn criterion_6() -> Criterion {
    Criterion::run(6, "CLP cohomology", 30, |parts| {
        let (_, j, pi) = paired_acp(catalogue::abelian(4));
        for p in 0..=2 {
            for q in 0..=2 {
                let d = clp_cohomology(&j, &pi, p, q).unwrap().dimension;
                part(
                    parts,
                    format!("abelian: dim H^({},{}) = {}", p, q, d),
                    d == binom(2, p) * binom(2, q),
                );
            }
        }
        let (_, jh, pih) = paired_acp(catalogue::heisenberg());
        for p in 0..=2 {
            for q in 0..=2 {
                let d = clp_cohomology(&jh, &pih, p, q).unwrap().dimension;
                let oracle = dense_dimension(&jh, &pih, p, q);
                part(
                    parts,
                    format!("heisenberg: dim H^({},{}) = {} vs {}", p, q, d, oracle),
                    d == oracle,
                );
            }
        }
    })
}

fn criterion_7() -> Criterion {
    Criterion::run(7, "graph theorem", 60, |parts| {
        let (a, j, pi) = paired_acp(catalogue::abelian(4));
        let mk = |m: SMatrix| Morphism::new(a.clone(), a.clone(), m).unwrap();
        let mut triples: Vec<(String, Morphism, Multivector, Option<bool>)> = vec![
            (
                "identity".into(),
                Morphism::identity(a.clone()),
                pi.clone(),
                Some(true),
            ),
            (
                "rotation diag(i, -i)".into(),
                mk(const_matrix(
                    &a,
                    &[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]],
                )),
                pi.clone(),
                Some(true),
            ),
            (
                "conjugation".into(),
                mk(const_matrix(
                    &a,
                    &[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]],
                )),
                pi.clone(),
                Some(false),
            ),
            (
                "identity into 2 pi20".into(),
                Morphism::identity(a.clone()),
                pi.scale_const(&GaussRational::from_int(2)),
                Some(false),
            ),
        ];
        let mut sm = Sampler::new(&a, DEFAULT_SEED);
        for k in 0..2 {
            let mut m = SMatrix::identity(a.ring(), 4);
            let (r, c) = (sm.rng().gen_range(0..4), sm.rng().gen_range(0..4));
            let bump = m.get(r, c) + &sm.constant();
            m.set(r, c, bump);
            triples.push((
                format!("perturbed identity {}", k + 1),
                mk(m),
                pi.clone(),
                None,
            ));
        }
        let mut agreements = 0;
        for (name, phi, target, expect) in &triples {
            let rep = graph_theorem_check(phi, (&j, &pi), (&j, target)).unwrap();
            let expected_ok = expect.is_none_or(|e| e == rep.acp_morphism);
            agreements += rep.agrees() as usize;
            part(
                parts,
                format!(
                    "{}: ACP morphism {} / coisotropic graph {}",
                    name, rep.acp_morphism, rep.graph_coisotropic
                ),
                rep.agrees() && expected_ok,
            );
        }
        part(
            parts,
            format!("{} triples, zero disagreements", triples.len()),
            triples.len() >= 5 && agreements == triples.len(),
        );
    })
}

fn criterion_8() -> Criterion {
    Criterion::run(8, "lift laws", 60, |parts| {
        let so3 = Arc::new(catalogue::so3());
        let p = prolong(&so3).unwrap();
        let t = p.total();
        let mut sm = Sampler::new(&so3, DEFAULT_SEED);
        let mut ok = true;
        for (ds, dt) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            for _ in 0..3 {
                let (s, u) = (sm.mv(ds), sm.mv(dt));
                ok &= p.clift(&so3.schouten(&s, &u)) == t.schouten(&p.clift(&s), &p.clift(&u));
            }
        }
        part(parts, "[S,T]^c = [S^c,T^c] on so(3), 12 random pairs", ok);

        for (name, alg, j) in [
            ("heisenberg", catalogue::heisenberg(), None),
            ("sphere n = 1", catalogue::sphere(1), None),
            ("tr4", catalogue::tangent_r4(), None::<Endo>),
        ] {
            let alg = Arc::new(alg);
            let j = j.unwrap_or_else(|| Endo::standard(alg.clone()).unwrap());
            let pr = prolong(&alg).unwrap();
            let jc = clift_endo(&pr, &j).unwrap();
            let (n, nc) = (nijenhuis(&j), nijenhuis(&jc));
            let mut ok = jc.is_almost_complex();
            for a in 0..alg.rank() {
                for b in 0..alg.rank() {
                    let (s, u) = (alg.e(a), alg.e(b));
                    ok &= nc.eval(pr.total(), &pr.clift(&s), &pr.clift(&u))
                        == pr.clift(&n.eval(&alg, &s, &u));
                }
            }
            part(parts, format!("N_(J^c) = (N_J)^c on {}", name), ok);
        }

        let mut sm = Sampler::new(&so3, DEFAULT_SEED ^ 0xc0);
        let mut ok = true;
        for _ in 0..10 {
            let gamma: Vec<Scalar> = (0..27).map(|_| sm.constant()).collect();
            let conn = Connection::new(so3.clone(), gamma).unwrap();
            let nh = nijenhuis(&horizontal_projector(&p, &conn));
            for a in 0..3 {
                for b in 0..3 {
                    let (s, u) = (so3.e(a), so3.e(b));
                    let (sh, uh) = (hlift(&p, &conn, &s), hlift(&p, &conn, &u));
                    let rv = p.fiber_linear_vlift(&conn.curvature_images(&s, &u));
                    ok &= t.bracket(&sh, &uh) == hlift(&p, &conn, &so3.bracket(&s, &u)).sub(&rv);
                    ok &= t.bracket(&sh, &p.vlift(&u)) == p.vlift(&conn.nabla(&s, &u));
                    ok &= nh.eval(t, &sh, &uh) == rv.neg();
                }
            }
        }
        part(
            parts,
            "horizontal brackets and R = -N_h, 10 random constant connections on so(3)",
            ok,
        );
    })
}

fn main() {
    let criteria = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
    ];
    for c in &criteria {
        println!("{}", c.line());
    }
    for c in &criteria {
        assert!(
            c.in_budget(),
            "criterion {} exceeded its runtime budget",
            c.id
        );
        for p in &c.parts {
            if p.unattainable {
                assert!(
                    !p.ok,
                    "criterion {}: `{}` now holds; revisit the analysis",
                    c.id, p.label
                );
            } else {
                assert!(p.ok, "criterion {}: `{}` failed", c.id, p.label);
            }
        }
    }
}
