//! Seeded property suites over the standard catalogue.
//!
//! Each suite draws random tensors from a [`Sampler`] and reports every nonzero residual.
//! The suites are deterministic for a given seed.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebroid::Algebroid;
use crate::catalogue;
use crate::complex::{bigrade, de_components, integrability_report, nijenhuis, Endo};
use crate::poisson::{
    anchor_tilde, dual_algebroid, form_bracket, ie_map, is_acp, is_poisson, lichnerowicz_d, sharp,
    sigma, Sigma,
};
use crate::random::Sampler;
use crate::scalar::{GaussRational, Scalar};
use crate::tensor::{Co, Form, Multivector};

/// One catalogue algebroid with the structures the suites need.
#[derive(Clone, Debug)]
pub struct Instance {
    pub algebroid: Arc<Algebroid>,
    /// Almost complex structures on even rank instances, integrable ones first.
    pub complex: Vec<Endo>,
    /// A holomorphic Poisson bivector for the first complex structure, when one is known.
    pub pi20: Option<Multivector>,
    /// A nonzero Poisson bivector.
    pub poisson: Multivector,
}

impl Instance {
    pub fn name(&self) -> &str {
        self.algebroid.name()
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &'static str) -> Self {
        SuiteOutcome {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cases > 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(mut self, other: SuiteOutcome) -> Self {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "OK" } else { "FAILED" };
        write!(f, "{:<28} {:>5} cases: {}", self.name, self.cases, verdict)?;
        for line in self.failures.iter().take(5) {
            write!(f, "\n    {}", line)?;
        }
        Ok(())
    }
}

/// `e_a - i J e_a` for a maximal set of frame indices with independent images.
pub fn holomorphic_frame(j: &Endo) -> Vec<Multivector> {
    let alg = j.parent();
    let n = alg.rank() / 2;
    let i = GaussRational::i();
    let paired = j.apply(&alg.e(0)) == alg.e(1);
    (0..n)
        .map(|k| if paired { 2 * k } else { k })
        .map(|a| alg.e(a).sub(&j.apply(&alg.e(a)).scale_const(&i)))
        .collect()
}

fn first_poisson(alg: &Algebroid) -> Multivector {
    let m = alg.rank();
    let i = Scalar::i(alg.ring());
    let mut candidates = Vec::new();
    for a in 0..m {
        for b in (a + 1)..m {
            candidates.push(alg.mv(&[a, b]));
            for c in 0..m {
                if c != a && c != b {
                    candidates.push(alg.mv(&[a, c]).add(&alg.mv(&[b, c]).scale(&i)));
                }
            }
        }
    }
    candidates
        .into_iter()
        .find(|pi| is_poisson(alg, pi).map(|c| c.is_poisson()).unwrap_or(false))
        .expect("every catalogue instance carries a nonzero Poisson bivector")
}

/// The suites' catalogue: abelian, Heisenberg, so(3), sl(2) and the spheres n = 1, 2, plus
/// the tangent algebroid of R^4 with a nonconstant holomorphic Poisson structure.
pub fn standard_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for alg in [
        catalogue::abelian(4),
        catalogue::heisenberg(),
        catalogue::so3(),
        catalogue::sl2(),
        catalogue::sphere(1),
        catalogue::sphere(2),
        catalogue::tangent_r4(),
    ] {
        let alg = Arc::new(alg);
        let name = alg.name().to_string();
        let mut complex = Vec::new();
        let mut pi20 = None;
        if name.starts_with("abelian") || name == "heisenberg" {
            let j = Endo::paired(alg.clone()).expect("even rank");
            let z = holomorphic_frame(&j);
            pi20 = Some(z[0].wedge(&z[1]));
            complex.push(j);
            complex.push(Endo::standard(alg.clone()).expect("even rank"));
        } else if name == "tr4" {
            let j = Endo::standard(alg.clone()).expect("even rank");
            let z = holomorphic_frame(&j);
            let x = |k| Scalar::var(alg.ring(), k);
            let coef = &x(0) + &x(2).scale(&GaussRational::i());
            pi20 = Some(z[0].wedge(&z[1]).scale(&coef));
            complex.push(j);
        } else if alg.rank() % 2 == 0 {
            complex.push(Endo::standard(alg.clone()).expect("even rank"));
        }
        let poisson = match &pi20 {
            Some(p) => p.add(&p.conj()),
            None => first_poisson(&alg),
        };
        out.push(Instance {
            algebroid: alg,
            complex,
            pi20,
            poisson,
        });
    }
    out
}

fn seed_for(seed: u64, name: &str, salt: u64) -> u64 {
    name.bytes()
        .fold(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15), |h, b| {
            h.rotate_left(5) ^ b as u64
        })
}

fn pure<K: crate::tensor::Kind>(
    j: &Endo,
    t: &crate::tensor::Skew<K>,
    p: usize,
    q: usize,
) -> crate::tensor::Skew<K> {
    let zero = crate::tensor::Skew::<K>::zero(j.parent().ring(), j.parent().rank(), t.degree());
    bigrade(j, t).part(p as i64, q as i64, &zero)
}

/// `d' ` (holomorphic part) or `d''` of an arbitrary form, summed over its pure components.
fn del(j: &Endo, w: &Form, holomorphic: bool) -> Result<Form, String> {
    let alg = j.parent();
    let mut acc = alg.zero_form(w.degree() + 1);
    for piece in bigrade(j, w).components.values() {
        let dc = de_components(j, piece).map_err(|e| e.to_string())?;
        acc = acc.add(if holomorphic { &dc.d } else { &dc.dbar });
    }
    Ok(acc)
}

/// `d_E(d_E w) = 0` for `per_instance` random forms of degree at most 3.
pub fn d_squared(inst: &Instance, per_instance: usize, seed: u64) -> SuiteOutcome {
    let alg = &inst.algebroid;
    let mut out = SuiteOutcome::new("d_E^2 = 0");
    let mut sm = Sampler::new(alg, seed_for(seed, inst.name(), 1)).with_degree(2);
    let top = alg.rank().min(3);
    for k in 0..per_instance {
        let w = sm.form(k % (top + 1));
        let dd = alg.d(&alg.d(&w));
        out.check(dd.is_zero(), || {
            format!("{}: d(d({})) = {}", inst.name(), w, dd)
        });
    }
    out
}

/// Graded skew symmetry, graded Leibniz and graded Jacobi of the Schouten bracket.
pub fn schouten_laws(inst: &Instance, triples: usize, seed: u64) -> SuiteOutcome {
    let alg = &inst.algebroid;
    let mut out = SuiteOutcome::new("Schouten skew/Leibniz/Jacobi");
    let mut sm = Sampler::new(alg, seed_for(seed, inst.name(), 2)).with_degree(1);
    let sgn = |e: i64| if e.rem_euclid(2) == 0 { 1 } else { -1 };
    let signed = |t: Multivector, s: i64| if s > 0 { t } else { t.neg() };
    for k in 0..triples {
        let (p, q, r) = (k % 3, 1 + (k / 3) % 2, 1 + (k / 6) % 2);
        let (s, t, u) = (sm.mv(p), sm.mv(q), sm.mv(r));
        let (p, q) = (p as i64, q as i64);
        let st = alg.schouten(&s, &t);
        let ts = signed(alg.schouten(&t, &s), -sgn((p - 1) * (q - 1)));
        out.check(st == ts, || {
            format!("{}: skew fails for {} and {}", inst.name(), s, t)
        });

        let lhs = alg.schouten(&s, &t.wedge(&u));
        let rhs = st
            .wedge(&u)
            .add(&signed(t.wedge(&alg.schouten(&s, &u)), sgn((p - 1) * q)));
        out.check(lhs == rhs, || {
            format!("{}: Leibniz fails for {}, {}, {}", inst.name(), s, t, u)
        });

        let lhs = alg.schouten(&s, &alg.schouten(&t, &u));
        let rhs = alg.schouten(&st, &u).add(&signed(
            alg.schouten(&t, &alg.schouten(&s, &u)),
            sgn((p - 1) * (q - 1)),
        ));
        out.check(lhs == rhs, || {
            format!("{}: Jacobi fails for {}, {}, {}", inst.name(), s, t, u)
        });
    }
    out
}

/// Components of `[S, T]` for pure `S, T` lie in the four admissible bidegrees, and in the
/// two inner ones when `N_J = 0`.
pub fn bidegree_bounds(inst: &Instance, per_structure: usize, seed: u64) -> SuiteOutcome {
    let alg = &inst.algebroid;
    let mut out = SuiteOutcome::new("Schouten bidegree bounds");
    for (idx, j) in inst.complex.iter().enumerate() {
        let integrable = nijenhuis(j).is_zero();
        let mut sm = Sampler::new(alg, seed_for(seed, inst.name(), 3 + idx as u64))
            .with_degree(1)
            .complex(true);
        let pure_types = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];
        for k in 0..per_structure {
            let (p, q) = pure_types[k % pure_types.len()];
            let (r, s) = pure_types[(k / pure_types.len() + k) % pure_types.len()];
            let st = pure(j, &sm.mv(p + q), p, q);
            let tt = pure(j, &sm.mv(r + s), r, s);
            let br = alg.schouten(&st, &tt);
            let (a, b) = ((p + r) as i64, (q + s) as i64);
            let inner = [(a - 1, b), (a, b - 1)];
            let outer = [(a + 1, b - 2), (a - 2, b + 1)];
            let stray: Vec<(usize, usize)> = bigrade(j, &br)
                .bidegrees()
                .into_iter()
                .filter(|&(bp, bq)| {
                    let at = (bp as i64, bq as i64);
                    !(inner.contains(&at) || (!integrable && outer.contains(&at)))
                })
                .collect();
            out.check(stray.is_empty(), || {
                format!(
                    "{}: [({},{}), ({},{})] has components in {:?}",
                    inst.name(),
                    p,
                    q,
                    r,
                    s,
                    stray
                )
            });
        }
    }
    out
}

/// The five integrability conditions agree with each other for every structure.
pub fn newlander_nirenberg(inst: &Instance) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("Newlander-Nirenberg");
    for j in &inst.complex {
        match integrability_report(j) {
            Ok(rep) => {
                let items = rep.items();
                out.check(items.iter().all(|&b| b == items[0]), || {
                    format!("{}: conditions disagree {:?}", inst.name(), items)
                });
            }
            Err(e) => out.check(false, || format!("{}: {}", inst.name(), e)),
        }
    }
    out
}

/// `d'^2 = d''^2 = d'd'' + d''d' = 0` on random pure forms for integrable structures.
pub fn del_identities(inst: &Instance, per_structure: usize, seed: u64) -> SuiteOutcome {
    let alg = &inst.algebroid;
    let mut out = SuiteOutcome::new("d'/d'' identities");
    for (idx, j) in inst.complex.iter().enumerate() {
        if !nijenhuis(j).is_zero() {
            continue;
        }
        let mut sm = Sampler::new(alg, seed_for(seed, inst.name(), 10 + idx as u64))
            .with_degree(2)
            .complex(true);
        let types = [(0, 0), (1, 0), (0, 1), (1, 1)];
        for k in 0..per_structure {
            let (p, q) = types[k % types.len()];
            let w = pure(j, &sm.form(p + q), p, q);
            let res = (|| -> Result<[Form; 3], String> {
                let (dw, dbw) = (del(j, &w, true)?, del(j, &w, false)?);
                let dd = del(j, &dw, true)?;
                let dbdb = del(j, &dbw, false)?;
                let mixed = del(j, &dbw, true)?.add(&del(j, &dw, false)?);
                Ok([dd, dbdb, mixed])
            })();
            match res {
                Ok(r) => out.check(r.iter().all(|t| t.is_zero()), || {
                    format!(
                        "{}: residuals {}, {}, {} on {}",
                        inst.name(),
                        r[0],
                        r[1],
                        r[2],
                        w
                    )
                }),
                Err(e) => out.check(false, || format!("{}: {}", inst.name(), e)),
            }
        }
    }
    out
}

/// The identities (i)-(iii) of `sigma^1` and the nilpotency of `sigma^{11}` and `sigma^{12}`.
pub fn sigma_identities(inst: &Instance, per_instance: usize, seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("sigma identities");
    let (Some(pi20), Some(j)) = (&inst.pi20, inst.complex.first()) else {
        return out;
    };
    let alg = &inst.algebroid;
    let mut sm = Sampler::new(alg, seed_for(seed, inst.name(), 20))
        .with_degree(1)
        .complex(true);
    for _ in 0..per_instance {
        let (sv, tv) = (sm.mv(2), sm.mv(1));
        let s1 = |x: &Multivector| sigma(j, pi20, x, Sigma::One);
        let s11 = |x: &Multivector| sigma(j, pi20, x, Sigma::OneOne);
        let s12 = |x: &Multivector| sigma(j, pi20, x, Sigma::OneTwo);
        out.check(s1(&s1(&sv)).is_zero(), || {
            format!("{}: (i) fails on {}", inst.name(), sv)
        });
        let lhs = s1(&sv.wedge(&tv));
        let rhs = s1(&sv).wedge(&tv).add(&sv.wedge(&s1(&tv)));
        out.check(lhs == rhs, || {
            format!("{}: (ii) fails on {}, {}", inst.name(), sv, tv)
        });
        let lhs = s1(&alg.schouten(&sv, &tv));
        let rhs = alg
            .schouten(&s1(&sv), &tv)
            .sub(&alg.schouten(&sv, &s1(&tv)));
        out.check(lhs == rhs, || {
            format!("{}: (iii) fails on {}, {}", inst.name(), sv, tv)
        });
        out.check(s11(&s11(&sv)).is_zero() && s12(&s12(&sv)).is_zero(), || {
            format!(
                "{}: sigma11 or sigma12 does not square to zero on {}",
                inst.name(),
                sv
            )
        });
        out.check(s11(&s12(&sv)).add(&s12(&s11(&sv))).is_zero(), || {
            format!(
                "{}: sigma11 and sigma12 do not anticommute on {}",
                inst.name(),
                sv
            )
        });
    }
    out
}

/// `I_E(d' phi) = -sigma^1(I_E phi)` and `I_E(d'' phi) = -sigma^2(I_E phi)` on pure forms.
pub fn ie_corollary(inst: &Instance, per_instance: usize, seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("I_E d' = -sigma^1 I_E");
    let (Some(pi20), Some(j)) = (&inst.pi20, inst.complex.first()) else {
        return out;
    };
    let alg = &inst.algebroid;
    let pi = &inst.poisson;
    let mut sm = Sampler::new(alg, seed_for(seed, inst.name(), 30))
        .with_degree(2)
        .complex(true);
    for k in 0..per_instance {
        let (p, q) = [(1, 0), (0, 1), (1, 1), (2, 0)][k % 4];
        let phi = pure(j, &sm.form(p + q), p, q);
        match de_components(j, &phi) {
            Ok(dc) => {
                let img = ie_map(alg, pi, &phi);
                let ok = ie_map(alg, pi, &dc.d) == sigma(j, pi20, &img, Sigma::One).neg()
                    && ie_map(alg, pi, &dc.dbar) == sigma(j, pi20, &img, Sigma::Two).neg();
                out.check(ok, || format!("{}: fails on {}", inst.name(), phi));
            }
            Err(e) => out.check(false, || format!("{}: {}", inst.name(), e)),
        }
    }
    out
}

/// The Lichnerowicz differential equals the differential of the dual algebroid.
pub fn dual_consistency(inst: &Instance, per_instance: usize, seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("d_pi = d of dual algebroid");
    let alg = &inst.algebroid;
    let dual = match dual_algebroid(alg, &inst.poisson) {
        Ok(d) => d.algebroid,
        Err(e) => {
            out.check(false, || format!("{}: {}", inst.name(), e));
            return out;
        }
    };
    let mut sm = Sampler::new(alg, seed_for(seed, inst.name(), 40)).with_degree(2);
    for k in 0..per_instance {
        let sv = sm.mv(k % 3);
        match lichnerowicz_d(alg, &inst.poisson, &sv) {
            Ok(got) => {
                let want = dual.d(&sv.reinterpret::<Co>());
                out.check(got.reinterpret::<Co>() == want, || {
                    format!("{}: differs on {}", inst.name(), sv)
                });
            }
            Err(e) => out.check(false, || format!("{}: {}", inst.name(), e)),
        }
    }
    out
}

/// Leibniz rule of the form bracket and the homomorphism property of its anchor.
pub fn form_bracket_laws(inst: &Instance, per_instance: usize, seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("form bracket Leibniz/anchor");
    let alg = &inst.algebroid;
    let pi = &inst.poisson;
    let mut sm = Sampler::new(alg, seed_for(seed, inst.name(), 50)).with_degree(1);
    for _ in 0..per_instance {
        let (w, t, f) = (sm.form(1), sm.form(1), sm.scalar());
        let lhs = form_bracket(alg, pi, &w, &t.scale(&f));
        let rf = alg.rho_section(&sharp(pi, &w), &f);
        let rhs = form_bracket(alg, pi, &w, &t).scale(&f).add(&t.scale(&rf));
        out.check(lhs == rhs, || {
            format!("{}: Leibniz fails on {}, {}", inst.name(), w, t)
        });

        let br = anchor_tilde(alg, pi, &form_bracket(alg, pi, &w, &t));
        let (u, v) = (anchor_tilde(alg, pi, &w), anchor_tilde(alg, pi, &t));
        let commutator: Vec<Scalar> = (0..u.len())
            .map(|i| &v[i].derive_along(&u) - &u[i].derive_along(&v))
            .collect();
        out.check(br == commutator, || {
            format!(
                "{}: anchor is not a homomorphism on {}, {}",
                inst.name(),
                w,
                t
            )
        });
    }
    out
}

/// Sample counts per instance for one full run.
#[derive(Clone, Copy, Debug)]
pub struct SuiteSizes {
    pub d_squared: usize,
    pub schouten: usize,
    pub bidegree: usize,
    pub del: usize,
    pub sigma: usize,
    pub corollary: usize,
    pub dual: usize,
    pub form_bracket: usize,
}

impl Default for SuiteSizes {
    fn default() -> Self {
        SuiteSizes {
            d_squared: 50,
            schouten: 30,
            bidegree: 12,
            del: 8,
            sigma: 6,
            corollary: 8,
            dual: 9,
            form_bracket: 8,
        }
    }
}

/// Runs every suite over the instances, one rayon task per (suite, instance).
pub fn run_all(instances: &[Instance], sizes: SuiteSizes, seed: u64) -> Vec<SuiteOutcome> {
    type Suite = fn(&Instance, SuiteSizes, u64) -> SuiteOutcome;
    let suites: [(&'static str, Suite); 9] = [
        ("d_E^2 = 0", |i, s, seed| d_squared(i, s.d_squared, seed)),
        ("Schouten skew/Leibniz/Jacobi", |i, s, seed| {
            schouten_laws(i, s.schouten, seed)
        }),
        ("Schouten bidegree bounds", |i, s, seed| {
            bidegree_bounds(i, s.bidegree, seed)
        }),
        ("Newlander-Nirenberg", |i, _, _| newlander_nirenberg(i)),
        ("d'/d'' identities", |i, s, seed| {
            del_identities(i, s.del, seed)
        }),
        ("sigma identities", |i, s, seed| {
            sigma_identities(i, s.sigma, seed)
        }),
        ("I_E d' = -sigma^1 I_E", |i, s, seed| {
            ie_corollary(i, s.corollary, seed)
        }),
        ("d_pi = d of dual algebroid", |i, s, seed| {
            dual_consistency(i, s.dual, seed)
        }),
        ("form bracket Leibniz/anchor", |i, s, seed| {
            form_bracket_laws(i, s.form_bracket, seed)
        }),
    ];
    let jobs: Vec<(usize, usize)> = (0..suites.len())
        .flat_map(|s| (0..instances.len()).map(move |i| (s, i)))
        .collect();
    let results: Vec<(usize, SuiteOutcome)> = jobs
        .par_iter()
        .map(|&(s, i)| (s, (suites[s].1)(&instances[i], sizes, seed)))
        .collect();
    suites
        .iter()
        .enumerate()
        .map(|(s, (name, _))| {
            results
                .iter()
                .filter(|(k, _)| *k == s)
                .fold(SuiteOutcome::new(name), |acc, (_, o)| acc.merge(o.clone()))
        })
        .collect()
}

/// Checks that the holomorphic Poisson structures used by the suites really are ACP.
pub fn instances_are_acp(instances: &[Instance]) -> bool {
    instances
        .iter()
        .all(|inst| match (&inst.pi20, inst.complex.first()) {
            (Some(p), Some(j)) => is_acp(j, p).map(|c| c.is_acp()).unwrap_or(false),
            _ => true,
        })
}
