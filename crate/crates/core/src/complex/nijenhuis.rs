//! Nijenhuis tensors, the integrability theorem, the splitting of `d_E`, and
//! almost complex morphisms.

use std::fmt;

use super::{bigrade, Endo};
use crate::algebroid::{Algebroid, Morphism};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{Form, Multivector};

/// Vector-valued skew 2-form, `T(e_a, e_b)` stored for all ordered pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor12 {
    pub rank: usize,
    pub values: Vec<Multivector>,
}

impl Tensor12 {
    pub fn at(&self, a: usize, b: usize) -> &Multivector {
        &self.values[a * self.rank + b]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Component `T^c_{ab}`.
    pub fn component(&self, a: usize, b: usize, c: usize) -> Scalar {
        self.at(a, b).get(&[c])
    }

    /// `T(s, t)` for arbitrary sections, by bilinearity over functions.
    pub fn eval(&self, alg: &Algebroid, s: &Multivector, t: &Multivector) -> Multivector {
        let mut out = alg.zero_mv(1);
        for (i, f) in s.coeffs() {
            for (j, g) in t.coeffs() {
                let v = self.at(i[0] as usize, j[0] as usize);
                if !v.is_zero() {
                    out = out.add(&v.scale(&(f * g)));
                }
            }
        }
        out
    }
}

impl fmt::Display for Tensor12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for a in 0..self.rank {
            for b in (a + 1)..self.rank {
                let v = self.at(a, b);
                if !v.is_zero() {
                    writeln!(f, "N(e{}, e{}) = {}", a + 1, b + 1, v)?;
                    any = true;
                }
            }
        }
        if !any {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn nijenhuis_on(alg: &Algebroid, g: &Endo, s: &Multivector, t: &Multivector) -> Multivector {
    let gs = g.apply(s);
    let gt = g.apply(t);
    let st = alg.bracket(s, t);
    alg.bracket(&gs, &gt)
        .sub(&g.apply(&alg.bracket(&gs, t)))
        .sub(&g.apply(&alg.bracket(s, &gt)))
        .add(&g.apply(&g.apply(&st)))
}

/// `N_G(s,t) = [Gs,Gt] - G[Gs,t] - G[s,Gt] + G^2[s,t]` on the frame; for `J^2 = -id` this is
/// `[Js,Jt] - J[s,Jt] - J[Js,t] - [s,t]`.
pub fn nijenhuis(g: &Endo) -> Tensor12 {
    let alg = g.parent();
    let m = alg.rank();
    let mut values = vec![alg.zero_mv(1); m * m];
    for a in 0..m {
        for b in (a + 1)..m {
            let v = nijenhuis_on(alg, g, &alg.e(a), &alg.e(b));
            values[b * m + a] = v.neg();
            values[a * m + b] = v;
        }
    }
    Tensor12 { rank: m, values }
}

/// `N(f e_a, e_b) - f N(e_a, e_b)` over all frame pairs; zero iff the derivative terms cancel.
pub fn nijenhuis_tensoriality_residual(g: &Endo, f: &Scalar) -> Vec<Multivector> {
    let alg = g.parent();
    let n = nijenhuis(g);
    let m = alg.rank();
    let mut out = Vec::new();
    for a in 0..m {
        for b in 0..m {
            let lhs = nijenhuis_on(alg, g, &alg.e(a).scale(f), &alg.e(b));
            let r = lhs.sub(&n.at(a, b).scale(f));
            if !r.is_zero() {
                out.push(r);
            }
        }
    }
    out
}

/// The four pieces of `d_E w` for a pure `(p,q)`-form.
#[derive(Clone, Debug)]
pub struct DeComponents {
    pub bidegree: (usize, usize),
    /// `(p+2, q-1)`
    pub d_prime: Form,
    /// `(p+1, q)`
    pub d: Form,
    /// `(p, q+1)`
    pub dbar: Form,
    /// `(p-1, q+2)`
    pub d_second: Form,
}

pub fn de_components(j: &Endo, w: &Form) -> Result<DeComponents> {
    let alg = j.parent();
    let table = bigrade(j, w);
    let (p, q) = match table.pure_bidegree() {
        Some(pq) => pq,
        None if w.is_zero() => (w.degree(), 0),
        None => {
            return Err(Error::NotPure(format!("bidegrees {:?}", table.bidegrees())));
        }
    };
    let dw = alg.d(w);
    let dt = bigrade(j, &dw);
    let zero = alg.zero_form(w.degree() + 1);
    let (pi, qi) = (p as i64, q as i64);
    let expected = [
        (pi + 2, qi - 1),
        (pi + 1, qi),
        (pi, qi + 1),
        (pi - 1, qi + 2),
    ];
    for &(a, b) in dt.components.keys() {
        if !expected.contains(&(a as i64, b as i64)) {
            return Err(Error::InternalInconsistency(format!(
                "d_E of a ({},{})-form has a ({},{}) component",
                p, q, a, b
            )));
        }
    }
    Ok(DeComponents {
        bidegree: (p, q),
        d_prime: dt.part(pi + 2, qi - 1, &zero),
        d: dt.part(pi + 1, qi, &zero),
        dbar: dt.part(pi, qi + 1, &zero),
        d_second: dt.part(pi - 1, qi + 2, &zero),
    })
}

/// The five equivalent conditions of the integrability theorem, evaluated independently.
#[derive(Clone, Debug)]
pub struct IntegrabilityReport {
    /// (i) `[E^{1,0}, E^{1,0}] ⊂ E^{1,0}`
    pub closed_10: bool,
    /// (ii) `[E^{0,1}, E^{0,1}] ⊂ E^{0,1}`
    pub closed_01: bool,
    /// (iii) `d_E Ω^{1,0} ⊂ Ω^{2,0} + Ω^{1,1}` and `d_E Ω^{0,1} ⊂ Ω^{1,1} + Ω^{0,2}`
    pub d_first_order: bool,
    /// (iv) `d_E Ω^{p,q} ⊂ Ω^{p+1,q} + Ω^{p,q+1}` on pure forms of degree <= 3
    pub d_all_orders: bool,
    /// (v) `N_J = 0`
    pub nijenhuis_zero: bool,
    pub nijenhuis: Tensor12,
}

impl IntegrabilityReport {
    pub fn items(&self) -> [bool; 5] {
        [
            self.closed_10,
            self.closed_01,
            self.d_first_order,
            self.d_all_orders,
            self.nijenhuis_zero,
        ]
    }

    pub fn integrable(&self) -> bool {
        self.nijenhuis_zero
    }
}

impl fmt::Display for IntegrabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = [
            "(i) (1,0)-sections closed under the bracket",
            "(ii) (0,1)-sections closed under the bracket",
            "(iii) d_E of (1,0)/(0,1)-forms has no outer components",
            "(iv) d_E = ∂ + ∂̄ on pure forms",
            "(v) Nijenhuis tensor vanishes",
        ];
        for (name, ok) in names.iter().zip(self.items()) {
            writeln!(f, "{}: {}", name, ok)?;
        }
        write!(f, "integrable: {}", self.integrable())
    }
}

/// Fails with `InternalInconsistency` if the five items disagree.
pub fn integrability_report(j: &Endo) -> Result<IntegrabilityReport> {
    let alg = j.parent();
    let m = alg.rank();
    let z10: Vec<Multivector> = (0..m).map(|a| j.part10(&alg.e(a))).collect();
    let z01: Vec<Multivector> = (0..m).map(|a| j.part01(&alg.e(a))).collect();
    let mut closed_10 = true;
    let mut closed_01 = true;
    for a in 0..m {
        for b in (a + 1)..m {
            if closed_10 && !j.part01(&alg.bracket(&z10[a], &z10[b])).is_zero() {
                closed_10 = false;
            }
            if closed_01 && !j.part10(&alg.bracket(&z01[a], &z01[b])).is_zero() {
                closed_01 = false;
            }
        }
    }

    let mut d_first_order = true;
    for a in 0..m {
        let w10 = j.form_part10(&alg.th(a));
        let w01 = j.form_part01(&alg.th(a));
        let t10 = bigrade(j, &alg.d(&w10));
        let t01 = bigrade(j, &alg.d(&w01));
        if t10.get(0, 2).is_some() || t01.get(2, 0).is_some() {
            d_first_order = false;
            break;
        }
    }

    let mut d_all_orders = true;
    'outer: for deg in 1..=m.min(3) {
        for idx in Form::tuples(m, deg) {
            let table = bigrade(j, &alg.form(&idx));
            for ((p, q), piece) in &table.components {
                let dt = bigrade(j, &alg.d(piece));
                for &(a, b) in dt.components.keys() {
                    if (a, b) != (p + 1, *q) && (a, b) != (*p, q + 1) {
                        d_all_orders = false;
                        break 'outer;
                    }
                }
            }
        }
    }

    let n = nijenhuis(j);
    let report = IntegrabilityReport {
        closed_10,
        closed_01,
        d_first_order,
        d_all_orders,
        nijenhuis_zero: n.is_zero(),
        nijenhuis: n,
    };
    let items = report.items();
    if items.iter().any(|&b| b != items[0]) {
        return Err(Error::InternalInconsistency(format!(
            "integrability items disagree: {:?}",
            items
        )));
    }
    Ok(report)
}

/// Checks `phi J1 = J2 phi` and the equivalent bidegree-preservation properties.
#[derive(Clone, Debug)]
pub struct AcMorphismReport {
    pub commutes: bool,
    pub maps_10_to_10: bool,
    pub maps_01_to_01: bool,
    pub pullback_preserves_bidegree: bool,
}

impl AcMorphismReport {
    pub fn is_almost_complex(&self) -> bool {
        self.commutes
    }
}

pub fn check_ac_morphism(phi: &Morphism, j1: &Endo, j2: &Endo) -> Result<AcMorphismReport> {
    let commutes = phi.matrix().mul(j1.matrix()) == j2.matrix().mul(phi.matrix());
    let maps_10_to_10 = j2.p01().mul(phi.matrix()).mul(&j1.p10()).is_zero();
    let maps_01_to_01 = j2.p10().mul(phi.matrix()).mul(&j1.p01()).is_zero();
    let target = phi.target();
    let mut pullback_preserves_bidegree = true;
    'outer: for deg in 1..=target.rank().min(2) {
        for idx in Form::tuples(target.rank(), deg) {
            let table = bigrade(j2, &target.form(&idx));
            for (&(p, q), piece) in &table.components {
                let pulled = phi.pullback(piece);
                if !bigrade(j1, &pulled).is_pure_of(p, q) {
                    pullback_preserves_bidegree = false;
                    break 'outer;
                }
            }
        }
    }
    let r = AcMorphismReport {
        commutes,
        maps_10_to_10,
        maps_01_to_01,
        pullback_preserves_bidegree,
    };
    let items = [
        commutes,
        maps_10_to_10,
        maps_01_to_01,
        pullback_preserves_bidegree,
    ];
    if items.iter().any(|&b| b != items[0]) {
        return Err(Error::InternalInconsistency(format!(
            "almost complex morphism criteria disagree: {:?}",
            items
        )));
    }
    Ok(r)
}
