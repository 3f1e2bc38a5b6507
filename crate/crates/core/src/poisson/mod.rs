//! Poisson bisections, the sharp map, the bracket of forms, the dual algebroid and the
//! Lichnerowicz differential.

mod acp;
mod cohomology;
mod compat;

use std::sync::Arc;

use crate::algebroid::Algebroid;
use crate::complex::Endo;
use crate::error::{Error, Result};
use crate::linalg::SMatrix;
use crate::scalar::{GaussRational, Scalar};
use crate::tensor::{contract, pairing, Form, Multivector};

pub use acp::{
    acp_function_bracket, hamiltonian_section, ie_map, is_acp, nondegeneracy,
    poisson_to_symplectic, real_parts, sigma, sigma1_split, symplectic_to_poisson, AcpCheck,
    Nondegeneracy, Sigma,
};
pub use cohomology::{clp_cohomology, CohomologyResult};
pub use compat::{
    concomitant, deformed_bracket, general_bracket, is_compatible, is_poisson_nijenhuis,
    CompatReport, Concomitant,
};

/// A bilinear form on `E*`, stored as the matrix of `F^#: E* -> E`, `(F^# w)^a = F^{ab} w_b`.
#[derive(Clone, Debug)]
pub struct GeneralBisection {
    parent: Arc<Algebroid>,
    matrix: SMatrix,
}

impl GeneralBisection {
    pub fn new(parent: Arc<Algebroid>, matrix: SMatrix) -> Result<Self> {
        let m = parent.rank();
        if matrix.rows() != m || matrix.cols() != m {
            return Err(Error::ShapeMismatch(format!(
                "bisection is {}x{}, rank is {}",
                matrix.rows(),
                matrix.cols(),
                m
            )));
        }
        Ok(GeneralBisection { parent, matrix })
    }

    pub fn zero(parent: Arc<Algebroid>) -> Self {
        let matrix = SMatrix::zeros(parent.ring(), parent.rank(), parent.rank());
        GeneralBisection { parent, matrix }
    }

    /// The bisection whose sharp map is `w -> i_w pi`.
    pub fn from_bivector(parent: Arc<Algebroid>, pi: &Multivector) -> Result<Self> {
        parent.check_mv(pi)?;
        if pi.degree() != 2 {
            return Err(Error::ShapeMismatch(format!(
                "expected a bivector, got degree {}",
                pi.degree()
            )));
        }
        let m = parent.rank();
        let mut matrix = SMatrix::zeros(parent.ring(), m, m);
        for (idx, c) in pi.coeffs() {
            let (a, b) = (idx[0] as usize, idx[1] as usize);
            matrix.set(b, a, c.clone());
            matrix.set(a, b, -c);
        }
        Ok(GeneralBisection { parent, matrix })
    }

    pub fn parent(&self) -> &Arc<Algebroid> {
        &self.parent
    }

    pub fn matrix(&self) -> &SMatrix {
        &self.matrix
    }

    /// First pair `(a, b)` (1-based) with `F^{ab} + F^{ba} != 0`.
    pub fn skew_violation(&self) -> Option<(usize, usize)> {
        let m = self.parent.rank();
        for a in 0..m {
            for b in a..m {
                if !(self.matrix.get(a, b) + self.matrix.get(b, a)).is_zero() {
                    return Some((a + 1, b + 1));
                }
            }
        }
        None
    }

    pub fn is_skew(&self) -> bool {
        self.skew_violation().is_none()
    }

    /// The bivector `pi` with `i_w pi = F^# w`; its coefficient on `e_a ^ e_b` is `F^{ba}`.
    pub fn to_bivector(&self) -> Result<Multivector> {
        if let Some((a, b)) = self.skew_violation() {
            return Err(Error::SkewViolation(a, b));
        }
        let m = self.parent.rank();
        let mut pi = self.parent.zero_mv(2);
        for a in 0..m {
            for b in (a + 1)..m {
                pi.add_term(&[a, b], self.matrix.get(b, a).clone());
            }
        }
        Ok(pi)
    }

    pub fn sharp(&self, w: &Form) -> Multivector {
        self.parent.section(self.matrix.mul_vec(&w.vector()))
    }

    /// `F(w, t) = t(F^# w)`.
    pub fn eval(&self, w: &Form, t: &Form) -> Scalar {
        pairing(t, &self.sharp(w))
    }

    pub fn neg(&self) -> Self {
        self.scale(&GaussRational::from_int(-1))
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        GeneralBisection {
            parent: self.parent.clone(),
            matrix: self.matrix.scale(c),
        }
    }

    /// The bisection `FG` with `(FG)^# = F^# o G^#`, i.e. the matrix product.
    pub fn compose(&self, g: &Endo) -> Self {
        GeneralBisection {
            parent: self.parent.clone(),
            matrix: self.matrix.mul(g.matrix()),
        }
    }

    pub fn is_poisson(&self) -> Result<PoissonCheck> {
        is_poisson(&self.parent, &self.to_bivector()?)
    }
}

/// `pi^# w = i_w pi`.
pub fn sharp(pi: &Multivector, w: &Form) -> Multivector {
    contract(w, pi)
}

/// `pi(w, t) = t(pi^# w)`.
pub fn bivector_eval(pi: &Multivector, w: &Form, t: &Form) -> Scalar {
    pairing(t, &sharp(pi, w))
}

/// Outcome of the Poisson test; `residual` is `[pi, pi]`.
#[derive(Clone, Debug)]
pub struct PoissonCheck {
    pub residual: Multivector,
}

impl PoissonCheck {
    pub fn is_poisson(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Ratio between `[pi, pi]` and the cyclic component formula; fixed once on `so(3)`.
pub const CYCLIC_NORMALIZATION: i128 = 2;

/// `sum_cyc(a,e,d) pi^{ab} rho_b(pi^{ed}) + pi^{ab} pi^{cd} C^e_{bc}` for one index triple.
pub fn cyclic_jacobiator(
    alg: &Algebroid,
    pi: &Multivector,
    a: usize,
    e: usize,
    d: usize,
) -> Scalar {
    let m = alg.rank();
    let mut acc = alg.zero_fn();
    for &(a, e, d) in &[(a, e, d), (e, d, a), (d, a, e)] {
        let sa = sharp(pi, &alg.th(a));
        acc = &acc + &alg.rho_section(&sa, &pi.get(&[e, d]));
        for b in 0..m {
            let pab = pi.get(&[a, b]);
            if pab.is_zero() {
                continue;
            }
            for c in 0..m {
                let cbc = alg.c(b, c, e);
                if cbc.is_zero() {
                    continue;
                }
                acc = &acc + &(&(&pab * &pi.get(&[c, d])) * cbc);
            }
        }
    }
    acc
}

/// Computes `[pi, pi]` with the Schouten bracket and, independently, componentwise from the
/// cyclic formula; the two must agree.
pub fn is_poisson(alg: &Algebroid, pi: &Multivector) -> Result<PoissonCheck> {
    alg.check_mv(pi)?;
    if pi.degree() != 2 {
        return Err(Error::ShapeMismatch(format!(
            "expected a bivector, got degree {}",
            pi.degree()
        )));
    }
    let residual = alg.schouten(pi, pi);
    let kappa = GaussRational::from_int(CYCLIC_NORMALIZATION);
    for t in Multivector::tuples(alg.rank(), 3) {
        let cyc = cyclic_jacobiator(alg, pi, t[0], t[1], t[2]).scale(&kappa);
        if cyc != residual.get(&t) {
            return Err(Error::InternalInconsistency(format!(
                "[pi,pi] component ({},{},{}) is {} but the cyclic formula gives {}",
                t[0] + 1,
                t[1] + 1,
                t[2] + 1,
                residual.get(&t),
                cyc
            )));
        }
    }
    Ok(PoissonCheck { residual })
}

/// `{f, g} = pi(d_E f, d_E g)`.
pub fn poisson_bracket(alg: &Algebroid, pi: &Multivector, f: &Scalar, g: &Scalar) -> Scalar {
    bivector_eval(pi, &alg.df(f), &alg.df(g))
}

/// `L_{#w} t - L_{#t} w - d_E(t(#w))` for any sharp map `#`.
pub(crate) fn bracket_with(
    alg: &Algebroid,
    sharp: &dyn Fn(&Form) -> Multivector,
    w: &Form,
    t: &Form,
) -> Form {
    let sw = sharp(w);
    let st = sharp(t);
    let pair = pairing(t, &sw);
    alg.lie_derivative_form(&sw, t)
        .sub(&alg.lie_derivative_form(&st, w))
        .sub(&alg.df(&pair))
}

/// The bracket of 1-forms induced by a bivector.
pub fn form_bracket(alg: &Algebroid, pi: &Multivector, w: &Form, t: &Form) -> Form {
    bracket_with(alg, &|x| sharp(pi, x), w, t)
}

/// `rho~(w) = rho(pi^# w)` as a vector field.
pub fn anchor_tilde(alg: &Algebroid, pi: &Multivector, w: &Form) -> Vec<Scalar> {
    alg.anchor_of(&sharp(pi, w))
}

/// `E*` with the form bracket and anchor `rho o pi^#`, in the coframe `{e^a}`.
#[derive(Clone)]
pub struct DualAlgebroid {
    pub algebroid: Algebroid,
    pub pi: Multivector,
}

/// Builds and verifies the dual algebroid of a Poisson bisection.
pub fn dual_algebroid(alg: &Algebroid, pi: &Multivector) -> Result<DualAlgebroid> {
    if !is_poisson(alg, pi)?.is_poisson() {
        return Err(Error::NotPoisson);
    }
    let m = alg.rank();
    let ring = alg.ring();
    let rows: Vec<Vec<Scalar>> = (0..m).map(|a| anchor_tilde(alg, pi, &alg.th(a))).collect();
    let anchor = SMatrix::from_rows(ring, rows);
    let mut table = vec![alg.zero_fn(); m * m * m];
    for a in 0..m {
        for b in (a + 1)..m {
            let br = form_bracket(alg, pi, &alg.th(a), &alg.th(b));
            for (c, v) in br.vector().into_iter().enumerate() {
                table[(b * m + a) * m + c] = -&v;
                table[(a * m + b) * m + c] = v;
            }
        }
    }
    let dual = Algebroid::from_full(&format!("{}*", alg.name()), ring, m, anchor, |a, b, k| {
        table[(a * m + b) * m + k].clone()
    })?;
    let dual = dual
        .verified()
        .map_err(|e| Error::InternalInconsistency(format!("dual algebroid: {}", e)))?;
    Ok(DualAlgebroid {
        algebroid: dual,
        pi: pi.clone(),
    })
}

/// The Lichnerowicz differential on `p`-sections of `E`, viewed as `p`-cochains of the dual
/// algebroid:
/// `d S(w_0..w_p) = sum_k (-1)^k rho~(w_k) S(..^k..) + sum_{k<l} (-1)^{k+l} S([w_k,w_l]_pi, ..^k..^l..)`.
pub fn lichnerowicz_d(alg: &Algebroid, pi: &Multivector, s: &Multivector) -> Result<Multivector> {
    alg.check_mv(s)?;
    if !is_poisson(alg, pi)?.is_poisson() {
        return Err(Error::NotPoisson);
    }
    Ok(lichnerowicz_unchecked(alg, pi, s))
}

pub(crate) fn lichnerowicz_unchecked(
    alg: &Algebroid,
    pi: &Multivector,
    s: &Multivector,
) -> Multivector {
    let m = alg.rank();
    let p = s.degree();
    let mut out = alg.zero_mv(p + 1);
    if p + 1 > m {
        return out;
    }
    let sharps: Vec<Multivector> = (0..m).map(|a| sharp(pi, &alg.th(a))).collect();
    let mut brackets: Vec<Vec<Scalar>> = vec![Vec::new(); m * m];
    for a in 0..m {
        for b in (a + 1)..m {
            brackets[a * m + b] = form_bracket(alg, pi, &alg.th(a), &alg.th(b)).vector();
        }
    }
    for tuple in Multivector::tuples(m, p + 1) {
        let mut acc = alg.zero_fn();
        for k in 0..=p {
            let mut rest = tuple.clone();
            let ak = rest.remove(k);
            let v = alg.rho_section(&sharps[ak], &s.get(&rest));
            acc = if k % 2 == 0 { &acc + &v } else { &acc - &v };
        }
        for k in 0..=p {
            for l in (k + 1)..=p {
                let mut rest = tuple.clone();
                rest.remove(l);
                rest.remove(k);
                for (c, coef) in brackets[tuple[k] * m + tuple[l]].iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    let mut args = vec![c];
                    args.extend_from_slice(&rest);
                    let v = coef * &s.get(&args);
                    acc = if (k + l) % 2 == 0 {
                        &acc + &v
                    } else {
                        &acc - &v
                    };
                }
            }
        }
        out.add_term(&tuple, acc);
    }
    out
}

/// Rank of the induced base Poisson tensor `rho o F^# o rho^*` at each point.
pub fn distribution_rank(
    f: &GeneralBisection,
    points: &[Vec<GaussRational>],
) -> Result<Vec<usize>> {
    let anchor = f.parent.anchor();
    let mat = anchor.transpose().mul(&f.matrix).mul(anchor);
    points.iter().map(|pt| Ok(mat.eval(pt)?.rank())).collect()
}

/// Rank of the bundle map `rho o F^#: E* -> TM` at each point.
pub fn anchored_image_rank(
    f: &GeneralBisection,
    points: &[Vec<GaussRational>],
) -> Result<Vec<usize>> {
    let mat = f.parent.anchor().transpose().mul(&f.matrix);
    points.iter().map(|pt| Ok(mat.eval(pt)?.rank())).collect()
}
