//! Almost complex Poisson structures: the ACP test, real parts, `I_E`, sigma operators,
//! Hamiltonian sections and the correspondence with `d'`-symplectic forms.

use crate::algebroid::Algebroid;
use crate::complex::{bigrade, nijenhuis, BigradeTable, Endo};
use crate::error::{Error, Result};
use crate::linalg::SMatrix;
use crate::scalar::{sample_points, GaussRational, Scalar};
use crate::tensor::{pairing, Contra, Form, Multivector};

use super::sharp;

/// `[pi20, pi20]` and `[pi20, conj(pi20)]`.
#[derive(Clone, Debug)]
pub struct AcpCheck {
    pub self_bracket: Multivector,
    pub mixed_bracket: Multivector,
}

impl AcpCheck {
    pub fn is_acp(&self) -> bool {
        self.self_bracket.is_zero() && self.mixed_bracket.is_zero()
    }
}

pub(crate) fn require_bidegree<K: crate::tensor::Kind>(
    j: &Endo,
    x: &crate::tensor::Skew<K>,
    p: usize,
    q: usize,
) -> Result<BigradeTable<K>> {
    let table = bigrade(j, x);
    if x.is_zero() || table.is_pure_of(p, q) {
        Ok(table)
    } else {
        Err(Error::NotPure(format!(
            "expected bidegree ({},{}), found {:?}",
            p,
            q,
            table.bidegrees()
        )))
    }
}

pub fn is_acp(j: &Endo, pi20: &Multivector) -> Result<AcpCheck> {
    let alg = j.parent();
    alg.check_mv(pi20)?;
    require_bidegree(j, pi20, 2, 0)?;
    Ok(AcpCheck {
        self_bracket: alg.schouten(pi20, pi20),
        mixed_bracket: alg.schouten(pi20, &pi20.conj()),
    })
}

/// `{f, g} = <d_E f ^ d_E g, pi20>`.
pub fn acp_function_bracket(alg: &Algebroid, pi20: &Multivector, f: &Scalar, g: &Scalar) -> Scalar {
    pairing(&alg.df(f).wedge(&alg.df(g)), pi20)
}

/// `(pi20 + conj pi20, i (pi20 - conj pi20))`.
pub fn real_parts(pi20: &Multivector) -> (Multivector, Multivector) {
    let c = pi20.conj();
    (pi20.add(&c), pi20.sub(&c).scale_const(&GaussRational::i()))
}

/// `I_E`: the Grassmann-algebra extension of `pi^#`, `e^{a1} ^ .. ^ e^{ap} -> pi^# e^{a1} ^ .. ^ pi^# e^{ap}`.
pub fn ie_map(alg: &Algebroid, pi: &Multivector, phi: &Form) -> Multivector {
    let images: Vec<Multivector> = (0..alg.rank()).map(|a| sharp(pi, &alg.th(a))).collect();
    phi.map_generators(alg.ring(), alg.rank(), &|a| images[a].clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sigma {
    /// `sigma(S)` with the real tensor `pi20 + conj pi20`.
    Full,
    /// `sigma^1(S)`, built from `pi20`.
    One,
    /// `sigma^2(S)`, built from `conj pi20`.
    Two,
    /// The `(p+1, q)` part of `sigma^1` on `(p, q)` components.
    OneOne,
    /// The `(p+2, q-1)` part of `sigma^1` on `(p, q)` components.
    OneTwo,
}

/// The sigma operators, with `sigma(S) = [pi, S]`.
pub fn sigma(j: &Endo, pi20: &Multivector, s: &Multivector, which: Sigma) -> Multivector {
    let alg = j.parent();
    match which {
        Sigma::Full => alg.schouten(&pi20.add(&pi20.conj()), s),
        Sigma::One => alg.schouten(pi20, s),
        Sigma::Two => alg.schouten(&pi20.conj(), s),
        Sigma::OneOne | Sigma::OneTwo => {
            let zero = alg.zero_mv(s.degree() + 1);
            let mut out = zero.clone();
            for ((p, q), comp) in &bigrade(j, s).components {
                let img = bigrade(j, &alg.schouten(pi20, comp));
                let (p, q) = (*p as i64, *q as i64);
                let part = if which == Sigma::OneOne {
                    img.part(p + 1, q, &zero)
                } else {
                    img.part(p + 2, q - 1, &zero)
                };
                out = out.add(&part);
            }
            out
        }
    }
}

/// Full bigrade table of `sigma^1(S)`; for non-integrable `J` it has more than two parts.
pub fn sigma1_split(j: &Endo, pi20: &Multivector, s: &Multivector) -> BigradeTable<Contra> {
    bigrade(j, &j.parent().schouten(pi20, s))
}

/// `s_f = i_{d'f} pi20` with `d'f` the (1,0)-part of `d_E f`.
pub fn hamiltonian_section(j: &Endo, pi20: &Multivector, f: &Scalar) -> Multivector {
    let alg = j.parent();
    sharp(pi20, &j.form_part10(&alg.df(f)))
}

/// How invertibility of a square matrix was decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nondegeneracy {
    /// The determinant is a nonzero constant, so the inverse is polynomial.
    Unit,
    /// The determinant is nonconstant but nonzero at every sampled point.
    Pointwise {
        points: usize,
    },
    Degenerate(String),
}

pub fn nondegeneracy(mat: &SMatrix, seed: u64) -> Nondegeneracy {
    let det = mat.det();
    if det.is_zero() {
        return Nondegeneracy::Degenerate("determinant vanishes identically".into());
    }
    if det.is_constant() {
        return Nondegeneracy::Unit;
    }
    match sample_points(mat.ring(), 25, seed) {
        Ok(points) => {
            for pt in &points {
                if det.eval_unchecked(pt) == GaussRational::from_int(0) {
                    return Nondegeneracy::Degenerate(format!(
                        "determinant {} vanishes at a sampled point",
                        det
                    ));
                }
            }
            Nondegeneracy::Pointwise {
                points: points.len(),
            }
        }
        Err(e) => Nondegeneracy::Degenerate(e.to_string()),
    }
}

fn form_matrix(alg: &Algebroid, w: &Form) -> SMatrix {
    let m = alg.rank();
    SMatrix::from_fn(alg.ring(), m, m, |a, b| w.get(&[a, b]))
}

fn mv_matrix(alg: &Algebroid, s: &Multivector) -> SMatrix {
    let m = alg.rank();
    SMatrix::from_fn(alg.ring(), m, m, |a, b| s.get(&[a, b]))
}

fn polynomial_inverse(mat: &SMatrix) -> Result<SMatrix> {
    match nondegeneracy(mat, 0) {
        Nondegeneracy::Degenerate(why) => Err(Error::Degenerate(why)),
        Nondegeneracy::Pointwise { .. } => Err(Error::Degenerate(format!(
            "determinant {} is pointwise nonzero but not a unit, so the inverse is not polynomial",
            mat.det()
        ))),
        Nondegeneracy::Unit => mat
            .inverse()
            .ok_or_else(|| Error::InternalInconsistency("unit determinant without inverse".into())),
    }
}

/// The (3,0)-part of `d_E w`.
fn d_prime_30(j: &Endo, w: &Form) -> Form {
    let alg = j.parent();
    bigrade(j, &alg.d(w)).part(3, 0, &alg.zero_form(3))
}

/// `pi20 = I_E(omega20)`: the bivector of `pi = pi20 + conj pi20` has coefficient matrix
/// `-(W^{-1})`, `W` the matrix of `omega20 + conj omega20`.
pub fn symplectic_to_poisson(j: &Endo, omega20: &Form) -> Result<Multivector> {
    let alg = j.parent();
    alg.check_form(omega20)?;
    if !nijenhuis(j).is_zero() {
        return Err(Error::NotIntegrable);
    }
    require_bidegree(j, omega20, 2, 0)?;
    let dw = d_prime_30(j, omega20);
    if !dw.is_zero() {
        return Err(Error::NotClosed(format!("d' omega = {}", dw)));
    }
    let w = form_matrix(alg, &omega20.add(&omega20.conj()));
    let p = polynomial_inverse(&w)?.neg();
    let m = alg.rank();
    let mut pi = alg.zero_mv(2);
    for a in 0..m {
        for b in (a + 1)..m {
            pi.add_term(&[a, b], p.get(a, b).clone());
        }
    }
    Ok(bigrade(j, &pi).part(2, 0, &alg.zero_mv(2)))
}

/// `omega20 = I_E^{-1}(pi20)`; fails when `pi` is degenerate or `pi20` is not ACP.
pub fn poisson_to_symplectic(j: &Endo, pi20: &Multivector) -> Result<Form> {
    let alg = j.parent();
    if !is_acp(j, pi20)?.is_acp() {
        return Err(Error::NotAcp);
    }
    let p = mv_matrix(alg, &pi20.add(&pi20.conj()));
    let w = polynomial_inverse(&p)?.neg();
    let m = alg.rank();
    let mut omega = alg.zero_form(2);
    for a in 0..m {
        for b in (a + 1)..m {
            omega.add_term(&[a, b], w.get(a, b).clone());
        }
    }
    let omega20 = bigrade(j, &omega).part(2, 0, &alg.zero_form(2));
    if !nijenhuis(j).is_zero() {
        return Err(Error::InternalInconsistency(
            "nondegenerate ACP structure on a non-integrable J".into(),
        ));
    }
    let dw = d_prime_30(j, &omega20);
    if !dw.is_zero() {
        return Err(Error::InternalInconsistency(format!(
            "inverse form is not d'-closed: {}",
            dw
        )));
    }
    Ok(omega20)
}
