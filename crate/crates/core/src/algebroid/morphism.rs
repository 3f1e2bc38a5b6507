//! Morphisms of Lie algebroids over the same base.

use std::sync::Arc;

use super::Algebroid;
use crate::error::{Error, Result};
use crate::linalg::SMatrix;
use crate::scalar::Scalar;
use crate::tensor::{Form, Multivector};

/// Bundle map `phi: E1 -> E2` over the identity, `(phi s)^c = phi[c][a] s^a`.
#[derive(Clone, Debug)]
pub struct Morphism {
    source: Arc<Algebroid>,
    target: Arc<Algebroid>,
    matrix: SMatrix,
}

/// Outcome of [`Morphism::check`]. Witness indices are 0-based frame indices.
#[derive(Clone, Debug)]
pub struct MorphismCheck {
    pub is_morphism: bool,
    /// First frame pair `(a, b)` with `phi[e_a, e_b] != [phi e_a, phi e_b]`.
    pub witness: Option<(usize, usize)>,
    /// Verdict of the dual criterion `d phi^* = phi^* d` on coframe forms of degree <= 2.
    pub cochain_criterion: bool,
}

impl Morphism {
    /// Fails unless the anchored condition `rho2 . phi = rho1` holds.
    pub fn new(source: Arc<Algebroid>, target: Arc<Algebroid>, matrix: SMatrix) -> Result<Self> {
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(Error::ShapeMismatch(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.rank(),
                source.rank()
            )));
        }
        if **source.ring() != **target.ring() {
            return Err(Error::NotMorphism(
                "source and target have different bases".into(),
            ));
        }
        // anchor rows are frame indices, so rho as a map E -> TM is anchor^T.
        let lhs = target.anchor().transpose().mul(&matrix);
        let rhs = source.anchor().transpose();
        if lhs != rhs {
            return Err(Error::NotMorphism(
                "anchor condition rho2 . phi = rho1 fails".into(),
            ));
        }
        Ok(Morphism {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(a: Arc<Algebroid>) -> Self {
        let m = SMatrix::identity(a.ring(), a.rank());
        Morphism {
            source: a.clone(),
            target: a,
            matrix: m,
        }
    }

    pub fn source(&self) -> &Arc<Algebroid> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebroid> {
        &self.target
    }

    pub fn matrix(&self) -> &SMatrix {
        &self.matrix
    }

    pub fn apply(&self, s: &Multivector) -> Multivector {
        let t = &self.target;
        s.map_generators(t.ring(), t.rank(), &|a| t.section(self.matrix.col(a)))
    }

    /// `(phi^* w)(s1, ..., sp) = w(phi s1, ..., phi sp)`.
    pub fn pullback(&self, w: &Form) -> Form {
        let s = &self.source;
        w.map_generators(s.ring(), s.rank(), &|c| s.covector(self.matrix.row(c)))
    }

    pub fn compose(&self, first: &Morphism) -> Result<Morphism> {
        if !Arc::ptr_eq(first.target(), &self.source) && first.target().rank() != self.source.rank()
        {
            return Err(Error::ShapeMismatch("morphisms are not composable".into()));
        }
        Ok(Morphism {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix),
        })
    }

    pub fn check(&self) -> MorphismCheck {
        let (s, t) = (&self.source, &self.target);
        let mut witness = None;
        'outer: for a in 0..s.rank() {
            for b in (a + 1)..s.rank() {
                let lhs = self.apply(&s.bracket(&s.e(a), &s.e(b)));
                let rhs = t.bracket(&self.apply(&s.e(a)), &self.apply(&s.e(b)));
                if lhs != rhs {
                    witness = Some((a, b));
                    break 'outer;
                }
            }
        }
        let mut cochain = true;
        'dual: for deg in 0..=2usize {
            for idx in Form::tuples(t.rank(), deg) {
                let w = t.form(&idx);
                if s.d(&self.pullback(&w)) != self.pullback(&t.d(&w)) {
                    cochain = false;
                    break 'dual;
                }
            }
            if deg == 0 {
                for i in 0..t.base_dim() {
                    let f = t.function_form(Scalar::var(t.ring(), i));
                    if s.d(&self.pullback(&f)) != self.pullback(&t.d(&f)) {
                        cochain = false;
                        break 'dual;
                    }
                }
            }
        }
        MorphismCheck {
            is_morphism: witness.is_none(),
            witness,
            cochain_criterion: cochain,
        }
    }
}
