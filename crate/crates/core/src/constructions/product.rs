//! Direct products `E1 x E2 -> M1 x M2` and product almost complex Poisson data.

use std::sync::Arc;

use crate::algebroid::Algebroid;
use crate::complex::Endo;
use crate::error::{Error, Result};
use crate::linalg::SMatrix;
use crate::poisson::{is_acp, AcpCheck};
use crate::scalar::Scalar;
use crate::tensor::{Kind, Multivector, Skew};

/// `E1 x E2` with frame `e_1..e_{m1}, e'_1..e'_{m2}` over coordinates of `M1` then `M2`.
#[derive(Clone, Debug)]
pub struct Product {
    pub algebroid: Arc<Algebroid>,
    pub left: Arc<Algebroid>,
    pub right: Arc<Algebroid>,
    left_vars: Vec<usize>,
    right_vars: Vec<usize>,
}

/// Renames coordinates of the second factor that clash with the first by appending `_2`.
pub fn direct_product(a1: &Arc<Algebroid>, a2: &Arc<Algebroid>) -> Result<Product> {
    let (r1, r2) = (a1.ring(), a2.ring());
    let (n1, n2) = (r1.nvars(), r2.nvars());
    let (m1, m2) = (a1.rank(), a2.rank());
    let names: Vec<String> = r2
        .names()
        .iter()
        .map(|nm| {
            if r1.var_index(nm).is_some() {
                format!("{}_2", nm)
            } else {
                nm.clone()
            }
        })
        .collect();
    for nm in &names {
        if r1.var_index(nm).is_some() || names.iter().filter(|o| *o == nm).count() > 1 {
            return Err(Error::NameCollision(nm.clone()));
        }
    }
    let ring = r1.concat(r2, &names)?;
    let left_vars: Vec<usize> = (0..n1).collect();
    let right_vars: Vec<usize> = (n1..n1 + n2).collect();
    let anchor = SMatrix::from_fn(&ring, m1 + m2, n1 + n2, |r, c| match (r < m1, c < n1) {
        (true, true) => a1.anchor().get(r, c).embed(&ring, &left_vars),
        (false, false) => a2.anchor().get(r - m1, c - n1).embed(&ring, &right_vars),
        _ => Scalar::zero(&ring),
    });
    let alg = Algebroid::from_full(
        &format!("{}x{}", a1.name(), a2.name()),
        &ring,
        m1 + m2,
        anchor,
        |a, b, c| {
            if a < m1 && b < m1 && c < m1 {
                a1.c(a, b, c).embed(&ring, &left_vars)
            } else if a >= m1 && b >= m1 && c >= m1 {
                a2.c(a - m1, b - m1, c - m1).embed(&ring, &right_vars)
            } else {
                Scalar::zero(&ring)
            }
        },
    )?
    .verified()
    .map_err(|e| Error::InternalInconsistency(format!("direct product: {}", e)))?;
    Ok(Product {
        algebroid: Arc::new(alg),
        left: a1.clone(),
        right: a2.clone(),
        left_vars,
        right_vars,
    })
}

impl Product {
    /// `1 (x) t` for a tensor on the first factor.
    pub fn from_left<K: Kind>(&self, t: &Skew<K>) -> Skew<K> {
        t.embed(
            self.algebroid.ring(),
            self.algebroid.rank(),
            &self.left_vars,
            0,
        )
    }

    /// `1 (x) t` for a tensor on the second factor.
    pub fn from_right<K: Kind>(&self, t: &Skew<K>) -> Skew<K> {
        t.embed(
            self.algebroid.ring(),
            self.algebroid.rank(),
            &self.right_vars,
            self.left.rank(),
        )
    }

    pub fn left_fn(&self, f: &Scalar) -> Scalar {
        f.embed(self.algebroid.ring(), &self.left_vars)
    }

    pub fn right_fn(&self, f: &Scalar) -> Scalar {
        f.embed(self.algebroid.ring(), &self.right_vars)
    }

    /// Block-diagonal `G1 + G2`.
    pub fn endo(&self, g1: &Endo, g2: &Endo) -> Result<Endo> {
        let m1 = self.left.rank();
        let ring = self.algebroid.ring().clone();
        let m = self.algebroid.rank();
        let mat = SMatrix::from_fn(&ring, m, m, |r, c| match (r < m1, c < m1) {
            (true, true) => self.left_fn(g1.matrix().get(r, c)),
            (false, false) => self.right_fn(g2.matrix().get(r - m1, c - m1)),
            _ => Scalar::zero(&ring),
        });
        Endo::new(self.algebroid.clone(), mat)
    }

    /// `(J1 + J2, pi1 + pi2)` and its ACP test.
    pub fn acp_data(
        &self,
        (j1, p1): (&Endo, &Multivector),
        (j2, p2): (&Endo, &Multivector),
    ) -> Result<(Endo, Multivector, AcpCheck)> {
        let j = self.endo(j1, j2)?;
        if !j.is_almost_complex() {
            return Err(Error::PreconditionFailed(
                "factor structures are not almost complex".into(),
            ));
        }
        let pi = self.from_left(p1).add(&self.from_right(p2));
        let check = is_acp(&j, &pi)?;
        Ok((j, pi, check))
    }
}
