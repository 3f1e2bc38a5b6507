//! The prolongation of an algebroid over its own projection, with vertical and complete lifts.

use std::sync::Arc;

use crate::algebroid::Algebroid;
use crate::complex::Endo;
use crate::error::{Error, Result};
use crate::linalg::SMatrix;
use crate::scalar::Scalar;
use crate::tensor::{Kind, Multivector, Skew};

/// `L^p(E)` in the frame `X_1..X_m, V_1..V_m` over coordinates `(x, y)`.
#[derive(Clone, Debug)]
pub struct Prolongation {
    base: Arc<Algebroid>,
    total: Arc<Algebroid>,
    var_map: Vec<usize>,
}

const FIBER_PREFIXES: [&str; 4] = ["y", "v", "w", "u"];

/// Builds the prolongation; fiber coordinates are `y1..ym` unless those names are taken.
pub fn prolong(base: &Arc<Algebroid>) -> Result<Prolongation> {
    let m = base.rank();
    let n = base.base_dim();
    let ring = base.ring();
    let prefix = FIBER_PREFIXES
        .iter()
        .find(|p| (1..=m).all(|a| ring.var_index(&format!("{}{}", p, a)).is_none()))
        .ok_or_else(|| Error::NameCollision("no free prefix for fiber coordinates".into()))?;
    let fiber: Vec<String> = (1..=m).map(|a| format!("{}{}", prefix, a)).collect();
    let free = crate::scalar::CoordinateRing::free(&fiber);
    let total_ring = ring.concat(&free, &fiber)?;
    let var_map: Vec<usize> = (0..n).collect();
    let anchor = SMatrix::from_fn(&total_ring, 2 * m, n + m, |r, c| {
        if r < m && c < n {
            base.anchor().get(r, c).embed(&total_ring, &var_map)
        } else if r >= m && c == n + (r - m) {
            Scalar::one(&total_ring)
        } else {
            Scalar::zero(&total_ring)
        }
    });
    let total = Algebroid::from_full(
        &format!("L({})", base.name()),
        &total_ring,
        2 * m,
        anchor,
        |a, b, c| {
            if a < m && b < m && c < m {
                base.c(a, b, c).embed(&total_ring, &var_map)
            } else {
                Scalar::zero(&total_ring)
            }
        },
    )?
    .verified()
    .map_err(|e| Error::InternalInconsistency(format!("prolongation: {}", e)))?;
    Ok(Prolongation {
        base: base.clone(),
        total: Arc::new(total),
        var_map,
    })
}

impl Prolongation {
    pub fn base(&self) -> &Arc<Algebroid> {
        &self.base
    }

    pub fn total(&self) -> &Arc<Algebroid> {
        &self.total
    }

    fn m(&self) -> usize {
        self.base.rank()
    }

    /// The fiber coordinate `y^a`.
    pub fn fiber_var(&self, a: usize) -> Scalar {
        Scalar::var(self.total.ring(), self.base.base_dim() + a)
    }

    /// A base function pulled back to the total space.
    pub fn lift_fn(&self, f: &Scalar) -> Scalar {
        f.embed(self.total.ring(), &self.var_map)
    }

    pub fn x(&self, a: usize) -> Multivector {
        self.total.e(a)
    }

    pub fn v(&self, a: usize) -> Multivector {
        self.total.e(self.m() + a)
    }

    /// `X`-block copy of a base tensor: `f e_I -> f X_I`.
    pub fn horizontal_copy<K: Kind>(&self, t: &Skew<K>) -> Skew<K> {
        t.embed(self.total.ring(), 2 * self.m(), &self.var_map, 0)
    }

    /// `S^v`: `f e_I -> f V_I`.
    pub fn vlift(&self, s: &Multivector) -> Multivector {
        s.embed(self.total.ring(), 2 * self.m(), &self.var_map, self.m())
    }

    /// `f^c = rho(e_a)(f) y^a` on functions.
    pub fn clift_fn(&self, f: &Scalar) -> Scalar {
        let mut out = Scalar::zero(self.total.ring());
        for a in 0..self.m() {
            let r = self.base.rho(a, f);
            if !r.is_zero() {
                out = &out + &(&self.lift_fn(&r) * &self.fiber_var(a));
            }
        }
        out
    }

    /// `e_a^c = X_a - C^b_{ac} y^c V_b`.
    pub fn frame_clift(&self, a: usize) -> Multivector {
        let m = self.m();
        let mut out = self.x(a);
        for b in 0..m {
            let mut coef = Scalar::zero(self.total.ring());
            for c in 0..m {
                let cabc = self.base.c(a, c, b);
                if !cabc.is_zero() {
                    coef = &coef + &(&self.lift_fn(cabc) * &self.fiber_var(c));
                }
            }
            if !coef.is_zero() {
                out.add_term(&[m + b], -&coef);
            }
        }
        out
    }

    /// `S^c`, extended from functions and frame sections by `(S ^ T)^c = S^c ^ T^v + S^v ^ T^c`.
    pub fn clift(&self, s: &Multivector) -> Multivector {
        let m = self.m();
        let total = &self.total;
        let vs = self.vlift(s);
        let frames: Vec<Multivector> = (0..m).map(|a| self.frame_clift(a)).collect();
        let zero1 = total.zero_mv(1);
        let mut out = vs.derive_generators(&|k| {
            if k >= m {
                frames[k - m].clone()
            } else {
                zero1.clone()
            }
        });
        for (idx, f) in s.coeffs() {
            let fc = self.clift_fn(f);
            if fc.is_zero() {
                continue;
            }
            let vi: Vec<usize> = idx.iter().map(|&a| a as usize + m).collect();
            out = out.add(&total.mv(&vi).scale(&fc));
        }
        out
    }

    /// `sum_c y^c (T_c)^v`: the fiber-linear vertical section of `u -> T(u)` given `T(e_c)`.
    pub fn fiber_linear_vlift(&self, images: &[Multivector]) -> Multivector {
        let mut out = self.total.zero_mv(1);
        for (c, img) in images.iter().enumerate() {
            out = out.add(&self.vlift(img).scale(&self.fiber_var(c)));
        }
        out
    }
}

/// `J^c`: `J^c X_b = J^a_b X_a + K^a_b V_a`, `J^c V_b = J^a_b V_a`, with
/// `K^a_b = (rho(e_c)(J^a_b) + C^d_{bc} J^a_d - C^a_{dc} J^d_b) y^c`, the unique choice with
/// `J^c s^c = (J s)^c` for all sections.
pub fn clift_endo(p: &Prolongation, j: &Endo) -> Result<Endo> {
    let base = p.base();
    let m = base.rank();
    let ring = p.total().ring().clone();
    let jm = j.matrix();
    let mut mat = SMatrix::zeros(&ring, 2 * m, 2 * m);
    for a in 0..m {
        for b in 0..m {
            let jab = p.lift_fn(jm.get(a, b));
            mat.set(a, b, jab.clone());
            mat.set(m + a, m + b, jab);
            let mut k = Scalar::zero(&ring);
            for c in 0..m {
                let mut coef = base.rho(c, jm.get(a, b));
                for d in 0..m {
                    coef = &coef + &(base.c(b, c, d) * jm.get(a, d));
                    coef = &coef - &(base.c(d, c, a) * jm.get(d, b));
                }
                if !coef.is_zero() {
                    k = &k + &(&p.lift_fn(&coef) * &p.fiber_var(c));
                }
            }
            mat.set(m + a, b, k);
        }
    }
    Endo::almost_complex(p.total().clone(), mat)
}
