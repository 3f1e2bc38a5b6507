//! Linear connections on an algebroid and the horizontal geometry they induce on the prolongation.

use std::sync::Arc;

use crate::algebroid::Algebroid;
use crate::complex::Endo;
use crate::error::{Error, Result};
use crate::linalg::SMatrix;
use crate::poisson::{is_acp, AcpCheck};
use crate::scalar::{GaussRational, Scalar};
use crate::tensor::Multivector;

use super::prolong::Prolongation;

/// `nabla_{e_a} e_c = Gamma^b_{ac} e_b`.
#[derive(Clone, Debug)]
pub struct Connection {
    parent: Arc<Algebroid>,
    /// `gamma[(a * m + c) * m + b] = Gamma^b_{ac}`.
    gamma: Vec<Scalar>,
}

impl Connection {
    pub fn new(parent: Arc<Algebroid>, gamma: Vec<Scalar>) -> Result<Self> {
        let m = parent.rank();
        if gamma.len() != m * m * m {
            return Err(Error::ShapeMismatch(format!(
                "expected {} coefficients, got {}",
                m * m * m,
                gamma.len()
            )));
        }
        Ok(Connection { parent, gamma })
    }

    /// Coefficients from `f(a, c, b) = Gamma^b_{ac}`.
    pub fn from_fn(parent: Arc<Algebroid>, f: impl Fn(usize, usize, usize) -> Scalar) -> Self {
        let m = parent.rank();
        let mut gamma = Vec::with_capacity(m * m * m);
        for a in 0..m {
            for c in 0..m {
                for b in 0..m {
                    gamma.push(f(a, c, b));
                }
            }
        }
        Connection { parent, gamma }
    }

    pub fn zero(parent: Arc<Algebroid>) -> Self {
        let ring = parent.ring().clone();
        Self::from_fn(parent, |_, _, _| Scalar::zero(&ring))
    }

    pub fn parent(&self) -> &Arc<Algebroid> {
        &self.parent
    }

    pub fn gamma(&self, a: usize, c: usize, b: usize) -> &Scalar {
        let m = self.parent.rank();
        &self.gamma[(a * m + c) * m + b]
    }

    /// `nabla_s t = s^a (rho_a(t^b) + Gamma^b_{ac} t^c) e_b`.
    pub fn nabla(&self, s: &Multivector, t: &Multivector) -> Multivector {
        let alg = &self.parent;
        let m = alg.rank();
        let (sv, tv) = (s.vector(), t.vector());
        let comps = (0..m)
            .map(|b| {
                let mut acc = alg.zero_fn();
                for a in 0..m {
                    if sv[a].is_zero() {
                        continue;
                    }
                    let mut inner = alg.rho(a, &tv[b]);
                    for c in 0..m {
                        inner = &inner + &(self.gamma(a, c, b) * &tv[c]);
                    }
                    acc = &acc + &(&sv[a] * &inner);
                }
                acc
            })
            .collect();
        alg.section(comps)
    }

    pub fn torsion(&self, s: &Multivector, t: &Multivector) -> Multivector {
        self.nabla(s, t)
            .sub(&self.nabla(t, s))
            .sub(&self.parent.bracket(s, t))
    }

    /// `R(s,t)u = nabla_s nabla_t u - nabla_t nabla_s u - nabla_{[s,t]} u`.
    pub fn curvature(&self, s: &Multivector, t: &Multivector, u: &Multivector) -> Multivector {
        let st = self.parent.bracket(s, t);
        self.nabla(s, &self.nabla(t, u))
            .sub(&self.nabla(t, &self.nabla(s, u)))
            .sub(&self.nabla(&st, u))
    }

    /// `R(s,t)` as its values on the frame.
    pub fn curvature_images(&self, s: &Multivector, t: &Multivector) -> Vec<Multivector> {
        (0..self.parent.rank())
            .map(|c| self.curvature(s, t, &self.parent.e(c)))
            .collect()
    }
}

/// `G^b_a = Gamma^b_{ac} y^c` on the total space.
fn fiber_gamma(p: &Prolongation, conn: &Connection) -> SMatrix {
    let m = p.base().rank();
    let ring = p.total().ring().clone();
    SMatrix::from_fn(&ring, m, m, |b, a| {
        let mut acc = Scalar::zero(&ring);
        for c in 0..m {
            let g = conn.gamma(a, c, b);
            if !g.is_zero() {
                acc = &acc + &(&p.lift_fn(g) * &p.fiber_var(c));
            }
        }
        acc
    })
}

/// `s^h = s^a (X_a - Gamma^b_{ac} y^c V_b)`.
pub fn hlift(p: &Prolongation, conn: &Connection, s: &Multivector) -> Multivector {
    let m = p.base().rank();
    let g = fiber_gamma(p, conn);
    let mut out = p.total().zero_mv(1);
    for (a, sa) in s.vector().iter().enumerate() {
        if sa.is_zero() {
            continue;
        }
        let mut h = p.x(a);
        for b in 0..m {
            if !g.get(b, a).is_zero() {
                h.add_term(&[m + b], -g.get(b, a));
            }
        }
        out = out.add(&h.scale(&p.lift_fn(sa)));
    }
    out
}

/// The horizontal projector `h`: `h(H_a) = H_a`, `h(V_a) = 0`, in the `(X, V)` frame.
pub fn horizontal_projector(p: &Prolongation, conn: &Connection) -> Endo {
    let m = p.base().rank();
    let ring = p.total().ring().clone();
    let g = fiber_gamma(p, conn);
    let mat = SMatrix::from_fn(&ring, 2 * m, 2 * m, |r, c| {
        if c >= m {
            Scalar::zero(&ring)
        } else if r < m {
            if r == c {
                Scalar::one(&ring)
            } else {
                Scalar::zero(&ring)
            }
        } else {
            -g.get(r - m, c)
        }
    });
    Endo::new(p.total().clone(), mat).expect("square matrix of the right size")
}

/// `J^1(s^h) = s^v`, `J^1(s^v) = -s^h`, written in the `(X, V)` frame.
pub fn j1_structure(p: &Prolongation, conn: &Connection) -> Result<Endo> {
    let m = p.base().rank();
    let ring = p.total().ring().clone();
    let g = fiber_gamma(p, conn);
    let gg = g.mul(&g);
    let mat = SMatrix::from_fn(&ring, 2 * m, 2 * m, |r, c| {
        let delta = |x: usize, y: usize| {
            if x == y {
                Scalar::one(&ring)
            } else {
                Scalar::zero(&ring)
            }
        };
        match (r < m, c < m) {
            // J X_a = V_a - G^b_a X_b + G^b_a G^d_b V_d
            (true, true) => -g.get(r, c),
            (false, true) => &delta(r - m, c) + gg.get(r - m, c),
            // J V_a = -X_a + G^b_a V_b
            (true, false) => -&delta(r, c - m),
            (false, false) => g.get(r - m, c - m).clone(),
        }
    });
    Endo::almost_complex(p.total().clone(), mat)
}

/// Which sufficient conditions for the lifted `pi20` to be ACP hold, and the actual verdict.
#[derive(Clone, Debug)]
pub struct LiftCertificate {
    pub bracket_vanishes: bool,
    pub covariantly_constant: bool,
    pub curvature_vanishes: bool,
    pub torsion_vanishes: bool,
    pub acp: AcpCheck,
}

impl LiftCertificate {
    pub fn sufficient(&self) -> bool {
        self.bracket_vanishes
            && self.covariantly_constant
            && self.curvature_vanishes
            && self.torsion_vanishes
    }
}

/// `pi20 = (s1^h - i s1^v) ^ (s2^h - i s2^v)` relative to `J^1`, with its certificate.
pub fn example_pi_on_prolongation(
    p: &Prolongation,
    conn: &Connection,
    s1: &Multivector,
    s2: &Multivector,
) -> Result<(Multivector, LiftCertificate)> {
    let alg = p.base();
    let i = GaussRational::i();
    let z = |s: &Multivector| hlift(p, conn, s).sub(&p.vlift(s).scale_const(&i));
    let pi20 = z(s1).wedge(&z(s2));
    let j1 = j1_structure(p, conn)?;
    let cert = LiftCertificate {
        bracket_vanishes: alg.bracket(s1, s2).is_zero(),
        covariantly_constant: conn.nabla(s1, s2).is_zero(),
        curvature_vanishes: conn.curvature_images(s1, s2).iter().all(|v| v.is_zero()),
        torsion_vanishes: conn.torsion(s1, s2).is_zero(),
        acp: is_acp(&j1, &pi20)?,
    };
    if cert.sufficient() && !cert.acp.is_acp() {
        return Err(Error::InternalInconsistency(
            "sufficient conditions hold but the lifted bivector is not ACP".into(),
        ));
    }
    Ok((pi20, cert))
}
