//! Endomorphisms, almost complex structures and the induced bigrading.

mod bigrade;
mod nijenhuis;

use std::sync::Arc;

use crate::algebroid::Algebroid;
use crate::error::{Error, Result};
use crate::linalg::SMatrix;
use crate::scalar::{GaussRational, Scalar};
use crate::tensor::{Form, Kind, Multivector, Skew};

pub use bigrade::{bigrade, BigradeTable};
pub use nijenhuis::{
    check_ac_morphism, de_components, integrability_report, nijenhuis,
    nijenhuis_tensoriality_residual, AcMorphismReport, DeComponents, IntegrabilityReport, Tensor12,
};

/// Bundle endomorphism with `G e_b = sum_a G[a][b] e_a`.
#[derive(Clone, Debug)]
pub struct Endo {
    parent: Arc<Algebroid>,
    matrix: SMatrix,
}

impl Endo {
    pub fn new(parent: Arc<Algebroid>, matrix: SMatrix) -> Result<Self> {
        let m = parent.rank();
        if matrix.rows() != m || matrix.cols() != m {
            return Err(Error::ShapeMismatch(format!(
                "endomorphism is {}x{}, rank is {}",
                matrix.rows(),
                matrix.cols(),
                m
            )));
        }
        Ok(Endo { parent, matrix })
    }

    /// Checks `J^2 = -id` exactly.
    pub fn almost_complex(parent: Arc<Algebroid>, matrix: SMatrix) -> Result<Self> {
        let j = Self::new(parent, matrix)?;
        if j.parent.rank() % 2 != 0 {
            return Err(Error::NotAlmostComplex {
                row: 0,
                col: 0,
                value: "odd rank".into(),
            });
        }
        let defect = j
            .matrix
            .mul(&j.matrix)
            .add(&SMatrix::identity(j.parent.ring(), j.parent.rank()));
        if let Some((row, col, value)) = defect.first_nonzero() {
            return Err(Error::NotAlmostComplex {
                row: row + 1,
                col: col + 1,
                value: value.to_string(),
            });
        }
        Ok(j)
    }

    /// `J0 = [[0, -I], [I, 0]]` on a rank-`2n` algebroid.
    pub fn standard(parent: Arc<Algebroid>) -> Result<Self> {
        let m = parent.rank();
        let n = m / 2;
        let ring = parent.ring().clone();
        let mat = SMatrix::from_fn(&ring, m, m, |a, b| {
            if b == a + n && a < n {
                Scalar::int(&ring, -1)
            } else if a == b + n && b < n {
                Scalar::one(&ring)
            } else {
                Scalar::zero(&ring)
            }
        });
        Self::almost_complex(parent, mat)
    }

    /// Pairs consecutive frame vectors: `J e_{2k-1} = e_{2k}`, `J e_{2k} = -e_{2k-1}`.
    pub fn paired(parent: Arc<Algebroid>) -> Result<Self> {
        let ring = parent.ring().clone();
        let mat = SMatrix::from_fn(&ring, parent.rank(), parent.rank(), |a, b| {
            if a % 2 == 1 && b + 1 == a {
                Scalar::one(&ring)
            } else if a % 2 == 0 && b == a + 1 {
                Scalar::int(&ring, -1)
            } else {
                Scalar::zero(&ring)
            }
        });
        Self::almost_complex(parent, mat)
    }

    pub fn identity(parent: Arc<Algebroid>) -> Self {
        let m = SMatrix::identity(parent.ring(), parent.rank());
        Endo { parent, matrix: m }
    }

    pub fn parent(&self) -> &Arc<Algebroid> {
        &self.parent
    }

    pub fn matrix(&self) -> &SMatrix {
        &self.matrix
    }

    pub fn is_almost_complex(&self) -> bool {
        self.matrix
            .mul(&self.matrix)
            .add(&SMatrix::identity(self.parent.ring(), self.parent.rank()))
            .is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.matrix.is_constant()
    }

    pub fn compose(&self, other: &Endo) -> Endo {
        Endo {
            parent: self.parent.clone(),
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    /// `J s` for a section.
    pub fn apply(&self, s: &Multivector) -> Multivector {
        assert_eq!(s.degree(), 1);
        self.parent.section(self.matrix.mul_vec(&s.vector()))
    }

    /// Dual action `(J^* w)_b = sum_a w_a J[a][b]`, so `(J^* w)(s) = w(J s)`.
    pub fn dual_apply(&self, w: &Form) -> Form {
        assert_eq!(w.degree(), 1);
        self.parent
            .covector(self.matrix.transpose().mul_vec(&w.vector()))
    }

    /// `J` on all slots multiplicatively (`Lambda^p J`).
    pub fn wedge_power<K: Kind>(&self, t: &Skew<K>) -> Skew<K> {
        let imgs = self.slot_images::<K>(&self.matrix);
        t.map_generators(self.parent.ring(), self.parent.rank(), &|a| imgs[a].clone())
    }

    /// `J` on all slots as a derivation (the infinitesimal action).
    pub fn derivation<K: Kind>(&self, t: &Skew<K>) -> Skew<K> {
        let imgs = self.slot_images::<K>(&self.matrix);
        t.derive_generators(&|a| imgs[a].clone())
    }

    /// Images of the generators under `mat` (columns on the frame, rows on the coframe).
    pub(crate) fn slot_images<K: Kind>(&self, mat: &SMatrix) -> Vec<Skew<K>> {
        let ring = self.parent.ring();
        (0..self.parent.rank())
            .map(|a| {
                let v = if K::CONTRA { mat.col(a) } else { mat.row(a) };
                Skew::<K>::from_vector(ring, v)
            })
            .collect()
    }

    /// `P^{1,0} = (id - iJ)/2`.
    pub fn p10(&self) -> SMatrix {
        self.projector(-1)
    }

    /// `P^{0,1} = (id + iJ)/2`.
    pub fn p01(&self) -> SMatrix {
        self.projector(1)
    }

    fn projector(&self, sign: i128) -> SMatrix {
        let half = GaussRational::frac(1, 2);
        let ij = self
            .matrix
            .scale(&(GaussRational::i() * GaussRational::from_int(sign)));
        SMatrix::identity(self.parent.ring(), self.parent.rank())
            .add(&ij)
            .scale(&half)
    }

    /// `(s - iJs)/2`.
    pub fn part10(&self, s: &Multivector) -> Multivector {
        self.parent.section(self.p10().mul_vec(&s.vector()))
    }

    /// `(s + iJs)/2`.
    pub fn part01(&self, s: &Multivector) -> Multivector {
        self.parent.section(self.p01().mul_vec(&s.vector()))
    }

    /// `(w - iJ^*w)/2`, a (1,0)-form.
    pub fn form_part10(&self, w: &Form) -> Form {
        self.parent
            .covector(self.p10().transpose().mul_vec(&w.vector()))
    }

    /// `(w + iJ^*w)/2`, a (0,1)-form.
    pub fn form_part01(&self, w: &Form) -> Form {
        self.parent
            .covector(self.p01().transpose().mul_vec(&w.vector()))
    }

    /// `G^*` in the convention where it acts on coframe coefficient columns by `G` itself,
    /// `(G^* w)_a = G[a][b] w_b`. This is the action used for deformed brackets.
    pub fn coframe_action(&self, w: &Form) -> Form {
        assert_eq!(w.degree(), 1);
        self.parent.covector(self.matrix.mul_vec(&w.vector()))
    }
}
