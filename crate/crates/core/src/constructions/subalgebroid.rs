//! Subalgebroids given by spanning frames, graphs of morphisms, coisotropy and the graph theorem.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebroid::{Algebroid, Morphism};
use crate::complex::{check_ac_morphism, Endo};
use crate::error::{Error, Result};
use crate::linalg::{GMatrix, SMatrix};
use crate::poisson::bivector_eval;
use crate::scalar::{sample_points, GaussRational, Scalar};
use crate::tensor::{contract, pairing, Form, Multivector};

use super::product::{direct_product, Product};

/// How a membership or closure statement was established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certification {
    /// Exact identity in the coordinate ring.
    Symbolic,
    /// Exact checks at this many sampled rational points.
    Pointwise { points: usize },
}

/// The span of the columns of `frame` (an `m x k` matrix of section components).
#[derive(Clone, Debug)]
pub struct Subalgebroid {
    ambient: Arc<Algebroid>,
    frame: SMatrix,
    annihilator: Option<Vec<Form>>,
    pub closure: Certification,
}

const SAMPLE_COUNT: usize = 25;
const SAMPLE_SEED: u64 = 0x00c0_150b;

fn points_for(alg: &Algebroid) -> Result<Vec<Vec<GaussRational>>> {
    if alg.base_dim() == 0 {
        return Ok(vec![Vec::new()]);
    }
    sample_points(alg.ring(), SAMPLE_COUNT, SAMPLE_SEED).map_err(|_| Error::NoAnnihilator)
}

/// Annihilator of the column span when some `k x k` minor has constant nonzero determinant.
fn annihilator_from_unit_minor(alg: &Algebroid, frame: &SMatrix) -> Option<Vec<Form>> {
    let (m, k) = (frame.rows(), frame.cols());
    if k == 0 {
        return Some((0..m).map(|a| alg.th(a)).collect());
    }
    for rows in Multivector::tuples(m, k) {
        let cols: Vec<usize> = (0..k).collect();
        let minor = frame.submatrix(&rows, &cols);
        let det = minor.det();
        if det.is_zero() || !det.is_constant() {
            continue;
        }
        let inv = minor.inverse()?;
        let mut out = Vec::new();
        for i in (0..m).filter(|i| !rows.contains(i)) {
            // theta_i = e^i - (F_i F_R^{-1})_r e^{R_r}
            let fi = SMatrix::from_rows(alg.ring(), vec![frame.row(i)]);
            let coef = fi.mul(&inv);
            let mut theta = alg.th(i);
            for (r, &row) in rows.iter().enumerate() {
                theta.add_term(&[row], -coef.get(0, r));
            }
            out.push(theta);
        }
        return Some(out);
    }
    None
}

fn eval_vec(v: &[Scalar], pt: &[GaussRational]) -> Result<Vec<GaussRational>> {
    v.iter().map(|x| x.eval(pt)).collect()
}

fn span_rank(vectors: &[Vec<GaussRational>], dim: usize) -> usize {
    if vectors.is_empty() || dim == 0 {
        0
    } else {
        GMatrix::from_cols(vectors, dim).rank()
    }
}

fn contains(span: &[Vec<GaussRational>], v: &[GaussRational]) -> bool {
    if v.iter().all(|x| x.is_zero()) {
        return true;
    }
    !span.is_empty() && GMatrix::from_cols(span, v.len()).col_span_contains(v)
}

/// Left kernel of `F` at a point: covectors vanishing on every frame column.
fn point_annihilator(f: &GMatrix) -> Vec<Vec<GaussRational>> {
    let mut ft = GMatrix::zeros(f.cols, f.rows);
    for r in 0..f.rows {
        for c in 0..f.cols {
            ft.set(c, r, f.get(r, c).clone());
        }
    }
    if f.cols == 0 {
        return (0..f.rows)
            .map(|a| {
                (0..f.rows)
                    .map(|b| GaussRational::from_int((a == b) as i128))
                    .collect()
            })
            .collect();
    }
    ft.kernel()
}

impl Subalgebroid {
    /// Checks bracket closure: symbolically through the annihilator when one is supplied or a
    /// unit minor exists, otherwise at sampled points.
    pub fn new(
        ambient: Arc<Algebroid>,
        frame: SMatrix,
        annihilator: Option<Vec<Form>>,
    ) -> Result<Self> {
        if frame.rows() != ambient.rank() {
            return Err(Error::ShapeMismatch(format!(
                "frame has {} rows, algebroid rank is {}",
                frame.rows(),
                ambient.rank()
            )));
        }
        let annihilator = match annihilator {
            Some(a) => Some(a),
            None => annihilator_from_unit_minor(&ambient, &frame),
        };
        let mut sub = Subalgebroid {
            ambient,
            frame,
            annihilator,
            closure: Certification::Symbolic,
        };
        let sections = sub.sections();
        match &sub.annihilator {
            Some(ann) => {
                for (k, th) in ann.iter().enumerate() {
                    for s in &sections {
                        if !pairing(th, s).is_zero() {
                            return Err(Error::PreconditionFailed(format!(
                                "annihilator form {} does not vanish on the frame",
                                k + 1
                            )));
                        }
                    }
                }
                for (a, s) in sections.iter().enumerate() {
                    for t in &sections[a + 1..] {
                        let br = sub.ambient.bracket(s, t);
                        if ann.iter().any(|th| !pairing(th, &br).is_zero()) {
                            return Err(Error::PreconditionFailed(
                                "frame is not closed under the bracket".into(),
                            ));
                        }
                    }
                }
            }
            None => {
                let pts = points_for(&sub.ambient)?;
                let m = sub.ambient.rank();
                let mut brs = Vec::new();
                for (a, s) in sections.iter().enumerate() {
                    for t in &sections[a + 1..] {
                        brs.push(sub.ambient.bracket(s, t).vector());
                    }
                }
                for pt in &pts {
                    let cols: Vec<Vec<GaussRational>> = sections
                        .iter()
                        .map(|s| eval_vec(&s.vector(), pt))
                        .collect::<Result<_>>()?;
                    for b in &brs {
                        if !contains(&cols, &eval_vec(b, pt)?) {
                            return Err(Error::PreconditionFailed(
                                "frame is not closed under the bracket at a sampled point".into(),
                            ));
                        }
                    }
                    let _ = m;
                }
                sub.closure = Certification::Pointwise { points: pts.len() };
            }
        }
        Ok(sub)
    }

    pub fn ambient(&self) -> &Arc<Algebroid> {
        &self.ambient
    }

    pub fn frame(&self) -> &SMatrix {
        &self.frame
    }

    pub fn annihilator(&self) -> Option<&[Form]> {
        self.annihilator.as_deref()
    }

    pub fn sections(&self) -> Vec<Multivector> {
        (0..self.frame.cols())
            .map(|c| self.ambient.section(self.frame.col(c)))
            .collect()
    }
}

/// `Graph(phi) = {(s, phi s)}` inside `E1 x E2`, with annihilator `{(-phi^* psi, psi)}`.
///
/// Both algebroids must live over a point: over a positive-dimensional base the graph sits
/// over the diagonal of `M x M`, which is outside the subalgebroid model used here.
pub fn graph(phi: &Morphism) -> Result<(Product, Subalgebroid)> {
    let (src, tgt) = (phi.source(), phi.target());
    if src.base_dim() != 0 || tgt.base_dim() != 0 {
        return Err(Error::PreconditionFailed(
            "graphs are supported for algebroids over a point".into(),
        ));
    }
    let check = phi.check();
    if !check.is_morphism {
        let (a, b) = check.witness.unwrap_or((0, 0));
        return Err(Error::NotMorphism(format!(
            "bracket of e{} and e{} is not preserved",
            a + 1,
            b + 1
        )));
    }
    let prod = direct_product(src, tgt)?;
    let (m1, m2) = (src.rank(), tgt.rank());
    let ring = prod.algebroid.ring().clone();
    let frame = SMatrix::from_fn(&ring, m1 + m2, m1, |r, c| {
        if r < m1 {
            if r == c {
                Scalar::one(&ring)
            } else {
                Scalar::zero(&ring)
            }
        } else {
            prod.right_fn(phi.matrix().get(r - m1, c))
        }
    });
    let ann: Vec<Form> = (0..m2)
        .map(|c| {
            let psi = tgt.th(c);
            prod.from_right(&psi)
                .sub(&prod.from_left(&phi.pullback(&psi)))
        })
        .collect();
    let sub = Subalgebroid::new(prod.algebroid.clone(), frame, Some(ann))?;
    Ok((prod, sub))
}

/// Outcome of the coisotropy or Lagrangian test.
#[derive(Clone, Debug)]
pub struct IsotropyReport {
    pub j_invariant: bool,
    pub holds: bool,
    pub certification: Certification,
    /// An annihilator covector whose image under `(pi20)^#` leaves the subbundle.
    pub witness: Option<Form>,
}

impl IsotropyReport {
    pub fn verdict(&self) -> bool {
        self.j_invariant && self.holds
    }
}

fn constant_form(alg: &Algebroid, v: &[GaussRational]) -> Form {
    alg.covector(
        v.iter()
            .map(|c| Scalar::constant(alg.ring(), c.clone()))
            .collect(),
    )
}

/// `J(E~) in E~` and `(pi20)^#(Ann E~^{1,0}) in E~^{1,0}`.
pub fn is_coisotropic(sub: &Subalgebroid, j: &Endo, pi20: &Multivector) -> Result<IsotropyReport> {
    let alg = sub.ambient();
    let sections = sub.sections();
    if let Some(ann) = sub.annihilator() {
        let kills = |v: &Multivector| ann.iter().all(|th| pairing(th, v).is_zero());
        let j_invariant = sections.iter().all(|s| kills(&j.apply(s)));
        let mut witness = None;
        for th in ann {
            let img = contract(&j.form_part10(th), pi20);
            if !kills(&img) {
                witness = Some(th.clone());
                break;
            }
        }
        return Ok(IsotropyReport {
            j_invariant,
            holds: witness.is_none(),
            certification: Certification::Symbolic,
            witness,
        });
    }
    let pts = points_for(alg)?;
    let m = alg.rank();
    let jm = j.matrix();
    let p10t = j.p10().transpose();
    let mut j_invariant = true;
    let mut witness = None;
    for pt in &pts {
        let f = sub.frame().eval(pt)?;
        let cols: Vec<Vec<GaussRational>> = (0..f.cols)
            .map(|c| (0..m).map(|r| f.get(r, c).clone()).collect())
            .collect();
        let jf = jm.mul(sub.frame()).eval(pt)?;
        for c in 0..jf.cols {
            let v: Vec<GaussRational> = (0..m).map(|r| jf.get(r, c).clone()).collect();
            j_invariant &= contains(&cols, &v);
        }
        let ann = point_annihilator(&f);
        for th in &ann {
            let form = constant_form(alg, th);
            let th10 = alg.covector(p10t.mul_vec(&form.vector()));
            let img = contract(&th10, pi20);
            let v = eval_vec(&img.vector(), pt)?;
            if !contains(&cols, &v) && witness.is_none() {
                witness = Some(form);
            }
        }
    }
    Ok(IsotropyReport {
        j_invariant,
        holds: witness.is_none(),
        certification: Certification::Pointwise { points: pts.len() },
        witness,
    })
}

/// `(pi20)^#(Ann E~^{1,0}) = E~^{1,0} ∩ (pi20)^#(Omega^{1,0})`, compared by exact dimensions
/// at sampled points.
pub fn is_lagrangian(sub: &Subalgebroid, j: &Endo, pi20: &Multivector) -> Result<IsotropyReport> {
    let co = is_coisotropic(sub, j, pi20)?;
    let alg = sub.ambient();
    let m = alg.rank();
    let pts = points_for(alg)?;
    let p10 = j.p10();
    let p10t = p10.transpose();
    let sharp_of = |w: &Form, pt: &[GaussRational]| -> Result<Vec<GaussRational>> {
        eval_vec(&contract(w, pi20).vector(), pt)
    };
    let mut equal = co.holds;
    for pt in &pts {
        let f = sub.frame().eval(pt)?;
        let f10 = p10.mul(sub.frame()).eval(pt)?;
        let e10: Vec<Vec<GaussRational>> = (0..f10.cols)
            .map(|c| (0..m).map(|r| f10.get(r, c).clone()).collect())
            .collect();
        let mut lhs = Vec::new();
        for th in point_annihilator(&f) {
            let form = constant_form(alg, &th);
            lhs.push(sharp_of(&alg.covector(p10t.mul_vec(&form.vector())), pt)?);
        }
        let mut image = Vec::new();
        for a in 0..m {
            image.push(sharp_of(&j.form_part10(&alg.th(a)), pt)?);
        }
        let d_e10 = span_rank(&e10, m);
        let d_im = span_rank(&image, m);
        let mut both = e10.clone();
        both.extend(image);
        let d_meet = d_e10 + d_im - span_rank(&both, m);
        equal &= span_rank(&lhs, m) == d_meet;
    }
    Ok(IsotropyReport {
        j_invariant: co.j_invariant,
        holds: equal,
        certification: Certification::Pointwise { points: pts.len() },
        witness: co.witness,
    })
}

/// The two forms of Poisson-relatedness, evaluated independently.
#[derive(Clone, Debug)]
pub struct AcpMorphismReport {
    pub almost_complex: bool,
    /// `pi1(phi^* a, phi^* b) = pi2(a, b)` on coframe pairs of `E2`.
    pub pairs: bool,
    /// `(pi2)^# = phi o (pi1)^# o phi^*` as matrices.
    pub matrices: bool,
}

impl AcpMorphismReport {
    pub fn is_acp_morphism(&self) -> bool {
        self.almost_complex && self.pairs
    }
}

fn sharp_matrix(alg: &Algebroid, pi: &Multivector) -> SMatrix {
    let m = alg.rank();
    let cols: Vec<Vec<Scalar>> = (0..m).map(|a| contract(&alg.th(a), pi).vector()).collect();
    SMatrix::from_fn(alg.ring(), m, m, |r, c| cols[c][r].clone())
}

pub fn is_acp_morphism(
    phi: &Morphism,
    (j1, p1): (&Endo, &Multivector),
    (j2, p2): (&Endo, &Multivector),
) -> Result<AcpMorphismReport> {
    let check = phi.check();
    if !check.is_morphism {
        return Err(Error::NotMorphism("bracket is not preserved".into()));
    }
    let almost_complex = check_ac_morphism(phi, j1, j2)?.is_almost_complex();
    let tgt = phi.target();
    let mut pairs = true;
    for a in 0..tgt.rank() {
        for b in (a + 1)..tgt.rank() {
            let (pa, pb) = (phi.pullback(&tgt.th(a)), phi.pullback(&tgt.th(b)));
            pairs &= bivector_eval(p1, &pa, &pb) == bivector_eval(p2, &tgt.th(a), &tgt.th(b));
        }
    }
    let phim = phi.matrix();
    let matrices = sharp_matrix(tgt, p2)
        == phim
            .mul(&sharp_matrix(phi.source(), p1))
            .mul(&phim.transpose());
    if pairs != matrices {
        return Err(Error::InternalInconsistency(
            "the two forms of Poisson-relatedness disagree".into(),
        ));
    }
    Ok(AcpMorphismReport {
        almost_complex,
        pairs,
        matrices,
    })
}

#[derive(Clone, Debug)]
pub struct GraphTheoremReport {
    pub acp_morphism: bool,
    pub graph_j_invariant: bool,
    pub graph_coisotropic: bool,
    pub witness: Option<Form>,
}

impl GraphTheoremReport {
    pub fn agrees(&self) -> bool {
        self.acp_morphism == (self.graph_j_invariant && self.graph_coisotropic)
    }
}

/// Compares "phi is an ACP morphism" with "Graph(phi) is coisotropic in `E1 x E2` for
/// `(J1 + J2, pi1 - pi2)`".
pub fn graph_theorem_check(
    phi: &Morphism,
    (j1, p1): (&Endo, &Multivector),
    (j2, p2): (&Endo, &Multivector),
) -> Result<GraphTheoremReport> {
    let acp = is_acp_morphism(phi, (j1, p1), (j2, p2))?;
    let (prod, sub) = graph(phi)?;
    let j = prod.endo(j1, j2)?;
    let pi = prod.from_left(p1).sub(&prod.from_right(p2));
    let co = is_coisotropic(&sub, &j, &pi)?;
    Ok(GraphTheoremReport {
        acp_morphism: acp.is_acp_morphism(),
        graph_j_invariant: co.j_invariant,
        graph_coisotropic: co.holds,
        witness: co.witness,
    })
}
