//! Complex Lichnerowicz-Poisson cohomology for constant-coefficient data.

use rayon::prelude::*;

use crate::complex::{nijenhuis, Endo};
use crate::error::{Error, Result};
use crate::linalg::{GMatrix, SMatrix};
use crate::scalar::{GaussRational, Scalar};
use crate::tensor::Multivector;

use super::acp::is_acp;

#[derive(Clone, Debug)]
pub struct CohomologyResult {
    pub bidegree: (usize, usize),
    pub dimension: usize,
    /// Representatives of a basis of `H^{p,q}`, all `sigma^11`-closed.
    pub basis: Vec<Multivector>,
    pub space_dim: usize,
    pub kernel_dim: usize,
    pub image_dim: usize,
}

fn constant_matrix(m: &SMatrix) -> Result<GMatrix> {
    let mut g = GMatrix::zeros(m.rows(), m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let v = m
                .get(r, c)
                .as_constant()
                .ok_or_else(|| Error::NotConstantCoefficient(format!("entry {}", m.get(r, c))))?;
            g.set(r, c, v);
        }
    }
    Ok(g)
}

/// The frame `z_1..z_n, conj z_1..conj z_n` of `E^{1,0} + E^{0,1}` and the inverse of its matrix.
struct Adapted {
    n: usize,
    z: Vec<Multivector>,
    zbar: Vec<Multivector>,
    /// Images of `e_a` in the adapted frame, as multivectors over the same rank.
    coords: Vec<Multivector>,
}

impl Adapted {
    fn new(j: &Endo) -> Result<Self> {
        let alg = j.parent();
        let ring = alg.ring();
        let m = alg.rank();
        let n = m / 2;
        let p10 = constant_matrix(&j.p10())?;
        let (_, pivots) = p10.rref();
        if pivots.len() != n {
            return Err(Error::InternalInconsistency(format!(
                "E^(1,0) has rank {}",
                pivots.len()
            )));
        }
        let col = |mat: &GMatrix, c: usize| -> Vec<GaussRational> {
            (0..m).map(|r| mat.get(r, c).clone()).collect()
        };
        let zc: Vec<Vec<GaussRational>> = pivots.iter().map(|&c| col(&p10, c)).collect();
        let mut cols = zc.clone();
        cols.extend(
            zc.iter()
                .map(|v| v.iter().map(|x| x.conj()).collect::<Vec<_>>()),
        );
        let to_mv = |v: &[GaussRational]| {
            Multivector::from_vector(
                ring,
                v.iter()
                    .map(|x| Scalar::constant(ring, x.clone()))
                    .collect(),
            )
        };
        let basis = SMatrix::from_fn(ring, m, m, |r, c| {
            Scalar::constant(ring, cols[c][r].clone())
        });
        let inv = basis
            .inverse()
            .ok_or_else(|| Error::InternalInconsistency("adapted frame is singular".into()))?;
        let coords = (0..m)
            .map(|a| Multivector::from_vector(ring, inv.col(a)))
            .collect();
        Ok(Adapted {
            n,
            z: cols[..n].iter().map(|v| to_mv(v)).collect(),
            zbar: cols[n..].iter().map(|v| to_mv(v)).collect(),
            coords,
        })
    }

    /// Basis `z_I ^ conj z_K` of `V^{p,q}` together with the adapted index tuples.
    fn basis(&self, p: usize, q: usize, unit: &Multivector) -> Vec<(Vec<usize>, Multivector)> {
        let mut out = Vec::new();
        for i in Multivector::tuples(self.n, p) {
            for k in Multivector::tuples(self.n, q) {
                let mut t = unit.clone();
                for &a in &i {
                    t = t.wedge(&self.z[a]);
                }
                for &b in &k {
                    t = t.wedge(&self.zbar[b]);
                }
                let mut key = i.clone();
                key.extend(k.iter().map(|b| b + self.n));
                out.push((key, t));
            }
        }
        out
    }

    /// Coordinates of `t` on the given adapted basis tuples.
    fn coordinates(&self, t: &Multivector, keys: &[&[usize]]) -> Vec<GaussRational> {
        let moved = t.map_generators(t.ring(), self.coords.len(), &|a| self.coords[a].clone());
        keys.iter()
            .map(|key| {
                moved
                    .get(key)
                    .as_constant()
                    .expect("constant data has constant coordinates")
            })
            .collect()
    }
}

/// Matrix of `sigma^11: V^{p,q} -> V^{p+1,q}` in the adapted bases.
fn sigma11_matrix(j: &Endo, pi20: &Multivector, ad: &Adapted, p: usize, q: usize) -> GMatrix {
    let alg = j.parent();
    let unit = alg.function_mv(alg.one_fn());
    let src = ad.basis(p, q, &unit);
    let dst = ad.basis(p + 1, q, &unit);
    let keys: Vec<&[usize]> = dst.iter().map(|(k, _)| k.as_slice()).collect();
    let columns: Vec<Vec<GaussRational>> = src
        .par_iter()
        .map(|(_, s)| ad.coordinates(&alg.schouten(pi20, s), &keys))
        .collect();
    GMatrix::from_cols(&columns, dst.len())
}

/// `H^{p,q}` of the complex `(V^{.,q}, sigma^11)` for constant data with `J` integrable.
pub fn clp_cohomology(
    j: &Endo,
    pi20: &Multivector,
    p: usize,
    q: usize,
) -> Result<CohomologyResult> {
    let alg = j.parent();
    if !alg.is_constant() {
        return Err(Error::NotConstantCoefficient("algebroid".into()));
    }
    if !j.is_constant() {
        return Err(Error::NotConstantCoefficient(
            "almost complex structure".into(),
        ));
    }
    if pi20.coeffs().values().any(|c| !c.is_constant()) {
        return Err(Error::NotConstantCoefficient("pi20".into()));
    }
    if !nijenhuis(j).is_zero() {
        return Err(Error::NotIntegrable);
    }
    if !is_acp(j, pi20)?.is_acp() {
        return Err(Error::NotAcp);
    }
    let ad = Adapted::new(j)?;
    let unit = alg.function_mv(alg.one_fn());
    let space = ad.basis(p, q, &unit);
    let out_map = sigma11_matrix(j, pi20, &ad, p, q);
    let in_map = if p > 0 {
        Some(sigma11_matrix(j, pi20, &ad, p - 1, q))
    } else {
        None
    };
    if let Some(inm) = &in_map {
        if out_map.rows > 0
            && inm.cols > 0
            && out_map
                .mul(inm)
                .data
                .iter()
                .any(|x| x != &GaussRational::from_int(0))
        {
            return Err(Error::InternalInconsistency(
                "sigma11 o sigma11 != 0".into(),
            ));
        }
    }
    let kernel = if out_map.rows == 0 {
        (0..space.len())
            .map(|k| {
                (0..space.len())
                    .map(|l| GaussRational::from_int((k == l) as i128))
                    .collect()
            })
            .collect()
    } else {
        out_map.kernel()
    };
    let image_cols: Vec<Vec<GaussRational>> = match &in_map {
        Some(inm) => (0..inm.cols)
            .map(|c| (0..inm.rows).map(|r| inm.get(r, c).clone()).collect())
            .collect(),
        None => Vec::new(),
    };
    let image_dim = in_map.as_ref().map(|m| m.rank()).unwrap_or(0);
    let mut span = image_cols.clone();
    let mut basis = Vec::new();
    for v in &kernel {
        let inside =
            !span.is_empty() && GMatrix::from_cols(&span, space.len()).col_span_contains(v);
        if inside {
            continue;
        }
        span.push(v.clone());
        let mut rep = alg.zero_mv(p + q);
        for (c, (_, t)) in v.iter().zip(space.iter()) {
            rep = rep.add(&t.scale_const(c));
        }
        basis.push(rep);
    }
    Ok(CohomologyResult {
        bidegree: (p, q),
        dimension: kernel.len() - image_dim,
        basis,
        space_dim: space.len(),
        kernel_dim: kernel.len(),
        image_dim,
    })
}
