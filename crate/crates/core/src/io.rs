//! JSON documents: an algebroid plus named endomorphisms, bisections, multivectors, forms,
//! morphisms and connections, all with polynomials in the text syntax.
//!
//! Frame and coordinate indices in documents are 1-based.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebroid::Algebroid;
use crate::complex::Endo;
use crate::constructions::Connection;
use crate::error::{Error, Result};
use crate::linalg::SMatrix;
use crate::poisson::GeneralBisection;
use crate::scalar::{parse_scalar, CoordinateRing, Monomial, Relation, Scalar, Terms};
use crate::tensor::{Form, Kind, Skew};

/// One term `coeff * e_{indices}` of a sparse tensor listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseTerm {
    pub indices: Vec<usize>,
    pub coeff: String,
}

/// A linear map between two frames, `rows x cols` = target rank x source rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub matrix: Vec<Vec<String>>,
}

/// The on-disk document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebroidDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub coordinates: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    pub rank: usize,
    /// Row `a` lists `rho^i_a` over the coordinates.
    pub anchor: Vec<Vec<String>>,
    /// Keys `C^c_{ab}` (or `C^c_{a,b}`) with `a < b`.
    #[serde(default)]
    pub structure: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub endomorphisms: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bisections: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub multivectors: BTreeMap<String, Vec<SparseTerm>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub forms: BTreeMap<String, Vec<SparseTerm>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub morphisms: BTreeMap<String, MorphismDoc>,
    /// Keys `G^b_{ac}` meaning `nabla_{e_a} e_c = G^b_{ac} e_b`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub connections: BTreeMap<String, BTreeMap<String, String>>,
}

/// A parsed document: the algebroid is built and verified, named structures parse on demand.
#[derive(Clone, Debug)]
pub struct Document {
    pub algebroid: Arc<Algebroid>,
    pub doc: AlgebroidDoc,
}

fn parse_err(what: &str, e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{}: {}", what, e))
}

/// Parses `C^3_{12}`, `C^{10}_{1,2}` and similar keys into 1-based `(upper, [lower...])`.
fn parse_index_key(key: &str, letter: char, lower_count: usize) -> Result<(usize, Vec<usize>)> {
    let bad = || Error::Parse(format!("malformed index key `{}`", key));
    let rest = key.trim().strip_prefix(letter).ok_or_else(bad)?;
    let rest = rest.strip_prefix('^').ok_or_else(bad)?;
    let (upper, rest) = match rest.strip_prefix('{') {
        Some(r) => r.split_once('}').ok_or_else(bad)?,
        None => {
            let end = rest.find('_').ok_or_else(bad)?;
            (&rest[..end], &rest[end..])
        }
    };
    let lower = rest.strip_prefix('_').ok_or_else(bad)?;
    let lower = lower
        .strip_prefix('{')
        .and_then(|l| l.strip_suffix('}'))
        .unwrap_or(lower);
    let upper: usize = upper.trim().parse().map_err(|_| bad())?;
    let lowers: Vec<usize> = if lower.contains(',') {
        lower
            .split(',')
            .map(|s| s.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?
    } else if lower.len() == lower_count {
        lower
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect::<Result<_>>()?
    } else {
        return Err(bad());
    };
    if lowers.len() != lower_count || upper == 0 || lowers.contains(&0) {
        return Err(bad());
    }
    Ok((upper, lowers))
}

/// Reads `v^2 - r` (any scalar multiple is rejected) and picks the last admissible `v`.
fn parse_relation(free: &Arc<CoordinateRing>, src: &str) -> Result<Relation> {
    let p = parse_scalar(free, src)?;
    let n = free.nvars();
    for v in (0..n).rev() {
        let sq = Monomial::var(n, v).mul(&Monomial::var(n, v));
        let c = match p.terms().get(&sq) {
            Some(c) => c.clone(),
            None => continue,
        };
        let one = crate::scalar::GaussRational::from_int(1);
        let sign = if c == one {
            -one
        } else if c == -one.clone() {
            one
        } else {
            continue;
        };
        let mut rhs = Terms::new();
        let mut ok = true;
        for (m, coef) in p.terms() {
            if *m == sq {
                continue;
            }
            if m.0[v] >= 2 {
                ok = false;
                break;
            }
            rhs.insert(m.clone(), coef * &sign);
        }
        if ok {
            return Ok(Relation { var: v, rhs });
        }
    }
    Err(Error::InvalidRelation(format!(
        "`{}` is not of the form v^2 - r",
        src
    )))
}

fn relation_to_string(ring: &Arc<CoordinateRing>, rel: &Relation) -> String {
    let free = CoordinateRing::free(ring.names());
    let v = Scalar::var(&free, rel.var);
    let r = Scalar::from_terms(&free, rel.rhs.clone());
    (&v.pow(2) - &r).to_string()
}

fn parse_matrix(
    ring: &Arc<CoordinateRing>,
    rows: &[Vec<String>],
    r: usize,
    c: usize,
    what: &str,
) -> Result<SMatrix> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(Error::ShapeMismatch(format!(
            "{} must be {}x{}",
            what, r, c
        )));
    }
    let mut m = SMatrix::zeros(ring, r, c);
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            m.set(i, j, parse_scalar(ring, s)?);
        }
    }
    Ok(m)
}

pub fn matrix_rows(m: &SMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
        .collect()
}

/// Sparse 1-based listing of a tensor.
pub fn sparse_terms<K: Kind>(t: &Skew<K>) -> Vec<SparseTerm> {
    t.coeffs()
        .iter()
        .map(|(idx, c)| SparseTerm {
            indices: idx.iter().map(|&a| a as usize + 1).collect(),
            coeff: c.to_string(),
        })
        .collect()
}

fn parse_sparse<K: Kind>(alg: &Algebroid, terms: &[SparseTerm], what: &str) -> Result<Skew<K>> {
    let degree = terms.first().map(|t| t.indices.len()).unwrap_or(0);
    let mut out = Skew::<K>::zero(alg.ring(), alg.rank(), degree);
    for t in terms {
        if t.indices.len() != degree {
            return Err(Error::ShapeMismatch(format!("{}: mixed degrees", what)));
        }
        if t.indices.iter().any(|&a| a == 0 || a > alg.rank()) {
            return Err(Error::ShapeMismatch(format!(
                "{}: index out of range 1..{}",
                what,
                alg.rank()
            )));
        }
        let idx: Vec<usize> = t.indices.iter().map(|&a| a - 1).collect();
        out.add_term(&idx, parse_scalar(alg.ring(), &t.coeff)?);
    }
    Ok(out)
}

/// The document describing `alg` alone.
pub fn algebroid_doc(alg: &Algebroid) -> AlgebroidDoc {
    let ring = alg.ring();
    let m = alg.rank();
    let mut structure = BTreeMap::new();
    for a in 0..m {
        for b in (a + 1)..m {
            for c in 0..m {
                let v = alg.c(a, b, c);
                if !v.is_zero() {
                    structure.insert(
                        format!("C^{}_{{{},{}}}", c + 1, a + 1, b + 1),
                        v.to_string(),
                    );
                }
            }
        }
    }
    AlgebroidDoc {
        name: Some(alg.name().to_string()),
        coordinates: ring.names().to_vec(),
        relations: ring
            .relations()
            .iter()
            .map(|r| relation_to_string(ring, r))
            .collect(),
        rank: m,
        anchor: matrix_rows(alg.anchor()),
        structure,
        endomorphisms: BTreeMap::new(),
        bisections: BTreeMap::new(),
        multivectors: BTreeMap::new(),
        forms: BTreeMap::new(),
        morphisms: BTreeMap::new(),
        connections: BTreeMap::new(),
    }
}

impl AlgebroidDoc {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }
}

impl Document {
    pub fn parse(json: &str) -> Result<Self> {
        let doc: AlgebroidDoc = serde_json::from_str(json).map_err(|e| parse_err("document", e))?;
        Self::from_doc(doc)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| parse_err(&path.display().to_string(), e))?;
        Self::parse(&text)
    }

    /// Builds and verifies the algebroid; failures of the structure equations are reported
    /// through `Algebroid::verify`, not here.
    pub fn from_doc(doc: AlgebroidDoc) -> Result<Self> {
        let free = CoordinateRing::free(&doc.coordinates);
        let relations = doc
            .relations
            .iter()
            .map(|r| parse_relation(&free, r))
            .collect::<Result<Vec<_>>>()?;
        let ring = CoordinateRing::new(&doc.coordinates, relations)?;
        let m = doc.rank;
        let anchor = parse_matrix(&ring, &doc.anchor, m, ring.nvars(), "anchor")?;
        let mut consts = BTreeMap::new();
        for (key, val) in &doc.structure {
            let (c, ab) = parse_index_key(key, 'C', 2)?;
            let (a, b) = (ab[0], ab[1]);
            if a >= b || b > m || c > m {
                return Err(Error::Parse(format!(
                    "structure key `{}` needs 1 <= a < b <= {} and c <= {}",
                    key, m, m
                )));
            }
            consts.insert((a - 1, b - 1, c - 1), parse_scalar(&ring, val)?);
        }
        let name = doc.name.clone().unwrap_or_else(|| "algebroid".into());
        let mut alg = Algebroid::new(&name, &ring, m, anchor, |a, b, c| {
            consts
                .get(&(a, b, c))
                .cloned()
                .unwrap_or_else(|| Scalar::zero(&ring))
        })?;
        alg.verify();
        Ok(Document {
            algebroid: Arc::new(alg),
            doc,
        })
    }

    fn lookup<'a, T>(map: &'a BTreeMap<String, T>, name: &str) -> Result<&'a T> {
        map.get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn endo(&self, name: &str) -> Result<Endo> {
        let m = self.algebroid.rank();
        let rows = Self::lookup(&self.doc.endomorphisms, name)?;
        Endo::new(
            self.algebroid.clone(),
            parse_matrix(self.algebroid.ring(), rows, m, m, name)?,
        )
    }

    pub fn bisection(&self, name: &str) -> Result<GeneralBisection> {
        let m = self.algebroid.rank();
        let rows = Self::lookup(&self.doc.bisections, name)?;
        GeneralBisection::new(
            self.algebroid.clone(),
            parse_matrix(self.algebroid.ring(), rows, m, m, name)?,
        )
    }

    /// A named multivector, or a named bisection read as its bivector.
    pub fn multivector(&self, name: &str) -> Result<Skew<crate::tensor::Contra>> {
        if let Some(terms) = self.doc.multivectors.get(name) {
            return parse_sparse(&self.algebroid, terms, name);
        }
        if self.doc.bisections.contains_key(name) {
            return self.bisection(name)?.to_bivector();
        }
        Err(Error::UnknownName(name.to_string()))
    }

    pub fn form(&self, name: &str) -> Result<Form> {
        parse_sparse(&self.algebroid, Self::lookup(&self.doc.forms, name)?, name)
    }

    /// A named morphism matrix into an algebroid of rank `target_rank`.
    pub fn morphism_matrix(&self, name: &str, target_rank: usize) -> Result<SMatrix> {
        let doc = Self::lookup(&self.doc.morphisms, name)?;
        parse_matrix(
            self.algebroid.ring(),
            &doc.matrix,
            target_rank,
            self.algebroid.rank(),
            name,
        )
    }

    pub fn connection(&self, name: &str) -> Result<Connection> {
        let m = self.algebroid.rank();
        let ring = self.algebroid.ring();
        let mut gamma = vec![Scalar::zero(ring); m * m * m];
        for (key, val) in Self::lookup(&self.doc.connections, name)? {
            let (b, ac) = parse_index_key(key, 'G', 2)?;
            if b > m || ac.iter().any(|&k| k > m) {
                return Err(Error::Parse(format!(
                    "connection key `{}` out of range",
                    key
                )));
            }
            let (a, c) = (ac[0] - 1, ac[1] - 1);
            gamma[(a * m + c) * m + (b - 1)] = parse_scalar(ring, val)?;
        }
        Connection::new(self.algebroid.clone(), gamma)
    }

    /// Names of every named structure, by section.
    pub fn names(&self) -> BTreeMap<&'static str, Vec<String>> {
        let d = &self.doc;
        let keys = |m: Vec<&String>| m.into_iter().cloned().collect::<Vec<_>>();
        BTreeMap::from([
            ("endomorphisms", keys(d.endomorphisms.keys().collect())),
            ("bisections", keys(d.bisections.keys().collect())),
            ("multivectors", keys(d.multivectors.keys().collect())),
            ("forms", keys(d.forms.keys().collect())),
            ("morphisms", keys(d.morphisms.keys().collect())),
            ("connections", keys(d.connections.keys().collect())),
        ])
    }
}
