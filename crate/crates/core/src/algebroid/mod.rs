//! Lie algebroids given by an anchor matrix and structure functions in a local frame.

mod calculus;
mod morphism;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::SMatrix;
use crate::scalar::{CoordinateRing, Scalar, Terms};
use crate::tensor::{Form, Multivector};

pub use morphism::{Morphism, MorphismCheck};

/// `(E, rho, [.,.])` over a coordinate ring: `rho(e_a) = rho^i_a d/dx^i`, `[e_a, e_b] = C^c_{ab} e_c`.
#[derive(Clone)]
pub struct Algebroid {
    name: String,
    ring: Arc<CoordinateRing>,
    rank: usize,
    /// `rank x nvars`, entry `(a, i)` is `rho^i_a`.
    anchor: SMatrix,
    /// `C^c_{ab}` at `(a * rank + b) * rank + c`.
    consts: Vec<Scalar>,
    /// `[e_a, e_b]` at `a * rank + b`.
    brackets: Vec<Multivector>,
    verified: bool,
}

/// One of the structure identities checked by [`Algebroid::verify`]. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `C^c_{ab} + C^c_{ba} = 0`.
    Antisymmetry { a: usize, b: usize, c: usize },
    /// `rho_a` is tangent to the relation `v^2 - r`.
    AnchorTangency { a: usize, relation: usize },
    /// `rho_a(rho^i_b) - rho_b(rho^i_a) - rho^i_c C^c_{ab} = 0`.
    AnchorCompatibility { a: usize, b: usize, i: usize },
    /// `sum_cyc(a,b,c) rho_a(C^d_{bc}) + C^e_{bc} C^d_{ae} = 0`.
    Jacobi {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
    },
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub identity: Identity,
    pub residual: Scalar,
}

#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Identity::Antisymmetry { a, b, c } => {
                write!(f, "antisymmetry (a,b,c)=({},{},{})", a + 1, b + 1, c + 1)
            }
            Identity::AnchorTangency { a, relation } => {
                write!(
                    f,
                    "anchor tangency (a)=({}) relation {}",
                    a + 1,
                    relation + 1
                )
            }
            Identity::AnchorCompatibility { a, b, i } => {
                write!(f, "anchor identity (a,b,i)=({},{},{})", a + 1, b + 1, i + 1)
            }
            Identity::Jacobi { a, b, c, d } => {
                write!(
                    f,
                    "Jacobi identity (a,b,c,d)=({},{},{},{})",
                    a + 1,
                    b + 1,
                    c + 1,
                    d + 1
                )
            }
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return write!(f, "structure equations: OK");
        }
        writeln!(f, "structure equations: {} failure(s)", self.failures.len())?;
        for fl in &self.failures {
            writeln!(f, "  {}: residual {}", fl.identity, fl.residual)?;
        }
        Ok(())
    }
}

impl Algebroid {
    /// Builds an algebroid from the full array `c(a, b, k) = C^k_{ab}` (not symmetrized).
    pub fn from_full(
        name: &str,
        ring: &Arc<CoordinateRing>,
        rank: usize,
        anchor: SMatrix,
        c: impl Fn(usize, usize, usize) -> Scalar,
    ) -> Result<Self> {
        if anchor.rows() != rank || anchor.cols() != ring.nvars() {
            return Err(Error::ShapeMismatch(format!(
                "anchor is {}x{}, expected {}x{}",
                anchor.rows(),
                anchor.cols(),
                rank,
                ring.nvars()
            )));
        }
        if rank > u8::MAX as usize {
            return Err(Error::ShapeMismatch("rank too large".into()));
        }
        let mut consts = Vec::with_capacity(rank * rank * rank);
        for a in 0..rank {
            for b in 0..rank {
                for k in 0..rank {
                    consts.push(c(a, b, k));
                }
            }
        }
        let brackets = (0..rank * rank)
            .map(|ab| Multivector::from_vector(ring, consts[ab * rank..(ab + 1) * rank].to_vec()))
            .collect();
        Ok(Algebroid {
            name: name.to_string(),
            ring: ring.clone(),
            rank,
            anchor,
            consts,
            brackets,
            verified: false,
        })
    }

    /// Builds an algebroid from the `a < b` structure functions, extended antisymmetrically.
    pub fn new(
        name: &str,
        ring: &Arc<CoordinateRing>,
        rank: usize,
        anchor: SMatrix,
        upper: impl Fn(usize, usize, usize) -> Scalar,
    ) -> Result<Self> {
        Self::from_full(name, ring, rank, anchor, |a, b, k| {
            use std::cmp::Ordering::*;
            match a.cmp(&b) {
                Less => upper(a, b, k),
                Greater => -upper(b, a, k),
                Equal => Scalar::zero(ring),
            }
        })
    }

    /// Runs [`verify`](Self::verify) and fails with the report text if any identity breaks.
    pub fn verified(mut self) -> Result<Self> {
        let report = self.verify();
        if report.is_ok() {
            Ok(self)
        } else {
            Err(Error::PreconditionFailed(format!(
                "{} is not a Lie algebroid: {}",
                self.name, report
            )))
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    pub fn ring(&self) -> &Arc<CoordinateRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn base_dim(&self) -> usize {
        self.ring.nvars()
    }

    pub fn anchor(&self) -> &SMatrix {
        &self.anchor
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// `C^c_{ab}`.
    pub fn c(&self, a: usize, b: usize, c: usize) -> &Scalar {
        &self.consts[(a * self.rank + b) * self.rank + c]
    }

    /// `[e_a, e_b]`.
    pub fn frame_bracket(&self, a: usize, b: usize) -> &Multivector {
        &self.brackets[a * self.rank + b]
    }

    /// Whether the anchor and all structure functions are constants.
    pub fn is_constant(&self) -> bool {
        self.anchor.is_constant() && self.consts.iter().all(|c| c.is_constant())
    }

    pub fn zero_fn(&self) -> Scalar {
        Scalar::zero(&self.ring)
    }

    pub fn one_fn(&self) -> Scalar {
        Scalar::one(&self.ring)
    }

    /// Frame section `e_a`.
    pub fn e(&self, a: usize) -> Multivector {
        Multivector::basis(&self.ring, self.rank, &[a])
    }

    /// Coframe form `e^a`.
    pub fn th(&self, a: usize) -> Form {
        Form::basis(&self.ring, self.rank, &[a])
    }

    pub fn mv(&self, idx: &[usize]) -> Multivector {
        Multivector::basis(&self.ring, self.rank, idx)
    }

    pub fn form(&self, idx: &[usize]) -> Form {
        Form::basis(&self.ring, self.rank, idx)
    }

    pub fn function_mv(&self, f: Scalar) -> Multivector {
        Multivector::scalar(self.rank, f)
    }

    pub fn function_form(&self, f: Scalar) -> Form {
        Form::scalar(self.rank, f)
    }

    pub fn zero_mv(&self, degree: usize) -> Multivector {
        Multivector::zero(&self.ring, self.rank, degree)
    }

    pub fn zero_form(&self, degree: usize) -> Form {
        Form::zero(&self.ring, self.rank, degree)
    }

    pub fn section(&self, comps: Vec<Scalar>) -> Multivector {
        assert_eq!(comps.len(), self.rank);
        Multivector::from_vector(&self.ring, comps)
    }

    pub fn covector(&self, comps: Vec<Scalar>) -> Form {
        assert_eq!(comps.len(), self.rank);
        Form::from_vector(&self.ring, comps)
    }

    pub fn check_mv(&self, t: &Multivector) -> Result<()> {
        if t.rank() == self.rank && (Arc::ptr_eq(t.ring(), &self.ring) || **t.ring() == *self.ring)
        {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn check_form(&self, t: &Form) -> Result<()> {
        if t.rank() == self.rank && (Arc::ptr_eq(t.ring(), &self.ring) || **t.ring() == *self.ring)
        {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// Checks antisymmetry, anchor tangency to the relations, the anchor identity, and Jacobi.
    pub fn verify(&mut self) -> VerificationReport {
        let report = self.verification_report();
        self.verified = report.is_ok();
        report
    }

    pub fn verification_report(&self) -> VerificationReport {
        let m = self.rank;
        let n = self.base_dim();
        let mut failures = Vec::new();
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let r = self.c(a, b, c) + self.c(b, a, c);
                    if !r.is_zero() && a <= b {
                        failures.push(Failure {
                            identity: Identity::Antisymmetry { a, b, c },
                            residual: r,
                        });
                    }
                }
            }
        }
        for (k, rel) in self.ring.relations().iter().enumerate() {
            for a in 0..m {
                let mut acc = self.zero_fn();
                for i in 0..n {
                    let rho = self.anchor.get(a, i);
                    if rho.is_zero() {
                        continue;
                    }
                    let mut terms = raw_partial(&rel.rhs, i);
                    for v in terms.values_mut() {
                        *v = -v.clone();
                    }
                    if i == rel.var {
                        let mono = crate::scalar::Monomial::var(n, i);
                        let slot = terms.entry(mono).or_insert_with(num_traits::Zero::zero);
                        *slot += &crate::scalar::GaussRational::from_int(2);
                    }
                    acc = &acc + &(rho * &Scalar::from_terms(&self.ring, terms));
                }
                if !acc.is_zero() {
                    failures.push(Failure {
                        identity: Identity::AnchorTangency { a, relation: k },
                        residual: acc,
                    });
                }
            }
        }
        for a in 0..m {
            for b in (a + 1)..m {
                for i in 0..n {
                    let mut r =
                        &self.rho(a, self.anchor.get(b, i)) - &self.rho(b, self.anchor.get(a, i));
                    for c in 0..m {
                        r = &r - &(self.anchor.get(c, i) * self.c(a, b, c));
                    }
                    if !r.is_zero() {
                        failures.push(Failure {
                            identity: Identity::AnchorCompatibility { a, b, i },
                            residual: r,
                        });
                    }
                }
            }
        }
        for a in 0..m {
            for b in (a + 1)..m {
                for c in (b + 1)..m {
                    for d in 0..m {
                        let mut r = self.zero_fn();
                        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                            r = &r + &self.rho(x, self.c(y, z, d));
                            for e in 0..m {
                                let t = self.c(y, z, e);
                                if !t.is_zero() {
                                    r = &r + &(t * self.c(x, e, d));
                                }
                            }
                        }
                        if !r.is_zero() {
                            failures.push(Failure {
                                identity: Identity::Jacobi { a, b, c, d },
                                residual: r,
                            });
                        }
                    }
                }
            }
        }
        VerificationReport { failures }
    }

    /// Renames the algebroid; used by constructions that derive new instances.
    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }
}

fn raw_partial(terms: &Terms, k: usize) -> Terms {
    let mut out = Terms::new();
    for (m, c) in terms {
        let e = m.0[k];
        if e == 0 {
            continue;
        }
        let mut m2 = m.clone();
        m2.0[k] -= 1;
        out.insert(m2, c * &crate::scalar::GaussRational::from_int(e as i128));
    }
    out
}

impl fmt::Debug for Algebroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebroid {{ name: {}, rank: {}, base: {} }}",
            self.name, self.rank, self.ring
        )
    }
}
