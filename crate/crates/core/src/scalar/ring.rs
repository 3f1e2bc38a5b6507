//! Coordinate rings: polynomial rings over Q(i) modulo substitution relations `v^2 = r`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use smallvec::SmallVec;

use super::gauss::GaussRational;
use crate::error::{Error, Result};

/// Exponent vector over the ring's coordinate list, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type Terms = BTreeMap<Monomial, GaussRational>;

/// `v^2 = rhs`, with `rhs` free of `v^k` for `k >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub var: usize,
    pub rhs: Terms,
}

#[derive(Debug, PartialEq, Eq)]
pub struct CoordinateRing {
    names: Vec<String>,
    relations: Vec<Relation>,
    /// `rel_of[v]` is the index of the relation whose distinguished variable is `v`.
    rel_of: Vec<Option<usize>>,
}

impl CoordinateRing {
    /// Free polynomial ring on the given coordinates.
    pub fn free<S: AsRef<str>>(names: &[S]) -> Arc<Self> {
        Self::new(names, Vec::new()).expect("relation-free ring is always valid")
    }

    /// Builds a ring and checks that rewriting `v^2 -> rhs` terminates.
    ///
    /// Termination holds when the graph "relation of `v` mentions distinguished `w != v`"
    /// is acyclic: then the exponent vector of distinguished variables, read in topological
    /// order, decreases lexicographically under every rewrite.
    pub fn new<S: AsRef<str>>(names: &[S], relations: Vec<Relation>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let n = names.len();
        for (k, name) in names.iter().enumerate() {
            if name == "i" {
                return Err(Error::InvalidRelation(
                    "`i` is reserved for the imaginary unit".into(),
                ));
            }
            if names[..k].contains(name) {
                return Err(Error::NameCollision(name.clone()));
            }
        }
        let mut rel_of = vec![None; n];
        for (k, rel) in relations.iter().enumerate() {
            if rel.var >= n {
                return Err(Error::InvalidRelation(format!(
                    "variable index {} out of range",
                    rel.var
                )));
            }
            if rel_of[rel.var].is_some() {
                return Err(Error::InvalidRelation(format!(
                    "two relations share the distinguished variable {}",
                    names[rel.var]
                )));
            }
            rel_of[rel.var] = Some(k);
            for (m, c) in &rel.rhs {
                if m.0.len() != n {
                    return Err(Error::InvalidRelation(
                        "exponent vector length mismatch".into(),
                    ));
                }
                if m.0[rel.var] >= 2 {
                    return Err(Error::InvalidRelation(format!(
                        "right-hand side of {}^2 contains a power of {} of degree >= 2",
                        names[rel.var], names[rel.var]
                    )));
                }
                if !c.is_real() {
                    return Err(Error::InvalidRelation(
                        "relation coefficients must be real".into(),
                    ));
                }
            }
        }
        // Cycle detection on the dependency graph between relations.
        let deps: Vec<Vec<usize>> = relations
            .iter()
            .map(|rel| {
                let mut d = Vec::new();
                for (j, other) in relations.iter().enumerate() {
                    if other.var != rel.var && rel.rhs.keys().any(|m| m.0[other.var] > 0) {
                        d.push(j);
                    }
                }
                d
            })
            .collect();
        let mut state = vec![0u8; relations.len()];
        fn visit(k: usize, deps: &[Vec<usize>], state: &mut [u8]) -> bool {
            match state[k] {
                1 => return false,
                2 => return true,
                _ => {}
            }
            state[k] = 1;
            for &j in &deps[k] {
                if !visit(j, deps, state) {
                    return false;
                }
            }
            state[k] = 2;
            true
        }
        for k in 0..relations.len() {
            if !visit(k, &deps, &mut state) {
                return Err(Error::NonTerminatingRelationSet(format!(
                    "cyclic dependency through {}",
                    names[relations[k].var]
                )));
            }
        }
        Ok(Arc::new(CoordinateRing {
            names,
            relations,
            rel_of,
        }))
    }

    /// Ring on `self`'s coordinates followed by `other`'s, renamed to `other_names`;
    /// relations of both factors are carried over.
    pub fn concat<S: AsRef<str>>(
        &self,
        other: &CoordinateRing,
        other_names: &[S],
    ) -> Result<Arc<Self>> {
        let (n1, n2) = (self.nvars(), other.nvars());
        if other_names.len() != n2 {
            return Err(Error::InvalidRelation(
                "renaming has the wrong length".into(),
            ));
        }
        let shift = |rhs: &Terms, offset: usize| -> Terms {
            rhs.iter()
                .map(|(m, c)| {
                    let mut e = Monomial::one(n1 + n2);
                    for (k, &x) in m.0.iter().enumerate() {
                        e.0[k + offset] = x;
                    }
                    (e, c.clone())
                })
                .collect()
        };
        let mut relations: Vec<Relation> = self
            .relations
            .iter()
            .map(|r| Relation {
                var: r.var,
                rhs: shift(&r.rhs, 0),
            })
            .collect();
        relations.extend(other.relations.iter().map(|r| Relation {
            var: r.var + n1,
            rhs: shift(&r.rhs, n1),
        }));
        let mut names: Vec<String> = self.names.clone();
        names.extend(other_names.iter().map(|s| s.as_ref().to_string()));
        Self::new(&names, relations)
    }

    /// Unit sphere `sum x_k^2 = 1`, with the last coordinate distinguished.
    pub fn sphere<S: AsRef<str>>(names: &[S]) -> Arc<Self> {
        let n = names.len();
        assert!(n >= 1);
        let last = n - 1;
        let mut rhs = Terms::new();
        rhs.insert(Monomial::one(n), GaussRational::from_int(1));
        for k in 0..last {
            let mut m = Monomial::one(n);
            m.0[k] = 2;
            rhs.insert(m, GaussRational::from_int(-1));
        }
        Self::new(names, vec![Relation { var: last, rhs }]).expect("sphere relation is valid")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn has_relations(&self) -> bool {
        !self.relations.is_empty()
    }

    /// The relation applicable to `m`, if any distinguished exponent is `>= 2`.
    fn reducible(&self, m: &Monomial) -> Option<&Relation> {
        if self.relations.is_empty() {
            return None;
        }
        for (v, e) in m.0.iter().enumerate() {
            if *e >= 2 {
                if let Some(k) = self.rel_of[v] {
                    return Some(&self.relations[k]);
                }
            }
        }
        None
    }

    /// Rewrites `terms` into normal form.
    pub fn reduce(&self, terms: Terms) -> Terms {
        if self.relations.is_empty() {
            let mut terms = terms;
            terms.retain(|_, c| !c.is_zero());
            return terms;
        }
        let mut out = Terms::new();
        let mut stack: Vec<(Monomial, GaussRational)> = terms.into_iter().collect();
        while let Some((m, c)) = stack.pop() {
            if c.is_zero() {
                continue;
            }
            match self.reducible(&m) {
                Some(rel) => {
                    let mut rest = m.clone();
                    rest.0[rel.var] -= 2;
                    for (rm, rc) in &rel.rhs {
                        stack.push((rest.mul(rm), &c * rc));
                    }
                }
                None => {
                    let slot = out.entry(m).or_insert_with(GaussRational::zero);
                    *slot += &c;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Whether every distinguished exponent of `m` is below 2.
    pub fn is_normal(&self, m: &Monomial) -> bool {
        self.reducible(m).is_none()
    }
}

impl fmt::Display for CoordinateRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(i)[{}]", self.names.join(", "))?;
        for rel in &self.relations {
            write!(f, " / ({}^2 = ...)", self.names[rel.var])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u16]) -> Monomial {
        Monomial(e.iter().copied().collect())
    }

    #[test]
    fn grlex_order() {
        assert!(mono(&[0, 2]) > mono(&[1, 0]));
        assert!(mono(&[2, 0]) > mono(&[1, 1]));
        assert!(mono(&[1, 1]) > mono(&[0, 2]));
    }

    #[test]
    fn cyclic_relations_rejected() {
        let mut r1 = Terms::new();
        r1.insert(mono(&[0, 1]), GaussRational::from_int(1));
        let mut r2 = Terms::new();
        r2.insert(mono(&[1, 0]), GaussRational::from_int(1));
        let err = CoordinateRing::new(
            &["a", "b"],
            vec![Relation { var: 0, rhs: r1 }, Relation { var: 1, rhs: r2 }],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonTerminatingRelationSet(_)));
    }

    #[test]
    fn self_referencing_linear_relation_allowed() {
        // a^2 = a + 1 terminates: each rewrite lowers the exponent of a.
        let mut r = Terms::new();
        r.insert(mono(&[1]), GaussRational::from_int(1));
        r.insert(mono(&[0]), GaussRational::from_int(1));
        let ring = CoordinateRing::new(&["a"], vec![Relation { var: 0, rhs: r }]).unwrap();
        let mut t = Terms::new();
        t.insert(mono(&[3]), GaussRational::from_int(1));
        let red = ring.reduce(t);
        // a^3 = a*(a+1) = a^2 + a = 2a + 1
        assert_eq!(red.get(&mono(&[1])), Some(&GaussRational::from_int(2)));
        assert_eq!(red.get(&mono(&[0])), Some(&GaussRational::from_int(1)));
    }
}
