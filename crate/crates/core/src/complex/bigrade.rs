//! Decomposition of complexified tensors into `(p, q)` components.

use std::collections::BTreeMap;
use std::fmt;

use super::Endo;
use crate::tensor::{Kind, Skew};

/// Components of a tensor by bidegree; absent entries are zero.
#[derive(Clone, Debug)]
pub struct BigradeTable<K: Kind> {
    pub degree: usize,
    pub components: BTreeMap<(usize, usize), Skew<K>>,
}

impl<K: Kind> BigradeTable<K> {
    pub fn get(&self, p: usize, q: usize) -> Option<&Skew<K>> {
        self.components.get(&(p, q))
    }

    /// Component of bidegree `(p, q)`, or zero; negative bidegrees are always zero.
    pub fn part(&self, p: i64, q: i64, zero: &Skew<K>) -> Skew<K> {
        if p < 0 || q < 0 {
            return zero.clone();
        }
        self.get(p as usize, q as usize)
            .cloned()
            .unwrap_or_else(|| zero.clone())
    }

    /// The single bidegree carrying the tensor, if there is exactly one (or none for zero).
    pub fn pure_bidegree(&self) -> Option<(usize, usize)> {
        let keys: Vec<_> = self.components.keys().copied().collect();
        match keys.len() {
            1 => Some(keys[0]),
            _ => None,
        }
    }

    pub fn is_pure_of(&self, p: usize, q: usize) -> bool {
        self.components.keys().all(|&k| k == (p, q))
    }

    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        self.components.keys().copied().collect()
    }

    pub fn sum(&self, zero: &Skew<K>) -> Skew<K> {
        self.components
            .values()
            .fold(zero.clone(), |acc, t| acc.add(t))
    }
}

impl<K: Kind> fmt::Display for BigradeTable<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "(all components zero)");
        }
        for ((p, q), t) in &self.components {
            writeln!(f, "({},{}): {}", p, q, t)?;
        }
        Ok(())
    }
}

/// Splits `x` by applying `P^{1,0}` or `P^{0,1}` to each slot (their duals on forms).
pub fn bigrade<K: Kind>(j: &Endo, x: &Skew<K>) -> BigradeTable<K> {
    let a = j.parent();
    let ring = a.ring();
    let rank = a.rank();
    let p10 = j.slot_images::<K>(&j.p10());
    let p01 = j.slot_images::<K>(&j.p01());
    let deg = x.degree();
    let mut parts_deg: Vec<Skew<K>> = (0..=deg)
        .map(|_| Skew::<K>::zero(ring, rank, deg))
        .collect();
    for (idx, c) in x.coeffs() {
        // level[r] holds the partial wedge with r slots projected to (1,0)
        let mut level: Vec<Skew<K>> = vec![Skew::<K>::scalar(rank, c.clone())];
        for &i in idx.iter() {
            let i = i as usize;
            let mut next: Vec<Skew<K>> = Vec::with_capacity(level.len() + 1);
            for r in 0..=level.len() {
                let mut t = Skew::<K>::zero(ring, rank, level[0].degree() + 1);
                if r < level.len() {
                    t = t.add(&level[r].wedge(&p01[i]));
                }
                if r > 0 {
                    t = t.add(&level[r - 1].wedge(&p10[i]));
                }
                next.push(t);
            }
            level = next;
        }
        for (r, t) in level.into_iter().enumerate() {
            parts_deg[r] = parts_deg[r].add(&t);
        }
    }
    let mut components = BTreeMap::new();
    for (r, t) in parts_deg.into_iter().enumerate() {
        if !t.is_zero() {
            components.insert((r, deg - r), t);
        }
    }
    BigradeTable {
        degree: deg,
        components,
    }
}
