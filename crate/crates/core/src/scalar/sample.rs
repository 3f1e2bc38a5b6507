//! Exact rational points on coordinate rings.
//!
//! Free coordinates get random small rationals. Each relation must have the sphere shape
//! `v^2 = 1 - sum_{k in K} x_k^2` with the groups `K + {v}` pairwise disjoint; such a group
//! is filled by inverse stereographic projection of a random rational vector.

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::gauss::{GaussRational, Rational};
use super::ring::{CoordinateRing, Monomial};
use crate::error::{Error, Result};

/// Groups of coordinates tied together by sphere relations, distinguished variable last.
fn sphere_groups(ring: &CoordinateRing) -> Result<Vec<Vec<usize>>> {
    let n = ring.nvars();
    let mut used = vec![false; n];
    let mut groups = Vec::new();
    for rel in ring.relations() {
        let mut group = Vec::new();
        let mut saw_one = false;
        for (m, c) in &rel.rhs {
            if m.is_one() && c.is_one() {
                saw_one = true;
                continue;
            }
            let k = m.0.iter().position(|&e| e == 2);
            let ok =
                k.is_some() && m.degree() == 2 && *c == -GaussRational::one() && k != Some(rel.var);
            if !ok {
                return Err(Error::Sampling(format!(
                    "relation for {} is not of unit-sphere shape",
                    ring.names()[rel.var]
                )));
            }
            group.push(k.unwrap());
        }
        if !saw_one {
            return Err(Error::Sampling(
                "sphere relation needs constant term 1".into(),
            ));
        }
        group.sort_unstable();
        group.push(rel.var);
        for &k in &group {
            if used[k] {
                return Err(Error::Sampling("overlapping sphere relations".into()));
            }
            used[k] = true;
        }
        groups.push(group);
    }
    Ok(groups)
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num: i128 = rng.gen_range(-6..=6);
    let den: i128 = rng.gen_range(1..=5);
    Rational::new(num, den)
}

/// Inverse stereographic image of `w` on the unit sphere in dimension `w.len() + 1`.
pub fn stereographic(w: &[Rational]) -> Vec<Rational> {
    let s: Rational = w.iter().map(|a| a * a).fold(Rational::zero(), |a, b| a + b);
    let d = Rational::one() + s;
    let mut out: Vec<Rational> = w
        .iter()
        .map(|a| Rational::from_integer(2) * a / d)
        .collect();
    out.push((Rational::one() - s) / d);
    out
}

/// `count` relation-satisfying real rational points, deterministic in `seed`.
pub fn sample_points(
    ring: &CoordinateRing,
    count: usize,
    seed: u64,
) -> Result<Vec<Vec<GaussRational>>> {
    let groups = sphere_groups(ring)?;
    let mut in_group = vec![false; ring.nvars()];
    for g in &groups {
        for &k in g {
            in_group[k] = true;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(count);
    for _ in 0..count {
        let mut p = vec![GaussRational::zero(); ring.nvars()];
        for (k, slot) in p.iter_mut().enumerate() {
            if !in_group[k] {
                *slot = GaussRational::real(small_rational(&mut rng));
            }
        }
        for g in &groups {
            let w: Vec<Rational> = (0..g.len() - 1).map(|_| small_rational(&mut rng)).collect();
            for (k, v) in g.iter().zip(stereographic(&w)) {
                p[*k] = GaussRational::real(v);
            }
        }
        points.push(p);
    }
    Ok(points)
}

/// Exponent-vector helper used by tests and generators.
pub fn monomial(exps: &[u16]) -> Monomial {
    Monomial(exps.iter().copied().collect())
}
