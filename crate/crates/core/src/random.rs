//! Seeded generators of small random functions, multivectors and forms for property checks.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebroid::Algebroid;
use crate::scalar::{CoordinateRing, GaussRational, Monomial, Rational, Scalar, Terms};
use crate::tensor::{Kind, Skew};

pub const DEFAULT_SEED: u64 = 0x5eed_2013;

/// Deterministic sampler over one algebroid's ring and rank.
pub struct Sampler {
    rng: ChaCha8Rng,
    ring: Arc<CoordinateRing>,
    rank: usize,
    /// Highest total degree of sampled polynomials.
    pub max_degree: u16,
    /// Whether coefficients may have an imaginary part.
    pub complex: bool,
}

impl Sampler {
    pub fn new(alg: &Algebroid, seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            ring: alg.ring().clone(),
            rank: alg.rank(),
            max_degree: 1,
            complex: false,
        }
    }

    pub fn with_degree(mut self, d: u16) -> Self {
        self.max_degree = d;
        self
    }

    pub fn complex(mut self, on: bool) -> Self {
        self.complex = on;
        self
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A coefficient from {±1, ±1/2}, rotated by i half of the time when complex.
    fn coeff(&mut self) -> GaussRational {
        let num = if self.rng.gen_bool(0.5) { 1 } else { -1 };
        let r = Rational::new(num, self.rng.gen_range(1i128..=2));
        if self.complex && self.rng.gen_bool(0.5) {
            GaussRational::new(Rational::from_integer(0), r)
        } else {
            GaussRational::new(r, Rational::from_integer(0))
        }
    }

    /// A polynomial with at most three terms of degree at most `max_degree`.
    pub fn scalar(&mut self) -> Scalar {
        let n = self.ring.nvars();
        let mut terms = Terms::new();
        let count = self.rng.gen_range(1..=3);
        for _ in 0..count {
            let mut exps = vec![0u16; n];
            if n > 0 {
                let deg = self.rng.gen_range(0..=self.max_degree);
                for _ in 0..deg {
                    exps[self.rng.gen_range(0..n)] += 1;
                }
            }
            let c = self.coeff();
            let slot = terms
                .entry(Monomial(exps.into_iter().collect()))
                .or_insert_with(|| GaussRational::from_int(0));
            *slot += &c;
        }
        Scalar::from_terms(&self.ring, terms)
    }

    /// A nonzero constant.
    pub fn constant(&mut self) -> Scalar {
        let c = self.coeff();
        Scalar::constant(&self.ring, c)
    }

    /// A tensor with up to three random basis terms.
    pub fn skew<K: Kind>(&mut self, degree: usize) -> Skew<K> {
        let mut t = Skew::<K>::zero(&self.ring, self.rank, degree);
        let tuples = Skew::<K>::tuples(self.rank, degree);
        if tuples.is_empty() {
            return t;
        }
        let count = self.rng.gen_range(1..=3.min(tuples.len()));
        let picked: Vec<Vec<usize>> = tuples
            .choose_multiple(&mut self.rng, count)
            .cloned()
            .collect();
        for idx in picked {
            let c = self.scalar();
            t.add_term(&idx, c);
        }
        t
    }

    pub fn mv(&mut self, degree: usize) -> crate::tensor::Multivector {
        self.skew(degree)
    }

    pub fn form(&mut self, degree: usize) -> crate::tensor::Form {
        self.skew(degree)
    }
}
