//! Normal-form polynomials over a [`CoordinateRing`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::gauss::GaussRational;
use super::ring::{CoordinateRing, Monomial, Terms};
use crate::error::{Error, Result};

/// A polynomial in normal form modulo its ring's relations.
#[derive(Clone)]
pub struct Scalar {
    ring: Arc<CoordinateRing>,
    terms: Terms,
}

fn same_ring(a: &Arc<CoordinateRing>, b: &Arc<CoordinateRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Scalar {
    pub fn zero(ring: &Arc<CoordinateRing>) -> Self {
        Scalar {
            ring: ring.clone(),
            terms: Terms::new(),
        }
    }

    pub fn one(ring: &Arc<CoordinateRing>) -> Self {
        Self::constant(ring, GaussRational::one())
    }

    pub fn constant(ring: &Arc<CoordinateRing>, c: GaussRational) -> Self {
        let mut terms = Terms::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.nvars()), c);
        }
        Scalar {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn int(ring: &Arc<CoordinateRing>, n: i128) -> Self {
        Self::constant(ring, GaussRational::from_int(n))
    }

    pub fn i(ring: &Arc<CoordinateRing>) -> Self {
        Self::constant(ring, GaussRational::i())
    }

    pub fn var(ring: &Arc<CoordinateRing>, k: usize) -> Self {
        assert!(k < ring.nvars(), "variable index out of range");
        let mut terms = Terms::new();
        terms.insert(Monomial::var(ring.nvars(), k), GaussRational::one());
        Scalar {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var_named(ring: &Arc<CoordinateRing>, name: &str) -> Result<Self> {
        let k = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(ring, k))
    }

    /// Reduces a raw term map to normal form.
    pub fn from_terms(ring: &Arc<CoordinateRing>, terms: Terms) -> Self {
        Scalar {
            ring: ring.clone(),
            terms: ring.reduce(terms),
        }
    }

    pub fn ring(&self) -> &Arc<CoordinateRing> {
        &self.ring
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn as_constant(&self) -> Option<GaussRational> {
        if self.terms.is_empty() {
            return Some(GaussRational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }

    pub fn scale(&self, c: &GaussRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero(&self.ring);
        }
        Scalar {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Complex conjugation of every coefficient. Relations are real, so normal form is kept.
    pub fn conj(&self) -> Scalar {
        Scalar {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.conj()))
                .collect(),
        }
    }

    pub fn re(&self) -> Scalar {
        let half = GaussRational::frac(1, 2);
        (self + &self.conj()).scale(&half)
    }

    /// Partial derivative of the normal-form representative.
    ///
    /// Only derivations tangent to the relations are well defined on the quotient; callers
    /// combine partials into such derivations (anchor vector fields).
    pub fn partial(&self, k: usize) -> Scalar {
        let mut terms = Terms::new();
        for (m, c) in &self.terms {
            let e = m.0[k];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[k] -= 1;
            terms.insert(m2, c * &GaussRational::from_int(e as i128));
        }
        Scalar {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Applies the derivation `sum_k field[k] * d/dx^k`.
    pub fn derive_along(&self, field: &[Scalar]) -> Scalar {
        debug_assert_eq!(field.len(), self.ring.nvars());
        let mut acc = Scalar::zero(&self.ring);
        if self.is_constant() {
            return acc;
        }
        for (k, v) in field.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let p = self.partial(k);
            if !p.is_zero() {
                acc = &acc + &(v * &p);
            }
        }
        acc
    }

    /// Checks that `point` assigns every coordinate and satisfies all relations exactly.
    pub fn check_point(ring: &CoordinateRing, point: &[GaussRational]) -> Result<()> {
        if point.len() != ring.nvars() {
            return Err(Error::ShapeMismatch(format!(
                "point has {} entries, ring has {} coordinates",
                point.len(),
                ring.nvars()
            )));
        }
        for rel in ring.relations() {
            let lhs = point[rel.var].pow(2);
            let rhs = eval_terms(&rel.rhs, point);
            if lhs != rhs {
                return Err(Error::RelationViolatedAtPoint(format!(
                    "{}^2 = ...",
                    ring.names()[rel.var]
                )));
            }
        }
        Ok(())
    }

    /// Exact evaluation at a relation-satisfying point.
    pub fn eval(&self, point: &[GaussRational]) -> Result<GaussRational> {
        Self::check_point(&self.ring, point)?;
        Ok(self.eval_unchecked(point))
    }

    pub fn eval_unchecked(&self, point: &[GaussRational]) -> GaussRational {
        eval_terms(&self.terms, point)
    }

    /// Moves the polynomial into `target`, sending variable `k` to `var_map[k]`.
    pub fn embed(&self, target: &Arc<CoordinateRing>, var_map: &[usize]) -> Scalar {
        let n = target.nvars();
        let mut terms = Terms::new();
        for (m, c) in &self.terms {
            let mut m2 = Monomial::one(n);
            for (k, &e) in m.0.iter().enumerate() {
                m2.0[var_map[k]] += e;
            }
            let slot = terms.entry(m2).or_insert_with(GaussRational::zero);
            *slot += c;
        }
        Scalar::from_terms(target, terms)
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

fn eval_terms(terms: &Terms, point: &[GaussRational]) -> GaussRational {
    let mut acc = GaussRational::zero();
    for (m, c) in terms {
        let mut v = c.clone();
        for (k, &e) in m.0.iter().enumerate() {
            if e > 0 {
                v *= &point[k].pow(e as u32);
            }
        }
        acc += &v;
    }
    acc
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Scalar {}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        debug_assert!(
            same_ring(&self.ring, &o.ring),
            "scalars from different rings"
        );
        if o.terms.is_empty() {
            return self.clone();
        }
        if self.terms.is_empty() {
            return o.clone();
        }
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            match terms.get_mut(m) {
                Some(v) => {
                    *v += c;
                    if v.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Scalar {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        debug_assert!(
            same_ring(&self.ring, &o.ring),
            "scalars from different rings"
        );
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            match terms.get_mut(m) {
                Some(v) => {
                    *v -= c;
                    if v.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), -c);
                }
            }
        }
        Scalar {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        debug_assert!(
            same_ring(&self.ring, &o.ring),
            "scalars from different rings"
        );
        if self.terms.is_empty() || o.terms.is_empty() {
            return Scalar::zero(&self.ring);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        let mut terms = Terms::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let slot = terms.entry(m1.mul(m2)).or_insert_with(GaussRational::zero);
                *slot += &(c1 * c2);
            }
        }
        Scalar::from_terms(&self.ring, terms)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        &self + &o
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Scalar {
    /// Terms in decreasing graded-lex order, e.g. `x^2*t - 1/2*i*y + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.names();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut mono = String::new();
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&names[k]);
                if e > 1 {
                    mono.push_str(&format!("^{}", e));
                }
            }
            // Leading sign is pulled out of purely real or purely imaginary coefficients.
            let negative = (c.im.is_zero() && c.re < num_rational::Ratio::from_integer(0))
                || (c.re.is_zero() && c.im < num_rational::Ratio::from_integer(0));
            let mag = if negative { -c } else { c.clone() };
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", mag, mono)?;
            }
        }
        Ok(())
    }
}
