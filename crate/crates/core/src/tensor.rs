//! Sparse skew tensors: multivectors (sections of `Λ^p E`) and forms (sections of `Λ^p E*`).
//!
//! Indices are 0-based and stored as strictly increasing tuples. A form's coefficient on a
//! sorted tuple is its value on the corresponding frame sections, so
//! `<e^a ^ e^b, e_a ^ e_b> = 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::{CoordinateRing, GaussRational, Scalar};

pub type Idx = SmallVec<[u8; 8]>;

pub trait Kind: Clone + fmt::Debug + Send + Sync + 'static {
    type Dual: Kind<Dual = Self>;
    /// Basis symbol used when printing, `e` for the frame and `E` for the coframe.
    const SYMBOL: &'static str;
    const CONTRA: bool;
}

#[derive(Clone, Debug)]
pub enum Contra {}
#[derive(Clone, Debug)]
pub enum Co {}

impl Kind for Contra {
    type Dual = Co;
    const SYMBOL: &'static str = "e";
    const CONTRA: bool = true;
}

impl Kind for Co {
    type Dual = Contra;
    const SYMBOL: &'static str = "E";
    const CONTRA: bool = false;
}

#[derive(Clone)]
pub struct Skew<K: Kind> {
    ring: Arc<CoordinateRing>,
    rank: usize,
    degree: usize,
    coeffs: BTreeMap<Idx, Scalar>,
    _kind: PhantomData<K>,
}

pub type Multivector = Skew<Contra>;
pub type Form = Skew<Co>;

/// Sorts `idx` in place and returns the permutation sign, or `None` on a repeated index.
pub fn sort_sign(idx: &mut [usize]) -> Option<i8> {
    let mut sign = 1i8;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// Sign of merging two sorted disjoint tuples, or `None` if they share an index.
fn merge_sign(a: &[u8], b: &[u8]) -> Option<(Idx, i8)> {
    let mut out = Idx::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((out, if inversions.is_multiple_of(2) { 1 } else { -1 }))
}

fn same_parent(r1: &Arc<CoordinateRing>, k1: usize, r2: &Arc<CoordinateRing>, k2: usize) -> bool {
    k1 == k2 && (Arc::ptr_eq(r1, r2) || **r1 == **r2)
}

impl<K: Kind> Skew<K> {
    pub fn zero(ring: &Arc<CoordinateRing>, rank: usize, degree: usize) -> Self {
        Skew {
            ring: ring.clone(),
            rank,
            degree,
            coeffs: BTreeMap::new(),
            _kind: PhantomData,
        }
    }

    /// Degree-0 tensor holding a function.
    pub fn scalar(rank: usize, f: Scalar) -> Self {
        let mut t = Self::zero(f.ring(), rank, 0);
        if !f.is_zero() {
            t.coeffs.insert(Idx::new(), f);
        }
        t
    }

    /// `e_{i1} ^ ... ^ e_{ip}` (or its coframe analogue) for arbitrary, possibly unsorted indices.
    pub fn basis(ring: &Arc<CoordinateRing>, rank: usize, idx: &[usize]) -> Self {
        let mut t = Self::zero(ring, rank, idx.len());
        t.add_term(idx, Scalar::one(ring));
        t
    }

    /// Degree-1 tensor from its component vector.
    pub fn from_vector(ring: &Arc<CoordinateRing>, comps: Vec<Scalar>) -> Self {
        let rank = comps.len();
        let mut t = Self::zero(ring, rank, 1);
        for (a, c) in comps.into_iter().enumerate() {
            if !c.is_zero() {
                t.coeffs.insert(SmallVec::from_slice(&[a as u8]), c);
            }
        }
        t
    }

    pub fn ring(&self) -> &Arc<CoordinateRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Idx, Scalar> {
        &self.coeffs
    }

    pub fn nterms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn check_parent<L: Kind>(&self, other: &Skew<L>) -> Result<()> {
        if same_parent(&self.ring, self.rank, &other.ring, other.rank) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    fn assert_parent<L: Kind>(&self, other: &Skew<L>) {
        assert!(
            same_parent(&self.ring, self.rank, &other.ring, other.rank),
            "tensors belong to different algebroids"
        );
    }

    /// Coefficient on an arbitrary index tuple, with the skew sign applied.
    pub fn get(&self, idx: &[usize]) -> Scalar {
        let mut v = idx.to_vec();
        match sort_sign(&mut v) {
            None => Scalar::zero(&self.ring),
            Some(s) => {
                let key: Idx = v.iter().map(|&a| a as u8).collect();
                match self.coeffs.get(&key) {
                    None => Scalar::zero(&self.ring),
                    Some(c) if s > 0 => c.clone(),
                    Some(c) => -c,
                }
            }
        }
    }

    /// Degree-0 value as a function.
    pub fn as_scalar(&self) -> Scalar {
        assert_eq!(self.degree, 0);
        self.coeffs
            .get(&Idx::new())
            .cloned()
            .unwrap_or_else(|| Scalar::zero(&self.ring))
    }

    /// Component vector of a degree-1 tensor.
    pub fn vector(&self) -> Vec<Scalar> {
        assert_eq!(self.degree, 1);
        (0..self.rank).map(|a| self.get(&[a])).collect()
    }

    /// Adds `c * e_idx`, sorting the tuple and applying its sign.
    pub fn add_term(&mut self, idx: &[usize], c: Scalar) {
        assert_eq!(idx.len(), self.degree, "index tuple has the wrong length");
        assert!(idx.iter().all(|&a| a < self.rank), "index out of range");
        if c.is_zero() {
            return;
        }
        let mut v = idx.to_vec();
        let Some(s) = sort_sign(&mut v) else { return };
        let key: Idx = v.iter().map(|&a| a as u8).collect();
        let c = if s > 0 { c } else { -c };
        self.add_sorted(key, c);
    }

    fn add_sorted(&mut self, key: Idx, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&key) {
            Some(v) => {
                let sum = &*v + &c;
                if sum.is_zero() {
                    self.coeffs.remove(&key);
                } else {
                    *v = sum;
                }
            }
            None => {
                self.coeffs.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_parent(other);
        assert_eq!(
            self.degree, other.degree,
            "adding tensors of different degrees"
        );
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_sorted(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, f: &Scalar) -> Self {
        if f.is_zero() {
            return Self::zero(&self.ring, self.rank, self.degree);
        }
        self.map_coeffs(|c| c * f)
    }

    pub fn scale_const(&self, c: &GaussRational) -> Self {
        self.map_coeffs(|v| v.scale(c))
    }

    pub fn conj(&self) -> Self {
        self.map_coeffs(|c| c.conj())
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.values().all(|c| c.is_real())
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        let mut out = Self::zero(&self.ring, self.rank, self.degree);
        for (k, c) in &self.coeffs {
            let v = f(c);
            if !v.is_zero() {
                out.coeffs.insert(k.clone(), v);
            }
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        self.assert_parent(other);
        let mut out = Self::zero(&self.ring, self.rank, self.degree + other.degree);
        if self.degree + other.degree > self.rank {
            return out;
        }
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                if let Some((k, s)) = merge_sign(i, j) {
                    let c = a * b;
                    out.add_sorted(k, if s > 0 { c } else { -c });
                }
            }
        }
        out
    }

    pub fn try_wedge(&self, other: &Self) -> Result<Self> {
        self.check_parent(other)?;
        Ok(self.wedge(other))
    }

    /// Extends a map on generators multiplicatively:
    /// `e_{i1} ^ ... ^ e_{ip} -> f(i1) ^ ... ^ f(ip)`.
    pub fn map_generators<L: Kind>(
        &self,
        ring: &Arc<CoordinateRing>,
        rank: usize,
        f: &dyn Fn(usize) -> Skew<L>,
    ) -> Skew<L> {
        let images: Vec<Skew<L>> = (0..self.rank).map(f).collect();
        let mut out = Skew::<L>::zero(ring, rank, self.degree);
        for (idx, c) in &self.coeffs {
            let mut acc = Skew::<L>::scalar(rank, Scalar::one(ring));
            for &a in idx.iter() {
                acc = acc.wedge(&images[a as usize]);
                if acc.is_zero() {
                    break;
                }
            }
            if acc.is_zero() {
                continue;
            }
            out = out.add(&acc.scale(&c.embed_same(ring)));
        }
        out
    }

    /// Extends a map on generators as a graded derivation of degree `r = deg f(i) - 1`:
    /// `e_{i1} ^ ... ^ e_{ip} -> sum_k (-1)^{k r} e_{i1} ^ ... ^ f(ik) ^ ... ^ e_{ip}`.
    pub fn derive_generators(&self, f: &dyn Fn(usize) -> Skew<K>) -> Skew<K> {
        let images: Vec<Skew<K>> = (0..self.rank).map(f).collect();
        let deg = images.first().map(|t| t.degree).unwrap_or(1);
        let odd = deg.is_multiple_of(2);
        let mut out = Self::zero(&self.ring, self.rank, self.degree + deg - 1);
        for (idx, c) in &self.coeffs {
            for k in 0..idx.len() {
                let c = if odd && k % 2 == 1 { -c } else { c.clone() };
                let mut acc = Self::scalar(self.rank, c);
                for (l, &a) in idx.iter().enumerate() {
                    let piece = if l == k {
                        images[a as usize].clone()
                    } else {
                        Self::basis(&self.ring, self.rank, &[a as usize])
                    };
                    acc = acc.wedge(&piece);
                    if acc.is_zero() {
                        break;
                    }
                }
                if !acc.is_zero() {
                    out = out.add(&acc);
                }
            }
        }
        out
    }

    /// Transports the tensor to a larger parent: variables via `var_map`, indices shifted by `offset`.
    pub fn embed(
        &self,
        ring: &Arc<CoordinateRing>,
        rank: usize,
        var_map: &[usize],
        offset: usize,
    ) -> Self {
        let mut out = Self::zero(ring, rank, self.degree);
        for (idx, c) in &self.coeffs {
            let key: Idx = idx.iter().map(|&a| a + offset as u8).collect();
            out.add_sorted(key, c.embed(ring, var_map));
        }
        out
    }

    /// Full-contraction-style equality check that also compares degree.
    pub fn same_as(&self, other: &Self) -> bool {
        self.degree == other.degree && self.coeffs == other.coeffs
    }

    /// Same coefficients read in the other kind, e.g. a p-vector on `E` as a p-form on `E*`.
    pub fn reinterpret<L: Kind>(&self) -> Skew<L> {
        Skew {
            ring: self.ring.clone(),
            rank: self.rank,
            degree: self.degree,
            coeffs: self.coeffs.clone(),
            _kind: PhantomData,
        }
    }

    /// All sorted index tuples of length `p` over `rank`.
    pub fn tuples(rank: usize, p: usize) -> Vec<Vec<usize>> {
        fn rec(
            start: usize,
            rank: usize,
            p: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if cur.len() == p {
                out.push(cur.clone());
                return;
            }
            for a in start..rank {
                cur.push(a);
                rec(a + 1, rank, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if p <= rank {
            rec(0, rank, p, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl Scalar {
    /// Same polynomial viewed in an identical ring (cheap when the ring is shared).
    pub fn embed_same(&self, ring: &Arc<CoordinateRing>) -> Scalar {
        if Arc::ptr_eq(self.ring(), ring) || **self.ring() == **ring {
            self.clone()
        } else {
            panic!("coefficient ring differs from target ring")
        }
    }
}

impl<K: Kind> PartialEq for Skew<K> {
    fn eq(&self, other: &Self) -> bool {
        same_parent(&self.ring, self.rank, &other.ring, other.rank)
            && (self.degree == other.degree || (self.is_zero() && other.is_zero()))
            && self.coeffs == other.coeffs
    }
}

/// Left interior product of a degree-1 tensor of the dual kind:
/// `i_v (e_{a1} ^ ... ^ e_{ap}) = sum_k (-1)^k v_{ak} e_{a1} ^ .. ^ e_{ak}^ .. ^ e_{ap}`.
pub fn contract<K: Kind>(v: &Skew<K::Dual>, t: &Skew<K>) -> Skew<K> {
    assert_eq!(v.degree, 1, "interior product needs a degree-1 argument");
    assert!(
        same_parent(&v.ring, v.rank, &t.ring, t.rank),
        "tensors belong to different algebroids"
    );
    let mut out = Skew::<K>::zero(&t.ring, t.rank, t.degree.saturating_sub(1));
    if t.degree == 0 {
        return out;
    }
    let vec: Vec<Option<&Scalar>> = (0..v.rank)
        .map(|a| v.coeffs.get(&SmallVec::from_slice(&[a as u8])))
        .collect();
    for (idx, c) in &t.coeffs {
        for k in 0..idx.len() {
            if let Some(va) = vec[idx[k] as usize] {
                let mut rest = idx.clone();
                rest.remove(k);
                let term = va * c;
                out.add_sorted(rest, if k % 2 == 0 { term } else { -term });
            }
        }
    }
    out
}

pub fn try_contract<K: Kind>(v: &Skew<K::Dual>, t: &Skew<K>) -> Result<Skew<K>> {
    v.check_parent(t)?;
    Ok(contract(v, t))
}

/// `<w, S> = sum_I w_I S^I` over sorted tuples; both must have the same degree.
pub fn pairing(w: &Form, s: &Multivector) -> Scalar {
    assert!(
        same_parent(&w.ring, w.rank, &s.ring, s.rank),
        "tensors belong to different algebroids"
    );
    let mut acc = Scalar::zero(&w.ring);
    if w.degree != s.degree {
        return acc;
    }
    for (idx, c) in &w.coeffs {
        if let Some(d) = s.coeffs.get(idx) {
            acc = &acc + &(c * d);
        }
    }
    acc
}

/// Value of a p-form on p sections: `w(s1, ..., sp) = <w, s1 ^ ... ^ sp>`.
pub fn evaluate(w: &Form, sections: &[Multivector]) -> Scalar {
    let mut acc = Multivector::scalar(w.rank, Scalar::one(&w.ring));
    for s in sections {
        acc = acc.wedge(s);
    }
    pairing(w, &acc)
}

fn fmt_coeff_term(c: &Scalar, basis: &str) -> String {
    if basis.is_empty() {
        if c.nterms() > 1 {
            return format!("({})", c);
        }
        return c.to_string();
    }
    if c.is_one() {
        return basis.to_string();
    }
    if (-c).is_one() {
        return format!("-{}", basis);
    }
    if c.nterms() > 1 {
        return format!("({})*{}", c, basis);
    }
    format!("{}*{}", c, basis)
}

impl<K: Kind> fmt::Display for Skew<K> {
    /// Prints e.g. `2*e1^e2^e3 + (x - y)*e1^e4`, indices 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (n, (idx, c)) in self.coeffs.iter().enumerate() {
            let basis: Vec<String> = idx
                .iter()
                .map(|&a| format!("{}{}", K::SYMBOL, a + 1))
                .collect();
            let term = fmt_coeff_term(c, &basis.join("^"));
            if n == 0 {
                write!(f, "{}", term)?;
            } else if let Some(rest) = term.strip_prefix('-') {
                write!(f, " - {}", rest)?;
            } else {
                write!(f, " + {}", term)?;
            }
        }
        Ok(())
    }
}

impl<K: Kind> fmt::Debug for Skew<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<CoordinateRing> {
        CoordinateRing::free(&["x"])
    }

    #[test]
    fn wedge_sign_and_repeat() {
        let r = ring();
        let e1 = Multivector::basis(&r, 3, &[0]);
        let e2 = Multivector::basis(&r, 3, &[1]);
        let e12 = e1.wedge(&e2);
        assert_eq!(e2.wedge(&e1), e12.neg());
        assert!(e12.wedge(&e2).is_zero());
        assert_eq!(e12.to_string(), "e1^e2");
    }

    #[test]
    fn interior_and_pairing_conventions() {
        let r = ring();
        let e12 = Multivector::basis(&r, 2, &[0, 1]);
        let th1 = Form::basis(&r, 2, &[0]);
        assert_eq!(contract(&th1, &e12), Multivector::basis(&r, 2, &[1]));
        assert!(pairing(&Form::basis(&r, 2, &[0, 1]), &e12).is_one());
        let e1 = Multivector::basis(&r, 2, &[0]);
        let e2 = Multivector::basis(&r, 2, &[1]);
        assert!(evaluate(&Form::basis(&r, 2, &[0, 1]), &[e1.clone(), e2.clone()]).is_one());
        assert!((-evaluate(&Form::basis(&r, 2, &[0, 1]), &[e2, e1])).is_one());
    }

    #[test]
    fn display_forms() {
        let r = ring();
        let mut w = Form::zero(&r, 3, 2);
        w.add_term(&[2, 0], Scalar::var(&r, 0));
        w.add_term(&[0, 1], Scalar::int(&r, 2));
        assert_eq!(w.to_string(), "2*E1^E2 - x*E1^E3");
    }

    #[test]
    fn tuples_count() {
        assert_eq!(Multivector::tuples(4, 2).len(), 6);
        assert_eq!(Multivector::tuples(2, 3).len(), 0);
        assert_eq!(Multivector::tuples(3, 0), vec![Vec::<usize>::new()]);
    }
}
