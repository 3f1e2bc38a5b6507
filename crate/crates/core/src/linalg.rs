//! Exact matrices over the coordinate ring and over Q(i).

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::scalar::{CoordinateRing, GaussRational, Scalar};

/// Dense matrix of ring elements, row-major.
#[derive(Clone, PartialEq)]
pub struct SMatrix {
    ring: Arc<CoordinateRing>,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl SMatrix {
    pub fn zeros(ring: &Arc<CoordinateRing>, rows: usize, cols: usize) -> Self {
        SMatrix {
            ring: ring.clone(),
            rows,
            cols,
            data: vec![Scalar::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Arc<CoordinateRing>, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for k in 0..n {
            m.set(k, k, Scalar::one(ring));
        }
        m
    }

    pub fn from_rows(ring: &Arc<CoordinateRing>, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        SMatrix {
            ring: ring.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(
        ring: &Arc<CoordinateRing>,
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        SMatrix {
            ring: ring.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Integer matrix lifted into the ring.
    pub fn from_ints(ring: &Arc<CoordinateRing>, rows: &[Vec<i128>]) -> Self {
        Self::from_rows(
            ring,
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::int(ring, v)).collect())
                .collect(),
        )
    }

    pub fn ring(&self) -> &Arc<CoordinateRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.data.iter().all(|v| v.is_constant())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ring, self.cols, self.rows, |r, c| {
            self.get(c, r).clone()
        })
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        SMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|v| -v)
    }

    pub fn conj(&self) -> Self {
        self.map(|v| v.conj())
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        self.map(|v| v.scale(c))
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (o.rows, o.cols),
            "matrix shape mismatch"
        );
        SMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix shape mismatch");
        Self::from_fn(&self.ring, self.rows, o.cols, |r, c| {
            let mut acc = Scalar::zero(&self.ring);
            for k in 0..self.cols {
                let a = self.get(r, k);
                let b = o.get(k, c);
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero(&self.ring);
                for (k, x) in v.iter().enumerate() {
                    let a = self.get(r, k);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero(&self.ring);
        for k in 0..self.rows.min(self.cols) {
            acc = &acc + self.get(k, k);
        }
        acc
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(&self.ring, rows.len(), cols.len(), |r, c| {
            self.get(rows[r], cols[c]).clone()
        })
    }

    /// First nonzero entry as `(row, col, value)`.
    pub fn first_nonzero(&self) -> Option<(usize, usize, Scalar)> {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.get(r, c).is_zero() {
                    return Some((r, c, self.get(r, c).clone()));
                }
            }
        }
        None
    }

    /// Faddeev-LeVerrier: returns `(det, adjugate)` using only divisions by integers.
    pub fn det_adj(&self) -> (Scalar, SMatrix) {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return (Scalar::one(&self.ring), Self::zeros(&self.ring, 0, 0));
        }
        let id = Self::identity(&self.ring, n);
        let mut m = id.clone();
        let mut c = Scalar::one(&self.ring);
        for k in 1..=n {
            if k > 1 {
                m = self.mul(&m).add(&id.map(|v| v * &c));
            }
            let am = self.mul(&m);
            c = am
                .trace()
                .scale(&GaussRational::from_int(-(k as i128)).inv().unwrap());
        }
        // Now c = c_0 and m = M_n.
        let sign_det = if n.is_multiple_of(2) { 1 } else { -1 };
        let det = c.scale(&GaussRational::from_int(sign_det));
        let adj = m.scale(&GaussRational::from_int(-sign_det));
        (det, adj)
    }

    pub fn det(&self) -> Scalar {
        self.det_adj().0
    }

    /// Inverse when the determinant is a nonzero constant.
    pub fn inverse(&self) -> Option<SMatrix> {
        let (det, adj) = self.det_adj();
        let c = det.as_constant()?;
        let inv = c.inv()?;
        Some(adj.scale(&inv))
    }

    pub fn eval(&self, point: &[GaussRational]) -> Result<GMatrix> {
        Scalar::check_point(&self.ring, point)?;
        Ok(GMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.eval_unchecked(point)).collect(),
        })
    }
}

impl fmt::Display for SMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Dense matrix over Q(i).
#[derive(Clone, PartialEq, Debug)]
pub struct GMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<GaussRational>,
}

impl GMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GMatrix {
            rows,
            cols,
            data: vec![GaussRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<GaussRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        GMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_cols(cols: &[Vec<GaussRational>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let mut out = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(k, c);
                    if !b.is_zero() {
                        let v = &out.data[r * o.cols + c] + &(a * b);
                        out.data[r * o.cols + c] = v;
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (GMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&f * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<GaussRational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![GaussRational::zero(); self.cols];
                v[f] = GaussRational::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(k, f);
                }
                v
            })
            .collect()
    }

    /// Whether `v` lies in the column span.
    pub fn col_span_contains(&self, v: &[GaussRational]) -> bool {
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, v[r].clone());
        }
        aug.rank() == self.rank()
    }
}
