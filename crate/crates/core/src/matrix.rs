//! Dense exact matrices and sparse incremental row echelon forms.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Bound::{Excluded, Unbounded};
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{Field, QLaurent, Rational, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn scalar(n: usize, c: S) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let data = (0..rows * cols).map(|n| f(n / cols, n % cols)).collect();
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c).collect(),
        }
    }

    /// Copy with the sign of the first nonzero entry (row-major) flipped.
    pub fn negate_first_nonzero(&self) -> Self {
        let mut out = self.clone();
        if let Some(v) = out.data.iter_mut().find(|v| !v.is_zero()) {
            *v = -v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// First entry where the two matrices differ, in row-major order.
    pub fn first_diff(&self, other: &Self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|n| (n / self.cols, n % self.cols))
    }

    /// `Some(c)` if this is `c·I`.
    pub fn as_scalar(&self) -> Option<S> {
        if self.rows != self.cols {
            return None;
        }
        let c = if self.rows == 0 { S::zero() } else { self.get(0, 0).clone() };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = if i == j { &c } else { &S::zero() };
                if self.get(i, j) != want {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn mat_vec(&self, v: &[S]) -> Vec<S> {
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a.clone() * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// `{"ring", "rows", "cols", "entries"}` with canonical scalar strings.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        json!({
            "ring": S::RING.name(),
            "rows": self.rows,
            "cols": self.cols,
            "entries": entries,
        })
    }

    /// Inverse of [`Matrix::to_json`].
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("matrix json: {m}"));
        let ring = v["ring"].as_str().ok_or_else(|| bad("missing ring"))?;
        if ring != S::RING.name() {
            return Err(Error::RingMismatch {
                expected: S::RING.name(),
                found: if ring == "rational" { "rational" } else { "laurent_s" },
            });
        }
        let rows = v["rows"].as_u64().ok_or_else(|| bad("missing rows"))? as usize;
        let cols = v["cols"].as_u64().ok_or_else(|| bad("missing cols"))? as usize;
        let entries = v["entries"].as_array().ok_or_else(|| bad("missing entries"))?;
        if entries.len() != rows {
            return Err(Error::DimensionMismatch(format!("{} rows listed, {rows} declared", entries.len())));
        }
        let mut m = Self::zeros(rows, cols);
        for (i, row) in entries.iter().enumerate() {
            let row = row.as_array().ok_or_else(|| bad("row is not an array"))?;
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries", row.len())));
            }
            for (j, e) in row.iter().enumerate() {
                m.set(i, j, e.as_str().ok_or_else(|| bad("entry is not a string"))?.parse()?);
            }
        }
        Ok(m)
    }

    fn check_same_shape(&self, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape");
    }
}

impl Matrix<QLaurent> {
    pub fn eval_at(&self, s0: &Rational) -> Result<Matrix<Rational>> {
        let data = self.data.iter().map(|a| a.eval_at(s0)).collect::<Result<_>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

impl<F: Field> Matrix<F> {
    pub fn rank(&self) -> usize {
        let mut ech = SparseEchelon::new();
        for i in 0..self.rows {
            ech.insert(sparse_from_dense(&self.data[i * self.cols..(i + 1) * self.cols]));
        }
        ech.len()
    }

    /// Gauss–Jordan inverse; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            a.swap_rows(col, piv);
            inv.swap_rows(col, piv);
            let p = a.get(col, col).inv().expect("nonzero pivot");
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    a.axpy_row(r, col, &f);
                    inv.axpy_row(r, col, &f);
                }
            }
        }
        Some(inv)
    }

    /// Basis of the right nullspace `{v : A v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !a.get(i, c).is_zero()) else { continue };
            a.swap_rows(r, p);
            let inv = a.get(r, c).inv().expect("nonzero pivot");
            a.scale_row(r, &inv);
            for i in 0..self.rows {
                if i != r && !a.get(i, c).is_zero() {
                    let f = a.get(i, c).clone();
                    a.axpy_row(i, r, &f);
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.data.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, i: usize, f: &F) {
        for c in 0..self.cols {
            let v = self.get(i, c).clone() * f;
            self.set(i, c, v);
        }
    }

    /// row_i −= f · row_j
    fn axpy_row(&mut self, i: usize, j: usize, f: &F) {
        for c in 0..self.cols {
            let b = self.get(j, c);
            if !b.is_zero() {
                let v = self.get(i, c).clone() - b.clone() * f;
                self.set(i, c, v);
            }
        }
    }
}

impl<'b, S: Scalar> Mul<&'b Matrix<S>> for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: &'b Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.data[idx] += &(a.clone() * b);
                    }
                }
            }
        }
        out
    }
}

impl<'b, S: Scalar> Add<&'b Matrix<S>> for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, rhs: &'b Matrix<S>) -> Matrix<S> {
        self.check_same_shape(rhs);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b).collect(),
        }
    }
}

impl<'b, S: Scalar> Sub<&'b Matrix<S>> for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, rhs: &'b Matrix<S>) -> Matrix<S> {
        self.check_same_shape(rhs);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b).collect(),
        }
    }
}

impl<S: Scalar> Neg for &Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Sparse echelon form

/// Nonzero entries of a dense vector, keyed by position.
pub fn sparse_from_dense<F: Scalar>(v: &[F]) -> BTreeMap<usize, F> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Incrementally built echelon basis of a subspace of `F^(K)`. Each stored
/// row has leading coefficient 1 at its smallest key.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone, F> {
    rows: BTreeMap<K, BTreeMap<K, F>>,
}

impl<K: Ord + Clone, F: Field> Default for SparseEchelon<K, F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone, F: Field> SparseEchelon<K, F> {
    pub fn new() -> Self {
        SparseEchelon { rows: BTreeMap::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduce `v` against the stored rows; zero result means `v` is in the span.
    pub fn reduce(&self, mut v: BTreeMap<K, F>) -> BTreeMap<K, F> {
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.iter().next(),
                Some(c) => v.range((Excluded(c.clone()), Unbounded)).next(),
            }
            .map(|(k, c)| (k.clone(), c.clone()));
            let Some((k, c)) = next else { break };
            if let Some(row) = self.rows.get(&k) {
                for (j, r) in row {
                    let e = v.entry(j.clone()).or_insert_with(F::zero);
                    *e -= &(c.clone() * r);
                    if e.is_zero() {
                        v.remove(j);
                    }
                }
            }
            cursor = Some(k);
        }
        v
    }

    pub fn contains(&self, v: BTreeMap<K, F>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Add `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: BTreeMap<K, F>) -> bool {
        let r = self.reduce(v);
        let Some((k, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.inv().expect("nonzero lead");
        let row = r.into_iter().map(|(j, c)| (j, c * &inv)).collect();
        self.rows.insert(k, row);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn inverse_and_rank() {
        let m = Matrix::from_fn(2, 2, |i, j| r([[2, 1], [1, 1]][i][j]));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        let s = Matrix::from_fn(2, 2, |i, j| r([[1, 2], [2, 4]][i][j]));
        assert!(s.inverse().is_none());
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn nullspace_basis() {
        let m = Matrix::from_fn(1, 3, |_, j| r([1, 1, 0][j]));
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mat_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn echelon_membership() {
        let mut e: SparseEchelon<usize, Rational> = SparseEchelon::new();
        assert!(e.insert(sparse_from_dense(&[r(1), r(2), r(0)])));
        assert!(e.insert(sparse_from_dense(&[r(0), r(1), r(1)])));
        assert!(!e.insert(sparse_from_dense(&[r(1), r(3), r(1)])));
        assert!(e.contains(sparse_from_dense(&[r(2), r(5), r(1)])));
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn json_round_trip() {
        let m = Matrix::from_fn(2, 3, |i, j| Rational::new(i as i64 - j as i64, 3));
        let back = Matrix::<Rational>::from_json(&m.to_json()).unwrap();
        assert_eq!(m, back);
        assert!(matches!(
            Matrix::<QLaurent>::from_json(&m.to_json()),
            Err(Error::RingMismatch { .. })
        ));
    }
}
