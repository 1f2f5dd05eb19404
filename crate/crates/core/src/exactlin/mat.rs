use super::vector::Accumulator;
use super::{Scalar, Vector};

/// Linear map `k^cols -> k^rows`, stored as the images of the basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: Vec<Vector>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols: vec![Vector::zeros(rows); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Mat { rows: n, cols: (0..n).map(|i| Vector::unit(n, i)).collect() }
    }

    pub fn from_columns(rows: usize, cols: Vec<Vector>) -> Self {
        for c in &cols {
            assert_eq!(c.dim(), rows, "column dimension mismatch");
        }
        Mat { rows, cols }
    }

    /// Builds the map whose `j`-th column is `f(j)`.
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize) -> Vector) -> Self {
        Self::from_columns(rows, (0..cols).map(f).collect())
    }

    /// Dense constructor from a row-major integer grid.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Mat::from_fn(r, c, |j| Vector::from_pairs(r, (0..r).map(|i| (i, Scalar::from_i64(rows[i][j])))))
    }

    pub fn from_rows(cols: usize, rows: &[Vector]) -> Self {
        let mut colv: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.dim(), cols, "row dimension mismatch");
            for (j, v) in r.iter() {
                colv[j].push((i, v.clone()));
            }
        }
        let n = rows.len();
        Mat { rows: n, cols: colv.into_iter().map(|c| Vector::from_pairs(n, c)).collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &Vector {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vector] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].get(i)
    }

    pub fn set_col(&mut self, j: usize, v: Vector) {
        assert_eq!(v.dim(), self.rows, "column dimension mismatch");
        self.cols[j] = v;
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c.iter() {
                rows[i].push((j, v.clone()));
            }
        }
        let n = self.ncols();
        rows.into_iter().map(|r| Vector::from_pairs(n, r)).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat { rows: self.ncols(), cols: self.row_vectors() }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.ncols(), "apply: dimension mismatch");
        let mut acc = Accumulator::new(self.rows);
        for (j, c) in v.iter() {
            acc.add_scaled(c, &self.cols[j]);
        }
        acc.finish()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Mat) -> Mat {
        assert_eq!(other.rows, self.ncols(), "compose: dimension mismatch");
        Mat { rows: self.rows, cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    /// `self ⊗ other` acting on tensor-indexed vectors.
    pub fn kron(&self, other: &Mat) -> Mat {
        let mut cols = Vec::with_capacity(self.ncols() * other.ncols());
        for a in &self.cols {
            for b in &other.cols {
                cols.push(a.tensor(b));
            }
        }
        Mat { rows: self.rows * other.rows, cols }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.ncols()), (other.rows, other.ncols()));
        Mat { rows: self.rows, cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.ncols()), (other.rows, other.ncols()));
        Mat { rows: self.rows, cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat { rows: self.rows, cols: self.cols.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn rank(&self) -> usize {
        super::rref(self).1.len()
    }

    /// Sparse `(row, col, value)` triples sorted by column, then row.
    pub fn triples(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c.iter() {
                out.push((i, j, v.clone()));
            }
        }
        out
    }

    pub fn map_values(&self, f: impl Fn(&Scalar) -> Scalar) -> Mat {
        Mat { rows: self.rows, cols: self.cols.iter().map(|c| c.map_values(&f)).collect() }
    }
}
