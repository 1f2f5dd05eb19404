//! Exact linear algebra over ℚ or 𝔽p: sparse vectors and maps, canonical
//! reduced row-echelon forms, subspaces and quotient spaces.

mod mat;
mod scalar;
mod vector;

use std::collections::BTreeMap;

pub use mat::Mat;
pub use scalar::{Field, Scalar};
pub use vector::{Accumulator, Vector};

/// Flat index of `e_i ⊗ e_j` in a tensor product whose right factor has dimension `dim_b`.
#[inline]
pub fn tidx(i: usize, j: usize, dim_b: usize) -> usize {
    i * dim_b + j
}

/// `(f ⊗ id)(v)` for `v ∈ V ⊗ W` with `dim W = right`.
pub fn map_left(f: &Mat, v: &Vector, right: usize) -> Vector {
    assert_eq!(v.dim(), f.ncols() * right, "map_left: dimension mismatch");
    let mut acc = Accumulator::new(f.nrows() * right);
    for (j, inner) in v.split_outer(right) {
        for (a, x) in f.col(j).iter() {
            for (b, y) in inner.iter() {
                acc.add(a * right + b, &(x * y));
            }
        }
    }
    acc.finish()
}

/// `(id ⊗ f)(v)` for `v ∈ V ⊗ W` with `dim W = f.ncols()`.
pub fn map_right(f: &Mat, v: &Vector) -> Vector {
    let (right, out) = (f.ncols(), f.nrows());
    assert_eq!(v.dim() % right.max(1), 0, "map_right: dimension mismatch");
    let left = if right == 0 { 0 } else { v.dim() / right };
    let mut acc = Accumulator::new(left * out);
    for (j, inner) in v.split_outer(right) {
        for (b, y) in f.apply(&inner).iter() {
            acc.add(j * out + b, y);
        }
    }
    acc.finish()
}

/// The flip `V ⊗ W -> W ⊗ V`.
pub fn swap(v: &Vector, left: usize, right: usize) -> Vector {
    assert_eq!(v.dim(), left * right, "swap: dimension mismatch");
    Vector::from_pairs(left * right, v.iter().map(|(k, x)| ((k % right) * left + k / right, x.clone())))
}

/// Two-sided inverse of a square map, if it exists.
pub fn inverse(m: &Mat) -> Option<Mat> {
    if m.nrows() != m.ncols() {
        return None;
    }
    let n = m.ncols();
    let cols: Option<Vec<Vector>> = (0..n).map(|i| solve(m, &Vector::unit(n, i))).collect();
    let inv = Mat::from_columns(n, cols?);
    (m.compose(&inv) == Mat::identity(n)).then_some(inv)
}

/// Incremental row echelon form with unit leading coefficients.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: BTreeMap<usize, Vector>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a row; returns `false` if it was already in the span.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        assert_eq!(v.dim(), self.ncols, "echelon: row dimension mismatch");
        loop {
            let (j, c) = match v.leading() {
                None => return false,
                Some((j, c)) => (j, c.clone()),
            };
            match self.rows.get(&j) {
                Some(r) => v = v.axpy(&-c, r),
                None => {
                    let inv = c.inv().expect("nonzero leading entry");
                    self.rows.insert(j, v.scale(&inv));
                    return true;
                }
            }
        }
    }

    /// Back-substitutes into the canonical reduced form.
    pub fn finish(self) -> (Vec<Vector>, Vec<usize>) {
        let mut done: BTreeMap<usize, Vector> = BTreeMap::new();
        for (p, mut r) in self.rows.into_iter().rev() {
            let hits: Vec<(usize, Scalar)> =
                r.iter().filter(|(j, _)| *j != p && done.contains_key(j)).map(|(j, c)| (j, c.clone())).collect();
            for (j, c) in hits {
                r = r.axpy(&-c, &done[&j]);
            }
            done.insert(p, r);
        }
        let pivots: Vec<usize> = done.keys().copied().collect();
        (done.into_values().collect(), pivots)
    }
}

/// Reduced row-echelon form of `m` (as a matrix with `rank` rows) and its pivot columns.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    let (rows, piv) = rref_rows(m.ncols(), m.row_vectors());
    (Mat::from_rows(m.ncols(), &rows), piv)
}

pub fn rref_rows(ncols: usize, rows: impl IntoIterator<Item = Vector>) -> (Vec<Vector>, Vec<usize>) {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.finish()
}

/// A subspace stored by its canonical RREF basis; equality is span equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_spanning(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let (basis, pivots) = rref_rows(ambient, vectors);
        Subspace { ambient, basis, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| Vector::unit(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns are the basis vectors.
    pub fn basis_mat(&self) -> Mat {
        Mat::from_columns(self.ambient, self.basis.clone())
    }

    /// `v` minus its component along the pivot directions; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut acc = Accumulator::new(self.ambient);
        acc.add_scaled(&Scalar::one(), v);
        for (j, c) in v.iter() {
            if let Ok(k) = self.pivots.binary_search(&j) {
                acc.add_scaled(&-c.clone(), &self.basis[k]);
            }
        }
        acc.finish()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates in the canonical basis, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &Vector) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(Vector::from_pairs(self.dim(), self.pivots.iter().enumerate().map(|(k, p)| (k, v.get(*p)))))
    }

    pub fn embed(&self, c: &Vector) -> Vector {
        assert_eq!(c.dim(), self.dim(), "embed: coordinate dimension mismatch");
        let mut acc = Accumulator::new(self.ambient);
        for (k, x) in c.iter() {
            acc.add_scaled(x, &self.basis[k]);
        }
        acc.finish()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_spanning(self.ambient, self.basis.iter().chain(other.basis.iter()).cloned())
    }
}

/// Kernel of the map `m`.
pub fn kernel(m: &Mat) -> Subspace {
    let n = m.ncols();
    let (rows, piv) = rref_rows(n, m.row_vectors());
    let mut is_piv = vec![false; n];
    for p in &piv {
        is_piv[*p] = true;
    }
    let gens = (0..n).filter(|f| !is_piv[*f]).map(|f| {
        let mut pairs = vec![(f, Scalar::one())];
        for (k, p) in piv.iter().enumerate() {
            let c = rows[k].get(f);
            if !c.is_zero() {
                pairs.push((*p, -c));
            }
        }
        Vector::from_pairs(n, pairs)
    });
    Subspace::from_spanning(n, gens)
}

/// Image (column span) of the map `m`.
pub fn image(m: &Mat) -> Subspace {
    Subspace::from_spanning(m.nrows(), m.columns().iter().cloned())
}

/// Some solution `x` of `m x = b` (free variables set to zero), if one exists.
pub fn solve(m: &Mat, b: &Vector) -> Option<Vector> {
    let n = m.ncols();
    assert_eq!(b.dim(), m.nrows(), "solve: right-hand side dimension mismatch");
    let rows = m.row_vectors().into_iter().enumerate().map(|(i, r)| {
        let mut pairs: Vec<(usize, Scalar)> = r.iter().map(|(j, v)| (j, v.clone())).collect();
        pairs.push((n, b.get(i)));
        Vector::from_pairs(n + 1, pairs)
    });
    let (rr, piv) = rref_rows(n + 1, rows);
    if piv.last() == Some(&n) {
        return None;
    }
    Some(Vector::from_pairs(n, piv.iter().enumerate().map(|(k, p)| (*p, rr[k].get(n)))))
}

/// `V / rels`, with coordinates on the non-pivot directions of the relation basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    relations: Subspace,
    free: Vec<usize>,
    slot: Vec<Option<usize>>,
}

/// Builds the quotient of `k^ambient` by `rels`.
pub fn quotient_by(ambient: usize, rels: Subspace) -> QuotientSpace {
    assert_eq!(rels.ambient_dim(), ambient, "quotient_by: ambient mismatch");
    let mut slot = vec![None; ambient];
    let mut is_piv = vec![false; ambient];
    for p in rels.pivots() {
        is_piv[*p] = true;
    }
    let free: Vec<usize> = (0..ambient).filter(|j| !is_piv[*j]).collect();
    for (k, j) in free.iter().enumerate() {
        slot[*j] = Some(k);
    }
    QuotientSpace { relations: rels, free, slot }
}

impl QuotientSpace {
    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Ambient indices whose classes form the quotient basis.
    pub fn free_indices(&self) -> &[usize] {
        &self.free
    }

    pub fn project(&self, v: &Vector) -> Vector {
        let r = self.relations.reduce(v);
        Vector::from_pairs(
            self.dim(),
            r.iter().map(|(j, c)| (self.slot[j].expect("reduced vector has a pivot entry"), c.clone())),
        )
    }

    pub fn lift(&self, c: &Vector) -> Vector {
        assert_eq!(c.dim(), self.dim(), "lift: coordinate dimension mismatch");
        Vector::from_pairs(self.ambient_dim(), c.iter().map(|(k, x)| (self.free[k], x.clone())))
    }

    pub fn projection(&self) -> Mat {
        Mat::from_fn(self.dim(), self.ambient_dim(), |j| self.project(&Vector::unit(self.ambient_dim(), j)))
    }

    pub fn section(&self) -> Mat {
        Mat::from_fn(self.ambient_dim(), self.dim(), |k| Vector::unit(self.ambient_dim(), self.free[k]))
    }
}
