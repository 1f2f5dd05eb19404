use std::collections::BTreeMap;

use super::Scalar;

/// Sparse vector: sorted `(index, value)` pairs with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector {
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        Vector { dim, entries: Vec::new() }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim, "unit index {i} out of range {dim}");
        Vector { dim, entries: vec![(i, Scalar::one())] }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        let entries = values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect();
        Vector { dim: values.len(), entries }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        let v: Vec<Scalar> = values.iter().map(|&x| Scalar::from_i64(x)).collect();
        Self::from_dense(&v)
    }

    /// Builds a vector from unsorted pairs, summing repeated indices.
    pub fn from_pairs(dim: usize, pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc = Accumulator::new(dim);
        for (i, v) in pairs {
            acc.add(i, &v);
        }
        acc.finish()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zeros(self.dim);
        }
        let entries = self.entries.iter().map(|(i, v)| (*i, v * c)).filter(|(_, v)| !v.is_zero()).collect();
        Vector { dim: self.dim, entries }
    }

    /// `self + c * other`, merging the sorted entry lists.
    pub fn axpy(&self, c: &Scalar, other: &Vector) -> Vector {
        assert_eq!(self.dim, other.dim, "vector dimension mismatch");
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c * y));
                        b.next();
                    } else {
                        let s = x + &(c * y);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Vector { dim: self.dim, entries: out }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        self.axpy(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        self.axpy(&Scalar::from_i64(-1), other)
    }

    pub fn neg(&self) -> Vector {
        self.scale(&Scalar::from_i64(-1))
    }

    /// Pairing with a covector given as a vector of values.
    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.dim, other.dim, "vector dimension mismatch");
        let mut s = Scalar::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                s = s + x * y;
                a.next();
                b.next();
            }
        }
        s
    }

    /// Kronecker product with index `i * other.dim + j`.
    pub fn tensor(&self, other: &Vector) -> Vector {
        let mut entries = Vec::with_capacity(self.entries.len() * other.entries.len());
        for (i, x) in &self.entries {
            for (j, y) in &other.entries {
                entries.push((i * other.dim + j, x * y));
            }
        }
        Vector { dim: self.dim * other.dim, entries }
    }

    /// Applies a transformation to the entries, keeping only nonzero results.
    pub fn map_values(&self, f: impl Fn(&Scalar) -> Scalar) -> Vector {
        let entries = self.entries.iter().map(|(i, v)| (*i, f(v))).filter(|(_, v)| !v.is_zero()).collect();
        Vector { dim: self.dim, entries }
    }

    /// Slices a tensor-indexed vector of dimension `outer * inner` into
    /// `(outer index, inner vector)` pieces.
    pub fn split_outer(&self, inner: usize) -> Vec<(usize, Vector)> {
        let mut out: Vec<(usize, Vector)> = Vec::new();
        for (k, v) in &self.entries {
            let (o, i) = (k / inner, k % inner);
            match out.last_mut() {
                Some((last, vec)) if *last == o => vec.entries.push((i, v.clone())),
                _ => out.push((o, Vector { dim: inner, entries: vec![(i, v.clone())] })),
            }
        }
        out
    }
}

/// Scratch accumulator for building sparse vectors out of many contributions.
pub struct Accumulator {
    dim: usize,
    acc: BTreeMap<usize, Scalar>,
}

impl Accumulator {
    pub fn new(dim: usize) -> Self {
        Accumulator { dim, acc: BTreeMap::new() }
    }

    pub fn add(&mut self, i: usize, v: &Scalar) {
        assert!(i < self.dim, "index {i} out of range {}", self.dim);
        if v.is_zero() {
            return;
        }
        let e = self.acc.entry(i).or_insert_with(Scalar::zero);
        *e = &*e + v;
    }

    pub fn add_scaled(&mut self, c: &Scalar, v: &Vector) {
        assert_eq!(v.dim, self.dim, "accumulator dimension mismatch");
        if c.is_zero() {
            return;
        }
        for (i, x) in &v.entries {
            self.add(*i, &(c * x));
        }
    }

    pub fn finish(self) -> Vector {
        let entries = self.acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Vector { dim: self.dim, entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axpy_cancels() {
        let a = Vector::from_ints(&[1, 2, 0, 3]);
        let b = Vector::from_ints(&[1, 0, 5, 3]);
        let d = a.sub(&b);
        assert_eq!(d, Vector::from_ints(&[0, 2, -5, 0]));
        assert_eq!(d.nnz(), 2);
    }

    #[test]
    fn tensor_indexing() {
        let a = Vector::from_ints(&[0, 1]);
        let b = Vector::from_ints(&[2, 0, 3]);
        let t = a.tensor(&b);
        assert_eq!(t, Vector::from_ints(&[0, 0, 0, 2, 0, 3]));
        let parts = t.split_outer(3);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0, 1);
        assert_eq!(parts[0].1, b);
    }

    #[test]
    fn dot_and_pairs() {
        let a = Vector::from_pairs(4, [(3, Scalar::one()), (1, Scalar::from_i64(2)), (3, Scalar::one())]);
        assert_eq!(a, Vector::from_ints(&[0, 2, 0, 2]));
        assert_eq!(a.dot(&Vector::from_ints(&[9, 1, 9, 1])), Scalar::from_i64(4));
    }
}
