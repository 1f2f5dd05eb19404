use crate::exactlin::{map_right, quotient_by, Accumulator, Mat, QuotientSpace, Subspace, Vector};

/// An `A`-bimodule structure on `k^dim`: `left[a]` and `right[a]` are the actions of the base basis element `a`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub dim: usize,
    pub left: Vec<Mat>,
    pub right: Vec<Mat>,
}

impl Bimodule {
    pub fn base_dim(&self) -> usize {
        self.left.len()
    }

    fn combine(mats: &[Mat], a: &Vector, x: &Vector) -> Vector {
        let mut acc = Accumulator::new(x.dim());
        for (i, c) in a.iter() {
            acc.add_scaled(c, &mats[i].apply(x));
        }
        acc.finish()
    }

    /// `a · x`
    pub fn act_left(&self, a: &Vector, x: &Vector) -> Vector {
        Self::combine(&self.left, a, x)
    }

    /// `x · a`
    pub fn act_right(&self, x: &Vector, a: &Vector) -> Vector {
        Self::combine(&self.right, a, x)
    }
}

/// `M ⊗_A M` as a quotient of `M ⊗ M` by `(x·a) ⊗ y − x ⊗ (a·y)`.
#[derive(Clone, Debug)]
pub struct Balanced2 {
    n: usize,
    q: QuotientSpace,
    units: Vec<Vector>,
}

impl Balanced2 {
    pub fn new(bm: &Bimodule) -> Self {
        let n = bm.dim;
        let mut rels = Vec::with_capacity(n * n * bm.base_dim());
        for a in 0..bm.base_dim() {
            for c in 0..n {
                let xa = bm.right[a].col(c);
                for d in 0..n {
                    let r = xa.tensor(&Vector::unit(n, d)).sub(&Vector::unit(n, c).tensor(bm.left[a].col(d)));
                    if !r.is_zero() {
                        rels.push(r);
                    }
                }
            }
        }
        let q = quotient_by(n * n, Subspace::from_spanning(n * n, rels));
        let units = (0..n * n).map(|k| q.project(&Vector::unit(n * n, k))).collect();
        Balanced2 { n, q, units }
    }

    pub fn dim(&self) -> usize {
        self.q.dim()
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.q
    }

    /// Class of a representative in `M ⊗ M`.
    pub fn project(&self, v: &Vector) -> Vector {
        let mut acc = Accumulator::new(self.dim());
        for (k, c) in v.iter() {
            acc.add_scaled(c, &self.units[k]);
        }
        acc.finish()
    }

    pub fn lift(&self, c: &Vector) -> Vector {
        self.q.lift(c)
    }

    pub fn unit_class(&self, k: usize) -> &Vector {
        &self.units[k]
    }

    pub fn factor_dim(&self) -> usize {
        self.n
    }
}

/// `(M ⊗_A M) ⊗_A M` for possibly different bimodule structures on the two connectors.
#[derive(Clone, Debug)]
pub struct Balanced3 {
    first: Balanced2,
    q: QuotientSpace,
}

impl Balanced3 {
    /// `first` balances slots one and two, `second` balances slots two and three.
    pub fn new(first: &Bimodule, second: &Bimodule) -> Self {
        Self::over(Balanced2::new(first), second)
    }

    pub fn over(b2: Balanced2, second: &Bimodule) -> Self {
        let n = second.dim;
        let d2 = b2.dim();
        let mut rels = Vec::new();
        for a in 0..second.base_dim() {
            let acted: Vec<Vector> =
                (0..d2).map(|q| b2.project(&map_right(&second.right[a], &b2.lift(&Vector::unit(d2, q))))).collect();
            for (q, qa) in acted.iter().enumerate() {
                for d in 0..n {
                    let r = qa.tensor(&Vector::unit(n, d)).sub(&Vector::unit(d2, q).tensor(second.left[a].col(d)));
                    if !r.is_zero() {
                        rels.push(r);
                    }
                }
            }
        }
        let q = quotient_by(d2 * n, Subspace::from_spanning(d2 * n, rels));
        Balanced3 { first: b2, q }
    }

    pub fn dim(&self) -> usize {
        self.q.dim()
    }

    /// Class of a representative in `M ⊗ M ⊗ M` (flat index `(i·n + j)·n + k`).
    pub fn project(&self, v: &Vector) -> Vector {
        let n = self.first.factor_dim();
        let d2 = self.first.dim();
        let mut acc = Accumulator::new(d2 * n);
        for (idx, c) in v.iter() {
            let (ij, k) = (idx / n, idx % n);
            for (q, x) in self.first.unit_class(ij).iter() {
                acc.add(q * n + k, &(c * x));
            }
        }
        self.q.project(&acc.finish())
    }
}
