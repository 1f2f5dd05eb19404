//! Structure-constant algebras, coalgebras, bialgebras and Hopf algebras, their
//! canonical constructors, pairings, convolution and the partial-representation checker.

mod pairing;

use crate::error::{Error, Result};
use crate::exactlin::{map_left, map_right, solve, swap, tidx, Accumulator, Mat, Scalar, Vector};
use crate::groups_groupoids::FiniteGroup;
use crate::report::{scalar_vec, tuples, Report};

pub use pairing::{
    check_pairing, check_partial_representation, convolution, op_cop_transformers, OpCop, Pairing, PairingKind,
};

fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Finite-dimensional unital algebra; `mult` sends `e_i ⊗ e_j` to `e_i e_j`.
#[derive(Clone, Debug)]
pub struct AlgebraSC {
    dim: usize,
    mult: Mat,
    unit: Vector,
    names: Vec<String>,
}

impl AlgebraSC {
    pub fn new(mult: Mat, unit: Vector, names: Option<Vec<String>>) -> Result<Self> {
        let dim = unit.dim();
        if mult.nrows() != dim || mult.ncols() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "multiplication is {}x{}, expected {dim}x{}",
                mult.nrows(),
                mult.ncols(),
                dim * dim
            )));
        }
        let names = names.unwrap_or_else(|| default_names("e", dim));
        if names.len() != dim {
            return Err(Error::DimensionMismatch(format!("{} basis names for dimension {dim}", names.len())));
        }
        Ok(AlgebraSC { dim, mult, unit, names })
    }

    /// Builds an algebra from a basis product rule.
    pub fn from_products(
        dim: usize,
        f: impl Fn(usize, usize) -> Vector,
        unit: Vector,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        let mult = Mat::from_fn(dim, dim * dim, |k| f(k / dim, k % dim));
        Self::new(mult, unit, names)
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground() -> Self {
        Self::new(Mat::identity(1), Vector::unit(1, 0), Some(vec!["1".into()])).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &Mat {
        &self.mult
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> String {
        self.names[i].clone()
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim);
        self.names = names;
        self
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        self.mult.col(tidx(i, j, self.dim))
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let mut acc = Accumulator::new(self.dim);
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc.add_scaled(&(a * b), self.basis_product(i, j));
            }
        }
        acc.finish()
    }

    pub fn mul3(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.mul(&self.mul(x, y), z)
    }

    pub fn e(&self, i: usize) -> Vector {
        Vector::unit(self.dim, i)
    }

    /// `y ↦ x y`.
    pub fn left_mult(&self, x: &Vector) -> Mat {
        Mat::from_fn(self.dim, self.dim, |j| self.mul(x, &self.e(j)))
    }

    /// `y ↦ y x`.
    pub fn right_mult(&self, x: &Vector) -> Mat {
        Mat::from_fn(self.dim, self.dim, |j| self.mul(&self.e(j), x))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_central(&self, x: &Vector) -> bool {
        (0..self.dim).all(|j| self.mul(x, &self.e(j)) == self.mul(&self.e(j), x))
    }

    pub fn is_idempotent(&self, x: &Vector) -> bool {
        &self.mul(x, x) == x
    }

    /// Same multiplication and unit (basis names are ignored).
    pub fn same_structure(&self, other: &AlgebraSC) -> bool {
        self.mult == other.mult && self.unit == other.unit
    }

    pub fn labels(&self, t: &[usize]) -> Vec<String> {
        t.iter().map(|&i| self.name(i)).collect()
    }

    /// Associativity and both unit laws on all basis tuples.
    pub fn check(&self) -> Report {
        let mut r = Report::new("algebra");
        let n = self.dim;
        r.check(
            "associativity",
            tuples(&[n, n, n]),
            |t| self.labels(t),
            |t| {
                let (a, b, c) = (self.e(t[0]), self.e(t[1]), self.e(t[2]));
                (self.mul(&self.mul(&a, &b), &c), self.mul(&a, &self.mul(&b, &c)))
            },
        );
        r.check("left unit", tuples(&[n]), |t| self.labels(t), |t| (self.mul(&self.unit, &self.e(t[0])), self.e(t[0])));
        r.check(
            "right unit",
            tuples(&[n]),
            |t| self.labels(t),
            |t| (self.mul(&self.e(t[0]), &self.unit), self.e(t[0])),
        );
        r.flag("commutative", self.is_commutative());
        r.dim("algebra", n);
        r
    }

    /// `A ⊗ B` with the componentwise product.
    pub fn tensor(&self, other: &AlgebraSC) -> AlgebraSC {
        let (n, m) = (self.dim, other.dim);
        let names = (0..n * m).map(|k| format!("{}⊗{}", self.names[k / m], other.names[k % m])).collect();
        AlgebraSC::from_products(
            n * m,
            |x, y| self.basis_product(x / m, y / m).tensor(other.basis_product(x % m, y % m)),
            self.unit.tensor(&other.unit),
            Some(names),
        )
        .unwrap()
    }

    /// Product of two elements of `A ⊗ B` written in tensor coordinates.
    pub fn tensor_mul(&self, other: &AlgebraSC, x: &Vector, y: &Vector) -> Vector {
        let m = other.dim;
        let mut acc = Accumulator::new(self.dim * m);
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let c = a * b;
                let l = self.basis_product(i / m, j / m);
                let rr = other.basis_product(i % m, j % m);
                for (p, u) in l.iter() {
                    for (q, v) in rr.iter() {
                        acc.add(p * m + q, &(&c * &(u * v)));
                    }
                }
            }
        }
        acc.finish()
    }

    pub fn opposite(&self) -> AlgebraSC {
        let n = self.dim;
        AlgebraSC::from_products(
            n,
            |i, j| self.basis_product(j, i).clone(),
            self.unit.clone(),
            Some(self.names.clone()),
        )
        .unwrap()
    }

    /// The subalgebra (or unital ideal) carried by `sub`, with unit `unit`,
    /// in the canonical coordinates of `sub`.
    pub fn restrict(
        &self,
        sub: &crate::exactlin::Subspace,
        unit: &Vector,
        names: Option<Vec<String>>,
    ) -> Result<AlgebraSC> {
        let d = sub.dim();
        let b = sub.basis();
        let mut cols = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let p = self.mul(&b[i], &b[j]);
                cols.push(
                    sub.coords(&p).ok_or_else(|| {
                        Error::DimensionMismatch("subspace is not closed under multiplication".into())
                    })?,
                );
            }
        }
        let u = sub.coords(unit).ok_or_else(|| Error::DimensionMismatch("unit outside the subspace".into()))?;
        AlgebraSC::new(Mat::from_columns(d, cols), u, names)
    }
}

/// Finite-dimensional counital coalgebra; `comult` sends `e_i` to `Δ(e_i)` in tensor coordinates.
#[derive(Clone, Debug)]
pub struct CoalgebraSC {
    dim: usize,
    comult: Mat,
    counit: Vector,
    names: Vec<String>,
}

impl CoalgebraSC {
    pub fn new(comult: Mat, counit: Vector, names: Option<Vec<String>>) -> Result<Self> {
        let dim = counit.dim();
        if comult.ncols() != dim || comult.nrows() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication is {}x{}, expected {}x{dim}",
                comult.nrows(),
                comult.ncols(),
                dim * dim
            )));
        }
        let names = names.unwrap_or_else(|| default_names("c", dim));
        if names.len() != dim {
            return Err(Error::DimensionMismatch(format!("{} basis names for dimension {dim}", names.len())));
        }
        Ok(CoalgebraSC { dim, comult, counit, names })
    }

    /// Coalgebra with the given basis of grouplike elements.
    pub fn grouplike(names: Vec<String>) -> Self {
        let n = names.len();
        let comult = Mat::from_fn(n * n, n, |i| Vector::unit(n * n, tidx(i, i, n)));
        CoalgebraSC::new(comult, Vector::from_dense(&vec![Scalar::one(); n]), Some(names)).unwrap()
    }

    pub fn ground() -> Self {
        Self::grouplike(vec!["1".into()])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn comult(&self) -> &Mat {
        &self.comult
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> String {
        self.names[i].clone()
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim);
        self.names = names;
        self
    }

    pub fn labels(&self, t: &[usize]) -> Vec<String> {
        t.iter().map(|&i| self.name(i)).collect()
    }

    pub fn e(&self, i: usize) -> Vector {
        Vector::unit(self.dim, i)
    }

    pub fn delta(&self, x: &Vector) -> Vector {
        self.comult.apply(x)
    }

    pub fn eps(&self, x: &Vector) -> Scalar {
        self.counit.dot(x)
    }

    /// Counit as a map to the one-dimensional space.
    pub fn counit_mat(&self) -> Mat {
        Mat::from_fn(1, self.dim, |j| scalar_vec(self.counit.get(j)))
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim).all(|i| {
            let d = self.comult.col(i);
            &swap(d, self.dim, self.dim) == d
        })
    }

    pub fn same_structure(&self, other: &CoalgebraSC) -> bool {
        self.comult == other.comult && self.counit == other.counit
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new("coalgebra");
        let n = self.dim;
        r.check(
            "coassociativity",
            tuples(&[n]),
            |t| self.labels(t),
            |t| {
                let d = self.delta(&self.e(t[0]));
                (map_left(&self.comult, &d, n), map_right(&self.comult, &d))
            },
        );
        let eps = self.counit_mat();
        r.check(
            "left counit",
            tuples(&[n]),
            |t| self.labels(t),
            |t| (map_left(&eps, &self.delta(&self.e(t[0])), n), self.e(t[0])),
        );
        r.check(
            "right counit",
            tuples(&[n]),
            |t| self.labels(t),
            |t| (map_right(&eps, &self.delta(&self.e(t[0]))), self.e(t[0])),
        );
        r.flag("cocommutative", self.is_cocommutative());
        r.dim("coalgebra", n);
        r
    }

    pub fn co_opposite(&self) -> CoalgebraSC {
        let n = self.dim;
        let comult = Mat::from_fn(n * n, n, |i| swap(self.comult.col(i), n, n));
        CoalgebraSC::new(comult, self.counit.clone(), Some(self.names.clone())).unwrap()
    }

    /// `C ⊗ D` with `Δ(c ⊗ d) = c₁ ⊗ d₁ ⊗ c₂ ⊗ d₂`.
    pub fn tensor(&self, other: &CoalgebraSC) -> CoalgebraSC {
        let (n, m) = (self.dim, other.dim);
        let nm = n * m;
        let comult = Mat::from_fn(nm * nm, nm, |k| {
            let (a, b) = (self.comult.col(k / m), other.comult.col(k % m));
            Vector::from_pairs(
                nm * nm,
                a.iter().flat_map(|(i, x)| {
                    b.iter().map(move |(j, y)| {
                        let (c1, c2, d1, d2) = (i / n, i % n, j / m, j % m);
                        (tidx(c1 * m + d1, c2 * m + d2, nm), x * y)
                    })
                }),
            )
        });
        let names = (0..nm).map(|k| format!("{}⊗{}", self.names[k / m], other.names[k % m])).collect();
        CoalgebraSC::new(comult, self.counit.tensor(&other.counit), Some(names)).unwrap()
    }
}

/// Algebra and coalgebra on one space, with an optional antipode.
#[derive(Clone, Debug)]
pub struct HopfPackage {
    pub algebra: AlgebraSC,
    pub coalgebra: CoalgebraSC,
    pub antipode: Option<Mat>,
}

/// How much of a package to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

impl HopfPackage {
    pub fn new(algebra: AlgebraSC, coalgebra: CoalgebraSC, antipode: Option<Mat>) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra dimension {} vs coalgebra dimension {}",
                algebra.dim(),
                coalgebra.dim()
            )));
        }
        if let Some(s) = &antipode {
            if s.nrows() != algebra.dim() || s.ncols() != algebra.dim() {
                return Err(Error::DimensionMismatch("antipode shape".into()));
            }
        }
        Ok(HopfPackage { algebra, coalgebra, antipode })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn name(&self, i: usize) -> String {
        self.algebra.name(i)
    }

    pub fn labels(&self, t: &[usize]) -> Vec<String> {
        self.algebra.labels(t)
    }

    pub fn e(&self, i: usize) -> Vector {
        self.algebra.e(i)
    }

    pub fn one(&self) -> &Vector {
        self.algebra.unit()
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.algebra.mul(x, y)
    }

    pub fn delta(&self, x: &Vector) -> Vector {
        self.coalgebra.delta(x)
    }

    pub fn eps(&self, x: &Vector) -> Scalar {
        self.coalgebra.eps(x)
    }

    pub fn antipode(&self) -> &Mat {
        self.antipode.as_ref().expect("package has no antipode")
    }

    pub fn s(&self, x: &Vector) -> Vector {
        self.antipode().apply(x)
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.is_cocommutative()
    }

    /// `Δ(e_i)` as a list of `(coefficient, left index, right index)`.
    pub fn delta_terms(&self, i: usize) -> Vec<(Scalar, usize, usize)> {
        let n = self.dim();
        self.coalgebra.comult().col(i).iter().map(|(k, c)| (c.clone(), k / n, k % n)).collect()
    }

    /// Same structure maps (basis names ignored).
    pub fn same_structure(&self, other: &HopfPackage) -> bool {
        self.algebra.same_structure(&other.algebra)
            && self.coalgebra.same_structure(&other.coalgebra)
            && self.antipode == other.antipode
    }

    pub fn trivial() -> Self {
        group_algebra(&FiniteGroup::trivial())
    }
}

/// Verifies a package up to the requested level.
pub fn check_package(p: &HopfPackage, level: Level) -> Result<Report> {
    if p.algebra.dim() != p.coalgebra.dim() {
        return Err(Error::DimensionMismatch("algebra and coalgebra dimensions differ".into()));
    }
    let n = p.dim();
    let mut r = Report::new("package");
    if matches!(level, Level::Algebra | Level::Bialgebra | Level::Hopf) {
        r.absorb("", p.algebra.check());
    }
    if matches!(level, Level::Coalgebra | Level::Bialgebra | Level::Hopf) {
        r.absorb("", p.coalgebra.check());
    }
    if matches!(level, Level::Bialgebra | Level::Hopf) {
        let a = &p.algebra;
        r.check(
            "Δ(xy)=Δ(x)Δ(y)",
            tuples(&[n, n]),
            |t| p.labels(t),
            |t| {
                let (x, y) = (p.e(t[0]), p.e(t[1]));
                (p.delta(&p.mul(&x, &y)), a.tensor_mul(a, &p.delta(&x), &p.delta(&y)))
            },
        );
        r.check("Δ(1)=1⊗1", vec![vec![]], |_| vec![], |_| (p.delta(p.one()), p.one().tensor(p.one())));
        r.check(
            "ε(xy)=ε(x)ε(y)",
            tuples(&[n, n]),
            |t| p.labels(t),
            |t| {
                let (x, y) = (p.e(t[0]), p.e(t[1]));
                (scalar_vec(p.eps(&p.mul(&x, &y))), scalar_vec(&p.eps(&x) * &p.eps(&y)))
            },
        );
        r.check("ε(1)=1", vec![vec![]], |_| vec![], |_| (scalar_vec(p.eps(p.one())), scalar_vec(Scalar::one())));
    }
    if level == Level::Hopf {
        match &p.antipode {
            None => r.check_bool("antipode present", false, vec![], vec![]),
            Some(s) => {
                let id = Mat::identity(n);
                let unit_counit = Mat::from_fn(n, n, |j| p.one().scale(&p.coalgebra.counit().get(j)));
                let left = convolution(s, &id, &p.coalgebra, &p.algebra)?;
                let right = convolution(&id, s, &p.coalgebra, &p.algebra)?;
                r.check(
                    "S*id=ηε",
                    tuples(&[n]),
                    |t| p.labels(t),
                    |t| (left.col(t[0]).clone(), unit_counit.col(t[0]).clone()),
                );
                r.check(
                    "id*S=ηε",
                    tuples(&[n]),
                    |t| p.labels(t),
                    |t| (right.col(t[0]).clone(), unit_counit.col(t[0]).clone()),
                );
            }
        }
    }
    Ok(r)
}

/// Solves the convolution equations `S*id = ηε = id*S` for the antipode.
pub fn solve_antipode(p: &HopfPackage) -> Option<Mat> {
    let n = p.dim();
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for x in 0..n {
        let terms = p.delta_terms(x);
        for side in 0..2 {
            let mut eqs: Vec<Accumulator> = (0..n).map(|_| Accumulator::new(n * n)).collect();
            for (c, j, k) in &terms {
                for i in 0..n {
                    let prod = if side == 0 { p.algebra.basis_product(i, *k) } else { p.algebra.basis_product(*j, i) };
                    let var = if side == 0 { tidx(i, *j, n) } else { tidx(i, *k, n) };
                    for (m, v) in prod.iter() {
                        eqs[m].add(var, &(c * v));
                    }
                }
            }
            let target = p.one().scale(&p.coalgebra.counit().get(x));
            for (m, e) in eqs.into_iter().enumerate() {
                rows.push(e.finish());
                rhs.push(target.get(m));
            }
        }
    }
    let sys = Mat::from_rows(n * n, &rows);
    let sol = solve(&sys, &Vector::from_dense(&rhs))?;
    Some(Mat::from_fn(n, n, |j| Vector::from_pairs(n, (0..n).map(|i| (i, sol.get(tidx(i, j, n)))))))
}

fn delta_name(g: &FiniteGroup, u: usize) -> String {
    format!("δ_{}", g.name(u))
}

/// The group algebra `kG` with basis `δ_u`.
pub fn group_algebra(g: &FiniteGroup) -> HopfPackage {
    let n = g.order();
    let names: Vec<String> = (0..n).map(|u| delta_name(g, u)).collect();
    let algebra = AlgebraSC::from_products(
        n,
        |u, v| Vector::unit(n, g.mul(u, v)),
        Vector::unit(n, g.unit()),
        Some(names.clone()),
    )
    .unwrap();
    let coalgebra = CoalgebraSC::grouplike(names);
    let antipode = Mat::from_fn(n, n, |u| Vector::unit(n, g.inv(u)));
    HopfPackage::new(algebra, coalgebra, Some(antipode)).unwrap()
}

/// The dual `(kG)*` with basis of point functions `p_u`.
pub fn dual_group_hopf(g: &FiniteGroup) -> HopfPackage {
    let n = g.order();
    let names: Vec<String> = (0..n).map(|u| format!("p_{}", g.name(u))).collect();
    let unit = Vector::from_dense(&vec![Scalar::one(); n]);
    let algebra = AlgebraSC::from_products(
        n,
        |u, v| if u == v { Vector::unit(n, u) } else { Vector::zeros(n) },
        unit,
        Some(names.clone()),
    )
    .unwrap();
    let comult = Mat::from_fn(n * n, n, |u| {
        Vector::from_pairs(n * n, (0..n).map(|v| (tidx(v, g.mul(g.inv(v), u), n), Scalar::one())))
    });
    let coalgebra = CoalgebraSC::new(comult, Vector::unit(n, g.unit()), Some(names)).unwrap();
    let antipode = Mat::from_fn(n, n, |u| Vector::unit(n, g.inv(u)));
    HopfPackage::new(algebra, coalgebra, Some(antipode)).unwrap()
}

/// `Fun(X)` for `|X| = n`, basis of characteristic functions `χ1..χn`.
pub fn function_algebra(n: usize) -> AlgebraSC {
    let names = (1..=n).map(|x| format!("χ{x}")).collect();
    AlgebraSC::from_products(
        n,
        |x, y| if x == y { Vector::unit(n, x) } else { Vector::zeros(n) },
        Vector::from_dense(&vec![Scalar::one(); n]),
        Some(names),
    )
    .unwrap()
}

/// The matrix algebra `M_n(k)` with basis of matrix units `E_ij` at index `i·n + j`.
pub fn matrix_algebra(n: usize) -> AlgebraSC {
    let d = n * n;
    let names = (0..d).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
    let unit = Vector::from_pairs(d, (0..n).map(|i| (i * n + i, Scalar::one())));
    AlgebraSC::from_products(
        d,
        |x, y| if x % n == y / n { Vector::unit(d, (x / n) * n + y % n) } else { Vector::zeros(d) },
        unit,
        Some(names),
    )
    .unwrap()
}
