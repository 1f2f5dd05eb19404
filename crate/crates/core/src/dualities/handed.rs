use crate::coalgebra_partial::{check_partial_module_coalgebra, from_right_module_coalgebra, PartialModuleCoalgebra};
use crate::error::{Error, Result};
use crate::exactlin::{swap, tidx, Accumulator, Mat, Scalar, Vector};
use crate::partial_coactions::{check_partial_coaction, PartialCoaction};
use crate::report::{tuples, Report};
use crate::structures::{op_cop_transformers, AlgebraSC, CoalgebraSC, HopfPackage, OpCop};

/// A right partial action `a ⊗ h ↦ a·h`; column `tidx(a, h, dim H)` of `act` holds `e_a·e_h`.
#[derive(Clone, Debug)]
pub struct RightPartialAction {
    pub h: HopfPackage,
    pub a: AlgebraSC,
    pub act: Mat,
}

impl RightPartialAction {
    pub fn new(h: HopfPackage, a: AlgebraSC, act: Mat) -> Result<Self> {
        if act.nrows() != a.dim() || act.ncols() != a.dim() * h.dim() {
            return Err(Error::DimensionMismatch(format!(
                "right action is {}x{}, expected {}x{}",
                act.nrows(),
                act.ncols(),
                a.dim(),
                a.dim() * h.dim()
            )));
        }
        Ok(RightPartialAction { h, a, act })
    }

    pub fn from_fn(h: HopfPackage, a: AlgebraSC, f: impl Fn(usize, usize) -> Vector) -> Result<Self> {
        let n = h.dim();
        let act = Mat::from_fn(a.dim(), a.dim() * n, |k| f(k / n, k % n));
        Self::new(h, a, act)
    }

    /// `e_a · e_h`
    pub fn basis(&self, a: usize, h: usize) -> &Vector {
        self.act.col(tidx(a, h, self.h.dim()))
    }

    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        let mut acc = Accumulator::new(self.a.dim());
        for (i, c) in x.iter() {
            for (j, d) in y.iter() {
                acc.add_scaled(&(c * d), self.basis(i, j));
            }
        }
        acc.finish()
    }

    /// `1_A · e_h`
    pub fn unit_by(&self, h: usize) -> Vector {
        self.apply(self.a.unit(), &self.h.e(h))
    }

    pub fn is_global(&self) -> bool {
        (0..self.h.dim()).all(|h| self.unit_by(h) == self.a.unit().scale(&self.h.eps(&self.h.e(h))))
    }

    fn labels(&self, t: &[usize], kinds: &[bool]) -> Vec<String> {
        t.iter().zip(kinds).map(|(&i, &is_h)| if is_h { self.h.name(i) } else { self.a.name(i) }).collect()
    }
}

fn right_pla3(ra: &RightPartialAction, r: &mut Report, name: &str, symmetric: bool) {
    let (n, m) = (ra.h.dim(), ra.a.dim());
    let (h, a) = (&ra.h, &ra.a);
    r.check(
        name,
        tuples(&[m, n, n]),
        |t| ra.labels(t, &[false, true, true]),
        |t| {
            let lhs = ra.apply(ra.basis(t[0], t[1]), &h.e(t[2]));
            let mut acc = Accumulator::new(m);
            for (c, i, j) in h.delta_terms(t[2]) {
                let p = if symmetric {
                    let moved = ra.apply(&a.e(t[0]), &h.mul(&h.e(t[1]), &h.e(j)));
                    a.mul(&ra.unit_by(i), &moved)
                } else {
                    let moved = ra.apply(&a.e(t[0]), &h.mul(&h.e(t[1]), &h.e(i)));
                    a.mul(&moved, &ra.unit_by(j))
                };
                acc.add_scaled(&c, &p);
            }
            (lhs, acc.finish())
        },
    );
}

/// `a·1 = a`, `(ab)·h = (a·h₁)(b·h₂)` and `(a·h)·k = (a·hk₁)(1·k₂)`; the mirrored
/// `(a·h)·k = (1·k₁)(a·hk₂)` decides the `symmetric` flag.
pub fn check_right_partial_action(ra: &RightPartialAction) -> Result<Report> {
    let (n, m) = (ra.h.dim(), ra.a.dim());
    if ra.act.nrows() != m || ra.act.ncols() != m * n {
        return Err(Error::DimensionMismatch("right partial action shapes".into()));
    }
    let (h, a) = (&ra.h, &ra.a);
    let mut r = Report::new("right partial action");
    r.check("right PLA1", tuples(&[m]), |t| a.labels(t), |t| (ra.apply(&a.e(t[0]), h.one()), a.e(t[0])));
    r.check(
        "right PLA2",
        tuples(&[m, m, n]),
        |t| ra.labels(t, &[false, false, true]),
        |t| {
            let lhs = ra.apply(&a.mul(&a.e(t[0]), &a.e(t[1])), &h.e(t[2]));
            let mut acc = Accumulator::new(m);
            for (c, i, j) in h.delta_terms(t[2]) {
                acc.add_scaled(&c, &a.mul(ra.basis(t[0], i), ra.basis(t[1], j)));
            }
            (lhs, acc.finish())
        },
    );
    right_pla3(ra, &mut r, "right PLA3", false);
    let mut sym = Report::new("symmetry");
    right_pla3(ra, &mut sym, "right PLA3′", true);
    if let Some(w) = sym.axioms[0].witnesses.first() {
        r.note(format!("right PLA3′ fails at ({})", w.labels.join(",")));
    }
    r.flag("symmetric", sym.passed());
    r.flag("global", ra.is_global());
    Ok(r)
}

fn renamed(mut r: Report, object: &str, from: &str, to: &str) -> Report {
    r.object = object.to_string();
    for a in &mut r.axioms {
        a.name = a.name.replace(from, to);
    }
    for n in &mut r.notes {
        *n = n.replace(from, to);
    }
    r
}

/// A right partial module coalgebra `c ⊗ h ↦ c·h`; column `tidx(c, h, dim H)` holds `e_c·e_h`.
#[derive(Clone, Debug)]
pub struct RightModuleCoalgebra {
    pub h: HopfPackage,
    pub c: CoalgebraSC,
    pub act: Mat,
}

impl RightModuleCoalgebra {
    pub fn new(h: HopfPackage, c: CoalgebraSC, act: Mat) -> Result<Self> {
        if act.nrows() != c.dim() || act.ncols() != c.dim() * h.dim() {
            return Err(Error::DimensionMismatch("right module coalgebra shape".into()));
        }
        Ok(RightModuleCoalgebra { h, c, act })
    }

    pub fn from_fn(h: HopfPackage, c: CoalgebraSC, f: impl Fn(usize, usize) -> Vector) -> Result<Self> {
        let n = h.dim();
        let act = Mat::from_fn(c.dim(), c.dim() * n, |k| f(k / n, k % n));
        Self::new(h, c, act)
    }

    pub fn basis(&self, c: usize, h: usize) -> &Vector {
        self.act.col(tidx(c, h, self.h.dim()))
    }

    /// The same data as a left partial module coalgebra of `H^{op,cop}` on `C^cop`.
    pub fn as_left(&self) -> Result<PartialModuleCoalgebra> {
        from_right_module_coalgebra(&self.h, &self.c, &self.act)
    }
}

/// The module coalgebra axioms for a right action, checked on the mirrored left structure.
pub fn check_right_module_coalgebra(rmc: &RightModuleCoalgebra) -> Result<Report> {
    let r = check_partial_module_coalgebra(&rmc.as_left()?)?;
    Ok(renamed(r, "right partial module coalgebra", "PLHMC", "right PLHMC"))
}

/// A left partial coaction `λ: A → K ⊗ A` on an algebra; `lam` sends `e_a` to a vector indexed by `tidx(ξ, b, dim A)`.
#[derive(Clone, Debug)]
pub struct LeftPartialCoaction {
    pub k: HopfPackage,
    pub a: AlgebraSC,
    pub lam: Mat,
}

impl LeftPartialCoaction {
    pub fn new(k: HopfPackage, a: AlgebraSC, lam: Mat) -> Result<Self> {
        if lam.nrows() != k.dim() * a.dim() || lam.ncols() != a.dim() {
            return Err(Error::DimensionMismatch("left coaction shape".into()));
        }
        Ok(LeftPartialCoaction { k, a, lam })
    }

    pub fn from_fn(k: HopfPackage, a: AlgebraSC, f: impl Fn(usize) -> Vector) -> Result<Self> {
        let lam = Mat::from_fn(k.dim() * a.dim(), a.dim(), f);
        Self::new(k, a, lam)
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        self.lam.apply(x)
    }

    /// `(coefficient, ξ, b)` terms of `λ(e_i)`.
    pub fn terms(&self, i: usize) -> Vec<(Scalar, usize, usize)> {
        let m = self.a.dim();
        self.lam.col(i).iter().map(|(k, c)| (c.clone(), k / m, k % m)).collect()
    }

    /// `ρ(a) = a⁰ ⊗ a⁻¹` as a right partial coaction of `K^cop`.
    pub fn as_right(&self) -> Result<PartialCoaction> {
        let (nk, m) = (self.k.dim(), self.a.dim());
        PartialCoaction::from_fn(op_cop_transformers(&self.k, OpCop::Cop), self.a.clone(), |x| {
            swap(self.lam.col(x), nk, m)
        })
    }

    /// `λ(a) = a¹ ⊗ a⁰` as a left partial coaction of `K^cop`.
    pub fn from_right(pc: &PartialCoaction) -> Result<Self> {
        let (nk, m) = (pc.k.dim(), pc.a.dim());
        Self::from_fn(op_cop_transformers(&pc.k, OpCop::Cop), pc.a.clone(), |x| swap(pc.rho.col(x), m, nk))
    }

    pub fn is_global(&self) -> bool {
        self.apply(self.a.unit()) == self.k.one().tensor(self.a.unit())
    }
}

/// Left partial comodule algebra axioms, checked on the mirrored right coaction.
pub fn check_left_partial_coaction(lc: &LeftPartialCoaction) -> Result<Report> {
    let r = check_partial_coaction(&lc.as_right()?)?;
    Ok(renamed(r, "left partial coaction", "PRHCA", "PLHCA"))
}
