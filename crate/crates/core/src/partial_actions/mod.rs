//! Partial module algebras, the partial smash product and its Hopf algebroid.

use crate::error::{Error, Result};
use crate::exactlin::{tidx, Accumulator, Mat, Subspace, Vector};
use crate::hopf_algebroid::HopfAlgebroid;
use crate::report::{combination_label, tuples, Report};
use crate::structures::{AlgebraSC, HopfPackage};

/// A left partial action `h ⊗ a ↦ h·a`; `act` sends `e_h ⊗ e_a` (index `h·dim A + a`) to `h·a`.
#[derive(Clone, Debug)]
pub struct PartialAction {
    pub h: HopfPackage,
    pub a: AlgebraSC,
    pub act: Mat,
}

impl PartialAction {
    pub fn new(h: HopfPackage, a: AlgebraSC, act: Mat) -> Result<Self> {
        if act.nrows() != a.dim() || act.ncols() != h.dim() * a.dim() {
            return Err(Error::DimensionMismatch(format!(
                "action is {}x{}, expected {}x{}",
                act.nrows(),
                act.ncols(),
                a.dim(),
                h.dim() * a.dim()
            )));
        }
        Ok(PartialAction { h, a, act })
    }

    /// Builds the action matrix from its values on basis pairs.
    pub fn from_fn(h: HopfPackage, a: AlgebraSC, f: impl Fn(usize, usize) -> Vector) -> Result<Self> {
        let m = a.dim();
        let act = Mat::from_fn(m, h.dim() * m, |k| f(k / m, k % m));
        Self::new(h, a, act)
    }

    /// `e_i · e_j`
    pub fn basis(&self, i: usize, j: usize) -> &Vector {
        self.act.col(tidx(i, j, self.a.dim()))
    }

    /// `x · y` for general elements.
    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        let mut acc = Accumulator::new(self.a.dim());
        for (i, c) in x.iter() {
            for (j, d) in y.iter() {
                acc.add_scaled(&(c * d), self.basis(i, j));
            }
        }
        acc.finish()
    }

    /// `e_i · 1_A`
    pub fn on_unit(&self, i: usize) -> Vector {
        self.apply(&self.h.e(i), self.a.unit())
    }

    fn labels(&self, t: &[usize], kinds: &[bool]) -> Vec<String> {
        t.iter().zip(kinds).map(|(&i, &is_h)| if is_h { self.h.name(i) } else { self.a.name(i) }).collect()
    }
}

fn pla3_variant(pa: &PartialAction, r: &mut Report, name: &str, symmetric: bool) {
    let (n, m) = (pa.h.dim(), pa.a.dim());
    let (h, a) = (&pa.h, &pa.a);
    r.check(
        name,
        tuples(&[n, n, m]),
        |t| pa.labels(t, &[true, true, false]),
        |t| {
            let lhs = pa.apply(&h.e(t[0]), pa.basis(t[1], t[2]));
            let mut acc = Accumulator::new(m);
            for (c, i, j) in h.delta_terms(t[0]) {
                let moved = pa.apply(&h.mul(&h.e(j), &h.e(t[1])), &a.e(t[2]));
                let p = if symmetric {
                    let moved = pa.apply(&h.mul(&h.e(i), &h.e(t[1])), &a.e(t[2]));
                    a.mul(&moved, &pa.on_unit(j))
                } else {
                    a.mul(&pa.on_unit(i), &moved)
                };
                acc.add_scaled(&c, &p);
            }
            (lhs, acc.finish())
        },
    );
}

/// PLA1–PLA3 on all basis tuples; PLA3′ decides the `symmetric` flag.
pub fn check_partial_action(pa: &PartialAction) -> Result<Report> {
    let (n, m) = (pa.h.dim(), pa.a.dim());
    if pa.act.nrows() != m || pa.act.ncols() != n * m || pa.h.algebra.dim() != pa.h.coalgebra.dim() {
        return Err(Error::DimensionMismatch("partial action shapes".into()));
    }
    let (h, a) = (&pa.h, &pa.a);
    let mut r = Report::new("partial action");
    r.check("PLA1", tuples(&[m]), |t| a.labels(t), |t| (pa.apply(h.one(), &a.e(t[0])), a.e(t[0])));
    r.check(
        "PLA2",
        tuples(&[n, m, m]),
        |t| pa.labels(t, &[true, false, false]),
        |t| {
            let lhs = pa.apply(&h.e(t[0]), &a.mul(&a.e(t[1]), &a.e(t[2])));
            let mut acc = Accumulator::new(m);
            for (c, i, j) in h.delta_terms(t[0]) {
                acc.add_scaled(&c, &a.mul(pa.basis(i, t[1]), pa.basis(j, t[2])));
            }
            (lhs, acc.finish())
        },
    );
    pla3_variant(pa, &mut r, "PLA3", false);
    let mut sym = Report::new("symmetry");
    pla3_variant(pa, &mut sym, "PLA3′", true);
    let symmetric = sym.passed();
    if let Some(w) = sym.axioms[0].witnesses.first() {
        r.note(format!("PLA3′ fails at ({})", w.labels.join(",")));
    }
    r.flag("symmetric", symmetric);
    r.flag("global", is_global(pa));
    Ok(r)
}

/// `h·1_A = ε(h)1_A` for every basis `h`.
pub fn is_global(pa: &PartialAction) -> bool {
    (0..pa.h.dim()).all(|i| pa.on_unit(i) == pa.a.unit().scale(&pa.h.eps(&pa.h.e(i))))
}

fn require_passing(pa: &PartialAction) -> Result<Report> {
    let r = check_partial_action(pa)?;
    if r.passed() {
        Ok(r)
    } else {
        Err(Error::ActionAxiomFailure(Box::new(r)))
    }
}

/// Checks that `e` is a central idempotent.
pub(crate) fn require_central_idempotent(a: &AlgebraSC, e: &Vector) -> Result<()> {
    if !a.is_idempotent(e) {
        return Err(Error::NotIdempotent(combination_label(e, |i| a.name(i))));
    }
    if !a.is_central(e) {
        return Err(Error::NotCentral(combination_label(e, |i| a.name(i))));
    }
    Ok(())
}

/// The unital ideal `eA` in canonical coordinates together with its carrier.
pub(crate) fn ideal_of(a: &AlgebraSC, e: &Vector) -> Result<(Subspace, AlgebraSC)> {
    let sub = Subspace::from_spanning(a.dim(), (0..a.dim()).map(|j| a.mul(e, &a.e(j))));
    let names = sub.basis().iter().map(|b| combination_label(b, |i| a.name(i))).collect();
    let alg = a.restrict(&sub, e, Some(names))?;
    Ok((sub, alg))
}

/// `h·a = e(h▷a)` on the ideal `eA` of a global module algebra.
pub fn induced_partial_action(global: &PartialAction, e: &Vector) -> Result<PartialAction> {
    require_central_idempotent(&global.a, e)?;
    if !is_global(global) {
        return Err(Error::NotGlobal);
    }
    let (sub, alg) = ideal_of(&global.a, e)?;
    let b = &global.a;
    PartialAction::from_fn(global.h.clone(), alg, |i, j| {
        let v = b.mul(e, &global.apply(&global.h.e(i), &sub.basis()[j]));
        sub.coords(&v).expect("e·B is the carrier")
    })
}

/// The partial smash product as the image of `a ⊗ h ↦ a(h₍₁₎·1_A) ⊗ h₍₂₎`.
#[derive(Clone, Debug)]
pub struct SmashProduct {
    pub carrier: Subspace,
    pub algebra: AlgebraSC,
    dim_a: usize,
    dim_h: usize,
}

impl SmashProduct {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `a # h` in `A ⊗ H`.
    pub fn hash(&self, pa: &PartialAction, a: &Vector, h: usize) -> Vector {
        let (m, n) = (self.dim_a, self.dim_h);
        let mut acc = Accumulator::new(m * n);
        for (c, i, j) in pa.h.delta_terms(h) {
            let left = pa.a.mul(a, &pa.on_unit(i));
            acc.add_scaled(&c, &left.tensor(&Vector::unit(n, j)));
        }
        acc.finish()
    }

    /// The idempotent projection of `A ⊗ H` onto the carrier.
    pub fn pi(&self, pa: &PartialAction, v: &Vector) -> Vector {
        let n = self.dim_h;
        let mut acc = Accumulator::new(v.dim());
        for (k, c) in v.iter() {
            acc.add_scaled(c, &self.hash(pa, &pa.a.e(k / n), k % n));
        }
        acc.finish()
    }

    pub fn coords(&self, v: &Vector) -> Vector {
        self.carrier.coords(v).expect("element of the smash carrier")
    }

    pub fn embed(&self, c: &Vector) -> Vector {
        self.carrier.embed(c)
    }

    /// Raw `A ⊗ H` terms `(coefficient, a index, h index)` of a carrier basis vector.
    pub fn raw_terms(&self, i: usize) -> Vec<(crate::exactlin::Scalar, usize, usize)> {
        let n = self.dim_h;
        self.carrier.basis()[i].iter().map(|(k, c)| (c.clone(), k / n, k % n)).collect()
    }
}

/// Builds `A # H`; refuses actions that fail PLA1–PLA3.
pub fn smash_product(pa: &PartialAction) -> Result<SmashProduct> {
    require_passing(pa)?;
    let (m, n) = (pa.a.dim(), pa.h.dim());
    let proto = SmashProduct { carrier: Subspace::zero(m * n), algebra: AlgebraSC::ground(), dim_a: m, dim_h: n };
    let carrier = Subspace::from_spanning(m * n, (0..m * n).map(|k| proto.hash(pa, &pa.a.e(k / n), k % n)));
    let names: Vec<String> = carrier
        .basis()
        .iter()
        .map(|b| combination_label(b, |k| format!("{}#{}", pa.a.name(k / n), pa.h.name(k % n))))
        .collect();
    let basis = carrier.basis().to_vec();
    let mut cols = Vec::with_capacity(basis.len() * basis.len());
    for x in &basis {
        for y in &basis {
            let p = raw_product(pa, x, y);
            cols.push(carrier.coords(&p).ok_or_else(|| Error::DimensionMismatch("smash carrier not closed".into()))?);
        }
    }
    let unit = carrier
        .coords(&proto.hash(pa, pa.a.unit(), unit_index(&pa.h)))
        .ok_or_else(|| Error::DimensionMismatch("1#1 outside the carrier".into()))?;
    let algebra = AlgebraSC::new(Mat::from_columns(basis.len(), cols), unit, Some(names))?;
    Ok(SmashProduct { carrier, algebra, dim_a: m, dim_h: n })
}

/// `(a ⊗ h)(b ⊗ k) = a(h₍₁₎·b) ⊗ h₍₂₎k` extended bilinearly.
fn raw_product(pa: &PartialAction, x: &Vector, y: &Vector) -> Vector {
    let (m, n) = (pa.a.dim(), pa.h.dim());
    let h = &pa.h;
    let mut acc = Accumulator::new(m * n);
    for (p, c) in x.iter() {
        let (a, hh) = (p / n, p % n);
        for (q, d) in y.iter() {
            let (b, k) = (q / n, q % n);
            let cd = c * d;
            for (e, i, j) in h.delta_terms(hh) {
                let left = pa.a.mul(&pa.a.e(a), pa.basis(i, b));
                let right = h.mul(&h.e(j), &h.e(k));
                acc.add_scaled(&(&cd * &e), &left.tensor(&right));
            }
        }
    }
    acc.finish()
}

fn unit_index(h: &HopfPackage) -> usize {
    let one = h.one();
    match one.entries() {
        [(i, c)] if c.is_one() => *i,
        _ => panic!("the unit of H must be a basis vector"),
    }
}

/// `1_A#1_H`-normalized check that the unit of `H` is a basis vector.
fn unit_is_basis(h: &HopfPackage) -> bool {
    matches!(h.one().entries(), [(_, c)] if c.is_one())
}

/// The Hopf algebroid structure on `A # H` over `A`.
pub fn smash_hopf_algebroid(pa: &PartialAction) -> Result<HopfAlgebroid> {
    let r = require_passing(pa)?;
    if !pa.a.is_commutative() {
        return Err(Error::PreconditionFailure("base algebra not commutative".into()));
    }
    if !pa.h.is_cocommutative() {
        return Err(Error::PreconditionFailure("H not cocommutative".into()));
    }
    if r.get_flag("symmetric") != Some(true) {
        return Err(Error::PreconditionFailure("partial action not symmetric".into()));
    }
    if !unit_is_basis(&pa.h) {
        return Err(Error::PreconditionFailure("unit of H is not a basis vector".into()));
    }
    let sp = smash_product(pa)?;
    let (m, d) = (pa.a.dim(), sp.dim());
    let h = &pa.h;
    let one_h = unit_index(h);
    let source = Mat::from_fn(d, m, |a| sp.coords(&sp.hash(pa, &pa.a.e(a), one_h)));
    let mut delta = Vec::with_capacity(d);
    let mut eps_l = Vec::with_capacity(d);
    let mut eps_r = Vec::with_capacity(d);
    let mut antipode = Vec::with_capacity(d);
    for x in 0..d {
        let mut dl = Accumulator::new(d * d);
        let mut el = Accumulator::new(m);
        let mut er = Accumulator::new(m);
        let mut sx = Accumulator::new(d);
        for (c, a, hh) in sp.raw_terms(x) {
            let ea = pa.a.e(a);
            for (e, i, j) in h.delta_terms(hh) {
                let left = sp.coords(&sp.hash(pa, &ea, i));
                let right = sp.coords(&sp.hash(pa, pa.a.unit(), j));
                dl.add_scaled(&(&c * &e), &left.tensor(&right));
                let moved = pa.apply(&h.s(&h.e(j)), &ea);
                let mut raw = Accumulator::new(m * h.dim());
                raw.add_scaled(&e, &moved.tensor(&h.s(&h.e(i))));
                sx.add_scaled(&c, &sp.coords(&sp.pi(pa, &raw.finish())));
            }
            el.add_scaled(&c, &pa.a.mul(&ea, &pa.on_unit(hh)));
            er.add_scaled(&c, &pa.apply(&h.s(&h.e(hh)), &ea));
        }
        delta.push(dl.finish());
        eps_l.push(el.finish());
        eps_r.push(er.finish());
        antipode.push(sx.finish());
    }
    let delta = Mat::from_columns(d * d, delta);
    Ok(HopfAlgebroid {
        total: sp.algebra.clone(),
        base: pa.a.clone(),
        s_l: source.clone(),
        t_l: source.clone(),
        s_r: source.clone(),
        t_r: source,
        delta_l: delta.clone(),
        eps_l: Mat::from_columns(m, eps_l),
        delta_r: delta,
        eps_r: Mat::from_columns(m, eps_r),
        antipode: Mat::from_columns(d, antipode),
    })
}

#[cfg(test)]
mod tests;
