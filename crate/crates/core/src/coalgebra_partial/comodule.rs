use super::{coterms, left_defect};
use crate::error::{Error, Result};
use crate::exactlin::{map_left, map_right, quotient_by, swap, tidx, Accumulator, Mat, Scalar, Subspace, Vector};
use crate::groups_groupoids::{check_set_partial_action, SetPartialAction};
use crate::report::{scalar_vec, tuples, Report};
use crate::structures::{convolution, dual_group_hopf, CoalgebraSC, HopfPackage};

/// A left partial coaction `λ(c) = c⁻¹ ⊗ c⁰` on a coalgebra; `lam` sends `e_c` into `K ⊗ C` (index `tidx(ξ, c, dim C)`).
#[derive(Clone, Debug)]
pub struct PartialComoduleCoalgebra {
    pub k: HopfPackage,
    pub c: CoalgebraSC,
    pub lam: Mat,
}

impl PartialComoduleCoalgebra {
    pub fn new(k: HopfPackage, c: CoalgebraSC, lam: Mat) -> Result<Self> {
        if lam.ncols() != c.dim() || lam.nrows() != k.dim() * c.dim() {
            return Err(Error::DimensionMismatch(format!(
                "coaction is {}x{}, expected {}x{}",
                lam.nrows(),
                lam.ncols(),
                k.dim() * c.dim(),
                c.dim()
            )));
        }
        Ok(PartialComoduleCoalgebra { k, c, lam })
    }

    pub fn from_fn(k: HopfPackage, c: CoalgebraSC, f: impl Fn(usize) -> Vector) -> Result<Self> {
        let lam = Mat::from_fn(k.dim() * c.dim(), c.dim(), f);
        Self::new(k, c, lam)
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        self.lam.apply(x)
    }

    /// Raw `(coefficient, ξ, c)` terms of `λ(e_i)`.
    pub fn terms(&self, i: usize) -> Vec<(Scalar, usize, usize)> {
        let n = self.c.dim();
        self.lam.col(i).iter().map(|(k, x)| (x.clone(), k / n, k % n)).collect()
    }
}

/// `ψ(c) = c⁻¹ε(c⁰)` as a map `C → K`.
pub fn psi_map(pcc: &PartialComoduleCoalgebra) -> Mat {
    let eps = pcc.c.counit_mat();
    Mat::from_fn(pcc.k.dim(), pcc.c.dim(), |x| map_right(&eps, pcc.lam.col(x)))
}

fn plhcc3_sides(pcc: &PartialComoduleCoalgebra, psi: &Mat, x: usize, symmetric: bool) -> (Vector, Vector) {
    let (k, c) = (&pcc.k, &pcc.c);
    let (nk, n) = (k.dim(), c.dim());
    let lhs = map_right(&pcc.lam, pcc.lam.col(x));
    let mut acc = Accumulator::new(nk * nk * n);
    for (coef, c1, c2) in coterms(c, x) {
        let term = if symmetric {
            map_left(&k.algebra.right_mult(psi.col(c2)), &map_left(k.coalgebra.comult(), pcc.lam.col(c1), n), nk * n)
        } else {
            map_left(&k.algebra.left_mult(psi.col(c1)), &map_left(k.coalgebra.comult(), pcc.lam.col(c2), n), nk * n)
        };
        acc.add_scaled(&coef, &term);
    }
    (lhs, acc.finish())
}

/// The coalgebra axioms of `C`, PLHCC1–PLHCC3, the two counit identities for `λ` and `ψ*ψ = ψ`;
/// PLHCC3′ decides `symmetric` and `ψ = ηε` decides `global`.
pub fn check_partial_comodule_coalgebra(pcc: &PartialComoduleCoalgebra) -> Result<Report> {
    let (k, c) = (&pcc.k, &pcc.c);
    let (nk, n) = (k.dim(), c.dim());
    if pcc.lam.nrows() != nk * n || pcc.lam.ncols() != n || k.algebra.dim() != k.coalgebra.dim() {
        return Err(Error::DimensionMismatch("partial comodule coalgebra shapes".into()));
    }
    let psi = psi_map(pcc);
    let cl = |t: &[usize]| c.labels(t);
    let mut r = Report::new("partial comodule coalgebra");
    r.absorb("coalgebra", c.check());
    r.check("PLHCC1", tuples(&[n]), cl, |t| {
        let lhs = map_right(c.comult(), pcc.lam.col(t[0]));
        let mut acc = Accumulator::new(nk * n * n);
        for (coef, c1, c2) in coterms(c, t[0]) {
            for (a, xi, y) in pcc.terms(c1) {
                for (b, zeta, z) in pcc.terms(c2) {
                    let s = &coef * &(&a * &b);
                    acc.add_scaled(&s, &k.mul(&k.e(xi), &k.e(zeta)).tensor(&c.e(y)).tensor(&c.e(z)));
                }
            }
        }
        (lhs, acc.finish())
    });
    let eps_k = k.coalgebra.counit_mat();
    r.check("PLHCC2", tuples(&[n]), cl, |t| (map_left(&eps_k, pcc.lam.col(t[0]), n), c.e(t[0])));
    r.check("PLHCC3", tuples(&[n]), cl, |t| plhcc3_sides(pcc, &psi, t[0], false));
    r.check("c₁⁻¹ε(c₁⁰)c₂⁻¹⊗c₂⁰=λ(c)", tuples(&[n]), cl, |t| {
        let mut acc = Accumulator::new(nk * n);
        for (coef, c1, c2) in coterms(c, t[0]) {
            acc.add_scaled(&coef, &map_left(&k.algebra.left_mult(psi.col(c1)), pcc.lam.col(c2), n));
        }
        (acc.finish(), pcc.lam.col(t[0]).clone())
    });
    r.check("c₁⁻¹c₂⁻¹ε(c₂⁰)⊗c₁⁰=λ(c)", tuples(&[n]), cl, |t| {
        let mut acc = Accumulator::new(nk * n);
        for (coef, c1, c2) in coterms(c, t[0]) {
            acc.add_scaled(&coef, &map_left(&k.algebra.right_mult(psi.col(c2)), pcc.lam.col(c1), n));
        }
        (acc.finish(), pcc.lam.col(t[0]).clone())
    });
    let conv = convolution(&psi, &psi, c, &k.algebra)?;
    r.check("ψ*ψ=ψ", tuples(&[n]), cl, |t| (conv.col(t[0]).clone(), psi.col(t[0]).clone()));
    let mut sym = Report::new("symmetry");
    sym.check("PLHCC3′", tuples(&[n]), cl, |t| plhcc3_sides(pcc, &psi, t[0], true));
    if let Some(w) = sym.axioms[0].witnesses.first() {
        r.note(format!("PLHCC3′ fails at ({})", w.labels.join(",")));
    }
    r.flag("symmetric", sym.passed());
    let global = (0..n).all(|x| *psi.col(x) == k.one().scale(&c.eps(&c.e(x))));
    r.flag("global", global);
    Ok(r)
}

fn require_comodule_coalgebra(pcc: &PartialComoduleCoalgebra) -> Result<Report> {
    let r = check_partial_comodule_coalgebra(pcc)?;
    if r.passed() {
        Ok(r)
    } else {
        Err(Error::ComoduleCoalgebraFailure(Box::new(r)))
    }
}

/// `C = D/I` with `λ(d̄) = d₂⁽⁻¹⁾ ⊗ ε_C(d̄₁) d̄₂⁽⁰⁾`, for a global comodule coalgebra `D` and a subspace `I`
/// along which the comultiplication descends.
pub fn quotient_comodule_coalgebra(
    global: &PartialComoduleCoalgebra,
    i: &Subspace,
) -> Result<PartialComoduleCoalgebra> {
    let r = require_comodule_coalgebra(global)?;
    if r.get_flag("global") != Some(true) {
        return Err(Error::NotGlobal);
    }
    let (k, d) = (&global.k, &global.c);
    let (nk, n) = (k.dim(), d.dim());
    if i.ambient_dim() != n {
        return Err(Error::DimensionMismatch("the subspace does not live in D".into()));
    }
    let q = quotient_by(n, i.clone());
    let m = q.dim();
    let (pr, sec) = (q.projection(), q.section());
    let pp = |v: &Vector| map_left(&pr, &map_right(&pr, v), m);
    for b in i.basis() {
        if !pp(&d.delta(b)).is_zero() {
            return Err(Error::NotACoideal(format!(
                "Δ(I) ⊄ I⊗D+D⊗I at {}",
                crate::report::combination_label(b, |j| d.name(j))
            )));
        }
    }
    let comult = Mat::from_fn(m * m, m, |x| pp(&d.delta(sec.col(x))));
    let counit = Vector::from_dense(&(0..m).map(|x| d.eps(sec.col(x))).collect::<Vec<_>>());
    let names = q.free_indices().iter().map(|&f| format!("[{}]", d.name(f))).collect();
    let quotient = CoalgebraSC::new(comult, counit, Some(names))?;
    if m > 0 && i.basis().iter().any(|b| !d.eps(b).is_zero()) {
        return Err(Error::QuotientNotCoalgebra("the counit does not vanish on I".into()));
    }
    let qc = quotient.check();
    if !qc.passed() {
        return Err(Error::QuotientNotCoalgebra(format!("{} fails", qc.failed_axioms().join(", "))));
    }
    let lift_lam = |v: &Vector| -> Vector {
        let mut acc = Accumulator::new(nk * m);
        for (j, a) in v.iter() {
            for (coef, d1, d2) in coterms(d, j) {
                let e1 = quotient.eps(&pr.apply(&d.e(d1)));
                if e1.is_zero() {
                    continue;
                }
                acc.add_scaled(&(&(a * &coef) * &e1), &map_right(&pr, global.lam.col(d2)));
            }
        }
        acc.finish()
    };
    for b in i.basis() {
        if !lift_lam(b).is_zero() {
            return Err(Error::WellDefinednessFailure("λ does not vanish on I".into()));
        }
    }
    let out = PartialComoduleCoalgebra::from_fn(k.clone(), quotient.clone(), |x| lift_lam(sec.col(x)))?;
    require_comodule_coalgebra(&out)?;
    Ok(out)
}

/// The partial cosmash coproduct inside `C⊗K` (index `tidx(c, ξ, dim K)`).
#[derive(Clone, Debug)]
pub struct CosmashCoproduct {
    pub pcc: PartialComoduleCoalgebra,
    pub psi: Mat,
    /// `c⊗ξ ↦ c>◂ξ = c₁ ⊗ ψ(c₂)ξ`
    pub under: Mat,
    pub carrier: Subspace,
    /// `c⊗ξ ↦ c₁>◂c₂⁻¹ξ₁ ⊗ c₂⁰>◂ξ₂`
    pub comult: Mat,
    /// `ε_C ⊗ ε_K`
    pub counit: Vector,
    pub symmetric: bool,
}

impl CosmashCoproduct {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// The carrier as a coalgebra in its canonical basis.
    pub fn coalgebra(&self) -> Result<CoalgebraSC> {
        let c = CoalgebraSC::new(self.comult.clone(), self.counit.clone(), None)?;
        let names =
            self.carrier.basis().iter().map(|b| crate::report::combination_label(b, |i| self.name(i))).collect();
        super::subcoalgebra(&c, &self.carrier).map(|s| s.with_names(names))
    }

    /// Name of the ambient basis vector `c⊗ξ`.
    pub fn name(&self, i: usize) -> String {
        let nk = self.pcc.k.dim();
        format!("{}>◂{}", self.pcc.c.name(i / nk), self.pcc.k.name(i % nk))
    }
}

/// Builds the carrier, comultiplication and counit of `C>◂K`.
pub fn cosmash(pcc: &PartialComoduleCoalgebra) -> Result<CosmashCoproduct> {
    let r = require_comodule_coalgebra(pcc)?;
    let (k, c) = (&pcc.k, &pcc.c);
    let (nk, n) = (k.dim(), c.dim());
    let big = n * nk;
    let psi = psi_map(pcc);
    let under = Mat::from_fn(big, big, |idx| {
        let (x, xi) = (idx / nk, idx % nk);
        let mut acc = Accumulator::new(big);
        for (coef, c1, c2) in coterms(c, x) {
            acc.add_scaled(&coef, &c.e(c1).tensor(&k.mul(psi.col(c2), &k.e(xi))));
        }
        acc.finish()
    });
    let comult = Mat::from_fn(big * big, big, |idx| {
        let (x, xi) = (idx / nk, idx % nk);
        let mut acc = Accumulator::new(big * big);
        for (coef, c1, c2) in coterms(c, x) {
            for (a, zeta, y) in pcc.terms(c2) {
                for (b, x1, x2) in k.delta_terms(xi) {
                    let left = under.apply(&c.e(c1).tensor(&k.mul(&k.e(zeta), &k.e(x1))));
                    let right = under.col(tidx(y, x2, nk));
                    acc.add_scaled(&(&coef * &(&a * &b)), &left.tensor(right));
                }
            }
        }
        acc.finish()
    });
    let counit = c.counit().tensor(k.coalgebra.counit());
    let carrier = Subspace::from_spanning(big, under.columns().iter().cloned());
    Ok(CosmashCoproduct {
        pcc: pcc.clone(),
        psi,
        under,
        carrier,
        comult,
        counit,
        symmetric: r.get_flag("symmetric") == Some(true),
    })
}

/// Well-definedness on the carrier, coassociativity and the counit laws.
pub fn check_cosmash(cs: &CosmashCoproduct) -> Result<Report> {
    let (nk, n) = (cs.pcc.k.dim(), cs.pcc.c.dim());
    let big = n * nk;
    if cs.under.nrows() != big || cs.comult.nrows() != big * big || cs.counit.dim() != big {
        return Err(Error::DimensionMismatch("cosmash shapes".into()));
    }
    let basis = cs.carrier.basis();
    let d = basis.len();
    let raw = |t: &[usize]| vec![cs.pcc.c.name(t[0]), cs.pcc.k.name(t[1])];
    let bl = |t: &[usize]| vec![crate::report::combination_label(&basis[t[0]], |i| cs.name(i))];
    let eps = Mat::from_fn(1, big, |j| scalar_vec(cs.counit.get(j)));
    let mut r = Report::new("partial cosmash coproduct");
    r.check("c>◂ξ redundancy", tuples(&[n, nk]), raw, |t| {
        let u = cs.under.col(tidx(t[0], t[1], nk));
        (cs.under.apply(u), u.clone())
    });
    r.check("Δ̂ well-defined", tuples(&[n, nk]), raw, |t| {
        let idx = tidx(t[0], t[1], nk);
        (cs.comult.apply(cs.under.col(idx)), cs.comult.col(idx).clone())
    });
    r.check("Δ̂ lands in carrier⊗carrier", tuples(&[d]), bl, |t| {
        let v = cs.comult.apply(&basis[t[0]]);
        let first = left_defect(&v, &cs.carrier);
        let second = left_defect(&swap(&v, big, big), &cs.carrier);
        (first.tensor(&Vector::unit(2, 0)).add(&second.tensor(&Vector::unit(2, 1))), Vector::zeros(2 * big * big))
    });
    r.check("(Δ̂⊗I)∘Δ̂=(I⊗Δ̂)∘Δ̂", tuples(&[d]), bl, |t| {
        let v = cs.comult.apply(&basis[t[0]]);
        (map_left(&cs.comult, &v, big), map_right(&cs.comult, &v))
    });
    r.check("(ε̂⊗I)∘Δ̂=I", tuples(&[d]), bl, |t| {
        (map_left(&eps, &cs.comult.apply(&basis[t[0]]), big), basis[t[0]].clone())
    });
    r.check("(I⊗ε̂)∘Δ̂=I", tuples(&[d]), bl, |t| {
        (map_right(&eps, &cs.comult.apply(&basis[t[0]])), basis[t[0]].clone())
    });
    r.dim("carrier", d);
    r.flag("symmetric", cs.symmetric);
    Ok(r)
}

/// `λ(x) = Σ_{g : x ∈ X_g} p_g ⊗ α_{g⁻¹}(x)` on the grouplike coalgebra spanned by `X`.
pub fn comodule_coalgebra_from_set(spa: &SetPartialAction) -> Result<PartialComoduleCoalgebra> {
    let r = check_set_partial_action(spa)?;
    if !r.passed() {
        return Err(Error::ActionAxiomFailure(Box::new(r)));
    }
    let (k, n) = (spa.g.order(), spa.n);
    let c = CoalgebraSC::grouplike((0..n).map(|x| format!("x{}", SetPartialAction::point_name(x))).collect());
    PartialComoduleCoalgebra::from_fn(dual_group_hopf(&spa.g), c, |x| {
        Vector::from_pairs(
            k * n,
            (0..k).filter_map(|a| spa.alpha(spa.g.inv(a), x).map(|y| (tidx(a, y, n), Scalar::one()))),
        )
    })
}
