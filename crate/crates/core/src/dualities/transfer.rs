use super::handed::{
    check_right_module_coalgebra, check_right_partial_action, RightModuleCoalgebra, RightPartialAction,
};
use crate::coalgebra_partial::{
    check_partial_comodule_coalgebra, check_partial_module_coalgebra, PartialComoduleCoalgebra, PartialModuleCoalgebra,
};
use crate::error::{Error, Result};
use crate::exactlin::{inverse, solve, tidx, Accumulator, Mat, Vector};
use crate::partial_actions::{check_partial_action, PartialAction};
use crate::partial_coactions::{check_partial_coaction, PartialCoaction};
use crate::report::{scalar_vec, tuples, Report};
use crate::structures::{check_pairing, AlgebraSC, CoalgebraSC, HopfPackage, Pairing, PairingKind};

pub(crate) fn require_hopf_pairing(p: &Pairing, h: &HopfPackage, k: &HopfPackage) -> Result<()> {
    let r = check_pairing(p, PairingKind::Hopf(h, k), false)?;
    if r.passed() {
        Ok(())
    } else {
        Err(Error::PairingAxiomFailure(Box::new(r)))
    }
}

fn require_nondegenerate(p: &Pairing, left: usize, right: usize) -> Result<()> {
    if p.left_dim() != left || p.right_dim() != right {
        return Err(Error::DimensionMismatch(format!(
            "pairing is {}x{}, expected {left}x{right}",
            p.left_dim(),
            p.right_dim()
        )));
    }
    if p.is_nondegenerate() {
        Ok(())
    } else {
        Err(Error::DegeneratePairing)
    }
}

fn symmetric_note(r: &Report) -> String {
    r.notes.first().cloned().unwrap_or_default()
}

/// `h·a = a⁰⟨h, a¹⟩` for a symmetric right partial coaction of `K` and a Hopf pairing `⟨H, K⟩` (rows `H`).
pub fn action_from_coaction(pc: &PartialCoaction, pairing: &Pairing, h: &HopfPackage) -> Result<PartialAction> {
    require_hopf_pairing(pairing, h, &pc.k)?;
    let r = check_partial_coaction(pc)?;
    if !r.passed() {
        return Err(Error::CoactionAxiomFailure(Box::new(r)));
    }
    if r.get_flag("symmetric") != Some(true) {
        return Err(Error::NotSymmetric(symmetric_note(&r)));
    }
    let m = pc.a.dim();
    PartialAction::from_fn(h.clone(), pc.a.clone(), |hi, ai| {
        let mut acc = Accumulator::new(m);
        for (c, b, xi) in pc.terms(&pc.apply(&pc.a.e(ai))) {
            acc.add(b, &(&c * &pairing.basis_value(hi, xi)));
        }
        acc.finish()
    })
}

/// The unique `ρ` with `h·a = (I ⊗ ⟨h, −⟩)ρ(a)`, solved one coefficient column at a time.
pub fn coaction_from_action(pa: &PartialAction, pairing: &Pairing, k: &HopfPackage) -> Result<PartialCoaction> {
    require_nondegenerate(pairing, pa.h.dim(), k.dim())?;
    require_hopf_pairing(pairing, &pa.h, k)?;
    let r = check_partial_action(pa)?;
    if !r.passed() {
        return Err(Error::ActionAxiomFailure(Box::new(r)));
    }
    if r.get_flag("symmetric") != Some(true) {
        return Err(Error::NotSymmetric(symmetric_note(&r)));
    }
    let (m, nh, nk) = (pa.a.dim(), pa.h.dim(), k.dim());
    let mut cols = Vec::with_capacity(m);
    for a in 0..m {
        let mut acc = Accumulator::new(m * nk);
        for b in 0..m {
            let rhs = Vector::from_pairs(nh, (0..nh).map(|h| (h, pa.basis(h, a).get(b))));
            let x = solve(&pairing.form, &rhs).ok_or_else(|| {
                Error::NoSolution(format!("no coaction value at ({}, {})", pa.a.name(a), pa.a.name(b)))
            })?;
            for (xi, c) in x.iter() {
                acc.add(tidx(b, xi, nk), c);
            }
        }
        cols.push(acc.finish());
    }
    PartialCoaction::new(k.clone(), pa.a.clone(), Mat::from_columns(m * nk, cols))
}

/// Always true: on a finite-dimensional algebra every partial action is rational.
pub fn is_rational(_pa: &PartialAction) -> bool {
    true
}

fn is_algebra_map(f: &Mat, a: &AlgebraSC, b: &AlgebraSC) -> bool {
    if f.nrows() != b.dim() || f.ncols() != a.dim() {
        return false;
    }
    f.apply(a.unit()) == *b.unit()
        && tuples(&[a.dim(), a.dim()]).iter().all(|t| {
            let (x, y) = (a.e(t[0]), a.e(t[1]));
            f.apply(&a.mul(&x, &y)) == b.mul(&f.apply(&x), &f.apply(&y))
        })
}

/// An algebra map `f: A → B` with `ρ_B∘f = (f⊗I)∘ρ_A`.
pub fn is_coaction_morphism(f: &Mat, src: &PartialCoaction, dst: &PartialCoaction) -> bool {
    let nk = src.k.dim();
    is_algebra_map(f, &src.a, &dst.a)
        && src.k.same_structure(&dst.k)
        && (0..src.a.dim()).all(|x| {
            let e = src.a.e(x);
            dst.apply(&f.apply(&e)) == crate::exactlin::map_left(f, &src.apply(&e), nk)
        })
}

/// An algebra map `f: A → B` with `f(h·a) = h·f(a)`.
pub fn is_action_morphism(f: &Mat, src: &PartialAction, dst: &PartialAction) -> bool {
    is_algebra_map(f, &src.a, &dst.a)
        && src.h.same_structure(&dst.h)
        && tuples(&[src.h.dim(), src.a.dim()])
            .iter()
            .all(|t| f.apply(src.basis(t[0], t[1])) == dst.apply(&dst.h.e(t[0]), &f.apply(&src.a.e(t[1]))))
}

/// The convolution algebra `C*` in the basis dual to that of `C`, named `x*`.
pub fn dual_algebra(c: &CoalgebraSC) -> AlgebraSC {
    let n = c.dim();
    let names = c.names().iter().map(|s| format!("{s}*")).collect();
    AlgebraSC::from_products(
        n,
        |i, j| Vector::from_pairs(n, (0..n).map(|k| (k, c.delta(&c.e(k)).get(tidx(i, j, n))))),
        c.counit().clone(),
        Some(names),
    )
    .expect("convolution algebra of a coalgebra")
}

/// `(a·h, c) = (a, h·c)`: with `F` the form (rows `A`) and `M_h` the action of `h` on `C`,
/// the right action matrix of `h` is `(F M_h F⁻¹)ᵀ`.
pub fn module_algebra_from_module_coalgebra(
    pmc: &PartialModuleCoalgebra,
    a: &AlgebraSC,
    pairing: &Pairing,
) -> Result<RightPartialAction> {
    let (n, nh) = (pmc.c.dim(), pmc.h.dim());
    require_nondegenerate(pairing, a.dim(), n)?;
    let f = &pairing.form;
    let f_inv = inverse(f).ok_or(Error::DegeneratePairing)?;
    let per_h: Vec<Mat> = (0..nh)
        .map(|h| {
            let m_h = Mat::from_fn(n, n, |c| pmc.basis(h, c).clone());
            f.compose(&m_h).compose(&f_inv).transpose()
        })
        .collect();
    RightPartialAction::from_fn(pmc.h.clone(), a.clone(), |x, h| per_h[h].col(x).clone())
}

/// `(a, h·c) = (a·h, c)`: the action of `h` on `C` is `F⁻¹ R_hᵀ F`.
pub fn module_coalgebra_from_module_algebra(
    ra: &RightPartialAction,
    c: &CoalgebraSC,
    pairing: &Pairing,
) -> Result<PartialModuleCoalgebra> {
    let (n, nh) = (c.dim(), ra.h.dim());
    require_nondegenerate(pairing, ra.a.dim(), n)?;
    let f = &pairing.form;
    let f_inv = inverse(f).ok_or(Error::DegeneratePairing)?;
    let per_h: Vec<Mat> = (0..nh)
        .map(|h| {
            let r_h = Mat::from_fn(n, n, |x| ra.basis(x, h).clone());
            f_inv.compose(&r_h.transpose()).compose(f)
        })
        .collect();
    PartialModuleCoalgebra::from_fn(ra.h.clone(), c.clone(), |h, x| per_h[h].col(x).clone())
}

/// Checks `(a·h, c) = (a, h·c)` on all basis triples and that both sides reach the same verdicts.
pub fn module_coalgebra_vs_module_algebra(
    pmc: &PartialModuleCoalgebra,
    ra: &RightPartialAction,
    pairing: &Pairing,
) -> Result<Report> {
    require_nondegenerate(pairing, ra.a.dim(), pmc.c.dim())?;
    if !pmc.h.same_structure(&ra.h) {
        return Err(Error::DimensionMismatch("the two actions use different Hopf algebras".into()));
    }
    let (a, c, h) = (&ra.a, &pmc.c, &pmc.h);
    let mut r = Report::new("module coalgebra vs module algebra");
    let lab = |t: &[usize]| vec![a.name(t[0]), h.name(t[1]), c.name(t[2])];
    r.check("(a·h,c)=(a,h·c)", tuples(&[a.dim(), h.dim(), c.dim()]), lab, |t| {
        let lhs = pairing.value(ra.basis(t[0], t[1]), &c.e(t[2]));
        let rhs = pairing.value(&a.e(t[0]), pmc.basis(t[1], t[2]));
        (scalar_vec(lhs), scalar_vec(rhs))
    });
    let pairing_report = check_pairing(pairing, PairingKind::AlgCoalg(a, c), true)?;
    let left = check_partial_module_coalgebra(pmc)?;
    let right = check_right_partial_action(ra)?;
    let algebra_ok = a.check().passed();
    r.check_bool("PLHMC ⇔ right PLA", left.passed() == (algebra_ok && right.passed()), vec![], vec![]);
    r.check_bool("PLHMC3′ ⇔ right PLA3′", left.get_flag("symmetric") == right.get_flag("symmetric"), vec![], vec![]);
    r.check_bool("global ⇔ global", left.get_flag("global") == right.get_flag("global"), vec![], vec![]);
    r.flag("pairing laws", pairing_report.passed());
    r.flag("module coalgebra passes", left.passed());
    r.flag("module algebra passes", right.passed());
    r.flag("symmetric", right.get_flag("symmetric") == Some(true));
    r.flag("global", right.get_flag("global") == Some(true));
    r.notes.extend(left.notes);
    r.notes.extend(right.notes);
    Ok(r)
}

/// Checks `(a⁰, c)a¹ = c⁻¹(a, c⁰)` on all basis pairs and compares the two checkers' verdicts.
pub fn comodule_coalgebra_vs_comodule_algebra(
    pcc: &PartialComoduleCoalgebra,
    pc: &PartialCoaction,
    pairing: &Pairing,
) -> Result<Report> {
    require_nondegenerate(pairing, pc.a.dim(), pcc.c.dim())?;
    if !pcc.k.same_structure(&pc.k) {
        return Err(Error::DimensionMismatch("the two coactions use different Hopf algebras".into()));
    }
    let (a, c, nk) = (&pc.a, &pcc.c, pc.k.dim());
    let mut r = Report::new("comodule coalgebra vs comodule algebra");
    let lab = |t: &[usize]| vec![a.name(t[0]), c.name(t[1])];
    r.check("(a⁰,c)a¹=c⁻¹(a,c⁰)", tuples(&[a.dim(), c.dim()]), lab, |t| {
        let mut lhs = Accumulator::new(nk);
        for (s, b, xi) in pc.terms(&pc.apply(&a.e(t[0]))) {
            lhs.add(xi, &(&s * &pairing.basis_value(b, t[1])));
        }
        let mut rhs = Accumulator::new(nk);
        for (s, xi, d) in pcc.terms(t[1]) {
            rhs.add(xi, &(&s * &pairing.basis_value(t[0], d)));
        }
        (lhs.finish(), rhs.finish())
    });
    let algebra = check_partial_coaction(pc)?;
    let coalgebra = check_partial_comodule_coalgebra(pcc)?;
    r.check_bool("PRHCA ⇔ PLHCC", algebra.passed() == coalgebra.passed(), vec![], vec![]);
    r.check_bool("PRHCA4 ⇔ PLHCC3′", algebra.get_flag("symmetric") == coalgebra.get_flag("symmetric"), vec![], vec![]);
    r.check_bool("global ⇔ global", algebra.get_flag("global") == coalgebra.get_flag("global"), vec![], vec![]);
    r.flag("comodule algebra passes", algebra.passed());
    r.flag("comodule coalgebra passes", coalgebra.passed());
    r.flag("symmetric", coalgebra.get_flag("symmetric") == Some(true));
    r.flag("global", coalgebra.get_flag("global") == Some(true));
    r.notes.extend(algebra.notes);
    r.notes.extend(coalgebra.notes);
    Ok(r)
}

/// `c·h = ⟨h, c⁻¹⟩c⁰` for a Hopf pairing `⟨H, K⟩` (rows `H`).
pub fn module_coalgebra_from_comodule_coalgebra(
    pcc: &PartialComoduleCoalgebra,
    pairing: &Pairing,
    h: &HopfPackage,
) -> Result<RightModuleCoalgebra> {
    require_hopf_pairing(pairing, h, &pcc.k)?;
    let r = check_partial_comodule_coalgebra(pcc)?;
    if !r.passed() {
        return Err(Error::ComoduleCoalgebraFailure(Box::new(r)));
    }
    let n = pcc.c.dim();
    RightModuleCoalgebra::from_fn(h.clone(), pcc.c.clone(), |x, hi| {
        let mut acc = Accumulator::new(n);
        for (s, xi, d) in pcc.terms(x) {
            acc.add(d, &(&s * &pairing.basis_value(hi, xi)));
        }
        acc.finish()
    })
}

/// The unique `λ` with `c·h = ⟨h, c⁻¹⟩c⁰` under a non-degenerate pairing.
pub fn comodule_coalgebra_from_module_coalgebra(
    rmc: &RightModuleCoalgebra,
    pairing: &Pairing,
    k: &HopfPackage,
) -> Result<PartialComoduleCoalgebra> {
    require_nondegenerate(pairing, rmc.h.dim(), k.dim())?;
    require_hopf_pairing(pairing, &rmc.h, k)?;
    let r = check_right_module_coalgebra(rmc)?;
    if !r.passed() {
        return Err(Error::ActionAxiomFailure(Box::new(r)));
    }
    let (n, nh, nk) = (rmc.c.dim(), rmc.h.dim(), k.dim());
    let mut cols = Vec::with_capacity(n);
    for x in 0..n {
        let mut acc = Accumulator::new(nk * n);
        for d in 0..n {
            let rhs = Vector::from_pairs(nh, (0..nh).map(|h| (h, rmc.basis(x, h).get(d))));
            let sol = solve(&pairing.form, &rhs).ok_or_else(|| {
                Error::NoSolution(format!("no coaction value at ({}, {})", rmc.c.name(x), rmc.c.name(d)))
            })?;
            for (xi, s) in sol.iter() {
                acc.add(tidx(xi, d, n), s);
            }
        }
        cols.push(acc.finish());
    }
    PartialComoduleCoalgebra::new(k.clone(), rmc.c.clone(), Mat::from_columns(nk * n, cols))
}
