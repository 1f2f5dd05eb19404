//! Partial module coalgebras, partial group actions on coalgebras, the C-ring
//! `H⊗̲C`, partial comodule coalgebras and the partial cosmash coproduct.

mod comodule;
mod cring;

pub use comodule::{
    check_cosmash, check_partial_comodule_coalgebra, comodule_coalgebra_from_set, cosmash, psi_map,
    quotient_comodule_coalgebra, CosmashCoproduct, PartialComoduleCoalgebra,
};
pub use cring::{check_cring, cring, CRing};

use crate::error::{Error, Result};
use crate::exactlin::{image, map_left, map_right, swap, tidx, Accumulator, Mat, Scalar, Subspace, Vector};
use crate::groups_groupoids::{check_set_partial_action, FiniteGroup, SetPartialAction};
use crate::report::{combination_label, scalar_vec, tuples, Report};
use crate::structures::{group_algebra, op_cop_transformers, CoalgebraSC, HopfPackage, OpCop};

/// A left partial action `h ⊗ c ↦ h·c` on a coalgebra; column `tidx(h, c, dim C)` of `act` is `h·c`.
#[derive(Clone, Debug)]
pub struct PartialModuleCoalgebra {
    pub h: HopfPackage,
    pub c: CoalgebraSC,
    pub act: Mat,
}

impl PartialModuleCoalgebra {
    pub fn new(h: HopfPackage, c: CoalgebraSC, act: Mat) -> Result<Self> {
        if act.nrows() != c.dim() || act.ncols() != h.dim() * c.dim() {
            return Err(Error::DimensionMismatch(format!(
                "action is {}x{}, expected {}x{}",
                act.nrows(),
                act.ncols(),
                c.dim(),
                h.dim() * c.dim()
            )));
        }
        Ok(PartialModuleCoalgebra { h, c, act })
    }

    pub fn from_fn(h: HopfPackage, c: CoalgebraSC, f: impl Fn(usize, usize) -> Vector) -> Result<Self> {
        let n = c.dim();
        let act = Mat::from_fn(n, h.dim() * n, |k| f(k / n, k % n));
        Self::new(h, c, act)
    }

    /// `e_i · e_j`
    pub fn basis(&self, i: usize, j: usize) -> &Vector {
        self.act.col(tidx(i, j, self.c.dim()))
    }

    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        let mut acc = Accumulator::new(self.c.dim());
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc.add_scaled(&(a * b), self.basis(i, j));
            }
        }
        acc.finish()
    }

    /// `ε(e_i · e_j)`
    pub fn eps_act(&self, i: usize, j: usize) -> Scalar {
        self.c.eps(self.basis(i, j))
    }

    fn labels(&self, t: &[usize], kinds: &[bool]) -> Vec<String> {
        t.iter().zip(kinds).map(|(&i, &is_h)| if is_h { self.h.name(i) } else { self.c.name(i) }).collect()
    }
}

/// Terms `(coefficient, c₁, c₂)` of `Δ(e_i)`.
pub(crate) fn coterms(c: &CoalgebraSC, i: usize) -> Vec<(Scalar, usize, usize)> {
    let n = c.dim();
    c.comult().col(i).iter().map(|(k, x)| (x.clone(), k / n, k % n)).collect()
}

/// Sum of `e_outer ⊗ (inner mod sub)`: zero iff `v ∈ k^outer ⊗ sub`.
pub(crate) fn left_defect(v: &Vector, sub: &Subspace) -> Vector {
    let inner = sub.ambient_dim();
    let mut acc = Accumulator::new(v.dim());
    for (i, w) in v.split_outer(inner) {
        for (j, x) in sub.reduce(&w).iter() {
            acc.add(tidx(i, j, inner), x);
        }
    }
    acc.finish()
}

/// Terms `(coefficient, h₁, h₂, c₁, c₂)` of `Δ(h) ⊗ Δ(c)` on basis elements.
fn double_terms(h: &HopfPackage, c: &CoalgebraSC, hi: usize, ci: usize) -> Vec<(Scalar, usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for (a, h1, h2) in h.delta_terms(hi) {
        for (b, c1, c2) in coterms(c, ci) {
            out.push((&a * &b, h1, h2, c1, c2));
        }
    }
    out
}

fn plhmc3_variant(pmc: &PartialModuleCoalgebra, r: &mut Report, name: &str, symmetric: bool) {
    let (n, m) = (pmc.h.dim(), pmc.c.dim());
    let h = &pmc.h;
    r.check(
        name,
        tuples(&[n, n, m]),
        |t| pmc.labels(t, &[true, true, false]),
        |t| {
            let lhs = pmc.apply(&h.e(t[0]), pmc.basis(t[1], t[2]));
            let mut acc = Accumulator::new(m);
            for (coef, k1, k2, c1, c2) in double_terms(h, &pmc.c, t[1], t[2]) {
                let (moved, scal) = if symmetric {
                    (pmc.apply(&h.mul(&h.e(t[0]), &h.e(k2)), &pmc.c.e(c2)), pmc.eps_act(k1, c1))
                } else {
                    (pmc.apply(&h.mul(&h.e(t[0]), &h.e(k1)), &pmc.c.e(c1)), pmc.eps_act(k2, c2))
                };
                acc.add_scaled(&(&coef * &scal), &moved);
            }
            (lhs, acc.finish())
        },
    );
}

/// The coalgebra axioms of `C`, PLHMC1–PLHMC3 and the derived counit identities; PLHMC3′ decides `symmetric`.
pub fn check_partial_module_coalgebra(pmc: &PartialModuleCoalgebra) -> Result<Report> {
    let (n, m) = (pmc.h.dim(), pmc.c.dim());
    if pmc.act.nrows() != m || pmc.act.ncols() != n * m || pmc.h.algebra.dim() != pmc.h.coalgebra.dim() {
        return Err(Error::DimensionMismatch("partial module coalgebra shapes".into()));
    }
    let (h, c) = (&pmc.h, &pmc.c);
    let mut r = Report::new("partial module coalgebra");
    r.absorb("coalgebra", c.check());
    let hc = |t: &[usize]| pmc.labels(t, &[true, false]);
    r.check("PLHMC1", tuples(&[n, m]), hc, |t| {
        let lhs = c.delta(pmc.basis(t[0], t[1]));
        let mut acc = Accumulator::new(m * m);
        for (coef, h1, h2, c1, c2) in double_terms(h, c, t[0], t[1]) {
            acc.add_scaled(&coef, &pmc.basis(h1, c1).tensor(pmc.basis(h2, c2)));
        }
        (lhs, acc.finish())
    });
    r.check("PLHMC2", tuples(&[m]), |t| c.labels(t), |t| (pmc.apply(h.one(), &c.e(t[0])), c.e(t[0])));
    plhmc3_variant(pmc, &mut r, "PLHMC3", false);
    r.check("h·c=ε(h₁·c₁)(h₂·c₂)", tuples(&[n, m]), hc, |t| {
        let mut acc = Accumulator::new(m);
        for (coef, h1, h2, c1, c2) in double_terms(h, c, t[0], t[1]) {
            acc.add_scaled(&(&coef * &pmc.eps_act(h1, c1)), pmc.basis(h2, c2));
        }
        (pmc.basis(t[0], t[1]).clone(), acc.finish())
    });
    r.check("h·c=(h₁·c₁)ε(h₂·c₂)", tuples(&[n, m]), hc, |t| {
        let mut acc = Accumulator::new(m);
        for (coef, h1, h2, c1, c2) in double_terms(h, c, t[0], t[1]) {
            acc.add_scaled(&(&coef * &pmc.eps_act(h2, c2)), pmc.basis(h1, c1));
        }
        (pmc.basis(t[0], t[1]).clone(), acc.finish())
    });
    r.check("ε(h·c)=ε(h₁·c₁)ε(h₂·c₂)", tuples(&[n, m]), hc, |t| {
        let mut s = Scalar::zero();
        for (coef, h1, h2, c1, c2) in double_terms(h, c, t[0], t[1]) {
            s = s + &coef * &(&pmc.eps_act(h1, c1) * &pmc.eps_act(h2, c2));
        }
        (scalar_vec(pmc.eps_act(t[0], t[1])), scalar_vec(s))
    });
    let mut sym = Report::new("symmetry");
    plhmc3_variant(pmc, &mut sym, "PLHMC3′", true);
    if let Some(w) = sym.axioms[0].witnesses.first() {
        r.note(format!("PLHMC3′ fails at ({})", w.labels.join(",")));
    }
    r.flag("symmetric", sym.passed());
    r.flag("global", is_global_module_coalgebra(pmc));
    Ok(r)
}

/// `ε(h·c) = ε(h)ε(c)` on all basis pairs.
pub fn is_global_module_coalgebra(pmc: &PartialModuleCoalgebra) -> bool {
    let (h, c) = (&pmc.h, &pmc.c);
    tuples(&[h.dim(), c.dim()]).iter().all(|t| pmc.eps_act(t[0], t[1]) == &h.eps(&h.e(t[0])) * &c.eps(&c.e(t[1])))
}

fn require_module_coalgebra(pmc: &PartialModuleCoalgebra) -> Result<Report> {
    let r = check_partial_module_coalgebra(pmc)?;
    if r.passed() {
        Ok(r)
    } else {
        Err(Error::ActionAxiomFailure(Box::new(r)))
    }
}

/// `P² = P`, `Δ∘P = (P⊗P)∘Δ` and `P(x) = x₁ε(P(x₂)) = ε(P(x₁))x₂` for `P: C → C`.
pub fn check_coalgebra_projection(p: &Mat, c: &CoalgebraSC) -> Report {
    let n = c.dim();
    let mut r = Report::new("coalgebra projection");
    if p.nrows() != n || p.ncols() != n {
        r.check_bool("P: C→C", false, vec![], vec![]);
        return r;
    }
    let cl = |t: &[usize]| c.labels(t);
    let eps_p = c.counit_mat().compose(p);
    r.check("P²=P", tuples(&[n]), cl, |t| (p.apply(p.col(t[0])), p.col(t[0]).clone()));
    r.check("Δ∘P=(P⊗P)∘Δ", tuples(&[n]), cl, |t| {
        (c.delta(p.col(t[0])), map_left(p, &map_right(p, &c.delta(&c.e(t[0]))), n))
    });
    r.check("P(x)=x₁ε(P(x₂))", tuples(&[n]), cl, |t| {
        (p.col(t[0]).clone(), map_right(&eps_p, &c.delta(&c.e(t[0]))))
    });
    r.check("P(x)=ε(P(x₁))x₂", tuples(&[n]), cl, |t| {
        (p.col(t[0]).clone(), map_left(&eps_p, &c.delta(&c.e(t[0])), n))
    });
    r.dim("image", p.rank());
    r
}

/// A partial action of `G` on a coalgebra. `p[g]` projects onto `C_g`; `theta[g]` is `θ_g∘P_{g⁻¹}`,
/// so it agrees with `θ_g` on `C_{g⁻¹}` and vanishes on `ker P_{g⁻¹}`.
#[derive(Clone, Debug)]
pub struct CoalgebraGroupAction {
    pub g: FiniteGroup,
    pub c: CoalgebraSC,
    pub p: Vec<Mat>,
    pub theta: Vec<Mat>,
}

impl CoalgebraGroupAction {
    /// Composes each supplied `θ_g` with `P_{g⁻¹}`, so only its values on `C_{g⁻¹}` matter.
    pub fn new(g: FiniteGroup, c: CoalgebraSC, p: Vec<Mat>, theta: Vec<Mat>) -> Result<Self> {
        let (k, n) = (g.order(), c.dim());
        if p.len() != k || theta.len() != k {
            return Err(Error::MalformedTable(format!("expected {k} projections and {k} isomorphisms")));
        }
        if p.iter().chain(&theta).any(|m| m.nrows() != n || m.ncols() != n) {
            return Err(Error::DimensionMismatch(format!("projections and isomorphisms must be {n}x{n}")));
        }
        let theta = (0..k).map(|a| theta[a].compose(&p[g.inv(a)])).collect();
        Ok(CoalgebraGroupAction { g, c, p, theta })
    }

    /// All `P_g = θ_g = id`.
    pub fn global_trivial(g: FiniteGroup, c: CoalgebraSC) -> Self {
        let k = g.order();
        let id = Mat::identity(c.dim());
        CoalgebraGroupAction { g, c, p: vec![id.clone(); k], theta: vec![id; k] }
    }

    pub fn is_global(&self) -> bool {
        let id = Mat::identity(self.c.dim());
        self.p.iter().all(|m| *m == id)
    }
}

/// Items (i)–(iii) of a partial group action on a coalgebra, over all `(g, h)` and basis vectors.
pub fn check_group_action_on_coalgebra(cga: &CoalgebraGroupAction) -> Result<Report> {
    let (g, c) = (&cga.g, &cga.c);
    let (k, n) = (g.order(), c.dim());
    if cga.p.len() != k || cga.theta.len() != k {
        return Err(Error::MalformedTable(format!("expected {k} projections and {k} isomorphisms")));
    }
    let (p, th) = (&cga.p, &cga.theta);
    let mut r = Report::new("partial group action on a coalgebra");
    r.absorb("coalgebra", c.check());
    let gx = |t: &[usize]| vec![g.name(t[0]).to_string(), c.name(t[1])];
    let ghx = |t: &[usize]| vec![g.name(t[0]).to_string(), g.name(t[1]).to_string(), c.name(t[2])];
    let eps_p: Vec<Mat> = p.iter().map(|m| c.counit_mat().compose(m)).collect();
    r.check("(i) P_g²=P_g", tuples(&[k, n]), gx, |t| (p[t[0]].apply(p[t[0]].col(t[1])), p[t[0]].col(t[1]).clone()));
    r.check("(i) Δ∘P_g=(P_g⊗P_g)∘Δ", tuples(&[k, n]), gx, |t| {
        let pg = &p[t[0]];
        (c.delta(pg.col(t[1])), map_left(pg, &map_right(pg, &c.delta(&c.e(t[1]))), n))
    });
    r.check("(i) P_g(x)=x₁ε(P_g(x₂))", tuples(&[k, n]), gx, |t| {
        (p[t[0]].col(t[1]).clone(), map_right(&eps_p[t[0]], &c.delta(&c.e(t[1]))))
    });
    r.check("(i) P_g(x)=ε(P_g(x₁))x₂", tuples(&[k, n]), gx, |t| {
        (p[t[0]].col(t[1]).clone(), map_left(&eps_p[t[0]], &c.delta(&c.e(t[1])), n))
    });
    r.check("θ_g counit", tuples(&[k, n]), gx, |t| {
        let x = p[g.inv(t[0])].col(t[1]);
        (scalar_vec(c.eps(&th[t[0]].apply(x))), scalar_vec(c.eps(x)))
    });
    r.check("θ_g comultiplicative", tuples(&[k, n]), gx, |t| {
        let tg = &th[t[0]];
        (c.delta(tg.col(t[1])), map_left(tg, &map_right(tg, &c.delta(&c.e(t[1]))), n))
    });
    r.check("θ_g(C_g⁻¹)⊆C_g", tuples(&[k, n]), gx, |t| {
        (p[t[0]].apply(th[t[0]].col(t[1])), th[t[0]].col(t[1]).clone())
    });
    r.check(
        "θ_g bijective",
        tuples(&[k]),
        |t| vec![g.name(t[0]).to_string()],
        |t| {
            let rank = Scalar::from_i64(th[t[0]].rank() as i64);
            let (dom, cod) = (p[g.inv(t[0])].rank(), p[t[0]].rank());
            (
                Vector::from_dense(&[rank.clone(), rank]),
                Vector::from_dense(&[Scalar::from_i64(dom as i64), Scalar::from_i64(cod as i64)]),
            )
        },
    );
    let id = Mat::identity(n);
    let e = g.unit();
    r.check_bool("(ii) C_e=C, θ_e=P_e=id", p[e] == id && th[e] == id, vec![e], vec![g.name(e).to_string()]);
    r.check("P_hP_g=P_gP_h", tuples(&[k, k, n]), ghx, |t| {
        (p[t[1]].apply(p[t[0]].col(t[2])), p[t[0]].apply(p[t[1]].col(t[2])))
    });
    r.check("θ_h⁻¹P_g⁻¹P_h=P_(gh)⁻¹θ_h⁻¹P_h", tuples(&[k, k, n]), ghx, |t| {
        let (a, b) = (t[0], t[1]);
        let hinv = g.inv(b);
        let ph = p[b].col(t[2]);
        let lhs = th[hinv].apply(&p[g.inv(a)].apply(ph));
        let rhs = p[g.inv(g.mul(a, b))].apply(&th[hinv].apply(ph));
        (lhs, rhs)
    });
    r.check("θ_gθ_hP_h⁻¹P_(gh)⁻¹=θ_ghP_h⁻¹P_(gh)⁻¹", tuples(&[k, k, n]), ghx, |t| {
        let (a, b) = (t[0], t[1]);
        let x = p[g.inv(b)].apply(p[g.inv(g.mul(a, b))].col(t[2]));
        (th[a].apply(&th[b].apply(&x)), th[g.mul(a, b)].apply(&x))
    });
    r.flag("global", cga.is_global());
    Ok(r)
}

/// `δ_g·c = θ_g(P_{g⁻¹}(c))`.
pub fn group_to_kg(cga: &CoalgebraGroupAction) -> Result<PartialModuleCoalgebra> {
    let r = check_group_action_on_coalgebra(cga)?;
    if !r.passed() {
        return Err(Error::ActionAxiomFailure(Box::new(r)));
    }
    PartialModuleCoalgebra::from_fn(group_algebra(&cga.g), cga.c.clone(), |a, x| cga.theta[a].col(x).clone())
}

/// `P_g(c) = ε(δ_{g⁻¹}·c₁)c₂` and `θ_g = δ_g·−` on `C_{g⁻¹}`, for a symmetric partial `kG`-module coalgebra.
pub fn kg_to_group(pmc: &PartialModuleCoalgebra, g: &FiniteGroup) -> Result<CoalgebraGroupAction> {
    if !pmc.h.same_structure(&group_algebra(g)) {
        return Err(Error::PreconditionFailure("H is not the group algebra".into()));
    }
    let r = require_module_coalgebra(pmc)?;
    let (k, n) = (g.order(), pmc.c.dim());
    let c = &pmc.c;
    let mut p = Vec::with_capacity(k);
    for a in 0..k {
        let ainv = g.inv(a);
        let left = Mat::from_fn(n, n, |x| {
            let mut acc = Accumulator::new(n);
            for (coef, c1, c2) in coterms(c, x) {
                acc.add_scaled(&(&coef * &pmc.eps_act(ainv, c1)), &c.e(c2));
            }
            acc.finish()
        });
        let right = Mat::from_fn(n, n, |x| {
            let mut acc = Accumulator::new(n);
            for (coef, c1, c2) in coterms(c, x) {
                acc.add_scaled(&(&coef * &pmc.eps_act(ainv, c2)), &c.e(c1));
            }
            acc.finish()
        });
        if left != right {
            let x = (0..n).find(|&x| left.col(x) != right.col(x)).unwrap_or(0);
            return Err(Error::NotSymmetric(format!(
                "ε(δ_{}·c₁)c₂ ≠ c₁ε(δ_{}·c₂) at {}",
                g.name(ainv),
                g.name(ainv),
                c.name(x)
            )));
        }
        p.push(left);
    }
    if r.get_flag("symmetric") != Some(true) {
        return Err(Error::NotSymmetric("PLHMC3′ fails".into()));
    }
    let theta = (0..k).map(|a| Mat::from_fn(n, n, |x| pmc.apply(&pmc.h.e(a), p[g.inv(a)].col(x)))).collect();
    CoalgebraGroupAction::new(g.clone(), c.clone(), p, theta)
}

/// The coalgebra structure of a subcoalgebra, in the canonical basis of `sub`.
pub(crate) fn subcoalgebra(c: &CoalgebraSC, sub: &Subspace) -> Result<CoalgebraSC> {
    let d = sub.dim();
    let cols = sub
        .basis()
        .iter()
        .map(|b| {
            tensor_coords(sub, &c.delta(b), c.dim())
                .ok_or_else(|| Error::DimensionMismatch("not a subcoalgebra".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let counit = Vector::from_dense(&sub.basis().iter().map(|b| c.eps(b)).collect::<Vec<_>>());
    let names = sub.basis().iter().map(|b| combination_label(b, |i| c.name(i))).collect();
    CoalgebraSC::new(Mat::from_columns(d * d, cols), counit, Some(names))
}

/// Coordinates in `sub ⊗ sub` of a vector of `V ⊗ V` (`dim V = n`), if it lies there.
pub(crate) fn tensor_coords(sub: &Subspace, v: &Vector, n: usize) -> Option<Vector> {
    let d = sub.dim();
    let mut half = Accumulator::new(n * d);
    for (i, inner) in v.split_outer(n) {
        for (j, y) in sub.coords(&inner)?.iter() {
            half.add(tidx(i, j, d), y);
        }
    }
    let mut acc = Accumulator::new(d * d);
    for (j, col) in swap(&half.finish(), n, d).split_outer(n) {
        for (i, x) in sub.coords(&col)?.iter() {
            acc.add(tidx(i, j, d), x);
        }
    }
    Some(acc.finish())
}

/// `h·d = P(h▷d)` on the image `D` of a coalgebra projection `P`, for a global module coalgebra.
pub fn induced_module_coalgebra(global: &PartialModuleCoalgebra, p: &Mat) -> Result<PartialModuleCoalgebra> {
    let r = require_module_coalgebra(global)?;
    if r.get_flag("global") != Some(true) {
        return Err(Error::NotGlobal);
    }
    let pr = check_coalgebra_projection(p, &global.c);
    if !pr.passed() {
        return Err(Error::ProjectionFailure(Box::new(pr)));
    }
    let sub = image(p);
    let d = subcoalgebra(&global.c, &sub)?;
    PartialModuleCoalgebra::from_fn(global.h.clone(), d, |i, j| {
        let v = p.apply(&global.apply(&global.h.e(i), &sub.basis()[j]));
        sub.coords(&v).expect("P maps into its image")
    })
}

/// `δ_g·x = α_g(x)` for `x ∈ X_{g⁻¹}` and `0` otherwise, on the grouplike coalgebra spanned by `X`.
pub fn module_coalgebra_from_set(spa: &SetPartialAction) -> Result<PartialModuleCoalgebra> {
    let r = check_set_partial_action(spa)?;
    if !r.passed() {
        return Err(Error::ActionAxiomFailure(Box::new(r)));
    }
    let c = CoalgebraSC::grouplike((0..spa.n).map(|x| format!("x{}", SetPartialAction::point_name(x))).collect());
    PartialModuleCoalgebra::from_fn(group_algebra(&spa.g), c, |a, x| match spa.alpha(a, x) {
        Some(y) => Vector::unit(spa.n, y),
        None => Vector::zeros(spa.n),
    })
}

/// A right partial action `c ⊗ h ↦ c·h` (column `tidx(c, h, dim H)`) read as the left partial action
/// `h·c = c·h` of `H^{op,cop}` on `C^cop`.
pub fn from_right_module_coalgebra(
    h: &HopfPackage,
    c: &CoalgebraSC,
    right_act: &Mat,
) -> Result<PartialModuleCoalgebra> {
    let (nh, n) = (h.dim(), c.dim());
    if right_act.nrows() != n || right_act.ncols() != nh * n {
        return Err(Error::DimensionMismatch("right action shape".into()));
    }
    PartialModuleCoalgebra::from_fn(op_cop_transformers(h, OpCop::OpCop), c.co_opposite(), |a, x| {
        right_act.col(tidx(x, a, nh)).clone()
    })
}

#[cfg(test)]
mod tests;
