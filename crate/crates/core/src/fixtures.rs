//! Named example objects over ℚ used by tests, the acceptance suite and the CLI.

use crate::coalgebra_partial::{
    module_coalgebra_from_set, CoalgebraGroupAction, PartialComoduleCoalgebra, PartialModuleCoalgebra,
};
use crate::exactlin::{tidx, Mat, Scalar, Vector};
use crate::groups_groupoids::{FiniteGroup, SetPartialAction};
use crate::partial_actions::PartialAction;
use crate::partial_coactions::PartialCoaction;
use crate::structures::{
    dual_group_hopf, function_algebra, group_algebra, matrix_algebra, CoalgebraSC, HopfPackage, Pairing,
};

fn z2() -> FiniteGroup {
    FiniteGroup::cyclic(2)
}

/// `kℤ₂` acting on `Fun({1,2})` with `δ_g·f = f(1)χ₁`.
pub fn e1() -> PartialAction {
    let a = function_algebra(2);
    PartialAction::from_fn(group_algebra(&z2()), a.clone(), |h, x| match (h, x) {
        (0, _) => a.e(x),
        (_, 0) => a.e(0),
        _ => Vector::zeros(2),
    })
    .unwrap()
}

/// `kℤ₂` swapping the points of `{1,2}`.
pub fn global_swap_action() -> PartialAction {
    let a = function_algebra(2);
    PartialAction::from_fn(group_algebra(&z2()), a.clone(), |h, x| if h == 0 { a.e(x) } else { a.e(1 - x) }).unwrap()
}

/// `δ_g·χ₁ = χ₂`, `δ_g·χ₂ = 0`: multiplicative and unital in `δ_e`, but PLA3 fails at `(δ_g,δ_g,χ₂)`.
pub fn broken_e1() -> PartialAction {
    let a = function_algebra(2);
    PartialAction::from_fn(group_algebra(&z2()), a.clone(), |h, x| match (h, x) {
        (0, _) => a.e(x),
        (_, 0) => a.e(1),
        _ => Vector::zeros(2),
    })
    .unwrap()
}

/// The trivial group acting on `M₂(k)`.
pub fn matrix_trivial_action() -> PartialAction {
    let a = matrix_algebra(2);
    PartialAction::from_fn(HopfPackage::trivial(), a.clone(), |_, x| a.e(x)).unwrap()
}

/// The trivial group acting on `Fun({1,…,n})`.
pub fn trivial_action(n: usize) -> PartialAction {
    let a = function_algebra(n);
    PartialAction::from_fn(HopfPackage::trivial(), a.clone(), |_, x| a.e(x)).unwrap()
}

/// `kℤ₃` permuting `{1,2,3}` cyclically: `δ_g·χ_x = χ_{x+1}`.
pub fn z3_cyclic_action() -> PartialAction {
    let a = function_algebra(3);
    PartialAction::from_fn(group_algebra(&FiniteGroup::cyclic(3)), a.clone(), |h, x| a.e((x + h) % 3)).unwrap()
}

/// `kℤ₂` with the zero antipode.
pub fn kz2_zero_antipode() -> HopfPackage {
    let mut p = group_algebra(&z2());
    p.antipode = Some(Mat::zeros(2, 2));
    p
}

pub(crate) fn int(v: i64) -> Scalar {
    Scalar::from_i64(v)
}

/// `(kℤ₂)*` coacting on `Fun({1,2})` by `ρ̄(f) = f⊗p_e + f(1)χ₁⊗p_g`.
pub fn e2() -> PartialCoaction {
    let a = function_algebra(2);
    let k = dual_group_hopf(&z2());
    PartialCoaction::from_fn(k, a, |x| match x {
        0 => Vector::from_pairs(4, [(0, int(1)), (1, int(1))]),
        _ => Vector::unit(4, 2),
    })
    .unwrap()
}

/// `e2` with `ρ(χ₂) = χ₂⊗(p_e − p_g)`: `ρ(χ₂)` is no longer idempotent, so PRHCA1 fails first at `(χ₂,χ₂)`.
pub fn broken_e2() -> PartialCoaction {
    let mut pc = e2();
    pc.rho.set_col(1, Vector::from_pairs(4, [(tidx(1, 0, 2), int(1)), (tidx(1, 1, 2), int(-1))]));
    pc
}

/// The global coaction of `(kℤ₂)*` dual to the swap: `ρ(χ_x) = Σ_u χ_{u·x} ⊗ p_u`.
pub fn global_swap_coaction() -> PartialCoaction {
    let a = function_algebra(2);
    let k = dual_group_hopf(&z2());
    PartialCoaction::from_fn(k, a, |x| Vector::from_pairs(4, [(tidx(x, 0, 2), int(1)), (tidx(1 - x, 1, 2), int(1))]))
        .unwrap()
}

/// The regular coaction of `(kℤ₃)*` on `Fun({1,2,3})` dual to the cyclic action.
pub fn z3_regular_coaction() -> PartialCoaction {
    let g = FiniteGroup::cyclic(3);
    PartialCoaction::from_fn(dual_group_hopf(&g), function_algebra(3), |x| {
        Vector::from_pairs(9, (0..3).map(|u| (tidx((x + u) % 3, u, 3), int(1))))
    })
    .unwrap()
}

/// The canonical pairing `⟨δ_u, p_v⟩ = δ_{u,v}` of order `n`.
pub fn canonical_pairing(n: usize) -> Pairing {
    Pairing::identity(n)
}

/// `ℤ₂` on `{1,2}` with `X_g = {1}` and `α_g = id`.
pub fn e1_set() -> SetPartialAction {
    SetPartialAction::new(z2(), 2, vec![vec![0, 1], vec![0]], vec![vec![Some(0), Some(1)], vec![Some(0), None]])
        .unwrap()
}

/// `ℤ₂` swapping `{1,2}`.
pub fn global_swap_set() -> SetPartialAction {
    SetPartialAction::global(z2(), 2, |g, x| if g == 0 { x } else { 1 - x }).unwrap()
}

/// `ℤ₃` on `{1,2,3}` with `X_g = X_{g²} = {1}` and identity maps.
pub fn z3_single_domain_set() -> SetPartialAction {
    let id1 = vec![Some(0), None, None];
    SetPartialAction::new(
        FiniteGroup::cyclic(3),
        3,
        vec![vec![0, 1, 2], vec![0], vec![0]],
        vec![vec![Some(0), Some(1), Some(2)], id1.clone(), id1],
    )
    .unwrap()
}

/// `ℤ₃` on `{1,2,3}` with `α_g = α_{g²}` the same 3-cycle, so `α_g∘α_g ≠ α_{g²}`.
pub fn z3_broken_set() -> SetPartialAction {
    SetPartialAction::global(FiniteGroup::cyclic(3), 3, |g, x| if g == 0 { x } else { (x + 1) % 3 }).unwrap()
}

/// The trivial group on `n` points.
pub fn trivial_set(n: usize) -> SetPartialAction {
    SetPartialAction::global(FiniteGroup::trivial(), n, |_, x| x).unwrap()
}

fn grouplikes(n: usize) -> CoalgebraSC {
    CoalgebraSC::grouplike((1..=n).map(|i| format!("x{i}")).collect())
}

/// `kℤ₂` on the grouplikes `x₁, x₂` with `δ_g·x₁ = x₁` and `δ_g·x₂ = 0`.
pub fn e3() -> PartialModuleCoalgebra {
    PartialModuleCoalgebra::from_fn(group_algebra(&z2()), grouplikes(2), |h, x| {
        if h == 1 && x == 1 {
            Vector::zeros(2)
        } else {
            Vector::unit(2, x)
        }
    })
    .unwrap()
}

/// `e3` as group data: `P_g = θ_g` fix `x₁` and kill `x₂`.
pub fn e3_group() -> CoalgebraGroupAction {
    let half = Mat::from_int_rows(&[vec![1, 0], vec![0, 0]]);
    CoalgebraGroupAction::new(z2(), grouplikes(2), vec![Mat::identity(2), half.clone()], vec![Mat::identity(2), half])
        .unwrap()
}

/// `(kℤ₂)*` on the grouplikes `x₁, x₂` with `λ(x₁) = (p_e+p_g)⊗x₁` and `λ(x₂) = p_e⊗x₂`.
pub fn e3_star() -> PartialComoduleCoalgebra {
    PartialComoduleCoalgebra::from_fn(dual_group_hopf(&z2()), grouplikes(2), |x| match x {
        0 => Vector::from_pairs(4, [(tidx(0, 0, 2), int(1)), (tidx(1, 0, 2), int(1))]),
        _ => Vector::unit(4, tidx(0, 1, 2)),
    })
    .unwrap()
}

/// `kℤ₂` on `x₁, x₂, x₃` with `Δx₂ = x₂⊗x₁ + x₃⊗x₂`, `ε(x₂) = 0`, `δ_g` fixing `x₃` and killing `x₁, x₂`:
/// PLHMC1–3 hold but PLHMC3′ does not.
pub fn triangular_nonsymmetric() -> PartialModuleCoalgebra {
    let mut comult = Mat::zeros(9, 3);
    comult.set_col(0, Vector::unit(9, tidx(0, 0, 3)));
    comult.set_col(1, Vector::from_pairs(9, [(tidx(1, 0, 3), int(1)), (tidx(2, 1, 3), int(1))]));
    comult.set_col(2, Vector::unit(9, tidx(2, 2, 3)));
    let c = CoalgebraSC::new(comult, Vector::from_ints(&[1, 0, 1]), Some(vec!["x1".into(), "x2".into(), "x3".into()]))
        .unwrap();
    PartialModuleCoalgebra::from_fn(group_algebra(&z2()), c, |h, x| {
        if h == 0 || x == 2 {
            Vector::unit(3, x)
        } else {
            Vector::zeros(3)
        }
    })
    .unwrap()
}

/// `(kℤ₂)*` on the co-opposite of the `triangular_nonsymmetric` coalgebra with `λ(x₃) = (p_e+p_g)⊗x₃` and
/// `λ(x) = p_e⊗x` otherwise: PLHCC1–3 hold but PLHCC3′ does not.
pub fn triangular_nonsymmetric_coaction() -> PartialComoduleCoalgebra {
    let c = triangular_nonsymmetric().c.co_opposite();
    PartialComoduleCoalgebra::from_fn(dual_group_hopf(&z2()), c, |x| {
        let v = Vector::unit(6, tidx(0, x, 3));
        if x == 2 {
            v.add(&Vector::unit(6, tidx(1, 2, 3)))
        } else {
            v
        }
    })
    .unwrap()
}

/// `kℤ₃` on the grouplikes `x₁, x₂, x₃` with `x₁` invariant and `x₂, x₃` killed by `δ_g, δ_{g²}`.
pub fn z3_invariant_grouplike() -> PartialModuleCoalgebra {
    module_coalgebra_from_set(&z3_single_domain_set()).unwrap()
}

/// `kℤ₂` globally on the grouplikes `x₁, x₂, x₃`, fixing `x₁` and swapping `x₂, x₃`.
pub fn swap_on_three_grouplikes() -> PartialModuleCoalgebra {
    PartialModuleCoalgebra::from_fn(group_algebra(&z2()), grouplikes(3), |h, x| {
        Vector::unit(3, if h == 1 && x > 0 { 3 - x } else { x })
    })
    .unwrap()
}

/// `(kℤ₂)*` globally on the grouplikes `y₁, y₂, y₃`, dual to swapping `y₂, y₃`.
pub fn y_comodule_coalgebra() -> PartialComoduleCoalgebra {
    let c = CoalgebraSC::grouplike(vec!["y1".into(), "y2".into(), "y3".into()]);
    PartialComoduleCoalgebra::from_fn(dual_group_hopf(&z2()), c, |x| {
        let moved = if x == 0 { 0 } else { 3 - x };
        Vector::from_pairs(6, [(tidx(0, x, 3), int(1)), (tidx(1, moved, 3), int(1))])
    })
    .unwrap()
}
