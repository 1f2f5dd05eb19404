use super::*;
use crate::fixtures::{broken_e1, e1, global_swap_action, matrix_trivial_action, trivial_action, z3_cyclic_action};
use crate::hopf_algebroid::{check_hopf_algebroid, takeuchi_membership, Side};
use crate::structures::function_algebra;
use proptest::prelude::*;

/// Rank by floating Gaussian elimination; an independent oracle for small integer matrices.
fn oracle_rank(mut rows: Vec<Vec<f64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c].abs() > 1e-9) else { continue };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank {
                let f = rows[r][c] / rows[rank][c];
                for k in 0..cols {
                    rows[r][k] -= f * rows[rank][k];
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn global_swap_is_a_symmetric_global_action() {
    let r = check_partial_action(&global_swap_action()).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.get_flag("symmetric"), Some(true));
    assert_eq!(r.get_flag("global"), Some(true));
}

#[test]
fn e1_is_symmetric_and_not_global() {
    let r = check_partial_action(&e1()).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.get_flag("symmetric"), Some(true));
    assert!(!is_global(&e1()));
    assert_eq!(r.axiom("PLA2").unwrap().checked, 8);
    assert_eq!(r.axiom("PLA3").unwrap().checked, 8);
    assert_eq!(e1().on_unit(1), function_algebra(2).e(0));
}

#[test]
fn broken_e1_fails_pla3_only_at_g_g_chi2() {
    let r = check_partial_action(&broken_e1()).unwrap();
    assert_eq!(r.failed_axioms(), vec!["PLA3"]);
    let a = r.axiom("PLA3").unwrap();
    assert_eq!(a.failures, 1);
    assert_eq!(a.witnesses[0].labels, vec!["δ_g", "δ_g", "χ2"]);
}

#[test]
fn trivial_group_actions_are_global() {
    assert!(is_global(&trivial_action(3)));
    assert!(is_global(&matrix_trivial_action()));
}

#[test]
fn induced_by_unit_is_the_original() {
    let g = global_swap_action();
    let ind = induced_partial_action(&g, g.a.unit()).unwrap();
    assert_eq!(ind.act, g.act);
}

#[test]
fn induced_on_one_point_of_swap() {
    let g = global_swap_action();
    let ind = induced_partial_action(&g, &g.a.e(0)).unwrap();
    assert_eq!(ind.a.dim(), 1);
    assert!(ind.basis(1, 0).is_zero());
    let r = check_partial_action(&ind).unwrap();
    assert!(r.passed() && r.get_flag("symmetric") == Some(true), "{r}");
}

#[test]
fn induced_z3_on_two_points() {
    let g = z3_cyclic_action();
    let e = g.a.e(0).add(&g.a.e(1));
    let ind = induced_partial_action(&g, &e).unwrap();
    assert_eq!(ind.a.dim(), 2);
    let r = check_partial_action(&ind).unwrap();
    assert!(r.passed() && r.get_flag("symmetric") == Some(true), "{r}");
    assert_eq!(r.get_flag("global"), Some(false));
    // e(g▷χ1) = χ2, e(g▷χ2) = 0, e(g²▷χ2) = χ1
    assert_eq!(ind.basis(1, 0), &ind.a.e(1));
    assert!(ind.basis(1, 1).is_zero());
    assert_eq!(ind.basis(2, 1), &ind.a.e(0));
}

#[test]
fn induced_rejects_bad_idempotents() {
    let g = global_swap_action();
    let two = g.a.e(0).scale(&crate::fixtures::int(2));
    assert!(matches!(induced_partial_action(&g, &two), Err(Error::NotIdempotent(_))));
    assert!(matches!(induced_partial_action(&e1(), e1().a.unit()), Err(Error::NotGlobal)));
    let m = matrix_trivial_action();
    assert!(matches!(induced_partial_action(&m, &m.a.e(0)), Err(Error::NotCentral(_))));
}

#[test]
fn smash_dimensions_match_the_oracle() {
    // raw images a(h·1)⊗h of the basis of A⊗H, for kℤ₂ on Fun({1,2}) with δ_g·1 = χ1
    let e1_rows =
        vec![vec![1.0, 0.0, 0.0, 0.0], vec![0.0, 1.0, 0.0, 0.0], vec![0.0, 0.0, 1.0, 0.0], vec![0.0, 0.0, 0.0, 0.0]];
    assert_eq!(oracle_rank(e1_rows), 3);
    assert_eq!(smash_product(&e1()).unwrap().dim(), 3);
    assert_eq!(smash_product(&global_swap_action()).unwrap().dim(), 4);
    assert_eq!(smash_product(&trivial_action(2)).unwrap().dim(), 2);
}

#[test]
fn e1_smash_basis_and_square() {
    let sp = smash_product(&e1()).unwrap();
    let names: Vec<&str> = sp.algebra.names().iter().map(String::as_str).collect();
    assert_eq!(names, vec!["χ1#δ_e", "χ1#δ_g", "χ2#δ_e"]);
    let x = sp.algebra.e(1);
    assert_eq!(sp.algebra.mul(&x, &x), sp.algebra.e(0));
    assert!(sp.algebra.check().passed());
}

#[test]
fn smash_refuses_broken_actions() {
    assert!(matches!(smash_product(&broken_e1()), Err(Error::ActionAxiomFailure(_))));
}

#[test]
fn e1_smash_algebroid_values_and_axioms() {
    let h = smash_hopf_algebroid(&e1()).unwrap();
    assert_eq!(h.dim(), 3);
    let x = h.total.e(1);
    let chi1 = h.base.e(0);
    assert_eq!(h.eps_l.apply(&x), chi1);
    assert_eq!(h.eps_r.apply(&x), chi1);
    assert_eq!(h.antipode.apply(&x), x);
    let r = check_hopf_algebroid(&h).unwrap();
    assert!(r.passed(), "{r}");
    let b2 = crate::hopf_algebroid::Balanced2::new(&h.bimodule(Side::Left));
    for i in 0..3 {
        let cls = b2.project(&h.delta_l.apply(&h.total.e(i)));
        assert!(takeuchi_membership(&cls, &h, Side::Left));
    }
}

#[test]
fn swap_smash_algebroid_passes() {
    let h = smash_hopf_algebroid(&global_swap_action()).unwrap();
    assert_eq!(h.dim(), 4);
    assert!(check_hopf_algebroid(&h).unwrap().passed());
}

#[test]
fn smash_algebroid_preconditions() {
    match smash_hopf_algebroid(&matrix_trivial_action()) {
        Err(Error::PreconditionFailure(m)) => assert_eq!(m, "base algebra not commutative"),
        other => panic!("unexpected {other:?}"),
    }
}

fn induced_strategy() -> impl Strategy<Value = PartialAction> {
    (1usize..=4, 1usize..=4, any::<u16>()).prop_map(|(n, x, mask)| {
        let g = crate::groups_groupoids::FiniteGroup::cyclic(n);
        let a = function_algebra(x);
        // translation by a multiple of x/gcd(n,x) is a genuine ℤ_n action on ℤ_x
        let step = x / num_integer::gcd(n, x);
        let global =
            PartialAction::from_fn(crate::structures::group_algebra(&g), a.clone(), |h, p| a.e((p + h * step) % x))
                .unwrap();
        let mut e = Vector::zeros(x);
        for p in 0..x {
            if mask >> p & 1 == 1 {
                e = e.add(&a.e(p));
            }
        }
        if e.is_zero() {
            e = a.e(0);
        }
        induced_partial_action(&global, &e).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn induced_actions_give_associative_smash_products(pa in induced_strategy()) {
        let r = check_partial_action(&pa).unwrap();
        prop_assert!(r.passed());
        prop_assert_eq!(r.get_flag("symmetric"), Some(true));
        let sp = smash_product(&pa).unwrap();
        prop_assert!(sp.algebra.check().passed());
        for i in 0..sp.dim() {
            let b = sp.embed(&sp.algebra.e(i));
            prop_assert_eq!(sp.pi(&pa, &b), b);
        }
        if is_global(&pa) {
            prop_assert_eq!(sp.dim(), pa.a.dim() * pa.h.dim());
        }
    }
}
