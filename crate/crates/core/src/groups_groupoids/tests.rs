use super::*;
use crate::exactlin::{Mat, Vector};
use crate::fixtures::{e1, e1_set, e2, global_swap_set, trivial_set, z3_broken_set, z3_single_domain_set};
use crate::hopf_algebroid::{check_hopf_algebroid, same_up_to_balancing};
use crate::partial_actions::{check_partial_action, is_global};
use crate::partial_coactions::{check_partial_coaction, partial_split_hopf_algebroid, reduced_tensor};
use crate::structures::Pairing;
use proptest::prelude::*;

/// `δ_g·f = 1_g (f∘α_{g⁻¹})` evaluated pointwise on characteristic functions.
fn oracle_kg_matrix(spa: &SetPartialAction) -> Mat {
    let (n, k) = (spa.n, spa.g.order());
    Mat::from_fn(n, k * n, |col| {
        let (g, y) = (col / n, col % n);
        let values: Vec<i64> = (0..n)
            .map(|x| {
                if !spa.domains[g].contains(&x) {
                    return 0;
                }
                let back = spa.maps[spa.g.inv(g)][x].expect("α_{g⁻¹} is defined on X_g");
                i64::from(back == y)
            })
            .collect();
        Vector::from_ints(&values)
    })
}

fn s3_on_three() -> SetPartialAction {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    SetPartialAction::global(FiniteGroup::symmetric(3), 3, |g, x| perms[g][x]).unwrap()
}

#[test]
fn global_and_e1_set_actions_pass() {
    for spa in [global_swap_set(), e1_set(), trivial_set(3), z3_single_domain_set(), s3_on_three()] {
        let r = check_set_partial_action(&spa).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn broken_z3_set_fails_c_at_g_g() {
    let r = check_set_partial_action(&z3_broken_set()).unwrap();
    assert_eq!(r.failed_axioms(), vec!["(c) α_g∘α_h=α_gh"]);
    let c = r.axiom("(c) α_g∘α_h=α_gh").unwrap();
    assert!(c.has_witness(&["g", "g", "1"]));
}

#[test]
fn malformed_tables_are_rejected() {
    let g = FiniteGroup::cyclic(2);
    let bad = SetPartialAction::new(g, 2, vec![vec![0, 1], vec![0]], vec![vec![Some(0), Some(1)], vec![Some(1), None]]);
    assert!(matches!(bad, Err(crate::Error::MalformedTable(_))));
}

#[test]
fn kg_action_of_e1_set_is_e1() {
    let pa = to_kg_partial_action(&e1_set()).unwrap();
    assert_eq!(pa.act, e1().act);
    assert_eq!(pa.act, oracle_kg_matrix(&e1_set()));
    let r = check_partial_action(&pa).unwrap();
    assert_eq!(r.get_flag("symmetric"), Some(true));
    assert!(!is_global(&pa));
    let trivial = to_kg_partial_action(&trivial_set(2)).unwrap();
    assert_eq!(trivial.act, Mat::identity(2));
}

#[test]
fn z3_single_domain_gives_a_partial_action() {
    let pa = to_kg_partial_action(&z3_single_domain_set()).unwrap();
    assert!(check_partial_action(&pa).unwrap().passed());
    assert_eq!(pa.act, oracle_kg_matrix(&z3_single_domain_set()));
}

#[test]
fn dual_coaction_of_e1_set_is_e2() {
    let pc = to_dual_partial_coaction(&e1_set()).unwrap();
    assert_eq!(pc.rho, e2().rho);
    let t = to_dual_partial_coaction(&trivial_set(2)).unwrap();
    assert!(t.is_global());
    // ρ̄(1) = Σ_g 1_g ⊗ p_g
    let spa = z3_single_domain_set();
    let pc = to_dual_partial_coaction(&spa).unwrap();
    let mut expected = Vector::zeros(9);
    for g in 0..3 {
        for &x in &spa.domains[g] {
            expected = expected.add(&Vector::unit(9, x * 3 + g));
        }
    }
    assert_eq!(pc.rho_one(), expected);
}

#[test]
fn dual_coaction_pairs_back_to_the_kg_action() {
    for spa in [e1_set(), global_swap_set(), z3_single_domain_set(), s3_on_three().restrict(&[0, 1]).unwrap()] {
        let pc = to_dual_partial_coaction(&spa).unwrap();
        let pa = to_kg_partial_action(&spa).unwrap();
        let p = Pairing::identity(spa.g.order());
        let (n, k) = (spa.n, spa.g.order());
        // h·a = a⁰⟨h, a¹⟩
        let via = Mat::from_fn(n, k * n, |col| {
            let (h, y) = (col / n, col % n);
            let mut v = Vector::zeros(n);
            for (c, x, xi) in pc.terms(&pc.apply(&pc.a.e(y))) {
                v = v.axpy(&(&c * &p.basis_value(h, xi)), &pc.a.e(x));
            }
            v
        });
        assert_eq!(via, pa.act);
    }
}

#[test]
fn e1_set_groupoid() {
    let gd = groupoid_of_action(&e1_set());
    assert_eq!(gd.names, vec!["(1,e)", "(1,g)", "(2,e)"]);
    assert!(check_groupoid(&gd).unwrap().passed());
    assert_eq!(gd.compose[1][1], Some(0));
    assert_eq!(gd.inverse[1], 1);
    let swap = groupoid_of_action(&global_swap_set());
    assert_eq!(swap.arrows(), 4);
    assert!(check_groupoid(&swap).unwrap().passed());
    let discrete = groupoid_of_action(&trivial_set(3));
    assert_eq!(discrete, FiniteGroupoid { names: discrete.names.clone(), ..FiniteGroupoid::discrete(3) });
}

#[test]
fn star_properties_of_projections() {
    let f = projection_functor(&e1_set()).unwrap();
    assert!(check_star_injective(&f));
    assert!(!check_star_surjective(&f));
    assert_eq!(f.domain.star(0).len(), 2);
    assert_eq!(f.domain.star(1).len(), 1);
    let s = projection_functor(&global_swap_set()).unwrap();
    assert!(check_star_injective(&s) && check_star_surjective(&s));
}

#[test]
fn collapse_functor_is_not_star_injective() {
    let gd = groupoid_of_action(&e1_set());
    let f = StarFunctor::new(gd, FiniteGroup::cyclic(2), vec![0, 0, 0]).unwrap();
    assert!(!check_star_injective(&f));
    assert_eq!(f.star_injectivity_witness(), Some((0, 0, 1)));
    assert!(matches!(action_from_functor(&f), Err(crate::Error::NotStarInjective(_))));
}

#[test]
fn non_functor_is_rejected() {
    let gd = groupoid_of_action(&e1_set());
    assert!(matches!(StarFunctor::new(gd, FiniteGroup::cyclic(2), vec![1, 1, 0]), Err(crate::Error::NotAFunctor(_))));
}

#[test]
fn actions_from_functors() {
    let g = FiniteGroup::cyclic(3);
    let id = StarFunctor::new(FiniteGroupoid::of_group(&g), g.clone(), vec![0, 1, 2]).unwrap();
    let one_point = action_from_functor(&id).unwrap();
    assert!(one_point.is_global() && one_point.n == 1);
    assert_eq!(action_from_functor(&projection_functor(&e1_set()).unwrap()).unwrap(), e1_set());
    assert!(action_from_functor(&projection_functor(&global_swap_set()).unwrap()).unwrap().is_global());
}

#[test]
fn function_algebroids() {
    let d = function_hopf_algebroid(&FiniteGroupoid::discrete(2)).unwrap();
    assert_eq!(d.dim(), 2);
    assert_eq!(d.s_l, Mat::identity(2));
    assert!(check_hopf_algebroid(&d).unwrap().passed());
    let h = function_hopf_algebroid(&groupoid_of_action(&e1_set())).unwrap();
    assert_eq!(h.dim(), 3);
    assert!(check_hopf_algebroid(&h).unwrap().passed());
    assert!(same_up_to_balancing(&h, &partial_split_hopf_algebroid(&e2()).unwrap()));
    let z = function_hopf_algebroid(&groupoid_of_action(&z3_single_domain_set())).unwrap();
    assert!(check_hopf_algebroid(&z).unwrap().passed());
}

#[test]
fn global_split_case_is_dual_star_injective() {
    let spa = global_swap_set();
    let pc = to_dual_partial_coaction(&spa).unwrap();
    let hh = crate::hopf_algebroid::split_hopf_algebroid(&pc).unwrap();
    let (m, n) = (2, 2);
    let f = Mat::from_fn(m * n, n, |k| pc.a.unit().tensor(&pc.k.e(k)));
    let r = check_dual_star_injective(&f, &pc.k, &hh, Some(&Mat::identity(4))).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.get_flag("Π isomorphism"), Some(true));
    assert_eq!(coaction_from_dual_star(&f, &pc.k, &Mat::identity(4), &hh).unwrap().rho, pc.rho);
}

#[test]
fn e2_algebroid_with_the_canonical_inclusion() {
    let pc = e2();
    let rt = reduced_tensor(&pc).unwrap();
    let hh = partial_split_hopf_algebroid(&pc).unwrap();
    let f = Mat::from_fn(hh.dim(), 2, |k| rt.class(&pc.a.unit().tensor(&pc.k.e(k))));
    let sigma = Mat::from_fn(4, hh.dim(), |x| rt.embed(&hh.total.e(x)));
    let r = check_dual_star_injective(&f, &pc.k, &hh, Some(&sigma)).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.get_flag("splittings agree"), Some(true));
    assert_eq!(canonical_splitting(&f, &pc.k, &hh), Some(sigma.clone()));
    let back = coaction_from_dual_star(&f, &pc.k, &sigma, &hh).unwrap();
    assert_eq!(back.rho, pc.rho);
}

#[test]
fn groupoid_functions_recover_e2() {
    let (hh, h, f, sigma) = induced_dual_star(&projection_functor(&e1_set()).unwrap()).unwrap();
    let r = check_dual_star_injective(&f, &h, &hh, Some(&sigma)).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.dims["rank Π"], 3);
    assert_eq!(r.dims["A⊗H"], 4);
    assert_eq!(r.get_flag("Π isomorphism"), Some(false));
    assert!(!pi_is_isomorphism(&f, &h, &hh));
    let pc = coaction_from_dual_star(&f, &h, &sigma, &hh).unwrap();
    assert_eq!(pc.rho, e2().rho);
    assert!(!check_partial_coaction(&pc).unwrap().get_flag("global").unwrap());
}

#[test]
fn broken_sigma_is_a_dual_star_failure() {
    let (hh, h, f, sigma) = induced_dual_star(&projection_functor(&e1_set()).unwrap()).unwrap();
    let bad = sigma.scale(&crate::fixtures::int(2));
    assert!(matches!(coaction_from_dual_star(&f, &h, &bad, &hh), Err(crate::Error::DualStarFailure(_))));
}

fn global_strategy() -> impl Strategy<Value = SetPartialAction> {
    prop_oneof![
        (1usize..=6, 1usize..=5).prop_map(|(n, x)| {
            let step = x / num_integer::gcd(n, x);
            SetPartialAction::global(FiniteGroup::cyclic(n), x, |g, p| (p + g * step) % x).unwrap()
        }),
        Just(s3_on_three()),
        Just({
            let k = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
            let kk = k.clone();
            SetPartialAction::global(k, 4, move |g, p| kk.mul(g, p)).unwrap()
        }),
    ]
}

fn partial_strategy() -> impl Strategy<Value = SetPartialAction> {
    (global_strategy(), any::<u8>()).prop_map(|(g, mask)| {
        let y: Vec<usize> = (0..g.n).filter(|&x| mask >> x & 1 == 1).collect();
        g.restrict(&y).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn round_trips_and_dimension_counts(spa in partial_strategy()) {
        prop_assert!(check_set_partial_action(&spa).unwrap().passed());
        let f = projection_functor(&spa).unwrap();
        prop_assert!(check_star_injective(&f));
        prop_assert_eq!(&action_from_functor(&f).unwrap(), &spa);
        let pa = to_kg_partial_action(&spa).unwrap();
        prop_assert_eq!(&pa.act, &oracle_kg_matrix(&spa));
        prop_assert_eq!(check_star_surjective(&f), is_global(&pa));
        let pc = to_dual_partial_coaction(&spa).unwrap();
        prop_assert!(check_partial_coaction(&pc).unwrap().passed());
        prop_assert_eq!(f.domain.arrows(), reduced_tensor(&pc).unwrap().dim());
        let (hh, h, fhat, sigma) = induced_dual_star(&f).unwrap();
        prop_assert_eq!(coaction_from_dual_star(&fhat, &h, &sigma, &hh).unwrap().rho, pc.rho);
    }
}
