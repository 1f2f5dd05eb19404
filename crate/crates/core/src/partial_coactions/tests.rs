use super::*;
use crate::fixtures::{canonical_pairing, e2, global_swap_coaction, int, z3_regular_coaction};
use crate::groups_groupoids::FiniteGroup;
use crate::hopf_algebroid::{check_coring, check_hopf_algebroid, Balanced2, Side};
use crate::structures::{dual_group_hopf, function_algebra, group_algebra};

#[test]
fn global_swap_coaction_is_global_and_symmetric() {
    let pc = global_swap_coaction();
    let r = check_partial_coaction(&pc).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.get_flag("symmetric"), Some(true));
    assert_eq!(pc.rho_one(), pc.a.unit().tensor(pc.k.one()));
}

#[test]
fn e2_passes_with_the_expected_unit_coaction() {
    let pc = e2();
    let r = check_partial_coaction(&pc).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.get_flag("symmetric"), Some(true));
    assert_eq!(r.get_flag("global"), Some(false));
    // 1⊗p_e + χ1⊗p_g, with index a·2 + k
    assert_eq!(pc.rho_one(), Vector::from_ints(&[1, 1, 1, 0]));
}

#[test]
fn rho_one_is_an_idempotent_absorbed_by_the_image() {
    for pc in [e2(), global_swap_coaction(), z3_regular_coaction()] {
        let ak = pc.ak();
        let r1 = pc.rho_one();
        assert_eq!(ak.mul(&r1, &r1), r1);
        for x in 0..pc.a.dim() {
            let r = pc.apply(&pc.a.e(x));
            assert_eq!(ak.mul(&r, &r1), r);
            assert_eq!(ak.mul(&r1, &r), r);
        }
    }
}

#[test]
fn a_broken_coaction_is_caught() {
    let mut pc = e2();
    pc.rho = pc.rho.scale(&int(2));
    let r = check_partial_coaction(&pc).unwrap();
    assert_eq!(r.first_failure().unwrap().name, "PRHCA1");
    assert!(matches!(reduced_tensor(&pc), Err(Error::CoactionAxiomFailure(_))));
}

#[test]
fn restricted_coactions() {
    let g = global_swap_coaction();
    assert_eq!(restricted_coaction(&g, g.a.unit()).unwrap().rho, g.rho);
    let one = restricted_coaction(&g, &g.a.e(0)).unwrap();
    assert_eq!(one.a.dim(), 1);
    let r = check_partial_coaction(&one).unwrap();
    assert!(r.passed() && r.get_flag("symmetric") == Some(true), "{r}");
    let z3 = z3_regular_coaction();
    let two = restricted_coaction(&z3, &z3.a.e(0).add(&z3.a.e(1))).unwrap();
    let r = check_partial_coaction(&two).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.get_flag("global"), Some(false));
    assert!(matches!(restricted_coaction(&e2(), e2().a.unit()), Err(Error::NotGlobal)));
}

#[test]
fn reduced_tensor_dimensions() {
    assert_eq!(reduced_tensor(&global_swap_coaction()).unwrap().dim(), 4);
    let rt = reduced_tensor(&e2()).unwrap();
    assert_eq!(rt.dim(), 3);
    assert!(rt.algebra.check().passed());
    assert_eq!(rt.embed(rt.algebra.unit()), e2().rho_one());
}

#[test]
fn split_corings() {
    assert!(check_coring(&split_coring(&global_swap_coaction()).unwrap()).unwrap().passed());
    let c = split_coring(&e2()).unwrap();
    assert_eq!(c.dim(), 3);
    assert!(check_coring(&c).unwrap().passed());
    let pc = e2();
    let rt = reduced_tensor(&pc).unwrap();
    let x = rt.class(&pc.a.e(0).tensor(&pc.k.e(1)));
    assert!(c.counit.apply(&x).is_zero());
}

#[test]
fn zero_counit_breaks_the_split_coring_counit_law() {
    let mut c = split_coring(&e2()).unwrap();
    c.counit = Mat::zeros(2, 3);
    let r = check_coring(&c).unwrap();
    assert_eq!(r.first_failure().unwrap().name, "left counit");
}

#[test]
fn e2_partial_split_algebroid_passes() {
    let h = partial_split_hopf_algebroid(&e2()).unwrap();
    assert_eq!(h.dim(), 3);
    let r = check_hopf_algebroid(&h).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn comultiplication_rewriting_identity_holds_on_raw_pairs() {
    let pc = e2();
    let rt = reduced_tensor(&pc).unwrap();
    let h = partial_split_hopf_algebroid(&pc).unwrap();
    let b2 = Balanced2::new(&h.bimodule(Side::Left));
    for a in 0..2 {
        for xi in 0..2 {
            let x = rt.class(&pc.a.e(a).tensor(&pc.k.e(xi)));
            let mut expected = Vector::zeros(9);
            for (c, i, j) in pc.k.delta_terms(xi) {
                let l = rt.class(&pc.a.e(a).tensor(&pc.k.e(i)));
                let r = rt.class(&pc.a.unit().tensor(&pc.k.e(j)));
                expected = expected.axpy(&c, &l.tensor(&r));
            }
            assert_eq!(b2.project(&h.delta_l.apply(&x)), b2.project(&expected));
        }
    }
}

#[test]
fn noncommutative_k_is_refused() {
    let k = group_algebra(&FiniteGroup::symmetric(3));
    let a = function_algebra(1);
    let one = k.one().clone();
    let pc = PartialCoaction::from_fn(k, a, |_| one.clone()).unwrap();
    match partial_split_hopf_algebroid(&pc) {
        Err(Error::PreconditionFailure(m)) => assert_eq!(m, "K not commutative"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn left_dual_ring_trivial_group_is_the_identity() {
    let k = crate::structures::HopfPackage::trivial();
    let a = function_algebra(2);
    let pc = PartialCoaction::from_fn(k.clone(), a.clone(), |x| a.e(x)).unwrap();
    let r = left_dual_ring_compare(&pc, &canonical_pairing(1), &k).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.dims["*C"], 2);
}

#[test]
fn left_dual_ring_of_e2() {
    let g = FiniteGroup::cyclic(2);
    let r = left_dual_ring_compare(&e2(), &canonical_pairing(2), &group_algebra(&g)).unwrap();
    assert_eq!(r.dims["*C"], 3);
    assert_eq!(r.dims["(A^op#H^cop)^op"], 3);
    assert!(r.passes("Θ injective") && r.passes("Θ surjective"), "{r}");
    assert!(r.passes("Θ lands in *C"));
}

#[test]
fn left_dual_ring_with_a_degenerate_pairing() {
    let g = FiniteGroup::cyclic(2);
    // ⟨h,ξ⟩ = ε(h)ε(ξ) is a Hopf pairing of rank one
    let form = Mat::from_int_rows(&[vec![1, 0], vec![1, 0]]);
    let p = Pairing::new(form);
    assert!(check_pairing(&p, PairingKind::Hopf(&group_algebra(&g), &dual_group_hopf(&g)), false).unwrap().passed());
    let r = left_dual_ring_compare(&e2(), &p, &group_algebra(&g)).unwrap();
    assert!(!r.passes("Θ injective"));
}

#[test]
fn zero_form_is_not_a_hopf_pairing() {
    let g = FiniteGroup::cyclic(2);
    let p = Pairing::new(Mat::zeros(2, 2));
    assert!(matches!(left_dual_ring_compare(&e2(), &p, &group_algebra(&g)), Err(Error::PairingAxiomFailure(_))));
}
