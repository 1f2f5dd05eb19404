//! Transfers between partial actions and coactions through dual pairings, and the pairings they
//! induce between smash products and cosmash coproducts and between corings and C-rings.

mod handed;
mod pairings;
mod transfer;

pub use handed::{
    check_left_partial_coaction, check_right_module_coalgebra, check_right_partial_action, LeftPartialCoaction,
    RightModuleCoalgebra, RightPartialAction,
};
pub use pairings::{
    cring_coring_pairing, module_coalgebra_from_k_comodule_algebra, smash_cosmash_pairing, CompatibleTriple,
};
pub use transfer::{
    action_from_coaction, coaction_from_action, comodule_coalgebra_from_module_coalgebra,
    comodule_coalgebra_vs_comodule_algebra, dual_algebra, is_action_morphism, is_coaction_morphism, is_rational,
    module_algebra_from_module_coalgebra, module_coalgebra_from_comodule_coalgebra,
    module_coalgebra_from_module_algebra, module_coalgebra_vs_module_algebra,
};
