//! Finite groups, partial group actions on sets, their groupoids and star functors,
//! and the passage from dual star injective maps back to partial coactions.

mod dual_star;
mod group;
mod groupoid;
mod set_action;

pub use dual_star::{
    canonical_splitting, check_dual_star_injective, coaction_from_dual_star, induced_dual_star, pi_is_isomorphism,
    pi_matrix,
};
pub use group::FiniteGroup;
pub use groupoid::{
    action_from_functor, check_groupoid, check_star_injective, check_star_surjective, function_hopf_algebroid,
    groupoid_of_action, projection_functor, FiniteGroupoid, StarFunctor,
};
pub use set_action::{check_set_partial_action, to_dual_partial_coaction, to_kg_partial_action, SetPartialAction};

#[cfg(test)]
mod tests;
