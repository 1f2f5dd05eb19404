//! Corings, bialgebroids and Hopf algebroids over a base algebra, with
//! balanced tensors realized as quotient spaces and exhaustive axiom checkers.

pub(crate) mod algebroid;
mod coring;
mod skew;
mod split;
mod tensor;

pub use algebroid::{
    check_hopf_algebroid, check_left_bialgebroid, check_right_bialgebroid, full_report, same_up_to_balancing,
    takeuchi_membership, HopfAlgebroid, Side,
};
pub use coring::{check_coring, ACoring};
pub use skew::{canonical_skew_pairing, check_skew_pairing, SkewPairing};
pub use split::split_hopf_algebroid;
pub use tensor::{Balanced2, Balanced3, Bimodule};
