//! Exact structure-constant computations for partial actions and partial
//! coactions of finite-dimensional Hopf algebras.

pub mod cli_io;
pub mod coalgebra_partial;
pub mod dualities;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod groups_groupoids;
pub mod hopf_algebroid;
pub mod partial_actions;
pub mod partial_coactions;
pub mod report;
pub mod structures;

pub use error::{Error, Result};
