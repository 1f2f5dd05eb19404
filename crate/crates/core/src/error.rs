use thiserror::Error;

use crate::report::Report;

fn first(r: &Report) -> String {
    match r.first_failure() {
        Some(a) => match a.witnesses.first() {
            Some(w) => format!("{} fails at ({})", a.name, w.labels.join(",")),
            None => format!("{} fails", a.name),
        },
        None => "no failing axiom".to_string(),
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("not idempotent: {0}")]
    NotIdempotent(String),
    #[error("not central: {0}")]
    NotCentral(String),
    #[error("input is not global")]
    NotGlobal,
    #[error("input is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("precondition failed: {0}")]
    PreconditionFailure(String),
    #[error("partial action axioms fail: {}", first(.0))]
    ActionAxiomFailure(Box<Report>),
    #[error("partial coaction axioms fail: {}", first(.0))]
    CoactionAxiomFailure(Box<Report>),
    #[error("pairing axioms fail: {}", first(.0))]
    PairingAxiomFailure(Box<Report>),
    #[error("bialgebroid axioms fail: {}", first(.0))]
    BialgebroidFailure(Box<Report>),
    #[error("comodule coalgebra axioms fail: {}", first(.0))]
    ComoduleCoalgebraFailure(Box<Report>),
    #[error("coalgebra projection fails: {}", first(.0))]
    ProjectionFailure(Box<Report>),
    #[error("dual star injectivity fails: {}", first(.0))]
    DualStarFailure(Box<Report>),
    #[error("compatibility fails: {0}")]
    CompatibilityFailure(String),
    #[error("form is not well defined: {0}")]
    WellDefinednessFailure(String),
    #[error("pairing is degenerate")]
    DegeneratePairing,
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("functor is not star injective: {0}")]
    NotStarInjective(String),
    #[error("not a functor: {0}")]
    NotAFunctor(String),
    #[error("not a right coideal: {0}")]
    NotACoideal(String),
    #[error("quotient is not a coalgebra: {0}")]
    QuotientNotCoalgebra(String),
    #[error("schema error at {context}: {message}")]
    SchemaError { context: String, message: String },
    #[error("unresolved reference: {0}")]
    UnresolvedReference(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
