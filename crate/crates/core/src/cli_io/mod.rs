//! Fixture files, report rendering and the commands behind the `phopf` binary.
//!
//! A fixture is a JSON document `{"schema": "phopf-fixture/1", "field": "Q" | "Fp:<p>", "objects": {..}}`
//! whose objects are tagged by `kind` and refer to each other by name. Scalars are exact strings and
//! structure constants are sorted sparse lists with zeros omitted.

mod commands;
mod render;
mod schema;

pub use commands::{
    check_object, describe, exit_code, run_build, run_check, run_pair, run_report, select, verdict_code, BuildRequest,
    CheckKind, Construction, PairKind, PairRequest,
};
pub use render::{normalized, pretty_json, render_reports, report_value, Format, REPORT_SCHEMA};
pub use schema::{load, save, Entry1, Entry2, Entry3, FixtureFile, Object, ObjectSpec, FIXTURE_SCHEMA};

#[cfg(test)]
mod tests;
