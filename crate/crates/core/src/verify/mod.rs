//! Experiments that check the game values against closed forms, bounds and
//! strategy guarantees, producing self-certifying reports.

mod experiments;
pub mod formulas;
mod play;
mod report;
mod source;

pub use experiments::{
    extremal_d, extremal_report, extremal_s, fuzz, par_map, solve, sweep_connected, verify_cycles, verify_ghat,
    verify_paths, verify_trees, RunConfig, EXPECTED_CONNECTED_COUNTS, MAX_SWEEP_ORDER,
};
pub use play::{play_session, SessionSummary};
pub use report::{
    check, conjecture, formula, measure, quantity, Assertion, Check, CheckSpec, Quantity, Record, Relation, Report,
    Rhs, Summary,
};
pub use source::{random_graph, Instance, Source, UnionPool};

use thiserror::Error;

use crate::graph::GraphError;
use crate::solver::SolveError;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{0}")]
    Range(String),
    #[error("{0}")]
    Spec(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}
