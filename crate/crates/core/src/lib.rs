//! Exact solver and verification toolkit for the isolation game on graphs.

pub mod game;
pub mod graph;
pub mod residual;
pub mod solver;
pub mod strategies;
pub mod verify;

pub use game::{GameState, GameTrace, Player};
pub use graph::{Graph, GraphError, VertexSet};
pub use residual::{compute_residual, ResidualGraph, Stage};
pub use solver::{game_value, optimal_moves, policy_vs_optimal, Policy, SolveError, SolveResult};
