//! Exact game values by memoized minimax.
//!
//! States are memoized on the white set rather than on `M = N[X]`: the
//! undominated vertices outside the white set are isolated in `G - M` and
//! stay irrelevant forever, so `(white, to_move)` carries exactly the same
//! information as `(M, to_move)` while merging more histories.

mod isolation;
mod policy;

pub use isolation::{is_isolating, isolation_number};
pub use policy::{checked_choice, play_against, play_policies, policy_vs_optimal, Policy, PolicyError, MAX_POLICY_VERTICES};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{annotate_trace, white_after, white_set, ArenaKind, GameError, GameState, GameTrace, Player};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by the exhaustive solver.
pub const MAX_SOLVE_VERTICES: usize = 24;
/// Orders up to this use a dense table indexed by the white set.
pub const DENSE_LIMIT: usize = 20;

const UNKNOWN: u8 = u8::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph order {n} exceeds the solver cap of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("state is terminal; there are no moves")]
    Terminal,
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Policy(#[from] PolicyError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub value: u32,
    pub principal_trace: GameTrace,
    pub states_visited: u64,
}

enum Memo {
    Dense(Vec<u8>),
    Sparse(FxHashMap<(u32, Player), u8>),
}

/// Memoized minimax for one graph. Values are move counts: Dominator
/// minimizes, Staller maximizes.
pub struct Solver<'g> {
    g: &'g Graph,
    memo: Memo,
    visited: u64,
}

impl<'g> Solver<'g> {
    pub fn new(g: &'g Graph) -> Result<Solver<'g>, SolveError> {
        let n = g.n();
        if n > MAX_SOLVE_VERTICES {
            return Err(SolveError::TooLarge { n, max: MAX_SOLVE_VERTICES });
        }
        let memo = if n <= DENSE_LIMIT {
            Memo::Dense(vec![UNKNOWN; 2usize << n])
        } else {
            Memo::Sparse(FxHashMap::default())
        };
        Ok(Solver { g, memo, visited: 0 })
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    /// Distinct non-terminal states expanded so far.
    pub fn states_visited(&self) -> u64 {
        self.visited
    }

    /// Optimal number of remaining moves from a state.
    pub fn value(&mut self, dominated: VertexSet, to_move: Player) -> u32 {
        let white = white_set(self.g, dominated);
        u32::from(self.solve(white, to_move))
    }

    /// Every legal move achieving the minimax value.
    pub fn optimal_moves(&mut self, dominated: VertexSet, to_move: Player) -> Result<VertexSet, SolveError> {
        let white = white_set(self.g, dominated);
        if white.is_empty() {
            return Err(SolveError::Terminal);
        }
        let target = self.solve(white, to_move);
        let mut out = VertexSet::EMPTY;
        for v in self.g.closed_nbr_of(white) {
            let next = white_after(self.g, white, self.g.closed_nbr(v));
            if 1 + self.solve(next, to_move.other()) == target {
                out.insert(v);
            }
        }
        Ok(out)
    }

    /// Optimal play from the empty position, lowest index first among optimal moves.
    pub fn principal_line(&mut self, first: Player) -> Vec<usize> {
        let mut moves = Vec::new();
        let mut state = GameState::start(first);
        while let Ok(opt) = self.optimal_moves(state.dominated, state.to_move) {
            let v = opt.first().expect("non-terminal states have an optimal move");
            moves.push(v);
            state = GameState { dominated: state.dominated | self.g.closed_nbr(v), to_move: state.to_move.other() };
        }
        moves
    }

    /// Memoized states where both players' values are known but differ by
    /// more than one.
    pub fn near_equality_violations(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        match &self.memo {
            Memo::Dense(t) => {
                for w in 0..t.len() / 2 {
                    let (d, s) = (t[2 * w], t[2 * w + 1]);
                    if d != UNKNOWN && s != UNKNOWN && d.abs_diff(s) > 1 {
                        out.push(VertexSet::from_bits(w as u32));
                    }
                }
            }
            Memo::Sparse(m) => {
                for (&(w, p), &d) in m {
                    if p == Player::Dominator {
                        if let Some(&s) = m.get(&(w, Player::Staller)) {
                            if d.abs_diff(s) > 1 {
                                out.push(VertexSet::from_bits(w));
                            }
                        }
                    }
                }
                out.sort();
            }
        }
        out
    }

    #[inline]
    fn lookup(&self, white: VertexSet, p: Player) -> u8 {
        match &self.memo {
            Memo::Dense(t) => t[dense_index(white, p)],
            Memo::Sparse(m) => m.get(&(white.bits(), p)).copied().unwrap_or(UNKNOWN),
        }
    }

    #[inline]
    fn store(&mut self, white: VertexSet, p: Player, value: u8) {
        match &mut self.memo {
            Memo::Dense(t) => t[dense_index(white, p)] = value,
            Memo::Sparse(m) => {
                m.insert((white.bits(), p), value);
            }
        }
    }

    fn solve(&mut self, white: VertexSet, p: Player) -> u8 {
        if white.is_empty() {
            return 0;
        }
        let cached = self.lookup(white, p);
        if cached != UNKNOWN {
            return cached;
        }
        self.visited += 1;
        let g = self.g;
        let mut best = match p {
            Player::Dominator => u8::MAX,
            Player::Staller => 0,
        };
        // moves that dominate the same white vertices lead to the same state
        let mut seen: [u32; 32] = [0; 32];
        let mut nseen = 0;
        for v in g.closed_nbr_of(white) {
            let hit = (g.closed_nbr(v) & white).bits();
            if seen[..nseen].contains(&hit) {
                continue;
            }
            seen[nseen] = hit;
            nseen += 1;
            let next = white_after(g, white, VertexSet::from_bits(hit));
            let val = 1 + self.solve(next, p.other());
            match p {
                Player::Dominator => {
                    if val < best {
                        best = val;
                        if best == 1 {
                            break;
                        }
                    }
                }
                Player::Staller => best = best.max(val),
            }
        }
        self.store(white, p, best);
        best
    }
}

#[inline]
fn dense_index(white: VertexSet, p: Player) -> usize {
    (white.bits() as usize) << 1 | (p == Player::Staller) as usize
}

/// `ι_g(G)` when `first` is Dominator, `ι_g'(G)` when it is Staller.
pub fn game_value(g: &Graph, first: Player) -> Result<SolveResult, SolveError> {
    let mut solver = Solver::new(g)?;
    let value = solver.value(VertexSet::EMPTY, first);
    let line = solver.principal_line(first);
    let principal_trace = annotate_trace(g, first, &line, ArenaKind::detect(g))?;
    debug_assert_eq!(line.len() as u32, value);
    Ok(SolveResult { value, principal_trace, states_visited: solver.states_visited() })
}

/// Both game values from one shared memo table: `(ι_g, ι_g')`.
pub fn game_values(g: &Graph) -> Result<(u32, u32), SolveError> {
    let mut solver = Solver::new(g)?;
    let d = solver.value(VertexSet::EMPTY, Player::Dominator);
    let s = solver.value(VertexSet::EMPTY, Player::Staller);
    Ok((d, s))
}

pub fn optimal_moves(g: &Graph, dominated: VertexSet, to_move: Player) -> Result<VertexSet, SolveError> {
    Solver::new(g)?.optimal_moves(dominated, to_move)
}
