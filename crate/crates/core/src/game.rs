//! Rules of the isolation game.
//!
//! A state is the set `M = N[X]` of vertices dominated by the played set `X`
//! plus the player to move. A vertex is *white* when it is undominated and
//! still has an undominated neighbour, i.e. it lies in a nontrivial
//! component of `G - M`. A move is legal exactly when it dominates a white
//! vertex, and the game ends when no white vertex remains.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Player {
    Dominator,
    Staller,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Dominator => Player::Staller,
            Player::Staller => Player::Dominator,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Player::Dominator => 'D',
            Player::Staller => 'S',
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Dominator => "Dominator",
            Player::Staller => "Staller",
        })
    }
}

impl FromStr for Player {
    type Err = String;

    fn from_str(s: &str) -> Result<Player, String> {
        match s.to_ascii_lowercase().as_str() {
            "d" | "dominator" => Ok(Player::Dominator),
            "s" | "staller" => Ok(Player::Staller),
            other => Err(format!("unknown player {other:?} (expected D or S)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("vertex {v} is not playable: {reason}")]
    IllegalMove { v: usize, reason: &'static str },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct GameState {
    pub dominated: VertexSet,
    pub to_move: Player,
}

impl GameState {
    pub fn start(first: Player) -> GameState {
        GameState { dominated: VertexSet::EMPTY, to_move: first }
    }
}

/// Undominated vertices with at least one undominated neighbour.
pub fn white_set(g: &Graph, dominated: VertexSet) -> VertexSet {
    let free = dominated.complement(g.n());
    free.iter().filter(|&u| g.open_nbr(u).intersects(free)).collect()
}

/// White vertices after additionally dominating `nbhd`, given the current
/// white set. Undominated vertices outside the white set are isolated in
/// `G - M` and can never become white again, so the white set alone
/// determines every future of the game.
#[inline]
pub fn white_after(g: &Graph, white: VertexSet, nbhd: VertexSet) -> VertexSet {
    let rest = white - nbhd;
    rest.iter().filter(|&u| g.open_nbr(u).intersects(rest)).collect()
}

/// Vertices whose closed neighbourhood meets a white vertex, given the white set.
#[inline]
pub fn playable_from_white(g: &Graph, white: VertexSet) -> VertexSet {
    g.closed_nbr_of(white)
}

pub fn playable(g: &Graph, dominated: VertexSet) -> VertexSet {
    playable_from_white(g, white_set(g, dominated))
}

pub fn is_terminal(g: &Graph, dominated: VertexSet) -> bool {
    white_set(g, dominated).is_empty()
}

pub fn apply(g: &Graph, state: &GameState, v: usize) -> Result<GameState, GameError> {
    if v >= g.n() {
        return Err(GameError::IllegalMove { v, reason: "no such vertex" });
    }
    if !g.closed_nbr(v).intersects(white_set(g, state.dominated)) {
        return Err(GameError::IllegalMove { v, reason: "it dominates no vertex of a nontrivial residual component" });
    }
    Ok(GameState { dominated: state.dominated | g.closed_nbr(v), to_move: state.to_move.other() })
}

/// Dominated vertices together with those whose neighbours are all dominated.
pub fn marked_set(g: &Graph, dominated: VertexSet) -> VertexSet {
    let extra: VertexSet = (0..g.n()).filter(|&v| g.open_nbr(v).is_subset(dominated)).collect();
    dominated | extra
}

/// How played vertices are grouped into runs, if at all.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ArenaKind {
    General,
    /// The path `0 - 1 - ... - (n-1)`.
    Path,
    /// The cycle `0 - 1 - ... - (n-1) - 0`.
    Cycle,
}

impl ArenaKind {
    pub fn detect(g: &Graph) -> ArenaKind {
        if g.is_index_cycle() {
            ArenaKind::Cycle
        } else if g.is_index_path() {
            ArenaKind::Path
        } else {
            ArenaKind::General
        }
    }
}

/// A played game with per-move statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameTrace {
    pub first: Player,
    pub moves: Vec<usize>,
    /// Weight decrease caused by each move.
    pub xi: Vec<i64>,
    /// Number of vertices that stop being playable with each move.
    pub unplayable: Vec<usize>,
    /// Prefix sums of `unplayable`.
    pub unplayable_total: Vec<usize>,
    /// Maximal runs of consecutive played vertices (path and cycle arenas).
    pub runs: Option<Vec<Vec<usize>>>,
}

impl GameTrace {
    pub fn t(&self) -> usize {
        self.moves.len()
    }

    pub fn mover(&self, i: usize) -> Player {
        if i % 2 == 0 {
            self.first
        } else {
            self.first.other()
        }
    }

    pub fn played(&self) -> VertexSet {
        self.moves.iter().copied().collect()
    }

    pub fn moves_by(&self, p: Player) -> usize {
        (0..self.t()).filter(|&i| self.mover(i) == p).count()
    }
}

/// Annotates a legal move sequence, measuring weight as the number of
/// unmarked vertices.
pub fn annotate_trace(g: &Graph, first: Player, moves: &[usize], arena: ArenaKind) -> Result<GameTrace, GameError> {
    annotate_trace_with(g, first, moves, arena, |state, _| white_set(g, state.dominated).len() as i64)
}

/// Annotates a legal move sequence; `weight` is evaluated on the initial
/// state and after every prefix of `moves`.
pub fn annotate_trace_with(
    g: &Graph,
    first: Player,
    moves: &[usize],
    arena: ArenaKind,
    mut weight: impl FnMut(&GameState, &[usize]) -> i64,
) -> Result<GameTrace, GameError> {
    let mut state = GameState::start(first);
    let mut w = weight(&state, &[]);
    let mut p = playable(g, state.dominated);
    let mut xi = Vec::with_capacity(moves.len());
    let mut unplayable = Vec::with_capacity(moves.len());
    let mut totals = Vec::with_capacity(moves.len());
    let mut total = 0;
    for (i, &v) in moves.iter().enumerate() {
        state = apply(g, &state, v)?;
        let w2 = weight(&state, &moves[..=i]);
        let p2 = playable(g, state.dominated);
        debug_assert!(p2.is_subset(p));
        xi.push(w - w2);
        unplayable.push((p - p2).len());
        total += (p - p2).len();
        totals.push(total);
        w = w2;
        p = p2;
    }
    let played: VertexSet = moves.iter().copied().collect();
    let runs = match arena {
        ArenaKind::General => None,
        ArenaKind::Path => Some(runs_along(g.n(), played, false)),
        ArenaKind::Cycle => Some(runs_along(g.n(), played, true)),
    };
    Ok(GameTrace { first, moves: moves.to_vec(), xi, unplayable, unplayable_total: totals, runs })
}

/// Maximal blocks of consecutive members of `played` along `0..n`,
/// wrapping around when `cyclic`.
pub fn runs_along(n: usize, played: VertexSet, cyclic: bool) -> Vec<Vec<usize>> {
    if played.is_empty() {
        return Vec::new();
    }
    if played.len() == n {
        return vec![(0..n).collect()];
    }
    // start scanning just after an unplayed vertex so no run is split
    let start = if cyclic { (0..n).find(|&v| !played.contains(v)).unwrap() + 1 } else { 0 };
    let mut runs = Vec::new();
    let mut current = Vec::new();
    for k in 0..n {
        let v = (start + k) % n;
        if played.contains(v) {
            current.push(v);
        } else if !current.is_empty() {
            runs.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        runs.push(current);
    }
    runs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn white_set_examples() {
        let p5 = path(5).unwrap();
        assert_eq!(white_set(&p5, set(&[0, 1])), set(&[2, 3, 4]));
        let c4 = cycle(4).unwrap();
        assert_eq!(white_set(&c4, set(&[3, 0, 1])), VertexSet::EMPTY);
        assert_eq!(white_set(&p5, p5.vertices()), VertexSet::EMPTY);
    }

    #[test]
    fn playable_examples() {
        let c4 = cycle(4).unwrap();
        assert_eq!(playable(&c4, VertexSet::EMPTY), c4.vertices());
        assert_eq!(playable(&c4, c4.closed_nbr(0)), VertexSet::EMPTY);
        let p5 = path(5).unwrap();
        // white after N[v0] is {v2,v3,v4}; vertices seeing it: v1..v4
        assert_eq!(playable(&p5, p5.closed_nbr(0)), set(&[1, 2, 3, 4]));
    }

    #[test]
    fn terminal_examples() {
        let p5 = path(5).unwrap();
        assert!(is_terminal(&p5, p5.closed_nbr(2)));
        assert!(!is_terminal(&cycle(6).unwrap(), VertexSet::EMPTY));
        assert!(is_terminal(&complete(1).unwrap(), VertexSet::EMPTY));
    }

    #[test]
    fn apply_examples() {
        let c6 = cycle(6).unwrap();
        let s = apply(&c6, &GameState::start(Player::Dominator), 0).unwrap();
        assert_eq!(s.dominated, set(&[5, 0, 1]));
        assert_eq!(s.to_move, Player::Staller);

        let c4 = cycle(4).unwrap();
        let st = GameState { dominated: c4.closed_nbr(0), to_move: Player::Staller };
        assert!(matches!(apply(&c4, &st, 2), Err(GameError::IllegalMove { v: 2, .. })));

        let p5 = path(5).unwrap();
        let s = apply(&p5, &GameState::start(Player::Dominator), 2).unwrap();
        assert!(is_terminal(&p5, s.dominated));
    }

    #[test]
    fn marked_set_examples() {
        let p5 = path(5).unwrap();
        assert_eq!(marked_set(&p5, set(&[0, 1])), set(&[0, 1]));
        let p3 = path(3).unwrap();
        assert_eq!(marked_set(&p3, set(&[0, 1])), set(&[0, 1, 2]));
    }

    #[test]
    fn marked_is_complement_of_white() {
        let g = crate::graph::family_f(5, None).unwrap();
        for bits in 0..(1u32 << g.n()) {
            let m = g.closed_nbr_of(VertexSet::from_bits(bits));
            assert_eq!(marked_set(&g, m), white_set(&g, m).complement(g.n()));
        }
    }

    #[test]
    fn greedy_first_move_marks_delta_plus_one() {
        let g = crate::graph::star(5).unwrap();
        let before = g.n() - marked_set(&g, VertexSet::EMPTY).len();
        let after = g.n() - marked_set(&g, g.closed_nbr(0)).len();
        assert_eq!(before - after, g.max_degree() + 1);
    }

    #[test]
    fn runs_on_cycle_wrap() {
        assert_eq!(runs_along(10, set(&[9, 0, 1, 5]), true), vec![vec![5], vec![9, 0, 1]]);
        assert_eq!(runs_along(10, set(&[9, 0, 1, 5]), false), vec![vec![0, 1], vec![5], vec![9]]);
        assert_eq!(runs_along(3, set(&[0, 1, 2]), true), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn trace_counts_c6_first_move() {
        let c6 = cycle(6).unwrap();
        let tr = annotate_trace(&c6, Player::Dominator, &[0], ArenaKind::Cycle).unwrap();
        assert_eq!(tr.unplayable, vec![1]);
    }

    #[test]
    fn trace_counts_window_move_on_c10() {
        // S-game: Staller opens at 0, Dominator answers with the window vertex 4.
        let c10 = cycle(10).unwrap();
        let tr = annotate_trace(&c10, Player::Staller, &[0, 4], ArenaKind::Cycle).unwrap();
        assert_eq!(tr.unplayable[0], 1);
        assert!(tr.unplayable[1] >= 4);
    }

    #[test]
    fn trace_rejects_illegal_sequence() {
        let p5 = path(5).unwrap();
        assert!(annotate_trace(&p5, Player::Dominator, &[2, 0], ArenaKind::Path).is_err());
    }
}
