//! Fixed strategies and their evaluation against an optimal opponent.

use std::hash::Hash;

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::game::{annotate_trace, white_set, ArenaKind, GameState, GameTrace, Player};
use crate::graph::{Graph, VertexSet};

use super::{SolveError, SolveResult};

/// Largest order accepted by [`policy_vs_optimal`]. One side is fixed, so
/// the reachable state space is far smaller than for a full solve.
pub const MAX_POLICY_VERTICES: usize = 28;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolicyError {
    #[error("{policy} chose vertex {vertex}, which is not playable")]
    IllegalChoice { policy: String, vertex: usize },
    #[error("{policy} cannot play on this arena: {reason}")]
    ArenaMismatch { policy: String, reason: String },
    #[error("{policy}: {reason}")]
    Defect { policy: String, reason: String },
}

/// A deterministic strategy with private memory.
///
/// `observe` is called for every move of either player, with the state
/// before the move, so memory can track history that `M` forgets.
pub trait Policy {
    type Memory: Clone + Eq + Hash;

    fn name(&self) -> String;

    fn init(&self, g: &Graph, first: Player) -> Result<Self::Memory, PolicyError>;

    /// A playable vertex for the player to move in `state`.
    fn choose(&self, g: &Graph, state: &GameState, memory: &Self::Memory) -> Result<usize, PolicyError>;

    fn observe(&self, _g: &Graph, _state: &GameState, _v: usize, _memory: &mut Self::Memory) -> Result<(), PolicyError> {
        Ok(())
    }
}

/// Asks `policy` for a move and checks that it is legal.
pub fn checked_choice<P: Policy>(g: &Graph, policy: &P, state: &GameState, memory: &P::Memory) -> Result<usize, PolicyError> {
    let v = policy.choose(g, state, memory)?;
    if v >= g.n() || !g.closed_nbr(v).intersects(white_set(g, state.dominated)) {
        return Err(PolicyError::IllegalChoice { policy: policy.name(), vertex: v });
    }
    Ok(v)
}

struct Search<'a, P: Policy> {
    g: &'a Graph,
    policy: &'a P,
    who: Player,
    memo: FxHashMap<(u32, Player, P::Memory), u8>,
}

impl<P: Policy> Search<'_, P> {
    fn value(&mut self, state: GameState, mem: &P::Memory) -> Result<u8, SolveError> {
        let white = white_set(self.g, state.dominated);
        if white.is_empty() {
            return Ok(0);
        }
        let key = (state.dominated.bits(), state.to_move, mem.clone());
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let best = if state.to_move == self.who {
            let v = checked_choice(self.g, self.policy, &state, mem)?;
            1 + self.child(state, mem, v)?
        } else {
            let mut best: Option<u8> = None;
            for v in self.g.closed_nbr_of(white) {
                let val = 1 + self.child(state, mem, v)?;
                best = Some(match (best, state.to_move) {
                    (None, _) => val,
                    (Some(b), Player::Dominator) => b.min(val),
                    (Some(b), Player::Staller) => b.max(val),
                });
                if state.to_move == Player::Dominator && val == 1 {
                    break;
                }
            }
            best.expect("non-terminal states have a move")
        };
        self.memo.insert(key, best);
        Ok(best)
    }

    fn child(&mut self, state: GameState, mem: &P::Memory, v: usize) -> Result<u8, SolveError> {
        let mut next_mem = mem.clone();
        self.policy.observe(self.g, &state, v, &mut next_mem)?;
        let next = GameState { dominated: state.dominated | self.g.closed_nbr(v), to_move: state.to_move.other() };
        self.value(next, &next_mem)
    }
}

/// Value of the game in which `policy_player` follows `policy` and the
/// opponent plays optimally. Bounds `game_value` from above for a
/// Dominator policy and from below for a Staller policy.
pub fn policy_vs_optimal<P: Policy>(
    g: &Graph,
    policy: &P,
    policy_player: Player,
    first: Player,
) -> Result<SolveResult, SolveError> {
    let n = g.n();
    if n > MAX_POLICY_VERTICES {
        return Err(SolveError::TooLarge { n, max: MAX_POLICY_VERTICES });
    }
    let mut search = Search { g, policy, who: policy_player, memo: FxHashMap::default() };
    let mem0 = policy.init(g, first)?;
    let value = search.value(GameState::start(first), &mem0)?;

    let mut moves = Vec::new();
    let mut state = GameState::start(first);
    let mut mem = mem0;
    let mut remaining = value;
    while remaining > 0 {
        let v = if state.to_move == policy_player {
            checked_choice(g, policy, &state, &mem)?
        } else {
            let white = white_set(g, state.dominated);
            let mut pick = None;
            for v in g.closed_nbr_of(white) {
                if search.child(state, &mem, v)? + 1 == remaining {
                    pick = Some(v);
                    break;
                }
            }
            pick.expect("an optimal reply exists")
        };
        policy.observe(g, &state, v, &mut mem)?;
        moves.push(v);
        state = GameState { dominated: state.dominated | g.closed_nbr(v), to_move: state.to_move.other() };
        remaining -= 1;
    }
    let principal_trace = annotate_trace(g, first, &moves, ArenaKind::detect(g))?;
    Ok(SolveResult { value: u32::from(value), principal_trace, states_visited: search.memo.len() as u64 })
}

/// Plays two policies against each other. Both see every move.
pub fn play_policies<D: Policy, S: Policy>(
    g: &Graph,
    first: Player,
    dominator: &D,
    staller: &S,
) -> Result<GameTrace, SolveError> {
    let mut dm = dominator.init(g, first)?;
    let mut sm = staller.init(g, first)?;
    let mut state = GameState::start(first);
    let mut moves = Vec::new();
    while !white_set(g, state.dominated).is_empty() {
        let v = match state.to_move {
            Player::Dominator => checked_choice(g, dominator, &state, &dm)?,
            Player::Staller => checked_choice(g, staller, &state, &sm)?,
        };
        dominator.observe(g, &state, v, &mut dm)?;
        staller.observe(g, &state, v, &mut sm)?;
        moves.push(v);
        state = GameState { dominated: state.dominated | g.closed_nbr(v), to_move: state.to_move.other() };
    }
    Ok(annotate_trace(g, first, &moves, ArenaKind::detect(g))?)
}

/// Plays `policy` for `policy_player` against an arbitrary opponent that
/// picks from the playable set. Returns the move sequence.
pub fn play_against<P: Policy>(
    g: &Graph,
    policy: &P,
    policy_player: Player,
    first: Player,
    mut opponent: impl FnMut(&GameState, VertexSet) -> usize,
) -> Result<Vec<usize>, SolveError> {
    let mut mem = policy.init(g, first)?;
    let mut state = GameState::start(first);
    let mut moves = Vec::new();
    loop {
        let white = white_set(g, state.dominated);
        if white.is_empty() {
            return Ok(moves);
        }
        let v = if state.to_move == policy_player {
            checked_choice(g, policy, &state, &mem)?
        } else {
            let options = g.closed_nbr_of(white);
            let v = opponent(&state, options);
            assert!(options.contains(v), "opponent must pick a playable vertex");
            v
        };
        policy.observe(g, &state, v, &mut mem)?;
        moves.push(v);
        state = GameState { dominated: state.dominated | g.closed_nbr(v), to_move: state.to_move.other() };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};
    use crate::solver::game_value;

    /// Always the lowest playable vertex.
    struct Lowest;

    impl Policy for Lowest {
        type Memory = ();
        fn name(&self) -> String {
            "lowest".into()
        }
        fn init(&self, _: &Graph, _: Player) -> Result<(), PolicyError> {
            Ok(())
        }
        fn choose(&self, g: &Graph, state: &GameState, _: &()) -> Result<usize, PolicyError> {
            Ok(crate::game::playable(g, state.dominated).first().unwrap())
        }
    }

    /// Plays vertex 0 forever.
    struct Stuck;

    impl Policy for Stuck {
        type Memory = ();
        fn name(&self) -> String {
            "stuck".into()
        }
        fn init(&self, _: &Graph, _: Player) -> Result<(), PolicyError> {
            Ok(())
        }
        fn choose(&self, _: &Graph, _: &GameState, _: &()) -> Result<usize, PolicyError> {
            Ok(0)
        }
    }

    #[test]
    fn sandwich_for_both_sides() {
        for n in 4..=11 {
            let g = cycle(n).unwrap();
            for first in [Player::Dominator, Player::Staller] {
                let opt = game_value(&g, first).unwrap().value;
                let d = policy_vs_optimal(&g, &Lowest, Player::Dominator, first).unwrap();
                let s = policy_vs_optimal(&g, &Lowest, Player::Staller, first).unwrap();
                assert!(d.value >= opt && s.value <= opt);
                assert_eq!(d.principal_trace.t() as u32, d.value);
            }
        }
    }

    #[test]
    fn illegal_choice_is_reported() {
        let g = path(5).unwrap();
        let err = policy_vs_optimal(&g, &Stuck, Player::Staller, Player::Dominator).unwrap_err();
        assert!(matches!(err, SolveError::Policy(PolicyError::IllegalChoice { vertex: 0, .. })));
    }

    #[test]
    fn self_play_terminates() {
        let g = cycle(9).unwrap();
        let tr = play_policies(&g, Player::Staller, &Lowest, &Lowest).unwrap();
        assert!(tr.t() >= 1);
        assert!(crate::game::is_terminal(&g, g.closed_nbr_of(tr.played())));
    }
}
