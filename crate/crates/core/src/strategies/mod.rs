//! Deterministic player strategies. Ties always go to the lowest index.

mod ghat;
mod tree;

pub use ghat::{GhatDominator, GhatStaller};
pub use tree::{audit_tree_strategy, TreeAudit, TreeResidualDominator};

use crate::game::{white_after, white_set, GameState, Player};
use crate::graph::{Graph, VertexSet};
use crate::solver::{Policy, PolicyError};

/// Playable vertices whose move ends the game, given the white set.
pub fn finishing_moves(g: &Graph, white: VertexSet) -> VertexSet {
    g.closed_nbr_of(white).iter().filter(|&v| white_after(g, white, g.closed_nbr(v)).is_empty()).collect()
}

fn terminal_error(name: String) -> PolicyError {
    PolicyError::Defect { policy: name, reason: "asked to move in a finished game".into() }
}

/// Plays a vertex that marks the most new vertices, where a vertex is
/// marked once it or all of its neighbours are dominated.
#[derive(Clone, Copy, Debug, Default)]
pub struct GreedyDominator;

impl Policy for GreedyDominator {
    type Memory = ();

    fn name(&self) -> String {
        "greedy_dominator".into()
    }

    fn init(&self, _: &Graph, _: Player) -> Result<(), PolicyError> {
        Ok(())
    }

    fn choose(&self, g: &Graph, state: &GameState, _: &()) -> Result<usize, PolicyError> {
        // unmarked vertices are exactly the white ones
        let white = white_set(g, state.dominated);
        let mut best: Option<(usize, usize)> = None;
        for v in g.closed_nbr_of(white) {
            let gain = white.len() - white_after(g, white, g.closed_nbr(v)).len();
            if best.map_or(true, |(_, b)| gain > b) {
                best = Some((v, gain));
            }
        }
        best.map(|b| b.0).ok_or_else(|| terminal_error(self.name()))
    }
}

/// Staller on a path or cycle: always extend an existing run of played
/// vertices. On an empty board she opens at vertex 0.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunStaller;

impl Policy for RunStaller {
    /// Played vertices.
    type Memory = VertexSet;

    fn name(&self) -> String {
        "run_staller".into()
    }

    fn init(&self, g: &Graph, _: Player) -> Result<VertexSet, PolicyError> {
        if !g.is_index_path() && !g.is_index_cycle() {
            return Err(PolicyError::ArenaMismatch { policy: self.name(), reason: "not a path or cycle in index order".into() });
        }
        Ok(VertexSet::EMPTY)
    }

    fn choose(&self, g: &Graph, state: &GameState, played: &VertexSet) -> Result<usize, PolicyError> {
        let options = g.closed_nbr_of(white_set(g, state.dominated));
        if options.is_empty() {
            return Err(terminal_error(self.name()));
        }
        if played.is_empty() {
            return options.first().ok_or_else(|| terminal_error(self.name()));
        }
        (options & (g.closed_nbr_of(*played) - *played)).first().ok_or_else(|| PolicyError::Defect {
            policy: self.name(),
            reason: "no playable vertex next to a played one".into(),
        })
    }

    fn observe(&self, _: &Graph, _: &GameState, v: usize, played: &mut VertexSet) -> Result<(), PolicyError> {
        played.insert(v);
        Ok(())
    }
}

/// Dominator on a path or cycle: play `v_i` when `v_{i-4}` is played and
/// `v_{i-3}, v_{i-2}, v_{i-1}` are not. A move that ends the game is
/// always preferred. Opening moves are vertex 0 on a cycle and vertex 2
/// on a path.
#[derive(Clone, Copy, Debug)]
pub struct WindowDominator {
    cyclic: bool,
}

pub fn cycle_dominator() -> WindowDominator {
    WindowDominator { cyclic: true }
}

pub fn path_dominator() -> WindowDominator {
    WindowDominator { cyclic: false }
}

impl WindowDominator {
    /// Lowest window vertex that is playable.
    pub fn window_move(&self, g: &Graph, options: VertexSet, played: VertexSet) -> Option<usize> {
        let n = g.n() as isize;
        options.iter().find(|&i| {
            let at = |k: isize| -> Option<usize> {
                let j = i as isize - k;
                if self.cyclic {
                    Some(j.rem_euclid(n) as usize)
                } else if j >= 0 {
                    Some(j as usize)
                } else {
                    None
                }
            };
            at(4).is_some_and(|anchor| played.contains(anchor))
                && (1..=3).all(|k| at(k).is_some_and(|u| !played.contains(u)))
        })
    }
}

impl Policy for WindowDominator {
    type Memory = VertexSet;

    fn name(&self) -> String {
        if self.cyclic { "cycle_dominator" } else { "path_dominator" }.into()
    }

    fn init(&self, g: &Graph, _: Player) -> Result<VertexSet, PolicyError> {
        let ok = if self.cyclic { g.is_index_cycle() } else { g.is_index_path() };
        if !ok {
            let want = if self.cyclic { "cycle" } else { "path" };
            return Err(PolicyError::ArenaMismatch { policy: self.name(), reason: format!("not a {want} in index order") });
        }
        Ok(VertexSet::EMPTY)
    }

    fn choose(&self, g: &Graph, state: &GameState, played: &VertexSet) -> Result<usize, PolicyError> {
        let white = white_set(g, state.dominated);
        let options = g.closed_nbr_of(white);
        if options.is_empty() {
            return Err(terminal_error(self.name()));
        }
        if let Some(v) = finishing_moves(g, white).first() {
            return Ok(v);
        }
        if played.is_empty() {
            let open = if self.cyclic { 0 } else { 2 };
            if options.contains(open) {
                return Ok(open);
            }
        }
        Ok(self.window_move(g, options, *played).unwrap_or_else(|| options.first().unwrap()))
    }

    fn observe(&self, _: &Graph, _: &GameState, v: usize, played: &mut VertexSet) -> Result<(), PolicyError> {
        played.insert(v);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{annotate_trace, ArenaKind};
    use crate::graph::{cycle, path, star};
    use crate::solver::{game_value, play_against, policy_vs_optimal};

    #[test]
    fn greedy_star_and_p5() {
        let g = star(5).unwrap();
        assert_eq!(GreedyDominator.choose(&g, &GameState::start(Player::Dominator), &()).unwrap(), 0);
        let p5 = path(5).unwrap();
        assert_eq!(GreedyDominator.choose(&p5, &GameState::start(Player::Dominator), &()).unwrap(), 2);
    }

    #[test]
    fn greedy_drop_in_last_k2_is_two() {
        // dominated {5,0,1,2} leaves the white K2 {3,4}
        let g = cycle(6).unwrap();
        let m = g.closed_nbr(0) | g.closed_nbr(1);
        let white = white_set(&g, m);
        assert_eq!(white.len(), 2);
        let v = GreedyDominator.choose(&g, &GameState { dominated: m, to_move: Player::Dominator }, &()).unwrap();
        assert_eq!(white.len() - white_after(&g, white, g.closed_nbr(v)).len(), 2);
    }

    #[test]
    fn greedy_vs_optimal_c6() {
        let g = cycle(6).unwrap();
        assert_eq!(policy_vs_optimal(&g, &GreedyDominator, Player::Dominator, Player::Dominator).unwrap().value, 3);
    }

    #[test]
    fn run_staller_openings() {
        let p9 = path(9).unwrap();
        let mem = RunStaller.init(&p9, Player::Staller).unwrap();
        assert_eq!(RunStaller.choose(&p9, &GameState::start(Player::Staller), &mem).unwrap(), 0);

        let c10 = cycle(10).unwrap();
        let state = GameState { dominated: c10.closed_nbr(0), to_move: Player::Staller };
        assert_eq!(RunStaller.choose(&c10, &state, &VertexSet::singleton(0)).unwrap(), 1);
    }

    #[test]
    fn run_staller_keeps_run_count() {
        let g = cycle(13).unwrap();
        let mut rng = 7u64;
        for _ in 0..50 {
            let moves = play_against(&g, &RunStaller, Player::Staller, Player::Dominator, |_, opts| {
                rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let k = (rng >> 33) as usize % opts.len();
                opts.iter().nth(k).unwrap()
            })
            .unwrap();
            let tr = annotate_trace(&g, Player::Dominator, &moves, ArenaKind::Cycle).unwrap();
            assert!(tr.runs.as_ref().unwrap().len() <= tr.moves_by(Player::Dominator));
        }
    }

    #[test]
    fn window_move_on_c10() {
        let g = cycle(10).unwrap();
        let d = cycle_dominator();
        let played = VertexSet::from_iter([0, 1]);
        let m = g.closed_nbr_of(played);
        assert_eq!(d.choose(&g, &GameState { dominated: m, to_move: Player::Dominator }, &played).unwrap(), 5);
        assert_eq!(d.choose(&g, &GameState::start(Player::Dominator), &VertexSet::EMPTY).unwrap(), 0);
    }

    #[test]
    fn path_dominator_opens_at_two() {
        let g = path(10).unwrap();
        let d = path_dominator();
        assert_eq!(d.choose(&g, &GameState::start(Player::Dominator), &VertexSet::EMPTY).unwrap(), 2);
    }

    #[test]
    fn arena_mismatch() {
        let g = path(6).unwrap();
        assert!(matches!(cycle_dominator().init(&g, Player::Dominator), Err(PolicyError::ArenaMismatch { .. })));
        assert!(matches!(RunStaller.init(&star(3).unwrap(), Player::Dominator), Err(PolicyError::ArenaMismatch { .. })));
    }

    #[test]
    fn window_dominator_matches_cycle_values() {
        for n in 6..=16 {
            let g = cycle(n).unwrap();
            for first in [Player::Dominator, Player::Staller] {
                let opt = game_value(&g, first).unwrap().value;
                let pol = policy_vs_optimal(&g, &cycle_dominator(), Player::Dominator, first).unwrap().value;
                assert_eq!(pol, opt, "n={n} first={first}");
            }
        }
    }
}
