//! Text play against the exact solver.

use std::io::{self, BufRead, Write};

use serde::Serialize;

use crate::game::{apply, playable, GameState, Player};
use crate::graph::{Graph, VertexSet};
use crate::residual::compute_residual;
use crate::solver::{Solver, SolveError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SessionSummary {
    pub moves: Vec<usize>,
    /// The game reached a terminal position.
    pub finished: bool,
    pub iota_g: u32,
    pub iota_g_prime: u32,
}

fn list(s: VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Plays one game: the human takes `human`, the solver answers with the
/// lowest-index optimal move. Ends at a terminal position, on `quit`, or
/// at end of input.
pub fn play_session<R: BufRead, W: Write>(
    g: &Graph,
    human: Player,
    first: Player,
    mut input: R,
    mut out: W,
) -> io::Result<SessionSummary> {
    let mut solver = Solver::new(g).map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e))?;
    let iota_g = solver.value(VertexSet::EMPTY, Player::Dominator);
    let iota_g_prime = solver.value(VertexSet::EMPTY, Player::Staller);
    writeln!(out, "isolation game on {} vertices; you are {human}, {first} moves first", g.n())?;
    writeln!(out, "colours by vertex: W white, B blue, R red")?;
    let mut state = GameState::start(first);
    let mut moves = Vec::new();
    let mut played = VertexSet::EMPTY;
    let mut line = String::new();
    loop {
        let options = playable(g, state.dominated);
        if options.is_empty() {
            break;
        }
        writeln!(out, "colours {}  played {}", compute_residual(g, played).render(g.n()), list_moves(&moves))?;
        writeln!(out, "move {}: {} to play; playable: {}", moves.len() + 1, state.to_move, list(options))?;
        let v = if state.to_move == human {
            write!(out, "your move (vertex or quit)> ")?;
            out.flush()?;
            line.clear();
            if input.read_line(&mut line)? == 0 {
                writeln!(out)?;
                break;
            }
            let text = line.trim();
            if text.eq_ignore_ascii_case("quit") || text.eq_ignore_ascii_case("q") {
                break;
            }
            match text.parse::<usize>() {
                Ok(v) if options.contains(v) => v,
                Ok(v) if v < g.n() => {
                    writeln!(out, "vertex {v} is not playable: its closed neighbourhood has no white vertex")?;
                    continue;
                }
                Ok(v) => {
                    writeln!(out, "vertex {v} is not playable: the graph has vertices 0..{}", g.n() - 1)?;
                    continue;
                }
                Err(_) => {
                    writeln!(out, "expected a vertex number or quit, got {text:?}")?;
                    continue;
                }
            }
        } else {
            let best = solver.optimal_moves(state.dominated, state.to_move).map_err(other)?;
            let v = best.first().expect("non-terminal positions have an optimal move");
            writeln!(out, "{} plays {v}", state.to_move)?;
            v
        };
        state = apply(g, &state, v).map_err(|e| other(e.into()))?;
        played.insert(v);
        moves.push(v);
    }
    let finished = playable(g, state.dominated).is_empty();
    writeln!(out, "{} after {} moves: {}", if finished { "game over" } else { "stopped" }, moves.len(), list_moves(&moves))?;
    let value = if first == Player::Dominator { iota_g } else { iota_g_prime };
    writeln!(out, "optimal play takes {value} moves (iota_g = {iota_g}, iota_g' = {iota_g_prime})")?;
    out.flush()?;
    Ok(SessionSummary { moves, finished, iota_g, iota_g_prime })
}

fn list_moves(m: &[usize]) -> String {
    m.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn other(e: SolveError) -> io::Error {
    io::Error::new(io::ErrorKind::Other, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    fn run(input: &str, human: Player, first: Player) -> (SessionSummary, String) {
        let g = cycle(6).unwrap();
        let mut out = Vec::new();
        let s = play_session(&g, human, first, input.as_bytes(), &mut out).unwrap();
        (s, String::from_utf8(out).unwrap())
    }

    #[test]
    fn optimal_human_staller_gets_two() {
        let (s, text) = run("0\n0\n", Player::Staller, Player::Staller);
        assert!(s.finished);
        assert_eq!(s.moves.len(), 2);
        assert!(text.contains("game over after 2 moves"));
    }

    #[test]
    fn any_human_staller_total_at_most_three() {
        for first in 0..6 {
            let input = format!("{first}\n0\n1\n2\n3\n4\n5\n");
            let (s, _) = run(&input, Player::Staller, Player::Staller);
            assert!(s.finished && s.moves.len() <= 3);
        }
    }

    #[test]
    fn illegal_then_quit() {
        let g = cycle(6).unwrap();
        let mut out = Vec::new();
        let s = play_session(&g, Player::Dominator, Player::Dominator, "9\nx\nquit\n".as_bytes(), &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("vertex 9 is not playable"));
        assert!(text.contains("expected a vertex number"));
        assert!(!s.finished && s.moves.is_empty());
        assert!(text.contains("stopped after 0 moves"));
    }

    #[test]
    fn eof_ends_session() {
        let (s, text) = run("", Player::Dominator, Player::Dominator);
        assert!(!s.finished);
        assert!(text.contains("iota_g = 3"));
    }
}
