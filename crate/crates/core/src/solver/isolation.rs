//! The classical isolation number by iterative deepening.
//!
//! Some vertex of `N[u] ∪ N[v]` must be chosen for every white edge `uv`,
//! so the search branches on the closed neighbourhood of one white edge at
//! a time. Deepening on the budget makes the first success optimal.

use crate::graph::{Graph, VertexSet};

use super::{SolveError, MAX_SOLVE_VERTICES};

pub fn is_isolating(g: &Graph, s: VertexSet) -> bool {
    g.is_independent(g.closed_nbr_of(s).complement(g.n()))
}

/// `ι(G)`: the minimum size of a set `S` with `V - N[S]` independent.
pub fn isolation_number(g: &Graph) -> Result<u32, SolveError> {
    let n = g.n();
    if n > MAX_SOLVE_VERTICES {
        return Err(SolveError::TooLarge { n, max: MAX_SOLVE_VERTICES });
    }
    for k in 0..=n as u32 {
        if search(g, VertexSet::EMPTY, VertexSet::EMPTY, k) {
            return Ok(k);
        }
    }
    unreachable!("V itself is isolating")
}

fn search(g: &Graph, chosen: VertexSet, banned: VertexSet, budget: u32) -> bool {
    let free = g.closed_nbr_of(chosen).complement(g.n());
    // edges of G - N[S]
    let Some(u) = free.iter().find(|&u| g.open_nbr(u).intersects(free)) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    let v = (g.open_nbr(u) & free).first().unwrap();
    let cands = (g.closed_nbr(u) | g.closed_nbr(v)) - banned;
    let mut banned = banned;
    for w in cands {
        if search(g, chosen.with(w), banned, budget - 1) {
            return true;
        }
        // solutions containing w were all explored in this branch
        banned.insert(w);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star};

    fn brute(g: &Graph) -> u32 {
        (0u32..1 << g.n())
            .map(VertexSet::from_bits)
            .filter(|&s| is_isolating(g, s))
            .map(|s| s.len() as u32)
            .min()
            .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(isolation_number(&path(3).unwrap()).unwrap(), 1);
        assert_eq!(isolation_number(&complete(1).unwrap()).unwrap(), 0);
        assert_eq!(isolation_number(&cycle(6).unwrap()).unwrap(), 2);
        assert_eq!(isolation_number(&star(6).unwrap()).unwrap(), 1);
    }

    #[test]
    fn matches_subset_oracle() {
        for n in 1..=6 {
            for g in crate::graph::enumerate_connected(n).unwrap() {
                assert_eq!(isolation_number(&g).unwrap(), brute(&g), "{g:?}");
            }
        }
        for n in [7, 10, 11, 12] {
            assert_eq!(isolation_number(&path(n).unwrap()).unwrap(), brute(&path(n).unwrap()));
            assert_eq!(isolation_number(&cycle(n).unwrap()).unwrap(), brute(&cycle(n).unwrap()));
        }
    }
}
