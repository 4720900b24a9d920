//! Brute-force canonical labelling for small graphs.
//!
//! Vertices are first split into cells by iterated degree refinement, which
//! is invariant under isomorphism. Among all labellings that list the cells
//! in refinement order, the one whose upper-triangle adjacency bit string
//! (graph6 column order) is lexicographically smallest is chosen. The search
//! is a depth-first branch and bound over positions, pruning any partial
//! labelling whose prefix already exceeds the best complete one.

use super::{graph6_encode, Graph, GraphError};

pub const MAX_CANON_VERTICES: usize = 10;

/// Byte string identifying an isomorphism class: the graph6 encoding of the
/// canonically relabelled graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical graph6 text.
    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.0).expect("canonical forms are graph6 text")
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_graph6())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    let perm = canonical_labeling(g)?;
    Ok(CanonicalForm(graph6_encode(&g.relabel(&perm)).into_bytes()))
}

/// Permutation `perm` (old vertex -> new vertex) producing the canonical graph.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, GraphError> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(GraphError::TooLarge { what: "canonical form", max: MAX_CANON_VERTICES, n });
    }
    let rank = refine(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (rank[v], v));
    // cell_at[p] = the refinement rank that position p must take
    let cell_at: Vec<usize> = order.iter().map(|&v| rank[v]).collect();

    let adj: Vec<u32> = (0..n).map(|v| g.open_nbr(v).bits()).collect();
    let mut search = Search {
        n,
        adj,
        rank,
        cell_at,
        total_bits: n * n.saturating_sub(1) / 2,
        best: None,
        best_perm: vec![0; n],
        current: vec![0; n],
    };
    search.run(0, 0, 0);
    let placed = search.best_perm;
    let mut perm = vec![0; n];
    for (pos, &v) in placed.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

/// Iterated degree refinement; returns an isomorphism-invariant rank per vertex.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut rank: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut cells = count_distinct(&rank);
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.open_nbr(v).iter().map(|u| rank[u]).collect();
                nb.sort_unstable();
                (rank[v], nb)
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect();
        let next_cells = sorted.len();
        rank = next;
        if next_cells == cells {
            return rank;
        }
        cells = next_cells;
    }
}

fn count_distinct(v: &[usize]) -> usize {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

struct Search {
    n: usize,
    adj: Vec<u32>,
    rank: Vec<usize>,
    cell_at: Vec<usize>,
    total_bits: usize,
    best: Option<u64>,
    best_perm: Vec<usize>,
    current: Vec<usize>,
}

impl Search {
    fn run(&mut self, pos: usize, code: u64, used: u32) {
        if pos == self.n {
            if self.best.map_or(true, |b| code < b) {
                self.best = Some(code);
                self.best_perm.copy_from_slice(&self.current);
            }
            return;
        }
        let prefix_bits = pos * (pos + 1) / 2;
        for v in 0..self.n {
            if used >> v & 1 == 1 || self.rank[v] != self.cell_at[pos] {
                continue;
            }
            let mut col = 0u64;
            for &u in &self.current[..pos] {
                col = (col << 1) | u64::from(self.adj[v] >> u & 1);
            }
            let next = (code << pos) | col;
            if let Some(best) = self.best {
                if next > best >> (self.total_bits - prefix_bits) {
                    continue;
                }
            }
            self.current[pos] = v;
            self.run(pos + 1, next, used | 1 << v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn relabelling_invariance() {
        let a = path(3).unwrap();
        let b = Graph::from_edges(3, &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn c6_differs_from_p6() {
        assert_ne!(canonical_form(&cycle(6).unwrap()).unwrap(), canonical_form(&path(6).unwrap()).unwrap());
    }

    #[test]
    fn paw_any_labelling() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, &[(3, 1), (1, 0), (0, 3), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn rejects_large() {
        assert!(canonical_form(&path(11).unwrap()).is_err());
    }

    #[test]
    fn canonical_graph_is_fixed_point() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let cf = canonical_form(&g).unwrap();
        let h = crate::graph::graph6_decode(cf.as_graph6()).unwrap();
        assert_eq!(canonical_form(&h).unwrap(), cf);
    }
}
