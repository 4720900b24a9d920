//! Simple undirected graphs on at most 32 vertices, stored as closed
//! neighbourhood bitmasks, together with the generators, file formats and
//! isomorphism tools the experiments need.

mod bitset;
mod canon;
mod catalog;
mod edgelist;
mod enumerate;
mod generators;
mod ghat;
mod graph6;
mod trees;

pub use bitset::{Iter as VertexIter, VertexSet, MAX_VERTICES};
pub use canon::{canonical_form, canonical_labeling, CanonicalForm, MAX_CANON_VERTICES};
pub use catalog::{family_f, hardcoded_family_f, FCatalog, FAMILY_F_SIZE};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use enumerate::{enumerate_connected, MAX_ENUM_CONNECTED};
pub use generators::{complete, cycle, empty, path, star};
pub use ghat::{ghat, Gadget, Ghat};
pub use graph6::{graph6_decode, graph6_encode};
pub use trees::{enumerate_trees, MAX_ENUM_TREES};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside supported range 1..={max}", max = MAX_VERTICES)]
    OrderOutOfRange(usize),
    #[error("endpoint {v} out of range for a graph on {n} vertices")]
    EndpointOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{what} requires n >= {min}, got {n}")]
    TooSmall { what: &'static str, min: usize, n: usize },
    #[error("{what} supports n <= {max}, got {n}")]
    TooLarge { what: &'static str, max: usize, n: usize },
    #[error("family F index {0} outside 1..=11")]
    FamilyIndex(usize),
    #[error("derived catalog entry F{0} is missing")]
    CatalogMissing(usize),
    #[error("malformed catalog: {0}")]
    Catalog(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
}

/// An immutable simple graph. Vertex `v` always belongs to its own closed
/// neighbourhood; adjacency is symmetric.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    closed: Vec<VertexSet>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mut closed: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::EndpointOutOfRange { v: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            closed[u].insert(v);
            closed[v].insert(u);
        }
        Ok(Graph { n, closed })
    }

    /// Builds a graph from open-neighbourhood bitmasks. Used by the
    /// enumerators, which maintain symmetry themselves.
    pub(crate) fn from_open_masks(masks: &[u32]) -> Graph {
        let n = masks.len();
        let closed = masks
            .iter()
            .enumerate()
            .map(|(v, &m)| VertexSet::from_bits(m) | VertexSet::singleton(v))
            .collect();
        let g = Graph { n, closed };
        debug_assert!(g.is_symmetric());
        g
    }

    fn is_symmetric(&self) -> bool {
        (0..self.n).all(|u| self.closed[u].contains(u) && self.closed[u].iter().all(|v| self.closed[v].contains(u)))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `N[v]`.
    #[inline]
    pub fn closed_nbr(&self, v: usize) -> VertexSet {
        self.closed[v]
    }

    /// `N(v)`.
    #[inline]
    pub fn open_nbr(&self, v: usize) -> VertexSet {
        self.closed[v].without(v)
    }

    /// `N[X]`.
    pub fn closed_nbr_of(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.closed[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.closed[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.closed[v].len() - 1
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.open_nbr(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Connected components of the subgraph induced by `set`, ordered by
    /// their lowest vertex.
    pub fn components(&self, set: VertexSet) -> Vec<VertexSet> {
        let mut rest = set & self.vertices();
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self.closed_nbr_of(frontier) & rest;
                frontier = next - comp;
                comp |= next;
            }
            rest -= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components(self.vertices()).len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n && self.is_connected()
    }

    /// True when `set` induces a graph with no edges.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| !self.open_nbr(v).intersects(set))
    }

    /// Applies `perm`, sending old vertex `v` to new vertex `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal graph order");
        let mut closed = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            closed[perm[v]] = self.closed[v].iter().map(|u| perm[u]).collect();
        }
        Graph { n: self.n, closed }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(n, &edges)
    }

    /// True when the graph is the path `0 - 1 - ... - (n-1)` in index order.
    pub fn is_index_path(&self) -> bool {
        self.edge_count() + 1 == self.n && (1..self.n).all(|v| self.has_edge(v - 1, v))
    }

    /// True when the graph is the cycle `0 - 1 - ... - (n-1) - 0` in index order.
    pub fn is_index_cycle(&self) -> bool {
        self.n >= 3 && self.edge_count() == self.n && (0..self.n).all(|v| self.has_edge(v, (v + 1) % self.n))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_k2() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.closed_nbr(0).to_vec(), vec![0, 1]);
        assert_eq!(g.closed_nbr(1).to_vec(), vec![0, 1]);
    }

    #[test]
    fn from_edges_c4() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(g.is_index_cycle());
        assert_eq!(g.degree_sequence(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn from_edges_errors() {
        assert_eq!(Graph::from_edges(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange { v: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(0, &[]), Err(GraphError::OrderOutOfRange(0)));
        assert_eq!(Graph::from_edges(33, &[]), Err(GraphError::OrderOutOfRange(33)));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn components_examples() {
        let c4 = cycle(4).unwrap();
        assert_eq!(c4.components(VertexSet::singleton(3)), vec![VertexSet::singleton(3)]);
        let p5 = path(5).unwrap();
        let s: VertexSet = [2, 3, 4].into_iter().collect();
        assert_eq!(p5.components(s), vec![s]);
        let s: VertexSet = [0, 2, 3].into_iter().collect();
        assert_eq!(
            p5.components(s),
            vec![VertexSet::singleton(0), [2, 3].into_iter().collect::<VertexSet>()]
        );
        assert!(p5.components(VertexSet::EMPTY).is_empty());
    }

    #[test]
    fn relabel_preserves_structure() {
        let p = path(4).unwrap();
        let q = p.relabel(&[3, 2, 1, 0]);
        assert!(q.is_index_path());
        let r = p.relabel(&[1, 0, 2, 3]);
        assert!(!r.is_index_path());
        assert_eq!(r.edge_count(), 3);
    }
}
