use super::{Graph, GraphError, MAX_VERTICES};

/// The gadget hung on one base vertex: the vertex itself and two triangles,
/// each attached to it through the first listed triangle vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub root: usize,
    pub tri: [usize; 3],
    pub tri2: [usize; 3],
}

impl Gadget {
    pub fn vertices(&self) -> [usize; 7] {
        let [a, b, c] = self.tri;
        let [d, e, f] = self.tri2;
        [self.root, a, b, c, d, e, f]
    }

    pub fn contains(&self, v: usize) -> bool {
        v == self.root || self.tri.contains(&v) || self.tri2.contains(&v)
    }
}

/// A graph built by attaching two pendant triangles to every vertex of a
/// base graph, together with the construction metadata.
#[derive(Clone, Debug)]
pub struct Ghat {
    pub graph: Graph,
    pub base: Graph,
    pub gadgets: Vec<Gadget>,
}

impl Ghat {
    /// Index of the gadget containing `v`.
    pub fn gadget_of(&self, v: usize) -> usize {
        let nb = self.base.n();
        if v < nb {
            v
        } else {
            (v - nb) / 6
        }
    }
}

/// Base vertices keep their labels; the triangles of base vertex `v` occupy
/// `n + 6v .. n + 6v + 6`.
pub fn ghat(base: &Graph) -> Result<Ghat, GraphError> {
    let nb = base.n();
    let n = 7 * nb;
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge { what: "ghat result", max: MAX_VERTICES, n });
    }
    let mut edges = base.edges();
    let mut gadgets = Vec::with_capacity(nb);
    for v in 0..nb {
        let o = nb + 6 * v;
        let tri = [o, o + 1, o + 2];
        let tri2 = [o + 3, o + 4, o + 5];
        for t in [tri, tri2] {
            edges.extend([(t[0], t[1]), (t[1], t[2]), (t[0], t[2]), (v, t[0])]);
        }
        gadgets.push(Gadget { root: v, tri, tri2 });
    }
    Ok(Ghat { graph: Graph::from_edges(n, &edges)?, base: base.clone(), gadgets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn ghat_k1() {
        let h = ghat(&complete(1).unwrap()).unwrap();
        assert_eq!(h.graph.n(), 7);
        assert_eq!(h.graph.edge_count(), 8);
    }

    #[test]
    fn ghat_sizes() {
        assert_eq!(ghat(&path(2).unwrap()).unwrap().graph.n(), 14);
        assert_eq!(ghat(&cycle(4).unwrap()).unwrap().graph.n(), 28);
        assert!(ghat(&path(5).unwrap()).is_err());
    }

    #[test]
    fn min_degree_at_least_two() {
        for base in [complete(1).unwrap(), path(3).unwrap(), cycle(4).unwrap()] {
            let h = ghat(&base).unwrap();
            assert!(h.graph.min_degree() >= 2);
            for (v, gd) in h.gadgets.iter().enumerate() {
                assert_eq!(h.graph.degree(v), base.degree(v) + 2);
                assert!(gd.vertices().iter().all(|&x| h.gadget_of(x) == v));
            }
        }
    }
}
