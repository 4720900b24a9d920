use super::{Graph, GraphError};

/// `P_n` on vertices `0..n` in path order.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::TooSmall { what: "path", min: 1, n });
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// `C_n` with edges `i - (i+1 mod n)`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::TooSmall { what: "cycle", min: 3, n });
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

/// Edgeless graph on `n` vertices.
pub fn empty(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, &[])
}
