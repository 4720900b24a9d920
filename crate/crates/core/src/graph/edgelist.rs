//! Plain edge-list text: a header line `n m`, then `m` lines `u v` (0-indexed).

use super::{Graph, GraphError};

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::EdgeList(msg.into())
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace();
    let a = it.next().ok_or_else(|| err(format!("line {lineno}: expected two integers")))?;
    let b = it.next().ok_or_else(|| err(format!("line {lineno}: expected two integers")))?;
    if it.next().is_some() {
        return Err(err(format!("line {lineno}: expected two integers")));
    }
    let a = a.parse().map_err(|_| err(format!("line {lineno}: bad integer {a:?}")))?;
    let b = b.parse().map_err(|_| err(format!("line {lineno}: bad integer {b:?}")))?;
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (i, header) = lines.next().ok_or_else(|| err("empty input"))?;
    let (n, m) = parse_pair(header, i + 1)?;
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines {
        edges.push(parse_pair(line, i + 1)?);
    }
    if edges.len() != m {
        return Err(err(format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_paw() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text.lines().next(), Some("4 4"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn rejects_count_mismatch() {
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2 1\n0 0\n").is_err());
    }
}
