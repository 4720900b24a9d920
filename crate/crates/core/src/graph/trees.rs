//! Free trees via rooted level sequences.
//!
//! Rooted trees are generated as canonical level sequences with the
//! Beyer–Hedetniemi successor rule. A rooted tree is kept only when its root
//! is a centre of the underlying free tree; for bicentral trees the root must
//! additionally carry the larger of the two half-tree codes, so every free
//! tree is emitted exactly once.

use super::{Graph, GraphError};

pub const MAX_ENUM_TREES: usize = 16;

pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 {
        return Err(GraphError::TooSmall { what: "enumerate_trees", min: 1, n });
    }
    if n > MAX_ENUM_TREES {
        return Err(GraphError::TooLarge { what: "enumerate_trees", max: MAX_ENUM_TREES, n });
    }
    let mut out = Vec::new();
    let mut levels: Vec<usize> = (1..=n).collect();
    loop {
        let parent = parents(&levels);
        let adj = adjacency(&parent);
        if rooted_at_canonical_centre(&adj) {
            let edges: Vec<(usize, usize)> = (1..n).map(|v| (parent[v], v)).collect();
            out.push(Graph::from_edges(n, &edges)?);
        }
        if !successor(&mut levels) {
            break;
        }
    }
    Ok(out)
}

/// Advances to the next level sequence; false after the star `1,2,2,...,2`.
fn successor(levels: &mut [usize]) -> bool {
    let Some(p) = levels.iter().rposition(|&l| l > 2) else {
        return false;
    };
    let q = levels[..p]
        .iter()
        .rposition(|&l| l == levels[p] - 1)
        .expect("a level sequence always has a parent level");
    let shift = p - q;
    for i in p..levels.len() {
        levels[i] = levels[i - shift];
    }
    true
}

fn parents(levels: &[usize]) -> Vec<usize> {
    let mut parent = vec![0; levels.len()];
    for i in 1..levels.len() {
        parent[i] = (0..i).rev().find(|&j| levels[j] == levels[i] - 1).unwrap();
    }
    parent
}

fn adjacency(parent: &[usize]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); parent.len()];
    for v in 1..parent.len() {
        adj[v].push(parent[v]);
        adj[parent[v]].push(v);
    }
    adj
}

/// Centre vertices (one or two) by repeated leaf stripping.
pub(crate) fn centres(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &u in &adj[leaf] {
                deg[u] -= 1;
                if deg[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// AHU code of the subtree hanging from `v` away from `parent`.
pub(crate) fn ahu_code(adj: &[Vec<usize>], v: usize, parent: Option<usize>) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&u| Some(u) != parent)
        .map(|&u| ahu_code(adj, u, Some(v)))
        .collect();
    kids.sort();
    let mut code = vec![b'('];
    for k in kids {
        code.extend(k);
    }
    code.push(b')');
    code
}

fn rooted_at_canonical_centre(adj: &[Vec<usize>]) -> bool {
    let c = centres(adj);
    match c.as_slice() {
        [r] => *r == 0,
        [a, b] => {
            let (root, other) = if *a == 0 {
                (*a, *b)
            } else if *b == 0 {
                (*b, *a)
            } else {
                return false;
            };
            ahu_code(adj, root, Some(other)) >= ahu_code(adj, other, Some(root))
        }
        _ => unreachable!("a tree has one or two centres"),
    }
}

/// Isomorphism-invariant code for a free tree of any order.
#[cfg(test)]
fn free_tree_code(g: &Graph) -> Vec<u8> {
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.open_nbr(v).to_vec()).collect();
    match centres(&adj).as_slice() {
        [r] => ahu_code(&adj, *r, None),
        [a, b] => {
            let mut x = ahu_code(&adj, *a, Some(*b));
            let mut y = ahu_code(&adj, *b, Some(*a));
            if x > y {
                std::mem::swap(&mut x, &mut y);
            }
            let mut code = b"E".to_vec();
            code.extend(x);
            code.extend(y);
            code
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn level_sequences_n4() {
        let mut l = vec![1, 2, 3, 4];
        let mut seen = vec![l.clone()];
        while successor(&mut l) {
            seen.push(l.clone());
        }
        assert_eq!(seen, vec![vec![1, 2, 3, 4], vec![1, 2, 3, 3], vec![1, 2, 3, 2], vec![1, 2, 2, 2]]);
    }

    #[test]
    fn small_tree_counts() {
        // Free tree counts for n = 1..=9.
        let counts: Vec<usize> = (1..=9).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
    }

    #[test]
    fn p3_is_only_tree_of_order_three() {
        let t = enumerate_trees(3).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].degree_sequence(), vec![2, 1, 1]);
    }

    #[test]
    fn outputs_are_trees_and_distinct_up_to_16() {
        for n in [12, 16] {
            let trees = enumerate_trees(n).unwrap();
            let codes: HashSet<Vec<u8>> = trees.iter().map(free_tree_code).collect();
            assert_eq!(codes.len(), trees.len());
            assert!(trees.iter().all(Graph::is_tree));
        }
    }

    #[test]
    fn guard() {
        assert!(enumerate_trees(17).is_err());
        assert!(enumerate_trees(0).is_err());
    }
}
