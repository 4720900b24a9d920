use std::collections::BTreeMap;

use super::{canonical_form, graph6_decode, Graph, GraphError};

/// Runtime guard: order 9 already has 261,080 classes.
pub const MAX_ENUM_CONNECTED: usize = 8;

/// One canonically labelled representative per isomorphism class of connected
/// graphs of order `n`, sorted by canonical form.
///
/// Classes of order `n` are grown from those of order `n - 1` by adding a
/// vertex joined to every non-empty subset of the old vertices; removing a
/// non-cut vertex shows every connected graph arises this way.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 {
        return Err(GraphError::TooSmall { what: "enumerate_connected", min: 1, n });
    }
    if n > MAX_ENUM_CONNECTED {
        return Err(GraphError::TooLarge { what: "enumerate_connected", max: MAX_ENUM_CONNECTED, n });
    }
    let mut level = vec![Graph::from_edges(1, &[])?];
    for order in 2..=n {
        level = extend(&level, order)?;
    }
    Ok(level)
}

fn extend(prev: &[Graph], order: usize) -> Result<Vec<Graph>, GraphError> {
    let old = order - 1;
    let mut seen = BTreeMap::new();
    for g in prev {
        let base: Vec<u32> = (0..old).map(|v| g.open_nbr(v).bits()).collect();
        for subset in 1u32..(1 << old) {
            let mut masks = base.clone();
            for (v, m) in masks.iter_mut().enumerate() {
                if subset >> v & 1 == 1 {
                    *m |= 1 << old;
                }
            }
            masks.push(subset);
            let h = Graph::from_open_masks(&masks);
            let cf = canonical_form(&h)?;
            seen.entry(cf).or_insert(());
        }
    }
    seen.into_keys().map(|cf| graph6_decode(cf.as_graph6())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn guard() {
        assert!(enumerate_connected(9).is_err());
        assert!(enumerate_connected(0).is_err());
    }

    #[test]
    fn representatives_are_connected_and_canonical() {
        for g in enumerate_connected(5).unwrap() {
            assert!(g.is_connected());
            let cf = canonical_form(&g).unwrap();
            assert_eq!(cf.as_graph6(), crate::graph::graph6_encode(&g));
        }
    }
}
