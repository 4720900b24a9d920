//! The eleven connected graphs whose Staller-start game isolation number is
//! half their order.
//!
//! `F1..F6` are built directly. `F7..F11` are whatever the exhaustive
//! Staller-start extremal search at order 8 finds beyond `F4..F6`; the search
//! persists them as a catalog of graph6 lines, and a copy produced by that
//! search ships with the crate.

use super::{canonical_form, graph6_decode, graph6_encode, path, Graph, GraphError};

pub const FAMILY_F_SIZE: usize = 11;

const BUNDLED: &str = include_str!("../../data/f_catalog.g6");

/// Derived entries `F7..F11`, in ascending canonical-form order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FCatalog {
    graphs: Vec<Graph>,
}

impl FCatalog {
    pub fn new(mut graphs: Vec<Graph>) -> Result<FCatalog, GraphError> {
        if graphs.len() != FAMILY_F_SIZE - 6 {
            return Err(GraphError::Catalog(format!("expected 5 graphs, got {}", graphs.len())));
        }
        let mut keyed = Vec::with_capacity(graphs.len());
        for g in graphs.drain(..) {
            keyed.push((canonical_form(&g)?, g));
        }
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        if keyed.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(GraphError::Catalog("duplicate isomorphism class".into()));
        }
        Ok(FCatalog { graphs: keyed.into_iter().map(|(_, g)| g).collect() })
    }

    /// The copy generated by the extremal search and checked into the crate.
    pub fn bundled() -> FCatalog {
        FCatalog::try_bundled().expect("bundled catalog is well formed")
    }

    pub fn try_bundled() -> Result<FCatalog, GraphError> {
        FCatalog::parse(BUNDLED)
    }

    pub fn parse(text: &str) -> Result<FCatalog, GraphError> {
        let graphs = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(graph6_decode)
            .collect::<Result<Vec<_>, _>>()?;
        FCatalog::new(graphs)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("# F7..F11: derived by the Staller-start extremal search at order 8\n");
        for g in &self.graphs {
            out.push_str(&graph6_encode(g));
            out.push('\n');
        }
        out
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }
}

/// `F1..F6`.
pub fn hardcoded_family_f(i: usize) -> Result<Graph, GraphError> {
    match i {
        1 => path(2),
        2 => path(4),
        // triangle 0-1-2 with a pendant at 2
        3 => Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]),
        // path 0..6 with a pendant at 3
        4 => {
            let mut edges = path(7)?.edges();
            edges.push((3, 7));
            Graph::from_edges(8, &edges)
        }
        // triangle 0-1-2, path 2-3-4-5-6, pendant 7 at 3
        5 => Graph::from_edges(8, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)]),
        // triangles 0-1-2 and 4-5-6 joined through 3, pendant 7 at 3
        6 => Graph::from_edges(8, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4), (3, 7)]),
        7..=11 => Err(GraphError::CatalogMissing(i)),
        _ => Err(GraphError::FamilyIndex(i)),
    }
}

/// `F_i` for `i` in `1..=11`; entries beyond `F6` come from `catalog`.
pub fn family_f(i: usize, catalog: Option<&FCatalog>) -> Result<Graph, GraphError> {
    match i {
        1..=6 => hardcoded_family_f(i),
        7..=11 => catalog
            .and_then(|c| c.graphs.get(i - 7).cloned())
            .ok_or(GraphError::CatalogMissing(i)),
        _ => Err(GraphError::FamilyIndex(i)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f1_is_k2() {
        let g = family_f(1, None).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn f4_is_a_spider() {
        let g = family_f(4, None).unwrap();
        assert_eq!(g.n(), 8);
        assert!(g.is_tree());
        assert_eq!(g.degree_sequence(), vec![3, 2, 2, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn f5_f6_shapes() {
        let f5 = family_f(5, None).unwrap();
        assert_eq!(f5.degree_sequence(), vec![3, 3, 2, 2, 2, 2, 1, 1]);
        let f6 = family_f(6, None).unwrap();
        assert_eq!(f6.degree_sequence(), vec![3, 3, 3, 2, 2, 2, 2, 1]);
    }

    #[test]
    fn index_errors() {
        assert_eq!(family_f(0, None), Err(GraphError::FamilyIndex(0)));
        assert_eq!(family_f(12, None), Err(GraphError::FamilyIndex(12)));
        assert_eq!(family_f(7, None), Err(GraphError::CatalogMissing(7)));
    }

    #[test]
    fn bundled_catalog_completes_the_family() {
        let cat = FCatalog::bundled();
        let mut forms: Vec<_> =
            (1..=11).map(|i| canonical_form(&family_f(i, Some(&cat)).unwrap()).unwrap()).collect();
        assert!((7..=11).all(|i| family_f(i, Some(&cat)).unwrap().n() == 8));
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), 11);
        assert_eq!(FCatalog::parse(&cat.to_text()).unwrap(), cat);
    }
}
