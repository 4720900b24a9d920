//! Generator specs: one flat namespace of strings naming graph sources.
//!
//! `path:N`, `cycle:N`, `complete:N`, `star:K`, `f:I`, `ghat:<spec>`,
//! `trees:N`, `connected:N`, `random:A-B[:D]` (orders `A..=B`, minimum
//! degree `D`), `union:N` (disjoint unions of small connected graphs with
//! at most `N` vertices), `g6:<graph6>`, and `file:PATH` or a bare path to
//! a file of graph6 lines.

use std::fmt;
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::VerifyError;
use crate::graph::{
    complete, cycle, enumerate_connected, enumerate_trees, family_f, ghat, graph6_decode, path, star, FCatalog, Graph,
    VertexSet,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    F(usize),
    Ghat(Box<Source>),
    Trees(usize),
    Connected(usize),
    Random { min_n: usize, max_n: usize, min_degree: usize },
    Union { max_n: usize },
    Graph6(String),
    File(PathBuf),
}

/// One graph drawn from a source.
#[derive(Clone, Debug)]
pub struct Instance {
    /// Spec plus index, or file and line.
    pub source: String,
    /// Raw text for unreadable input lines.
    pub graph: Result<Graph, String>,
    /// Base graph when the instance is a Ĝ.
    pub base: Option<Graph>,
}

fn num(s: &str, spec: &str) -> Result<usize, VerifyError> {
    s.parse().map_err(|_| VerifyError::Spec(format!("{spec:?}: expected a number, got {s:?}")))
}

impl Source {
    pub fn parse(spec: &str) -> Result<Source, VerifyError> {
        let (kind, rest) = spec.split_once(':').unwrap_or((spec, ""));
        let n = || num(rest, spec);
        Ok(match kind {
            "path" => Source::Path(n()?),
            "cycle" => Source::Cycle(n()?),
            "complete" => Source::Complete(n()?),
            "star" => Source::Star(n()?),
            "f" => Source::F(n()?),
            "trees" => Source::Trees(n()?),
            "connected" => Source::Connected(n()?),
            "union" => Source::Union { max_n: n()? },
            "ghat" => Source::Ghat(Box::new(Source::parse(rest)?)),
            "g6" => Source::Graph6(rest.to_string()),
            "file" => Source::File(PathBuf::from(rest)),
            "random" => {
                let (range, deg) = rest.split_once(':').unwrap_or((rest, "0"));
                let (a, b) = range.split_once('-').unwrap_or((range, range));
                let (min_n, max_n) = (num(a, spec)?, num(b, spec)?);
                if min_n == 0 || min_n > max_n {
                    return Err(VerifyError::Spec(format!("{spec:?}: bad order range")));
                }
                Source::Random { min_n, max_n, min_degree: num(deg, spec)? }
            }
            _ if std::path::Path::new(spec).is_file() => Source::File(PathBuf::from(spec)),
            _ => return Err(VerifyError::Spec(format!("unknown generator spec {spec:?}"))),
        })
    }

    /// Whether the source names one fixed graph.
    pub fn is_single(&self) -> bool {
        matches!(
            self,
            Source::Path(_) | Source::Cycle(_) | Source::Complete(_) | Source::Star(_) | Source::F(_) | Source::Graph6(_)
        ) || matches!(self, Source::Ghat(b) if b.is_single())
    }

    fn single(&self, catalog: Option<&FCatalog>) -> Result<Graph, VerifyError> {
        Ok(match self {
            Source::Path(n) => path(*n)?,
            Source::Cycle(n) => cycle(*n)?,
            Source::Complete(n) => complete(*n)?,
            Source::Star(k) => star(*k)?,
            Source::F(i) => family_f(*i, catalog)?,
            Source::Graph6(s) => graph6_decode(s)?,
            Source::Ghat(b) => ghat(&b.single(catalog)?)?.graph,
            _ => return Err(VerifyError::Spec(format!("{self} names a family, not one graph"))),
        })
    }

    /// Draws instances. Random sources yield `count` graphs from `seed`;
    /// other sources ignore both.
    pub fn instances(&self, count: usize, seed: u64, catalog: Option<&FCatalog>) -> Result<Vec<Instance>, VerifyError> {
        let spec = self.to_string();
        let plain = |graphs: Vec<Graph>| {
            graphs
                .into_iter()
                .enumerate()
                .map(|(i, g)| Instance { source: format!("{spec}#{i}"), graph: Ok(g), base: None })
                .collect()
        };
        Ok(match self {
            Source::Ghat(b) => {
                let base = b.single(catalog)?;
                vec![Instance { source: spec, graph: Ok(ghat(&base)?.graph), base: Some(base) }]
            }
            s if s.is_single() => vec![Instance { source: spec, graph: Ok(s.single(catalog)?), base: None }],
            Source::Trees(n) => plain(enumerate_trees(*n)?),
            Source::Connected(n) => plain(enumerate_connected(*n)?),
            Source::Random { min_n, max_n, min_degree } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let graphs = (0..count)
                    .map(|_| random_graph(&mut rng, *min_n, *max_n, *min_degree))
                    .collect::<Result<Vec<_>, _>>()?;
                plain(graphs)
            }
            Source::Union { max_n } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let pool = UnionPool::new(*max_n)?;
                plain((0..count).map(|_| pool.draw(&mut rng)).collect::<Result<Vec<_>, _>>()?)
            }
            Source::File(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| VerifyError::Input(format!("{}: {e}", p.display())))?;
                text.lines()
                    .enumerate()
                    .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
                    .map(|(i, l)| Instance {
                        source: format!("{}:{}", p.display(), i + 1),
                        graph: graph6_decode(l.trim()).map_err(|e| format!("{e}: {:?}", l.trim())),
                        base: None,
                    })
                    .collect()
            }
            _ => unreachable!("single sources handled above"),
        })
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Path(n) => write!(f, "path:{n}"),
            Source::Cycle(n) => write!(f, "cycle:{n}"),
            Source::Complete(n) => write!(f, "complete:{n}"),
            Source::Star(k) => write!(f, "star:{k}"),
            Source::F(i) => write!(f, "f:{i}"),
            Source::Ghat(b) => write!(f, "ghat:{b}"),
            Source::Trees(n) => write!(f, "trees:{n}"),
            Source::Connected(n) => write!(f, "connected:{n}"),
            Source::Random { min_n, max_n, min_degree } => write!(f, "random:{min_n}-{max_n}:{min_degree}"),
            Source::Union { max_n } => write!(f, "union:{max_n}"),
            Source::Graph6(s) => write!(f, "g6:{s}"),
            Source::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// `G(n, p)` with `n` uniform in the range and `p` uniform in `[0.15, 0.6]`,
/// then each vertex below `min_degree` gains edges to random non-neighbours.
pub fn random_graph(rng: &mut impl Rng, min_n: usize, max_n: usize, min_degree: usize) -> Result<Graph, VerifyError> {
    let n = rng.gen_range(min_n..=max_n);
    if min_degree >= n {
        return Err(VerifyError::Spec(format!("minimum degree {min_degree} impossible on {n} vertices")));
    }
    let p: f64 = rng.gen_range(0.15..=0.6);
    let mut adj = vec![VertexSet::EMPTY; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
    }
    for u in 0..n {
        while adj[u].len() < min_degree {
            let free: Vec<usize> = (0..n).filter(|&v| v != u && !adj[u].contains(v)).collect();
            let v = *free.choose(rng).expect("min_degree < n leaves a non-neighbour");
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Connected graphs of order at most 7, for drawing random disjoint unions.
pub struct UnionPool {
    max_n: usize,
    by_order: Vec<Vec<Graph>>,
}

impl UnionPool {
    pub fn new(max_n: usize) -> Result<UnionPool, VerifyError> {
        if !(2..=crate::solver::MAX_SOLVE_VERTICES).contains(&max_n) {
            return Err(VerifyError::Spec(format!("union order bound {max_n} outside 2..=24")));
        }
        let mut by_order = vec![Vec::new()];
        for k in 1..=max_n.min(7) {
            by_order.push(enumerate_connected(k)?);
        }
        Ok(UnionPool { max_n, by_order })
    }

    /// Two to four components of random order, at most `max_n` vertices in total.
    pub fn draw(&self, rng: &mut impl Rng) -> Result<Graph, VerifyError> {
        let parts = rng.gen_range(2..=4);
        let mut left = self.max_n;
        let mut g: Option<Graph> = None;
        for _ in 0..parts {
            if left == 0 {
                break;
            }
            let k = rng.gen_range(1..=left.min(self.by_order.len() - 1));
            let c = self.by_order[k].choose(rng).expect("every order has a connected graph");
            g = Some(match g {
                None => c.clone(),
                Some(h) => h.disjoint_union(c)?,
            });
            left -= k;
        }
        Ok(g.expect("at least one component"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_round_trip() {
        for s in ["path:5", "cycle:6", "f:3", "ghat:path:2", "ghat:complete:1", "trees:7", "connected:5", "random:4-16:2", "union:20", "g6:A_"] {
            assert_eq!(Source::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(Source::parse("random:8").unwrap().to_string(), "random:8-8:0");
        assert!(Source::parse("wheel:5").is_err());
        assert!(Source::parse("path:x").is_err());
        assert!(Source::parse("ghat:trees:5").unwrap().instances(1, 0, None).is_err());
    }

    #[test]
    fn instance_counts() {
        assert_eq!(Source::parse("trees:7").unwrap().instances(0, 0, None).unwrap().len(), 11);
        assert_eq!(Source::parse("connected:5").unwrap().instances(0, 0, None).unwrap().len(), 21);
        let gh = Source::parse("ghat:path:2").unwrap().instances(0, 0, None).unwrap();
        assert_eq!(gh[0].graph.as_ref().unwrap().n(), 14);
        assert_eq!(gh[0].base.as_ref().unwrap().n(), 2);
    }

    #[test]
    fn random_graphs_respect_min_degree_and_seed() {
        let src = Source::parse("random:5-16:2").unwrap();
        let a = src.instances(200, 9, None).unwrap();
        let b = src.instances(200, 9, None).unwrap();
        for (x, y) in a.iter().zip(&b) {
            let g = x.graph.as_ref().unwrap();
            assert_eq!(g, y.graph.as_ref().unwrap());
            assert!(g.min_degree() >= 2 && (5..=16).contains(&g.n()));
        }
    }

    #[test]
    fn unions_are_bounded_and_disconnected() {
        let src = Source::parse("union:16").unwrap();
        for inst in src.instances(100, 3, None).unwrap() {
            let g = inst.graph.unwrap();
            assert!(g.n() <= 16);
        }
    }

    #[test]
    fn file_lines_keep_provenance() {
        let dir = std::env::temp_dir().join(format!("isogame-src-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let p = dir.join("g.g6");
        std::fs::write(&p, "A_\n# note\n\nC~\n!!bad\n").unwrap();
        let inst = Source::parse(p.to_str().unwrap()).unwrap().instances(0, 0, None).unwrap();
        assert_eq!(inst.len(), 3);
        assert!(inst[1].source.ends_with(":4"));
        assert!(inst[2].graph.is_err());
        std::fs::remove_dir_all(dir).unwrap();
    }
}
