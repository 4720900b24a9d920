//! Isolation residual graphs and the staged weights used on trees.
//!
//! Relative to a selected set `S`, a vertex is white when it lies outside
//! `N[S]` and has a neighbour outside `N[S]`, blue when it lies in `N[S]` and
//! has a white neighbour, and red otherwise. Residual edges are exactly the
//! edges of `G` incident with a white vertex; they are never materialized.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{white_after, white_set};
use crate::graph::{Graph, VertexSet};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Stage {
    One = 1,
    Two = 2,
    Three = 3,
}

impl Stage {
    pub fn number(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Colour {
    White,
    Blue,
    LightBlue,
    Red,
}

impl Colour {
    pub fn letter(self) -> char {
        match self {
            Colour::White => 'W',
            Colour::Blue => 'B',
            Colour::LightBlue => 'b',
            Colour::Red => 'R',
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentKind {
    /// Order at least four.
    Big,
    /// A white `P2` with some adjacent blue vertex of residual degree above one.
    P2,
    P3,
    /// A white `P2` all of whose blue neighbours have residual degree one.
    Special,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidualError {
    #[error("stage may not decrease (from {from} to {to})")]
    StageDecreased { from: Stage, to: Stage },
    #[error("vertex {0} is not playable")]
    NotPlayable(usize),
    #[error("weight is undefined before a stage is set")]
    StageUnset,
    #[error("small white component {0} is neither P2 nor P3")]
    NotTreeLike(VertexSet),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub stage: Stage,
    /// White components ordered by lowest vertex.
    pub components: Vec<(VertexSet, ComponentKind)>,
}

impl Classification {
    pub fn first_of(&self, kind: ComponentKind) -> Option<VertexSet> {
        self.components.iter().find(|c| c.1 == kind).map(|c| c.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidualGraph {
    selected: VertexSet,
    dominated: VertexSet,
    white: VertexSet,
    /// Blue vertices, light blue included.
    blue: VertexSet,
    light_blue: VertexSet,
    stage: Option<Stage>,
}

/// The residual graph of `s`, with no light-blue history and no stage.
pub fn compute_residual(g: &Graph, s: VertexSet) -> ResidualGraph {
    let dominated = g.closed_nbr_of(s);
    let white = white_set(g, dominated);
    ResidualGraph { selected: s, dominated, white, blue: blue_of(g, dominated, white), light_blue: VertexSet::EMPTY, stage: None }
}

fn blue_of(g: &Graph, dominated: VertexSet, white: VertexSet) -> VertexSet {
    dominated & g.closed_nbr_of(white)
}

impl ResidualGraph {
    pub fn selected(&self) -> VertexSet {
        self.selected
    }

    pub fn dominated(&self) -> VertexSet {
        self.dominated
    }

    pub fn white(&self) -> VertexSet {
        self.white
    }

    /// Blue vertices including the light blue ones.
    pub fn blue(&self) -> VertexSet {
        self.blue
    }

    pub fn light_blue(&self) -> VertexSet {
        self.light_blue
    }

    pub fn red(&self, n: usize) -> VertexSet {
        (self.white | self.blue).complement(n)
    }

    pub fn stage(&self) -> Option<Stage> {
        self.stage
    }

    pub fn colour(&self, v: usize) -> Colour {
        if self.white.contains(v) {
            Colour::White
        } else if self.light_blue.contains(v) {
            Colour::LightBlue
        } else if self.blue.contains(v) {
            Colour::Blue
        } else {
            Colour::Red
        }
    }

    /// Degree in the residual graph.
    pub fn degree(&self, g: &Graph, v: usize) -> usize {
        if self.white.contains(v) {
            g.degree(v)
        } else {
            (g.open_nbr(v) & self.white).len()
        }
    }

    /// Residual graph after selecting `v` in a move of stage `stage`.
    /// Vertices turning blue during a stage-two move become light blue.
    pub fn update(&self, g: &Graph, v: usize, stage: Stage) -> Result<ResidualGraph, ResidualError> {
        if let Some(from) = self.stage {
            if stage < from {
                return Err(ResidualError::StageDecreased { from, to: stage });
            }
        }
        if v >= g.n() || !g.closed_nbr(v).intersects(self.white) {
            return Err(ResidualError::NotPlayable(v));
        }
        let dominated = self.dominated | g.closed_nbr(v);
        let white = white_after(g, self.white, g.closed_nbr(v));
        let blue = blue_of(g, dominated, white);
        let fresh = if stage == Stage::Two { blue - self.blue } else { VertexSet::EMPTY };
        Ok(ResidualGraph {
            selected: self.selected.with(v),
            dominated,
            white,
            blue,
            light_blue: (self.light_blue | fresh) & blue,
            stage: Some(stage),
        })
    }

    /// `5|W| + 3|B|` in stage one, `5|W| + 3|B - Bl| + |Bl|` afterwards.
    pub fn weight_at(&self, stage: Stage) -> i64 {
        let w = self.white.len() as i64;
        let b = self.blue.len() as i64;
        let l = self.light_blue.len() as i64;
        match stage {
            Stage::One => 5 * w + 3 * b,
            Stage::Two | Stage::Three => 5 * w + 3 * (b - l) + l,
        }
    }

    /// Weight under the current stage.
    pub fn weight(&self) -> Result<i64, ResidualError> {
        self.stage.map(|s| self.weight_at(s)).ok_or(ResidualError::StageUnset)
    }

    /// Labels the white components and derives the stage they imply.
    pub fn classify(&self, g: &Graph) -> Result<Classification, ResidualError> {
        let mut components = Vec::new();
        for c in g.components(self.white) {
            let kind = match c.len() {
                0..=1 => unreachable!("white vertices have white neighbours"),
                2 => {
                    let adjacent_blue = g.closed_nbr_of(c) & self.blue;
                    if adjacent_blue.iter().all(|u| self.degree(g, u) == 1) {
                        ComponentKind::Special
                    } else {
                        ComponentKind::P2
                    }
                }
                3 => {
                    if c.iter().all(|v| (g.open_nbr(v) & c).len() == 2) {
                        return Err(ResidualError::NotTreeLike(c));
                    }
                    ComponentKind::P3
                }
                _ => ComponentKind::Big,
            };
            components.push((c, kind));
        }
        let stage = if components.iter().any(|c| c.1 == ComponentKind::Big) {
            Stage::One
        } else if components.iter().all(|c| c.1 == ComponentKind::Special) {
            Stage::Three
        } else {
            Stage::Two
        };
        Ok(Classification { stage, components })
    }

    /// Structural properties every residual graph must satisfy; returns
    /// a description of each one that fails.
    pub fn invariant_violations(&self, g: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        let fresh = compute_residual(g, self.selected);
        if fresh.white != self.white || fresh.blue != self.blue || fresh.dominated != self.dominated {
            out.push("colours differ from a fresh computation".to_string());
        }
        if !self.light_blue.is_subset(self.blue) {
            out.push("light blue vertex that is not blue".to_string());
        }
        for v in self.light_blue {
            if self.degree(g, v) != 1 {
                out.push(format!("light blue vertex {v} has residual degree {}", self.degree(g, v)));
            }
        }
        if !self.selected.is_subset(self.red(g.n())) {
            out.push("a selected vertex is not red".to_string());
        }
        for v in self.white | self.blue {
            if self.degree(g, v) == 0 {
                out.push(format!("non-red vertex {v} is isolated"));
            }
        }
        out
    }

    /// One letter per vertex: `W`, `B`, `b` (light blue) or `R`.
    pub fn render(&self, n: usize) -> String {
        (0..n).map(|v| self.colour(v).letter()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, star};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn p5_after_first_vertex() {
        let g = path(5).unwrap();
        let r = compute_residual(&g, set(&[0]));
        assert_eq!(r.white(), set(&[2, 3, 4]));
        assert_eq!(r.blue(), set(&[1]));
        assert_eq!(r.red(5), set(&[0]));
        assert_eq!(r.weight_at(Stage::One), 18);
        assert_eq!(r.weight(), Err(ResidualError::StageUnset));
    }

    #[test]
    fn empty_selection_is_all_white() {
        let g = crate::graph::cycle(7).unwrap();
        let r = compute_residual(&g, VertexSet::EMPTY);
        assert_eq!(r.weight_at(Stage::One), 35);
        assert!(r.invariant_violations(&g).is_empty());
    }

    #[test]
    fn isolating_set_leaves_no_white() {
        let g = path(6).unwrap();
        let r = compute_residual(&g, set(&[1, 4]));
        assert!(r.white().is_empty());
        assert_eq!(r.weight_at(Stage::Two), 0);
    }

    #[test]
    fn stage_one_never_light_blue() {
        let g = path(9).unwrap();
        let r = compute_residual(&g, VertexSet::EMPTY).update(&g, 2, Stage::One).unwrap();
        assert!(r.light_blue().is_empty());
        assert_eq!(r.blue(), set(&[3]));
    }

    #[test]
    fn stage_two_leaf_of_p3_turns_light_blue() {
        // white P3 on 2-3-4 with blue 1; playing 1 dominates the leaf 2
        let g = path(5).unwrap();
        let r = compute_residual(&g, set(&[0]));
        let before = r.weight_at(Stage::Two);
        let r2 = r.update(&g, 1, Stage::Two).unwrap();
        assert_eq!(r2.light_blue(), set(&[2]));
        assert_eq!(r2.colour(2), Colour::LightBlue);
        assert!(before - r2.weight_at(Stage::Two) >= 7);
        assert!(r2.invariant_violations(&g).is_empty());
    }

    #[test]
    fn blue_pivot_between_two_p2() {
        // 0-1 and 3-4 white P2s both hanging off the blue vertex 2
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]).unwrap();
        let r = compute_residual(&g, set(&[5]));
        let c = r.classify(&g).unwrap();
        assert_eq!(c.stage, Stage::Two);
        assert!(c.components.iter().all(|x| x.1 == ComponentKind::P2));
        let r2 = r.update(&g, 2, Stage::Two).unwrap();
        assert!(r.weight_at(Stage::Two) - r2.weight_at(Stage::Two) >= 23);
    }

    #[test]
    fn classify_examples() {
        let g = path(7).unwrap();
        let r = compute_residual(&g, set(&[0]));
        assert_eq!(r.classify(&g).unwrap().stage, Stage::One);

        // white P2 {2,3} with blue 1 and 4, each seeing only that component
        let g = path(6).unwrap();
        let r = compute_residual(&g, set(&[0, 5]));
        let c = r.classify(&g).unwrap();
        assert_eq!(c.components, vec![(set(&[2, 3]), ComponentKind::Special)]);
        assert_eq!(c.stage, Stage::Three);

        let r = compute_residual(&g, set(&[0]));
        assert_eq!(r.classify(&g).unwrap().stage, Stage::One);
        let g = path(5).unwrap();
        let r = compute_residual(&g, set(&[0]));
        assert_eq!(r.classify(&g).unwrap().first_of(ComponentKind::P3), Some(set(&[2, 3, 4])));
    }

    #[test]
    fn triangle_is_not_tree_like() {
        let g = crate::graph::complete(3).unwrap();
        let r = compute_residual(&g, VertexSet::EMPTY);
        assert!(matches!(r.classify(&g), Err(ResidualError::NotTreeLike(_))));
    }

    #[test]
    fn stage_cannot_decrease() {
        let g = star(4).unwrap();
        let r = compute_residual(&g, VertexSet::EMPTY).update(&g, 1, Stage::Two).unwrap();
        assert_eq!(r.update(&g, 0, Stage::One), Err(ResidualError::StageDecreased { from: Stage::Two, to: Stage::One }));
    }
}
