//! Gadget-local strategies on graphs built by attaching two triangles to
//! every vertex of a base graph.

use crate::game::{white_set, GameState, Player};
use crate::graph::{Gadget, Ghat, Graph, VertexSet};
use crate::solver::{Policy, PolicyError};

/// Played vertices and the opponent's most recent move.
pub type GhatMemory = (VertexSet, Option<usize>);

fn check_arena(ghat: &Ghat, g: &Graph, name: String) -> Result<GhatMemory, PolicyError> {
    if *g != ghat.graph {
        return Err(PolicyError::ArenaMismatch { policy: name, reason: "graph differs from the gadget construction".into() });
    }
    Ok((VertexSet::EMPTY, None))
}

fn remember(mover: Player, me: Player, v: usize, mem: &mut GhatMemory) {
    mem.0.insert(v);
    if mover != me {
        mem.1 = Some(v);
    }
}

fn set_of(vs: [usize; 3]) -> VertexSet {
    vs.into_iter().collect()
}

/// Dominator keeps at most three played vertices in every gadget by
/// answering inside the gadget Staller just played in.
#[derive(Clone, Copy, Debug)]
pub struct GhatDominator<'a> {
    pub ghat: &'a Ghat,
}

impl GhatDominator<'_> {
    fn move_in(&self, gadget: &Gadget, played: VertexSet, options: VertexSet) -> Option<usize> {
        let root = gadget.root;
        let tris = [set_of(gadget.tri), set_of(gadget.tri2)];
        let untouched = tris.iter().filter(|t| !t.intersects(played)).fold(VertexSet::EMPTY, |a, &t| a | t);
        let all: VertexSet = gadget.vertices().into_iter().collect();
        if !played.contains(root) && options.contains(root) {
            return Some(root);
        }
        (untouched & options).first().or((all & options).first())
    }
}

impl Policy for GhatDominator<'_> {
    type Memory = GhatMemory;

    fn name(&self) -> String {
        "ghat_dominator".into()
    }

    fn init(&self, g: &Graph, _: Player) -> Result<GhatMemory, PolicyError> {
        check_arena(self.ghat, g, self.name())
    }

    fn choose(&self, g: &Graph, state: &GameState, mem: &GhatMemory) -> Result<usize, PolicyError> {
        let options = g.closed_nbr_of(white_set(g, state.dominated));
        let (played, last) = *mem;
        // after Staller takes a root, answer inside one of its triangles
        if let Some(s) = last {
            let gad = &self.ghat.gadgets[self.ghat.gadget_of(s)];
            let pick = if s == gad.root {
                let tris = set_of(gad.tri) | set_of(gad.tri2);
                (tris & options - played).first()
            } else {
                self.move_in(gad, played, options)
            };
            if let Some(v) = pick {
                return Ok(v);
            }
        }
        self.ghat
            .gadgets
            .iter()
            .find_map(|gad| self.move_in(gad, played, options))
            .ok_or_else(|| PolicyError::Defect { policy: self.name(), reason: "no playable vertex".into() })
    }

    fn observe(&self, _: &Graph, state: &GameState, v: usize, mem: &mut GhatMemory) -> Result<(), PolicyError> {
        remember(state.to_move, Player::Dominator, v, mem);
        Ok(())
    }
}

/// Staller makes sure every gadget's root gets played, which forces
/// three moves per gadget.
#[derive(Clone, Copy, Debug)]
pub struct GhatStaller<'a> {
    pub ghat: &'a Ghat,
}

impl Policy for GhatStaller<'_> {
    type Memory = GhatMemory;

    fn name(&self) -> String {
        "ghat_staller".into()
    }

    fn init(&self, g: &Graph, _: Player) -> Result<GhatMemory, PolicyError> {
        check_arena(self.ghat, g, self.name())
    }

    fn choose(&self, g: &Graph, state: &GameState, mem: &GhatMemory) -> Result<usize, PolicyError> {
        let options = g.closed_nbr_of(white_set(g, state.dominated));
        let (played, last) = *mem;
        if let Some(d) = last {
            let gad = &self.ghat.gadgets[self.ghat.gadget_of(d)];
            let all: VertexSet = gad.vertices().into_iter().collect();
            // only answer when Dominator just opened this gadget
            if (all & played) == VertexSet::singleton(d) {
                let reply = if d == gad.root { gad.tri[0] } else { gad.root };
                if options.contains(reply) {
                    return Ok(reply);
                }
            }
        }
        let fresh = self.ghat.gadgets.iter().find(|gad| {
            !gad.vertices().iter().any(|&v| played.contains(v)) && options.contains(gad.root)
        });
        if let Some(gad) = fresh {
            return Ok(gad.root);
        }
        options.first().ok_or_else(|| PolicyError::Defect { policy: self.name(), reason: "no playable vertex".into() })
    }

    fn observe(&self, _: &Graph, state: &GameState, v: usize, mem: &mut GhatMemory) -> Result<(), PolicyError> {
        remember(state.to_move, Player::Staller, v, mem);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, ghat, path};
    use crate::solver::{play_policies, policy_vs_optimal};

    #[test]
    fn k1_self_play_is_three() {
        let h = ghat(&complete(1).unwrap()).unwrap();
        let tr = play_policies(&h.graph, Player::Dominator, &GhatDominator { ghat: &h }, &GhatStaller { ghat: &h }).unwrap();
        assert_eq!(tr.t(), 3);
    }

    #[test]
    fn k2_sandwich() {
        let h = ghat(&path(2).unwrap()).unwrap();
        for first in [Player::Dominator, Player::Staller] {
            let up = policy_vs_optimal(&h.graph, &GhatDominator { ghat: &h }, Player::Dominator, first).unwrap();
            let down = policy_vs_optimal(&h.graph, &GhatStaller { ghat: &h }, Player::Staller, first).unwrap();
            assert!(up.value <= 6, "{first}: {}", up.value);
            assert!(down.value >= 6, "{first}: {}", down.value);
        }
    }

    #[test]
    fn wrong_arena() {
        let h = ghat(&path(2).unwrap()).unwrap();
        let other = path(14).unwrap();
        assert!(GhatDominator { ghat: &h }.init(&other, Player::Dominator).is_err());
    }
}
