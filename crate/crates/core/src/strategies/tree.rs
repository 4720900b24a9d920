//! The staged residual-graph strategy of Dominator on trees.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::game::{GameState, Player};
use crate::graph::{Graph, VertexSet};
use crate::residual::{compute_residual, ComponentKind, ResidualError, ResidualGraph, Stage};
use crate::solver::{checked_choice, Policy, PolicyError, SolveError};

/// Dominator on a tree, driven by the residual graph of the played set.
///
/// Stage 1 takes the centre of a big white star, or else the third vertex
/// of the lexicographically smallest diametrical path of the first big
/// component. Stage 2 takes the centre of a white `P3`, or else a blue
/// vertex between two white `P2`s. Stage 3 takes the lowest white vertex.
#[derive(Clone, Copy, Debug, Default)]
pub struct TreeResidualDominator;

impl TreeResidualDominator {
    fn defect(&self, e: ResidualError) -> PolicyError {
        PolicyError::Defect { policy: self.name(), reason: e.to_string() }
    }

    /// The stage a move by `mover` belongs to. Staller's moves inherit the
    /// stage of Dominator's previous move.
    pub fn stage_of_move(&self, g: &Graph, r: &ResidualGraph, mover: Player) -> Result<Stage, PolicyError> {
        match (mover, r.stage()) {
            (Player::Staller, Some(s)) => Ok(s),
            _ => Ok(r.classify(g).map_err(|e| self.defect(e))?.stage),
        }
    }
}

impl Policy for TreeResidualDominator {
    type Memory = ResidualGraph;

    fn name(&self) -> String {
        "tree_residual_dominator".into()
    }

    fn init(&self, g: &Graph, _: Player) -> Result<ResidualGraph, PolicyError> {
        if !g.is_tree() || g.n() < 3 {
            return Err(PolicyError::ArenaMismatch { policy: self.name(), reason: "needs a tree of order at least 3".into() });
        }
        Ok(compute_residual(g, VertexSet::EMPTY))
    }

    fn choose(&self, g: &Graph, _: &GameState, r: &ResidualGraph) -> Result<usize, PolicyError> {
        let c = r.classify(g).map_err(|e| self.defect(e))?;
        let pick = match c.stage {
            Stage::One => {
                let big: Vec<VertexSet> =
                    c.components.iter().filter(|x| x.1 == ComponentKind::Big).map(|x| x.0).collect();
                big.iter()
                    .find_map(|&comp| star_centre(g, comp))
                    .or_else(|| diametrical_path(g, big[0]).get(2).copied())
            }
            Stage::Two => match c.first_of(ComponentKind::P3) {
                Some(p3) => p3.iter().find(|&v| (g.open_nbr(v) & p3).len() == 2),
                None => r.blue().iter().find(|&u| {
                    let seen = g.open_nbr(u) & r.white();
                    c.components.iter().filter(|x| x.0.intersects(seen)).count() >= 2
                }),
            },
            Stage::Three => r.white().first(),
        };
        pick.ok_or_else(|| PolicyError::Defect { policy: self.name(), reason: format!("no stage {} move", c.stage) })
    }

    fn observe(&self, g: &Graph, state: &GameState, v: usize, r: &mut ResidualGraph) -> Result<(), PolicyError> {
        let stage = self.stage_of_move(g, r, state.to_move)?;
        *r = r.update(g, v, stage).map_err(|e| self.defect(e))?;
        Ok(())
    }
}

fn star_centre(g: &Graph, comp: VertexSet) -> Option<usize> {
    comp.iter().find(|&v| comp.without(v).is_subset(g.open_nbr(v)))
}

/// BFS distances and parents inside `comp` from `root`.
fn bfs(g: &Graph, comp: VertexSet, root: usize) -> (Vec<usize>, Vec<usize>) {
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    dist[root] = 0;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for u in g.open_nbr(v) & comp {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    (dist, parent)
}

/// Lexicographically smallest vertex sequence among the longest shortest
/// paths of the subgraph induced by `comp`.
pub fn diametrical_path(g: &Graph, comp: VertexSet) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for b in comp {
        // paths are read from a to b following parents towards b
        let (dist, parent) = bfs(g, comp, b);
        let far = comp.iter().map(|v| dist[v]).max().unwrap_or(0);
        for a in comp.iter().filter(|&a| dist[a] == far) {
            let mut seq = vec![a];
            while *seq.last().unwrap() != b {
                seq.push(parent[*seq.last().unwrap()]);
            }
            let longer = best.as_ref().map_or(true, |p| seq.len() > p.len());
            if longer || (best.as_ref().unwrap().len() == seq.len() && seq < *best.as_ref().unwrap()) {
                best = Some(seq);
            }
        }
    }
    best.unwrap_or_default()
}

/// Worst case of the tree strategy over every Staller behaviour in the
/// D-game, with the per-move weight decreases it guarantees.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreeAudit {
    /// Longest game Staller can force.
    pub worst_moves: u32,
    /// Smallest weight decrease seen for each mover and stage.
    pub min_xi: BTreeMap<(Player, Stage), i64>,
    /// Smallest decrease of a Dominator move plus the Staller reply, over
    /// pairs in stages 1 and 2.
    pub min_pair: Option<i64>,
    /// Broken guarantees, one line each.
    pub violations: Vec<String>,
    pub states: u64,
}

impl TreeAudit {
    fn record(&mut self, who: Player, stage: Stage, xi: i64) {
        let floor = match (who, stage) {
            (Player::Dominator, Stage::One) => 17,
            (Player::Dominator, Stage::Two) => 15,
            (Player::Staller, Stage::One) => 5,
            (Player::Staller, Stage::Two) => 7,
            (_, Stage::Three) => 11,
        };
        if xi < floor {
            self.violations.push(format!("{who} move in stage {stage} decreased the weight by {xi} < {floor}"));
        }
        let e = self.min_xi.entry((who, stage)).or_insert(xi);
        *e = (*e).min(xi);
    }
}

struct Explorer<'a> {
    g: &'a Graph,
    policy: TreeResidualDominator,
    memo: FxHashMap<(u32, ResidualGraph), u8>,
    audit: TreeAudit,
}

impl Explorer<'_> {
    fn check(&mut self, r: &ResidualGraph) {
        for v in r.invariant_violations(self.g) {
            self.audit.violations.push(format!("residual after {:?}: {v}", r.selected()));
        }
    }

    /// Longest continuation with Dominator to move.
    fn explore(&mut self, dominated: VertexSet, r: &ResidualGraph) -> Result<u8, SolveError> {
        if r.white().is_empty() {
            return Ok(0);
        }
        let key = (dominated.bits(), r.clone());
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let g = self.g;
        let p = self.policy;
        let state = GameState { dominated, to_move: Player::Dominator };
        let d_stage = p.stage_of_move(g, r, Player::Dominator)?;
        let v = checked_choice(g, &p, &state, r)?;
        let mut after_d = r.clone();
        p.observe(g, &state, v, &mut after_d)?;
        self.check(&after_d);
        let xi_d = r.weight_at(d_stage) - after_d.weight_at(d_stage);
        self.audit.record(Player::Dominator, d_stage, xi_d);
        let dominated = dominated | g.closed_nbr(v);

        let mut worst = 1;
        if !after_d.white().is_empty() {
            let state = GameState { dominated, to_move: Player::Staller };
            let s_stage = p.stage_of_move(g, &after_d, Player::Staller)?;
            for s in g.closed_nbr_of(after_d.white()) {
                let mut after_s = after_d.clone();
                p.observe(g, &state, s, &mut after_s)?;
                self.check(&after_s);
                let xi_s = after_d.weight_at(s_stage) - after_s.weight_at(s_stage);
                self.audit.record(Player::Staller, s_stage, xi_s);
                if s_stage != Stage::Three {
                    let pair = xi_d + xi_s;
                    self.audit.min_pair = Some(self.audit.min_pair.map_or(pair, |m| m.min(pair)));
                    if pair < 22 {
                        self.audit.violations.push(format!("moves {v},{s} decreased the weight by {pair} < 22"));
                    }
                }
                worst = worst.max(2 + self.explore(dominated | g.closed_nbr(s), &after_s)?);
            }
        }
        self.audit.states += 1;
        self.memo.insert(key, worst);
        Ok(worst)
    }
}

/// Explores every Staller reply to the tree strategy in the D-game.
pub fn audit_tree_strategy(t: &Graph) -> Result<TreeAudit, SolveError> {
    let policy = TreeResidualDominator;
    let r = policy.init(t, Player::Dominator)?;
    let mut ex = Explorer { g: t, policy, memo: FxHashMap::default(), audit: TreeAudit::default() };
    let worst = ex.explore(VertexSet::EMPTY, &r)?;
    ex.audit.worst_moves = u32::from(worst);
    ex.audit.violations.sort();
    ex.audit.violations.dedup();
    Ok(ex.audit)
}
