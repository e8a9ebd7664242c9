//! Exploration over concrete simulator assemblies.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::dynamics::{frontier, AssemblySequence, Attachment};
use crate::model::{Assembly, Placement, TileSystem, TileType};

use super::rep::{rep_star, unclean_blocks, Representation};
use super::{Reach, SimGraph};

pub(crate) struct ExplicitExplorer<'a> {
    sim: &'a TileSystem,
    states: Vec<Assembly>,
    parent: Vec<Option<(usize, Attachment)>>,
    edges: Vec<Vec<Attachment>>,
    pub(crate) graph: SimGraph,
}

impl<'a> ExplicitExplorer<'a> {
    pub(crate) fn explore(
        sim: &'a TileSystem,
        target: &[TileType],
        rep: &Representation,
        max_image: usize,
        max_sim_tiles: usize,
        state_limit: usize,
    ) -> ExplicitExplorer<'a> {
        let mut ex = ExplicitExplorer {
            sim,
            states: Vec::new(),
            parent: Vec::new(),
            edges: Vec::new(),
            graph: SimGraph::default(),
        };
        let mut index: HashMap<Vec<Placement>, usize> = HashMap::new();
        let seed = sim.seed().clone();
        index.insert(seed.canonical(), 0);
        ex.push(seed, target, rep, None);
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            if ex.graph.images[i].is_err() {
                continue;
            }
            let cur = ex.states[i].clone();
            for att in frontier(sim, &cur) {
                let child = cur
                    .with(att, sim.tiles())
                    .expect("frontier entries are legal");
                if child.len() > max_sim_tiles {
                    ex.graph.truncated = true;
                    continue;
                }
                let key = child.canonical();
                let id = match index.get(&key) {
                    Some(&id) => id,
                    None => {
                        if matches!(rep_star(rep, &child, target), Ok(img) if img.len() > max_image)
                        {
                            ex.graph.bound_reached = true;
                            continue;
                        }
                        if ex.states.len() >= state_limit {
                            ex.graph.resource_limited = true;
                            continue;
                        }
                        let id = ex.push(child, target, rep, Some((i, att)));
                        index.insert(key, id);
                        queue.push_back(id);
                        id
                    }
                };
                ex.edges[i].push(att);
                ex.graph.succ[i].push(id);
            }
        }
        ex
    }

    fn push(
        &mut self,
        a: Assembly,
        target: &[TileType],
        rep: &Representation,
        parent: Option<(usize, Attachment)>,
    ) -> usize {
        let id = self.states.len();
        let image = rep_star(rep, &a, target);
        let unclean = match &image {
            Ok(img) => {
                let occ: BTreeSet<(i64, i64)> =
                    a.positions().filter_map(|p| rep.block_of(p)).collect();
                unclean_blocks(&occ, img)
            }
            Err(_) => Vec::new(),
        };
        self.graph
            .terminal_member
            .push(frontier(self.sim, &a).is_empty());
        self.graph.images.push(image);
        self.graph.unclean.push(unclean);
        self.graph.succ.push(Vec::new());
        self.states.push(a);
        self.parent.push(parent);
        self.edges.push(Vec::new());
        id
    }

    pub(crate) fn witness(&self, i: usize) -> AssemblySequence {
        let mut steps = Vec::new();
        let mut cur = i;
        while let Some((p, att)) = self.parent[cur] {
            steps.push(att);
            cur = p;
        }
        steps.reverse();
        AssemblySequence {
            seed: self.states[0].clone(),
            steps,
        }
    }

    pub(crate) fn witness_edge(&self, i: usize, e: usize) -> AssemblySequence {
        let mut seq = self.witness(i);
        seq.steps.push(self.edges[i][e]);
        seq
    }

    /// Whether state `i` grows into something whose image is `beta`,
    /// passing only through states that keep its own image.
    pub(crate) fn all_members_reach(&self, i: usize, beta: &Assembly) -> Reach {
        let Ok(alpha) = &self.graph.images[i] else {
            return Reach::Unknown;
        };
        let mut seen = vec![false; self.states.len()];
        let mut stack = vec![i];
        seen[i] = true;
        while let Some(u) = stack.pop() {
            for &v in &self.graph.succ[u] {
                if seen[v] {
                    continue;
                }
                seen[v] = true;
                match &self.graph.images[v] {
                    Ok(img) if img == beta => return Reach::Yes,
                    Ok(img) if img == alpha => stack.push(v),
                    _ => {}
                }
            }
        }
        if self.graph.truncated || self.graph.resource_limited {
            Reach::Unknown
        } else {
            Reach::No(self.witness(i))
        }
    }
}
