//! Bounded exhaustive exploration of producible assemblies.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use super::{frontier, AssemblySequence, Attachment};
use crate::model::{Assembly, Placement, TileSystem};

/// Default cap on distinct assemblies visited by one exploration.
pub const DEFAULT_STATE_LIMIT: usize = 2_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("exploration stopped after {explored} assemblies (limit {limit})")]
    ResourceLimit { explored: usize, limit: usize },
}

/// Producible assemblies up to a tile bound and the attachments between them.
#[derive(Clone, Debug)]
pub struct StateGraph {
    pub states: Vec<Assembly>,
    /// Outgoing attachments for states below the bound.
    pub successors: Vec<Vec<(Attachment, usize)>>,
    /// First discovered predecessor, for witness sequences.
    pub parent: Vec<Option<(usize, Attachment)>>,
    /// Whether the state has any legal attachment (even past the bound).
    pub open: Vec<bool>,
    pub max_tiles: usize,
    index: HashMap<Vec<Placement>, usize>,
}

impl StateGraph {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn find(&self, a: &Assembly) -> Option<usize> {
        self.index.get(&a.canonical()).copied()
    }

    /// Attachment sequence from the seed to state `i`.
    pub fn sequence_to(&self, i: usize) -> AssemblySequence {
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

    pub fn is_terminal(&self, i: usize) -> bool {
        !self.open[i]
    }

    /// Any state at the bound that could still grow.
    pub fn truncated(&self) -> bool {
        (0..self.len()).any(|i| self.open[i] && self.states[i].len() >= self.max_tiles)
    }
}

/// Breadth-first exploration of all producible assemblies with at most
/// `max_tiles` tiles.
pub fn explore(
    sys: &TileSystem,
    max_tiles: usize,
    limit: usize,
) -> Result<StateGraph, EnumerationError> {
    let seed = sys.seed().clone();
    let mut g = StateGraph {
        index: HashMap::from([(seed.canonical(), 0)]),
        states: vec![seed],
        successors: vec![Vec::new()],
        parent: vec![None],
        open: vec![false],
        max_tiles,
    };
    let mut next = 0;
    while next < g.states.len() {
        let cur = g.states[next].clone();
        let f = frontier(sys, &cur);
        g.open[next] = !f.is_empty();
        if cur.len() < max_tiles {
            for att in f {
                let child = cur
                    .with(att, sys.tiles())
                    .expect("frontier entries are legal");
                let key = child.canonical();
                let id = match g.index.get(&key) {
                    Some(&id) => id,
                    None => {
                        if g.states.len() >= limit {
                            return Err(EnumerationError::ResourceLimit {
                                explored: g.states.len(),
                                limit,
                            });
                        }
                        let id = g.states.len();
                        g.index.insert(key, id);
                        g.states.push(child);
                        g.successors.push(Vec::new());
                        g.parent.push(Some((next, att)));
                        g.open.push(false);
                        id
                    }
                };
                g.successors[next].push((att, id));
            }
        }
        next += 1;
    }
    Ok(g)
}

pub fn enumerate_producible(
    sys: &TileSystem,
    max_tiles: usize,
) -> Result<Vec<Assembly>, EnumerationError> {
    Ok(explore(sys, max_tiles, DEFAULT_STATE_LIMIT)?.states)
}

#[derive(Clone, Debug)]
pub struct Terminals {
    pub assemblies: Vec<Assembly>,
    pub truncated: bool,
}

pub fn enumerate_terminal(
    sys: &TileSystem,
    max_tiles: usize,
) -> Result<Terminals, EnumerationError> {
    let g = explore(sys, max_tiles, DEFAULT_STATE_LIMIT)?;
    let truncated = g.truncated();
    let assemblies = (0..g.len())
        .filter(|&i| g.is_terminal(i))
        .map(|i| g.states[i].clone())
        .collect();
    Ok(Terminals {
        assemblies,
        truncated,
    })
}

/// A yes/no answer that only holds up to the exploration bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundedVerdict {
    pub holds: bool,
    /// Some explored assembly could still grow past the bound.
    pub truncated: bool,
    pub explored: usize,
}

/// At most one terminal assembly, and all maximal explored assemblies agree
/// wherever they overlap.
pub fn is_directed(sys: &TileSystem, max_tiles: usize) -> Result<BoundedVerdict, EnumerationError> {
    let g = explore(sys, max_tiles, DEFAULT_STATE_LIMIT)?;
    let terminals = (0..g.len()).filter(|&i| g.is_terminal(i)).count();
    let mut seen: BTreeMap<_, Placement> = BTreeMap::new();
    let mut agree = true;
    'outer: for i in (0..g.len()).filter(|&i| g.successors[i].is_empty()) {
        for (p, inst) in g.states[i].cells() {
            let pl = g.states[i].instance(inst);
            if let Some(prev) = seen.insert(p, pl) {
                if prev != pl {
                    agree = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(BoundedVerdict {
        holds: terminals <= 1 && agree,
        truncated: g.truncated(),
        explored: g.len(),
    })
}

/// Every explored assembly has at most one frontier location.
pub fn is_sass(sys: &TileSystem, max_tiles: usize) -> Result<BoundedVerdict, EnumerationError> {
    let g = explore(sys, max_tiles, DEFAULT_STATE_LIMIT)?;
    let holds = g
        .states
        .iter()
        .all(|a| super::frontier_locations(sys, a).len() <= 1);
    Ok(BoundedVerdict {
        holds,
        truncated: g.truncated(),
        explored: g.len(),
    })
}

/// SASS, and the frontier's y coordinate never decreases along growth.
pub fn is_zigzag(sys: &TileSystem, max_tiles: usize) -> Result<BoundedVerdict, EnumerationError> {
    let g = explore(sys, max_tiles, DEFAULT_STATE_LIMIT)?;
    let locs: Vec<_> = g
        .states
        .iter()
        .map(|a| super::frontier_locations(sys, a))
        .collect();
    let mut holds = locs.iter().all(|l| l.len() <= 1);
    if holds {
        'outer: for (i, succ) in g.successors.iter().enumerate() {
            let Some(py) = locs[i].first().map(|p| p.y) else {
                continue;
            };
            for &(_, j) in succ {
                if let Some(cy) = locs[j].first().map(|p| p.y) {
                    if cy < py {
                        holds = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(BoundedVerdict {
        holds,
        truncated: g.truncated(),
        explored: g.len(),
    })
}
