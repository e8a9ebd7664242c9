//! Bounded checking of whether one system simulates another.
//!
//! Everything is decided over producible assemblies whose image has at
//! most `bound` tiles. A pass means no counterexample exists within that
//! bound, nothing more.

mod explicit;
mod lazy;
mod rep;

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::dynamics::{explore, EnumerationError, StateGraph, DEFAULT_STATE_LIMIT};
use crate::dynamics::{frontier, AssemblySequence};
use crate::model::{Assembly, Placement, TileId, TileSystem};

use explicit::ExplicitExplorer;
use lazy::{Groups, LazyExplorer};

pub use rep::{
    block_at, fuzz_violations, image_of_cells, maps_cleanly, rep_star, BlockPattern,
    BlockRepresentation, RepError, Representation, TileImage,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimulationError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("representation has {found} entries for {expected} simulator tiles")]
    RepSize { expected: usize, found: usize },
    #[error("class exploration needs a scale-1 representation whose classes are full products of side options")]
    LazyUnavailable,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Clause {
    /// Images of producible assemblies are exactly the target's producible assemblies.
    ProducibleImages,
    /// Same for terminal assemblies.
    TerminalImages,
    /// Every producible simulator assembly maps cleanly.
    CleanMapping,
    /// The target follows the simulator.
    Follows,
    /// The simulator models the target.
    Models,
}

impl Clause {
    pub const ALL: [Clause; 5] = [
        Clause::ProducibleImages,
        Clause::TerminalImages,
        Clause::CleanMapping,
        Clause::Follows,
        Clause::Models,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Clause::ProducibleImages => "producible-images",
            Clause::TerminalImages => "terminal-images",
            Clause::CleanMapping => "clean-mapping",
            Clause::Follows => "follows",
            Clause::Models => "models",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Verdict {
    Pass,
    Fail,
    /// The bound or the state limit cut the search short before a decision.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Simulator sequence reaching the offending assembly.
    pub sim_sequence: Option<AssemblySequence>,
    /// Target assembly involved, if any.
    pub target: Option<Assembly>,
    /// Target sequence reaching `target`, when it is producible there.
    pub target_sequence: Option<AssemblySequence>,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseResult {
    pub clause: Clause,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl ClauseResult {
    fn pass(clause: Clause) -> Self {
        ClauseResult {
            clause,
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    fn inconclusive(clause: Clause, why: impl Into<String>) -> Self {
        ClauseResult {
            clause,
            verdict: Verdict::Inconclusive,
            witness: Some(Witness {
                sim_sequence: None,
                target: None,
                target_sequence: None,
                description: why.into(),
            }),
        }
    }

    fn fail(
        clause: Clause,
        sim_sequence: Option<AssemblySequence>,
        target: Option<Assembly>,
        description: impl Into<String>,
    ) -> Self {
        ClauseResult {
            clause,
            verdict: Verdict::Fail,
            witness: Some(Witness {
                sim_sequence,
                target,
                target_sequence: None,
                description: description.into(),
            }),
        }
    }

    fn reached_by(mut self, seq: AssemblySequence) -> Self {
        if let Some(w) = &mut self.witness {
            w.target_sequence = Some(seq);
        }
        self
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum CheckMode {
    /// Class exploration when available, concrete otherwise.
    #[default]
    Auto,
    Lazy,
    Explicit,
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    /// Largest image size examined.
    pub bound: usize,
    pub mode: CheckMode,
    pub state_limit: usize,
    /// Cap on simulator tiles per explored assembly; derived from the
    /// bound and the scale when `None`.
    pub max_sim_tiles: Option<usize>,
}

impl CheckOptions {
    pub fn new(bound: usize) -> Self {
        CheckOptions {
            bound,
            mode: CheckMode::Auto,
            state_limit: DEFAULT_STATE_LIMIT,
            max_sim_tiles: None,
        }
    }

    pub fn mode(mut self, mode: CheckMode) -> Self {
        self.mode = mode;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimulationReport {
    pub bound: usize,
    /// `Lazy` or `Explicit`: the mode actually used.
    pub mode: CheckMode,
    pub clauses: Vec<ClauseResult>,
    /// Some assembly had growth cut off by the bound.
    pub bound_reached: bool,
    pub resource_limited: bool,
    pub sim_states: usize,
    pub target_states: usize,
}

impl SimulationReport {
    pub fn verdict(&self) -> Verdict {
        let vs: Vec<Verdict> = self.clauses.iter().map(|c| c.verdict).collect();
        if vs.contains(&Verdict::Fail) {
            Verdict::Fail
        } else if vs.contains(&Verdict::Inconclusive) {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        }
    }

    pub fn clause(&self, c: Clause) -> Option<&ClauseResult> {
        self.clauses.iter().find(|r| r.clause == c)
    }

    /// 0 on pass, 3 on a failed clause, 4 when only inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self.verdict() {
            Verdict::Pass => 0,
            Verdict::Fail => 3,
            Verdict::Inconclusive => 4,
        }
    }
}

/// Simulator images, terminality and edges, shared by both exploration modes.
#[derive(Clone, Debug, Default)]
pub(crate) struct SimGraph {
    pub images: Vec<Result<Assembly, RepError>>,
    /// Some simulator assembly in the state is terminal.
    pub terminal_member: Vec<bool>,
    pub unclean: Vec<Vec<(i64, i64)>>,
    pub succ: Vec<Vec<usize>>,
    /// A child was dropped because its image exceeded the bound.
    pub bound_reached: bool,
    /// A child was dropped because of the simulator tile cap.
    pub truncated: bool,
    pub resource_limited: bool,
}

impl SimGraph {
    fn incomplete(&self) -> bool {
        self.truncated || self.resource_limited
    }
}

pub(crate) enum Reach {
    Yes,
    No(AssemblySequence),
    Unknown,
}

enum SimSide<'a> {
    Lazy(LazyExplorer<'a>),
    Explicit(ExplicitExplorer<'a>),
}

impl SimSide<'_> {
    fn graph(&self) -> &SimGraph {
        match self {
            SimSide::Lazy(e) => &e.graph,
            SimSide::Explicit(e) => &e.graph,
        }
    }

    fn witness(&self, i: usize) -> AssemblySequence {
        match self {
            SimSide::Lazy(e) => e.witness(i),
            SimSide::Explicit(e) => e.witness(i),
        }
    }

    fn witness_edge(&self, i: usize, e: usize) -> AssemblySequence {
        match self {
            SimSide::Lazy(x) => x.witness_edge(i, e),
            SimSide::Explicit(x) => x.witness_edge(i, e),
        }
    }

    fn all_members_reach(&self, i: usize, beta: &Assembly) -> Reach {
        match self {
            SimSide::Lazy(e) => e.all_members_reach(i, beta),
            SimSide::Explicit(e) => e.all_members_reach(i, beta),
        }
    }
}

/// Explores both systems once; clause checks then read the shared graphs.
pub struct Checker<'a> {
    target: &'a TileSystem,
    opts: CheckOptions,
    tgraph: StateGraph,
    side: SimSide<'a>,
    /// Simulator states grouped by the canonical form of their image.
    by_image: HashMap<Vec<Placement>, Vec<usize>>,
}

impl<'a> Checker<'a> {
    pub fn new(
        sim: &'a TileSystem,
        target: &'a TileSystem,
        rep: &'a Representation,
        opts: CheckOptions,
    ) -> Result<Self, SimulationError> {
        validate_rep(sim, target, rep)?;
        let tgraph = explore(target, opts.bound, opts.state_limit)?;
        let k = opts.bound;
        let scale = rep.scale();
        let max_cells = target
            .tiles()
            .iter()
            .map(|t| t.cells().len())
            .max()
            .unwrap_or(1);
        let cap = opts
            .max_sim_tiles
            .unwrap_or(scale * scale * (max_cells * k + 4 * (k + 1)));
        let groups = match rep {
            Representation::Tiles(map) if opts.mode != CheckMode::Explicit => {
                Groups::build(sim, map)
            }
            _ => None,
        };
        let side = match (opts.mode, groups) {
            (CheckMode::Lazy, None) => return Err(SimulationError::LazyUnavailable),
            (_, Some(g)) => SimSide::Lazy(LazyExplorer::explore(
                sim,
                target.tiles(),
                g,
                k,
                cap,
                opts.state_limit,
            )),
            (_, None) => SimSide::Explicit(ExplicitExplorer::explore(
                sim,
                target.tiles(),
                rep,
                k,
                cap,
                opts.state_limit,
            )),
        };
        let mut by_image: HashMap<Vec<Placement>, Vec<usize>> = HashMap::new();
        for (i, img) in side.graph().images.iter().enumerate() {
            if let Ok(a) = img {
                by_image.entry(a.canonical()).or_default().push(i);
            }
        }
        Ok(Checker {
            target,
            opts,
            tgraph,
            side,
            by_image,
        })
    }

    pub fn mode(&self) -> CheckMode {
        match self.side {
            SimSide::Lazy(_) => CheckMode::Lazy,
            SimSide::Explicit(_) => CheckMode::Explicit,
        }
    }

    fn graph(&self) -> &SimGraph {
        self.side.graph()
    }

    pub fn check(&self, clause: Clause) -> ClauseResult {
        match clause {
            Clause::ProducibleImages => self.producible_images(),
            Clause::TerminalImages => self.terminal_images(),
            Clause::CleanMapping => self.clean_mapping(),
            Clause::Follows => self.follows(),
            Clause::Models => self.models(),
        }
    }

    pub fn report(&self, clauses: &[Clause]) -> SimulationReport {
        let g = self.graph();
        SimulationReport {
            bound: self.opts.bound,
            mode: self.mode(),
            clauses: clauses.iter().map(|c| self.check(*c)).collect(),
            bound_reached: g.bound_reached || g.truncated || self.tgraph.truncated(),
            resource_limited: g.resource_limited,
            sim_states: g.images.len(),
            target_states: self.tgraph.len(),
        }
    }

    fn producible_images(&self) -> ClauseResult {
        let c = Clause::ProducibleImages;
        let g = self.graph();
        let mut hit = HashSet::new();
        for (i, img) in g.images.iter().enumerate() {
            match img {
                Err(e) => {
                    return ClauseResult::fail(
                        c,
                        Some(self.side.witness(i)),
                        None,
                        format!("image undefined: {e}"),
                    )
                }
                Ok(a) => match self.tgraph.find(a) {
                    Some(j) => {
                        hit.insert(j);
                    }
                    None => {
                        return ClauseResult::fail(
                            c,
                            Some(self.side.witness(i)),
                            Some(a.clone()),
                            "image is not producible in the target",
                        )
                    }
                },
            }
        }
        if let Some(j) = (0..self.tgraph.len()).find(|j| !hit.contains(j)) {
            if g.incomplete() {
                return ClauseResult::inconclusive(
                    c,
                    "a target assembly was not reached before the simulator search stopped",
                );
            }
            return ClauseResult::fail(
                c,
                None,
                Some(self.tgraph.states[j].clone()),
                "target assembly is the image of no producible simulator assembly",
            )
            .reached_by(self.tgraph.sequence_to(j));
        }
        ClauseResult::pass(c)
    }

    fn terminal_images(&self) -> ClauseResult {
        let c = Clause::TerminalImages;
        let g = self.graph();
        let mut hit = HashSet::new();
        for (i, img) in g.images.iter().enumerate() {
            let (Ok(a), true) = (img, g.terminal_member[i]) else {
                continue;
            };
            if let Some(j) = self.tgraph.find(a) {
                if !self.tgraph.is_terminal(j) {
                    return ClauseResult::fail(
                        c,
                        Some(self.side.witness(i)),
                        Some(a.clone()),
                        "terminal simulator assembly maps to a non-terminal target assembly",
                    );
                }
                hit.insert(j);
            }
        }
        for j in (0..self.tgraph.len()).filter(|&j| self.tgraph.is_terminal(j)) {
            if !hit.contains(&j) {
                if g.incomplete() {
                    return ClauseResult::inconclusive(c, "a terminal target assembly was not reached before the simulator search stopped");
                }
                return ClauseResult::fail(
                    c,
                    None,
                    Some(self.tgraph.states[j].clone()),
                    "terminal target assembly is the image of no terminal simulator assembly",
                )
                .reached_by(self.tgraph.sequence_to(j));
            }
        }
        ClauseResult::pass(c)
    }

    fn clean_mapping(&self) -> ClauseResult {
        let c = Clause::CleanMapping;
        let g = self.graph();
        for (i, blocks) in g.unclean.iter().enumerate() {
            if let Some(b) = blocks.first() {
                return ClauseResult::fail(
                    c,
                    Some(self.side.witness(i)),
                    g.images[i].as_ref().ok().cloned(),
                    format!("block ({}, {}) is not next to the image", b.0, b.1),
                );
            }
        }
        ClauseResult::pass(c)
    }

    fn follows(&self) -> ClauseResult {
        let c = Clause::Follows;
        let g = self.graph();
        let mut memo: HashMap<(usize, usize), bool> = HashMap::new();
        for (i, succ) in g.succ.iter().enumerate() {
            let Ok(a) = &g.images[i] else { continue };
            for (e, &j) in succ.iter().enumerate() {
                let Ok(b) = &g.images[j] else { continue };
                if a == b {
                    continue;
                }
                let ok = match (self.tgraph.find(a), self.tgraph.find(b)) {
                    (Some(ta), Some(tb)) => *memo
                        .entry((ta, tb))
                        .or_insert_with(|| target_reaches(&self.tgraph, ta, tb)),
                    _ => grows_into(self.target, a, b),
                };
                if !ok {
                    return ClauseResult::fail(
                        c,
                        Some(self.side.witness_edge(i, e)),
                        Some(b.clone()),
                        "simulator step maps to assemblies the target cannot step between",
                    );
                }
            }
        }
        ClauseResult::pass(c)
    }

    fn models(&self) -> ClauseResult {
        let c = Clause::Models;
        let mut unknown = false;
        for (ta, succ) in self.tgraph.successors.iter().enumerate() {
            let alpha = &self.tgraph.states[ta];
            let Some(members) = self.by_image.get(&alpha.canonical()) else {
                continue;
            };
            for &(_, tb) in succ {
                let beta = &self.tgraph.states[tb];
                for &i in members {
                    match self.side.all_members_reach(i, beta) {
                        Reach::Yes => {}
                        Reach::Unknown => unknown = true,
                        Reach::No(seq) => {
                            return ClauseResult::fail(
                                c,
                                Some(seq),
                                Some(beta.clone()),
                                "a simulator assembly cannot grow to represent this target step",
                            )
                            .reached_by(self.tgraph.sequence_to(tb))
                        }
                    }
                }
            }
        }
        if unknown {
            return ClauseResult::inconclusive(c, "some growth check exceeded the search limits");
        }
        ClauseResult::pass(c)
    }
}

fn validate_rep(
    sim: &TileSystem,
    target: &TileSystem,
    rep: &Representation,
) -> Result<(), SimulationError> {
    let tn = target.tiles().len();
    match rep {
        Representation::Tiles(map) => {
            if map.len() != sim.tiles().len() {
                return Err(SimulationError::RepSize {
                    expected: sim.tiles().len(),
                    found: map.len(),
                });
            }
            for img in map {
                match *img {
                    TileImage::Tile(t) if t >= tn => return Err(RepError::UnknownTile(t).into()),
                    TileImage::Half { duple, half }
                        if duple >= tn || half >= target.tile(duple).cells().len() =>
                    {
                        return Err(RepError::UnknownTile(duple).into())
                    }
                    _ => {}
                }
            }
        }
        Representation::Blocks(b) => {
            b.validate()?;
            for (_, t) in b.entries() {
                if *t >= tn {
                    return Err(RepError::UnknownTile(*t).into());
                }
            }
        }
    }
    Ok(())
}

fn target_reaches(g: &StateGraph, from: usize, to: usize) -> bool {
    let mut seen = vec![false; g.len()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(u) = stack.pop() {
        if u == to {
            return true;
        }
        for &(_, v) in &g.successors[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    false
}

/// Whether `b` can be built from `a` by legal attachments, each of which
/// places one of `b`'s tiles.
fn grows_into(sys: &TileSystem, a: &Assembly, b: &Assembly) -> bool {
    if !a.is_subassembly_of(b) {
        return false;
    }
    let goal = b.canonical();
    let mut seen = HashSet::from([a.canonical()]);
    let mut stack = vec![a.clone()];
    while let Some(cur) = stack.pop() {
        if cur.len() == b.len() {
            if cur.canonical() == goal {
                return true;
            }
            continue;
        }
        for att in frontier(sys, &cur) {
            if b.placement_at(att.anchor) != Some(att) {
                continue;
            }
            let next = cur
                .with(att, sys.tiles())
                .expect("frontier entries are legal");
            if seen.insert(next.canonical()) {
                stack.push(next);
            }
        }
    }
    false
}

fn run(
    sim: &TileSystem,
    target: &TileSystem,
    rep: &Representation,
    opts: CheckOptions,
    clauses: &[Clause],
) -> Result<SimulationReport, SimulationError> {
    Ok(Checker::new(sim, target, rep, opts)?.report(clauses))
}

/// Producible and terminal images match the target's.
pub fn check_equivalent_productions(
    sim: &TileSystem,
    target: &TileSystem,
    rep: &Representation,
    opts: CheckOptions,
) -> Result<SimulationReport, SimulationError> {
    run(
        sim,
        target,
        rep,
        opts,
        &[Clause::ProducibleImages, Clause::TerminalImages],
    )
}

pub fn check_follows(
    sim: &TileSystem,
    target: &TileSystem,
    rep: &Representation,
    opts: CheckOptions,
) -> Result<SimulationReport, SimulationError> {
    run(sim, target, rep, opts, &[Clause::Follows])
}

pub fn check_models(
    sim: &TileSystem,
    target: &TileSystem,
    rep: &Representation,
    opts: CheckOptions,
) -> Result<SimulationReport, SimulationError> {
    run(sim, target, rep, opts, &[Clause::Models])
}

/// All clauses.
pub fn check_simulation(
    sim: &TileSystem,
    target: &TileSystem,
    rep: &Representation,
    opts: CheckOptions,
) -> Result<SimulationReport, SimulationError> {
    run(sim, target, rep, opts, &Clause::ALL)
}

/// Removes simulator tiles rejected by `keep`, renumbering the rest and
/// the scale-1 representation with them. Seed tiles must be kept.
pub fn restrict_tiles(
    sim: &TileSystem,
    rep: &Representation,
    keep: impl Fn(TileId) -> bool,
) -> Result<(TileSystem, Representation), SimulationError> {
    let Representation::Tiles(map) = rep else {
        return Err(SimulationError::LazyUnavailable);
    };
    let mut renumber = vec![None; sim.tiles().len()];
    let mut tiles = Vec::new();
    let mut images = Vec::new();
    for (t, tile) in sim.tiles().iter().enumerate() {
        if keep(t) {
            renumber[t] = Some(tiles.len());
            tiles.push(tile.clone());
            images.push(map[t]);
        }
    }
    let seed = sim
        .seed()
        .placements()
        .iter()
        .map(|p| {
            renumber[p.tile]
                .map(|tile| Placement {
                    tile,
                    anchor: p.anchor,
                })
                .ok_or(RepError::UnknownTile(p.tile))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let out = TileSystem::new(
        sim.model(),
        sim.glues().clone(),
        tiles,
        seed,
        sim.temperature(),
        sim.geometry_len(),
    )
    .expect("a subset of a valid system is valid");
    Ok((out, Representation::Tiles(images)))
}

#[cfg(test)]
mod tests;
