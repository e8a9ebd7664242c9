//! Exploration over classes of simulator assemblies.
//!
//! Applies when the simulator tiles sharing an image form a full product of
//! per-side face options, which holds for compiled systems. A state records
//! only which class sits in each cell. Sides facing empty cells are left
//! open: whichever face they carry was chosen when the cell next to them
//! was still empty, so every choice is reachable. Attachments then exist
//! for some member when each abutting side admits a compatible pair and
//! the best pairs reach the temperature.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::dynamics::AssemblySequence;
use crate::model::{Assembly, Face, Placement, Pos, Side, TileId, TileSystem, TileType};

use super::rep::{image_of_cells, unclean_blocks, TileImage};
use super::{Reach, SimGraph};

/// Cap on face combinations examined by one universal step check.
const COMBO_LIMIT: usize = 1 << 14;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub(crate) enum Slot {
    /// A concrete seed tile.
    Fixed(TileId),
    Group(usize),
}

pub(crate) struct Groups {
    images: Vec<TileImage>,
    options: Vec<[Vec<Face>; 4]>,
    tile_of: HashMap<(usize, [usize; 4]), TileId>,
    group_of: Vec<usize>,
}

impl Groups {
    /// `None` unless every class is a full product of side options.
    pub(crate) fn build(sim: &TileSystem, map: &[TileImage]) -> Option<Groups> {
        if sim.tiles().iter().any(|t| t.cells().len() != 1) || map.len() != sim.tiles().len() {
            return None;
        }
        let mut by_image: BTreeMap<TileImage, Vec<TileId>> = BTreeMap::new();
        for (t, img) in map.iter().enumerate() {
            by_image.entry(*img).or_default().push(t);
        }
        let mut groups = Groups {
            images: Vec::new(),
            options: Vec::new(),
            tile_of: HashMap::new(),
            group_of: vec![0; map.len()],
        };
        for (g, (img, members)) in by_image.into_iter().enumerate() {
            let mut opts: [Vec<Face>; 4] = Default::default();
            for &t in &members {
                for s in Side::ALL {
                    let f = sim.tile(t).cells()[0].sides[s.index()].clone()?;
                    if !opts[s.index()].contains(&f) {
                        opts[s.index()].push(f);
                    }
                }
            }
            let product: usize = opts.iter().map(|o| o.len()).product();
            if product != members.len() {
                return None;
            }
            for &t in &members {
                let idx = Side::ALL.map(|s| {
                    let f = sim.tile(t).cells()[0].sides[s.index()]
                        .as_ref()
                        .expect("checked");
                    opts[s.index()]
                        .iter()
                        .position(|o| o == f)
                        .expect("collected")
                });
                groups.group_of[t] = g;
                if groups.tile_of.insert((g, idx), t).is_some() {
                    return None;
                }
            }
            groups.images.push(img);
            groups.options.push(opts);
        }
        Some(groups)
    }

    fn len(&self) -> usize {
        self.images.len()
    }
}

type State = BTreeMap<Pos, Slot>;

/// Options on the neighbouring side facing a cell, one list per abutting side.
type Env<'f> = Vec<(Side, Vec<&'f Face>)>;

pub(crate) struct LazyExplorer<'a> {
    sim: &'a TileSystem,
    target: &'a [TileType],
    groups: Groups,
    states: Vec<State>,
    index: HashMap<Vec<(Pos, Slot)>, usize>,
    parent: Vec<Option<(usize, Pos, Slot)>>,
    edges: Vec<Vec<(Pos, Slot)>>,
    pub(crate) graph: SimGraph,
}

impl<'a> LazyExplorer<'a> {
    pub(crate) fn explore(
        sim: &'a TileSystem,
        target: &'a [TileType],
        groups: Groups,
        max_image: usize,
        max_sim_tiles: usize,
        state_limit: usize,
    ) -> LazyExplorer<'a> {
        let seed: State = sim
            .seed()
            .placements()
            .iter()
            .map(|p| (p.anchor, Slot::Fixed(p.tile)))
            .collect();
        let mut ex = LazyExplorer {
            sim,
            target,
            groups,
            states: Vec::new(),
            index: HashMap::new(),
            parent: Vec::new(),
            edges: Vec::new(),
            graph: SimGraph::default(),
        };
        let img = ex.image(&seed);
        ex.push(seed, img, None);
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            if ex.graph.images[i].is_err() {
                continue;
            }
            let state = ex.states[i].clone();
            let moves: Vec<(Pos, usize)> = empty_neighbors(&state)
                .into_iter()
                .flat_map(|p| {
                    let env = ex.env(&state, p);
                    (0..ex.groups.len())
                        .filter(|&g| ex.can_attach(g, &env))
                        .map(|g| (p, g))
                        .collect::<Vec<_>>()
                })
                .collect();
            {
                for (p, g) in moves {
                    let mut child = state.clone();
                    child.insert(p, Slot::Group(g));
                    if child.len() > max_sim_tiles {
                        ex.graph.truncated = true;
                        continue;
                    }
                    let key: Vec<(Pos, Slot)> = child.iter().map(|(a, b)| (*a, *b)).collect();
                    let id = match ex.index.get(&key) {
                        Some(&id) => id,
                        None => {
                            let img = ex.image(&child);
                            if matches!(&img, Ok(a) if a.len() > max_image) {
                                ex.graph.bound_reached = true;
                                continue;
                            }
                            if ex.states.len() >= state_limit {
                                ex.graph.resource_limited = true;
                                continue;
                            }
                            let id = ex.push(child, img, Some((i, p, Slot::Group(g))));
                            queue.push_back(id);
                            id
                        }
                    };
                    ex.edges[i].push((p, Slot::Group(g)));
                    ex.graph.succ[i].push(id);
                }
            }
        }
        ex
    }

    fn push(
        &mut self,
        state: State,
        image: Result<Assembly, super::RepError>,
        parent: Option<(usize, Pos, Slot)>,
    ) -> usize {
        let id = self.states.len();
        let terminal = self.terminal_member(&state);
        let unclean = match &image {
            Ok(img) => {
                let occ: BTreeSet<(i64, i64)> = state.keys().map(|p| (p.x, p.y)).collect();
                unclean_blocks(&occ, img)
            }
            Err(_) => Vec::new(),
        };
        self.index
            .insert(state.iter().map(|(a, b)| (*a, *b)).collect(), id);
        self.states.push(state);
        self.parent.push(parent);
        self.edges.push(Vec::new());
        self.graph.images.push(image);
        self.graph.terminal_member.push(terminal);
        self.graph.unclean.push(unclean);
        self.graph.succ.push(Vec::new());
        id
    }

    fn slot_image(&self, slot: Slot) -> TileImage {
        match slot {
            Slot::Fixed(t) => self.groups.images[self.groups.group_of[t]],
            Slot::Group(g) => self.groups.images[g],
        }
    }

    fn image(&self, state: &State) -> Result<Assembly, super::RepError> {
        image_of_cells(
            state.iter().map(|(p, s)| (*p, self.slot_image(*s))),
            self.target,
        )
    }

    fn slot_options(&self, slot: Slot, side: Side) -> Vec<&Face> {
        match slot {
            Slot::Fixed(t) => vec![self.sim.tile(t).cells()[0].sides[side.index()]
                .as_ref()
                .expect("single-cell tile")],
            Slot::Group(g) => self.groups.options[g][side.index()].iter().collect(),
        }
    }

    fn env(&self, state: &State, p: Pos) -> Env<'_> {
        Side::ALL
            .into_iter()
            .filter_map(|s| {
                state
                    .get(&p.step(s))
                    .map(|slot| (s, self.slot_options(*slot, s.opposite())))
            })
            .collect()
    }

    /// Some member of group `g` attaches against some choice of neighbour faces.
    fn can_attach(&self, g: usize, env: &Env<'_>) -> bool {
        let mut total = 0;
        for (s, theirs) in env {
            let mut best = None;
            for f in &self.groups.options[g][s.index()] {
                for t in theirs {
                    if let Some(st) = self.sim.interaction(f, t) {
                        best = best.max(Some(st));
                    }
                }
            }
            match best {
                Some(b) => total += b,
                None => return false,
            }
        }
        total >= self.sim.temperature()
    }

    fn any_attaches(&self, env: &Env<'_>) -> bool {
        (0..self.groups.len()).any(|g| self.can_attach(g, env))
    }

    /// Some member of the class has no legal attachment anywhere.
    fn terminal_member(&self, state: &State) -> bool {
        empty_neighbors(state).into_iter().all(|p| {
            let env = self.env(state, p);
            let radices: Vec<usize> = env.iter().map(|(_, o)| o.len()).collect();
            mixed_radix(radices.clone()).any(|combo| {
                let fixed: Env<'_> = env
                    .iter()
                    .zip(&combo)
                    .map(|((s, o), &i)| (*s, vec![o[i]]))
                    .collect();
                !self.any_attaches(&fixed)
            })
        })
    }

    /// Whether every member of state `i` can grow into one whose image is `beta`.
    pub(crate) fn all_members_reach(&self, i: usize, beta: &Assembly) -> Reach {
        let state = &self.states[i];
        let Ok(alpha) = &self.graph.images[i] else {
            return Reach::Unknown;
        };
        let cand = empty_neighbors(state);
        let mut keeps: Vec<(Pos, usize)> = Vec::new();
        for &r in &cand {
            for g in 0..self.groups.len() {
                let mut s = state.clone();
                s.insert(r, Slot::Group(g));
                if self.image(&s).as_ref() == Ok(alpha) {
                    keeps.push((r, g));
                }
            }
        }
        let keep_cells: BTreeSet<Pos> = keeps.iter().map(|k| k.0).collect();
        let mut q_cells: BTreeSet<Pos> = cand.iter().copied().collect();
        for r in &keep_cells {
            for s in Side::ALL {
                let q = r.step(s);
                if !state.contains_key(&q) && !keep_cells.contains(&q) {
                    q_cells.insert(q);
                }
            }
        }
        let mut growers: Vec<(Pos, usize)> = Vec::new();
        for &q in &q_cells {
            for g in 0..self.groups.len() {
                let mut s = state.clone();
                s.insert(q, Slot::Group(g));
                if self.image(&s).as_ref() == Ok(beta) {
                    growers.push((q, g));
                }
            }
        }
        // every neighbour face looking into a relevant cell
        let relevant: BTreeSet<Pos> = growers
            .iter()
            .map(|x| x.0)
            .chain(keep_cells.iter().copied())
            .collect();
        let mut faces: Vec<(Pos, Side, Pos, Slot)> = Vec::new();
        for &c in &relevant {
            for s in Side::ALL {
                let q = c.step(s);
                if let Some(slot) = state.get(&q) {
                    faces.push((c, s, q, *slot));
                }
            }
        }
        let radices: Vec<usize> = faces
            .iter()
            .map(|(_, s, _, slot)| self.slot_options(*slot, s.opposite()).len())
            .collect();
        if radices
            .iter()
            .try_fold(1usize, |acc, &r| {
                acc.checked_mul(r).filter(|&v| v <= COMBO_LIMIT)
            })
            .is_none()
        {
            return Reach::Unknown;
        }
        for combo in mixed_radix(radices.clone()) {
            let fixed_env = |c: Pos| -> Env<'_> {
                faces
                    .iter()
                    .zip(&combo)
                    .filter(|((cell, ..), _)| *cell == c)
                    .map(|((_, s, _, slot), &i)| {
                        (*s, vec![self.slot_options(*slot, s.opposite())[i]])
                    })
                    .collect()
            };
            let available: Vec<(Pos, usize)> = keeps
                .iter()
                .copied()
                .filter(|(r, g)| self.can_attach(*g, &fixed_env(*r)))
                .collect();
            let ok = growers.iter().any(|&(q, g)| {
                let base = fixed_env(q);
                // neighbours of q that could be filled first without changing the image
                let extra: Vec<(Side, Vec<usize>)> = Side::ALL
                    .into_iter()
                    .filter_map(|s| {
                        let r = q.step(s);
                        let gs: Vec<usize> = available
                            .iter()
                            .filter(|(p, _)| *p == r)
                            .map(|(_, g)| *g)
                            .collect();
                        (!gs.is_empty()).then_some((s, gs))
                    })
                    .collect();
                let radices: Vec<usize> = extra.iter().map(|(_, gs)| gs.len() + 1).collect();
                mixed_radix(radices.clone()).any(|pick| {
                    let mut env = base.clone();
                    for ((s, gs), &k) in extra.iter().zip(&pick) {
                        if k > 0 {
                            let g2 = gs[k - 1];
                            env.push((
                                *s,
                                self.groups.options[g2][s.opposite().index()]
                                    .iter()
                                    .collect(),
                            ));
                        }
                    }
                    self.can_attach(g, &env)
                })
            });
            if !ok {
                let forced: HashMap<(Pos, Side), usize> = faces
                    .iter()
                    .zip(&combo)
                    .map(|((_, s, q, _), &i)| ((*q, s.opposite()), i))
                    .collect();
                return Reach::No(self.materialize(&self.path_to(i), &forced));
            }
        }
        Reach::Yes
    }

    fn path_to(&self, i: usize) -> Vec<(Pos, Slot)> {
        let mut out = Vec::new();
        let mut cur = i;
        while let Some((p, pos, slot)) = self.parent[cur] {
            out.push((pos, slot));
            cur = p;
        }
        out.reverse();
        out
    }

    pub(crate) fn witness(&self, i: usize) -> AssemblySequence {
        self.materialize(&self.path_to(i), &HashMap::new())
    }

    /// Sequence reaching state `i` and then taking its `e`-th edge.
    pub(crate) fn witness_edge(&self, i: usize, e: usize) -> AssemblySequence {
        let mut path = self.path_to(i);
        path.push(self.edges[i][e]);
        self.materialize(&path, &HashMap::new())
    }

    /// Picks concrete tiles for a class-level path. Faces are fixed pairwise
    /// at the moment two cells meet; faces still open at the end take the
    /// `forced` option when given, otherwise the first one.
    fn materialize(
        &self,
        path: &[(Pos, Slot)],
        forced: &HashMap<(Pos, Side), usize>,
    ) -> AssemblySequence {
        let mut placed: HashMap<Pos, Slot> = self
            .sim
            .seed()
            .placements()
            .iter()
            .map(|p| (p.anchor, Slot::Fixed(p.tile)))
            .collect();
        let mut choice: HashMap<(Pos, Side), usize> = HashMap::new();
        for &(p, slot) in path {
            let Slot::Group(g) = slot else {
                continue;
            };
            for s in Side::ALL {
                let q = p.step(s);
                let Some(&qs) = placed.get(&q) else {
                    continue;
                };
                let theirs = self.slot_options(qs, s.opposite());
                let pinned = match qs {
                    Slot::Fixed(_) => Some(0),
                    Slot::Group(_) => choice.get(&(q, s.opposite())).copied(),
                };
                let mut best: Option<(u32, usize, usize)> = None;
                for (i, f) in self.groups.options[g][s.index()].iter().enumerate() {
                    for (j, t) in theirs.iter().enumerate() {
                        if pinned.is_some_and(|pj| pj != j) {
                            continue;
                        }
                        if let Some(st) = self.sim.interaction(f, t) {
                            if best.is_none_or(|b| st > b.0) {
                                best = Some((st, i, j));
                            }
                        }
                    }
                }
                if let Some((_, i, j)) = best {
                    choice.insert((p, s), i);
                    if matches!(qs, Slot::Group(_)) {
                        choice.insert((q, s.opposite()), j);
                    }
                }
            }
            placed.insert(p, slot);
        }
        let steps = path
            .iter()
            .filter_map(|&(p, slot)| {
                let Slot::Group(g) = slot else {
                    return None;
                };
                let idx = Side::ALL.map(|s| {
                    choice
                        .get(&(p, s))
                        .or_else(|| forced.get(&(p, s)))
                        .copied()
                        .unwrap_or(0)
                });
                Some(Placement {
                    tile: self.groups.tile_of[&(g, idx)],
                    anchor: p,
                })
            })
            .collect();
        AssemblySequence {
            seed: self.sim.seed().clone(),
            steps,
        }
    }
}

fn empty_neighbors(state: &State) -> Vec<Pos> {
    let mut out = BTreeSet::new();
    for p in state.keys() {
        for s in Side::ALL {
            let q = p.step(s);
            if !state.contains_key(&q) {
                out.insert(q);
            }
        }
    }
    out.into_iter().collect()
}

/// All digit vectors with `digits[i] < radices[i]`, last digit fastest.
fn mixed_radix(radices: Vec<usize>) -> impl Iterator<Item = Vec<usize>> {
    let total: usize = radices.iter().product();
    (0..total).map(move |mut n| {
        let mut out = vec![0; radices.len()];
        for (i, r) in radices.iter().enumerate().rev() {
            out[i] = n % r;
            n /= r;
        }
        out
    })
}
