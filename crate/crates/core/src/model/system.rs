//! Tile assembly systems and the interaction rules between abutting faces.

use std::collections::HashSet;
use std::fmt;

use super::assembly::{Assembly, Placement, TileId};
use super::glue::{GlueFunction, GlueId};
use super::graph::BindingGraph;
use super::tile::{Face, Pos, Side, TileKind, TileType};
use super::ModelError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Model {
    Atam,
    Gtam,
    Datam,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Atam => "atam",
            Model::Gtam => "gtam",
            Model::Datam => "datam",
        })
    }
}

/// A tile type that can bind a given glue on a given side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Binder {
    pub tile: TileId,
    /// Index into the tile's cell list.
    pub cell: usize,
}

#[derive(Clone, Debug)]
pub struct TileSystem {
    model: Model,
    glues: GlueFunction,
    tiles: Vec<TileType>,
    seed: Assembly,
    temperature: u32,
    geometry_len: Option<usize>,
    // binders[glue][side]: cells whose face on `side` binds `glue`
    binders: Vec<[Vec<Binder>; 4]>,
}

impl TileSystem {
    pub fn new(
        model: Model,
        glues: GlueFunction,
        tiles: Vec<TileType>,
        seed: Vec<Placement>,
        temperature: u32,
        geometry_len: Option<usize>,
    ) -> Result<Self, ModelError> {
        if temperature == 0 {
            return Err(ModelError::Temperature);
        }
        let mut names = HashSet::new();
        for t in &tiles {
            if !names.insert(t.name.as_str()) {
                return Err(ModelError::DuplicateName(t.name.clone()));
            }
            check_kind(model, t)?;
            for g in t.glue_ids() {
                if g >= glues.size() {
                    return Err(ModelError::InvalidGlue {
                        id: g,
                        size: glues.size(),
                    });
                }
            }
        }
        let geometry_len = match model {
            Model::Gtam => {
                if !glues.is_diagonal() {
                    return Err(ModelError::NonDiagonal(model));
                }
                let len = geometry_len.ok_or(ModelError::MissingGeometryLength)?;
                for t in &tiles {
                    for c in t.cells() {
                        for f in c.sides.iter().flatten() {
                            let got = f.geometry.as_ref().map(|g| g.len()).unwrap_or(0);
                            if got != len {
                                return Err(ModelError::GeometryLength {
                                    tile: t.name.clone(),
                                    expected: len,
                                    found: got,
                                });
                            }
                        }
                    }
                }
                Some(len)
            }
            Model::Datam => {
                if !glues.is_diagonal() {
                    return Err(ModelError::NonDiagonal(model));
                }
                None
            }
            Model::Atam => None,
        };
        let seed = Assembly::from_placements(seed, &tiles)?;
        if seed.is_empty() {
            return Err(ModelError::EmptySeed);
        }
        let binders = build_binders(&glues, &tiles);
        let sys = TileSystem {
            model,
            glues,
            tiles,
            seed,
            temperature,
            geometry_len,
            binders,
        };
        if !sys.is_tau_stable(&sys.seed) {
            return Err(ModelError::UnstableSeed);
        }
        Ok(sys)
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn glues(&self) -> &GlueFunction {
        &self.glues
    }

    pub fn tiles(&self) -> &[TileType] {
        &self.tiles
    }

    pub fn tile(&self, id: TileId) -> &TileType {
        &self.tiles[id]
    }

    pub fn tile_by_name(&self, name: &str) -> Option<TileId> {
        self.tiles.iter().position(|t| t.name == name)
    }

    pub fn seed(&self) -> &Assembly {
        &self.seed
    }

    pub fn temperature(&self) -> u32 {
        self.temperature
    }

    pub fn geometry_len(&self) -> Option<usize> {
        self.geometry_len
    }

    /// Cells able to bind `glue` with their face on `side`.
    pub fn binders(&self, glue: GlueId, side: Side) -> &[Binder] {
        &self.binders[glue][side.index()]
    }

    /// Strength of the bond between two abutting faces, or `None` when
    /// their geometries collide.
    pub fn interaction(&self, a: &Face, b: &Face) -> Option<u32> {
        if let (Some(ga), Some(gb)) = (&a.geometry, &b.geometry) {
            if !ga.compatible_unchecked(gb) {
                return None;
            }
        }
        Some(self.glues.strength(a.glue, b.glue))
    }

    /// Exterior face of the tile occupying `p` on `side`, if any.
    pub fn face_at<'a>(&'a self, a: &Assembly, p: Pos, side: Side) -> Option<&'a Face> {
        let pl = a.placement_at(p)?;
        let tile = &self.tiles[pl.tile];
        let off = (p.x - pl.anchor.x, p.y - pl.anchor.y);
        let cell = tile.cells().iter().find(|c| c.offset == off)?;
        cell.sides[side.index()].as_ref()
    }

    pub fn binding_graph(&self, a: &Assembly) -> BindingGraph {
        let mut g = BindingGraph::new(a.len());
        for (p, inst) in a.cells() {
            for side in [Side::E, Side::N] {
                let q = p.step(side);
                let Some(other) = a.instance_at(q) else {
                    continue;
                };
                if other == inst {
                    continue;
                }
                let (Some(fa), Some(fb)) = (
                    self.face_at(a, p, side),
                    self.face_at(a, q, side.opposite()),
                ) else {
                    continue;
                };
                if let Some(s) = self.interaction(fa, fb) {
                    g.add_bond(inst, other, s);
                }
            }
        }
        g
    }

    /// Every cut of the binding graph has strength at least the temperature.
    pub fn is_tau_stable(&self, a: &Assembly) -> bool {
        let g = self.binding_graph(a);
        match g.min_cut() {
            None => true,
            Some(c) => c >= self.temperature as u64,
        }
    }

    /// Same system with a different seed.
    pub fn with_seed(&self, seed: Vec<Placement>) -> Result<TileSystem, ModelError> {
        TileSystem::new(
            self.model,
            self.glues.clone(),
            self.tiles.clone(),
            seed,
            self.temperature,
            self.geometry_len,
        )
    }

    /// Same system with a different tile list (seed placements keep their ids).
    pub fn with_tiles(&self, tiles: Vec<TileType>) -> Result<TileSystem, ModelError> {
        TileSystem::new(
            self.model,
            self.glues.clone(),
            tiles,
            self.seed.placements().to_vec(),
            self.temperature,
            self.geometry_len,
        )
    }
}

fn check_kind(model: Model, t: &TileType) -> Result<(), ModelError> {
    let ok = matches!(
        (model, &t.kind),
        (Model::Atam, TileKind::Square { .. })
            | (Model::Gtam, TileKind::Geometric { .. })
            | (Model::Datam, TileKind::Square { .. })
            | (Model::Datam, TileKind::Duple { .. })
    );
    if ok {
        Ok(())
    } else {
        Err(ModelError::TileKind {
            tile: t.name.clone(),
            model,
        })
    }
}

fn build_binders(glues: &GlueFunction, tiles: &[TileType]) -> Vec<[Vec<Binder>; 4]> {
    let mut out: Vec<[Vec<Binder>; 4]> = (0..glues.size()).map(|_| Default::default()).collect();
    for (tid, t) in tiles.iter().enumerate() {
        for (ci, c) in t.cells().iter().enumerate() {
            for side in Side::ALL {
                let Some(f) = &c.sides[side.index()] else {
                    continue;
                };
                for (g, slot) in out.iter_mut().enumerate() {
                    if glues.strength(g, f.glue) > 0 {
                        slot[side.index()].push(Binder {
                            tile: tid,
                            cell: ci,
                        });
                    }
                }
            }
        }
    }
    out
}
