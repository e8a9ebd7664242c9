//! Compilers from the aTAM and the DaTAM into two-glue geometric systems.

mod atam;
mod datam;

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::model::{Geometry, ModelError, Pos, Side, TileId};

pub use atam::{
    build_glue_geometries, compile_atam_system, compile_seed, compile_tile_variants,
    GlueGeometryTable,
};
pub use datam::{build_datam_geometries, compile_datam_system, DatamGeometryTable};

/// Names of the two glues every compiled system uses.
pub const ALPHA_GLUE: &str = "alpha";
pub const BETA_GLUE: &str = "beta";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompileError {
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("seed fix-up left incompatible geometries at {0}")]
    SeedFixUp(Pos),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Version {
    Alpha,
    Beta,
}

impl Version {
    pub fn letter(self) -> char {
        match self {
            Version::Alpha => 'a',
            Version::Beta => 'b',
        }
    }
}

/// Version vector from a 4-bit index: bit `s` set means side `s` (N, E, S, W) is β.
pub fn versions_from_index(v: u8) -> [Version; 4] {
    let mut out = [Version::Alpha; 4];
    for s in 0..4 {
        if v >> s & 1 == 1 {
            out[s] = Version::Beta;
        }
    }
    out
}

pub fn versions_label(v: &[Version; 4]) -> String {
    v.iter().map(|x| x.letter()).collect()
}

/// What a compiled tile stands for in the source system.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Variant {
    pub source: TileId,
    /// Cell index within a source duple; `None` for square tiles.
    pub half: Option<usize>,
    /// Version per side; the center side of a duple half is reported as α.
    pub versions: [Version; 4],
}

/// Compiled tile id → source tile. At scale 1 this is the representation function.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VariantMap {
    pub variants: Vec<Variant>,
}

impl VariantMap {
    pub fn get(&self, compiled: TileId) -> Variant {
        self.variants[compiled]
    }

    pub fn len(&self) -> usize {
        self.variants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.variants.is_empty()
    }
}

/// Picks a version per side for each seed cell so that no abutting pair
/// collides. Everything starts as α; interior edges are scanned in
/// (y, x, side) order and a colliding edge flips the second cell's side
/// to β. `geometry(p, side, version)` returns `None` for sides that never
/// change (duple centers).
pub(crate) fn fix_seed_versions(
    cells: &[Pos],
    geometry: &dyn Fn(Pos, Side, Version) -> Option<Geometry>,
) -> Result<HashMap<Pos, [Version; 4]>, CompileError> {
    let mut versions: BTreeMap<(i64, i64), (Pos, [Version; 4])> = cells
        .iter()
        .map(|p| ((p.y, p.x), (*p, [Version::Alpha; 4])))
        .collect();
    let occupied: HashMap<Pos, ()> = cells.iter().map(|p| (*p, ())).collect();
    let order: Vec<Pos> = versions.values().map(|(p, _)| *p).collect();
    for p in &order {
        for side in [Side::N, Side::E] {
            let q = p.step(side);
            if !occupied.contains_key(&q) {
                continue;
            }
            let vp = versions[&(p.y, p.x)].1[side.index()];
            let vq = versions[&(q.y, q.x)].1[side.opposite().index()];
            let (Some(gp), Some(gq)) = (geometry(*p, side, vp), geometry(q, side.opposite(), vq))
            else {
                continue;
            };
            if !gp.compatible_unchecked(&gq) {
                let entry = versions.get_mut(&(q.y, q.x)).expect("occupied cell");
                entry.1[side.opposite().index()] = Version::Beta;
            }
        }
    }
    // post-check
    for p in &order {
        for side in [Side::N, Side::E] {
            let q = p.step(side);
            if !occupied.contains_key(&q) {
                continue;
            }
            let vp = versions[&(p.y, p.x)].1[side.index()];
            let vq = versions[&(q.y, q.x)].1[side.opposite().index()];
            if let (Some(gp), Some(gq)) = (geometry(*p, side, vp), geometry(q, side.opposite(), vq))
            {
                if !gp.compatible_unchecked(&gq) {
                    return Err(CompileError::SeedFixUp(*p));
                }
            }
        }
    }
    Ok(versions.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn version_index_round_trip() {
        for v in 0u8..16 {
            let vs = versions_from_index(v);
            let back = vs
                .iter()
                .enumerate()
                .map(|(s, x)| if *x == Version::Beta { 1 << s } else { 0 })
                .sum::<u8>();
            assert_eq!(back, v);
        }
        assert_eq!(versions_label(&versions_from_index(0b0101)), "baba");
    }
}
