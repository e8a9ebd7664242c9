//! Representation functions from simulator assemblies to simulated ones.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::compile::VariantMap;
use crate::model::{Assembly, Placement, Pos, Side, TileId, TileType};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("represented tiles overlap at {0}")]
    Overlap(Pos),
    #[error("representation refers to unknown tile {0}")]
    UnknownTile(TileId),
    #[error("patterns {0} and {1} are comparable but map to different tiles")]
    Inconsistent(usize, usize),
}

/// What a single simulator tile stands for at scale 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum TileImage {
    Empty,
    Tile(TileId),
    /// One cell of a duple; a lone half already commits the whole footprint.
    Half {
        duple: TileId,
        half: usize,
    },
}

/// Cells of one block, keyed by offset inside the block.
pub type BlockPattern = BTreeMap<(usize, usize), TileId>;

/// An m-block representation with optional geometry-region gaps of
/// thickness `n` between blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockRepresentation {
    pub m: usize,
    pub n: usize,
    entries: Vec<(BlockPattern, TileId)>,
    index: HashMap<Vec<((usize, usize), TileId)>, TileId>,
}

impl BlockRepresentation {
    pub fn new(m: usize, n: usize, entries: Vec<(BlockPattern, TileId)>) -> Result<Self, RepError> {
        assert!(m >= 1, "block size must be positive");
        let index = entries
            .iter()
            .map(|(p, t)| (p.iter().map(|(k, v)| (*k, *v)).collect(), *t))
            .collect();
        let rep = BlockRepresentation {
            m,
            n,
            entries,
            index,
        };
        rep.validate()?;
        Ok(rep)
    }

    pub fn entries(&self) -> &[(BlockPattern, TileId)] {
        &self.entries
    }

    /// No two comparable patterns map to different tiles.
    pub fn validate(&self) -> Result<(), RepError> {
        for (i, (a, ta)) in self.entries.iter().enumerate() {
            for (j, (b, tb)) in self.entries.iter().enumerate().skip(i + 1) {
                if ta != tb && (subpattern(a, b) || subpattern(b, a)) {
                    return Err(RepError::Inconsistent(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn lookup(&self, pattern: &BlockPattern) -> Option<TileId> {
        let key: Vec<_> = pattern.iter().map(|(k, v)| (*k, *v)).collect();
        self.index.get(&key).copied()
    }

    fn stride(&self) -> i64 {
        (self.m + self.n) as i64
    }

    /// Block coordinates and in-block offset of a world cell, or `None`
    /// for cells in a geometry region.
    pub fn locate(&self, p: Pos) -> Option<((i64, i64), (usize, usize))> {
        let s = self.stride();
        let (bx, by) = (p.x.div_euclid(s), p.y.div_euclid(s));
        let (ix, iy) = (p.x.rem_euclid(s) as usize, p.y.rem_euclid(s) as usize);
        (ix < self.m && iy < self.m).then_some(((bx, by), (ix, iy)))
    }

    /// World position of offset (ix, iy) in block (bx, by).
    pub fn world(&self, bx: i64, by: i64, ix: usize, iy: usize) -> Pos {
        let s = self.stride();
        Pos::new(s * bx + ix as i64, s * by + iy as i64)
    }
}

fn subpattern(a: &BlockPattern, b: &BlockPattern) -> bool {
    a.iter().all(|(k, v)| b.get(k) == Some(v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representation {
    /// Scale 1: each simulator tile maps on its own.
    Tiles(Vec<TileImage>),
    Blocks(BlockRepresentation),
}

impl Representation {
    pub fn identity(tile_count: usize) -> Self {
        Representation::Tiles((0..tile_count).map(TileImage::Tile).collect())
    }

    pub fn from_variants(map: &VariantMap) -> Self {
        Representation::Tiles(
            map.variants
                .iter()
                .map(|v| match v.half {
                    None => TileImage::Tile(v.source),
                    Some(h) => TileImage::Half {
                        duple: v.source,
                        half: h,
                    },
                })
                .collect(),
        )
    }

    pub fn scale(&self) -> usize {
        match self {
            Representation::Tiles(_) => 1,
            Representation::Blocks(b) => b.m,
        }
    }

    /// Image of a single simulator tile at scale 1.
    pub fn tile_image(&self, tile: TileId) -> Option<TileImage> {
        match self {
            Representation::Tiles(v) => Some(v.get(tile).copied().unwrap_or(TileImage::Empty)),
            Representation::Blocks(_) => None,
        }
    }

    /// The block containing `p` (block coordinates).
    pub fn block_of(&self, p: Pos) -> Option<(i64, i64)> {
        match self {
            Representation::Tiles(_) => Some((p.x, p.y)),
            Representation::Blocks(b) => b.locate(p).map(|(blk, _)| blk),
        }
    }
}

/// The m×m pattern of block (bx, by), honouring geometry-region offsets.
pub fn block_at(a: &Assembly, rep: &BlockRepresentation, bx: i64, by: i64) -> BlockPattern {
    let mut out = BlockPattern::new();
    for iy in 0..rep.m {
        for ix in 0..rep.m {
            if let Some(t) = a.tile_at(rep.world(bx, by, ix, iy)) {
                out.insert((ix, iy), t);
            }
        }
    }
    out
}

/// Image of cells given as (position, image) pairs at scale 1.
pub fn image_of_cells(
    cells: impl IntoIterator<Item = (Pos, TileImage)>,
    target: &[TileType],
) -> Result<Assembly, RepError> {
    let mut out = Assembly::new();
    for (p, img) in cells {
        let pl = match img {
            TileImage::Empty => continue,
            TileImage::Tile(t) => Placement { tile: t, anchor: p },
            TileImage::Half { duple, half } => {
                let tile = target.get(duple).ok_or(RepError::UnknownTile(duple))?;
                let off = tile
                    .cells()
                    .get(half)
                    .ok_or(RepError::UnknownTile(duple))?
                    .offset;
                Placement {
                    tile: duple,
                    anchor: p.offset(-off.0, -off.1),
                }
            }
        };
        if out.placement_at(pl.anchor) == Some(pl) {
            continue;
        }
        if pl.tile >= target.len() {
            return Err(RepError::UnknownTile(pl.tile));
        }
        out.insert(pl, target).map_err(|_| RepError::Overlap(p))?;
    }
    Ok(out)
}

/// R*: the simulated assembly represented by `a`.
pub fn rep_star(
    rep: &Representation,
    a: &Assembly,
    target: &[TileType],
) -> Result<Assembly, RepError> {
    match rep {
        Representation::Tiles(map) => image_of_cells(
            a.placements().iter().map(|pl| {
                (
                    pl.anchor,
                    map.get(pl.tile).copied().unwrap_or(TileImage::Empty),
                )
            }),
            target,
        ),
        Representation::Blocks(b) => {
            let blocks: BTreeSet<(i64, i64)> = a
                .positions()
                .filter_map(|p| b.locate(p).map(|(blk, _)| blk))
                .collect();
            let mut out = Assembly::new();
            for (bx, by) in blocks {
                if let Some(t) = b.lookup(&block_at(a, b, bx, by)) {
                    if t >= target.len() {
                        return Err(RepError::UnknownTile(t));
                    }
                    out.insert(Placement::new(t, bx, by), target)
                        .map_err(|_| RepError::Overlap(Pos::new(bx, by)))?;
                }
            }
            Ok(out)
        }
    }
}

/// Non-empty blocks of `a` that are neither represented nor orthogonally
/// next to a represented block. Empty when `a` maps cleanly.
pub fn fuzz_violations(
    rep: &Representation,
    a: &Assembly,
    target: &[TileType],
) -> Result<Vec<(i64, i64)>, RepError> {
    let image = rep_star(rep, a, target)?;
    let occupied: BTreeSet<(i64, i64)> = a.positions().filter_map(|p| rep.block_of(p)).collect();
    Ok(unclean_blocks(&occupied, &image))
}

pub(crate) fn unclean_blocks(occupied: &BTreeSet<(i64, i64)>, image: &Assembly) -> Vec<(i64, i64)> {
    if occupied.len() <= 1 {
        return Vec::new();
    }
    let dom: BTreeSet<(i64, i64)> = image.positions().map(|p| (p.x, p.y)).collect();
    occupied
        .iter()
        .copied()
        .filter(|&(x, y)| {
            !dom.contains(&(x, y))
                && !Side::ALL.iter().any(|s| {
                    let (dx, dy) = s.delta();
                    dom.contains(&(x + dx, y + dy))
                })
        })
        .collect()
}

pub fn maps_cleanly(
    rep: &Representation,
    a: &Assembly,
    target: &[TileType],
) -> Result<bool, RepError> {
    Ok(fuzz_violations(rep, a, target)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Orientation;

    fn squares(n: usize) -> Vec<TileType> {
        (0..n)
            .map(|i| TileType::square(format!("t{i}"), [0; 4]))
            .collect()
    }

    #[test]
    fn scale_one_block_is_single_cell() {
        let tiles = squares(2);
        let a = Assembly::from_placements([Placement::new(1, 0, 0)], &tiles).unwrap();
        let b = BlockRepresentation::new(1, 0, vec![]).unwrap();
        assert_eq!(block_at(&a, &b, 0, 0), BlockPattern::from([((0, 0), 1)]));
        assert!(block_at(&a, &b, 1, 0).is_empty());
    }

    #[test]
    fn partial_two_block() {
        let tiles = squares(1);
        let a =
            Assembly::from_placements([Placement::new(0, 0, 0), Placement::new(0, 1, 1)], &tiles)
                .unwrap();
        let b = BlockRepresentation::new(2, 0, vec![]).unwrap();
        assert_eq!(block_at(&a, &b, 0, 0).len(), 2);
    }

    #[test]
    fn geometry_region_offset() {
        let b = BlockRepresentation::new(2, 1, vec![]).unwrap();
        assert_eq!(b.world(1, 0, 0, 0), Pos::new(3, 0));
        assert_eq!(b.locate(Pos::new(2, 0)), None);
        assert_eq!(b.locate(Pos::new(4, 1)), Some(((1, 0), (1, 1))));
    }

    #[test]
    fn inconsistent_patterns_rejected() {
        let p1 = BlockPattern::from([((0, 0), 0)]);
        let p2 = BlockPattern::from([((0, 0), 0), ((1, 0), 1)]);
        assert!(BlockRepresentation::new(2, 0, vec![(p1.clone(), 0), (p2.clone(), 1)]).is_err());
        assert!(BlockRepresentation::new(2, 0, vec![(p1, 0), (p2, 0)]).is_ok());
    }

    #[test]
    fn lone_half_commits_footprint() {
        let target = vec![TileType::duple("d", Orientation::Horizontal, [0; 6])];
        let img = image_of_cells(
            [(Pos::new(3, 0), TileImage::Half { duple: 0, half: 1 })],
            &target,
        )
        .unwrap();
        assert_eq!(img.placements(), &[Placement::new(0, 2, 0)]);
        let both = image_of_cells(
            [
                (Pos::new(2, 0), TileImage::Half { duple: 0, half: 0 }),
                (Pos::new(3, 0), TileImage::Half { duple: 0, half: 1 }),
            ],
            &target,
        )
        .unwrap();
        assert_eq!(both.len(), 1);
        let clash = image_of_cells(
            [
                (Pos::new(2, 0), TileImage::Half { duple: 0, half: 0 }),
                (Pos::new(4, 0), TileImage::Half { duple: 0, half: 1 }),
            ],
            &target,
        );
        assert!(matches!(clash, Err(RepError::Overlap(_))));
    }

    #[test]
    fn diagonal_fuzz_is_a_violation() {
        let tiles = squares(2);
        let rep = Representation::Tiles(vec![TileImage::Tile(0), TileImage::Empty]);
        let a =
            Assembly::from_placements([Placement::new(0, 0, 0), Placement::new(1, 1, 1)], &tiles)
                .unwrap();
        assert_eq!(fuzz_violations(&rep, &a, &tiles).unwrap(), vec![(1, 1)]);
        let b =
            Assembly::from_placements([Placement::new(0, 0, 0), Placement::new(1, 1, 0)], &tiles)
                .unwrap();
        assert!(maps_cleanly(&rep, &b, &tiles).unwrap());
    }

    #[test]
    fn empty_maps_to_empty() {
        let tiles = squares(1);
        let rep = Representation::identity(1);
        assert!(rep_star(&rep, &Assembly::new(), &tiles).unwrap().is_empty());
    }

    #[test]
    fn unresolved_block_is_empty_in_image() {
        let tiles = squares(2);
        let p = BlockPattern::from([((0, 0), 0), ((1, 0), 0), ((0, 1), 0), ((1, 1), 0)]);
        let rep = Representation::Blocks(BlockRepresentation::new(2, 0, vec![(p, 1)]).unwrap());
        let a = Assembly::from_placements(
            [
                Placement::new(0, 0, 0),
                Placement::new(0, 1, 0),
                Placement::new(0, 0, 1),
                Placement::new(0, 1, 1),
                Placement::new(0, 2, 0),
            ],
            &tiles,
        )
        .unwrap();
        let img = rep_star(&rep, &a, &tiles).unwrap();
        assert_eq!(img.placements(), &[Placement::new(1, 0, 0)]);
    }
}
