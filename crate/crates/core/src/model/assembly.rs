//! Assemblies: finite partial maps from lattice cells to placed tiles.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use super::tile::{Pos, TileType};
use super::ModelError;

/// Index of a tile type in its system's tile list.
pub type TileId = usize;

/// Index of a placed instance inside one assembly.
pub type InstanceId = usize;

/// A tile type placed at an anchor. Duples cover the anchor and the cell
/// east (horizontal) or north (vertical) of it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Placement {
    pub tile: TileId,
    pub anchor: Pos,
}

impl Placement {
    pub fn new(tile: TileId, x: i64, y: i64) -> Self {
        Placement {
            tile,
            anchor: Pos::new(x, y),
        }
    }
}

/// Cells are keyed by position; instance ids follow placement order.
#[derive(Clone, Debug, Default)]
pub struct Assembly {
    cells: BTreeMap<Pos, InstanceId>,
    instances: Vec<Placement>,
}

impl Assembly {
    pub fn new() -> Self {
        Assembly::default()
    }

    /// Builds an assembly from placements, rejecting overlaps.
    pub fn from_placements(
        placements: impl IntoIterator<Item = Placement>,
        tiles: &[TileType],
    ) -> Result<Self, ModelError> {
        let mut a = Assembly::new();
        for p in placements {
            a.insert(p, tiles)?;
        }
        Ok(a)
    }

    /// Adds a placement in place.
    pub fn insert(&mut self, p: Placement, tiles: &[TileType]) -> Result<InstanceId, ModelError> {
        let tile = tiles.get(p.tile).ok_or(ModelError::UnknownTile(p.tile))?;
        for c in tile.footprint(p.anchor) {
            if self.cells.contains_key(&c) {
                return Err(ModelError::Occupied(c));
            }
        }
        let id = self.instances.len();
        for c in tile.footprint(p.anchor) {
            self.cells.insert(c, id);
        }
        self.instances.push(p);
        Ok(id)
    }

    /// A copy with one more placement; `self` is left untouched.
    pub fn with(&self, p: Placement, tiles: &[TileType]) -> Result<Assembly, ModelError> {
        let mut next = self.clone();
        next.insert(p, tiles)?;
        Ok(next)
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn is_occupied(&self, p: Pos) -> bool {
        self.cells.contains_key(&p)
    }

    pub fn instance_at(&self, p: Pos) -> Option<InstanceId> {
        self.cells.get(&p).copied()
    }

    pub fn placement_at(&self, p: Pos) -> Option<Placement> {
        self.instance_at(p).map(|i| self.instances[i])
    }

    pub fn tile_at(&self, p: Pos) -> Option<TileId> {
        self.placement_at(p).map(|pl| pl.tile)
    }

    pub fn instance(&self, id: InstanceId) -> Placement {
        self.instances[id]
    }

    /// Placements in the order they were added.
    pub fn placements(&self) -> &[Placement] {
        &self.instances
    }

    /// Occupied cells with their instance ids, sorted by position.
    pub fn cells(&self) -> impl Iterator<Item = (Pos, InstanceId)> + '_ {
        self.cells.iter().map(|(p, i)| (*p, *i))
    }

    pub fn positions(&self) -> impl Iterator<Item = Pos> + '_ {
        self.cells.keys().copied()
    }

    /// Placements sorted by anchor (x, then y), then tile id.
    pub fn canonical(&self) -> Vec<Placement> {
        let mut v = self.instances.clone();
        v.sort_by_key(|p| (p.anchor.x, p.anchor.y, p.tile));
        v
    }

    /// `self` ⊑ `other`: every placement of `self` appears in `other`.
    pub fn is_subassembly_of(&self, other: &Assembly) -> bool {
        self.instances
            .iter()
            .all(|p| other.placement_at(p.anchor) == Some(*p))
    }

    /// Bounding box (min, max) of the occupied cells.
    pub fn bounds(&self) -> Option<(Pos, Pos)> {
        let mut it = self.cells.keys();
        let first = *it.next()?;
        let (mut lo, mut hi) = (first, first);
        for p in it {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        Some((lo, hi))
    }

    /// Stable digest of the canonical form.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.canonical().hash(&mut h);
        h.finish()
    }

    /// Shifts every placement by (dx, dy).
    pub fn translated(&self, dx: i64, dy: i64) -> Assembly {
        Assembly {
            cells: self
                .cells
                .iter()
                .map(|(p, i)| (p.offset(dx, dy), *i))
                .collect(),
            instances: self
                .instances
                .iter()
                .map(|p| Placement {
                    tile: p.tile,
                    anchor: p.anchor.offset(dx, dy),
                })
                .collect(),
        }
    }
}

impl PartialEq for Assembly {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }
}

impl Eq for Assembly {}

impl Hash for Assembly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::tile::Orientation;

    fn tiles() -> Vec<TileType> {
        vec![
            TileType::square("a", [0; 4]),
            TileType::duple("d", Orientation::Horizontal, [0; 6]),
        ]
    }

    #[test]
    fn duple_fills_two_cells_with_one_instance() {
        let t = tiles();
        let a = Assembly::from_placements([Placement::new(1, 0, 0)], &t).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a.cell_count(), 2);
        assert_eq!(a.instance_at(Pos::new(1, 0)), Some(0));
    }

    #[test]
    fn overlap_rejected() {
        let t = tiles();
        let a = Assembly::from_placements([Placement::new(1, 0, 0)], &t).unwrap();
        assert!(matches!(
            a.with(Placement::new(0, 1, 0), &t),
            Err(ModelError::Occupied(_))
        ));
    }

    #[test]
    fn equality_ignores_insertion_order() {
        let t = tiles();
        let a = Assembly::from_placements([Placement::new(0, 0, 0), Placement::new(0, 1, 0)], &t)
            .unwrap();
        let b = Assembly::from_placements([Placement::new(0, 1, 0), Placement::new(0, 0, 0)], &t)
            .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.fingerprint(), b.fingerprint());
    }

    #[test]
    fn with_leaves_original_untouched() {
        let t = tiles();
        let a = Assembly::from_placements([Placement::new(0, 0, 0)], &t).unwrap();
        let b = a.with(Placement::new(0, 0, 1), &t).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(b.len(), 2);
        assert!(a.is_subassembly_of(&b));
        assert!(!b.is_subassembly_of(&a));
    }
}
