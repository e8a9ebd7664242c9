//! Tile types for the three models and their per-cell side layout.

use std::fmt;

use super::geometry::Geometry;
use super::glue::GlueId;

/// Lattice position of a cell.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Pos {
    pub x: i64,
    pub y: i64,
}

impl Pos {
    pub const fn new(x: i64, y: i64) -> Self {
        Pos { x, y }
    }

    pub fn step(self, side: Side) -> Pos {
        let (dx, dy) = side.delta();
        Pos::new(self.x + dx, self.y + dy)
    }

    pub fn offset(self, dx: i64, dy: i64) -> Pos {
        Pos::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Side {
    N,
    E,
    S,
    W,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::N, Side::E, Side::S, Side::W];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn opposite(self) -> Side {
        match self {
            Side::N => Side::S,
            Side::E => Side::W,
            Side::S => Side::N,
            Side::W => Side::E,
        }
    }

    pub fn delta(self) -> (i64, i64) {
        match self {
            Side::N => (0, 1),
            Side::E => (1, 0),
            Side::S => (0, -1),
            Side::W => (-1, 0),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Side::N => 'N',
            Side::E => 'E',
            Side::S => 'S',
            Side::W => 'W',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Orientation {
    /// Two cells side by side: anchor and the cell east of it.
    Horizontal,
    /// Two cells stacked: anchor and the cell north of it.
    Vertical,
}

/// Glue and optional geometry on one exterior side of a cell.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Face {
    pub glue: GlueId,
    pub geometry: Option<Geometry>,
}

impl Face {
    pub fn plain(glue: GlueId) -> Self {
        Face {
            glue,
            geometry: None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TileKind {
    Square {
        glues: [GlueId; 4],
    },
    Geometric {
        sides: [Face; 4],
    },
    /// Exterior glues listed clockwise from the north edge of the
    /// west (horizontal) or top (vertical) cell.
    Duple {
        orientation: Orientation,
        glues: [GlueId; 6],
    },
}

/// One cell covered by a tile type.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CellFaces {
    pub offset: (i64, i64),
    /// `None` marks the side shared by the two cells of a duple.
    pub sides: [Option<Face>; 4],
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TileType {
    pub name: String,
    pub kind: TileKind,
    cells: Vec<CellFaces>,
}

impl TileType {
    pub fn square(name: impl Into<String>, glues: [GlueId; 4]) -> Self {
        let cells = vec![CellFaces {
            offset: (0, 0),
            sides: glues.map(|g| Some(Face::plain(g))),
        }];
        TileType {
            name: name.into(),
            kind: TileKind::Square { glues },
            cells,
        }
    }

    pub fn geometric(name: impl Into<String>, sides: [Face; 4]) -> Self {
        let cells = vec![CellFaces {
            offset: (0, 0),
            sides: sides.clone().map(Some),
        }];
        TileType {
            name: name.into(),
            kind: TileKind::Geometric { sides },
            cells,
        }
    }

    pub fn duple(name: impl Into<String>, orientation: Orientation, glues: [GlueId; 6]) -> Self {
        let f = |i: usize| Some(Face::plain(glues[i]));
        let cells = match orientation {
            Orientation::Horizontal => vec![
                CellFaces {
                    offset: (0, 0),
                    sides: [f(0), None, f(4), f(5)],
                },
                CellFaces {
                    offset: (1, 0),
                    sides: [f(1), f(2), f(3), None],
                },
            ],
            Orientation::Vertical => vec![
                CellFaces {
                    offset: (0, 0),
                    sides: [None, f(2), f(3), f(4)],
                },
                CellFaces {
                    offset: (0, 1),
                    sides: [f(0), f(1), None, f(5)],
                },
            ],
        };
        TileType {
            name: name.into(),
            kind: TileKind::Duple { orientation, glues },
            cells,
        }
    }

    pub fn cells(&self) -> &[CellFaces] {
        &self.cells
    }

    pub fn is_duple(&self) -> bool {
        matches!(self.kind, TileKind::Duple { .. })
    }

    pub fn is_geometric(&self) -> bool {
        matches!(self.kind, TileKind::Geometric { .. })
    }

    pub fn orientation(&self) -> Option<Orientation> {
        match self.kind {
            TileKind::Duple { orientation, .. } => Some(orientation),
            _ => None,
        }
    }

    /// Positions covered when anchored at `anchor`.
    pub fn footprint(&self, anchor: Pos) -> impl Iterator<Item = Pos> + '_ {
        self.cells
            .iter()
            .map(move |c| anchor.offset(c.offset.0, c.offset.1))
    }

    /// Every exterior glue id used by this tile.
    pub fn glue_ids(&self) -> Vec<GlueId> {
        self.cells
            .iter()
            .flat_map(|c| c.sides.iter().flatten().map(|f| f.glue))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn horizontal_duple_layout() {
        let d = TileType::duple("d", Orientation::Horizontal, [1, 2, 3, 4, 5, 6]);
        let west = &d.cells()[0];
        let east = &d.cells()[1];
        assert_eq!(west.sides[Side::N.index()].as_ref().unwrap().glue, 1);
        assert_eq!(east.sides[Side::N.index()].as_ref().unwrap().glue, 2);
        assert_eq!(east.sides[Side::E.index()].as_ref().unwrap().glue, 3);
        assert_eq!(east.sides[Side::S.index()].as_ref().unwrap().glue, 4);
        assert_eq!(west.sides[Side::S.index()].as_ref().unwrap().glue, 5);
        assert_eq!(west.sides[Side::W.index()].as_ref().unwrap().glue, 6);
        assert!(west.sides[Side::E.index()].is_none());
        assert!(east.sides[Side::W.index()].is_none());
    }

    #[test]
    fn vertical_duple_layout() {
        let d = TileType::duple("d", Orientation::Vertical, [1, 2, 3, 4, 5, 6]);
        let fp: Vec<Pos> = d.footprint(Pos::new(2, 3)).collect();
        assert_eq!(fp, vec![Pos::new(2, 3), Pos::new(2, 4)]);
        let top = &d.cells()[1];
        assert_eq!(top.sides[Side::N.index()].as_ref().unwrap().glue, 1);
        assert_eq!(top.sides[Side::W.index()].as_ref().unwrap().glue, 6);
        assert!(d.cells()[0].sides[Side::N.index()].is_none());
    }

    #[test]
    fn opposite_sides_cancel() {
        for s in Side::ALL {
            let p = Pos::new(4, -2);
            assert_eq!(p.step(s).step(s.opposite()), p);
        }
    }
}
