//! Lattice cuts, the glue events recorded along them, and the cut-and-paste
//! operations that repeat or remove the part of an assembly between two
//! cuts with identical histories.

mod movie;
mod splice;

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigUint;
use thiserror::Error;

use crate::dynamics::AttachmentError;
use crate::model::{Assembly, Pos, Side, TileSystem};

pub use movie::{
    bond_forming_submovie, find_repeat, movies_identical, record_movie, Direction, GlueEvent,
    MovieKind, WindowMovie,
};
pub use splice::{splice_pump_down, splice_pump_up, Splice};

pub use crate::simulation::fuzz_violations as fuzz_violation_scan;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WindowError {
    #[error("path is not a chain of unit lattice steps without repeats")]
    BadPath,
    #[error("window does not separate the region: {0} reaches both sides")]
    NotACut(Pos),
    #[error("window cuts through the tile at {0}")]
    CutsTile(Pos),
    #[error("windows are not translates of each other")]
    NotTranslates,
    #[error("window movies differ")]
    MoviesDiffer,
    #[error("the seed must lie left of the first window")]
    SeedNotLeft,
    #[error("the second window must lie to the right of the first")]
    WindowsCross,
    #[error(transparent)]
    Replay(#[from] AttachmentError),
}

/// A lattice edge seen from a window: the cells on its left and right.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Edge {
    pub left: Pos,
    pub right: Pos,
}

impl Edge {
    pub fn translated(self, dx: i64, dy: i64) -> Edge {
        Edge {
            left: self.left.offset(dx, dy),
            right: self.right.offset(dx, dy),
        }
    }
}

/// A rectilinear path through lattice corners. Corner `(x, y)` is the
/// lower-left corner of cell `(x, y)`; "left" is relative to walking the
/// path from its first corner.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Window {
    vertices: Vec<(i64, i64)>,
    edges: Vec<Edge>,
}

/// Cells of a region on each side of a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sides {
    pub left: BTreeSet<Pos>,
    pub right: BTreeSet<Pos>,
}

impl Window {
    pub fn from_path(vertices: Vec<(i64, i64)>) -> Result<Window, WindowError> {
        if vertices.len() < 2 || vertices.iter().collect::<BTreeSet<_>>().len() != vertices.len() {
            return Err(WindowError::BadPath);
        }
        let mut edges = Vec::new();
        for w in vertices.windows(2) {
            let ((x, y), (x2, y2)) = (w[0], w[1]);
            let e = match (x2 - x, y2 - y) {
                (0, 1) => (Pos::new(x - 1, y), Pos::new(x, y)),
                (1, 0) => (Pos::new(x, y), Pos::new(x, y - 1)),
                (0, -1) => (Pos::new(x, y - 1), Pos::new(x - 1, y - 1)),
                (-1, 0) => (Pos::new(x - 1, y - 1), Pos::new(x - 1, y)),
                _ => return Err(WindowError::BadPath),
            };
            edges.push(Edge {
                left: e.0,
                right: e.1,
            });
        }
        Ok(Window { vertices, edges })
    }

    /// The line between columns `x - 1` and `x`, for rows `ylo..=yhi`,
    /// walked northwards so west is left.
    pub fn vertical(x: i64, ylo: i64, yhi: i64) -> Window {
        Window::from_path((ylo..=yhi + 1).map(|y| (x, y)).collect()).expect("straight path")
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn translated(&self, dx: i64, dy: i64) -> Window {
        Window {
            vertices: self
                .vertices
                .iter()
                .map(|&(x, y)| (x + dx, y + dy))
                .collect(),
            edges: self.edges.iter().map(|e| e.translated(dx, dy)).collect(),
        }
    }

    /// The vector `t` with `other == self.translated(t)`, if any.
    pub fn translation_to(&self, other: &Window) -> Option<(i64, i64)> {
        let (a, b) = (self.vertices.first()?, other.vertices.first()?);
        let t = (b.0 - a.0, b.1 - a.1);
        (self.translated(t.0, t.1) == *other).then_some(t)
    }

    /// Edge lookup keyed by the unordered cell pair.
    fn edge_index(&self) -> HashMap<(Pos, Pos), Edge> {
        self.edges
            .iter()
            .flat_map(|e| [((e.left, e.right), *e), ((e.right, e.left), *e)])
            .collect()
    }

    /// Splits the rectangle spanned by `lo..=hi` together with every cell
    /// next to the window.
    pub fn sides(&self, lo: Pos, hi: Pos) -> Result<Sides, WindowError> {
        let mut lo = lo;
        let mut hi = hi;
        for e in &self.edges {
            for c in [e.left, e.right] {
                lo = Pos::new(lo.x.min(c.x), lo.y.min(c.y));
                hi = Pos::new(hi.x.max(c.x), hi.y.max(c.y));
            }
        }
        let inside = |p: Pos| p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
        let cut = self.edge_index();
        let rights: BTreeSet<Pos> = self.edges.iter().map(|e| e.right).collect();
        let mut left = BTreeSet::new();
        let mut queue: VecDeque<Pos> = self.edges.iter().map(|e| e.left).collect();
        while let Some(p) = queue.pop_front() {
            if !left.insert(p) {
                continue;
            }
            if rights.contains(&p) {
                return Err(WindowError::NotACut(p));
            }
            for s in Side::ALL {
                let q = p.step(s);
                if inside(q) && !cut.contains_key(&(p, q)) && !left.contains(&q) {
                    queue.push_back(q);
                }
            }
        }
        let mut right = BTreeSet::new();
        for y in lo.y..=hi.y {
            for x in lo.x..=hi.x {
                let p = Pos::new(x, y);
                if !left.contains(&p) {
                    right.insert(p);
                }
            }
        }
        Ok(Sides { left, right })
    }
}

/// Smallest rectangle holding every cell of `a`.
pub(crate) fn region_of(a: &Assembly) -> (Pos, Pos) {
    a.bounds().unwrap_or((Pos::new(0, 0), Pos::new(0, 0)))
}

/// Vertical windows at each `x`, spanning the rows of `a`.
pub fn vertical_windows(a: &Assembly, xs: impl IntoIterator<Item = i64>) -> Vec<Window> {
    let (lo, hi) = region_of(a);
    xs.into_iter()
        .map(|x| Window::vertical(x, lo.y, hi.y))
        .collect()
}

/// A cut from the bottom to the top of `a`'s bounding box that starts at
/// corner `(x, ylo)` and never crosses a positive-strength bond or the
/// inside of a tile. Shortest such path, found breadth-first.
pub fn bond_avoiding_window(sys: &TileSystem, a: &Assembly, x: i64) -> Option<Window> {
    let (lo, hi) = region_of(a);
    let in_region = |p: Pos| p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
    let blocked = |p: Pos, q: Pos| -> bool {
        let (Some(ip), Some(iq)) = (a.instance_at(p), a.instance_at(q)) else {
            return false;
        };
        if ip == iq {
            return true;
        }
        let side = Side::ALL
            .into_iter()
            .find(|s| p.step(*s) == q)
            .expect("adjacent cells");
        match (sys.face_at(a, p, side), sys.face_at(a, q, side.opposite())) {
            (Some(f), Some(g)) => sys.interaction(f, g).is_some_and(|s| s > 0),
            _ => false,
        }
    };
    let start = (x, lo.y);
    let mut prev: HashMap<(i64, i64), (i64, i64)> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    prev.insert(start, start);
    while let Some(v) = queue.pop_front() {
        if v.1 == hi.y + 1 {
            let mut path = vec![v];
            let mut cur = v;
            while cur != start {
                cur = prev[&cur];
                path.push(cur);
            }
            path.reverse();
            return Window::from_path(path).ok();
        }
        for (dx, dy) in [(0, 1), (1, 0), (-1, 0), (0, -1)] {
            let w = (v.0 + dx, v.1 + dy);
            if prev.contains_key(&w) {
                continue;
            }
            let Ok(seg) = Window::from_path(vec![v, w]) else {
                continue;
            };
            let e = seg.edges[0];
            if !in_region(e.left) || !in_region(e.right) || blocked(e.left, e.right) {
                continue;
            }
            prev.insert(w, v);
            queue.push_back(w);
        }
    }
    None
}

/// The two counts from the pumping argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PumpingBound {
    /// `(g + 1)^(6m) * (6m)! + 1`: more windows than distinct movies.
    pub movies: BigUint,
    /// `3 * movies + 2`.
    pub iterations: BigUint,
}

pub fn pumping_bound(glues: u64, scale: u64) -> PumpingBound {
    assert!(scale >= 1, "scale must be positive");
    let slots = 6 * scale;
    let base = BigUint::from(glues + 1).pow(slots as u32);
    let fact = (1..=slots).fold(BigUint::from(1u32), |acc, i| acc * i);
    let movies = base * fact + 1u32;
    let iterations = &movies * 3u32 + 2u32;
    PumpingBound { movies, iterations }
}
