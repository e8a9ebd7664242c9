//! Temperature-1 geometric system where an arm reaching down from above and
//! a cup rising from below compete for the same five cells.
//!
//! The seed at the origin grows an arm up to `y = 4` and along that row to
//! `x = 10 * periods`, and another down to `y = -4` and along that row.
//! Period `p` (1-based) is centered on `x = 8 + 10 (p - 1)`. There the
//! upper row drops a grey, grey, green column to `y = 1`, and the lower row
//! raises a two-tile stem, a floor at `y = -1` spanning `x - 3 ..= x + 3`,
//! and a wall tile at each end of the floor at `y = 0`.
//!
//! The center row `y = 0` holds cells a, b, x, c, d at `x - 2 ..= x + 2`:
//!
//! ```text
//!  y=1            green
//!  y=0   wall  A  B  X  C  D  wall
//!  y=-1  floor ................ floor
//! ```
//!
//! A binds the west wall, D the east wall, B binds A, C binds D, and X binds
//! the green tile. X carries bumps `1100` on its west and east sides; B's east
//! and C's west carry `0011`, so X collides with either. Every other face is
//! flat, with geometry length 4. Glues on the wall, floor and stem are a
//! reconstruction: only the five-cell contract is fixed.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::dynamics::frontier;
use crate::model::{Assembly, Face, Geometry, Model, Placement, Pos, Side, TileSystem, TileType};

use super::{bare_face, GlueTable};

/// Distance between neighboring arms along the upper row.
pub const CUP_SPACING: i64 = 10;
/// Offset along the upper row of the first arm.
pub const FIRST_ARM: i64 = 8;

const GEOMETRY_LEN: usize = 4;

fn flat(glue: usize) -> Face {
    Face {
        glue,
        geometry: Some(Geometry::flat(GEOMETRY_LEN)),
    }
}

fn tile(name: &str, sides: [Face; 4]) -> TileType {
    TileType::geometric(name, sides)
}

/// Center of period `p` (1-based).
fn center_x(p: usize) -> i64 {
    FIRST_ARM + CUP_SPACING * (p as i64 - 1)
}

/// Cells a, b, x, c, d of period `p` (1-based).
pub fn center_cells(p: usize) -> [Pos; 5] {
    let x = center_x(p);
    [-2, -1, 0, 1, 2].map(|d| Pos::new(x + d, 0))
}

pub fn arm_cup_system(periods: usize) -> TileSystem {
    assert!(periods >= 1, "at least one period");
    let end = CUP_SPACING * periods as i64;
    let mut g = GlueTable::default();
    let mut tiles = Vec::new();

    let up = g.id("up0", 1);
    let down = g.id("down0", 1);
    tiles.push(tile("seed", [flat(up), flat(0), flat(down), flat(0)]));

    // the two arms: each a chain of position-specific tiles
    for (prefix, dir) in [("up", 1i64), ("down", -1i64)] {
        let mut path: Vec<Pos> = (1..=4).map(|i| Pos::new(0, dir * i)).collect();
        path.extend((1..=end).map(|x| Pos::new(x, dir * 4)));
        let mut prev = Pos::new(0, 0);
        for (i, &p) in path.iter().enumerate() {
            let mut sides = [0usize; 4];
            let back = side_towards(p, prev);
            sides[back.index()] = g.id(&format!("{prefix}{i}"), 1);
            if let Some(&next) = path.get(i + 1) {
                sides[side_towards(p, next).index()] = g.id(&format!("{prefix}{}", i + 1), 1);
            }
            let is_center =
                p.y.abs() == 4 && p.x >= FIRST_ARM && (p.x - FIRST_ARM) % CUP_SPACING == 0;
            let name = if is_center {
                if dir == 1 {
                    sides[Side::S.index()] = g.id("arm0", 1);
                    format!("yellow{}", (p.x - FIRST_ARM) / CUP_SPACING + 1)
                } else {
                    sides[Side::N.index()] = g.id("stem0", 1);
                    format!("cup_base{}", (p.x - FIRST_ARM) / CUP_SPACING + 1)
                }
            } else {
                format!("{prefix}{}", i + 1)
            };
            tiles.push(tile(&name, sides.map(flat)));
            prev = p;
        }
    }

    // arm: grey, grey, green; the green's south glue is the one X binds
    let a = [
        g.id("arm0", 1),
        g.id("arm1", 1),
        g.id("arm2", 1),
        g.id("xg", 1),
    ];
    tiles.push(tile("grey1", [flat(a[0]), flat(0), flat(a[1]), flat(0)]));
    tiles.push(tile("grey2", [flat(a[1]), flat(0), flat(a[2]), flat(0)]));
    tiles.push(tile("green", [flat(a[2]), flat(0), flat(a[3]), flat(0)]));

    // cup: stem, floor center, floor arms, walls
    let s = [g.id("stem0", 1), g.id("stem1", 1), g.id("floor", 1)];
    tiles.push(tile("stem1", [flat(s[1]), flat(0), flat(s[0]), flat(0)]));
    tiles.push(tile("stem2", [flat(s[2]), flat(0), flat(s[1]), flat(0)]));
    let fw = [1, 2, 3].map(|i| g.id(&format!("floor_w{i}"), 1));
    let fe = [1, 2, 3].map(|i| g.id(&format!("floor_e{i}"), 1));
    tiles.push(tile(
        "floor_mid",
        [flat(0), flat(fe[0]), flat(s[2]), flat(fw[0])],
    ));
    let wall_w = g.id("wall_w", 1);
    let wall_e = g.id("wall_e", 1);
    tiles.push(tile(
        "floor_w1",
        [flat(0), flat(fw[0]), flat(0), flat(fw[1])],
    ));
    tiles.push(tile(
        "floor_w2",
        [flat(0), flat(fw[1]), flat(0), flat(fw[2])],
    ));
    tiles.push(tile(
        "floor_w3",
        [flat(wall_w), flat(fw[2]), flat(0), flat(0)],
    ));
    tiles.push(tile(
        "floor_e1",
        [flat(0), flat(fe[1]), flat(0), flat(fe[0])],
    ));
    tiles.push(tile(
        "floor_e2",
        [flat(0), flat(fe[2]), flat(0), flat(fe[1])],
    ));
    tiles.push(tile(
        "floor_e3",
        [flat(wall_e), flat(0), flat(0), flat(fe[2])],
    ));
    let cup_w = g.id("cup_w", 1);
    let cup_e = g.id("cup_e", 1);
    tiles.push(tile(
        "wall_w",
        [flat(0), flat(cup_w), flat(wall_w), flat(0)],
    ));
    tiles.push(tile(
        "wall_e",
        [flat(0), flat(0), flat(wall_e), flat(cup_e)],
    ));

    // the five center tiles
    let ab = g.id("ab", 1);
    let dc = g.id("dc", 1);
    tiles.push(tile("A", [flat(0), flat(ab), flat(0), flat(cup_w)]));
    tiles.push(tile("B", [flat(0), bare_face("0011"), flat(0), flat(ab)]));
    tiles.push(tile(
        "X",
        [flat(a[3]), bare_face("1100"), flat(0), bare_face("1100")],
    ));
    tiles.push(tile("C", [flat(0), flat(dc), flat(0), bare_face("0011")]));
    tiles.push(tile("D", [flat(0), flat(cup_e), flat(0), flat(dc)]));

    TileSystem::new(
        Model::Gtam,
        g.function(),
        tiles,
        vec![Placement::new(0, 0, 0)],
        1,
        Some(GEOMETRY_LEN),
    )
    .expect("arm/cup system is well formed")
}

fn side_towards(p: Pos, q: Pos) -> Side {
    Side::ALL
        .into_iter()
        .find(|s| p.step(*s) == q)
        .expect("path cells are adjacent")
}

/// Every assembly reachable from `start` by attachments inside `cells`.
pub fn center_outcomes(sys: &TileSystem, start: &Assembly, cells: &[Pos]) -> Vec<Assembly> {
    let allowed: BTreeSet<Pos> = cells.iter().copied().collect();
    let mut seen: HashSet<Vec<Placement>> = HashSet::from([start.canonical()]);
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(a) = queue.pop_front() {
        for att in frontier(sys, &a) {
            if !sys
                .tile(att.tile)
                .footprint(att.anchor)
                .all(|p| allowed.contains(&p))
            {
                continue;
            }
            let next = a
                .with(att, sys.tiles())
                .expect("frontier entries are legal");
            if seen.insert(next.canonical()) {
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    out
}
