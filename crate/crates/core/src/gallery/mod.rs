//! Example systems: small fixtures for the compilers, a single-frontier
//! counter system whose growth rows can be pumped, and a geometric system
//! whose center cells exclude each other by bump collisions.

mod arm_cup;
mod planter;

use std::collections::HashMap;

use crate::model::{
    Face, Geometry, GlueFunction, GlueId, Model, Orientation, Placement, TileSystem, TileType,
};

pub use arm_cup::{arm_cup_system, center_cells, center_outcomes, CUP_SPACING, FIRST_ARM};
pub use planter::{planter_layout, planter_sass, PlanterLayout};

/// Sizes for the parameterized constructors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GalleryParams {
    /// Counter values run by [`planter_sass`]. Default 5.
    pub iterations: usize,
    /// Arm/cup pairs in [`arm_cup_system`]. Default 2.
    pub periods: usize,
    /// Bits in [`zigzag_counter`]. Default 3.
    pub counter_width: usize,
}

impl Default for GalleryParams {
    fn default() -> Self {
        GalleryParams {
            iterations: 5,
            periods: 2,
            counter_width: 3,
        }
    }
}

/// Every gallery system under a file-friendly name.
pub fn all_systems(params: &GalleryParams) -> Vec<(&'static str, TileSystem)> {
    vec![
        ("mismatch_square", mismatch_square_system()),
        ("flexible_glue_demo", flexible_glue_demo()),
        ("planter_sass", planter_sass(params.iterations)),
        ("arm_cup", arm_cup_system(params.periods)),
        ("duple_blocking_demo", duple_blocking_demo()),
        ("zigzag_counter", zigzag_counter(params.counter_width)),
        ("periodic_line", periodic_line(3)),
    ]
}

/// Collects named glues for a diagonal glue function, assigning ids on
/// first use.
#[derive(Default)]
pub(crate) struct GlueTable {
    names: Vec<String>,
    strengths: Vec<u32>,
    ids: HashMap<String, GlueId>,
}

impl GlueTable {
    pub(crate) fn id(&mut self, name: &str, strength: u32) -> GlueId {
        if let Some(&id) = self.ids.get(name) {
            assert_eq!(
                self.strengths[id - 1],
                strength,
                "glue {name} reused with another strength"
            );
            return id;
        }
        self.names.push(name.to_string());
        self.strengths.push(strength);
        let id = self.names.len();
        self.ids.insert(name.to_string(), id);
        id
    }

    pub(crate) fn function(self) -> GlueFunction {
        GlueFunction::diagonal(self.names, self.strengths).expect("distinct names")
    }
}

/// Four unit-strength self-binding glues around a 2×2 square; whichever
/// corner tile arrives, one of its edges mismatches.
pub fn mismatch_square_system() -> TileSystem {
    let gf = GlueFunction::diagonal(
        ["cyan", "orange", "green", "red", "blue"]
            .map(String::from)
            .to_vec(),
        vec![1; 5],
    )
    .expect("static table");
    let tiles = vec![
        TileType::square("S", [1, 2, 0, 0]),
        TileType::square("U", [0, 4, 1, 0]),
        TileType::square("R", [3, 0, 0, 2]),
        TileType::square("A", [0, 0, 3, 5]),
        TileType::square("B", [0, 0, 5, 4]),
    ];
    TileSystem::new(
        Model::Atam,
        gf,
        tiles,
        vec![Placement::new(0, 0, 0)],
        1,
        None,
    )
    .expect("static system")
}

/// Four glues with a non-diagonal strength matrix. Glue 1 does not bind
/// itself but binds glues 2 and 4.
pub fn flexible_glue_demo() -> TileSystem {
    let gf = GlueFunction::new(
        ["g1", "g2", "g3", "g4"].map(String::from).to_vec(),
        vec![
            vec![0, 1, 0, 1],
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![1, 0, 0, 1],
        ],
    )
    .expect("static matrix");
    let tiles = vec![
        TileType::square("S", [1, 4, 0, 0]),
        TileType::square("P", [0, 3, 2, 0]),
        TileType::square("Q", [3, 0, 0, 1]),
    ];
    TileSystem::new(
        Model::Atam,
        gf,
        tiles,
        vec![Placement::new(0, 0, 0)],
        1,
        None,
    )
    .expect("static system")
}

/// A horizontal duple grown east of the seed races a path of square tiles
/// that ends with a blue tile dropping into the duple's east cell.
///
/// ```text
///  y=1   Q  P  P2
///  y=0   S  D==D     blue competes for (2, 0)
/// ```
pub fn duple_blocking_demo() -> TileSystem {
    let gf = GlueFunction::diagonal((1..=5).map(|i| format!("g{i}")).collect(), vec![1; 5])
        .expect("static table");
    let tiles = vec![
        TileType::square("S", [3, 1, 0, 0]),
        TileType::square("Q", [0, 4, 3, 0]),
        TileType::square("P", [0, 5, 0, 4]),
        TileType::square("P2", [0, 0, 2, 5]),
        TileType::square("blue", [2, 0, 0, 0]),
        TileType::duple("D", Orientation::Horizontal, [0, 0, 0, 0, 0, 1]),
    ];
    TileSystem::new(
        Model::Datam,
        gf,
        tiles,
        vec![Placement::new(0, 0, 0)],
        1,
        None,
    )
    .expect("static system")
}

/// Cell the blue tile and the east half of the duple compete for.
pub const DUPLE_CONTESTED_CELL: (i64, i64) = (2, 0);

/// Binary counter of `width` bits growing in rows that alternate east and
/// west at temperature 2.
///
/// Row 0 is the seed row holding 0. Row `2v - 1` adds one to the value
/// from west to east and row `2v` carries it back west, so value `v` is
/// complete after row `2v`. After `2^width - 1` the next increment row
/// overflows and growth stops, for `2^(width + 1)` rows in total.
pub fn zigzag_counter(width: usize) -> TileSystem {
    assert!(width >= 1, "width must be positive");
    let last = width - 1;
    let mut g = GlueTable::default();
    let mut tiles = Vec::new();

    for x in 0..width {
        let n = if x == 0 {
            g.id("start0", 2)
        } else {
            g.id("b0", 1)
        };
        let e = if x < last {
            g.id(&format!("seed{}", x + 1), 2)
        } else {
            0
        };
        let w = if x > 0 {
            g.id(&format!("seed{x}"), 2)
        } else {
            0
        };
        tiles.push(TileType::square(format!("seed{x}"), [n, e, 0, w]));
    }

    // increment row, west to east
    for x in 0..width {
        for b in 0..2 {
            let carries: &[u8] = if x == 0 { &[1] } else { &[0, 1] };
            for &c in carries {
                let (out, carry) = (b ^ c, b & c);
                let s = if x == 0 {
                    g.id(&format!("start{b}"), 2)
                } else {
                    g.id(&format!("b{b}"), 1)
                };
                let w = if x == 0 {
                    0
                } else {
                    g.id(&format!("c{x}_{c}"), 1)
                };
                let e = if x < last {
                    g.id(&format!("c{}_{carry}", x + 1), 1)
                } else {
                    0
                };
                let n = match (x == last, carry) {
                    (true, 1) => 0,
                    (true, _) => g.id(&format!("back{out}"), 2),
                    (false, _) => g.id(&format!("u{out}"), 1),
                };
                tiles.push(TileType::square(format!("inc{x}_{b}{c}"), [n, e, s, w]));
            }
        }
    }

    // return row, east to west
    for x in 0..width {
        for b in 0..2 {
            let s = if x == last {
                g.id(&format!("back{b}"), 2)
            } else {
                g.id(&format!("u{b}"), 1)
            };
            let e = if x < last {
                g.id(&format!("r{x}"), 1)
            } else {
                0
            };
            let w = if x > 0 {
                g.id(&format!("r{}", x - 1), 1)
            } else {
                0
            };
            let n = if x == 0 {
                g.id(&format!("start{b}"), 2)
            } else {
                g.id(&format!("b{b}"), 1)
            };
            tiles.push(TileType::square(format!("ret{x}_{b}"), [n, e, s, w]));
        }
    }

    let seed = (0..width).map(|x| Placement::new(x, x as i64, 0)).collect();
    TileSystem::new(Model::Atam, g.function(), tiles, seed, 2, None)
        .expect("counter is well formed")
}

/// Seed followed by a line growing east whose tiles repeat every `period`
/// columns; each tile binds only the next one.
pub fn periodic_line(period: usize) -> TileSystem {
    assert!(period >= 1, "period must be positive");
    let gf = GlueFunction::diagonal(
        (1..=period).map(|i| format!("g{i}")).collect(),
        vec![1; period],
    )
    .expect("distinct names");
    let mut tiles = vec![TileType::square("seed", [0, 1, 0, 0])];
    for i in 1..=period {
        tiles.push(TileType::square(format!("t{i}"), [0, i % period + 1, 0, i]));
    }
    TileSystem::new(
        Model::Atam,
        gf,
        tiles,
        vec![Placement::new(0, 0, 0)],
        1,
        None,
    )
    .expect("static system")
}

/// A face with a null glue and the given bump pattern.
pub(crate) fn bare_face(geometry: &str) -> Face {
    Face {
        glue: 0,
        geometry: Some(Geometry::from_bits(
            &geometry.chars().map(|c| c == '1').collect::<Vec<_>>(),
        )),
    }
}
