//! A temperature-2 system with a single frontier location at all times.
//!
//! Growth runs east through segments of `2w + 8` columns, `w` rows tall.
//! Each segment copies a `w`-bit counter, adds one, and exposes the bits
//! upward. A decrementer then counts the exposed value down to zero, two
//! rows per unit, after which a short row runs east, a green column falls
//! back to the segment, and a yellow and a red tile hand growth to the next
//! segment. Growth stops inside the segment that reads the final value.
//!
//! Column roles within a segment, by offset `k`:
//!
//! | k                 | grows | role                                        |
//! |-------------------|-------|---------------------------------------------|
//! | 0                 | down  | copy; top joins via a turn or the bridge    |
//! | 1                 | up    | increment; stops at the final value         |
//! | 2                 | down  | copy                                        |
//! | 3, 5, .., 2w+1    | up    | expose one bit north, most significant first|
//! | 4, 6, .., 2w      | down  | spacer                                      |
//! | 2w+2              | down  | end spacer                                  |
//! | 2w+3 .. 2w+7      | alt.  | extension, the last raising the ext row     |
//!
//! Glues, all diagonal:
//!
//! | name             | str | between                                      |
//! |------------------|-----|----------------------------------------------|
//! | `h{b}`           | 1   | bit `b` passed east within a row             |
//! | `t{k}_{b}`       | 2   | turn into the column of role `k`, carrying `b`|
//! | `v{k}_{y}[_aux]` | 1   | rows `y` and `y+1` of role `k`               |
//! | `vi{y}`          | 2   | rows of the initial column                   |
//! | `n_msb_{b}`, `n_bit_{b}`, `n_sp`, `n_end` | 1 | top of a column or check row to the decrement row above |
//! | `n_ext`, `row`   | 1   | extension row, grown west                    |
//! | `rowstart`       | 2   | last extension column to the extension row   |
//! | `br{c}`          | 1   | borrow `c` passed west in a decrement row    |
//! | `m_*`            | 1   | decrement row to the check row above         |
//! | `cs{b}`          | 2   | most significant decrement tile to the check row |
//! | `z{f}`           | 1   | all-zero flag passed east in a check row     |
//! | `decbegin`       | 2   | check row end to the next decrement row      |
//! | `er1` .. `er4`   | 2   | the east row                                 |
//! | `gdown`          | 2   | green column                                 |
//! | `gcoop`, `coop`  | 1   | green tile and extension row to yellow       |
//! | `yr`, `rb`       | 2   | yellow to red, red to bridge                 |
//! | `bridge`         | 1   | bridge to the next segment's first column    |

use std::collections::BTreeSet;

use crate::model::{Model, Placement, TileSystem, TileType};

use super::GlueTable;

/// Coordinates of the pieces grown by [`planter_sass`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlanterLayout {
    pub iterations: usize,
    /// Counter bits, at least 3.
    pub width: usize,
}

impl PlanterLayout {
    pub fn new(iterations: usize) -> Self {
        assert!(iterations >= 1, "at least one iteration");
        let last = 3 + iterations as u64;
        let width = (64 - last.leading_zeros() as usize).max(3);
        PlanterLayout { iterations, width }
    }

    /// Value counted down by iteration `i` (1-based).
    pub fn value(&self, i: usize) -> u64 {
        3 + i as u64
    }

    pub fn final_value(&self) -> u64 {
        self.value(self.iterations)
    }

    pub fn segment_width(&self) -> i64 {
        2 * self.width as i64 + 8
    }

    /// x of the first column of segment `i` (0-based).
    pub fn segment_x(&self, i: usize) -> i64 {
        1 + i as i64 * self.segment_width()
    }

    /// Columns of segment `i`'s decrementer.
    pub fn decrementer_columns(&self, i: usize) -> std::ops::RangeInclusive<i64> {
        let x0 = self.segment_x(i);
        x0 + 3..=x0 + 2 * self.width as i64 + 2
    }

    /// Rows of the decrementer for iteration `i + 1`.
    pub fn decrementer_rows(&self, i: usize) -> std::ops::RangeInclusive<i64> {
        let w = self.width as i64;
        w..=w + 2 * self.value(i + 1) as i64 - 1
    }

    pub fn green_column(&self, i: usize) -> i64 {
        self.segment_x(i) + 2 * self.width as i64 + 6
    }

    /// Cells of the yellow and red tiles of segment `i`.
    pub fn yellow_red(&self, i: usize) -> ((i64, i64), (i64, i64)) {
        let x = self.segment_x(i) + 2 * self.width as i64 + 7;
        let y = self.width as i64 + 1;
        ((x, y), (x + 1, y))
    }
}

pub fn planter_layout(iterations: usize) -> PlanterLayout {
    PlanterLayout::new(iterations)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    Copy,
    Increment,
    Expose(usize),
    Spacer,
    End,
    Ext(usize),
}

fn role(k: usize, w: usize) -> Role {
    match k {
        0 | 2 => Role::Copy,
        1 => Role::Increment,
        _ if k <= 2 * w + 1 && k % 2 == 1 => Role::Expose((k - 3) / 2),
        _ if k <= 2 * w => Role::Spacer,
        _ if k == 2 * w + 2 => Role::End,
        _ => Role::Ext(k - 2 * w - 2),
    }
}

/// Builds the system for counter values `4 ..= 3 + iterations`.
pub fn planter_sass(iterations: usize) -> TileSystem {
    let layout = PlanterLayout::new(iterations);
    let w = layout.width;
    let cap = layout.final_value();
    let mut g = GlueTable::default();
    let mut tiles: Vec<TileType> = Vec::new();
    let mut push = |name: String, n, e, s, wg| tiles.push(TileType::square(name, [n, e, s, wg]));

    // initial column, value 3, grown up from the seed
    for y in 0..w {
        let b = (3u64 >> y) & 1;
        let s = if y > 0 {
            g.id(&format!("vi{}", y - 1), 2)
        } else {
            0
        };
        let n = if y < w - 1 {
            g.id(&format!("vi{y}"), 2)
        } else {
            0
        };
        let e = if y < w - 1 {
            g.id(&format!("h{b}"), 1)
        } else {
            g.id(&format!("t0_{b}"), 2)
        };
        push(format!("init_r{y}"), n, e, s, 0);
    }

    for k in 0..2 * w + 8 {
        let r = role(k, w);
        if k % 2 == 0 {
            let north = match r {
                Role::Spacer => g.id("n_sp", 1),
                Role::End => g.id("n_end", 1),
                Role::Ext(_) => g.id("n_ext", 1),
                _ => 0,
            };
            for b in 0..2u64 {
                let h = g.id(&format!("h{b}"), 1);
                for y in (0..w).rev() {
                    let s = if y > 0 {
                        g.id(&format!("v{k}_{}", y - 1), 1)
                    } else {
                        0
                    };
                    let e = if y > 0 {
                        h
                    } else {
                        g.id(&format!("t{}_{b}", k + 1), 2)
                    };
                    if y == w - 1 {
                        let turn = g.id(&format!("t{k}_{b}"), 2);
                        push(format!("col{k}_r{y}_{b}"), north, e, s, turn);
                        if k == 0 {
                            let bridge = g.id("bridge", 1);
                            push(format!("col{k}_r{y}_{b}_bridged"), bridge, e, s, h);
                        }
                    } else {
                        let n = g.id(&format!("v{k}_{y}"), 1);
                        push(format!("col{k}_r{y}_{b}"), n, e, s, h);
                    }
                }
            }
        } else {
            // up columns carry an auxiliary state from the bottom row to the top
            let (init, step): (String, Box<dyn Fn(usize, u64, &str) -> (u64, String)>) = match r {
                Role::Increment => (
                    "11".into(),
                    Box::new(move |y, b, aux: &str| {
                        let c = u64::from(&aux[0..1] == "1");
                        let eq = &aux[1..2] == "1" && b == (cap >> y) & 1;
                        (b ^ c, format!("{}{}", b & c, u8::from(eq)))
                    }),
                ),
                Role::Expose(j) => (
                    "n".into(),
                    Box::new(move |y, b, aux: &str| {
                        let x = if y == w - 1 - j {
                            b.to_string()
                        } else {
                            aux.to_string()
                        };
                        (b, x)
                    }),
                ),
                _ => (String::new(), Box::new(|_, b, _: &str| (b, String::new()))),
            };
            let mut states: BTreeSet<String> = BTreeSet::from([init]);
            for y in 0..w {
                let mut next = BTreeSet::new();
                for aux in &states {
                    for b in 0..2u64 {
                        let (out, aux2) = step(y, b, aux);
                        next.insert(aux2.clone());
                        let suffix = |a: &str| {
                            if a.is_empty() {
                                String::new()
                            } else {
                                format!("_{a}")
                            }
                        };
                        let s = if y > 0 {
                            g.id(&format!("v{k}_{}{}", y - 1, suffix(aux)), 1)
                        } else {
                            0
                        };
                        let west = if y > 0 {
                            g.id(&format!("h{b}"), 1)
                        } else {
                            g.id(&format!("t{k}_{b}"), 2)
                        };
                        let (n, e) = if y < w - 1 {
                            (
                                g.id(&format!("v{k}_{y}{}", suffix(&aux2)), 1),
                                g.id(&format!("h{out}"), 1),
                            )
                        } else {
                            match r {
                                Role::Increment if &aux2[1..2] == "1" => (0, 0),
                                Role::Increment => (0, g.id(&format!("t{}_{out}", k + 1), 2)),
                                Role::Expose(j) => {
                                    let kind = if j == 0 { "msb" } else { "bit" };
                                    (
                                        g.id(&format!("n_{kind}_{aux2}"), 1),
                                        g.id(&format!("t{}_{out}", k + 1), 2),
                                    )
                                }
                                Role::Ext(5) => (g.id("rowstart", 2), g.id(&format!("h{out}"), 1)),
                                _ => (g.id("n_ext", 1), g.id(&format!("t{}_{out}", k + 1), 2)),
                            }
                        };
                        push(format!("col{k}_r{y}_{b}{}", suffix(aux)), n, e, s, west);
                    }
                }
                states = next;
            }
        }
    }

    // extension row at y = w, grown west above the extension columns
    let row = g.id("row", 1);
    let rowstart = g.id("rowstart", 2);
    let coop = g.id("coop", 1);
    push("ext_row_start".into(), coop, 0, rowstart, row);
    let n_ext = g.id("n_ext", 1);
    push("ext_row".into(), 0, row, n_ext, row);

    // decrement rows, east to west; column p of the decrementer
    let decbegin = g.id("decbegin", 2);
    let n_end = g.id("n_end", 1);
    let br1 = g.id("br1", 1);
    let m_end = g.id("m_end", 1);
    push("dec_end_first".into(), m_end, row, n_end, br1);
    push("dec_end".into(), m_end, 0, decbegin, br1);
    for c in 0..2u64 {
        let br = g.id(&format!("br{c}"), 1);
        let n_sp = g.id("n_sp", 1);
        let m_sp = g.id("m_sp", 1);
        push(format!("dec_sp_{c}"), m_sp, br, n_sp, br);
        for b in 0..2u64 {
            let n_bit = g.id(&format!("n_bit_{b}"), 1);
            let m_bit = g.id(&format!("m_bit_{}", b ^ c), 1);
            let out = g.id(&format!("br{}", c & (1 - b)), 1);
            push(format!("dec_bit_{b}{c}"), m_bit, br, n_bit, out);
            let n_msb = g.id(&format!("n_msb_{b}"), 1);
            let cs = g.id(&format!("cs{}", b ^ c), 2);
            push(format!("dec_msb_{b}{c}"), cs, br, n_msb, 0);
        }
    }

    // check rows, west to east; z1 means every bit so far is zero
    for b in 0..2u64 {
        let cs = g.id(&format!("cs{b}"), 2);
        let n_msb = g.id(&format!("n_msb_{b}"), 1);
        let z = g.id(&format!("z{}", u8::from(b == 0)), 1);
        push(format!("chk_msb_{b}"), n_msb, z, cs, 0);
    }
    for zf in 0..2u8 {
        let zin = g.id(&format!("z{zf}"), 1);
        let m_sp = g.id("m_sp", 1);
        let n_sp = g.id("n_sp", 1);
        push(format!("chk_sp_{zf}"), n_sp, zin, m_sp, zin);
        for b in 0..2u64 {
            let m_bit = g.id(&format!("m_bit_{b}"), 1);
            let n_bit = g.id(&format!("n_bit_{b}"), 1);
            let zout = g.id(&format!("z{}", u8::from(zf == 1 && b == 0)), 1);
            push(format!("chk_bit_{b}{zf}"), n_bit, zout, m_bit, zin);
        }
        if zf == 1 {
            let er = g.id("er1", 2);
            push("chk_end_zero".into(), 0, er, m_end, zin);
        } else {
            push("chk_end_more".into(), decbegin, 0, m_end, zin);
        }
    }

    // east row, green column, yellow, red and the bridge to the next segment
    for i in 1..=4 {
        let wg = g.id(&format!("er{i}"), 2);
        let (e, s) = if i < 4 {
            (g.id(&format!("er{}", i + 1), 2), 0)
        } else {
            (0, g.id("gdown", 2))
        };
        push(format!("east{i}"), 0, e, s, wg);
    }
    let gdown = g.id("gdown", 2);
    let gcoop = g.id("gcoop", 1);
    push("green".into(), gdown, gcoop, gdown, 0);
    let yr = g.id("yr", 2);
    push("yellow".into(), 0, yr, coop, gcoop);
    let rb = g.id("rb", 2);
    push("red".into(), 0, 0, rb, yr);
    let bridge = g.id("bridge", 1);
    push("bridge".into(), rb, 0, bridge, 0);

    TileSystem::new(
        Model::Atam,
        g.function(),
        tiles,
        vec![Placement::new(0, 0, 0)],
        2,
        None,
    )
    .expect("planter is well formed")
}
