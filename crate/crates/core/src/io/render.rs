//! SVG and ASCII drawings of assemblies.
//!
//! North is up. In SVG every tile instance is one `rect.tile` (duples span
//! both cells and the gap between them) and every bump is a `rect.bump`
//! sticking out into the gap next to its side. Bump positions run
//! clockwise around the tile: west to east along N, north to south along
//! E, east to west along S, south to north along W.

use std::fmt::Write;

use crate::model::{Assembly, Pos, Side, TileSystem};

const GAP: i64 = 8;
const MARGIN: i64 = 10;
const PALETTE: [&str; 8] = [
    "#8ecae6", "#ffb703", "#a7c957", "#f4a3a8", "#cdb4db", "#f6bd60", "#84a59d", "#bde0fe",
];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Cell edge length: a whole number of units per geometry position.
fn cell_size(sys: &TileSystem) -> (i64, i64) {
    match sys.geometry_len() {
        Some(l) if l > 0 => {
            let unit = (40 / l as i64).max(2);
            (unit * l as i64, unit)
        }
        _ => (40, 0),
    }
}

pub fn render_svg(sys: &TileSystem, a: &Assembly) -> String {
    let (cell, unit) = cell_size(sys);
    let pitch = cell + GAP;
    let (lo, hi) = a.bounds().unwrap_or((Pos::new(0, 0), Pos::new(-1, -1)));
    let cols = hi.x - lo.x + 1;
    let rows = hi.y - lo.y + 1;
    let span = |n: i64| (n * pitch - GAP).max(0);
    let width = 2 * MARGIN + span(cols);
    let height = 2 * MARGIN + span(rows);
    // top-left corner of a cell
    let origin = |p: Pos| (MARGIN + (p.x - lo.x) * pitch, MARGIN + (hi.y - p.y) * pitch);

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"<rect class="background" x="0" y="0" width="{width}" height="{height}" fill="white"/>"#
    )
    .unwrap();

    let mut bumps = String::new();
    for pl in a.canonical() {
        let tile = sys.tile(pl.tile);
        let cells: Vec<Pos> = tile.footprint(pl.anchor).collect();
        let (x0, y0) = cells
            .iter()
            .map(|&p| origin(p))
            .min()
            .expect("tiles cover a cell");
        let (x1, y1) = cells
            .iter()
            .map(|&p| origin(p))
            .max()
            .expect("tiles cover a cell");
        let (w, h) = (x1 - x0 + cell, y1 - y0 + cell);
        let fill = PALETTE[pl.tile % PALETTE.len()];
        writeln!(
            out,
            r#"<rect class="tile" x="{x0}" y="{y0}" width="{w}" height="{h}" fill="{fill}" stroke="black" stroke-width="1"/>"#
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="{}" y="{}" font-family="monospace" font-size="10" text-anchor="middle">{}</text>"#,
            x0 + w / 2,
            y0 + h / 2 + 3,
            escape(&tile.name)
        )
        .unwrap();

        for c in tile.cells() {
            let (cx, cy) = origin(pl.anchor.offset(c.offset.0, c.offset.1));
            for side in Side::ALL {
                let Some(g) = c.sides[side.index()]
                    .as_ref()
                    .and_then(|f| f.geometry.as_ref())
                else {
                    continue;
                };
                for k in g.positions() {
                    let along = (k as i64 - 1) * unit;
                    let depth = GAP / 2;
                    let (bx, by, bw, bh) = match side {
                        Side::N => (cx + along, cy - depth, unit, depth),
                        Side::E => (cx + cell, cy + along, depth, unit),
                        Side::S => (cx + cell - along - unit, cy + cell, unit, depth),
                        Side::W => (cx - depth, cy + cell - along - unit, depth, unit),
                    };
                    writeln!(
                        bumps,
                        r#"<rect class="bump" x="{bx}" y="{by}" width="{bw}" height="{bh}" fill="black"/>"#
                    )
                    .unwrap();
                }
            }
        }
    }
    out.push_str(&bumps);
    out.push_str("</svg>\n");
    out
}

/// One text row per lattice row, north first. Empty cells are `.`; names
/// are cut to eight characters.
pub fn render_ascii(sys: &TileSystem, a: &Assembly) -> String {
    let Some((lo, hi)) = a.bounds() else {
        return String::new();
    };
    let label = |p: Pos| -> String {
        match a.tile_at(p) {
            Some(t) => sys.tile(t).name.chars().take(8).collect(),
            None => ".".to_string(),
        }
    };
    let width = (lo.y..=hi.y)
        .flat_map(|y| (lo.x..=hi.x).map(move |x| Pos::new(x, y)))
        .map(|p| label(p).chars().count())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for y in (lo.y..=hi.y).rev() {
        let row: Vec<String> = (lo.x..=hi.x)
            .map(|x| format!("{:<width$}", label(Pos::new(x, y))))
            .collect();
        out.push_str(row.join(" ").trim_end());
        out.push('\n');
    }
    out
}
