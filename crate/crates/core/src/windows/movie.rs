//! Glue events along a window over the course of an assembly sequence.

use crate::dynamics::AssemblySequence;
use crate::model::{Face, GlueId, Pos, Side, TileSystem};

use super::{region_of, Edge, Window, WindowError};

/// Which side of the window the newly placed tile is on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Direction {
    IntoLeft,
    IntoRight,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GlueEvent {
    /// 0 for adjacencies already in the seed, otherwise the 1-based step.
    pub step: usize,
    pub edge: Edge,
    pub left_glue: GlueId,
    pub right_glue: GlueId,
    /// 0 when the glues do not bind or the geometries collide.
    pub strength: u32,
    pub direction: Direction,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WindowMovie {
    pub window: Window,
    /// Ordered by step, then edge.
    pub events: Vec<GlueEvent>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum MovieKind {
    #[default]
    Full,
    BondForming,
}

pub fn record_movie(
    sys: &TileSystem,
    seq: &AssemblySequence,
    w: &Window,
) -> Result<WindowMovie, WindowError> {
    let prefixes = seq.prefixes(sys)?;
    let last = prefixes.last().expect("prefixes include the seed");
    let (lo, hi) = region_of(last);
    w.sides(lo, hi)?;
    let cut = w.edge_index();
    let mut events = Vec::new();

    // tile-cutting check and seed adjacencies
    for (p, inst) in last.cells() {
        for side in [Side::E, Side::N] {
            let q = p.step(side);
            if cut.contains_key(&(p, q)) && last.instance_at(q) == Some(inst) {
                return Err(WindowError::CutsTile(p));
            }
        }
    }
    let seed = &prefixes[0];
    for (p, _) in seed.cells() {
        for side in [Side::E, Side::N] {
            let q = p.step(side);
            if let (Some(e), true) = (cut.get(&(p, q)), seed.is_occupied(q)) {
                let fp = sys.face_at(seed, p, side);
                let fq = sys.face_at(seed, q, side.opposite());
                // seed adjacencies have no direction; report them as grown into the right
                events.push(event(sys, 0, *e, p, fp, fq, Direction::IntoRight));
            }
        }
    }

    for (i, att) in seq.steps.iter().enumerate() {
        let before = &prefixes[i];
        let tile = sys.tile(att.tile);
        let mut here = Vec::new();
        for cell in tile.cells() {
            let p = att.anchor.offset(cell.offset.0, cell.offset.1);
            for side in Side::ALL {
                let q = p.step(side);
                let Some(e) = cut.get(&(p, q)) else {
                    continue;
                };
                if !before.is_occupied(q) {
                    continue;
                }
                let fp = cell.sides[side.index()].as_ref();
                let fq = sys.face_at(before, q, side.opposite());
                let dir = if e.left == p {
                    Direction::IntoLeft
                } else {
                    Direction::IntoRight
                };
                here.push(event(sys, i + 1, *e, p, fp, fq, dir));
            }
        }
        here.sort_by_key(|ev| ev.edge);
        events.extend(here);
    }
    Ok(WindowMovie {
        window: w.clone(),
        events,
    })
}

fn event(
    sys: &TileSystem,
    step: usize,
    edge: Edge,
    p: Pos,
    fp: Option<&Face>,
    fq: Option<&Face>,
    direction: Direction,
) -> GlueEvent {
    let gp = fp.map_or(0, |f| f.glue);
    let gq = fq.map_or(0, |f| f.glue);
    let strength = match (fp, fq) {
        (Some(a), Some(b)) => sys.interaction(a, b).unwrap_or(0),
        _ => 0,
    };
    let (left_glue, right_glue) = if edge.left == p { (gp, gq) } else { (gq, gp) };
    GlueEvent {
        step,
        edge,
        left_glue,
        right_glue,
        strength,
        direction,
    }
}

pub fn bond_forming_submovie(m: &WindowMovie) -> WindowMovie {
    WindowMovie {
        window: m.window.clone(),
        events: m
            .events
            .iter()
            .filter(|e| e.strength > 0)
            .cloned()
            .collect(),
    }
}

/// Same glues on translated edges in the same relative order. Absolute
/// step numbers are ignored; whether consecutive events share a step is not.
pub fn movies_identical(
    m1: &WindowMovie,
    m2: &WindowMovie,
    translation: (i64, i64),
) -> Result<bool, WindowError> {
    let (dx, dy) = translation;
    if m1.window.translated(dx, dy) != m2.window {
        return Err(WindowError::NotTranslates);
    }
    if m1.events.len() != m2.events.len() {
        return Ok(false);
    }
    let same = m1.events.iter().zip(&m2.events).all(|(a, b)| {
        a.edge.translated(dx, dy) == b.edge
            && a.left_glue == b.left_glue
            && a.right_glue == b.right_glue
            && a.strength == b.strength
            && a.direction == b.direction
            && (a.step == 0) == (b.step == 0)
    });
    let grouping = |m: &WindowMovie| -> Vec<bool> {
        m.events
            .windows(2)
            .map(|w| w[0].step == w[1].step)
            .collect()
    };
    Ok(same && grouping(m1) == grouping(m2))
}

/// First pair `(i, j)`, `i < j`, of windows with identical movies.
pub fn find_repeat(
    sys: &TileSystem,
    seq: &AssemblySequence,
    windows: &[Window],
    kind: MovieKind,
) -> Result<Option<(usize, usize)>, WindowError> {
    let movies = windows
        .iter()
        .map(|w| {
            let m = record_movie(sys, seq, w)?;
            Ok(match kind {
                MovieKind::Full => m,
                MovieKind::BondForming => bond_forming_submovie(&m),
            })
        })
        .collect::<Result<Vec<_>, WindowError>>()?;
    for i in 0..movies.len() {
        for j in i + 1..movies.len() {
            let t = windows[i]
                .translation_to(&windows[j])
                .ok_or(WindowError::NotTranslates)?;
            if movies_identical(&movies[i], &movies[j], t)? {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}
