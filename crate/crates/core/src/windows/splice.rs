//! Removing or repeating the segment between two windows with identical movies.

use std::collections::BTreeSet;

use crate::dynamics::{attachable, AssemblySequence};
use crate::model::{Assembly, Placement, Pos, TileSystem};

use super::{movies_identical, record_movie, region_of, Sides, Window, WindowError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splice {
    /// Every tile of the candidate that fit without overlapping.
    pub assembly: Assembly,
    /// Legal prefix of the replayed candidate sequence.
    pub sequence: AssemblySequence,
    /// All candidate tiles were placed by legal attachments.
    pub valid: bool,
    /// Cells claimed twice by the candidate.
    pub collisions: Vec<Pos>,
    /// Placements that never became attachable.
    pub stuck: Vec<Placement>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Part {
    Left,
    Middle,
    Right,
}

/// Steps of `seq` split by position relative to `w0` and `w1`, each with
/// its original index.
struct Parts {
    seed: Vec<Placement>,
    left: Vec<(usize, Placement)>,
    middle: Vec<(usize, Placement)>,
    right: Vec<(usize, Placement)>,
    shift: (i64, i64),
}

fn split(
    sys: &TileSystem,
    seq: &AssemblySequence,
    w0: &Window,
    w1: &Window,
) -> Result<Parts, WindowError> {
    let shift = w0.translation_to(w1).ok_or(WindowError::NotTranslates)?;
    let m0 = record_movie(sys, seq, w0)?;
    let m1 = record_movie(sys, seq, w1)?;
    if !movies_identical(&m0, &m1, shift)? {
        return Err(WindowError::MoviesDiffer);
    }
    let last = seq.final_assembly(sys)?;
    let (mut lo, mut hi) = region_of(&last);
    for e in w0.edges().iter().chain(w1.edges()) {
        for c in [e.left, e.right] {
            lo = Pos::new(lo.x.min(c.x), lo.y.min(c.y));
            hi = Pos::new(hi.x.max(c.x), hi.y.max(c.y));
        }
    }
    let s0 = w0.sides(lo, hi)?;
    let s1 = w1.sides(lo, hi)?;
    let part = |pl: &Placement| -> Result<Part, WindowError> {
        let cells: Vec<Pos> = sys.tile(pl.tile).footprint(pl.anchor).collect();
        let side = |s: &Sides| -> Result<bool, WindowError> {
            let l = cells.iter().filter(|c| s.left.contains(c)).count();
            match l {
                0 => Ok(false),
                n if n == cells.len() => Ok(true),
                _ => Err(WindowError::CutsTile(pl.anchor)),
            }
        };
        match (side(&s0)?, side(&s1)?) {
            (true, true) => Ok(Part::Left),
            (false, true) => Ok(Part::Middle),
            (false, false) => Ok(Part::Right),
            (true, false) => Err(WindowError::WindowsCross),
        }
    };
    let seed = seq.seed.placements().to_vec();
    for pl in &seed {
        if part(pl)? != Part::Left {
            return Err(WindowError::SeedNotLeft);
        }
    }
    let mut parts = Parts {
        seed,
        left: Vec::new(),
        middle: Vec::new(),
        right: Vec::new(),
        shift,
    };
    for (i, pl) in seq.steps.iter().enumerate() {
        match part(pl)? {
            Part::Left => parts.left.push((i, *pl)),
            Part::Middle => parts.middle.push((i, *pl)),
            Part::Right => parts.right.push((i, *pl)),
        }
    }
    Ok(parts)
}

fn moved(q: &[(usize, Placement)], k: i64, shift: (i64, i64)) -> Vec<(usize, Placement)> {
    q.iter()
        .map(|&(i, p)| {
            (
                i,
                Placement {
                    tile: p.tile,
                    anchor: p.anchor.offset(k * shift.0, k * shift.1),
                },
            )
        })
        .collect()
}

/// Drops the segment between the windows and slides the right part back.
pub fn splice_pump_down(
    sys: &TileSystem,
    seq: &AssemblySequence,
    w0: &Window,
    w1: &Window,
) -> Result<Splice, WindowError> {
    let p = split(sys, seq, w0, w1)?;
    let queues = vec![p.left.clone(), moved(&p.right, -1, p.shift)];
    Ok(replay(sys, &p.seed, queues))
}

/// Inserts `copies` extra translated copies of the segment between the windows.
pub fn splice_pump_up(
    sys: &TileSystem,
    seq: &AssemblySequence,
    w0: &Window,
    w1: &Window,
    copies: usize,
) -> Result<Splice, WindowError> {
    let p = split(sys, seq, w0, w1)?;
    let mut queues = vec![p.left.clone(), p.middle.clone()];
    for k in 1..=copies as i64 {
        queues.push(moved(&p.middle, k, p.shift));
    }
    queues.push(moved(&p.right, copies as i64, p.shift));
    Ok(replay(sys, &p.seed, queues))
}

/// Attaches queue heads one at a time. Among attachable heads the one
/// with the smallest original step wins, earlier queues breaking ties.
fn replay(sys: &TileSystem, seed: &[Placement], queues: Vec<Vec<(usize, Placement)>>) -> Splice {
    let tiles = sys.tiles();
    let mut assembly =
        Assembly::from_placements(seed.iter().copied(), tiles).expect("seed is valid");
    let mut claimed: BTreeSet<Pos> = assembly.positions().collect();
    let mut collisions = Vec::new();
    let mut queues: Vec<Vec<(usize, Placement)>> = queues
        .into_iter()
        .map(|q| {
            q.into_iter()
                .filter(|(_, pl)| {
                    let cells: Vec<Pos> = sys.tile(pl.tile).footprint(pl.anchor).collect();
                    let clash: Vec<Pos> = cells
                        .iter()
                        .copied()
                        .filter(|c| claimed.contains(c))
                        .collect();
                    if clash.is_empty() {
                        claimed.extend(cells);
                        true
                    } else {
                        collisions.extend(clash);
                        false
                    }
                })
                .collect()
        })
        .collect();
    for q in &mut queues {
        q.reverse();
    }
    let mut sequence = AssemblySequence::new(assembly.clone());
    loop {
        let pick = queues
            .iter()
            .enumerate()
            .filter_map(|(qi, q)| q.last().map(|(i, pl)| (*i, qi, *pl)))
            .filter(|(_, _, pl)| attachable(sys, &assembly, pl))
            .min_by_key(|(i, qi, _)| (*i, *qi));
        let Some((_, qi, pl)) = pick else {
            break;
        };
        queues[qi].pop();
        assembly
            .insert(pl, tiles)
            .expect("attachable implies free cells");
        sequence.steps.push(pl);
    }
    let mut stuck: Vec<Placement> = queues.iter().flatten().map(|(_, pl)| *pl).collect();
    for pl in &stuck {
        assembly
            .insert(*pl, tiles)
            .expect("claimed cells are disjoint");
    }
    stuck.sort_by_key(|p| (p.anchor.y, p.anchor.x));
    collisions.sort_by_key(|p| (p.y, p.x));
    collisions.dedup();
    Splice {
        assembly,
        sequence,
        valid: stuck.is_empty() && collisions.is_empty(),
        collisions,
        stuck,
    }
}
