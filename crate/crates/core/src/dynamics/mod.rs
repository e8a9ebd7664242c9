//! Attachment rules, frontiers, assembly sequences and bounded enumeration.

mod enumerate;

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::model::{Assembly, Placement, Pos, Side, TileSystem};

pub use enumerate::{
    enumerate_producible, enumerate_terminal, explore, is_directed, is_sass, is_zigzag,
    BoundedVerdict, EnumerationError, StateGraph, Terminals, DEFAULT_STATE_LIMIT,
};

/// A tile type placed at an anchor; for duples the orientation comes from the type.
pub type Attachment = Placement;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AttachmentError {
    #[error("tile {tile} cannot attach at {anchor}")]
    Illegal { tile: usize, anchor: Pos },
    #[error("step {step} of the sequence is illegal: tile {tile} at {anchor}")]
    IllegalStep {
        step: usize,
        tile: usize,
        anchor: Pos,
    },
}

/// Whether `att` can stably attach to `a`.
pub fn attachable(sys: &TileSystem, a: &Assembly, att: &Attachment) -> bool {
    attachment_strength(sys, a, att).is_some_and(|s| s >= sys.temperature())
}

/// Total bond strength gained by `att`, or `None` when a cell is taken or
/// an abutting geometry collides.
pub fn attachment_strength(sys: &TileSystem, a: &Assembly, att: &Attachment) -> Option<u32> {
    let tile = sys.tiles().get(att.tile)?;
    for p in tile.footprint(att.anchor) {
        if a.is_occupied(p) {
            return None;
        }
    }
    let mut total = 0;
    for cell in tile.cells() {
        let p = att.anchor.offset(cell.offset.0, cell.offset.1);
        for side in Side::ALL {
            let Some(face) = &cell.sides[side.index()] else {
                continue;
            };
            let q = p.step(side);
            let Some(other) = sys.face_at(a, q, side.opposite()) else {
                continue;
            };
            total += sys.interaction(face, other)?;
        }
    }
    Some(total)
}

/// All legal attachments to `a`, sorted by (y, x, tile id).
pub fn frontier(sys: &TileSystem, a: &Assembly) -> Vec<Attachment> {
    let mut candidates = BTreeSet::new();
    for (p, _) in a.cells() {
        for side in Side::ALL {
            let q = p.step(side);
            if a.is_occupied(q) {
                continue;
            }
            let Some(face) = sys.face_at(a, p, side) else {
                continue;
            };
            for b in sys.binders(face.glue, side.opposite()) {
                let off = sys.tile(b.tile).cells()[b.cell].offset;
                let anchor = q.offset(-off.0, -off.1);
                candidates.insert(lex_key(&Placement {
                    tile: b.tile,
                    anchor,
                }));
            }
        }
    }
    candidates
        .into_iter()
        .map(|(y, x, tile)| Placement {
            tile,
            anchor: Pos::new(x, y),
        })
        .filter(|att| attachable(sys, a, att))
        .collect()
}

/// Distinct anchor cells of the frontier.
pub fn frontier_locations(sys: &TileSystem, a: &Assembly) -> BTreeSet<Pos> {
    frontier(sys, a).into_iter().map(|f| f.anchor).collect()
}

fn lex_key(p: &Placement) -> (i64, i64, usize) {
    (p.anchor.y, p.anchor.x, p.tile)
}

/// Checked attachment producing a new assembly.
pub fn attach(
    sys: &TileSystem,
    a: &Assembly,
    att: &Attachment,
) -> Result<Assembly, AttachmentError> {
    if !attachable(sys, a, att) {
        return Err(AttachmentError::Illegal {
            tile: att.tile,
            anchor: att.anchor,
        });
    }
    Ok(a.with(*att, sys.tiles())
        .expect("attachable implies free cells"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Policy {
    /// Smallest (y, x, tile id) first.
    Lex,
    /// Lowest y first; among equal y, the attachment that has waited longest.
    LowestYFirst,
    /// Uniform choice driven by a seeded ChaCha generator.
    Random(u64),
}

/// A seed and the attachments applied to it in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssemblySequence {
    pub seed: Assembly,
    pub steps: Vec<Attachment>,
}

impl AssemblySequence {
    pub fn new(seed: Assembly) -> Self {
        AssemblySequence {
            seed,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays every step, checking legality.
    pub fn final_assembly(&self, sys: &TileSystem) -> Result<Assembly, AttachmentError> {
        let mut a = self.seed.clone();
        for (i, s) in self.steps.iter().enumerate() {
            if !attachable(sys, &a, s) {
                return Err(AttachmentError::IllegalStep {
                    step: i,
                    tile: s.tile,
                    anchor: s.anchor,
                });
            }
            a.insert(*s, sys.tiles())
                .expect("attachable implies free cells");
        }
        Ok(a)
    }

    /// Assembly after each prefix, starting with the seed.
    pub fn prefixes(&self, sys: &TileSystem) -> Result<Vec<Assembly>, AttachmentError> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut a = self.seed.clone();
        out.push(a.clone());
        for (i, s) in self.steps.iter().enumerate() {
            a = attach(sys, &a, s).map_err(|_| AttachmentError::IllegalStep {
                step: i,
                tile: s.tile,
                anchor: s.anchor,
            })?;
            out.push(a.clone());
        }
        Ok(out)
    }
}

/// Grows from the seed following `policy` until terminal or `max_tiles` tiles.
pub fn run(sys: &TileSystem, policy: Policy, max_tiles: usize) -> AssemblySequence {
    let mut seq = AssemblySequence::new(sys.seed().clone());
    let mut a = sys.seed().clone();
    let mut rng = match policy {
        Policy::Random(s) => Some(ChaCha8Rng::seed_from_u64(s)),
        _ => None,
    };
    let mut first_seen: HashMap<Attachment, usize> = HashMap::new();
    while a.len() < max_tiles {
        let f = frontier(sys, &a);
        if f.is_empty() {
            break;
        }
        let pick = match policy {
            Policy::Lex => f[0],
            Policy::Random(_) => {
                let r = rng.as_mut().expect("random policy has a generator");
                f[r.gen_range(0..f.len())]
            }
            Policy::LowestYFirst => {
                let step = seq.steps.len();
                for att in &f {
                    first_seen.entry(*att).or_insert(step);
                }
                let min_y = f[0].anchor.y;
                *f.iter()
                    .filter(|att| att.anchor.y == min_y)
                    .min_by_key(|att| (first_seen[att], lex_key(att)))
                    .expect("frontier is non-empty")
            }
        };
        a.insert(pick, sys.tiles())
            .expect("frontier entries are legal");
        seq.steps.push(pick);
    }
    seq
}
