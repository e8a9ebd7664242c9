//! JSON documents for systems, assemblies, traces, representations,
//! enumeration results and simulation reports, plus SVG and ASCII drawings.
//!
//! Every document carries a `format` tag such as `tilesim-system/1`.
//! Serializing always yields the canonical form: two-space pretty JSON,
//! fields in declaration order, a trailing newline. Parsing a canonical
//! document and serializing it again gives back the same bytes.
//!
//! A system document looks like:
//!
//! ```json
//! {
//!   "format": "tilesim-system/1",
//!   "model": "gtam",
//!   "temperature": 1,
//!   "glues": { "names": ["a", "b"], "strengths": [1, 1] },
//!   "geometry_length": 4,
//!   "tiles": [
//!     { "kind": "geometric", "name": "S",
//!       "sides": [ { "glue": "a", "geometry": "1000" }, ... ] }
//!   ],
//!   "seed": [ { "tile": "S", "x": 0, "y": 0 } ]
//! }
//! ```
//!
//! Glues are referred to by name, `null` being the null glue. A diagonal
//! glue function is written as `strengths`, any other as a full `matrix`.
//! Geometry strings list positions from 1, so `"10110"` has bumps at
//! 1, 3 and 4. Square tiles list glues N, E, S, W; duples list six
//! exterior glues clockwise from the north edge of the west (horizontal)
//! or top (vertical) cell.

mod render;

use std::collections::HashMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::dynamics::{AssemblySequence, AttachmentError};
use crate::model::{
    Assembly, Face, Geometry, GlueFunction, GlueId, Model, ModelError, Orientation, Placement,
    TileKind, TileSystem, TileType,
};
use crate::simulation::{
    BlockPattern, BlockRepresentation, CheckMode, ClauseResult, Representation, SimulationReport,
    TileImage,
};

pub use render::{render_ascii, render_svg};

pub const SYSTEM_FORMAT: &str = "tilesim-system/1";
pub const ASSEMBLY_FORMAT: &str = "tilesim-assembly/1";
pub const TRACE_FORMAT: &str = "tilesim-trace/1";
pub const REP_FORMAT: &str = "tilesim-rep/1";
pub const ENUMERATION_FORMAT: &str = "tilesim-enumeration/1";
pub const REPORT_FORMAT: &str = "tilesim-report/1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("glue matrix is not symmetric at ({a}, {b})")]
    AsymmetricGlues { a: String, b: String },
    #[error("geometry length mismatch: {0}")]
    GeometryLength(String),
    #[error("seed is not stable at the system temperature")]
    UnstableSeed,
    #[error("invalid system: {0}")]
    Invalid(ModelError),
    #[error("trace does not replay: {0}")]
    Replay(#[from] AttachmentError),
    #[error("digest mismatch: document says {expected}, content hashes to {found}")]
    Digest { expected: String, found: String },
}

impl IoError {
    /// Short stable identifier, one per variant.
    pub fn code(&self) -> &'static str {
        match self {
            IoError::Schema { .. } => "schema",
            IoError::AsymmetricGlues { .. } => "asymmetric-glues",
            IoError::GeometryLength(_) => "geometry-length",
            IoError::UnstableSeed => "unstable-seed",
            IoError::Invalid(_) => "invalid-system",
            IoError::Replay(_) => "replay",
            IoError::Digest { .. } => "digest",
        }
    }

    fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        IoError::Schema {
            path: path.into(),
            message: message.into(),
        }
    }
}

impl From<ModelError> for IoError {
    fn from(e: ModelError) -> Self {
        match e {
            ModelError::AsymmetricGlues { a, b } => IoError::AsymmetricGlues { a, b },
            ModelError::GeometryLength { .. }
            | ModelError::GeometrySize { .. }
            | ModelError::MissingGeometryLength => IoError::GeometryLength(e.to_string()),
            ModelError::UnstableSeed => IoError::UnstableSeed,
            ModelError::GeometryString(_) => IoError::schema("geometry", e.to_string()),
            other => IoError::Invalid(other),
        }
    }
}

fn from_json<T: DeserializeOwned>(text: &str) -> Result<T, IoError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        IoError::schema(path, e.into_inner().to_string())
    })
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

fn check_format(found: &str, expected: &str) -> Result<(), IoError> {
    if found == expected {
        Ok(())
    } else {
        Err(IoError::schema(
            "format",
            format!("expected {expected:?}, found {found:?}"),
        ))
    }
}

// ---------------------------------------------------------------- systems

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum ModelDoc {
    Atam,
    Gtam,
    Datam,
}

impl From<Model> for ModelDoc {
    fn from(m: Model) -> Self {
        match m {
            Model::Atam => ModelDoc::Atam,
            Model::Gtam => ModelDoc::Gtam,
            Model::Datam => ModelDoc::Datam,
        }
    }
}

impl From<ModelDoc> for Model {
    fn from(m: ModelDoc) -> Self {
        match m {
            ModelDoc::Atam => Model::Atam,
            ModelDoc::Gtam => Model::Gtam,
            ModelDoc::Datam => Model::Datam,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GluesDoc {
    names: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    strengths: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FaceDoc {
    glue: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    geometry: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum OrientationDoc {
    Horizontal,
    Vertical,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum TileDoc {
    Square {
        name: String,
        glues: [Option<String>; 4],
    },
    Geometric {
        name: String,
        sides: [FaceDoc; 4],
    },
    Duple {
        name: String,
        orientation: OrientationDoc,
        glues: [Option<String>; 6],
    },
}

/// A tile type named at a cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacementDoc {
    pub tile: String,
    pub x: i64,
    pub y: i64,
}

/// Serialized form of a [`TileSystem`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDoc {
    format: String,
    model: ModelDoc,
    temperature: u32,
    glues: GluesDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    geometry_length: Option<usize>,
    tiles: Vec<TileDoc>,
    seed: Vec<PlacementDoc>,
}

fn glue_name(gf: &GlueFunction, id: GlueId) -> Option<String> {
    (id != 0).then(|| gf.name(id).to_string())
}

fn face_doc(gf: &GlueFunction, f: &Face) -> FaceDoc {
    FaceDoc {
        glue: glue_name(gf, f.glue),
        geometry: f.geometry.as_ref().map(Geometry::to_bit_string),
    }
}

fn placement_docs(sys: &TileSystem, placements: &[Placement]) -> Vec<PlacementDoc> {
    placements
        .iter()
        .map(|p| PlacementDoc {
            tile: sys.tile(p.tile).name.clone(),
            x: p.anchor.x,
            y: p.anchor.y,
        })
        .collect()
}

impl SystemDoc {
    pub fn from_system(sys: &TileSystem) -> Self {
        let gf = sys.glues();
        let names = gf.names()[1..].to_vec();
        let glues = if gf.is_diagonal() {
            GluesDoc {
                names,
                strengths: Some((1..gf.size()).map(|i| gf.strength(i, i)).collect()),
                matrix: None,
            }
        } else {
            GluesDoc {
                names,
                strengths: None,
                matrix: Some(gf.matrix()),
            }
        };
        let tiles = sys
            .tiles()
            .iter()
            .map(|t| {
                let name = t.name.clone();
                match &t.kind {
                    TileKind::Square { glues } => TileDoc::Square {
                        name,
                        glues: glues.map(|g| glue_name(gf, g)),
                    },
                    TileKind::Geometric { sides } => TileDoc::Geometric {
                        name,
                        sides: sides.clone().map(|f| face_doc(gf, &f)),
                    },
                    TileKind::Duple { orientation, glues } => TileDoc::Duple {
                        name,
                        orientation: match orientation {
                            Orientation::Horizontal => OrientationDoc::Horizontal,
                            Orientation::Vertical => OrientationDoc::Vertical,
                        },
                        glues: glues.map(|g| glue_name(gf, g)),
                    },
                }
            })
            .collect();
        SystemDoc {
            format: SYSTEM_FORMAT.to_string(),
            model: sys.model().into(),
            temperature: sys.temperature(),
            glues,
            geometry_length: sys.geometry_len(),
            tiles,
            seed: placement_docs(sys, &sys.seed().canonical()),
        }
    }

    pub fn to_system(&self) -> Result<TileSystem, IoError> {
        check_format(&self.format, SYSTEM_FORMAT)?;
        let g = &self.glues;
        let gf = match (&g.strengths, &g.matrix) {
            (Some(s), None) => GlueFunction::diagonal(g.names.clone(), s.clone())?,
            (None, Some(m)) => GlueFunction::new(g.names.clone(), m.clone())?,
            _ => {
                return Err(IoError::schema(
                    "glues",
                    "exactly one of `strengths` and `matrix` is required",
                ))
            }
        };
        let glue = |name: &Option<String>, path: String| -> Result<GlueId, IoError> {
            match name {
                None => Ok(0),
                Some(n) => gf
                    .lookup(n)
                    .filter(|&id| id != 0)
                    .ok_or_else(|| IoError::schema(path, format!("unknown glue {n:?}"))),
            }
        };
        let mut tiles = Vec::with_capacity(self.tiles.len());
        for (i, t) in self.tiles.iter().enumerate() {
            let tile = match t {
                TileDoc::Square { name, glues } => {
                    let mut ids = [0; 4];
                    for (k, n) in glues.iter().enumerate() {
                        ids[k] = glue(n, format!("tiles[{i}].glues[{k}]"))?;
                    }
                    TileType::square(name.clone(), ids)
                }
                TileDoc::Geometric { name, sides } => {
                    let mut faces = Vec::with_capacity(4);
                    for (k, f) in sides.iter().enumerate() {
                        let path = format!("tiles[{i}].sides[{k}]");
                        let geometry = match &f.geometry {
                            None => None,
                            Some(s) => Some(s.parse::<Geometry>().map_err(|e| {
                                IoError::schema(format!("{path}.geometry"), e.to_string())
                            })?),
                        };
                        faces.push(Face {
                            glue: glue(&f.glue, format!("{path}.glue"))?,
                            geometry,
                        });
                    }
                    let faces: [Face; 4] = faces.try_into().expect("four sides");
                    TileType::geometric(name.clone(), faces)
                }
                TileDoc::Duple {
                    name,
                    orientation,
                    glues,
                } => {
                    let mut ids = [0; 6];
                    for (k, n) in glues.iter().enumerate() {
                        ids[k] = glue(n, format!("tiles[{i}].glues[{k}]"))?;
                    }
                    let o = match orientation {
                        OrientationDoc::Horizontal => Orientation::Horizontal,
                        OrientationDoc::Vertical => Orientation::Vertical,
                    };
                    TileType::duple(name.clone(), o, ids)
                }
            };
            tiles.push(tile);
        }
        let by_name: HashMap<&str, usize> = tiles
            .iter()
            .enumerate()
            .map(|(i, t)| (t.name.as_str(), i))
            .collect();
        let seed = resolve_placements(&by_name, &self.seed, "seed")?;
        Ok(TileSystem::new(
            self.model.into(),
            gf,
            tiles,
            seed,
            self.temperature,
            self.geometry_length,
        )?)
    }
}

fn resolve_placements(
    by_name: &HashMap<&str, usize>,
    docs: &[PlacementDoc],
    field: &str,
) -> Result<Vec<Placement>, IoError> {
    docs.iter()
        .enumerate()
        .map(|(i, p)| {
            by_name
                .get(p.tile.as_str())
                .map(|&t| Placement::new(t, p.x, p.y))
                .ok_or_else(|| {
                    IoError::schema(
                        format!("{field}[{i}].tile"),
                        format!("unknown tile {:?}", p.tile),
                    )
                })
        })
        .collect()
}

fn name_index(sys: &TileSystem) -> HashMap<&str, usize> {
    sys.tiles()
        .iter()
        .enumerate()
        .map(|(i, t)| (t.name.as_str(), i))
        .collect()
}

pub fn parse_system(text: &str) -> Result<TileSystem, IoError> {
    from_json::<SystemDoc>(text)?.to_system()
}

pub fn serialize_system(sys: &TileSystem) -> String {
    to_json(&SystemDoc::from_system(sys))
}

// ---------------------------------------------------------------- digests

/// Hex SHA-256 of the canonical placement list, one `name x y` line per
/// placement. Depends on tile names, not on tile ids.
pub fn assembly_digest(sys: &TileSystem, a: &Assembly) -> String {
    let mut h = Sha256::new();
    for p in a.canonical() {
        h.update(format!("{} {} {}\n", sys.tile(p.tile).name, p.anchor.x, p.anchor.y).as_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn check_digest(expected: &str, found: String) -> Result<(), IoError> {
    if expected == found {
        Ok(())
    } else {
        Err(IoError::Digest {
            expected: expected.to_string(),
            found,
        })
    }
}

// ---------------------------------------------------------------- assemblies

/// An assembly together with the system it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssemblyDoc {
    format: String,
    system: SystemDoc,
    tiles: Vec<PlacementDoc>,
    digest: String,
}

pub fn serialize_assembly(sys: &TileSystem, a: &Assembly) -> String {
    to_json(&AssemblyDoc {
        format: ASSEMBLY_FORMAT.to_string(),
        system: SystemDoc::from_system(sys),
        tiles: placement_docs(sys, &a.canonical()),
        digest: assembly_digest(sys, a),
    })
}

pub fn parse_assembly(text: &str) -> Result<(TileSystem, Assembly), IoError> {
    let doc: AssemblyDoc = from_json(text)?;
    check_format(&doc.format, ASSEMBLY_FORMAT)?;
    let sys = doc.system.to_system()?;
    let placements = resolve_placements(&name_index(&sys), &doc.tiles, "tiles")?;
    let a = Assembly::from_placements(placements, sys.tiles())?;
    check_digest(&doc.digest, assembly_digest(&sys, &a))?;
    Ok((sys, a))
}

/// Either kind of drawable input: a bare system (drawn as its seed) or an
/// assembly document.
pub fn parse_system_or_assembly(text: &str) -> Result<(TileSystem, Assembly), IoError> {
    #[derive(Deserialize)]
    struct Probe {
        format: String,
    }
    let probe: Probe = from_json(text)?;
    if probe.format == ASSEMBLY_FORMAT {
        parse_assembly(text)
    } else {
        let sys = parse_system(text)?;
        let seed = sys.seed().clone();
        Ok((sys, seed))
    }
}

// ---------------------------------------------------------------- traces

/// A seed, the attachments made from it, and the digest of the result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDoc {
    format: String,
    seed: Vec<PlacementDoc>,
    steps: Vec<PlacementDoc>,
    digest: String,
}

impl TraceDoc {
    pub fn from_sequence(sys: &TileSystem, seq: &AssemblySequence) -> Result<Self, IoError> {
        let last = seq.final_assembly(sys)?;
        Ok(TraceDoc {
            format: TRACE_FORMAT.to_string(),
            seed: placement_docs(sys, &seq.seed.canonical()),
            steps: placement_docs(sys, &seq.steps),
            digest: assembly_digest(sys, &last),
        })
    }

    pub fn to_sequence(&self, sys: &TileSystem) -> Result<AssemblySequence, IoError> {
        check_format(&self.format, TRACE_FORMAT)?;
        let names = name_index(sys);
        let seed = resolve_placements(&names, &self.seed, "seed")?;
        Ok(AssemblySequence {
            seed: Assembly::from_placements(seed, sys.tiles())?,
            steps: resolve_placements(&names, &self.steps, "steps")?,
        })
    }

    /// Replays every step and checks the final digest.
    pub fn replay(&self, sys: &TileSystem) -> Result<Assembly, IoError> {
        let a = self.to_sequence(sys)?.final_assembly(sys)?;
        check_digest(&self.digest, assembly_digest(sys, &a))?;
        Ok(a)
    }

    pub fn digest(&self) -> &str {
        &self.digest
    }
}

pub fn serialize_trace(sys: &TileSystem, seq: &AssemblySequence) -> Result<String, IoError> {
    Ok(to_json(&TraceDoc::from_sequence(sys, seq)?))
}

pub fn parse_trace(text: &str) -> Result<TraceDoc, IoError> {
    let doc: TraceDoc = from_json(text)?;
    check_format(&doc.format, TRACE_FORMAT)?;
    Ok(doc)
}

// ---------------------------------------------------------------- representations

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ImageDoc {
    tile: String,
    /// Represented target tile; absent for tiles that map to empty space.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    image: Option<String>,
    /// Which cell of a duple image, 0 for the anchor cell.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    half: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockCellDoc {
    x: usize,
    y: usize,
    tile: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockEntryDoc {
    cells: Vec<BlockCellDoc>,
    image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepDoc {
    format: String,
    scale: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tiles: Option<Vec<ImageDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    blocks: Option<Vec<BlockEntryDoc>>,
}

/// Writes a representation from `sim` tiles to `target` tiles by name.
pub fn serialize_rep(rep: &Representation, sim: &TileSystem, target: &TileSystem) -> String {
    let tname = |t: usize| target.tile(t).name.clone();
    let doc = match rep {
        Representation::Tiles(images) => RepDoc {
            format: REP_FORMAT.to_string(),
            scale: 1,
            gap: None,
            tiles: Some(
                images
                    .iter()
                    .enumerate()
                    .map(|(i, img)| {
                        let (image, half) = match *img {
                            TileImage::Empty => (None, None),
                            TileImage::Tile(t) => (Some(tname(t)), None),
                            TileImage::Half { duple, half } => (Some(tname(duple)), Some(half)),
                        };
                        ImageDoc {
                            tile: sim.tile(i).name.clone(),
                            image,
                            half,
                        }
                    })
                    .collect(),
            ),
            blocks: None,
        },
        Representation::Blocks(b) => RepDoc {
            format: REP_FORMAT.to_string(),
            scale: b.m,
            gap: (b.n > 0).then_some(b.n),
            tiles: None,
            blocks: Some(
                b.entries()
                    .iter()
                    .map(|(pattern, t)| BlockEntryDoc {
                        cells: pattern
                            .iter()
                            .map(|(&(x, y), &s)| BlockCellDoc {
                                x,
                                y,
                                tile: sim.tile(s).name.clone(),
                            })
                            .collect(),
                        image: tname(*t),
                    })
                    .collect(),
            ),
        },
    };
    to_json(&doc)
}

pub fn parse_rep(
    text: &str,
    sim: &TileSystem,
    target: &TileSystem,
) -> Result<Representation, IoError> {
    let doc: RepDoc = from_json(text)?;
    check_format(&doc.format, REP_FORMAT)?;
    let sim_names = name_index(sim);
    let target_names = name_index(target);
    let lookup = |names: &HashMap<&str, usize>, n: &str, path: String| {
        names
            .get(n)
            .copied()
            .ok_or_else(|| IoError::schema(path, format!("unknown tile {n:?}")))
    };
    match (doc.scale, doc.tiles, doc.blocks) {
        (1, Some(images), None) => {
            let mut out = vec![TileImage::Empty; sim.tiles().len()];
            let mut listed = vec![false; sim.tiles().len()];
            for (i, d) in images.iter().enumerate() {
                let s = lookup(&sim_names, &d.tile, format!("tiles[{i}].tile"))?;
                listed[s] = true;
                out[s] = match (&d.image, d.half) {
                    (None, None) => TileImage::Empty,
                    (Some(n), None) => {
                        TileImage::Tile(lookup(&target_names, n, format!("tiles[{i}].image"))?)
                    }
                    (Some(n), Some(half)) => TileImage::Half {
                        duple: lookup(&target_names, n, format!("tiles[{i}].image"))?,
                        half,
                    },
                    (None, Some(_)) => {
                        return Err(IoError::schema(
                            format!("tiles[{i}].half"),
                            "half without an image",
                        ))
                    }
                };
            }
            if let Some(missing) = listed.iter().position(|&l| !l) {
                return Err(IoError::schema(
                    "tiles",
                    format!("no entry for simulator tile {:?}", sim.tile(missing).name),
                ));
            }
            Ok(Representation::Tiles(out))
        }
        (m, None, Some(blocks)) if m >= 1 => {
            let mut entries = Vec::with_capacity(blocks.len());
            for (i, e) in blocks.iter().enumerate() {
                let mut pattern = BlockPattern::new();
                for (k, c) in e.cells.iter().enumerate() {
                    let s = lookup(&sim_names, &c.tile, format!("blocks[{i}].cells[{k}].tile"))?;
                    pattern.insert((c.x, c.y), s);
                }
                entries.push((
                    pattern,
                    lookup(&target_names, &e.image, format!("blocks[{i}].image"))?,
                ));
            }
            let b = BlockRepresentation::new(m, doc.gap.unwrap_or(0), entries)
                .map_err(|e| IoError::schema("blocks", e.to_string()))?;
            Ok(Representation::Blocks(b))
        }
        _ => Err(IoError::schema(
            "scale",
            "scale 1 needs `tiles`; larger scales need `blocks`",
        )),
    }
}

// ---------------------------------------------------------------- enumeration

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnumerationDoc {
    pub format: String,
    pub max_tiles: usize,
    pub terminal_only: bool,
    pub truncated: bool,
    pub count: usize,
    pub assemblies: Vec<Vec<PlacementDoc>>,
}

/// Assemblies sorted by size, then canonical placement list.
pub fn serialize_enumeration(
    sys: &TileSystem,
    assemblies: &[Assembly],
    max_tiles: usize,
    terminal_only: bool,
    truncated: bool,
) -> String {
    let mut keyed: Vec<(usize, Vec<Placement>)> = assemblies
        .iter()
        .map(|a| (a.len(), a.canonical()))
        .collect();
    keyed.sort();
    to_json(&EnumerationDoc {
        format: ENUMERATION_FORMAT.to_string(),
        max_tiles,
        terminal_only,
        truncated,
        count: keyed.len(),
        assemblies: keyed.iter().map(|(_, c)| placement_docs(sys, c)).collect(),
    })
}

pub fn parse_enumeration(text: &str) -> Result<EnumerationDoc, IoError> {
    let doc: EnumerationDoc = from_json(text)?;
    check_format(&doc.format, ENUMERATION_FORMAT)?;
    Ok(doc)
}

// ---------------------------------------------------------------- reports

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    pub description: String,
    /// Simulator sequence, as a trace over the simulator system.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sim_trace: Option<TraceDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Vec<PlacementDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_trace: Option<TraceDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClauseDoc {
    pub clause: String,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub format: String,
    pub verdict: String,
    pub mode: String,
    pub bound: usize,
    pub bound_reached: bool,
    pub resource_limited: bool,
    pub sim_states: usize,
    pub target_states: usize,
    pub clauses: Vec<ClauseDoc>,
}

fn clause_doc(
    c: &ClauseResult,
    sim: &TileSystem,
    target: &TileSystem,
) -> Result<ClauseDoc, IoError> {
    let witness = match &c.witness {
        None => None,
        Some(w) => Some(WitnessDoc {
            description: w.description.clone(),
            sim_trace: w
                .sim_sequence
                .as_ref()
                .map(|s| TraceDoc::from_sequence(sim, s))
                .transpose()?,
            target: w
                .target
                .as_ref()
                .map(|a| placement_docs(target, &a.canonical())),
            target_trace: w
                .target_sequence
                .as_ref()
                .map(|s| TraceDoc::from_sequence(target, s))
                .transpose()?,
        }),
    };
    Ok(ClauseDoc {
        clause: c.clause.name().to_string(),
        verdict: c.verdict.to_string(),
        witness,
    })
}

pub fn report_doc(
    report: &SimulationReport,
    sim: &TileSystem,
    target: &TileSystem,
) -> Result<ReportDoc, IoError> {
    Ok(ReportDoc {
        format: REPORT_FORMAT.to_string(),
        verdict: report.verdict().to_string(),
        mode: match report.mode {
            CheckMode::Auto => "auto",
            CheckMode::Lazy => "lazy",
            CheckMode::Explicit => "explicit",
        }
        .to_string(),
        bound: report.bound,
        bound_reached: report.bound_reached,
        resource_limited: report.resource_limited,
        sim_states: report.sim_states,
        target_states: report.target_states,
        clauses: report
            .clauses
            .iter()
            .map(|c| clause_doc(c, sim, target))
            .collect::<Result<_, _>>()?,
    })
}

pub fn serialize_report(
    report: &SimulationReport,
    sim: &TileSystem,
    target: &TileSystem,
) -> Result<String, IoError> {
    Ok(to_json(&report_doc(report, sim, target)?))
}

pub fn parse_report(text: &str) -> Result<ReportDoc, IoError> {
    let doc: ReportDoc = from_json(text)?;
    check_format(&doc.format, REPORT_FORMAT)?;
    Ok(doc)
}

#[cfg(test)]
mod tests;
