//! Shared domain types: glues, geometries, tiles, assemblies and systems.

mod assembly;
mod geometry;
mod glue;
mod graph;
mod system;
mod tile;

use thiserror::Error;

pub use assembly::{Assembly, InstanceId, Placement, TileId};
pub use geometry::Geometry;
pub use glue::{GlueFunction, GlueId, NULL_GLUE};
pub use graph::BindingGraph;
pub use system::{Binder, Model, TileSystem};
pub use tile::{CellFaces, Face, Orientation, Pos, Side, TileKind, TileType};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("glue id {id} out of range for a table of {size} glues")]
    InvalidGlue { id: usize, size: usize },
    #[error("glue matrix must be {expected}x{expected}")]
    GlueMatrixShape { expected: usize },
    #[error("glue matrix is not symmetric at ({a}, {b})")]
    AsymmetricGlues { a: String, b: String },
    #[error("duplicate or reserved name {0:?}")]
    DuplicateName(String),
    #[error("geometry lengths differ: {left} vs {right}")]
    GeometrySize { left: usize, right: usize },
    #[error("geometry position {position} outside 1..={len}")]
    GeometryPosition { position: usize, len: usize },
    #[error("geometry strings may only contain 0 and 1, found {0:?}")]
    GeometryString(char),
    #[error("tile {tile} has a geometry of length {found}, expected {expected}")]
    GeometryLength {
        tile: String,
        expected: usize,
        found: usize,
    },
    #[error("geometric systems need a geometry length")]
    MissingGeometryLength,
    #[error("{0} systems require a diagonal glue function")]
    NonDiagonal(Model),
    #[error("tile {tile} is not allowed in a {model} system")]
    TileKind { tile: String, model: Model },
    #[error("unknown tile id {0}")]
    UnknownTile(usize),
    #[error("cell {0} is already occupied")]
    Occupied(Pos),
    #[error("temperature must be positive")]
    Temperature,
    #[error("seed is empty")]
    EmptySeed,
    #[error("seed is not stable at the system temperature")]
    UnstableSeed,
}
