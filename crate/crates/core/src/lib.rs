//! Tile self-assembly models and tools.
//!
//! Three models share one set of types: the abstract Tile Assembly Model
//! with flexible glue functions, its geometric variant where edge bumps can
//! block binding, and the dupled variant with 2×1 tiles. On top of these sit
//! two compilers into the geometric model, a bounded checker for
//! simulation between systems, window-movie analysis, and a gallery of
//! example systems.

pub mod compile;
pub mod dynamics;
pub mod gallery;
pub mod io;
pub mod model;
pub mod random;
pub mod simulation;
pub mod windows;
