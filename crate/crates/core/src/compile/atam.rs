//! Temperature-1 aTAM with an arbitrary symmetric glue function into a
//! two-glue GTAM system at scale 1.
//!
//! Each glue `i` gets two geometries of length `4n`, laid out as four
//! domains `[α1 | β1 | β2 | α2]` of width `n`. The identity domains (α1,
//! β1) are numbered left to right, the incompatibility domains (α2, β2)
//! right to left, so a bump at α1 location `i` faces α2 location `i` of the
//! neighbouring side.

use crate::model::{
    Assembly, Face, Geometry, GlueFunction, GlueId, Model, Placement, Side, TileKind, TileSystem,
    TileType, NULL_GLUE,
};

use super::{
    fix_seed_versions, versions_from_index, versions_label, CompileError, Variant, VariantMap,
    Version, ALPHA_GLUE, BETA_GLUE,
};

/// Geometry pair per glue id, including the null glue at id 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueGeometryTable {
    n: usize,
    alpha: Vec<Geometry>,
    beta: Vec<Geometry>,
}

impl GlueGeometryTable {
    /// Number of non-null glues; each domain has this width.
    pub fn glue_count(&self) -> usize {
        self.n
    }

    pub fn geometry_len(&self) -> usize {
        4 * self.n
    }

    pub fn alpha(&self, glue: GlueId) -> &Geometry {
        &self.alpha[glue]
    }

    pub fn beta(&self, glue: GlueId) -> &Geometry {
        &self.beta[glue]
    }

    pub fn get(&self, glue: GlueId, v: Version) -> &Geometry {
        match v {
            Version::Alpha => self.alpha(glue),
            Version::Beta => self.beta(glue),
        }
    }

    /// The four domains of a geometry as bit strings, each read left to right.
    pub fn domains(&self, g: &Geometry) -> [String; 4] {
        let n = self.n;
        [
            g.slice_string(1, n),
            g.slice_string(n + 1, 2 * n),
            g.slice_string(2 * n + 1, 3 * n),
            g.slice_string(3 * n + 1, 4 * n),
        ]
    }
}

fn alpha1(_n: usize, i: usize) -> usize {
    i
}

fn beta1(n: usize, i: usize) -> usize {
    n + i
}

fn beta2(n: usize, j: usize) -> usize {
    3 * n + 1 - j
}

fn alpha2(n: usize, j: usize) -> usize {
    4 * n + 1 - j
}

pub fn build_glue_geometries(gf: &GlueFunction) -> GlueGeometryTable {
    let n = gf.glue_count();
    let len = 4 * n;
    let mut alpha = Vec::with_capacity(n + 1);
    let mut beta = Vec::with_capacity(n + 1);

    // null glue: no identity bump, full incompatibility domain
    let mut null_a = Geometry::flat(len);
    let mut null_b = Geometry::flat(len);
    for j in 1..=n {
        null_a.set(alpha2(n, j), true);
        null_b.set(beta2(n, j), true);
    }
    alpha.push(null_a);
    beta.push(null_b);

    for i in 1..=n {
        let mut a = Geometry::flat(len);
        let mut b = Geometry::flat(len);
        a.set(alpha1(n, i), true);
        b.set(beta1(n, i), true);
        for j in 1..=n {
            if gf.strength(i, j) == 0 {
                a.set(alpha2(n, j), true);
                b.set(beta2(n, j), true);
            }
        }
        alpha.push(a);
        beta.push(b);
    }
    GlueGeometryTable { n, alpha, beta }
}

fn compiled_face(
    glue: GlueId,
    v: Version,
    table: &GlueGeometryTable,
    g_alpha: GlueId,
    g_beta: GlueId,
) -> Face {
    let label = if glue == NULL_GLUE {
        NULL_GLUE
    } else {
        match v {
            Version::Alpha => g_alpha,
            Version::Beta => g_beta,
        }
    };
    Face {
        glue: label,
        geometry: Some(table.get(glue, v).clone()),
    }
}

/// The 16 geometric versions of a square tile, indexed by version vector.
pub fn compile_tile_variants(
    t: &TileType,
    table: &GlueGeometryTable,
    g_alpha: GlueId,
    g_beta: GlueId,
) -> Result<Vec<TileType>, CompileError> {
    let TileKind::Square { glues } = t.kind else {
        return Err(CompileError::Unsupported(format!(
            "tile {} is not a square tile",
            t.name
        )));
    };
    Ok((0u8..16)
        .map(|v| {
            let vs = versions_from_index(v);
            let sides = Side::ALL
                .map(|s| compiled_face(glues[s.index()], vs[s.index()], table, g_alpha, g_beta));
            TileType::geometric(format!("{}#{}", t.name, versions_label(&vs)), sides)
        })
        .collect())
}

/// Seed placements in the compiled system: one variant per source cell,
/// chosen so that no abutting geometries collide.
pub fn compile_seed(
    seed: &Assembly,
    source: &TileSystem,
    table: &GlueGeometryTable,
) -> Result<Vec<Placement>, CompileError> {
    let cells: Vec<_> = seed.positions().collect();
    let glue_of = |p, s: Side| -> GlueId {
        let tile = source.tile(seed.tile_at(p).expect("seed cell"));
        match tile.kind {
            TileKind::Square { glues } => glues[s.index()],
            _ => NULL_GLUE,
        }
    };
    let versions = fix_seed_versions(&cells, &|p, s, v| Some(table.get(glue_of(p, s), v).clone()))?;
    let mut out: Vec<Placement> = cells
        .iter()
        .map(|p| {
            let src = seed.tile_at(*p).expect("seed cell");
            let vs = versions[p];
            let idx: usize = (0..4)
                .filter(|&s| vs[s] == Version::Beta)
                .map(|s| 1 << s)
                .sum();
            Placement {
                tile: src * 16 + idx,
                anchor: *p,
            }
        })
        .collect();
    out.sort_by_key(|p| (p.anchor.y, p.anchor.x));
    Ok(out)
}

/// Compiles a temperature-1 aTAM system. Compiled tile `16·t + v` is
/// version `v` of source tile `t`.
pub fn compile_atam_system(t: &TileSystem) -> Result<(TileSystem, VariantMap), CompileError> {
    if t.model() != Model::Atam {
        return Err(CompileError::Unsupported(format!(
            "expected an atam system, got {}",
            t.model()
        )));
    }
    if t.temperature() != 1 {
        return Err(CompileError::Unsupported(format!(
            "temperature {} (only 1 is supported)",
            t.temperature()
        )));
    }
    if t.glues().glue_count() == 0 {
        return Err(CompileError::Unsupported("system has no glues".into()));
    }
    let table = build_glue_geometries(t.glues());
    let glues = GlueFunction::diagonal(vec![ALPHA_GLUE.into(), BETA_GLUE.into()], vec![1, 1])?;
    let (ga, gb) = (1, 2);
    let mut tiles = Vec::with_capacity(16 * t.tiles().len());
    let mut map = VariantMap::default();
    for (tid, tile) in t.tiles().iter().enumerate() {
        for (v, compiled) in compile_tile_variants(tile, &table, ga, gb)?
            .into_iter()
            .enumerate()
        {
            tiles.push(compiled);
            map.variants.push(Variant {
                source: tid,
                half: None,
                versions: versions_from_index(v as u8),
            });
        }
    }
    let seed = compile_seed(t.seed(), t, &table)?;
    let u = TileSystem::new(
        Model::Gtam,
        glues,
        tiles,
        seed,
        1,
        Some(table.geometry_len()),
    )?;
    Ok((u, map))
}
