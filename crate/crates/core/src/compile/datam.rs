//! Temperature-1 DaTAM into a two-glue GTAM system at scale 1.
//!
//! Geometries have length `4k + 2` with `k = max(glues, duple types)`:
//! a normal flag at position 1, the four domains `[α1 | β1 | β2 | α2]`,
//! and a duple flag at position `L`. Square-tile sides carry the normal
//! flag and duple centers carry the duple flag, so the two kinds never fit
//! together. Each duple is split into two half tiles whose shared side
//! uses the duple's own center geometry.

use std::collections::HashMap;

use crate::model::{
    Face, Geometry, GlueFunction, GlueId, Model, Placement, Side, TileKind, TileSystem, TileType,
    NULL_GLUE,
};

use super::{
    fix_seed_versions, versions_from_index, CompileError, Variant, VariantMap, Version, ALPHA_GLUE,
    BETA_GLUE,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatamGeometryTable {
    k: usize,
    alpha: Vec<Geometry>,
    beta: Vec<Geometry>,
    /// Center geometry per duple, in the order duples appear in the tile list.
    centers: Vec<Geometry>,
}

impl DatamGeometryTable {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn geometry_len(&self) -> usize {
        4 * self.k + 2
    }

    pub fn get(&self, glue: GlueId, v: Version) -> &Geometry {
        match v {
            Version::Alpha => &self.alpha[glue],
            Version::Beta => &self.beta[glue],
        }
    }

    /// Center geometry of the `d`-th duple type (0-based).
    pub fn center(&self, d: usize) -> &Geometry {
        &self.centers[d]
    }

    pub fn centers(&self) -> &[Geometry] {
        &self.centers
    }
}

pub fn build_datam_geometries(sys: &TileSystem) -> Result<DatamGeometryTable, CompileError> {
    if !sys.glues().is_diagonal() {
        return Err(CompileError::Unsupported(
            "duple compilation needs a diagonal glue function".into(),
        ));
    }
    let n = sys.glues().glue_count();
    let m = sys.tiles().iter().filter(|t| t.is_duple()).count();
    let k = n.max(m).max(1);
    let len = 4 * k + 2;
    let normal_flag = 1;
    let duple_flag = len;
    let alpha1 = |i: usize| 1 + i;
    let beta1 = |i: usize| k + 1 + i;
    let beta2 = |j: usize| 3 * k + 2 - j;
    let alpha2 = |j: usize| 4 * k + 2 - j;
    let binds = |i: usize, j: usize| j <= n && sys.glues().strength(i, j) > 0;

    let null = Geometry::from_positions(len, &[normal_flag])?;
    let mut alpha = vec![null.clone()];
    let mut beta = vec![null];
    for i in 1..=n {
        let mut a = Geometry::from_positions(len, &[normal_flag, alpha1(i)])?;
        let mut b = Geometry::from_positions(len, &[normal_flag, beta1(i)])?;
        for j in (1..=k).filter(|&j| !binds(i, j)) {
            a.set(alpha2(j), true);
            b.set(beta2(j), true);
        }
        alpha.push(a);
        beta.push(b);
    }
    let centers = (1..=m)
        .map(|d| {
            let mut g = Geometry::from_positions(len, &[duple_flag, alpha1(d)])?;
            for j in (1..=k).filter(|&j| j != d) {
                g.set(alpha2(j), true);
            }
            Ok(g)
        })
        .collect::<Result<Vec<_>, CompileError>>()?;
    Ok(DatamGeometryTable {
        k,
        alpha,
        beta,
        centers,
    })
}

/// Compiles a temperature-1 DaTAM system. Square tiles become up to 16
/// variants and each duple half up to 8; variants that coincide because
/// of null sides are kept once.
pub fn compile_datam_system(d: &TileSystem) -> Result<(TileSystem, VariantMap), CompileError> {
    if d.model() != Model::Datam {
        return Err(CompileError::Unsupported(format!(
            "expected a datam system, got {}",
            d.model()
        )));
    }
    if d.temperature() != 1 {
        return Err(CompileError::Unsupported(format!(
            "temperature {} (only 1 is supported)",
            d.temperature()
        )));
    }
    let table = build_datam_geometries(d)?;
    let glues = GlueFunction::diagonal(vec![ALPHA_GLUE.into(), BETA_GLUE.into()], vec![1, 1])?;
    let (ga, gb) = (1, 2);
    let face = |glue: GlueId, v: Version| Face {
        glue: if glue == NULL_GLUE {
            NULL_GLUE
        } else if v == Version::Alpha {
            ga
        } else {
            gb
        },
        geometry: Some(table.get(glue, v).clone()),
    };

    let mut tiles: Vec<TileType> = Vec::new();
    let mut map = VariantMap::default();
    // keyed per source tile so equal-glued tiles keep separate images
    let mut seen: HashMap<(usize, TileKind), usize> = HashMap::new();
    // (source, half, versions) -> compiled id
    let mut lookup: HashMap<(usize, Option<usize>, [Version; 4]), usize> = HashMap::new();
    let mut duple_index = 0;
    for (tid, tile) in d.tiles().iter().enumerate() {
        let mut emit = |name: String, sides: [Face; 4], half: Option<usize>, vs: [Version; 4]| {
            let t = TileType::geometric(name, sides);
            let id = *seen.entry((tid, t.kind.clone())).or_insert_with(|| {
                tiles.push(t);
                map.variants.push(Variant {
                    source: tid,
                    half,
                    versions: vs,
                });
                tiles.len() - 1
            });
            lookup.insert((tid, half, vs), id);
        };
        match &tile.kind {
            TileKind::Square { glues } => {
                for v in 0u8..16 {
                    let vs = versions_from_index(v);
                    let sides = Side::ALL.map(|s| face(glues[s.index()], vs[s.index()]));
                    emit(
                        format!("{}#{}", tile.name, label(&vs, None)),
                        sides,
                        None,
                        vs,
                    );
                }
            }
            TileKind::Duple { .. } => {
                let center = Face {
                    glue: ga,
                    geometry: Some(table.center(duple_index).clone()),
                };
                for (h, cell) in tile.cells().iter().enumerate() {
                    let inner = Side::ALL
                        .into_iter()
                        .find(|s| cell.sides[s.index()].is_none())
                        .expect("duple cell has an inner side");
                    for v in 0u8..16 {
                        let vs = versions_from_index(v);
                        if vs[inner.index()] == Version::Beta {
                            continue;
                        }
                        let sides = Side::ALL.map(|s| match &cell.sides[s.index()] {
                            Some(f) => face(f.glue, vs[s.index()]),
                            None => center.clone(),
                        });
                        emit(
                            format!("{}.{}#{}", tile.name, h, label(&vs, Some(inner))),
                            sides,
                            Some(h),
                            vs,
                        );
                    }
                }
                duple_index += 1;
            }
            TileKind::Geometric { .. } => {
                return Err(CompileError::Unsupported(format!(
                    "geometric tile {} in a datam system",
                    tile.name
                )))
            }
        }
    }

    // split seed duples into halves, then fix versions
    let seed = d.seed();
    let mut cells = Vec::new();
    let mut owner = HashMap::new();
    for pl in seed.placements() {
        for (h, cell) in d.tile(pl.tile).cells().iter().enumerate() {
            let p = pl.anchor.offset(cell.offset.0, cell.offset.1);
            cells.push(p);
            owner.insert(p, (pl.tile, h));
        }
    }
    let versions = fix_seed_versions(&cells, &|p, s, v| {
        let (t, h) = owner[&p];
        d.tile(t).cells()[h].sides[s.index()]
            .as_ref()
            .map(|f| table.get(f.glue, v).clone())
    })?;
    let mut compiled_seed: Vec<Placement> = cells
        .iter()
        .map(|p| {
            let (t, h) = owner[p];
            let half = d.tile(t).is_duple().then_some(h);
            Placement {
                tile: lookup[&(t, half, versions[p])],
                anchor: *p,
            }
        })
        .collect();
    compiled_seed.sort_by_key(|p| (p.anchor.y, p.anchor.x));

    let s = TileSystem::new(
        Model::Gtam,
        glues,
        tiles,
        compiled_seed,
        1,
        Some(table.geometry_len()),
    )?;
    Ok((s, map))
}

fn label(vs: &[Version; 4], inner: Option<Side>) -> String {
    Side::ALL
        .iter()
        .map(|s| {
            if Some(*s) == inner {
                'c'
            } else {
                vs[s.index()].letter()
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Orientation;

    fn system(glue_count: usize, tiles: Vec<TileType>) -> TileSystem {
        let gf = GlueFunction::diagonal(
            (1..=glue_count).map(|i| format!("g{i}")).collect(),
            vec![1; glue_count],
        )
        .unwrap();
        TileSystem::new(
            Model::Datam,
            gf,
            tiles,
            vec![Placement::new(0, 0, 0)],
            1,
            None,
        )
        .unwrap()
    }

    #[test]
    fn length_is_four_k_plus_two() {
        let sys = system(
            3,
            vec![
                TileType::square("s", [1, 0, 0, 0]),
                TileType::duple("d", Orientation::Horizontal, [0, 0, 0, 0, 0, 1]),
                TileType::duple("e", Orientation::Vertical, [0, 0, 0, 0, 0, 1]),
            ],
        );
        let t = build_datam_geometries(&sys).unwrap();
        assert_eq!((t.k(), t.geometry_len()), (3, 14));
    }

    #[test]
    fn flags_separate_normal_and_duple_geometries() {
        let sys = system(
            3,
            vec![
                TileType::square("s", [1, 0, 0, 0]),
                TileType::duple("d", Orientation::Horizontal, [0, 0, 0, 0, 0, 1]),
                TileType::duple("e", Orientation::Vertical, [0, 0, 0, 0, 0, 1]),
            ],
        );
        let t = build_datam_geometries(&sys).unwrap();
        for g in 0..=3 {
            for v in [Version::Alpha, Version::Beta] {
                assert_eq!(t.get(g, v).positions()[0], 1);
                for c in t.centers() {
                    assert!(!t.get(g, v).compatible_unchecked(c));
                }
            }
        }
        for (i, a) in t.centers().iter().enumerate() {
            for (j, b) in t.centers().iter().enumerate() {
                assert_eq!(a.compatible_unchecked(b), i == j);
            }
        }
    }

    #[test]
    fn centers_compatible_only_with_themselves_up_to_six() {
        for m in 1..=6 {
            let mut tiles = vec![TileType::square("s", [1, 0, 0, 0])];
            for d in 0..m {
                tiles.push(TileType::duple(
                    format!("d{d}"),
                    Orientation::Horizontal,
                    [1, 1, 1, 1, 1, 1],
                ));
            }
            let t = build_datam_geometries(&system(1, tiles)).unwrap();
            assert_eq!(t.centers().len(), m);
            for i in 0..m {
                for j in 0..m {
                    assert_eq!(t.center(i).compatible_unchecked(t.center(j)), i == j);
                }
            }
        }
    }

    #[test]
    fn two_squares_and_a_duple_give_48_tiles() {
        let sys = system(
            2,
            vec![
                TileType::square("s", [1, 2, 1, 2]),
                TileType::square("t", [2, 1, 2, 1]),
                TileType::duple("d", Orientation::Horizontal, [1, 2, 1, 2, 1, 2]),
            ],
        );
        let (s, map) = compile_datam_system(&sys).unwrap();
        assert_eq!(s.tiles().len(), 48);
        assert_eq!(map.len(), 48);
        assert_eq!(s.geometry_len(), Some(10));
        assert_eq!(s.glues().glue_count(), 2);
    }

    #[test]
    fn null_sides_collapse_variants() {
        let sys = system(1, vec![TileType::square("s", [1, 0, 0, 0])]);
        let (s, _) = compile_datam_system(&sys).unwrap();
        assert_eq!(s.tiles().len(), 2);
    }
}
