//! Seeded random systems for property checks.
//!
//! Distributions, all drawn from a ChaCha8 stream:
//!
//! - glue matrix: each diagonal entry is 1 with probability 1/2 and each
//!   off-diagonal pair is 1 with probability 1/4, mirrored;
//! - tile side: null with probability 1/2, otherwise a uniform glue;
//! - the seed is tile 0 alone at the origin.
//!
//! The corpus functions then keep a draw only if the system grows at all
//! and has at most a given number of producible assemblies up to the
//! bound, so that exhaustive checks stay affordable.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::dynamics::explore;
use crate::model::{GlueFunction, GlueId, Model, Orientation, Placement, TileSystem, TileType};

pub use rand::SeedableRng;

/// Generator seeded from a single integer.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("g{i}")).collect()
}

/// Symmetric `n`×`n` strength matrix with entries in `0..=max_strength`,
/// each zero with probability 1/2.
pub fn random_glue_function(rng: &mut ChaCha8Rng, n: usize, max_strength: u32) -> GlueFunction {
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i..n {
            let s = if rng.gen_bool(0.5) {
                rng.gen_range(1..=max_strength)
            } else {
                0
            };
            m[i][j] = s;
            m[j][i] = s;
        }
    }
    GlueFunction::new(names(n), m).expect("symmetric by construction")
}

fn side(rng: &mut ChaCha8Rng, n: usize) -> GlueId {
    if rng.gen_bool(0.5) {
        0
    } else {
        rng.gen_range(1..=n)
    }
}

/// Temperature-1 aTAM system with 1 to `max_glues` glues and 2 to
/// `max_tiles` square tiles.
pub fn random_atam_system(rng: &mut ChaCha8Rng, max_glues: usize, max_tiles: usize) -> TileSystem {
    let n = rng.gen_range(1..=max_glues);
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        m[i][i] = u32::from(rng.gen_bool(0.5));
        for j in 0..i {
            let s = u32::from(rng.gen_bool(0.25));
            m[i][j] = s;
            m[j][i] = s;
        }
    }
    let gf = GlueFunction::new(names(n), m).expect("symmetric by construction");
    let count = rng.gen_range(2..=max_tiles.max(2));
    let tiles = (0..count)
        .map(|i| TileType::square(format!("t{i}"), [(); 4].map(|_| side(rng, n))))
        .collect();
    TileSystem::new(
        Model::Atam,
        gf,
        tiles,
        vec![Placement::new(0, 0, 0)],
        1,
        None,
    )
    .expect("single-tile seed is stable")
}

/// Temperature-1 DaTAM system with a diagonal glue function of 1 to
/// `max_glues` glues, 1 to `max_squares` squares and 0 to `max_duples`
/// duples of random orientation. Tile 0 is a square.
pub fn random_datam_system(
    rng: &mut ChaCha8Rng,
    max_glues: usize,
    max_duples: usize,
    max_squares: usize,
) -> TileSystem {
    let n = rng.gen_range(1..=max_glues);
    let gf = GlueFunction::diagonal(names(n), vec![1; n]).expect("distinct names");
    let squares = rng.gen_range(1..=max_squares.max(1));
    let duples = rng.gen_range(0..=max_duples);
    let mut tiles: Vec<TileType> = (0..squares)
        .map(|i| TileType::square(format!("s{i}"), [(); 4].map(|_| side(rng, n))))
        .collect();
    for i in 0..duples {
        let o = if rng.gen_bool(0.5) {
            Orientation::Horizontal
        } else {
            Orientation::Vertical
        };
        tiles.push(TileType::duple(
            format!("d{i}"),
            o,
            [(); 6].map(|_| side(rng, n)),
        ));
    }
    TileSystem::new(
        Model::Datam,
        gf,
        tiles,
        vec![Placement::new(0, 0, 0)],
        1,
        None,
    )
    .expect("single-tile seed is stable")
}

/// Keeps drawing until `count` systems pass the size filter: more than
/// one and at most `max_states` producible assemblies of up to `bound`
/// tiles.
fn corpus(
    seed: u64,
    count: usize,
    bound: usize,
    max_states: usize,
    mut draw: impl FnMut(&mut ChaCha8Rng) -> TileSystem,
) -> Vec<TileSystem> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let sys = draw(&mut r);
        if explore(&sys, bound, max_states + 1).is_ok_and(|g| g.len() > 1) {
            out.push(sys);
        }
    }
    out
}

/// aTAM systems with up to 5 glues and 6 tiles.
pub fn atam_corpus(seed: u64, count: usize, bound: usize, max_states: usize) -> Vec<TileSystem> {
    corpus(seed, count, bound, max_states, |r| {
        random_atam_system(r, 5, 6)
    })
}

/// DaTAM systems with up to 4 glues, 2 duples and 4 squares.
pub fn datam_corpus(seed: u64, count: usize, bound: usize, max_states: usize) -> Vec<TileSystem> {
    corpus(seed, count, bound, max_states, |r| {
        random_datam_system(r, 4, 2, 4)
    })
}
