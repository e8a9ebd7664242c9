//! End-to-end acceptance checks. Each test prints one `[PASS]`/`[FAIL]`
//! line to stderr, bypassing output capture, then fails if its check did.

use std::collections::{BTreeSet, HashSet};
use std::fs;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use tilesim::compile::{
    build_glue_geometries, compile_atam_system, compile_datam_system, VariantMap, Version,
};
use tilesim::dynamics::{
    attachable, enumerate_terminal, explore, frontier, is_directed, run, AssemblySequence, Policy,
};
use tilesim::gallery::{self, GalleryParams};
use tilesim::io;
use tilesim::model::{
    Assembly, Face, Geometry, Placement, Pos, Side, TileId, TileKind, TileSystem, TileType,
};
use tilesim::random::{atam_corpus, datam_corpus, random_glue_function, rng};
use tilesim::simulation::{
    check_equivalent_productions, check_follows, check_models, check_simulation, rep_star,
    restrict_tiles, CheckOptions, Clause, Representation, SimulationReport, TileImage, Verdict,
};
use tilesim::windows::{
    find_repeat, pumping_bound, splice_pump_down, splice_pump_up, vertical_windows, MovieKind,
    PumpingBound,
};

const CORPUS_SIZE: usize = 100;
const CORPUS_BOUND: usize = 8;
const CORPUS_MAX_STATES: usize = 5000;

/// Runs `check`, prints its verdict line, and re-raises any failure.
fn criterion(name: &str, budget: Duration, check: impl FnOnce() -> String) {
    let start = Instant::now();
    let result = panic::catch_unwind(AssertUnwindSafe(check));
    let elapsed = start.elapsed();
    let (ok, detail) = match &result {
        Ok(d) if elapsed <= budget => (true, d.clone()),
        Ok(d) => (false, format!("{d}; over the {budget:?} budget")),
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            (false, msg)
        }
    };
    let line = format!(
        "[{}] {name}: {detail} ({:.2}s)\n",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    let _ = std::io::stderr().lock().write_all(line.as_bytes());
    if let Err(e) = result {
        panic::resume_unwind(e);
    }
    assert!(ok, "{name}: {detail}");
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn replays(sys: &TileSystem, seq: &AssemblySequence) -> bool {
    let Ok(doc) = io::TraceDoc::from_sequence(sys, seq) else {
        return false;
    };
    let text = serde_json::to_string(&doc).unwrap();
    io::parse_trace(&text).and_then(|d| d.replay(sys)).is_ok()
}

// ------------------------------------------------------------------

#[test]
fn geometry_encoding_fidelity() {
    criterion("geometry encoding fidelity", secs(1), || {
        let sys = gallery::flexible_glue_demo();
        let t = build_glue_geometries(sys.glues());
        let d = |g: &Geometry| t.domains(g).map(|s| s.to_string());
        assert_eq!(d(t.alpha(1)), ["1000", "0000", "0000", "0101"]);
        assert_eq!(d(t.alpha(2)), ["0100", "0000", "0000", "1100"]);
        assert_eq!(d(t.beta(1)), ["0000", "1000", "0101", "0000"]);
        assert_eq!(d(t.beta(2)), ["0000", "0100", "1100", "0000"]);
        "four geometries bit-exact".into()
    })
}

#[test]
fn compatibility_matches_glue_strength() {
    criterion("compatibility iff glue strength", secs(10), || {
        let mut r = rng(11);
        let mut pairs = 0;
        for k in 0..200 {
            let n = 1 + k % 6;
            let gf = random_glue_function(&mut r, n, 3);
            let t = build_glue_geometries(&gf);
            for i in 1..=n {
                for j in 1..=n {
                    let binds = gf.strength(i, j) >= 1;
                    assert_eq!(t.alpha(i).compatible(t.alpha(j)).unwrap(), binds);
                    assert_eq!(t.beta(i).compatible(t.beta(j)).unwrap(), binds);
                    assert!(t.alpha(i).compatible(t.beta(j)).unwrap());
                    assert!(t.beta(i).compatible(t.alpha(j)).unwrap());
                    pairs += 1;
                }
            }
        }
        format!("200 matrices, {pairs} glue pairs")
    })
}

#[test]
fn atam_compiler_simulates_random_systems() {
    criterion("aTAM compiler on random corpus", secs(300), || {
        let corpus = atam_corpus(2024, CORPUS_SIZE, CORPUS_BOUND, CORPUS_MAX_STATES);
        for (i, src) in corpus.iter().enumerate() {
            let (sim, map) = compile_atam_system(src).unwrap();
            let gf = sim.glues();
            assert_eq!(gf.glue_count(), 2, "system {i}");
            assert!((1..=2).all(|g| gf.strength(g, g) > 0), "system {i}");
            assert_eq!(
                sim.geometry_len(),
                Some(4 * src.glues().glue_count()),
                "system {i}"
            );
            let rep = Representation::from_variants(&map);
            let report =
                check_simulation(&sim, src, &rep, CheckOptions::new(CORPUS_BOUND)).unwrap();
            assert_eq!(
                report.verdict(),
                Verdict::Pass,
                "system {i}: {:?}",
                failing(&report)
            );
        }
        format!("{CORPUS_SIZE} systems pass every clause at {CORPUS_BOUND} tiles")
    })
}

fn failing(r: &SimulationReport) -> Vec<(Clause, String)> {
    r.clauses
        .iter()
        .filter(|c| c.verdict != Verdict::Pass)
        .map(|c| {
            (
                c.clause,
                c.witness
                    .as_ref()
                    .map(|w| w.description.clone())
                    .unwrap_or_default(),
            )
        })
        .collect()
}

#[test]
fn single_glue_mismatch_square() {
    criterion("mismatch square under compilation", secs(5), || {
        let src = gallery::mismatch_square_system();
        let source = enumerate_terminal(&src, 4).unwrap();
        assert_eq!(source.assemblies.len(), 2);
        for a in &source.assemblies {
            assert_eq!(a.bounds(), Some((Pos::new(0, 0), Pos::new(1, 1))));
        }
        let (sim, map) = compile_atam_system(&src).unwrap();
        let rep = Representation::from_variants(&map);
        let image = enumerate_terminal(&sim, 4).unwrap();
        let images: Vec<_> = image
            .assemblies
            .iter()
            .map(|a| rep_star(&rep, a, src.tiles()).unwrap().canonical())
            .collect();
        let wanted: BTreeSet<_> = source.assemblies.iter().map(|a| a.canonical()).collect();
        let distinct: BTreeSet<_> = images.iter().cloned().collect();
        assert_eq!(distinct, wanted);

        // the tiles at (1, 1) meet one neighbor on mismatched glues, α against β
        let corner = Pos::new(1, 1);
        for a in &image.assemblies {
            let mismatched: Vec<(Version, Version)> = [Side::S, Side::W]
                .into_iter()
                .filter_map(|side| {
                    let q = corner.step(side);
                    let f = sim.face_at(a, corner, side).unwrap();
                    let g = sim.face_at(a, q, side.opposite()).unwrap();
                    let (sf, sg) = (
                        source_glue(&src, &map, a, corner, side),
                        source_glue(&src, &map, a, q, side.opposite()),
                    );
                    assert!(
                        sim.interaction(f, g).is_some(),
                        "abutting geometries collide"
                    );
                    (src.glues().strength(sf, sg) == 0).then(|| {
                        (
                            map.get(a.tile_at(corner).unwrap()).versions[side.index()],
                            map.get(a.tile_at(q).unwrap()).versions[side.opposite().index()],
                        )
                    })
                })
                .collect();
            assert_eq!(mismatched.len(), 1);
            assert_ne!(mismatched[0].0, mismatched[0].1);
        }
        format!(
            "2 source terminals, {} compiled terminals mapping onto them",
            image.assemblies.len()
        )
    })
}

fn source_glue(src: &TileSystem, map: &VariantMap, a: &Assembly, p: Pos, side: Side) -> usize {
    let t = map.get(a.tile_at(p).unwrap()).source;
    match &src.tile(t).kind {
        TileKind::Square { glues } => glues[side.index()],
        _ => unreachable!("square sources only"),
    }
}

// ------------------------------------------------------------------ duples

/// Cell of the other half of a duple half sitting at `p`.
fn partner_cell(src: &TileSystem, duple: TileId, half: usize, p: Pos) -> Pos {
    let cells = src.tile(duple).cells();
    let (a, b) = (cells[half].offset, cells[1 - half].offset);
    p.offset(b.0 - a.0, b.1 - a.1)
}

fn side_towards(p: Pos, q: Pos) -> Side {
    Side::ALL.into_iter().find(|s| p.step(*s) == q).unwrap()
}

fn face(t: &TileType, side: Side) -> &Face {
    t.cells()[0].sides[side.index()].as_ref().unwrap()
}

/// Tile-type level: a duple half's center face fits only the matching half
/// of the same duple, and never a square tile.
fn center_faces_pair_up(src: &TileSystem, sim: &TileSystem, map: &VariantMap) -> usize {
    let mut checked = 0;
    for (v, vt) in sim.tiles().iter().enumerate() {
        let var = map.get(v);
        let Some(h) = var.half else { continue };
        let here = Pos::new(0, 0);
        let there = partner_cell(src, var.source, h, here);
        let side = side_towards(here, there);
        for (u, ut) in sim.tiles().iter().enumerate() {
            let other = map.get(u);
            let fits = sim
                .interaction(face(vt, side), face(ut, side.opposite()))
                .is_some();
            let matching = other.source == var.source && other.half == Some(1 - h);
            assert_eq!(fits, matching, "{} against {}", vt.name, ut.name);
            checked += 1;
        }
    }
    checked
}

/// Assembly level: a lone half offers only its partner in the partner cell,
/// and a half only attaches next to an empty or matching partner cell.
fn halves_behave(src: &TileSystem, sim: &TileSystem, map: &VariantMap, a: &Assembly) {
    let f = frontier(sim, a);
    for pl in a.placements() {
        let var = map.get(pl.tile);
        let Some(h) = var.half else { continue };
        let q = partner_cell(src, var.source, h, pl.anchor);
        if a.is_occupied(q) {
            continue;
        }
        let offered: Vec<_> = f.iter().filter(|att| att.anchor == q).collect();
        assert!(
            !offered.is_empty(),
            "lone half at {} has no partner offer",
            pl.anchor
        );
        for att in offered {
            let o = map.get(att.tile);
            assert!(
                o.source == var.source && o.half == Some(1 - h),
                "stranger offered next to a lone half"
            );
        }
    }
    for att in &f {
        let var = map.get(att.tile);
        let Some(h) = var.half else { continue };
        let q = partner_cell(src, var.source, h, att.anchor);
        if let Some(t) = a.tile_at(q) {
            let o = map.get(t);
            assert!(
                o.source == var.source && o.half == Some(1 - h),
                "half attaches beside a blocker"
            );
        }
    }
}

#[test]
fn datam_compiler_simulates_random_systems() {
    criterion("DaTAM compiler on random corpus", secs(300), || {
        let corpus = datam_corpus(2025, CORPUS_SIZE, CORPUS_BOUND, CORPUS_MAX_STATES);
        let mut pairs = 0;
        for (i, src) in corpus.iter().enumerate() {
            let (sim, map) = compile_datam_system(src).unwrap();
            let k = src
                .glues()
                .glue_count()
                .max(src.tiles().iter().filter(|t| t.is_duple()).count())
                .max(1);
            assert_eq!(sim.geometry_len(), Some(4 * k + 2), "system {i}");
            pairs += center_faces_pair_up(src, &sim, &map);
            let rep = Representation::from_variants(&map);
            let report =
                check_simulation(&sim, src, &rep, CheckOptions::new(CORPUS_BOUND)).unwrap();
            assert_eq!(
                report.verdict(),
                Verdict::Pass,
                "system {i}: {:?}",
                failing(&report)
            );
        }

        // exhaustive dynamics on the blocking demo, source and image
        let src = gallery::duple_blocking_demo();
        let d = src.tile_by_name("D").unwrap();
        let blue = src.tile_by_name("blue").unwrap();
        let (cx, cy) = gallery::DUPLE_CONTESTED_CELL;
        let contested = Pos::new(cx, cy);
        let states = explore(&src, 12, 1_000_000).unwrap();
        let mut winners = HashSet::new();
        for a in &states.states {
            for att in frontier(&src, a) {
                assert!(src
                    .tile(att.tile)
                    .footprint(att.anchor)
                    .all(|p| !a.is_occupied(p)));
            }
            if let Some(t) = a.tile_at(contested) {
                winners.insert(t);
            }
        }
        assert_eq!(winners, HashSet::from([d, blue]));

        let (sim, map) = compile_datam_system(&src).unwrap();
        let image_states = explore(&sim, 12, 1_000_000).unwrap();
        let mut image_winners = HashSet::new();
        for a in &image_states.states {
            halves_behave(&src, &sim, &map, a);
            if let Some(t) = a.tile_at(contested) {
                image_winners.insert(map.get(t).source);
            }
        }
        assert_eq!(image_winners, HashSet::from([d, blue]));
        pairs += center_faces_pair_up(&src, &sim, &map);
        format!(
            "{CORPUS_SIZE} systems pass at {CORPUS_BOUND} tiles; {pairs} center-face pairs; {} + {} demo states",
            states.len(),
            image_states.len()
        )
    })
}

// ------------------------------------------------------------------ gallery witnesses

#[test]
fn planter_is_single_frontier() {
    criterion("planter single frontier", secs(30), || {
        let sys = gallery::planter_sass(5);
        let seq = run(&sys, Policy::Lex, 1_000_000);
        let prefixes = seq.prefixes(&sys).unwrap();
        let last = prefixes.len() - 1;
        for (i, a) in prefixes.iter().enumerate() {
            let locations: BTreeSet<Pos> = frontier(&sys, a).iter().map(|att| att.anchor).collect();
            assert_eq!(locations.len(), usize::from(i < last), "prefix {i}");
        }
        let total = prefixes[last].len();
        let d = is_directed(&sys, total).unwrap();
        assert!(d.holds && !d.truncated);
        format!("{total} tiles, one frontier location per prefix, directed")
    })
}

#[test]
fn arm_and_cup_exclude_each_other() {
    criterion("arm/cup mutual exclusion", secs(60), || {
        let sys = gallery::arm_cup_system(2);
        let cells = gallery::center_cells(1);
        let id = |n: &str| sys.tile_by_name(n).unwrap();
        let (a_t, b_t, x_t, c_t, d_t) = (id("A"), id("B"), id("X"), id("C"), id("D"));
        let green = id("green");
        let at = |t: TileId, p: Pos| Placement::new(t, p.x, p.y);

        // every prefix of several growth orders, with the center cells held back
        let mut starts: Vec<Assembly> = Vec::new();
        let mut seen = HashSet::new();
        for policy in [
            Policy::Lex,
            Policy::LowestYFirst,
            Policy::Random(1),
            Policy::Random(2),
            Policy::Random(3),
        ] {
            let mut a = sys.seed().clone();
            loop {
                if seen.insert(a.canonical()) {
                    starts.push(a.clone());
                }
                let f = frontier(&sys, &a);
                let outside: Vec<_> = f
                    .into_iter()
                    .filter(|att| !cells.contains(&att.anchor))
                    .collect();
                if outside.is_empty() {
                    break;
                }
                let pick = match policy {
                    Policy::Lex => 0,
                    Policy::LowestYFirst => {
                        outside
                            .iter()
                            .enumerate()
                            .min_by_key(|(_, att)| (att.anchor.y, att.anchor.x))
                            .unwrap()
                            .0
                    }
                    Policy::Random(s) => (s as usize * 7919 + a.len() * 104_729) % outside.len(),
                };
                a = a.with(outside[pick], sys.tiles()).unwrap();
            }
        }

        let mut outcomes = 0;
        let mut both_ways = (false, false);
        for start in &starts {
            for a in gallery::center_outcomes(&sys, start, &cells) {
                outcomes += 1;
                let has = |t: TileId, p: Pos| a.tile_at(p) == Some(t);
                let has_x = has(x_t, cells[2]);
                let has_bc = has(b_t, cells[1]) || has(c_t, cells[3]);
                assert!(!(has_x && has_bc));
                let green_above = a.tile_at(cells[2].step(Side::N)) == Some(green);
                if attachable(&sys, &a, &at(x_t, cells[2])) {
                    assert!(!has_bc);
                } else if green_above && !a.is_occupied(cells[2]) {
                    assert!(has_bc, "X refused without B or C");
                }
                for (t, p, anchor) in [(b_t, cells[1], cells[0]), (c_t, cells[3], cells[4])] {
                    let neighbor = if t == b_t { a_t } else { d_t };
                    if attachable(&sys, &a, &at(t, p)) {
                        assert!(!has_x);
                    } else if has(neighbor, anchor) && !a.is_occupied(p) {
                        assert!(has_x, "{} refused without X", sys.tile(t).name);
                    }
                }
                if frontier(&sys, &a)
                    .iter()
                    .all(|att| !cells.contains(&att.anchor))
                {
                    both_ways.0 |= has_x;
                    both_ways.1 |= has_bc;
                }
            }
        }
        assert!(both_ways.0 && both_ways.1, "both outcomes reachable");
        format!(
            "{} starting assemblies, {outcomes} center outcomes",
            starts.len()
        )
    })
}

#[test]
fn window_movies_pump_a_periodic_line() {
    criterion("window movie pumping", secs(10), || {
        let sys = gallery::periodic_line(3);
        let seq = run(&sys, Policy::Lex, 100);
        let a = seq.final_assembly(&sys).unwrap();
        assert_eq!(a.len(), 100);
        let xs: Vec<i64> = (5..=50).collect();
        let windows = vertical_windows(&a, xs.iter().copied());
        let (i, j) = find_repeat(&sys, &seq, &windows, MovieKind::Full)
            .unwrap()
            .expect("a repeat");
        let period = xs[j] - xs[i];
        assert_eq!(period, 3);
        let width = |a: &Assembly| a.bounds().map(|(lo, hi)| hi.x - lo.x + 1).unwrap();

        let down = splice_pump_down(&sys, &seq, &windows[i], &windows[j]).unwrap();
        assert!(down.valid);
        assert_eq!(down.assembly.len(), 100 - 3);
        assert_eq!(width(&down.assembly), width(&a) - period);
        let up = splice_pump_up(&sys, &seq, &windows[i], &windows[j], 2).unwrap();
        assert!(up.valid);
        assert_eq!(up.assembly.len(), 100 + 6);
        assert_eq!(width(&up.assembly), width(&a) + 2 * period);
        for s in [&down, &up] {
            let replayed = s.sequence.final_assembly(&sys).unwrap();
            assert_eq!(replayed.canonical(), s.assembly.canonical());
            assert!(replays(&sys, &s.sequence));
        }
        format!(
            "repeat at x={} and x={}; down 97 tiles, up 106 tiles",
            xs[i], xs[j]
        )
    })
}

#[test]
fn pumping_bound_formula() {
    criterion("pumping bound formula", secs(1), || {
        let PumpingBound { movies, iterations } = pumping_bound(1, 1);
        assert_eq!(movies.to_string(), "46081");
        assert_eq!(iterations.to_string(), "138245");
        for g in 1..=4 {
            for m in 1..=2 {
                let b = pumping_bound(g, m);
                assert!(pumping_bound(g + 1, m).movies > b.movies);
                assert!(pumping_bound(g, m + 1).movies > b.movies);
                assert_eq!(b.iterations, &b.movies * 3u32 + 2u32);
            }
        }
        "B=46081 n=138245; monotone for g <= 4, m <= 2".into()
    })
}

// ------------------------------------------------------------------ mutants

struct Mutant {
    name: &'static str,
    sim: TileSystem,
    rep: Representation,
}

fn mutants(src: &TileSystem) -> Vec<Mutant> {
    let (sim, map) = compile_atam_system(src).unwrap();
    let rep = Representation::from_variants(&map);
    let a = src.tile_by_name("A").unwrap();
    let b = src.tile_by_name("B").unwrap();

    let (dropped, dropped_rep) = restrict_tiles(&sim, &rep, |t| map.get(t).source != a).unwrap();

    let Representation::Tiles(images) = &rep else {
        unreachable!()
    };
    let wrong = images
        .iter()
        .map(|img| {
            if *img == TileImage::Tile(a) {
                TileImage::Tile(b)
            } else {
                *img
            }
        })
        .collect();

    let len = sim.geometry_len().unwrap();
    let flattened: Vec<TileType> = sim
        .tiles()
        .iter()
        .map(|t| match &t.kind {
            TileKind::Geometric { sides } => TileType::geometric(
                t.name.clone(),
                sides.clone().map(|f| Face {
                    glue: f.glue,
                    geometry: Some(Geometry::flat(len)),
                }),
            ),
            _ => t.clone(),
        })
        .collect();

    vec![
        Mutant {
            name: "dropped variants",
            sim: dropped,
            rep: dropped_rep,
        },
        Mutant {
            name: "wrong rep entry",
            sim: sim.clone(),
            rep: Representation::Tiles(wrong),
        },
        Mutant {
            name: "corrupted geometry",
            sim: sim.with_tiles(flattened).unwrap(),
            rep,
        },
    ]
}

#[test]
fn mutants_are_caught_with_replayable_witnesses() {
    criterion("mutation sensitivity", secs(60), || {
        let src = gallery::mismatch_square_system();
        let opts = || CheckOptions::new(4);
        let mut caught = BTreeSet::new();
        let mut summary = Vec::new();
        for m in mutants(&src) {
            let reports = [
                (
                    "equivalent productions",
                    check_equivalent_productions(&m.sim, &src, &m.rep, opts()).unwrap(),
                ),
                (
                    "follows",
                    check_follows(&m.sim, &src, &m.rep, opts()).unwrap(),
                ),
                (
                    "models",
                    check_models(&m.sim, &src, &m.rep, opts()).unwrap(),
                ),
            ];
            let mut failed = Vec::new();
            for (clause, r) in &reports {
                if r.verdict() != Verdict::Fail {
                    continue;
                }
                for c in r.clauses.iter().filter(|c| c.verdict == Verdict::Fail) {
                    let w = c.witness.as_ref().expect("failures carry a witness");
                    let sim_ok = w.sim_sequence.as_ref().map(|s| replays(&m.sim, s));
                    let target_ok = w.target_sequence.as_ref().map(|s| replays(&src, s));
                    assert!(
                        sim_ok.is_some() || target_ok.is_some(),
                        "{}: witness without a sequence",
                        m.name
                    );
                    assert_ne!(
                        sim_ok,
                        Some(false),
                        "{}: simulator witness does not replay",
                        m.name
                    );
                    assert_ne!(
                        target_ok,
                        Some(false),
                        "{}: target witness does not replay",
                        m.name
                    );
                }
                failed.push(*clause);
                caught.insert(*clause);
            }
            assert!(!failed.is_empty(), "{} went unnoticed", m.name);
            summary.push(format!("{} -> {}", m.name, failed.join("+")));
        }
        assert_eq!(caught.len(), 3, "clauses caught: {caught:?}");
        summary.join("; ")
    })
}

// ------------------------------------------------------------------ formats

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

#[test]
fn formats_are_stable() {
    criterion("format stability", secs(5), || {
        let mut files = 0;
        for (name, sys) in gallery::all_systems(&GalleryParams::default()) {
            let stored = fs::read_to_string(fixtures().join(format!("{name}.json"))).unwrap();
            assert_eq!(
                io::serialize_system(&sys),
                stored,
                "{name} fixture is stale"
            );
            let parsed = io::parse_system(&stored).unwrap();
            assert_eq!(
                io::serialize_system(&parsed),
                stored,
                "{name} does not round-trip"
            );
            files += 1;
        }
        let traced = [
            ("mismatch_square", gallery::mismatch_square_system()),
            ("zigzag_counter", gallery::zigzag_counter(3)),
            ("periodic_line", gallery::periodic_line(3)),
            ("duple_blocking_demo", gallery::duple_blocking_demo()),
        ];
        for (name, sys) in traced {
            let text = fs::read_to_string(fixtures().join(format!("traces/{name}.json"))).unwrap();
            let doc = io::parse_trace(&text).unwrap();
            let a = doc.replay(&sys).unwrap();
            assert_eq!(io::assembly_digest(&sys, &a), doc.digest());
            files += 1;
        }
        format!("{files} fixture files")
    })
}
