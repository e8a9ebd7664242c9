use super::*;
use crate::compile::{compile_atam_system, compile_datam_system, Version};
use crate::model::{GlueFunction, Model, Orientation, Side, TileType};

fn mismatch_square() -> TileSystem {
    let gf = GlueFunction::diagonal(
        ["cyan", "orange", "green", "red", "blue"]
            .map(String::from)
            .to_vec(),
        vec![1; 5],
    )
    .unwrap();
    let tiles = vec![
        TileType::square("S", [1, 2, 0, 0]),
        TileType::square("U", [0, 4, 1, 0]),
        TileType::square("R", [3, 0, 0, 2]),
        TileType::square("A", [0, 0, 3, 5]),
        TileType::square("B", [0, 0, 5, 4]),
    ];
    TileSystem::new(
        Model::Atam,
        gf,
        tiles,
        vec![Placement::new(0, 0, 0)],
        1,
        None,
    )
    .unwrap()
}

fn verdicts(r: &SimulationReport) -> Vec<(Clause, Verdict)> {
    r.clauses.iter().map(|c| (c.clause, c.verdict)).collect()
}

#[test]
fn compiled_mismatch_square_simulates_lazily() {
    let t = mismatch_square();
    let (s, map) = compile_atam_system(&t).unwrap();
    let rep = Representation::from_variants(&map);
    let r = check_simulation(&s, &t, &rep, CheckOptions::new(4)).unwrap();
    assert_eq!(r.mode, CheckMode::Lazy);
    assert_eq!(r.verdict(), Verdict::Pass, "{r:?}");
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn lazy_and_explicit_agree_on_compiled_square() {
    let t = mismatch_square();
    let (s, map) = compile_atam_system(&t).unwrap();
    let rep = Representation::from_variants(&map);
    for k in 1..=4 {
        let lazy =
            check_simulation(&s, &t, &rep, CheckOptions::new(k).mode(CheckMode::Lazy)).unwrap();
        let explicit =
            check_simulation(&s, &t, &rep, CheckOptions::new(k).mode(CheckMode::Explicit)).unwrap();
        assert_eq!(verdicts(&lazy), verdicts(&explicit), "k = {k}");
        assert!(lazy.sim_states < explicit.sim_states || k == 1);
    }
}

#[test]
fn system_simulates_itself() {
    let t = mismatch_square();
    let rep = Representation::identity(t.tiles().len());
    let r = check_simulation(&t, &t, &rep, CheckOptions::new(4).mode(CheckMode::Explicit)).unwrap();
    assert_eq!(r.verdict(), Verdict::Pass, "{r:?}");
}

#[test]
fn missing_variants_break_models_only() {
    let t = mismatch_square();
    let (s, map) = compile_atam_system(&t).unwrap();
    let rep = Representation::from_variants(&map);
    let a = t.tile_by_name("A").unwrap();
    let (s2, rep2) = restrict_tiles(&s, &rep, |id| {
        let v = map.get(id);
        !(v.source == a
            && v.versions[Side::S.index()] == Version::Alpha
            && v.versions[Side::W.index()] == Version::Beta)
    })
    .unwrap();
    assert_eq!(s2.tiles().len(), s.tiles().len() - 4);
    let r = check_simulation(&s2, &t, &rep2, CheckOptions::new(4)).unwrap();
    assert_eq!(r.clause(Clause::Models).unwrap().verdict, Verdict::Fail);
    assert_eq!(
        r.clause(Clause::ProducibleImages).unwrap().verdict,
        Verdict::Pass
    );
    assert_eq!(r.clause(Clause::Follows).unwrap().verdict, Verdict::Pass);
    assert_eq!(r.exit_code(), 3);
    let w = r.clause(Clause::Models).unwrap().witness.clone().unwrap();
    let seq = w.sim_sequence.unwrap();
    let img = rep_star(&rep2, &seq.final_assembly(&s2).unwrap(), t.tiles()).unwrap();
    assert_eq!(img.len(), 3);
}

#[test]
fn wrong_image_breaks_follows() {
    let t = mismatch_square();
    let (s, map) = compile_atam_system(&t).unwrap();
    let Representation::Tiles(mut images) = Representation::from_variants(&map) else {
        unreachable!()
    };
    let u = t.tile_by_name("U").unwrap();
    let r_tile = t.tile_by_name("R").unwrap();
    let victim = (0..map.len()).find(|&i| map.get(i).source == u).unwrap();
    images[victim] = TileImage::Tile(r_tile);
    let rep = Representation::Tiles(images);
    let r = check_simulation(&s, &t, &rep, CheckOptions::new(4)).unwrap();
    assert_eq!(r.clause(Clause::Follows).unwrap().verdict, Verdict::Fail);
    assert_eq!(
        r.clause(Clause::ProducibleImages).unwrap().verdict,
        Verdict::Fail
    );
}

#[test]
fn stray_fuzz_is_unclean() {
    let gf = GlueFunction::diagonal(vec!["a".into(), "b".into()], vec![1, 1]).unwrap();
    let target = TileSystem::new(
        Model::Atam,
        gf.clone(),
        vec![TileType::square("seed", [0; 4])],
        vec![Placement::new(0, 0, 0)],
        1,
        None,
    )
    .unwrap();
    let sim = TileSystem::new(
        Model::Atam,
        gf,
        vec![
            TileType::square("seed", [0, 1, 0, 0]),
            TileType::square("f1", [0, 2, 0, 1]),
            TileType::square("f2", [0, 0, 0, 2]),
        ],
        vec![Placement::new(0, 0, 0)],
        1,
        None,
    )
    .unwrap();
    let rep = Representation::Tiles(vec![TileImage::Tile(0), TileImage::Empty, TileImage::Empty]);
    let r = check_simulation(&sim, &target, &rep, CheckOptions::new(2)).unwrap();
    assert_eq!(
        r.clause(Clause::CleanMapping).unwrap().verdict,
        Verdict::Fail
    );
    assert_eq!(
        r.clause(Clause::ProducibleImages).unwrap().verdict,
        Verdict::Pass
    );
    assert_eq!(
        r.clause(Clause::TerminalImages).unwrap().verdict,
        Verdict::Pass
    );
}

#[test]
fn dropped_terminal_variant_breaks_productions() {
    // the only tile that can finish the square needs matching versions on two sides
    let gf = GlueFunction::diagonal(vec!["a".into(), "b".into()], vec![1, 1]).unwrap();
    let t = TileSystem::new(
        Model::Atam,
        gf,
        vec![
            TileType::square("S", [1, 2, 0, 0]),
            TileType::square("U", [0, 0, 1, 0]),
            TileType::square("R", [0, 0, 0, 2]),
        ],
        vec![Placement::new(0, 0, 0)],
        1,
        None,
    )
    .unwrap();
    let (s, map) = compile_atam_system(&t).unwrap();
    let rep = Representation::from_variants(&map);
    let full = check_simulation(&s, &t, &rep, CheckOptions::new(3)).unwrap();
    assert_eq!(full.verdict(), Verdict::Pass, "{full:?}");
    let u = t.tile_by_name("U").unwrap();
    let (s2, rep2) = restrict_tiles(&s, &rep, |id| map.get(id).source != u).unwrap();
    let r = check_equivalent_productions(&s2, &t, &rep2, CheckOptions::new(3)).unwrap();
    assert_eq!(
        r.clause(Clause::ProducibleImages).unwrap().verdict,
        Verdict::Fail
    );
}

#[test]
fn compiled_duple_system_simulates() {
    let gf = GlueFunction::diagonal(vec!["a".into(), "b".into()], vec![1, 1]).unwrap();
    let t = TileSystem::new(
        Model::Datam,
        gf,
        vec![
            TileType::square("S", [1, 2, 0, 0]),
            TileType::duple("H", Orientation::Horizontal, [0, 0, 0, 0, 0, 2]),
            TileType::duple("V", Orientation::Vertical, [0, 0, 0, 1, 0, 0]),
        ],
        vec![Placement::new(0, 0, 0)],
        1,
        None,
    )
    .unwrap();
    let (s, map) = compile_datam_system(&t).unwrap();
    let rep = Representation::from_variants(&map);
    for mode in [CheckMode::Lazy, CheckMode::Explicit] {
        let r = check_simulation(&s, &t, &rep, CheckOptions::new(3).mode(mode)).unwrap();
        assert_eq!(r.verdict(), Verdict::Pass, "{mode:?} {r:?}");
    }
}

#[test]
fn bad_rep_is_rejected() {
    let t = mismatch_square();
    let rep = Representation::Tiles(vec![TileImage::Tile(0)]);
    assert!(matches!(
        Checker::new(&t, &t, &rep, CheckOptions::new(2)),
        Err(SimulationError::RepSize { .. })
    ));
    let rep = Representation::Tiles(vec![TileImage::Tile(9); 5]);
    assert!(Checker::new(&t, &t, &rep, CheckOptions::new(2)).is_err());
}
