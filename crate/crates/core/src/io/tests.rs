use super::*;
use crate::compile::compile_datam_system;
use crate::dynamics::{enumerate_terminal, run, Policy};
use crate::gallery::{self, GalleryParams};
use crate::model::Pos;

fn two_by_two() -> (TileSystem, Assembly) {
    let sys = gallery::mismatch_square_system();
    let t = enumerate_terminal(&sys, 4).unwrap();
    (sys, t.assemblies[0].clone())
}

#[test]
fn every_gallery_system_round_trips() {
    for (name, sys) in gallery::all_systems(&GalleryParams::default()) {
        let text = serialize_system(&sys);
        let back = parse_system(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(serialize_system(&back), text, "{name}");
        assert_eq!(back.tiles(), sys.tiles(), "{name}");
        assert_eq!(back.glues(), sys.glues(), "{name}");
        assert_eq!(back.seed().canonical(), sys.seed().canonical(), "{name}");
    }
}

#[test]
fn flexible_glues_are_written_as_a_matrix() {
    let text = serialize_system(&gallery::flexible_glue_demo());
    assert!(text.contains("\"matrix\""));
    assert!(!text.contains("\"strengths\""));
}

#[test]
fn geometry_strings_count_from_one() {
    let text = r#"{
  "format": "tilesim-system/1",
  "model": "gtam",
  "temperature": 1,
  "glues": { "names": ["a"], "strengths": [1] },
  "geometry_length": 5,
  "tiles": [
    { "kind": "geometric", "name": "S", "sides": [
      { "glue": "a", "geometry": "10110" },
      { "glue": null, "geometry": "00000" },
      { "glue": null, "geometry": "00000" },
      { "glue": null, "geometry": "00000" } ] }
  ],
  "seed": [ { "tile": "S", "x": 0, "y": 0 } ]
}"#;
    let sys = parse_system(text).unwrap();
    let TileKind::Geometric { sides } = &sys.tile(0).kind else {
        panic!("geometric tile expected");
    };
    assert_eq!(
        sides[0].geometry.as_ref().unwrap().positions(),
        vec![1, 3, 4]
    );
}

fn with_glues(glues: &str, tiles: &str, seed: &str, extra: &str) -> String {
    format!(
        r#"{{"format": "tilesim-system/1", "model": "atam", "temperature": 1{extra},
            "glues": {glues}, "tiles": {tiles}, "seed": {seed}}}"#
    )
}

#[test]
fn asymmetric_matrix_has_its_own_code() {
    let text = with_glues(
        r#"{"names": ["a", "b"], "matrix": [[1, 1], [0, 1]]}"#,
        r#"[{"kind": "square", "name": "S", "glues": ["a", null, null, null]}]"#,
        r#"[{"tile": "S", "x": 0, "y": 0}]"#,
        "",
    );
    let e = parse_system(&text).unwrap_err();
    assert_eq!(e.code(), "asymmetric-glues", "{e}");
}

#[test]
fn unstable_seed_has_its_own_code() {
    let text = with_glues(
        r#"{"names": ["a"], "strengths": [1]}"#,
        r#"[{"kind": "square", "name": "S", "glues": [null, "a", null, null]},
            {"kind": "square", "name": "T", "glues": [null, null, null, "a"]}]"#,
        r#"[{"tile": "S", "x": 0, "y": 0}, {"tile": "T", "x": 1, "y": 0}]"#,
        "",
    )
    .replace("\"temperature\": 1", "\"temperature\": 2");
    assert_eq!(parse_system(&text).unwrap_err().code(), "unstable-seed");
}

#[test]
fn geometry_length_mismatch_has_its_own_code() {
    let mut sys_text = serialize_system(&gallery::arm_cup_system(1));
    sys_text = sys_text.replacen("\"geometry\": \"0000\"", "\"geometry\": \"00000\"", 1);
    assert_eq!(
        parse_system(&sys_text).unwrap_err().code(),
        "geometry-length"
    );
}

#[test]
fn schema_errors_name_the_field() {
    let text = with_glues(
        r#"{"names": ["a"], "strengths": [1]}"#,
        r#"[{"kind": "square", "name": "S", "glues": ["a", null, null]}]"#,
        r#"[{"tile": "S", "x": 0, "y": 0}]"#,
        "",
    );
    let e = parse_system(&text).unwrap_err();
    assert_eq!(e.code(), "schema");
    assert!(e.to_string().contains("tiles[0]"), "{e}");

    let text = with_glues(
        r#"{"names": ["a"], "strengths": [1]}"#,
        r#"[{"kind": "square", "name": "S", "glues": ["zz", null, null, null]}]"#,
        r#"[{"tile": "S", "x": 0, "y": 0}]"#,
        "",
    );
    let e = parse_system(&text).unwrap_err();
    assert!(e.to_string().contains("tiles[0].glues[0]"), "{e}");

    let text = with_glues(r#"{"names": []}"#, "[]", "[]", r#", "colour": 3"#);
    assert_eq!(parse_system(&text).unwrap_err().code(), "schema");
}

#[test]
fn traces_replay_to_the_recorded_digest() {
    let sys = gallery::zigzag_counter(2);
    let seq = run(&sys, Policy::Lex, 1000);
    let text = serialize_trace(&sys, &seq).unwrap();
    let doc = parse_trace(&text).unwrap();
    let a = doc.replay(&sys).unwrap();
    assert_eq!(a.canonical(), seq.final_assembly(&sys).unwrap().canonical());
    assert_eq!(doc.to_sequence(&sys).unwrap(), seq);

    let tampered = text.replacen(doc.digest(), &"0".repeat(64), 1);
    assert_eq!(
        parse_trace(&tampered)
            .unwrap()
            .replay(&sys)
            .unwrap_err()
            .code(),
        "digest"
    );
}

#[test]
fn illegal_trace_steps_are_reported() {
    let sys = gallery::periodic_line(3);
    let seq = run(&sys, Policy::Lex, 5);
    let text = serialize_trace(&sys, &seq).unwrap();
    // move the first attachment away from the seed
    let moved = text.replacen("\"x\": 1,", "\"x\": 7,", 1);
    assert_eq!(
        parse_trace(&moved)
            .unwrap()
            .replay(&sys)
            .unwrap_err()
            .code(),
        "replay"
    );
}

#[test]
fn assemblies_round_trip() {
    let (sys, a) = two_by_two();
    let text = serialize_assembly(&sys, &a);
    let (sys2, b) = parse_assembly(&text).unwrap();
    assert_eq!(b.canonical(), a.canonical());
    assert_eq!(serialize_assembly(&sys2, &b), text);
    let (_, c) = parse_system_or_assembly(&text).unwrap();
    assert_eq!(c.len(), 4);
    let (_, seed) = parse_system_or_assembly(&serialize_system(&sys)).unwrap();
    assert_eq!(seed.len(), 1);
}

#[test]
fn scale_one_representation_round_trips() {
    let src = gallery::duple_blocking_demo();
    let (sim, map) = compile_datam_system(&src).unwrap();
    let rep = Representation::from_variants(&map);
    let text = serialize_rep(&rep, &sim, &src);
    assert_eq!(parse_rep(&text, &sim, &src).unwrap(), rep);
    assert!(text.contains("\"half\""));
}

#[test]
fn block_representation_round_trips() {
    let sys = gallery::periodic_line(2);
    let entries = vec![
        (BlockPattern::from([((0, 0), 1)]), 1),
        (BlockPattern::from([((0, 0), 2), ((1, 0), 1)]), 2),
    ];
    let rep = Representation::Blocks(BlockRepresentation::new(2, 1, entries).unwrap());
    let text = serialize_rep(&rep, &sys, &sys);
    assert_eq!(parse_rep(&text, &sys, &sys).unwrap(), rep);
}

#[test]
fn enumeration_output_is_sorted_and_counted() {
    let sys = gallery::mismatch_square_system();
    let t = enumerate_terminal(&sys, 4).unwrap();
    let mut reversed = t.assemblies.clone();
    reversed.reverse();
    let a = serialize_enumeration(&sys, &t.assemblies, 4, true, false);
    let b = serialize_enumeration(&sys, &reversed, 4, true, false);
    assert_eq!(a, b);
    let doc = parse_enumeration(&a).unwrap();
    assert_eq!(doc.count, 2);
    assert!(doc.assemblies.iter().all(|x| x.len() == 4));
}

#[test]
fn svg_draws_one_rect_per_tile() {
    let (sys, a) = two_by_two();
    let svg = render_svg(&sys, &a);
    assert_eq!(svg.matches("class=\"tile\"").count(), 4);
    assert_eq!(svg.matches("class=\"bump\"").count(), 0);
    assert_eq!(svg.matches("<svg").count(), 1);
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg, render_svg(&sys, &a));
}

#[test]
fn svg_draws_bumps_of_geometric_tiles() {
    let sys = gallery::arm_cup_system(1);
    let center = gallery::center_cells(1);
    let x = sys.tile_by_name("X").unwrap();
    let a = Assembly::from_placements([Placement::new(x, center[2].x, 0)], sys.tiles()).unwrap();
    let svg = render_svg(&sys, &a);
    assert_eq!(svg.matches("class=\"tile\"").count(), 1);
    assert_eq!(svg.matches("class=\"bump\"").count(), 4);
}

#[test]
fn duples_are_one_rect() {
    let sys = gallery::duple_blocking_demo();
    let d = sys.tile_by_name("D").unwrap();
    let a = Assembly::from_placements([Placement::new(d, 1, 0)], sys.tiles()).unwrap();
    let svg = render_svg(&sys, &a);
    assert_eq!(svg.matches("class=\"tile\"").count(), 1);
    assert!(svg.contains("width=\"88\""), "{svg}");
}

#[test]
fn ascii_grid_puts_north_first() {
    let (sys, a) = two_by_two();
    let text = render_ascii(&sys, &a);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with('S'));
    assert!(lines[0].starts_with('U'));
    assert_eq!(a.tile_at(Pos::new(0, 1)), sys.tile_by_name("U"));
}
