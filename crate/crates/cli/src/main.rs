//! `tilesim` command line.
//!
//! Exit codes: 0 success, 1 bad input or flags, 2 input the compiler does
//! not support, 3 a simulation check or splice failed, 4 a simulation
//! check was cut short before reaching a verdict.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tilesim::compile::{compile_atam_system, compile_datam_system, CompileError};
use tilesim::dynamics::explore;
use tilesim::dynamics::{
    enumerate_producible, enumerate_terminal, run, Policy, DEFAULT_STATE_LIMIT,
};
use tilesim::gallery::{all_systems, GalleryParams};
use tilesim::io::{self, IoError};
use tilesim::model::{Model, TileSystem};
use tilesim::simulation::{
    check_simulation, CheckMode, CheckOptions, Representation, SimulationError,
};
use tilesim::windows::{
    find_repeat, pumping_bound, record_movie, splice_pump_down, splice_pump_up, vertical_windows,
    Direction, MovieKind, Splice,
};

#[derive(Parser)]
#[command(
    name = "tilesim",
    version,
    about = "Tile self-assembly simulator and model compilers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceModel {
    Atam,
    Datam,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetModel {
    Gtam,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyName {
    Lex,
    Lowy,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeName {
    Auto,
    Lazy,
    Explicit,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Ascii,
}

#[derive(Subcommand)]
enum Command {
    /// Compile an aTAM or DaTAM system into a two-glue GTAM system.
    Compile {
        #[arg(long, value_enum)]
        from: SourceModel,
        #[arg(long, value_enum)]
        to: TargetModel,
        input: PathBuf,
        output: PathBuf,
        /// Also write the representation from compiled tiles to source tiles.
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Grow one assembly and print it.
    Run {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "lex")]
        policy: PolicyName,
        /// Seed for the random policy.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_tiles: usize,
        /// Write the assembly sequence here.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List every producible (or terminal) assembly up to a size.
    Enumerate {
        input: PathBuf,
        #[arg(long)]
        max_tiles: usize,
        #[arg(long)]
        terminal_only: bool,
        #[arg(long, default_value_t = DEFAULT_STATE_LIMIT)]
        state_limit: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check whether SIM simulates ORIG under a representation.
    CheckSim {
        sim: PathBuf,
        orig: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        /// Largest image size explored.
        #[arg(long)]
        bound: usize,
        #[arg(long, value_enum, default_value = "auto")]
        mode: ModeName,
        #[arg(long, default_value_t = DEFAULT_STATE_LIMIT)]
        state_limit: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Record window movies along vertical cuts and optionally pump.
    AnalyzeWindows {
        input: PathBuf,
        #[arg(long)]
        trace: PathBuf,
        /// `x=A..B` (inclusive) or `x=A,B,C`.
        #[arg(long)]
        cuts: String,
        /// `down` or `up:N`.
        #[arg(long)]
        pump: Option<String>,
        /// Compare only bond-forming glue events.
        #[arg(long)]
        bond_forming: bool,
        /// Write the spliced sequence here.
        #[arg(long)]
        splice_trace: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw a system's seed or an assembly document.
    Render {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "svg")]
        format: Format,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print the pumping bound B and the iteration count 3B+2.
    PumpBound {
        #[arg(long)]
        glues: u64,
        #[arg(long)]
        scale: u64,
    },
    /// Write every gallery system into a directory.
    Gallery {
        dir: PathBuf,
        #[arg(long, default_value_t = 5)]
        iterations: usize,
        #[arg(long, default_value_t = 2)]
        periods: usize,
        #[arg(long, default_value_t = 3)]
        counter_width: usize,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn doc_error(path: &Path, e: IoError) -> anyhow::Error {
    anyhow!("{}: [{}] {e}", path.display(), e.code())
}

fn load_system(path: &Path) -> Result<TileSystem> {
    io::parse_system(&read(path)?).map_err(|e| doc_error(path, e))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn execute(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Compile {
            from,
            to: TargetModel::Gtam,
            input,
            output,
            rep,
        } => {
            let src = load_system(&input)?;
            let expected = match from {
                SourceModel::Atam => Model::Atam,
                SourceModel::Datam => Model::Datam,
            };
            if src.model() != expected {
                eprintln!(
                    "unsupported input: {} has model {}",
                    input.display(),
                    src.model()
                );
                return Ok(2);
            }
            let compiled = match from {
                SourceModel::Atam => compile_atam_system(&src),
                SourceModel::Datam => compile_datam_system(&src),
            };
            let (sim, map) = match compiled {
                Ok(x) => x,
                Err(e @ CompileError::Unsupported(_)) => {
                    eprintln!("{e}");
                    return Ok(2);
                }
                Err(e) => return Err(e.into()),
            };
            write(&output, &io::serialize_system(&sim))?;
            if let Some(r) = rep {
                write(
                    &r,
                    &io::serialize_rep(&Representation::from_variants(&map), &sim, &src),
                )?;
            }
            eprintln!(
                "{} tiles, geometry length {}",
                sim.tiles().len(),
                sim.geometry_len().unwrap_or(0)
            );
            Ok(0)
        }

        Command::Run {
            input,
            policy,
            seed,
            max_tiles,
            trace,
            output,
        } => {
            let sys = load_system(&input)?;
            let policy = match policy {
                PolicyName::Lex => Policy::Lex,
                PolicyName::Lowy => Policy::LowestYFirst,
                PolicyName::Random => Policy::Random(seed),
            };
            let seq = run(&sys, policy, max_tiles);
            let last = seq.final_assembly(&sys)?;
            if let Some(t) = trace {
                write(&t, &io::serialize_trace(&sys, &seq)?)?;
            }
            emit(output.as_deref(), &io::serialize_assembly(&sys, &last))?;
            Ok(0)
        }

        Command::Enumerate {
            input,
            max_tiles,
            terminal_only,
            state_limit,
            output,
        } => {
            let sys = load_system(&input)?;
            let (assemblies, truncated) = if terminal_only && state_limit == DEFAULT_STATE_LIMIT {
                let t = enumerate_terminal(&sys, max_tiles)?;
                (t.assemblies, t.truncated)
            } else if terminal_only {
                let g = explore(&sys, max_tiles, state_limit)?;
                let t = (0..g.len())
                    .filter(|&i| g.is_terminal(i))
                    .map(|i| g.states[i].clone());
                (t.collect(), g.truncated())
            } else if state_limit == DEFAULT_STATE_LIMIT {
                (enumerate_producible(&sys, max_tiles)?, false)
            } else {
                (explore(&sys, max_tiles, state_limit)?.states, false)
            };
            let text =
                io::serialize_enumeration(&sys, &assemblies, max_tiles, terminal_only, truncated);
            emit(output.as_deref(), &text)?;
            eprintln!("count {}", assemblies.len());
            Ok(0)
        }

        Command::CheckSim {
            sim,
            orig,
            rep,
            bound,
            mode,
            state_limit,
            output,
        } => {
            let s = load_system(&sim)?;
            let t = load_system(&orig)?;
            let r = io::parse_rep(&read(&rep)?, &s, &t).map_err(|e| doc_error(&rep, e))?;
            let mut opts = CheckOptions::new(bound).mode(match mode {
                ModeName::Auto => CheckMode::Auto,
                ModeName::Lazy => CheckMode::Lazy,
                ModeName::Explicit => CheckMode::Explicit,
            });
            opts.state_limit = state_limit;
            let report = match check_simulation(&s, &t, &r, opts) {
                Ok(report) => report,
                Err(e @ SimulationError::Enumeration(_)) => {
                    eprintln!("verdict inconclusive: {e}");
                    return Ok(4);
                }
                Err(e) => return Err(e.into()),
            };
            emit(output.as_deref(), &io::serialize_report(&report, &s, &t)?)?;
            eprintln!("verdict {}", report.verdict());
            Ok(report.exit_code() as u8)
        }

        Command::AnalyzeWindows {
            input,
            trace,
            cuts,
            pump,
            bond_forming,
            splice_trace,
            output,
        } => {
            let sys = load_system(&input)?;
            let doc = io::parse_trace(&read(&trace)?).map_err(|e| doc_error(&trace, e))?;
            let last = doc.replay(&sys).map_err(|e| doc_error(&trace, e))?;
            let seq = doc.to_sequence(&sys)?;
            let xs = parse_cuts(&cuts)?;
            let pump = pump.as_deref().map(parse_pump).transpose()?;
            let windows = vertical_windows(&last, xs.iter().copied());
            let kind = if bond_forming {
                MovieKind::BondForming
            } else {
                MovieKind::Full
            };

            let mut movies = Vec::with_capacity(windows.len());
            for (x, w) in xs.iter().zip(&windows) {
                let m = record_movie(&sys, &seq, w)?;
                let events: Vec<Value> = m
                    .events
                    .iter()
                    .filter(|e| !bond_forming || e.strength > 0)
                    .map(|e| {
                        json!({
                            "step": e.step,
                            "left": [e.edge.left.x, e.edge.left.y],
                            "right": [e.edge.right.x, e.edge.right.y],
                            "left_glue": sys.glues().name(e.left_glue),
                            "right_glue": sys.glues().name(e.right_glue),
                            "strength": e.strength,
                            "into": match e.direction {
                                Direction::IntoLeft => "left",
                                Direction::IntoRight => "right",
                            },
                        })
                    })
                    .collect();
                movies.push(json!({ "x": x, "events": events }));
            }
            let repeat = find_repeat(&sys, &seq, &windows, kind)?;
            let mut out = json!({
                "tiles": last.len(),
                "movies": movies,
                "repeat": repeat.map(|(i, j)| json!([xs[i], xs[j]])),
            });
            let mut code = 0;
            if let Some(p) = pump {
                let Some((i, j)) = repeat else {
                    out["splice"] = json!({ "error": "no two cuts share a movie" });
                    emit(output.as_deref(), &pretty(&out))?;
                    return Ok(3);
                };
                let (label, splice) = match p {
                    Pump::Down => (
                        "down".to_string(),
                        splice_pump_down(&sys, &seq, &windows[i], &windows[j])?,
                    ),
                    Pump::Up(n) => (
                        format!("up:{n}"),
                        splice_pump_up(&sys, &seq, &windows[i], &windows[j], n)?,
                    ),
                };
                out["splice"] = splice_json(&label, &splice, last.len());
                if let Some(path) = splice_trace {
                    write(&path, &io::serialize_trace(&sys, &splice.sequence)?)?;
                }
                if !splice.valid {
                    code = 3;
                }
            }
            emit(output.as_deref(), &pretty(&out))?;
            Ok(code)
        }

        Command::Render {
            input,
            format,
            output,
        } => {
            let text = read(&input)?;
            let (sys, a) = io::parse_system_or_assembly(&text).map_err(|e| doc_error(&input, e))?;
            let drawing = match format {
                Format::Svg => io::render_svg(&sys, &a),
                Format::Ascii => io::render_ascii(&sys, &a),
            };
            write(&output, &drawing)?;
            Ok(0)
        }

        Command::PumpBound { glues, scale } => {
            if scale == 0 {
                bail!("--scale must be at least 1");
            }
            let b = pumping_bound(glues, scale);
            println!("B={} n={}", b.movies, b.iterations);
            Ok(0)
        }

        Command::Gallery {
            dir,
            iterations,
            periods,
            counter_width,
        } => {
            fs::create_dir_all(&dir).with_context(|| format!("cannot create {}", dir.display()))?;
            let params = GalleryParams {
                iterations,
                periods,
                counter_width,
            };
            for (name, sys) in all_systems(&params) {
                write(
                    &dir.join(format!("{name}.json")),
                    &io::serialize_system(&sys),
                )?;
            }
            Ok(0)
        }
    }
}

fn splice_json(label: &str, s: &Splice, original: usize) -> Value {
    json!({
        "pump": label,
        "valid": s.valid,
        "tiles": s.assembly.len(),
        "delta": s.assembly.len() as i64 - original as i64,
        "collisions": s.collisions.iter().map(|p| json!([p.x, p.y])).collect::<Vec<_>>(),
        "stuck": s.stuck.len(),
        "steps": s.sequence.len(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pump {
    Down,
    Up(usize),
}

fn parse_pump(s: &str) -> Result<Pump> {
    if s == "down" {
        return Ok(Pump::Down);
    }
    let n = s
        .strip_prefix("up:")
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| anyhow!("--pump takes `down` or `up:N` with N >= 1, got {s:?}"))?;
    Ok(Pump::Up(n))
}

fn parse_cuts(spec: &str) -> Result<Vec<i64>> {
    let bad = || anyhow!("--cuts takes `x=A..B` or `x=A,B,...`, got {spec:?}");
    let body = spec.strip_prefix("x=").ok_or_else(bad)?;
    let xs: Vec<i64> = if let Some((a, b)) = body.split_once("..") {
        let (a, b) = (
            a.trim().parse::<i64>().map_err(|_| bad())?,
            b.trim().parse::<i64>().map_err(|_| bad())?,
        );
        if a > b {
            return Err(bad());
        }
        (a..=b).collect()
    } else {
        body.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
            .collect::<Result<_>>()?
    };
    if xs.is_empty() {
        return Err(bad());
    }
    Ok(xs)
}
