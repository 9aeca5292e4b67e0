//! `cembed`: generate instances, embed them on their point sets, verify and
//! export drawings, and run the exhaustive oracle.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use colored_embed::bookembed::BookEmbedding;
use colored_embed::exact::int;
use colored_embed::instances::{self, Instance, PointMode, SvgStyle};
use colored_embed::model::{compatible, seq_of, ColoredGraph};
use colored_embed::multicolor::{embed_with, Engine};
use colored_embed::realizer::{realize_with, PolylineDrawing, RealizeOptions};
use colored_embed::verify::{self, SearchConfig, ValidationReport};
use colored_embed::Error;

#[derive(Parser)]
#[command(name = "cembed", version, about = "Planar polyline drawings of colored trees on colored point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file.
    Gen(GenArgs),
    /// Embed an instance and write a verified drawing.
    Embed(EmbedArgs),
    /// Re-check a drawing against its instance.
    Verify(VerifyArgs),
    /// Exhaustive search for a book embedding with few crossings per edge.
    Oracle(OracleArgs),
    /// Timing and bend statistics for generated instances, as CSV.
    Bench(BenchArgs),
    /// Render a drawing file as SVG.
    Svg(SvgArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Path3,
    Caterpillar,
    Split4,
    Twostars,
    Fan,
    Sky,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Path3,
    Caterpillar3,
    Path4split,
    Twostars,
    Auto,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Path3 => Engine::Path3,
            EngineArg::Caterpillar3 => Engine::Caterpillar3,
            EngineArg::Path4split => Engine::Path4Split,
            EngineArg::Twostars => Engine::TwoStars,
            EngineArg::Auto => Engine::Auto,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Points on a concave arc instead of general position.
    #[arg(long)]
    convex: bool,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args)]
struct EmbedArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: PathBuf,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    engine: EngineArg,
    /// Also write the book embedding as JSON.
    #[arg(long)]
    dump_be: Option<PathBuf>,
    /// Replace innermost tents by straight chords where possible.
    #[arg(long)]
    straighten: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    drawing: PathBuf,
    /// Write the report as JSON here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    input: PathBuf,
    /// Largest number of spine crossings per edge.
    #[arg(long, default_value_t = 2)]
    budget: usize,
    /// Largest number of spine items.
    #[arg(long, default_value_t = 14)]
    cap: usize,
    /// Fixed vertex order, comma separated.
    #[arg(long, value_delimiter = ',')]
    frozen: Option<Vec<usize>>,
    /// Write the embedding found here.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 100)]
    n: usize,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    convex: bool,
    #[arg(long)]
    straighten: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SvgArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    drawing: PathBuf,
    #[arg(long)]
    output: PathBuf,
    #[arg(long, default_value_t = 2)]
    decimals: usize,
    #[arg(long, default_value_t = 800.0)]
    width: f64,
}

/// Exit status with the message to print.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Unsupported(_) | Error::Precondition(_) | Error::Incompatible(_) | Error::CapExceeded { .. } => 2,
            Error::Realization(_) => 1,
            Error::Parse { .. } | Error::Io(_) | Error::Json(_) | Error::DuplicateX { .. } | Error::Invalid(_) => 3,
        };
        let message = match &e {
            Error::Unsupported(m) => format!("unsupported: {m}"),
            other => other.to_string(),
        };
        Failure { code, message }
    }
}

fn verification_failure(report: &ValidationReport) -> Failure {
    Failure {
        code: 1,
        message: format!("verification failed:\n{report}"),
    }
}

fn generate(kind: Kind, n: usize, seed: u64, convex: bool) -> Result<Instance, Error> {
    let mode = if convex { PointMode::Convex } else { PointMode::General };
    let with_points = |graph: ColoredGraph| -> Result<Instance, Error> {
        let points = instances::gen_random_compatible_points(&graph, seed.wrapping_add(1), mode)?;
        Ok(Instance { graph, points })
    };
    match kind {
        Kind::Path3 => with_points(instances::gen_random_colored_path(n, 3, seed)?),
        Kind::Caterpillar => with_points(instances::gen_random_caterpillar_mono_leaves(n, seed)?),
        Kind::Split4 => with_points(instances::gen_random_split_path(n, seed)?),
        Kind::Twostars => with_points(instances::gen_random_two_stars(4, n.max(1), seed)?),
        Kind::Fan | Kind::Sky => {
            let graph = if matches!(kind, Kind::Fan) {
                instances::gen_three_fan(n)?.graph
            } else {
                instances::gen_three_sky(n)?.graph
            };
            let points = instances::gen_alternating_points(n, &int(3 * n as i64))?.points;
            Ok(Instance { graph, points })
        }
    }
}

struct Outcome {
    engine: Engine,
    be: BookEmbedding,
    drawing: PolylineDrawing,
    embed_ms: f64,
    realize_ms: f64,
    verify_ms: f64,
}

/// Per-edge bend bound `2h + 1`, `h` the edge's spine crossings.
fn check_bend_bound(be: &BookEmbedding, d: &PolylineDrawing) -> ValidationReport {
    let mut r = ValidationReport::new();
    let crossings = match be.spine_crossings_per_edge() {
        Ok(c) => c,
        Err(e) => {
            r.error("crossings", e.to_string(), vec![]);
            return r;
        }
    };
    for (e, line) in d.edge_polylines.iter().enumerate() {
        let b = verify::bends(line);
        if b > 2 * crossings[e] + 1 {
            r.error(
                "bend-bound",
                format!("edge {e} has {b} bends but only {} spine crossings", crossings[e]),
                vec![verify::Witness::Edge(e)],
            );
        }
    }
    r
}

fn pipeline(inst: &Instance, engine: Engine, straighten: bool) -> Result<Outcome, Failure> {
    if !compatible(&inst.graph, &inst.points) {
        return Err(Error::Incompatible("color counts of graph and points differ".into()).into());
    }
    let t = Instant::now();
    let (engine, be) = embed_with(engine, &inst.graph, &seq_of(&inst.points))?;
    let embed_ms = t.elapsed().as_secs_f64() * 1e3;
    let t = Instant::now();
    let opts = RealizeOptions {
        straighten,
        ..RealizeOptions::default()
    };
    let (drawing, _) = realize_with(&be, &inst.points, &opts)?;
    let realize_ms = t.elapsed().as_secs_f64() * 1e3;
    let t = Instant::now();
    let mut report = colored_embed::bookembed::validate_book_embedding(&be, Some(&seq_of(&inst.points)));
    report.merge(verify::check_drawing(&inst.graph, &inst.points, &drawing));
    report.merge(check_bend_bound(&be, &drawing));
    let verify_ms = t.elapsed().as_secs_f64() * 1e3;
    if !report.pass() {
        return Err(verification_failure(&report));
    }
    Ok(Outcome {
        engine,
        be,
        drawing,
        embed_ms,
        realize_ms,
        verify_ms,
    })
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::from(Error::Io(e)))
}

fn svg_style(decimals: usize, width: f64) -> SvgStyle {
    SvgStyle {
        decimals,
        width,
        ..SvgStyle::default()
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen(a) => {
            let inst = generate(a.kind, a.n, a.seed, a.convex)?;
            write_text(&a.output, &instances::instance_to_json(&inst))?;
        }
        Command::Embed(a) => {
            let inst = instances::read_instance(&a.input)?;
            let out = pipeline(&inst, a.engine.into(), a.straighten)?;
            write_text(&a.output, &instances::drawing_to_json(&out.drawing))?;
            if let Some(p) = &a.svg {
                let svg = instances::drawing_to_svg(&out.drawing, &inst.points, &SvgStyle::default());
                write_text(p, &svg)?;
            }
            if let Some(p) = &a.dump_be {
                write_text(p, &instances::embedding_to_json(&out.be))?;
            }
            println!(
                "engine {}: {} edges, max spine crossings {}, curve complexity {}",
                out.engine.name(),
                inst.graph.edges().len(),
                out.be.max_crossings_per_edge().unwrap_or(0),
                verify::curve_complexity(&out.drawing)
            );
        }
        Command::Verify(a) => {
            let inst = instances::read_instance(&a.input)?;
            let d = instances::read_drawing(&a.drawing, &inst.points)?;
            let report = verify::check_drawing(&inst.graph, &inst.points, &d);
            let json = serde_json::to_string_pretty(&report).expect("serializable");
            match &a.output {
                Some(p) => write_text(p, &json)?,
                None => println!("{json}"),
            }
            if !report.pass() {
                return Err(verification_failure(&report));
            }
            println!("pass: curve complexity {}", verify::curve_complexity(&d));
        }
        Command::Oracle(a) => {
            let inst = instances::read_instance(&a.input)?;
            let cfg = SearchConfig {
                budget: a.budget,
                cap: a.cap,
                frozen_order: a.frozen,
            };
            let out = verify::exhaustive_embedding_search(&inst.graph, &seq_of(&inst.points), &cfg)?;
            match (&out.embedding, out.crossings) {
                (Some(be), Some(h)) => {
                    println!("found: at most {h} spine crossings per edge ({} states)", out.states);
                    if let Some(p) = &a.output {
                        write_text(p, &instances::embedding_to_json(be))?;
                    }
                }
                _ => println!(
                    "none: no embedding with at most {} spine crossings per edge ({} states)",
                    a.budget, out.states
                ),
            }
        }
        Command::Bench(a) => {
            let mut csv = String::from(
                "instance,n,edges,engine,embed_ms,realize_ms,verify_ms,max_crossings,curve_complexity,total_bends\n",
            );
            for i in 0..a.count {
                let seed = a.seed.wrapping_add(i as u64);
                let inst = generate(a.kind, a.n, seed, a.convex)?;
                let out = pipeline(&inst, Engine::Auto, a.straighten)?;
                let total: usize = out.drawing.edge_polylines.iter().map(|l| verify::bends(l)).sum();
                csv.push_str(&format!(
                    "{seed},{},{},{},{:.3},{:.3},{:.3},{},{},{}\n",
                    inst.graph.vertex_count(),
                    inst.graph.edges().len(),
                    out.engine.name(),
                    out.embed_ms,
                    out.realize_ms,
                    out.verify_ms,
                    out.be.max_crossings_per_edge().unwrap_or(0),
                    verify::curve_complexity(&out.drawing),
                    total
                ));
            }
            match &a.output {
                Some(p) => write_text(p, &csv)?,
                None => {
                    let _ = std::io::stdout().write_all(csv.as_bytes());
                }
            }
        }
        Command::Svg(a) => {
            let inst = instances::read_instance(&a.input)?;
            let d = instances::read_drawing(&a.drawing, &inst.points)?;
            let svg = instances::drawing_to_svg(&d, &inst.points, &svg_style(a.decimals, a.width));
            write_text(&a.output, &svg)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}

