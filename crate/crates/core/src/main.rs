use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lar_arrange::chain::{adjacency, apply, apply_coboundary, vertex_adjacency, Arithmetic, CellArray, Filter, VertexBuffer};
use lar_arrange::error::{Error, ErrorClass, Result};
use lar_arrange::io::{arrangement_to_obj, arrangement_to_svg, parse_chain, parse_literal, parse_obj, LarDocument};
use lar_arrange::pipeline::{arrange2d, arrange3d, Arrangement, Config};
use lar_arrange::shells::{NestingRule, ShellReport};

#[derive(Parser)]
#[command(name = "lar-arrange", version, about = "Arrangements of cellular complexes as signed boundary operators")]
struct Cli {
    /// Merge tolerance (default: 1e-8 times the bounding-box diagonal).
    #[arg(long, global = true)]
    epsilon: Option<f64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Omit timing and thread information so output is byte-identical.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Report errors as JSON on stderr.
    #[arg(long, global = true)]
    json_errors: bool,
    /// How nested components combine.
    #[arg(long, global = true, value_enum, default_value_t = Nesting::Arrangement)]
    nesting: Nesting,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Nesting {
    Arrangement,
    Parity,
}

#[derive(Clone, Copy, ValueEnum)]
enum Relation {
    /// Vertices joined by an edge.
    Vv,
    /// Faces sharing at least two vertices.
    Ff,
    /// 3-cells sharing exactly three vertices.
    Tt,
}

#[derive(Subcommand)]
enum Command {
    /// Arrange a planar segment soup (JSON with V and EV, or a literal file).
    Arrange2d {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Arrange polygonal faces in space (JSON with V and FV, or OBJ).
    /// Several inputs are combined.
    Arrange3d {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        obj: Option<PathBuf>,
        /// Push cells apart by this factor in the OBJ export.
        #[arg(long)]
        exploded: Option<f64>,
    },
    /// Apply a boundary (or coboundary) operator to a chain.
    Boundary {
        input: PathBuf,
        /// Dimension p of the operator ∂_p.
        #[arg(long)]
        dim: usize,
        /// Signed 0-based cell indices, e.g. "1,-2,4".
        #[arg(long, allow_hyphen_values = true)]
        chain: String,
        #[arg(long)]
        mod2: bool,
        /// Apply the transpose of ∂_p to a (p-1)-cochain instead.
        #[arg(long)]
        coboundary: bool,
    },
    /// Print an adjacency relation, one row per cell.
    Adjacency {
        input: PathBuf,
        #[arg(long, value_enum)]
        rel: Relation,
    },
    /// Print cell counts and the Euler characteristic.
    Stats { input: PathBuf },
}

fn load_document(path: &Path) -> Result<LarDocument> {
    let text = std::fs::read_to_string(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => LarDocument::from_json(&text),
        Some("obj") => {
            let mesh = parse_obj(&text)?;
            Ok(LarDocument {
                v: mesh.vertices.rows(),
                ev: Some(mesh.edges().into_cells()),
                fv: (!mesh.faces.is_empty()).then(|| mesh.face_cells().into_cells()),
                ..Default::default()
            })
        }
        _ => parse_literal(&text),
    }
}

/// Concatenates several 3D inputs into one vertex buffer with shifted cells.
fn combine(docs: &[LarDocument]) -> Result<(VertexBuffer, CellArray, CellArray)> {
    let mut rows = Vec::new();
    let mut ev = Vec::new();
    let mut fv = Vec::new();
    for doc in docs {
        let cx = doc.to_complex()?;
        if cx.vertices.dim() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: cx.vertices.dim(),
            });
        }
        if cx.dim() < 2 {
            return Err(Error::EmptyInput("input has no faces".into()));
        }
        let base = rows.len();
        rows.extend(cx.vertices.rows());
        ev.extend(cx.skeletons[1].cells().iter().map(|c| c.iter().map(|v| v + base).collect::<Vec<_>>()));
        fv.extend(cx.skeletons[2].cells().iter().map(|c| c.iter().map(|v| v + base).collect::<Vec<_>>()));
    }
    Ok((VertexBuffer::from_rows(&rows)?, CellArray::new(1, ev), CellArray::new(2, fv)))
}

fn shells_json(r: &ShellReport) -> serde_json::Value {
    json!({
        "count": r.n_shells(),
        "depth": r.depth,
        "parent": r.parent,
        "containment": ShellReport::format_matrix(&r.reduced).lines().collect::<Vec<_>>(),
    })
}

fn write_arrangement(cli: &Cli, arr: &Arrangement, output: Option<&Path>, started: Instant) -> Result<()> {
    let mut doc = LarDocument::from_arrangement(arr);
    let mut meta = json!({
        "epsilon": arr.epsilon,
        "dropped": arr.dropped,
        "shells": shells_json(&arr.shells),
    });
    if !cli.deterministic {
        meta["elapsed_ms"] = json!(started.elapsed().as_secs_f64() * 1e3);
        meta["jobs"] = json!(rayon::current_num_threads());
    }
    doc.meta = Some(meta);
    emit(&doc.to_json(), output)
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<()> {
    let config = Config {
        epsilon: cli.epsilon,
        nesting: match cli.nesting {
            Nesting::Arrangement => NestingRule::Arrangement,
            Nesting::Parity => NestingRule::Parity,
        },
    };
    let started = Instant::now();
    match &cli.command {
        Command::Arrange2d { input, output, svg } => {
            let doc = load_document(input)?;
            let v = doc.vertices()?;
            let ev = doc
                .cells(1)?
                .ok_or_else(|| Error::EmptyInput("no EV block".into()))?;
            let arr = arrange2d(&v, &ev, &config)?;
            if let Some(p) = svg {
                std::fs::write(p, arrangement_to_svg(&arr)?)?;
            }
            write_arrangement(cli, &arr, output.as_deref(), started)
        }
        Command::Arrange3d {
            inputs,
            output,
            obj,
            exploded,
        } => {
            let docs = inputs.iter().map(|p| load_document(p)).collect::<Result<Vec<_>>>()?;
            let (v, ev, fv) = combine(&docs)?;
            let arr = arrange3d(&v, &ev, &fv, &config)?;
            if let Some(p) = obj {
                std::fs::write(p, arrangement_to_obj(&arr, *exploded)?)?;
            }
            write_arrangement(cli, &arr, output.as_deref(), started)
        }
        Command::Boundary {
            input,
            dim,
            chain,
            mod2,
            coboundary,
        } => {
            let cx = load_document(input)?.to_complex()?;
            if *dim == 0 || *dim > cx.dim() {
                return Err(Error::DimensionMismatch {
                    expected: cx.dim(),
                    found: *dim,
                });
            }
            let op = cx.boundary(*dim);
            let op = if *mod2 { op.unsigned() } else { op.clone() };
            let arith = if *mod2 { Arithmetic::Mod2 } else { Arithmetic::Signed };
            let result = if *coboundary {
                apply_coboundary(&op, &parse_chain(chain, dim - 1)?, arith)?
            } else {
                apply(&op, &parse_chain(chain, *dim)?, arith)?
            };
            println!("{result}");
            Ok(())
        }
        Command::Adjacency { input, rel } => {
            let doc = load_document(input)?;
            let rows = match rel {
                Relation::Vv => {
                    let ev = doc.cells(1)?.ok_or_else(|| Error::EmptyInput("no EV block".into()))?;
                    vertex_adjacency(&ev, doc.v.len())
                }
                Relation::Ff => {
                    let fv = doc.cells(2)?.ok_or_else(|| Error::EmptyInput("no FV block".into()))?;
                    adjacency(&fv, &fv, Filter::AtLeast(2))
                }
                Relation::Tt => {
                    let cv = doc.cells(3)?.ok_or_else(|| Error::EmptyInput("no CV block".into()))?;
                    adjacency(&cv, &cv, Filter::Exactly(3))
                }
            };
            println!("{}", serde_json::to_string(&rows).expect("plain data"));
            Ok(())
        }
        Command::Stats { input } => {
            let cx = load_document(input)?.to_complex()?;
            let counts: Vec<usize> = (0..=cx.dim()).map(|p| cx.count(p)).collect();
            let out = json!({
                "dim": cx.dim(),
                "counts": counts,
                "euler": cx.euler_characteristic(),
                "closed": cx.is_closed()?,
            });
            println!("{out}");
            Ok(())
        }
    }
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
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: {e}");
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if cli.json_errors {
                eprintln!("{}", json!({"error": e.kind(), "message": e.to_string()}));
            } else {
                eprintln!("error[{}]: {e}", e.kind());
            }
            ExitCode::from(match e.class() {
                ErrorClass::Input | ErrorClass::Io => 2,
                ErrorClass::Degeneracy => 3,
            })
        }
    }
}
