use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use wskit::discretizer::{q_approx, witgen};
use wskit::gen::{random_monotone_polygon, random_simple_polygon};
use wskit::geometry::{format_rational, is_x_monotone, parse_rational, reflex_vertices, Point, Polygon, ValidateOptions};
use wskit::io::{
    candidates_json, parse_instance_with, parse_point, point_strings, region_json, render_svg, serialize_instance,
    solution_json, Instance, Overlays,
};
use wskit::oracle::{comb_generator, dense_ws_witnesses, naive_visibility, same_region, sample_intersection};
use wskit::solve::{solve_disws, solve_ws_approx, solve_ws_exact_with, ExactOptions, Optimality};
use wskit::string_model::build_string_model;
use wskit::visibility::visibility_region;
use wskit::Error;

#[derive(Parser)]
#[command(name = "wskit", version, about = "Witness sets in simple and monotone polygons")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that an instance file describes a valid simple polygon
    Validate {
        file: PathBuf,
        #[arg(long)]
        allow_collinear: bool,
    },
    /// Visibility region of one point
    Visibility {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Largest witness set among the file's points
    Disws { file: PathBuf },
    /// Maximum witness set of a monotone polygon
    WsExact {
        file: PathBuf,
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, default_value_t = ExactOptions::default().candidate_budget)]
        budget: usize,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Approximate witness set of a monotone polygon
    WsApprox {
        file: PathBuf,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Candidate point sets
    Candidates {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Mode::Witgen)]
        mode: Mode,
    },
    /// String representation of the visibility regions of the file's points
    Strings {
        file: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Generate an instance file on stdout
    Gen {
        #[arg(long, conflicts_with = "random", required_unless_present = "random")]
        comb: Option<usize>,
        #[arg(long)]
        random: Option<usize>,
        /// Restrict random polygons to x-monotone ones
        #[arg(long, requires = "random")]
        monotone: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Brute-force reference checks
    Oracle {
        #[command(subcommand)]
        check: OracleCmd,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Compare the sweep with the quadratic reference
    Visibility {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Grid probe for a common visible point of two sources
    Sample {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = 100)]
        density: usize,
    },
    /// Certified lower bound from dense boundary sampling
    Dense {
        file: PathBuf,
        #[arg(long, default_value_t = 64)]
        density: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Witgen,
    Q1,
    Q2i,
}

enum Failure {
    Usage(String),
    Domain(Error),
    Budget(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<Value, Failure>;

fn load(path: &Path, allow_collinear: bool) -> Result<Instance, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(parse_instance_with(&text, ValidateOptions { allow_collinear })?)
}

fn points_of(inst: &Instance) -> Result<&[Point], Failure> {
    inst.points.as_deref().ok_or_else(|| Failure::Usage("instance has no \"points\"".into()))
}

fn write_svg(path: &Option<PathBuf>, p: &Polygon, overlays: Overlays) -> Result<(), Failure> {
    if let Some(path) = path {
        std::fs::write(path, render_svg(p, &overlays)).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn witness_svg(path: &Option<PathBuf>, p: &Polygon, w: &[Point]) -> Result<(), Failure> {
    if path.is_none() {
        return Ok(());
    }
    let regions = w.iter().map(|q| visibility_region(p, q)).collect::<wskit::Result<Vec<_>>>()?;
    write_svg(path, p, Overlays { regions, witnesses: w.to_vec(), ..Overlays::default() })
}

fn run(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::Validate { file, allow_collinear } => {
            let inst = load(&file, allow_collinear)?;
            let p = &inst.polygon;
            Ok(json!({
                "status": "ok",
                "vertices": p.len(),
                "reflex": reflex_vertices(p).len(),
                "x_monotone": is_x_monotone(p),
                "points": inst.points.as_ref().map(Vec::len),
            }))
        }
        Cmd::Visibility { file, point, svg } => {
            let inst = load(&file, false)?;
            let q = parse_point(&point)?;
            let v = visibility_region(&inst.polygon, &q)?;
            let out = region_json(&v);
            write_svg(&svg, &inst.polygon, Overlays { regions: vec![v], witnesses: vec![q], ..Overlays::default() })?;
            Ok(out)
        }
        Cmd::Disws { file } => {
            let inst = load(&file, false)?;
            let sol = solve_disws(&inst.polygon, points_of(&inst)?)?;
            Ok(solution_json(&sol, None, "optimal"))
        }
        Cmd::WsExact { file, kmax, budget, svg } => {
            let inst = load(&file, false)?;
            let opts = ExactOptions { k_max: kmax, candidate_budget: budget, ..ExactOptions::default() };
            match solve_ws_exact_with(&inst.polygon, &opts) {
                Ok(ex) => {
                    let mut out = solution_json(&ex.solution, None, "optimal");
                    out["proof"] = match &ex.proof {
                        Optimality::StoppingRule { k } => json!({"stopping_rule": {"k": k}}),
                        Optimality::GuardCover { guards } => {
                            json!({"guard_cover": guards.iter().map(point_strings).collect::<Vec<_>>()})
                        }
                    };
                    out["rounds"] = ex
                        .rounds
                        .iter()
                        .map(|r| json!({"k": r.k, "candidates": r.candidates, "size": r.size}))
                        .collect();
                    witness_svg(&svg, &inst.polygon, &ex.solution.chosen)?;
                    Ok(out)
                }
                Err(Error::BudgetExceeded { best, reason }) => {
                    let mut out = solution_json(&best, None, "budget_exceeded");
                    out["reason"] = json!(reason);
                    Err(Failure::Budget(out))
                }
                Err(e) => Err(e.into()),
            }
        }
        Cmd::WsApprox { file, eps, svg } => {
            let inst = load(&file, false)?;
            let eps = parse_rational(&eps).ok_or_else(|| Failure::Usage(format!("bad --eps {eps:?}")))?;
            let ap = solve_ws_approx(&inst.polygon, &eps)?;
            let mut out = solution_json(&ap.solution, Some(&ap.guarantee), "approximate");
            out["candidates"] = json!(ap.candidates);
            witness_svg(&svg, &inst.polygon, &ap.solution.chosen)?;
            Ok(out)
        }
        Cmd::Candidates { file, k, mode } => {
            let inst = load(&file, false)?;
            let c = match mode {
                Mode::Witgen => witgen(&inst.polygon, k)?,
                Mode::Q1 => q_approx(&inst.polygon, 1)?,
                Mode::Q2i => q_approx(&inst.polygon, 2 * k.max(1))?,
            };
            Ok(candidates_json(&c))
        }
        Cmd::Strings { file, svg } => {
            let inst = load(&file, false)?;
            let f = points_of(&inst)?;
            let m = build_string_model(&inst.polygon, f)?;
            let out = json!({
                "epsilon": format_rational(&m.epsilon),
                "delta": format_rational(&m.delta),
                "inflated": m.inflated.vertices().iter().map(point_strings).collect::<Vec<_>>(),
                "strings": m.strings.iter().map(|s| s.iter().map(point_strings).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            let overlays = Overlays {
                strings: m.strings.clone(),
                witnesses: f.to_vec(),
                outline: Some(m.inflated.clone()),
                ..Overlays::default()
            };
            write_svg(&svg, &inst.polygon, overlays)?;
            Ok(out)
        }
        Cmd::Gen { comb, random, monotone, seed } => {
            let polygon = match (comb, random) {
                (Some(g), _) if g >= 1 => comb_generator(g, seed),
                (Some(_), _) => return Err(Failure::Usage("--comb needs G >= 1".into())),
                (None, Some(n)) if n >= 3 => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    if monotone {
                        random_monotone_polygon(&mut rng, n.max(4))
                    } else {
                        random_simple_polygon(&mut rng, n, 4 * n as i64)
                    }
                }
                _ => return Err(Failure::Usage("--random needs N >= 3".into())),
            };
            let text = serialize_instance(&Instance { polygon, points: None });
            Ok(serde_json::from_str(&text).expect("json"))
        }
        Cmd::Oracle { check } => oracle(check),
    }
}

fn oracle(check: OracleCmd) -> Outcome {
    match check {
        OracleCmd::Visibility { file, point } => {
            let inst = load(&file, false)?;
            let q = parse_point(&point)?;
            let fast = visibility_region(&inst.polygon, &q)?;
            let slow = naive_visibility(&inst.polygon, &q)?;
            Ok(json!({"agree": same_region(&fast, &slow), "region": region_json(&slow)}))
        }
        OracleCmd::Sample { file, a, b, density } => {
            let inst = load(&file, false)?;
            let (a, b) = (parse_point(&a)?, parse_point(&b)?);
            Ok(json!({"common_point_found": sample_intersection(&inst.polygon, &a, &b, density), "density": density}))
        }
        OracleCmd::Dense { file, density } => {
            let inst = load(&file, false)?;
            let w = dense_ws_witnesses(&inst.polygon, density)?;
            Ok(json!({
                "lower_bound": w.len(),
                "witnesses": w.iter().map(point_strings).collect::<Vec<_>>(),
                "density": density,
            }))
        }
    }
}

fn emit(v: &Value) {
    use std::io::Write;
    let text = serde_json::to_string_pretty(v).expect("json");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(n) = std::env::var("WSKIT_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli.cmd) {
        Ok(v) => {
            emit(&v);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            emit(&json!({"status": "error", "error": e.to_string()}));
            ExitCode::from(2)
        }
        Err(Failure::Budget(v)) => {
            emit(&v);
            ExitCode::from(3)
        }
    }
}
