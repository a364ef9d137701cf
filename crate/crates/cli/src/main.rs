//! Command-line surface for the reflexive-polygon toolkit.
//!
//! Polygons are read from stdin by default (one `x y` vertex per line, `#`
//! comments allowed); a file argument overrides stdin. Exit codes are stable:
//! 0 success, 1 parse or usage error, 2 input fails validation (not convex,
//! degenerate, or not reflexive), 3 internal contract violation.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::json;

use twelve_points::text::{
    format_census, format_polygon_text, format_trace, parse_polygon_text, ParseError,
};
use twelve_points::{
    check_dual_transition, dual_polygon, ear_removable, enumerate_reflexive, random_reflexive,
    reduce_to_parallelogram, verify_twelve, Error, LatticePoint, OpKind, ReflexivePolygon,
};

#[derive(Parser)]
#[command(
    name = "twelve-points",
    version,
    about = "Reflexive lattice polygons: duality, m + m* = 12, reduction, classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the twelve-point identity m + m* = 12 for one polygon.
    Verify {
        /// Polygon file (defaults to stdin).
        file: Option<PathBuf>,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Construct the dual polygon and print it with both counts.
    Dual {
        file: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Reduce the polygon to a centered parallelogram and print the trace.
    Reduce {
        file: Option<PathBuf>,
        /// Independently re-verify the trace and report CONSISTENT/INCONSISTENT.
        #[arg(long)]
        replay: bool,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the equivalence classes of reflexive polygons in a box.
    Enumerate {
        /// Half-width of the vertex coordinate box.
        #[arg(long = "box", default_value_t = 4)]
        bound: i64,
        /// Also run verify and reduce over every class.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// Generate a seeded random unimodular image of a census class.
    Random {
        #[arg(long)]
        seed: u64,
        /// Number of random shears and flips to apply.
        #[arg(long, default_value_t = 20)]
        steps: u32,
        #[arg(long)]
        json: bool,
    },
    /// Report what removing an ear does to the dual polygon.
    Transition {
        file: Option<PathBuf>,
        /// Check one SUBDIVIDED-cycle index instead of every removable ear.
        #[arg(long)]
        index: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

/// Failure classes, carrying the documented exit codes.
enum Failure {
    /// Bad flags, unreadable input, or text that does not parse.
    Usage(String),
    /// Input parsed but is not a valid reflexive polygon.
    Input(String),
    /// An internal guarantee did not hold.
    Contract(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Contract(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Contract(m) => m,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(format!("parse error: {e}"))
    }
}

/// Core errors raised while handling user input: contract violations keep
/// their own exit code, everything else counts as invalid input.
fn input_error(e: Error) -> Failure {
    match e {
        Error::ContractViolation(_) => Failure::Contract(e.to_string()),
        Error::IndexOutOfRange { .. } => Failure::Usage(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn read_input(file: Option<&PathBuf>) -> Result<String, Failure> {
    match file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn load_polygon(file: Option<&PathBuf>) -> Result<ReflexivePolygon, Failure> {
    let text = read_input(file)?;
    let vertices = parse_polygon_text(&text)?;
    ReflexivePolygon::from_vertices(vertices).map_err(input_error)
}

fn vertex_array(vertices: &[LatticePoint]) -> serde_json::Value {
    json!(vertices.iter().map(|v| [v.x, v.y]).collect::<Vec<_>>())
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Verify { file, json } => {
            let m = load_polygon(file.as_ref())?;
            let rep = verify_twelve(&m).map_err(input_error)?;
            if json {
                println!(
                    "{}",
                    json!({"m": rep.m, "m_star": rep.m_star, "sum": rep.sum, "ok": rep.ok})
                );
            } else {
                let verdict = if rep.ok { "PASS" } else { "FAIL" };
                println!("m={} m*={} sum={} {verdict}", rep.m, rep.m_star, rep.sum);
            }
            if !rep.ok {
                return Err(Failure::Contract(format!(
                    "twelve-point identity failed: m + m* = {}",
                    rep.sum
                )));
            }
            Ok(())
        }

        Command::Dual { file, json } => {
            let m = load_polygon(file.as_ref())?;
            let d = dual_polygon(&m).map_err(input_error)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "m": d.m,
                        "m_star": d.m_star,
                        "dual": vertex_array(d.dual.vertices()),
                    })
                );
            } else {
                println!("# m={} m*={}", d.m, d.m_star);
                print!("{}", format_polygon_text(d.dual.vertices()));
            }
            Ok(())
        }

        Command::Reduce { file, replay, json } => {
            let m = load_polygon(file.as_ref())?;
            let trace = reduce_to_parallelogram(&m).map_err(input_error)?;
            let replay_result = if replay {
                Some(trace.replay())
            } else {
                None
            };
            if json {
                let steps: Vec<_> = trace
                    .steps
                    .iter()
                    .map(|s| {
                        json!({
                            "op": match s.op.kind { OpKind::Remove => "REMOVE", OpKind::Insert => "INSERT" },
                            "index": s.op.index,
                            "point": [s.op.point.x, s.op.point.y],
                            "m": s.m_after,
                            "m_star": s.m_star_after,
                        })
                    })
                    .collect();
                let mut out = json!({
                    "initial": vertex_array(trace.initial.strict().vertices()),
                    "steps": steps,
                    "final": vertex_array(trace.final_polygon.strict().vertices()),
                });
                if let Some(r) = &replay_result {
                    out["replay"] = json!(if r.is_ok() { "CONSISTENT" } else { "INCONSISTENT" });
                }
                println!("{out}");
            } else {
                print!("{}", format_trace(&trace));
                if let Some(r) = &replay_result {
                    println!(
                        "replay: {}",
                        if r.is_ok() { "CONSISTENT" } else { "INCONSISTENT" }
                    );
                }
            }
            match replay_result {
                Some(Err(e)) => Err(Failure::Contract(format!("trace replay failed: {e}"))),
                _ => Ok(()),
            }
        }

        Command::Enumerate { bound, check, json } => {
            if bound < 2 {
                return Err(Failure::Usage(format!(
                    "--box must be at least 2, got {bound}"
                )));
            }
            let classes = enumerate_reflexive(bound).map_err(input_error)?;
            let check_results = if check {
                let mut verify_pass = 0usize;
                let mut reduce_pass = 0usize;
                for class in &classes {
                    if verify_twelve(&class.representative).is_ok_and(|r| r.ok) {
                        verify_pass += 1;
                    }
                    if reduce_to_parallelogram(&class.representative)
                        .is_ok_and(|t| t.replay().is_ok())
                    {
                        reduce_pass += 1;
                    }
                }
                Some((verify_pass, reduce_pass))
            } else {
                None
            };
            if json {
                let list: Vec<_> = classes
                    .iter()
                    .map(|c| {
                        json!({
                            "m": c.m,
                            "m_star": c.m_star,
                            "area2": c.area2,
                            "vertices": vertex_array(c.representative.strict().vertices()),
                        })
                    })
                    .collect();
                let mut out = json!({"count": classes.len(), "classes": list});
                if let Some((v, r)) = check_results {
                    out["check"] = json!({"verify_pass": v, "reduce_pass": r});
                }
                println!("{out}");
            } else {
                print!("{}", format_census(&classes));
                if let Some((v, r)) = check_results {
                    let n = classes.len();
                    println!("{v}/{n} verify PASS, {r}/{n} reduce PASS");
                }
            }
            if let Some((v, r)) = check_results {
                let n = classes.len();
                if v != n || r != n {
                    return Err(Failure::Contract(format!(
                        "census check failed: {v}/{n} verify, {r}/{n} reduce"
                    )));
                }
            }
            Ok(())
        }

        Command::Random { seed, steps, json } => {
            let m = random_reflexive(seed, steps).map_err(input_error)?;
            let d = dual_polygon(&m).map_err(input_error)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "seed": seed,
                        "steps": steps,
                        "m": d.m,
                        "m_star": d.m_star,
                        "vertices": vertex_array(m.strict().vertices()),
                    })
                );
            } else {
                println!("# seed={seed} steps={steps} m={} m*={}", d.m, d.m_star);
                print!("{}", format_polygon_text(m.strict().vertices()));
            }
            Ok(())
        }

        Command::Transition { file, index, json } => {
            let m = load_polygon(file.as_ref())?;
            let indices: Vec<usize> = match index {
                Some(i) => vec![i],
                None => {
                    let n = m.subdivided().len();
                    (0..n)
                        .filter(|&i| ear_removable(&m, i).unwrap_or(false))
                        .collect()
                }
            };
            let mut reports = Vec::new();
            for i in indices {
                let point = *m
                    .subdivided()
                    .vertices()
                    .get(i)
                    .ok_or_else(|| input_error(Error::IndexOutOfRange {
                        index: i,
                        len: m.subdivided().len(),
                    }))?;
                let rep = check_dual_transition(&m, i).map_err(input_error)?;
                reports.push((i, point, rep));
            }
            if json {
                let list: Vec<_> = reports
                    .iter()
                    .map(|(i, p, r)| {
                        let (t1, t2, t3) = r.added_dual_triangle;
                        json!({
                            "index": i,
                            "point": [p.x, p.y],
                            "m_before": r.m_before,
                            "m_after": r.m_after,
                            "m_star_before": r.m_star_before,
                            "m_star_after": r.m_star_after,
                            "dual_triangle": [[t1.x, t1.y], [t2.x, t2.y], [t3.x, t3.y]],
                            "simple_ok": r.simple_ok,
                            "collinearity_ok": r.collinearity_ok,
                        })
                    })
                    .collect();
                println!("{}", json!({"ears": list}));
            } else if reports.is_empty() {
                println!("no removable ears");
            } else {
                for (i, p, r) in &reports {
                    let (t1, t2, t3) = r.added_dual_triangle;
                    println!(
                        "ear {i} at {p}: m {}->{}, m* {}->{}, dual triangle ({t1},{t2},{t3}), simple={}, placement={}",
                        r.m_before, r.m_after, r.m_star_before, r.m_star_after,
                        r.simple_ok, r.collinearity_ok,
                    );
                }
            }
            if let Some((i, _, r)) = reports
                .iter()
                .find(|(_, _, r)| !(r.deltas_ok() && r.simple_ok && r.collinearity_ok))
            {
                return Err(Failure::Contract(format!(
                    "dual transition check failed at ear {i}: {r:?}"
                )));
            }
            Ok(())
        }
    }
}
