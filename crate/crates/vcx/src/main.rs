//! Command-line entry point: compute, search, analyze, verify, generate.
//!
//! Exit codes: 0 success, 1 usage, 2 I/O or malformed input,
//! 3 verification failure, 4 timeout/incomplete.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use vcx::analysis::{
    find_linear_triangle, is_2_intersecting, is_intersecting, link_graph, transversal_number,
};
use vcx::constructions::{bound_table, fixture_family, star_family};
use vcx::error::Error;
use vcx::fam::{read_family_path, write_fam, write_family_path};
use vcx::graph::graph_properties;
use vcx::search::{
    decide_family_exists, enumerate_extremal, max_family_size, SearchConfig, SearchMode,
    SearchReport,
};
use vcx::sets::Family;
use vcx::shatter::{shatters, uniform_vc_at_most, vc_dimension};
use vcx::witness::{blc_summary, claim_predicates, witness_assignment};

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_IO: i32 = 2;
const EXIT_VERIFY: i32 = 3;
const EXIT_TIMEOUT: i32 = 4;

#[derive(Parser)]
#[command(name = "vcx", version, about = "Uniform set systems under VC-dimension constraints")]
struct Cli {
    /// Emit machine-readable JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct SearchArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 3)]
    k: u32,
    #[arg(long, default_value_t = 2)]
    d: u32,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Time budget in seconds (default from VCX_TIME_LIMIT)
    #[arg(long, env = "VCX_TIME_LIMIT")]
    time_limit: Option<u64>,
    /// Run the literal published backtracking algorithm
    #[arg(long)]
    baseline: bool,
    /// Disable first-branch symmetry breaking
    #[arg(long)]
    no_symmetry: bool,
    /// Disable the best-remaining-count bound prune
    #[arg(long)]
    no_bound_prune: bool,
    /// Write the certificate family to this path (.fam or .json)
    #[arg(short, long)]
    output: Option<PathBuf>,
}

impl SearchArgs {
    fn to_config(&self, mode: SearchMode) -> SearchConfig {
        SearchConfig {
            mode,
            time_limit: self.time_limit.map(Duration::from_secs),
            workers: self.workers,
            symmetry_breaking: !self.no_symmetry,
            baseline: self.baseline,
            bound_prune: !self.no_bound_prune,
            ..SearchConfig::new(self.n, self.k, self.d)
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the VC dimension of a family
    Vcdim { file: PathBuf },
    /// Verify a family against a VC-dimension bound and report structure
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        d: u32,
    },
    /// Witness assignment and the B/L/C decomposition
    Witnesses { file: PathBuf },
    /// Transversal, intersection, linear-triangle, and link-graph analysis
    Analyze { file: PathBuf },
    /// Exact maximum family size under the VC-dimension constraint
    SearchMax {
        #[command(flatten)]
        args: SearchArgs,
    },
    /// Decide whether a family of a given size exists
    Decide {
        #[arg(long)]
        target: usize,
        #[command(flatten)]
        args: SearchArgs,
    },
    /// Enumerate all maximum-size families up to isomorphism
    Enumerate {
        #[command(flatten)]
        args: SearchArgs,
    },
    /// Generate a named family (star, f6_13, f7_16, f8_45)
    Generate {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        center: Option<u32>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Lower-bound table per ground-set size
    Bounds {
        #[arg(long, default_value_t = 2)]
        d: u64,
        #[arg(long, default_value_t = 3)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
    },
}

fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::Parse { .. } => EXIT_IO,
        Error::MemberShattered { .. } => EXIT_VERIFY,
        _ => EXIT_USAGE,
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let started = Instant::now();
    let code = match run(&cli, started) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            error_exit_code(&e)
        }
    };
    std::process::exit(code);
}

fn timing(started: Instant) -> serde_json::Value {
    json!({ "elapsed_ms": started.elapsed().as_millis() as u64 })
}

fn emit(cli: &Cli, started: Instant, mut report: serde_json::Value, human: String) {
    if cli.json {
        report["timing"] = timing(started);
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("{human}");
    }
}

fn members_of(family: &Family) -> Vec<Vec<u32>> {
    family
        .members()
        .iter()
        .map(|m| m.elements().collect())
        .collect()
}

fn run(cli: &Cli, started: Instant) -> vcx::Result<i32> {
    match &cli.cmd {
        Cmd::Vcdim { file } => {
            let family = read_family_path(file)?;
            let d = vc_dimension(&family)?;
            emit(cli, started, json!({ "vc_dimension": d }), d.to_string());
            Ok(EXIT_OK)
        }
        Cmd::Verify { file, d } => cmd_verify(cli, started, file, *d),
        Cmd::Witnesses { file } => {
            let family = read_family_path(file)?;
            let wa = witness_assignment(&family)?;
            let summary = blc_summary(&family, &wa);
            let claims = claim_predicates(&family, &wa);
            let per_member: Vec<_> = family
                .members()
                .iter()
                .zip(&wa.witnesses)
                .map(|(m, w)| {
                    json!({
                        "member": m.elements().collect::<Vec<u32>>(),
                        "witness": w.elements().collect::<Vec<u32>>(),
                    })
                })
                .collect();
            let human = format!(
                "m = {}, |B| = {}, |L| = {}, |C| = {}, identity {}",
                summary.m,
                summary.b,
                summary.l,
                summary.c,
                if summary.identity_holds { "holds" } else { "fails" }
            );
            emit(
                cli,
                started,
                json!({
                    "witnesses": per_member,
                    "summary": summary,
                    "claims": claims,
                }),
                human,
            );
            Ok(EXIT_OK)
        }
        Cmd::Analyze { file } => cmd_analyze(cli, started, file),
        Cmd::SearchMax { args } => {
            let cfg = args.to_config(SearchMode::Maximize);
            let report = max_family_size(&cfg)?;
            finish_search(cli, started, args, &report, None)
        }
        Cmd::Decide { target, args } => {
            let cfg = args.to_config(SearchMode::Decide { target: *target });
            let report = decide_family_exists(&cfg)?;
            finish_search(cli, started, args, &report, Some(*target))
        }
        Cmd::Enumerate { args } => {
            let cfg = args.to_config(SearchMode::EnumerateExtremal);
            let report = enumerate_extremal(&cfg)?;
            let classes = report.classes.as_deref().unwrap_or(&[]);
            let class_json: Vec<_> = classes
                .iter()
                .map(|c| {
                    json!({
                        "canonical": hex(&c.canonical),
                        "representative": members_of(&c.representative),
                        "tau": c.tau,
                    })
                })
                .collect();
            let human = {
                let mut s = format!(
                    "optimum {} with {} extremal classes\n",
                    report.optimum,
                    classes.len()
                );
                for (i, c) in classes.iter().enumerate() {
                    s.push_str(&format!("class {}: tau = {}\n", i + 1, c.tau));
                }
                s.pop();
                s
            };
            emit(
                cli,
                started,
                json!({
                    "optimum": report.optimum,
                    "classes": class_json,
                    "nodes_expanded": report.nodes_expanded,
                    "config": report.config,
                }),
                human,
            );
            Ok(EXIT_OK)
        }
        Cmd::Generate {
            name,
            n,
            k,
            center,
            output,
        } => {
            let family = match name.as_str() {
                "star" => {
                    let n = n.ok_or_else(|| Error::InvalidParameter("star needs --n".into()))?;
                    let k = k.unwrap_or(3);
                    let center = center.unwrap_or(1);
                    star_family(n, k, center)?
                }
                other => fixture_family(other)?,
            };
            if let Some(path) = output {
                write_family_path(path, &family)?;
            }
            let human = if output.is_some() {
                format!("wrote {} members", family.len())
            } else {
                write_fam(&family).trim_end().to_string()
            };
            emit(
                cli,
                started,
                json!({
                    "name": name,
                    "n": family.ground().n(),
                    "k": family.uniform_k(),
                    "size": family.len(),
                    "members": members_of(&family),
                }),
                human,
            );
            Ok(EXIT_OK)
        }
        Cmd::Bounds { d, n_min, n_max } => {
            let rows = bound_table(*n_min, *n_max, *d)?;
            let mut human = String::from("n\tstar\tak\tknown_max");
            for r in &rows {
                human.push_str(&format!(
                    "\n{}\t{}\t{}\t{}",
                    r.n,
                    r.star,
                    r.ak,
                    r.known_max.map_or("-".into(), |v| v.to_string())
                ));
            }
            emit(cli, started, json!({ "d": d, "rows": rows }), human);
            Ok(EXIT_OK)
        }
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Bound annotations for the verify report.
#[derive(Serialize)]
struct BoundAnnotation {
    star: u64,
    ak: u64,
    known_max: Option<u64>,
    extremal: Option<bool>,
}

fn cmd_verify(cli: &Cli, started: Instant, file: &Path, d: u32) -> vcx::Result<i32> {
    let family = read_family_path(file)?;
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let n = family.ground().n();
    let k = family.uniform_k();

    // uniform (d+1)-families get the fast member check; anything else the
    // general sweep
    let (ok, counterexample) = if k == Some(d + 1) {
        match uniform_vc_at_most(&family, d)? {
            true => (true, None),
            false => {
                let bad = family
                    .members()
                    .iter()
                    .find(|m| shatters(&family, **m).unwrap_or(false))
                    .copied();
                (false, bad)
            }
        }
    } else {
        let dim = vc_dimension(&family)?;
        if dim <= d {
            (true, None)
        } else {
            let bad = vcx::all_ksets(n, d + 1)
                .into_iter()
                .find(|s| shatters(&family, *s).unwrap_or(false));
            (false, bad)
        }
    };
    let tau = transversal_number(&family)?;
    let bounds = if d == 2 && k == Some(3) {
        let row = bound_table(n as u64, n as u64, 2)?.remove(0);
        Some(BoundAnnotation {
            star: row.star,
            ak: row.ak,
            extremal: row.known_max.map(|m| family.len() as u64 == m),
            known_max: row.known_max,
        })
    } else {
        None
    };
    let annotation = match &bounds {
        Some(b) => match (b.known_max, b.extremal) {
            (Some(_), Some(true)) => format!("size {} = known maximum, extremal for n={n}", family.len()),
            (Some(max), _) if (family.len() as u64) > max => {
                format!("size {} exceeds the known maximum {max} (so VC must exceed {d})", family.len())
            }
            (Some(max), _) => format!("size {} <= known maximum {max}", family.len()),
            _ => String::new(),
        },
        None => String::new(),
    };
    let human = format!(
        "n = {n}, size = {}, k = {:?}, vc <= {d}: {}, tau = {}{}{}",
        family.len(),
        k,
        if ok { "pass" } else { "FAIL" },
        tau.tau,
        counterexample.map_or(String::new(), |s| format!(", shattered: {s}")),
        if annotation.is_empty() {
            String::new()
        } else {
            format!("; {annotation}")
        },
    );
    emit(
        cli,
        started,
        json!({
            "n": n,
            "size": family.len(),
            "k": k,
            "d": d,
            "vc_at_most_d": ok,
            "shattered_counterexample": counterexample.map(|s| s.elements().collect::<Vec<u32>>()),
            "tau": tau.tau,
            "bounds": bounds,
            "annotation": annotation,
        }),
        human,
    );
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY })
}

fn cmd_analyze(cli: &Cli, started: Instant, file: &Path) -> vcx::Result<i32> {
    let family = read_family_path(file)?;
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let tau = transversal_number(&family)?;
    let intersecting = is_intersecting(&family);
    let two_intersecting = is_2_intersecting(&family);
    let triangle = if family.uniform_k() == Some(3) {
        find_linear_triangle(&family)?
    } else {
        None
    };
    let mut links = Vec::new();
    for z in family.ground().elements() {
        let lg = link_graph(&family, z)?;
        if lg.graph.edge_count() > 0 {
            links.push(json!({
                "center": z,
                "properties": graph_properties(&lg.graph),
            }));
        }
    }
    let human = format!(
        "size = {}, tau = {} ({} minimum transversals), intersecting = {}, 2-intersecting = {}, linear triangle = {}",
        family.len(),
        tau.tau,
        tau.all_minimum.len(),
        intersecting,
        two_intersecting,
        triangle.map_or("none".to_string(), |[a, b, c]| format!("{a} {b} {c}")),
    );
    emit(
        cli,
        started,
        json!({
            "size": family.len(),
            "tau": tau,
            "intersecting": intersecting,
            "two_intersecting": two_intersecting,
            "linear_triangle": triangle.map(|t| t
                .iter()
                .map(|s| s.elements().collect::<Vec<u32>>())
                .collect::<Vec<_>>()),
            "link_graphs": links,
        }),
        human,
    );
    Ok(EXIT_OK)
}

fn finish_search(
    cli: &Cli,
    started: Instant,
    args: &SearchArgs,
    report: &SearchReport,
    target: Option<usize>,
) -> vcx::Result<i32> {
    if let (Some(path), Some(cert)) = (&args.output, &report.certificate) {
        write_family_path(path, cert)?;
    }
    let human = match (target, report.exists) {
        (Some(t), Some(true)) => format!("a family of size {t} exists"),
        (Some(t), Some(false)) => format!("no family of size {t} exists (search exhausted)"),
        (Some(t), None) => format!("undecided for size {t}: time limit reached"),
        (None, _) => {
            if report.incomplete {
                format!("best found so far: {} (time limit reached)", report.optimum)
            } else {
                format!("maximum = {}", report.optimum)
            }
        }
    };
    emit(
        cli,
        started,
        json!({
            "optimum": report.optimum,
            "exists": report.exists,
            "certificate": report.certificate.as_ref().map(members_of),
            "nodes_expanded": report.nodes_expanded,
            "incomplete": report.incomplete,
            "config": report.config,
        }),
        human,
    );
    Ok(if report.incomplete {
        EXIT_TIMEOUT
    } else {
        EXIT_OK
    })
}
