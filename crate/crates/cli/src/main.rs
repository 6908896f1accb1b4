//! Command-line front end for the partitioning solvers.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gridcleave::bcpi::{bcpi_2, bcpi_3};
use gridcleave::dbcp::{
    dbcp_2, dbcp_2_general, dbcp_3, dbcp_3_general, dbcp_sep_case, dbcp_series_parallel, DbcpResult,
};
use gridcleave::embedding::{render_svg, SvgOptions};
use gridcleave::io::{format_rational, parse_rational, read_edge_list, read_json, write_edge_list, write_json};
use gridcleave::oracle::{best_frontier, gen_fig1, gen_random, verify_partition, DEFAULT_CAP};
use gridcleave::structure::is_series_parallel;
use gridcleave::{connectivity_level, find_separation_pairs, Error, Graph, Partition, Rational, Weights};

use num_traits::{Signed, Zero};

#[derive(Parser)]
#[command(name = "gridcleave", version, about = "Balanced connected partitions of weighted graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Split an instance into connected parts and print the result as JSON.
    Partition {
        input: PathBuf,
        #[command(flatten)]
        src: Source,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        /// Size ratio parameter for separation-pair splits.
        #[arg(long, default_value_t = 4)]
        q: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Balance around p(V)/2 instead of zero (general weights).
        #[arg(long)]
        centered: bool,
        /// Terminal nodes for bcpi modes, comma separated.
        #[arg(long, value_delimiter = ',')]
        nodes: Option<Vec<usize>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the embedding the solver sweeps over as SVG.
    Embed {
        input: PathBuf,
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Color nodes by the computed partition.
        #[arg(long)]
        with_partition: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive (imbalance, size ratio) frontier of a small instance.
    Oracle {
        input: PathBuf,
        #[command(flatten)]
        src: Source,
        /// Largest node count to enumerate; defaults to GRIDCLEAVE_CAP or 16.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        centered: bool,
        /// Report whether some connected split meets both bounds.
        #[arg(long, num_args = 2, value_names = ["C_P", "C_S"])]
        check: Option<Vec<String>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate an instance.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        t: usize,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file; edge lists also write `<out>.weights`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct Source {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Weight file for edge-list input (`id value` per line).
    #[arg(long)]
    weights: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Auto,
    Bcpi2,
    Bcpi3,
    Dbcp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Fig1,
    Random2,
    Random3,
}

/// Failure with the exit status it maps to.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::NodeOutOfRange { .. } | Error::SelfLoop(_) | Error::DuplicateEdge(..) => 2,
            Error::Precondition(_) => 3,
            Error::CapExceeded { .. } => 4,
            _ => 1,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn fail(code: u8, msg: impl Into<String>) -> Failure {
    Failure { code, msg: msg.into() }
}

type Outcome<T> = Result<T, Failure>;

fn read_text(path: &Path) -> Outcome<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| fail(2, format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| fail(2, format!("{}: {e}", path.display())))
}

fn load(input: &Path, src: &Source) -> Outcome<(Graph, Weights)> {
    let text = read_text(input)?;
    Ok(match src.format {
        Format::Json => read_json(&text)?,
        Format::Edgelist => {
            let wpath = src.weights.as_ref().ok_or_else(|| fail(2, "edge-list input needs --weights"))?;
            read_edge_list(&text, &read_text(wpath)?)?
        }
    })
}

fn emit(out: Option<&Path>, text: &str) -> Outcome<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| fail(1, format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| fail(1, format!("stdout: {e}")))
        }
    }
}

#[derive(Serialize)]
struct PartitionDoc {
    #[serde(rename = "V1")]
    v1: Vec<usize>,
    #[serde(rename = "V2")]
    v2: Vec<usize>,
    #[serde(rename = "V3", skip_serializing_if = "Option::is_none")]
    v3: Option<Vec<usize>>,
    p: Vec<String>,
    sizes: Vec<usize>,
    trace: String,
    seed: u64,
}

impl PartitionDoc {
    fn new(part: &Partition<Rational>, trace: String, seed: u64) -> Self {
        let parts = part.parts();
        PartitionDoc {
            v1: parts[0].clone(),
            v2: parts[1].clone(),
            v3: parts.get(2).cloned(),
            p: part.sums().iter().map(format_rational).collect(),
            sizes: part.sizes(),
            trace,
            seed,
        }
    }
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// A solver result with the bound its construction guarantees.
struct Solved {
    result: DbcpResult<Rational>,
    c_p: Rational,
    c_s: Rational,
    centered: bool,
}

fn pm1_zero(p: &Weights) -> bool {
    p.is_pm1() && p.total().is_zero()
}

fn solve_dbcp(g: &Graph, p: &Weights, q: usize, seed: u64, centered: bool) -> Outcome<Solved> {
    let n = g.n();
    let level = connectivity_level(g);
    if level < 2 {
        return Err(fail(3, "precondition violated: graph must be 2-connected"));
    }
    let exact = pm1_zero(p) && !centered;
    let max = p.max_abs();
    if level >= 3 && n >= 4 {
        return Ok(if exact {
            let k = n / 2 + n % 4 / 2;
            Solved { result: dbcp_3(g, p, seed)?, c_p: int(0), c_s: Rational::new(k.into(), (n - k).into()), centered: false }
        } else {
            let k = n.div_ceil(2);
            Solved {
                result: dbcp_3_general(g, p, seed)?,
                c_p: max,
                c_s: Rational::new(k.into(), (n - k).into()),
                centered: true,
            }
        });
    }
    if !exact {
        return Ok(Solved { result: dbcp_2_general(g, p, seed)?, c_p: max, c_s: int(3), centered: true });
    }
    let result = match q {
        4 => dbcp_2(g, p, seed)?,
        3 if is_series_parallel(g) => dbcp_series_parallel(g, p)?,
        _ if q >= 2 => {
            let pair = find_separation_pairs(g)?
                .into_iter()
                .find(|sp| sp.components.iter().all(|c| q * c.len() < (q - 1) * n))
                .ok_or_else(|| fail(3, format!("precondition violated: no separation pair with every component below (q-1)n/q for q={q}")))?;
            dbcp_sep_case(g, p, q, &pair)?
        }
        _ => return Err(fail(3, "precondition violated: q must be at least 2")),
    };
    Ok(Solved { result, c_p: int(1), c_s: int(q as i64 - 1), centered: false })
}

fn same_sign(p: &Weights, k: usize, given: Option<&Vec<usize>>) -> Outcome<Vec<usize>> {
    if let Some(nodes) = given {
        if nodes.len() != k {
            return Err(fail(2, format!("--nodes needs {k} ids")));
        }
        return Ok(nodes.clone());
    }
    for sign in [1, -1] {
        let picked: Vec<usize> = (0..p.len())
            .filter(|&v| if sign > 0 { p.get(v).is_positive() } else { p.get(v).is_negative() })
            .take(k)
            .collect();
        if picked.len() == k {
            return Ok(picked);
        }
    }
    Err(fail(3, format!("precondition violated: no {k} nodes share a strict sign")))
}

fn cmd_partition(
    g: &Graph,
    p: &Weights,
    mode: Mode,
    q: usize,
    seed: u64,
    centered: bool,
    nodes: Option<&Vec<usize>>,
) -> Outcome<String> {
    let half_max = p.max_abs() * Rational::new(1.into(), 2.into());
    let doc = match mode {
        Mode::Auto | Mode::Dbcp => {
            let q = if matches!(mode, Mode::Auto) { 4 } else { q };
            let s = solve_dbcp(g, p, q, seed, centered)?;
            let part = &s.result.partition;
            if !verify_partition(g, p, part, &s.c_p, &s.c_s, s.centered)? {
                return Err(fail(1, "internal invariant failed: result does not meet its bound"));
            }
            PartitionDoc::new(part, s.result.trace_string(), s.result.seed)
        }
        Mode::Bcpi2 => {
            let uv = same_sign(p, 2, nodes)?;
            let r = bcpi_2(g, p, uv[0], uv[1])?;
            if !verify_partition(g, p, &r.partition, &half_max, &int(g.n() as i64), false)? {
                return Err(fail(1, "internal invariant failed: result does not meet its bound"));
            }
            PartitionDoc::new(&r.partition, format!("bcpi2 (u={},v={}) prefix {}", uv[0], uv[1], r.cut), 0)
        }
        Mode::Bcpi3 => {
            let t = same_sign(p, 3, nodes)?;
            let r = bcpi_3(g, p, t[0], t[1], t[2])?;
            let sums = r.partition.sums();
            let ok = r.partition.all_connected(g)
                && r.partition.sums_consistent(p)
                && sums[0].abs() <= half_max
                && sums[1].abs() <= half_max
                && sums[2].abs() <= p.max_abs();
            if !ok {
                return Err(fail(1, "internal invariant failed: result does not meet its bound"));
            }
            let trace = format!("bcpi3 (u={},v={},w={}) case {}{}", t[0], t[1], t[2], r.case, if r.mirrored { " mirrored" } else { "" });
            PartitionDoc::new(&r.partition, trace, 0)
        }
    };
    Ok(serde_json::to_string(&doc).expect("partition serializes") + "\n")
}

fn cmd_embed(g: &Graph, p: &Weights, seed: u64, with_partition: bool) -> Outcome<String> {
    let s = solve_dbcp(g, p, 4, seed, false)?;
    let points = s
        .result
        .points
        .as_ref()
        .ok_or_else(|| fail(3, "precondition violated: instance splits at a separation pair, no embedding is built"))?;
    let part = with_partition.then_some(&s.result.partition);
    Ok(render_svg(g, points, part, SvgOptions { guides: s.result.tailored.is_some() }))
}

#[derive(Serialize)]
struct FrontierDoc {
    imbalance: String,
    ratio: String,
    #[serde(rename = "V1")]
    v1: Vec<usize>,
    #[serde(rename = "V2")]
    v2: Vec<usize>,
}

#[derive(Serialize)]
struct CheckDoc {
    check: bool,
    frontier: Vec<FrontierDoc>,
}

fn oracle_cap(flag: Option<usize>) -> Outcome<usize> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("GRIDCLEAVE_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| fail(2, format!("GRIDCLEAVE_CAP is not a number: {v:?}"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn cmd_oracle(g: &Graph, p: &Weights, cap: usize, centered: bool, check: Option<&Vec<String>>) -> Outcome<String> {
    let front = best_frontier(g, p, centered, cap)?;
    let docs: Vec<FrontierDoc> = front
        .iter()
        .map(|f| FrontierDoc {
            imbalance: format_rational(&f.imbalance),
            ratio: format_rational(&f.ratio),
            v1: f.witness.part(0).to_vec(),
            v2: f.witness.part(1).to_vec(),
        })
        .collect();
    let text = match check {
        Some(bounds) => {
            let c_p = parse_rational(&bounds[0])?;
            let c_s = parse_rational(&bounds[1])?;
            let ok = front.iter().any(|f| f.imbalance <= c_p && f.ratio <= c_s);
            serde_json::to_string(&CheckDoc { check: ok, frontier: docs })
        }
        None => serde_json::to_string(&docs),
    };
    Ok(text.expect("frontier serializes") + "\n")
}

fn cmd_gen(kind: GenKind, s: usize, t: usize, n: usize, seed: u64) -> Outcome<(Graph, Weights)> {
    let bad = |e: Error| fail(2, e.to_string());
    match kind {
        GenKind::Fig1 if s == 0 => Err(fail(2, "fig1 needs s >= 1")),
        GenKind::Fig1 => Ok(gen_fig1(s, t)),
        GenKind::Random2 => gen_random(n, 2, seed).map_err(bad),
        GenKind::Random3 => gen_random(n, 3, seed).map_err(bad),
    }
}

fn run(cli: Cli) -> Outcome<()> {
    match cli.command {
        Command::Partition { input, src, mode, q, seed, centered, nodes, out } => {
            let (g, p) = load(&input, &src)?;
            let text = cmd_partition(&g, &p, mode, q, seed, centered, nodes.as_ref())?;
            emit(out.as_deref(), &text)
        }
        Command::Embed { input, src, seed, with_partition, out } => {
            let (g, p) = load(&input, &src)?;
            emit(out.as_deref(), &cmd_embed(&g, &p, seed, with_partition)?)
        }
        Command::Oracle { input, src, cap, centered, check, out } => {
            let cap = oracle_cap(cap)?;
            let (g, p) = load(&input, &src)?;
            emit(out.as_deref(), &cmd_oracle(&g, &p, cap, centered, check.as_ref())?)
        }
        Command::Gen { kind, s, t, n, seed, format, out } => {
            let (g, p) = cmd_gen(kind, s, t, n, seed)?;
            match format {
                Format::Json => emit(out.as_deref(), &(write_json(&g, &p) + "\n")),
                Format::Edgelist => {
                    let path = out.ok_or_else(|| fail(2, "edge-list output needs --out"))?;
                    let (edges, weights) = write_edge_list(&g, &p);
                    let mut wpath = path.clone().into_os_string();
                    wpath.push(".weights");
                    emit(Some(&path), &edges)?;
                    emit(Some(Path::new(&wpath)), &weights)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("gridcleave: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
