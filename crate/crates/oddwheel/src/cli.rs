//! The `oddwheel` command line.
//!
//! Exit codes: 0 success, 1 a checked property does not hold (for example a
//! wheel was found), 2 usage or input error, 3 internal verification failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use oddwheel_core::bounds::ex_w5;
use oddwheel_core::constructions::{
    ex_w5_graph, select_s, spex_candidate, u_family, yuan_extremal, CandidateSpec, ConstructionError,
};
use oddwheel_core::detect::{find_odd_wheel, is_wheel_free};
use oddwheel_core::graph6;
use oddwheel_core::search::{Objective, SearchError, SearchOptions, DEFAULT_SPEX_TOL};
use oddwheel_core::spectral::{
    char_poly_ps, check_identities, largest_root, pi_matrix, q_matrix_radius, QuotientError, SpectralError,
    SpectralResult, DEFAULT_TOL,
};
use oddwheel_core::{Graph, HalfInt, Rational};

use crate::input::{read_graph6, write_graph6, InputError, Located};
use crate::parallel::run_parallel;
use crate::report::{fmt12, round12, round12_all, search_csv_row, search_json, Envelope, SEARCH_CSV_HEADER};
use crate::settings::{Settings, MAX_ITER_ENV, TOL_ENV};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "oddwheel", version, about = "Extremal and spectral computations for odd-wheel-free graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Graph6,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Tolerance: eigensolver residual, or the tie tolerance for `bruteforce`
    #[arg(long, env = TOL_ENV)]
    pub tol: Option<f64>,
    /// Power-iteration step budget
    #[arg(long, env = MAX_ITER_ENV)]
    pub max_iter: Option<usize>,
    /// Recorded in every report
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Format written to stdout
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the JSON report (graph6 for `construct`) to this file
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Leave the wall time out of reports
    #[arg(long)]
    pub no_timestamp: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Spex,
    ExW5,
    Yuan,
    U,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Ex,
    Spex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build extremal or candidate graphs
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Part offset `s` (`auto`, or comma-separated values such as `0,1/2`)
        #[arg(long, default_value = "auto")]
        s: String,
        /// Order of the `u` family member
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Report whether graphs contain W_{2k+1}
    Check {
        /// graph6 files, `-` for stdin
        inputs: Vec<PathBuf>,
        /// graph6 strings given inline
        #[arg(long)]
        graph: Vec<String>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Check every k with 2k + 1 <= n
        #[arg(long)]
        all_k: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Spectral radius by certified power iteration
    Spectrum {
        inputs: Vec<PathBuf>,
        #[arg(long)]
        graph: Vec<String>,
        /// Include the Perron vector
        #[arg(long)]
        vector: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Quotient matrix, cubic and largest root for (n, k, s)
    Quotient {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "auto")]
        s: String,
        /// Check the exact polynomial identities (on a 50-point grid if n, k are absent)
        #[arg(long)]
        identities: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Exhaustive ex / spex search for tiny n
    Bruteforce {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Mode::Ex)]
        mode: Mode,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Isomorph-reduced generation (allows n = 8)
        #[arg(long)]
        iso: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Compare candidate spectral radii across s
    Compare {
        /// One or more orders, comma-separated
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long)]
        k: usize,
        /// Values of s to compare (default: the selected ones)
        #[arg(long, value_delimiter = ',')]
        s: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Verification(_) => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Spectral(_) | SearchError::Verification(_) => CliError::Internal(e.to_string()),
            SearchError::SizeLimit { isomorph_reduced: false, n, .. } if n <= oddwheel_core::search::MAX_ISO => {
                CliError::Usage(format!("{e} (pass --iso for isomorph-reduced search)"))
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::NonConvergence { .. } => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<QuotientError> for CliError {
    fn from(e: QuotientError) -> Self {
        match e {
            QuotientError::Bracket => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// What a command prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit code; output goes to stdout and stderr.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

pub fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Construct { family, n, k, s, m, common } => construct(family, n, k, &s, m, &common),
        Command::Check { inputs, graph, k, all_k, common } => check(&inputs, &graph, k, all_k, &common),
        Command::Spectrum { inputs, graph, vector, common } => spectrum(&inputs, &graph, vector, &common),
        Command::Quotient { n, k, s, identities, common } => quotient(n, k, &s, identities, &common),
        Command::Bruteforce { n, k, mode, threads, iso, common } => bruteforce(n, k, mode, threads, iso, &common),
        Command::Compare { n, k, s, common } => compare(&n, k, &s, &common),
    }
}

fn settings(common: &Common, default_tol: f64) -> Result<Settings, CliError> {
    let tol = common.tol.unwrap_or(default_tol);
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Usage(format!("--tol must be positive and finite, got {tol}")));
    }
    if common.max_iter == Some(0) {
        return Err(CliError::Usage("--max-iter must be positive".into()));
    }
    Ok(Settings::new(tol, common.max_iter, common.seed))
}

fn elapsed(common: &Common, start: Instant) -> Option<f64> {
    (!common.no_timestamp).then(|| start.elapsed().as_secs_f64())
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required")))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn parse_s_list(text: &str) -> Result<Vec<HalfInt>, CliError> {
    text.split(',')
        .map(|t| t.trim().parse::<HalfInt>().map_err(|e| CliError::Usage(format!("--s {t:?}: {e}"))))
        .collect()
}

fn solve(settings: &Settings, g: &Graph) -> Result<SpectralResult, CliError> {
    Ok(settings.solver().run(g)?)
}

fn emit<T: Serialize>(
    command: &str,
    common: &Common,
    settings: &Settings,
    result: T,
    wall_time: Option<f64>,
    text: String,
    write_json_to_output: bool,
) -> Result<String, CliError> {
    let json = Envelope::new(command, settings, result, wall_time).to_json();
    if write_json_to_output {
        if let Some(path) = &common.output {
            write_file(path, &json)?;
        }
    }
    Ok(match common.format {
        Format::Json => json,
        _ => text,
    })
}

#[derive(Debug, Serialize)]
struct GraphJson {
    graph6: String,
    n: usize,
    edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<String>,
    lambda1: f64,
    residual: f64,
    iterations: usize,
    wheel_free: bool,
}

#[derive(Debug, Serialize)]
struct ConstructJson {
    family: &'static str,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    selected_s: Vec<String>,
    verified: bool,
    graphs: Vec<GraphJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    winner: Option<usize>,
}

fn construct(
    family: Family,
    n: Option<usize>,
    k: Option<usize>,
    s: &str,
    m: Option<usize>,
    common: &Common,
) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let settings = settings(common, DEFAULT_TOL)?;
    let mut selected = Vec::new();
    let (name, k_used, graphs): (&str, usize, Vec<(Option<HalfInt>, Graph)>) = match family {
        Family::Spex => {
            let (n, k) = (need(n, "n")?, need(k, "k")?);
            selected = if s == "auto" { select_s(n, k) } else { parse_s_list(s)? };
            let mut out = Vec::new();
            for &s in &selected {
                out.push((Some(s), spex_candidate(n, k, s)?));
            }
            ("spex", k, out)
        }
        Family::ExW5 => ("ex-w5", 2, ex_w5_graph(need(n, "n")?)?.into_iter().map(|g| (None, g)).collect()),
        Family::Yuan => {
            let k = need(k, "k")?;
            ("yuan", k, yuan_extremal(need(n, "n")?, k)?.into_iter().map(|g| (None, g)).collect())
        }
        Family::U => {
            let k = need(k, "k")?;
            ("u", k, vec![(None, u_family(k, need(m, "m")?)?)])
        }
    };
    let mut rows = Vec::new();
    for (s, g) in &graphs {
        let r = solve(&settings, g)?;
        rows.push(GraphJson {
            graph6: graph6::encode(g),
            n: g.order(),
            edges: g.edge_count(),
            s: s.map(|s| s.to_string()),
            lambda1: round12(r.lambda1),
            residual: r.residual,
            iterations: r.iterations,
            wheel_free: is_wheel_free(g, k_used),
        });
    }
    let mut verified = rows.iter().all(|r| r.wheel_free);
    if family == Family::ExW5 {
        verified &= rows.iter().all(|r| r.edges as u64 == ex_w5(r.n));
    }
    let winner = (rows.len() > 1 && family == Family::Spex).then(|| {
        (0..rows.len()).fold(0, |best, i| if rows[i].lambda1 > rows[best].lambda1 { i } else { best })
    });
    let mut text = String::new();
    for (i, r) in rows.iter().enumerate() {
        let s = r.s.as_ref().map(|s| format!(" s={s}")).unwrap_or_default();
        let mark = if winner == Some(i) { " (largest)" } else { "" };
        writeln!(
            text,
            "{name}[{i}]{s}: n={} edges={} lambda1={}{mark} wheel-free={}",
            r.n,
            r.edges,
            fmt12(r.lambda1),
            r.wheel_free
        )
        .unwrap();
        writeln!(text, "{}", r.graph6).unwrap();
    }
    if common.format == Format::Graph6 {
        text = rows.iter().map(|r| format!("{}\n", r.graph6)).collect();
    }
    let result = ConstructJson {
        family: name,
        n: rows.first().map_or(0, |r| r.n),
        k: (family != Family::ExW5).then_some(k_used),
        selected_s: selected.iter().map(|s| s.to_string()).collect(),
        verified,
        graphs: rows,
        winner,
    };
    if let Some(path) = &common.output {
        let gs: Vec<Graph> = graphs.into_iter().map(|(_, g)| g).collect();
        write_graph6(path, &gs).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let mut sidecar = path.clone().into_os_string();
        sidecar.push(".json");
        let json = Envelope::new("construct", &settings, &result, elapsed(common, start)).to_json();
        write_file(Path::new(&sidecar), &json)?;
    }
    let stdout = emit("construct", common, &settings, &result, elapsed(common, start), text, false)?;
    if !verified {
        return Err(CliError::Internal(format!("constructed {name} graph failed verification")));
    }
    Ok(Outcome { stdout, code: EXIT_OK })
}

fn gather(inputs: &[PathBuf], inline: &[String]) -> Result<Vec<Located>, CliError> {
    let mut out = Vec::new();
    for (i, g) in inline.iter().enumerate() {
        let graph = graph6::decode(g).map_err(|e| CliError::Usage(format!("--graph #{}: {e}", i + 1)))?;
        out.push(Located { source: "--graph".into(), line: i + 1, graph });
    }
    let default = [PathBuf::from("-")];
    let paths = if inputs.is_empty() && inline.is_empty() { &default[..] } else { inputs };
    for p in paths {
        out.extend(read_graph6(p)?);
    }
    Ok(out)
}

#[derive(Debug, Serialize)]
struct WitnessJson {
    hub: usize,
    rim: Vec<usize>,
}

#[derive(Debug, Serialize)]
struct KCheckJson {
    k: usize,
    wheel_free: bool,
    witness: Option<WitnessJson>,
}

#[derive(Debug, Serialize)]
struct CheckJson {
    source: String,
    line: usize,
    graph6: String,
    n: usize,
    edges: usize,
    checks: Vec<KCheckJson>,
}

#[derive(Debug, Serialize)]
struct CheckReportJson {
    all_wheel_free: bool,
    graphs: Vec<CheckJson>,
}

fn check(inputs: &[PathBuf], inline: &[String], k: usize, all_k: bool, common: &Common) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let settings = settings(common, DEFAULT_TOL)?;
    if k < 2 {
        return Err(CliError::Usage(format!("--k must be at least 2, got {k}")));
    }
    let graphs = gather(inputs, inline)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut all_free = true;
    for item in graphs {
        let g = &item.graph;
        let ks: Vec<usize> = if all_k { (2..=g.order().saturating_sub(1) / 2).collect() } else { vec![k] };
        let mut checks = Vec::new();
        for k in ks {
            let w = find_odd_wheel(g, k);
            let label = format!("W_{}", 2 * k + 1);
            match &w {
                Some(w) => writeln!(
                    text,
                    "{}:{}: contains {label}: hub {} rim {:?}",
                    item.source, item.line, w.hub, w.rim
                ),
                None => writeln!(text, "{}:{}: {label}-free", item.source, item.line),
            }
            .unwrap();
            all_free &= w.is_none();
            checks.push(KCheckJson { k, wheel_free: w.is_none(), witness: w.map(|w| WitnessJson { hub: w.hub, rim: w.rim }) });
        }
        if checks.is_empty() {
            writeln!(text, "{}:{}: too small to contain an odd wheel", item.source, item.line).unwrap();
        }
        rows.push(CheckJson {
            source: item.source.clone(),
            line: item.line,
            graph6: graph6::encode(g),
            n: g.order(),
            edges: g.edge_count(),
            checks,
        });
    }
    let result = CheckReportJson { all_wheel_free: all_free, graphs: rows };
    let stdout = emit("check", common, &settings, result, elapsed(common, start), text, true)?;
    Ok(Outcome { stdout, code: if all_free { EXIT_OK } else { EXIT_VIOLATION } })
}

#[derive(Debug, Serialize)]
struct SpectrumJson {
    source: String,
    line: usize,
    n: usize,
    edges: usize,
    lambda1: f64,
    residual: f64,
    iterations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    vector: Option<Vec<f64>>,
}

fn spectrum(inputs: &[PathBuf], inline: &[String], vector: bool, common: &Common) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let settings = settings(common, DEFAULT_TOL)?;
    let graphs = gather(inputs, inline)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for item in graphs {
        let r = settings.solver().run(&item.graph).map_err(|e| match e {
            SpectralError::NonConvergence { estimate, residual, iterations } => CliError::Internal(format!(
                "{}:{}: no convergence after {iterations} steps; best estimate {} (residual {residual:e})",
                item.source,
                item.line,
                fmt12(estimate)
            )),
            other => CliError::Usage(format!("{}:{}: {other}", item.source, item.line)),
        })?;
        writeln!(
            text,
            "{}:{}: lambda1={} residual={:e} iterations={}",
            item.source,
            item.line,
            fmt12(r.lambda1),
            r.residual,
            r.iterations
        )
        .unwrap();
        if vector {
            let v: Vec<String> = r.vector.iter().map(|&x| fmt12(x)).collect();
            writeln!(text, "  vector: [{}]", v.join(", ")).unwrap();
        }
        rows.push(SpectrumJson {
            source: item.source,
            line: item.line,
            n: item.graph.order(),
            edges: item.graph.edge_count(),
            lambda1: round12(r.lambda1),
            residual: r.residual,
            iterations: r.iterations,
            vector: vector.then(|| round12_all(&r.vector)),
        });
    }
    let stdout = emit("spectrum", common, &settings, rows, elapsed(common, start), text, true)?;
    Ok(Outcome { stdout, code: EXIT_OK })
}

fn rat_str(r: Rational) -> String {
    r.to_string()
}

#[derive(Debug, Serialize)]
struct CrossCheckJson {
    equitable: bool,
    graph_lambda1: f64,
    deviation: f64,
    agrees: bool,
}

#[derive(Debug, Serialize)]
struct QuotientJson {
    n: usize,
    k: usize,
    s: String,
    parts: (usize, usize),
    pi: Vec<Vec<String>>,
    /// `[1, c2, c1, c0]`
    coefficients: Vec<String>,
    largest_root: f64,
    mu: f64,
    eta: f64,
    cross_check: Option<CrossCheckJson>,
}

#[derive(Debug, Serialize)]
struct IdentityJson {
    n: usize,
    k: usize,
    half: bool,
    one: bool,
    zero_one: bool,
}

/// Tolerance for the quotient-root versus eigensolver cross-check.
const CROSS_CHECK_TOL: f64 = 1e-8;

fn quotient(n: Option<usize>, k: Option<usize>, s: &str, identities: bool, common: &Common) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let settings = settings(common, DEFAULT_TOL)?;
    if identities {
        let grid: Vec<(usize, usize)> = match (n, k) {
            (Some(n), Some(k)) => vec![(n, k)],
            (None, None) => (1..=10).flat_map(|i| (3..=7).map(move |k| (10 * i, k))).collect(),
            _ => return Err(CliError::Usage("--identities takes both --n and --k, or neither".into())),
        };
        let mut text = String::new();
        let mut rows = Vec::new();
        for (n, k) in grid {
            let c = check_identities(n, k);
            writeln!(
                text,
                "n={n} k={k}: P_1/2-P_-1/2=-2 {} P_1-P_-1=-4 {} P_0-P_1=3-lambda {}",
                ok(c.half),
                ok(c.one),
                ok(c.zero_one)
            )
            .unwrap();
            rows.push(IdentityJson { n, k, half: c.half, one: c.one, zero_one: c.zero_one });
        }
        let all = rows.iter().all(|r| r.half && r.one && r.zero_one);
        writeln!(text, "{} of {} grid points pass", rows.iter().filter(|r| r.half && r.one && r.zero_one).count(), rows.len())
            .unwrap();
        let stdout = emit("quotient", common, &settings, rows, elapsed(common, start), text, true)?;
        return Ok(Outcome { stdout, code: if all { EXIT_OK } else { EXIT_VIOLATION } });
    }
    let (n, k) = (need(n, "n")?, need(k, "k")?);
    if k < 3 {
        return Err(CliError::Usage(format!("--k must be at least 3, got {k}")));
    }
    let values = if s == "auto" { select_s(n, k) } else { parse_s_list(s)? };
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut disagree = false;
    for s in values {
        let pi = pi_matrix(n, k, s)?;
        let p = char_poly_ps(n, k, s)?;
        let root = largest_root(&p)?;
        let (mu, eta) = q_matrix_radius(n, k, s)?;
        let cross = match CandidateSpec::new(n, k, s) {
            Ok(spec) => {
                let g = spex_candidate(n, k, s)?;
                let l = solve(&settings, &g)?.lambda1;
                let dev = (l - root).abs();
                let agrees = dev <= CROSS_CHECK_TOL;
                disagree |= spec.is_equitable() && !agrees;
                Some(CrossCheckJson { equitable: spec.is_equitable(), graph_lambda1: round12(l), deviation: dev, agrees })
            }
            Err(_) => None,
        };
        let pi_rows: Vec<Vec<String>> = pi.rows().into_iter().map(|r| r.into_iter().map(rat_str).collect()).collect();
        let coefficients = vec!["1".to_string(), rat_str(p.c2), rat_str(p.c1), rat_str(p.c0)];
        writeln!(text, "n={n} k={k} s={s}").unwrap();
        for r in &pi_rows {
            writeln!(text, "  [{}]", r.join(", ")).unwrap();
        }
        writeln!(text, "  P_s coefficients: {}", coefficients.join(", ")).unwrap();
        writeln!(text, "  largest root: {}", fmt12(root)).unwrap();
        writeln!(text, "  mu_s: {}  eta: {}", fmt12(mu), fmt12(eta)).unwrap();
        if let Some(c) = &cross {
            writeln!(
                text,
                "  candidate lambda1: {} deviation {:e} ({}equitable)",
                fmt12(c.graph_lambda1),
                c.deviation,
                if c.equitable { "" } else { "not " }
            )
            .unwrap();
        }
        let parts = pi.entry(1, 0).to_integer() as usize;
        rows.push(QuotientJson {
            n,
            k,
            s: s.to_string(),
            parts: (parts, n - parts),
            pi: pi_rows,
            coefficients,
            largest_root: round12(root),
            mu: round12(mu),
            eta: round12(eta),
            cross_check: cross.map(|c| CrossCheckJson { deviation: round12(c.deviation), ..c }),
        });
    }
    let stdout = emit("quotient", common, &settings, rows, elapsed(common, start), text, true)?;
    if disagree {
        return Err(CliError::Internal("largest root and eigensolver disagree on an equitable candidate".into()));
    }
    Ok(Outcome { stdout, code: EXIT_OK })
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILS"
    }
}

fn bruteforce(n: usize, k: usize, mode: Mode, threads: usize, iso: bool, common: &Common) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let (objective, default_tol) = match mode {
        Mode::Ex => (Objective::Edges, DEFAULT_SPEX_TOL),
        Mode::Spex => (Objective::Lambda1, DEFAULT_SPEX_TOL),
    };
    let settings = settings(common, default_tol)?;
    if threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    let opts = SearchOptions { isomorph_reduced: iso, tol: settings.tol };
    let report = run_parallel(n, k, objective, &opts, threads)?;
    let wall = elapsed(common, start);
    let json = search_json(&report, &settings, wall);
    if let Some(path) = &common.output {
        write_file(path, &json)?;
    }
    let stdout = match common.format {
        Format::Json => json,
        Format::Csv => format!("{SEARCH_CSV_HEADER}\n{}\n", search_csv_row(&report, wall)),
        Format::Graph6 => report.argmax.iter().map(|g| format!("{g}\n")).collect(),
        Format::Text => {
            let mut t = String::new();
            let optimum = match report.optimum {
                oddwheel_core::search::Optimum::Exact(v) => v.to_string(),
                oddwheel_core::search::Optimum::Real { value, tol } => format!("{} (ties within {tol:e})", fmt12(value)),
            };
            writeln!(t, "n={n} k={k} objective={} optimum={optimum}", report.objective.as_str()).unwrap();
            writeln!(t, "scanned={} wheel-free={}", report.graphs_scanned, report.wheel_free_count).unwrap();
            for g in &report.argmax {
                writeln!(t, "  {g}").unwrap();
            }
            t
        }
    };
    Ok(Outcome { stdout, code: EXIT_OK })
}

#[derive(Debug, Serialize)]
struct CompareRow {
    n: usize,
    k: usize,
    s: String,
    lambda1: f64,
    largest: bool,
}

#[derive(Debug, Serialize)]
struct GapRow {
    n: usize,
    gap: f64,
    gap_times_n: f64,
}

#[derive(Debug, Serialize)]
struct CompareJson {
    rows: Vec<CompareRow>,
    gaps: Vec<GapRow>,
}

fn compare(ns: &[usize], k: usize, s: &[String], common: &Common) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let settings = settings(common, DEFAULT_TOL)?;
    let explicit: Option<Vec<HalfInt>> = if s.is_empty() {
        None
    } else {
        Some(s.iter().map(|t| parse_s_list(t)).collect::<Result<Vec<_>, _>>()?.concat())
    };
    let mut rows = Vec::new();
    let mut gaps = Vec::new();
    let mut text = String::from("n\tk\ts\tlambda1\n");
    for &n in ns {
        let values = explicit.clone().unwrap_or_else(|| select_s(n, k));
        let mut lambdas = Vec::new();
        for &s in &values {
            let g = spex_candidate(n, k, s)?;
            lambdas.push((s, solve(&settings, &g)?.lambda1));
        }
        let best = lambdas.iter().map(|x| x.1).fold(f64::NEG_INFINITY, f64::max);
        let worst = lambdas.iter().map(|x| x.1).fold(f64::INFINITY, f64::min);
        for &(s, l) in &lambdas {
            let largest = lambdas.len() > 1 && l == best;
            writeln!(text, "{n}\t{k}\t{s}\t{}{}", fmt12(l), if largest { "\t(largest)" } else { "" }).unwrap();
            rows.push(CompareRow { n, k, s: s.to_string(), lambda1: round12(l), largest });
        }
        if lambdas.len() > 1 {
            let gap = best - worst;
            writeln!(text, "n={n}: gap {:e}, gap*n {}", round12(gap), fmt12(gap * n as f64)).unwrap();
            gaps.push(GapRow { n, gap: round12(gap), gap_times_n: round12(gap * n as f64) });
        }
    }
    if common.format == Format::Csv {
        text = String::from("n,k,s,lambda1,largest\n");
        for r in &rows {
            writeln!(text, "{},{},{},{},{}", r.n, r.k, r.s, r.lambda1, r.largest).unwrap();
        }
    }
    let result = CompareJson { rows, gaps };
    let stdout = emit("compare", common, &settings, result, elapsed(common, start), text, true)?;
    Ok(Outcome { stdout, code: EXIT_OK })
}
