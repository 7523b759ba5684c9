//! Command-line front end: graph ingestion, per-command experiments,
//! seeded randomized suites, CSV output.
//!
//! Exit codes: 0 all checks pass, 1 violations found, 2 usage or input error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use vertex_energy::coulson::{coulson_vertex_energy, QuadratureConfig};
use vertex_energy::graph::Graph;
use vertex_energy::theorems::star_limit_sweep;
use vertex_energy::theorems::suites::{format_real, run_suite, SuiteConfig, SuiteError, SUITE_NAMES};
use vertex_energy::{b_coeffs, char_poly, eigen_sym, CharpolyError};

/// Graph energy toolkit: spectral and integral vertex energies, exact
/// characteristic polynomials, and seeded verification suites.
///
/// Graphs are read from edge-list files: `#` comment lines, a header line
/// `n m`, then `m` lines `u v` of distinct endpoints in `0..n`.
#[derive(Parser)]
#[command(name = "venergy", version, about)]
struct Cli {
    /// Seed driving all randomized suites.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Strictness margin for inequality verdicts.
    #[arg(long, global = true, default_value_t = 1e-8)]
    epsilon: f64,

    /// Tolerance for the integral-vs-spectral energy cross-check.
    #[arg(long = "quad-tol", global = true, default_value_t = 1e-6)]
    quad_tol: f64,

    /// Write CSV output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Largest random tree order in suites.
    #[arg(long = "max-tree", global = true, default_value_t = 12)]
    max_tree: usize,

    /// Largest random bipartite order in suites.
    #[arg(long = "max-bip", global = true, default_value_t = 10)]
    max_bip: usize,

    /// Randomized instances per suite.
    #[arg(long, global = true, default_value_t = 100)]
    trials: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-vertex energies by both routes.
    ///
    /// CSV columns: vertex,spectral_energy,coulson_energy,abs_diff
    /// (17 significant digits). The final row aggregates the whole graph
    /// under vertex = "total". Exits 0 iff every per-vertex difference is
    /// within --quad-tol.
    Energy { file: PathBuf },

    /// Exact characteristic polynomial and b-sequence.
    ///
    /// Line 1: ascending-power integer coefficients, space-separated.
    /// Line 2: the b-sequence "b0 b2 b4 ..." for bipartite inputs, or the
    /// word "not-bipartite".
    Charpoly { file: PathBuf },

    /// Run one named verification suite.
    ///
    /// Suites: alternation, lemma31, edge-deletion, subadd-vertex,
    /// subadd-energy, edge-cut, successive, star-limit, hnd, series-bound,
    /// balance, adjacent-product, identities, moments.
    ///
    /// CSV columns: suite,instance,item,lhs,rhs,delta,verdict. The summary
    /// line `SUITE <name> PASS|FAIL checked=<k> violations=<m>
    /// indeterminate=<j>` goes to standard error. Exits 0 iff no violation.
    Verify { suite: String },

    /// Star-coalescence energy sweep over a list of star sizes.
    ///
    /// CSV columns: n,vertex,role,energy,bound_low,bound_high,target,gap
    /// with one row per (n, tracked vertex): the merged center, one star
    /// leaf, and every other tree vertex.
    SweepStar {
        /// Tree file in edge-list format.
        file: PathBuf,
        /// Vertex of the tree identified with the star center.
        vertex: usize,
        /// Comma-separated star sizes (number of star edges), e.g. 1,2,4.
        #[arg(long = "n-list", value_delimiter = ',')]
        n_list: Vec<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Energy { file } => cmd_energy(cli, file),
        Command::Charpoly { file } => cmd_charpoly(cli, file),
        Command::Verify { suite } => cmd_verify(cli, suite),
        Command::SweepStar { file, vertex, n_list } => cmd_sweep_star(cli, file, *vertex, n_list),
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Graph::from_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes()).map_err(|e| e.to_string())
        }
    }
}

fn cmd_energy(cli: &Cli, file: &PathBuf) -> Result<ExitCode, String> {
    let g = read_graph(file)?;
    let spec = eigen_sym(&g).map_err(|e| e.to_string())?;
    let qcfg = QuadratureConfig::default();

    let mut csv = String::from("vertex,spectral_energy,coulson_energy,abs_diff\n");
    let mut all_within = true;
    let mut integral_total = 0.0;
    for v in 0..g.order() {
        let spectral = spec.vertex_energy(v);
        let integral = coulson_vertex_energy(&g, v, &qcfg).map_err(|e| e.to_string())?;
        let diff = (spectral - integral).abs();
        all_within &= diff <= cli.quad_tol;
        integral_total += integral;
        csv.push_str(&format!(
            "{v},{},{},{}\n",
            format_real(spectral),
            format_real(integral),
            format_real(diff)
        ));
    }
    let total = spec.graph_energy();
    csv.push_str(&format!(
        "total,{},{},{}\n",
        format_real(total),
        format_real(integral_total),
        format_real((total - integral_total).abs())
    ));
    emit(&cli.out, &csv)?;
    Ok(ExitCode::from(u8::from(!all_within)))
}

fn cmd_charpoly(cli: &Cli, file: &PathBuf) -> Result<ExitCode, String> {
    let g = read_graph(file)?;
    let phi = char_poly(&g);
    let b_line = match b_coeffs(&g) {
        Ok(seq) => seq
            .values
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        Err(CharpolyError::NotBipartite) => "not-bipartite".to_owned(),
        Err(e) => return Err(e.to_string()),
    };
    emit(&cli.out, &format!("{phi}\n{b_line}\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(cli: &Cli, suite: &str) -> Result<ExitCode, String> {
    let cfg = SuiteConfig {
        seed: cli.seed,
        epsilon: cli.epsilon,
        quad_rel_tol: cli.quad_tol,
        max_tree: cli.max_tree,
        max_bip: cli.max_bip,
        trials: cli.trials,
    };
    match run_suite(suite, &cfg) {
        Ok(report) => {
            emit(&cli.out, &report.to_csv())?;
            eprintln!("{}", report.summary());
            Ok(ExitCode::from(u8::from(!report.passed())))
        }
        Err(SuiteError::UnknownSuite(name)) => Err(format!(
            "unknown suite {name:?}; valid suites: {}",
            SUITE_NAMES.join(", ")
        )),
        Err(e) => Err(e.to_string()),
    }
}

fn cmd_sweep_star(cli: &Cli, file: &PathBuf, vertex: usize, n_list: &[usize]) -> Result<ExitCode, String> {
    let t = read_graph(file)?;
    if vertex >= t.order() {
        return Err(format!("vertex {vertex} out of range for order {}", t.order()));
    }
    if n_list.contains(&0) {
        return Err("star sizes must be positive".into());
    }
    let report = star_limit_sweep(&t, vertex, n_list, cli.epsilon).map_err(|e| e.to_string())?;
    let mut csv = String::from("n,vertex,role,energy,bound_low,bound_high,target,gap\n");
    let opt = |v: Option<f64>| v.map(format_real).unwrap_or_default();
    for row in &report.rows {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.star_edges,
            row.vertex,
            row.role.as_str(),
            format_real(row.energy),
            opt(row.bound_low),
            opt(row.bound_high),
            opt(row.target),
            opt(row.gap)
        ));
    }
    emit(&cli.out, &csv)?;
    Ok(ExitCode::from(u8::from(!report.passed())))
}
