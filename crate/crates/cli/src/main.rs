//! `zdq`: build zero-divisor graphs of `L_n`, report their spectra and
//! reproduce the reference tables.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage, 3 resource
//! budget, 4 numeric non-convergence, 5 I/O.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zdq::graph::BuildOptions;
use zdq::io::{write_graph, GraphFormat};
use zdq::report::{
    build_graph, spectrum_report, MethodChoice, RadiusMethod, RunReport, SpectrumOptions,
    DEFAULT_DENSE_LIMIT,
};
use zdq::spectral::{
    energy_report, twin_reduced_spectrum, two_adic_energy_bound, DEFAULT_TOL, DENSE_EIG_LIMIT,
};
use zdq::tables::{compute_table, TableId};
use zdq::verify::{verify_prime, CheckStatus, VerifyOptions};
use zdq::Error;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_NUMERIC: u8 = 4;
const EXIT_IO: u8 = 5;

#[derive(Parser)]
#[command(
    name = "zdq",
    version,
    about = "Zero-divisor graphs of Lipschitz quaternions mod n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build G_n, write it to a file and print a summary line.
    Build(BuildArgs),
    /// Spectral and invariant report for G_n.
    Spectrum(SpectrumArgs),
    /// Cross-check the structured construction against brute force.
    Verify(VerifyArgs),
    /// Recompute a reference table (all five when omitted).
    Tables(TablesArgs),
    /// Write G_n in an interchange format.
    Export(BuildArgs),
    /// Energy and its lower bounds.
    Energy(EnergyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Brute,
    Structured,
}

impl From<MethodArg> for MethodChoice {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::Brute => MethodChoice::Brute,
            MethodArg::Structured => MethodChoice::Structured,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormatArg {
    Edgelist,
    Matrixmarket,
    Graphml,
}

impl From<GraphFormatArg> for GraphFormat {
    fn from(f: GraphFormatArg) -> Self {
        match f {
            GraphFormatArg::Edgelist => GraphFormat::Edgelist,
            GraphFormatArg::Matrixmarket => GraphFormat::MatrixMarket,
            GraphFormatArg::Graphml => GraphFormat::Graphml,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: GraphFormatArg,
    /// Output path; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Lift the brute-force pair-test budget.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Lift the build budget and raise the dense eigensolve limit to 2500 vertices.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct TablesArgs {
    /// odd-primes, two-adic, complexity, energy-odd or energy-two-adic.
    which: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct EnergyTarget {
    /// Odd prime: decomposition through the reduced matrix.
    #[arg(long)]
    p: Option<u32>,
    /// Exponent of n = 2^t: clique bound and the energy through the twin quotient.
    #[arg(long)]
    t: Option<u32>,
    /// Any modulus: energy through the twin quotient.
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Args)]
struct EnergyArgs {
    #[command(flatten)]
    target: EnergyTarget,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long)]
    allow_large: bool,
}

/// Failure of a command: an error to classify or a verification mismatch.
enum Failure {
    Error(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Error(Error::Io(e))
    }
}

type CmdResult = Result<(), Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Usage(_) | Error::Domain(_) | Error::Parse(_) => EXIT_USAGE,
        Error::Resource { .. } => EXIT_RESOURCE,
        Error::Numeric { .. } => EXIT_NUMERIC,
        Error::Io(_) => EXIT_IO,
    }
}

fn dense_limit(allow_large: bool) -> usize {
    if allow_large {
        DENSE_EIG_LIMIT
    } else {
        DEFAULT_DENSE_LIMIT
    }
}

fn build_options(allow_large: bool) -> BuildOptions {
    if allow_large {
        BuildOptions::allow_large()
    } else {
        BuildOptions::default()
    }
}

/// A buffered sink on `path`, or standard output.
fn open_output(path: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            let f = File::create(p).map_err(|e| {
                io::Error::new(e.kind(), format!("cannot write {}: {e}", p.display()))
            })?;
            Box::new(BufWriter::new(f))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_graph_file(args: &BuildArgs, summary: bool) -> CmdResult {
    let g = build_graph(args.n, args.method.into(), &build_options(args.allow_large))?;
    let mut out = open_output(args.out.as_ref())?;
    write_graph(&g, args.format.into(), &mut out)?;
    out.flush()?;
    if summary {
        let line = format!(
            "n={} vertices={} edges={} method={} decision_tests={}",
            args.n,
            g.num_vertices(),
            g.num_edges(),
            g.method(),
            g.decision_tests()
        );
        // keep the graph stream clean when it goes to standard output
        if args.out.is_some() {
            println!("{line}");
        } else {
            eprintln!("{line}");
        }
    }
    Ok(())
}

fn text_report(r: &RunReport) -> String {
    let mut s = String::new();
    let opt = |x: Option<String>| x.unwrap_or_else(|| "not computed".into());
    s += &format!("n = {} ({} build)\n", r.n, r.method);
    s += &format!("vertices = {}, edges = {}\n", r.num_vertices, r.num_edges);
    let hist: Vec<String> = r
        .degree_histogram
        .iter()
        .map(|(d, c)| format!("{d}: {c}"))
        .collect();
    s += &format!("degrees = {{{}}}\n", hist.join(", "));
    s += &format!(
        "spectral radius = {}\n",
        opt(r
            .spectral_radius
            .map(|x| format!("{:.10} ({})", x.value, radius_method(x.method))))
    );
    if let Some(b) = r.nullity_bound {
        s += &format!(
            "nullity >= {b}, observed {}\n",
            opt(r.observed_nullity.map(|x| x.to_string()))
        );
    }
    if let Some(b) = r.minus_one_bound {
        s += &format!(
            "multiplicity of -1 >= {b}, observed {}\n",
            opt(r.observed_minus_one.map(|x| x.to_string()))
        );
    }
    if let Some(eig) = &r.eigenvalues {
        let parts: Vec<String> = eig
            .iter()
            .map(|g| {
                if g.multiplicity == 1 {
                    format!("{:.6}", g.value)
                } else {
                    format!("{:.6} x{}", g.value, g.multiplicity)
                }
            })
            .collect();
        s += &format!("eigenvalues = {}\n", parts.join(", "));
    }
    s += &format!(
        "energy = {}\n",
        opt(r.energy.value.map(|e| format!("{e:.4}")))
    );
    for (name, v) in [
        ("2 rho", r.energy.bound_two_rho),
        ("2|E|/rho", r.energy.bound_edges_over_rho),
        ("L_Q", r.energy.bound_quotient),
        ("L_M", r.energy.bound_moment),
        ("clique", r.energy.bound_two_adic),
    ] {
        if let Some(v) = v {
            s += &format!("  energy bound {name} = {v:.4}\n");
        }
    }
    s += &format!("diameter = {}\n", opt(r.diameter.map(|d| d.to_string())));
    s += &format!("girth = {}\n", r.girth);
    if let Some(c) = &r.clique_bound {
        s += &format!(
            "clique of order {} gives rho >= {} and |E| >= {}\n",
            c.clique_size, c.rho_lb, c.edge_lb
        );
    }
    if let Some(x) = &r.odd_prime {
        s += &format!(
            "quotient matrix = {:?}, cells {:?}\n",
            x.quotient_matrix.entries, x.quotient_matrix.cell_sizes
        );
        s += &format!(
            "factorization: lambda^{} (lambda+1)^{} chi_B (order {}), rank <= {}\n",
            x.zero_multiplicity, x.minus_one_multiplicity, x.reduced_order, x.rank_bound
        );
    }
    s
}

fn radius_method(m: RadiusMethod) -> &'static str {
    match m {
        RadiusMethod::ClosedForm => "closed form",
        RadiusMethod::DenseSolve => "dense eigensolve",
        RadiusMethod::PowerIteration => "power iteration",
    }
}

fn cmd_spectrum(args: &SpectrumArgs) -> CmdResult {
    let opts = SpectrumOptions {
        tol: args.tol,
        allow_large: args.allow_large,
        method: args.method.into(),
    };
    let r = spectrum_report(args.n, &opts)?;
    let mut out = open_output(args.out.as_ref())?;
    match args.format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, &r).map_err(io::Error::other)?;
            writeln!(out)?;
        }
        ReportFormat::Text => write!(out, "{}", text_report(&r))?,
    }
    out.flush()?;
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let opts = VerifyOptions {
        build: build_options(args.allow_large),
        dense_limit: dense_limit(args.allow_large),
    };
    let r = verify_prime(args.p, &opts)?;
    for c in &r.checks {
        let tag = match c.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "SKIP",
        };
        println!("{tag} {}: {}", c.name, c.detail);
    }
    println!(
        "p={} brute_pair_tests={} type_tests={}",
        r.p, r.brute_pair_tests, r.type_tests
    );
    match r.first_failure() {
        None => Ok(()),
        Some(c) => Err(Failure::Mismatch(format!(
            "{} failed: {}",
            c.name, c.detail
        ))),
    }
}

fn cmd_tables(args: &TablesArgs) -> CmdResult {
    let ids = match &args.which {
        Some(w) => vec![TableId::parse(w)?],
        None => TableId::ALL.to_vec(),
    };
    let mut mismatches = 0;
    for (i, id) in ids.iter().enumerate() {
        let t = compute_table(*id)?;
        if i > 0 {
            println!();
        }
        print!("{t}");
        mismatches += t.mismatches();
    }
    if mismatches > 0 {
        return Err(Failure::Mismatch(format!(
            "{mismatches} cells differ from the reference"
        )));
    }
    Ok(())
}

fn cmd_energy(args: &EnergyArgs) -> CmdResult {
    let t = &args.target;
    let value = if let Some(p) = t.p {
        serde_json::to_value(energy_report(p, args.tol)?).map_err(io::Error::other)?
    } else if let Some(t) = t.t {
        // the vertex count enumerates all 2^(4t) ring elements
        if t == 0 || t > 6 {
            return Err(Error::Usage(format!("t must be in 1..=6, got {t}")).into());
        }
        let n = 1u32 << t;
        let bound = if t >= 2 {
            Some(two_adic_energy_bound(t)?)
        } else {
            None
        };
        let vertices = zdq::ring::count_vertices(&zdq::ring::Modulus::new(n)?);
        // past the budget only the bound is reported
        let direct = match build_graph(n, MethodChoice::Brute, &build_options(args.allow_large))
            .and_then(|g| twin_reduced_spectrum(&g, args.tol, dense_limit(args.allow_large)))
        {
            Ok(s) => Some(s.energy()),
            Err(Error::Resource { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        serde_json::json!({ "t": t, "n": n, "num_vertices": vertices, "lower_bound": bound, "energy": direct })
    } else {
        let n = t.n.expect("clap requires one target");
        let g = build_graph(n, MethodChoice::Auto, &build_options(args.allow_large))?;
        let e = twin_reduced_spectrum(&g, args.tol, dense_limit(args.allow_large))?.energy();
        serde_json::json!({ "n": n, "num_vertices": g.num_vertices(), "energy": e })
    };
    match args.format {
        ReportFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&value).map_err(io::Error::other)?
            )
        }
        ReportFormat::Text => {
            if let Some(obj) = value.as_object() {
                for (k, v) in obj {
                    println!("{k} = {}", render_value(v));
                }
            }
        }
    }
    Ok(())
}

fn render_value(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::Null => "not computed".into(),
        serde_json::Value::Number(x) if x.is_f64() => {
            format!("{:.4}", x.as_f64().unwrap_or(f64::NAN))
        }
        other => other.to_string(),
    }
}

fn run(cli: Cli) -> CmdResult {
    match &cli.command {
        Command::Build(a) => write_graph_file(a, true),
        Command::Export(a) => write_graph_file(a, false),
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Tables(a) => cmd_tables(a),
        Command::Energy(a) => cmd_energy(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("zdq: mismatch: {msg}");
            ExitCode::from(EXIT_MISMATCH)
        }
        Err(Failure::Error(e)) => {
            eprintln!("zdq: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
