use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cyclecount::corpus::default_corpus;
use cyclecount::engine::{cycle_polynomial_with, BlockWeightTable, EngineConfig};
use cyclecount::families::{Source, Truth};
use cyclecount::oracle::{brute_force_polynomial_with, OracleConfig};
use cyclecount::report::{expectation_mismatches, list_registry, parse_expectations, run_registry};
use cyclecount::stats::{asymptotic_scan, conjecture_scan, moments_from_polynomial, shape_analysis, ScanFamily};
use cyclecount::{CyclePolynomial, Error, Family, LabeledGraph};

#[derive(Parser)]
#[command(name = "cyclecount", version, about = "Exact graphical r-cycle polynomials and claim verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Vertex guard for both the oracle and the engine; overrides CYCLECOUNT_MAX_N.
    #[arg(long, global = true)]
    max_n: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Cycle polynomial of a family or a JSON graph.
    Poly {
        #[command(flatten)]
        input: GraphInput,
        /// Also print exact moments.
        #[arg(long)]
        moments: bool,
    },
    /// Exact mean and variance of the block count, plus coefficient shape.
    Moments {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Check every registered claim against ground truth.
    Verify {
        /// Ground truth from the brute-force oracle (engine above its limit).
        #[arg(long, conflicts_with = "engine")]
        oracle: bool,
        /// Ground truth from the engine (default).
        #[arg(long)]
        engine: bool,
        /// Only claims whose id contains one of these substrings.
        #[arg(long = "claim")]
        claims: Vec<String>,
        /// JSON object mapping claim ids to expected verdicts; any difference exits 1.
        #[arg(long)]
        expect: Option<PathBuf>,
        /// List the registry without evaluating it.
        #[arg(long)]
        list: bool,
    },
    /// Asymptotic slope scans or the conjecture scan.
    Scan {
        /// path, cycle, complete, complement_path, complement_cycle, star, double_star.
        #[arg(long, required_unless_present = "conjectures")]
        family: Option<String>,
        /// Orders as FIRST:LAST (both endpoints) or a comma list.
        #[arg(long, default_value = "100:400")]
        n: String,
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Shape and r-monotonicity scan over a corpus instead.
        #[arg(long)]
        conjectures: bool,
        /// Corpus for --conjectures; only `default` exists.
        #[arg(long, default_value = "default")]
        corpus: String,
    },
    /// Time the block-weight table and the polynomial.
    Bench {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 1)]
        repeat: usize,
    },
}

#[derive(Args)]
struct GraphInput {
    /// NAME:SIZE[,SIZE], e.g. path:5, tadpole:4,2, wheel_hub_last:5.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    family: Option<String>,
    /// Graph JSON: {"n": .., "edges": [[u, v], ..], "r": ..}.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Restricted prefix size; defaults to the file's r, or 0 for families.
    #[arg(long)]
    r: Option<usize>,
    /// Brute-force oracle instead of the engine.
    #[arg(long, conflicts_with = "engine")]
    oracle: bool,
    /// Subset-DP engine (default).
    #[arg(long)]
    engine: bool,
}

struct Limits {
    engine: EngineConfig,
    oracle: OracleConfig,
}

impl Limits {
    fn new(max_n: Option<usize>) -> Self {
        let mut engine = EngineConfig::from_env();
        let mut oracle = OracleConfig::from_env();
        if let Some(n) = max_n {
            engine.max_n = n;
            oracle.max_n = n;
        }
        Limits { engine, oracle }
    }
}

impl GraphInput {
    fn load(&self) -> Result<(String, LabeledGraph), Error> {
        let (name, g) = match (&self.family, &self.file) {
            (Some(f), _) => {
                let family: Family = f.parse()?;
                (family.to_string(), family.build()?)
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                (path.display().to_string(), LabeledGraph::from_json(&text)?)
            }
            (None, None) => return Err(Error::Parameter("need --family or --file".into())),
        };
        let g = match self.r {
            Some(r) => g.with_r(r)?,
            None => g,
        };
        Ok((name, g))
    }

    fn source(&self) -> &'static str {
        if self.oracle {
            "oracle"
        } else {
            "engine"
        }
    }

    fn polynomial(&self, g: &LabeledGraph, limits: &Limits) -> Result<CyclePolynomial, Error> {
        if self.oracle {
            brute_force_polynomial_with(g, &limits.oracle)
        } else {
            cycle_polynomial_with(g, &limits.engine)
        }
    }
}

fn coefficient_strings(p: &CyclePolynomial) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn emit(format: Format, value: &Value, table: impl FnOnce() -> String) {
    match format {
        Format::Json => write_out(&format!("{}\n", serde_json::to_string_pretty(value).expect("json values serialize"))),
        Format::Table => write_out(&table()),
    }
}

/// Writes to stdout; a closed pipe (`| head`) ends output quietly instead of panicking.
fn write_out(text: &str) {
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).and_then(|()| out.flush()).is_err() {
        std::process::exit(0);
    }
}

fn parse_orders(spec: &str) -> Result<Vec<usize>, Error> {
    let bad = || Error::Parameter(format!("bad --n `{spec}`: use FIRST:LAST or a comma list"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match spec.split_once(':') {
        Some((a, b)) => Ok(vec![num(a)?, num(b)?]),
        None => spec.split(',').map(num).collect(),
    }
}

/// FNV-1a over the decimal coefficients: a stable fingerprint for bench runs.
fn fingerprint(p: &CyclePolynomial) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in coefficient_strings(p).join(",").bytes() {
        h ^= u64::from(byte);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build_global()
            .map_err(|e| Error::Parameter(format!("--threads: {e}")))?;
    }
    let limits = Limits::new(cli.max_n);
    let format = cli.format;
    match cli.command {
        Command::Poly { input, moments } => {
            let (name, g) = input.load()?;
            let p = input.polynomial(&g, &limits)?;
            let summary = if moments { Some(moments_from_polynomial(&p)?) } else { None };
            let mut value = json!({
                "graph": name,
                "n": g.n(),
                "r": g.r(),
                "source": input.source(),
                "coefficients": coefficient_strings(&p),
                "total": p.total().to_string(),
            });
            if let Some(m) = &summary {
                value["moments"] = serde_json::to_value(m).expect("moments serialize");
            }
            emit(format, &value, || {
                let mut out = format!("{name} (n={}, r={}, {})\n", g.n(), g.r(), input.source());
                let _ = writeln!(out, "coefficients [{}]", coefficient_strings(&p).join(", "));
                let _ = writeln!(out, "polynomial   {}", cyclecount::poly::format_signed(&p.to_signed()));
                let _ = writeln!(out, "total        {}", p.total());
                if summary.is_some() {
                    let _ = writeln!(out, "mean         {}", value["moments"]["mean"]["exact"].as_str().unwrap_or(""));
                    let _ = writeln!(out, "variance     {}", value["moments"]["variance"]["exact"].as_str().unwrap_or(""));
                }
                out
            });
        }
        Command::Moments { input } => {
            let (name, g) = input.load()?;
            let p = input.polynomial(&g, &limits)?;
            let m = moments_from_polynomial(&p)?;
            let shape = shape_analysis(&p)?;
            let value = json!({
                "graph": name,
                "n": g.n(),
                "r": g.r(),
                "source": input.source(),
                "moments": m,
                "shape": shape,
            });
            emit(format, &value, || {
                let v = &value["moments"];
                let mut out = format!("{name} (n={}, r={}, {})\n", g.n(), g.r(), input.source());
                for key in ["mean", "variance"] {
                    let _ = writeln!(
                        out,
                        "{key:<9} {} ({})",
                        v[key]["exact"].as_str().unwrap_or(""),
                        v[key]["decimal"].as_str().unwrap_or("")
                    );
                }
                let _ = writeln!(
                    out,
                    "shape     log_concave={} unimodal={} real_rooted={}",
                    shape.log_concave, shape.unimodal, shape.real_rooted
                );
                out
            });
        }
        Command::Verify { oracle, engine: _, claims, expect, list } => {
            if list {
                let listing = list_registry();
                let value = serde_json::to_value(&listing).expect("listing serializes");
                emit(format, &value, || {
                    listing.iter().map(|c| format!("{:<40} {:>5}  {}\n", c.id, c.grid_size, c.statement)).collect()
                });
                return Ok(ExitCode::SUCCESS);
            }
            let expected = match &expect {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    Some(parse_expectations(&text)?)
                }
                None => None,
            };
            let source = if oracle { Source::Oracle } else { Source::Engine };
            let truth = Truth::with_configs(source, limits.engine, limits.oracle);
            let start = Instant::now();
            let report = run_registry(&truth, &claims)?;
            eprintln!("verified {} claims in {:.1}s", report.claims.len(), start.elapsed().as_secs_f64());
            match format {
                Format::Json => write_out(&format!("{}\n", report.to_json())),
                Format::Table => write_out(&report.to_table()),
            }
            if let Some(expected) = expected {
                let diffs = expectation_mismatches(&report, &expected, claims.is_empty());
                if !diffs.is_empty() {
                    for d in &diffs {
                        eprintln!("expectation mismatch: {d}");
                    }
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Scan { family, n, r, conjectures, corpus } => {
            if conjectures {
                if corpus != "default" {
                    return Err(Error::Parameter(format!("unknown corpus `{corpus}`; only `default` exists")));
                }
                let report = conjecture_scan(&default_corpus(9, 50, 8)?)?;
                let value = serde_json::to_value(&report).expect("conjecture report serializes");
                emit(format, &value, || {
                    let mut out = format!("{} graphs\n", report.graphs);
                    let _ = writeln!(out, "not unimodal:      {:?}", report.not_unimodal);
                    let _ = writeln!(out, "not log-concave:   {:?}", report.not_log_concave);
                    let _ = writeln!(out, "not real-rooted:   {} graphs", report.not_real_rooted.len());
                    let _ = writeln!(out, "weak r-monotonicity violations: {}", report.weak_monotonicity_violations);
                    let _ =
                        writeln!(out, "strict r-monotonicity counterexamples: {}", report.strict_monotonicity_counterexamples);
                    let _ = writeln!(out, "C_r = C_1 for some r >= 2: {} graphs", report.restriction_invariant.len());
                    out
                });
            } else {
                let family: ScanFamily = family.expect("clap requires --family").parse()?;
                let ns = parse_orders(&n)?;
                let report = asymptotic_scan(family, &ns, r)?;
                let value = serde_json::to_value(&report).expect("scan report serializes");
                emit(format, &value, || {
                    let mut out = String::new();
                    for p in &report.points {
                        let _ = writeln!(out, "n={:<5} mean {:<16} variance {}", p.n, p.mean.decimal, p.variance.decimal);
                    }
                    let _ = writeln!(out, "mean slope      {:.12}", report.mean_slope);
                    let _ = writeln!(out, "variance slope  {:.12}", report.variance_slope);
                    let _ = writeln!(out, "mean per ln n   {:.12}", report.mean_log_slope);
                    let _ = writeln!(out, "var per ln n    {:.12}", report.variance_log_slope);
                    out
                });
            }
        }
        Command::Bench { input, repeat } => {
            let (name, g) = input.load()?;
            let mut runs = Vec::new();
            let mut last = None;
            for _ in 0..repeat.max(1) {
                let start = Instant::now();
                let table = BlockWeightTable::build_with(&g, &limits.engine)?;
                let table_seconds = start.elapsed().as_secs_f64();
                let p = cyclecount::engine::polynomial_from_table(&g, &table);
                let total_seconds = start.elapsed().as_secs_f64();
                runs.push(json!({ "table_seconds": table_seconds, "total_seconds": total_seconds }));
                last = Some(p);
            }
            let p = last.expect("at least one run");
            let value = json!({
                "graph": name,
                "n": g.n(),
                "r": g.r(),
                "fingerprint": fingerprint(&p),
                "total": p.total().to_string(),
                "runs": runs,
            });
            emit(format, &value, || {
                let mut out = format!("{name} (n={}, r={}) fingerprint {}\n", g.n(), g.r(), fingerprint(&p));
                for run in &runs {
                    let _ = writeln!(
                        out,
                        "table {:.3}s  total {:.3}s",
                        run["table_seconds"].as_f64().unwrap_or(0.0),
                        run["total_seconds"].as_f64().unwrap_or(0.0)
                    );
                }
                out
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
