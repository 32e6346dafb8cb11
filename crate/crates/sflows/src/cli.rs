//! Command-line front end: every subcommand loads a facet-list file,
//! runs one pipeline, and emits JSON (or a plain table). Domain errors
//! exit 1 with a machine-readable error object on stderr; usage errors
//! exit 2.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::boundary::{boundary_matrix, cone_ordering, BoundaryMatrix};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::flows::{self, Limits, Method};
use crate::homology;
use crate::linalg;
use crate::matroid::{ColumnMatroid, DEFAULT_GROUND_LIMIT};
use crate::quasipoly::{self, FitOptions};

#[derive(Parser, Debug)]
#[command(name = "sflows", version, about = "Exact nowhere-zero flow counting on simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Facet-list file: one facet per line, '#' comments.
    #[arg(long, value_name = "PATH")]
    complex: PathBuf,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,

    /// Omit timing fields, making output byte-stable.
    #[arg(long)]
    no_timing: bool,

    /// Worker threads for enumeration scans.
    #[arg(long, env = "SFLOWS_THREADS", default_value_t = 1)]
    threads: usize,

    /// Cap on scan states (vectors, cosets, subsets) per operation.
    #[arg(long, env = "SFLOWS_WORK_LIMIT", default_value_t = 1 << 24)]
    work_limit: u64,

    /// Print the boundary matrix (tab-separated) before the output.
    #[arg(long)]
    dump_matrix: bool,
}

impl Common {
    fn limits(&self) -> Limits {
        Limits { work_limit: self.work_limit, threads: self.threads.max(1) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    Ie,
    Tutte,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count nowhere-zero flows at one modulus.
    Count {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        q: u64,
        /// Counting route; `all` runs every applicable one and fails on
        /// disagreement.
        #[arg(long, value_enum, default_value_t = MethodArg::Ie)]
        method: MethodArg,
        /// Cap on the Tutte ground set.
        #[arg(long, default_value_t = DEFAULT_GROUND_LIMIT)]
        ground_limit: usize,
    },
    /// List every nowhere-zero flow, one comma-separated line each.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        q: u64,
    },
    /// Check one residue vector against the flow conditions.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        q: u64,
        /// Comma-separated residues in facet-label order.
        #[arg(long)]
        vector: String,
    },
    /// The flow-counting polynomial and its certification threshold.
    Poly {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = DEFAULT_GROUND_LIMIT)]
        ground_limit: usize,
    },
    /// The Tutte polynomial of the boundary-column matroid.
    Tutte {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = DEFAULT_GROUND_LIMIT)]
        ground_limit: usize,
    },
    /// Fit flow counts as a quasipolynomial in q.
    Fit {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 6)]
        max_period: u32,
        /// Degree cap per constituent; defaults to betti_top + 1.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Top homology over Q and Z, and mod q when --q is given.
    Homology {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        q: Option<u64>,
    },
    /// Pseudomanifold census with the closed-form count when it applies.
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// The signed ridge-by-facet boundary matrix.
    Matrix {
        #[command(flatten)]
        common: Common,
        /// Relabel this vertex to the maximum and show the cone-block
        /// row/column ordering.
        #[arg(long)]
        cone_vertex: Option<u32>,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Count { common, .. }
            | Command::Enumerate { common, .. }
            | Command::Verify { common, .. }
            | Command::Poly { common, .. }
            | Command::Tutte { common, .. }
            | Command::Fit { common, .. }
            | Command::Homology { common, .. }
            | Command::Classify { common }
            | Command::Matrix { common, .. } => common,
        }
    }
}

/// Entry point used by the binary: real argv, real streams.
pub fn main_entry() -> i32 {
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run_from(std::env::args_os(), &mut out, &mut err)
}

/// Parses `args` and executes; all output goes to the given streams.
/// Returns the process exit code: 0 success, 1 domain error, 2 usage.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let stream: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(stream, "{e}");
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let payload = json!({"error": {"code": e.code(), "message": e.to_string()}});
            let _ = writeln!(err, "{payload}");
            1
        }
    }
}

fn load_complex(common: &Common) -> Result<SimplicialComplex> {
    let text = std::fs::read_to_string(&common.complex)
        .map_err(|e| Error::Io(format!("{}: {e}", common.complex.display())))?;
    SimplicialComplex::parse(&text)
}

fn execute(cmd: &Command, out: &mut dyn Write) -> Result<()> {
    let common = cmd.common();
    let complex = load_complex(common)?;
    if common.dump_matrix && !matches!(cmd, Command::Matrix { .. }) {
        write_dump(out, &boundary_matrix(&complex))?;
    }
    let started = Instant::now();
    let path = common.complex.display().to_string();

    match cmd {
        Command::Count { common, q, method, ground_limit } => {
            let limits = common.limits();
            let mut payload = Map::new();
            payload.insert("complex".into(), json!(path));
            payload.insert("q".into(), json!(q));
            match method {
                MethodArg::All => {
                    let results =
                        flows::count_all_methods(&complex, *q, &limits, *ground_limit)?;
                    let agreed = results
                        .iter()
                        .find(|m| m.certified)
                        .or(results.first())
                        .expect("at least one method ran")
                        .count
                        .clone();
                    payload.insert("method".into(), json!("all"));
                    payload.insert("count".into(), big_to_json(&agreed));
                    let methods: Vec<Value> = results
                        .iter()
                        .map(|m| {
                            json!({
                                "method": m.method,
                                "count": big_to_json(&m.count),
                                "certified": m.certified,
                            })
                        })
                        .collect();
                    payload.insert("methods".into(), Value::Array(methods));
                }
                MethodArg::Brute | MethodArg::Ie | MethodArg::Tutte => {
                    let fc = match method {
                        MethodArg::Brute => flows::brute_force_count(&complex, *q, &limits)?,
                        MethodArg::Ie => {
                            flows::inclusion_exclusion_count(&complex, *q, &limits)?
                        }
                        _ => flows::tutte_count(&complex, *q, *ground_limit)?,
                    };
                    payload.insert("method".into(), json!(fc.method));
                    payload.insert("count".into(), big_to_json(&fc.count));
                    if fc.method == Method::Tutte {
                        let fp = flows::flow_polynomial_with_limit(&complex, *ground_limit)?;
                        payload.insert("certified".into(), json!(fp.certified_at(*q)));
                    }
                }
            }
            finish(out, common, payload, started)
        }
        Command::Enumerate { common, q } => {
            let limits = common.limits();
            let flows = flows::enumerate_flows(&complex, *q, &limits)?;
            for f in &flows {
                writeln!(out, "{}", f.csv()).map_err(io_err)?;
            }
            Ok(())
        }
        Command::Verify { common, q, vector } => {
            let values = parse_vector(vector)?;
            let report = flows::verify_flow(&complex, *q, &values)?;
            let mut payload = Map::new();
            payload.insert("complex".into(), json!(path));
            payload.insert("q".into(), json!(q));
            payload.insert("vector".into(), json!(values));
            payload.insert("valid".into(), json!(report.valid));
            payload.insert("zero_entries".into(), json!(report.zero_entries));
            payload.insert("unbalanced_ridges".into(), json!(report.unbalanced_ridges));
            finish(out, common, payload, started)
        }
        Command::Poly { common, ground_limit } => {
            let fp = flows::flow_polynomial_with_limit(&complex, *ground_limit)?;
            let check = flows::degree_check(&complex, *ground_limit)?;
            let mut payload = Map::new();
            payload.insert("complex".into(), json!(path));
            payload.insert(
                "coefficients".into(),
                Value::Array(fp.poly.coeffs().iter().map(big_to_json).collect()),
            );
            payload.insert("degree".into(), json!(fp.poly.degree()));
            payload.insert("display".into(), json!(fp.poly.display("q")));
            payload.insert("betti_top".into(), json!(check.betti_top));
            payload.insert("degree_matches_betti".into(), json!(check.equal));
            payload
                .insert("safe_prime_threshold".into(), big_to_json(&fp.safe_prime_threshold));
            finish(out, common, payload, started)
        }
        Command::Tutte { common, ground_limit } => {
            let m = linalg::ExactMatrix::from_i64_rows(
                &boundary_matrix(&complex).row_vectors(),
            );
            let matroid = ColumnMatroid::new(m, complex.facet_labels())?;
            let tutte = matroid.tutte_with_limit(*ground_limit)?;
            let records: Vec<Value> = tutte
                .records()
                .iter()
                .map(|(x, y, c)| json!({"x_deg": x, "y_deg": y, "coeff": big_to_json(c)}))
                .collect();
            let mut payload = Map::new();
            payload.insert("complex".into(), json!(path));
            payload.insert("ground_set".into(), json!(matroid.n_elements()));
            payload.insert("rank".into(), json!(matroid.rank()));
            payload.insert("tutte".into(), Value::Array(records));
            finish(out, common, payload, started)
        }
        Command::Fit { common, max_period, max_degree } => {
            let limits = common.limits();
            let opts = FitOptions { max_period: *max_period, max_degree: *max_degree };
            let fitted = quasipoly::fit_flow_counts(&complex, &opts, &limits)?;
            let constituents: Vec<Value> = fitted
                .quasipolynomial
                .constituents()
                .iter()
                .map(|p| Value::Array(p.coeffs().iter().map(rational_to_json).collect()))
                .collect();
            let mut payload = Map::new();
            payload.insert("complex".into(), json!(path));
            payload.insert("period".into(), json!(fitted.quasipolynomial.period()));
            payload.insert("constituents".into(), Value::Array(constituents));
            payload.insert("samples_used".into(), json!(fitted.samples.len()));
            payload.insert("verified_points".into(), json!(fitted.verified_points));
            payload.insert("max_degree".into(), json!(fitted.max_degree_used));
            let agreement = match flows::flow_polynomial(&complex) {
                Ok(fp) => {
                    let qs: Vec<u64> = fitted.samples.iter().map(|(q, _)| *q).collect();
                    let rep = quasipoly::coprime_agreement(
                        &fitted.quasipolynomial,
                        &fp.poly,
                        &qs,
                    );
                    json!({
                        "checked": rep.checked,
                        "agrees": rep.agrees(),
                        "mismatches": rep.mismatches.len(),
                    })
                }
                Err(Error::GroundSetTooLarge { .. }) => Value::Null,
                Err(e) => return Err(e),
            };
            payload.insert("coprime_agreement".into(), agreement);
            finish(out, common, payload, started)
        }
        Command::Homology { common, q } => {
            let betti = homology::betti_top(&complex);
            let (free_rank, torsion) = homology::top_homology_z(&complex);
            let mut payload = Map::new();
            payload.insert("complex".into(), json!(path));
            payload.insert("betti_top".into(), json!(betti));
            payload.insert(
                "homology_z".into(),
                json!({
                    "free_rank": free_rank,
                    "torsion": torsion.iter().map(big_to_json).collect::<Vec<_>>(),
                }),
            );
            if let Some(q) = q {
                let h = homology::top_homology_mod_q(&complex, *q);
                payload.insert(
                    "mod_q".into(),
                    json!({
                        "q": h.q,
                        "cycle_count": big_to_json(&h.cycle_count),
                        "fq_dimension": h.fq_dimension,
                    }),
                );
            }
            finish(out, common, payload, started)
        }
        Command::Classify { common } => {
            let mc = homology::classify_manifold(&complex);
            let formula = if mc.pseudomanifold && mc.connected {
                if !mc.closed {
                    Some("0")
                } else {
                    match mc.orientable_over_z {
                        Some(true) => Some("q-1"),
                        Some(false) => Some("1 if q=2 else 0"),
                        None => None,
                    }
                }
            } else {
                None
            };
            let mut payload = Map::new();
            payload.insert("complex".into(), json!(path));
            payload.insert("pseudomanifold".into(), json!(mc.pseudomanifold));
            payload.insert("closed".into(), json!(mc.closed));
            payload.insert("connected".into(), json!(mc.connected));
            payload.insert("orientable".into(), json!(mc.orientable_over_z));
            payload.insert("betti_top".into(), json!(homology::betti_top(&complex)));
            payload.insert("proposition_flow_formula".into(), json!(formula));
            finish(out, common, payload, started)
        }
        Command::Matrix { common, cone_vertex } => {
            match cone_vertex {
                Some(v) => {
                    let relabeled = complex.swap_to_max(*v)?;
                    let top = relabeled.max_vertex();
                    let (bm, blocks) = cone_ordering(&relabeled, top)?;
                    writeln!(
                        out,
                        "# cone vertex {v} relabeled to {top}; rows: apex {:?}, link {:?}, rest {:?}; cols: apex {:?}, rest {:?}",
                        blocks.rows_apex, blocks.rows_link, blocks.rows_rest,
                        blocks.cols_apex, blocks.cols_rest
                    )
                    .map_err(io_err)?;
                    write_dump(out, &bm)?;
                }
                None => {
                    if common.output == OutputFormat::Json && !common.dump_matrix {
                        let bm = boundary_matrix(&complex);
                        let entries: Vec<Vec<i32>> = (0..bm.n_rows())
                            .map(|i| (0..bm.n_cols()).map(|j| bm.entry(i, j)).collect())
                            .collect();
                        let mut payload = Map::new();
                        payload.insert("complex".into(), json!(path));
                        payload.insert(
                            "rows".into(),
                            json!(bm.row_labels().iter().map(|f| f.label()).collect::<Vec<_>>()),
                        );
                        payload.insert(
                            "cols".into(),
                            json!(bm.col_labels().iter().map(|f| f.label()).collect::<Vec<_>>()),
                        );
                        payload.insert("entries".into(), json!(entries));
                        return finish(out, common, payload, started);
                    }
                    write_dump(out, &boundary_matrix(&complex))?;
                }
            }
            Ok(())
        }
    }
}

fn parse_vector(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|t| {
            t.trim().parse::<u64>().map_err(|_| Error::InvalidToken {
                line: 1,
                token: t.trim().to_string(),
            })
        })
        .collect()
}

fn write_dump(out: &mut dyn Write, bm: &BoundaryMatrix) -> Result<()> {
    write!(out, "{}", bm.dump()).map_err(io_err)
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

/// JSON number when it fits in an i64, decimal string otherwise.
fn big_to_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(n) => json!(n),
        None => json!(v.to_string()),
    }
}

/// Integer rationals become numbers, others "numerator/denominator".
fn rational_to_json(v: &BigRational) -> Value {
    if v.is_integer() {
        big_to_json(&v.to_integer())
    } else {
        json!(v.to_string())
    }
}

fn finish(
    out: &mut dyn Write,
    common: &Common,
    mut payload: Map<String, Value>,
    started: Instant,
) -> Result<()> {
    if !common.no_timing {
        payload.insert("elapsed_ms".into(), json!(started.elapsed().as_millis() as u64));
    }
    match common.output {
        OutputFormat::Json => {
            writeln!(out, "{}", Value::Object(payload)).map_err(io_err)?;
        }
        OutputFormat::Table => {
            for (k, v) in &payload {
                let rendered = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                writeln!(out, "{k:24} {rendered}").map_err(io_err)?;
            }
        }
    }
    Ok(())
}
