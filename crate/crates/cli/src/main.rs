//! Command line front end.
//!
//! Every subcommand prints one JSON report to stdout; diagnostics go to
//! stderr. Exit codes: 0 all contracts held, 1 input problem, 2 violated
//! theorem or contract, 3 blown closure or round cap. Reports are
//! deterministic byte for byte: identical invocations print identical
//! documents.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use km_forge::algebra::GroupReport;
use km_forge::{
    commute_iso, compare_with_onestep, delta_min, dense_over, export_dot, free_one_generator,
    km_completion, km_from_heyting, load_algebra, one_step, open_statement_check,
    remark_counterexample, run_all, sigma_plus, spectrum, validate, verify_onestep_omega,
    CompareReport, Error, FiniteHeytingAlgebra, SuiteBounds, SCHEMA_VERSION,
};

#[derive(Parser)]
#[command(
    name = "km-forge",
    version,
    about = "Finite Heyting algebra workbench: dense filters, one-step enrichment, duality"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load an algebra file and revalidate its tables against the axioms
    Validate { input: PathBuf },
    /// Least dense element over one anchor, or the whole table
    Delta {
        input: PathBuf,
        /// Element name or index
        #[arg(short = 'a')]
        anchor: Option<String>,
    },
    /// Members of the dense filter over one anchor, or over every anchor
    Dense {
        input: PathBuf,
        /// Element name or index
        #[arg(short = 'a')]
        anchor: Option<String>,
    },
    /// Check the three defining identities of the least dense table
    KmAxioms { input: PathBuf },
    /// Adjoin a least dense element over the anchor as a quotient
    OneStep {
        input: PathBuf,
        /// Element name or index
        #[arg(short = 'a')]
        anchor: String,
        /// Closure size cap
        #[arg(long, default_value_t = 4096)]
        cap: usize,
    },
    /// Enrich at every element until the least dense tables stabilize
    Km {
        input: PathBuf,
        /// Closure size cap
        #[arg(long, default_value_t = 4096)]
        cap: usize,
    },
    /// Close the identity map and the constants inside the full power
    Free {
        input: PathBuf,
        /// Closure size cap
        #[arg(long, default_value_t = 4096)]
        cap: usize,
    },
    /// Enrich at two anchors in both orders and report the isomorphism
    IsoCommute {
        input: PathBuf,
        /// First anchor, element name or index
        #[arg(short = 'a')]
        anchor: String,
        /// Second anchor, element name or index
        #[arg(short = 'b')]
        second: String,
        /// Closure size cap
        #[arg(long, default_value_t = 4096)]
        cap: usize,
    },
    /// Symbolic chain over the point at infinity
    Omega {
        #[command(subcommand)]
        command: OmegaCommand,
    },
    /// Prime filters of the algebra, ordered by inclusion
    Spec { input: PathBuf },
    /// The enlarged up-set adjoined on the dual side
    SigmaPlus {
        input: PathBuf,
        /// Element name or index
        #[arg(short = 'a')]
        anchor: String,
    },
    /// Run the dual-side construction against the direct one
    CompareMuravitsky {
        input: PathBuf,
        /// Element name or index; sweeps every anchor when absent
        #[arg(short = 'a')]
        anchor: Option<String>,
        /// Closure size cap
        #[arg(long, default_value_t = 4096)]
        cap: usize,
    },
    /// Search for a substitution counterexample at bounded depth
    OpenStatement {
        input: PathBuf,
        /// Element name or index
        #[arg(short = 'a')]
        anchor: String,
        /// Term depth bound
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Run every verification suite over a catalog of small algebras
    VerifyAll {
        /// Largest poset size feeding the catalog
        #[arg(long, default_value_t = 3)]
        poset_max: usize,
        /// Longest chain in the catalog
        #[arg(long, default_value_t = 4)]
        chain_max: usize,
        /// Term depth bound
        #[arg(long, default_value_t = 2)]
        depth: usize,
        /// Closure size cap
        #[arg(long, default_value_t = 4096)]
        cap: usize,
    },
    /// Write the Hasse diagram with least dense annotations as DOT
    ExportDot {
        input: PathBuf,
        /// Output path
        #[arg(short = 'o')]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum OmegaCommand {
    /// Adjoin the shifted map and report the collapsed pair
    Demo {
        /// Denominator of the probe constant
        #[arg(long)]
        n0: u64,
    },
    /// Run the chain's enrichment checks at bounded depth
    Verify {
        /// Term depth bound
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
}

enum CliError {
    Input(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Core(err)
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CliError::Core(err)) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

// Report plumbing. Every document leads with the schema version and the
// command, then the input path and whatever bounds shaped the run.

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    version: &'static str,
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<Bounds>,
    report: T,
}

#[derive(Serialize)]
struct Bounds {
    #[serde(skip_serializing_if = "Option::is_none")]
    cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    depth: Option<usize>,
}

fn cap_bounds(cap: usize) -> Option<Bounds> {
    Some(Bounds { cap: Some(cap), depth: None })
}

fn depth_bounds(depth: usize) -> Option<Bounds> {
    Some(Bounds { cap: None, depth: Some(depth) })
}

fn emit<T: Serialize>(
    command: &'static str,
    input: Option<&Path>,
    bounds: Option<Bounds>,
    report: T,
) {
    use std::io::Write;

    let envelope = Envelope {
        version: SCHEMA_VERSION,
        command,
        input: input.map(|p| p.display().to_string()),
        bounds,
        report,
    };
    let text = serde_json::to_string_pretty(&envelope).expect("reports serialize");
    // A reader that stops early (head, a pager) closes the pipe; that is
    // not an error worth reporting.
    if let Err(e) = writeln!(std::io::stdout(), "{text}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write the report: {e}");
        std::process::exit(1);
    }
}

fn resolve(h: &FiniteHeytingAlgebra, token: &str) -> Result<usize, CliError> {
    h.element_by_name(token).ok_or_else(|| {
        CliError::Input(format!(
            "no element `{token}` in an algebra with elements {}",
            (0..h.size())
                .map(|x| h.name_of(x))
                .collect::<Vec<_>>()
                .join(", ")
        ))
    })
}

fn names(h: &FiniteHeytingAlgebra, xs: impl IntoIterator<Item = usize>) -> Vec<String> {
    xs.into_iter().map(|x| h.name_of(x)).collect()
}

/// Object keyed by element name, in element order. Insertion order is
/// preserved through serialization, so the printed table reads bottom
/// to top.
fn name_map(
    h: &FiniteHeytingAlgebra,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> serde_json::Map<String, serde_json::Value> {
    pairs
        .into_iter()
        .map(|(k, v)| (h.name_of(k), serde_json::Value::String(h.name_of(v))))
        .collect()
}

#[derive(Serialize)]
struct AlgebraHeader {
    size: usize,
    elements: Vec<String>,
}

fn header(h: &FiniteHeytingAlgebra) -> AlgebraHeader {
    AlgebraHeader {
        size: h.size(),
        elements: names(h, 0..h.size()),
    }
}

fn dispatch(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Validate { input } => cmd_validate(&input),
        Command::Delta { input, anchor } => cmd_delta(&input, anchor.as_deref()),
        Command::Dense { input, anchor } => cmd_dense(&input, anchor.as_deref()),
        Command::KmAxioms { input } => cmd_km_axioms(&input),
        Command::OneStep { input, anchor, cap } => cmd_one_step(&input, &anchor, cap),
        Command::Km { input, cap } => cmd_km(&input, cap),
        Command::Free { input, cap } => cmd_free(&input, cap),
        Command::IsoCommute {
            input,
            anchor,
            second,
            cap,
        } => cmd_iso_commute(&input, &anchor, &second, cap),
        Command::Omega { command } => match command {
            OmegaCommand::Demo { n0 } => cmd_omega_demo(n0),
            OmegaCommand::Verify { depth } => cmd_omega_verify(depth),
        },
        Command::Spec { input } => cmd_spec(&input),
        Command::SigmaPlus { input, anchor } => cmd_sigma_plus(&input, &anchor),
        Command::CompareMuravitsky { input, anchor, cap } => {
            cmd_compare(&input, anchor.as_deref(), cap)
        }
        Command::OpenStatement {
            input,
            anchor,
            depth,
        } => cmd_open_statement(&input, &anchor, depth),
        Command::VerifyAll {
            poset_max,
            chain_max,
            depth,
            cap,
        } => cmd_verify_all(poset_max, chain_max, depth, cap),
        Command::ExportDot { input, output } => cmd_export_dot(&input, &output),
    }
}

fn cmd_validate(input: &Path) -> Result<i32, CliError> {
    let h = load_algebra(input)?;

    #[derive(Serialize)]
    struct Report {
        algebra: AlgebraHeader,
        ok: bool,
        groups: Vec<GroupReport>,
    }

    let outcome = validate(&h.raw_tables());
    let report = Report {
        algebra: header(&h),
        ok: outcome.ok(),
        groups: outcome.groups,
    };
    let code = if report.ok { 0 } else { 2 };
    emit("validate", Some(input), None, report);
    Ok(code)
}

fn cmd_delta(input: &Path, anchor: Option<&str>) -> Result<i32, CliError> {
    let h = load_algebra(input)?;
    match anchor {
        Some(token) => {
            let a = resolve(&h, token)?;

            #[derive(Serialize)]
            struct Report {
                algebra: AlgebraHeader,
                anchor: String,
                delta: String,
            }
            let report = Report {
                algebra: header(&h),
                anchor: h.name_of(a),
                delta: h.name_of(delta_min(&h, a)),
            };
            emit("delta", Some(input), None, report);
        }
        None => {
            #[derive(Serialize)]
            struct Report {
                algebra: AlgebraHeader,
                delta: serde_json::Map<String, serde_json::Value>,
            }
            let report = Report {
                algebra: header(&h),
                delta: name_map(&h, (0..h.size()).map(|a| (a, delta_min(&h, a)))),
            };
            emit("delta", Some(input), None, report);
        }
    }
    Ok(0)
}

fn cmd_dense(input: &Path, anchor: Option<&str>) -> Result<i32, CliError> {
    let h = load_algebra(input)?;

    #[derive(Serialize)]
    struct FilterLine {
        anchor: String,
        members: Vec<String>,
        least: String,
    }
    let line = |a: usize| {
        let filter = dense_over(&h, a);
        FilterLine {
            anchor: h.name_of(a),
            least: h.name_of(delta_min(&h, a)),
            members: names(&h, filter.members),
        }
    };
    match anchor {
        Some(token) => {
            let a = resolve(&h, token)?;
            emit("dense", Some(input), None, line(a));
        }
        None => {
            #[derive(Serialize)]
            struct Report {
                algebra: AlgebraHeader,
                filters: Vec<FilterLine>,
            }
            let report = Report {
                algebra: header(&h),
                filters: (0..h.size()).map(line).collect(),
            };
            emit("dense", Some(input), None, report);
        }
    }
    Ok(0)
}

fn cmd_km_axioms(input: &Path) -> Result<i32, CliError> {
    let h = load_algebra(input)?;
    let km = km_from_heyting(&h)?;
    let n = h.size();

    let mut expansive = true;
    let mut fixed_by_implication = true;
    let mut joint_bound = true;
    for x in 0..n {
        expansive &= h.leq(x, km.delta[x]);
        fixed_by_implication &= h.imp(km.delta[x], x) == x;
        for y in 0..n {
            joint_bound &= h.leq(km.delta[x], h.join(y, h.imp(y, x)));
        }
    }

    #[derive(Serialize)]
    struct AxiomLine {
        axiom: &'static str,
        instances: u64,
        ok: bool,
    }
    #[derive(Serialize)]
    struct Report {
        algebra: AlgebraHeader,
        delta: serde_json::Map<String, serde_json::Value>,
        axioms: Vec<AxiomLine>,
        ok: bool,
    }
    let report = Report {
        algebra: header(&h),
        delta: name_map(&h, (0..n).map(|x| (x, km.delta[x]))),
        axioms: vec![
            AxiomLine {
                axiom: "x <= dx",
                instances: n as u64,
                ok: expansive,
            },
            AxiomLine {
                axiom: "dx -> x = x",
                instances: n as u64,
                ok: fixed_by_implication,
            },
            AxiomLine {
                axiom: "dx <= y or (y -> x)",
                instances: (n * n) as u64,
                ok: joint_bound,
            },
        ],
        ok: expansive && fixed_by_implication && joint_bound,
    };
    let code = if report.ok { 0 } else { 2 };
    emit("km-axioms", Some(input), None, report);
    Ok(code)
}

fn cmd_one_step(input: &Path, anchor: &str, cap: usize) -> Result<i32, CliError> {
    let h = load_algebra(input)?;
    let a = resolve(&h, anchor)?;
    let step = one_step(&h, a, cap)?;
    let quotient = step.algebra().clone();
    let quotient_delta = km_from_heyting(&quotient)?;

    #[derive(Serialize)]
    struct Report {
        algebra: AlgebraHeader,
        anchor: String,
        dense_coordinates: Vec<String>,
        subalgebra_size: usize,
        maps: Vec<Vec<String>>,
        filter_basis: Vec<usize>,
        classes: Vec<Vec<usize>>,
        delta_class: usize,
        embedding: serde_json::Map<String, serde_json::Value>,
        quotient: QuotientReport,
    }
    #[derive(Serialize)]
    struct QuotientReport {
        size: usize,
        elements: Vec<String>,
        delta: serde_json::Map<String, serde_json::Value>,
    }

    let enriched = &step.enriched;
    let report = Report {
        algebra: header(&h),
        anchor: h.name_of(a),
        dense_coordinates: names(&h, enriched.index_set.clone()),
        subalgebra_size: enriched.len(),
        maps: (0..enriched.len())
            .map(|x| names(&h, enriched.map_of(x).iter().map(|&v| v as usize)))
            .collect(),
        filter_basis: step.fa.basis.clone(),
        classes: step.quotient.classes.clone(),
        delta_class: step.delta_class,
        embedding: (0..h.size())
            .map(|x| {
                (
                    h.name_of(x),
                    serde_json::Value::from(step.embedding.apply(x)),
                )
            })
            .collect(),
        quotient: QuotientReport {
            size: quotient.size(),
            elements: names(&quotient, 0..quotient.size()),
            delta: name_map(
                &quotient,
                (0..quotient.size()).map(|c| (c, quotient_delta.delta[c])),
            ),
        },
    };
    emit("one-step", Some(input), cap_bounds(cap), report);
    Ok(0)
}

fn cmd_km(input: &Path, cap: usize) -> Result<i32, CliError> {
    let h = load_algebra(input)?;
    let (km, total) = km_completion(&h, 4, cap)?;

    #[derive(Serialize)]
    struct Report {
        algebra: AlgebraHeader,
        stabilized: bool,
        size: usize,
        delta: serde_json::Map<String, serde_json::Value>,
        embedding: serde_json::Map<String, serde_json::Value>,
    }
    let report = Report {
        algebra: header(&h),
        stabilized: true,
        size: km.base.size(),
        delta: name_map(&km.base, (0..km.base.size()).map(|x| (x, km.delta[x]))),
        embedding: (0..h.size())
            .map(|x| {
                (
                    h.name_of(x),
                    serde_json::Value::String(km.base.name_of(total.apply(x))),
                )
            })
            .collect(),
    };
    emit("km", Some(input), cap_bounds(cap), report);
    Ok(0)
}

fn cmd_free(input: &Path, cap: usize) -> Result<i32, CliError> {
    let h = load_algebra(input)?;
    let free = free_one_generator(&h, cap)?;

    #[derive(Serialize)]
    struct ElementLine {
        map: Vec<String>,
        formula: String,
    }
    #[derive(Serialize)]
    struct Report {
        algebra: AlgebraHeader,
        size: usize,
        coordinates: Vec<String>,
        elements: Vec<ElementLine>,
    }
    let report = Report {
        algebra: header(&h),
        size: free.len(),
        coordinates: names(&h, free.index_set.clone()),
        elements: (0..free.len())
            .map(|x| ElementLine {
                map: names(&h, free.map_of(x).iter().map(|&v| v as usize)),
                formula: free.provenance[x].to_string(),
            })
            .collect(),
    };
    emit("free", Some(input), cap_bounds(cap), report);
    Ok(0)
}

fn cmd_iso_commute(input: &Path, anchor: &str, second: &str, cap: usize) -> Result<i32, CliError> {
    let h = load_algebra(input)?;
    let a = resolve(&h, anchor)?;
    let b = resolve(&h, second)?;
    let iso = commute_iso(&h, a, b, cap)?;

    #[derive(Serialize)]
    struct Report {
        algebra: AlgebraHeader,
        anchors: [String; 2],
        towers_isomorphic: bool,
        map: Vec<usize>,
    }
    let report = Report {
        algebra: header(&h),
        anchors: [h.name_of(a), h.name_of(b)],
        towers_isomorphic: true,
        map: iso.map,
    };
    emit("iso-commute", Some(input), cap_bounds(cap), report);
    Ok(0)
}

fn cmd_omega_demo(n0: u64) -> Result<i32, CliError> {
    if n0 == 0 {
        return Err(CliError::Input(
            "the probe denominator must be at least 1".to_string(),
        ));
    }
    let report = remark_counterexample(n0)?;
    emit("omega demo", None, None, report);
    Ok(0)
}

fn cmd_omega_verify(depth: usize) -> Result<i32, CliError> {
    let report = verify_onestep_omega(depth, &[]);
    let code = if report.ok() { 0 } else { 2 };
    emit("omega verify", None, depth_bounds(depth), report);
    Ok(code)
}

fn cmd_spec(input: &Path) -> Result<i32, CliError> {
    let h = load_algebra(input)?;
    let spec = spectrum(&h)?;

    #[derive(Serialize)]
    struct Report {
        algebra: AlgebraHeader,
        primes: Vec<Vec<String>>,
        leq: Vec<Vec<bool>>,
    }
    let poset = spec.poset();
    let report = Report {
        algebra: header(&h),
        primes: spec
            .primes
            .iter()
            .map(|p| names(&h, p.iter().copied()))
            .collect(),
        leq: (0..spec.len())
            .map(|i| (0..spec.len()).map(|j| poset.le(i, j)).collect())
            .collect(),
    };
    emit("spec", Some(input), None, report);
    Ok(0)
}

fn cmd_sigma_plus(input: &Path, anchor: &str) -> Result<i32, CliError> {
    let h = load_algebra(input)?;
    let a = resolve(&h, anchor)?;
    let spec = spectrum(&h)?;
    let plus = sigma_plus(&h, a)?;

    #[derive(Serialize)]
    struct Report {
        algebra: AlgebraHeader,
        anchor: String,
        least_dense: String,
        prime_indices: Vec<usize>,
        primes: Vec<Vec<String>>,
    }
    let report = Report {
        algebra: header(&h),
        anchor: h.name_of(a),
        least_dense: h.name_of(delta_min(&h, a)),
        primes: plus
            .iter()
            .map(|&i| names(&h, spec.primes[i].iter().copied()))
            .collect(),
        prime_indices: plus,
    };
    emit("sigma-plus", Some(input), None, report);
    Ok(0)
}

fn cmd_compare(input: &Path, anchor: Option<&str>, cap: usize) -> Result<i32, CliError> {
    let h = load_algebra(input)?;
    let anchors: Vec<usize> = match anchor {
        Some(token) => vec![resolve(&h, token)?],
        None => (0..h.size()).collect(),
    };
    let mut comparisons: Vec<CompareReport> = Vec::new();
    for a in anchors {
        comparisons.push(compare_with_onestep(&h, a, cap)?);
    }

    #[derive(Serialize)]
    struct Report {
        algebra: AlgebraHeader,
        agreements: usize,
        comparisons: Vec<CompareReport>,
    }
    let report = Report {
        algebra: header(&h),
        agreements: comparisons.iter().filter(|r| r.agrees).count(),
        comparisons,
    };
    emit("compare-muravitsky", Some(input), cap_bounds(cap), report);
    Ok(0)
}

fn cmd_open_statement(input: &Path, anchor: &str, depth: usize) -> Result<i32, CliError> {
    let h = load_algebra(input)?;
    let a = resolve(&h, anchor)?;
    let report = open_statement_check(&h, a, depth)?;
    emit("open-statement", Some(input), depth_bounds(depth), report);
    Ok(0)
}

fn cmd_verify_all(
    poset_max: usize,
    chain_max: usize,
    depth: usize,
    cap: usize,
) -> Result<i32, CliError> {
    let bounds = SuiteBounds {
        poset_max,
        chain_max,
        depth,
        cap,
    };
    let run = run_all(bounds);
    let code = if run.ok() { 0 } else { 2 };
    if code != 0 {
        for outcome in run.outcomes.iter().filter(|o| !o.ok()) {
            eprintln!("suite {} failed:", outcome.name);
            for failure in &outcome.failures {
                eprintln!("  {failure}");
            }
        }
    }
    emit("verify-all", None, None, run);
    Ok(code)
}

fn cmd_export_dot(input: &Path, output: &Path) -> Result<i32, CliError> {
    let h = load_algebra(input)?;
    let delta: Vec<usize> = (0..h.size()).map(|a| delta_min(&h, a)).collect();
    let dot = export_dot(&h, Some(&delta));
    std::fs::write(output, &dot).map_err(|e| Error::Io(format!("{}: {e}", output.display())))?;

    #[derive(Serialize)]
    struct Report {
        algebra: AlgebraHeader,
        output: String,
        bytes: usize,
    }
    let report = Report {
        algebra: header(&h),
        output: output.display().to_string(),
        bytes: dot.len(),
    };
    emit("export-dot", Some(input), None, report);
    Ok(0)
}
