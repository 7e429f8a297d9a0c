//! The `heffter` command line: classify parameter pairs, construct arrays,
//! verify documents, compute multiplier groups, search small open cases,
//! and scan classification tables.
//!
//! Exit codes: 0 success, 1 domain failure (not admissible, verification
//! failed, nothing found), 2 usage or parse errors. Machine output goes to
//! stdout, diagnostics to stderr.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use heffter_cli::document::{ArrayDocument, DocumentError, Provenance};
use heffter_cli::render_text;
use heffter_core::{
    classify_pair, construct_agreeable, construct_perfect, scan_pairs, search_rank_one,
    AgreeableParams, ElementSet, Error, HeffterArray, MultiplierGroup, PairClass, SearchConfig,
    SearchStrategy,
};

#[derive(Parser)]
#[command(
    name = "heffter",
    version,
    about = "Construct, verify and search tight Heffter arrays over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a pair (m, n): admissibility, agreeability, optimality.
    Classify {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Build an H(m,n) by the perfect or agreeable construction.
    Construct {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// auto picks perfect when eligible, else agreeable.
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Override the agreeable decomposition (requires --n1).
        #[arg(long, requires = "n1")]
        m1: Option<u64>,
        /// Override the agreeable decomposition (requires --m1).
        #[arg(long, requires = "m1")]
        n1: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Verify an array document and print a JSON report.
    Verify {
        file: PathBuf,
        /// Checks gating the exit code, from: axioms, rank, simple,
        /// multipliers (the last adds the multiplier group to the report).
        #[arg(long, value_delimiter = ',', default_value = "axioms")]
        checks: Vec<CheckArg>,
    },
    /// Print the multiplier group of an array document.
    Multipliers {
        file: PathBuf,
        /// Force the brute-force search over all units.
        #[arg(long)]
        brute: bool,
    },
    /// Search for a rank-one H(m,n) on an admissible pair.
    Search {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = StrategyArg::Seeded)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        max_candidates: u64,
        /// Reserved; current strategies are deterministic.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Tabulate classify rows for all m ≤ n with 2mn+1 ≤ max-q.
    Scan {
        #[arg(long)]
        max_q: u64,
        #[arg(long, value_enum, default_value_t = ScanFormat::Csv)]
        format: ScanFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Perfect,
    Agreeable,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScanFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Exhaustive,
    Seeded,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Axioms,
    Rank,
    Simple,
    Multipliers,
}

/// Failures after argument parsing: domain failures exit 1, bad inputs
/// (file IO, malformed or inconsistent documents) exit 2.
enum Failure {
    Domain(String),
    Input(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Input(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Domain(msg) | Failure::Input(msg) => msg,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e.to_string())
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Failure {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

/// Ok(true) = success, Ok(false) = domain failure already reported on
/// stdout/stderr (e.g. failed verification, unsuccessful search).
fn run(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Classify { m, n } => {
            let class = classify_pair(m, n)?;
            println!("{}", serde_json::to_string(&ClassifyOut::from(&class)).unwrap());
            Ok(true)
        }
        Command::Construct {
            m,
            n,
            method,
            m1,
            n1,
            format,
        } => construct_command(m, n, method, m1.zip(n1), format),
        Command::Verify { file, checks } => verify_command(&file, &checks),
        Command::Multipliers { file, brute } => multipliers_command(&file, brute),
        Command::Search {
            m,
            n,
            strategy,
            max_candidates,
            seed,
        } => search_command(m, n, strategy, max_candidates, seed),
        Command::Scan { max_q, format } => {
            scan_command(max_q, format);
            Ok(true)
        }
    }
}

fn construct_command(
    m: u64,
    n: u64,
    method: Method,
    params: Option<(u64, u64)>,
    format: Format,
) -> Result<bool, Failure> {
    if method == Method::Perfect && params.is_some() {
        return Err(Failure::Input(
            "--m1/--n1 only apply to the agreeable construction".into(),
        ));
    }
    let class = classify_pair(m, n)?;
    let chosen = match method {
        Method::Perfect => Method::Perfect,
        Method::Agreeable => Method::Agreeable,
        Method::Auto => {
            if class.perfect_eligible && params.is_none() {
                Method::Perfect
            } else {
                Method::Agreeable
            }
        }
    };
    let (array, provenance) = match chosen {
        Method::Perfect => (construct_perfect(m, n)?, Provenance::perfect()),
        Method::Agreeable => {
            let params = params
                .map(|(m1, n1)| AgreeableParams::new(m, n, m1, n1))
                .transpose()?;
            match construct_agreeable(m, n, params) {
                Ok((a, used)) => (a, Provenance::agreeable(used.m1, used.n1)),
                Err(Error::NotAgreeable) if method == Method::Auto => {
                    return Err(Failure::Domain(format!(
                        "no explicit construction applies to ({m}, {n}); try `heffter search {m} {n}`"
                    )));
                }
                Err(e) => return Err(e.into()),
            }
        }
        Method::Auto => unreachable!(),
    };
    emit_array(&array, provenance, format);
    Ok(true)
}

fn emit_array(array: &HeffterArray, provenance: Provenance, format: Format) {
    match format {
        Format::Json => {
            let doc = ArrayDocument::from_array(array, Some(provenance));
            print!("{}", doc.to_canonical_json());
        }
        Format::Text => print!("{}", render_text(array)),
    }
}

fn load_array(file: &PathBuf) -> Result<HeffterArray, Failure> {
    let text = fs::read_to_string(file)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", file.display())))?;
    Ok(ArrayDocument::parse(&text)?.to_array()?)
}

/// Prints the complete verification report; the exit code reflects only
/// the requested checks, so a valid Heffter array that happens not to be
/// rank-one or globally simple still verifies unless those were asked for.
fn verify_command(file: &PathBuf, checks: &[CheckArg]) -> Result<bool, Failure> {
    let array = load_array(file)?;
    let report = array.verify();
    let with_multipliers = checks.contains(&CheckArg::Multipliers);

    let mut out = VerifyOut {
        half_set: report.half_set,
        rows_zero_sum: report.rows_zero_sum,
        cols_zero_sum: report.cols_zero_sum,
        rank_one: report.rank_one,
        globally_simple: report.globally_simple,
        failures: report
            .failures
            .iter()
            .map(|f| FailureOut {
                check: f.check.name().into(),
                location: f.location.clone(),
            })
            .collect(),
        multipliers: None,
    };
    if with_multipliers {
        let (group, method) = multiplier_group_auto(&array);
        out.multipliers = Some(MultipliersOut::new(&array, &group, method));
    }
    println!("{}", serde_json::to_string(&out).unwrap());

    let mut passed = true;
    if checks.contains(&CheckArg::Axioms) {
        passed &= report.is_heffter();
    }
    if checks.contains(&CheckArg::Rank) {
        passed &= report.rank_one;
    }
    if checks.contains(&CheckArg::Simple) {
        passed &= report.globally_simple;
    }
    if !passed {
        eprintln!("verification failed");
    }
    Ok(passed)
}

fn multiplier_group_auto(array: &HeffterArray) -> (MultiplierGroup, &'static str) {
    match array.multiplier_group_rank_one() {
        Ok(group) => (group, "rank_one"),
        Err(_) => (array.multiplier_group_brute(), "brute"),
    }
}

fn multipliers_command(file: &PathBuf, brute: bool) -> Result<bool, Failure> {
    let array = load_array(file)?;
    let (group, method) = if brute {
        (array.multiplier_group_brute(), "brute")
    } else {
        multiplier_group_auto(&array)
    };
    let out = MultipliersOut::new(&array, &group, method);
    println!("{}", serde_json::to_string(&out).unwrap());
    Ok(true)
}

fn search_command(
    m: u64,
    n: u64,
    strategy: StrategyArg,
    max_candidates: u64,
    seed: u64,
) -> Result<bool, Failure> {
    let (core_strategy, name) = match strategy {
        StrategyArg::Exhaustive => (SearchStrategy::Exhaustive, "exhaustive"),
        StrategyArg::Seeded => (SearchStrategy::SubgroupSeeded, "seeded"),
    };
    let cfg = SearchConfig {
        m,
        n,
        max_candidates,
        strategy: core_strategy,
        seed,
    };
    let outcome = search_rank_one(&cfg)?;
    eprintln!(
        "examined {} candidate factor pairs{}",
        outcome.candidates_examined,
        if outcome.exhausted { " (space exhausted)" } else { "" }
    );
    match outcome.found {
        Some(array) => {
            let doc =
                ArrayDocument::from_array(&array, Some(Provenance::search(name, seed, max_candidates)));
            print!("{}", doc.to_canonical_json());
            Ok(true)
        }
        None => {
            let summary = serde_json::json!({
                "found": false,
                "candidates_examined": outcome.candidates_examined,
                "exhausted": outcome.exhausted,
            });
            println!("{summary}");
            eprintln!("no rank-one H({m},{n}) found");
            Ok(false)
        }
    }
}

fn scan_command(max_q: u64, format: ScanFormat) {
    let rows = scan_pairs(max_q);
    match format {
        ScanFormat::Csv => {
            println!("m,n,q,prime_power,admissible,agreeable,optimal,perfect_eligible,m_o,n_o,lcm_odd");
            for c in &rows {
                println!(
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    c.m,
                    c.n,
                    c.q,
                    prime_power_label(c.prime_power),
                    c.admissible,
                    c.agreeable,
                    c.optimal_pair,
                    c.perfect_eligible,
                    c.m_odd,
                    c.n_odd,
                    c.lcm_odd
                );
            }
        }
        ScanFormat::Json => {
            let out: Vec<ClassifyOut> = rows.iter().map(ClassifyOut::from).collect();
            println!("{}", serde_json::to_string(&out).unwrap());
        }
    }
}

fn prime_power_label(pk: Option<(u64, u32)>) -> String {
    match pk {
        Some((p, 1)) => p.to_string(),
        Some((p, k)) => format!("{p}^{k}"),
        None => String::new(),
    }
}

#[derive(Serialize)]
struct ClassifyOut {
    m: u64,
    n: u64,
    q: u64,
    prime_power: Option<PrimePowerOut>,
    admissible: bool,
    agreeable: bool,
    optimal: bool,
    perfect_eligible: bool,
    m_o: u64,
    n_o: u64,
    rad_m_o: u64,
    rad_n_o: u64,
    lcm_odd: u64,
}

#[derive(Serialize)]
struct PrimePowerOut {
    p: u64,
    k: u32,
}

impl From<&PairClass> for ClassifyOut {
    fn from(c: &PairClass) -> ClassifyOut {
        ClassifyOut {
            m: c.m,
            n: c.n,
            q: c.q,
            prime_power: c.prime_power.map(|(p, k)| PrimePowerOut { p, k }),
            admissible: c.admissible,
            agreeable: c.agreeable,
            optimal: c.optimal_pair,
            perfect_eligible: c.perfect_eligible,
            m_o: c.m_odd,
            n_o: c.n_odd,
            rad_m_o: c.rad_m_odd,
            rad_n_o: c.rad_n_odd,
            lcm_odd: c.lcm_odd,
        }
    }
}

#[derive(Serialize)]
struct VerifyOut {
    half_set: bool,
    rows_zero_sum: bool,
    cols_zero_sum: bool,
    rank_one: bool,
    globally_simple: bool,
    failures: Vec<FailureOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    multipliers: Option<MultipliersOut>,
}

#[derive(Serialize)]
struct FailureOut {
    check: String,
    location: String,
}

#[derive(Serialize)]
struct MultipliersOut {
    method: String,
    order: usize,
    elements: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s_part: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t_part: Option<Vec<String>>,
}

impl MultipliersOut {
    fn new(array: &HeffterArray, group: &MultiplierGroup, method: &str) -> MultipliersOut {
        let render = |s: &ElementSet| {
            s.iter()
                .map(|x| array.field().format_element(x))
                .collect::<Vec<String>>()
        };
        MultipliersOut {
            method: method.into(),
            order: group.order(),
            elements: render(&group.elements),
            s_part: group.s_part.as_ref().map(&render),
            t_part: group.t_part.as_ref().map(&render),
        }
    }
}
