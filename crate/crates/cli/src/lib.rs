//! Command implementations for the `knotcover` binary.
//!
//! Every command returns its full stdout as a string plus an exit code, so
//! the commands are testable without spawning a process.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotcover::coverings::{covering_report, CoveringError};
use knotcover::linalg::AbelianGroup;
use knotcover::selftest::{self, SelftestOptions};
use knotcover::{
    abelianize, enumerate_monodromies, homology_of_complement, lift, parse_presentation, IntMatrix,
    KnotGroupPresentation, LiftError, Monodromy, PresentationError,
};
use num_bigint::BigInt;
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "knotcover",
    version,
    about = "Strongly-cyclic branched coverings of (g,1)-knots"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Abelian invariants of a presentation and the homology it determines.
    Analyze(InputArgs),
    /// Existence, count and monodromies of n-fold coverings.
    Coverings(CoveringArgs),
    /// Cyclic presentation of a covering's fundamental group.
    Lift(LiftArgs),
    /// Run the seeded oracle suites.
    Selftest(SelftestArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Presentation file; stdin when absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct CoveringArgs {
    #[command(flatten)]
    pub io: InputArgs,
    /// Covering degree, at least 2.
    #[arg(long)]
    pub n: u32,
    /// Maximum number of monodromies listed.
    #[arg(long, default_value_t = 100)]
    pub cap: usize,
}

#[derive(Args, Debug)]
pub struct LiftArgs {
    #[command(flatten)]
    pub io: InputArgs,
    #[arg(long)]
    pub n: u32,
    /// Images of a1..ag, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "index")]
    pub monodromy: Option<Vec<u32>>,
    /// Position (0-based) in the lexicographic list of monodromies; default 0.
    #[arg(long)]
    pub index: Option<usize>,
    /// Also print all m*n relators.
    #[arg(long)]
    pub expand: bool,
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value_t = 200)]
    pub snf_cases: usize,
    #[arg(long, default_value_t = 500)]
    pub count_cases: usize,
    #[arg(long, default_value_t = 500)]
    pub lift_cases: usize,
    /// Test hook: corrupt every Smith form before checking it.
    #[arg(long, hide = true)]
    pub corrupt_snf: bool,
}

/// Result of one command: what goes to stdout, what goes to stderr, and the
/// process exit code.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_INPUT,
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Analyze(args) => with_input(&args, |p| cmd_analyze(p, args.format)),
        Command::Coverings(args) => with_input(&args.io, |p| cmd_coverings(p, &args)),
        Command::Lift(args) => with_input(&args.io, |p| cmd_lift(p, &args)),
        Command::Selftest(args) => cmd_selftest(&args),
    }
}

fn read_input(args: &InputArgs) -> Result<String, String> {
    match &args.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(s)
        }
    }
}

fn with_input(args: &InputArgs, f: impl FnOnce(&KnotGroupPresentation) -> Outcome) -> Outcome {
    let text = match read_input(args) {
        Ok(t) => t,
        Err(e) => return Outcome::input_error(e),
    };
    match parse_presentation(&text) {
        Ok(p) => f(&p),
        Err(e) => Outcome::input_error(describe_parse_error(&e)),
    }
}

fn describe_parse_error(e: &PresentationError) -> String {
    match e {
        PresentationError::SyntaxError { .. } => format!("SyntaxError: {e}"),
        PresentationError::GenusMismatch { .. } => format!("GenusMismatch: {e}"),
        PresentationError::IndexOutOfRange { .. } => format!("IndexOutOfRange: {e}"),
        PresentationError::DuplicateRelatorLabel { .. } => format!("DuplicateRelatorLabel: {e}"),
    }
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn matrix_strings(m: &IntMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| strings(r)).collect()
}

fn join(v: &[BigInt]) -> String {
    if v.is_empty() {
        "-".to_string()
    } else {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
pub struct GroupReport {
    pub free_rank: String,
    pub torsion: Vec<String>,
}

impl From<&AbelianGroup> for GroupReport {
    fn from(g: &AbelianGroup) -> Self {
        GroupReport {
            free_rank: g.free_rank.to_string(),
            torsion: strings(&g.torsion),
        }
    }
}

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub genus: String,
    #[serde(rename = "H")]
    pub h: Vec<Vec<String>>,
    pub b: Vec<String>,
    pub invariant_factors: Vec<String>,
    pub invariant_factors_augmented: Vec<String>,
    pub free_rank: String,
    pub torsion: Vec<String>,
    pub complement: GroupReport,
}

pub fn cmd_analyze(p: &KnotGroupPresentation, format: Format) -> Outcome {
    let h = abelianize(p);
    let complement = homology_of_complement(p);
    let report = AnalyzeReport {
        genus: p.genus().to_string(),
        h: matrix_strings(&h.h),
        b: strings(&h.b),
        invariant_factors: strings(&h.e),
        invariant_factors_augmented: strings(&h.e_prime),
        free_rank: h.free_rank.to_string(),
        torsion: strings(&h.torsion),
        complement: GroupReport::from(&complement),
    };
    let out = match format {
        Format::Json => json(&report),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "genus: {}", p.genus()).unwrap();
            writeln!(s, "H: {}", h.h).unwrap();
            writeln!(s, "b: {}", join(&h.b)).unwrap();
            writeln!(s, "invariant factors of H: {}", join(&h.e)).unwrap();
            writeln!(s, "invariant factors of H': {}", join(&h.e_prime)).unwrap();
            writeln!(s, "free rank d: {}", h.free_rank).unwrap();
            writeln!(s, "torsion: {}", join(&h.torsion)).unwrap();
            writeln!(s, "H1(N) = {}", h.ambient_homology()).unwrap();
            writeln!(s, "H1(N - K) = {complement}").unwrap();
            s
        }
    };
    Outcome::ok(out)
}

#[derive(Serialize)]
pub struct CoveringsReport {
    pub n: String,
    pub exists: bool,
    pub count: String,
    pub unique: bool,
    pub monodromies: Vec<Vec<String>>,
    pub truncated: bool,
}

pub fn cmd_coverings(p: &KnotGroupPresentation, args: &CoveringArgs) -> Outcome {
    let h = abelianize(p);
    let report = match covering_report(&h, args.n, args.cap) {
        Ok(r) => r,
        Err(e) => return Outcome::input_error(e),
    };
    let out = match args.io.format {
        Format::Json => json(&CoveringsReport {
            n: report.n.to_string(),
            exists: report.exists,
            count: report.count.to_string(),
            unique: report.unique,
            monodromies: report
                .monodromies
                .iter()
                .map(|m| m.images().iter().map(ToString::to_string).collect())
                .collect(),
            truncated: report.truncated,
        }),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "n: {}", report.n).unwrap();
            writeln!(s, "exists: {}", report.exists).unwrap();
            writeln!(s, "count: {}", report.count).unwrap();
            writeln!(s, "unique: {}", report.unique).unwrap();
            if report.exists {
                writeln!(s, "monodromies:").unwrap();
                for m in &report.monodromies {
                    let xs: Vec<String> = m.images().iter().map(ToString::to_string).collect();
                    writeln!(s, "  ({})", xs.join(", ")).unwrap();
                }
                if report.truncated {
                    writeln!(
                        s,
                        "  ... truncated at {} of {}",
                        report.monodromies.len(),
                        report.count
                    )
                    .unwrap();
                }
            }
            s
        }
    };
    Outcome::ok(out)
}

#[derive(Serialize)]
pub struct LiftReport {
    pub n: String,
    pub monodromy: Vec<String>,
    pub words: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relators: Option<Vec<String>>,
    pub covering_homology: GroupReport,
    pub notes: Vec<String>,
}

fn select_monodromy(p: &KnotGroupPresentation, args: &LiftArgs) -> Result<Monodromy, String> {
    let h = abelianize(p);
    if let Some(x) = &args.monodromy {
        return Monodromy::new(&h, args.n, x.clone()).map_err(|e| match e {
            CoveringError::InvalidMonodromy { .. } => format!("InvalidMonodromy: {e}"),
            other => other.to_string(),
        });
    }
    let index = args.index.unwrap_or(0);
    let list = enumerate_monodromies(&h, args.n, Some(index.saturating_add(1)))
        .map_err(|e| e.to_string())?;
    list.monodromies.get(index).cloned().ok_or_else(|| {
        if list.count == 0u32.into() {
            format!(
                "InvalidMonodromy: no {}-fold covering exists, so there is no monodromy to lift",
                args.n
            )
        } else {
            format!(
                "monodromy index {index} out of range, only {} exist",
                list.count
            )
        }
    })
}

pub fn cmd_lift(p: &KnotGroupPresentation, args: &LiftArgs) -> Outcome {
    let mono = match select_monodromy(p, args) {
        Ok(m) => m,
        Err(e) => return Outcome::input_error(e),
    };
    let lifted = match lift(p, &mono) {
        Ok(l) => l,
        Err(e @ LiftError::InvalidMonodromy(_)) => {
            return Outcome::input_error(format!("InvalidMonodromy: {e}"))
        }
        Err(e) => return Outcome::input_error(e),
    };
    let cp = &lifted.presentation;
    let homology = cp.covering_homology();
    let relators = args.expand.then(|| cp.expand_relators());
    let images: Vec<String> = mono.images().iter().map(ToString::to_string).collect();
    let out = match args.io.format {
        Format::Json => json(&LiftReport {
            n: mono.n().to_string(),
            monodromy: images,
            words: cp.words().iter().map(ToString::to_string).collect(),
            relators: relators.map(|rs| rs.iter().map(ToString::to_string).collect()),
            covering_homology: GroupReport::from(&homology),
            notes: lifted.notes.iter().map(ToString::to_string).collect(),
        }),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "# monodromy ({}) mod {}", images.join(", "), mono.n()).unwrap();
            for note in &lifted.notes {
                writeln!(s, "# note: {note}").unwrap();
            }
            write!(s, "{cp}").unwrap();
            if let Some(rs) = relators {
                writeln!(s, "# relators:").unwrap();
                for (k, r) in rs.iter().enumerate() {
                    let (i, j) = (k / mono.n() as usize + 1, k % mono.n() as usize + 1);
                    writeln!(s, "#   r{i}.{j} = {r}").unwrap();
                }
            }
            writeln!(s, "# covering homology: {homology}").unwrap();
            s
        }
    };
    Outcome::ok(out)
}

#[derive(Serialize)]
struct SuiteJson {
    name: String,
    passed: String,
    failed: String,
    fingerprint: String,
    first_failure: Option<String>,
}

pub fn cmd_selftest(args: &SelftestArgs) -> Outcome {
    let report = selftest::run(SelftestOptions {
        seed: args.seed,
        snf_cases: args.snf_cases,
        count_cases: args.count_cases,
        lift_cases: args.lift_cases,
        corrupt_snf: args.corrupt_snf,
    });
    let stdout = match args.format {
        Format::Json => json(
            &report
                .suites
                .iter()
                .map(|s| SuiteJson {
                    name: s.name.to_string(),
                    passed: s.passed.to_string(),
                    failed: s.failed.to_string(),
                    fingerprint: format!("{:016x}", s.fingerprint),
                    first_failure: s.first_failure.clone(),
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "seed {}", report.seed).unwrap();
            for suite in &report.suites {
                let status = if suite.ok() { "PASS" } else { "FAIL" };
                writeln!(
                    s,
                    "{status} {:<22} {} passed, {} failed  [cases {:016x}]",
                    suite.name, suite.passed, suite.failed, suite.fingerprint
                )
                .unwrap();
                if let Some(f) = &suite.first_failure {
                    writeln!(s, "     first failure: {f}").unwrap();
                }
            }
            s
        }
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: if report.ok() { EXIT_OK } else { EXIT_INTERNAL },
    }
}
