//! Command-line interface.
//!
//! Subcommands:
//!
//! * `ricci` — exact Ricci tensor of a family member or an algebra document;
//! * `solve` — exact conformal Ricci collineations, with a mandatory
//!   re-substitution check on every basis solution;
//! * `symbolic-system` — a family's collineation system with parameters left
//!   symbolic;
//! * `verify` — the full classification verification (see [`verify`]).
//!
//! Exit codes: `0` success, `1` usage or parse error, `2` family constraint
//! violation, `3` verification found a classification mismatch, `4` a solver
//! output failed re-substitution.

pub mod verify;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::collineation::{
    residual_check, solve_collineations, AlgebraInput, ResidualReport, SolutionSpace, PAIRS,
};
use crate::exactnum::Rational;
use crate::families::{self, make_family, Family, FamilyError, Params};
use crate::geometry::ricci;
use crate::multipoly::Polynomial;
use crate::NumericAlgebra;

use self::verify::{render_summary, run_verify, VerifyConfig};

/// Runs the CLI and returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version go to stdout and exit 0; real parse errors
            // exit 1.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

#[derive(Parser)]
#[command(
    name = "licol",
    version,
    about = "Exact Ricci curvature and conformal Ricci collineations on three-dimensional Lorentzian Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact Ricci tensor.
    Ricci(AlgebraArgs),
    /// Compute the space of conformal Ricci collineations.
    Solve(AlgebraArgs),
    /// Print a family's symbolic collineation system.
    SymbolicSystem(SymbolicSystemArgs),
    /// Verify the seven-family classification against first principles.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct AlgebraArgs {
    /// Family name (G1..G7); requires --params.
    #[arg(long)]
    family: Option<String>,
    /// Comma-separated parameter assignments, e.g. `alpha=1,beta=-1/2`.
    #[arg(long)]
    params: Option<String>,
    /// Path to an algebra document (JSON) instead of a family.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SymbolicSystemArgs {
    /// Family name (G1..G7).
    #[arg(long)]
    family: String,
    /// Sign of eta for the fourth family (1 or -1).
    #[arg(long, allow_negative_numbers = true)]
    eta: Option<i64>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Restrict verification to one family (default: all seven).
    #[arg(long)]
    family: Option<String>,
    /// Samples per reference case.
    #[arg(long, default_value_t = 25)]
    samples: usize,
    /// Seed for the deterministic sampling streams.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the full JSON report to this path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the JSON report to stdout instead of the summary.
    #[arg(long)]
    json: bool,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn residual(message: impl Into<String>) -> Self {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(err: FamilyError) -> Self {
        let code = match err {
            FamilyError::ConstraintViolated(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Ricci(args) => cmd_ricci(&args),
        Command::Solve(args) => cmd_solve(&args),
        Command::SymbolicSystem(args) => cmd_symbolic_system(&args),
        Command::Verify(args) => cmd_verify(&args),
    }
}

/// JSON description of a numeric algebra by the nonzero components of its
/// basis brackets: each entry gives the coefficient of `e_k` in
/// `[e_i, e_j]`. Indices are 1-based with `i < j`; omitted components are
/// zero; duplicate entries must agree. Values are rationals, written as
/// `"p/q"` strings or JSON integers.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub brackets: Vec<BracketComponent>,
}

/// One bracket component of an [`AlgebraDocument`].
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketComponent {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: Rational,
}

/// Errors in an [`AlgebraDocument`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocumentError {
    #[error("invalid bracket indices (i={i}, j={j}, k={k}): need 1 <= i < j <= 3 and 1 <= k <= 3")]
    InvalidIndices { i: usize, j: usize, k: usize },
    #[error("conflicting duplicate entries for (i={i}, j={j}, k={k})")]
    Conflict { i: usize, j: usize, k: usize },
}

impl AlgebraDocument {
    /// Canonical document for an algebra: nonzero components in (i, j, k)
    /// order.
    pub fn from_algebra(alg: &NumericAlgebra) -> Self {
        let mut brackets = Vec::new();
        for (i, j) in [(1usize, 2usize), (1, 3), (2, 3)] {
            let components = alg.bracket_basis(i - 1, j - 1);
            for (k, value) in components.iter().enumerate() {
                if !value.is_zero() {
                    brackets.push(BracketComponent {
                        i,
                        j,
                        k: k + 1,
                        value: value.clone(),
                    });
                }
            }
        }
        AlgebraDocument { brackets }
    }

    /// Validates the document and assembles the algebra.
    pub fn to_algebra(&self) -> Result<NumericAlgebra, DocumentError> {
        let mut seen: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
        for b in &self.brackets {
            let in_range =
                (1..=3).contains(&b.i) && (1..=3).contains(&b.j) && (1..=3).contains(&b.k);
            if !in_range || b.i >= b.j {
                return Err(DocumentError::InvalidIndices {
                    i: b.i,
                    j: b.j,
                    k: b.k,
                });
            }
            match seen.entry((b.i, b.j, b.k)) {
                Entry::Vacant(slot) => {
                    slot.insert(b.value.clone());
                }
                Entry::Occupied(slot) => {
                    if *slot.get() != b.value {
                        return Err(DocumentError::Conflict {
                            i: b.i,
                            j: b.j,
                            k: b.k,
                        });
                    }
                }
            }
        }
        let component = |i: usize, j: usize| -> [Rational; 3] {
            std::array::from_fn(|k| {
                seen.get(&(i, j, k + 1))
                    .cloned()
                    .unwrap_or_else(|| Rational::from_int(0))
            })
        };
        Ok(NumericAlgebra::new(
            component(1, 2),
            component(1, 3),
            component(2, 3),
        ))
    }
}

/// Parses `name=value,name=value` parameter lists.
fn parse_params(text: &str) -> Result<Params, Failure> {
    let mut params = Params::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (name, value) = piece.split_once('=').ok_or_else(|| {
            Failure::usage(format!(
                "malformed parameter `{piece}`; expected name=value"
            ))
        })?;
        let name = name.trim();
        let value: Rational = value
            .trim()
            .parse()
            .map_err(|e| Failure::usage(format!("invalid value for `{name}`: {e}")))?;
        if params.get(name).is_some() {
            return Err(Failure::usage(format!("duplicate parameter `{name}`")));
        }
        params.set(name, value);
    }
    Ok(params)
}

/// Builds the numeric algebra named by `--family/--params` or `--input`.
/// Returns the algebra plus any warnings (a document may violate the Jacobi
/// identity; the computation still runs on it as given).
fn load_algebra(args: &AlgebraArgs) -> Result<(NumericAlgebra, Vec<String>), Failure> {
    match (&args.family, &args.input) {
        (Some(_), Some(_)) | (None, None) => {
            Err(Failure::usage("pass exactly one of --family or --input"))
        }
        (Some(name), None) => {
            let family: Family = name.parse().map_err(Failure::from)?;
            let text = args
                .params
                .as_deref()
                .ok_or_else(|| Failure::usage("--family requires --params"))?;
            let params = parse_params(text)?;
            let alg = make_family(family, &params)?;
            Ok((alg, Vec::new()))
        }
        (None, Some(path)) => {
            if args.params.is_some() {
                return Err(Failure::usage("--params applies only with --family"));
            }
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            let doc: AlgebraDocument = serde_json::from_str(&text)
                .map_err(|e| Failure::usage(format!("invalid algebra document: {e}")))?;
            let alg = doc
                .to_algebra()
                .map_err(|e| Failure::usage(e.to_string()))?;
            let mut warnings = Vec::new();
            if let Err(violation) = alg.jacobi_check() {
                warnings.push(violation.to_string());
            }
            Ok((alg, warnings))
        }
    }
}

#[derive(Serialize)]
struct RicciEntryOut {
    i: usize,
    j: usize,
    value: Rational,
}

#[derive(Serialize)]
struct RicciOutput {
    warnings: Vec<String>,
    entries: Vec<RicciEntryOut>,
}

fn cmd_ricci(args: &AlgebraArgs) -> Result<i32, Failure> {
    let (alg, warnings) = load_algebra(args)?;
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    let ric = ricci(&alg);
    let entries: Vec<RicciEntryOut> = PAIRS
        .iter()
        .map(|&(i, j)| RicciEntryOut {
            i: i + 1,
            j: j + 1,
            value: ric.entry(i, j).clone(),
        })
        .collect();
    if args.json {
        print_json(&RicciOutput { warnings, entries });
    } else {
        for e in &entries {
            println!("Ric(e{},e{}) = {}", e.i, e.j, e.value);
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct SolveOutput {
    warnings: Vec<String>,
    solution: SolutionSpace,
    residual: ResidualReport,
}

fn cmd_solve(args: &AlgebraArgs) -> Result<i32, Failure> {
    let (alg, warnings) = load_algebra(args)?;
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    let solution =
        solve_collineations(AlgebraInput::Numeric(&alg)).expect("numeric algebras always solve");
    let residual = residual_check(&alg, &solution);
    let output = SolveOutput {
        warnings,
        solution,
        residual,
    };
    if args.json {
        print_json(&output);
    } else {
        println!("kernel dimension: {}", output.solution.dimension());
        println!("lambda forced zero: {}", output.solution.lambda_forced_zero);
        println!("kernel basis (lambda1, lambda2, lambda3, lambda):");
        print_vectors(&output.solution.kernel_basis);
        println!("collineation basis (e1, e2, e3):");
        print_vectors(&output.solution.vrc_basis);
        println!(
            "residual check: {} ({} solution{} checked)",
            if output.residual.ok { "ok" } else { "FAILED" },
            output.residual.checked,
            if output.residual.checked == 1 {
                ""
            } else {
                "s"
            },
        );
    }
    if output.residual.ok {
        Ok(0)
    } else {
        Err(Failure::residual(format!(
            "{} of {} solutions failed re-substitution",
            output.residual.failures.len(),
            output.residual.checked
        )))
    }
}

fn print_vectors(vectors: &[Vec<Rational>]) {
    if vectors.is_empty() {
        println!("  (none)");
        return;
    }
    for v in vectors {
        let parts: Vec<String> = v.iter().map(Rational::to_string).collect();
        println!("  ({})", parts.join(", "));
    }
}

#[derive(Serialize)]
struct SymbolicRowOut {
    i: usize,
    j: usize,
    lambda1: Polynomial,
    lambda2: Polynomial,
    lambda3: Polynomial,
    lambda: Polynomial,
}

#[derive(Serialize)]
struct SymbolicSystemOutput {
    family: Family,
    #[serde(skip_serializing_if = "Option::is_none")]
    eta: Option<i64>,
    rows: Vec<SymbolicRowOut>,
}

fn cmd_symbolic_system(args: &SymbolicSystemArgs) -> Result<i32, Failure> {
    let family: Family = args.family.parse().map_err(Failure::from)?;
    if let Some(h) = args.eta {
        if h != 1 && h != -1 {
            return Err(Failure::usage("--eta must be 1 or -1"));
        }
    }
    let system = families::symbolic_system(family, args.eta)?;
    let rows: Vec<SymbolicRowOut> = system
        .rows
        .iter()
        .map(|r| SymbolicRowOut {
            i: r.i,
            j: r.j,
            lambda1: r.coeffs[0].clone(),
            lambda2: r.coeffs[1].clone(),
            lambda3: r.coeffs[2].clone(),
            lambda: r.coeffs[3].clone(),
        })
        .collect();
    let output = SymbolicSystemOutput {
        family,
        eta: args.eta,
        rows,
    };
    if args.json {
        print_json(&output);
    } else {
        println!(
            "family {}: rows (i,j): lambda1 | lambda2 | lambda3 | lambda",
            output.family
        );
        for r in &output.rows {
            println!(
                "({},{}): {} | {} | {} | {}",
                r.i, r.j, r.lambda1, r.lambda2, r.lambda3, r.lambda
            );
        }
    }
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32, Failure> {
    let mut config = VerifyConfig::default();
    if let Some(name) = &args.family {
        let family: Family = name.parse().map_err(Failure::from)?;
        config.families = vec![family];
    }
    config.samples_per_case = args.samples;
    config.complement_samples = config.complement_samples.max(args.samples);
    config.seed = args.seed;
    let report = run_verify(&config);
    if let Some(path) = &args.out {
        write_json(path, &report)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    if args.json {
        print_json(&report);
    } else {
        print!("{}", render_summary(&report));
    }
    Ok(if report.pass { 0 } else { 3 })
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("output types serialize")
    );
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("output types serialize");
    text.push('\n');
    fs::write(path, text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_parse_rationals_and_reject_malformed_pieces() {
        let params = parse_params("alpha=1,beta=-1/2").expect("parses");
        assert_eq!(params.get("alpha"), Some(&Rational::from_int(1)));
        assert_eq!(
            params.get("beta"),
            Some(&Rational::new(-1, 2).expect("valid"))
        );
        assert_eq!(parse_params("alpha").unwrap_err().code, 1);
        assert_eq!(parse_params("alpha=1,alpha=2").unwrap_err().code, 1);
        assert_eq!(parse_params("alpha=1/0").unwrap_err().code, 1);
    }

    #[test]
    fn documents_round_trip_through_algebras() {
        let params = Params::from_pairs([
            ("alpha", Rational::from_int(1)),
            ("beta", Rational::new(-1, 2).expect("valid")),
        ]);
        let alg = make_family(Family::G1, &params).expect("valid");
        let doc = AlgebraDocument::from_algebra(&alg);
        let rebuilt = doc.to_algebra().expect("round-trips");
        for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
            assert_eq!(alg.bracket_basis(i, j), rebuilt.bracket_basis(i, j));
        }
        assert_eq!(AlgebraDocument::from_algebra(&rebuilt), doc);
    }

    #[test]
    fn documents_reject_bad_indices_and_conflicting_duplicates() {
        let entry = |i, j, k, n| BracketComponent {
            i,
            j,
            k,
            value: Rational::from_int(n),
        };
        let bad = AlgebraDocument {
            brackets: vec![entry(2, 1, 1, 1)],
        };
        assert_eq!(
            bad.to_algebra(),
            Err(DocumentError::InvalidIndices { i: 2, j: 1, k: 1 })
        );
        let conflict = AlgebraDocument {
            brackets: vec![entry(1, 2, 3, 1), entry(1, 2, 3, 2)],
        };
        assert_eq!(
            conflict.to_algebra(),
            Err(DocumentError::Conflict { i: 1, j: 2, k: 3 })
        );
        let agreeing = AlgebraDocument {
            brackets: vec![entry(1, 2, 3, 1), entry(1, 2, 3, 1)],
        };
        assert!(agreeing.to_algebra().is_ok());
    }

    #[test]
    fn documents_accept_integer_and_string_values() {
        let doc: AlgebraDocument = serde_json::from_str(
            r#"{"brackets": [
                {"i": 1, "j": 2, "k": 1, "value": -2},
                {"i": 1, "j": 3, "k": 2, "value": "3/4"}
            ]}"#,
        )
        .expect("parses");
        let alg = doc.to_algebra().expect("valid");
        assert_eq!(alg.bracket_basis(0, 1)[0], Rational::from_int(-2));
        assert_eq!(
            alg.bracket_basis(0, 2)[1],
            Rational::new(3, 4).expect("valid")
        );
    }

    #[test]
    fn family_errors_map_to_exit_codes() {
        let usage: Failure = FamilyError::UnknownFamily("G9".to_string()).into();
        assert_eq!(usage.code, 1);
        let constraint: Failure =
            FamilyError::ConstraintViolated("G1 requires alpha != 0".to_string()).into();
        assert_eq!(constraint.code, 2);
    }
}
