//! The verification engine behind `licol verify`.
//!
//! For every family this engine:
//!
//! 1. derives the symbolic Ricci tensor and compares it entrywise against
//!    the reference Ricci table, modulo the family's defining constraint
//!    (raw forms are recorded alongside; for the fourth family the
//!    comparison runs with `eta` symbolic under `eta^2 = 1` and both sign
//!    evaluations are attached);
//! 2. derives the symbolic collineation system and compares it against the
//!    reference system display the same way;
//! 3. samples each reference case's locus, solves the exact kernel at every
//!    sample, and compares the computed collineation space against the
//!    union of the spans asserted by all reference cases matching there
//!    (cases may overlap);
//! 4. samples the complement of all case loci, where the reference
//!    classification implies the trivial space, and solves there;
//! 5. re-substitutes every solver output into the defining equation through
//!    an independent code path, and checks that vectors outside a computed
//!    nontrivial proper space leave nonzero residuals;
//! 6. cross-checks the symbolic system against the numeric assembly at
//!    random parameter assignments.
//!
//! Discrepancy lists (steps 1–2) are informational: they document where the
//! reference tables disagree with first-principles derivation. The
//! top-level `pass` flag reflects steps 3–4 only: it is true iff every
//! sampled span matched the reference prediction and every complement
//! sample was trivial.
//!
//! Determinism: each sampling unit draws from its own stream, seeded from
//! the run seed XOR an FNV-1a hash of the unit's label, so results are
//! independent of thread scheduling and stable across runs.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::collineation::{
    build_system, canonical_span, residual_check, residual_of, solve_collineations, AlgebraInput,
    PAIRS,
};
use crate::exactnum::{in_span, span_equal, Rational};
use crate::families::{
    self, case_ids, make_family, predict_case, sample_case, sample_complement, sample_generic,
    symbolic_algebra, symbolic_algebra_g4_eta, tables, Family, Params,
};
use crate::geometry::ricci;
use crate::multipoly::{standard_ring, Polynomial};
use crate::SymbolicAlgebra;
use num_traits::Zero;

/// Knobs for a verification run.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub families: Vec<Family>,
    /// Samples drawn per reference case.
    pub samples_per_case: usize,
    /// Samples drawn from each family's complement of all case loci.
    pub complement_samples: usize,
    /// Random parameter assignments per family for the symbolic/numeric
    /// cross-check.
    pub consistency_assignments: usize,
    /// Vectors outside each computed nontrivial proper space whose
    /// residuals must not vanish.
    pub outside_vectors: usize,
    pub seed: u64,
    pub max_attempts: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            families: families::ALL_FAMILIES.to_vec(),
            samples_per_case: 25,
            complement_samples: 100,
            consistency_assignments: 10,
            outside_vectors: 20,
            seed: 0,
            max_attempts: families::max_sampler_attempts(),
        }
    }
}

/// One entry where a derived table and the reference table disagree modulo
/// the family constraint. `derived`/`reference`/`difference` are canonical
/// normal forms; the raw fields keep the unreduced polynomials.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Discrepancy {
    pub i: usize,
    pub j: usize,
    /// `"ricci"` for Ricci-table entries; `"lambda1".."lambda3"` for system
    /// columns.
    pub column: String,
    pub derived: String,
    pub reference: String,
    pub difference: String,
    pub derived_raw: String,
    pub reference_raw: String,
    /// For the fourth family: both sign evaluations of the entry.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta_evaluations: Option<Vec<EtaEvaluation>>,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct EtaEvaluation {
    pub eta: i64,
    pub derived: String,
    pub reference: String,
    pub equal: bool,
}

/// Outcome of the symbolic Ricci comparison for one family.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct RicciComparison {
    /// False when the reference states no closed-form table; only the
    /// structural check applies then.
    pub reference_available: bool,
    pub entries_compared: usize,
    /// When no reference table exists: whether the derived off-diagonal
    /// entries vanish, the structural fact the reference does assert.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offdiagonal_zero: Option<bool>,
    pub discrepancies: Vec<Discrepancy>,
}

/// Outcome of the symbolic system comparison for one family.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct SystemComparison {
    pub entries_compared: usize,
    pub discrepancies: Vec<Discrepancy>,
}

/// One sampled point where the computed collineation space differs from the
/// reference prediction.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct SpanMismatch {
    pub params: Params,
    pub matched_cases: Vec<String>,
    /// Canonical basis of the span the reference classification predicts.
    pub predicted_span: Vec<Vec<Rational>>,
    /// Canonical basis of the exactly computed space.
    pub computed_span: Vec<Vec<Rational>>,
}

/// Residual bookkeeping for one verification unit.
#[derive(Clone, PartialEq, Debug, Default, Serialize)]
pub struct ResidualSummary {
    /// Kernel basis vectors re-substituted into the defining equation.
    pub solutions_checked: usize,
    /// Solutions whose residual failed to vanish (must stay zero).
    pub solution_failures: usize,
    /// Vectors outside a computed nontrivial proper space checked.
    pub outside_checked: usize,
    /// Outside vectors whose residual vanished anyway (must stay zero).
    pub outside_failures: usize,
}

/// Verification outcome for one reference case.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CaseReport {
    pub case: String,
    pub requested: usize,
    pub samples: usize,
    pub attempts: u64,
    /// True iff the sampler could not reach the requested count (empty or
    /// finite locus, or attempt budget hit). A warning, not a failure.
    pub exhausted: bool,
    /// True iff every solve forced the conformal factor to zero.
    pub lambda_zero_ok: bool,
    pub span_matches: usize,
    pub span_mismatches: Vec<SpanMismatch>,
    pub residual: ResidualSummary,
}

/// Verification outcome for a family's complement sampling.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ComplementReport {
    pub requested: usize,
    pub samples: usize,
    pub attempts: u64,
    pub exhausted: bool,
    pub lambda_zero_ok: bool,
    /// Samples confirming the predicted trivial space.
    pub trivial: usize,
    /// Samples where a nontrivial space exists although no reference case
    /// claims one.
    pub counterexamples: Vec<SpanMismatch>,
    pub residual: ResidualSummary,
}

/// Symbolic-vs-numeric cross-check outcome for one family.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ConsistencyReport {
    pub assignments: usize,
    pub entries_compared: usize,
    pub mismatches: usize,
}

/// Everything verified about one family.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct FamilyReport {
    pub family: Family,
    pub ricci: RicciComparison,
    pub system: SystemComparison,
    pub cases: Vec<CaseReport>,
    pub complement: ComplementReport,
    pub consistency: ConsistencyReport,
}

/// Aggregate counts across all verified families.
#[derive(Clone, PartialEq, Debug, Default, Serialize)]
pub struct Totals {
    pub ricci_discrepancies: usize,
    pub system_discrepancies: usize,
    pub case_samples: usize,
    pub span_mismatches: usize,
    pub complement_samples: usize,
    pub complement_counterexamples: usize,
    pub residual_solution_failures: usize,
    pub residual_outside_failures: usize,
    pub consistency_mismatches: usize,
}

/// The full verification report.
///
/// `pass` is true iff no sampled span mismatched the reference prediction
/// and no complement sample carried a nontrivial space. Table discrepancies
/// are reported but do not fail the run; sampler exhaustion is a warning.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples_per_case: usize,
    pub complement_samples_per_family: usize,
    pub families: Vec<FamilyReport>,
    pub totals: Totals,
    pub pass: bool,
}

fn fnv1a(s: &str) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for byte in s.as_bytes() {
        hash ^= u64::from(*byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

fn stream(seed: u64, label: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ fnv1a(label))
}

/// Runs the whole verification.
pub fn run_verify(config: &VerifyConfig) -> VerifyReport {
    let families: Vec<FamilyReport> = config
        .families
        .clone()
        .into_par_iter()
        .map(|fam| verify_family(config, fam))
        .collect();
    let mut totals = Totals::default();
    for fr in &families {
        totals.ricci_discrepancies += fr.ricci.discrepancies.len();
        totals.system_discrepancies += fr.system.discrepancies.len();
        for c in &fr.cases {
            totals.case_samples += c.samples;
            totals.span_mismatches += c.span_mismatches.len();
            totals.residual_solution_failures += c.residual.solution_failures;
            totals.residual_outside_failures += c.residual.outside_failures;
        }
        totals.complement_samples += fr.complement.samples;
        totals.complement_counterexamples += fr.complement.counterexamples.len();
        totals.residual_solution_failures += fr.complement.residual.solution_failures;
        totals.residual_outside_failures += fr.complement.residual.outside_failures;
        totals.consistency_mismatches += fr.consistency.mismatches;
    }
    let pass = totals.span_mismatches == 0 && totals.complement_counterexamples == 0;
    VerifyReport {
        seed: config.seed,
        samples_per_case: config.samples_per_case,
        complement_samples_per_family: config.complement_samples,
        families,
        totals,
        pass,
    }
}

fn verify_family(config: &VerifyConfig, fam: Family) -> FamilyReport {
    let cases: Vec<CaseReport> = case_ids(fam)
        .par_iter()
        .map(|id| verify_case(config, fam, id))
        .collect();
    FamilyReport {
        family: fam,
        ricci: compare_ricci(fam),
        system: compare_system(fam),
        cases,
        complement: verify_complement(config, fam),
        consistency: verify_consistency(config, fam),
    }
}

/// The symbolic algebra used for table comparisons: `eta` stays a variable
/// for the fourth family so one reduced comparison covers both signs.
fn comparison_algebra(fam: Family) -> SymbolicAlgebra {
    if fam == Family::G4 {
        symbolic_algebra_g4_eta()
    } else {
        symbolic_algebra(fam, None).expect("non-G4 symbolic algebras need no eta")
    }
}

fn parse_reference(text: &str) -> Polynomial {
    Polynomial::parse(standard_ring(), text).expect("reference tables parse")
}

fn eta_evaluations(
    fam: Family,
    derived_raw: &Polynomial,
    reference_raw: &Polynomial,
) -> Option<Vec<EtaEvaluation>> {
    if fam != Family::G4 {
        return None;
    }
    Some(
        [1i64, -1]
            .into_iter()
            .map(|h| {
                let assign = BTreeMap::from([("eta".to_string(), Rational::from_int(h))]);
                let d = derived_raw.eval_partial(&assign);
                let r = reference_raw.eval_partial(&assign);
                EtaEvaluation {
                    eta: h,
                    equal: d == r,
                    derived: d.to_string(),
                    reference: r.to_string(),
                }
            })
            .collect(),
    )
}

fn compare_entry(
    fam: Family,
    i: usize,
    j: usize,
    column: &str,
    derived_raw: &Polynomial,
    reference_text: &str,
    out: &mut Vec<Discrepancy>,
) {
    let reference_raw = parse_reference(reference_text);
    let derived = families::reduce_constraint(fam, derived_raw);
    let reference = families::reduce_constraint(fam, &reference_raw);
    if derived == reference {
        return;
    }
    let difference = derived
        .try_sub(&reference)
        .expect("both sides live in the standard ring");
    out.push(Discrepancy {
        i: i + 1,
        j: j + 1,
        column: column.to_string(),
        derived: derived.to_string(),
        reference: reference.to_string(),
        difference: difference.to_string(),
        derived_raw: derived_raw.to_string(),
        reference_raw: reference_raw.to_string(),
        eta_evaluations: eta_evaluations(fam, derived_raw, &reference_raw),
    });
}

fn compare_ricci(fam: Family) -> RicciComparison {
    let ric = ricci(&comparison_algebra(fam));
    match tables::reference_ricci(fam) {
        None => {
            let offdiag_zero = [(0, 1), (0, 2), (1, 2)]
                .into_iter()
                .all(|(i, j)| ric.entry(i, j).is_zero());
            RicciComparison {
                reference_available: false,
                entries_compared: 3,
                offdiagonal_zero: Some(offdiag_zero),
                discrepancies: Vec::new(),
            }
        }
        Some(table) => {
            let mut discrepancies = Vec::new();
            for (idx, &(i, j)) in PAIRS.iter().enumerate() {
                compare_entry(
                    fam,
                    i,
                    j,
                    "ricci",
                    ric.entry(i, j),
                    table[idx],
                    &mut discrepancies,
                );
            }
            RicciComparison {
                reference_available: true,
                entries_compared: 6,
                offdiagonal_zero: None,
                discrepancies,
            }
        }
    }
}

fn compare_system(fam: Family) -> SystemComparison {
    let system = build_system(&comparison_algebra(fam));
    let table = tables::reference_system(fam);
    let mut discrepancies = Vec::new();
    for (idx, &(i, j)) in PAIRS.iter().enumerate() {
        for col in 0..3 {
            compare_entry(
                fam,
                i,
                j,
                &format!("lambda{}", col + 1),
                system.entry(idx, col),
                table[idx][col],
                &mut discrepancies,
            );
        }
    }
    SystemComparison {
        entries_compared: 18,
        discrepancies,
    }
}

/// Solves at one sampled point and records span agreement plus residuals.
#[allow(clippy::too_many_arguments)]
fn check_point<R: Rng + ?Sized>(
    fam: Family,
    params: &Params,
    expect_trivial: bool,
    outside_vectors: usize,
    rng: &mut R,
    lambda_zero_ok: &mut bool,
    mismatches: &mut Vec<SpanMismatch>,
    residual: &mut ResidualSummary,
) -> bool {
    let alg = make_family(fam, params).expect("sampled points validate");
    let space = solve_collineations(AlgebraInput::Numeric(&alg)).expect("numeric algebra");
    if !space.lambda_forced_zero {
        *lambda_zero_ok = false;
    }
    let matched = predict_case(fam, params).expect("sampled points validate");
    debug_assert!(
        !expect_trivial || matched.is_empty(),
        "complement samples match no case"
    );
    let predicted: Vec<Vec<Rational>> = matched
        .iter()
        .flat_map(|c| c.span.iter().cloned())
        .collect();
    let agrees = span_equal(&predicted, &space.vrc_basis);
    if !agrees {
        mismatches.push(SpanMismatch {
            params: params.clone(),
            matched_cases: matched.iter().map(|c| c.id.to_string()).collect(),
            predicted_span: canonical_span(&predicted),
            computed_span: space.vrc_basis.clone(),
        });
    }
    let check = residual_check(&alg, &space);
    residual.solutions_checked += check.checked;
    residual.solution_failures += check.failures.len();
    let dim = space.vrc_basis.len();
    if (1..=2).contains(&dim) {
        let mut found = 0;
        let mut guard = 0u32;
        while found < outside_vectors && guard < 100_000 {
            guard += 1;
            let v = vec![
                families::random_rational(rng),
                families::random_rational(rng),
                families::random_rational(rng),
            ];
            if in_span(&space.vrc_basis, &v) {
                continue;
            }
            found += 1;
            residual.outside_checked += 1;
            let r = residual_of(
                &alg,
                &[
                    v[0].clone(),
                    v[1].clone(),
                    v[2].clone(),
                    Rational::from_int(0),
                ],
            );
            if r.iter().all(Rational::is_zero) {
                residual.outside_failures += 1;
            }
        }
    }
    agrees
}

fn verify_case(config: &VerifyConfig, fam: Family, case_id: &str) -> CaseReport {
    let mut rng = stream(config.seed, case_id);
    let outcome = sample_case(
        fam,
        case_id,
        config.samples_per_case,
        &mut rng,
        config.max_attempts,
    )
    .expect("case ids come from case_ids");
    let mut lambda_zero_ok = true;
    let mut span_matches = 0;
    let mut span_mismatches = Vec::new();
    let mut residual = ResidualSummary::default();
    for params in &outcome.samples {
        if check_point(
            fam,
            params,
            false,
            config.outside_vectors,
            &mut rng,
            &mut lambda_zero_ok,
            &mut span_mismatches,
            &mut residual,
        ) {
            span_matches += 1;
        }
    }
    CaseReport {
        case: case_id.to_string(),
        requested: config.samples_per_case,
        samples: outcome.samples.len(),
        attempts: outcome.attempts,
        exhausted: outcome.exhausted,
        lambda_zero_ok,
        span_matches,
        span_mismatches,
        residual,
    }
}

fn verify_complement(config: &VerifyConfig, fam: Family) -> ComplementReport {
    let label = format!("{fam}.complement");
    let mut rng = stream(config.seed, &label);
    let outcome = sample_complement(
        fam,
        config.complement_samples,
        &mut rng,
        config.max_attempts,
    );
    let mut lambda_zero_ok = true;
    let mut trivial = 0;
    let mut counterexamples = Vec::new();
    let mut residual = ResidualSummary::default();
    for params in &outcome.samples {
        if check_point(
            fam,
            params,
            true,
            config.outside_vectors,
            &mut rng,
            &mut lambda_zero_ok,
            &mut counterexamples,
            &mut residual,
        ) {
            trivial += 1;
        }
    }
    ComplementReport {
        requested: config.complement_samples,
        samples: outcome.samples.len(),
        attempts: outcome.attempts,
        exhausted: outcome.exhausted,
        lambda_zero_ok,
        trivial,
        counterexamples,
        residual,
    }
}

fn verify_consistency(config: &VerifyConfig, fam: Family) -> ConsistencyReport {
    let label = format!("{fam}.consistency");
    let mut rng = stream(config.seed, &label);
    let outcome = sample_generic(
        fam,
        config.consistency_assignments,
        &mut rng,
        config.max_attempts,
    );
    let mut mismatches = 0;
    let mut entries_compared = 0;
    for params in &outcome.samples {
        let numeric = build_system(&make_family(fam, params).expect("sampled points validate"));
        let eta = params.get("eta").map(|h| {
            h.numer_i64()
                .filter(|_| h.is_integer())
                .expect("eta is a sign")
        });
        let symbolic = families::symbolic_system(fam, eta).expect("valid symbolic request");
        for row in 0..6 {
            for col in 0..4 {
                entries_compared += 1;
                let evaluated = symbolic
                    .entry(row, col)
                    .eval(&params.0)
                    .expect("system entries involve only family parameters");
                if &evaluated != numeric.entry(row, col) {
                    mismatches += 1;
                }
            }
        }
    }
    ConsistencyReport {
        assignments: outcome.samples.len(),
        entries_compared,
        mismatches,
    }
}

/// Renders the human-readable run summary.
pub fn render_summary(report: &VerifyReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "verification run: seed {}, {} samples/case, {} complement samples/family",
        report.seed, report.samples_per_case, report.complement_samples_per_family
    );
    for fr in &report.families {
        let case_total = fr.cases.len();
        let cases_ok = fr
            .cases
            .iter()
            .filter(|c| c.span_mismatches.is_empty())
            .count();
        let exhausted: Vec<&str> = fr
            .cases
            .iter()
            .filter(|c| c.exhausted)
            .map(|c| c.case.as_str())
            .collect();
        let _ = writeln!(
            out,
            "{}: ricci discrepancies {}, system discrepancies {}, cases {}/{} span-clean, complement {}/{} trivial, residual failures {}, consistency mismatches {}",
            fr.family,
            fr.ricci.discrepancies.len(),
            fr.system.discrepancies.len(),
            cases_ok,
            case_total,
            fr.complement.trivial,
            fr.complement.samples,
            fr.cases.iter().map(|c| c.residual.solution_failures + c.residual.outside_failures).sum::<usize>()
                + fr.complement.residual.solution_failures
                + fr.complement.residual.outside_failures,
            fr.consistency.mismatches,
        );
        if !exhausted.is_empty() {
            let _ = writeln!(
                out,
                "   warning: sampler exhausted for {}",
                exhausted.join(", ")
            );
        }
        for c in &fr.cases {
            for m in &c.span_mismatches {
                let _ = writeln!(
                    out,
                    "   span mismatch in {} at {}: predicted dim {}, computed dim {}",
                    c.case,
                    params_inline(&m.params),
                    m.predicted_span.len(),
                    m.computed_span.len()
                );
            }
        }
        for m in &fr.complement.counterexamples {
            let _ = writeln!(
                out,
                "   complement counterexample at {}: computed dim {}",
                params_inline(&m.params),
                m.computed_span.len()
            );
        }
    }
    let _ = writeln!(out, "result: {}", if report.pass { "PASS" } else { "FAIL" });
    out
}

fn params_inline(params: &Params) -> String {
    let parts: Vec<String> = params.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
    parts.join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_config(fam: Family) -> VerifyConfig {
        VerifyConfig {
            families: vec![fam],
            samples_per_case: 5,
            complement_samples: 10,
            consistency_assignments: 2,
            outside_vectors: 3,
            seed: 7,
            max_attempts: 10_000,
        }
    }

    #[test]
    fn first_family_verifies_clean_except_one_system_entry() {
        let report = run_verify(&quick_config(Family::G1));
        assert!(report.pass);
        let fr = &report.families[0];
        assert!(fr.ricci.discrepancies.is_empty());
        // The single known reference slip in this family's system display.
        assert_eq!(fr.system.discrepancies.len(), 1);
        let d = &fr.system.discrepancies[0];
        assert_eq!((d.i, d.j, d.column.as_str()), (1, 3, "lambda3"));
        assert_eq!(d.derived, "-3*alpha^2*beta");
        assert_eq!(d.reference, "alpha^2*beta");
        assert_eq!(fr.consistency.mismatches, 0);
        assert_eq!(fr.complement.counterexamples.len(), 0);
    }

    #[test]
    fn fourth_family_fails_and_pins_its_counterexamples() {
        let report = run_verify(&quick_config(Family::G4));
        assert!(
            !report.pass,
            "the fourth family's reference cases are unsound"
        );
        let fr = &report.families[0];
        let case1 = fr
            .cases
            .iter()
            .find(|c| c.case == "G4.case1")
            .expect("present");
        assert_eq!(case1.samples, 2);
        assert_eq!(
            case1.span_mismatches.len(),
            2,
            "both locus points carry the full space, not the asserted plane"
        );
        for m in &case1.span_mismatches {
            assert_eq!(m.predicted_span.len(), 2);
            assert_eq!(m.computed_span.len(), 3);
        }
        for id in ["G4.case2", "G4.case3"] {
            let c = fr.cases.iter().find(|c| c.case == id).expect("present");
            assert_eq!(c.samples, 0, "{id} has no rational points in range");
            assert!(c.exhausted);
        }
        assert_eq!(fr.consistency.mismatches, 0);
        assert_eq!(
            fr.cases
                .iter()
                .map(|c| c.residual.solution_failures + c.residual.outside_failures)
                .sum::<usize>(),
            0
        );
    }

    #[test]
    fn reports_are_deterministic_for_a_fixed_seed() {
        let a = run_verify(&quick_config(Family::G2));
        let b = run_verify(&quick_config(Family::G2));
        assert_eq!(
            serde_json::to_string(&a).expect("serializable"),
            serde_json::to_string(&b).expect("serializable")
        );
    }
}
