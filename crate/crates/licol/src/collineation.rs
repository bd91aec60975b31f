//! The linear system for left-invariant conformal Ricci collineations.
//!
//! A field `V = λ1 e1 + λ2 e2 + λ3 e3` together with a conformal factor `λ`
//! satisfies `L_V Ric = 2 λ g` iff a homogeneous 6×4 linear system in
//! `(λ1, λ2, λ3, λ)` holds. [`build_system`] assembles that system over any
//! scalar ring, with rows in the fixed symmetric-pair order
//! `(1,1), (1,2), (1,3), (2,2), (2,3), (3,3)` and the `λ` column equal to
//! `−2 g(e_i, e_j)`, i.e. `(−2, 0, 0, −2, 0, 2)ᵀ`.
//!
//! [`solve_collineations`] computes the exact kernel for a concrete algebra
//! and reports it as a [`SolutionSpace`]: the canonical kernel basis, the
//! projected space `𝒱_RC` of collineation fields, and whether the conformal
//! factor is forced to vanish. Solving a symbolic algebra is not supported —
//! kernel dimensions jump on parameter subvarieties, so there is no single
//! answer to give — and is reported as an error.
//!
//! [`residual_check`] re-substitutes solutions into `L_V Ric − 2 λ g` by an
//! independent code path (direct evaluation of the Lie derivative along the
//! concrete field, not the column assembly used by [`build_system`]) and
//! demands exact zeros.

use crate::exactnum::{Matrix, Rational};
use crate::geometry::{basis_vector, lie_derivative_ric, metric_entry, ricci, LieAlgebra3, Scalar};
use crate::{NumericAlgebra, SymbolicAlgebra};
use num_traits::Zero;
use serde::Serialize;

/// Row order of the collineation system: the six symmetric basis pairs.
pub const PAIRS: [(usize, usize); 6] = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];

/// One equation of the system: the `(e_i, e_j)` component of
/// `L_V Ric − 2 λ g = 0`, as coefficients of `(λ1, λ2, λ3, λ)`.
#[derive(Clone, PartialEq, Debug)]
pub struct SystemRow<S: Scalar> {
    /// 1-based first basis index of the symmetric pair.
    pub i: usize,
    /// 1-based second basis index of the symmetric pair.
    pub j: usize,
    /// Coefficients of `(λ1, λ2, λ3, λ)`.
    pub coeffs: [S; 4],
}

/// The assembled 6×4 collineation system.
#[derive(Clone, PartialEq, Debug)]
pub struct LinearSystem<S: Scalar> {
    pub rows: Vec<SystemRow<S>>,
}

impl<S: Scalar> LinearSystem<S> {
    /// Coefficient at pair-row `row` (0..6) and column `col` (0..4).
    pub fn entry(&self, row: usize, col: usize) -> &S {
        &self.rows[row].coeffs[col]
    }
}

/// Assembles the collineation system of an algebra over its scalar ring.
///
/// Column `k < 3` of row `(i,j)` is `(L_{e_{k+1}} Ric)(e_i, e_j)`; column 3
/// is `−2 g(e_i, e_j)`.
pub fn build_system<S: Scalar>(alg: &LieAlgebra3<S>) -> LinearSystem<S> {
    let ric = ricci(alg);
    let per_basis: [[[S; 3]; 3]; 3] =
        std::array::from_fn(|k| lie_derivative_ric(alg, &ric, &basis_vector(k)));
    let minus_two = Rational::from_int(-2);
    let rows = PAIRS
        .iter()
        .map(|&(i, j)| SystemRow {
            i: i + 1,
            j: j + 1,
            coeffs: [
                per_basis[0][i][j].clone(),
                per_basis[1][i][j].clone(),
                per_basis[2][i][j].clone(),
                metric_entry::<S>(i, j).scale(&minus_two),
            ],
        })
        .collect();
    LinearSystem { rows }
}

/// The exact solution space of the collineation system at a concrete
/// algebra.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct SolutionSpace {
    /// Canonical kernel basis in `(λ1, λ2, λ3, λ)` coordinates.
    pub kernel_basis: Vec<Vec<Rational>>,
    /// Canonical basis of `𝒱_RC`: the projections of kernel vectors to
    /// `(λ1, λ2, λ3)`, row-reduced.
    pub vrc_basis: Vec<Vec<Rational>>,
    /// True iff every solution has conformal factor `λ = 0`.
    pub lambda_forced_zero: bool,
}

impl SolutionSpace {
    /// Dimension of the kernel.
    pub fn dimension(&self) -> usize {
        self.kernel_basis.len()
    }
}

/// Errors from [`solve_collineations`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    /// The algebra still carries symbolic parameters.
    #[error("parametric solving unsupported; evaluate parameters first")]
    ParametricUnsupported,
}

/// An algebra handed to the solver: concrete or symbolic.
#[derive(Clone, Copy, Debug)]
pub enum AlgebraInput<'a> {
    Numeric(&'a NumericAlgebra),
    Symbolic(&'a SymbolicAlgebra),
}

impl<'a> From<&'a NumericAlgebra> for AlgebraInput<'a> {
    fn from(alg: &'a NumericAlgebra) -> Self {
        AlgebraInput::Numeric(alg)
    }
}

impl<'a> From<&'a SymbolicAlgebra> for AlgebraInput<'a> {
    fn from(alg: &'a SymbolicAlgebra) -> Self {
        AlgebraInput::Symbolic(alg)
    }
}

/// Solves the collineation system exactly for a concrete algebra.
///
/// Symbolic algebras are rejected: the solution space is not constant across
/// parameter space, so a symbolic kernel would be ill-defined.
pub fn solve_collineations(alg: AlgebraInput<'_>) -> Result<SolutionSpace, SolveError> {
    let alg = match alg {
        AlgebraInput::Numeric(a) => a,
        AlgebraInput::Symbolic(_) => return Err(SolveError::ParametricUnsupported),
    };
    let system = build_system(alg);
    let matrix = system_matrix(&system);
    let kernel_basis = matrix.nullspace();
    let lambda_forced_zero = kernel_basis.iter().all(|v| v[3].is_zero());
    let projections: Vec<Vec<Rational>> = kernel_basis
        .iter()
        .map(|v| v[..3].to_vec())
        .filter(|v| !v.iter().all(Rational::is_zero))
        .collect();
    let vrc_basis = canonical_span(&projections);
    Ok(SolutionSpace {
        kernel_basis,
        vrc_basis,
        lambda_forced_zero,
    })
}

/// The system as an exact matrix (concrete scalars only).
pub fn system_matrix(system: &LinearSystem<Rational>) -> Matrix {
    Matrix::from_rows(system.rows.iter().map(|r| r.coeffs.to_vec()).collect())
        .expect("fixed-width rows")
}

/// Row-reduces a spanning set to the canonical basis of its span.
pub fn canonical_span(vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vectors.to_vec()).expect("span vectors share a length");
    let r = m.rref();
    (0..r.pivot_cols.len()).map(|i| r.matrix.row(i)).collect()
}

/// Residual of a candidate solution `(λ1, λ2, λ3, λ)`: the six components of
/// `L_V Ric − 2 λ g` in pair order.
///
/// This path evaluates the Lie derivative along the concrete field directly,
/// independently of the column-by-column assembly in [`build_system`].
pub fn residual_of(alg: &NumericAlgebra, solution: &[Rational]) -> Vec<Rational> {
    assert_eq!(solution.len(), 4, "solution vector is (λ1, λ2, λ3, λ)");
    let ric = ricci(alg);
    let v: [Rational; 3] = std::array::from_fn(|k| solution[k].clone());
    let ld = lie_derivative_ric(alg, &ric, &v);
    let two_lambda = &solution[3] * &Rational::from_int(2);
    PAIRS
        .iter()
        .map(|&(i, j)| &ld[i][j] - &(&metric_entry::<Rational>(i, j) * &two_lambda))
        .collect()
}

/// One solution vector whose residual failed to vanish.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ResidualFailure {
    pub vector: Vec<Rational>,
    pub residual: Vec<Rational>,
}

/// Outcome of re-substituting a whole solution space.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ResidualReport {
    /// Number of vectors checked.
    pub checked: usize,
    /// True iff every residual vanished identically.
    pub ok: bool,
    pub failures: Vec<ResidualFailure>,
}

/// Re-substitutes every kernel basis vector and demands exact zero residuals.
pub fn residual_check(alg: &NumericAlgebra, space: &SolutionSpace) -> ResidualReport {
    let mut failures = Vec::new();
    for v in &space.kernel_basis {
        let residual = residual_of(alg, v);
        if !residual.iter().all(Rational::is_zero) {
            failures.push(ResidualFailure {
                vector: v.clone(),
                residual,
            });
        }
    }
    ResidualReport {
        checked: space.kernel_basis.len(),
        ok: failures.is_empty(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::{standard_ring, Polynomial};

    fn qi(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn zero3() -> [Rational; 3] {
        [qi(0), qi(0), qi(0)]
    }

    fn family_one(alpha: i64, beta: i64) -> NumericAlgebra {
        let (a, b) = (qi(alpha), qi(beta));
        LieAlgebra3::new(
            [a.clone(), qi(0), -&b],
            [-&a, -&b, qi(0)],
            [b, a.clone(), a],
        )
    }

    #[test]
    fn abelian_algebra_has_zero_rows_and_full_collineation_space() {
        let alg = LieAlgebra3::new(zero3(), zero3(), zero3());
        let system = build_system(&alg);
        let lambda_col: Vec<Rational> = system.rows.iter().map(|r| r.coeffs[3].clone()).collect();
        assert_eq!(lambda_col, vec![qi(-2), qi(0), qi(0), qi(-2), qi(0), qi(2)]);
        for row in &system.rows {
            for col in 0..3 {
                assert!(row.coeffs[col].is_zero(), "flat Ricci ⇒ zero coefficients");
            }
        }
        let space = solve_collineations(AlgebraInput::Numeric(&alg)).expect("numeric");
        assert_eq!(space.dimension(), 3);
        assert!(space.lambda_forced_zero);
        let full = vec![
            vec![qi(1), qi(0), qi(0)],
            vec![qi(0), qi(1), qi(0)],
            vec![qi(0), qi(0), qi(1)],
        ];
        assert!(crate::exactnum::span_equal(&space.vrc_basis, &full));
    }

    #[test]
    fn symbolic_entry_matches_derived_coefficient() {
        let ring = standard_ring();
        let var = |n: &str| Polynomial::var(ring.clone(), n).expect("ring variable");
        let (alpha, beta) = (var("alpha"), var("beta"));
        let alg: SymbolicAlgebra = LieAlgebra3::new(
            [alpha.clone(), Polynomial::zero_in(ring.clone()), beta.neg()],
            [alpha.neg(), beta.neg(), Polynomial::zero_in(ring.clone())],
            [beta.clone(), alpha.clone(), alpha.clone()],
        );
        let system = build_system(&alg);
        // Row (2,2) is index 3 in pair order; its λ1 coefficient is 6α²β.
        let expected = Polynomial::parse(ring, "6*alpha^2*beta").expect("literal");
        assert_eq!(system.entry(3, 0), &expected);
    }

    #[test]
    fn symbolic_algebras_are_rejected_by_the_solver() {
        let ring = standard_ring();
        let alpha = Polynomial::var(ring.clone(), "alpha").expect("ring variable");
        let z = || Polynomial::zero_in(ring.clone());
        let alg: SymbolicAlgebra =
            LieAlgebra3::new([alpha.clone(), z(), z()], [z(), z(), z()], [z(), z(), z()]);
        let err = solve_collineations(AlgebraInput::Symbolic(&alg)).expect_err("symbolic");
        assert_eq!(
            err.to_string(),
            "parametric solving unsupported; evaluate parameters first"
        );
    }

    #[test]
    fn first_family_solution_spaces_at_concrete_parameters() {
        // β = 0: the full space of fields, with λ forced to zero.
        let space = solve_collineations(AlgebraInput::Numeric(&family_one(1, 0))).expect("solve");
        assert_eq!(space.dimension(), 3);
        assert!(space.lambda_forced_zero);
        assert_eq!(space.vrc_basis.len(), 3);
        // β ≠ 0: only the trivial solution.
        let space = solve_collineations(AlgebraInput::Numeric(&family_one(1, 1))).expect("solve");
        assert_eq!(space.dimension(), 0);
        assert!(space.lambda_forced_zero, "vacuously true on the zero space");
        assert!(space.vrc_basis.is_empty());
    }

    #[test]
    fn residuals_vanish_on_solutions_and_flag_non_solutions() {
        // Fourth family at (η, α, β) = (1, 2, 0):
        // [e1,e2] = −e2 + 2 e3, [e1,e3] = −0·e2 + e3 → [0,0,1], [e2,e3] = α e1.
        let alg: NumericAlgebra = LieAlgebra3::new(
            [qi(0), qi(-1), qi(2)],
            [qi(0), qi(0), qi(1)],
            [qi(2), qi(0), qi(0)],
        );
        let handed = SolutionSpace {
            kernel_basis: vec![
                vec![qi(0), qi(1), qi(0), qi(0)],
                vec![qi(0), qi(0), qi(1), qi(0)],
            ],
            vrc_basis: vec![vec![qi(0), qi(1), qi(0)], vec![qi(0), qi(0), qi(1)]],
            lambda_forced_zero: true,
        };
        let report = residual_check(&alg, &handed);
        assert!(report.ok, "e2 and e3 are genuine collineations here");
        assert_eq!(report.checked, 2);

        // A field outside a one-dimensional collineation space leaves a
        // nonzero residual: second family at (α, β, γ) = (2, 1, 1).
        let g2: NumericAlgebra = LieAlgebra3::new(
            [qi(0), qi(1), qi(-1)],
            [qi(0), qi(-1), qi(-1)],
            [qi(2), qi(0), qi(0)],
        );
        let space = solve_collineations(AlgebraInput::Numeric(&g2)).expect("solve");
        assert_eq!(space.dimension(), 1, "𝒱_RC = ⟨e1⟩ at this point");
        let outside = residual_of(&g2, &[qi(0), qi(1), qi(0), qi(0)]);
        assert!(
            outside.iter().any(|r| !r.is_zero()),
            "e2 is not a collineation here"
        );
    }
}
