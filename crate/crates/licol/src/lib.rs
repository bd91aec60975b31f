//! Exact-arithmetic engine for left-invariant conformal Ricci collineations
//! on three-dimensional Lorentzian Lie groups.
//!
//! Given a three-dimensional Lie algebra by structure constants in a fixed
//! pseudo-orthonormal frame of signature `(+, +, −)`, the crate computes the
//! Levi-Civita connection, curvature, Ricci tensor and the space of
//! left-invariant fields `V` with `L_V Ric = 2λ g` — all in exact rational
//! (or polynomial) arithmetic — and verifies a bundled seven-family reference
//! classification both symbolically and numerically, reporting every
//! discrepancy it derives.
//!
//! Modules:
//!
//! * [`exactnum`] — exact rationals, small dense linear algebra (RREF,
//!   kernels, span comparison);
//! * [`multipoly`] — sparse multivariate polynomials over ℚ with canonical
//!   graded-lex rendering and one-rule rewriting;
//! * [`geometry`] — the connection/curvature/Ricci pipeline, generic over an
//!   exact scalar ring;
//! * [`collineation`] — the 6×4 linear system for conformal Ricci
//!   collineations, its exact solution space, and residual checks;
//! * [`families`] — the seven parameterized families, their reference
//!   tables, per-case samplers and case predictions;
//! * [`cli`] — the `licol` command-line interface and the verification
//!   engine behind `licol verify`.

pub mod cli;
pub mod collineation;
pub mod exactnum;
pub mod families;
pub mod geometry;
pub mod multipoly;

/// Concrete algebra over exact rationals.
pub type NumericAlgebra = geometry::LieAlgebra3<exactnum::Rational>;

/// Symbolic algebra over the standard polynomial ring.
pub type SymbolicAlgebra = geometry::LieAlgebra3<multipoly::Polynomial>;

/// Connection with rational coefficients.
pub type NumericConnection = geometry::Connection<exactnum::Rational>;

/// Connection with polynomial coefficients.
pub type SymbolicConnection = geometry::Connection<multipoly::Polynomial>;

/// Ricci tensor with rational entries.
pub type NumericRicci = geometry::Ricci<exactnum::Rational>;

/// Ricci tensor with polynomial entries.
pub type SymbolicRicci = geometry::Ricci<multipoly::Polynomial>;
