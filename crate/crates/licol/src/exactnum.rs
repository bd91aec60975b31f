//! Exact rational scalars and small dense exact linear algebra.
//!
//! Everything in this module is exact: scalars are arbitrary-precision
//! rationals, elimination is plain Gaussian reduction over ℚ with no rounding,
//! and all comparisons are decidable equalities. The matrices that appear in
//! this crate are tiny (at most six rows and four columns), so the
//! implementation favors determinism and clarity over asymptotics:
//!
//! * [`Matrix::rref`] uses the deterministic first-nonzero-row pivot rule, so
//!   the reduced form (and everything derived from it) is reproducible.
//! * [`Matrix::nullspace`] returns the canonical free-variable kernel basis:
//!   one vector per free column, in increasing column order, with a `1` in the
//!   free coordinate.
//! * [`span_equal`] decides equality of spanned subspaces exactly, by
//!   comparing canonical row-reduced forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Errors produced by exact-number construction and parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    /// A rational was constructed with denominator zero.
    #[error("zero denominator in rational")]
    ZeroDenominator,
    /// A string could not be parsed as `p` or `p/q`.
    #[error("invalid rational literal `{0}`")]
    InvalidLiteral(String),
    /// A matrix was built from rows of unequal length.
    #[error("ragged rows: expected {expected} columns, found {found}")]
    RaggedRows { expected: usize, found: usize },
}

/// An exact rational number (arbitrary precision, always reduced).
///
/// Wraps a big-integer rational and fixes the textual form used across the
/// crate: `p/q` with `q > 0`, or just `p` when the denominator is one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`, reducing to lowest terms. Fails if `den == 0`.
    pub fn new(num: i64, den: i64) -> Result<Self, ExactError> {
        if den == 0 {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    /// The integer `n` as a rational.
    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Borrowed view of the underlying reduced big rational.
    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    /// Wraps an already-constructed big rational.
    pub fn from_big(r: BigRational) -> Self {
        Rational(r)
    }

    /// Exact reciprocal; fails on zero.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Absolute value.
    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// True when the value is strictly negative.
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// True when the value is an integer.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Numerator as `i64` when it fits (useful for small sampled values).
    pub fn numer_i64(&self) -> Option<i64> {
        self.0.numer().to_i64()
    }

    /// Denominator as `i64` when it fits.
    pub fn denom_i64(&self) -> Option<i64> {
        self.0.denom().to_i64()
    }

    /// `self * num/den` without intermediate allocation of a second wrapper.
    pub fn scale_int(&self, num: i64, den: i64) -> Self {
        let f = BigRational::new(BigInt::from(num), BigInt::from(den));
        Rational(&self.0 * f)
    }

    /// Integer power with non-negative exponent.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || ExactError::InvalidLiteral(s.to_string());
        match t.split_once('/') {
            None => {
                let n = BigInt::from_str(t).map_err(|_| bad())?;
                Ok(Rational(BigRational::from_integer(n)))
            }
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(ExactError::ZeroDenominator);
                }
                Ok(Rational(BigRational::new(p, q)))
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

struct RationalVisitor;

impl Visitor<'_> for RationalVisitor {
    type Value = Rational;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a rational as a string `p/q` or `p`, or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
        v.parse().map_err(|e| E::custom(format!("{e}")))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
        Ok(Rational::from_int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
        i64::try_from(v)
            .map(Rational::from_int)
            .map_err(|_| E::custom("integer out of range"))
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(RationalVisitor)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl Div for Rational {
    type Output = Rational;

    /// Exact division. Panics on a zero divisor; use [`Rational::inv`] for a
    /// checked reciprocal.
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

/// Dense matrix of exact rationals, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Result of row reduction: the reduced row echelon form and its pivot
/// columns (one entry per nonzero row, strictly increasing).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivot_cols: Vec<usize>,
}

impl Matrix {
    /// All-zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(ExactError::RaggedRows {
                    expected: ncols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Entry accessor.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    /// Entry mutator.
    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    /// The `i`-th row as a fresh vector.
    pub fn row(&self, i: usize) -> Vec<Rational> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    /// Matrix–vector product.
    pub fn mat_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mat_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    acc = acc + self.get(i, j) * &v[j];
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form with deterministic pivoting.
    ///
    /// For each column the pivot is the **first** row (from the current one
    /// down) with a nonzero entry; the pivot row is swapped up, normalized to
    /// a leading one, and the entry is eliminated from every other row. The
    /// result is the unique RREF of the row space, computed by a fixed
    /// sequence of operations.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let hit = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(hit) = hit else { continue };
            if hit != pivot_row {
                for j in 0..m.cols {
                    let a = m.get(hit, j).clone();
                    let b = m.get(pivot_row, j).clone();
                    m.set(hit, j, b);
                    m.set(pivot_row, j, a);
                }
            }
            let inv = m.get(pivot_row, col).inv().expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(pivot_row, j) * &inv;
                m.set(pivot_row, j, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in 0..m.cols {
                    let v = m.get(r, j) - &(m.get(pivot_row, j) * &factor);
                    m.set(r, j, v);
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        Rref {
            matrix: m,
            pivot_cols,
        }
    }

    /// Rank over ℚ.
    pub fn rank(&self) -> usize {
        self.rref().pivot_cols.len()
    }

    /// Canonical basis of the right kernel `{v : A v = 0}`.
    ///
    /// One basis vector per free column, ordered by increasing free column
    /// index; each vector carries a `1` in its free coordinate and the negated
    /// reduced entries in the pivot coordinates. For the zero matrix this is
    /// exactly the standard basis.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let Rref { matrix, pivot_cols } = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivot_cols.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Rational::zero(); self.cols];
            vec[free] = Rational::one();
            for (row, &pcol) in pivot_cols.iter().enumerate() {
                vec[pcol] = -matrix.get(row, free);
            }
            basis.push(vec);
        }
        basis
    }
}

/// Decides whether two vector lists span the same subspace of ℚⁿ.
///
/// Both spans are canonicalized via [`Matrix::rref`]; the spans are equal iff
/// the nonzero reduced rows agree. Empty lists span the zero subspace.
/// Lists whose vectors live in different ambient dimensions span different
/// (incomparable) spaces and compare unequal, except when both spans are zero.
pub fn span_equal(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    let dim_a = a.first().map(Vec::len);
    let dim_b = b.first().map(Vec::len);
    let reduce = |rows: &[Vec<Rational>]| -> Vec<Vec<Rational>> {
        if rows.is_empty() {
            return Vec::new();
        }
        let m = Matrix::from_rows(rows.to_vec()).expect("span vectors share a length");
        let r = m.rref();
        (0..r.pivot_cols.len()).map(|i| r.matrix.row(i)).collect()
    };
    let ra = reduce(a);
    let rb = reduce(b);
    if ra.is_empty() && rb.is_empty() {
        return true;
    }
    if dim_a != dim_b {
        return false;
    }
    ra == rb
}

/// True when `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if v.iter().all(Rational::is_zero) {
        return true;
    }
    let mut rows: Vec<Vec<Rational>> = basis.to_vec();
    let rank_before = if rows.is_empty() {
        0
    } else {
        Matrix::from_rows(rows.clone())
            .expect("basis vectors share a length")
            .rank()
    };
    rows.push(v.to_vec());
    let rank_after = Matrix::from_rows(rows)
        .expect("vector length matches basis")
        .rank();
    rank_before == rank_after
}

/// Exact rational roots of a univariate polynomial with rational
/// coefficients, `coeffs[k]` being the coefficient of `x^k`.
///
/// Uses the rational root theorem after clearing denominators; the returned
/// roots are sorted and deduplicated. The zero polynomial has every rational
/// as a root and is rejected with an empty result by convention.
pub fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    // Trim trailing zero coefficients to find the true degree.
    let mut top = coeffs.len();
    while top > 0 && coeffs[top - 1].is_zero() {
        top -= 1;
    }
    if top == 0 {
        return Vec::new();
    }
    let coeffs = &coeffs[..top];
    if coeffs.len() == 1 {
        return Vec::new();
    }
    // Clear denominators to integer coefficients.
    let mut lcm = BigInt::one();
    for c in coeffs {
        let d = c.inner().denom();
        let g = num_integer::Integer::gcd(&lcm, d);
        lcm = &lcm / g * d;
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.inner().numer() * (&lcm / c.inner().denom()))
        .collect();
    // Factor out x^k so the constant term is nonzero.
    let mut low = 0usize;
    while ints[low].is_zero() {
        low += 1;
    }
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let ints = &ints[low..];
    if ints.len() == 1 {
        roots.sort();
        return roots;
    }
    let eval = |x: &Rational| -> Rational {
        let mut acc = Rational::zero();
        for c in ints.iter().rev() {
            acc = acc * x.clone() + Rational::from_big(BigRational::from_integer(c.clone()));
        }
        acc
    };
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.abs();
        let mut out = Vec::new();
        let mut d = BigInt::one();
        loop {
            let sq = &d * &d;
            if sq > n {
                break;
            }
            if (&n % &d).is_zero() {
                out.push(d.clone());
                let q = &n / &d;
                if q != d {
                    out.push(q);
                }
            }
            d += 1;
        }
        out
    };
    let p_divs = divisors(&ints[0]);
    let q_divs = divisors(ints.last().expect("nonempty"));
    for p in &p_divs {
        for q in &q_divs {
            for sign in [1i64, -1] {
                let cand = Rational::from_big(BigRational::new(p * BigInt::from(sign), q.clone()));
                if eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}
