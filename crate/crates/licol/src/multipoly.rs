//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Polynomials live in an explicit ring: a [`PolyRing`] fixes the ordered
//! variable list at construction, and arithmetic across distinct rings is an
//! error (with two principled exceptions: the zero polynomial is neutral for
//! addition in every ring, and constants embed in every ring for
//! multiplication). The seven-family pipeline uses the shared
//! [`standard_ring`] over `alpha, beta, gamma, delta, eta`.
//!
//! Terms are ordered graded-lexicographically (total degree first, then
//! exponent vectors with earlier variables weighing more). The canonical text
//! rendering lists terms in descending graded-lex order with coefficients as
//! `p/q`, variables by name, `^` exponents and `*` separators, e.g.
//! `-3*alpha*beta^2`. [`Polynomial::parse`] accepts that grammar (plus
//! division of a term by an integer literal, so `alpha^2/2` denotes half of
//! `alpha^2`), and parsing the rendered form always round-trips.
//!
//! [`Polynomial::rewrite`] implements one-rule reductions `lead -> rhs` used
//! to compare polynomials modulo a single defining relation: every monomial
//! divisible by `lead` is repeatedly replaced. For the rules used in this
//! crate the lead monomial strictly dominates the replacement in graded-lex
//! order, so the reduction terminates in a canonical normal form.

use crate::exactnum::Rational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Errors produced by polynomial construction, arithmetic and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MultipolyError {
    /// Arithmetic was attempted between polynomials of different rings.
    #[error("incompatible polynomial rings")]
    IncompatibleRings,
    /// A variable name is not part of the ring.
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    /// Evaluation is missing an assignment for a variable that occurs.
    #[error("missing assignment for variable `{0}`")]
    MissingAssignment(String),
    /// A polynomial literal could not be parsed.
    #[error("invalid polynomial `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// A polynomial ring: an ordered list of variable names.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    vars: Vec<String>,
}

impl PolyRing {
    /// Builds a ring over the given ordered variables.
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Arc<Self> {
        Arc::new(PolyRing {
            vars: vars.into_iter().map(Into::into).collect(),
        })
    }

    /// The ordered variable names.
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Number of variables.
    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    /// Index of a variable by name.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// The ring `Q[alpha, beta, gamma, delta, eta]` shared by the family pipeline.
pub fn standard_ring() -> Arc<PolyRing> {
    static RING: OnceLock<Arc<PolyRing>> = OnceLock::new();
    RING.get_or_init(|| PolyRing::new(vec!["alpha", "beta", "gamma", "delta", "eta"]))
        .clone()
}

/// Exponent vector with graded-lex ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Monomial(Vec<u32>);

impl Monomial {
    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn quotient(&self, lead: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&lead.0).map(|(a, b)| a - b).collect())
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A sparse polynomial over its ring, keyed by graded-lex monomials.
///
/// Invariant: no stored coefficient is zero.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Rational>,
}

/// Binary polynomial operations for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Ring-checked binary arithmetic entry point.
pub fn poly_arith(
    a: &Polynomial,
    b: &Polynomial,
    op: PolyOp,
) -> Result<Polynomial, MultipolyError> {
    match op {
        PolyOp::Add => a.try_add(b),
        PolyOp::Sub => a.try_sub(b),
        PolyOp::Mul => a.try_mul(b),
    }
}

impl Polynomial {
    /// The zero polynomial of a ring.
    pub fn zero_in(ring: Arc<PolyRing>) -> Self {
        Polynomial {
            ring,
            terms: BTreeMap::new(),
        }
    }

    /// A constant polynomial.
    pub fn constant(ring: Arc<PolyRing>, value: Rational) -> Self {
        let mut p = Polynomial::zero_in(ring);
        if !value.is_zero() {
            let arity = p.ring.arity();
            p.terms.insert(Monomial(vec![0; arity]), value);
        }
        p
    }

    /// The polynomial consisting of a single named variable.
    pub fn var(ring: Arc<PolyRing>, name: &str) -> Result<Self, MultipolyError> {
        let idx = ring
            .index_of(name)
            .ok_or_else(|| MultipolyError::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; ring.arity()];
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(exps), Rational::one());
        Ok(Polynomial { ring, terms })
    }

    /// The ring this polynomial belongs to.
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// True when the polynomial has no terms.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value when the polynomial is constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().expect("one term");
            if m.is_constant() {
                return Some(c.clone());
            }
        }
        None
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Number of terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn insert_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    /// Ring-checked addition. The zero polynomial is neutral in every ring.
    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, MultipolyError> {
        if !self.same_ring(other) {
            if self.is_zero() {
                return Ok(other.clone());
            }
            if other.is_zero() {
                return Ok(self.clone());
            }
            return Err(MultipolyError::IncompatibleRings);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Ring-checked subtraction.
    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, MultipolyError> {
        self.try_add(&other.neg())
    }

    /// Ring-checked multiplication. Constants embed in every ring.
    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, MultipolyError> {
        if !self.same_ring(other) {
            if let Some(c) = self.as_constant() {
                return Ok(other.scale(&c));
            }
            if let Some(c) = other.as_constant() {
                return Ok(self.scale(&c));
            }
            return Err(MultipolyError::IncompatibleRings);
        }
        let mut out = Polynomial::zero_in(self.ring.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Negation.
    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, q: &Rational) -> Polynomial {
        if q.is_zero() {
            return Polynomial::zero_in(self.ring.clone());
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    /// Full evaluation. Every variable that occurs with positive exponent
    /// must be assigned; extra assignments are ignored.
    pub fn eval(&self, assign: &BTreeMap<String, Rational>) -> Result<Rational, MultipolyError> {
        let values: Vec<Option<&Rational>> =
            self.ring.vars().iter().map(|v| assign.get(v)).collect();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (idx, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = values[idx].ok_or_else(|| {
                    MultipolyError::MissingAssignment(self.ring.vars()[idx].clone())
                })?;
                term = term * v.pow(e);
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Partial evaluation: substitutes the assigned variables and returns a
    /// polynomial in the same ring.
    pub fn eval_partial(&self, assign: &BTreeMap<String, Rational>) -> Polynomial {
        let values: Vec<Option<&Rational>> =
            self.ring.vars().iter().map(|v| assign.get(v)).collect();
        let mut out = Polynomial::zero_in(self.ring.clone());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = vec![0u32; self.ring.arity()];
            for (idx, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match values[idx] {
                    Some(v) => coeff = coeff * v.pow(e),
                    None => exps[idx] = e,
                }
            }
            out.insert_term(Monomial(exps), coeff);
        }
        out
    }

    /// One-rule rewriting `lead -> rhs`: while some monomial is divisible by
    /// `lead`, the divisible part is replaced by `rhs`.
    ///
    /// `lead` is given as an exponent vector over this polynomial's ring;
    /// `rhs` must belong to the same ring (or be a constant). For the rules
    /// used in this crate `lead` strictly dominates every monomial of `rhs`
    /// in graded-lex order, which guarantees termination; a generous
    /// iteration bound guards against misuse.
    pub fn rewrite(&self, lead: &[u32], rhs: &Polynomial) -> Result<Polynomial, MultipolyError> {
        assert_eq!(lead.len(), self.ring.arity(), "lead monomial arity");
        let lead = Monomial(lead.to_vec());
        assert!(!lead.is_constant(), "lead monomial must be non-constant");
        let mut cur = self.clone();
        for _ in 0..100_000 {
            let hit = cur
                .terms
                .iter()
                .find(|(m, _)| lead.divides(m))
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = hit else {
                return Ok(cur);
            };
            cur.terms.remove(&m);
            let cofactor = Polynomial {
                ring: cur.ring.clone(),
                terms: BTreeMap::from([(m.quotient(&lead), c)]),
            };
            let replacement = cofactor.try_mul(rhs)?;
            cur = cur.try_add(&replacement)?;
        }
        panic!("rewrite did not terminate: rule does not reduce the graded-lex order");
    }

    /// Parses the canonical grammar: signed terms separated by `+`/`-`, each
    /// term a `*`-separated product of integer-or-rational literals and
    /// `name^exponent` factors, where a `/ integer` factor divides the term.
    pub fn parse(ring: Arc<PolyRing>, input: &str) -> Result<Polynomial, MultipolyError> {
        Parser {
            ring,
            input,
            chars: input.char_indices().peekable(),
        }
        .parse()
    }

    /// Iterates terms as `(exponents, coefficient)` in ascending graded-lex
    /// order; mostly useful in tests.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("incompatible polynomial rings")
    }
}

impl std::ops::Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        (&self).add(&rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("incompatible polynomial rings")
    }
}

impl std::ops::Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        (&self).sub(&rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("incompatible polynomial rings")
    }
}

impl std::ops::Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        (&self).mul(&rhs)
    }
}

impl std::ops::Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(&self)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl Zero for Polynomial {
    /// The zero polynomial over the [`standard_ring`]; it is neutral for
    /// addition in every ring.
    fn zero() -> Self {
        Polynomial::zero_in(standard_ring())
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
}

impl One for Polynomial {
    /// The constant one over the [`standard_ring`]; constants embed in every
    /// ring for multiplication.
    fn one() -> Self {
        Polynomial::constant(standard_ring(), Rational::one())
    }
    fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (pos, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if pos == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            if m.is_constant() {
                write!(f, "{mag}")?;
            } else {
                let mut wrote = false;
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                    wrote = true;
                }
                for (idx, &e) in m.0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if wrote {
                        f.write_str("*")?;
                    }
                    f.write_str(&self.ring.vars()[idx])?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                    wrote = true;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

struct Parser<'a> {
    ring: Arc<PolyRing>,
    input: &'a str,
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
}

impl Parser<'_> {
    fn error(&self, reason: impl Into<String>) -> MultipolyError {
        MultipolyError::Parse {
            input: self.input.to_string(),
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some((_, c)) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.next().map(|(_, c)| c)
    }

    fn integer(&mut self) -> Result<i64, MultipolyError> {
        self.skip_ws();
        let mut digits = String::new();
        while matches!(self.chars.peek(), Some((_, c)) if c.is_ascii_digit()) {
            digits.push(self.chars.next().expect("peeked").1);
        }
        if digits.is_empty() {
            return Err(self.error("expected an integer literal"));
        }
        digits
            .parse::<i64>()
            .map_err(|_| self.error(format!("integer `{digits}` out of range")))
    }

    fn identifier(&mut self) -> String {
        self.skip_ws();
        let mut name = String::new();
        while matches!(self.chars.peek(), Some((_, c)) if c.is_ascii_alphanumeric() || *c == '_') {
            name.push(self.chars.next().expect("peeked").1);
        }
        name
    }

    fn term(&mut self) -> Result<Polynomial, MultipolyError> {
        let mut acc = Polynomial::constant(self.ring.clone(), Rational::one());
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.integer()?;
                    acc = acc.scale(&Rational::from_int(n));
                }
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let name = self.identifier();
                    let var = Polynomial::var(self.ring.clone(), &name)?;
                    let exp = if self.peek() == Some('^') {
                        self.bump();
                        let e = self.integer()?;
                        u32::try_from(e).map_err(|_| self.error("negative exponent"))?
                    } else {
                        1
                    };
                    for _ in 0..exp {
                        acc = acc.try_mul(&var)?;
                    }
                }
                other => {
                    let shown = other.map_or("end of input".to_string(), |c| format!("`{c}`"));
                    return Err(self.error(format!("expected a factor, found {shown}")));
                }
            }
            match self.peek() {
                Some('*') => {
                    self.bump();
                }
                Some('/') => {
                    self.bump();
                    let d = self.integer()?;
                    if d == 0 {
                        return Err(self.error("division by zero"));
                    }
                    acc = acc.scale(&Rational::new(1, d).expect("nonzero denominator"));
                    if self.peek() == Some('*') {
                        self.bump();
                    } else {
                        return Ok(acc);
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse(mut self) -> Result<Polynomial, MultipolyError> {
        let mut acc = Polynomial::zero_in(self.ring.clone());
        let mut sign = match self.peek() {
            Some('-') => {
                self.bump();
                -Rational::one()
            }
            Some('+') => {
                self.bump();
                Rational::one()
            }
            None => return Err(self.error("empty input")),
            _ => Rational::one(),
        };
        loop {
            // A bare "0" term is allowed (and common in tables).
            let t = self.term()?;
            acc = acc.try_add(&t.scale(&sign))?;
            match self.peek() {
                None => return Ok(acc),
                Some('+') => {
                    self.bump();
                    sign = Rational::one();
                }
                Some('-') => {
                    self.bump();
                    sign = -Rational::one();
                }
                Some(c) => return Err(self.error(format!("unexpected `{c}`"))),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> Arc<PolyRing> {
        standard_ring()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(ring(), s).expect("test polynomial")
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).expect("test rational")
    }

    #[test]
    fn eval_matches_hand_computation() {
        let poly = p("-3*alpha*beta^2");
        let assign = BTreeMap::from([
            ("alpha".to_string(), Rational::from_int(1)),
            ("beta".to_string(), Rational::from_int(1)),
        ]);
        assert_eq!(poly.eval(&assign).expect("eval"), Rational::from_int(-3));
    }

    #[test]
    fn display_uses_graded_lex_descending_order() {
        let poly = p("1 + beta*delta + alpha*gamma + alpha^2");
        assert_eq!(poly.to_string(), "alpha^2 + alpha*gamma + beta*delta + 1");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("-alpha - 1/2").to_string(), "-alpha - 1/2");
        assert_eq!(p("alpha^2*gamma/2").to_string(), "1/2*alpha^2*gamma");
    }

    #[test]
    fn incompatible_rings_are_rejected() {
        let other = PolyRing::new(vec!["x", "y"]);
        let a = p("alpha");
        let b = Polynomial::var(other, "x").expect("var");
        let err = poly_arith(&a, &b, PolyOp::Add).expect_err("must fail");
        assert_eq!(err, MultipolyError::IncompatibleRings);
        assert_eq!(err.to_string(), "incompatible polynomial rings");
    }

    #[test]
    fn zero_and_constants_bridge_rings() {
        let other = PolyRing::new(vec!["x"]);
        let x = Polynomial::var(other.clone(), "x").expect("var");
        let zero = Polynomial::zero();
        assert_eq!(zero.try_add(&x).expect("zero is neutral"), x);
        let two = Polynomial::constant(ring(), Rational::from_int(2));
        let doubled = two.try_mul(&x).expect("constants embed");
        assert_eq!(doubled, x.scale(&Rational::from_int(2)));
    }

    #[test]
    fn rewrite_reduces_eta_squares() {
        let one = Polynomial::constant(ring(), Rational::one());
        let reduced = p("eta^3 + eta^2 + eta + 1")
            .rewrite(&[0, 0, 0, 0, 2], &one)
            .expect("rewrite");
        assert_eq!(reduced, p("2*eta + 2"));
    }

    #[test]
    fn rewrite_reduces_alpha_gamma_products() {
        // alpha*gamma -> -beta*delta sends alpha*gamma + beta*delta to zero.
        let rhs = p("-beta*delta");
        let reduced = p("alpha*gamma + beta*delta")
            .rewrite(&[1, 0, 1, 0, 0], &rhs)
            .expect("rewrite");
        assert!(reduced.is_zero(), "constraint multiple reduces to zero");
        // A higher multiple: alpha^2*gamma -> -alpha*beta*delta.
        let reduced = p("alpha^2*gamma")
            .rewrite(&[1, 0, 1, 0, 0], &rhs)
            .expect("rewrite");
        assert_eq!(reduced, p("-alpha*beta*delta"));
    }

    #[test]
    fn eval_partial_substitutes_a_subset() {
        let poly = p("alpha^2*eta + beta*eta^2");
        let assign = BTreeMap::from([("eta".to_string(), Rational::from_int(-1))]);
        assert_eq!(poly.eval_partial(&assign), p("-alpha^2 + beta"));
    }

    #[test]
    fn eval_reports_missing_assignments() {
        let poly = p("alpha*beta");
        let assign = BTreeMap::from([("alpha".to_string(), Rational::from_int(1))]);
        assert_eq!(
            poly.eval(&assign),
            Err(MultipolyError::MissingAssignment("beta".to_string()))
        );
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        let term = (
            proptest::collection::vec(0u32..3, 5),
            (-6i64..=6).prop_filter("nonzero", |n| *n != 0),
            1i64..=4,
        );
        proptest::collection::vec(term, 0..5).prop_map(|terms| {
            let mut acc = Polynomial::zero_in(standard_ring());
            for (exps, n, d) in terms {
                let mono = Polynomial {
                    ring: standard_ring(),
                    terms: BTreeMap::from([(Monomial(exps), q(n, d))]),
                };
                acc = acc.try_add(&mono).expect("same ring");
            }
            acc
        })
    }

    fn full_assignment() -> impl Strategy<Value = BTreeMap<String, Rational>> {
        proptest::collection::vec((-5i64..=5, 1i64..=3).prop_map(|(n, d)| q(n, d)), 5).prop_map(
            |vals| {
                standard_ring()
                    .vars()
                    .iter()
                    .cloned()
                    .zip(vals)
                    .collect::<BTreeMap<_, _>>()
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms_hold(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn display_parse_round_trip(a in small_poly()) {
            let rendered = a.to_string();
            let back = Polynomial::parse(standard_ring(), &rendered).expect("parse");
            prop_assert_eq!(back, a, "round trip through `{}`", rendered);
        }

        #[test]
        fn eval_is_a_ring_homomorphism(
            a in small_poly(),
            b in small_poly(),
            assign in full_assignment(),
        ) {
            let ea = a.eval(&assign).expect("total assignment");
            let eb = b.eval(&assign).expect("total assignment");
            let sum = (&a + &b).eval(&assign).expect("total assignment");
            let prod = (&a * &b).eval(&assign).expect("total assignment");
            prop_assert_eq!(sum, &ea + &eb);
            prop_assert_eq!(prod, &ea * &eb);
        }
    }
}
