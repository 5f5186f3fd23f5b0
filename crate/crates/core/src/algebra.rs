//! Exact coefficients, monomials of both kinds, and sparse polynomials.
//!
//! A [`Polynomial`] is generic over its monomial kind: [`CommMonomial`] for
//! the commutative ring and [`Word`] for the free associative algebra. Terms
//! are kept in a `BTreeMap` keyed by the monomial's structural order, which
//! gives canonical equality; the *monomial order* used for leading terms is
//! supplied separately (see [`crate::ordering`]).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ordering::{MonomialOrder, OrderScheme};

pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Behaviour shared by commutative monomials and words.
pub trait Monomial: Clone + Ord + Eq + Hash + fmt::Debug {
    fn one(nvars: usize) -> Self;
    fn is_one(&self) -> bool;
    fn degree(&self) -> usize;
    fn weighted_degree(&self, weights: &[u32]) -> u64;
    /// Product `self * other`. For words this is concatenation.
    fn mul(&self, other: &Self) -> Self;
    /// True when the monomial is well formed for `nvars` generators.
    fn fits(&self, nvars: usize) -> bool;
    /// Comparison under an admissible order. Callers guarantee matching arity.
    fn cmp_by(&self, other: &Self, ord: &MonomialOrder) -> Ordering;
}

/// Exponent vector `x_1^{e_1} ... x_n^{e_n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CommMonomial {
    exponents: Vec<u32>,
}

impl CommMonomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        CommMonomial { exponents }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exponents = vec![0; nvars];
        exponents[index] = 1;
        CommMonomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    /// Returns `Some(q)` with `other = q * self` when `self` divides `other`.
    pub fn divides(&self, other: &CommMonomial) -> Option<CommMonomial> {
        if self.exponents.len() != other.exponents.len() {
            return None;
        }
        let mut q = Vec::with_capacity(self.exponents.len());
        for (a, b) in self.exponents.iter().zip(&other.exponents) {
            if a > b {
                return None;
            }
            q.push(b - a);
        }
        Some(CommMonomial { exponents: q })
    }

    pub fn lcm(&self, other: &CommMonomial) -> CommMonomial {
        CommMonomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &CommMonomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Monomial for CommMonomial {
    fn one(nvars: usize) -> Self {
        CommMonomial {
            exponents: vec![0; nvars],
        }
    }

    fn is_one(&self) -> bool {
        self.exponents.iter().all(|e| *e == 0)
    }

    fn degree(&self) -> usize {
        self.exponents.iter().map(|e| *e as usize).sum()
    }

    fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.exponents
            .iter()
            .zip(weights)
            .map(|(e, w)| u64::from(*e) * u64::from(*w))
            .sum()
    }

    fn mul(&self, other: &Self) -> Self {
        CommMonomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn fits(&self, nvars: usize) -> bool {
        self.exponents.len() == nvars
    }

    fn cmp_by(&self, other: &Self, ord: &MonomialOrder) -> Ordering {
        if ord.scheme() == OrderScheme::DegLex {
            match self.degree().cmp(&other.degree()) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        for &v in ord.precedence() {
            match self.exponents[v].cmp(&other.exponents[v]) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
}

/// A word in the free monoid: a sequence of 0-based generator indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Leftmost occurrence of `factor` as a contiguous subword.
    pub fn find(&self, factor: &Word) -> Option<usize> {
        find_factor(self, factor).into_iter().next()
    }

    pub fn contains(&self, factor: &Word) -> bool {
        self.find(factor).is_some()
    }
}

/// Every position at which `factor` occurs in `word`. An empty factor yields
/// no positions.
pub fn find_factor(word: &Word, factor: &Word) -> Vec<usize> {
    let (w, f) = (word.letters(), factor.letters());
    if f.is_empty() || f.len() > w.len() {
        return Vec::new();
    }
    w.windows(f.len())
        .enumerate()
        .filter(|(_, win)| *win == f)
        .map(|(i, _)| i)
        .collect()
}

impl Monomial for Word {
    fn one(_nvars: usize) -> Self {
        Word::empty()
    }

    fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len()
    }

    fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0.iter().map(|&l| u64::from(weights[l])).sum()
    }

    fn mul(&self, other: &Self) -> Self {
        self.concat(other)
    }

    fn fits(&self, nvars: usize) -> bool {
        self.0.iter().all(|&l| l < nvars)
    }

    fn cmp_by(&self, other: &Self, ord: &MonomialOrder) -> Ordering {
        // Lex on words is plain left-to-right comparison with a proper prefix
        // ranked lower. It is not admissible and rings refuse it, but it is
        // kept total so the admissibility checker can exhibit the failure.
        if ord.scheme() == OrderScheme::DegLex {
            match self.0.len().cmp(&other.0.len()) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        for (a, b) in self.0.iter().zip(&other.0) {
            if a != b {
                // higher precedence means lower rank
                return ord.rank(*b).cmp(&ord.rank(*a));
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

/// Commutative or free associative ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Commutative,
    NonCommutative,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::Commutative => f.write_str("commutative"),
            RingKind::NonCommutative => f.write_str("noncommutative"),
        }
    }
}

/// Generators, their degrees, and the monomial order of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingContext {
    kind: RingKind,
    generators: Vec<String>,
    degrees: Vec<u32>,
    order: MonomialOrder,
}

impl RingContext {
    /// Ring with natural grading and generator precedence equal to the
    /// declaration order.
    pub fn new(kind: RingKind, generators: Vec<String>, scheme: OrderScheme) -> Result<Self> {
        let n = generators.len();
        Self::with_degrees(kind, generators, vec![1; n], scheme)
    }

    pub fn with_degrees(
        kind: RingKind,
        generators: Vec<String>,
        degrees: Vec<u32>,
        scheme: OrderScheme,
    ) -> Result<Self> {
        if degrees.len() != generators.len() {
            return Err(Error::InvalidRing(
                "one degree per generator is required".into(),
            ));
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(Error::InvalidRing(format!("duplicate generator `{g}`")));
            }
        }
        if let Some(i) = degrees.iter().position(|d| *d == 0) {
            return Err(Error::InvalidRing(format!(
                "generator `{}` has degree 0",
                generators[i]
            )));
        }
        if kind == RingKind::NonCommutative && scheme == OrderScheme::Lex {
            return Err(Error::UnsupportedOrder(
                "lex unsupported for noncommutative rings".into(),
            ));
        }
        let order = MonomialOrder::natural(scheme, generators.len());
        Ok(RingContext {
            kind,
            generators,
            degrees,
            order,
        })
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.generators.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_naturally_graded(&self) -> bool {
        self.degrees.iter().all(|d| *d == 1)
    }

    /// Same ring with a different order scheme.
    pub fn with_scheme(&self, scheme: OrderScheme) -> Result<Self> {
        Self::with_degrees(
            self.kind,
            self.generators.clone(),
            self.degrees.clone(),
            scheme,
        )
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }
}

/// Finite sum of monomials with nonzero rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<M: Monomial> {
    nvars: usize,
    terms: BTreeMap<M, Rational>,
}

pub type CommPolynomial = Polynomial<CommMonomial>;
pub type NcPolynomial = Polynomial<Word>;

impl<M: Monomial> Polynomial<M> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(nvars, M::one(nvars), c)
    }

    /// Single term `c * m`. A zero coefficient gives the zero polynomial.
    pub fn term(nvars: usize, m: M, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from possibly repeated terms, merging duplicates
    /// and dropping zero sums.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (M, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            if !m.fits(nvars) {
                return Err(Error::RingMismatch(format!(
                    "monomial {m:?} does not fit a ring with {nvars} generators"
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &M) -> Option<&Rational> {
        self.terms.get(m)
    }

    pub fn support(&self) -> impl Iterator<Item = &M> {
        self.terms.keys()
    }

    /// Largest total degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// True when every term has the same weighted degree.
    pub fn is_homogeneous(&self, weights: &[u32]) -> bool {
        let mut degrees = self.terms.keys().map(|m| m.weighted_degree(weights));
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub(crate) fn add_term(&mut self, m: M, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch(format!(
                "{} generators vs {} generators",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `c * left * self * right`. For commutative monomials the two sides
    /// coincide.
    pub fn mul_monomials(&self, c: &Rational, left: &M, right: &M) -> Result<Self> {
        if !left.fits(self.nvars) || !right.fits(self.nvars) {
            return Err(Error::RingMismatch(
                "multiplier does not fit the polynomial's ring".into(),
            ));
        }
        Ok(self.mul_monomials_unchecked(c, left, right))
    }

    pub(crate) fn mul_monomials_unchecked(&self, c: &Rational, left: &M, right: &M) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = Self::zero(self.nvars);
        for (m, a) in &self.terms {
            // distinct monomials stay distinct under cancellative multiplication
            out.terms.insert(left.mul(m).mul(right), a * c);
        }
        out
    }

    /// `self += c * left * g * right`.
    pub(crate) fn add_multiple(&mut self, c: &Rational, left: &M, g: &Self, right: &M) {
        for (m, a) in &g.terms {
            self.add_term(left.mul(m).mul(right), a * c);
        }
    }

    /// The order-maximal monomial and its coefficient.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(&M, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| a.0.cmp_by(b.0, ord))
            .ok_or(Error::NoLeadingTerm)
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Option<&M> {
        self.terms.keys().max_by(|a, b| a.cmp_by(b, ord))
    }

    pub fn leading_coefficient(&self, ord: &MonomialOrder) -> Option<&Rational> {
        self.leading_term(ord).ok().map(|(_, c)| c)
    }

    /// Terms sorted by strictly decreasing monomial under `ord`.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<(&M, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp_by(a.0, ord));
        v
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self, ord: &MonomialOrder) -> Self {
        match self.leading_coefficient(ord) {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Whether `self` is a nonzero rational multiple of `other`.
    pub fn is_scalar_multiple_of(&self, other: &Self) -> bool {
        if self.nvars != other.nvars || self.terms.len() != other.terms.len() {
            return false;
        }
        let Some((m0, a0)) = self.terms.iter().next() else {
            return other.is_zero();
        };
        let Some(b0) = other.terms.get(m0) else {
            return false;
        };
        let ratio = a0 / b0;
        self.terms
            .iter()
            .all(|(m, a)| other.terms.get(m).is_some_and(|b| a == &(b * &ratio)))
    }

    /// Largest absolute numerator or denominator among the coefficients.
    pub fn coefficient_height(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.numer().abs().max(c.denom().clone()))
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl CommPolynomial {
    /// `c * m * self`.
    pub fn mul_term(&self, c: &Rational, m: &CommMonomial) -> Result<Self> {
        self.mul_monomials(c, m, &CommMonomial::one(self.nvars))
    }
}

impl NcPolynomial {
    /// `c * self * right`.
    pub fn mul_right(&self, c: &Rational, right: &Word) -> Result<Self> {
        self.mul_monomials(c, &Word::empty(), right)
    }

    /// `c * left * self`.
    pub fn mul_left(&self, c: &Rational, left: &Word) -> Result<Self> {
        self.mul_monomials(c, left, &Word::empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cm(e: &[u32]) -> CommMonomial {
        CommMonomial::new(e.to_vec())
    }

    fn cpoly(terms: &[(&[u32], i64)]) -> CommPolynomial {
        let n = terms.first().map_or(2, |t| t.0.len());
        Polynomial::from_terms(n, terms.iter().map(|(e, c)| (cm(e), integer(*c)))).unwrap()
    }

    fn w(s: &str) -> Word {
        Word(s.bytes().map(|b| (b - b'x') as usize).collect())
    }

    fn npoly(terms: &[(&str, i64)]) -> NcPolynomial {
        Polynomial::from_terms(3, terms.iter().map(|(s, c)| (w(s), integer(*c)))).unwrap()
    }

    #[test]
    fn addition_cancels() {
        let p = cpoly(&[(&[2, 0], 1), (&[0, 2], 1)]);
        let q = cpoly(&[(&[0, 2], -1)]);
        assert_eq!(p.try_add(&q).unwrap(), cpoly(&[(&[2, 0], 1)]));
    }

    #[test]
    fn addition_from_reduction_example() {
        // (x^3 - y^2) - (x^3 - x + 1) = x - y^2 - 1
        let f = cpoly(&[(&[3, 0], 1), (&[0, 2], -1)]);
        let g = cpoly(&[(&[3, 0], 1), (&[1, 0], -1), (&[0, 0], 1)]);
        let expected = cpoly(&[(&[1, 0], 1), (&[0, 2], -1), (&[0, 0], -1)]);
        assert_eq!(f.try_add(&g.neg()).unwrap(), expected);
        assert_eq!(f.try_add(&Polynomial::zero(2)).unwrap(), f);
    }

    #[test]
    fn addition_rejects_mismatched_arity() {
        let p = cpoly(&[(&[1, 0], 1)]);
        let q = cpoly(&[(&[1, 0, 0], 1)]);
        assert!(matches!(p.try_add(&q), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn from_terms_rejects_out_of_range_letters() {
        let r = NcPolynomial::from_terms(2, [(Word(vec![0, 2]), integer(1))]);
        assert!(matches!(r, Err(Error::RingMismatch(_))));
    }

    #[test]
    fn scaled_multiples() {
        let p = cpoly(&[(&[2, 0], 1), (&[0, 2], 1)]);
        let r = p.mul_term(&integer(1), &cm(&[1, 0])).unwrap();
        assert_eq!(r, cpoly(&[(&[3, 0], 1), (&[1, 2], 1)]));

        let q = npoly(&[("xx", 1), ("xy", -1)]);
        let r = q.mul_monomials(&integer(1), &w("x"), &w("y")).unwrap();
        assert_eq!(r, npoly(&[("xxxy", 1), ("xxyy", -1)]));

        let s = cpoly(&[(&[0, 4], 1)]).scale(&integer(-2));
        assert_eq!(s, cpoly(&[(&[0, 4], -2)]));
        assert!(cpoly(&[(&[0, 4], 1)]).scale(&integer(0)).is_zero());
    }

    #[test]
    fn leading_terms_under_deglex() {
        let ord = MonomialOrder::natural(OrderScheme::DegLex, 2);
        let p = cpoly(&[(&[2, 0], 1), (&[0, 2], 1)]);
        assert_eq!(p.leading_term(&ord).unwrap(), (&cm(&[2, 0]), &integer(1)));
        let h3 = cpoly(&[(&[0, 3], 1), (&[1, 2], -1)]);
        assert_eq!(h3.leading_term(&ord).unwrap(), (&cm(&[1, 2]), &integer(-1)));
        let single = cpoly(&[(&[1, 0], 5)]);
        assert_eq!(
            single.leading_term(&ord).unwrap(),
            (&cm(&[1, 0]), &integer(5))
        );
        assert_eq!(
            Polynomial::<CommMonomial>::zero(2).leading_term(&ord),
            Err(Error::NoLeadingTerm)
        );
    }

    #[test]
    fn factor_positions() {
        assert_eq!(find_factor(&w("xxy"), &w("xx")), vec![0]);
        assert_eq!(find_factor(&w("xxyy"), &w("xyy")), vec![1]);
        assert!(find_factor(&w("yyy"), &w("xz")).is_empty());
        assert_eq!(find_factor(&w("xxxx"), &w("xx")), vec![0, 1, 2]);
    }

    #[test]
    fn divisibility() {
        assert_eq!(cm(&[2, 0]).divides(&cm(&[3, 0])), Some(cm(&[1, 0])));
        assert_eq!(cm(&[1, 2]).divides(&cm(&[1, 3])), Some(cm(&[0, 1])));
        assert_eq!(cm(&[2, 0]).divides(&cm(&[1, 2])), None);
    }

    #[test]
    fn scalar_multiple_detection() {
        let p = npoly(&[("xyx", 1), ("xyy", -1)]);
        let q = npoly(&[("xyx", -2), ("xyy", 2)]);
        assert!(p.is_scalar_multiple_of(&q));
        assert!(!p.is_scalar_multiple_of(&npoly(&[("xyx", 1), ("xyy", 1)])));
    }
}
