//! Truncated formal power series with integer coefficients, and Hilbert
//! series of graded algebras.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{CommMonomial, Monomial, Word};
use crate::error::{Error, Result};
use crate::parser::{Presentation, Relations};

/// Coefficients `c_0, ..., c_D` of a power series known modulo `t^(D+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Panics if `coeffs` is empty: a series always has a constant term.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); degree + 1],
        }
    }

    pub fn one(degree: usize) -> Self {
        Self::monomial(0, BigInt::one(), degree)
    }

    /// `c * t^k` truncated at `degree`.
    pub fn monomial(k: usize, c: BigInt, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        if k <= degree {
            s.coeffs[k] = c;
        }
        s
    }

    /// Truncation degree `D`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, d: usize) -> &BigInt {
        &self.coeffs[d]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Keeps the coefficients up to `degree` (which must not exceed `D`).
    pub fn truncate(&self, degree: usize) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs[..=degree.min(self.degree())].to_vec(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product truncated at `D`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = self.degree();
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=d - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::NonUnitConstant(c0.clone()));
        }
        let d = self.degree();
        let mut b: Vec<BigInt> = Vec::with_capacity(d + 1);
        // c0 is its own inverse
        b.push(c0.clone());
        for n in 1..=d {
            let s: BigInt = (1..=n).map(|k| &self.coeffs[k] * &b[n - k]).sum();
            b.push(-(c0 * s));
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Index of the last nonzero coefficient.
    pub fn last_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Renders the series as a polynomial in `t`, e.g. `1 - 2t + t^2`.
    pub fn to_polynomial_string(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if k == 0 || !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            out.push_str(&var);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Aho-Corasick automaton over the prefixes of an obstruction set. A walk
/// from the root that never enters a dead state spells a word avoiding every
/// obstruction as a factor.
#[derive(Clone, Debug)]
pub struct FactorAutomaton {
    nvars: usize,
    /// `delta[state][letter]`, `None` when the letter completes an obstruction.
    delta: Vec<Vec<Option<usize>>>,
    root_dead: bool,
}

impl FactorAutomaton {
    pub fn new(obstructions: &[Word], nvars: usize) -> Self {
        // trie
        let mut children: Vec<Vec<Option<usize>>> = vec![vec![None; nvars]];
        let mut terminal = vec![false];
        for o in obstructions {
            let mut s = 0;
            for &l in o.letters() {
                s = match children[s][l] {
                    Some(t) => t,
                    None => {
                        children.push(vec![None; nvars]);
                        terminal.push(false);
                        let t = children.len() - 1;
                        children[s][l] = Some(t);
                        t
                    }
                };
            }
            terminal[s] = true;
        }

        // breadth-first failure links; a state is dead when it or any
        // suffix state is terminal
        let n = children.len();
        let mut fail = vec![0usize; n];
        let mut dead = terminal.clone();
        let mut goto = vec![vec![0usize; nvars]; n];
        let mut queue = std::collections::VecDeque::new();
        for l in 0..nvars {
            match children[0][l] {
                Some(t) => {
                    fail[t] = 0;
                    goto[0][l] = t;
                    queue.push_back(t);
                }
                None => goto[0][l] = 0,
            }
        }
        while let Some(s) = queue.pop_front() {
            dead[s] = dead[s] || dead[fail[s]];
            for l in 0..nvars {
                match children[s][l] {
                    Some(t) => {
                        fail[t] = goto[fail[s]][l];
                        goto[s][l] = t;
                        queue.push_back(t);
                    }
                    None => goto[s][l] = goto[fail[s]][l],
                }
            }
        }

        let delta = (0..n)
            .map(|s| {
                (0..nvars)
                    .map(|l| {
                        let t = goto[s][l];
                        (!dead[t]).then_some(t)
                    })
                    .collect()
            })
            .collect();
        // the empty word as an obstruction kills everything, root included
        if dead[0] {
            return FactorAutomaton {
                nvars,
                delta: vec![vec![None; nvars]],
                root_dead: true,
            };
        }
        FactorAutomaton {
            nvars,
            delta,
            root_dead: false,
        }
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn next(&self, state: usize, letter: usize) -> Option<usize> {
        self.delta[state][letter]
    }

    /// Whether `w` avoids every obstruction.
    pub fn accepts(&self, w: &Word) -> bool {
        if self.root_dead {
            return false;
        }
        let mut s = 0;
        for &l in w.letters() {
            match self.next(s, l) {
                Some(t) => s = t,
                None => return false,
            }
        }
        true
    }

    /// Number of accepted words of each weighted degree `0..=max_degree`.
    pub fn count(&self, weights: &[u32], max_degree: usize) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(max_degree);
        if self.root_dead {
            return out;
        }
        let states = self.num_states();
        let mut dp = vec![vec![BigInt::zero(); states]; max_degree + 1];
        dp[0][0] = BigInt::one();
        for d in 0..=max_degree {
            for s in 0..states {
                if dp[d][s].is_zero() {
                    continue;
                }
                let here = dp[d][s].clone();
                out.coeffs[d] += &here;
                for (l, &w) in weights.iter().enumerate().take(self.nvars) {
                    let e = d + w as usize;
                    if e > max_degree {
                        continue;
                    }
                    if let Some(t) = self.delta[s][l] {
                        dp[e][t] += &here;
                    }
                }
            }
        }
        out
    }
}

/// Hilbert series of the monomial algebra `K<X | obstructions>` by counting
/// normal words. Obstructions longer than `max_degree` cannot matter and are
/// left out of the automaton.
pub fn count_normal_words(
    obstructions: &[Word],
    weights: &[u32],
    max_degree: usize,
) -> TruncatedSeries {
    let relevant: Vec<Word> = obstructions
        .iter()
        .filter(|o| o.len() <= max_degree)
        .cloned()
        .collect();
    FactorAutomaton::new(&relevant, weights.len()).count(weights, max_degree)
}

/// Number of commutative monomials of each weighted degree divisible by no
/// element of `leads`.
pub fn count_normal_monomials(
    leads: &[CommMonomial],
    weights: &[u32],
    max_degree: usize,
) -> TruncatedSeries {
    fn rec(
        exps: &mut Vec<u32>,
        budget: usize,
        weights: &[u32],
        leads: &[CommMonomial],
        out: &mut TruncatedSeries,
        max_degree: usize,
    ) {
        let i = exps.len();
        if i == weights.len() {
            let m = CommMonomial::new(exps.clone());
            if leads.iter().all(|l| l.divides(&m).is_none()) {
                let d = max_degree - budget;
                out.coeffs[d] += 1;
            }
            return;
        }
        let w = weights[i] as usize;
        let mut e = 0;
        while e * w <= budget {
            exps.push(e as u32);
            rec(exps, budget - e * w, weights, leads, out, max_degree);
            exps.pop();
            e += 1;
        }
    }
    let mut out = TruncatedSeries::zero(max_degree);
    rec(
        &mut Vec::new(),
        max_degree,
        weights,
        leads,
        &mut out,
        max_degree,
    );
    debug_assert!(leads.iter().all(|l| l.fits(weights.len())));
    out
}

/// Leading monomials or words of a Groebner basis, as used for counting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeadingTerms {
    Monomials(Vec<CommMonomial>),
    Words {
        words: Vec<Word>,
        /// Degree bound the words are known to be complete up to.
        complete_to_degree: usize,
        saturated: bool,
    },
}

/// Hilbert series of the quotient `P` from the leading terms of a Groebner
/// basis of its relations.
///
/// Refuses inhomogeneous presentations, and word sets that are neither
/// saturated nor complete up to `max_degree`.
pub fn series_from_normal_words(
    p: &Presentation,
    leads: &LeadingTerms,
    max_degree: usize,
) -> Result<TruncatedSeries> {
    if let Some((relation, text)) = p.first_inhomogeneous() {
        return Err(Error::NotGraded { relation, text });
    }
    let weights = p.ring.degrees();
    match (leads, &p.relations) {
        (LeadingTerms::Monomials(ms), Relations::Commutative(_)) => {
            Ok(count_normal_monomials(ms, weights, max_degree))
        }
        (
            LeadingTerms::Words {
                words,
                complete_to_degree,
                saturated,
            },
            Relations::NonCommutative(_),
        ) => {
            if !saturated && *complete_to_degree < max_degree {
                return Err(Error::Unsaturated {
                    complete_to: *complete_to_degree,
                    requested: max_degree,
                });
            }
            Ok(count_normal_words(words, weights, max_degree))
        }
        _ => Err(Error::RingMismatch(
            "leading terms do not match the ring kind".into(),
        )),
    }
}

/// `prod_x (1 - t^|x|)^(-1)`.
pub fn polynomial_algebra_series(degrees: &[u32], max_degree: usize) -> TruncatedSeries {
    let mut h = TruncatedSeries::one(max_degree);
    for &d in degrees {
        let mut geometric = TruncatedSeries::zero(max_degree);
        let step = d as usize;
        let mut k = 0;
        while k <= max_degree {
            geometric.coeffs[k] = BigInt::one();
            k += step;
        }
        h = h.mul(&geometric).expect("same degree");
    }
    h
}

/// `prod_x (1 + t^|x|)`.
pub fn exterior_algebra_series(degrees: &[u32], max_degree: usize) -> TruncatedSeries {
    let mut h = TruncatedSeries::one(max_degree);
    for &d in degrees {
        let factor = TruncatedSeries::one(max_degree)
            .add(&TruncatedSeries::monomial(
                d as usize,
                BigInt::one(),
                max_degree,
            ))
            .expect("same degree");
        h = h.mul(&factor).expect("same degree");
    }
    h
}

/// `(1 - sum_x t^|x|)^(-1)`, the series of the free associative algebra.
pub fn free_algebra_series(degrees: &[u32], max_degree: usize) -> TruncatedSeries {
    let mut inv = TruncatedSeries::one(max_degree);
    for &d in degrees {
        inv = inv
            .sub(&TruncatedSeries::monomial(
                d as usize,
                BigInt::one(),
                max_degree,
            ))
            .expect("same degree");
    }
    inv.inverse().expect("constant term is one")
}

/// Series of the free product from `H_{A*B}^(-1) = H_A^(-1) + H_B^(-1) - 1`.
pub fn free_product_series(ha: &TruncatedSeries, hb: &TruncatedSeries) -> Result<TruncatedSeries> {
    ha.check(hb)?;
    for h in [ha, hb] {
        if !h.coeffs[0].is_one() {
            return Err(Error::NonUnitConstant(h.coeffs[0].clone()));
        }
    }
    let d = ha.degree();
    ha.inverse()?
        .add(&hb.inverse()?)?
        .sub(&TruncatedSeries::one(d))?
        .inverse()
}
