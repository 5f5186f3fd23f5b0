//! Admissible monomial orders: LEX and DEGLEX.
//!
//! Generator precedence is a permutation listing generator indices from
//! greatest to smallest. Rings built from presentation files use declaration
//! order, so the first declared generator is the greatest.
//!
//! On words only DEGLEX is admissible: length first, then left-to-right
//! comparison of letters by precedence.

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::{CommMonomial, Monomial, Word};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderScheme {
    Lex,
    DegLex,
}

impl fmt::Display for OrderScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderScheme::Lex => f.write_str("lex"),
            OrderScheme::DegLex => f.write_str("deglex"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    scheme: OrderScheme,
    precedence: Vec<usize>,
    rank: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(scheme: OrderScheme, precedence: Vec<usize>) -> Result<Self> {
        let n = precedence.len();
        let mut rank = vec![usize::MAX; n];
        for (r, &g) in precedence.iter().enumerate() {
            if g >= n || rank[g] != usize::MAX {
                return Err(Error::InvalidRing(format!(
                    "generator precedence {precedence:?} is not a permutation"
                )));
            }
            rank[g] = r;
        }
        Ok(MonomialOrder {
            scheme,
            precedence,
            rank,
        })
    }

    /// Generator 0 greatest, then 1, and so on.
    pub fn natural(scheme: OrderScheme, nvars: usize) -> Self {
        MonomialOrder {
            scheme,
            precedence: (0..nvars).collect(),
            rank: (0..nvars).collect(),
        }
    }

    pub fn scheme(&self) -> OrderScheme {
        self.scheme
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    /// Position of a generator in the precedence list; 0 is the greatest.
    pub fn rank(&self, generator: usize) -> usize {
        self.rank[generator]
    }

    pub fn cmp<M: Monomial>(&self, a: &M, b: &M) -> Ordering {
        a.cmp_by(b, self)
    }

    /// Checked comparison: both monomials must fit this order's generators.
    pub fn compare<M: Monomial>(&self, a: &M, b: &M) -> Result<Ordering> {
        let n = self.nvars();
        if !a.fits(n) || !b.fits(n) {
            return Err(Error::RingMismatch(format!(
                "monomials do not fit an order on {n} generators"
            )));
        }
        Ok(a.cmp_by(b, self))
    }
}

/// Monomial kinds whose low-degree monomials can be listed exhaustively.
pub trait Enumerable: Monomial {
    fn all_up_to(nvars: usize, max_degree: usize) -> Vec<Self>;
}

impl Enumerable for CommMonomial {
    fn all_up_to(nvars: usize, max_degree: usize) -> Vec<Self> {
        fn rec(prefix: &mut Vec<u32>, left: usize, nvars: usize, out: &mut Vec<CommMonomial>) {
            if prefix.len() == nvars {
                out.push(CommMonomial::new(prefix.clone()));
                return;
            }
            for e in 0..=left {
                prefix.push(e as u32);
                rec(prefix, left - e, nvars, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), max_degree, nvars, &mut out);
        out
    }
}

impl Enumerable for Word {
    fn all_up_to(nvars: usize, max_degree: usize) -> Vec<Self> {
        let mut out = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 0..max_degree {
            let mut next = Vec::with_capacity(frontier.len() * nvars);
            for w in &frontier {
                for g in 0..nvars {
                    let mut l = w.0.clone();
                    l.push(g);
                    next.push(Word(l));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation<M> {
    /// `cmp(a, b)` and `cmp(b, a)` are not mirror images.
    NotAntisymmetric(M, M),
    /// Two distinct monomials compare equal.
    EqualOnDistinct(M, M),
    /// `a < b` and `b < c` but not `a < c`.
    NotTransitive(M, M, M),
    /// `a < b` but `a*c < b*c` fails.
    NotRightMultiplicative(M, M, M),
    /// `a < b` but `c*a < c*b` fails.
    NotLeftMultiplicative(M, M, M),
    /// Some monomial ranks below the unit, which allows infinite descent.
    BelowUnit(M),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport<M> {
    pub sample_degree: usize,
    pub monomials_checked: usize,
    pub violation: Option<Violation<M>>,
}

impl<M> AdmissibilityReport<M> {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Exhaustively checks totality and multiplicativity of `ord` over all
/// monomials of degree at most `sample_degree` in `min(nvars, 3)` generators.
pub fn check_admissibility<M: Enumerable>(
    ord: &MonomialOrder,
    sample_degree: usize,
) -> AdmissibilityReport<M> {
    let nvars = ord.nvars().min(3);
    let restricted = MonomialOrder::natural(ord.scheme(), nvars);
    let restricted = if nvars == ord.nvars() {
        ord.clone()
    } else {
        restricted
    };
    check_admissibility_with(nvars, sample_degree, |a: &M, b: &M| restricted.cmp(a, b))
}

/// Same check for an arbitrary comparator.
pub fn check_admissibility_with<M, F>(
    nvars: usize,
    sample_degree: usize,
    cmp: F,
) -> AdmissibilityReport<M>
where
    M: Enumerable,
    F: Fn(&M, &M) -> Ordering,
{
    let sample = M::all_up_to(nvars, sample_degree);
    let report = |violation| AdmissibilityReport {
        sample_degree,
        monomials_checked: sample.len(),
        violation,
    };
    let unit = M::one(nvars);
    for m in &sample {
        if cmp(m, &unit) == Ordering::Less {
            return report(Some(Violation::BelowUnit(m.clone())));
        }
    }
    for a in &sample {
        for b in &sample {
            let ab = cmp(a, b);
            if ab != cmp(b, a).reverse() {
                return report(Some(Violation::NotAntisymmetric(a.clone(), b.clone())));
            }
            if ab == Ordering::Equal && a != b {
                return report(Some(Violation::EqualOnDistinct(a.clone(), b.clone())));
            }
            if ab != Ordering::Less {
                continue;
            }
            for c in &sample {
                if cmp(b, c) == Ordering::Less && cmp(a, c) != Ordering::Less {
                    return report(Some(Violation::NotTransitive(
                        a.clone(),
                        b.clone(),
                        c.clone(),
                    )));
                }
                if cmp(&a.mul(c), &b.mul(c)) != Ordering::Less {
                    return report(Some(Violation::NotRightMultiplicative(
                        a.clone(),
                        b.clone(),
                        c.clone(),
                    )));
                }
                if cmp(&c.mul(a), &c.mul(b)) != Ordering::Less {
                    return report(Some(Violation::NotLeftMultiplicative(
                        a.clone(),
                        b.clone(),
                        c.clone(),
                    )));
                }
            }
        }
    }
    report(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cm(e: &[u32]) -> CommMonomial {
        CommMonomial::new(e.to_vec())
    }

    fn w(s: &str) -> Word {
        Word(s.bytes().map(|b| (b - b'x') as usize).collect())
    }

    #[test]
    fn deglex_commutative() {
        let ord = MonomialOrder::natural(OrderScheme::DegLex, 2);
        assert_eq!(
            ord.compare(&cm(&[1, 2]), &cm(&[0, 3])),
            Ok(Ordering::Greater)
        );
        assert_eq!(ord.compare(&cm(&[1, 0]), &cm(&[0, 5])), Ok(Ordering::Less));
        assert_eq!(ord.compare(&cm(&[1, 1]), &cm(&[1, 1])), Ok(Ordering::Equal));
    }

    #[test]
    fn lex_commutative_first_variable_dominates() {
        let ord = MonomialOrder::natural(OrderScheme::Lex, 2);
        assert_eq!(
            ord.compare(&cm(&[1, 0]), &cm(&[0, 5])),
            Ok(Ordering::Greater)
        );
    }

    #[test]
    fn deglex_words() {
        let ord = MonomialOrder::natural(OrderScheme::DegLex, 2);
        assert_eq!(ord.compare(&w("xxy"), &w("xyx")), Ok(Ordering::Greater));
        assert_eq!(ord.compare(&w("xy"), &w("yyy")), Ok(Ordering::Less));
    }

    #[test]
    fn precedence_permutation_is_respected() {
        let ord = MonomialOrder::new(OrderScheme::DegLex, vec![1, 0]).unwrap();
        assert_eq!(ord.compare(&w("xy"), &w("yx")), Ok(Ordering::Less));
        assert_eq!(ord.compare(&cm(&[2, 0]), &cm(&[1, 1])), Ok(Ordering::Less));
        assert!(MonomialOrder::new(OrderScheme::Lex, vec![0, 0]).is_err());
    }

    #[test]
    fn compare_rejects_arity_mismatch() {
        let ord = MonomialOrder::natural(OrderScheme::DegLex, 2);
        assert!(ord.compare(&cm(&[1, 0, 0]), &cm(&[1, 0, 0])).is_err());
        assert!(ord.compare(&w("z"), &w("x")).is_err());
    }

    #[test]
    fn standard_orders_are_admissible() {
        for scheme in [OrderScheme::Lex, OrderScheme::DegLex] {
            let ord = MonomialOrder::natural(scheme, 2);
            assert!(check_admissibility::<CommMonomial>(&ord, 4).passed());
        }
        let ord = MonomialOrder::natural(OrderScheme::DegLex, 2);
        assert!(check_admissibility::<Word>(&ord, 4).passed());
    }

    #[test]
    fn lex_on_words_is_rejected_by_the_checker() {
        let ord = MonomialOrder::natural(OrderScheme::Lex, 2);
        let report = check_admissibility::<Word>(&ord, 3);
        assert!(!report.passed());
    }

    #[test]
    fn corrupted_order_yields_counterexample() {
        // DEGLEX with precedence inverted on degree-2 monomials only.
        let ord = MonomialOrder::natural(OrderScheme::DegLex, 2);
        let corrupted = |a: &CommMonomial, b: &CommMonomial| {
            let o = ord.cmp(a, b);
            if a.degree() == 2 && b.degree() == 2 {
                o.reverse()
            } else {
                o
            }
        };
        let report = check_admissibility_with(2, 4, corrupted);
        // first violating triple in enumeration order: x2 < x1 but x2*x2 > x1*x2
        let Some(Violation::NotRightMultiplicative(a, b, c)) = report.violation.clone() else {
            panic!(
                "expected a multiplicativity violation, got {:?}",
                report.violation
            );
        };
        assert!(ord.cmp(&a, &b) == Ordering::Less);
        assert_ne!(corrupted(&a.mul(&c), &b.mul(&c)), Ordering::Less);
        assert_eq!((a, b, c), (cm(&[0, 1]), cm(&[1, 0]), cm(&[0, 1])));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(CommMonomial::all_up_to(2, 3).len(), 10);
        assert_eq!(Word::all_up_to(2, 3).len(), 15);
    }
}
