//! End-to-end pipelines from a presentation to its Groebner basis and its
//! Hilbert series.

use crate::algebra::{
    integer, CommMonomial, CommPolynomial, Monomial, NcPolynomial, Polynomial, RingContext,
    RingKind, Word,
};
use crate::chains::{euler_identity_check, hilbert_from_chains, EulerReport, ObstructionSet};
use crate::commutative::{buchberger, reduce_basis, GroebnerBasis};
use crate::error::{Error, Result};
use crate::noncommutative::{complete_to_degree, CompletionResult};
use crate::ordering::OrderScheme;
use crate::parser::{Presentation, Relations};
use crate::series::{
    exterior_algebra_series, free_algebra_series, polynomial_algebra_series,
    series_from_normal_words, LeadingTerms, TruncatedSeries,
};

/// Groebner data of either ring kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Groebner {
    Commutative(GroebnerBasis),
    NonCommutative(CompletionResult),
}

impl Groebner {
    pub fn leading_terms(&self) -> LeadingTerms {
        match self {
            Groebner::Commutative(g) => LeadingTerms::Monomials(g.leading_monomials()),
            Groebner::NonCommutative(c) => LeadingTerms::Words {
                words: c.leading_words(),
                complete_to_degree: c.complete_to_degree,
                saturated: c.saturated,
            },
        }
    }
}

/// Groebner basis of the relations of `p`: a full (optionally reduced)
/// Buchberger run for commutative rings, a completion up to `max_degree`
/// for noncommutative ones.
///
/// A relation-free presentation yields an empty basis. Noncommutative
/// completion needs every generator in degree one, since the degree bound
/// is a bound on word length.
pub fn groebner(p: &Presentation, max_degree: usize, reduced: bool) -> Result<Groebner> {
    let ord = p.ring.order();
    match &p.relations {
        Relations::Commutative(v) if v.is_empty() => Ok(Groebner::Commutative(
            GroebnerBasis::from_elements(Vec::new(), ord.clone()),
        )),
        Relations::Commutative(v) => {
            let g = buchberger(v, ord)?;
            Ok(Groebner::Commutative(if reduced {
                reduce_basis(&g)
            } else {
                g
            }))
        }
        Relations::NonCommutative(v) if v.is_empty() => {
            Ok(Groebner::NonCommutative(CompletionResult {
                basis: Vec::new(),
                order: ord.clone(),
                complete_to_degree: max_degree,
                saturated: true,
            }))
        }
        Relations::NonCommutative(v) => {
            if !p.ring.is_naturally_graded() {
                return Err(Error::WeightedGroebner);
            }
            Ok(Groebner::NonCommutative(complete_to_degree(
                v, ord, max_degree,
            )?))
        }
    }
}

fn require_graded(p: &Presentation) -> Result<()> {
    match p.first_inhomogeneous() {
        Some((relation, text)) => Err(Error::NotGraded { relation, text }),
        None => Ok(()),
    }
}

/// Hilbert series up to `degree` by counting normal words, with the
/// noncommutative completion run to `completion_degree`.
pub fn hilbert_normal_words(
    p: &Presentation,
    degree: usize,
    completion_degree: usize,
) -> Result<TruncatedSeries> {
    require_graded(p)?;
    let g = groebner(p, completion_degree, false)?;
    series_from_normal_words(p, &g.leading_terms(), degree)
}

/// Noncommutative presentation of the same algebra: the relations with
/// each monomial written as a word in generator order, plus the
/// commutators `x_i x_j - x_j x_i`.
pub fn lift_commutative(p: &Presentation) -> Result<Presentation> {
    let Relations::Commutative(v) = &p.relations else {
        return Ok(p.clone());
    };
    let n = p.ring.nvars();
    let ring = RingContext::with_degrees(
        RingKind::NonCommutative,
        p.ring.generators().to_vec(),
        p.ring.degrees().to_vec(),
        OrderScheme::DegLex,
    )?;
    let mut relations: Vec<NcPolynomial> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            relations.push(Polynomial::from_terms(
                n,
                [
                    (Word::new(vec![i, j]), integer(1)),
                    (Word::new(vec![j, i]), integer(-1)),
                ],
            )?);
        }
    }
    for r in v {
        relations.push(Polynomial::from_terms(
            n,
            r.terms().map(|(m, c)| {
                let letters = m
                    .exponents()
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
                    .collect();
                (Word::new(letters), c.clone())
            }),
        )?);
    }
    Ok(Presentation::noncommutative(ring, relations))
}

/// Obstruction set of `p`, from the leading words of its completion.
/// Commutative presentations are lifted first.
pub fn obstructions(
    p: &Presentation,
    degree: usize,
    completion_degree: usize,
) -> Result<ObstructionSet> {
    let lifted = lift_commutative(p)?;
    let Groebner::NonCommutative(c) = groebner(&lifted, completion_degree, false)? else {
        unreachable!("lifted presentations are noncommutative");
    };
    if !c.saturated && c.complete_to_degree < degree {
        return Err(Error::Unsaturated {
            complete_to: c.complete_to_degree,
            requested: degree,
        });
    }
    ObstructionSet::with_degrees(&c.leading_words(), p.ring.degrees())
}

/// Hilbert series up to `degree` through Anick chains on the obstructions.
pub fn hilbert_chains(
    p: &Presentation,
    degree: usize,
    completion_degree: usize,
) -> Result<TruncatedSeries> {
    require_graded(p)?;
    match obstructions(p, degree, completion_degree) {
        Ok(f) => hilbert_from_chains(&f, degree),
        // the ideal is everything, so the quotient is zero
        Err(Error::TrivialQuotient) => Ok(TruncatedSeries::zero(degree)),
        Err(e) => Err(e),
    }
}

/// Checks the Euler identity between chains and normal words of `p`.
pub fn euler_check(
    p: &Presentation,
    degree: usize,
    completion_degree: usize,
) -> Result<EulerReport> {
    require_graded(p)?;
    euler_identity_check(&obstructions(p, degree, completion_degree)?, degree)
}

/// Hilbert series from a closed-form product, available for free algebras,
/// polynomial algebras and exterior algebras.
pub fn hilbert_closed_form(p: &Presentation, degree: usize) -> Result<TruncatedSeries> {
    let weights = p.ring.degrees();
    let n = p.ring.nvars();
    match &p.relations {
        Relations::Commutative(v) => {
            if v.is_empty() {
                return Ok(polynomial_algebra_series(weights, degree));
            }
            let squares: Vec<CommPolynomial> = (0..n)
                .map(|i| {
                    let mut e = vec![0; n];
                    e[i] = 2;
                    Polynomial::term(n, CommMonomial::new(e), integer(1))
                })
                .collect();
            if same_up_to_scalars(v, &squares) {
                return Ok(exterior_algebra_series(weights, degree));
            }
        }
        Relations::NonCommutative(v) => {
            if v.is_empty() {
                return Ok(free_algebra_series(weights, degree));
            }
            let pair = |i: usize, j: usize, sign: i64| {
                Polynomial::from_terms(
                    n,
                    [
                        (Word::new(vec![i, j]), integer(1)),
                        (Word::new(vec![j, i]), integer(sign)),
                    ],
                )
                .expect("arity matches")
            };
            let mut commutators = Vec::new();
            let mut anticommutators: Vec<NcPolynomial> = (0..n)
                .map(|i| Polynomial::term(n, Word::new(vec![i, i]), integer(1)))
                .collect();
            for i in 0..n {
                for j in i + 1..n {
                    commutators.push(pair(i, j, -1));
                    anticommutators.push(pair(i, j, 1));
                }
            }
            if same_up_to_scalars(v, &commutators) {
                return Ok(polynomial_algebra_series(weights, degree));
            }
            if same_up_to_scalars(v, &anticommutators) {
                return Ok(exterior_algebra_series(weights, degree));
            }
        }
    }
    Err(Error::ClosedFormUnavailable(
        "relations are not those of a free, polynomial or exterior algebra".into(),
    ))
}

/// Whether every element of `a` is a nonzero multiple of one in `b` and
/// every element of `b` is hit.
fn same_up_to_scalars<M: Monomial>(a: &[Polynomial<M>], b: &[Polynomial<M>]) -> bool {
    a.iter()
        .all(|p| b.iter().any(|q| p.is_scalar_multiple_of(q)))
        && b.iter()
            .all(|q| a.iter().any(|p| p.is_scalar_multiple_of(q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_presentation;

    fn s(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64s(c)
    }

    fn parse(text: &str) -> Presentation {
        parse_presentation(text).unwrap()
    }

    #[test]
    fn sum_of_squares_all_methods() {
        let p = parse("ring noncommutative\nvars x y\nrel x^2 + y^2\n");
        let want = s(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(hilbert_normal_words(&p, 5, 5).unwrap(), want);
        assert_eq!(hilbert_chains(&p, 5, 5).unwrap(), want);
        assert!(euler_check(&p, 6, 6).unwrap().passed());
        assert!(hilbert_closed_form(&p, 5).is_err());
    }

    #[test]
    fn commutative_lift_matches() {
        let p = parse("ring commutative\nvars x1 x2\nrel x1^2 + x2^2\nrel x1^3 + x2^3\n");
        let direct = hilbert_normal_words(&p, 6, 6).unwrap();
        assert_eq!(direct, s(&[1, 2, 2, 1, 0, 0, 0]));
        assert_eq!(hilbert_chains(&p, 6, 6).unwrap(), direct);
    }

    #[test]
    fn presets() {
        let ext = parse("ring commutative\nvars x y z\nrel x^2\nrel 3*y^2\nrel z^2\n");
        assert_eq!(hilbert_closed_form(&ext, 4).unwrap(), s(&[1, 3, 3, 1, 0]));
        assert_eq!(
            hilbert_normal_words(&ext, 4, 4).unwrap(),
            s(&[1, 3, 3, 1, 0])
        );
        let nc_ext = parse("ring noncommutative\nvars x y\nrel x^2\nrel y^2\nrel x*y + y*x\n");
        assert_eq!(hilbert_closed_form(&nc_ext, 3).unwrap(), s(&[1, 2, 1, 0]));
        assert_eq!(
            hilbert_normal_words(&nc_ext, 3, 3).unwrap(),
            s(&[1, 2, 1, 0])
        );
        let comm = parse("ring noncommutative\nvars x y\nrel x*y - y*x\n");
        assert_eq!(hilbert_closed_form(&comm, 3).unwrap(), s(&[1, 2, 3, 4]));
        assert_eq!(hilbert_chains(&comm, 3, 3).unwrap(), s(&[1, 2, 3, 4]));
        let free = parse("ring noncommutative\nvars a b c\n");
        assert_eq!(hilbert_closed_form(&free, 3).unwrap(), s(&[1, 3, 9, 27]));
        assert_eq!(hilbert_chains(&free, 3, 3).unwrap(), s(&[1, 3, 9, 27]));
    }

    #[test]
    fn grading_and_saturation_guards() {
        let p = parse("ring commutative\nvars x\nrel x^3 + 2*x^2\n");
        assert!(matches!(
            hilbert_normal_words(&p, 4, 4),
            Err(Error::NotGraded { relation: 0, .. })
        ));
        let q = parse("ring noncommutative\nvars x y\nrel x^2 - x*y\n");
        assert!(matches!(
            hilbert_normal_words(&q, 8, 5),
            Err(Error::Unsaturated {
                complete_to: 5,
                requested: 8
            })
        ));
        assert!(matches!(
            hilbert_chains(&q, 8, 5),
            Err(Error::Unsaturated { .. })
        ));
        assert_eq!(
            hilbert_normal_words(&q, 5, 5).unwrap(),
            s(&[1, 2, 3, 4, 5, 6])
        );
    }

    #[test]
    fn weighted_presentations() {
        let p = parse("ring commutative\nvars x y\ndeg y 2\nrel x^2\n");
        assert_eq!(hilbert_normal_words(&p, 4, 4).unwrap(), s(&[1, 1, 1, 1, 1]));
        let q = parse("ring noncommutative\nvars x y\ndeg y 2\nrel x^2\n");
        assert_eq!(hilbert_normal_words(&q, 4, 4), Err(Error::WeightedGroebner));
        let free = parse("ring noncommutative\nvars x y\ndeg y 2\n");
        assert_eq!(
            hilbert_normal_words(&free, 4, 4).unwrap(),
            s(&[1, 1, 2, 3, 5])
        );
        assert_eq!(hilbert_chains(&free, 4, 4).unwrap(), s(&[1, 1, 2, 3, 5]));
    }
}
