//! Groebner bases in the commutative polynomial ring over the rationals.

use std::collections::VecDeque;

use num_traits::One;

use crate::algebra::{CommMonomial, CommPolynomial, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::ordering::MonomialOrder;
use crate::reduction::{self, interreduce, Reducers};

/// A Groebner basis together with the order it was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<CommPolynomial>,
    order: MonomialOrder,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[CommPolynomial] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn leading_monomials(&self) -> Vec<CommMonomial> {
        self.elements
            .iter()
            .filter_map(|g| g.leading_monomial(&self.order).cloned())
            .collect()
    }

    /// True when the ideal is the whole ring.
    pub fn is_trivial(&self) -> bool {
        self.elements
            .iter()
            .any(|g| !g.is_zero() && g.is_constant())
    }
}

/// Returns the quotient `q` with `m2 = q * m1` when `m1` divides `m2`.
pub fn divides(m1: &CommMonomial, m2: &CommMonomial) -> Option<CommMonomial> {
    m1.divides(m2)
}

/// `f - (lc(f)/lc(g)) * m * g` where `lt(f) = m * lt(g)`.
pub fn reduce_once(
    f: &CommPolynomial,
    g: &CommPolynomial,
    ord: &MonomialOrder,
) -> Result<CommPolynomial> {
    let (lf, cf) = f.leading_term(ord)?;
    let (lg, cg) = g.leading_term(ord)?;
    let m = divides(lg, lf).ok_or(Error::NotReducible)?;
    let mut out = f.clone();
    out.add_multiple(&-(cf / cg), &m, g, &CommMonomial::one(f.nvars()));
    Ok(out)
}

/// Fully reduced remainder of `f` modulo `basis`: no term of the result is
/// divisible by a leading monomial of `basis`.
pub fn normal_form(
    f: &CommPolynomial,
    basis: &[CommPolynomial],
    ord: &MonomialOrder,
) -> CommPolynomial {
    reduction::normal_form(f, basis, ord)
}

/// S-polynomial over the least common multiple of the leading monomials.
pub fn s_polynomial(
    f: &CommPolynomial,
    g: &CommPolynomial,
    ord: &MonomialOrder,
) -> Result<CommPolynomial> {
    let (lf, cf) = f.leading_term(ord)?;
    let (lg, cg) = g.leading_term(ord)?;
    let l = lf.lcm(lg);
    let one = CommMonomial::one(f.nvars());
    let mf = lf.divides(&l).expect("lcm is a multiple");
    let mg = lg.divides(&l).expect("lcm is a multiple");
    let mut s = Polynomial::zero(f.nvars());
    s.add_multiple(&cf.recip(), &mf, f, &one);
    s.add_multiple(&-cg.recip(), &mg, g, &one);
    Ok(s)
}

fn check_relations(relations: &[CommPolynomial]) -> Result<usize> {
    let first = relations.first().ok_or(Error::NoRelations)?;
    let n = first.nvars();
    for (i, r) in relations.iter().enumerate() {
        if r.is_zero() {
            return Err(Error::ZeroRelation(i));
        }
        if r.nvars() != n {
            return Err(Error::RingMismatch(format!(
                "relation {i} has a different arity"
            )));
        }
    }
    Ok(n)
}

/// Buchberger completion.
///
/// Pairs are processed first-in first-out. Pairs with coprime leading
/// monomials are skipped since their S-polynomials reduce to zero. When a new
/// element's leading monomial divides that of an existing element, the
/// existing element is withdrawn and reduced again.
pub fn buchberger(relations: &[CommPolynomial], ord: &MonomialOrder) -> Result<GroebnerBasis> {
    let n = check_relations(relations)?;
    if n != ord.nvars() {
        return Err(Error::RingMismatch(
            "order and relations differ in arity".into(),
        ));
    }

    let mut slots: Vec<Option<CommPolynomial>> = Vec::new();
    let mut leads: Vec<CommMonomial> = Vec::new();
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    let mut pending: VecDeque<CommPolynomial> = relations.iter().cloned().collect();

    let active = |slots: &[Option<CommPolynomial>]| -> Vec<CommPolynomial> {
        slots.iter().flatten().cloned().collect()
    };

    loop {
        while let Some(p) = pending.pop_front() {
            let current = active(&slots);
            let h = normal_form(&p, &current, ord);
            if h.is_zero() {
                continue;
            }
            let lt = h.leading_monomial(ord).expect("nonzero").clone();
            for i in 0..slots.len() {
                if slots[i].is_some() && lt.divides(&leads[i]).is_some() {
                    pending.push_back(slots[i].take().expect("checked"));
                }
            }
            let id = slots.len();
            pairs.extend(
                slots
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.is_some())
                    .map(|(i, _)| (i, id)),
            );
            slots.push(Some(h));
            leads.push(lt);
        }
        let Some((i, j)) = pairs.pop_front() else {
            break;
        };
        let (Some(f), Some(g)) = (&slots[i], &slots[j]) else {
            continue;
        };
        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        let s = s_polynomial(f, g, ord)?;
        let h = normal_form(&s, &active(&slots), ord);
        if !h.is_zero() {
            pending.push_back(h);
        }
    }

    Ok(GroebnerBasis {
        elements: slots.into_iter().flatten().collect(),
        order: ord.clone(),
        reduced: false,
    })
}

/// Inter-reduces `basis`: monic, no leading monomial divisible by another,
/// every tail term normal, sorted by increasing leading monomial. Elements
/// whose leading monomial is divisible by another's are reduced, not simply
/// discarded, so the ideal is preserved even for a non-Groebner input.
pub fn reduce_basis(basis: &GroebnerBasis) -> GroebnerBasis {
    GroebnerBasis {
        elements: interreduce(&basis.elements, &basis.order),
        order: basis.order.clone(),
        reduced: true,
    }
}

/// Ideal membership via the normal form.
pub fn is_member(f: &CommPolynomial, basis: &GroebnerBasis) -> bool {
    normal_form(f, &basis.elements, &basis.order).is_zero()
}

/// Monomials of each degree `0..=max_degree` divisible by no leading
/// monomial of `basis`, sorted increasingly.
pub fn normal_monomials(basis: &GroebnerBasis, max_degree: usize) -> Vec<Vec<CommMonomial>> {
    normal_monomials_for(
        &basis.leading_monomials(),
        basis.nvars(),
        &basis.order,
        max_degree,
    )
}

/// Same as [`normal_monomials`] for an explicit list of leading monomials.
pub fn normal_monomials_for(
    leads: &[CommMonomial],
    nvars: usize,
    ord: &MonomialOrder,
    max_degree: usize,
) -> Vec<Vec<CommMonomial>> {
    (0..=max_degree)
        .map(|d| {
            let mut ms: Vec<CommMonomial> = monomials_of_degree(nvars, d)
                .into_iter()
                .filter(|m| leads.iter().all(|l| l.divides(m).is_none()))
                .collect();
            ms.sort_by(|a, b| ord.cmp(a, b));
            ms
        })
        .collect()
}

/// Every monomial of total degree exactly `d` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, d: usize) -> Vec<CommMonomial> {
    fn rec(prefix: &mut Vec<u32>, left: usize, nvars: usize, out: &mut Vec<CommMonomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left as u32);
            out.push(CommMonomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=left {
            prefix.push(e as u32);
            rec(prefix, left - e, nvars, out);
            prefix.pop();
        }
    }
    if nvars == 0 {
        return if d == 0 {
            vec![CommMonomial::new(Vec::new())]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), d, nvars, &mut out);
    out
}

/// Outcome of checking the S-polynomial criterion on a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondReport {
    pub pairs_checked: usize,
    /// `(i, j)` pairs whose S-polynomial has a nonzero normal form.
    pub failures: Vec<(usize, usize)>,
}

impl DiamondReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that every pairwise S-polynomial of `basis` reduces to zero,
/// coprime pairs included.
pub fn diamond_check(basis: &GroebnerBasis) -> DiamondReport {
    let g = &basis.elements;
    let ord = &basis.order;
    let reducers = Reducers::new(g, ord);
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            pairs_checked += 1;
            let s = s_polynomial(&g[i], &g[j], ord).expect("basis elements are nonzero");
            if !reducers.normal_form(&s, ord).is_zero() {
                failures.push((i, j));
            }
        }
    }
    DiamondReport {
        pairs_checked,
        failures,
    }
}

impl GroebnerBasis {
    /// Wraps a list the caller asserts is already a Groebner basis.
    pub fn from_elements(elements: Vec<CommPolynomial>, order: MonomialOrder) -> Self {
        GroebnerBasis {
            elements: elements.into_iter().filter(|g| !g.is_zero()).collect(),
            order,
            reduced: false,
        }
    }

    /// Whether the elements are monic, with leading monomials pairwise
    /// non-dividing and every tail term normal.
    pub fn satisfies_reduced_conditions(&self) -> bool {
        let ord = &self.order;
        let leads = self.leading_monomials();
        self.elements.iter().enumerate().all(|(i, g)| {
            let (lt, lc) = g.leading_term(ord).expect("nonzero");
            let lead_ok = leads
                .iter()
                .enumerate()
                .all(|(j, l)| j == i || l.divides(lt).is_none());
            let tail_ok = g
                .terms()
                .filter(|(m, _)| *m != lt)
                .all(|(m, _)| leads.iter().all(|l| l.divides(m).is_none()));
            lc.is_one() && lead_ok && tail_ok
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::integer;
    use crate::ordering::OrderScheme;

    fn cm(e: &[u32]) -> CommMonomial {
        CommMonomial::new(e.to_vec())
    }

    fn p(terms: &[(&[u32], i64)]) -> CommPolynomial {
        let n = terms.first().map_or(2, |t| t.0.len());
        Polynomial::from_terms(n, terms.iter().map(|(e, c)| (cm(e), integer(*c)))).unwrap()
    }

    fn deglex() -> MonomialOrder {
        MonomialOrder::natural(OrderScheme::DegLex, 2)
    }

    #[test]
    fn reduce_once_examples() {
        let ord = deglex();
        let f = p(&[(&[3, 0], 1), (&[0, 2], -1)]);
        let g = p(&[(&[3, 0], 1), (&[1, 0], -1), (&[0, 0], 1)]);
        assert_eq!(
            reduce_once(&f, &g, &ord).unwrap(),
            p(&[(&[1, 0], 1), (&[0, 2], -1), (&[0, 0], -1)])
        );
        let h2 = p(&[(&[3, 0], 1), (&[0, 3], 1)]);
        let h1 = p(&[(&[2, 0], 1), (&[0, 2], 1)]);
        assert_eq!(
            reduce_once(&h2, &h1, &ord).unwrap(),
            p(&[(&[0, 3], 1), (&[1, 2], -1)])
        );
        assert!(reduce_once(&h1, &h1, &ord).unwrap().is_zero());
        assert_eq!(reduce_once(&h1, &h2, &ord), Err(Error::NotReducible));
    }

    #[test]
    fn s_polynomial_examples() {
        let ord = deglex();
        let h1 = p(&[(&[2, 0], 1), (&[0, 2], 1)]);
        let h3 = p(&[(&[0, 3], 1), (&[1, 2], -1)]);
        assert_eq!(
            s_polynomial(&h1, &h3, &ord).unwrap(),
            p(&[(&[1, 3], 1), (&[0, 4], 1)])
        );
        let f = p(&[(&[2, 0], 1), (&[0, 0], 1)]);
        let g = p(&[(&[0, 2], 1), (&[0, 0], 1)]);
        let s = s_polynomial(&f, &g, &ord).unwrap();
        assert_eq!(s, p(&[(&[0, 2], 1), (&[2, 0], -1)]));
        assert!(normal_form(&s, &[f.clone(), g], &ord).is_zero());
        assert!(s_polynomial(&f, &f, &ord).unwrap().is_zero());
    }

    #[test]
    fn normal_form_examples() {
        let ord = deglex();
        let g = vec![
            p(&[(&[2, 0], 1), (&[0, 2], 1)]),
            p(&[(&[1, 2], 1), (&[0, 3], -1)]),
            p(&[(&[0, 4], 1)]),
        ];
        let f = p(&[(&[3, 0], 1), (&[0, 3], 1)]);
        assert!(normal_form(&f, &g, &ord).is_zero());
        let x2cubed = p(&[(&[0, 3], 1)]);
        assert_eq!(normal_form(&x2cubed, &g, &ord), x2cubed);
        assert!(normal_form(&Polynomial::zero(2), &g, &ord).is_zero());
    }

    #[test]
    fn buchberger_example_basis() {
        let ord = deglex();
        let rels = vec![
            p(&[(&[2, 0], 1), (&[0, 2], 1)]),
            p(&[(&[3, 0], 1), (&[0, 3], 1)]),
        ];
        let gb = buchberger(&rels, &ord).unwrap();
        assert_eq!(
            gb.leading_monomials(),
            vec![cm(&[2, 0]), cm(&[1, 2]), cm(&[0, 4])]
        );
        // the third element is a scalar multiple of the hand-computed -2*x2^4
        assert!(gb.elements()[2].is_scalar_multiple_of(&p(&[(&[0, 4], -2)])));
        let red = reduce_basis(&gb);
        assert_eq!(
            red.elements(),
            &[
                p(&[(&[2, 0], 1), (&[0, 2], 1)]),
                p(&[(&[1, 2], 1), (&[0, 3], -1)]),
                p(&[(&[0, 4], 1)]),
            ]
        );
        assert!(red.satisfies_reduced_conditions());
    }

    #[test]
    fn buchberger_small_cases() {
        let ord = deglex();
        let gb = buchberger(&[p(&[(&[1, 0], 1)])], &ord).unwrap();
        assert_eq!(gb.elements(), &[p(&[(&[1, 0], 1)])]);

        let gb = buchberger(
            &[p(&[(&[1, 0], 1), (&[0, 1], 1)]), p(&[(&[0, 1], 1)])],
            &ord,
        )
        .unwrap();
        let mut leads = gb.leading_monomials();
        leads.sort();
        assert_eq!(leads, vec![cm(&[0, 1]), cm(&[1, 0])]);

        assert_eq!(buchberger(&[], &ord), Err(Error::NoRelations));
        assert_eq!(
            buchberger(&[p(&[(&[1, 0], 1)]), Polynomial::zero(2)], &ord),
            Err(Error::ZeroRelation(1))
        );
    }

    #[test]
    fn constant_relation_gives_trivial_ideal() {
        let ord = deglex();
        let gb = buchberger(
            &[p(&[(&[1, 0], 1), (&[0, 0], 1)]), p(&[(&[1, 0], 1)])],
            &ord,
        )
        .unwrap();
        let red = reduce_basis(&gb);
        assert!(red.is_trivial());
        assert_eq!(red.elements(), &[p(&[(&[0, 0], 1)])]);
    }

    #[test]
    fn reduce_basis_cases() {
        let ord = deglex();
        let b = GroebnerBasis::from_elements(
            vec![p(&[(&[1, 0], 1)]), p(&[(&[1, 0], 2), (&[0, 1], 1)])],
            ord.clone(),
        );
        let red = reduce_basis(&b);
        assert_eq!(red.elements(), &[p(&[(&[0, 1], 1)]), p(&[(&[1, 0], 1)])]);
        assert_eq!(reduce_basis(&red), red);
    }

    #[test]
    fn membership() {
        let ord = deglex();
        let rels = vec![
            p(&[(&[2, 0], 1), (&[0, 2], 1)]),
            p(&[(&[3, 0], 1), (&[0, 3], 1)]),
        ];
        let gb = reduce_basis(&buchberger(&rels, &ord).unwrap());
        assert!(is_member(&rels[1], &gb));
        assert!(!is_member(&p(&[(&[0, 3], 1)]), &gb));
        assert!(is_member(&Polynomial::zero(2), &gb));
    }

    #[test]
    fn normal_monomial_listing() {
        let ord = deglex();
        let gb = GroebnerBasis::from_elements(
            vec![
                p(&[(&[2, 0], 1), (&[0, 2], 1)]),
                p(&[(&[1, 2], 1), (&[0, 3], -1)]),
                p(&[(&[0, 4], 1)]),
            ],
            ord.clone(),
        );
        let nm = normal_monomials(&gb, 3);
        let counts: Vec<usize> = nm.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 2, 1]);
        assert_eq!(nm[2], vec![cm(&[0, 2]), cm(&[1, 1])]);
        assert_eq!(nm[3], vec![cm(&[0, 3])]);

        let gb = GroebnerBasis::from_elements(vec![p(&[(&[1, 0], 1)])], ord.clone());
        let nm = normal_monomials(&gb, 2);
        assert_eq!(
            nm,
            vec![vec![cm(&[0, 0])], vec![cm(&[0, 1])], vec![cm(&[0, 2])]]
        );

        let counts: Vec<usize> = normal_monomials_for(&[], 2, &ord, 2)
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(counts, vec![1, 2, 3]);
    }
}
