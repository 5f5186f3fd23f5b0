//! Normal forms and inter-reduction shared by both polynomial kinds.

use crate::algebra::{CommMonomial, Monomial, Polynomial, Rational, Word};
use crate::ordering::MonomialOrder;

/// Monomials that can test whether another monomial is a multiple of them.
pub trait Divisor: Monomial {
    /// Cofactors `(left, right)` with `m = left * self * right`, if any. For
    /// words the leftmost occurrence is used.
    fn divide_into(&self, m: &Self) -> Option<(Self, Self)>;
}

impl Divisor for CommMonomial {
    fn divide_into(&self, m: &Self) -> Option<(Self, Self)> {
        self.divides(m).map(|q| (q, CommMonomial::one(m.nvars())))
    }
}

impl Divisor for Word {
    fn divide_into(&self, m: &Self) -> Option<(Self, Self)> {
        m.find(self)
            .map(|i| (m.slice(0, i), m.slice(i + self.len(), m.len())))
    }
}

/// Reducers in tie-break order: smallest leading monomial first, then
/// earliest position in the input.
pub(crate) struct Reducers<'a, M: Monomial> {
    items: Vec<(&'a M, &'a Rational, &'a Polynomial<M>)>,
}

impl<'a, M: Divisor> Reducers<'a, M> {
    pub(crate) fn new<I>(basis: I, ord: &MonomialOrder) -> Self
    where
        I: IntoIterator<Item = &'a Polynomial<M>>,
    {
        let mut items: Vec<_> = basis
            .into_iter()
            .filter_map(|g| g.leading_term(ord).ok().map(|(m, c)| (m, c, g)))
            .collect();
        // sort is stable, so equal leading monomials keep input order
        items.sort_by(|a, b| ord.cmp(a.0, b.0));
        Reducers { items }
    }

    fn find(&self, m: &M) -> Option<(M, M, &'a Rational, &'a Polynomial<M>)> {
        self.items
            .iter()
            .find_map(|(lt, lc, g)| lt.divide_into(m).map(|(l, r)| (l, r, *lc, *g)))
    }

    /// Full reduction: every term of the result is irreducible.
    pub(crate) fn normal_form(&self, f: &Polynomial<M>, ord: &MonomialOrder) -> Polynomial<M> {
        let mut rest = f.clone();
        let mut remainder = Polynomial::zero(f.nvars());
        while let Some((m, c)) = rest
            .leading_term(ord)
            .ok()
            .map(|(m, c)| (m.clone(), c.clone()))
        {
            match self.find(&m) {
                Some((l, r, lc, g)) => rest.add_multiple(&-(&c / lc), &l, g, &r),
                None => {
                    rest.add_term(m.clone(), -c.clone());
                    remainder.add_term(m, c);
                }
            }
        }
        remainder
    }
}

pub fn normal_form<M: Divisor>(
    f: &Polynomial<M>,
    basis: &[Polynomial<M>],
    ord: &MonomialOrder,
) -> Polynomial<M> {
    Reducers::new(basis, ord).normal_form(f, ord)
}

/// Reduces each element modulo the others until nothing changes, dropping
/// elements that vanish. Output is monic and sorted by increasing leading
/// monomial; on a Groebner basis this yields the reduced Groebner basis.
pub fn interreduce<M: Divisor>(
    elements: &[Polynomial<M>],
    ord: &MonomialOrder,
) -> Vec<Polynomial<M>> {
    let mut items: Vec<Polynomial<M>> = elements
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(ord))
        .collect();
    sort_by_leading(&mut items, ord);
    'outer: loop {
        for i in 0..items.len() {
            let reduced = {
                let others = Reducers::new(
                    items
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != i)
                        .map(|(_, p)| p),
                    ord,
                );
                others.normal_form(&items[i], ord).monic(ord)
            };
            if reduced != items[i] {
                if reduced.is_zero() {
                    items.remove(i);
                } else {
                    items[i] = reduced;
                }
                sort_by_leading(&mut items, ord);
                continue 'outer;
            }
        }
        break;
    }
    items
}

/// Sorts nonzero polynomials by increasing leading monomial.
pub fn sort_by_leading<M: Monomial>(v: &mut [Polynomial<M>], ord: &MonomialOrder) {
    v.sort_by(
        |a, b| match (a.leading_monomial(ord), b.leading_monomial(ord)) {
            (Some(x), Some(y)) => ord.cmp(x, y),
            (x, y) => x.is_some().cmp(&y.is_some()),
        },
    );
}
