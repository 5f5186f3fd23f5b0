//! Groebner bases of two-sided ideals in the free associative algebra.
//!
//! Completion need not terminate here (`x^2 - x*y` already has an infinite
//! basis), so [`complete_to_degree`] processes every overlap whose overlap
//! word has degree at most a bound and reports whether any work was left
//! above it.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use crate::algebra::{find_factor, NcPolynomial, Polynomial, Word};
use crate::error::{Error, Result};
use crate::ordering::MonomialOrder;
use crate::reduction::{self, interreduce, sort_by_leading, Reducers};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OverlapKind {
    /// A proper suffix of the left word equals a proper prefix of the right.
    SuffixPrefix,
    /// Like `SuffixPrefix` with both participants the same element.
    SelfOverlap,
    /// The right word occurs as a factor of the left word.
    Containment,
}

/// Witness of an ambiguity between two leading words.
///
/// For the overlap kinds, `lt(left) * right_cofactor == left_cofactor * lt(right)`
/// with `left_cofactor` shorter than `lt(left)`. For containment,
/// `lt(left) == left_cofactor * lt(right) * right_cofactor`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub kind: OverlapKind,
    pub left: usize,
    pub right: usize,
    pub left_cofactor: Word,
    pub right_cofactor: Word,
    /// The ambiguous word itself.
    pub word: Word,
}

impl Overlap {
    pub fn degree(&self) -> usize {
        self.word.len()
    }
}

/// Every position at which `factor` occurs in `word`.
pub fn find_factor_positions(word: &Word, factor: &Word) -> Vec<usize> {
    find_factor(word, factor)
}

/// Two-sided reduction at the leftmost occurrence of `lt(g)` in `lt(f)`.
pub fn reduce_once_nc(
    f: &NcPolynomial,
    g: &NcPolynomial,
    ord: &MonomialOrder,
) -> Result<NcPolynomial> {
    let (lf, cf) = f.leading_term(ord)?;
    let (lg, cg) = g.leading_term(ord)?;
    let i = lf.find(lg).ok_or(Error::NotReducible)?;
    let left = lf.slice(0, i);
    let right = lf.slice(i + lg.len(), lf.len());
    let mut out = f.clone();
    out.add_multiple(&-(cf / cg), &left, g, &right);
    Ok(out)
}

/// Proper suffix-prefix overlaps of `u` (left) with `v` (right) as
/// `(left_cofactor, right_cofactor, word)`, shortest overlap word first.
fn word_overlaps(u: &Word, v: &Word) -> Vec<(Word, Word, Word)> {
    let (a, b) = (u.letters(), v.letters());
    let max_k = a.len().min(b.len()).saturating_sub(1);
    (1..=max_k)
        .rev()
        .filter(|&k| a[a.len() - k..] == b[..k])
        .map(|k| {
            let m1 = u.slice(0, a.len() - k);
            let m2 = v.slice(k, b.len());
            let word = u.concat(&m2);
            (m1, m2, word)
        })
        .collect()
}

fn overlaps_between(left: usize, u: &Word, right: usize, v: &Word, out: &mut Vec<Overlap>) {
    let kind = if left == right {
        OverlapKind::SelfOverlap
    } else {
        OverlapKind::SuffixPrefix
    };
    for (m1, m2, word) in word_overlaps(u, v) {
        out.push(Overlap {
            kind,
            left,
            right,
            left_cofactor: m1,
            right_cofactor: m2,
            word,
        });
    }
}

/// All suffix-prefix overlaps between the leading words of `f` (index 0) and
/// `g` (index 1), in both orders. When `f == g` only the self-overlaps are
/// returned. Containments are not overlaps; they are resolved by reduction.
pub fn enumerate_overlaps(
    f: &NcPolynomial,
    g: &NcPolynomial,
    ord: &MonomialOrder,
) -> Result<Vec<Overlap>> {
    let u = f.leading_monomial(ord).ok_or(Error::NoLeadingTerm)?;
    let v = g.leading_monomial(ord).ok_or(Error::NoLeadingTerm)?;
    let mut out = Vec::new();
    if f == g {
        overlaps_between(0, u, 0, u, &mut out);
    } else {
        overlaps_between(0, u, 1, v, &mut out);
        overlaps_between(1, v, 0, u, &mut out);
    }
    Ok(out)
}

/// Containment of `lt(inner)` in `lt(outer)` at the leftmost position.
pub fn containment(
    outer: (usize, &NcPolynomial),
    inner: (usize, &NcPolynomial),
    ord: &MonomialOrder,
) -> Option<Overlap> {
    let u = outer.1.leading_monomial(ord)?;
    let v = inner.1.leading_monomial(ord)?;
    let i = u.find(v)?;
    Some(Overlap {
        kind: OverlapKind::Containment,
        left: outer.0,
        right: inner.0,
        left_cofactor: u.slice(0, i),
        right_cofactor: u.slice(i + v.len(), u.len()),
        word: u.clone(),
    })
}

/// `(1/lc(left)) * left * m2 - (1/lc(right)) * m1 * right` for an overlap,
/// or the normalized difference `left/lc - m1 * right * m2 / lc` for a
/// containment. The ambiguous word cancels.
pub fn s_polynomial_nc(
    left: &NcPolynomial,
    right: &NcPolynomial,
    overlap: &Overlap,
    ord: &MonomialOrder,
) -> Result<NcPolynomial> {
    let (u, cu) = left.leading_term(ord)?;
    let (v, cv) = right.leading_term(ord)?;
    let (m1, m2) = (&overlap.left_cofactor, &overlap.right_cofactor);
    let empty = Word::empty();
    let mut s = Polynomial::zero(left.nvars());
    match overlap.kind {
        OverlapKind::Containment => {
            if *u != m1.concat(v).concat(m2) || overlap.word != *u {
                return Err(Error::InvalidOverlap);
            }
            s.add_multiple(&cu.recip(), &empty, left, &empty);
            s.add_multiple(&-cv.recip(), m1, right, m2);
        }
        OverlapKind::SuffixPrefix | OverlapKind::SelfOverlap => {
            let word = u.concat(m2);
            if word != m1.concat(v) || m1.len() >= u.len() || m1.is_empty() || overlap.word != word
            {
                return Err(Error::InvalidOverlap);
            }
            s.add_multiple(&cu.recip(), &empty, left, m2);
            s.add_multiple(&-cv.recip(), m1, right, &empty);
        }
    }
    Ok(s)
}

/// Full two-sided normal form of `f` modulo `basis`.
pub fn normal_form_nc(
    f: &NcPolynomial,
    basis: &[NcPolynomial],
    ord: &MonomialOrder,
) -> NcPolynomial {
    reduction::normal_form(f, basis, ord)
}

/// Output of a degree-bounded completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionResult {
    /// Monic, inter-reduced, sorted by increasing leading word.
    pub basis: Vec<NcPolynomial>,
    pub order: MonomialOrder,
    /// Every overlap with overlap word of degree at most this was processed.
    pub complete_to_degree: usize,
    /// True when no overlap of the final basis lies above the bound, i.e.
    /// `basis` is a complete Groebner basis.
    pub saturated: bool,
}

impl CompletionResult {
    pub fn leading_words(&self) -> Vec<Word> {
        self.basis
            .iter()
            .filter_map(|g| g.leading_monomial(&self.order).cloned())
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.basis.iter().any(|g| g.is_constant())
    }

    pub fn is_member(&self, f: &NcPolynomial) -> bool {
        normal_form_nc(f, &self.basis, &self.order).is_zero()
    }
}

struct Completion<'a> {
    ord: &'a MonomialOrder,
    max_degree: usize,
    slots: Vec<Option<NcPolynomial>>,
    leads: Vec<Word>,
    queue: BinaryHeap<Reverse<(usize, usize)>>,
    overlaps: Vec<Overlap>,
    pending: VecDeque<NcPolynomial>,
}

impl Completion<'_> {
    fn active(&self) -> Vec<NcPolynomial> {
        self.slots.iter().flatten().cloned().collect()
    }

    fn push_overlap(&mut self, o: Overlap) {
        let seq = self.overlaps.len();
        if o.degree() <= self.max_degree {
            self.queue.push(Reverse((o.degree(), seq)));
        }
        self.overlaps.push(o);
    }

    fn add(&mut self, h: NcPolynomial) {
        let ord = self.ord;
        let h = h.monic(ord);
        let lt = h.leading_monomial(ord).expect("nonzero").clone();
        // withdraw elements whose leading word contains the new one
        for i in 0..self.slots.len() {
            if self.slots[i].is_some() && self.leads[i].contains(&lt) {
                let old = self.slots[i].take().expect("checked");
                self.pending.push_back(old);
            }
        }
        let id = self.slots.len();
        self.slots.push(Some(h));
        self.leads.push(lt.clone());
        let mut found = Vec::new();
        overlaps_between(id, &lt, id, &lt, &mut found);
        for i in 0..id {
            if self.slots[i].is_some() {
                overlaps_between(i, &self.leads[i], id, &lt, &mut found);
                overlaps_between(id, &lt, i, &self.leads[i], &mut found);
            }
        }
        for o in found {
            self.push_overlap(o);
        }
    }

    fn drain_pending(&mut self) {
        while let Some(p) = self.pending.pop_front() {
            let h = normal_form_nc(&p, &self.active(), self.ord);
            if !h.is_zero() {
                self.add(h);
            }
        }
    }

    fn run(&mut self) -> Result<()> {
        self.drain_pending();
        while let Some(Reverse((_, seq))) = self.queue.pop() {
            let o = &self.overlaps[seq];
            let (Some(f), Some(g)) = (&self.slots[o.left], &self.slots[o.right]) else {
                continue;
            };
            let s = s_polynomial_nc(f, g, o, self.ord)?;
            let h = normal_form_nc(&s, &self.active(), self.ord);
            if !h.is_zero() {
                self.add(h);
                self.drain_pending();
            }
        }
        Ok(())
    }
}

/// Degree-bounded Buchberger completion in the free algebra.
///
/// Overlaps are processed by increasing overlap-word degree, then creation
/// order. For homogeneous relations the leading words of degree at most
/// `max_degree` agree with those of the true Groebner basis.
pub fn complete_to_degree(
    relations: &[NcPolynomial],
    ord: &MonomialOrder,
    max_degree: usize,
) -> Result<CompletionResult> {
    let first = relations.first().ok_or(Error::NoRelations)?;
    let nvars = first.nvars();
    if nvars != ord.nvars() {
        return Err(Error::RingMismatch(
            "order and relations differ in arity".into(),
        ));
    }
    let mut required = 0;
    for (i, r) in relations.iter().enumerate() {
        if r.is_zero() {
            return Err(Error::ZeroRelation(i));
        }
        if r.nvars() != nvars {
            return Err(Error::RingMismatch(format!(
                "relation {i} has a different arity"
            )));
        }
        required = required.max(r.degree().unwrap_or(0));
    }
    if max_degree < required {
        return Err(Error::MaxDegreeTooSmall {
            max_degree,
            required,
        });
    }

    let mut engine = Completion {
        ord,
        max_degree,
        slots: Vec::new(),
        leads: Vec::new(),
        queue: BinaryHeap::new(),
        overlaps: Vec::new(),
        pending: relations.iter().cloned().collect(),
    };
    engine.run()?;

    let basis = interreduce(&engine.active(), ord);
    let leads: Vec<Word> = basis
        .iter()
        .map(|g| g.leading_monomial(ord).expect("nonzero").clone())
        .collect();
    let saturated = leads.iter().all(|u| {
        leads.iter().all(|v| {
            word_overlaps(u, v)
                .iter()
                .all(|(_, _, w)| w.len() <= max_degree)
        })
    });
    Ok(CompletionResult {
        basis,
        order: ord.clone(),
        complete_to_degree: max_degree,
        saturated,
    })
}

/// Words of each degree `0..=max_degree` over `nvars` generators that contain
/// no element of `obstructions` as a factor.
pub fn normal_words(obstructions: &[Word], nvars: usize, max_degree: usize) -> Vec<Vec<Word>> {
    // prefixes of normal words are normal, so extend degree by degree and
    // test only the suffixes ending at the new letter
    let mut out = vec![vec![Word::empty()]];
    if obstructions.iter().any(Word::is_empty) {
        out[0].clear();
    }
    for d in 1..=max_degree {
        let mut next = Vec::new();
        for w in &out[d - 1] {
            for g in 0..nvars {
                let mut letters = w.letters().to_vec();
                letters.push(g);
                let ends_in_obstruction = obstructions.iter().any(|o| {
                    !o.is_empty() && o.len() <= letters.len() && letters.ends_with(o.letters())
                });
                if !ends_in_obstruction {
                    next.push(Word::new(letters));
                }
            }
        }
        out.push(next);
    }
    out
}

/// Result of checking that every ambiguity of a basis resolves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcDiamondReport {
    pub overlaps_checked: usize,
    pub failures: Vec<Overlap>,
    /// Overlaps above the bound that were not checked.
    pub skipped_above_bound: usize,
}

impl NcDiamondReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that every containment reduction and every overlap S-polynomial
/// with overlap word of degree at most `max_degree` has normal form zero.
pub fn diamond_check_nc(
    basis: &[NcPolynomial],
    ord: &MonomialOrder,
    max_degree: usize,
) -> NcDiamondReport {
    let reducers = Reducers::new(basis, ord);
    let mut all = Vec::new();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j {
                if let Some(c) = containment((i, &basis[i]), (j, &basis[j]), ord) {
                    all.push(c);
                }
            }
            let (Some(u), Some(v)) = (
                basis[i].leading_monomial(ord),
                basis[j].leading_monomial(ord),
            ) else {
                continue;
            };
            overlaps_between(i, u, j, v, &mut all);
        }
    }
    let mut report = NcDiamondReport {
        overlaps_checked: 0,
        failures: Vec::new(),
        skipped_above_bound: 0,
    };
    for o in all {
        if o.degree() > max_degree {
            report.skipped_above_bound += 1;
            continue;
        }
        report.overlaps_checked += 1;
        let s = s_polynomial_nc(&basis[o.left], &basis[o.right], &o, ord).expect("valid witness");
        if !reducers.normal_form(&s, ord).is_zero() {
            report.failures.push(o);
        }
    }
    report
}

/// True when no leading word of `basis` contains another as a factor.
pub fn is_antichain(words: &[Word]) -> bool {
    words.iter().enumerate().all(|(i, u)| {
        words
            .iter()
            .enumerate()
            .all(|(j, v)| i == j || !u.contains(v))
    })
}

/// Sorts a basis by increasing leading word.
pub fn sort_basis(basis: &mut [NcPolynomial], ord: &MonomialOrder) {
    sort_by_leading(basis, ord);
}
