//! Anick chains of a monomial algebra and the Hilbert series they determine.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::Word;
use crate::error::{Error, Result};
use crate::series::{count_normal_words, TruncatedSeries};

/// A minimal obstruction set: an antichain of words, none of degree one.
///
/// Degree-one obstructions kill their generator outright, so construction
/// removes such generators from the alphabet and relabels the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionSet {
    words: Vec<Word>,
    degrees: Vec<u32>,
    /// Original index of each surviving generator.
    generators: Vec<usize>,
}

impl ObstructionSet {
    pub fn new(words: &[Word], nvars: usize) -> Result<Self> {
        Self::with_degrees(words, &vec![1; nvars])
    }

    /// Fails with [`Error::TrivialQuotient`] if the empty word is an
    /// obstruction.
    pub fn with_degrees(words: &[Word], degrees: &[u32]) -> Result<Self> {
        let nvars = degrees.len();
        if let Some(w) = words
            .iter()
            .find(|w| w.letters().iter().any(|&l| l >= nvars))
        {
            return Err(Error::RingMismatch(format!(
                "obstruction {w:?} uses an unknown generator"
            )));
        }
        if words.iter().any(Word::is_empty) {
            return Err(Error::TrivialQuotient);
        }
        let killed: HashSet<usize> = words
            .iter()
            .filter(|w| w.len() == 1)
            .map(|w| w.letters()[0])
            .collect();
        let generators: Vec<usize> = (0..nvars).filter(|g| !killed.contains(g)).collect();
        let mut relabel = vec![None; nvars];
        for (new, &old) in generators.iter().enumerate() {
            relabel[old] = Some(new);
        }
        let survivors: BTreeSet<Word> = words
            .iter()
            .filter_map(|w| {
                w.letters()
                    .iter()
                    .map(|&l| relabel[l])
                    .collect::<Option<Vec<usize>>>()
                    .map(Word::new)
            })
            .collect();
        let survivors: Vec<Word> = survivors.into_iter().collect();
        let mut minimal: Vec<Word> = survivors
            .iter()
            .filter(|w| !survivors.iter().any(|v| v != *w && w.contains(v)))
            .cloned()
            .collect();
        minimal.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(ObstructionSet {
            words: minimal,
            degrees: generators.iter().map(|&g| degrees[g]).collect(),
            generators,
        })
    }

    /// Obstructions over the relabelled alphabet, shortest first.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn nvars(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Original index of each surviving generator.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn weight(&self, w: &Word) -> usize {
        w.letters().iter().map(|&l| self.degrees[l] as usize).sum()
    }

    /// Number of occurrences of obstructions as factors of `w`.
    pub fn deg_f(&self, w: &Word) -> usize {
        deg_f(w, &self.words)
    }

    /// Obstruction occurring as a suffix of `w`, if any.
    fn suffix_obstruction(&self, w: &Word) -> Option<&Word> {
        self.words
            .iter()
            .find(|o| w.letters().ends_with(o.letters()))
    }
}

/// Total number of (possibly overlapping) occurrences of the words of `f`
/// as factors of `w`.
pub fn deg_f(w: &Word, f: &[Word]) -> usize {
    f.iter()
        .map(|o| {
            if o.len() > w.len() {
                0
            } else {
                w.letters()
                    .windows(o.len())
                    .filter(|x| *x == o.letters())
                    .count()
            }
        })
        .sum()
}

/// An `n`-chain `g = g' t`, with `t` its tail.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain {
    pub n: i64,
    pub word: Word,
    pub tail_len: usize,
}

impl Chain {
    pub fn tail(&self) -> Word {
        self.word
            .slice(self.word.len() - self.tail_len, self.word.len())
    }
}

/// Chains grouped by `n`, from `-1` upward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainTable {
    levels: Vec<Vec<Chain>>,
    max_degree: usize,
}

impl ChainTable {
    /// Chains with the given `n`, sorted by weighted degree then word.
    pub fn chains(&self, n: i64) -> &[Chain] {
        usize::try_from(n + 1)
            .ok()
            .and_then(|i| self.levels.get(i))
            .map_or(&[], Vec::as_slice)
    }

    pub fn max_n(&self) -> i64 {
        self.levels.len() as i64 - 2
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }
}

/// Enumerates all `n`-chains for `-1 <= n <= n_max` with weighted degree at
/// most `max_degree`.
///
/// Each `n`-chain (`n >= 1`) extends an `(n-1)`-chain with tail `r` by a
/// nonempty normal word `t` such that `r t` has exactly one obstruction
/// occurrence, and it is a suffix starting inside `r`.
pub fn enumerate_chains(f: &ObstructionSet, n_max: i64, max_degree: usize) -> Result<ChainTable> {
    let mut levels: Vec<Vec<Chain>> = vec![vec![Chain {
        n: -1,
        word: Word::empty(),
        tail_len: 0,
    }]];
    if n_max >= 0 {
        let mut gens: Vec<Chain> = (0..f.nvars())
            .filter(|&g| f.degrees[g] as usize <= max_degree)
            .map(|g| Chain {
                n: 0,
                word: Word::new(vec![g]),
                tail_len: 1,
            })
            .collect();
        sort_chains(f, &mut gens);
        levels.push(gens);
    }
    for _ in 1..=n_max {
        let prev = levels.last().expect("level 0 exists");
        if prev.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for c in prev {
            let budget = max_degree - f.weight(&c.word);
            extend(f, c, &c.tail(), &mut Vec::new(), budget, &mut next);
        }
        verify_level(f, &next)?;
        sort_chains(f, &mut next);
        levels.push(next);
    }
    while levels.len() > 1 && levels.last().is_some_and(Vec::is_empty) {
        levels.pop();
    }
    Ok(ChainTable { levels, max_degree })
}

fn extend(
    f: &ObstructionSet,
    c: &Chain,
    r: &Word,
    t: &mut Vec<usize>,
    budget: usize,
    out: &mut Vec<Chain>,
) {
    for l in 0..f.nvars() {
        let w = f.degrees[l] as usize;
        if w > budget {
            continue;
        }
        t.push(l);
        let rt = r.concat(&Word::new(t.clone()));
        match f.suffix_obstruction(&rt) {
            Some(o) => {
                // an occurrence lying wholly inside t would make t reducible
                if rt.len() - o.len() < r.len() {
                    out.push(Chain {
                        n: c.n + 1,
                        word: c.word.concat(&Word::new(t.clone())),
                        tail_len: t.len(),
                    });
                }
            }
            None => extend(f, c, r, t, budget - w, out),
        }
        t.pop();
    }
}

/// Checks the defining properties of freshly built chains.
fn verify_level(f: &ObstructionSet, level: &[Chain]) -> Result<()> {
    let mut seen = HashSet::new();
    for c in level {
        if !seen.insert(&c.word) {
            return Err(Error::Internal(format!("chain {:?} built twice", c.word)));
        }
        let t = c.tail();
        if t.is_empty() || f.deg_f(&t) != 0 {
            return Err(Error::Internal(format!(
                "chain {:?} has a reducible tail",
                c.word
            )));
        }
    }
    Ok(())
}

fn sort_chains(f: &ObstructionSet, v: &mut [Chain]) {
    v.sort_by(|a, b| {
        f.weight(&a.word)
            .cmp(&f.weight(&b.word))
            .then_with(|| a.word.cmp(&b.word))
    });
}

/// Number of `n`-chains of each weighted degree up to `max_degree`.
pub fn chain_series(f: &ObstructionSet, n: i64, max_degree: usize) -> Result<TruncatedSeries> {
    let table = enumerate_chains(f, n, max_degree)?;
    Ok(level_series(f, table.chains(n), max_degree))
}

fn level_series(f: &ObstructionSet, chains: &[Chain], max_degree: usize) -> TruncatedSeries {
    let mut coeffs = vec![BigInt::zero(); max_degree + 1];
    for c in chains {
        coeffs[f.weight(&c.word)] += 1;
    }
    TruncatedSeries::new(coeffs)
}

/// `sum_{n >= -1} (-1)^(n+1) C_n(t)`, truncated at `max_degree`. An `n`-chain
/// has at least `n + 1` letters, so `n <= max_degree - 1` suffices.
pub fn alternating_chain_sum(f: &ObstructionSet, max_degree: usize) -> Result<TruncatedSeries> {
    let table = enumerate_chains(f, max_degree as i64 - 1, max_degree)?;
    let mut sum = TruncatedSeries::zero(max_degree);
    for n in -1..=table.max_n() {
        let c = level_series(f, table.chains(n), max_degree);
        sum = if (n + 1) % 2 == 0 {
            sum.add(&c)?
        } else {
            sum.sub(&c)?
        };
    }
    Ok(sum)
}

/// Hilbert series of `K<X>/(F)` as the inverse of the alternating chain sum.
pub fn hilbert_from_chains(f: &ObstructionSet, max_degree: usize) -> Result<TruncatedSeries> {
    alternating_chain_sum(f, max_degree)?.inverse()
}

/// Coefficients of `H_A(t) * sum (-1)^(n+1) C_n(t) - 1`, with `H_A` counted
/// from normal words. All zero when the chains are correct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerReport {
    pub residuals: TruncatedSeries,
}

impl EulerReport {
    pub fn passed(&self) -> bool {
        self.residuals.is_zero()
    }
}

pub fn euler_identity_check(f: &ObstructionSet, max_degree: usize) -> Result<EulerReport> {
    let h = count_normal_words(f.words(), f.degrees(), max_degree);
    let product = h.mul(&alternating_chain_sum(f, max_degree)?)?;
    let residuals = product.sub(&TruncatedSeries::one(max_degree))?;
    Ok(EulerReport { residuals })
}

/// Number of chains for each `n` in the table.
pub fn chain_counts(table: &ChainTable) -> Vec<(i64, usize)> {
    (-1..=table.max_n())
        .map(|n| (n, table.chains(n).len()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[usize]) -> Word {
        Word::new(v.to_vec())
    }

    fn s(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64s(c)
    }

    #[test]
    fn occurrence_counts() {
        let f = [w(&[0, 0])];
        assert_eq!(deg_f(&w(&[0, 0, 0]), &f), 2);
        assert_eq!(deg_f(&w(&[0, 1, 0]), &f), 0);
        assert_eq!(deg_f(&Word::empty(), &f), 0);
    }

    #[test]
    fn cube_chains() {
        let f = ObstructionSet::new(&[w(&[0, 0, 0])], 1).unwrap();
        let table = enumerate_chains(&f, 3, 9).unwrap();
        let degrees: Vec<usize> = (1..=3)
            .map(|n| table.chains(n).iter().map(|c| c.word.len()).min().unwrap())
            .collect();
        assert_eq!(degrees, vec![3, 4, 6]);
        assert_eq!(table.chains(1)[0].word, w(&[0, 0, 0]));
        assert_eq!(table.chains(2)[0].word, w(&[0, 0, 0, 0]));
        assert_eq!(table.chains(2)[0].tail(), w(&[0]));
        assert_eq!(table.chains(3)[0].tail(), w(&[0, 0]));
        assert_eq!(
            hilbert_from_chains(&f, 6).unwrap(),
            s(&[1, 1, 1, 0, 0, 0, 0])
        );
    }

    #[test]
    fn square_and_xyy() {
        let f = ObstructionSet::new(&[w(&[0, 0]), w(&[0, 1, 1])], 2).unwrap();
        assert_eq!(hilbert_from_chains(&f, 5).unwrap(), s(&[1, 2, 3, 4, 5, 6]));
        assert!(euler_identity_check(&f, 8).unwrap().passed());
        let t = enumerate_chains(&f, 2, 6).unwrap();
        let words: Vec<&Word> = t.chains(2).iter().map(|c| &c.word).collect();
        assert!(words.contains(&&w(&[0, 0, 0])));
        assert!(words.contains(&&w(&[0, 0, 1, 1])));
    }

    #[test]
    fn free_algebra_has_no_higher_chains() {
        let f = ObstructionSet::new(&[], 2).unwrap();
        let t = enumerate_chains(&f, 4, 5).unwrap();
        assert_eq!(chain_counts(&t), vec![(-1, 1), (0, 2)]);
        assert_eq!(hilbert_from_chains(&f, 4).unwrap(), s(&[1, 2, 4, 8, 16]));
    }

    #[test]
    fn degree_one_obstructions_delete_generators() {
        let f = ObstructionSet::new(&[w(&[1]), w(&[0, 1]), w(&[0, 0])], 3).unwrap();
        assert_eq!(f.generators(), &[0, 2]);
        assert_eq!(f.words(), &[w(&[0, 0])]);
        assert_eq!(
            ObstructionSet::new(&[Word::empty()], 1),
            Err(Error::TrivialQuotient)
        );
    }

    #[test]
    fn antichain_minimisation() {
        let f = ObstructionSet::new(&[w(&[0, 0, 1]), w(&[0, 0]), w(&[0, 0])], 2).unwrap();
        assert_eq!(f.words(), &[w(&[0, 0])]);
    }

    #[test]
    fn weighted_chains() {
        let f = ObstructionSet::with_degrees(&[w(&[0, 0])], &[2]).unwrap();
        assert_eq!(
            hilbert_from_chains(&f, 6).unwrap(),
            s(&[1, 0, 1, 0, 0, 0, 0])
        );
        assert!(euler_identity_check(&f, 6).unwrap().passed());
    }
}
