//! Brute-force oracles that share no code with the library's algorithms.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::Rng;

use gbseries::Word;

/// Every word over `nvars` letters of length exactly `len`.
pub fn all_words(nvars: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..nvars).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

/// Number of positions where `f` occurs in `w`.
pub fn occurrences(w: &[usize], f: &[usize]) -> usize {
    if f.len() > w.len() {
        return 0;
    }
    (0..=w.len() - f.len())
        .filter(|&i| &w[i..i + f.len()] == f)
        .count()
}

pub fn total_occurrences(w: &[usize], obstructions: &[Vec<usize>]) -> usize {
    obstructions.iter().map(|f| occurrences(w, f)).sum()
}

/// Counts words of each length `0..=max_degree` with no obstruction factor.
pub fn brute_force_counts(
    obstructions: &[Vec<usize>],
    nvars: usize,
    max_degree: usize,
) -> Vec<BigInt> {
    (0..=max_degree)
        .map(|d| {
            let n = all_words(nvars, d)
                .iter()
                .filter(|w| total_occurrences(w, obstructions) == 0)
                .count();
            BigInt::from(n)
        })
        .collect()
}

/// Chains straight from the inductive definition: `g t` is an `n`-chain
/// when `g` is an `(n-1)`-chain with tail `r`, `t` is nonempty and normal,
/// and `r t` has exactly one obstruction occurrence, which is a suffix.
/// Returns, per `n`, the set of `(word, tail)` pairs.
pub fn definitional_chains(
    obstructions: &[Vec<usize>],
    nvars: usize,
    n_max: usize,
    max_degree: usize,
) -> Vec<BTreeSet<(Vec<usize>, Vec<usize>)>> {
    let mut levels: Vec<BTreeSet<(Vec<usize>, Vec<usize>)>> = Vec::new();
    levels.push((0..nvars).map(|g| (vec![g], vec![g])).collect());
    let words: Vec<Vec<usize>> = (1..=max_degree).flat_map(|d| all_words(nvars, d)).collect();
    for n in 1..=n_max {
        let prev: HashMap<&Vec<usize>, Vec<&Vec<usize>>> =
            levels[n - 1].iter().fold(HashMap::new(), |mut m, (w, t)| {
                m.entry(w).or_default().push(t);
                m
            });
        let mut level = BTreeSet::new();
        for w in &words {
            for split in 1..w.len() {
                let (g, t) = w.split_at(split);
                let Some(tails) = prev.get(&g.to_vec()) else {
                    continue;
                };
                if total_occurrences(t, obstructions) != 0 {
                    continue;
                }
                for r in tails {
                    let rt: Vec<usize> = r.iter().chain(t).copied().collect();
                    if total_occurrences(&rt, obstructions) == 1
                        && obstructions.iter().any(|f| rt.ends_with(f))
                    {
                        level.insert((w.clone(), t.to_vec()));
                    }
                }
            }
        }
        levels.push(level);
    }
    levels
}

/// Random antichain of words over `nvars` letters with lengths in
/// `min_len..=max_len`.
pub fn random_antichain(
    rng: &mut StdRng,
    nvars: usize,
    min_len: usize,
    max_len: usize,
    count: usize,
) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for _ in 0..count * 4 {
        if out.len() == count {
            break;
        }
        let len = rng.gen_range(min_len..=max_len);
        let w: Vec<usize> = (0..len).map(|_| rng.gen_range(0..nvars)).collect();
        if out
            .iter()
            .all(|o| occurrences(&w, o) == 0 && occurrences(o, &w) == 0)
        {
            out.push(w);
        }
    }
    out
}

pub fn to_words(v: &[Vec<usize>]) -> Vec<Word> {
    v.iter().map(|w| Word::new(w.clone())).collect()
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}
