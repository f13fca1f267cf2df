//! Exact counts: Stirling numbers of the second kind, the irreducible
//! partition recurrence T(ℓ, n), the number φ(ℓ, n) = n!·T(ℓ, n) of strongly
//! connected word-graphs among the ℓ-words over an n-alphabet, and the
//! brute-force enumerations that check them.
//!
//! T(ℓ, n) satisfies
//!
//! ```text
//! T(ℓ, n) = S(ℓ−1, n) + Σ_{j=0}^{ℓ−2} Σ_{m=0}^{n−2} S(j, m) · T(ℓ−j−1, n−m) · (n−m−1)
//! ```
//!
//! with T(ℓ, n) = 0 for ℓ ≤ 0, then T(ℓ, 1) = 1, then T(ℓ, n) = 0 for ℓ ≤ n,
//! applied in that order.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::connectivity::{scc_decomposition, strongly_connected};
use crate::error::{Error, Result};
use crate::factorization::finest_disjoint_factorization;
use crate::graph::build_graph;
use crate::word::{canonical_prefixes, CanonicalWord, CanonicalWords};

/// Default limit on the number of canonical words a brute-force count may
/// visit, measured as Bell(ℓ).
pub const DEFAULT_ENUMERATION_CAP: u128 = 10_000_000;

/// Prefix depth used to split the canonical-word space across threads.
const SPLIT_DEPTH: usize = 5;

#[derive(Default)]
struct Tables {
    // stirling[l][n] for n <= l; rows grow on demand
    stirling: Vec<Vec<BigUint>>,
    irreducible: HashMap<(usize, usize), BigUint>,
}

impl Tables {
    fn stirling(&mut self, l: usize, n: usize) -> BigUint {
        if n > l {
            return BigUint::zero();
        }
        while self.stirling.len() <= l {
            let i = self.stirling.len();
            let row = if i == 0 {
                vec![BigUint::one()]
            } else {
                let prev = &self.stirling[i - 1];
                (0..=i)
                    .map(|k| {
                        let keep = prev.get(k).map_or_else(BigUint::zero, |s| s * BigUint::from(k));
                        let grow = if k == 0 { BigUint::zero() } else { prev[k - 1].clone() };
                        keep + grow
                    })
                    .collect()
            };
            self.stirling.push(row);
        }
        self.stirling[l][n].clone()
    }

    /// Fills every T(ℓ', n') with ℓ' ≤ l and 1 ≤ n' ≤ n that is missing.
    fn fill_irreducible(&mut self, l: usize, n: usize) {
        for li in 0..=l {
            for ni in 1..=n {
                if self.irreducible.contains_key(&(li, ni)) {
                    continue;
                }
                let value = self.eval_irreducible(li, ni);
                self.irreducible.insert((li, ni), value);
            }
        }
    }

    /// One application of the recurrence; every smaller cell is present.
    fn eval_irreducible(&mut self, l: usize, n: usize) -> BigUint {
        if l == 0 {
            return BigUint::zero();
        }
        if n == 1 {
            return BigUint::one();
        }
        if l <= n {
            return BigUint::zero();
        }
        self.stirling(l, n);
        let mut total = self.stirling(l - 1, n);
        for j in 0..=l - 2 {
            for m in 0..=n - 2 {
                // S(j, m) = 0 unless m <= j, and S(j, 0) = 0 for j > 0
                if m > j || (m == 0 && j > 0) {
                    continue;
                }
                let inner = &self.irreducible[&(l - j - 1, n - m)];
                if inner.is_zero() {
                    continue;
                }
                let term = &self.stirling[j][m] * inner * BigUint::from(n - m - 1);
                total += term;
            }
        }
        total
    }
}

/// Memoized S, T and φ values. Concurrent readers share the table; a missing
/// cell is filled under the write lock, so each cell is computed once.
#[derive(Default)]
pub struct CountTable {
    tables: RwLock<Tables>,
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn stirling(&self, l: usize, n: usize) -> BigUint {
        if n > l {
            return BigUint::zero();
        }
        if let Some(v) = self.tables.read().unwrap().stirling.get(l).map(|row| row[n].clone()) {
            return v;
        }
        self.tables.write().unwrap().stirling(l, n)
    }

    /// T(ℓ, n): irreducible n-block partitions of `{1, …, ℓ}`, equivalently
    /// canonical ℓ-words over n letters whose word-graph is strongly
    /// connected.
    pub fn irreducible(&self, l: usize, n: usize) -> Result<BigUint> {
        if n == 0 {
            return Err(Error::InvalidArgument("alphabet size must be at least 1".into()));
        }
        if let Some(v) = self.tables.read().unwrap().irreducible.get(&(l, n)) {
            return Ok(v.clone());
        }
        let mut tables = self.tables.write().unwrap();
        tables.fill_irreducible(l, n);
        Ok(tables.irreducible[&(l, n)].clone())
    }

    /// φ(ℓ, n) = n!·T(ℓ, n).
    pub fn strong_word_graphs(&self, l: usize, n: usize) -> Result<BigUint> {
        Ok(factorial(n) * self.irreducible(l, n)?)
    }

    /// Overwrites a memoized T cell with its value plus one, after filling the
    /// table up to that cell. Cells already present keep their values; cells
    /// filled later are computed from the corrupted one. Exists so the verification harness can be shown
    /// to catch a wrong table.
    #[doc(hidden)]
    pub fn corrupt_irreducible(&self, l: usize, n: usize) -> Result<()> {
        self.irreducible(l, n)?;
        let mut tables = self.tables.write().unwrap();
        *tables.irreducible.get_mut(&(l, n)).unwrap() += 1u32;
        Ok(())
    }

    /// Rows for every 1 ≤ n ≤ min(ℓ, max_n), 1 ≤ ℓ ≤ max_l, ordered by ℓ then n.
    pub fn rows(&self, max_l: usize, max_n: usize) -> Vec<CountRow> {
        let mut rows = Vec::new();
        for l in 1..=max_l {
            for n in 1..=l.min(max_n) {
                let irreducible = self.irreducible(l, n).expect("n >= 1");
                rows.push(CountRow {
                    length: l,
                    alphabet: n,
                    stirling: self.stirling(l, n),
                    phi: factorial(n) * &irreducible,
                    irreducible,
                });
            }
        }
        rows
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub length: usize,
    pub alphabet: usize,
    pub stirling: BigUint,
    pub irreducible: BigUint,
    pub phi: BigUint,
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// S(ℓ, n) by S(ℓ, n) = n·S(ℓ−1, n) + S(ℓ−1, n−1).
pub fn stirling2(l: usize, n: usize) -> BigUint {
    Tables::default().stirling(l, n)
}

/// Number of partitions of an ℓ-set, Σ_n S(ℓ, n).
pub fn bell(l: usize) -> BigUint {
    let mut t = Tables::default();
    (0..=l).map(|n| t.stirling(l, n)).sum()
}

/// T(ℓ, n) on a fresh table.
pub fn irreducible_partitions(l: usize, n: usize) -> Result<BigUint> {
    CountTable::new().irreducible(l, n)
}

/// φ(ℓ, n) on a fresh table.
pub fn strong_word_graphs(l: usize, n: usize) -> Result<BigUint> {
    CountTable::new().strong_word_graphs(l, n)
}

/// n!·S(ℓ, n), the number of ℓ-words using every letter of an n-alphabet.
pub fn family_cardinality(l: usize, n: usize) -> BigUint {
    factorial(n) * stirling2(l, n)
}

/// `CSV` with header `l,n,stirling,T,phi`.
pub fn render_csv(rows: &[CountRow]) -> String {
    let mut out = String::from("l,n,stirling,T,phi\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{},{}", r.length, r.alphabet, r.stirling, r.irreducible, r.phi);
    }
    out
}

fn check_cap(l: usize, cap: u128) -> Result<()> {
    let required = bell(l);
    if required > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            length: l,
            required: u128::try_from(&required).unwrap_or(u128::MAX),
            cap,
        });
    }
    Ok(())
}

/// Runs `visit` over every canonical word of the (ℓ, n) family, split by
/// prefix across threads, and folds the per-prefix results in lexicographic
/// prefix order.
pub fn par_canonical_fold<A, F, R>(l: usize, n: usize, visit: F, reduce: R) -> Option<A>
where
    A: Send,
    F: Fn(CanonicalWords) -> A + Sync,
    R: Fn(A, A) -> A,
{
    let prefixes = canonical_prefixes(l, n, SPLIT_DEPTH);
    let parts: Vec<A> = prefixes
        .par_iter()
        .map(|p| visit(CanonicalWords::with_prefix(p, l, n)))
        .collect();
    parts.into_iter().reduce(reduce)
}

/// Counts canonical ℓ-words over exactly n letters whose word-graph is
/// strongly connected.
pub fn brute_force_irreducible(l: usize, n: usize, cap: u128) -> Result<BigUint> {
    if n == 0 || n > l {
        return Err(Error::InvalidArgument(format!("need 1 <= n <= l, got l={l} n={n}")));
    }
    check_cap(l, cap)?;
    let count = par_canonical_fold(
        l,
        n,
        |words| {
            words
                .filter(|w| strongly_connected(&build_graph(w)).expect("word graphs are non-empty"))
                .count() as u64
        },
        |a, b| a + b,
    )
    .unwrap_or(0);
    Ok(BigUint::from(count))
}

/// Number of canonical words per strong-component count k. Each word's k is
/// checked against its finest disjoint factorization; the first (smallest)
/// disagreeing word is reported as an error.
pub fn scc_histogram(l: usize, n: usize, cap: u128) -> Result<BTreeMap<usize, BigUint>> {
    if n == 0 || n > l {
        return Err(Error::InvalidArgument(format!("need 1 <= n <= l, got l={l} n={n}")));
    }
    check_cap(l, cap)?;
    type Part = std::result::Result<BTreeMap<usize, u64>, (CanonicalWord, usize, usize)>;
    let folded: Part = par_canonical_fold(
        l,
        n,
        |words| -> Part {
            let mut buckets = BTreeMap::new();
            for w in words {
                let components = scc_decomposition(&build_graph(&w)).expect("non-empty").len();
                let factors = finest_disjoint_factorization(&w).len();
                if components != factors {
                    return Err((w, components, factors));
                }
                *buckets.entry(components).or_insert(0u64) += 1;
            }
            Ok(buckets)
        },
        |a, b| {
            let mut a = a?;
            for (k, c) in b? {
                *a.entry(k).or_insert(0) += c;
            }
            Ok(a)
        },
    )
    .unwrap_or_else(|| Ok(BTreeMap::new()));
    match folded {
        Ok(buckets) => Ok(buckets.into_iter().map(|(k, c)| (k, BigUint::from(c))).collect()),
        Err((word, components, factors)) => Err(Error::ComponentMismatch {
            word: word.to_string(),
            components,
            factors,
        }),
    }
}

/// Counts ℓ-words over the labeled letters `0..n` that use every letter, by
/// visiting all n^ℓ words. Guarded by `cap` on n^ℓ.
pub fn count_exact_alphabet_words(l: usize, n: usize, cap: u128) -> Result<BigUint> {
    if n == 0 || n > l {
        return Ok(BigUint::from(u8::from(l == 0 && n == 0)));
    }
    let total = (n as u128).checked_pow(l as u32).unwrap_or(u128::MAX);
    if total > cap {
        return Err(Error::CapExceeded {
            length: l,
            required: total,
            cap,
        });
    }
    // n^ℓ ≤ cap < 2^128 keeps n below 64
    let full: u64 = (1u64 << n) - 1;
    let count: u64 = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut digits = vec![0usize; l];
            digits[0] = first;
            let mut hits = 0u64;
            loop {
                let used = digits.iter().fold(0u64, |m, &d| m | (1 << d));
                if used == full {
                    hits += 1;
                }
                // odometer over positions 1..l
                let mut i = l - 1;
                loop {
                    if i == 0 {
                        return hits;
                    }
                    digits[i] += 1;
                    if digits[i] < n {
                        break;
                    }
                    digits[i] = 0;
                    i -= 1;
                }
            }
        })
        .sum();
    Ok(BigUint::from(count))
}
