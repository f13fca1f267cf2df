//! Disjoint factorization of words and partition irreducibility.
//!
//! A split point is a position `j` where the prefix `ω₁…ω_j` and the suffix
//! `ω_{j+1}…ω_ℓ` share no letter. Cutting at every split point yields the
//! finest factorization into factors with pairwise disjoint alphabets; its
//! factors are exactly the strong components of the word-graph, and the
//! edges joining consecutive factors are its bridges.

use crate::word::{partition_to_word, SetPartition, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointFactorization {
    /// 1-based split positions, ascending.
    pub split_points: Vec<usize>,
    /// Factors as half-open ranges of 0-based letter positions.
    pub factors: Vec<std::ops::Range<usize>>,
}

impl DisjointFactorization {
    /// Number of factors `k`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors rendered with the word's letters, joined by `|`.
    pub fn render(&self, w: &Word, label: impl Fn(usize) -> String) -> String {
        let labels: Vec<String> = (0..w.alphabet_size()).map(label).collect();
        // only single letters concatenate back into the same word
        let letters = labels
            .iter()
            .all(|l| l.len() == 1 && l.as_bytes()[0].is_ascii_lowercase());
        let sep = if letters { "" } else { "," };
        self.factors
            .iter()
            .map(|r| {
                w.letters()[r.clone()]
                    .iter()
                    .map(|&s| labels[s as usize].as_str())
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// Single left-to-right scan: `j` is a split point iff the furthest last
/// occurrence among `ω₁…ω_j` is `j` itself.
pub fn split_points(w: &Word) -> Vec<usize> {
    let letters = w.letters();
    let mut last = vec![0usize; w.alphabet_size()];
    for (i, &s) in letters.iter().enumerate() {
        last[s as usize] = i;
    }
    let mut reach = 0;
    let mut out = Vec::new();
    for (i, &s) in letters.iter().enumerate().take(letters.len().saturating_sub(1)) {
        reach = reach.max(last[s as usize]);
        if reach == i {
            out.push(i + 1);
        }
    }
    out
}

/// Cuts at every split point, giving the maximum number of factors.
pub fn finest_disjoint_factorization(w: &Word) -> DisjointFactorization {
    let split_points = split_points(w);
    let mut factors = Vec::with_capacity(split_points.len() + 1);
    let mut start = 0;
    for &j in &split_points {
        factors.push(start..j);
        start = j;
    }
    factors.push(start..w.len());
    DisjointFactorization {
        split_points,
        factors,
    }
}

/// A partition is reducible when some proper subset of its blocks covers a
/// prefix `{1, …, j}` with `j < ℓ`. Those subsets are exactly the blocks met
/// by a prefix ending at a split point of the partition's word, so the test
/// is linear.
pub fn is_irreducible(p: &SetPartition) -> bool {
    split_points(&partition_to_word(p)).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{iterate_canonical_words, parse_word, word_to_partition};

    fn w(text: &str) -> Word {
        parse_word(text).unwrap()
    }

    fn factors(text: &str) -> Vec<String> {
        let word = w(text);
        finest_disjoint_factorization(&word)
            .factors
            .iter()
            .map(|r| text[r.clone()].to_string())
            .collect()
    }

    fn partition(blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    /// Every proper non-empty subset of blocks, checked for covering a prefix.
    fn brute_irreducible(p: &SetPartition) -> bool {
        let blocks = p.blocks();
        let k = blocks.len();
        let all = (1u32 << k) - 1;
        !(1..all).any(|mask| {
            let mut union: Vec<usize> = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .flat_map(|i| blocks[i].iter().copied())
                .collect();
            union.sort_unstable();
            let j = union.len();
            j < p.ground_size() && union.iter().copied().eq(1..=j)
        })
    }

    /// Split points straight from the definition: disjoint prefix and suffix
    /// alphabets.
    fn brute_split_points(word: &Word) -> Vec<usize> {
        let l = word.letters();
        (1..l.len())
            .filter(|&j| l[..j].iter().all(|s| !l[j..].contains(s)))
            .collect()
    }

    #[test]
    fn split_point_examples() {
        assert_eq!(split_points(&w("abcb")), vec![1]);
        assert!(split_points(&w("abca")).is_empty());
        assert_eq!(split_points(&w("aabc")), vec![2, 3]);
        assert!(split_points(&w("a")).is_empty());
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(factors("abcb"), ["a", "bcb"]);
        assert_eq!(factors("abab"), ["abab"]);
        assert_eq!(factors("abc"), ["a", "b", "c"]);
        assert_eq!(factors("aaaa"), ["aaaa"]);
        let f = finest_disjoint_factorization(&w("aabc"));
        assert_eq!(f.len(), 3);
        assert_eq!(f.render(&w("aabc"), |i| ((b'a' + i as u8) as char).to_string()), "aa|b|c");
        let ids = Word::new(vec![0, 1, 0, 2]).unwrap();
        let f = finest_disjoint_factorization(&ids);
        assert_eq!(f.render(&ids, |i| ["10", "3", "7"][i].to_string()), "10,3,10|7");
    }

    #[test]
    fn factors_are_disjoint_and_finest() {
        for l in 1..=7 {
            for n in 1..=l {
                for cw in iterate_canonical_words(l, n) {
                    let f = finest_disjoint_factorization(&cw);
                    let letters = cw.letters();
                    for (i, a) in f.factors.iter().enumerate() {
                        for b in &f.factors[i + 1..] {
                            assert!(letters[a.clone()].iter().all(|s| !letters[b.clone()].contains(s)));
                        }
                        let sub = canonicalize_slice(&letters[a.clone()]);
                        assert!(split_points(&sub).is_empty(), "{cw}");
                    }
                    assert_eq!(f.split_points, brute_split_points(&cw));
                }
            }
        }
    }

    fn canonicalize_slice(s: &[u32]) -> Word {
        let mut map = std::collections::HashMap::new();
        let ids = s
            .iter()
            .map(|x| {
                let next = map.len() as u32;
                *map.entry(*x).or_insert(next)
            })
            .collect();
        Word::new(ids).unwrap()
    }

    #[test]
    fn irreducible_examples() {
        let p = partition(&[&[1, 4], &[2], &[3]]);
        assert!(is_irreducible(&p));
        assert!(brute_irreducible(&p));
        assert!(!is_irreducible(&partition(&[&[1, 2], &[3, 4]])));
        assert!(!is_irreducible(&partition(&[&[1], &[2, 3]])));
        assert!(is_irreducible(&partition(&[&[1, 2, 3]])));
    }

    #[test]
    fn irreducible_matches_subset_oracle() {
        for l in 1..=6 {
            for n in 1..=l {
                for cw in iterate_canonical_words(l, n) {
                    let p = word_to_partition(&cw);
                    assert_eq!(is_irreducible(&p), brute_irreducible(&p), "{p}");
                }
            }
        }
    }
}
