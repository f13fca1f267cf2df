//! Words over dense symbol ids, their canonical (restricted growth) form and
//! the bijection between canonical words and set partitions of `{1, …, ℓ}`.
//!
//! A word of length `ℓ` over an *exact* alphabet of size `n` stores its
//! symbols as ids in `0..n`, every id occurring at least once. Textual letters
//! are only a presentation concern: words with at most 26 symbols print as
//! lowercase letters, larger ones as comma-separated decimal ids.

use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

pub type Symbol = u32;

/// Largest alphabet rendered with letters `a..=z`.
pub const LETTER_ALPHABET_LIMIT: usize = 26;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Symbol>,
    alphabet_size: usize,
}

impl Word {
    /// Builds a word from symbol ids. The ids must cover `0..n` exactly,
    /// where `n` is one more than the largest id.
    pub fn new(letters: Vec<Symbol>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        let alphabet_size = *letters.iter().max().unwrap() as usize + 1;
        let mut seen = vec![false; alphabet_size];
        for &s in &letters {
            seen[s as usize] = true;
        }
        if let Some(missing) = seen.iter().position(|&x| !x) {
            return Err(Error::InvalidWord(format!(
                "symbol id {missing} is unused but id {} occurs",
                alphabet_size - 1
            )));
        }
        Ok(Word {
            letters,
            alphabet_size,
        })
    }

    pub fn letters(&self) -> &[Symbol] {
        &self.letters
    }

    /// Word length `ℓ`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Alphabet cardinality `n`.
    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn is_canonical(&self) -> bool {
        is_restricted_growth(&self.letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_symbols(f, &self.letters, self.alphabet_size)
    }
}

fn write_symbols(f: &mut fmt::Formatter<'_>, letters: &[Symbol], n: usize) -> fmt::Result {
    if n <= LETTER_ALPHABET_LIMIT {
        for &s in letters {
            write!(f, "{}", (b'a' + s as u8) as char)?;
        }
    } else {
        for (i, s) in letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
    }
    Ok(())
}

/// Default display label of a symbol id in an alphabet of size `n`.
pub fn symbol_label(id: usize, alphabet_size: usize) -> String {
    if alphabet_size <= LETTER_ALPHABET_LIMIT {
        ((b'a' + id as u8) as char).to_string()
    } else {
        id.to_string()
    }
}

/// A word whose symbols first occur in increasing order (`0, 1, 2, …`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalWord(Word);

impl CanonicalWord {
    pub fn new(letters: Vec<Symbol>) -> Result<Self> {
        if !is_restricted_growth(&letters) {
            return Err(Error::InvalidWord(
                "symbols do not first occur in increasing order".into(),
            ));
        }
        Word::new(letters).map(CanonicalWord)
    }

    /// Caller guarantees `letters` is a non-empty restricted growth string.
    fn from_rgs(letters: Vec<Symbol>) -> Self {
        debug_assert!(is_restricted_growth(&letters));
        let alphabet_size = letters.iter().max().map_or(0, |&m| m as usize + 1);
        CanonicalWord(Word {
            letters,
            alphabet_size,
        })
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }
}

impl Deref for CanonicalWord {
    type Target = Word;

    fn deref(&self) -> &Word {
        &self.0
    }
}

impl AsRef<Word> for CanonicalWord {
    fn as_ref(&self) -> &Word {
        &self.0
    }
}

impl fmt::Display for CanonicalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn is_restricted_growth(letters: &[Symbol]) -> bool {
    let mut next = 0;
    for &s in letters {
        if s > next {
            return false;
        }
        if s == next {
            next += 1;
        }
    }
    !letters.is_empty()
}

/// Parses a word, assigning ids by first occurrence.
pub fn parse_word(text: &str) -> Result<Word> {
    parse_word_with_symbols(text).map(|(w, _)| w)
}

/// Parses a word and also returns the original spelling of every symbol id,
/// so callers can render graphs with the user's letters.
///
/// Accepted forms are a run of lowercase letters `a..=z` (`"abca"`), or
/// comma-separated decimal tokens (`"0,1,2,0"`). A bare run of digits is a
/// single token.
pub fn parse_word_with_symbols(text: &str) -> Result<(Word, Vec<String>)> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyWord);
    }
    let tokens: Vec<String> = if text.contains(',') || text.bytes().all(|b| b.is_ascii_digit()) {
        text.split(',')
            .enumerate()
            .map(|(position, tok)| {
                let tok = tok.trim();
                let value: u64 = tok
                    .parse()
                    .ok()
                    .filter(|_| tok.bytes().all(|b| b.is_ascii_digit()))
                    .ok_or_else(|| Error::UnsupportedSymbol {
                        symbol: tok.to_string(),
                        position,
                    })?;
                Ok(value.to_string())
            })
            .collect::<Result<_>>()?
    } else {
        text.chars()
            .enumerate()
            .map(|(position, c)| {
                if c.is_ascii_lowercase() {
                    Ok(c.to_string())
                } else {
                    Err(Error::UnsupportedSymbol {
                        symbol: c.to_string(),
                        position,
                    })
                }
            })
            .collect::<Result<_>>()?
    };

    let mut ids: HashMap<&str, Symbol> = HashMap::new();
    let mut symbols = Vec::new();
    let mut letters = Vec::with_capacity(tokens.len());
    for tok in &tokens {
        let next = ids.len() as Symbol;
        let id = *ids.entry(tok.as_str()).or_insert_with(|| {
            symbols.push(tok.clone());
            next
        });
        letters.push(id);
    }
    Ok((CanonicalWord::from_rgs(letters).into_word(), symbols))
}

/// Relabels symbols by order of first occurrence.
pub fn canonicalize(w: &Word) -> CanonicalWord {
    let mut map = vec![Symbol::MAX; w.alphabet_size()];
    let mut next = 0;
    let letters = w
        .letters()
        .iter()
        .map(|&s| {
            let slot = &mut map[s as usize];
            if *slot == Symbol::MAX {
                *slot = next;
                next += 1;
            }
            *slot
        })
        .collect();
    CanonicalWord::from_rgs(letters)
}

/// Lexicographic stream of all canonical words of length `ℓ` with exactly
/// `n` symbols, optionally restricted to the completions of a fixed prefix.
///
/// Concatenating the streams of all canonical prefixes of some depth, in
/// prefix order, reproduces the full stream; this is how counting is split
/// across threads.
#[derive(Clone, Debug)]
pub struct CanonicalWords {
    letters: Vec<Symbol>,
    // prefix_max[i] = max(letters[..=i])
    prefix_max: Vec<Symbol>,
    length: usize,
    fixed: usize,
    alphabet_size: usize,
    // buffer holds a word not yet handed out
    fresh: bool,
    done: bool,
}

impl CanonicalWords {
    pub fn new(length: usize, alphabet_size: usize) -> Self {
        Self::with_prefix(&[], length, alphabet_size)
    }

    /// Completions of `prefix`, in lexicographic order. An invalid or
    /// uncompletable prefix yields an empty stream.
    pub fn with_prefix(prefix: &[Symbol], length: usize, alphabet_size: usize) -> Self {
        let mut it = CanonicalWords {
            letters: Vec::with_capacity(length),
            prefix_max: Vec::with_capacity(length),
            length,
            fixed: prefix.len(),
            alphabet_size,
            fresh: false,
            done: true,
        };
        if alphabet_size == 0 || length < alphabet_size || prefix.len() > length {
            return it;
        }
        if !prefix.is_empty() && !is_restricted_growth(prefix) {
            return it;
        }
        for &s in prefix {
            it.push(s);
        }
        if it.classes_used() > alphabet_size {
            return it;
        }
        it.done = !it.fill_minimal();
        it.fresh = !it.done;
        it
    }

    /// Advances the internal buffer and returns a view of the next word,
    /// without allocating.
    pub fn next_letters(&mut self) -> Option<&[Symbol]> {
        if self.done {
            return None;
        }
        if !std::mem::take(&mut self.fresh) && !self.advance() {
            self.done = true;
            return None;
        }
        Some(&self.letters)
    }

    fn push(&mut self, s: Symbol) {
        let m = self.prefix_max.last().map_or(s, |&m| m.max(s));
        self.letters.push(s);
        self.prefix_max.push(m);
    }

    fn truncate(&mut self, len: usize) {
        self.letters.truncate(len);
        self.prefix_max.truncate(len);
    }

    fn classes_used(&self) -> usize {
        self.prefix_max.last().map_or(0, |&m| m as usize + 1)
    }

    /// Appends the smallest completion of the current prefix; false if none.
    fn fill_minimal(&mut self) -> bool {
        let remaining = self.length - self.letters.len();
        let needed = self.alphabet_size - self.classes_used();
        if needed > remaining {
            return false;
        }
        for _ in 0..remaining - needed {
            self.push(0);
        }
        for s in self.alphabet_size - needed..self.alphabet_size {
            self.push(s as Symbol);
        }
        true
    }

    /// Moves the buffer to the lexicographic successor; false at the end.
    fn advance(&mut self) -> bool {
        // Position 0 is always 0, so it never increments.
        let lowest = self.fixed.max(1);
        for i in (lowest..self.length).rev() {
            let cap = self.prefix_max[i - 1] + 1;
            let next = self.letters[i] + 1;
            if next > cap || next as usize >= self.alphabet_size {
                continue;
            }
            let new_max = self.prefix_max[i - 1].max(next) as usize + 1;
            if self.alphabet_size - new_max > self.length - 1 - i {
                continue;
            }
            self.truncate(i);
            self.push(next);
            return self.fill_minimal();
        }
        false
    }
}

impl Iterator for CanonicalWords {
    type Item = CanonicalWord;

    fn next(&mut self) -> Option<CanonicalWord> {
        self.next_letters()
            .map(|l| CanonicalWord::from_rgs(l.to_vec()))
    }
}

/// Every canonical word of length `ℓ` with exactly `n` symbols, in
/// lexicographic order. Empty when `ℓ < n`.
pub fn iterate_canonical_words(length: usize, alphabet_size: usize) -> CanonicalWords {
    CanonicalWords::new(length, alphabet_size)
}

/// Canonical prefixes of length `depth` that extend to at least one word of
/// length `ℓ` over exactly `n` symbols, in lexicographic order.
pub fn canonical_prefixes(length: usize, alphabet_size: usize, depth: usize) -> Vec<Vec<Symbol>> {
    let depth = depth.min(length);
    let mut out = Vec::new();
    if alphabet_size == 0 || length < alphabet_size || depth == 0 {
        if alphabet_size > 0 && length >= alphabet_size {
            out.push(Vec::new());
        }
        return out;
    }
    let mut prefix = Vec::with_capacity(depth);
    extend_prefixes(&mut prefix, 0, length, alphabet_size, depth, &mut out);
    out
}

fn extend_prefixes(
    prefix: &mut Vec<Symbol>,
    used: usize,
    length: usize,
    alphabet_size: usize,
    depth: usize,
    out: &mut Vec<Vec<Symbol>>,
) {
    if alphabet_size - used > length - prefix.len() {
        return;
    }
    if prefix.len() == depth {
        out.push(prefix.clone());
        return;
    }
    for s in 0..=(used.min(alphabet_size - 1)) {
        prefix.push(s as Symbol);
        extend_prefixes(prefix, used.max(s + 1), length, alphabet_size, depth, out);
        prefix.pop();
    }
}

/// A partition of `{1, …, ℓ}` into non-empty blocks, ordered by minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
    ground_size: usize,
}

impl SetPartition {
    /// Validates and normalizes: blocks are sorted internally and ordered by
    /// their minimum element.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidPartition("no blocks".into()));
        }
        let ground_size: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; ground_size + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x == 0 || x > ground_size {
                    return Err(Error::InvalidPartition(format!(
                        "element {x} outside 1..={ground_size}"
                    )));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidPartition(format!("element {x} repeated")));
                }
            }
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition {
            blocks,
            ground_size,
        })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// `ℓ`, the size of the partitioned set.
    pub fn ground_size(&self) -> usize {
        self.ground_size
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

/// Block `i` collects the 1-based positions holding symbol `i`.
pub fn word_to_partition(w: &CanonicalWord) -> SetPartition {
    let mut blocks = vec![Vec::new(); w.alphabet_size()];
    for (pos, &s) in w.letters().iter().enumerate() {
        blocks[s as usize].push(pos + 1);
    }
    SetPartition {
        blocks,
        ground_size: w.len(),
    }
}

/// Position `j` receives the index of the block containing `j`.
pub fn partition_to_word(p: &SetPartition) -> CanonicalWord {
    let mut letters = vec![0; p.ground_size];
    for (i, block) in p.blocks.iter().enumerate() {
        for &x in block {
            letters[x - 1] = i as Symbol;
        }
    }
    CanonicalWord::from_rgs(letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(l: usize, n: usize) -> Vec<String> {
        iterate_canonical_words(l, n).map(|w| w.to_string()).collect()
    }

    #[test]
    fn parse_assigns_first_occurrence_ids() {
        let w = parse_word("abca").unwrap();
        assert_eq!(w.letters(), &[0, 1, 2, 0]);
        assert_eq!((w.len(), w.alphabet_size()), (4, 3));
        let w = parse_word("aa").unwrap();
        assert_eq!((w.letters(), w.alphabet_size()), (&[0, 0][..], 1));
    }

    #[test]
    fn parse_keeps_original_spelling() {
        let (w, symbols) = parse_word_with_symbols("bacb").unwrap();
        assert_eq!(w.letters(), &[0, 1, 2, 0]);
        assert_eq!(symbols, ["b", "a", "c"]);
        let (w, symbols) = parse_word_with_symbols("7, 3,7").unwrap();
        assert_eq!(w.letters(), &[0, 1, 0]);
        assert_eq!(symbols, ["7", "3"]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_word(""), Err(Error::EmptyWord));
        assert_eq!(parse_word("   "), Err(Error::EmptyWord));
        assert!(matches!(
            parse_word("abC"),
            Err(Error::UnsupportedSymbol { position: 2, .. })
        ));
        assert!(matches!(
            parse_word("1,,2"),
            Err(Error::UnsupportedSymbol { position: 1, .. })
        ));
        assert!(matches!(
            parse_word("1,-2"),
            Err(Error::UnsupportedSymbol { .. })
        ));
    }

    #[test]
    fn large_alphabets_print_as_ids() {
        let letters: Vec<Symbol> = (0..30).collect();
        let w = Word::new(letters).unwrap();
        let text = w.to_string();
        assert!(text.starts_with("0,1,2,"));
        assert_eq!(parse_word(&text).unwrap(), w);
    }

    #[test]
    fn word_new_requires_exact_alphabet() {
        assert!(Word::new(vec![0, 2]).is_err());
        assert_eq!(Word::new(vec![]), Err(Error::EmptyWord));
        assert!(Word::new(vec![1, 0, 2, 1]).is_ok());
        assert!(CanonicalWord::new(vec![1, 0]).is_err());
    }

    #[test]
    fn canonicalize_examples() {
        let w = Word::new(vec![1, 0, 2, 1]).unwrap(); // "bacb"
        assert_eq!(canonicalize(&w).to_string(), "abca");
        let w = parse_word("abca").unwrap();
        assert_eq!(canonicalize(&w).as_word(), &w);
        let w = Word::new(vec![0]).unwrap();
        assert_eq!(canonicalize(&Word::new(vec![0, 0]).unwrap()).to_string(), "aa");
        assert_eq!(canonicalize(&w).to_string(), "a");
    }

    #[test]
    fn canonical_stream_examples() {
        assert_eq!(words(3, 2), ["aab", "aba", "abb"]);
        assert_eq!(words(4, 4), ["abcd"]);
        assert_eq!(words(4, 3).len(), 6);
        assert!(words(2, 3).is_empty());
        assert!(words(0, 0).is_empty());
        assert_eq!(words(1, 1), ["a"]);
    }

    #[test]
    fn canonical_stream_is_strictly_increasing() {
        let all: Vec<_> = iterate_canonical_words(8, 4).collect();
        assert!(all.windows(2).all(|p| p[0].letters() < p[1].letters()));
        assert!(all.iter().all(|w| w.alphabet_size() == 4 && w.len() == 8));
    }

    #[test]
    fn prefixes_partition_the_stream() {
        let full: Vec<_> = iterate_canonical_words(7, 3).collect();
        for depth in 0..=7 {
            let split: Vec<_> = canonical_prefixes(7, 3, depth)
                .iter()
                .flat_map(|p| CanonicalWords::with_prefix(p, 7, 3))
                .collect();
            assert_eq!(split, full, "depth {depth}");
        }
    }

    #[test]
    fn uncompletable_prefix_is_empty() {
        assert_eq!(CanonicalWords::with_prefix(&[0, 0, 0], 4, 3).count(), 0);
        assert_eq!(CanonicalWords::with_prefix(&[0, 2], 4, 3).count(), 0);
        assert_eq!(CanonicalWords::with_prefix(&[0, 1, 0], 4, 3).count(), 1);
    }

    #[test]
    fn partition_examples() {
        let p = |s: &str| word_to_partition(&canonicalize(&parse_word(s).unwrap())).to_string();
        assert_eq!(p("abca"), "{{1,4},{2},{3}}");
        assert_eq!(p("aabc"), "{{1,2},{3},{4}}");
        assert_eq!(p("aa"), "{{1,2}}");

        let w = |blocks: Vec<Vec<usize>>| partition_to_word(&SetPartition::new(blocks).unwrap()).to_string();
        assert_eq!(w(vec![vec![1, 4], vec![2], vec![3]]), "abca");
        assert_eq!(w(vec![vec![2, 4], vec![3, 1]]), "abab");
    }

    #[test]
    fn malformed_partitions() {
        assert!(matches!(
            SetPartition::new(vec![vec![1, 2], vec![2, 3]]),
            Err(Error::InvalidPartition(_))
        ));
        assert!(SetPartition::new(vec![vec![1], vec![3]]).is_err());
        assert!(SetPartition::new(vec![vec![1], vec![]]).is_err());
        assert!(SetPartition::new(vec![]).is_err());
        assert!(SetPartition::new(vec![vec![0, 1]]).is_err());
    }
}
