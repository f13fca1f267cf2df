//! Exhaustive verification over every canonical word up to a length bound.
//!
//! For each (ℓ, n) with n ≤ ℓ ≤ L the harness compares the recurrence
//! against the brute-force count of strongly connected word-graphs, checks
//! per word that strong connectivity, λ ≥ 2 and an unsplittable word agree,
//! that the finest factorization into k factors matches k strong components
//! and k − 1 bridges, and compares the family size n!·S(ℓ, n) with a direct
//! count of labeled words.

use num_bigint::BigUint;

use crate::connectivity::{bridges, edge_connectivity, scc_decomposition, strongly_connected};
use crate::enumeration::{
    bell, count_exact_alphabet_words, family_cardinality, par_canonical_fold, CountTable,
};
use crate::error::{Error, Result};
use crate::factorization::finest_disjoint_factorization;
use crate::graph::build_graph;
use crate::word::CanonicalWord;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_length: usize,
    pub max_alphabet: Option<usize>,
    pub cap: u128,
    /// T cell to corrupt before checking.
    pub fault: Option<(usize, usize)>,
}

impl VerifyConfig {
    pub fn new(max_length: usize) -> Self {
        VerifyConfig {
            max_length,
            max_alphabet: None,
            cap: crate::enumeration::DEFAULT_ENUMERATION_CAP,
            fault: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// Cases examined: (ℓ, n) pairs or words, depending on the check.
    pub checked: u64,
    pub skipped: u64,
    /// First counterexample, as `key=value` fields.
    pub failure: Option<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome {
            name,
            checked: 0,
            skipped: 0,
            failure: None,
        }
    }

    fn fail(&mut self, detail: impl FnOnce() -> String) {
        if self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }
}

/// Per-(ℓ, n) tallies from one pass over the canonical words.
#[derive(Default)]
struct Pass {
    words: u64,
    strong: u64,
    equivalence: Option<String>,
    bridges: Option<String>,
    components: Option<String>,
}

impl Pass {
    fn merge(mut self, other: Pass) -> Pass {
        self.words += other.words;
        self.strong += other.strong;
        self.equivalence = self.equivalence.or(other.equivalence);
        self.bridges = self.bridges.or(other.bridges);
        self.components = self.components.or(other.components);
        self
    }
}

fn check_word(w: &CanonicalWord, pass: &mut Pass) {
    let g = build_graph(w);
    let strong = strongly_connected(&g).expect("word graphs are non-empty");
    let k = finest_disjoint_factorization(w).len();
    pass.words += 1;
    pass.strong += u64::from(strong);

    if w.alphabet_size() >= 2 && pass.equivalence.is_none() {
        let lambda = edge_connectivity(&g).expect("non-empty").expect("two vertices");
        if strong != (lambda >= 2) || strong != (k == 1) {
            pass.equivalence = Some(format!("word={w} strong={strong} lambda={lambda} k={k}"));
        }
    }
    if pass.bridges.is_none() {
        let b = bridges(&g).len();
        if b + 1 != k {
            pass.bridges = Some(format!("word={w} bridges={b} k={k}"));
        }
    }
    if pass.components.is_none() {
        let sccs = scc_decomposition(&g).expect("non-empty").len();
        if sccs != k {
            pass.components = Some(format!("word={w} sccs={sccs} k={k}"));
        }
    }
}

pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    let max_l = config.max_length;
    if max_l < 2 {
        return Err(Error::InvalidArgument("--max-length must be at least 2".into()));
    }
    let max_n = config.max_alphabet.unwrap_or(max_l).min(max_l);
    if max_n == 0 {
        return Err(Error::InvalidArgument("--max-alphabet must be at least 1".into()));
    }
    let required = bell(max_l);
    if required > BigUint::from(config.cap) {
        return Err(Error::CapExceeded {
            length: max_l,
            required: u128::try_from(&required).unwrap_or(u128::MAX),
            cap: config.cap,
        });
    }

    let table = CountTable::new();
    table.irreducible(max_l, max_n)?;
    if let Some((l, n)) = config.fault {
        table.corrupt_irreducible(l, n)?;
    }

    let mut recurrence = CheckOutcome::new("recurrence");
    let mut equivalence = CheckOutcome::new("equivalence");
    let mut bridge = CheckOutcome::new("bridges");
    let mut components = CheckOutcome::new("components");
    let mut cardinality = CheckOutcome::new("cardinality");

    for l in 1..=max_l {
        for n in 1..=l.min(max_n) {
            let pass = par_canonical_fold(
                l,
                n,
                |words| {
                    let mut pass = Pass::default();
                    for w in words {
                        check_word(&w, &mut pass);
                    }
                    pass
                },
                Pass::merge,
            )
            .unwrap_or_default();

            let expected = table.irreducible(l, n)?;
            recurrence.checked += 1;
            if expected != BigUint::from(pass.strong) {
                recurrence.fail(|| format!("l={l} n={n} recurrence={expected} brute_force={}", pass.strong));
            }
            let word_count = if n >= 2 { pass.words } else { 0 };
            equivalence.checked += word_count;
            bridge.checked += pass.words;
            components.checked += pass.words;
            if let Some(f) = pass.equivalence {
                equivalence.fail(|| f);
            }
            if let Some(f) = pass.bridges {
                bridge.fail(|| f);
            }
            if let Some(f) = pass.components {
                components.fail(|| f);
            }

            match count_exact_alphabet_words(l, n, config.cap) {
                Ok(direct) => {
                    cardinality.checked += 1;
                    let formula = family_cardinality(l, n);
                    if direct != formula {
                        cardinality.fail(|| format!("l={l} n={n} formula={formula} direct={direct}"));
                    }
                }
                Err(Error::CapExceeded { .. }) => cardinality.skipped += 1,
                Err(e) => return Err(e),
            }
        }
    }

    Ok(VerifyReport {
        checks: vec![recurrence, equivalence, bridge, components, cardinality],
    })
}
