use proptest::prelude::*;

use wordgraph::connectivity::{strongly_connected, weakly_connected};
use wordgraph::enumeration::{stirling2, CountTable};
use wordgraph::factorization::{is_irreducible, split_points};
use wordgraph::graph::{build_graph, from_json, to_json, Digraph};
use wordgraph::representability::{is_representable, synthesize_word};
use wordgraph::word::{
    canonicalize, iterate_canonical_words, parse_word, partition_to_word, word_to_partition, Word,
};

/// Arbitrary word with an exact alphabet: random ids in 0..k, compacted.
fn word(max_len: usize, max_alphabet: u32) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..max_alphabet, 1..=max_len).prop_map(|ids| {
        let mut used: Vec<u32> = ids.clone();
        used.sort_unstable();
        used.dedup();
        Word::new(ids.iter().map(|s| used.binary_search(s).unwrap() as u32).collect()).unwrap()
    })
}

fn digraph(max_vertices: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_vertices).prop_flat_map(|n| {
        prop::collection::btree_set((0..n, 0..n), 0..=n * n).prop_map(move |set| {
            Digraph::with_vertex_count(n, set.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn canonicalize_is_idempotent(w in word(24, 30)) {
        let c = canonicalize(&w);
        prop_assert_eq!(&canonicalize(&c), &c);
        prop_assert!(c.is_canonical());
    }

    #[test]
    fn canonicalize_preserves_equality_pattern(w in word(16, 6)) {
        let c = canonicalize(&w);
        let (a, b) = (w.letters(), c.letters());
        for i in 0..a.len() {
            for j in 0..a.len() {
                prop_assert_eq!(a[i] == a[j], b[i] == b[j]);
            }
        }
    }

    #[test]
    fn text_form_round_trips(w in word(40, 40)) {
        let c = canonicalize(&w);
        prop_assert_eq!(parse_word(&c.to_string()).unwrap(), c.into_word());
    }

    #[test]
    fn word_graphs_are_small_and_weakly_connected(w in word(30, 8)) {
        let g = build_graph(&w);
        prop_assert!(g.edge_count() < w.len());
        prop_assert!(weakly_connected(&g).unwrap());
        prop_assert_eq!(g.vertex_count(), w.alphabet_size());
    }

    #[test]
    fn relabeling_keeps_graph_shape(w in word(20, 6)) {
        let c = canonicalize(&w);
        let (g, h) = (build_graph(&w), build_graph(&c));
        // map w's ids to c's ids through the first position of each id
        let mut map = vec![0usize; w.alphabet_size()];
        for (a, b) in w.letters().iter().zip(c.letters()) {
            map[*a as usize] = *b as usize;
        }
        let mapped: Vec<_> = {
            let mut e: Vec<_> = g.edges().iter().map(|&(u, v)| (map[u], map[v])).collect();
            e.sort_unstable();
            e
        };
        prop_assert_eq!(mapped, h.edges().to_vec());
    }

    #[test]
    fn json_round_trips(g in digraph(6)) {
        prop_assert_eq!(from_json(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn synthesized_words_rebuild_long_words(w in word(40, 10)) {
        let g = build_graph(&w);
        prop_assert!(is_representable(&g).unwrap());
        let s = synthesize_word(&g).unwrap();
        prop_assert_eq!(build_graph(&s), g);
    }

    #[test]
    fn representable_graphs_are_weakly_connected(g in digraph(6)) {
        if is_representable(&g).unwrap() {
            prop_assert!(weakly_connected(&g).unwrap());
            prop_assert_eq!(&*build_graph(&synthesize_word(&g).unwrap()), &g);
        }
    }

    #[test]
    fn strong_iff_no_split_point(w in word(30, 7)) {
        let strong = strongly_connected(&build_graph(&w)).unwrap();
        prop_assert_eq!(strong, split_points(&w).is_empty());
        prop_assert_eq!(strong, is_irreducible(&word_to_partition(&canonicalize(&w))));
    }
}

#[test]
fn partition_round_trip_up_to_eight() {
    for l in 1..=8 {
        for n in 1..=l {
            for w in iterate_canonical_words(l, n) {
                assert_eq!(partition_to_word(&word_to_partition(&w)), w);
            }
        }
    }
}

#[test]
fn stream_sizes_are_stirling_numbers() {
    for l in 1..=10 {
        for n in 1..=l {
            let count = iterate_canonical_words(l, n).count();
            assert_eq!(num_bigint::BigUint::from(count), stirling2(l, n), "({l},{n})");
        }
    }
}

#[test]
fn irreducible_counts_bounded_by_stirling() {
    let table = CountTable::new();
    for l in 1..=30 {
        for n in 1..=l {
            assert!(table.irreducible(l, n).unwrap() <= table.stirling(l, n));
        }
    }
}
