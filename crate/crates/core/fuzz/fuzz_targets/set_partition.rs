#![no_main]

use libfuzzer_sys::fuzz_target;
use wordgraph::factorization::{is_irreducible, split_points};
use wordgraph::word::{partition_to_word, word_to_partition, SetPartition};

// Input: blocks separated by 0xff, each byte one element.
fuzz_target!(|data: &[u8]| {
    let blocks: Vec<Vec<usize>> = data
        .split(|&b| b == 0xff)
        .map(|chunk| chunk.iter().map(|&b| b as usize).collect())
        .collect();
    let Ok(p) = SetPartition::new(blocks) else {
        return;
    };
    let w = partition_to_word(&p);
    assert_eq!(w.len(), p.ground_size());
    assert_eq!(w.alphabet_size(), p.block_count());
    assert_eq!(word_to_partition(&w), p);
    assert_eq!(is_irreducible(&p), split_points(&w).is_empty());
});
