#![no_main]

use libfuzzer_sys::fuzz_target;
use wordgraph::connectivity::{bridges, scc_decomposition, strongly_connected};
use wordgraph::factorization::finest_disjoint_factorization;
use wordgraph::word::{canonicalize, parse_word};
use wordgraph::build_graph;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(w) = parse_word(text) else {
        return;
    };
    assert_eq!(parse_word(&w.to_string()).as_ref(), Ok(&w));
    assert_eq!(canonicalize(&w).as_word(), &w);

    // keep the quadratic bridge search bounded
    if w.len() > 256 {
        return;
    }
    let g = build_graph(&w);
    assert!(g.edge_count() < w.len());
    let k = finest_disjoint_factorization(&w).len();
    assert_eq!(scc_decomposition(&g).unwrap().len(), k);
    assert_eq!(bridges(&g).len() + 1, k);
    assert_eq!(strongly_connected(&g).unwrap(), k == 1);
});
