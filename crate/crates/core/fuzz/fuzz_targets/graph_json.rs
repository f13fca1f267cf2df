#![no_main]

use libfuzzer_sys::fuzz_target;
use wordgraph::graph::{build_graph_with_labels, from_json, to_json};
use wordgraph::representability::{is_representable, synthesize_word};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(g) = from_json(text) else {
        return;
    };
    let again = from_json(&to_json(&g)).expect("serialized graphs parse");
    assert_eq!(again, g);

    if g.vertex_count() == 0 || g.vertex_count() > 64 {
        return;
    }
    match synthesize_word(&g) {
        Ok(w) => {
            assert!(is_representable(&g).unwrap());
            let rebuilt = build_graph_with_labels(&w, &g.labels()).unwrap();
            assert_eq!(*rebuilt, g);
        }
        Err(_) => assert!(!is_representable(&g).unwrap()),
    }
});
