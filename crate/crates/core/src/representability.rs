//! Which digraphs are word-graphs, and a word for each that is.
//!
//! A word walks the graph and can never re-enter a strong component it has
//! left. A digraph is therefore a word-graph exactly when its strong
//! components line up as a chain `C₁ → C₂ → … → C_k` with a single edge
//! between each consecutive pair and no other edges between components.
//! Inside a component the walk can cover every edge before leaving.

use std::collections::{HashSet, VecDeque};

use crate::connectivity::{condensation, strongly_connected, Condensation};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::word::Word;

pub fn is_representable(g: &Digraph) -> Result<bool> {
    Ok(is_chain(&condensation(g)?))
}

fn is_chain(c: &Condensation) -> bool {
    let k = c.components.len();
    c.multiplicity.len() == k - 1 && c.multiplicity.iter().all(|(&(i, j), &m)| j == i + 1 && m == 1)
}

/// Walk cover of a strongly connected graph from `start` to `end`.
pub fn closed_covering_walk(g: &Digraph, start: usize, end: usize) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if start >= n || end >= n {
        return Err(Error::InvalidArgument(format!(
            "walk endpoints ({start}, {end}) outside {n} vertices"
        )));
    }
    if !strongly_connected(g)? {
        return Err(Error::NotStronglyConnected);
    }
    let all: Vec<usize> = (0..n).collect();
    Ok(cover_component(&g.successors(), &all, start, Some(end)))
}

/// Greedy cover inside one component: route by shortest path to the nearest
/// vertex with an uncovered out-edge, take that edge, repeat; finally route
/// to `end` when given.
fn cover_component(succ: &[Vec<usize>], members: &[usize], start: usize, end: Option<usize>) -> Vec<usize> {
    let inside: HashSet<usize> = members.iter().copied().collect();
    let internal: Vec<(usize, usize)> = members
        .iter()
        .flat_map(|&u| succ[u].iter().filter(|v| inside.contains(v)).map(move |&v| (u, v)))
        .collect();
    let mut uncovered: HashSet<(usize, usize)> = internal.into_iter().collect();
    let has_uncovered = |v: usize, uncovered: &HashSet<(usize, usize)>| {
        succ[v].iter().find(|&&w| uncovered.contains(&(v, w))).copied()
    };

    let mut walk = vec![start];
    let mut cur = start;
    while !uncovered.is_empty() {
        let path = shortest_path(succ, &inside, cur, |v| has_uncovered(v, &uncovered).is_some())
            .expect("strongly connected component reaches every uncovered edge");
        for &v in &path {
            uncovered.remove(&(cur, v));
            walk.push(v);
            cur = v;
        }
        let next = has_uncovered(cur, &uncovered).expect("path ends at an uncovered edge");
        uncovered.remove(&(cur, next));
        walk.push(next);
        cur = next;
    }
    if let Some(end) = end {
        let path = shortest_path(succ, &inside, cur, |v| v == end).expect("end is reachable inside the component");
        walk.extend(path);
    }
    walk
}

/// Vertices after `from` on a shortest path to the first vertex satisfying
/// `target` (empty when `from` already does), staying inside `inside`.
fn shortest_path(
    succ: &[Vec<usize>],
    inside: &HashSet<usize>,
    from: usize,
    target: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    if target(from) {
        return Some(Vec::new());
    }
    let mut parent = vec![usize::MAX; succ.len()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &w in &succ[v] {
            if parent[w] != usize::MAX || !inside.contains(&w) {
                continue;
            }
            parent[w] = v;
            if target(w) {
                let mut path = vec![w];
                let mut x = v;
                while x != from {
                    path.push(x);
                    x = parent[x];
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(w);
        }
    }
    None
}

/// A word whose word-graph is `g`, with symbol id `i` standing for vertex `i`.
/// The word is not necessarily the shortest one.
pub fn synthesize_word(g: &Digraph) -> Result<Word> {
    let c = condensation(g)?;
    if !is_chain(&c) {
        return Err(Error::NotRepresentable);
    }
    let comps = &c.components.components;
    let k = comps.len();
    let boundary: Vec<(usize, usize)> = (0..k - 1)
        .map(|i| {
            *g.edges()
                .iter()
                .find(|&&(u, v)| c.components.component_of[u] == i && c.components.component_of[v] == i + 1)
                .expect("chain has one edge per boundary")
        })
        .collect();

    let succ = g.successors();
    let mut walk = Vec::new();
    let mut entry = comps[0][0];
    for (i, members) in comps.iter().enumerate() {
        let exit = boundary.get(i).map(|&(tail, _)| tail);
        walk.extend(cover_component(&succ, members, entry, exit));
        if let Some(&(_, head)) = boundary.get(i) {
            entry = head;
        }
    }
    Word::new(walk.into_iter().map(|v| v as u32).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::word::iterate_canonical_words;

    fn hand(n: usize, edges: &[(usize, usize)]) -> Digraph {
        Digraph::with_vertex_count(n, edges.iter().copied()).unwrap()
    }

    fn covers(g: &Digraph, walk: &[usize]) -> bool {
        let used: HashSet<(usize, usize)> = walk.windows(2).map(|p| (p[0], p[1])).collect();
        walk.windows(2).all(|p| g.has_edge(p[0], p[1])) && g.edges().iter().all(|e| used.contains(e))
    }

    #[test]
    fn representable_examples() {
        assert!(is_representable(&hand(3, &[(0, 1), (1, 2)])).unwrap());
        assert!(!is_representable(&hand(3, &[(0, 1), (0, 2), (2, 1)])).unwrap());
        assert!(is_representable(&hand(3, &[(0, 1), (1, 2), (2, 0)])).unwrap());
        assert!(is_representable(&hand(1, &[])).unwrap());
        assert!(!is_representable(&hand(2, &[])).unwrap());
        assert_eq!(is_representable(&hand(0, &[])), Err(Error::EmptyGraph));
    }

    #[test]
    fn two_boundary_edges_are_not_representable() {
        // strong {a,b} joined to strong {c,d} by two edges
        let g = hand(4, &[(0, 1), (1, 0), (0, 2), (1, 3), (2, 3), (3, 2)]);
        assert!(!is_representable(&g).unwrap());
        assert_eq!(synthesize_word(&g), Err(Error::NotRepresentable));
    }

    #[test]
    fn synthesize_examples() {
        let cycle = hand(3, &[(0, 1), (1, 2), (2, 0)]);
        let w = synthesize_word(&cycle).unwrap();
        assert_eq!(w.to_string(), "abca");
        assert_eq!(*build_graph(&w), cycle);

        let path = hand(3, &[(0, 1), (1, 2)]);
        assert_eq!(synthesize_word(&path).unwrap().to_string(), "abc");

        let bad = hand(3, &[(0, 1), (0, 2), (2, 1)]);
        assert_eq!(synthesize_word(&bad), Err(Error::NotRepresentable));
    }

    #[test]
    fn covering_walk_examples() {
        assert_eq!(closed_covering_walk(&hand(1, &[]), 0, 0).unwrap(), vec![0]);

        let pair = hand(2, &[(0, 1), (1, 0)]);
        let walk = closed_covering_walk(&pair, 0, 0).unwrap();
        assert_eq!(walk, vec![0, 1, 0]);

        let cycle = hand(3, &[(0, 1), (1, 2), (2, 0)]);
        let walk = closed_covering_walk(&cycle, 0, 2).unwrap();
        assert!(covers(&cycle, &walk));
        assert_eq!((walk[0], *walk.last().unwrap()), (0, 2));

        assert_eq!(
            closed_covering_walk(&hand(2, &[(0, 1)]), 0, 1),
            Err(Error::NotStronglyConnected)
        );
        assert!(matches!(closed_covering_walk(&pair, 0, 5), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn synthesized_words_rebuild_their_graph() {
        for l in 1..=6 {
            for n in 1..=l {
                for cw in iterate_canonical_words(l, n) {
                    let g = build_graph(&cw);
                    let w = synthesize_word(&g).unwrap();
                    assert_eq!(build_graph(&w), g, "{cw} -> {w}");
                }
            }
        }
    }

    #[test]
    fn keeps_labels_through_json() {
        let g = crate::graph::from_json(r#"{"vertices":["x","y","z"],"edges":[["x","y"],["y","x"],["y","z"]]}"#).unwrap();
        let w = synthesize_word(&g).unwrap();
        let rebuilt = crate::graph::build_graph_with_labels(&w, &g.labels()).unwrap();
        assert_eq!(*rebuilt, g);
    }
}
