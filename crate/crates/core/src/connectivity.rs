//! Strong and weak connectivity, strong components and the condensation,
//! bridges, and the edge-connectivity λ of the underlying multigraph.
//!
//! λ counts how many directed edges must be deleted before the underlying
//! undirected multigraph falls apart. Every directed edge contributes one
//! undirected edge, so an antiparallel pair `u ⇄ v` joins `u` and `v` twice.
//! Under this reading a word-graph is strongly connected exactly when λ ≥ 2.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Maximal strongly connected components, listed in a topological order of
/// the condensation. Vertices inside a component are ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccDecomposition {
    pub components: Vec<Vec<usize>>,
    pub component_of: Vec<usize>,
}

impl SccDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// The quotient of a digraph by its strong components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condensation {
    pub components: SccDecomposition,
    /// Vertices are component indices, labeled by their index.
    pub graph: Digraph,
    /// Number of original edges joining each ordered component pair.
    pub multiplicity: BTreeMap<(usize, usize), usize>,
}

fn require_vertices(g: &Digraph) -> Result<()> {
    if g.vertex_count() == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

/// Tarjan's algorithm with an explicit stack.
pub fn scc_decomposition(g: &Digraph) -> Result<SccDecomposition> {
    require_vertices(g)?;
    let n = g.vertex_count();
    let succ = g.successors();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut counter = 0;
    // (vertex, next successor position)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&w) = succ[v].get(*pos) {
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack holds the component");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                found.push(comp);
            }
        }
    }

    // Tarjan emits components in reverse topological order.
    found.reverse();
    let mut component_of = vec![0; n];
    for (i, comp) in found.iter().enumerate() {
        for &v in comp {
            component_of[v] = i;
        }
    }
    Ok(SccDecomposition {
        components: found,
        component_of,
    })
}

/// A path exists between every ordered vertex pair. A single vertex is
/// strongly connected.
pub fn strongly_connected(g: &Digraph) -> Result<bool> {
    Ok(scc_decomposition(g)?.len() == 1)
}

pub fn weakly_connected(g: &Digraph) -> Result<bool> {
    require_vertices(g)?;
    Ok(undirected_connected(g.vertex_count(), g.edges(), None))
}

fn undirected_connected(n: usize, edges: &[(usize, usize)], skip: Option<usize>) -> bool {
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if Some(i) != skip {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut seen = vec![false; n];
    let mut todo = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = todo.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                todo.push(w);
            }
        }
    }
    reached == n
}

/// Unidirectional edges whose removal leaves the graph weakly disconnected,
/// in ascending index order. Found by deleting each edge and retesting.
pub fn bridges(g: &Digraph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let edges = g.edges();
    edges
        .iter()
        .enumerate()
        .filter(|&(i, &(u, v))| !g.has_edge(v, u) && !undirected_connected(n, edges, Some(i)))
        .map(|(_, &e)| e)
        .collect()
}

/// λ of the underlying multigraph; `None` for a single vertex, where it is
/// undefined. A weakly disconnected graph has λ = 0.
pub fn edge_connectivity(g: &Digraph) -> Result<Option<usize>> {
    require_vertices(g)?;
    let n = g.vertex_count();
    if n == 1 {
        return Ok(None);
    }
    let mut weight = vec![vec![0usize; n]; n];
    for &(u, v) in g.edges() {
        weight[u][v] += 1;
        weight[v][u] += 1;
    }
    Ok(Some(stoer_wagner(weight)))
}

/// Global minimum cut of a symmetric weight matrix with at least two
/// vertices.
fn stoer_wagner(mut weight: Vec<Vec<usize>>) -> usize {
    let n = weight.len();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    while active.len() > 1 {
        let mut added = vec![false; n];
        let mut attach = vec![0usize; n];
        let mut prev = active[0];
        let mut last = active[0];
        for step in 0..active.len() {
            let next = *active
                .iter()
                .filter(|&&v| !added[v])
                .max_by_key(|&&v| (attach[v], std::cmp::Reverse(v)))
                .expect("an unadded vertex remains");
            added[next] = true;
            if step == active.len() - 1 {
                best = best.min(attach[next]);
                prev = last;
                last = next;
                break;
            }
            last = next;
            for &v in &active {
                if !added[v] {
                    attach[v] += weight[next][v];
                }
            }
        }
        // merge last into prev
        for &v in &active {
            weight[prev][v] += weight[last][v];
            weight[v][prev] = weight[prev][v];
        }
        weight[prev][prev] = 0;
        active.retain(|&v| v != last);
    }
    best
}

pub fn condensation(g: &Digraph) -> Result<Condensation> {
    let components = scc_decomposition(g)?;
    let mut multiplicity = BTreeMap::new();
    for &(u, v) in g.edges() {
        let (cu, cv) = (components.component_of[u], components.component_of[v]);
        if cu != cv {
            *multiplicity.entry((cu, cv)).or_insert(0) += 1;
        }
    }
    let labels = (0..components.len()).map(|i| i.to_string()).collect();
    let graph = Digraph::with_labels(labels, multiplicity.keys().copied())?;
    Ok(Condensation {
        components,
        graph,
        multiplicity,
    })
}
