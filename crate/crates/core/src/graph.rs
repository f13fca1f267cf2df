//! Simple digraphs over dense vertex indices, the word-graph construction,
//! and deterministic DOT / JSON serialization.

use std::borrow::Cow;
use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{symbol_label, Word};

#[derive(Clone, Debug)]
enum Labels {
    /// Vertex `i` is symbol `i` of an alphabet of this size.
    Symbols(usize),
    Named(Vec<String>),
}

/// A simple digraph: no self-loops, each ordered pair at most once.
///
/// Vertices are indices `0..vertex_count()` with a display label each.
/// Equality compares labeled vertex and edge sets, so two graphs with the
/// same labels but different index orders are equal.
#[derive(Clone, Debug)]
pub struct Digraph {
    labels: Labels,
    // sorted, deduplicated, no (v, v)
    edges: Vec<(usize, usize)>,
}

impl Digraph {
    /// Graph on `n` symbol-labeled vertices. Duplicate edges and self-loops
    /// are rejected.
    pub fn with_vertex_count(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let edges = checked_edges(n, edges)?;
        Ok(Digraph {
            labels: Labels::Symbols(n),
            edges,
        })
    }

    pub fn with_labels(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate vertex {l:?}")));
            }
        }
        let edges = checked_edges(labels.len(), edges)?;
        Ok(Digraph {
            labels: Labels::Named(labels),
            edges,
        })
    }

    /// Graph from labels and label pairs.
    pub fn from_labeled_edges<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::InvalidGraph(format!("edge uses unknown vertex {:?}", s.as_ref())))
        };
        let pairs = edges
            .iter()
            .map(|(u, v)| match (lookup(u)?, lookup(v)?) {
                (a, b) if a == b => Err(Error::InvalidGraph(format!("self-loop on vertex {:?}", u.as_ref()))),
                pair => Ok(pair),
            })
            .collect::<Result<Vec<_>>>()?;
        Digraph::with_labels(labels, pairs)
    }

    pub fn vertex_count(&self) -> usize {
        match &self.labels {
            Labels::Symbols(n) => *n,
            Labels::Named(v) => v.len(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending index order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u, v)).is_ok()
    }

    pub fn label(&self, v: usize) -> Cow<'_, str> {
        match &self.labels {
            Labels::Symbols(n) => Cow::Owned(symbol_label(v, *n)),
            Labels::Named(l) => Cow::Borrowed(&l[v]),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.vertex_count()).map(|v| self.label(v).into_owned()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        (0..self.vertex_count()).find(|&v| self.label(v) == label)
    }

    /// Out-neighbour lists, each ascending.
    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for &(u, v) in &self.edges {
            out[u].push(v);
        }
        out
    }

    /// Same labels, edges filtered by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Digraph {
        Digraph {
            labels: self.labels.clone(),
            edges: self.edges.iter().copied().filter(|&(u, v)| keep(u, v)).collect(),
        }
    }

    /// Label-sorted vertices and label-sorted edges; the serialized form.
    pub fn normalized(&self) -> (Vec<String>, Vec<(String, String)>) {
        let mut vertices = self.labels();
        vertices.sort();
        let mut edges: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|&(u, v)| (self.label(u).into_owned(), self.label(v).into_owned()))
            .collect();
        edges.sort();
        (vertices, edges)
    }
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        match (&self.labels, &other.labels) {
            (Labels::Symbols(a), Labels::Symbols(b)) => a == b && self.edges == other.edges,
            _ => self.normalized() == other.normalized(),
        }
    }
}

impl Eq for Digraph {}

fn checked_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Vec<(usize, usize)>> {
    let mut out: Vec<(usize, usize)> = edges.into_iter().collect();
    for &(u, v) in &out {
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!("edge ({u}, {v}) outside {n} vertices")));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop on vertex {u}")));
        }
    }
    out.sort_unstable();
    if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::InvalidGraph(format!("duplicate edge ({}, {})", w[0].0, w[0].1)));
    }
    Ok(out)
}

/// The digraph induced by a word: its alphabet as vertices and every
/// non-identical adjacent letter pair as a directed edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordGraph(Digraph);

impl WordGraph {
    pub fn into_digraph(self) -> Digraph {
        self.0
    }
}

impl Deref for WordGraph {
    type Target = Digraph;

    fn deref(&self) -> &Digraph {
        &self.0
    }
}

impl AsRef<Digraph> for WordGraph {
    fn as_ref(&self) -> &Digraph {
        &self.0
    }
}

/// Vertex `i` is symbol id `i`; duplicate letter pairs collapse.
pub fn build_graph(w: &Word) -> WordGraph {
    WordGraph(Digraph {
        labels: Labels::Symbols(w.alphabet_size()),
        edges: word_edges(w),
    })
}

/// As [`build_graph`] with caller-provided vertex labels, one per symbol id.
pub fn build_graph_with_labels(w: &Word, labels: &[String]) -> Result<WordGraph> {
    if labels.len() != w.alphabet_size() {
        return Err(Error::InvalidArgument(format!(
            "{} labels for an alphabet of {}",
            labels.len(),
            w.alphabet_size()
        )));
    }
    let g = Digraph::with_labels(labels.to_vec(), [])?;
    Ok(WordGraph(Digraph {
        edges: word_edges(w),
        ..g
    }))
}

fn word_edges(w: &Word) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = w
        .letters()
        .windows(2)
        .filter(|p| p[0] != p[1])
        .map(|p| (p[0] as usize, p[1] as usize))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    edges
}

fn dot_id(label: &str) -> Cow<'_, str> {
    let ident = label
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    let numeral = !label.is_empty() && label.bytes().all(|b| b.is_ascii_digit());
    if ident || numeral {
        Cow::Borrowed(label)
    } else {
        Cow::Owned(format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\"")))
    }
}

/// DOT `digraph` block, one statement per line: vertices first, then edges,
/// each sorted by label.
pub fn to_dot(g: &Digraph) -> String {
    let (vertices, edges) = g.normalized();
    let mut out = String::from("digraph G {\n");
    for v in &vertices {
        let _ = writeln!(out, "  {};", dot_id(v));
    }
    for (u, v) in &edges {
        let _ = writeln!(out, "  {} -> {};", dot_id(u), dot_id(v));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDocument {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

/// `{"vertices":[...],"edges":[[u,v],...]}` with both arrays sorted.
pub fn to_json(g: &Digraph) -> String {
    let (vertices, edges) = g.normalized();
    serde_json::to_string(&GraphDocument { vertices, edges }).expect("graph document serializes")
}

pub fn from_json(text: &str) -> Result<Digraph> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| Error::InvalidGraph(format!("malformed document: {e}")))?;
    Digraph::from_labeled_edges(&doc.vertices, &doc.edges)
}
