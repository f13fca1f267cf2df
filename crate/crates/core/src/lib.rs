//! Word-graphs: the digraph whose vertices are the letters of a word and whose
//! edges are its non-identical adjacent letter pairs.
//!
//! The crate builds word-graphs, decides strong connectivity through three
//! equivalent routes (strong components, undirected edge-connectivity, and
//! disjoint factorization of the word), decides whether an arbitrary digraph
//! is a word-graph, and counts strongly connected word-graphs exactly with a
//! Stirling-number recurrence backed by brute-force oracles.

pub mod cli;
pub mod connectivity;
pub mod enumeration;
pub mod error;
pub mod factorization;
pub mod graph;
pub mod representability;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use graph::{build_graph, Digraph, WordGraph};
pub use word::{canonicalize, parse_word, CanonicalWord, SetPartition, Word};
