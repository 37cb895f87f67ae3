//! Two-colored best match graphs (2-cBMGs): loop-free bipartite digraphs that
//! satisfy four neighborhood axioms. This crate provides the graph
//! representation, the axiom checker with replayable counterexamples,
//! structural tools (equivalence quotients, consistent orientations,
//! topological orders, symmetric-edge components), the terminal-pair
//! truncation and decomposition procedure, a family of constructions that
//! provably yield 2-cBMGs, a rooted-tree oracle, and an exhaustive
//! classifier for all such graphs on a fixed bipartition.

pub mod axioms;
pub mod constructors;
pub mod dot;
pub mod enumeration;
pub mod fixtures;
pub mod graph;
pub mod rng;
pub mod structure;
pub mod tree;
pub mod truncation;

pub use graph::{ColoredDigraph, EdgeList, GraphError, Vertex, VertexSet};
