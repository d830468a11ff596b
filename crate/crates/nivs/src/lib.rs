//! Counting nearly independent vertex subsets on small graphs.
//!
//! A vertex subset of a graph is *k-nearly independent* when the subgraph it
//! induces contains exactly k edges; `sigma_k(G)` counts them. This crate
//! computes these counts exactly (`sigma0` is the Merrifield-Simmons index),
//! evaluates the closed-form values and Nordhaus-Gaddum bounds of the known
//! extremal families, and verifies the extremal characterizations by
//! exhaustive isomorph-free search over all graphs of a given order.
//!
//! Highlights:
//! - [`Graph`]: simple graphs on up to 64 vertices, one adjacency bit row
//!   per vertex, with complement/union/join algebra and graph6 I/O.
//! - [`invariants`]: memoized deletion recursions for `sigma0`/`sigma1`, a
//!   2^n subset-enumeration oracle for any k, the good-graph shortcut and
//!   the Nordhaus-Gaddum sum `sigma1(G) + sigma1(complement(G))`.
//! - [`families`]: constructors and closed forms for the extremal families
//!   (complete, edgeless, star, disjoint edges plus isolated vertices, and
//!   the clique-join of the 4-regular order-6 graph).
//! - [`search`]: isomorph-free generation of graphs (order <= 9) and free
//!   trees (order <= 16), extremal scans, and theorem verifiers with exact
//!   attainment-set comparison.
//!
//! The `nivs` binary exposes the same workflows as `compute`, `family`,
//! `search` and `verify` subcommands; see the crate examples for library
//! usage.

pub mod canon;
pub mod cli;
pub mod error;
pub mod families;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod search;

pub use canon::{canonical_form, canonical_graph, CanonicalForm};
pub use error::{Error, Result};
pub use families::{bound, build, closed_form_ng, BoundKind, BoundValue, Family, FamilySpec};
pub use generate::{gen_graphs, gen_trees};
pub use graph::{Graph, VertexSet, MAX_ORDER};
pub use graph6::{from_graph6, to_graph6};
pub use invariants::{
    is_good, ng_sum, report, sigma0, sigma1, sigma_k_oracle, sigma_profile, Count, InvariantReport,
};
pub use search::{
    extremal_scan, verify_theorem, ExtremalResult, GraphClass, Objective, OrderCheck, ScanSource,
    TheoremId, VerificationReport,
};
