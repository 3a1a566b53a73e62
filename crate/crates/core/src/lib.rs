//! Exact tools for the k-metric antidimension of undirected connected
//! graphs and the (k, l)-anonymity privacy measure built on it.
//!
//! A vertex set S partitions the remaining vertices into classes of equal
//! distance vectors towards S; S is a k-antiresolving set when the smallest
//! class has k members, and the k-metric antidimension is the size of the
//! smallest such set. The crate provides:
//!
//! * graph and distance-matrix primitives ([`graph`]),
//! * product-family constructors: grids, cylinders, toruses and Hamming
//!   graphs ([`families`]),
//! * the class partition and antiresolving predicates ([`antiresolution`]),
//! * an exhaustive solver with infeasibility certificates ([`solver`]),
//! * closed-form values for the product families ([`closed`]),
//! * binary-programming model builders and an LP writer ([`ilp`]),
//! * seeded random instance generators ([`instances`]),
//! * the command-line front end ([`cli`], `antidim` binary).

pub mod antiresolution;
pub mod cli;
pub mod closed;
pub mod families;
pub mod graph;
pub mod ilp;
pub mod instances;
pub mod solver;

pub use antiresolution::{is_k_ars, k_of, partition_by_rs, ArsPartition, Semantics};
pub use closed::{AdimValue, AnonymityResult};
pub use families::{build_family, FamilyKind, FamilySpec};
pub use graph::{DistanceMatrix, Graph, GraphError};
pub use solver::{kappa, solve_kmad, sweep, KappaOutcome, SolveOutcome, SolveStatus};
