//! Fiber graphs on the integer points of lattice polytopes.
//!
//! A fiber graph `F(P, M)` has the lattice points of a polytope `P` as nodes
//! and joins two of them when their difference lies in the move set `M`.
//! This crate builds such graphs, realizes arbitrary simple graphs as fiber
//! graphs with a family of explicit constructions, and brackets the fiber
//! dimension of a graph (the smallest ambient dimension of a full-dimensional
//! realization) between certified lower and upper bounds.
//!
//! Everything is exact: coordinates are `i64`, matrix work uses arbitrary
//! precision integers and rationals. The crate is `no_std` and only needs
//! `alloc`.
//!
//! Module map:
//!
//! * [`graph`]: simple graphs, isomorphism, coloring, cartesian products.
//! * [`lattice`]: polytopes, lattice-point enumeration, Hermite normal form,
//!   full-dimensional reduction, sublattice quotients.
//! * [`fiber`]: move sets, fiber-graph construction and Markov-basis checks.
//! * [`embed`]: the constructive embeddings.
//! * [`fdim`]: difference-graph recognition, exhaustive small-dimension
//!   search and fiber-dimension brackets.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod embed;
pub mod error;
pub mod fdim;
pub mod fiber;
pub mod graph;
pub mod lattice;
pub mod limits;
pub mod point;

pub use embed::{DpsPointSet, Embedding, Method};
pub use error::{Error, Result};
pub use fdim::{FdimBracket, LowerCertificate};
pub use fiber::{FiberGraph, MoveSet};
pub use graph::{Coloring, ColoringMode, Graph};
pub use lattice::{AffineLatticeMap, LatticePolytope, Reduction, Sublattice};
pub use limits::Limits;
pub use point::Point;
