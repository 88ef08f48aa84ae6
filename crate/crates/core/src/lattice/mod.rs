//! Exact lattice-polytope machinery.

pub mod linalg;
pub mod membership;
mod polytope;
mod reduce;
mod sublattice;

pub use linalg::{hermite_normal_form, HnfDecomposition, IntMatrix};
pub use polytope::{is_normal_point_set, violates_some_facet, Facet, HRep, LatticePolytope};
pub use reduce::{full_dim_reduce, reduce_polytope, AffineLatticeMap, FullDimReduction, Reduction};
pub use sublattice::{lattice_quotient_distinct, QuotientCheck, Sublattice};
