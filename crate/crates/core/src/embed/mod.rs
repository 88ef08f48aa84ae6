//! Realizing graphs as fiber graphs.
//!
//! Every constructor returns an [`Embedding`] that has already been checked:
//! the polytope is full-dimensional, its lattice points are exactly the images
//! of the graph nodes, and two nodes are adjacent iff their images differ by a
//! move. The ambient dimension is therefore an upper bound on the fiber
//! dimension of the graph.

mod constructions;
mod dps;

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub(crate) use constructions::ceil_log2;
pub use constructions::{
    embed_apex, embed_chromatic, embed_complete_multipartite, embed_cycle, embed_difference, embed_edgeless,
    embed_path, embed_product, embed_simplex,
};
pub use dps::{embed_dps, find_dps_point_set, is_distinct_pair_sum, DpsPointSet, PairSumCheck};

use crate::error::{Error, Result};
use crate::fiber::{FiberGraph, MoveSet};
use crate::graph::{Graph, NodeMapping};
use crate::lattice::{full_dim_reduce, LatticePolytope};
use crate::limits::Limits;
use crate::point::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Simplex,
    Chromatic,
    Product,
    Apex,
    Cycle,
    CompleteMultipartite,
    Difference,
    Dps,
    Search,
}

impl Method {
    pub const ALL: [Method; 9] = [
        Method::Simplex,
        Method::Chromatic,
        Method::Product,
        Method::Apex,
        Method::Cycle,
        Method::CompleteMultipartite,
        Method::Difference,
        Method::Dps,
        Method::Search,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Simplex => "simplex",
            Method::Chromatic => "chromatic",
            Method::Product => "product",
            Method::Apex => "apex",
            Method::Cycle => "cycle",
            Method::CompleteMultipartite => "complete-multipartite",
            Method::Difference => "difference",
            Method::Dps => "dps",
            Method::Search => "search",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL.into_iter().find(|m| m.as_str() == s).ok_or_else(|| Error::Unsupported(format!("unknown method {s:?}")))
    }
}

/// A verified isomorphism `graph ≅ F(polytope, moves)`.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub graph: Graph,
    pub polytope: LatticePolytope,
    pub moves: MoveSet,
    /// `vertex_map[u]` is the lattice point of node `u`.
    pub vertex_map: Vec<Point>,
    pub method: Method,
}

impl Embedding {
    /// Checks the data as given. The polytope must already be
    /// full-dimensional.
    pub fn new(
        graph: Graph,
        polytope: LatticePolytope,
        moves: MoveSet,
        vertex_map: Vec<Point>,
        method: Method,
        limits: &Limits,
    ) -> Result<Self> {
        let e = Embedding { graph, polytope, moves, vertex_map, method };
        e.verify(limits)?;
        Ok(e)
    }

    /// Reduces the polytope to full dimension first, transporting the
    /// moves and the vertex map.
    pub fn reduced(
        graph: Graph,
        polytope: LatticePolytope,
        moves: MoveSet,
        vertex_map: Vec<Point>,
        method: Method,
        limits: &Limits,
    ) -> Result<Self> {
        let r = full_dim_reduce(&polytope, &moves)?;
        let vertex_map = vertex_map.iter().map(|x| r.left_inverse.apply(x)).collect::<Result<Vec<_>>>()?;
        Self::new(graph, r.polytope, r.moves, vertex_map, method, limits)
    }

    /// The ambient dimension, an upper bound on the fiber dimension.
    pub fn dimension(&self) -> usize {
        self.polytope.ambient_dim()
    }

    pub fn verify(&self, limits: &Limits) -> Result<()> {
        let n = self.graph.node_count();
        if self.vertex_map.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: self.vertex_map.len() });
        }
        if !self.polytope.is_full_dimensional() {
            return Err(Error::Verification(format!(
                "polytope has dimension {} in ambient dimension {}",
                self.polytope.dimension(),
                self.polytope.ambient_dim()
            )));
        }
        let fg = FiberGraph::build(&self.polytope, &self.moves, limits)?;
        if fg.points.len() != n {
            return Err(Error::Verification(format!("polytope has {} lattice points for {n} nodes", fg.points.len())));
        }
        let image = self
            .vertex_map
            .iter()
            .map(|x| fg.index_of(x).ok_or_else(|| Error::Verification(format!("{x} is not a lattice point of the polytope"))))
            .collect::<Result<Vec<_>>>()?;
        if !(NodeMapping { image }).is_isomorphism(&self.graph, &fg.graph) {
            return Err(Error::Verification("vertex map is not an isomorphism onto the fiber graph".into()));
        }
        Ok(())
    }

    /// Transfers the embedding to an isomorphic graph `g`. `image[u]` is the
    /// node of `self.graph` that node `u` of `g` corresponds to.
    pub fn relabel(&self, g: &Graph, image: &[usize], limits: &Limits) -> Result<Self> {
        if image.len() != g.node_count() {
            return Err(Error::SizeMismatch { expected: g.node_count(), found: image.len() });
        }
        let vertex_map = image
            .iter()
            .map(|&t| self.vertex_map.get(t).cloned().ok_or(Error::NodeOutOfRange { index: t, nodes: self.vertex_map.len() }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(g.clone(), self.polytope.clone(), self.moves.clone(), vertex_map, self.method, limits)
    }

    /// Like [`relabel`](Self::relabel), finding the correspondence by an
    /// isomorphism search. `None` when the graphs are not isomorphic.
    pub fn transfer_to(&self, g: &Graph, limits: &Limits) -> Result<Option<Self>> {
        match crate::graph::is_isomorphic(g, &self.graph) {
            Some(m) => self.relabel(g, &m.image, limits).map(Some),
            None => Ok(None),
        }
    }
}
