//! Fiber-dimension brackets.
//!
//! The fiber dimension of a graph is the smallest `d` such that the graph is
//! a fiber graph of a full-dimensional lattice polytope in `Q^d`. Only
//! dimensions 0 and 1 have a complete characterization (a single node, and
//! difference graphs); above that the solver combines constructive upper
//! bounds with the few certified lower bounds available.

mod difference;
mod search;

use alloc::vec::Vec;

pub use difference::{is_difference_graph, DifferenceCertificate};
pub use search::{fdim_exact_search, SearchOutcome};

use crate::embed::{
    ceil_log2, embed_apex, embed_chromatic, embed_complete_multipartite, embed_cycle, embed_difference, embed_edgeless, embed_simplex,
    Embedding,
};
use crate::error::{Error, Result};
use crate::graph::{color_with_cap, ColoringMode, Graph};
use crate::limits::Limits;

/// Why the lower bound holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowerCertificate {
    /// At most one node gives 0; two or more nodes need at least one
    /// dimension, since a 0-dimensional polytope has one lattice point.
    NodeCount { nodes: usize },
    /// The complete ordering search found no difference-graph realization,
    /// so the graph is not one-dimensional.
    NotDifferenceGraph,
    /// `g ≅ K_n`: in a realization, two points congruent mod 2 would have a
    /// lattice midpoint and a move that is twice another move, so the `n`
    /// points occupy distinct classes of `Z^d / 2Z^d` and `n <= 2^d`.
    CompleteGraphParity { n: usize },
}

#[derive(Debug, Clone)]
pub struct FdimBracket {
    pub lower: usize,
    pub upper: usize,
    pub lower_certificate: LowerCertificate,
    pub upper_certificate: Embedding,
    /// Present when the graph was recognized as a difference graph.
    pub difference: Option<DifferenceCertificate>,
}

impl FdimBracket {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// How hard [`fdim_bracket`] tries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Effort {
    pub limits: Limits,
    /// Try apex constructions over every node, with the base bounds of the
    /// smaller graph.
    pub apex: bool,
    /// Box side for the two-dimensional exhaustive search; `None` picks the
    /// smallest square that holds the nodes, plus one.
    pub search_box: Option<i64>,
    /// Skip the two-dimensional search above this many nodes.
    pub search_max_nodes: usize,
}

impl Default for Effort {
    fn default() -> Self {
        Effort { limits: Limits::default(), apex: true, search_box: None, search_max_nodes: 8 }
    }
}

impl Effort {
    pub fn with_limits(limits: Limits) -> Self {
        Effort { limits, ..Effort::default() }
    }
}

/// Certified lower and upper bounds on the fiber dimension of `g`.
///
/// Exhausted caps and budgets only cost precision. An error is returned
/// only when no upper-bound construction could be verified within the
/// limits, or for the empty graph.
pub fn fdim_bracket(g: &Graph, effort: &Effort) -> Result<FdimBracket> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let limits = &effort.limits;

    let mut lower = usize::from(n >= 2);
    let mut lower_certificate = LowerCertificate::NodeCount { nodes: n };
    let mut difference = None;
    if n >= 2 {
        match is_difference_graph(g, limits) {
            Ok(Some(c)) => difference = Some(c),
            Ok(None) => {
                lower = 2;
                lower_certificate = LowerCertificate::NotDifferenceGraph;
            }
            Err(_) => {}
        }
    }
    if g.is_complete() && ceil_log2(n) > lower {
        lower = ceil_log2(n);
        lower_certificate = LowerCertificate::CompleteGraphParity { n };
    }

    let mut best: Option<Embedding> = None;
    if let Some(c) = &difference {
        offer(&mut best, embed_difference(g, &c.position, &c.dset, limits));
    }
    base_candidates(g, limits, lower, &mut best);
    if !reached(&best, lower) && effort.apex && n >= 2 {
        for v in 0..n {
            if reached(&best, lower) {
                break;
            }
            let target = best.as_ref().map_or(usize::MAX, Embedding::dimension);
            let h = g.remove_node(v);
            let mut sub = None;
            if let Ok(Some(c)) = is_difference_graph(&h, limits) {
                offer(&mut sub, embed_difference(&h, &c.position, &c.dset, limits));
            }
            base_candidates(&h, limits, usize::from(h.node_count() >= 2), &mut sub);
            if let Some(sub) = sub.filter(|s| s.dimension() + 1 < target) {
                offer(&mut best, embed_apex(g, v, &sub, limits));
            }
        }
    }
    if !reached(&best, lower) && lower == 2 && n <= effort.search_max_nodes {
        let side = (1..).find(|s: &i64| ((s + 1) * (s + 1)) as usize >= n).unwrap_or(1);
        let box_side = effort.search_box.unwrap_or(side + 1);
        if let SearchOutcome::Found(e) = fdim_exact_search(g, 2, box_side, limits) {
            offer(&mut best, Ok(e));
        }
    }

    let upper_certificate = best.ok_or_else(|| Error::Unsupported("no upper-bound construction fits the limits".into()))?;
    let upper = upper_certificate.dimension();
    if lower > upper {
        return Err(Error::Verification(alloc::format!("lower bound {lower} exceeds verified upper bound {upper}")));
    }
    Ok(FdimBracket { lower, upper, lower_certificate, upper_certificate, difference })
}

fn offer(best: &mut Option<Embedding>, e: Result<Embedding>) {
    if let Ok(e) = e {
        if best.as_ref().is_none_or(|b| e.dimension() < b.dimension()) {
            *best = Some(e);
        }
    }
}

fn reached(best: &Option<Embedding>, lower: usize) -> bool {
    best.as_ref().is_some_and(|b| b.dimension() <= lower)
}

/// Upper-bound constructions that need no recursion, cheapest first,
/// stopping once the best embedding meets `lower`.
fn base_candidates(g: &Graph, limits: &Limits, lower: usize, best: &mut Option<Embedding>) {
    let n = g.node_count();
    if let Some(v) = g.star_center() {
        offer(best, embed_edgeless(n - 1, limits).and_then(|sub| embed_apex(g, v, &sub, limits)));
    }
    if !reached(best, lower) && g.is_cycle() {
        offer(best, embed_cycle(n, limits).and_then(|c| c.relabel(g, &cycle_walk(g), limits)));
    }
    if !reached(best, lower) {
        if let Some(parts) = g.complete_multipartite_parts() {
            let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
            let mut image = alloc::vec![0; n];
            for (next, &u) in parts.iter().flatten().enumerate() {
                image[u] = next;
            }
            offer(best, embed_complete_multipartite(&sizes, limits).and_then(|c| c.relabel(g, &image, limits)));
        }
    }
    if !reached(best, lower) {
        let mode = if n <= limits.exact_coloring_cap { ColoringMode::Exact } else { ColoringMode::Greedy };
        if let Ok(c) = color_with_cap(g, mode, limits.exact_coloring_cap) {
            offer(best, embed_chromatic(g, &c, limits));
        }
    }
    if !reached(best, lower) {
        offer(best, embed_simplex(g, limits));
    }
}

/// For a cycle graph, `image[u]` = the step at which a walk from node 0
/// toward its smaller neighbor reaches `u`, matching [`Graph::cycle`].
fn cycle_walk(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut image = alloc::vec![0; n];
    let (mut prev, mut cur) = (0, g.neighbors(0)[0]);
    for step in 1..n {
        image[cur] = step;
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    image
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::Method;

    fn bracket(g: &Graph) -> FdimBracket {
        let b = fdim_bracket(g, &Effort::default()).unwrap();
        b.upper_certificate.verify(&Limits::default()).unwrap();
        assert!(crate::graph::is_isomorphic(&b.upper_certificate.graph, g).is_some());
        b
    }

    #[test]
    fn complete_graphs() {
        for n in 1..=9 {
            let b = bracket(&Graph::complete(n));
            assert_eq!((b.lower, b.upper), (ceil_log2(n), ceil_log2(n)), "K_{n}");
        }
    }

    #[test]
    fn cycles() {
        for n in 3..=12 {
            let b = bracket(&Graph::cycle(n).permuted(&(0..n).map(|i| (n + 2 - i) % n).collect::<Vec<_>>()));
            let expected = if [3, 4, 6].contains(&n) { 2 } else { 1 };
            assert!(b.is_exact());
            assert_eq!(b.upper, expected, "C_{n}");
        }
    }

    #[test]
    fn stars_use_apex() {
        for n in 3..=6 {
            let b = bracket(&Graph::star(n));
            assert_eq!((b.lower, b.upper), (2, 2));
            assert_eq!(b.lower_certificate, LowerCertificate::NotDifferenceGraph);
            assert_eq!(b.upper_certificate.method, Method::Apex);
        }
    }

    #[test]
    fn small_fixed_values() {
        assert_eq!(bracket(&Graph::empty(1)).upper, 0);
        let b = bracket(&Graph::empty(4));
        assert_eq!((b.lower, b.upper), (1, 1));
        let b = bracket(&Graph::petersen());
        assert_eq!(b.lower, 2);
        assert!(b.upper <= 5);
    }
}
