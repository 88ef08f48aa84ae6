//! Simple undirected graphs on dense node indices `0..n`.

mod coloring;
mod enumerate;
mod iso;

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub use enumerate::all_graphs;
pub use coloring::{color, color_with_cap, Coloring, ColoringMode};
pub use iso::{is_isomorphic, NodeMapping};

/// A simple graph: no loops, no multi-edges.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Connectivity summary of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Properties {
    pub connected: bool,
    pub bipartite: bool,
    pub components: usize,
}

impl Graph {
    /// Builds a graph, collapsing duplicate edges.
    pub fn new<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut sets = vec![BTreeSet::new(); node_count];
        for (u, v) in edges {
            for index in [u, v] {
                if index >= node_count {
                    return Err(Error::NodeOutOfRange { index, nodes: node_count });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        let adj: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { adj, edge_count })
    }

    pub fn empty(node_count: usize) -> Self {
        Graph { adj: vec![Vec::new(); node_count], edge_count: 0 }
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three nodes");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    /// The star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    /// `K_{n_1, ..., n_r}`; part `i` occupies a contiguous index block.
    pub fn complete_multipartite(sizes: &[usize]) -> Self {
        let mut part = Vec::new();
        for (i, &size) in sizes.iter().enumerate() {
            part.extend(core::iter::repeat_n(i, size));
        }
        let n = part.len();
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges.filter(|&(u, v)| part[u] != part[v]).collect::<Vec<_>>()).unwrap()
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        Self::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    /// The difference graph on positions `0..n` where `i ~ j` iff `|i - j|` is in `dset`.
    pub fn difference(n: usize, dset: &[usize]) -> Self {
        let edges = (0..n).flat_map(|i| dset.iter().filter(move |&&d| i + d < n).map(move |&d| (i, i + d)));
        Self::new(n, edges.filter(|&(u, v)| u != v).collect::<Vec<_>>()).unwrap()
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }

    /// `self` with node `v` deleted; later nodes shift down by one.
    pub fn remove_node(&self, v: usize) -> Graph {
        let shift = |u: usize| if u > v { u - 1 } else { u };
        let edges = self.edges().filter(|&(a, b)| a != v && b != v).map(|(a, b)| (shift(a), shift(b)));
        Graph::new(self.node_count() - 1, edges.collect::<Vec<_>>()).unwrap()
    }

    /// Relabels node `u` as `perm[u]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.node_count());
        Graph::new(self.node_count(), self.edges().map(|(u, v)| (perm[u], perm[v])).collect::<Vec<_>>()).unwrap()
    }

    pub fn complement(&self) -> Graph {
        let n = self.node_count();
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges.filter(|&(u, v)| !self.has_edge(u, v)).collect::<Vec<_>>()).unwrap()
    }

    /// Component index per node, numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let n = self.node_count();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// A proper 2-coloring, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.node_count();
        let mut side = vec![u8::MAX; n];
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn properties(&self) -> Properties {
        let components = self.components().into_iter().max().map_or(0, |c| c + 1);
        Properties {
            connected: components <= 1,
            bipartite: self.two_coloring().is_some(),
            components,
        }
    }

    /// Size of a maximum clique (exhaustive branch and bound).
    pub fn clique_number(&self) -> usize {
        fn extend(g: &Graph, size: usize, candidates: Vec<usize>, best: &mut usize) {
            if candidates.is_empty() {
                *best = (*best).max(size);
                return;
            }
            if size + candidates.len() <= *best {
                return;
            }
            for (i, &v) in candidates.iter().enumerate() {
                if size + candidates.len() - i <= *best {
                    return;
                }
                let next = candidates[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
                extend(g, size + 1, next, best);
            }
        }
        let mut best = 0;
        extend(self, 0, (0..self.node_count()).collect(), &mut best);
        best
    }

    pub fn is_complete(&self) -> bool {
        let n = self.node_count();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// True when the graph is a single cycle through every node.
    pub fn is_cycle(&self) -> bool {
        self.node_count() >= 3 && self.adj.iter().all(|ns| ns.len() == 2) && self.properties().connected
    }

    /// Part sizes when the graph is complete multipartite (its complement is
    /// a disjoint union of cliques), listed by smallest member.
    pub fn complete_multipartite_parts(&self) -> Option<Vec<Vec<usize>>> {
        let co = self.complement();
        let comp = co.components();
        let count = comp.iter().max().map_or(0, |c| c + 1);
        let mut parts = vec![Vec::new(); count];
        for (v, &c) in comp.iter().enumerate() {
            parts[c].push(v);
        }
        let cliques = parts.iter().all(|p| p.iter().all(|&v| co.degree(v) == p.len() - 1));
        cliques.then_some(parts)
    }

    /// For a star `K_{1,n}` with `n >= 2`, the center.
    pub fn star_center(&self) -> Option<usize> {
        let n = self.node_count();
        if n < 3 || self.edge_count != n - 1 {
            return None;
        }
        (0..n).find(|&v| self.degree(v) == n - 1)
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, edges=", self.node_count())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Cartesian product: `(u1, u2) ~ (v1, v2)` iff one coordinate agrees and the
/// other is an edge. Node `(u1, u2)` gets index `u1 * |h| + u2`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.node_count();
    let mut edges = Vec::new();
    for u1 in 0..g.node_count() {
        for (u2, v2) in h.edges() {
            edges.push((u1 * m + u2, u1 * m + v2));
        }
    }
    for (u1, v1) in g.edges() {
        for u2 in 0..m {
            edges.push((u1 * m + u2, v1 * m + u2));
        }
    }
    Graph::new(g.node_count() * m, edges).unwrap()
}
