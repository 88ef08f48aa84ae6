//! Move sets and fiber graphs.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, MoveSetError, Result};
use crate::graph::Graph;
use crate::lattice::LatticePolytope;
use crate::limits::Limits;
use crate::point::Point;

/// A symmetric, multiple-free set of nonzero integer vectors.
///
/// Only the lexicographically positive representatives are stored; every
/// size reported by this type counts both signs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MoveSet {
    dim: usize,
    positive: Vec<Point>,
}

impl MoveSet {
    pub fn empty(dim: usize) -> Self {
        MoveSet { dim, positive: Vec::new() }
    }

    /// Checks a full candidate set, both signs included.
    pub fn validate(dim: usize, candidates: impl IntoIterator<Item = Point>) -> Result<Self, MoveSetError> {
        let all: BTreeSet<Point> = candidates.into_iter().collect();
        for m in &all {
            if m.dim() != dim {
                return Err(MoveSetError::Dimension { move_: m.clone(), expected: dim, found: m.dim() });
            }
            if m.is_zero() {
                return Err(MoveSetError::Zero);
            }
            if !all.contains(&-m) {
                return Err(MoveSetError::Asymmetric(m.clone()));
            }
        }
        Self::checked(dim, all.into_iter().filter(Point::is_lex_positive).collect())
    }

    /// Builds the set `{±m}` from one representative per pair. Either sign
    /// may be given and repeats are ignored.
    pub fn from_representatives(dim: usize, reps: impl IntoIterator<Item = Point>) -> Result<Self, MoveSetError> {
        let mut positive = BTreeSet::new();
        for m in reps {
            if m.dim() != dim {
                return Err(MoveSetError::Dimension { found: m.dim(), move_: m, expected: dim });
            }
            if m.is_zero() {
                return Err(MoveSetError::Zero);
            }
            positive.insert(m.canonical_sign());
        }
        Self::checked(dim, positive.into_iter().collect())
    }

    fn checked(dim: usize, positive: Vec<Point>) -> Result<Self, MoveSetError> {
        for (i, a) in positive.iter().enumerate() {
            for b in &positive[i + 1..] {
                for (base, multiple) in [(a, b), (b, a)] {
                    if let Some(f) = multiple.multiple_of(base) {
                        if f.abs() >= 2 {
                            let (multiple, factor) = if f > 0 { (multiple.clone(), f) } else { (-multiple, -f) };
                            return Err(MoveSetError::Multiple { base: base.clone(), multiple, factor });
                        }
                    }
                }
            }
        }
        Ok(MoveSet { dim, positive })
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Lexicographically positive representatives, sorted.
    pub fn positive(&self) -> &[Point] {
        &self.positive
    }

    /// Every move, both signs, sorted.
    pub fn all(&self) -> Vec<Point> {
        let mut v: Vec<Point> = self.positive.iter().flat_map(|m| [m.clone(), -m]).collect();
        v.sort();
        v
    }

    /// `|M|`, counting both signs.
    pub fn len(&self) -> usize {
        2 * self.positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty()
    }

    pub fn contains(&self, m: &Point) -> bool {
        m.dim() == self.dim && !m.is_zero() && self.positive.binary_search(&m.canonical_sign()).is_ok()
    }
}

/// `F(P, M)`: nodes are the lattice points of `P` in lexicographic order.
#[derive(Debug, Clone)]
pub struct FiberGraph {
    pub points: Vec<Point>,
    pub graph: Graph,
    pub polytope: LatticePolytope,
    pub moves: MoveSet,
    /// For each positive move, how many edges it realizes.
    pub move_usage: Vec<usize>,
}

impl FiberGraph {
    pub fn build(p: &LatticePolytope, m: &MoveSet, limits: &Limits) -> Result<Self> {
        if p.ambient_dim() != m.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: p.ambient_dim(), found: m.ambient_dim() });
        }
        let points = p.lattice_points(limits)?;
        let mut edges = Vec::new();
        let mut move_usage = alloc::vec![0; m.positive().len()];
        for (u, x) in points.iter().enumerate() {
            for (k, mv) in m.positive().iter().enumerate() {
                let Some(y) = checked_add(x, mv) else { continue };
                if let Ok(v) = points.binary_search(&y) {
                    edges.push((u, v));
                    move_usage[k] += 1;
                }
            }
        }
        let graph = Graph::new(points.len(), edges)?;
        Ok(FiberGraph { points, graph, polytope: p.clone(), moves: m.clone(), move_usage })
    }

    pub fn index_of(&self, x: &Point) -> Option<usize> {
        self.points.binary_search(x).ok()
    }

    /// Positive representatives of the moves that realize no edge.
    pub fn unused_moves(&self) -> Vec<Point> {
        self.moves.positive().iter().zip(&self.move_usage).filter(|(_, &c)| c == 0).map(|(m, _)| m.clone()).collect()
    }
}

pub(crate) fn checked_add(x: &Point, m: &Point) -> Option<Point> {
    x.0.iter().zip(&m.0).map(|(a, b)| a.checked_add(*b)).collect::<Option<Vec<_>>>().map(Point)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minimality {
    pub minimal: bool,
    /// Positive representatives of moves realizing no edge.
    pub unused: Vec<Point>,
}

/// A move set is minimal for `p` when every move realizes an edge.
pub fn is_minimal(p: &LatticePolytope, m: &MoveSet, limits: &Limits) -> Result<Minimality> {
    let unused = FiberGraph::build(p, m, limits)?.unused_moves();
    Ok(Minimality { minimal: unused.is_empty(), unused })
}

/// Minimal and the fiber graph is connected.
pub fn is_markov_basis(p: &LatticePolytope, m: &MoveSet, limits: &Limits) -> Result<bool> {
    let fg = FiberGraph::build(p, m, limits)?;
    Ok(fg.unused_moves().is_empty() && fg.graph.properties().connected)
}

struct UnionFind {
    parent: Vec<usize>,
    history: Vec<(usize, usize)>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), history: Vec::new(), components: n }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (child, root) = if ra < rb { (rb, ra) } else { (ra, rb) };
            self.parent[child] = root;
            self.history.push((child, root));
            self.components -= 1;
        }
    }

    fn rollback(&mut self, mark: usize) {
        while self.history.len() > mark {
            let (child, _) = self.history.pop().unwrap();
            self.parent[child] = child;
            self.components += 1;
        }
    }
}

/// Smallest `|M|` (both signs) of a Markov basis of `p` with `|M| <= size_cap`.
///
/// Every move of a minimal set realizes an edge, so it is a difference of two
/// lattice points. The search therefore runs over subsets of the pairwise
/// differences, by increasing size, skipping subsets that contain a move
/// together with a multiple of it.
pub fn min_markov_basis_size(p: &LatticePolytope, size_cap: usize, limits: &Limits) -> Result<Option<usize>> {
    let points = p.lattice_points(limits)?;
    if points.len() <= 1 {
        return Ok(Some(0));
    }
    let universe: Vec<Point> =
        points.iter().enumerate().flat_map(|(i, x)| points[i + 1..].iter().map(move |y| (y - x).canonical_sign())).collect::<BTreeSet<_>>().into_iter().collect();
    let edges: Vec<Vec<(usize, usize)>> = universe
        .iter()
        .map(|m| {
            points
                .iter()
                .enumerate()
                .filter_map(|(u, x)| checked_add(x, m).and_then(|y| points.binary_search(&y).ok()).map(|v| (u, v)))
                .collect()
        })
        .collect();
    let conflicts: Vec<Vec<bool>> = universe
        .iter()
        .map(|a| universe.iter().map(|b| a != b && (b.multiple_of(a).is_some() || a.multiple_of(b).is_some())).collect())
        .collect();

    let mut search = MarkovSearch { edges: &edges, conflicts: &conflicts, chosen: Vec::new(), uf: UnionFind::new(points.len()), spent: 0, budget: limits.search_budget };
    for s in p.dimension().max(1)..=size_cap / 2 {
        if search.choose(0, s)? {
            return Ok(Some(2 * s));
        }
    }
    Ok(None)
}

struct MarkovSearch<'a> {
    edges: &'a [Vec<(usize, usize)>],
    conflicts: &'a [Vec<bool>],
    chosen: Vec<usize>,
    uf: UnionFind,
    spent: u64,
    budget: u64,
}

impl MarkovSearch<'_> {
    fn choose(&mut self, start: usize, remaining: usize) -> Result<bool> {
        if remaining == 0 {
            return Ok(self.uf.components == 1);
        }
        self.spent += 1;
        if self.spent > self.budget {
            return Err(Error::CapExceeded { what: "Markov basis search nodes", value: self.spent, cap: self.budget });
        }
        for k in start..=self.edges.len().saturating_sub(remaining) {
            if self.chosen.iter().any(|&c| self.conflicts[c][k]) {
                continue;
            }
            let mark = self.uf.history.len();
            for &(u, v) in &self.edges[k] {
                self.uf.union(u, v);
            }
            // Each remaining move can merge components at most as much as
            // its edge count allows; a cheap bound is one merge per edge.
            let reachable = self.uf.components <= 1 + self.edges[k + 1..].iter().map(Vec::len).max().unwrap_or(0) * (remaining - 1);
            self.chosen.push(k);
            let found = reachable && self.choose(k + 1, remaining - 1)?;
            self.chosen.pop();
            self.uf.rollback(mark);
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteCriterion {
    /// `m` is a Markov basis of `p` and `|m| = 2 dim p`.
    pub applies: bool,
    pub bipartite: bool,
}

/// Checks that a Markov basis with `|M| = 2 dim P` gives a bipartite fiber
/// graph. A violation is reported as an error.
pub fn check_bipartite_criterion(p: &LatticePolytope, m: &MoveSet, limits: &Limits) -> Result<BipartiteCriterion> {
    let fg = FiberGraph::build(p, m, limits)?;
    let props = fg.graph.properties();
    let applies = fg.unused_moves().is_empty() && props.connected && m.len() == 2 * p.dimension();
    if applies && !props.bipartite {
        return Err(Error::Verification(format!("fiber graph of a Markov basis with {} moves is not bipartite", m.len())));
    }
    Ok(BipartiteCriterion { applies, bipartite: props.bipartite })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reps<const N: usize>(dim: usize, v: &[[i64; N]]) -> MoveSet {
        MoveSet::from_representatives(dim, v.iter().map(|&c| Point::from(c))).unwrap()
    }

    #[test]
    fn validation_diagnoses() {
        let ok = MoveSet::validate(1, [Point::from([1]), Point::from([-1])]).unwrap();
        assert_eq!(ok.len(), 2);
        let err = MoveSet::validate(1, [1, -1, 2, -2].map(|c| Point::from([c]))).unwrap_err();
        assert_eq!(err, MoveSetError::Multiple { base: Point::from([1]), multiple: Point::from([2]), factor: 2 });
        assert_eq!(MoveSet::validate(2, [Point::from([1, 0])]).unwrap_err(), MoveSetError::Asymmetric(Point::from([1, 0])));
        assert_eq!(MoveSet::validate(1, [Point::from([0])]).unwrap_err(), MoveSetError::Zero);
        assert!(MoveSet::validate(1, []).unwrap().is_empty());
    }

    #[test]
    fn negative_multiples_are_caught() {
        let err = MoveSet::from_representatives(2, [Point::from([1, -1]), Point::from([-3, 3])]).unwrap_err();
        assert!(matches!(err, MoveSetError::Multiple { factor: 3, .. }));
    }

    #[test]
    fn interval_is_a_path() {
        let fg = FiberGraph::build(&LatticePolytope::interval(0, 5), &reps(1, &[[1]]), &Limits::default()).unwrap();
        assert!(crate::graph::is_isomorphic(&fg.graph, &Graph::path(6)).is_some());
    }

    #[test]
    fn interval_with_differences() {
        let fg = FiberGraph::build(&LatticePolytope::interval(1, 10), &reps(1, &[[3], [7]]), &Limits::default()).unwrap();
        assert_eq!(fg.graph, Graph::difference(10, &[3, 7]));
    }

    #[test]
    fn minimality() {
        let l = Limits::default();
        assert!(is_minimal(&LatticePolytope::interval(0, 3), &reps(1, &[[1]]), &l).unwrap().minimal);
        let r = is_minimal(&LatticePolytope::interval(0, 2), &reps(1, &[[2], [3]]), &l).unwrap();
        assert_eq!(r.unused, [Point::from([3])]);
        assert!(MoveSet::from_representatives(1, [Point::from([1]), Point::from([3])]).is_err());
        let sq = LatticePolytope::unit_cube(2);
        assert!(is_minimal(&sq, &reps(2, &[[1, 0], [0, 1], [1, 1], [1, -1]]), &l).unwrap().minimal);
    }

    #[test]
    fn markov_bases() {
        let l = Limits::default();
        assert!(is_markov_basis(&LatticePolytope::interval(0, 7), &reps(1, &[[1]]), &l).unwrap());
        assert!(!is_markov_basis(&LatticePolytope::interval(0, 3), &reps(1, &[[2]]), &l).unwrap());
    }

    #[test]
    fn minimum_markov_sizes() {
        let l = Limits::default();
        assert_eq!(min_markov_basis_size(&LatticePolytope::interval(0, 5), 10, &l).unwrap(), Some(2));
        assert_eq!(min_markov_basis_size(&LatticePolytope::unit_cube(2), 10, &l).unwrap(), Some(4));
        assert_eq!(min_markov_basis_size(&LatticePolytope::unit_cube(2), 2, &l).unwrap(), None);
        assert_eq!(min_markov_basis_size(&LatticePolytope::from_coords(&[[4, 4]]).unwrap(), 0, &l).unwrap(), Some(0));
    }

    #[test]
    fn bipartite_criterion() {
        let l = Limits::default();
        let r = check_bipartite_criterion(&LatticePolytope::interval(0, 4), &reps(1, &[[1]]), &l).unwrap();
        assert!(r.applies && r.bipartite);
        let r = check_bipartite_criterion(&LatticePolytope::unit_cube(2), &reps(2, &[[1, 0], [0, 1]]), &l).unwrap();
        assert!(r.applies && r.bipartite);
        let r = check_bipartite_criterion(&LatticePolytope::interval(1, 8), &reps(1, &[[3], [5]]), &l).unwrap();
        assert!(!r.applies && r.bipartite);
    }
}
