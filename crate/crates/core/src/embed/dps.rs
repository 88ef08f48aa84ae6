use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_integer::Integer;

use super::{Embedding, Method};
use crate::error::{Error, Result};
use crate::fiber::MoveSet;
use crate::graph::Graph;
use crate::lattice::{is_normal_point_set, LatticePolytope};
use crate::limits::Limits;
use crate::point::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairSumCheck {
    pub normal: bool,
    /// The sums `u + v` over unordered pairs, `u = v` allowed, are pairwise
    /// distinct.
    pub sums_distinct: bool,
    pub dps: bool,
}

fn sums_distinct(points: &[Point]) -> bool {
    let mut seen = BTreeSet::new();
    points.iter().enumerate().all(|(i, u)| points[i..].iter().all(|v| seen.insert(u + v)))
}

pub fn is_distinct_pair_sum(points: &[Point], limits: &Limits) -> Result<PairSumCheck> {
    let sums_distinct = sums_distinct(points);
    let normal = !points.is_empty() && is_normal_point_set(points, limits)?;
    Ok(PairSumCheck { normal, sums_distinct, dps: normal && sums_distinct })
}

/// A normal point set whose pair sums are all distinct. Any graph on as
/// many nodes embeds on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpsPointSet {
    points: Vec<Point>,
    pair_sum_count: usize,
}

impl DpsPointSet {
    pub fn new(points: Vec<Point>, limits: &Limits) -> Result<Self> {
        let mut points = points;
        points.sort();
        let check = is_distinct_pair_sum(&points, limits)?;
        if !check.dps {
            return Err(Error::Verification(alloc::format!(
                "not a distinct pair-sum set (normal: {}, sums distinct: {})",
                check.normal,
                check.sums_distinct
            )));
        }
        let n = points.len();
        Ok(DpsPointSet { points, pair_sum_count: n * (n + 1) / 2 })
    }

    /// The unit vectors of `Z^n`.
    pub fn simplex(n: usize, limits: &Limits) -> Result<Self> {
        Self::new((0..n).map(|i| Point::unit(n, i)).collect(), limits)
    }

    /// Sorted lexicographically.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn pair_sum_count(&self) -> usize {
        self.pair_sum_count
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }
}

/// Node `i` goes to the `i`-th point and each edge contributes the
/// difference of its endpoints as a move. Distinct pair sums mean no two
/// pairs share a difference, so no spurious edges appear.
pub fn embed_dps(g: &Graph, dps: &DpsPointSet, limits: &Limits) -> Result<Embedding> {
    let n = g.node_count();
    if dps.points.len() != n {
        return Err(Error::SizeMismatch { expected: n, found: dps.points.len() });
    }
    let vertex_map = dps.points.clone();
    let d = dps.dim();
    let moves = MoveSet::from_representatives(d, g.edges().map(|(u, v)| &vertex_map[v] - &vertex_map[u]))?;
    let polytope = LatticePolytope::new(d, vertex_map.clone())?;
    Embedding::reduced(g.clone(), polytope, moves, vertex_map, Method::Dps, limits)
}

/// Exhaustive search for an `n`-point DPS set in `[0, box_side]^d`.
///
/// Sets are enumerated in increasing lexicographic order and up to
/// translation (every coordinate attains 0), with pair sums checked as
/// points are added. `Ok(None)` means no such set exists in the box; a
/// search that outgrows `limits.search_budget` fails with a cap error.
pub fn find_dps_point_set(n: usize, d: usize, box_side: i64, limits: &Limits) -> Result<Option<DpsPointSet>> {
    if n == 0 || box_side < 0 {
        return Err(Error::Unsupported("the search needs n >= 1 and a nonnegative box".into()));
    }
    let side = box_side as u64 + 1;
    let cells = side.checked_pow(d as u32).filter(|&c| c <= limits.max_box_volume).ok_or(Error::CapExceeded {
        what: "search box volume",
        value: side.saturating_pow(d as u32),
        cap: limits.max_box_volume,
    })?;
    let grid: Vec<Point> = (0..cells)
        .map(|mut c| {
            let mut x = alloc::vec![0i64; d];
            for xi in x.iter_mut().rev() {
                *xi = (c % side) as i64;
                c /= side;
            }
            Point(x)
        })
        .collect();
    let mut s = DpsSearch { grid: &grid, n, limits, chosen: Vec::new(), sums: BTreeSet::new(), spent: 0 };
    // The lexicographically smallest point has first coordinate 0.
    for (first, p) in grid.iter().enumerate() {
        if d > 0 && p[0] != 0 {
            break;
        }
        if let Some(found) = s.extend_from(first)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

struct DpsSearch<'a> {
    grid: &'a [Point],
    n: usize,
    limits: &'a Limits,
    chosen: Vec<usize>,
    sums: BTreeSet<Point>,
    spent: u64,
}

impl DpsSearch<'_> {
    fn extend_from(&mut self, k: usize) -> Result<Option<DpsPointSet>> {
        self.spent += 1;
        if self.spent > self.limits.search_budget {
            return Err(Error::CapExceeded { what: "point-set search nodes", value: self.spent, cap: self.limits.search_budget });
        }
        let p = &self.grid[k];
        // A non-primitive difference puts lattice points strictly inside the
        // segment; normality would force them in, and equally spaced points
        // on a line repeat a pair sum.
        if self.chosen.iter().any(|&i| (&self.grid[i] - p).0.iter().fold(0i64, |g, c| g.gcd(c)) != 1) {
            return Ok(None);
        }
        let new_sums: Vec<Point> = self.chosen.iter().map(|&i| &self.grid[i] + p).chain([p + p]).collect();
        let fresh = new_sums.iter().all(|s| !self.sums.contains(s)) && new_sums.iter().collect::<BTreeSet<_>>().len() == new_sums.len();
        if !fresh {
            return Ok(None);
        }
        self.chosen.push(k);
        for s in &new_sums {
            self.sums.insert(s.clone());
        }
        let result = if self.chosen.len() == self.n {
            self.accept()?
        } else {
            let mut found = None;
            for next in k + 1..self.grid.len() {
                if self.grid.len() - next < self.n - self.chosen.len() {
                    break;
                }
                found = self.extend_from(next)?;
                if found.is_some() {
                    break;
                }
            }
            found
        };
        for s in &new_sums {
            self.sums.remove(s);
        }
        self.chosen.pop();
        Ok(result)
    }

    fn accept(&self) -> Result<Option<DpsPointSet>> {
        let points: Vec<Point> = self.chosen.iter().map(|&i| self.grid[i].clone()).collect();
        let d = points[0].dim();
        let touches_zero = (0..d).all(|j| points.iter().any(|x| x[j] == 0));
        if !touches_zero || !is_normal_point_set(&points, self.limits)? {
            return Ok(None);
        }
        DpsPointSet::new(points, self.limits).map(Some)
    }
}
