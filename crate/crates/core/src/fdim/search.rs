use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::embed::{Embedding, Method};
use crate::error::{Error, Result};
use crate::fiber::MoveSet;
use crate::graph::{is_isomorphic, Graph};
use crate::lattice::{is_normal_point_set, LatticePolytope};
use crate::limits::Limits;
use crate::point::Point;

/// Outcome of [`fdim_exact_search`].
#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found(Embedding),
    /// No realization with all points in `[0, box_side]^d`. This says
    /// nothing about larger boxes.
    NoneInBox { box_side: i64 },
    BudgetExceeded,
}

/// Looks for a full-dimensional realization of `g` in dimension `d` whose
/// lattice points fit in `[0, box_side]^d`.
///
/// Candidate point sets are enumerated up to translation (every coordinate
/// attains 0) in increasing lexicographic order. For each normal,
/// full-dimensional set, the pairs of points are grouped by difference up to
/// sign; a fiber graph on the set is a union of such groups, so the search
/// picks groups until the edge count matches and then tests isomorphism.
pub fn fdim_exact_search(g: &Graph, d: usize, box_side: i64, limits: &Limits) -> SearchOutcome {
    match search(g, d, box_side, limits) {
        Ok(Some(e)) => SearchOutcome::Found(e),
        Ok(None) => SearchOutcome::NoneInBox { box_side },
        Err(_) => SearchOutcome::BudgetExceeded,
    }
}

fn search(g: &Graph, d: usize, box_side: i64, limits: &Limits) -> Result<Option<Embedding>> {
    let n = g.node_count();
    if n == 0 || box_side < 0 {
        return Ok(None);
    }
    let side = box_side as u64 + 1;
    let cells = side.checked_pow(d as u32).filter(|&c| c <= limits.max_box_volume).ok_or(Error::CapExceeded {
        what: "search box volume",
        value: side.saturating_pow(d as u32),
        cap: limits.max_box_volume,
    })?;
    let grid: Vec<Point> = (0..cells)
        .map(|mut c| {
            let mut x = vec![0i64; d];
            for xi in x.iter_mut().rev() {
                *xi = (c % side) as i64;
                c /= side;
            }
            Point(x)
        })
        .collect();
    let mut s = SetSearch { g, d, grid: &grid, limits, chosen: Vec::new(), spent: 0 };
    s.choose(0)
}

struct SetSearch<'a> {
    g: &'a Graph,
    d: usize,
    grid: &'a [Point],
    limits: &'a Limits,
    chosen: Vec<usize>,
    spent: u64,
}

impl SetSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        self.spent += 1;
        if self.spent > self.limits.search_budget {
            return Err(Error::CapExceeded { what: "exact search nodes", value: self.spent, cap: self.limits.search_budget });
        }
        Ok(())
    }

    fn choose(&mut self, start: usize) -> Result<Option<Embedding>> {
        self.tick()?;
        let n = self.g.node_count();
        if self.chosen.len() == n {
            return self.try_set();
        }
        for k in start..self.grid.len() {
            if self.grid.len() - k < n - self.chosen.len() {
                break;
            }
            if self.chosen.is_empty() && self.d > 0 && self.grid[k][0] != 0 {
                break;
            }
            if !self.segments_closed(k) {
                continue;
            }
            self.chosen.push(k);
            let found = self.choose(k + 1)?;
            self.chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    /// Lattice points inside a segment from a chosen point to `grid[k]` come
    /// before `grid[k]` in lex order, so they must already be chosen or the
    /// set can never be normal.
    fn segments_closed(&self, k: usize) -> bool {
        let p = &self.grid[k];
        self.chosen.iter().all(|&i| {
            let diff = p - &self.grid[i];
            let g = diff.0.iter().fold(0i64, |g, c| g.gcd(c));
            (1..g).all(|t| {
                let w = Point(self.grid[i].0.iter().zip(&diff.0).map(|(a, c)| a + c / g * t).collect());
                self.chosen.iter().any(|&j| self.grid[j] == w)
            })
        })
    }

    fn try_set(&mut self) -> Result<Option<Embedding>> {
        let points: Vec<Point> = self.chosen.iter().map(|&i| self.grid[i].clone()).collect();
        if !(0..self.d).all(|j| points.iter().any(|x| x[j] == 0)) {
            return Ok(None);
        }
        let polytope = LatticePolytope::new(self.d, points.clone())?;
        if !polytope.is_full_dimensional() || !is_normal_point_set(&points, self.limits)? {
            return Ok(None);
        }
        let mut groups: BTreeMap<Point, Vec<(usize, usize)>> = BTreeMap::new();
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                groups.entry((&points[j] - &points[i]).canonical_sign()).or_default().push((i, j));
            }
        }
        // Short moves first, so the simplest realization is found first.
        let mut groups: Vec<(Point, Vec<(usize, usize)>)> = groups.into_iter().collect();
        groups.sort_by_key(|(m, _)| (m.0.iter().map(|c| c.unsigned_abs()).sum::<u64>(), m.clone()));
        let mut picked = Vec::new();
        let target = self.g.edge_count();
        let degrees = self.g.degree_sequence();
        let mut found = None;
        self.pick(&groups, 0, target, &degrees, &mut picked, &points, &polytope, &mut found)?;
        Ok(found)
    }

    #[allow(clippy::too_many_arguments)]
    fn pick(
        &mut self,
        groups: &[(Point, Vec<(usize, usize)>)],
        start: usize,
        remaining: usize,
        degrees: &[usize],
        picked: &mut Vec<usize>,
        points: &[Point],
        polytope: &LatticePolytope,
        found: &mut Option<Embedding>,
    ) -> Result<()> {
        self.tick()?;
        if remaining == 0 {
            let edges = picked.iter().flat_map(|&k| groups[k].1.iter().copied());
            let h = Graph::new(points.len(), edges)?;
            if h.degree_sequence() != degrees {
                return Ok(());
            }
            if let Some(m) = is_isomorphic(self.g, &h) {
                let moves = MoveSet::from_representatives(self.d, picked.iter().map(|&k| groups[k].0.clone()))?;
                let vertex_map = m.image.iter().map(|&t| points[t].clone()).collect();
                *found = Some(Embedding::new(self.g.clone(), polytope.clone(), moves, vertex_map, Method::Search, self.limits)?);
            }
            return Ok(());
        }
        for k in start..groups.len() {
            let size = groups[k].1.len();
            if size > remaining {
                continue;
            }
            let m = &groups[k].0;
            if picked.iter().any(|&q| m.multiple_of(&groups[q].0).is_some() || groups[q].0.multiple_of(m).is_some()) {
                continue;
            }
            picked.push(k);
            self.pick(groups, k + 1, remaining - size, degrees, picked, points, polytope, found)?;
            picked.pop();
            if found.is_some() {
                return Ok(());
            }
        }
        Ok(())
    }
}
