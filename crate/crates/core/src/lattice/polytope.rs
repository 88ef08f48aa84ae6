use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::race::OnceBox;

use super::linalg::IntMatrix;
use super::membership::in_convex_hull;
use super::reduce::reduce_polytope;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::point::Point;

/// The half-space `normal · x <= offset`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    pub fn contains(&self, x: &Point) -> bool {
        x.dot(&self.normal) <= self.offset as i128
    }

    pub fn is_tight(&self, x: &Point) -> bool {
        x.dot(&self.normal) == self.offset as i128
    }
}

/// Integer H-representation: `equations` pin down the affine hull
/// (`a · x = b`), `facets` are the irredundant inequalities within it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    pub equations: Vec<(Vec<i64>, i64)>,
    pub facets: Vec<Facet>,
}

impl HRep {
    pub fn contains(&self, x: &Point) -> bool {
        self.equations.iter().all(|(a, b)| x.dot(a) == *b as i128) && self.facets.iter().all(|f| f.contains(x))
    }
}

/// The convex hull of finitely many integer points.
///
/// Generators are kept sorted and deduplicated; they need not all be
/// vertices. The H-representation is derived on first use and cached.
#[derive(Debug, Clone)]
pub struct LatticePolytope {
    ambient_dim: usize,
    generators: Vec<Point>,
    hrep: OnceBox<HRep>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.generators == other.generators
    }
}

impl Eq for LatticePolytope {}

impl LatticePolytope {
    pub fn new(ambient_dim: usize, generators: impl IntoIterator<Item = Point>) -> Result<Self> {
        let set: BTreeSet<Point> = generators.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        if let Some(bad) = set.iter().find(|g| g.dim() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, found: bad.dim() });
        }
        Ok(LatticePolytope { ambient_dim, generators: set.into_iter().collect(), hrep: OnceBox::new() })
    }

    /// Convenience for generators given as coordinate arrays.
    pub fn from_coords<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.first().map_or(0, |r| r.as_ref().len());
        Self::new(dim, rows.iter().map(|r| Point(r.as_ref().to_vec())))
    }

    /// The segment `[lo, hi]` in `Q^1`.
    pub fn interval(lo: i64, hi: i64) -> Self {
        Self::new(1, [Point::from([lo]), Point::from([hi])]).unwrap()
    }

    /// `conv{e_1, ..., e_n}` in `Q^n`.
    pub fn standard_simplex(n: usize) -> Self {
        Self::new(n, (0..n).map(|i| Point::unit(n, i))).unwrap()
    }

    /// `{0,1}^d`
    pub fn unit_cube(d: usize) -> Self {
        let points = (0..1u64 << d).map(|mask| Point((0..d).map(|i| ((mask >> (d - 1 - i)) & 1) as i64).collect()));
        Self::new(d, points).unwrap()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Point] {
        &self.generators
    }

    /// Affine dimension: rank of `{g - g_0}`.
    pub fn dimension(&self) -> usize {
        let g0 = &self.generators[0];
        let diffs: Vec<Vec<i64>> = self.generators[1..].iter().map(|g| (g - g0).0).collect();
        if diffs.is_empty() {
            return 0;
        }
        IntMatrix::from_rows(&diffs).rank()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dimension() == self.ambient_dim
    }

    /// Exact membership through the barycentric feasibility system.
    pub fn contains_exact(&self, x: &Point) -> bool {
        x.dim() == self.ambient_dim && in_convex_hull(&self.generators, x)
    }

    /// Generators that are not in the hull of the remaining generators.
    pub fn vertices(&self) -> Vec<Point> {
        if self.generators.len() <= 2 {
            return self.generators.clone();
        }
        (0..self.generators.len())
            .filter(|&i| {
                let others: Vec<Point> =
                    self.generators.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
                !in_convex_hull(&others, &self.generators[i])
            })
            .map(|i| self.generators[i].clone())
            .collect()
    }

    /// Cached H-representation.
    pub fn hrep(&self, limits: &Limits) -> Result<&HRep> {
        self.hrep.get_or_try_init(|| self.compute_hrep(limits).map(Box::new))
    }

    /// The facet list of the cached H-representation.
    pub fn facets(&self, limits: &Limits) -> Result<&[Facet]> {
        Ok(&self.hrep(limits)?.facets)
    }

    fn compute_hrep(&self, limits: &Limits) -> Result<HRep> {
        if self.is_full_dimensional() {
            return Ok(HRep { equations: Vec::new(), facets: full_dimensional_facets(self, limits)? });
        }
        let reduction = reduce_polytope(self)?;
        let inner = reduction.polytope.hrep(limits)?;
        let back = &reduction.left_inverse;
        // a · (L x + l) <= c  becomes  (a L) · x <= c - a · l
        let mut facets: Vec<Facet> = inner
            .facets
            .iter()
            .map(|f| pull_back(&f.normal, f.offset, back))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .map(|(normal, offset)| Facet { normal, offset })
            .collect();
        facets.sort();
        Ok(HRep { equations: reduction.equations.clone(), facets })
    }

    /// Integer points of the polytope in lexicographic order.
    pub fn lattice_points(&self, limits: &Limits) -> Result<Vec<Point>> {
        if self.is_full_dimensional() {
            if self.is_unimodular_simplex() {
                return Ok(self.generators.clone());
            }
            return scan_box(self, limits);
        }
        let reduction = reduce_polytope(self)?;
        let mut points: Vec<Point> = reduction
            .polytope
            .lattice_points(limits)?
            .iter()
            .map(|y| reduction.map.apply(y))
            .collect::<Result<_>>()?;
        points.sort();
        Ok(points)
    }

    /// A full-dimensional simplex of normalized volume one. Its only lattice
    /// points are its vertices, so no box scan is needed.
    fn is_unimodular_simplex(&self) -> bool {
        if self.generators.len() != self.ambient_dim + 1 {
            return false;
        }
        let g0 = &self.generators[0];
        let diffs: Vec<Vec<i64>> = self.generators[1..].iter().map(|g| (g - g0).0).collect();
        IntMatrix::from_rows_with_cols(&diffs, self.ambient_dim).determinant().abs().is_one()
    }

    /// Number of integer points in the generators' bounding box.
    pub fn box_volume(&self) -> u64 {
        let (lo, hi) = bounding_box(&self.generators, self.ambient_dim);
        lo.iter().zip(&hi).fold(1u64, |acc, (l, h)| acc.saturating_mul((h - l + 1) as u64))
    }
}

fn pull_back(normal: &[i64], offset: i64, map: &super::AffineLatticeMap) -> Result<(Vec<i64>, i64)> {
    let source = map.source_dim();
    let mut a = vec![BigInt::zero(); source];
    let mut c = BigInt::from(offset);
    for (r, &nr) in normal.iter().enumerate() {
        let nr = BigInt::from(nr);
        for (j, aj) in a.iter_mut().enumerate() {
            *aj += &nr * map.matrix[r][j];
        }
        c -= &nr * map.offset[r];
    }
    let g = a.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let g = if g.is_zero() { BigInt::from(1) } else { g };
    // Integer points satisfy a·x <= c iff (a/g)·x <= floor(c/g).
    let c = c.div_floor(&g);
    let a: Vec<i64> = a.iter().map(|x| (x / &g).to_i64().ok_or(Error::Overflow("facet normal"))).collect::<Result<_>>()?;
    Ok((a, c.to_i64().ok_or(Error::Overflow("facet offset"))?))
}

pub(crate) fn bounding_box(points: &[Point], dim: usize) -> (Vec<i64>, Vec<i64>) {
    let mut lo = vec![i64::MAX; dim];
    let mut hi = vec![i64::MIN; dim];
    for p in points {
        for i in 0..dim {
            lo[i] = lo[i].min(p[i]);
            hi[i] = hi[i].max(p[i]);
        }
    }
    (lo, hi)
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Facets of a full-dimensional polytope: every hyperplane through `d`
/// affinely independent vertices that has all vertices on one side.
fn full_dimensional_facets(p: &LatticePolytope, limits: &Limits) -> Result<Vec<Facet>> {
    let d = p.ambient_dim;
    if d == 0 {
        return Ok(Vec::new());
    }
    let verts = p.vertices();
    let subsets = binomial(verts.len(), d);
    if subsets > limits.max_facet_subsets {
        return Err(Error::CapExceeded { what: "facet candidate subsets", value: subsets, cap: limits.max_facet_subsets });
    }
    let mut facets = BTreeSet::new();
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        if let Some(normal) = hyperplane_normal(&verts, &idx) {
            let base = verts[idx[0]].dot(&normal);
            let sides: Vec<i128> = verts.iter().map(|v| v.dot(&normal) - base).collect();
            let facet = if sides.iter().all(|&s| s <= 0) {
                Some((normal, base))
            } else if sides.iter().all(|&s| s >= 0) {
                Some((normal.iter().map(|x| -x).collect(), -base))
            } else {
                None
            };
            if let Some((normal, offset)) = facet {
                let offset = i64::try_from(offset).map_err(|_| Error::Overflow("facet offset"))?;
                facets.insert(Facet { normal, offset });
            }
        }
        // next combination
        let Some(i) = (0..d).rev().find(|&i| idx[i] < verts.len() - d + i) else {
            break;
        };
        idx[i] += 1;
        for j in i + 1..d {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(facets.into_iter().collect())
}

/// Primitive normal of the hyperplane through `verts[idx]`, or `None` if the
/// points are affinely dependent.
fn hyperplane_normal(verts: &[Point], idx: &[usize]) -> Option<Vec<i64>> {
    let d = verts[0].dim();
    let base = &verts[idx[0]];
    let rows: Vec<Vec<i64>> = idx[1..].iter().map(|&i| (&verts[i] - base).0).collect();
    let m = IntMatrix::from_rows_with_cols(&rows, d);
    let mut normal = Vec::with_capacity(d);
    for j in 0..d {
        let mut minor = IntMatrix::zeros(d - 1, d - 1);
        for r in 0..d - 1 {
            let mut cc = 0;
            for c in 0..d {
                if c != j {
                    minor[(r, cc)] = m[(r, c)].clone();
                    cc += 1;
                }
            }
        }
        let det = minor.determinant();
        normal.push(if j % 2 == 0 { det } else { -det });
    }
    let g = normal.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return None;
    }
    normal.iter().map(|x| (x / &g).to_i64()).collect()
}

fn scan_box(p: &LatticePolytope, limits: &Limits) -> Result<Vec<Point>> {
    let d = p.ambient_dim;
    if d > limits.max_dim {
        return Err(Error::CapExceeded { what: "scan dimension", value: d as u64, cap: limits.max_dim as u64 });
    }
    let volume = p.box_volume();
    if volume > limits.max_box_volume {
        return Err(Error::CapExceeded { what: "bounding box volume", value: volume, cap: limits.max_box_volume });
    }
    let facets = p.facets(limits)?;
    let (lo, hi) = bounding_box(&p.generators, d);
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        let x = Point(cur.clone());
        if facets.iter().all(|f| f.contains(&x)) {
            out.push(x);
        }
        // odometer, last coordinate fastest so output is lexicographic
        let Some(i) = (0..d).rev().find(|&i| cur[i] < hi[i]) else {
            break;
        };
        cur[i] += 1;
        cur[i + 1..].copy_from_slice(&lo[i + 1..]);
    }
    Ok(out)
}

/// True iff `conv(points) ∩ Z^d = points`.
pub fn is_normal_point_set(points: &[Point], limits: &Limits) -> Result<bool> {
    let dim = points.first().map_or(0, Point::dim);
    let p = LatticePolytope::new(dim, points.iter().cloned())?;
    let inside = p.lattice_points(limits)?;
    Ok(inside.len() == p.generators().len())
}

/// True when `x` lies outside at least one of `facets`.
pub fn violates_some_facet(facets: &[Facet], x: &Point) -> bool {
    facets.iter().any(|f| !f.contains(x))
}
