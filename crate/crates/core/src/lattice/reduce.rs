use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::linalg::{hermite_normal_form, integer_kernel, lll_reduce, IntMatrix};
use super::polytope::{bounding_box, LatticePolytope};
use crate::error::{Error, Result};
use crate::fiber::{FiberGraph, MoveSet};
use crate::graph::is_isomorphic;
use crate::limits::Limits;
use crate::point::Point;

/// `x ↦ matrix · x + offset`, from `Z^source_dim` to `Z^target_dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLatticeMap {
    pub matrix: Vec<Vec<i64>>,
    pub offset: Vec<i64>,
    source_dim: usize,
}

impl AffineLatticeMap {
    pub fn new(matrix: Vec<Vec<i64>>, offset: Vec<i64>, source_dim: usize) -> Result<Self> {
        if matrix.len() != offset.len() {
            return Err(Error::DimensionMismatch { expected: matrix.len(), found: offset.len() });
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != source_dim) {
            return Err(Error::DimensionMismatch { expected: source_dim, found: row.len() });
        }
        Ok(AffineLatticeMap { matrix, offset, source_dim })
    }

    pub fn identity(dim: usize) -> Self {
        let matrix = (0..dim).map(|i| Point::unit(dim, i).0).collect();
        AffineLatticeMap { matrix, offset: vec![0; dim], source_dim: dim }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.offset.len()
    }

    fn combine(&self, x: &Point, with_offset: bool) -> Result<Point> {
        if x.dim() != self.source_dim {
            return Err(Error::DimensionMismatch { expected: self.source_dim, found: x.dim() });
        }
        self.matrix
            .iter()
            .zip(&self.offset)
            .map(|(row, &b)| {
                let v = x.dot(row) + if with_offset { b as i128 } else { 0 };
                i64::try_from(v).map_err(|_| Error::Overflow("affine map"))
            })
            .collect::<Result<Vec<_>>>()
            .map(Point)
    }

    pub fn apply(&self, x: &Point) -> Result<Point> {
        self.combine(x, true)
    }

    /// The linear part only; used for moves.
    pub fn apply_linear(&self, x: &Point) -> Result<Point> {
        self.combine(x, false)
    }

    fn matrix_big(&self) -> IntMatrix {
        IntMatrix::from_rows_with_cols(&self.matrix, self.source_dim)
    }

    /// True when `other ∘ self` is the identity on `Z^source_dim`.
    pub fn is_left_inverted_by(&self, other: &AffineLatticeMap) -> bool {
        if other.source_dim != self.target_dim() || other.target_dim() != self.source_dim {
            return false;
        }
        let linear = other.matrix_big().mul(&self.matrix_big());
        if linear != IntMatrix::identity(self.source_dim) {
            return false;
        }
        other.apply(&Point(self.offset.clone())).is_ok_and(|p| p.is_zero())
    }
}

/// A full-dimensional model of a lattice polytope.
///
/// `map` sends `polytope ∩ Z^k` bijectively onto the original lattice points
/// and `left_inverse` undoes it on the affine lattice they live in.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub polytope: LatticePolytope,
    pub map: AffineLatticeMap,
    pub left_inverse: AffineLatticeMap,
    /// Integer equations `a · x = b` cutting out the affine hull of the
    /// original polytope.
    pub equations: Vec<(Vec<i64>, i64)>,
}

fn to_i64(v: &BigInt, what: &'static str) -> Result<i64> {
    v.to_i64().ok_or(Error::Overflow(what))
}

fn big(p: &Point) -> Vec<BigInt> {
    p.0.iter().map(|&x| BigInt::from(x)).collect()
}

/// Reduces a lattice polytope to a full-dimensional one.
///
/// The polytope is translated into the nonnegative orthant, its affine hull
/// is written as `E x = f` with integer `E` of full row rank, and the Hermite
/// normal form `E = (H, 0) C` parametrizes the integer solutions as
/// `x = C^{-1} (H^{-1} f, y)` for `y ∈ Z^k`. The free block of `C^{-1}` is
/// LLL-reduced (a unimodular change of coordinates) to keep the image small,
/// and the result is translated so every coordinate has minimum zero.
pub fn reduce_polytope(p: &LatticePolytope) -> Result<Reduction> {
    let m = p.ambient_dim();
    let k = p.dimension();
    if k == m {
        return Ok(Reduction {
            polytope: p.clone(),
            map: AffineLatticeMap::identity(m),
            left_inverse: AffineLatticeMap::identity(m),
            equations: Vec::new(),
        });
    }
    let (t, _) = bounding_box(p.generators(), m);
    let t = Point(t);
    let shifted: Vec<Point> = p.generators().iter().map(|g| g - &t).collect();
    let diffs: Vec<Vec<i64>> = shifted[1..].iter().map(|g| (g - &shifted[0]).0).collect();
    let normals = integer_kernel(&IntMatrix::from_rows_with_cols(&diffs, m))?.transpose();
    debug_assert_eq!(normals.rows(), m - k);

    let f = normals.mul_vec(&big(&shifted[0]));
    let hnf = hermite_normal_form(&normals)?;
    let w1 = hnf
        .solve_h(&f)
        .ok_or_else(|| Error::Verification("affine hull has no integral particular solution".into()))?;
    let c1 = hnf.c_inv.column_block(0..m - k);
    let c2 = hnf.c_inv.column_block(m - k..m);
    let z0 = c1.mul_vec(&w1);
    let (basis, t_inv) = lll_reduce(&c2);
    let left = t_inv.mul(&hnf.c.row_block(m - k..m));

    let images: Vec<Vec<BigInt>> = shifted.iter().map(|g| left.mul_vec(&big(g))).collect();
    let mut s = vec![BigInt::zero(); k];
    for (i, si) in s.iter_mut().enumerate() {
        *si = images.iter().map(|y| y[i].clone()).min().unwrap_or_default();
    }
    let reduced: Vec<Point> = images
        .iter()
        .map(|y| y.iter().zip(&s).map(|(a, b)| to_i64(&(a - b), "reduced point")).collect::<Result<Vec<_>>>().map(Point))
        .collect::<Result<_>>()?;

    let bs = basis.mul_vec(&s);
    let forward_offset: Vec<i64> = (0..m)
        .map(|i| to_i64(&(BigInt::from(t[i]) + &z0[i] + &bs[i]), "map offset"))
        .collect::<Result<_>>()?;
    let lt = left.mul_vec(&big(&t));
    let back_offset: Vec<i64> = (0..k).map(|i| to_i64(&(-&lt[i] - &s[i]), "inverse offset")).collect::<Result<_>>()?;

    let map = AffineLatticeMap::new(basis.to_i64_rows()?, forward_offset, k)?;
    let left_inverse = AffineLatticeMap::new(left.to_i64_rows()?, back_offset, m)?;
    if !map.is_left_inverted_by(&left_inverse) {
        return Err(Error::Verification("reduction map has no integral left inverse".into()));
    }
    for g in p.generators() {
        if &map.apply(&left_inverse.apply(g)?)? != g {
            return Err(Error::Verification(format!("generator {g} is not on the reduction lattice")));
        }
    }

    let et = normals.mul_vec(&big(&t));
    let equations = normals
        .to_i64_rows()?
        .into_iter()
        .zip(f.iter().zip(&et))
        .map(|(row, (fi, ei))| Ok((row, to_i64(&(fi + ei), "equation offset")?)))
        .collect::<Result<Vec<_>>>()?;

    let polytope = LatticePolytope::new(k, reduced)?;
    debug_assert!(polytope.is_full_dimensional());
    Ok(Reduction { polytope, map, left_inverse, equations })
}

/// Output of [`full_dim_reduce`].
#[derive(Debug, Clone)]
pub struct FullDimReduction {
    pub polytope: LatticePolytope,
    pub moves: MoveSet,
    /// `Z^k → Z^m`, sends the reduced lattice points onto the original ones.
    pub map: AffineLatticeMap,
    pub left_inverse: AffineLatticeMap,
}

/// Rewrites `F(p, moves)` as a fiber graph of a full-dimensional polytope.
///
/// Moves outside the direction lattice of `p` can never join two of its
/// lattice points and are dropped; every other move is pulled back through
/// the linear part of the left inverse. An already full-dimensional input is
/// returned unchanged with the identity map.
pub fn full_dim_reduce(p: &LatticePolytope, moves: &MoveSet) -> Result<FullDimReduction> {
    if moves.ambient_dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: p.ambient_dim(), found: moves.ambient_dim() });
    }
    let r = reduce_polytope(p)?;
    let k = r.polytope.ambient_dim();
    let mut pulled = Vec::new();
    for m in moves.positive() {
        let y = r.left_inverse.apply_linear(m)?;
        if &r.map.apply_linear(&y)? == m {
            pulled.push(y);
        }
    }
    let moves = MoveSet::from_representatives(k, pulled)?;
    Ok(FullDimReduction { polytope: r.polytope, moves, map: r.map, left_inverse: r.left_inverse })
}

impl FullDimReduction {
    /// Builds both fiber graphs and checks that `map` is an isomorphism
    /// between them, and that a generic isomorphism search agrees.
    pub fn certify(&self, original: &LatticePolytope, moves: &MoveSet, limits: &Limits) -> Result<()> {
        if self.polytope.dimension() != self.polytope.ambient_dim() {
            return Err(Error::Verification("reduced polytope is not full-dimensional".into()));
        }
        let before = FiberGraph::build(original, moves, limits)?;
        let after = FiberGraph::build(&self.polytope, &self.moves, limits)?;
        let n = after.points.len();
        if n != before.points.len() {
            return Err(Error::SizeMismatch { expected: before.points.len(), found: n });
        }
        let mut image = Vec::with_capacity(n);
        for y in &after.points {
            let x = self.map.apply(y)?;
            let idx = before.index_of(&x).ok_or_else(|| Error::Verification(format!("{y} maps outside the polytope")))?;
            image.push(idx);
        }
        let explicit = crate::graph::NodeMapping { image };
        if !explicit.is_isomorphism(&after.graph, &before.graph) {
            return Err(Error::Verification("reduction map does not preserve edges".into()));
        }
        if is_isomorphic(&after.graph, &before.graph).is_none() {
            return Err(Error::Verification("fiber graphs are not isomorphic".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_dimensional_input_is_untouched() {
        let p = LatticePolytope::from_coords(&[[0, 0], [2, 0], [0, 1]]).unwrap();
        let m = MoveSet::from_representatives(2, [Point::from([1, 0]), Point::from([0, 1])]).unwrap();
        let r = full_dim_reduce(&p, &m).unwrap();
        assert_eq!(r.polytope, p);
        assert_eq!(r.moves, m);
        assert_eq!(r.map, AffineLatticeMap::identity(2));
    }

    #[test]
    fn diagonal_segment_becomes_interval() {
        let p = LatticePolytope::from_coords(&[[0, 0], [2, 2]]).unwrap();
        let m = MoveSet::from_representatives(2, [Point::from([1, 1])]).unwrap();
        let r = full_dim_reduce(&p, &m).unwrap();
        assert_eq!(r.polytope, LatticePolytope::interval(0, 2));
        assert_eq!(r.moves, MoveSet::from_representatives(1, [Point::from([1])]).unwrap());
        r.certify(&p, &m, &Limits::default()).unwrap();
    }

    #[test]
    fn simplex_of_triangle_reduces_to_plane() {
        let p = LatticePolytope::standard_simplex(3);
        let reps = [Point::from([1, -1, 0]), Point::from([1, 0, -1]), Point::from([0, 1, -1])];
        let m = MoveSet::from_representatives(3, reps).unwrap();
        let r = full_dim_reduce(&p, &m).unwrap();
        assert_eq!(r.polytope.ambient_dim(), 2);
        let fg = FiberGraph::build(&r.polytope, &r.moves, &Limits::default()).unwrap();
        assert!(fg.graph.is_complete() && fg.graph.node_count() == 3);
        r.certify(&p, &m, &Limits::default()).unwrap();
    }

    #[test]
    fn moves_off_the_affine_hull_are_dropped() {
        let p = LatticePolytope::from_coords(&[[0, 0, 5], [3, 0, 5]]).unwrap();
        let m = MoveSet::from_representatives(3, [Point::from([1, 0, 0]), Point::from([0, 0, 1])]).unwrap();
        let r = full_dim_reduce(&p, &m).unwrap();
        assert_eq!(r.moves.len(), 2);
        r.certify(&p, &m, &Limits::default()).unwrap();
    }

    #[test]
    fn point_reduces_to_zero_dimensions() {
        let p = LatticePolytope::from_coords(&[[7, -3]]).unwrap();
        let r = reduce_polytope(&p).unwrap();
        assert_eq!(r.polytope.ambient_dim(), 0);
        assert_eq!(r.map.apply(&Point::zero(0)).unwrap(), Point::from([7, -3]));
    }
}
