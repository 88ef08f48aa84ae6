//! Exact convex-hull membership.
//!
//! `x ∈ conv(V)` iff the system `λ ≥ 0, Σλ = 1, Vλ = x` is feasible. The
//! system is decided by a phase-one simplex over rationals with Bland's rule,
//! so the answer is exact and the method always terminates.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::point::Point;

/// Barycentric coordinates of `x` with respect to `vertices`, if `x` lies in
/// their convex hull.
pub fn barycentric(vertices: &[Point], x: &Point) -> Option<Vec<BigRational>> {
    let n = vertices.len();
    if n == 0 {
        return None;
    }
    let d = x.dim();
    let m = d + 1;
    let width = n + m + 1;
    let rhs_col = n + m;
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));

    // Rows: one per coordinate, then the affine row.
    let mut tableau: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = alloc::vec![BigRational::zero(); width];
        for (j, v) in vertices.iter().enumerate() {
            row[j] = if i < d { q(v[i]) } else { q(1) };
        }
        row[n + i] = q(1);
        row[rhs_col] = if i < d { q(x[i]) } else { q(1) };
        if row[rhs_col].is_negative() {
            for (j, entry) in row.iter_mut().enumerate() {
                if j != n + i {
                    *entry = -entry.clone();
                }
            }
        }
        tableau.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs of the phase-one objective: minimize the artificial sum.
    let mut cost = alloc::vec![BigRational::zero(); width];
    for row in &tableau {
        for j in 0..width {
            if j < n || j == rhs_col {
                cost[j] -= &row[j];
            }
        }
    }

    while let Some(enter) = (0..rhs_col).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in tableau.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[rhs_col] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase one is bounded below by zero, so a leaving row always exists.
        let (pivot_row, _) = leave.expect("phase-one objective is bounded");
        let pivot = tableau[pivot_row][enter].clone();
        for entry in tableau[pivot_row].iter_mut() {
            *entry /= &pivot;
        }
        let prow = tableau[pivot_row].clone();
        for (i, row) in tableau.iter_mut().enumerate() {
            if i == pivot_row || row[enter].is_zero() {
                continue;
            }
            let factor = row[enter].clone();
            for (entry, p) in row.iter_mut().zip(&prow) {
                *entry -= &factor * p;
            }
        }
        let factor = cost[enter].clone();
        for (entry, p) in cost.iter_mut().zip(&prow) {
            *entry -= &factor * p;
        }
        basis[pivot_row] = enter;
    }

    if !cost[rhs_col].is_zero() {
        return None;
    }
    let mut lambda = alloc::vec![BigRational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            lambda[b] = tableau[i][rhs_col].clone();
        }
    }
    Some(lambda)
}

pub fn in_convex_hull(vertices: &[Point], x: &Point) -> bool {
    barycentric(vertices, x).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_traits::One;

    fn pts(list: &[[i64; 2]]) -> Vec<Point> {
        list.iter().map(|p| Point::from(*p)).collect()
    }

    #[test]
    fn triangle_membership() {
        let tri = pts(&[[-1, 0], [3, -1], [2, 2]]);
        assert!(in_convex_hull(&tri, &Point::from([1, 1])));
        assert!(in_convex_hull(&tri, &Point::from([3, -1])));
        assert!(!in_convex_hull(&tri, &Point::from([0, 1])));
        assert!(!in_convex_hull(&tri, &Point::from([3, 0])));
    }

    #[test]
    fn certificate_reconstructs_point() {
        let square = pts(&[[0, 0], [2, 0], [0, 2], [2, 2]]);
        let x = Point::from([1, 1]);
        let lambda = barycentric(&square, &x).unwrap();
        let total = lambda.iter().fold(BigRational::zero(), |a, b| a + b);
        assert!(total.is_one());
        for i in 0..2 {
            let coord = square.iter().zip(&lambda).fold(BigRational::zero(), |a, (v, l)| {
                a + l * BigRational::from_integer(BigInt::from(v[i]))
            });
            assert_eq!(coord, BigRational::from_integer(BigInt::from(1)));
        }
    }

    #[test]
    fn degenerate_segment_in_plane() {
        let seg = vec![Point::from([0, 0]), Point::from([2, 2])];
        assert!(in_convex_hull(&seg, &Point::from([1, 1])));
        assert!(!in_convex_hull(&seg, &Point::from([1, 0])));
        assert!(!in_convex_hull(&seg, &Point::from([3, 3])));
    }
}
