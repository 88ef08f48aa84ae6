use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::{hermite_normal_form, solve_lower_triangular, IntMatrix};
use crate::error::{Error, Result};
use crate::point::Point;

/// A full-rank sublattice `L ⊂ Z^d`, spanned by the columns of `basis`.
#[derive(Debug, Clone)]
pub struct Sublattice {
    basis: IntMatrix,
    /// Lower-triangular generator matrix of the same lattice.
    hnf: IntMatrix,
}

impl Sublattice {
    /// `vectors` are the basis vectors; there must be exactly `d` of them,
    /// each of dimension `d`, and they must be independent.
    pub fn new(vectors: &[Point]) -> Result<Self> {
        let d = vectors.len();
        if let Some(v) = vectors.iter().find(|v| v.dim() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: v.dim() });
        }
        let rows: Vec<Vec<i64>> = vectors.iter().map(|v| v.0.clone()).collect();
        let basis = IntMatrix::from_rows_with_cols(&rows, d).transpose();
        let hnf = hermite_normal_form(&basis)?.h;
        Ok(Sublattice { basis, hnf })
    }

    /// `factor · Z^d`
    pub fn scaled(d: usize, factor: i64) -> Result<Self> {
        Self::new(&(0..d).map(|i| Point::unit(d, i).scaled(factor)).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// `|Z^d / L| = |det(basis)|`
    pub fn index(&self) -> BigInt {
        self.basis.determinant().abs()
    }

    pub fn contains(&self, v: &Point) -> bool {
        let rhs: Vec<BigInt> = v.0.iter().map(|&x| BigInt::from(x)).collect();
        solve_lower_triangular(&self.hnf, &rhs).is_some()
    }
}

/// Result of [`lattice_quotient_distinct`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientCheck {
    pub distinct: bool,
    pub bound: BigInt,
}

/// Whether the points (as a set; repeats are ignored) lie in pairwise
/// distinct classes of `Z^d / L`.
///
/// When they do, their number cannot exceed the index of `L`; that bound is
/// checked on every call and a violation is reported as an error.
pub fn lattice_quotient_distinct(points: &[Point], l: &Sublattice) -> Result<QuotientCheck> {
    if let Some(p) = points.iter().find(|p| p.dim() != l.dim()) {
        return Err(Error::DimensionMismatch { expected: l.dim(), found: p.dim() });
    }
    let points: Vec<&Point> = points.iter().collect::<BTreeSet<_>>().into_iter().collect();
    let distinct =
        points.iter().enumerate().all(|(i, &v)| points[i + 1..].iter().all(|&w| !l.contains(&(v - w))));
    let bound = l.index();
    if distinct && BigInt::from(points.len()) > bound {
        return Err(Error::Verification(alloc::format!(
            "{} points in distinct classes exceed the index {bound}",
            points.len()
        )));
    }
    debug_assert!(!bound.is_zero());
    Ok(QuotientCheck { distinct, bound })
}
