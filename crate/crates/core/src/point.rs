use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, Neg, Sub};

/// An integer point (or integer vector) in `Z^d`.
///
/// Ordering is lexicographic on the coordinates, which fixes node order in
/// fiber graphs and the canonical sign of moves.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Point(pub Vec<i64>);

impl Point {
    pub fn new(coords: Vec<i64>) -> Self {
        Point(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Point(alloc::vec![0; dim])
    }

    /// The unit vector `e_index` in `Z^dim`.
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut p = Point::zero(dim);
        p.0[index] = 1;
        p
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// True when the first nonzero coordinate is positive.
    pub fn is_lex_positive(&self) -> bool {
        self.0.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }

    /// `self` or `-self`, whichever is lexicographically positive.
    pub fn canonical_sign(&self) -> Point {
        if self.is_lex_positive() {
            self.clone()
        } else {
            -self
        }
    }

    pub fn scaled(&self, factor: i64) -> Point {
        Point(self.0.iter().map(|c| c * factor).collect())
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Point) -> Point {
        let mut coords = self.0.clone();
        coords.extend_from_slice(&other.0);
        Point(coords)
    }

    pub fn dot(&self, other: &[i64]) -> i128 {
        self.0.iter().zip(other).map(|(&a, &b)| a as i128 * b as i128).sum()
    }

    /// If `self = factor * base` for an integer `factor`, returns it.
    pub fn multiple_of(&self, base: &Point) -> Option<i64> {
        let pivot = base.0.iter().position(|&c| c != 0)?;
        if self.0[pivot] % base.0[pivot] != 0 {
            return None;
        }
        let factor = self.0[pivot] / base.0[pivot];
        let matches = self.0.iter().zip(&base.0).all(|(&a, &b)| a == factor * b);
        matches.then_some(factor)
    }
}

impl From<Vec<i64>> for Point {
    fn from(coords: Vec<i64>) -> Self {
        Point(coords)
    }
}

impl<const N: usize> From<[i64; N]> for Point {
    fn from(coords: [i64; N]) -> Self {
        Point(coords.to_vec())
    }
}

impl Index<usize> for Point {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        debug_assert_eq!(self.dim(), rhs.dim());
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        debug_assert_eq!(self.dim(), rhs.dim());
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        -&self
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}
