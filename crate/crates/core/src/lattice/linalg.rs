//! Dense integer matrices over arbitrary precision integers.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.as_ref().len(), cols, "ragged matrix");
            for (j, &v) in r.as_ref().iter().enumerate() {
                m[(i, j)] = BigInt::from(v);
            }
        }
        m
    }

    /// Same as [`from_rows`](Self::from_rows) but with a declared column count,
    /// so matrices with zero rows keep their width.
    pub fn from_rows_with_cols<R: AsRef<[i64]>>(rows: &[R], cols: usize) -> Self {
        if rows.is_empty() {
            Self::zeros(0, cols)
        } else {
            Self::from_rows(rows)
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Columns `range` as a new matrix.
    pub fn column_block(&self, range: core::ops::Range<usize>) -> IntMatrix {
        let mut m = Self::zeros(self.rows, range.len());
        for i in 0..self.rows {
            for (jj, j) in range.clone().enumerate() {
                m[(i, jj)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Rows `range` as a new matrix.
    pub fn row_block(&self, range: core::ops::Range<usize>) -> IntMatrix {
        let mut m = Self::zeros(range.len(), self.cols);
        for (ii, i) in range.enumerate() {
            for j in 0..self.cols {
                m[(ii, j)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// `col[target] += factor * col[source]`
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let delta = &self[(i, source)] * factor;
            self[(i, target)] += delta;
        }
    }

    /// `row[target] += factor * row[source]`
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let delta = &self[(source, j)] * factor;
            self[(target, j)] += delta;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        sign * &m[(n - 1, n - 1)]
    }

    /// Indices of a maximal linearly independent set of rows, chosen greedily
    /// in row order.
    pub fn independent_rows(&self) -> Vec<usize> {
        let mut echelon: Vec<(usize, Vec<BigInt>)> = Vec::new();
        let mut chosen = Vec::new();
        for i in 0..self.rows {
            let mut r = self.row(i).to_vec();
            for (pivot, basis) in &echelon {
                if r[*pivot].is_zero() {
                    continue;
                }
                let a = basis[*pivot].clone();
                let b = r[*pivot].clone();
                for (x, y) in r.iter_mut().zip(basis) {
                    *x = &*x * &a - &b * y;
                }
                primitive_in_place(&mut r);
            }
            if let Some(pivot) = r.iter().position(|x| !x.is_zero()) {
                echelon.push((pivot, r));
                chosen.push(i);
            }
        }
        chosen
    }

    pub fn rank(&self) -> usize {
        self.independent_rows().len()
    }

    /// Converts to `i64` rows, failing on overflow.
    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| v.to_i64().ok_or(Error::Overflow("matrix entry"))).collect())
            .collect()
    }
}

impl core::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[BigInt]> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_list().entries(rows).finish()
    }
}

fn primitive_in_place(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// `b = (h, 0) · c` with `c` unimodular.
///
/// `h` is lower triangular with a positive diagonal and every entry left of
/// the diagonal reduced into `[0, h_ii)`. `c_inv` is the exact inverse of
/// `c`; its trailing columns are a basis of the integer kernel of `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnfDecomposition {
    pub h: IntMatrix,
    pub c: IntMatrix,
    pub c_inv: IntMatrix,
}

impl HnfDecomposition {
    /// `(h, 0) · c`
    pub fn reconstruct(&self) -> IntMatrix {
        let n = self.h.rows();
        let k = self.c.rows();
        let mut padded = IntMatrix::zeros(n, k);
        for i in 0..n {
            for j in 0..n {
                padded[(i, j)] = self.h[(i, j)].clone();
            }
        }
        padded.mul(&self.c)
    }

    /// Integer basis of `ker_Z(b)` as the columns of the returned matrix.
    pub fn kernel_basis(&self) -> IntMatrix {
        let n = self.h.rows();
        self.c_inv.column_block(n..self.c_inv.cols())
    }

    /// Solves `h · w = rhs` exactly, returning `None` if `w` is not integral.
    pub fn solve_h(&self, rhs: &[BigInt]) -> Option<Vec<BigInt>> {
        solve_lower_triangular(&self.h, rhs)
    }
}

pub(crate) fn solve_lower_triangular(h: &IntMatrix, rhs: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = h.rows();
    let mut w: Vec<BigInt> = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = rhs[i].clone();
        for (j, wj) in w.iter().enumerate() {
            acc -= &h[(i, j)] * wj;
        }
        let (q, r) = acc.div_rem(&h[(i, i)]);
        if !r.is_zero() {
            return None;
        }
        w.push(q);
    }
    Some(w)
}

/// Column-operation Hermite normal form of a full-row-rank matrix.
pub fn hermite_normal_form(b: &IntMatrix) -> Result<HnfDecomposition> {
    let n = b.rows();
    let k = b.cols();
    if n > k {
        return Err(Error::RankDeficient);
    }
    let mut work = b.clone();
    let mut u = IntMatrix::identity(k);
    let mut c = IntMatrix::identity(k);

    for r in 0..n {
        loop {
            let pivot = (r..k)
                .filter(|&j| !work[(r, j)].is_zero())
                .min_by(|&a, &bb| work[(r, a)].abs().cmp(&work[(r, bb)].abs()).then(a.cmp(&bb)));
            let Some(p) = pivot else {
                return Err(Error::RankDeficient);
            };
            work.swap_cols(r, p);
            u.swap_cols(r, p);
            c.swap_rows(r, p);
            let mut done = true;
            for j in r + 1..k {
                if work[(r, j)].is_zero() {
                    continue;
                }
                let q = -work[(r, j)].div_floor(&work[(r, r)]);
                work.add_col(j, r, &q);
                u.add_col(j, r, &q);
                c.add_row(r, j, &-q);
                if !work[(r, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if work[(r, r)].is_negative() {
            work.negate_col(r);
            u.negate_col(r);
            c.negate_row(r);
        }
        for j in 0..r {
            let q = -work[(r, j)].div_floor(&work[(r, r)]);
            if !q.is_zero() {
                work.add_col(j, r, &q);
                u.add_col(j, r, &q);
                c.add_row(r, j, &-q);
            }
        }
    }
    Ok(HnfDecomposition { h: work.column_block(0..n), c, c_inv: u })
}

/// Integer basis (as columns) of the lattice `{x in Z^k : a x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> Result<IntMatrix> {
    let rows = a.independent_rows();
    if rows.is_empty() {
        return Ok(IntMatrix::identity(a.cols()));
    }
    let mut full = IntMatrix::zeros(rows.len(), a.cols());
    for (ii, &i) in rows.iter().enumerate() {
        for j in 0..a.cols() {
            full[(ii, j)] = a[(i, j)].clone();
        }
    }
    Ok(hermite_normal_form(&full)?.kernel_basis())
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn rdot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// LLL reduction (delta = 3/4) of the columns of `basis`.
///
/// Returns the reduced basis and the unimodular `t_inv` with
/// `coords_new = t_inv · coords_old` for any lattice vector.
pub fn lll_reduce(basis: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let d = basis.cols();
    let mut cols: Vec<Vec<BigInt>> = (0..d).map(|j| basis.column(j)).collect();
    let mut t_inv = IntMatrix::identity(d);
    if d <= 1 {
        return (basis.clone(), t_inv);
    }
    let delta = BigRational::new(BigInt::from(3), BigInt::from(4));

    let gram_schmidt = |cols: &[Vec<BigInt>]| {
        let mut star: Vec<Vec<BigRational>> = Vec::with_capacity(d);
        let mut norms: Vec<BigRational> = Vec::with_capacity(d);
        let mut mu = vec![vec![BigRational::zero(); d]; d];
        for i in 0..d {
            let bi: Vec<BigRational> = cols[i].iter().map(|x| BigRational::from_integer(x.clone())).collect();
            let mut v = bi.clone();
            for j in 0..i {
                if norms[j].is_zero() {
                    continue;
                }
                let m = rdot(&bi, &star[j]) / &norms[j];
                for (vx, sx) in v.iter_mut().zip(&star[j]) {
                    *vx -= &m * sx;
                }
                mu[i][j] = m;
            }
            norms.push(rdot(&v, &v));
            star.push(v);
        }
        (norms, mu)
    };

    let mut k = 1;
    let (mut norms, mut mu) = gram_schmidt(&cols);
    while k < d {
        for j in (0..k).rev() {
            let q = (&mu[k][j] + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
            if q.is_zero() {
                continue;
            }
            let sub: Vec<BigInt> = cols[j].iter().map(|x| x * &q).collect();
            for (x, s) in cols[k].iter_mut().zip(sub) {
                *x -= s;
            }
            t_inv.add_row(j, k, &q);
            (norms, mu) = gram_schmidt(&cols);
        }
        let lhs = norms[k].clone();
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &norms[k - 1];
        if lhs >= rhs {
            k += 1;
        } else {
            cols.swap(k, k - 1);
            t_inv.swap_rows(k, k - 1);
            (norms, mu) = gram_schmidt(&cols);
            k = (k - 1).max(1);
        }
    }
    let mut out = IntMatrix::zeros(basis.rows(), d);
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            out[(i, j)] = v.clone();
        }
    }
    debug_assert!(cols.iter().all(|c| !dot(c, c).is_zero()));
    (out, t_inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(b: &IntMatrix) -> HnfDecomposition {
        let hnf = hermite_normal_form(b).unwrap();
        assert_eq!(&hnf.reconstruct(), b);
        assert_eq!(hnf.c.determinant().abs(), BigInt::one());
        assert_eq!(hnf.c.mul(&hnf.c_inv), IntMatrix::identity(b.cols()));
        for i in 0..hnf.h.rows() {
            assert!(hnf.h[(i, i)].is_positive());
            for j in 0..hnf.h.cols() {
                if j > i {
                    assert!(hnf.h[(i, j)].is_zero());
                } else if j < i {
                    assert!(!hnf.h[(i, j)].is_negative() && hnf.h[(i, j)] < hnf.h[(i, i)]);
                }
            }
        }
        hnf
    }

    #[test]
    fn identity_is_its_own_form() {
        let hnf = check(&IntMatrix::identity(3));
        assert_eq!(hnf.h, IntMatrix::identity(3));
        assert_eq!(hnf.c, IntMatrix::identity(3));
    }

    #[test]
    fn row_vector_two_three() {
        let hnf = check(&IntMatrix::from_rows(&[[2, 3]]));
        assert_eq!(hnf.h, IntMatrix::from_rows(&[[1]]));
        // The first row of c is the input row itself since h = (1).
        assert_eq!(hnf.c.row(0), &[BigInt::from(2), BigInt::from(3)]);
    }

    #[test]
    fn two_by_three_example() {
        // Column lattice of ((2,4,4),(-6,6,12)): index is gcd of 2x2 minors
        // (36, 48, 24) = 12, the first pivot is gcd(2,4,4) = 2, and
        // (2,-6) + (0,6) = (2,0) puts the sub-diagonal entry at 0.
        let hnf = check(&IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12]]));
        assert_eq!(hnf.h, IntMatrix::from_rows(&[[2, 0], [0, 6]]));
    }

    #[test]
    fn rank_deficient_is_an_error() {
        let b = IntMatrix::from_rows(&[[1, 2, 3], [2, 4, 6]]);
        assert_eq!(hermite_normal_form(&b), Err(Error::RankDeficient));
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn kernel_and_determinant() {
        let a = IntMatrix::from_rows(&[[1, 1, 1]]);
        let k = integer_kernel(&a).unwrap();
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).to_i64_rows().unwrap().iter().flatten().all(|&x| x == 0));
        assert_eq!(IntMatrix::from_rows(&[[2, 1], [1, 3]]).determinant(), BigInt::from(5));
        assert_eq!(IntMatrix::from_rows(&[[0, 1], [1, 0]]).determinant(), BigInt::from(-1));
    }

    #[test]
    fn lll_shortens_a_skewed_basis() {
        let b = IntMatrix::from_rows(&[[1, 41], [0, 1], [0, 0]]);
        let (reduced, t_inv) = lll_reduce(&b);
        // coordinates transform consistently: reduced · t_inv = b
        assert_eq!(reduced.mul(&t_inv), b);
        assert_eq!(t_inv.determinant().abs(), BigInt::one());
        let max = reduced.to_i64_rows().unwrap().into_iter().flatten().map(i64::abs).max().unwrap();
        assert!(max <= 1);
    }
}
