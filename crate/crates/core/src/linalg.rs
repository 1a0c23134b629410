//! Exact integer linear algebra: determinants, unimodular inverses, and
//! row-style Hermite normal form over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense matrix of big integers, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IMat {
        let mut out = IMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[idx(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[idx(r, k)].is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            a.swap(idx(k, j), idx(r, j));
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[idx(i, j)] * &a[idx(k, k)] - &a[idx(i, k)] * &a[idx(k, j)];
                    a[idx(i, j)] = &t / &prev; // exact by Bareiss
                }
                a[idx(i, k)] = BigInt::zero();
            }
            prev = a[idx(k, k)].clone();
        }
        let d = a[idx(n - 1, n - 1)].clone();
        if sign < 0 { -d } else { d }
    }

    /// Inverse of a unimodular matrix (det = +/-1), exact over the integers.
    /// Returns `None` if the determinant is not a unit.
    pub fn inverse_unimodular(&self) -> Option<IMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let det = self.det();
        if det.abs() != BigInt::one() {
            return None;
        }
        // Adjugate via cofactors; n stays small here.
        let mut adj = IMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(i, j);
                let c = minor.det();
                let c = if (i + j) % 2 == 0 { c } else { -c };
                adj[(j, i)] = c * &det; // divide by det == multiply, det = +/-1
            }
        }
        debug_assert_eq!(self.mul(&adj), IMat::identity(n));
        Some(adj)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> IMat {
        let n = self.rows;
        let mut out = IMat::zero(n - 1, n - 1);
        let mut r = 0;
        for i in 0..n {
            if i == skip_row {
                continue;
            }
            let mut c = 0;
            for j in 0..n {
                if j == skip_col {
                    continue;
                }
                out[(r, c)] = self[(i, j)].clone();
                c += 1;
            }
            r += 1;
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for IMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Row-style Hermite normal form of the row span of `mat`.
///
/// Rows of the result are a canonical basis of the integer row span:
/// echelon with positive pivots, entries above each pivot reduced to
/// `[0, pivot)`. Zero rows are dropped, so the output has one row per
/// pivot column.
pub fn hnf_rows(mat: &IMat) -> IMat {
    let mut rows: Vec<Vec<BigInt>> = (0..mat.rows)
        .map(|i| mat.row(i).to_vec())
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let cols = mat.cols;
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut top = 0usize;
    for col in 0..cols {
        // Euclidean reduction: shrink column entries below `top` until at
        // most one is nonzero.
        loop {
            let mut nonzero: Vec<usize> =
                (top..rows.len()).filter(|&r| !rows[r][col].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            nonzero.sort_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let small = nonzero[0];
            for &r in &nonzero[1..] {
                let q = rows[r][col].div_euclid(&rows[small][col]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let t = &rows[small][j] * &q;
                        rows[r][j] -= t;
                    }
                }
            }
        }
        if let Some(r) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) {
            rows.swap(top, r);
            if rows[top][col].is_negative() {
                for x in rows[top].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            pivots.push((top, col));
            top += 1;
        }
    }
    rows.truncate(top);
    // Reduce entries above each pivot into [0, pivot).
    for &(pr, pc) in pivots.iter() {
        for r in 0..pr {
            let q = rows[r][pc].div_euclid(&rows[pr][pc]);
            if !q.is_zero() {
                for j in 0..cols {
                    let t = &rows[pr][j] * &q;
                    rows[r][j] -= t;
                }
            }
        }
    }
    IMat::from_rows(rows)
}

/// div_euclid for BigInt (num-bigint has div_floor via Integer).
trait DivEuclid {
    fn div_euclid(&self, other: &BigInt) -> BigInt;
}

impl DivEuclid for BigInt {
    fn div_euclid(&self, other: &BigInt) -> BigInt {
        self.div_floor(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IMat {
        IMat::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    #[test]
    fn det_small() {
        assert_eq!(mat(&[&[3, -4], &[4, 3]]).det(), BigInt::from(25));
        assert_eq!(mat(&[&[1, 0], &[0, 1]]).det(), BigInt::from(1));
        assert_eq!(mat(&[&[2, 0], &[0, 2]]).det(), BigInt::from(4));
        assert_eq!(mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).det(), BigInt::from(0));
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        // Independent 4x4 oracle: Laplace expansion along the first row.
        fn cofactor_det(m: &IMat) -> BigInt {
            let n = m.rows;
            if n == 1 {
                return m[(0, 0)].clone();
            }
            let mut acc = BigInt::zero();
            for j in 0..n {
                if m[(0, j)].is_zero() {
                    continue;
                }
                let sub = m.minor(0, j);
                let term = &m[(0, j)] * cofactor_det(&sub);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        let m = mat(&[&[2, -1, 0, 3], &[1, 4, -2, 1], &[0, 5, 1, -3], &[-2, 1, 1, 1]]);
        assert_eq!(m.det(), cofactor_det(&m));
    }

    #[test]
    fn inverse_unimodular_round_trip() {
        let u = mat(&[&[1, 1], &[0, 1]]);
        let inv = u.inverse_unimodular().unwrap();
        assert_eq!(u.mul(&inv), IMat::identity(2));
        assert_eq!(inv, mat(&[&[1, -1], &[0, 1]]));
        assert!(mat(&[&[2, 0], &[0, 1]]).inverse_unimodular().is_none());
    }

    #[test]
    fn hnf_gaussian_ideal() {
        // Rows spanning the Z[i]-ideal (1+i) in basis {1, i}.
        let m = mat(&[&[2, 0], &[0, 2], &[1, 1], &[-1, 1]]);
        let h = hnf_rows(&m);
        assert_eq!(h, mat(&[&[1, 1], &[0, 2]]));
    }

    #[test]
    fn hnf_pivots_positive_and_reduced() {
        let m = mat(&[&[-4, 2, 7], &[3, -1, 5], &[6, 0, -2]]);
        let h = hnf_rows(&m);
        for i in 0..h.rows {
            let pivot_col = (0..h.cols).find(|&j| !h[(i, j)].is_zero()).unwrap();
            assert!(h[(i, pivot_col)] > BigInt::zero());
            for r in 0..i {
                assert!(h[(r, pivot_col)] >= BigInt::zero());
                assert!(h[(r, pivot_col)] < h[(i, pivot_col)]);
            }
        }
    }

    #[test]
    fn hnf_idempotent() {
        let m = mat(&[&[2, 4], &[6, 8]]);
        let h = hnf_rows(&m);
        assert_eq!(hnf_rows(&h), h);
    }
}
