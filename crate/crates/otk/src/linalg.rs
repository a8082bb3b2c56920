//! Small exact linear algebra: rational row reduction and integer kernels.
//! Everything here is deterministic; pivots are chosen by position only.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense matrix over the rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigRational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> QMatrix {
        QMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows_data: Vec<Vec<BigRational>>) -> QMatrix {
        let rows = rows_data.len();
        let cols = rows_data.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows * cols);
        for r in rows_data {
            assert_eq!(r.len(), cols);
            data.extend(r);
        }
        QMatrix { rows, cols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r >= self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(r * self.cols + j, p * self.cols + j);
                }
            }
            let inv = BigRational::one() / self.get(r, c).clone();
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let f = self.get(i, c).clone();
                    for j in c..self.cols {
                        let v = self.get(i, j) - &f * self.get(r, j);
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel (column vectors of length `cols`).
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.sort_unstable();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![BigRational::zero(); self.cols];
            v[fc] = BigRational::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(ri, fc).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self * x = b`; `None` if inconsistent.  Free variables set to 0.
    pub fn solve(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = QMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(ri, self.cols).clone();
        }
        Some(x)
    }
}

/// Rank over Q of a set of integer column vectors.
pub fn int_rank(cols: &[Vec<BigInt>]) -> usize {
    if cols.is_empty() {
        return 0;
    }
    let d = cols[0].len();
    let rows = (0..d)
        .map(|i| {
            cols.iter()
                .map(|c| BigRational::from_integer(c[i].clone()))
                .collect()
        })
        .collect();
    QMatrix::from_rows(rows).rank()
}

/// Determinant of a square integer matrix by Bareiss fraction-free elimination.
pub fn int_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num.checked_div(&prev).expect("Bareiss divisibility");
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Integer basis of the kernel of the map Z^n -> Z^d given by columns `a_i`.
///
/// Performs column reduction of the d x n matrix tracking a unimodular
/// transform; the kernel basis is the set of transform columns whose
/// reduced matrix column vanished.  Deterministic in the input order.
pub fn int_kernel_basis(cols: &[Vec<BigInt>], d: usize) -> Vec<Vec<BigInt>> {
    let n = cols.len();
    // a: d x n working matrix; u: n x n transform, cols * u stays invariant.
    let mut a: Vec<Vec<BigInt>> = (0..d).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivot_cols = Vec::new();
    for _ in 0..d {
        if pivot_row >= d {
            break;
        }
        let cands: Vec<usize> = (0..n)
            .filter(|c| !pivot_cols.contains(c) && !a[pivot_row][*c].is_zero())
            .collect();
        if cands.is_empty() {
            pivot_row += 1;
            continue;
        }
        // Euclidean column reduction within this row.
        loop {
            let mut live: Vec<usize> = (0..n)
                .filter(|c| !pivot_cols.contains(c) && !a[pivot_row][*c].is_zero())
                .collect();
            if live.len() <= 1 {
                break;
            }
            live.sort_by(|&x, &y| {
                a[pivot_row][x]
                    .abs()
                    .cmp(&a[pivot_row][y].abs())
                    .then(x.cmp(&y))
            });
            let small = live[0];
            for &c in &live[1..] {
                let q = a[pivot_row][c].div_floor(&a[pivot_row][small]);
                if q.is_zero() {
                    continue;
                }
                for i in 0..d {
                    let v = &a[i][c] - &q * &a[i][small];
                    a[i][c] = v;
                }
                for i in 0..n {
                    let v = &u[i][c] - &q * &u[i][small];
                    u[i][c] = v;
                }
            }
        }
        let piv = (0..n)
            .find(|c| !pivot_cols.contains(c) && !a[pivot_row][*c].is_zero())
            .expect("pivot survives reduction");
        pivot_cols.push(piv);
        pivot_row += 1;
    }
    let mut kernel = Vec::new();
    for c in 0..n {
        if pivot_cols.contains(&c) {
            continue;
        }
        if (0..d).all(|i| a[i][c].is_zero()) {
            let mut v: Vec<BigInt> = (0..n).map(|i| u[i][c].clone()).collect();
            // normalize: first nonzero entry positive
            if let Some(f) = v.iter().find(|x| !x.is_zero()) {
                if f.is_negative() {
                    for x in &mut v {
                        *x = -x.clone();
                    }
                }
            }
            kernel.push(v);
        }
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn rank_and_kernel() {
        let m = QMatrix::from_rows(vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![q(-1), q(-1), q(1)]);
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = QMatrix::from_rows(vec![vec![q(1), q(1)], vec![q(2), q(2)]]);
        assert_eq!(m.solve(&[q(3), q(6)]), Some(vec![q(3), q(0)]));
        assert_eq!(m.solve(&[q(3), q(5)]), None);
    }

    #[test]
    fn det_bareiss() {
        let m = vec![
            vec![BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(7), BigInt::from(4)],
        ];
        assert_eq!(int_det(&m), BigInt::from(1));
        let s = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(2), BigInt::from(4)],
        ];
        assert_eq!(int_det(&s), BigInt::zero());
    }

    #[test]
    fn int_kernel_of_triangle() {
        // columns (1,0),(0,1),(1,1): kernel spanned by (1,1,-1)
        let cols = vec![
            vec![BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(1)],
        ];
        let k = int_kernel_basis(&cols, 2);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        for i in 0..2 {
            let s: BigInt = (0..3).map(|j| &v[j] * &cols[j][i]).sum();
            assert!(s.is_zero());
        }
        assert_eq!(v, &vec![BigInt::from(1), BigInt::from(1), BigInt::from(-1)]);
    }
}
