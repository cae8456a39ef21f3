//! Exact and modular dense linear algebra.
//!
//! Exact routines work over the rationals (or fraction-free over the
//! integers, for determinants); the modular side is a flat matrix of
//! Montgomery residues with an elimination kernel tuned for the large rank
//! certifications. A modular rank is a lower bound on the exact rank and is
//! always reported together with its prime.

use crate::modp::ModP;
use crate::scalar::{Int, Rat, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not upper triangular at ({row},{col})")]
    NotTriangular { row: usize, col: usize },
    #[error("zero diagonal entry at index {0}")]
    ZeroDiagonal(usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Rank of a rational matrix by Gaussian elimination, fully exact.
pub fn rank_rational(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let pivot = (rank..nrows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for j in col..ncols {
            let v = &m[rank][j] * &inv;
            m[rank][j] = v;
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..ncols {
                    let v = &m[r][j] - &f * &m[rank][j];
                    m[r][j] = v;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Basis of the right kernel { v : M v = 0 } of a rational matrix.
pub fn kernel_rational(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    let mut pivot_col_of_row = vec![];
    let mut is_pivot = vec![false; ncols];
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..nrows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for j in col..ncols {
            let v = &m[rank][j] * &inv;
            m[rank][j] = v;
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..ncols {
                    let v = &m[r][j] - &f * &m[rank][j];
                    m[r][j] = v;
                }
            }
        }
        pivot_col_of_row.push(col);
        is_pivot[col] = true;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    let mut basis = vec![];
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::from_integer(Int::from(1));
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Back-substitution for a square upper-triangular exact system.
pub fn solve_upper_triangular(m: &[Vec<Rat>], rhs: &[Rat]) -> Result<Vec<Rat>, MatrixError> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(MatrixError::NotSquare { rows: n, cols: m.first().map_or(0, |r| r.len()) });
    }
    if rhs.len() != n {
        return Err(MatrixError::Dimension(format!("rhs length {} != {}", rhs.len(), n)));
    }
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if j < i && !v.is_zero() {
                return Err(MatrixError::NotTriangular { row: i, col: j });
            }
        }
        if row[i].is_zero() {
            return Err(MatrixError::ZeroDiagonal(i));
        }
    }
    let mut x = vec![Rat::zero(); n];
    for i in (0..n).rev() {
        let mut acc = rhs[i].clone();
        for j in (i + 1)..n {
            acc -= &m[i][j] * &x[j];
        }
        x[i] = acc / &m[i][i];
    }
    Ok(x)
}

/// Determinant of a square integer matrix by fraction-free Bareiss
/// elimination.
pub fn det_bareiss(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::from(1);
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of non-square matrix");
    let mut sign = 1i32;
    let mut prev = Int::from(1);
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = ((k + 1)..n).find(|&r| !m[r][k].is_zero()) else {
                return Int::from(0);
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = Int::from(0);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Dense matrix of Montgomery residues.
pub struct PMatrix {
    pub ctx: ModP,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u32>, // row-major, Montgomery form
}

impl PMatrix {
    pub fn zeroed(ctx: ModP, rows: usize, cols: usize) -> Self {
        PMatrix { ctx, rows, cols, data: vec![0; rows * cols] }
    }

    /// Build row-by-row; `fill` writes Montgomery-form entries into its slice.
    pub fn from_rows(ctx: ModP, rows: usize, cols: usize, mut fill: impl FnMut(usize, &mut [u32])) -> Self {
        let mut m = Self::zeroed(ctx, rows, cols);
        for r in 0..rows {
            let s = &mut m.data[r * cols..(r + 1) * cols];
            fill(r, s);
        }
        m
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    /// Rank by in-place Gaussian elimination. Destroys the matrix.
    pub fn rank(mut self) -> usize {
        let ctx = self.ctx;
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0usize;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| self.data[r * cols + col] != 0) else {
                continue;
            };
            if p != rank {
                for j in col..cols {
                    self.data.swap(rank * cols + j, p * cols + j);
                }
            }
            let inv = ctx.inv(self.data[rank * cols + col]);
            // normalize pivot row once so the update loop is a single mul-add
            for j in col..cols {
                let v = ctx.mul(self.data[rank * cols + j], inv);
                self.data[rank * cols + j] = v;
            }
            let (before, rest) = self.data.split_at_mut((rank + 1) * cols);
            let pivot_row = &before[rank * cols..];
            for r in 0..(rows - rank - 1) {
                let row = &mut rest[r * cols..(r + 1) * cols];
                let f = row[col];
                if f == 0 {
                    continue;
                }
                let f = ctx.neg(f);
                for j in col..cols {
                    row[j] = ctx.add(row[j], ctx.mul(f, pivot_row[j]));
                }
            }
            rank += 1;
        }
        rank
    }

    /// Right kernel basis (vectors of plain residues).
    pub fn kernel(mut self) -> Vec<Vec<u32>> {
        let ctx = self.ctx;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivot_cols = vec![];
        let mut rank = 0usize;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| self.data[r * cols + col] != 0) else {
                continue;
            };
            if p != rank {
                for j in 0..cols {
                    self.data.swap(rank * cols + j, p * cols + j);
                }
            }
            let inv = ctx.inv(self.data[rank * cols + col]);
            for j in 0..cols {
                let v = ctx.mul(self.data[rank * cols + j], inv);
                self.data[rank * cols + j] = v;
            }
            for r in 0..rows {
                if r == rank {
                    continue;
                }
                let f = self.data[r * cols + col];
                if f == 0 {
                    continue;
                }
                let f = ctx.neg(f);
                for j in 0..cols {
                    let v = ctx.add(self.data[r * cols + j], ctx.mul(f, self.data[rank * cols + j]));
                    self.data[r * cols + j] = v;
                }
            }
            pivot_cols.push(col);
            rank += 1;
        }
        let mut is_pivot = vec![false; cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let mut basis = vec![];
        for free in 0..cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u32; cols];
            v[free] = 1;
            for (row, &pc) in pivot_cols.iter().enumerate() {
                let m = self.data[row * cols + free];
                v[pc] = ctx.from_m(ctx.neg(m));
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modp::DEFAULT_PRIMES;
    use crate::scalar::rat;

    fn qm(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn rank_identity_and_outer_product() {
        let id = qm(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(rank_rational(&id), 3);
        // rank-1 outer product (1,2,3)^T (4,5,6)
        let outer = qm(&[&[4, 5, 6], &[8, 10, 12], &[12, 15, 18]]);
        assert_eq!(rank_rational(&outer), 1);
    }

    #[test]
    fn modular_rank_of_elementary_product() {
        // 5x5 invertible built as a product of elementary row operations on I,
        // so the exact rank is 5 by construction.
        let ctx = ModP::new(DEFAULT_PRIMES[0]);
        let mut m = vec![[0i64; 5]; 5];
        for i in 0..5 {
            m[i][i] = 1;
        }
        let ops: [(usize, usize, i64); 6] =
            [(0, 1, 3), (1, 2, -2), (2, 3, 7), (3, 4, 1), (4, 0, -5), (1, 3, 11)];
        for &(i, j, f) in &ops {
            for c in 0..5 {
                m[i][c] += f * m[j][c];
            }
        }
        let pm = PMatrix::from_rows(ctx, 5, 5, |r, s| {
            for c in 0..5 {
                s[c] = ctx.from_i64(m[r][c]);
            }
        });
        assert_eq!(pm.rank(), 5);
    }

    #[test]
    fn triangular_solve() {
        let m = qm(&[&[1, 1], &[0, 1]]);
        let x = solve_upper_triangular(&m, &[rat(3), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);
        let id = qm(&[&[1, 0], &[0, 1]]);
        assert_eq!(solve_upper_triangular(&id, &[rat(5), rat(7)]).unwrap(), vec![rat(5), rat(7)]);
        let bad = qm(&[&[1, 1], &[0, 0]]);
        assert_eq!(solve_upper_triangular(&bad, &[rat(0), rat(0)]), Err(MatrixError::ZeroDiagonal(1)));
    }

    #[test]
    fn bareiss_det() {
        let m: Vec<Vec<Int>> =
            vec![vec![Int::from(2), Int::from(3)], vec![Int::from(5), Int::from(7)]];
        assert_eq!(det_bareiss(m), Int::from(-1));
        let singular: Vec<Vec<Int>> =
            vec![vec![Int::from(1), Int::from(2)], vec![Int::from(2), Int::from(4)]];
        assert_eq!(det_bareiss(singular), Int::from(0));
    }

    #[test]
    fn modular_kernel_matches_nullity() {
        let ctx = ModP::new(DEFAULT_PRIMES[1]);
        // rows (1,1,0) and (0,1,1): kernel spanned by (1,-1,1)
        let pm = PMatrix::from_rows(ctx, 2, 3, |r, s| {
            let rows = [[1i64, 1, 0], [0, 1, 1]];
            for c in 0..3 {
                s[c] = ctx.from_i64(rows[r][c]);
            }
        });
        let k = pm.kernel();
        assert_eq!(k.len(), 1);
        let v = &k[0];
        // check M v = 0 in plain arithmetic
        let p = ctx.p as u64;
        assert_eq!((v[0] as u64 + v[1] as u64) % p, 0);
        assert_eq!((v[1] as u64 + v[2] as u64) % p, 0);
    }
}
