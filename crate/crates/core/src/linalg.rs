//! Dense exact linear algebra: Gaussian elimination over a field and
//! fraction-free (Bareiss) elimination over the integers.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::scalar::{Field, Ring};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: R) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Matrix<R>) -> Matrix<R> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::<R>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let x = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, x);
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix<R>) -> Matrix<R> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring, E>(&self, f: impl FnMut(&R) -> Result<S, E>) -> Result<Matrix<S>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }
}

impl<R: fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.data[i * self.cols + j].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
            continue;
        };
        if p != row {
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, row * m.cols + j);
            }
        }
        let inv = m.get(row, col).inv().unwrap();
        for j in col..m.cols {
            let x = m.get(row, j).mul(&inv);
            m.set(row, j, x);
        }
        for i in 0..m.rows {
            if i == row || m.get(i, col).is_zero() {
                continue;
            }
            let f = m.get(i, col).clone();
            for j in col..m.cols {
                let pj = m.get(row, j);
                if pj.is_zero() {
                    continue;
                }
                let x = m.get(i, j).sub(&f.mul(pj));
                m.set(i, j, x);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    rref(&mut m.clone()).len()
}

/// Basis of `{x : m x = 0}`, one vector per non-pivot column, with a 1 in
/// that column and zeros in the other non-pivot columns.
pub fn nullspace<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let mut r = m.clone();
    let pivots = rref(&mut r);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![F::zero(); m.cols];
            x[f] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = r.get(i, f).neg();
            }
            x
        })
        .collect()
}

/// Scales a rational row to a primitive integer row.
pub fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn bareiss_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for r in rest.iter_mut() {
            let f = r[col].clone();
            for j in col..cols {
                let x = &r[j] * &pivot - &f * &prow[j];
                debug_assert!((&x % &prev).is_zero());
                r[j] = x / &prev;
            }
        }
        prev = pivot.abs();
        if prev.is_zero() {
            prev = BigInt::one();
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64) -> BigRational {
        BigRational::from_integer(a.into())
    }

    #[test]
    fn rank_and_nullspace() {
        let m = Matrix::from_rows(vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(1), q(0), q(1)]]);
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 1);
        let x = Matrix::from_rows(ns.iter().map(|v| vec![v[0].clone(), v[1].clone(), v[2].clone()]).collect());
        let prod = m.mul(&Matrix::from_rows((0..3).map(|i| vec![x.get(0, i).clone()]).collect()));
        assert!(prod.is_zero());
    }

    #[test]
    fn bareiss_matches_gauss() {
        let rows = vec![
            vec![2, 4, -2, 1],
            vec![1, 2, -1, 3],
            vec![3, 6, -3, 4],
            vec![0, 1, 5, 7],
        ];
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let rat = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect());
        assert_eq!(bareiss_rank(big), rank(&rat));
        assert_eq!(rank(&rat), 3);
    }
}
