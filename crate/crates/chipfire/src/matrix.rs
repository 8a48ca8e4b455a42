//! Exact integer matrices. Everything here is arbitrary precision; the
//! determinant of a reduced Laplacian grows exponentially with graph size,
//! so no fixed-width arithmetic is allowed anywhere near it.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntegerMatrix {
            dim,
            data: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let mut m = IntegerMatrix::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "matrix must be square");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * dim + j] = BigInt::from(v);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigInt) {
        self.data[row * self.dim + col] = value;
    }

    pub fn row_sum(&self, row: usize) -> BigInt {
        (0..self.dim).map(|j| self.get(row, j)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// Exact determinant by Bareiss fraction-free elimination. All
    /// intermediate divisions are exact, so the result is computed entirely
    /// over the integers.
    pub fn determinant(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.data.clone();
        let at = |m: &Vec<BigInt>, i: usize, j: usize| m[i * n + j].clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n {
            if at(&m, k, k).is_zero() {
                match (k + 1..n).find(|&r| !at(&m, r, k).is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            m.swap(k * n + j, r * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&m, i, j) * at(&m, k, k) - at(&m, i, k) * at(&m, k, j);
                    m[i * n + j] = num / &prev;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = at(&m, k, k);
        }
        let det = at(&m, n - 1, n - 1);
        if sign < 0 {
            -det
        } else {
            det
        }
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.dim {
            write!(f, "  [")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Reduce the augmented system `[a | b]` to upper-triangular form using only
/// unimodular row operations (swaps and adding integer multiples of rows),
/// so the integer solution set of `a x = b` is preserved. Returns the
/// triangularized matrix rows paired with the transformed right-hand side.
pub(crate) fn triangularize(a: &IntegerMatrix, b: &[BigInt]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let n = a.dim();
    assert_eq!(b.len(), n);
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j).clone()).collect())
        .collect();
    let mut rhs = b.to_vec();
    for col in 0..n {
        loop {
            // Smallest nonzero pivot candidate in this column.
            let pivot = (col..n)
                .filter(|&r| !rows[r][col].is_zero())
                .min_by_key(|&r| rows[r][col].abs());
            let Some(p) = pivot else { break };
            rows.swap(col, p);
            rhs.swap(col, p);
            let mut any_left = false;
            for r in col + 1..n {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = &rows[r][col] / &rows[col][col];
                if !q.is_zero() {
                    for j in col..n {
                        let sub = &q * &rows[col][j];
                        rows[r][j] -= sub;
                    }
                    let sub = &q * &rhs[col];
                    rhs[r] -= sub;
                }
                if !rows[r][col].is_zero() {
                    any_left = true;
                }
            }
            if !any_left {
                break;
            }
        }
    }
    (rows, rhs)
}
