//! Dense integer matrices with exact determinants.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A small integer matrix with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>, // row-major
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        IntMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        assert!(r > 0);
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let entries = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
        Self::new(r, c, entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n, n, vec![BigInt::zero(); n * n]);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal(diag: &[i64]) -> Self {
        let n = diag.len();
        let mut m = Self::new(n, n, vec![BigInt::zero(); n * n]);
        for (i, &v) in diag.iter().enumerate() {
            m.entries[i * n + i] = BigInt::from(v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.entry(i, j).clone()).collect())
            .collect()
    }

    /// Rows as machine integers, if every entry fits.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.entry(i, j).to_i64()).collect())
            .collect()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = vec![BigInt::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.entry(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[i * rhs.cols + j] += a * rhs.entry(l, j);
                }
            }
        }
        IntMatrix::new(self.rows, rhs.cols, out)
    }

    /// Exact determinant by cofactor expansion along the first row.
    /// Sizes in this crate stay tiny, so exponential cost is irrelevant.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        self.det_inner(&(0..self.rows).collect::<Vec<_>>())
    }

    fn det_inner(&self, cols: &[usize]) -> BigInt {
        let row = self.rows - cols.len();
        if cols.len() == 1 {
            return self.entry(row, cols[0]).clone();
        }
        let mut acc = BigInt::zero();
        for (pos, &j) in cols.iter().enumerate() {
            let a = self.entry(row, j);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
            let minor = self.det_inner(&rest);
            if pos % 2 == 0 {
                acc += a * minor;
            } else {
                acc -= a * minor;
            }
        }
        acc
    }

    /// True iff the determinant is `+1` or `-1`.
    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({}x{})", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn unimodular_examples() {
        assert!(IntMatrix::identity(3).is_unimodular());
        assert!(!IntMatrix::diagonal(&[2, 1]).is_unimodular());
        assert!(IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).is_unimodular());
    }

    /// Rule-of-Sarrus oracle for 3x3 determinants.
    fn sarrus(m: &IntMatrix) -> BigInt {
        let e = |i, j| m.entry(i, j).clone();
        e(0, 0) * e(1, 1) * e(2, 2) + e(0, 1) * e(1, 2) * e(2, 0) + e(0, 2) * e(1, 0) * e(2, 1)
            - e(0, 2) * e(1, 1) * e(2, 0)
            - e(0, 0) * e(1, 2) * e(2, 1)
            - e(0, 1) * e(1, 0) * e(2, 2)
    }

    fn arb_mat3() -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec(-3i64..=3, 9).prop_map(|v| {
            IntMatrix::new(3, 3, v.into_iter().map(BigInt::from).collect())
        })
    }

    proptest! {
        #[test]
        fn det_matches_sarrus(m in arb_mat3()) {
            prop_assert_eq!(m.det(), sarrus(&m));
        }

        #[test]
        fn det_multiplicative(a in arb_mat3(), b in arb_mat3()) {
            prop_assert_eq!(a.mul(&b).det(), a.det() * b.det());
        }
    }
}
