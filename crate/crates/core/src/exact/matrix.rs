//! Square integer matrices.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// An `n x n` integer matrix, row-major. `n = 0` is allowed and stands for
/// the endomorphism of the zero module.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::invalid("matrix is not square"));
        }
        Ok(IntMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Panics if `rows` is not square; intended for literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("square matrix literal")
    }

    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn scalar(c: BigInt) -> Self {
        IntMatrix {
            dim: 1,
            entries: vec![c],
        }
    }

    /// Companion matrix of a monic polynomial; its characteristic polynomial
    /// is `f` itself.
    pub fn companion(f: &IntPoly) -> Self {
        assert!(f.is_monic(), "companion matrix needs a monic polynomial");
        let k = f.degree().unwrap();
        let mut m = Self::zeros(k);
        for i in 1..k {
            m.entries[i * k + (i - 1)] = BigInt::one();
        }
        for i in 0..k {
            m.entries[i * k + (k - 1)] = -f.coeff(i);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        if self.dim == 0 {
            return Vec::new();
        }
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> IntMatrix {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn add_scaled_identity(&self, c: &BigInt) -> IntMatrix {
        let mut out = self.clone();
        for i in 0..self.dim {
            out.entries[i * self.dim + i] += c;
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn block_diag(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.dim + other.dim;
        let mut out = Self::zeros(n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.entries[i * n + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                out.entries[(self.dim + i) * n + self.dim + j] = other.get(i, j).clone();
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// `det(x I - M)`, monic of degree `dim`, by Faddeev-LeVerrier with exact
    /// integer division.
    pub fn char_poly(&self) -> IntPoly {
        let n = self.dim;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut aux = Self::zeros(n);
        for k in 1..=n {
            aux = self.mul(&aux).add_scaled_identity(&coeffs[n - k + 1]);
            let t = self.mul(&aux).trace();
            coeffs[n - k] = -t / BigInt::from(k);
        }
        IntPoly::new(coeffs)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// `det(1 - t M)` as a polynomial in `t`: constant term 1, degree at most
/// `dim(M)`, zero eigenvalues invisible.
pub fn rev_char_poly(m: &IntMatrix) -> IntPoly {
    m.char_poly().reverse(m.dim())
}

/// Tensor product matrix `a ⊗ b` of dimension `dim a * dim b`.
pub fn kronecker(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (n, m) = (a.dim(), b.dim());
    let dim = n * m;
    let mut out = IntMatrix::zeros(dim);
    for i in 0..n {
        for j in 0..n {
            let aij = a.get(i, j);
            if aij.is_zero() {
                continue;
            }
            for k in 0..m {
                for l in 0..m {
                    out.entries[(i * m + k) * dim + j * m + l] = aij * b.get(k, l);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rev_char_poly_examples() {
        assert_eq!(rev_char_poly(&IntMatrix::from_i64(&[&[1]])), IntPoly::from_i64(&[1, -1]));
        assert_eq!(
            rev_char_poly(&IntMatrix::from_i64(&[&[1, 1], &[1, 0]])),
            IntPoly::from_i64(&[1, -1, -1])
        );
        assert_eq!(
            rev_char_poly(&IntMatrix::from_i64(&[&[0, 1], &[0, 0]])),
            IntPoly::one()
        );
        assert_eq!(rev_char_poly(&IntMatrix::zeros(0)), IntPoly::one());
    }

    #[test]
    fn kronecker_examples() {
        let k = kronecker(&IntMatrix::from_i64(&[&[2]]), &IntMatrix::from_i64(&[&[3]]));
        assert_eq!(k, IntMatrix::from_i64(&[&[6]]));
        let b = IntMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let k = kronecker(&IntMatrix::identity(2), &b);
        assert_eq!(k, b.block_diag(&b));
    }

    #[test]
    fn companion_has_its_polynomial() {
        let f = IntPoly::from_i64(&[5, -3, 0, 1]);
        assert_eq!(IntMatrix::companion(&f).char_poly(), f);
    }

    #[test]
    fn det_matches_char_poly_constant() {
        let m = IntMatrix::from_i64(&[&[0, 2, 1], &[3, -1, 4], &[1, 1, 0]]);
        let cp = m.char_poly();
        // det(xI - M) at x = 0 is (-1)^n det M
        assert_eq!(cp.coeff(0), -m.det());
        assert_eq!(m.det(), BigInt::from(12));
    }

    #[test]
    fn rejects_non_square() {
        let rows = vec![vec![BigInt::one(), BigInt::zero()]];
        assert!(IntMatrix::from_rows(rows).is_err());
    }
}
