//! Rank factorization of Hankel matrices `H[m][n] = a_{m+n-1}`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelFactor {
    pub rank: usize,
    /// `K x r`: the pivot columns of `H`.
    pub left: Vec<Vec<BigRational>>,
    /// `r x K`: the nonzero rows of the reduced row echelon form of `H`.
    pub right: Vec<Vec<BigRational>>,
}

impl HankelFactor {
    pub fn product(&self) -> Vec<Vec<BigRational>> {
        let k = self.left.len();
        let cols = self.right.first().map_or(k, |r| r.len());
        (0..k)
            .map(|i| {
                (0..cols)
                    .map(|j| {
                        (0..self.rank).fold(BigRational::zero(), |acc, s| {
                            acc + &self.left[i][s] * &self.right[s][j]
                        })
                    })
                    .collect()
            })
            .collect()
    }
}

/// The `K x K` Hankel matrix of `a_1, a_2, ...` (0-based slice).
pub fn hankel_matrix(terms: &[BigRational], window: usize) -> Result<Vec<Vec<BigRational>>> {
    let needed = (2 * window).saturating_sub(1);
    if terms.len() < needed {
        return Err(Error::InsufficientOrder {
            needed,
            available: terms.len(),
        });
    }
    Ok((0..window)
        .map(|m| (0..window).map(|n| terms[m + n].clone()).collect())
        .collect())
}

/// Rank factorization `H = left * right` over `Q`.
///
/// Gauss-Jordan elimination, pivoting on the first nonzero entry of each
/// column so the result is deterministic.
pub fn hankel_rank_factor(terms: &[BigRational], window: usize) -> Result<HankelFactor> {
    let h = hankel_matrix(terms, window)?;
    let mut rref = h.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..window {
        let Some(p) = (row..window).find(|&r| !rref[r][col].is_zero()) else {
            continue;
        };
        rref.swap(row, p);
        let inv = rref[row][col].recip();
        for v in rref[row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..window {
            if r == row || rref[r][col].is_zero() {
                continue;
            }
            let f = rref[r][col].clone();
            for c in 0..window {
                let sub = &f * &rref[row][c];
                rref[r][c] = &rref[r][c] - &sub;
            }
        }
        pivots.push(col);
        row += 1;
        if row == window {
            break;
        }
    }
    let rank = pivots.len();
    let left = (0..window)
        .map(|m| pivots.iter().map(|&c| h[m][c].clone()).collect())
        .collect();
    rref.truncate(rank);
    Ok(HankelFactor {
        rank,
        left,
        right: rref,
    })
}
