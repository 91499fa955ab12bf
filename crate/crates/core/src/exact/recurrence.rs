//! Berlekamp-Massey over `Q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{IntPoly, RatPoly};
use crate::error::{Error, Result};

/// Shortest linear feedback shift register generating a finite sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lfsr {
    /// `C(x) = 1 + c_1 x + ... + c_L x^L` with
    /// `s_n + c_1 s_{n-1} + ... + c_L s_{n-L} = 0` for `L <= n < len`.
    pub connection: RatPoly,
    /// Register length `L`; may exceed `deg C`.
    pub length: usize,
}

impl Lfsr {
    /// `x^L C(1/x)`, monic of degree `L`.
    pub fn char_poly(&self) -> RatPoly {
        self.connection.reverse(self.length)
    }
}

/// Runs Berlekamp-Massey on `terms` over `Q`.
pub fn minimal_lfsr(terms: &[BigRational]) -> Lfsr {
    let mut c = vec![BigRational::one()];
    let mut b = vec![BigRational::one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut last_disc = BigRational::one();

    for n in 0..terms.len() {
        let mut d = terms[n].clone();
        for i in 1..c.len().min(n + 1) {
            if !c[i].is_zero() {
                d += &c[i] * &terms[n - i];
            }
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let coef = &d / &last_disc;
        let prev = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, BigRational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            if !bi.is_zero() {
                c[i + m] = &c[i + m] - &(&coef * bi);
            }
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = prev;
            last_disc = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    Lfsr {
        connection: RatPoly::new(c),
        length: l,
    }
}

/// Minimal monic recurrence polynomial `x^k - B_1 x^{k-1} - ... - B_k` of
/// the supplied window, required to have integer coefficients.
///
/// An all-zero window yields the constant polynomial 1 (`k = 0`).
pub fn berlekamp_massey(terms: &[BigRational]) -> Result<IntPoly> {
    if terms.is_empty() {
        return Err(Error::invalid("berlekamp_massey needs at least one term"));
    }
    minimal_lfsr(terms)
        .char_poly()
        .to_int()
        .ok_or(Error::NonIntegralRecurrence)
}

/// Integer convenience wrapper around [`berlekamp_massey`].
pub fn berlekamp_massey_int(terms: &[BigInt]) -> Result<IntPoly> {
    let q: Vec<BigRational> = terms
        .iter()
        .map(|t| BigRational::from_integer(t.clone()))
        .collect();
    berlekamp_massey(&q)
}

/// Unrolls `charpoly` (monic, degree `k`) from `init` (`k` terms) to `count`
/// terms: `a_n = -sum_{i<k} c_i a_{n-k+i}`.
pub fn unroll(init: &[BigInt], charpoly: &IntPoly, count: usize) -> Vec<BigInt> {
    let k = charpoly.degree().unwrap_or(0);
    assert_eq!(init.len(), k, "init length must equal recurrence order");
    let mut out: Vec<BigInt> = init.iter().take(count).cloned().collect();
    let c = charpoly.coeffs();
    while out.len() < count {
        let n = out.len();
        let mut s = BigInt::zero();
        for i in 0..k {
            if !c[i].is_zero() {
                s -= &c[i] * &out[n - k + i];
            }
        }
        out.push(s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn fibonacci() {
        let bm = berlekamp_massey_int(&ints(&[1, 1, 2, 3, 5, 8, 13, 21])).unwrap();
        assert_eq!(bm, IntPoly::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn constant() {
        let bm = berlekamp_massey_int(&ints(&[7, 7, 7, 7])).unwrap();
        assert_eq!(bm, IntPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn linear() {
        let bm = berlekamp_massey_int(&ints(&[0, 1, 2, 3, 4, 5])).unwrap();
        assert_eq!(bm, IntPoly::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn all_zero_window() {
        assert_eq!(berlekamp_massey_int(&ints(&[0, 0, 0])).unwrap(), IntPoly::one());
    }

    #[test]
    fn eventually_zero() {
        // (0, 0, 1, 0, 0, 0, ...) needs register length 3 and charpoly x^3
        let bm = berlekamp_massey_int(&ints(&[0, 0, 1, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(bm, IntPoly::from_i64(&[0, 0, 0, 1]));
    }

    #[test]
    fn non_integral_recurrence_is_reported() {
        // a_n = a_{n-1} / 2 scaled to stay integral on this window
        let err = berlekamp_massey_int(&ints(&[8, 4, 2, 1])).unwrap_err();
        assert_eq!(err, Error::NonIntegralRecurrence);
    }

    #[test]
    fn unroll_fibonacci() {
        let f = unroll(&ints(&[1, 1]), &IntPoly::from_i64(&[-1, -1, 1]), 6);
        assert_eq!(f, ints(&[1, 1, 2, 3, 5, 8]));
    }
}
