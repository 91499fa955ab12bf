//! Truncated formal power series over `Q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{IntPoly, RatPoly};
use crate::error::{Error, Result};

/// `a_0 + a_1 t + ... + a_N t^N + O(t^{N+1})`.
///
/// The coefficient vector always has exactly `order + 1` entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

fn int(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TruncSeries {
    /// Pads with zeros or truncates `coeffs` to `order + 1` entries.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[BigInt], order: usize) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
            order,
        )
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
            order,
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![BigRational::one()], order)
    }

    pub fn from_poly(p: &RatPoly, order: usize) -> Self {
        Self::new(p.coeffs().to_vec(), order)
    }

    /// Expansion of `num / den`; `den(0)` must be nonzero.
    pub fn from_fraction(num: &RatPoly, den: &RatPoly, order: usize) -> Result<Self> {
        Ok(&Self::from_poly(num, order) * &Self::from_poly(den, order).inverse()?)
    }

    pub fn from_int_fraction(num: &IntPoly, den: &IntPoly, order: usize) -> Result<Self> {
        Self::from_fraction(&num.to_rat(), &den.to_rat(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn constant(&self) -> &BigRational {
        &self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_ints(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant();
        if c0.is_zero() {
            return Err(Error::BadConstantTerm { expected: "nonzero" });
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut s = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    s += &self.coeffs[j] * &out[k - j];
                }
            }
            out.push(-(s * &inv0));
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Formal derivative, known to one order less.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        TruncSeries {
            coeffs: (1..=self.order())
                .map(|i| &self.coeffs[i] * int(i))
                .collect(),
        }
    }

    /// Antiderivative with zero constant term, known to one order more.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigRational::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / int(i + 1)),
        );
        TruncSeries { coeffs }
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.constant().is_one() {
            return Err(Error::BadConstantTerm { expected: "1" });
        }
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let quotient = &self.derivative() * &self.truncate(n - 1).inverse()?;
        Ok(quotient.integrate())
    }

    /// Formal exponential of a series with constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant().is_zero() {
            return Err(Error::BadConstantTerm { expected: "0" });
        }
        // h' = g' h, so n h_n = sum_{k=1}^n k g_k h_{n-k}
        let n = self.order();
        let mut h = Vec::with_capacity(n + 1);
        h.push(BigRational::one());
        for m in 1..=n {
            let mut s = BigRational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    s += &self.coeffs[k] * int(k) * &h[m - k];
                }
            }
            h.push(s / int(m));
        }
        Ok(TruncSeries { coeffs: h })
    }

    /// `f(t^k)`, keeping the order.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let n = self.order();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > n {
                break;
            }
            coeffs[i * k] = c.clone();
        }
        TruncSeries { coeffs }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = RatPoly::new(self.coeffs.clone());
        write!(f, "{} + O(t^{})", p.to_string_ascending("t"), self.order() + 1)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncSeries { coeffs }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Formal logarithm; see [`TruncSeries::log`].
pub fn series_log(f: &TruncSeries) -> Result<TruncSeries> {
    f.log()
}

/// Formal exponential; see [`TruncSeries::exp`].
pub fn series_exp(g: &TruncSeries) -> Result<TruncSeries> {
    g.exp()
}
