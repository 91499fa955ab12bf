//! The big Witt ring `W(Z) ⊂ W(Q)`.
//!
//! Elements are power series with constant term 1. Witt addition is the
//! ordinary product of series; Witt multiplication and the Adams operations
//! are defined on geometric series by
//!
//! ```text
//! 1/(1-at) ⊗ 1/(1-bt) = 1/(1-abt)      Ψ_n(1/(1-at)) = 1/(1-a^n t)
//! ```
//!
//! and computed here by transport through the ghost map
//! `f ↦ t f'(t) / f(t)`, under which `⊗` becomes the componentwise product
//! and `Ψ_n` becomes `g_m ↦ g_{nm}`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::TruncSeries;

/// A Witt vector stored as its truncated power series.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WittElement {
    series: TruncSeries,
    integral: bool,
}

impl WittElement {
    /// Fails with [`Error::BadConstantTerm`] unless the constant term is 1.
    pub fn new(series: TruncSeries) -> Result<Self> {
        if !series.constant().is_one() {
            return Err(Error::BadConstantTerm { expected: "1" });
        }
        let integral = series.is_integral();
        Ok(WittElement { series, integral })
    }

    pub fn from_ints(coeffs: &[BigInt], order: usize) -> Result<Self> {
        Self::new(TruncSeries::from_ints(coeffs, order))
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Result<Self> {
        Self::new(TruncSeries::from_i64(coeffs, order))
    }

    /// The Witt zero, the series 1.
    pub fn zero(order: usize) -> Self {
        WittElement {
            series: TruncSeries::one(order),
            integral: true,
        }
    }

    /// The Witt one, `1/(1-t)`.
    pub fn one(order: usize) -> Self {
        Self::geometric(&BigInt::one(), order)
    }

    /// `1/(1-at)`.
    pub fn geometric(a: &BigInt, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut p = BigInt::one();
        for _ in 0..=order {
            coeffs.push(p.clone());
            p *= a;
        }
        WittElement {
            series: TruncSeries::from_ints(&coeffs, order),
            integral: true,
        }
    }

    pub fn series(&self) -> &TruncSeries {
        &self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    pub fn coeffs(&self) -> &[BigRational] {
        self.series.coeffs()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.series.truncate(order)).expect("truncation keeps constant term")
    }
}

impl fmt::Display for WittElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Ghost components `g_1 .. g_N`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GhostVector {
    components: Vec<BigRational>,
}

impl GhostVector {
    pub fn new(components: Vec<BigRational>) -> Self {
        GhostVector { components }
    }

    pub fn from_ints(components: &[BigInt]) -> Self {
        Self::new(
            components
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn from_i64(components: &[i64]) -> Self {
        Self::new(
            components
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// 1-indexed component `g_n`.
    pub fn get(&self, n: usize) -> &BigRational {
        &self.components[n - 1]
    }

    pub fn components(&self) -> &[BigRational] {
        &self.components
    }

    pub fn to_ints(&self) -> Option<Vec<BigInt>> {
        self.components
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn add(&self, other: &GhostVector) -> GhostVector {
        GhostVector::new(
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn mul(&self, other: &GhostVector) -> GhostVector {
        GhostVector::new(
            self.components
                .par_iter()
                .zip(other.components.par_iter())
                .map(|(a, b)| a * b)
                .collect(),
        )
    }
}

/// `a ⊕ b`: the product of series.
pub fn witt_add(a: &WittElement, b: &WittElement) -> WittElement {
    WittElement {
        series: a.series() * b.series(),
        integral: a.integral && b.integral,
    }
}

/// The additive inverse `1/a`.
pub fn witt_neg(a: &WittElement) -> WittElement {
    let series = a.series.inverse().expect("constant term is 1");
    WittElement {
        series,
        integral: a.integral,
    }
}

/// `a ⊖ b`.
pub fn witt_sub(a: &WittElement, b: &WittElement) -> WittElement {
    witt_add(a, &witt_neg(b))
}

/// Coefficients of `t a'(t) / a(t)` at `t^1 .. t^N`, via Newton's identity
/// `g_n = n a_n - sum_{k=1}^{n-1} g_k a_{n-k}`.
pub fn ghost(a: &WittElement) -> GhostVector {
    let c = a.coeffs();
    let n = a.order();
    let mut g: Vec<BigRational> = Vec::with_capacity(n);
    for m in 1..=n {
        let mut s = &c[m] * BigRational::from_integer(BigInt::from(m));
        for k in 1..m {
            if !c[m - k].is_zero() {
                s -= &g[k - 1] * &c[m - k];
            }
        }
        g.push(s);
    }
    GhostVector::new(g)
}

/// `exp(sum g_n t^n / n)`, the inverse of [`ghost`].
pub fn ghost_inverse(g: &GhostVector) -> WittElement {
    let n = g.len();
    let mut h: Vec<BigRational> = Vec::with_capacity(n + 1);
    h.push(BigRational::one());
    for m in 1..=n {
        let mut s = BigRational::zero();
        for k in 1..=m {
            let gk = g.get(k);
            if !gk.is_zero() {
                s += gk * &h[m - k];
            }
        }
        h.push(s / BigRational::from_integer(BigInt::from(m)));
    }
    WittElement::new(TruncSeries::new(h, n)).expect("constant term is 1")
}

/// `a ⊗ b`, computed as the ghost preimage of the componentwise product.
pub fn witt_mul(a: &WittElement, b: &WittElement) -> Result<WittElement> {
    let out = ghost_inverse(&ghost(a).mul(&ghost(b)));
    if a.integral && b.integral && !out.integral {
        return Err(Error::IntegralityViolation("witt_mul"));
    }
    Ok(out)
}

/// The Adams operation `Ψ_n`; output order is `floor(order / n)`.
pub fn adams(a: &WittElement, n: usize) -> Result<WittElement> {
    if n == 0 {
        return Err(Error::invalid("Adams index must be positive"));
    }
    if a.order() < n {
        return Err(Error::InsufficientOrder {
            needed: n,
            available: a.order(),
        });
    }
    let g = ghost(a);
    let out_order = a.order() / n;
    let reindexed = GhostVector::new((1..=out_order).map(|m| g.get(n * m).clone()).collect());
    let out = ghost_inverse(&reindexed);
    if a.integral && !out.integral {
        return Err(Error::IntegralityViolation("adams"));
    }
    Ok(out)
}
