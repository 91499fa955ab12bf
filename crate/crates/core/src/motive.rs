//! Motives of torified varieties: the ring `Z[L]` with its counting
//! measures, zeta functions, lambda-ring and biring structures.
//!
//! A torified variety `X = ⊔ T_i` with `T_i` a `d(i)`-dimensional torus has
//! motive `Σ (L - 1)^{d(i)}` and `#X(F_{1^n}) = Σ n^{d(i)}`. Adams operations
//! act by `Ψ^n(L) = L^n`; the comultiplication makes `D = L - 2` primitive.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::exact::IntPoly;
use crate::hadamard::LinRecSeq;
use crate::witt::{ghost_inverse, GhostVector, WittElement};

/// An integer polynomial in the Lefschetz motive `L`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MotivePoly(pub IntPoly);

impl MotivePoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        MotivePoly(IntPoly::from_i64(coeffs))
    }

    /// `L`
    pub fn lefschetz() -> Self {
        MotivePoly(IntPoly::x())
    }

    /// `D = L - 2`
    pub fn primitive() -> Self {
        Self::from_i64(&[-2, 1])
    }

    /// `[G_m^d] = (L - 1)^d`
    pub fn torus(d: u32) -> Self {
        MotivePoly(IntPoly::from_i64(&[-1, 1]).pow(d))
    }

    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree().unwrap_or(0)
    }

    pub fn eval(&self, l: &BigInt) -> BigInt {
        self.0.eval(l)
    }

    pub fn add(&self, other: &Self) -> Self {
        MotivePoly(&self.0 + &other.0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        MotivePoly(&self.0 * &other.0)
    }
}

impl fmt::Display for MotivePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.to_string_descending("L"))
    }
}

/// `X = ⊔ T_i`, recorded by the torus dimensions `d(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TorifiedVariety {
    pub torus_dims: Vec<u32>,
}

impl TorifiedVariety {
    pub fn new(torus_dims: Vec<u32>) -> Self {
        TorifiedVariety { torus_dims }
    }

    pub fn point() -> Self {
        Self::new(vec![0])
    }

    pub fn torus(d: u32) -> Self {
        Self::new(vec![d])
    }

    /// Disjoint union.
    pub fn union(&self, other: &Self) -> Self {
        let mut dims = self.torus_dims.clone();
        dims.extend(&other.torus_dims);
        Self::new(dims)
    }

    /// Product; `T^a × T^b = T^{a+b}`.
    pub fn product(&self, other: &Self) -> Self {
        let dims = self
            .torus_dims
            .iter()
            .flat_map(|a| other.torus_dims.iter().map(move |b| a + b))
            .collect();
        Self::new(dims)
    }
}

/// A ring morphism `Z[L] → Z`, determined by `μ(L)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CountingMeasure {
    pub l_value: BigInt,
}

impl CountingMeasure {
    pub fn new(l_value: BigInt) -> Self {
        CountingMeasure { l_value }
    }

    /// `μ_{F_{1^n}}: L ↦ 1 + n`.
    pub fn f1n(n: u64) -> Self {
        Self::new(BigInt::from(n) + 1)
    }

    pub fn apply(&self, p: &MotivePoly) -> BigInt {
        p.eval(&self.l_value)
    }
}

/// A polynomial in `L_1, L_2`, the target of the comultiplication.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePoly {
    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BigInt)>) -> Self {
        let mut out = BivariatePoly::default();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, k: (u32, u32), c: BigInt) {
        let e = self.terms.entry(k).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_terms([((0, 0), c)])
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BivariatePoly::default();
        for ((i, j), a) in &self.terms {
            for ((k, l), b) in &other.terms {
                out.add_term((i + k, j + l), a * b);
            }
        }
        out
    }

    pub fn eval(&self, l1: &BigInt, l2: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|((i, j), c)| c * Pow::pow(l1, *i) * Pow::pow(l2, *j))
            .sum()
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((i, j), c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for (var, e) in [("L1", *i), ("L2", *j)] {
                match e {
                    0 => {}
                    1 => mono.push_str(var),
                    _ => mono.push_str(&format!("{var}^{e}")),
                }
            }
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// `[X] = Σ (L - 1)^{d(i)}`.
pub fn motive_of_torified(x: &TorifiedVariety) -> MotivePoly {
    x.torus_dims
        .iter()
        .fold(MotivePoly::default(), |acc, &d| acc.add(&MotivePoly::torus(d)))
}

/// `#X(F_{1^n}) = Σ n^{d(i)}`.
pub fn f1_point_count(x: &TorifiedVariety, n: u64) -> BigInt {
    let n = BigInt::from(n);
    x.torus_dims.iter().map(|&d| Pow::pow(&n, d)).sum()
}

/// `ζ_{F_1}(X) = exp(Σ #X(F_{1^n}) t^n / n)`, in general only in `W(Q)`.
pub fn f1_zeta(x: &TorifiedVariety, order: usize) -> WittElement {
    let counts: Vec<BigInt> = (1..=order as u64).map(|n| f1_point_count(x, n)).collect();
    ghost_inverse(&GhostVector::from_ints(&counts))
}

/// Kapranov zeta `Σ μ(λ^n(p)) t^n`: the lambda-ring morphism
/// `Z[L] → W(Z)` whose ghost components are `p(m^n)`, `m = μ(L)`.
pub fn kapranov_zeta(p: &MotivePoly, mu: &CountingMeasure, order: usize) -> Result<WittElement> {
    let mut power = BigInt::one();
    let mut ghosts = Vec::with_capacity(order);
    for _ in 0..order {
        power *= &mu.l_value;
        ghosts.push(p.eval(&power));
    }
    let z = ghost_inverse(&GhostVector::from_ints(&ghosts));
    if !z.is_integral() {
        return Err(Error::IntegralityViolation("kapranov_zeta"));
    }
    Ok(z)
}

/// `Ψ^n`: `L ↦ L^n`.
pub fn motive_adams(p: &MotivePoly, n: u32) -> MotivePoly {
    assert!(n >= 1, "Adams index must be positive");
    MotivePoly(p.0.compose(&IntPoly::monomial(BigInt::one(), n as usize)))
}

/// `μ(λ^0(p)), ..., μ(λ^upto(p))`, read off from the ghost preimage of
/// `(μ(Ψ^1 p), μ(Ψ^2 p), ...)`.
pub fn motive_lambda(p: &MotivePoly, upto: usize, mu: &CountingMeasure) -> Result<Vec<BigInt>> {
    let ghosts: Vec<BigInt> = (1..=upto as u32)
        .map(|n| mu.apply(&motive_adams(p, n)))
        .collect();
    ghost_inverse(&GhostVector::from_ints(&ghosts))
        .series()
        .to_ints()
        .ok_or(Error::IntegralityViolation("motive_lambda"))
}

/// `Δ(p) = p(L_1 + L_2 - 2)`, the ring morphism with `D = L - 2` primitive.
pub fn motive_delta(p: &MotivePoly) -> BivariatePoly {
    let image_of_l = BivariatePoly::from_terms([
        ((1, 0), BigInt::one()),
        ((0, 1), BigInt::one()),
        ((0, 0), BigInt::from(-2)),
    ]);
    p.0.coeffs().iter().rev().fold(BivariatePoly::default(), |acc, c| {
        acc.mul(&image_of_l).add(&BivariatePoly::constant(c.clone()))
    })
}

/// `ε(p) = p(2)`.
pub fn motive_counit(p: &MotivePoly) -> BigInt {
    p.eval(&BigInt::from(2))
}

/// The biring morphism `Z[L] → H(Z)` with `L ↦ 2 + c·d`, i.e. term `n` of
/// the image is `p(2 + c(n - 1))`. `c = 1` is the morphism paired with `μ_2`.
pub fn c_morphism(p: &MotivePoly, c: &BigInt, count: usize) -> Result<LinRecSeq> {
    let k = p.degree() + 1;
    if count < k + 1 {
        return Err(Error::InsufficientOrder {
            needed: k + 1,
            available: count,
        });
    }
    let term = |n: usize| p.eval(&(BigInt::from(2) + c * BigInt::from(n - 1)));
    let init: Vec<BigInt> = (1..=k).map(term).collect();
    // polynomial sequences of degree < k are annihilated by (x - 1)^k
    let seq = LinRecSeq::new(init, IntPoly::from_i64(&[-1, 1]).pow(k as u32))?;
    let expected: Vec<BigInt> = (1..=count).map(term).collect();
    if seq.terms(count) != expected {
        return Err(Error::IntegralityViolation("c_morphism"));
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witt::ghost;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn motive_examples() {
        let x = TorifiedVariety::new(vec![1, 1, 0]);
        assert_eq!(motive_of_torified(&x), MotivePoly::from_i64(&[-1, 2]));
        assert_eq!(motive_of_torified(&TorifiedVariety::default()), MotivePoly::default());
        assert_eq!(motive_of_torified(&TorifiedVariety::torus(2)), MotivePoly::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn point_count_examples() {
        assert_eq!(f1_point_count(&TorifiedVariety::torus(2), 5), b(25));
        assert_eq!(f1_point_count(&TorifiedVariety::point(), 9), b(1));
        let x = TorifiedVariety::new(vec![1, 1, 0]);
        assert_eq!(f1_point_count(&x, 3), b(7));
        assert_eq!(CountingMeasure::f1n(3).apply(&motive_of_torified(&x)), b(7));
    }

    #[test]
    fn f1_zeta_examples() {
        for i in 0..4u32 {
            let g = ghost(&f1_zeta(&TorifiedVariety::torus(i), 8)).to_ints().unwrap();
            let expect: Vec<BigInt> = (1..=8i64).map(|n| Pow::pow(&b(n), i)).collect();
            assert_eq!(g, expect);
        }
        assert_eq!(f1_zeta(&TorifiedVariety::point(), 6), WittElement::one(6));
        assert!(!f1_zeta(&TorifiedVariety::torus(1), 6).is_integral());
    }

    #[test]
    fn kapranov_examples() {
        let m = CountingMeasure::new(b(5));
        assert_eq!(kapranov_zeta(&MotivePoly::lefschetz(), &m, 8).unwrap(), WittElement::geometric(&b(5), 8));
        assert_eq!(kapranov_zeta(&MotivePoly::from_i64(&[1]), &m, 8).unwrap(), WittElement::one(8));
        let z = kapranov_zeta(&MotivePoly::from_i64(&[1, 1]), &CountingMeasure::new(b(2)), 8).unwrap();
        // 1/((1-2t)(1-t)) = sum (2^{n+1} - 1) t^n
        let expect: Vec<i64> = (0..=8).map(|n| (1 << (n + 1)) - 1).collect();
        assert_eq!(z, WittElement::from_i64(&expect, 8).unwrap());
    }

    #[test]
    fn adams_and_lambda() {
        assert_eq!(motive_adams(&MotivePoly::from_i64(&[0, 1, 1]), 2), MotivePoly::from_i64(&[0, 0, 1, 0, 1]));
        let p = MotivePoly::from_i64(&[3, -1, 2]);
        assert_eq!(motive_adams(&p, 1), p);
        assert_eq!(
            motive_lambda(&MotivePoly::lefschetz(), 3, &CountingMeasure::new(b(2))).unwrap(),
            vec![b(1), b(2), b(4), b(8)]
        );
    }

    #[test]
    fn delta_and_counit() {
        let d = motive_delta(&MotivePoly::primitive());
        assert_eq!(d.to_string(), "L1+L2-4");
        assert_eq!(motive_counit(&MotivePoly::primitive()), b(0));
        assert_eq!(motive_delta(&MotivePoly::from_i64(&[1])), BivariatePoly::constant(b(1)));
        assert_eq!(motive_counit(&MotivePoly::from_i64(&[1])), b(1));
        let sq = motive_delta(&MotivePoly::from_i64(&[0, 0, 1]));
        let l = motive_delta(&MotivePoly::lefschetz());
        assert_eq!(sq, l.mul(&l));
    }

    #[test]
    fn c_morphism_examples() {
        let d = c_morphism(&MotivePoly::primitive(), &b(1), 8).unwrap();
        assert_eq!(d, LinRecSeq::d());
        for i in 0..4u32 {
            let s = c_morphism(&MotivePoly::torus(i), &b(1), 8).unwrap();
            let expect: Vec<BigInt> = (1..=8i64).map(|n| Pow::pow(&b(n), i)).collect();
            assert_eq!(s.terms(8), expect);
        }
        let p = MotivePoly::from_i64(&[4, 0, -1, 3]);
        let s = c_morphism(&p, &b(0), 6).unwrap();
        assert_eq!(s, LinRecSeq::constant(p.eval(&b(2))));
        assert!(c_morphism(&p, &b(1), 3).is_err());
    }
}
