//! The Hadamard biring `H(Z)` of integral linear recursive sequences.
//!
//! Sequences are 1-indexed, `(a_1, a_2, ...)`. Ring operations are
//! termwise; the counit is `ε(a) = a_1` and the comultiplication pairs with
//! the Hankel form `Δ(a)_{m,n} = a_{m+n-1}`, which is realized here on finite
//! windows by a certified rank factorization.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::hankel::hankel_rank_factor;
use crate::exact::recurrence::{berlekamp_massey_int, unroll};
use crate::exact::{kronecker, IntMatrix, IntPoly};

/// `a_n = B_1 a_{n-1} + ... + B_k a_{n-k}` with monic characteristic
/// polynomial `x^k - B_1 x^{k-1} - ... - B_k`, always stored minimal.
///
/// The zero sequence is stored as `init = (0)`, `charpoly = x`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinRecSeq {
    init: Vec<BigInt>,
    charpoly: IntPoly,
}

impl LinRecSeq {
    /// Validates the presentation and replaces it by the minimal one.
    pub fn new(init: Vec<BigInt>, charpoly: IntPoly) -> Result<Self> {
        if !charpoly.is_monic() {
            return Err(Error::invalid("characteristic polynomial must be monic"));
        }
        let k = charpoly.degree().unwrap();
        if init.len() != k {
            return Err(Error::invalid(format!(
                "expected {k} initial terms for a degree {k} recurrence, got {}",
                init.len()
            )));
        }
        let window = unroll(&init, &charpoly, 2 * k + 4);
        Self::minimal_from_window(&window)
    }

    /// Minimal sequence generating `terms`; the window must hold at least
    /// twice the recurrence order found, so the recurrence is determined.
    pub fn from_terms(terms: &[BigInt]) -> Result<Self> {
        let seq = Self::minimal_from_window(terms)?;
        let k = seq.charpoly.degree().unwrap();
        if terms.len() < 2 * k {
            return Err(Error::InsufficientOrder {
                needed: 2 * k,
                available: terms.len(),
            });
        }
        Ok(seq)
    }

    fn minimal_from_window(window: &[BigInt]) -> Result<Self> {
        if window.is_empty() {
            return Err(Error::invalid("empty sequence window"));
        }
        let charpoly = berlekamp_massey_int(window)?;
        let k = charpoly.degree().unwrap();
        if k == 0 {
            return Ok(Self::zero());
        }
        let seq = LinRecSeq {
            init: window[..k].to_vec(),
            charpoly,
        };
        debug_assert_eq!(seq.terms(window.len()), window);
        Ok(seq)
    }

    pub fn zero() -> Self {
        LinRecSeq {
            init: vec![BigInt::zero()],
            charpoly: IntPoly::x(),
        }
    }

    /// `(c, c, c, ...)`; `c = 1` is the ring unit.
    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinRecSeq {
            init: vec![c],
            charpoly: IntPoly::from_i64(&[-1, 1]),
        }
    }

    /// `(1, a, a^2, ...)`.
    pub fn geometric(a: BigInt) -> Self {
        LinRecSeq {
            init: vec![BigInt::one()],
            charpoly: IntPoly::new(vec![-a, BigInt::one()]),
        }
    }

    /// The primitive element `d = (0, 1, 2, 3, ...)`.
    pub fn d() -> Self {
        LinRecSeq {
            init: vec![BigInt::zero(), BigInt::one()],
            charpoly: IntPoly::from_i64(&[1, -2, 1]),
        }
    }

    pub fn init(&self) -> &[BigInt] {
        &self.init
    }

    pub fn charpoly(&self) -> &IntPoly {
        &self.charpoly
    }

    /// Recurrence order `k`.
    pub fn order(&self) -> usize {
        self.charpoly.degree().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.init.iter().all(|c| c.is_zero()) && self.charpoly == IntPoly::x()
    }

    /// First `n` terms `a_1 .. a_n`.
    pub fn terms(&self, n: usize) -> Vec<BigInt> {
        unroll(&self.init, &self.charpoly, n)
    }

    /// Companion matrix of the characteristic polynomial.
    pub fn companion(&self) -> IntMatrix {
        IntMatrix::companion(&self.charpoly)
    }

    /// Re-runs minimization; identity on stored values.
    pub fn minimized(&self) -> Result<Self> {
        Self::new(self.init.clone(), self.charpoly.clone())
    }
}

impl fmt::Display for LinRecSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self
            .terms(self.order().max(8))
            .iter()
            .map(|c| c.to_string())
            .collect();
        write!(f, "({}, ...) with charpoly {}", shown.join(", "), self.charpoly)
    }
}

/// Unrolls `terms(n)` of a sequence; see [`LinRecSeq::terms`].
pub fn lrs_terms(a: &LinRecSeq, n: usize) -> Vec<BigInt> {
    a.terms(n)
}

pub fn lrs_new(init: Vec<BigInt>, charpoly: IntPoly) -> Result<LinRecSeq> {
    LinRecSeq::new(init, charpoly)
}

/// Termwise sum. The candidate recurrence is the product of the inputs'
/// characteristic polynomials.
pub fn lrs_add(a: &LinRecSeq, b: &LinRecSeq) -> Result<LinRecSeq> {
    let degree = a.order() + b.order();
    let n = 2 * degree + 2;
    let terms: Vec<BigInt> = a
        .terms(n)
        .into_iter()
        .zip(b.terms(n))
        .map(|(x, y)| x + y)
        .collect();
    LinRecSeq::minimal_from_window(&terms)
}

pub fn lrs_neg(a: &LinRecSeq) -> LinRecSeq {
    LinRecSeq {
        init: a.init.iter().map(|c| -c).collect(),
        charpoly: a.charpoly.clone(),
    }
}

/// Candidate recurrence for the termwise product: the characteristic
/// polynomial of `companion(a) ⊗ companion(b)`.
pub fn hadamard_candidate(a: &LinRecSeq, b: &LinRecSeq) -> IntPoly {
    kronecker(&a.companion(), &b.companion()).char_poly()
}

/// Termwise (Hadamard) product.
pub fn lrs_hadamard_mul(a: &LinRecSeq, b: &LinRecSeq) -> Result<LinRecSeq> {
    let candidate = hadamard_candidate(a, b);
    let degree = candidate.degree().unwrap();
    let n = 2 * degree + 2;
    let terms: Vec<BigInt> = a
        .terms(n)
        .into_iter()
        .zip(b.terms(n))
        .map(|(x, y)| x * y)
        .collect();
    // the candidate must annihilate the product from the start
    let check = unroll(&terms[..degree], &candidate, n);
    if check != terms {
        return Err(Error::NonIntegralRecurrence);
    }
    LinRecSeq::minimal_from_window(&terms)
}

/// `ε(a) = a_1`.
pub fn lrs_counit(a: &LinRecSeq) -> BigInt {
    a.terms(1).remove(0)
}

/// A finite-window realization `Σ b_i ⊗ c_i` of `Δ(a)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorDecomposition {
    pub pairs: Vec<(LinRecSeq, LinRecSeq)>,
    pub window: usize,
}

impl TensorDecomposition {
    pub fn rank(&self) -> usize {
        self.pairs.len()
    }

    /// `Σ_i b_i(m) c_i(n)` on the `window x window` block (0-based indices).
    pub fn matrix(&self) -> Vec<Vec<BigInt>> {
        let k = self.window;
        let cols: Vec<(Vec<BigInt>, Vec<BigInt>)> = self
            .pairs
            .iter()
            .map(|(b, c)| (b.terms(k), c.terms(k)))
            .collect();
        (0..k)
            .map(|m| {
                (0..k)
                    .map(|n| cols.iter().map(|(b, c)| &b[m] * &c[n]).sum())
                    .collect()
            })
            .collect()
    }

    /// `Σ b_i(m) c_i(n) = a_{m+n-1}` on the whole window.
    pub fn reproduces(&self, a: &LinRecSeq) -> bool {
        let terms = a.terms(2 * self.window - 1);
        self.matrix()
            .iter()
            .enumerate()
            .all(|(m, row)| row.iter().enumerate().all(|(n, v)| *v == terms[m + n]))
    }

    /// `(ε ⊗ id)` applied to the decomposition: `Σ b_i(1) c_i`.
    pub fn counit_left(&self) -> Vec<BigInt> {
        let k = self.window;
        let mut out = vec![BigInt::zero(); k];
        for (b, c) in &self.pairs {
            let e = lrs_counit(b);
            for (o, v) in out.iter_mut().zip(c.terms(k)) {
                *o += &e * v;
            }
        }
        out
    }
}

fn factor_sequence(values: &[BigRational], a: &LinRecSeq) -> Result<LinRecSeq> {
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| v.is_integer().then(|| v.to_integer()))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::DecompositionUnverified("factor has non-integral entries".into()))?;
    let k = a.order();
    let seq = LinRecSeq::new(ints[..k].to_vec(), a.charpoly.clone())
        .map_err(|e| Error::DecompositionUnverified(e.to_string()))?;
    if seq.terms(ints.len()) != ints {
        return Err(Error::DecompositionUnverified(
            "factor does not satisfy the recurrence of the input".into(),
        ));
    }
    Ok(seq)
}

/// `Δ(a)` on a `K x K` window.
pub fn lrs_delta(a: &LinRecSeq, window: usize) -> Result<TensorDecomposition> {
    if window < a.order() + 2 {
        return Err(Error::InsufficientOrder {
            needed: a.order() + 2,
            available: window,
        });
    }
    let terms: Vec<BigRational> = a
        .terms(2 * window - 1)
        .into_iter()
        .map(BigRational::from_integer)
        .collect();
    let factor = hankel_rank_factor(&terms, window)?;
    let mut pairs = Vec::with_capacity(factor.rank);
    for s in 0..factor.rank {
        let column: Vec<BigRational> = factor.left.iter().map(|row| row[s].clone()).collect();
        let b = factor_sequence(&column, a)?;
        let c = factor_sequence(&factor.right[s], a)?;
        pairs.push((b, c));
    }
    let decomposition = TensorDecomposition { pairs, window };
    if !decomposition.reproduces(a) {
        return Err(Error::DecompositionUnverified(
            "window not reproduced".into(),
        ));
    }
    Ok(decomposition)
}

fn check_window(a: &LinRecSeq, window: usize) -> Result<Vec<BigInt>> {
    if window < 2 * a.order() {
        return Err(Error::InsufficientOrder {
            needed: 2 * a.order(),
            available: window,
        });
    }
    Ok(a.terms(2 * window))
}

/// `a_1 = 0` and `a_{m+n-1} = a_m + a_n` for all `m, n <= K`.
pub fn lrs_is_primitive(a: &LinRecSeq, window: usize) -> Result<bool> {
    let t = check_window(a, window)?;
    if !t[0].is_zero() {
        return Ok(false);
    }
    Ok((0..window).all(|m| (0..window).all(|n| t[m + n] == &t[m] + &t[n])))
}

/// `a_1 = 1` and `a_{m+n-1} = a_m a_n` for all `m, n <= K`.
pub fn lrs_is_grouplike(a: &LinRecSeq, window: usize) -> Result<bool> {
    let t = check_window(a, window)?;
    if !t[0].is_one() {
        return Ok(false);
    }
    Ok((0..window).all(|m| (0..window).all(|n| t[m + n] == &t[m] * &t[n])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn fib() -> LinRecSeq {
        LinRecSeq::new(ints(&[1, 1]), IntPoly::from_i64(&[-1, -1, 1])).unwrap()
    }

    fn lucas() -> LinRecSeq {
        LinRecSeq::new(ints(&[1, 3]), IntPoly::from_i64(&[-1, -1, 1])).unwrap()
    }

    #[test]
    fn construction_minimizes() {
        assert_eq!(fib().charpoly(), &IntPoly::from_i64(&[-1, -1, 1]));
        let three = LinRecSeq::new(ints(&[3, 3]), IntPoly::from_i64(&[2, -3, 1])).unwrap();
        assert_eq!(three, LinRecSeq::constant(3.into()));
        let three = LinRecSeq::new(ints(&[3, 3]), IntPoly::from_i64(&[-1, 0, 1])).unwrap();
        assert_eq!(three.init(), &ints(&[3])[..]);
        let zero = LinRecSeq::new(ints(&[0]), IntPoly::from_i64(&[-1, 1])).unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.charpoly(), &IntPoly::x());
    }

    #[test]
    fn rejects_bad_presentations() {
        assert!(LinRecSeq::new(ints(&[1]), IntPoly::from_i64(&[1, 2])).is_err());
        assert!(LinRecSeq::new(ints(&[1, 2, 3]), IntPoly::from_i64(&[-1, 1])).is_err());
    }

    #[test]
    fn eventually_zero_sequences_are_representable() {
        let s = LinRecSeq::new(ints(&[5, 0, 2]), IntPoly::from_i64(&[0, 0, 0, 1])).unwrap();
        assert_eq!(s.terms(6), ints(&[5, 0, 2, 0, 0, 0]));
    }

    #[test]
    fn terms_examples() {
        assert_eq!(LinRecSeq::d().terms(5), ints(&[0, 1, 2, 3, 4]));
        assert_eq!(fib().terms(6), ints(&[1, 1, 2, 3, 5, 8]));
        assert_eq!(LinRecSeq::constant(1.into()).terms(3), ints(&[1, 1, 1]));
    }

    #[test]
    fn ring_examples() {
        let sq = lrs_hadamard_mul(&fib(), &fib()).unwrap();
        assert_eq!(sq.terms(6), ints(&[1, 1, 4, 9, 25, 64]));
        assert_eq!(sq.charpoly(), &IntPoly::from_i64(&[1, -2, -2, 1]));
        let s = lrs_add(&fib(), &lucas()).unwrap();
        assert_eq!(s.terms(6), ints(&[2, 4, 6, 10, 16, 26]));
        assert_eq!(s.charpoly(), &IntPoly::from_i64(&[-1, -1, 1]));
        assert_eq!(lrs_hadamard_mul(&fib(), &LinRecSeq::constant(1.into())).unwrap(), fib());
        assert!(lrs_add(&fib(), &lrs_neg(&fib())).unwrap().is_zero());
    }

    #[test]
    fn counit_examples() {
        assert_eq!(lrs_counit(&LinRecSeq::d()), BigInt::zero());
        assert_eq!(lrs_counit(&LinRecSeq::constant(1.into())), BigInt::one());
        assert_eq!(lrs_counit(&lucas()), BigInt::one());
    }

    #[test]
    fn delta_of_d() {
        let dec = lrs_delta(&LinRecSeq::d(), 6).unwrap();
        assert_eq!(dec.rank(), 2);
        assert!(dec.reproduces(&LinRecSeq::d()));
        assert_eq!(dec.counit_left(), LinRecSeq::d().terms(6));
    }

    #[test]
    fn delta_of_grouplikes() {
        let one = LinRecSeq::constant(1.into());
        let dec = lrs_delta(&one, 4).unwrap();
        assert_eq!(dec.pairs, vec![(one.clone(), one.clone())]);
        let g = LinRecSeq::geometric(2.into());
        let dec = lrs_delta(&g, 5).unwrap();
        assert_eq!(dec.pairs, vec![(g.clone(), g.clone())]);
    }

    #[test]
    fn delta_window_precondition() {
        assert!(matches!(lrs_delta(&fib(), 3), Err(Error::InsufficientOrder { .. })));
    }

    #[test]
    fn primitive_and_grouplike() {
        assert!(lrs_is_primitive(&LinRecSeq::d(), 12).unwrap());
        for c in -2..=3i64 {
            let cd = LinRecSeq::new(ints(&[0, c]), IntPoly::from_i64(&[1, -2, 1])).unwrap();
            assert!(lrs_is_primitive(&cd, 12).unwrap());
            let g = LinRecSeq::geometric(c.into());
            assert!(lrs_is_grouplike(&g, 12).unwrap());
        }
        let d_plus_one = lrs_add(&LinRecSeq::d(), &LinRecSeq::constant(1.into())).unwrap();
        assert!(!lrs_is_primitive(&d_plus_one, 12).unwrap());
        assert!(!lrs_is_grouplike(&d_plus_one, 12).unwrap());
    }
}
