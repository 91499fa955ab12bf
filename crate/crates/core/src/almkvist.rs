//! Almkvist's ring `W0(Z)` of endomorphisms of free modules modulo the
//! pairs `(E, 0)`.
//!
//! A class `[E, f]` is stored by its image under `L: [E, f] ↦ 1/det(1 - tM_f)`
//! written as a reduced fraction `num/den` with `num(0) = den(0) = 1`. Since
//! `L` is injective this fraction is a complete invariant, so equality of
//! [`W0Element`]s is structural. Nilpotent parts have `det(1 - tN) = 1` and
//! disappear.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{kronecker, pade, rev_char_poly, IntMatrix, IntPoly, TruncSeries};
use crate::hadamard::LinRecSeq;
use crate::witt::{ghost, WittElement};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct W0Element {
    num: IntPoly,
    den: IntPoly,
}

/// A difference `[plus] - [minus]` of two endomorphism classes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VirtualPair {
    pub plus: IntMatrix,
    pub minus: IntMatrix,
}

impl W0Element {
    /// Builds the canonical form of `num/den`; both must have constant term 1.
    pub fn from_fraction(num: IntPoly, den: IntPoly) -> Result<Self> {
        if !num.constant_term().is_one() || !den.constant_term().is_one() {
            return Err(Error::BadConstantTerm { expected: "1" });
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        let g = num.to_rat().gcd(&den.to_rat());
        if g.degree().unwrap_or(0) == 0 {
            return W0Element { num, den };
        }
        // g(0) != 0 since num(0) = 1; by Gauss's lemma the normalized g is
        // integral and the quotients stay in Z[t].
        let g = g.normalize_constant().expect("gcd has nonzero constant term");
        let num = num.to_rat().div_rem(&g).0.to_int().expect("integral quotient");
        let den = den.to_rat().div_rem(&g).0.to_int().expect("integral quotient");
        W0Element { num, den }
    }

    pub fn zero() -> Self {
        W0Element {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    /// `[Z, 1]`, with `L`-image `1/(1-t)`.
    pub fn one() -> Self {
        Self::scalar(&BigInt::one())
    }

    /// `[Z, a]`, with `L`-image `1/(1-at)`.
    pub fn scalar(a: &BigInt) -> Self {
        Self::reduce(IntPoly::one(), IntPoly::new(vec![BigInt::one(), -a.clone()]))
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Companion-matrix representative `[A+] - [A-]` with
    /// `det(1 - tA+) = den` and `det(1 - tA-) = num`.
    pub fn virtual_pair(&self) -> VirtualPair {
        VirtualPair {
            plus: matrix_with_rev_char_poly(&self.den),
            minus: matrix_with_rev_char_poly(&self.num),
        }
    }
}

impl fmt::Display for W0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &IntPoly| {
            let s = p.to_string_ascending("t");
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_one() {
            f.write_str(&self.num.to_string_ascending("t"))
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

/// A matrix `A` with `det(1 - tA) = q`, for `q(0) = 1`: the companion matrix
/// of the reversed polynomial.
pub fn matrix_with_rev_char_poly(q: &IntPoly) -> IntMatrix {
    let k = q.degree().unwrap_or(0);
    if k == 0 {
        return IntMatrix::zeros(0);
    }
    IntMatrix::companion(&q.reverse(k))
}

/// `[E, f] ↦ 1/det(1 - tM)`.
pub fn w0_from_matrix(m: &IntMatrix) -> W0Element {
    W0Element::reduce(IntPoly::one(), rev_char_poly(m))
}

/// Direct sum: product of the `L`-images.
pub fn w0_add(a: &W0Element, b: &W0Element) -> W0Element {
    W0Element::reduce(&a.num * &b.num, &a.den * &b.den)
}

pub fn w0_neg(a: &W0Element) -> W0Element {
    W0Element {
        num: a.den.clone(),
        den: a.num.clone(),
    }
}

pub fn w0_sub(a: &W0Element, b: &W0Element) -> W0Element {
    w0_add(a, &w0_neg(b))
}

/// Tensor product of virtual pairs:
/// `([A+]-[A-])([B+]-[B-]) = [A+⊗B+] + [A-⊗B-] - [A+⊗B-] - [A-⊗B+]`.
pub fn w0_mul(a: &W0Element, b: &W0Element) -> W0Element {
    let pa = a.virtual_pair();
    let pb = b.virtual_pair();
    let r = |x: &IntMatrix, y: &IntMatrix| rev_char_poly(&kronecker(x, y));
    let den = &r(&pa.plus, &pb.plus) * &r(&pa.minus, &pb.minus);
    let num = &r(&pa.plus, &pb.minus) * &r(&pa.minus, &pb.plus);
    W0Element::reduce(num, den)
}

/// `L`: the truncated expansion of `num/den`, always integral.
pub fn l_map(a: &W0Element, order: usize) -> WittElement {
    let s = TruncSeries::from_int_fraction(&a.num, &a.den, order).expect("den(0) = 1");
    WittElement::new(s).expect("constant term 1")
}

/// `Tr`: the power-trace sequence `Tr(A+^n) - Tr(A-^n)`, computed through the
/// commuting square as `ghost(L(a))`, with its minimal recurrence.
///
/// The first `count` terms are checked against the recurrence before
/// returning.
pub fn tr_map(a: &W0Element, count: usize) -> Result<LinRecSeq> {
    if count == 0 {
        return Err(Error::invalid("tr_map needs count >= 1"));
    }
    let d = a.num.degree().unwrap_or(0) + a.den.degree().unwrap_or(0);
    let order = count.max(2 * d + 4);
    let g = ghost(&l_map(a, order))
        .to_ints()
        .ok_or(Error::IntegralityViolation("tr_map"))?;
    // the roots of den are the eigenvalues of A+, those of num of A-
    let charpoly = &a.den.reverse(a.den.degree().unwrap_or(0))
        * &a.num.reverse(a.num.degree().unwrap_or(0));
    let seq = if d == 0 {
        LinRecSeq::zero()
    } else {
        LinRecSeq::new(g[..d].to_vec(), charpoly)?
    };
    if seq.terms(order) != g {
        return Err(Error::IntegralityViolation("tr_map recurrence"));
    }
    Ok(seq)
}

/// Detects whether `f` lies in the image of `L`: Padé reconstruction with
/// both polynomials required to be integral.
pub fn w0_from_witt(f: &WittElement, max_deg: usize) -> Result<Option<W0Element>> {
    let Some((p, q)) = pade(f.series(), max_deg)? else {
        return Ok(None);
    };
    match (p.to_int(), q.to_int()) {
        (Some(num), Some(den)) => Ok(Some(W0Element::reduce(num, den))),
        _ => Ok(None),
    }
}
