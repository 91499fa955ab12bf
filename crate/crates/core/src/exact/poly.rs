//! Dense univariate polynomials over the integers and the rationals.
//!
//! Coefficients are stored in ascending degree order and trailing zeros are
//! always trimmed, so the zero polynomial has an empty coefficient list and
//! structural equality is polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficient ring for [`Poly`].
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + fmt::Display
{
}

impl Coeff for BigInt {}
impl Coeff for BigRational {}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

impl<T: Coeff> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^deg`
    pub fn monomial(c: T, deg: usize) -> Self {
        let mut coeffs = vec![T::zero(); deg];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn constant_term(&self) -> T {
        self.coeff(0)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x + c)
    }

    /// `x^n * p(1/x)`; requires `n >= deg p`.
    pub fn reverse(&self, n: usize) -> Self {
        assert!(self.coeffs.len() <= n + 1, "reverse length below degree");
        let mut coeffs = vec![T::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[n - i] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let mut k = T::zero();
                for _ in 0..i {
                    k = k + &T::one();
                }
                c.clone() * &k
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(other(x))`
    pub fn compose(&self, other: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * other) + &Self::constant(c.clone()))
    }

    /// Number of trailing `x` factors (multiplicity of the root 0).
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Removes every factor of `x`.
    pub fn strip_x(&self) -> Self {
        Self::new(self.coeffs[self.x_valuation()..].to_vec())
    }

    /// Ascending rendering in `var`, e.g. `1-3t+t^2`.
    pub fn to_string_ascending(&self, var: &str) -> String {
        render(self.coeffs.iter().enumerate(), var)
    }

    /// Descending rendering in `var`, e.g. `x^2-x-1`.
    pub fn to_string_descending(&self, var: &str) -> String {
        render(self.coeffs.iter().enumerate().rev(), var)
    }
}

fn render<'a, T: Coeff + 'a>(terms: impl Iterator<Item = (usize, &'a T)>, var: &str) -> String {
    let mut out = String::new();
    for (i, c) in terms {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let unit = mag == "1";
        if i == 0 {
            out.push_str(&mag);
            continue;
        }
        if !unit {
            if mag.contains('/') {
                out.push_str(&format!("({mag})"));
            } else {
                out.push_str(&mag);
            }
        }
        out.push_str(var);
        if i > 1 {
            out.push_str(&format!("^{i}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_descending("x"))
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Poly::new(out)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl IntPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Division with remainder by a monic divisor, staying inside `Z[x]`.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (IntPoly::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = rem[i].clone();
            if c.is_zero() {
                continue;
            }
            quot[i - d] = c.clone();
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i - d + j] -= &c * b;
            }
        }
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Exact quotient `self / divisor` if it exists in `Z[x]`.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let q = self.to_rat().div_rem(&divisor.to_rat());
        if !q.1.is_zero() {
            return None;
        }
        q.0.to_int()
    }

    /// Gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }
}

impl RatPoly {
    pub fn from_int(p: &IntPoly) -> Self {
        p.to_rat()
    }

    /// `Some` when every coefficient is an integer.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }

    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let lead = divisor.leading().expect("division by zero polynomial").clone();
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (RatPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = &rem[i] / &lead;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i - d + j] = &rem[i - d + j] - &(&c * b);
            }
            quot[i - d] = c;
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn make_monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Scales so the constant term is one; `None` if it is zero.
    pub fn normalize_constant(&self) -> Option<RatPoly> {
        let c = self.constant_term();
        if c.is_zero() {
            return None;
        }
        Some(self.scale(&c.recip()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(ip(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(ip(&[0, 0]).is_zero());
        assert_eq!(ip(&[]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = ip(&[1, 1]);
        let b = ip(&[1, -1]);
        assert_eq!(&a * &b, ip(&[1, 0, -1]));
        assert_eq!(&a + &b, ip(&[2]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(a.pow(3), ip(&[1, 3, 3, 1]));
        assert_eq!(a.eval(&BigInt::from(4)), BigInt::from(5));
    }

    #[test]
    fn compose_and_reverse() {
        // (x+1)^2 at x -> x-1 is x^2
        let sq = ip(&[1, 2, 1]);
        assert_eq!(sq.compose(&ip(&[-1, 1])), ip(&[0, 0, 1]));
        assert_eq!(ip(&[1, -3]).reverse(1), ip(&[-3, 1]));
        assert_eq!(ip(&[1]).reverse(2), ip(&[0, 0, 1]));
    }

    #[test]
    fn monic_division() {
        let f = ip(&[-1, 0, 0, 0, 1]); // x^4 - 1
        let (q, r) = f.div_rem_monic(&ip(&[-1, 1]));
        assert_eq!(q, ip(&[1, 1, 1, 1]));
        assert!(r.is_zero());
        let (_, r) = ip(&[1, 0, 1]).div_rem_monic(&ip(&[-1, 1]));
        assert_eq!(r, ip(&[2]));
    }

    #[test]
    fn rational_gcd() {
        let a = (&ip(&[1, -2]) * &ip(&[1, 1])).to_rat();
        let b = (&ip(&[1, -2]) * &ip(&[1, 5])).to_rat();
        let g = a.gcd(&b);
        assert_eq!(g.normalize_constant().unwrap().to_int().unwrap(), ip(&[1, -2]));
        assert!(ip(&[2, 1]).exact_div(&ip(&[1, 1])).is_none());
        assert_eq!(ip(&[2, 2]).exact_div(&ip(&[1, 1])), Some(ip(&[2])));
    }

    #[test]
    fn rendering() {
        assert_eq!(ip(&[1, -3]).to_string_ascending("t"), "1-3t");
        assert_eq!(ip(&[1, -1, -1]).to_string_ascending("t"), "1-t-t^2");
        assert_eq!(ip(&[-1, -1, 1]).to_string(), "x^2-x-1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        let r = RatPoly::new(vec![BigRational::new(1.into(), 1.into()), BigRational::new(3.into(), 2.into())]);
        assert_eq!(r.to_string_ascending("t"), "1+(3/2)t");
    }
}
