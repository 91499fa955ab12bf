//! Finite fields `F_{p^n}` small enough to tabulate.
//!
//! An element is encoded as the integer `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`
//! where `c_0 + c_1 x + ...` is its residue modulo the defining polynomial.
//! Multiplication goes through discrete log tables built from the smallest
//! primitive element.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::IntPoly;

/// Enumeration budget used when none is supplied.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Field sizes are stored in `u32`.
const MAX_FIELD_SIZE: u64 = 1 << 31;

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// `p^n`, or `None` past `u64`.
pub(crate) fn checked_pow(p: u64, n: u32) -> Option<u64> {
    p.checked_pow(n)
}

// Dense polynomials over F_p, ascending, not necessarily trimmed.

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    // m monic
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - lead * mi % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_rem(&prod, m, p)
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    if n <= 1 {
        return n == 1;
    }
    for k in 1..=n / 2 {
        let count = p.pow(k as u32);
        for low in 0..count {
            let mut d = digits(low, p, k);
            d.push(1);
            if trim(poly_rem(f, &d, p)).is_empty() {
                return false;
            }
        }
    }
    true
}

fn digits(mut v: u64, p: u64, n: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(v % p);
        v /= p;
    }
    out
}

fn undigits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// The lexicographically smallest monic irreducible polynomial of degree `n`
/// over `F_p`, comparing `(c_0, c_1, ..., c_{n-1})` with `c_0` most significant.
fn smallest_irreducible(p: u64, n: usize) -> Vec<u64> {
    let count = p.pow(n as u32);
    for idx in 0..count {
        // c_0 is the most significant digit of idx
        let mut f: Vec<u64> = digits(idx, p, n).into_iter().rev().collect();
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// `F_{p^n}` with tabulated logarithms.
#[derive(Clone)]
pub struct FiniteField {
    p: u64,
    n: usize,
    modulus: Vec<u64>,
    size: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[k] = log(1 + g^k)`, or `NO_LOG` when `1 + g^k = 0`; empty in
    /// characteristic 2, where addition is xor.
    zech: Vec<u32>,
}

const NO_LOG: u32 = u32::MAX;

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteField(F_{}^{} mod {})", self.p, self.n, self.modulus())
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

/// `F_{p^n}` under the default budget.
pub fn make_field(p: u64, n: usize) -> Result<FiniteField> {
    make_field_with_budget(p, n, DEFAULT_BUDGET)
}

/// `F_{p^n}`; fails with [`Error::BudgetExceeded`] if `p^n > budget`.
pub fn make_field_with_budget(p: u64, n: usize, budget: u64) -> Result<FiniteField> {
    check_field(p, n, budget)?;
    FiniteField::build(p, smallest_irreducible(p, n))
}

/// `F_p[x] / (modulus)` for a caller-chosen monic irreducible `modulus`.
pub fn make_field_with_modulus(p: u64, modulus: &IntPoly, budget: u64) -> Result<FiniteField> {
    let n = modulus
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::invalid("modulus must have positive degree"))?;
    check_field(p, n, budget)?;
    if !modulus.is_monic() {
        return Err(Error::invalid("modulus must be monic"));
    }
    let pb = num_bigint::BigInt::from(p);
    let f: Vec<u64> = modulus
        .coeffs()
        .iter()
        .map(|c| {
            let r = ((c % &pb) + &pb) % &pb;
            u64::try_from(r).expect("reduced mod p")
        })
        .collect();
    if !is_irreducible(&f, p) {
        return Err(Error::invalid(format!("{modulus} is reducible mod {p}")));
    }
    FiniteField::build(p, f)
}

fn check_field(p: u64, n: usize, budget: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::invalid("extension degree must be positive"));
    }
    let size = u32::try_from(n)
        .ok()
        .and_then(|n| checked_pow(p, n))
        .unwrap_or(u64::MAX);
    if size > budget || size > MAX_FIELD_SIZE {
        return Err(Error::BudgetExceeded {
            needed: size as u128,
            budget: budget.min(MAX_FIELD_SIZE),
        });
    }
    Ok(())
}

/// Digitwise addition of base-`p` encodings.
fn add_digits(mut a: u32, mut b: u32, p: u32) -> u32 {
    let (mut out, mut place) = (0u32, 1u32);
    while a > 0 || b > 0 {
        out += (a % p + b % p) % p * place;
        a /= p;
        b /= p;
        place = place.wrapping_mul(p);
    }
    out
}

impl FiniteField {
    fn build(p: u64, modulus: Vec<u64>) -> Result<Self> {
        let n = modulus.len() - 1;
        let size = p.pow(n as u32);
        let group = size - 1;
        let factors = prime_factors(group);
        let pow = |base: &[u64], mut e: u64| {
            let mut acc = vec![1u64];
            let mut b = base.to_vec();
            while e > 0 {
                if e & 1 == 1 {
                    acc = poly_mulmod(&acc, &b, &modulus, p);
                }
                b = poly_mulmod(&b, &b, &modulus, p);
                e >>= 1;
            }
            trim(acc)
        };
        let generator = (1..size)
            .map(|g| trim(digits(g, p, n)))
            .find(|g| factors.iter().all(|&r| pow(g, group / r) != [1]))
            .expect("multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(group as usize);
        let mut log = vec![0u32; size as usize];
        let mut cur = vec![1u64];
        for i in 0..group {
            let mut d = cur.clone();
            d.resize(n, 0);
            let v = undigits(&d, p) as u32;
            exp.push(v);
            log[v as usize] = i as u32;
            cur = poly_mulmod(&cur, &generator, &modulus, p);
        }
        let zech = if p == 2 {
            Vec::new()
        } else {
            exp.iter()
                .map(|&v| match add_digits(1, v, p as u32) {
                    0 => NO_LOG,
                    s => log[s as usize],
                })
                .collect()
        };
        Ok(FiniteField {
            p,
            n,
            modulus,
            size: size as u32,
            zech,
            exp,
            log,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// `p^n`.
    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn modulus(&self) -> IntPoly {
        IntPoly::new(self.modulus.iter().map(|&c| c.into()).collect())
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> + Clone {
        0..self.size
    }

    /// The image of an integer under `Z → F_p ⊂ F_{p^n}`.
    pub fn from_int(&self, c: i64) -> u32 {
        c.rem_euclid(self.p as i64) as u32
    }

    /// The element with residue coefficients `c_0, c_1, ...`.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> u32 {
        let d: Vec<u64> = coeffs.iter().map(|c| c % self.p).collect();
        let mut d = poly_rem(&d, &self.modulus, self.p);
        d.resize(self.n, 0);
        undigits(&d, self.p) as u32
    }

    pub fn coeffs(&self, a: u32) -> Vec<u64> {
        digits(a as u64, self.p, self.n)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        // a + b = a (1 + b/a)
        let group = self.size - 1;
        let (la, lb) = (self.log[a as usize], self.log[b as usize]);
        let d = if lb >= la { lb - la } else { lb + group - la };
        match self.zech[d as usize] {
            NO_LOG => 0,
            z => self.exp[((la as u64 + z as u64) % group as u64) as usize],
        }
    }

    /// Discrete logarithm of a nonzero element.
    pub(crate) fn log(&self, a: u32) -> u32 {
        self.log[a as usize]
    }

    /// `g^l` for `l < size - 1`.
    pub(crate) fn exp(&self, l: u64) -> u32 {
        self.exp[l as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        let p = self.p as u32;
        let (mut a, mut out, mut place) = (a, 0u32, 1u32);
        while a > 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let group = self.size as u64 - 1;
        let e = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % group;
        self.exp[e as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let group = self.size as u64 - 1;
        let l = (self.log[a as usize] as u128 * e as u128 % group as u128) as usize;
        self.exp[l]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let group = self.size as u64 - 1;
        let l = (group - self.log[a as usize] as u64) % group;
        Some(self.exp[l as usize])
    }

    /// `x ↦ x^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p)
    }

    /// `x ↦ x^{p^k}`.
    pub fn frobenius_iter(&self, a: u32, k: usize) -> u32 {
        (0..k).fold(a, |x, _| self.frobenius(x))
    }

    /// The embedding `self → larger` sending the generator of `self` to the
    /// smallest root of its modulus in `larger`, as a lookup table.
    pub fn embed_into(&self, larger: &FiniteField) -> Result<Vec<u32>> {
        if self.p != larger.p || larger.n % self.n != 0 {
            return Err(Error::NotDivisible {
                n: self.n as u32,
                m: larger.n as u32,
            });
        }
        let coeffs: Vec<u32> = self.modulus.iter().map(|&c| larger.from_int(c as i64)).collect();
        let eval = |x: u32| {
            coeffs
                .iter()
                .rev()
                .fold(0, |acc, &c| larger.add(larger.mul(acc, x), c))
        };
        let root = larger
            .elements()
            .find(|&x| eval(x) == 0)
            .expect("an irreducible of degree dividing m splits in F_{p^m}");
        let powers: Vec<u32> = (0..self.n as u64).map(|i| larger.pow(root, i)).collect();
        Ok(self
            .elements()
            .map(|a| {
                self.coeffs(a)
                    .iter()
                    .zip(&powers)
                    .fold(0, |acc, (&c, &r)| larger.add(acc, larger.mul(larger.from_int(c as i64), r)))
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli() {
        assert_eq!(make_field(2, 1).unwrap().modulus(), IntPoly::from_i64(&[0, 1]));
        assert_eq!(make_field(2, 2).unwrap().modulus(), IntPoly::from_i64(&[1, 1, 1]));
        assert_eq!(make_field(3, 2).unwrap().modulus(), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(make_field(2, 3).unwrap().modulus(), IntPoly::from_i64(&[1, 0, 1, 1]));
    }

    #[test]
    fn errors() {
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(make_field_with_budget(2, 10, 1000), Err(Error::BudgetExceeded { .. })));
        assert!(make_field_with_modulus(3, &IntPoly::from_i64(&[2, 0, 1]), 100).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, n) in [(2, 3), (3, 2), (5, 1), (5, 2), (7, 1)] {
            let f = make_field(p, n).unwrap();
            let els: Vec<u32> = f.elements().collect();
            assert_eq!(els.len() as u64, p.pow(n as u32));
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                assert_eq!(f.pow(a, f.size() as u64), a);
                for &b in &els {
                    // schoolbook product as oracle
                    let prod = poly_mulmod(&f.coeffs(a), &f.coeffs(b), &f.modulus, p);
                    assert_eq!(f.mul(a, b), f.from_coeffs(&prod));
                    assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
                }
            }
        }
    }

    #[test]
    fn embedding_is_a_ring_morphism_onto_fixed_field() {
        let small = make_field(2, 2).unwrap();
        let big = make_field(2, 4).unwrap();
        let e = small.embed_into(&big).unwrap();
        for a in small.elements() {
            for b in small.elements() {
                assert_eq!(e[small.add(a, b) as usize], big.add(e[a as usize], e[b as usize]));
                assert_eq!(e[small.mul(a, b) as usize], big.mul(e[a as usize], e[b as usize]));
            }
        }
        let mut fixed: Vec<u32> = big.elements().filter(|&x| big.frobenius_iter(x, 2) == x).collect();
        let mut image = e.clone();
        fixed.sort();
        image.sort();
        assert_eq!(fixed, image);
        assert!(make_field(2, 3).unwrap().embed_into(&big).is_err());
    }
}
