//! Cyclotomic polynomials.

use super::poly::IntPoly;

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The `k`-th cyclotomic polynomial: `x^k - 1` divided by every `Φ_d`
/// with `d | k`, `d < k`.
pub fn cyclotomic(k: u64) -> IntPoly {
    assert!(k >= 1, "cyclotomic index must be positive");
    let mut f = IntPoly::monomial(1.into(), k as usize) - IntPoly::one();
    for d in 1..k {
        if k % d == 0 {
            let (q, r) = f.div_rem_monic(&cyclotomic(d));
            debug_assert!(r.is_zero());
            f = q;
        }
    }
    f
}

/// Every `j` with `φ(j) <= deg`. Since `φ(j) >= sqrt(j / 2)`, these all lie
/// below `2 deg^2 + 2`.
pub fn indices_up_to_degree(deg: u64) -> impl Iterator<Item = u64> {
    (1..=2 * deg * deg + 2).filter(move |&j| euler_phi(j) <= deg)
}
