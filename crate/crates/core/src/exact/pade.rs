//! Rational reconstruction of truncated power series.

use num_traits::One;

use super::poly::RatPoly;
use super::recurrence::minimal_lfsr;
use super::series::TruncSeries;
use crate::error::{Error, Result};

/// Finds `p/q ≡ f mod t^{N+1}` with `deg p, deg q <= max_deg`,
/// `p(0) = q(0) = 1` and `gcd(p, q) = 1`.
///
/// Requires `2 * max_deg + 2 <= N`, so at least two coefficients beyond the
/// `2 * max_deg + 1` that determine a candidate are checked. Returns `None`
/// when no such fraction exists.
pub fn pade(f: &TruncSeries, max_deg: usize) -> Result<Option<(RatPoly, RatPoly)>> {
    if !f.constant().is_one() {
        return Err(Error::BadConstantTerm { expected: "1" });
    }
    let needed = 2 * max_deg + 2;
    if f.order() < needed {
        return Err(Error::InsufficientOrder {
            needed,
            available: f.order(),
        });
    }
    // A fraction p/q with q(0) = 1 is exactly a sequence generated by the
    // register with connection polynomial q and length max(deg q, deg p + 1).
    let lfsr = minimal_lfsr(f.coeffs());
    let den = lfsr.connection;
    if lfsr.length > max_deg + 1 || den.degree().unwrap_or(0) > max_deg {
        return Ok(None);
    }
    let prod = &f.truncate(lfsr.length.saturating_sub(1)) * &TruncSeries::from_poly(&den, lfsr.length.saturating_sub(1));
    let num = RatPoly::new(prod.coeffs().to_vec());
    if num.degree().unwrap_or(0) > max_deg {
        return Ok(None);
    }
    let g = num.gcd(&den);
    let (num, den) = if g.degree().unwrap_or(0) > 0 {
        let num = num.div_rem(&g).0.normalize_constant().expect("p(0) = 1");
        let den = den.div_rem(&g).0.normalize_constant().expect("q(0) = 1");
        (num, den)
    } else {
        (num, den)
    };
    if TruncSeries::from_fraction(&num, &den, f.order())? != *f {
        return Ok(None);
    }
    Ok(Some((num, den)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::IntPoly;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn geometric() {
        let f = TruncSeries::from_int_fraction(&IntPoly::one(), &IntPoly::from_i64(&[1, -2]), 12).unwrap();
        let (p, q) = pade(&f, 1).unwrap().unwrap();
        assert_eq!(p.to_int().unwrap(), IntPoly::one());
        assert_eq!(q.to_int().unwrap(), IntPoly::from_i64(&[1, -2]));
    }

    #[test]
    fn constant_one() {
        let (p, q) = pade(&TruncSeries::one(6), 2).unwrap().unwrap();
        assert!(p.is_one() && q.is_one());
    }

    #[test]
    fn exp_t_over_one_minus_t_is_not_rational() {
        // exp(t/(1-t)) = exp(sum_{n>=1} t^n)
        let mut g = vec![BigRational::from_integer(BigInt::from(0))];
        g.extend((1..=24).map(|_| BigRational::one()));
        let f = TruncSeries::new(g, 24).exp().unwrap();
        assert_eq!(pade(&f, 5).unwrap(), None);
    }

    #[test]
    fn order_guard() {
        let f = TruncSeries::one(5);
        assert!(matches!(pade(&f, 2), Err(Error::InsufficientOrder { needed: 6, available: 5 })));
    }

    #[test]
    fn degree_budget_is_respected() {
        // 1/(1-t)^3 needs max_deg 3
        let den = IntPoly::from_i64(&[1, -1]).pow(3);
        let f = TruncSeries::from_int_fraction(&IntPoly::one(), &den, 12).unwrap();
        assert_eq!(pade(&f, 2).unwrap(), None);
        let (_, q) = pade(&f, 3).unwrap().unwrap();
        assert_eq!(q.to_int().unwrap(), den);
    }
}
