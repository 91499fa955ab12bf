use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use zc_core::exact::TruncSeries;
use zc_core::witt::{adams, ghost, ghost_inverse, witt_add, witt_mul, witt_neg, witt_sub, GhostVector, WittElement};

const ORDER: usize = 12;

fn integral(order: usize) -> impl Strategy<Value = WittElement> {
    prop::collection::vec(-3i64..=3, order).prop_map(move |v| {
        let mut c = vec![1];
        c.extend(v);
        WittElement::from_i64(&c, order).unwrap()
    })
}

fn rational_ghost(len: usize) -> impl Strategy<Value = GhostVector> {
    prop::collection::vec((-9i64..=9, 1i64..=5), len)
        .prop_map(|v| GhostVector::new(v.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect()))
}

/// Oracle for ghost components: power sums of the roots, read from
/// `t f'/f` by direct series division.
fn ghost_by_division(a: &WittElement) -> Vec<BigRational> {
    let s = a.series();
    let tf = TruncSeries::new(
        std::iter::once(BigRational::from_integer(0.into()))
            .chain(s.derivative().coeffs().iter().cloned())
            .collect(),
        s.order(),
    );
    let q = &tf * &s.inverse().unwrap();
    q.coeffs()[1..].to_vec()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn additive_group(a in integral(ORDER), b in integral(ORDER), c in integral(ORDER)) {
        prop_assert_eq!(witt_add(&a, &b), witt_add(&b, &a));
        prop_assert_eq!(witt_add(&witt_add(&a, &b), &c), witt_add(&a, &witt_add(&b, &c)));
        prop_assert_eq!(witt_add(&a, &WittElement::zero(ORDER)), a.clone());
        prop_assert_eq!(witt_add(&a, &witt_neg(&a)), WittElement::zero(ORDER));
        prop_assert_eq!(witt_sub(&witt_add(&a, &b), &b), a);
    }

    #[test]
    fn multiplicative_monoid_and_distributivity(a in integral(ORDER), b in integral(ORDER), c in integral(ORDER)) {
        let ab = witt_mul(&a, &b).unwrap();
        prop_assert!(ab.is_integral());
        prop_assert_eq!(&ab, &witt_mul(&b, &a).unwrap());
        prop_assert_eq!(witt_mul(&ab, &c).unwrap(), witt_mul(&a, &witt_mul(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(witt_mul(&a, &WittElement::one(ORDER)).unwrap(), a.clone());
        let lhs = witt_mul(&a, &witt_add(&b, &c)).unwrap();
        let rhs = witt_add(&ab, &witt_mul(&a, &c).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ghost_is_a_ring_morphism(a in integral(ORDER), b in integral(ORDER)) {
        prop_assert_eq!(ghost(&witt_add(&a, &b)), ghost(&a).add(&ghost(&b)));
        prop_assert_eq!(ghost(&witt_mul(&a, &b).unwrap()), ghost(&a).mul(&ghost(&b)));
        prop_assert_eq!(ghost(&a).components().to_vec(), ghost_by_division(&a));
    }

    #[test]
    fn ghost_bijection(a in integral(ORDER), g in rational_ghost(ORDER)) {
        prop_assert_eq!(ghost_inverse(&ghost(&a)), a);
        prop_assert_eq!(ghost(&ghost_inverse(&g)), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn adams_composition(a in integral(24), m in 1usize..=4, n in 1usize..=4) {
        let lhs = adams(&adams(&a, n).unwrap(), m).unwrap();
        let rhs = adams(&a, m * n).unwrap();
        prop_assert_eq!(lhs, rhs.truncate(24 / n / m));
    }

    #[test]
    fn adams_is_a_ring_morphism(a in integral(ORDER), b in integral(ORDER), n in 1usize..=4) {
        let sum = adams(&witt_add(&a, &b), n).unwrap();
        prop_assert_eq!(sum, witt_add(&adams(&a, n).unwrap(), &adams(&b, n).unwrap()));
        let prod = adams(&witt_mul(&a, &b).unwrap(), n).unwrap();
        let rhs = witt_mul(&adams(&a, n).unwrap(), &adams(&b, n).unwrap()).unwrap();
        prop_assert!(prod.is_integral());
        prop_assert_eq!(prod, rhs);
    }

    #[test]
    fn adams_on_geometric(a in -5i64..=5, n in 1usize..=5) {
        let g = WittElement::geometric(&BigInt::from(a), 20);
        prop_assert_eq!(adams(&g, n).unwrap(), WittElement::geometric(&BigInt::from(a).pow(n as u32), 20 / n));
    }
}

#[test]
fn geometric_product_table() {
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            let prod = witt_mul(&WittElement::geometric(&a.into(), 12), &WittElement::geometric(&b.into(), 12)).unwrap();
            assert_eq!(prod, WittElement::geometric(&(a * b).into(), 12));
        }
    }
}

#[test]
fn psi_two_after_psi_three_is_psi_six() {
    let a = WittElement::from_i64(&[1, 2, -1, 0, 3, 1], 24).unwrap();
    assert_eq!(adams(&adams(&a, 3).unwrap(), 2).unwrap(), adams(&a, 6).unwrap());
}
