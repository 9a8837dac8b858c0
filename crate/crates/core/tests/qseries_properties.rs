use num_bigint::BigInt;
use proptest::prelude::*;

use qvir::qseries::{eta_power, euler_product, partition_numbers, pentagonal_series, QExpansion};
use qvir::rational::{int, rat, Rational};

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-20i64..=20, 1i64..=6), 1..=max_len)
}

fn series_from(exponent: Rational, cs: &[(i64, i64)], order: usize) -> QExpansion {
    let mut c: Vec<Rational> = cs.iter().map(|&(n, d)| rat(n, d)).collect();
    c.resize(order + 1, int(0));
    QExpansion::new(exponent, &c[..=order])
}

fn unit_series(cs: &[(i64, i64)], order: usize) -> QExpansion {
    let mut c = vec![(1, 1)];
    c.extend_from_slice(cs);
    series_from(int(0), &c, order)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_laws(a in coeffs(51), b in coeffs(51), c in coeffs(51), order in 0usize..=50, e in -3i64..3) {
        let ex = rat(e, 24);
        let (f, g, h) = (series_from(ex.clone(), &a, order), series_from(int(1), &b, order), series_from(ex, &c, order));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.add(&h).unwrap(), h.add(&f).unwrap());
        prop_assert_eq!(g.mul(&f.add(&h).unwrap()), g.mul(&f).add(&g.mul(&h)).unwrap());
    }

    #[test]
    fn invert_is_two_sided(a in coeffs(30), order in 0usize..=30, lead in 1i64..5) {
        let mut cs = a.clone();
        cs[0] = (lead, 1);
        let f = series_from(rat(1, 3), &cs, order);
        let inv = f.invert().unwrap();
        prop_assert_eq!(f.mul(&inv), QExpansion::one(order));
        prop_assert_eq!(inv.invert().unwrap(), f);
    }

    #[test]
    fn rational_powers_invert(a in coeffs(12), order in 0usize..=12, num in 1i64..5, den in 1i64..4) {
        let f = unit_series(&a, order);
        let mu = rat(num, den);
        let g = f.pow_rational(&mu).unwrap();
        prop_assert_eq!(g.pow_rational(&(int(1) / &mu)).unwrap(), f.clone());
        prop_assert_eq!(g.mul(&f.pow_rational(&-mu).unwrap()), QExpansion::one(order));
    }

    #[test]
    fn eta_powers_add(a in -12i64..12, da in 1i64..6, b in -12i64..12, db in 1i64..6) {
        let (x, y) = (rat(a, da), rat(b, db));
        let lhs = eta_power(&x, 60).mul(&eta_power(&y, 60));
        prop_assert_eq!(lhs, eta_power(&(&x + &y), 60));
    }
}

#[test]
fn partitions_are_the_inverted_euler_product() {
    let inverted = euler_product(300, 1).invert().unwrap();
    assert_eq!(inverted.integer_coefficients().unwrap(), partition_numbers(300).as_slice());
}

#[test]
fn euler_product_is_pentagonal() {
    assert_eq!(euler_product(500, 1), pentagonal_series(500));
}

#[test]
fn large_coefficients_survive() {
    // p(1000) has 32 digits
    let p = partition_numbers(1000);
    let expected: BigInt = "24061467864032622473692149727991".parse().unwrap();
    assert_eq!(p[1000], expected);
}
