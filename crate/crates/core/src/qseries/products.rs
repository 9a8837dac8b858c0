//! Euler products, the pentagonal-number series, partition numbers and
//! powers of the Dedekind eta function.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::QExpansion;

/// `∏_{n ≥ min_part} (1 − q^n)` to order `order`, by direct multiplication.
pub fn euler_product(order: usize, min_part: usize) -> QExpansion {
    assert!(min_part >= 1, "parts start at 1");
    let coeffs = euler_product_i128(order, min_part)
        .map(|c| c.into_iter().map(BigInt::from).collect())
        .unwrap_or_else(|| euler_product_big(order, min_part));
    QExpansion::from_integers(Rational::zero(), coeffs)
}

fn euler_product_i128(order: usize, min_part: usize) -> Option<Vec<i128>> {
    let mut c = vec![0i128; order + 1];
    c[0] = 1;
    for part in min_part..=order {
        for i in (part..=order).rev() {
            c[i] = c[i].checked_sub(c[i - part])?;
        }
    }
    Some(c)
}

fn euler_product_big(order: usize, min_part: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::from(1);
    for part in min_part..=order {
        for i in (part..=order).rev() {
            let lower = c[i - part].clone();
            c[i] -= lower;
        }
    }
    c
}

/// Generalized pentagonal numbers `k(3k−1)/2`, `k ∈ ℤ \ {0}`, up to `limit`,
/// paired with the sign `(−1)^k`.
fn pentagonal_terms(limit: usize) -> impl Iterator<Item = (usize, i64)> {
    (1usize..)
        .map(|k| {
            let sign = if k % 2 == 1 { -1 } else { 1 };
            (k * (3 * k - 1) / 2, k * (3 * k + 1) / 2, sign)
        })
        .take_while(move |&(lo, _, _)| lo <= limit)
        .flat_map(|(lo, hi, sign)| [(lo, sign), (hi, sign)])
        .filter(move |&(e, _)| e <= limit)
}

/// `Σ_{k∈ℤ} (−1)^k q^{k(3k−1)/2}` built from the exponents alone.
pub fn pentagonal_series(order: usize) -> QExpansion {
    let mut terms = vec![(0usize, 1i64)];
    terms.extend(pentagonal_terms(order));
    QExpansion::from_sparse(Rational::zero(), &terms, order)
}

/// `p(0..=order)` via `p(n) = Σ_{k≥1} (−1)^{k+1} [p(n − k(3k−1)/2) + p(n − k(3k+1)/2)]`.
pub fn partition_numbers(order: usize) -> Vec<BigInt> {
    let terms: Vec<(usize, i64)> = pentagonal_terms(order).collect();
    let mut p: Vec<BigInt> = Vec::with_capacity(order + 1);
    p.push(BigInt::from(1));
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for &(e, sign) in terms.iter().take_while(|&&(e, _)| e <= n) {
            // the pentagonal sign is (−1)^k; the recurrence uses (−1)^{k+1}
            if sign < 0 {
                acc += &p[n - e];
            } else {
                acc -= &p[n - e];
            }
        }
        p.push(acc);
    }
    p
}

/// `e^{π√(2n/3)} / (4n√3)`.
pub fn hardy_ramanujan(n: u64) -> Result<f64> {
    Ok(ln_hardy_ramanujan(n)?.exp())
}

/// Natural log of [`hardy_ramanujan`], finite for every `n ≥ 1`.
pub fn ln_hardy_ramanujan(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroArgument(n));
    }
    let n = n as f64;
    Ok(std::f64::consts::PI * (2.0 * n / 3.0).sqrt() - (4.0 * n * 3f64.sqrt()).ln())
}

/// `η^x = q^{x/24} ∏_{n≥1} (1 − q^n)^x` to order `order`.
pub fn eta_power(x: &Rational, order: usize) -> QExpansion {
    let product = euler_product(order, 1);
    let body = product.pow_rational(x).expect("the Euler product is a unit series");
    body.shift_exponent(&(x / Rational::from_integer(BigInt::from(24))))
}

/// `1/∏_{n ≥ min_part} (1 − q^n)`: partitions with every part at least `min_part`.
pub fn restricted_partitions(order: usize, min_part: usize) -> Vec<BigInt> {
    euler_product(order, min_part).invert().expect("unit series").integer_coefficients().expect("integral").to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use num_traits::ToPrimitive;

    fn small(s: &QExpansion) -> Vec<i64> {
        s.integer_coefficients().unwrap().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn euler_product_low_order() {
        let e = small(&euler_product(7, 1));
        assert_eq!(e, vec![1, -1, -1, 0, 0, 1, 0, 1]);
        let e2 = small(&euler_product(6, 2));
        assert_eq!(e2[1], 0);
        assert_eq!(e2, vec![1, 0, -1, -1, -1, 0, 0]);
    }

    #[test]
    fn pentagonal_matches_small_product() {
        assert_eq!(pentagonal_series(40), euler_product(40, 1));
    }

    #[test]
    fn partition_values() {
        let p = partition_numbers(10);
        let v: Vec<u64> = p.iter().map(|x| x.to_u64().unwrap()).collect();
        assert_eq!(v, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn hardy_ramanujan_domain() {
        assert_eq!(hardy_ramanujan(0), Err(Error::ZeroArgument(0)));
        assert!(hardy_ramanujan(1).unwrap() > 0.0);
    }

    #[test]
    fn eta_first_power_and_zero_power() {
        let eta = eta_power(&int(1), 8);
        assert_eq!(eta.leading_exponent(), &rat(1, 24));
        assert_eq!(small(&eta), vec![1, -1, -1, 0, 0, 1, 0, 1, 0]);
        assert_eq!(eta_power(&int(0), 5), QExpansion::one(5));
    }

    #[test]
    fn restricted_partitions_parts_at_least_two() {
        let v: Vec<u64> = restricted_partitions(6, 2).iter().map(|x| x.to_u64().unwrap()).collect();
        assert_eq!(v, vec![1, 0, 1, 1, 2, 2, 4]);
    }
}
