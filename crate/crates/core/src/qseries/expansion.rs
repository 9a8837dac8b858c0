use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::par;
use crate::rational::{format_rational, Rational};

/// A truncated q-expansion `q^α · (a_0 + a_1 q + … + a_N q^N) + O(q^{α+N+1})`.
///
/// Coefficients are exact rationals, stored as integer numerators over one
/// shared positive denominator. The representation is kept canonical (the
/// gcd of the denominator and all numerators is 1), so structural equality is
/// equality of series.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QExpansion {
    exponent: Rational,
    numerators: Vec<BigInt>,
    denominator: BigInt,
}

impl QExpansion {
    /// Builds a series from exact coefficients `a_0..=a_N`.
    pub fn new(exponent: Rational, coefficients: &[Rational]) -> Self {
        assert!(!coefficients.is_empty(), "a series stores at least a_0");
        let denominator = coefficients.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numerators = coefficients.iter().map(|c| c.numer() * (&denominator / c.denom())).collect();
        Self::from_parts(exponent, numerators, denominator)
    }

    /// Builds a series with integer coefficients.
    pub fn from_integers(exponent: Rational, coefficients: Vec<BigInt>) -> Self {
        assert!(!coefficients.is_empty(), "a series stores at least a_0");
        Self { exponent, numerators: coefficients, denominator: BigInt::one() }
    }

    /// Builds a series from numerators over a common denominator, reducing to
    /// canonical form.
    pub fn from_parts(exponent: Rational, mut numerators: Vec<BigInt>, mut denominator: BigInt) -> Self {
        assert!(!numerators.is_empty(), "a series stores at least a_0");
        assert!(!denominator.is_zero(), "zero denominator");
        if denominator.is_negative() {
            denominator = -denominator;
            for n in numerators.iter_mut() {
                *n = -&*n;
            }
        }
        if !denominator.is_one() {
            let mut g = denominator.clone();
            for n in &numerators {
                if g.is_one() {
                    break;
                }
                if !n.is_zero() {
                    g = g.gcd(n);
                }
            }
            if numerators.iter().all(Zero::is_zero) {
                g = denominator.clone();
            }
            if !g.is_one() {
                denominator /= &g;
                numerators = par::map_slice(&numerators, |n| n / &g);
            }
        }
        Self { exponent, numerators, denominator }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_integers(Rational::zero(), vec![BigInt::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(Rational::zero(), 0, Rational::one(), order)
    }

    /// `coeff · q^{exponent + index}` stored to order `order`.
    pub fn monomial(exponent: Rational, index: usize, coeff: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        if index <= order {
            coeffs[index] = coeff;
        }
        Self::new(exponent, &coeffs)
    }

    /// Integer series `Σ c·q^i` over the given sparse terms.
    pub fn from_sparse(exponent: Rational, terms: &[(usize, i64)], order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for &(i, c) in terms {
            if i <= order {
                coeffs[i] += c;
            }
        }
        Self::from_integers(exponent, coeffs)
    }

    pub fn leading_exponent(&self) -> &Rational {
        &self.exponent
    }

    /// Largest stored index `N`; coefficients beyond it are unknown.
    pub fn truncation_order(&self) -> usize {
        self.numerators.len() - 1
    }

    /// Exponent of the first unknown term, `α + N + 1`.
    pub fn valid_until(&self) -> Rational {
        &self.exponent + Rational::from_integer(BigInt::from(self.numerators.len()))
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.numerators
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn coefficient(&self, n: usize) -> Rational {
        BigRational::new(self.numerators[n].clone(), self.denominator.clone())
    }

    pub fn coefficients(&self) -> Vec<Rational> {
        (0..self.numerators.len()).map(|n| self.coefficient(n)).collect()
    }

    /// True when every stored coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.denominator.is_one()
    }

    pub fn integer_coefficients(&self) -> Option<&[BigInt]> {
        self.is_integral().then_some(self.numerators.as_slice())
    }

    pub fn is_zero(&self) -> bool {
        self.numerators.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        if order >= self.truncation_order() {
            return self.clone();
        }
        Self::from_parts(self.exponent.clone(), self.numerators[..=order].to_vec(), self.denominator.clone())
    }

    /// Multiplies by `q^delta`.
    pub fn shift_exponent(&self, delta: &Rational) -> Self {
        Self { exponent: &self.exponent + delta, ..self.clone() }
    }

    pub fn neg(&self) -> Self {
        Self {
            exponent: self.exponent.clone(),
            numerators: self.numerators.iter().map(|n| -n).collect(),
            denominator: self.denominator.clone(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::from_parts(
            self.exponent.clone(),
            self.numerators.iter().map(|n| n * factor.numer()).collect(),
            &self.denominator * factor.denom(),
        )
    }

    /// Coefficientwise sum after aligning leading exponents. The result is
    /// valid only where both operands are.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let shift = &other.exponent - &self.exponent;
        if !shift.is_integer() {
            if other.is_zero() {
                return Ok(self.truncate(other.truncation_order()));
            }
            if self.is_zero() {
                return Ok(other.truncate(self.truncation_order()));
            }
            return Err(Error::IncompatibleExponents(
                format_rational(&self.exponent),
                format_rational(&other.exponent),
            ));
        }
        let (lo, hi, shift) =
            if shift.is_negative() { (other, self, -shift.to_integer()) } else { (self, other, shift.to_integer()) };
        let shift: usize = usize::try_from(shift).expect("exponent gap fits in usize");
        let order = lo.truncation_order().min(shift + hi.truncation_order());
        let numerators = (0..=order)
            .map(|i| {
                let mut v = &lo.numerators[i] * &hi.denominator;
                if i >= shift {
                    v += &hi.numerators[i - shift] * &lo.denominator;
                }
                v
            })
            .collect();
        Ok(Self::from_parts(lo.exponent.clone(), numerators, &lo.denominator * &hi.denominator))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Cauchy product; leading exponents add and the result keeps the
    /// shorter of the two truncation orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.truncation_order().min(other.truncation_order());
        let support = |s: &Self| -> Vec<usize> { (0..=order).filter(|&i| !s.numerators[i].is_zero()).collect() };
        let (sparse, dense) = {
            let a = support(self);
            let b = support(other);
            if a.len() <= b.len() {
                ((self, a), other)
            } else {
                ((other, b), self)
            }
        };
        let (sparse, idx) = sparse;
        let numerators = par::map_indices(order + 1, |n| {
            let mut acc = BigInt::zero();
            for &k in idx.iter().take_while(|&&k| k <= n) {
                acc += &sparse.numerators[k] * &dense.numerators[n - k];
            }
            acc
        });
        Self::from_parts(&self.exponent + &other.exponent, numerators, &self.denominator * &other.denominator)
    }
}

impl fmt::Display for QExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^({}) * (", format_rational(&self.exponent))?;
        let mut first = true;
        for (i, c) in self.coefficients().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})q^{i}", format_rational(c))?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{}))", self.truncation_order() + 1)
    }
}
