//! Reciprocals and rational powers of unit series.
//!
//! Both work on integer numerators over a common denominator fixed in
//! advance. For `f = F/d` with `F_0 = d` and `μ = a/b`, every coefficient of
//! `f^μ` up to order `N` is an integer multiple of `1/(b²d)^N`, since
//! `f^μ = Σ_j C(μ, j)(f − 1)^j` and `b^{2j} C(a/b, j)` is an integer. The
//! recurrence therefore divides exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::par;
use crate::rational::Rational;

use super::QExpansion;

const PARALLEL_INNER_SUM: usize = 512;

impl QExpansion {
    /// Multiplicative inverse `1/f`; the leading exponent negates.
    pub fn invert(&self) -> Result<Self> {
        let f = self.numerators();
        let f0 = &f[0];
        if f0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let order = self.truncation_order();
        let support: Vec<usize> = (1..=order).filter(|&k| !f[k].is_zero()).collect();
        // 1/F has denominators dividing F_0^{n+1}; scale everything by F_0^{N+1}.
        let scale: BigInt = Pow::pow(f0, order as u64 + 1);
        let mut g: Vec<BigInt> = Vec::with_capacity(order + 1);
        g.push(&scale / f0);
        for n in 1..=order {
            let terms: Vec<usize> = support.iter().copied().take_while(|&k| k <= n).collect();
            let s: BigInt = par::sum_indices(terms.len(), PARALLEL_INNER_SUM, |i| {
                let k = terms[i];
                &f[k] * &g[n - k]
            });
            let (quot, rem) = (-s).div_rem(f0);
            debug_assert!(rem.is_zero(), "inexact division in series inversion");
            g.push(quot);
        }
        // 1/f = d / F
        let numerators = g.into_iter().map(|x| x * self.denominator()).collect();
        Ok(Self::from_parts(-self.leading_exponent(), numerators, scale))
    }

    /// The formal power `f^μ` of a series with constant term 1 and leading
    /// exponent 0, via the recurrence `μ f′ g = f g′`, `g_0 = 1`.
    pub fn pow_rational(&self, mu: &Rational) -> Result<Self> {
        let mut power = RationalPower::new(self, mu, self.truncation_order())?;
        while power.advance().is_some() {}
        Ok(power.into_series())
    }
}

/// Coefficient-at-a-time evaluation of `f^μ`, so callers that only need a
/// prefix (such as witness searches) can stop early.
#[derive(Debug)]
pub struct RationalPower {
    base: Vec<BigInt>,
    support: Vec<usize>,
    a: BigInt,
    b: BigInt,
    base_denominator: BigInt,
    denominator: BigInt,
    order: usize,
    numerators: Vec<BigInt>,
}

impl RationalPower {
    pub fn new(f: &QExpansion, mu: &Rational, order: usize) -> Result<Self> {
        if !f.leading_exponent().is_zero() || f.numerators()[0] != *f.denominator() {
            return Err(Error::NotUnitSeries);
        }
        let order = order.min(f.truncation_order());
        let base: Vec<BigInt> = f.numerators()[..=order].to_vec();
        let support = (1..=order).filter(|&k| !base[k].is_zero()).collect();
        let (a, b) = (mu.numer().clone(), mu.denom().clone());
        let d = f.denominator().clone();
        let denominator = if a.is_zero() { BigInt::one() } else { Pow::pow(&(&b * &b * &d), order as u64) };
        Ok(Self { base, support, a, b, base_denominator: d, numerators: vec![denominator.clone()], denominator, order })
    }

    /// Index of the most recently computed coefficient.
    pub fn index(&self) -> usize {
        self.numerators.len() - 1
    }

    /// Shared denominator of all numerators produced so far.
    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn numerator(&self, n: usize) -> &BigInt {
        &self.numerators[n]
    }

    /// Computes the next coefficient; returns its numerator over
    /// [`Self::denominator`], or `None` once the order is exhausted.
    pub fn advance(&mut self) -> Option<&BigInt> {
        let n = self.numerators.len();
        if n > self.order {
            return None;
        }
        let next = if self.a.is_zero() {
            BigInt::zero()
        } else {
            let terms: Vec<usize> = self.support.iter().copied().take_while(|&k| k <= n).collect();
            let (a, b, f, g) = (&self.a, &self.b, &self.base, &self.numerators);
            // n·b·d·G_n = Σ_{k=1}^{n} (a·k − b·(n−k)) F_k G_{n−k}
            let s: BigInt = par::sum_indices(terms.len(), PARALLEL_INNER_SUM, |i| {
                let k = terms[i];
                let w = a * BigInt::from(k) - b * BigInt::from(n - k);
                let wf = w * &f[k];
                match wf.to_i64() {
                    Some(small) => &g[n - k] * small,
                    None => &g[n - k] * wf,
                }
            });
            let divisor = BigInt::from(n) * &self.b * &self.base_denominator;
            let (quot, rem) = s.div_rem(&divisor);
            debug_assert!(rem.is_zero(), "inexact division in rational power");
            quot
        };
        self.numerators.push(next);
        self.numerators.last()
    }

    /// True when coefficient `n` is positive and exceeds `n^alpha`. Integer
    /// thresholds are compared exactly.
    pub fn exceeds_power(&self, n: usize, alpha: f64) -> bool {
        let g = &self.numerators[n];
        if !g.is_positive() {
            return false;
        }
        if alpha >= 0.0 && alpha.fract() == 0.0 && alpha < 1e6 {
            let bound: BigInt = Pow::pow(&BigInt::from(n), alpha as u64);
            return *g > bound * &self.denominator;
        }
        crate::rational::ln_abs_int(g) - crate::rational::ln_abs_int(&self.denominator) > alpha * (n as f64).ln()
    }

    pub fn into_series(self) -> QExpansion {
        QExpansion::from_parts(Rational::zero(), self.numerators, self.denominator)
    }
}
