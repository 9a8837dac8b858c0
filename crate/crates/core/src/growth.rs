//! Coefficient growth: power-law versus stretched-exponential model selection
//! on finite windows, witnesses of superpolynomial growth, and the
//! comparison of the Virasoro vacuum Verma quotient with the irreducible vacuum.
//!
//! Asymptotic statements have no effective constants, so a verdict is a
//! finite-window model selection: least squares of `ln a_n` against `ln n`
//! (power law) and against `√n` (stretched exponential). A verdict is issued
//! only when one residual is at most half the other.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::characters::{eta_scaled, irreducible_character_of, vacuum_verma_character};
use crate::error::{Error, Result};
use crate::minimal_models::MinimalModel;
use crate::qseries::{euler_product, QExpansion, RationalPower};
use crate::rational::{format_rational, int, ln_abs_int, LogMagnitude, Rational};

/// A verdict needs one residual to be at most `1/RESIDUAL_RATIO` of the other.
pub const RESIDUAL_RATIO: f64 = 2.0;
/// Indices below this are never fitted.
pub const MIN_FIT_INDEX: usize = 32;
pub const MIN_WINDOW_LEN: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    /// `ln a_n ≈ α ln n + β`
    PowerLaw,
    /// `ln a_n ≈ K √n + β`
    StretchedExponential,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthFit {
    pub model_kind: ModelKind,
    /// `α` for the power law, `K` for the stretched exponential.
    pub parameter: f64,
    pub intercept: f64,
    /// Mean squared error of the log-fit.
    pub residual: f64,
    pub window: (usize, usize),
}

impl GrowthFit {
    /// Fitted value of `a_n` (not its log).
    pub fn predict(&self, n: usize) -> f64 {
        let x = match self.model_kind {
            ModelKind::PowerLaw => (n as f64).ln(),
            ModelKind::StretchedExponential => (n as f64).sqrt(),
        };
        (self.parameter * x + self.intercept).exp()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthTag {
    Polynomial,
    Superpolynomial,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthVerdict {
    pub tag: GrowthTag,
    pub power_law: GrowthFit,
    pub stretched_exponential: GrowthFit,
    pub ratio_threshold: f64,
}

impl GrowthVerdict {
    /// Residual of the losing model over the winning one.
    pub fn residual_ratio(&self) -> f64 {
        let (a, b) = (self.power_law.residual, self.stretched_exponential.residual);
        match self.tag {
            GrowthTag::Polynomial => b / a,
            GrowthTag::Superpolynomial => a / b,
            GrowthTag::Inconclusive => a.max(b) / a.min(b),
        }
    }
}

/// `α_n = ln a_n / ln n` for `n ≥ 2`, as `(n, α_n)` pairs.
pub fn running_exponent<T: LogMagnitude>(coeffs: &[T]) -> Result<Vec<(usize, f64)>> {
    coeffs
        .iter()
        .enumerate()
        .skip(2)
        .map(|(n, a)| {
            if !a.is_positive() {
                return Err(Error::NonPositiveCoefficient(n));
            }
            Ok((n, a.ln_abs() / (n as f64).ln()))
        })
        .collect()
}

fn least_squares(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let mse = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum::<f64>()
        / n;
    (slope, intercept, mse)
}

/// The window actually fitted: the requested one with indices below
/// [`MIN_FIT_INDEX`] removed.
pub fn effective_window(len: usize, window: &RangeInclusive<usize>) -> Result<(usize, usize)> {
    let (start, end) = ((*window.start()).max(MIN_FIT_INDEX), *window.end());
    if end >= len {
        return Err(Error::DegenerateWindow { start, end, reason: "window extends past the stored coefficients" });
    }
    if end < start || end - start + 1 < MIN_WINDOW_LEN {
        return Err(Error::DegenerateWindow { start, end, reason: "fewer than 16 indices at or above 32" });
    }
    Ok((start, end))
}

/// Fits both growth models to `ln a_n` on the window and selects one.
pub fn classify_growth<T: LogMagnitude>(coeffs: &[T], window: RangeInclusive<usize>) -> Result<GrowthVerdict> {
    let (start, end) = effective_window(coeffs.len(), &window)?;
    let mut logs = Vec::with_capacity(end - start + 1);
    for (n, a) in coeffs.iter().enumerate().take(end + 1).skip(start) {
        if !a.is_positive() {
            return Err(Error::NonPositiveCoefficient(n));
        }
        logs.push(a.ln_abs());
    }
    Ok(select(&logs, start, end))
}

fn select(logs: &[f64], start: usize, end: usize) -> GrowthVerdict {
    let ns: Vec<f64> = (start..=end).map(|n| n as f64).collect();
    let ln_n: Vec<f64> = ns.iter().map(|n| n.ln()).collect();
    let sqrt_n: Vec<f64> = ns.iter().map(|n| n.sqrt()).collect();
    let (alpha, beta_p, res_p) = least_squares(&ln_n, logs);
    let (k, beta_s, res_s) = least_squares(&sqrt_n, logs);
    let tag = if res_p * RESIDUAL_RATIO <= res_s && res_s > 0.0 {
        GrowthTag::Polynomial
    } else if res_s * RESIDUAL_RATIO <= res_p && res_p > 0.0 {
        GrowthTag::Superpolynomial
    } else {
        GrowthTag::Inconclusive
    };
    let fit = |model_kind, parameter, intercept, residual| GrowthFit {
        model_kind,
        parameter,
        intercept,
        residual,
        window: (start, end),
    };
    GrowthVerdict {
        tag,
        power_law: fit(ModelKind::PowerLaw, alpha, beta_p, res_p),
        stretched_exponential: fit(ModelKind::StretchedExponential, k, beta_s, res_s),
        ratio_threshold: RESIDUAL_RATIO,
    }
}

/// Running sums `c_n = Σ_{i≤n} b_i`, the coefficients of `f/(1 − q)`.
pub fn partial_sums<T>(coeffs: &[T]) -> Vec<T>
where
    T: Clone + for<'a> std::ops::AddAssign<&'a T>,
{
    let mut out: Vec<T> = Vec::with_capacity(coeffs.len());
    for b in coeffs {
        let next = match out.last() {
            Some(prev) => {
                let mut s = prev.clone();
                s += b;
                s
            }
            None => b.clone(),
        };
        out.push(next);
    }
    out
}

/// `Σ_{i≤n} |a_i|` for each `n`, exactly.
///
/// Polynomial growth of `a_n` is equivalent to polynomial growth of this
/// envelope (`|a_n| ≤ Cn^α` gives `Σ|a_i| ≤ 2Cn^{α+1}`, and the envelope bounds
/// each `|a_n|`), and likewise for superpolynomial growth. Unlike `|a_n|`
/// it is monotone, so it can be fitted even when a bounded series has
/// erratic signs and near-zero terms.
pub fn cumulative_magnitudes(series: &QExpansion) -> Vec<BigRational> {
    let den = series.denominator().clone();
    let mut acc = BigInt::zero();
    series
        .numerators()
        .iter()
        .map(|n| {
            acc += n.abs();
            BigRational::new_raw(acc.clone(), den.clone())
        })
        .collect()
}

/// [`classify_growth`] applied to [`cumulative_magnitudes`].
pub fn classify_envelope(series: &QExpansion, window: RangeInclusive<usize>) -> Result<GrowthVerdict> {
    classify_growth(&cumulative_magnitudes(series), window)
}

/// Outcome of checking `|Σ_{i≤n} b_i| ≤ 2Cn^{α+1}` on a window.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartialSumBound {
    /// Exponent used in the bound: the power-law fit exponent, floored at 0.
    pub alpha: f64,
    /// Smallest `C` with `|b_n| ≤ Cn^α` for all `1 ≤ n ≤ end`, and `|b_0| ≤ C`.
    pub constant: f64,
    /// Largest `|c_n| / (2Cn^{α+1})` over the window.
    pub worst_ratio: f64,
    pub holds: bool,
}

pub fn partial_sum_bound(series: &QExpansion, window: RangeInclusive<usize>) -> Result<PartialSumBound> {
    let num = series.numerators();
    let (start, end) = effective_window(num.len(), &window)?;
    let ln_den = ln_abs_int(series.denominator());
    let ln_b: Vec<f64> = num.iter().map(|x| ln_abs_int(x) - ln_den).collect();
    let nonzero: Vec<BigRational> =
        (start..=end).map(|n| BigRational::new_raw(num[n].abs() + BigInt::from(1), BigInt::from(1))).collect();
    // exponent from a fit of |b_n| (shifted by one numerator unit so zeros are finite)
    let fit = select(&nonzero.iter().map(|x| x.ln_abs() - ln_den).collect::<Vec<_>>(), start, end);
    let alpha = fit.power_law.parameter.max(0.0);
    let ln_c = (0..=end)
        .map(|n| if n == 0 { ln_b[0] } else { ln_b[n] - alpha * (n as f64).ln() })
        .fold(f64::NEG_INFINITY, f64::max);
    let sums = partial_sums(num);
    let worst = (start..=end)
        .map(|n| {
            let ln_sum = ln_abs_int(&sums[n]) - ln_den;
            ln_sum - (2f64.ln() + ln_c + (alpha + 1.0) * (n as f64).ln())
        })
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(PartialSumBound { alpha, constant: ln_c.exp(), worst_ratio: worst.exp(), holds: worst <= 1e-12 })
}

/// `1/∏_{n>1} (1 − q^n)^μ` to order `order`, computed literally as the
/// μ-th power of the inverted product.
pub fn lemma_la_series(mu: &Rational, order: usize) -> Result<QExpansion> {
    if mu.numer().sign() != num_bigint::Sign::Plus {
        return Err(Error::NonPositiveExponent(format_rational(mu)));
    }
    euler_product(order, 2).invert()?.pow_rational(mu)
}

/// Smallest `1 ≤ n ≤ order` whose coefficient in `1/∏_{n>1} (1 − q^n)^μ`
/// exceeds `n^α`.
///
/// Coefficients are produced one at a time as the `(−μ)`-th power of
/// `∏_{n>1}(1 − q^n)` (the same series as [`lemma_la_series`], whose base
/// has coefficients in `{−1, 0, 1}`), stopping at the first witness.
pub fn lemma_la_witness(mu: &Rational, alpha: f64, order: usize) -> Result<Option<usize>> {
    if mu.numer().sign() != num_bigint::Sign::Plus {
        return Err(Error::NonPositiveExponent(format_rational(mu)));
    }
    let base = euler_product(order, 2);
    let mut power = RationalPower::new(&base, &-mu, order)?;
    while power.advance().is_some() {
        let n = power.index();
        if power.exceeds_power(n, alpha) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KeyLemmaReport {
    pub p: i64,
    pub q: i64,
    #[serde(serialize_with = "crate::rational::serialize_rational")]
    pub c: Rational,
    pub order: usize,
    /// `η^c · ch V̄(c, 0)` equals `(1 − q)^c / ∏_{n>1}(1 − q^n)^{1−c}` exactly.
    pub closed_form_matches: bool,
    /// Growth of `η^c · ch V̄(c, 0)`.
    pub verma_quotient: GrowthVerdict,
    /// Growth of `η^c · χ_{1,1}`.
    pub vacuum_irreducible: GrowthVerdict,
}

impl KeyLemmaReport {
    pub fn dichotomy_holds(&self) -> bool {
        self.closed_form_matches
            && self.verma_quotient.tag == GrowthTag::Superpolynomial
            && self.vacuum_irreducible.tag == GrowthTag::Polynomial
    }
}

/// Default fit window for an order-`N` expansion.
pub fn default_window(order: usize) -> RangeInclusive<usize> {
    (order / 20).max(MIN_FIT_INDEX)..=order
}

/// The eta-scaled Verma quotient, its closed form, and the eta-scaled
/// irreducible vacuum at `c = c_{p,q}`.
pub fn key_lemma_series(model: &MinimalModel, order: usize) -> (QExpansion, QExpansion, QExpansion) {
    let c = model.central_charge();
    let verma = eta_scaled(&vacuum_verma_character(c, order), c);
    let one_minus_q = QExpansion::from_sparse(int(0), &[(0, 1), (1, -1)], order);
    let closed = one_minus_q
        .pow_rational(c)
        .expect("unit series")
        .mul(&euler_product(order, 2).invert().expect("unit series").pow_rational(&(int(1) - c)).expect("unit series"));
    let vacuum = irreducible_character_of(model, 1, 1, order).expect("(1,1) is in range");
    (verma, closed, eta_scaled(&vacuum, c))
}

/// Checks the closed form exactly and classifies both vacuum series through
/// [`cumulative_magnitudes`] on [`default_window`].
pub fn key_lemma_comparison(p: i64, q: i64, order: usize) -> Result<KeyLemmaReport> {
    let model = MinimalModel::new(p, q)?;
    let c = model.central_charge().clone();
    if c >= int(1) {
        return Err(Error::CentralChargeTooLarge(format_rational(&c)));
    }
    let (verma, closed, vacuum) = key_lemma_series(&model, order);
    let window = default_window(order);
    Ok(KeyLemmaReport {
        p,
        q,
        order,
        closed_form_matches: verma == closed,
        verma_quotient: classify_envelope(&verma, window.clone())?,
        vacuum_irreducible: classify_envelope(&vacuum, window)?,
        c,
    })
}

/// Plot-ready rows `(n, a_n, n^α fit, exp(K√n) fit)` over the fit window.
pub fn plot_rows<T: LogMagnitude>(coeffs: &[T], verdict: &GrowthVerdict) -> Vec<(usize, f64, f64, f64)> {
    let (start, end) = verdict.power_law.window;
    (start..=end)
        .map(|n| (n, coeffs[n].ln_abs().exp(), verdict.power_law.predict(n), verdict.stretched_exponential.predict(n)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::partition_numbers;
    use crate::rational::rat;

    #[test]
    fn running_exponent_of_powers() {
        let cubes: Vec<f64> = (0..50).map(|n| (n as f64).powi(3)).collect();
        for (_, a) in running_exponent(&cubes).unwrap() {
            assert!((a - 3.0).abs() < 1e-12);
        }
        let ones = vec![1.0; 20];
        assert!(running_exponent(&ones).unwrap().iter().all(|&(_, a)| a == 0.0));
        let mut bad = vec![1.0; 10];
        bad[5] = 0.0;
        assert_eq!(running_exponent(&bad), Err(Error::NonPositiveCoefficient(5)));
    }

    #[test]
    fn running_exponent_of_partitions_passes_ten() {
        let p = partition_numbers(5000);
        let alphas = running_exponent(&p).unwrap();
        assert!(alphas.iter().any(|&(_, a)| a > 10.0));
    }

    #[test]
    fn cubes_are_polynomial() {
        let cubes: Vec<BigInt> = (0..400u64).map(|n| BigInt::from(n * n * n)).collect();
        let v = classify_growth(&cubes, 50..=399).unwrap();
        assert_eq!(v.tag, GrowthTag::Polynomial);
        assert!((v.power_law.parameter - 3.0).abs() < 1e-6);
        assert_eq!(v.power_law.window, (50, 399));
    }

    #[test]
    fn window_validation() {
        let xs = vec![1.0; 100];
        assert!(matches!(classify_growth(&xs, 0..=40), Err(Error::DegenerateWindow { .. })));
        assert!(matches!(classify_growth(&xs, 40..=100), Err(Error::DegenerateWindow { .. })));
        assert_eq!(classify_growth(&xs, 0..=60).unwrap().power_law.window, (32, 60));
        let mut zeros = vec![1.0; 100];
        zeros[50] = -2.0;
        assert_eq!(classify_growth(&zeros, 32..=99), Err(Error::NonPositiveCoefficient(50)));
    }

    #[test]
    fn constant_sequence_is_inconclusive() {
        let xs = vec![3.0; 100];
        assert_eq!(classify_growth(&xs, 32..=99).unwrap().tag, GrowthTag::Inconclusive);
    }

    #[test]
    fn partial_sums_basics() {
        let ones = vec![1i64; 6];
        assert_eq!(partial_sums(&ones), vec![1, 2, 3, 4, 5, 6]);
        let delta = vec![1i64, 0, 0, 0];
        assert_eq!(partial_sums(&delta), vec![1, 1, 1, 1]);
    }

    #[test]
    fn witness_small_alpha() {
        // parts >= 2: 1, 0, 1, 1, 2, …
        assert_eq!(lemma_la_witness(&int(1), 0.0, 100).unwrap(), Some(4));
        assert!(lemma_la_witness(&int(0), 1.0, 10).is_err());
        assert_eq!(lemma_la_witness(&rat(1, 2), 10.0, 50).unwrap(), None);
    }

    #[test]
    fn witness_routes_agree() {
        let mu = rat(2, 3);
        let literal = lemma_la_series(&mu, 120).unwrap();
        let fast = euler_product(120, 2).pow_rational(&-mu).unwrap();
        assert_eq!(literal, fast);
    }
}
