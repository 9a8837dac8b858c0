//! Characters of Virasoro modules and the modular S-transformation of
//! minimal-model characters.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::minimal_models::{KacEntry, MinimalModel};
use crate::par;
use crate::qseries::{eta_power, partition_numbers, restricted_partitions, QExpansion};
use crate::rational::{format_rational, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModuleLabel {
    /// `L(c_{p,q}, h_{r,s})`.
    Irreducible {
        p: i64,
        q: i64,
        r: i64,
        s: i64,
    },
    /// `V̄(c, 0)`, the Verma module at `h = 0` modulo the submodule generated by `L_{−1}v`.
    VermaQuotient {
        c: Rational,
    },
    Verma {
        c: Rational,
        h: Rational,
    },
    /// A direct sum of irreducibles of `L(c_{p,q}, 0)` with multiplicities.
    DirectSum {
        p: i64,
        q: i64,
        summands: Vec<((i64, i64), u32)>,
    },
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleLabel::Irreducible { p, q, r, s } => write!(f, "L(c_{{{p},{q}}}, h_{{{r},{s}}})"),
            ModuleLabel::VermaQuotient { c } => write!(f, "Verma-quotient({})", format_rational(c)),
            ModuleLabel::Verma { c, h } => write!(f, "Verma({}, {})", format_rational(c), format_rational(h)),
            ModuleLabel::DirectSum { p, q, summands } => {
                let parts: Vec<String> =
                    summands.iter().map(|((r, s), m)| format!("{m}*L(c_{{{p},{q}}}, h_{{{r},{s}}})")).collect();
                write!(f, "{}", parts.join(" + "))
            }
        }
    }
}

/// A module character `tr q^{L(0) − c/24}` as an exact q-expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSeries {
    pub label: ModuleLabel,
    pub series: QExpansion,
}

impl CharacterSeries {
    /// Graded dimensions; characters are always integral.
    pub fn dimensions(&self) -> &[BigInt] {
        self.series.integer_coefficients().expect("characters have integer coefficients")
    }
}

fn minus_c_over_24(c: &Rational) -> Rational {
    -c / int(24)
}

/// `ch V̄(c, 0) = q^{−c/24} / ∏_{n>1} (1 − q^n)`.
pub fn vacuum_verma_character(c: &Rational, order: usize) -> CharacterSeries {
    CharacterSeries {
        label: ModuleLabel::VermaQuotient { c: c.clone() },
        series: QExpansion::from_integers(minus_c_over_24(c), restricted_partitions(order, 2)),
    }
}

/// `ch V(c, h) = q^{h − c/24} / ∏_{n≥1} (1 − q^n)`.
pub fn verma_character(c: &Rational, h: &Rational, order: usize) -> CharacterSeries {
    CharacterSeries {
        label: ModuleLabel::Verma { c: c.clone(), h: h.clone() },
        series: QExpansion::from_integers(h + minus_c_over_24(c), partition_numbers(order)),
    }
}

/// Sparse numerator `Σ_{k∈ℤ} (q^{a_k} − q^{b_k})` of the alternating-sum
/// character, with exponents measured from `h_{r,s}`:
/// `a_k = pqk² + k(sp − rq)` and `b_k = pqk² + k(sp + rq) + rs`.
pub fn alternating_numerator(model: &MinimalModel, r: i64, s: i64, order: usize) -> Vec<(usize, i64)> {
    let (p, q) = (model.p(), model.q());
    let limit = order as i64;
    let a = |k: i64| p * q * k * k + k * (s * p - r * q);
    let b = |k: i64| p * q * k * k + k * (s * p + r * q) + r * s;
    let mut terms = Vec::new();
    for direction in [1i64, -1] {
        let start = if direction == 1 { 0 } else { -1 };
        let mut k = start;
        loop {
            let (ea, eb) = (a(k), b(k));
            debug_assert!(ea >= 0 && eb >= 0);
            // both exponents grow monotonically in |k| away from k = 0
            if ea > limit && eb > limit {
                break;
            }
            if ea <= limit {
                terms.push((ea as usize, 1));
            }
            if eb <= limit {
                terms.push((eb as usize, -1));
            }
            k += direction;
        }
    }
    terms.sort_unstable();
    terms
}

/// Character of `L(c_{p,q}, h_{r,s})` to order `order`.
pub fn irreducible_character(p: i64, q: i64, r: i64, s: i64, order: usize) -> Result<CharacterSeries> {
    let model = MinimalModel::new(p, q)?;
    irreducible_character_of(&model, r, s, order)
}

pub fn irreducible_character_of(model: &MinimalModel, r: i64, s: i64, order: usize) -> Result<CharacterSeries> {
    irreducible_with_partitions(model, r, s, &partition_numbers(order))
}

fn irreducible_with_partitions(model: &MinimalModel, r: i64, s: i64, partitions: &[BigInt]) -> Result<CharacterSeries> {
    let h = model.kac_weight(r, s)?;
    let order = partitions.len() - 1;
    let numerator = alternating_numerator(model, r, s, order);
    let coeffs = par::map_indices(order + 1, |n| {
        let mut acc = BigInt::zero();
        for &(e, sign) in numerator.iter().take_while(|&&(e, _)| e <= n) {
            if sign > 0 {
                acc += &partitions[n - e];
            } else {
                acc -= &partitions[n - e];
            }
        }
        acc
    });
    Ok(CharacterSeries {
        label: ModuleLabel::Irreducible { p: model.p(), q: model.q(), r, s },
        series: QExpansion::from_integers(h + minus_c_over_24(model.central_charge()), coeffs),
    })
}

/// Characters of every Kac label of the model, in Kac-table order.
pub fn all_irreducible_characters(model: &MinimalModel, order: usize) -> Vec<CharacterSeries> {
    let partitions = partition_numbers(order);
    par::map_slice(&model.labels(), |&(r, s)| {
        irreducible_with_partitions(model, r, s, &partitions).expect("labels are in the Kac range")
    })
}

/// `η^x · χ`.
pub fn eta_scaled(character: &CharacterSeries, x: &Rational) -> QExpansion {
    eta_power(x, character.series.truncation_order()).mul(&character.series)
}

/// The modular S-matrix on the deduplicated Kac labels.
#[derive(Clone, Debug, PartialEq)]
pub struct SMatrix {
    pub labels: Vec<KacEntry>,
    pub values: Vec<Vec<f64>>,
}

impl SMatrix {
    pub fn identity(labels: Vec<KacEntry>) -> Self {
        let n = labels.len();
        let values = (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
        Self { labels, values }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, r: i64, s: i64) -> Option<usize> {
        self.labels.iter().position(|e| e.r == r && e.s == s)
    }

    pub fn max_asymmetry(&self) -> f64 {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| (self.values[i][j] - self.values[j][i]).abs())
            .fold(0.0, f64::max)
    }

    /// `max |(S·S − I)_{ij}|`.
    pub fn square_deviation(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let v: f64 = (0..n).map(|k| self.values[i][k] * self.values[k][j]).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((v - target).abs());
            }
        }
        worst
    }

    pub fn row_major(&self) -> Vec<f64> {
        self.values.iter().flatten().copied().collect()
    }
}

/// `S_{(r,s),(ρ,σ)} = 2√(2/pq) (−1)^{1+rσ+sρ} sin(πqrρ/p) sin(πpsσ/q)`.
pub fn s_matrix(p: i64, q: i64) -> Result<SMatrix> {
    let model = MinimalModel::new(p, q)?;
    let labels = model.kac_table().entries;
    let pi = std::f64::consts::PI;
    let norm = 2.0 * (2.0 / (p * q) as f64).sqrt();
    let values = labels
        .iter()
        .map(|a| {
            labels
                .iter()
                .map(|b| {
                    let sign = if (1 + a.r * b.s + a.s * b.r) % 2 == 0 { 1.0 } else { -1.0 };
                    // reduce the integer arguments before converting to keep sin accurate
                    let x = ((q * a.r * b.r) % (2 * p)) as f64 / p as f64;
                    let y = ((p * a.s * b.s) % (2 * q)) as f64 / q as f64;
                    norm * sign * (pi * x).sin() * (pi * y).sin()
                })
                .collect()
        })
        .collect();
    Ok(SMatrix { labels, values })
}

/// Checks `|e^{2πiτ}| ≤ e^{−π/2}` and `|e^{−2πi/τ}| ≤ e^{−π/2}`.
pub fn check_admissible_tau(tau: Complex64) -> Result<()> {
    if tau.im <= 0.0 {
        return Err(Error::NonPositiveImaginary(tau.im));
    }
    let dual_im = tau.im / tau.norm_sqr();
    if tau.im < 0.25 || dual_im < 0.25 {
        return Err(Error::TauOutsideRegion { re: tau.re, im: tau.im });
    }
    Ok(())
}

/// `max_i |χ_i(−1/τ) − Σ_j S_ij χ_j(τ)|` with `N`-term characters.
pub fn modular_check(p: i64, q: i64, tau: Complex64, order: usize) -> Result<f64> {
    let s = s_matrix(p, q)?;
    modular_residual_with(&s, p, q, tau, order)
}

/// Same residual as [`modular_check`] but against an arbitrary matrix on
/// the model's labels.
pub fn modular_residual_with(matrix: &SMatrix, p: i64, q: i64, tau: Complex64, order: usize) -> Result<f64> {
    check_admissible_tau(tau)?;
    let model = MinimalModel::new(p, q)?;
    let chars = all_irreducible_characters(&model, order);
    let dual = -Complex64::new(1.0, 0.0) / tau;
    let at = |t: Complex64| -> Vec<Complex64> {
        par::map_slice(&chars, |c| c.series.evaluate_with_error(t).expect("admissible tau").0)
    };
    let direct = at(tau);
    let transformed = at(dual);
    let n = chars.len();
    assert_eq!(matrix.dim(), n, "matrix does not match the model's labels");
    let residual = (0..n)
        .map(|i| {
            let image: Complex64 = (0..n).map(|j| direct[j] * matrix.values[i][j]).sum();
            (transformed[i] - image).norm()
        })
        .fold(0.0, f64::max);
    Ok(residual)
}
