use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::rational::ratio_to_f64;

use super::QExpansion;

impl QExpansion {
    /// Evaluates the stored partial sum at `q = e^{2πiτ}`.
    ///
    /// The second value is the magnitude of the contribution of the last
    /// `⌈N/4⌉` stored terms. It is a heuristic size of the truncation error,
    /// not a bound.
    pub fn evaluate_with_error(&self, tau: Complex64) -> Result<(Complex64, f64)> {
        if tau.im <= 0.0 {
            return Err(Error::NonPositiveImaginary(tau.im));
        }
        let two_pi_i_tau = Complex64::new(0.0, 2.0 * std::f64::consts::PI) * tau;
        let alpha = self.leading_exponent().to_f64().expect("finite exponent");
        let prefactor = (two_pi_i_tau * alpha).exp();
        let q = two_pi_i_tau.exp();

        let order = self.truncation_order();
        let tail_len = order.div_ceil(4);
        let tail_start = order + 1 - tail_len;
        let mut total = Complex64::new(0.0, 0.0);
        let mut tail = Complex64::new(0.0, 0.0);
        let mut qn = Complex64::new(1.0, 0.0);
        for (n, num) in self.numerators().iter().enumerate() {
            let term = qn * ratio_to_f64(num, self.denominator());
            total += term;
            if n >= tail_start {
                tail += term;
            }
            qn *= q;
        }
        Ok((prefactor * total, (prefactor * tail).norm()))
    }

    /// Real value at `q ∈ (0, 1)`, with `q^α` taken positive.
    pub fn evaluate_real(&self, q: f64) -> f64 {
        assert!(q > 0.0 && q < 1.0, "q must lie in (0, 1)");
        let alpha = self.leading_exponent().to_f64().expect("finite exponent");
        let mut total = 0.0;
        let mut qn = 1.0;
        for num in self.numerators() {
            total += qn * ratio_to_f64(num, self.denominator());
            qn *= q;
        }
        q.powf(alpha) * total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::restricted_partitions;
    use crate::rational::int;

    #[test]
    fn constant_series() {
        let (v, tail) = QExpansion::one(0).evaluate_with_error(Complex64::new(0.0, 1.0)).unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(tail, 0.0);
    }

    #[test]
    fn rejects_lower_half_plane() {
        let err = QExpansion::one(3).evaluate_with_error(Complex64::new(0.0, -1.0));
        assert_eq!(err, Err(Error::NonPositiveImaginary(-1.0)));
    }

    #[test]
    fn truncations_agree_within_tail_estimate() {
        let tau = Complex64::new(0.0, 1.0);
        for n in [4usize, 8, 12, 20] {
            let short = QExpansion::from_integers(int(0), restricted_partitions(n, 1));
            let long = QExpansion::from_integers(int(0), restricted_partitions(2 * n, 1));
            let (a, tail) = short.evaluate_with_error(tau).unwrap();
            let (b, _) = long.evaluate_with_error(tau).unwrap();
            assert!((a - b).norm() <= tail + 1e-15, "n = {n}");
        }
    }

    #[test]
    fn real_evaluation_matches_complex() {
        let s = QExpansion::from_integers(crate::rational::rat(-1, 24), restricted_partitions(30, 2));
        let (z, _) = s.evaluate_with_error(Complex64::new(0.0, 0.5)).unwrap();
        let x = s.evaluate_real((-std::f64::consts::PI).exp());
        assert!((z.re - x).abs() < 1e-12 && z.im.abs() < 1e-12);
    }
}
