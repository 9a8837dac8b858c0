use std::collections::HashSet;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Signed;

use qvir::characters::{
    all_irreducible_characters, eta_scaled, irreducible_character, modular_check, modular_residual_with, s_matrix,
    vacuum_verma_character, SMatrix,
};
use qvir::minimal_models::{models_up_to, recognize_central_charge, MinimalModel};
use qvir::rational::{int, Rational};

#[test]
fn recognizer_round_trips() {
    for m in models_up_to(50) {
        assert_eq!(recognize_central_charge(m.central_charge()), Some((m.p(), m.q())));
    }
}

#[test]
fn central_charges_are_distinct() {
    let models = models_up_to(50);
    let values: HashSet<Rational> = models.iter().map(|m| m.central_charge().clone()).collect();
    assert_eq!(values.len(), models.len());
}

#[test]
fn kac_symmetry() {
    for m in models_up_to(20) {
        for r in 1..m.p() {
            for s in 1..m.q() {
                assert_eq!(m.kac_weight(r, s).unwrap(), m.kac_weight(m.p() - r, m.q() - s).unwrap());
            }
        }
    }
}

#[test]
fn effective_central_charge_identity() {
    for m in models_up_to(30) {
        let table = m.kac_table();
        let lhs = m.central_charge() - int(24) * &table.lambda_min;
        assert_eq!(lhs, int(1) - Rational::new(6.into(), BigInt::from(m.p() * m.q())));
        assert_eq!(&lhs, m.effective_central_charge());
        assert_eq!(m.central_charge() == m.effective_central_charge(), m.q() == m.p() + 1);
        // c̃ vanishes only for the trivial model (2, 3)
        assert!(lhs < int(1) && !lhs.is_negative());
        assert_eq!(lhs.is_positive(), (m.p(), m.q()) != (2, 3));
    }
}

#[test]
fn vacuum_is_dominated_by_verma_quotient() {
    for m in models_up_to(10) {
        let irr = irreducible_character(m.p(), m.q(), 1, 1, 200).unwrap();
        let verma = vacuum_verma_character(m.central_charge(), 200);
        assert_eq!(irr.series.leading_exponent(), verma.series.leading_exponent());
        for (a, b) in irr.dimensions().iter().zip(verma.dimensions()) {
            assert!(a <= b, "({}, {})", m.p(), m.q());
        }
    }
}

#[test]
fn irreducible_characters_are_graded_dimensions() {
    for m in models_up_to(10) {
        for ch in all_irreducible_characters(&m, 100) {
            let d = ch.dimensions();
            assert_eq!(d[0], BigInt::from(1), "{}", ch.label);
            assert!(d.iter().all(|x| !x.is_negative()), "{}", ch.label);
        }
    }
}

#[test]
fn eta_scaled_by_effective_charge_is_holomorphic() {
    for m in models_up_to(10) {
        for ch in all_irreducible_characters(&m, 10) {
            let scaled = eta_scaled(&ch, m.effective_central_charge());
            assert!(!scaled.leading_exponent().is_negative(), "{}", ch.label);
        }
    }
}

#[test]
fn ising_s_matrix_entries() {
    let s = s_matrix(3, 4).unwrap();
    let (vac, eps, sigma) = (s.index_of(1, 1).unwrap(), s.index_of(1, 3).unwrap(), s.index_of(1, 2).unwrap());
    let r2 = std::f64::consts::SQRT_2;
    let expected = [
        ((vac, vac), 0.5),
        ((vac, eps), 0.5),
        ((vac, sigma), r2 / 2.0),
        ((eps, eps), 0.5),
        ((eps, sigma), -r2 / 2.0),
        ((sigma, sigma), 0.0),
    ];
    for ((i, j), v) in expected {
        assert!((s.values[i][j] - v).abs() < 1e-12, "S[{i}][{j}] = {}", s.values[i][j]);
        assert!((s.values[j][i] - v).abs() < 1e-12);
    }
}

#[test]
fn s_matrices_are_symmetric_involutions() {
    for m in models_up_to(12) {
        let s = s_matrix(m.p(), m.q()).unwrap();
        assert!(s.max_asymmetry() < 1e-12);
        assert!(s.square_deviation() < 1e-9, "({}, {})", m.p(), m.q());
    }
}

#[test]
fn lee_yang_modular_check_beats_identity() {
    let tau = Complex64::new(0.0, 2.0);
    let residual = modular_check(2, 5, tau, 500).unwrap();
    assert!(residual < 1e-6);
    let labels = MinimalModel::new(2, 5).unwrap().kac_table().entries;
    let wrong = modular_residual_with(&SMatrix::identity(labels), 2, 5, tau, 500).unwrap();
    assert!(wrong >= 1e3 * residual.max(1e-300), "identity residual {wrong} vs {residual}");
    assert!(wrong > 1e-3);
}

#[test]
fn modular_residual_shrinks_with_more_terms() {
    let tau = Complex64::new(0.0, 1.0);
    for (p, q) in [(3, 4), (2, 5)] {
        // truncation dominates at small N near the edge of the region
        let edge = Complex64::new(0.0, 0.3);
        let small: Vec<f64> = [2, 4, 8, 16].iter().map(|&n| modular_check(p, q, edge, n).unwrap()).collect();
        assert!(small.windows(2).all(|w| w[1] < w[0]), "{small:?}");
        // by N = 500 the residual is at rounding level and stays there
        let large: Vec<f64> = [500, 1000, 2000].iter().map(|&n| modular_check(p, q, tau, n).unwrap()).collect();
        for w in large.windows(2) {
            assert!(w[1] <= w[0] + 4.0 * f64::EPSILON, "{large:?}");
        }
    }
}

#[test]
fn off_axis_tau() {
    let tau = Complex64::new(0.3, 1.1);
    for (p, q) in [(3, 4), (2, 5), (4, 5)] {
        assert!(modular_check(p, q, tau, 400).unwrap() < 1e-10);
    }
    assert!(modular_check(3, 4, Complex64::new(0.0, 5.0), 10).is_err());
    assert!(modular_check(3, 4, Complex64::new(0.0, -1.0), 10).is_err());
}
