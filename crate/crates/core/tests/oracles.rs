use nilcone::oracle::{
    level_set_moments, pair_delta_nplus, predict_scalar_pairing, QuadratureGrid, TestFunction,
};
use nilcone::rational::{frac, int};
use nilcone::solver::{casimir_orbit, kernel_basis, solve_polynomial};
use nilcone::transversal::{delta_seed, radial_casimir};
use nilcone::{CasimirPolynomial, Rational};

/// Half-cone pairing of `F` and of `□F` against what the transversal data
/// of `δ_{N⁺}` and `□δ_{N⁺}` predict through the level-set integrals.
#[test]
fn transversal_prediction_matches_quadrature() {
    let grid = QuadratureGrid::gauss_legendre(3.0, 256).unwrap();
    let seed = delta_seed(0);
    let boxed = radial_casimir(&seed);
    for center in [[0.0, 1.0, 0.0], [0.1, 1.2, -0.01]] {
        let f = TestFunction::gaussian(center, 0.2).unwrap().to_gauss_poly();
        let moments = level_set_moments(&f, 4.0, 200).unwrap();
        let p0 = pair_delta_nplus(&f, &grid).value;
        let p1 = pair_delta_nplus(&f.casimir(), &grid).value;
        let q0 = predict_scalar_pairing(&seed, &moments).unwrap();
        let q1 = predict_scalar_pairing(&boxed, &moments).unwrap();
        let measured = p1 / p0;
        let predicted = q1 / q0;
        assert!(
            (measured - predicted).abs() < 1e-6 * predicted.abs(),
            "{center:?}: {measured} vs {predicted}"
        );
        // the density-2 measure is four times the transversal delta
        assert!((p0 / q0 - 4.0).abs() < 1e-8, "{center:?}: normalization {}", p0 / q0);
    }
}

#[test]
fn solutions_are_stable_in_truncation_order() {
    let p = CasimirPolynomial::power(2).unwrap();
    for n in [1u32, 3, 5] {
        let low = solve_polynomial(n, &p, 4).unwrap();
        let high = solve_polynomial(n, &p, 9).unwrap();
        assert_eq!(low, high, "n={n}");
    }
    let q = CasimirPolynomial::monic(vec![int(1), frac(-3, 2)]).unwrap();
    for n in [0u32, 2, 4] {
        for k in [3, 6, 9] {
            assert!(solve_polynomial(n, &q, k).unwrap().is_empty());
        }
    }
}

#[test]
fn even_iterates_have_product_leading_coefficient() {
    for n in (0..=8u32).step_by(2) {
        let orbit = casimir_orbit(n, 6).unwrap();
        for (k, psi) in orbit.iter().enumerate() {
            let k = k as u32;
            let expected = (1..=k).fold(Rational::from_integer(1.into()), |acc, j| {
                acc * int(i64::from(n) - 2 * i64::from(j) + 1)
            });
            assert_eq!(psi.coeff(n, k), expected, "n={n} k={k}");
            assert_eq!(psi.delta_order(), Some(k));
        }
    }
}

#[test]
fn kernel_basis_is_read_out_on_the_top_vector() {
    for n in 0..=7u32 {
        for (j, psi) in kernel_basis(n, 8).unwrap().iter().enumerate() {
            for k in 0..=8u32 {
                let want = if k as usize == j { int(1) } else { int(0) };
                assert_eq!(psi.coeff(n, k), want, "n={n} j={j} k={k}");
            }
        }
    }
}

#[test]
fn shared_consistency_helper_agrees() {
    use nilcone::oracle::{default_radius, scalar_consistency, CONSISTENCY_TOLERANCE};
    let f = TestFunction::gaussian([0.0, 1.0, 0.0], 0.2).unwrap();
    let grid = QuadratureGrid::gauss_legendre(default_radius(0.2), 256).unwrap();
    let c = scalar_consistency(&f, &grid, 4.0, 200).unwrap();
    assert!(c.relative_gap < CONSISTENCY_TOLERANCE, "{c:?}");
    assert!((c.normalization - 4.0).abs() < 1e-8);
}
