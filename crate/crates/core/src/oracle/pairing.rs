//! Pairings of cone-supported distributions with test functions, computed as
//! quadratures over `V_1 = ℝ²` through the moment map.

use serde::Serialize;

use super::quadrature::QuadratureGrid;
use super::symmetric::{mat_vec, SymmetricPowerBasis};
use super::test_function::{GaussPoly, TestFunction};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::sl2::Generator;
use crate::transversal::TransversalDist;

/// Density of the invariant measure on `V_1` against `da db`. The orientation
/// sign of the symplectic form is dropped so that pairings are positive.
pub const CONE_DENSITY: f64 = 2.0;

/// `μ₁(a e + b f) = (h, x, y) = (−ab/2, a²/2, −b²/2)`, the element with
/// `tr(μ₁(v) Z) = ½ B(v, Z v)` for the symplectic form `B(e, f) = 1`.
pub fn moment_map(a: f64, b: f64) -> [f64; 3] {
    [-a * b / 2.0, a * a / 2.0, -b * b / 2.0]
}

pub fn moment_map_exact(a: &Rational, b: &Rational) -> [Rational; 3] {
    let half = rational::frac(1, 2);
    [-(a * b) * &half, a * a * &half, -(b * b) * &half]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Pairing {
    pub value: f64,
    /// Bound on the integrand mass outside the grid square.
    pub tail_bound: f64,
}

/// `∫ δ_{N⁺} F = CONE_DENSITY · ∬ F(μ₁(a, b)) da db`.
pub fn pair_delta_nplus(f: &GaussPoly, grid: &QuadratureGrid) -> Pairing {
    let v = grid.integrate(1, |a, b| vec![f.eval(moment_map(a, b))]);
    Pairing {
        value: CONE_DENSITY * v[0],
        tail_bound: tail_bound(f, grid.radius, |_| 1.0),
    }
}

/// Bound on `CONE_DENSITY ∫_{|v| ≥ R} w(|v|) |F(μ₁(v))| dv` using
/// `(√3/4)|v|² ≤ |μ₁(v)| ≤ |v|²/2`.
fn tail_bound(f: &GaussPoly, radius: f64, weight: impl Fn(f64) -> f64) -> f64 {
    let c_norm = f.center().iter().map(|c| c * c).sum::<f64>().sqrt();
    let sigma = f.sigma();
    let l1 = f.coefficient_l1();
    let deg = f.degree() as i32;
    let lower = 3f64.sqrt() / 4.0;
    let integrand = |rho: f64| {
        let mu_hi = rho * rho / 2.0;
        let gap = (lower * rho * rho - c_norm).max(0.0);
        CONE_DENSITY
            * 2.0
            * std::f64::consts::PI
            * rho
            * l1
            * mu_hi.max(1.0).powi(deg)
            * weight(rho)
            * (-(gap * gap) / (sigma * sigma)).exp()
    };
    // beyond rho_end the Gaussian factor is below e^{-900}
    let rho_end = ((c_norm + 30.0 * sigma) / lower).sqrt().max(radius) + 1.0;
    let steps = 4000;
    let h = (rho_end - radius) / steps as f64;
    let mut acc = 0.5 * (integrand(radius) + integrand(rho_end));
    for i in 1..steps {
        acc += integrand(radius + i as f64 * h);
    }
    acc * h
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Residual {
    /// Euclidean norm of the residual vector.
    pub norm: f64,
    /// Scale the residual is compared against.
    pub magnitude: f64,
    pub relative: f64,
    pub tail_bound: f64,
}

impl Residual {
    fn new(residual: &[f64], magnitude: f64, tail_bound: f64) -> Self {
        let norm = residual.iter().map(|r| r * r).sum::<f64>().sqrt();
        Self {
            norm,
            magnitude,
            relative: if magnitude > 0.0 { norm / magnitude } else { norm },
            tail_bound,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InvarianceVariant {
    Faithful,
    /// Uses `+2x∂_X − 2y∂_Y` in place of `L_H`; must not pass.
    BrokenLhSign,
}

/// `P(G) = CONE_DENSITY ∬ s_n(μ₁(v)) G(μ₁(v)) da db ∈ V_n ⊂ S^{n/2}(g)`.
fn seed_pairing(basis: &SymmetricPowerBasis, g: &GaussPoly, grid: &QuadratureGrid) -> Vec<f64> {
    grid.integrate(basis.len(), |a, b| {
        let z = moment_map(a, b);
        let val = g.eval(z);
        basis.power_coords(z).into_iter().map(|c| CONE_DENSITY * c * val).collect()
    })
}

/// Residual of the invariance equation for `s_n δ_{N⁺}` tested against `F`.
///
/// For invariant `φ`, `0 = ∫ ((ρ(Z) + L_Z) φ) F = ρ(Z) P(F) − P(L_Z F)`,
/// since `L_Z` is a divergence-free vector field and so transposes to
/// `−L_Z`. Only even `n` have a global seed `s_n(Z) = Z^{n/2}`.
pub fn invariance_residual(
    n: u32,
    z: Generator,
    f: &TestFunction,
    grid: &QuadratureGrid,
) -> Result<Residual> {
    invariance_residual_with(n, z, f, grid, InvarianceVariant::Faithful)
}

pub fn invariance_residual_with(
    n: u32,
    z: Generator,
    f: &TestFunction,
    grid: &QuadratureGrid,
    variant: InvarianceVariant,
) -> Result<Residual> {
    if n % 2 == 1 {
        return Err(Error::ExpectedEven(n));
    }
    let basis = SymmetricPowerBasis::new(n / 2);
    let g = f.to_gauss_poly();
    let mut lg = g.lie_derivative(z);
    if variant == InvarianceVariant::BrokenLhSign && z == Generator::H {
        lg = lg.scale(-1.0);
    }
    let p_f = seed_pairing(&basis, &g, grid);
    let p_lf = seed_pairing(&basis, &lg, grid);
    let rho_p = mat_vec(&basis.action(z), &p_f);
    let residual: Vec<f64> = rho_p.iter().zip(&p_lf).map(|(a, b)| a - b).collect();
    let magnitude = p_f.iter().map(|x| x * x).sum::<f64>().sqrt();
    let d = f64::from(n / 2);
    let tail = tail_bound(&g, grid.radius, |rho| 3f64.powf(d) * (rho * rho / 2.0).max(1.0).powf(d))
        + tail_bound(&lg, grid.radius, |rho| 3f64.powf(d) * (rho * rho / 2.0).max(1.0).powf(d));
    Ok(Residual::new(&residual, magnitude, tail))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SectionVariant {
    /// `v ⊗ μ₁(v)^{(n−1)/2}`
    Faithful,
    /// `|a| e ⊗ μ₁(v)^{(n−1)/2}`, even in `v`; must not cancel.
    AbsoluteFirstCoordinate,
}

/// `CONE_DENSITY ∬ (v ⊗ μ₁(v)^{(n−1)/2}) F(μ₁(v)) da db` for odd `n`.
///
/// The integrand is odd under `v ↦ −v` while `μ₁` is even, so the integral
/// vanishes: a would-be global seed for odd `n` pairs to zero with every
/// test function. On the antipodally ordered grid the cancellation happens
/// node pair by node pair.
pub fn odd_section_obstruction(n: u32, f: &TestFunction, grid: &QuadratureGrid) -> Result<Residual> {
    odd_section_obstruction_with(n, f, grid, SectionVariant::Faithful)
}

pub fn odd_section_obstruction_with(
    n: u32,
    f: &TestFunction,
    grid: &QuadratureGrid,
    variant: SectionVariant,
) -> Result<Residual> {
    if n % 2 == 0 {
        return Err(Error::ExpectedOdd(n));
    }
    let basis = SymmetricPowerBasis::new((n - 1) / 2);
    let g = f.to_gauss_poly();
    let len = 2 * basis.len();
    // last slot carries the pointwise norm for the scale
    let sums = grid.integrate(len + 1, |a, b| {
        let z = moment_map(a, b);
        let val = CONE_DENSITY * g.eval(z);
        let v = match variant {
            SectionVariant::Faithful => [a, b],
            SectionVariant::AbsoluteFirstCoordinate => [a.abs(), 0.0],
        };
        let pw = basis.power_coords(z);
        let mut out: Vec<f64> = v
            .iter()
            .flat_map(|&vi| pw.iter().map(move |&p| vi * p * val))
            .collect();
        let norm = out.iter().map(|x| x * x).sum::<f64>().sqrt();
        out.push(norm);
        out
    });
    let d = f64::from((n - 1) / 2);
    let tail = tail_bound(&g, grid.radius, |rho| rho * 3f64.powf(d) * (rho * rho / 2.0).max(1.0).powf(d));
    Ok(Residual::new(&sums[..len], sums[len], tail))
}

/// `A(0)` and `A'(0)` for `A(t) = ∫_{Q = t, x − y > 0} F / |∇Q|`, with
/// `Q = h² + xy`, computed on the cone by an independent parametrization.
///
/// Near `N⁺` a scalar invariant distribution supported on the cone is a
/// multiple of a pullback `u(Q)`, and its restriction to the transversal
/// line is `u(y)` because `Q(X + yY) = y`. So the transversal data
/// `Σ a_k δ^{(k)}` predicts the pairing `c · Σ a_k (−1)^k A^{(k)}(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LevelSetMoments {
    pub a0: f64,
    pub a1: f64,
}

/// Cone coordinates: `h = s cos θ`, `(x + y)/2 = s sin θ`, `(x − y)/2 = s`.
/// `s` uses Gauss–Legendre on `[0, s_max]`, `θ` the periodic trapezoid rule.
pub fn level_set_moments(f: &GaussPoly, s_max: f64, points: usize) -> Result<LevelSetMoments> {
    let s_grid = QuadratureGrid::gauss_legendre(s_max / 2.0, points)?;
    let s_nodes: Vec<(f64, f64)> = s_grid
        .nodes_1d()
        .into_iter()
        .map(|(x, w)| (x + s_max / 2.0, w))
        .collect();
    let m_theta = 2 * points;
    let dtheta = 2.0 * std::f64::consts::PI / m_theta as f64;
    let fh = f.partial(0);
    let fu = f.partial(1).add(&f.partial(2));
    let mut a0 = Vec::with_capacity(s_nodes.len() * m_theta);
    let mut a1 = Vec::with_capacity(s_nodes.len() * m_theta);
    for &(s, ws) in &s_nodes {
        for j in 0..m_theta {
            let theta = j as f64 * dtheta;
            let (sin, cos) = theta.sin_cos();
            let z = [s * cos, s * sin + s, s * sin - s];
            let w = ws * dtheta;
            a0.push(w * f.eval(z));
            a1.push(w * (cos * fh.eval(z) + sin * fu.eval(z)) / (2.0 * s));
        }
    }
    Ok(LevelSetMoments {
        a0: super::pairwise_sum(&a0),
        a1: super::pairwise_sum(&a1),
    })
}

/// `Σ a_k (−1)^k A^{(k)}(0)` for a scalar (`n = 0`) transversal distribution
/// of order ≤ 1, without the overall normalization constant.
pub fn predict_scalar_pairing(psi: &TransversalDist, moments: &LevelSetMoments) -> Result<f64> {
    if psi.n() != 0 {
        return Err(Error::InvalidArgument("scalar prediction needs n = 0".into()));
    }
    if psi.delta_order().unwrap_or(0) > 1 {
        return Err(Error::InvalidArgument("scalar prediction supports δ-order ≤ 1".into()));
    }
    let c0 = rational::to_f64(&psi.coeff(0, 0));
    let c1 = rational::to_f64(&psi.coeff(0, 1));
    Ok(c0 * moments.a0 - c1 * moments.a1)
}

/// Measured `⟨δ_{N⁺}, □F⟩ / ⟨δ_{N⁺}, F⟩` against the ratio predicted by the
/// transversal data of `δ` and `□_X δ`; the normalization constant relating
/// the moment-map measure to the transversal delta is reported alongside.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalarConsistency {
    pub measured_ratio: f64,
    pub predicted_ratio: f64,
    pub relative_gap: f64,
    pub normalization: f64,
}

pub fn scalar_consistency(
    f: &TestFunction,
    grid: &QuadratureGrid,
    s_max: f64,
    points: usize,
) -> Result<ScalarConsistency> {
    let g = f.to_gauss_poly();
    let moments = level_set_moments(&g, s_max, points)?;
    let seed = crate::transversal::delta_seed(0);
    let boxed = crate::transversal::radial_casimir(&seed);
    let q0 = predict_scalar_pairing(&seed, &moments)?;
    let q1 = predict_scalar_pairing(&boxed, &moments)?;
    let p0 = pair_delta_nplus(&g, grid).value;
    let p1 = pair_delta_nplus(&g.casimir(), grid).value;
    let measured_ratio = p1 / p0;
    let predicted_ratio = q1 / q0;
    Ok(ScalarConsistency {
        measured_ratio,
        predicted_ratio,
        relative_gap: (measured_ratio - predicted_ratio).abs() / predicted_ratio.abs(),
        normalization: p0 / q0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::EndMatrix;
    use crate::rational::int;
    use crate::sl2::make_irrep;

    /// `½ B(v, Z v)` with `B(p, q) = p₁q₂ − p₂q₁`, Z a 2×2 matrix.
    fn half_b(v: [Rational; 2], z: [[Rational; 2]; 2]) -> Rational {
        let zv = [
            &z[0][0] * &v[0] + &z[0][1] * &v[1],
            &z[1][0] * &v[0] + &z[1][1] * &v[1],
        ];
        (&v[0] * &zv[1] - &v[1] * &zv[0]) * rational::frac(1, 2)
    }

    #[test]
    fn moment_map_matches_trace_identity() {
        let zero = || int(0);
        let h = [[int(1), zero()], [zero(), int(-1)]];
        let x = [[zero(), int(1)], [zero(), zero()]];
        let y = [[zero(), zero()], [int(1), zero()]];
        for a in -3..=3 {
            for b in -3..=3 {
                let (a, b) = (int(a), int(b));
                let [mh, mx, my] = moment_map_exact(&a, &b);
                // μ = [[mh, mx], [my, −mh]]: tr(μH) = 2mh, tr(μX) = my, tr(μY) = mx
                assert_eq!(&mh * int(2), half_b([a.clone(), b.clone()], h.clone()));
                assert_eq!(my, half_b([a.clone(), b.clone()], x.clone()));
                assert_eq!(mx, half_b([a.clone(), b.clone()], y.clone()));
                assert_eq!(&mh * &mh + &mx * &my, int(0));
                assert!(&mx - &my >= int(0));
            }
        }
        assert_eq!(moment_map(1.0, 0.0), [0.0, 0.5, 0.0]);
        assert_eq!(moment_map(0.0, 1.0), [0.0, 0.0, -0.5]);
    }

    #[test]
    fn far_gaussian_pairs_to_zero_and_positive_poly_pairs_positive() {
        let grid = QuadratureGrid::gauss_legendre(6.0, 96).unwrap();
        let far = TestFunction::gaussian([0.0, -5.0, 5.0], 0.5).unwrap();
        assert!(pair_delta_nplus(&far.to_gauss_poly(), &grid).value.abs() < 1e-12);

        let pos = TestFunction::new([([0, 1, 0], int(1)), ([0, 0, 1], int(-1))], 1.0, [0.0, 1.0, 0.0]).unwrap();
        let p = pair_delta_nplus(&pos.to_gauss_poly(), &grid);
        assert!(p.value > 0.1);
        assert!(p.tail_bound < 1e-12);
    }

    #[test]
    fn pairing_is_linear() {
        let grid = QuadratureGrid::gauss_legendre(5.0, 64).unwrap();
        let f = TestFunction::gaussian([0.2, 1.0, -0.3], 0.9).unwrap().to_gauss_poly();
        let g = f.times_coord(0).add(&f.scale(0.5));
        let lhs = pair_delta_nplus(&f.scale(3.0).add(&g), &grid).value;
        let rhs = 3.0 * pair_delta_nplus(&f, &grid).value + pair_delta_nplus(&g, &grid).value;
        assert!((lhs - rhs).abs() < 1e-12 * lhs.abs().max(1.0));
    }

    #[test]
    fn parity_checks() {
        let f = TestFunction::gaussian([0.0, 1.0, 0.0], 1.0).unwrap();
        let grid = QuadratureGrid::gauss_legendre(6.0, 32).unwrap();
        assert_eq!(invariance_residual(1, Generator::H, &f, &grid), Err(Error::ExpectedEven(1)));
        assert_eq!(odd_section_obstruction(2, &f, &grid), Err(Error::ExpectedOdd(2)));
    }

    #[test]
    fn v2_coordinates_transform_like_the_irrep() {
        // S^1(g) with ad is V_2; its H-eigenvalues are the weights −2, 0, 2.
        let basis = SymmetricPowerBasis::new(1);
        let ad_h = basis.action(Generator::H);
        let mut eig: Vec<f64> = (0..3).map(|i| ad_h[i][i]).collect();
        eig.sort_by(f64::total_cmp);
        let rep = make_irrep(2);
        let mut weights: Vec<f64> = (0..3).map(|i| rational::to_f64(&rep.rho_h()[(i, i)])).collect();
        weights.sort_by(f64::total_cmp);
        assert_eq!(eig, weights);
        assert_ne!(*rep.rho_h(), EndMatrix::zero(2));
    }

    #[test]
    fn scalar_prediction_rejects_bad_input() {
        let m = LevelSetMoments { a0: 1.0, a1: 2.0 };
        let psi = TransversalDist::single(0, 0, 1, int(-1)).unwrap();
        assert_eq!(predict_scalar_pairing(&psi, &m).unwrap(), 2.0);
        assert!(predict_scalar_pairing(&TransversalDist::single(0, 0, 2, int(1)).unwrap(), &m).is_err());
        assert!(predict_scalar_pairing(&TransversalDist::single(1, 0, 0, int(1)).unwrap(), &m).is_err());
    }
}
