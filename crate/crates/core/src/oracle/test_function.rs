//! Polynomial × Gaussian test functions on sl(2,ℝ) ≅ ℝ³, coordinates `(h, x, y)`
//! for `Z = hH + xX + yY`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::sl2::Generator;

/// Coordinate index: 0 = h, 1 = x, 2 = y.
pub type Exponent = [u32; 3];

/// `poly(Z) · exp(−|Z − center|² / σ²)` with an exact polynomial part.
#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction {
    poly: BTreeMap<Exponent, Rational>,
    sigma: f64,
    center: [f64; 3],
}

impl TestFunction {
    pub fn new(
        poly: impl IntoIterator<Item = (Exponent, Rational)>,
        sigma: f64,
        center: [f64; 3],
    ) -> Result<Self> {
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(Error::InvalidArgument(format!("gaussian width must be positive, got {sigma}")));
        }
        if center.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument("center must be finite".into()));
        }
        let mut map: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e, c) in poly {
            *map.entry(e).or_default() += c;
        }
        map.retain(|_, c| *c != Rational::default());
        Ok(Self { poly: map, sigma, center })
    }

    /// Plain Gaussian, polynomial part `1`.
    pub fn gaussian(center: [f64; 3], sigma: f64) -> Result<Self> {
        Self::new([([0, 0, 0], rational::int(1))], sigma, center)
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn center(&self) -> [f64; 3] {
        self.center
    }

    pub fn to_gauss_poly(&self) -> GaussPoly {
        GaussPoly {
            poly: self
                .poly
                .iter()
                .map(|(&e, c)| (e, rational::to_f64(c)))
                .collect(),
            sigma: self.sigma,
            center: self.center,
        }
    }

    pub fn eval(&self, z: [f64; 3]) -> f64 {
        self.to_gauss_poly().eval(z)
    }
}

/// Floating-point `P(Z) · exp(−|Z − c|²/σ²)`. Closed under partial
/// derivatives and multiplication by coordinates, so Lie derivatives and the
/// Casimir of a test function are again of this form.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussPoly {
    poly: BTreeMap<Exponent, f64>,
    sigma: f64,
    center: [f64; 3],
}

impl GaussPoly {
    fn with_poly(&self, poly: BTreeMap<Exponent, f64>) -> Self {
        let mut poly = poly;
        poly.retain(|_, c| *c != 0.0);
        Self {
            poly,
            sigma: self.sigma,
            center: self.center,
        }
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn center(&self) -> [f64; 3] {
        self.center
    }

    pub fn degree(&self) -> u32 {
        self.poly.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// `Σ |coefficient|`, used for tail bounds.
    pub fn coefficient_l1(&self) -> f64 {
        self.poly.values().map(|c| c.abs()).sum()
    }

    pub fn poly_value(&self, z: [f64; 3]) -> f64 {
        self.poly
            .iter()
            .map(|(e, c)| c * z[0].powi(e[0] as i32) * z[1].powi(e[1] as i32) * z[2].powi(e[2] as i32))
            .sum()
    }

    pub fn gaussian_value(&self, z: [f64; 3]) -> f64 {
        let r2: f64 = (0..3).map(|j| (z[j] - self.center[j]).powi(2)).sum();
        (-r2 / (self.sigma * self.sigma)).exp()
    }

    pub fn eval(&self, z: [f64; 3]) -> f64 {
        let g = self.gaussian_value(z);
        if g == 0.0 {
            return 0.0;
        }
        self.poly_value(z) * g
    }

    pub fn scale(&self, s: f64) -> Self {
        self.with_poly(self.poly.iter().map(|(&e, c)| (e, c * s)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(
            self.sigma == other.sigma && self.center == other.center,
            "gaussian factors must agree"
        );
        let mut poly = self.poly.clone();
        for (&e, c) in &other.poly {
            *poly.entry(e).or_insert(0.0) += c;
        }
        self.with_poly(poly)
    }

    /// Multiply by the coordinate `z_var`.
    pub fn times_coord(&self, var: usize) -> Self {
        self.with_poly(
            self.poly
                .iter()
                .map(|(&e, &c)| {
                    let mut e = e;
                    e[var] += 1;
                    (e, c)
                })
                .collect(),
        )
    }

    /// `∂/∂z_var` of the whole product.
    pub fn partial(&self, var: usize) -> Self {
        let mut poly: BTreeMap<Exponent, f64> = BTreeMap::new();
        let k = 2.0 / (self.sigma * self.sigma);
        for (&e, &c) in &self.poly {
            if e[var] > 0 {
                let mut d = e;
                d[var] -= 1;
                *poly.entry(d).or_insert(0.0) += c * f64::from(e[var]);
            }
            let mut up = e;
            up[var] += 1;
            *poly.entry(up).or_insert(0.0) -= k * c;
            *poly.entry(e).or_insert(0.0) += k * c * self.center[var];
        }
        self.with_poly(poly)
    }

    /// `L_H = −2x∂_X + 2y∂_Y`, `L_X = 2h∂_X − y∂_H`, `L_Y = x∂_H − 2h∂_Y`.
    pub fn lie_derivative(&self, z: Generator) -> Self {
        let (h, x, y) = (0, 1, 2);
        match z {
            Generator::H => self
                .partial(x)
                .times_coord(x)
                .scale(-2.0)
                .add(&self.partial(y).times_coord(y).scale(2.0)),
            Generator::X => self
                .partial(x)
                .times_coord(h)
                .scale(2.0)
                .add(&self.partial(h).times_coord(y).scale(-1.0)),
            Generator::Y => self
                .partial(h)
                .times_coord(x)
                .add(&self.partial(y).times_coord(h).scale(-2.0)),
        }
    }

    /// `□ = ½∂_H² + 2∂_Y∂_X`.
    pub fn casimir(&self) -> Self {
        self.partial(0)
            .partial(0)
            .scale(0.5)
            .add(&self.partial(1).partial(2).scale(2.0))
    }
}
