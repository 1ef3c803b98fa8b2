//! The irreducible representations `V_n` of sl(2,ℝ).
//!
//! Basis convention: `v_0` has weight `−n` and `v_i = ρ(X)^i v_0`. With this
//! normalization `ρ(Y) v_i = (n−i+1) i · v_{i−1}`, and every structure
//! constant downstream is an integer.

use crate::error::{Error, Result};
use crate::matrix::{commutator, EndMatrix};
use crate::rational::{self, Rational};

/// Which basis element of sl(2,ℝ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    H,
    X,
    Y,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::H, Generator::X, Generator::Y];

    pub fn label(self) -> &'static str {
        match self {
            Generator::H => "H",
            Generator::X => "X",
            Generator::Y => "Y",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irrep {
    n: u32,
    rho_h: EndMatrix,
    rho_x: EndMatrix,
    rho_y: EndMatrix,
}

impl Irrep {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rho_h(&self) -> &EndMatrix {
        &self.rho_h
    }

    pub fn rho_x(&self) -> &EndMatrix {
        &self.rho_x
    }

    pub fn rho_y(&self) -> &EndMatrix {
        &self.rho_y
    }

    pub fn rho(&self, z: Generator) -> &EndMatrix {
        match z {
            Generator::H => &self.rho_h,
            Generator::X => &self.rho_x,
            Generator::Y => &self.rho_y,
        }
    }

    /// `½ρ(H)² + ρ(X)ρ(Y) + ρ(Y)ρ(X)`.
    pub fn casimir_matrix(&self) -> EndMatrix {
        let h2 = (&self.rho_h * &self.rho_h).scale(&rational::frac(1, 2));
        let xy = &self.rho_x * &self.rho_y;
        let yx = &self.rho_y * &self.rho_x;
        &(&h2 + &xy) + &yx
    }

    /// The three defining relations `[H,X]=2X`, `[H,Y]=−2Y`, `[X,Y]=H`, each
    /// reported as its residual matrix (all zero for a valid irrep).
    pub fn relation_residuals(&self) -> [(&'static str, EndMatrix); 3] {
        let two = rational::int(2);
        let hx = commutator(&self.rho_h, &self.rho_x).unwrap();
        let hy = commutator(&self.rho_h, &self.rho_y).unwrap();
        let xy = commutator(&self.rho_x, &self.rho_y).unwrap();
        [
            ("[H,X]=2X", &hx - &self.rho_x.scale(&two)),
            ("[H,Y]=-2Y", &hy + &self.rho_y.scale(&two)),
            ("[X,Y]=H", &xy - &self.rho_h),
        ]
    }
}

pub fn make_irrep(n: u32) -> Irrep {
    let mut rho_h = EndMatrix::zero(n);
    let mut rho_x = EndMatrix::zero(n);
    let mut rho_y = EndMatrix::zero(n);
    let nn = i64::from(n);
    for i in 0..=n as usize {
        let ii = i as i64;
        rho_h[(i, i)] = rational::int(-nn + 2 * ii);
        if i < n as usize {
            rho_x[(i + 1, i)] = rational::int(1);
        }
        if i >= 1 {
            rho_y[(i - 1, i)] = rational::int((nn - ii + 1) * ii);
        }
    }
    Irrep {
        n,
        rho_h,
        rho_x,
        rho_y,
    }
}

/// The scalar by which the Casimir acts, after checking that it is scalar.
pub fn casimir_scalar(r: &Irrep) -> Result<Rational> {
    let c = r
        .casimir_matrix()
        .as_scalar()
        .ok_or(Error::NonScalarCasimir { n: r.n })?;
    Ok(c)
}

/// `n²/2 + n`.
pub fn expected_casimir(n: u32) -> Rational {
    let n = i64::from(n);
    rational::frac(n * n + 2 * n, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn trivial_rep_is_zero() {
        let r = make_irrep(0);
        assert!(r.rho_h().is_zero() && r.rho_x().is_zero() && r.rho_y().is_zero());
        assert_eq!(casimir_scalar(&r).unwrap(), int(0));
    }

    #[test]
    fn standard_rep_matrices() {
        let r = make_irrep(1);
        assert_eq!(r.rho_h()[(0, 0)], int(-1));
        assert_eq!(r.rho_h()[(1, 1)], int(1));
        // ρ(X): v_0 ↦ v_1
        assert_eq!(r.rho_x().rows(), vec![vec![int(0), int(0)], vec![int(1), int(0)]]);
        // ρ(Y): v_1 ↦ v_0
        assert_eq!(r.rho_y().rows(), vec![vec![int(0), int(1)], vec![int(0), int(0)]]);
        assert_eq!(casimir_scalar(&r).unwrap(), frac(3, 2));
    }

    #[test]
    fn adjoint_casimir_is_four() {
        let r = make_irrep(2);
        assert_eq!(r.casimir_matrix(), EndMatrix::scalar(2, int(4)));
        assert_eq!(casimir_scalar(&r).unwrap(), int(4));
    }

    #[test]
    fn x_y_bracket_on_v3() {
        let r = make_irrep(3);
        assert_eq!(commutator(r.rho_x(), r.rho_y()).unwrap(), *r.rho_h());
        assert_eq!(
            commutator(make_irrep(1).rho_h(), make_irrep(1).rho_x()).unwrap(),
            make_irrep(1).rho_x().scale(&int(2))
        );
    }

    #[test]
    fn relations_casimir_and_nilpotency_up_to_16() {
        for n in 0..=16 {
            let r = make_irrep(n);
            for (name, res) in r.relation_residuals() {
                assert!(res.is_zero(), "{name} fails for n={n}");
            }
            assert_eq!(casimir_scalar(&r).unwrap(), expected_casimir(n));
            assert!(r.rho_x().pow(n + 1).is_zero());
            assert!(r.rho_y().pow(n + 1).is_zero());
            if n > 0 {
                assert!(!r.rho_x().pow(n).is_zero());
            }
        }
    }

    #[test]
    fn corrupted_irrep_is_detected() {
        let mut r = make_irrep(2);
        r.rho_y[(0, 1)] = int(5);
        assert_eq!(casimir_scalar(&r), Err(Error::NonScalarCasimir { n: 2 }));
    }
}
