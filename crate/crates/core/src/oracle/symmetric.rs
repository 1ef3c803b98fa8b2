//! Monomial coordinates on `S^d(g)`, used to realize `V_n` for even `n`
//! as the span of `Z^{n/2}` over nilpotent `Z`.

use crate::sl2::Generator;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPowerBasis {
    degree: u32,
    /// exponents of `H^a X^b Y^c`, lexicographic
    monomials: Vec<[u32; 3]>,
}

impl SymmetricPowerBasis {
    pub fn new(degree: u32) -> Self {
        let mut monomials = Vec::new();
        for a in 0..=degree {
            for b in 0..=degree - a {
                monomials.push([a, b, degree - a - b]);
            }
        }
        Self { degree, monomials }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[[u32; 3]] {
        &self.monomials
    }

    fn index(&self, e: [u32; 3]) -> usize {
        self.monomials
            .binary_search(&e)
            .expect("monomial of the right degree")
    }

    /// Coordinates of `W^d` for `W = hH + xX + yY`.
    pub fn power_coords(&self, w: [f64; 3]) -> Vec<f64> {
        self.monomials
            .iter()
            .map(|e| {
                multinomial(self.degree, e)
                    * w[0].powi(e[0] as i32)
                    * w[1].powi(e[1] as i32)
                    * w[2].powi(e[2] as i32)
            })
            .collect()
    }

    /// Matrix of `ad(Z)` extended to `S^d(g)` as a derivation; entry
    /// `[r][c]` is the coefficient of monomial `r` in the image of monomial `c`.
    pub fn action(&self, z: Generator) -> Vec<Vec<f64>> {
        // ad(Z) on the basis (H, X, Y), as (coefficient, target) lists
        let ad: [&[(f64, usize)]; 3] = match z {
            Generator::H => [&[], &[(2.0, 1)], &[(-2.0, 2)]],
            Generator::X => [&[(-2.0, 1)], &[], &[(1.0, 0)]],
            Generator::Y => [&[(2.0, 2)], &[(-1.0, 0)], &[]],
        };
        let d = self.len();
        let mut m = vec![vec![0.0; d]; d];
        for (c, &e) in self.monomials.iter().enumerate() {
            for (slot, images) in ad.iter().enumerate() {
                if e[slot] == 0 {
                    continue;
                }
                for &(coef, target) in images.iter() {
                    let mut out = e;
                    out[slot] -= 1;
                    out[target] += 1;
                    m[self.index(out)][c] += f64::from(e[slot]) * coef;
                }
            }
        }
        m
    }
}

fn multinomial(d: u32, e: &[u32; 3]) -> f64 {
    let fact = |k: u32| (1..=k).map(f64::from).product::<f64>();
    fact(d) / (fact(e[0]) * fact(e[1]) * fact(e[2]))
}

pub(crate) fn mat_vec(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one_is_adjoint() {
        let s = SymmetricPowerBasis::new(1);
        assert_eq!(s.len(), 3);
        // monomials sorted: Y=[0,0,1], X=[0,1,0], H=[1,0,0]
        let w = [0.5, -1.0, 2.0];
        let ad_x = s.action(Generator::X);
        // [X, W] = yH − 2hX
        let img = mat_vec(&ad_x, &s.power_coords(w));
        let expected = s.power_coords([w[2], -2.0 * w[0], 0.0]);
        for (a, b) in img.iter().zip(&expected) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn action_is_a_representation() {
        // [ad H, ad X] = 2 ad X on S^3(g)
        let s = SymmetricPowerBasis::new(3);
        let h = s.action(Generator::H);
        let x = s.action(Generator::X);
        let d = s.len();
        for r in 0..d {
            for c in 0..d {
                let hx: f64 = (0..d).map(|k| h[r][k] * x[k][c] - x[r][k] * h[k][c]).sum();
                assert!((hx - 2.0 * x[r][c]).abs() < 1e-12);
            }
        }
    }
}
