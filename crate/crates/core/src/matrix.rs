//! Dense exact matrices acting on `V_n`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// An element of `End(V_n)` in the basis `(v_0, …, v_n)`.
///
/// Entry `(r, c)` is the coefficient of `v_r` in the image of `v_c`, so the
/// matrix acts on column coordinate vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct EndMatrix {
    n: u32,
    entries: Vec<Rational>,
}

impl EndMatrix {
    pub fn zero(n: u32) -> Self {
        let d = n as usize + 1;
        Self {
            n,
            entries: vec![Rational::zero(); d * d],
        }
    }

    pub fn identity(n: u32) -> Self {
        Self::scalar(n, rational::int(1))
    }

    pub fn scalar(n: u32, c: Rational) -> Self {
        let mut m = Self::zero(n);
        for i in 0..m.dim() {
            m[(i, i)] = c.clone();
        }
        m
    }

    /// The representation label `n`; the matrix is `(n+1) × (n+1)`.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n as usize + 1
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.dim()).map(<[_]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// `Some(c)` when the matrix equals `c · Id`.
    pub fn as_scalar(&self) -> Option<Rational> {
        let c = self[(0, 0)].clone();
        (*self == Self::scalar(self.n, c.clone())).then_some(c)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let d = self.dim();
        let mut out = Self::zero(self.n);
        for r in 0..d {
            for k in 0..d {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Image of the basis vector `v_col`, as `(row, coefficient)` pairs with
    /// nonzero coefficient.
    pub fn column(&self, col: usize) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        (0..self.dim())
            .map(move |r| (r, &self[(r, col)]))
            .filter(|(_, a)| !a.is_zero())
    }
}

/// `ab − ba`.
pub fn commutator(a: &EndMatrix, b: &EndMatrix) -> Result<EndMatrix> {
    a.try_mul(b)?.try_sub(&b.try_mul(a)?)
}

impl Index<(usize, usize)> for EndMatrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.entries[r * self.dim() + c]
    }
}

impl IndexMut<(usize, usize)> for EndMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        let d = self.dim();
        &mut self.entries[r * d + c]
    }
}

// The operator impls panic on mismatched sizes; use the `try_` forms when the
// sizes are not known to agree.
impl Add for &EndMatrix {
    type Output = EndMatrix;
    fn add(self, rhs: &EndMatrix) -> EndMatrix {
        self.try_add(rhs).expect("matrix size mismatch")
    }
}

impl Sub for &EndMatrix {
    type Output = EndMatrix;
    fn sub(self, rhs: &EndMatrix) -> EndMatrix {
        self.try_sub(rhs).expect("matrix size mismatch")
    }
}

impl Mul for &EndMatrix {
    type Output = EndMatrix;
    fn mul(self, rhs: &EndMatrix) -> EndMatrix {
        self.try_mul(rhs).expect("matrix size mismatch")
    }
}

impl fmt::Debug for EndMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|a| a.to_string()).collect())
            .collect();
        f.debug_struct("EndMatrix")
            .field("n", &self.n)
            .field("rows", &rows)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn commutator_with_self_vanishes() {
        let mut a = EndMatrix::zero(2);
        a[(0, 1)] = int(3);
        a[(2, 0)] = int(-1);
        a[(1, 1)] = int(5);
        assert!(commutator(&a, &a).unwrap().is_zero());
    }

    #[test]
    fn mismatched_sizes_are_rejected() {
        let err = commutator(&EndMatrix::zero(1), &EndMatrix::zero(2)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 1, right: 2 });
    }

    #[test]
    fn scalar_detection() {
        assert_eq!(EndMatrix::scalar(3, int(4)).as_scalar(), Some(int(4)));
        let mut m = EndMatrix::identity(1);
        m[(0, 1)] = int(1);
        assert_eq!(m.as_scalar(), None);
    }
}
