//! sl(2) characters as integer Laurent polynomials in one weight variable.
//!
//! Used to count the graded pieces of `(V_n ⊗ S(g))^g`, which describe the
//! invariant distributions supported at the origin.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Serialize)]
pub struct Character {
    /// weight → multiplicity, zero entries never stored
    coeffs: BTreeMap<i64, i64>,
}

impl Character {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The character of the trivial representation, `z^0`.
    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(weight: i64, mult: i64) -> Self {
        let mut c = Self::zero();
        c.add_term(weight, mult);
        c
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut c = Self::zero();
        for (w, m) in pairs {
            c.add_term(w, m);
        }
        c
    }

    fn add_term(&mut self, weight: i64, mult: i64) {
        if mult == 0 {
            return;
        }
        let e = self.coeffs.entry(weight).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.coeffs.remove(&weight);
        }
    }

    pub fn coeff(&self, weight: i64) -> i64 {
        self.coeffs.get(&weight).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&w, &m)| (w, m))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of multiplicities, i.e. the dimension of the represented module.
    pub fn degree(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|(w, m)| self.coeff(-w) == m)
    }

    /// Substitute `z ↦ z^r` (the Adams operation `ψ^r`).
    pub fn adams(&self, r: i64) -> Self {
        Self::from_pairs(self.terms().map(|(w, m)| (w * r, m)))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_pairs(self.terms().map(|(w, m)| (w, m * k)))
    }

    /// Split into irreducibles by repeatedly removing the character of
    /// `V_w` for the current highest weight `w`. Returns highest weight →
    /// multiplicity.
    pub fn decompose(&self) -> Result<BTreeMap<u32, u64>> {
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        while let Some((&top, &mult)) = rest.coeffs.iter().next_back() {
            if mult < 0 || top < 0 {
                return Err(Error::NotGenuine(format!(
                    "weight {top} left with multiplicity {mult}"
                )));
            }
            let w = top as u32;
            *out.entry(w).or_insert(0) += mult as u64;
            rest = &rest - &irrep_character(w).scale(mult);
        }
        Ok(out)
    }
}

impl Add for &Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        for (w, m) in rhs.terms() {
            out.add_term(w, m);
        }
        out
    }
}

impl Sub for &Character {
    type Output = Character;
    fn sub(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        for (w, m) in rhs.terms() {
            out.add_term(w, -m);
        }
        out
    }
}

impl Mul for &Character {
    type Output = Character;
    fn mul(self, rhs: &Character) -> Character {
        let mut out = Character::zero();
        for (w1, m1) in self.terms() {
            for (w2, m2) in rhs.terms() {
                out.add_term(w1 + w2, m1 * m2);
            }
        }
        out
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter()).finish()
    }
}

/// `Σ_{i=0}^{n} z^{−n+2i}`.
pub fn irrep_character(n: u32) -> Character {
    let n = i64::from(n);
    Character::from_pairs((0..=n).map(|i| (-n + 2 * i, 1)))
}

/// Clebsch–Gordan: highest weights of `V_a ⊗ V_b`, largest first. The result
/// is obtained by peeling the product character, not from the closed form.
pub fn tensor_decompose(a: u32, b: u32) -> Vec<u32> {
    let product = &irrep_character(a) * &irrep_character(b);
    let parts = product
        .decompose()
        .expect("product of genuine characters is genuine");
    parts
        .iter()
        .rev()
        .flat_map(|(&w, &m)| std::iter::repeat_n(w, m as usize))
        .collect()
}

/// Character of `S^m` of the module with character `c`, by Newton's identity
/// `m·h_m = Σ_{r=1}^{m} ψ^r(c)·h_{m−r}`.
pub fn sym_power(m: u32, c: &Character) -> Result<Character> {
    if !c.is_symmetric() || c.terms().any(|(_, k)| k < 0) {
        return Err(Error::NotGenuine(format!("{c:?}")));
    }
    let mut h = vec![Character::one()];
    for j in 1..=i64::from(m) {
        let mut acc = Character::zero();
        for r in 1..=j {
            acc = &acc + &(&c.adams(r) * &h[(j - r) as usize]);
        }
        if acc.terms().any(|(_, k)| k % j != 0) {
            return Err(Error::Contradiction(format!(
                "Newton recursion not divisible at degree {j}"
            )));
        }
        h.push(Character::from_pairs(acc.terms().map(|(w, k)| (w, k / j))));
    }
    Ok(h.pop().unwrap())
}

pub fn adjoint_character() -> Character {
    irrep_character(2)
}

/// Multiplicity of `V_n` in `S^m(g)` for the adjoint module `g`; this is the
/// dimension of the degree-`m` piece of the invariant distributions with
/// values in `V_n` supported at the origin.
pub fn invariant_dim(n: u32, m: u32) -> u64 {
    let s = sym_power(m, &adjoint_character()).expect("adjoint character is genuine");
    s.decompose()
        .expect("symmetric powers are genuine")
        .get(&n)
        .copied()
        .unwrap_or(0)
}

/// Closed form for [`invariant_dim`]: `S^m(g) = ⊕_{j ≤ m/2} V_{2m−4j}`.
pub fn expected_invariant_dim(n: u32, m: u32) -> u64 {
    u64::from(n % 2 == 0 && n <= 2 * m && (2 * m - n) % 4 == 0)
}

/// `[invariant_dim(n, 0), …, invariant_dim(n, max_m)]`, sharing the
/// symmetric power computation.
pub fn invariant_dims(n: u32, max_m: u32) -> Vec<u64> {
    let adj = adjoint_character();
    (0..=max_m)
        .map(|m| {
            sym_power(m, &adj)
                .and_then(|s| s.decompose())
                .expect("symmetric powers of the adjoint are genuine")
                .get(&n)
                .copied()
                .unwrap_or(0)
        })
        .collect()
}
