//! `V_n`-valued distributions on the transversal line `X + ℝY`, supported at
//! the point `X` (coordinate `y = 0`).
//!
//! A distribution is a finite sum `Σ a_{i,k} δ^{(k)}(y) ⊗ v_i`, with `δ^{(0)}`
//! normalized by `∫ δ(y) g(y) dy = g(0)`. A locally invariant generalized
//! function near `X` is determined by its restriction to the line, and a
//! restriction `ψ` comes from an invariant one exactly when
//! `(ρ(X) + y ρ(Y)) ψ = 0`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::EndMatrix;
use crate::rational::{self, Rational};
use crate::sl2::{make_irrep, Irrep};

/// `Σ a_{i,k} δ^{(k)} ⊗ v_i`, keyed by `(i, k)`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DistRecord", into = "DistRecord")]
pub struct TransversalDist {
    n: u32,
    terms: BTreeMap<(u32, u32), Rational>,
}

impl TransversalDist {
    pub fn zero(n: u32) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `c · δ^{(k)} ⊗ v_i`.
    pub fn single(n: u32, i: u32, k: u32, c: Rational) -> Result<Self> {
        Self::from_terms(n, [((i, k), c)])
    }

    /// Collects terms, summing repeated keys and dropping zeros.
    pub fn from_terms(
        n: u32,
        terms: impl IntoIterator<Item = ((u32, u32), Rational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(n);
        for ((i, k), c) in terms {
            if i > n {
                return Err(Error::InvalidArgument(format!(
                    "basis index v_{i} out of range for V_{n}"
                )));
            }
            out.add_term(i, k, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, i: u32, k: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, k)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Nonzero terms in `(i, k)` lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> + '_ {
        self.terms.iter().map(|(&key, c)| (key, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, k: u32) -> Rational {
        self.terms.get(&(i, k)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest δ-derivative present; `None` for the zero distribution.
    pub fn delta_order(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, k)| k).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        for ((i, k), a) in self.terms() {
            out.add_term(i, k, a * c);
        }
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_same(self.n, other.n)?;
        let mut out = self.clone();
        for ((i, k), a) in other.terms() {
            out.add_term(i, k, a.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-Rational::one()))
    }
}

fn check_same(a: u32, b: u32) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch { left: a, right: b });
    }
    Ok(())
}

/// `δ^{(0)} ⊗ v_n`: the restriction of `s_n δ_{N⁺}` to the transversal, with
/// `v_n` standing for `X^{n/2}` (n even) or `e ⊗ X^{(n−1)/2}` (n odd).
pub fn delta_seed(n: u32) -> TransversalDist {
    TransversalDist::single(n, n, 0, rational::int(1)).expect("v_n is in range")
}

/// `∂/∂y`: shifts every `δ^{(k)}` to `δ^{(k+1)}`.
pub fn d_dy(psi: &TransversalDist) -> TransversalDist {
    TransversalDist {
        n: psi.n,
        terms: psi.terms().map(|((i, k), a)| ((i, k + 1), a.clone())).collect(),
    }
}

/// Multiplication by `y`: `y δ^{(0)} = 0`, `y δ^{(k)} = −k δ^{(k−1)}`.
pub fn mul_y(psi: &TransversalDist) -> TransversalDist {
    let mut out = TransversalDist::zero(psi.n);
    for ((i, k), a) in psi.terms() {
        if k > 0 {
            out.add_term(i, k - 1, -(a * rational::int(i64::from(k))));
        }
    }
    out
}

/// Acts by `E` on the `V_n` factor.
pub fn apply_endo(e: &EndMatrix, psi: &TransversalDist) -> Result<TransversalDist> {
    check_same(e.n(), psi.n)?;
    let mut out = TransversalDist::zero(psi.n);
    for ((i, k), a) in psi.terms() {
        for (row, entry) in e.column(i as usize) {
            out.add_term(row as u32, k, a * entry);
        }
    }
    Ok(out)
}

fn defect_in(rep: &Irrep, psi: &TransversalDist) -> TransversalDist {
    let x_part = apply_endo(rep.rho_x(), psi).expect("same rep");
    let y_part = mul_y(&apply_endo(rep.rho_y(), psi).expect("same rep"));
    x_part.try_add(&y_part).expect("same rep")
}

/// `(ρ(X) + y ρ(Y)) ψ`. Zero exactly when `ψ` is the restriction of a
/// locally invariant generalized function.
pub fn equivariance_defect(psi: &TransversalDist) -> TransversalDist {
    defect_in(&make_irrep(psi.n), psi)
}

pub fn is_invariant(psi: &TransversalDist) -> bool {
    equivariance_defect(psi).is_zero()
}

/// Restriction of the Casimir `□ = ½∂_H² + 2∂_Y∂_X` to the transversal:
/// `(3 + ρ(H) + 2y ∂_y) ∂_y + ½ ρ(Y)²`.
pub fn radial_casimir(psi: &TransversalDist) -> TransversalDist {
    radial_casimir_in(&make_irrep(psi.n), psi)
}

pub(crate) fn radial_casimir_in(rep: &Irrep, psi: &TransversalDist) -> TransversalDist {
    let d = d_dy(psi);
    let mut out = d.scale(&rational::int(3));
    out = out
        .try_add(&apply_endo(rep.rho_h(), &d).expect("same rep"))
        .expect("same rep");
    out = out
        .try_add(&mul_y(&d_dy(&d)).scale(&rational::int(2)))
        .expect("same rep");
    let y2 = apply_endo(rep.rho_y(), &apply_endo(rep.rho_y(), psi).expect("same rep"))
        .expect("same rep");
    out.try_add(&y2.scale(&rational::frac(1, 2)))
        .expect("same rep")
}

/// Restriction of `M_n = ρ(X)∂_Y + ρ(Y)∂_X + ½ρ(H)∂_H` to the transversal:
/// `(ρ(X) + yρ(Y)) ∂_y + ρ(Y)`.
///
/// On the line `x = 1, h = 0` an invariant `φ` has `∂_X φ = ½ρ(H)φ + y∂_yφ`
/// and `∂_H φ = −ρ(Y)φ`; substituting and using `[ρ(Y), ρ(H)] = 2ρ(Y)` gives
/// the formula. It is only valid on invariant input, so anything else is
/// refused.
pub fn radial_mn(psi: &TransversalDist) -> Result<TransversalDist> {
    let rep = make_irrep(psi.n);
    if !defect_in(&rep, psi).is_zero() {
        return Err(Error::NotInvariant);
    }
    let first = defect_in(&rep, &d_dy(psi));
    let second = apply_endo(rep.rho_y(), psi)?;
    first.try_add(&second)
}

impl fmt::Display for TransversalDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, ((i, k), a)) in self.terms().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({a})·δ^{k}⊗v_{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TransversalDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TransversalDist[n={}] {}", self.n, self)
    }
}

/// On-disk record: `{n, terms: [{i, k, coeff: "p/q"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistRecord {
    pub n: u32,
    pub terms: Vec<TermRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub i: u32,
    pub k: u32,
    pub coeff: String,
}

impl From<TransversalDist> for DistRecord {
    fn from(d: TransversalDist) -> Self {
        DistRecord {
            n: d.n,
            terms: d
                .terms()
                .map(|((i, k), a)| TermRecord {
                    i,
                    k,
                    coeff: rational::to_text(a),
                })
                .collect(),
        }
    }
}

impl TryFrom<DistRecord> for TransversalDist {
    type Error = Error;

    fn try_from(rec: DistRecord) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for t in rec.terms {
            if t.i > rec.n {
                return Err(Error::Parse(format!("v_{} out of range for V_{}", t.i, rec.n)));
            }
            let c = rational::from_text(&t.coeff)?;
            if c.is_zero() {
                return Err(Error::Parse(format!("stored zero at (i={}, k={})", t.i, t.k)));
            }
            if terms.insert((t.i, t.k), c).is_some() {
                return Err(Error::Parse(format!("duplicate key (i={}, k={})", t.i, t.k)));
            }
        }
        Ok(TransversalDist { n: rec.n, terms })
    }
}

impl TransversalDist {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}
