//! Exact classification of the invariant distributions supported on the
//! cone near `X`, as finite linear algebra over ℚ.
//!
//! Everything is bounded by a δ-order cutoff `K`. The cutoff only limits the
//! search space: operators are applied without truncation, and the
//! statements checked here are the `K`-indexed families whose union is the
//! infinite-dimensional picture.

mod global;

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, Rational};
use crate::sl2::make_irrep;
use crate::transversal::{self, TransversalDist};

pub use global::{
    classify_global, classify_global_to, classify_square_finite_supported, CaseLine,
    GeneratorCount, GlobalAnswer, GlobalQuery, DEFAULT_MAX_DEGREE,
};

/// Monic `p(t) = t^r + a_{r−1} t^{r−1} + … + a_0`, to be evaluated at `□`.
#[derive(Clone, PartialEq, Eq)]
pub struct CasimirPolynomial {
    /// `a_0, …, a_{r−1}`
    lower: Vec<Rational>,
}

impl CasimirPolynomial {
    /// From the non-leading coefficients `a_0, …, a_{r−1}`; `r ≥ 1`.
    pub fn monic(lower: Vec<Rational>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidArgument(
                "a monic polynomial in □ needs degree at least 1".into(),
            ));
        }
        Ok(Self { lower })
    }

    /// `t^r`.
    pub fn power(r: usize) -> Result<Self> {
        Self::monic(vec![Rational::zero(); r])
    }

    pub fn degree(&self) -> usize {
        self.lower.len()
    }

    /// `a_0, …, a_{r−1}`.
    pub fn lower_coefficients(&self) -> &[Rational] {
        &self.lower
    }

    pub fn constant_term(&self) -> &Rational {
        &self.lower[0]
    }

    /// `p(□_X) ψ`, exact and untruncated.
    pub fn apply(&self, psi: &TransversalDist) -> TransversalDist {
        let rep = make_irrep(psi.n());
        let mut power = psi.clone();
        let mut acc = TransversalDist::zero(psi.n());
        for a in &self.lower {
            if !a.is_zero() {
                acc = acc.try_add(&power.scale(a)).expect("same rep");
            }
            power = transversal::radial_casimir_in(&rep, &power);
        }
        acc.try_add(&power).expect("same rep")
    }
}

impl fmt::Display for CasimirPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.degree();
        write!(f, "{}", monomial(r))?;
        for k in (0..r).rev() {
            let a = &self.lower[k];
            if a.is_zero() {
                continue;
            }
            let sign = if *a < Rational::zero() { '-' } else { '+' };
            let mag = if *a < Rational::zero() { -a.clone() } else { a.clone() };
            if k == 0 {
                write!(f, " {sign} {mag}")?;
            } else if mag.is_one() {
                write!(f, " {sign} {}", monomial(k))?;
            } else {
                write!(f, " {sign} {mag}*{}", monomial(k))?;
            }
        }
        Ok(())
    }
}

fn monomial(k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => "t".into(),
        _ => format!("t^{k}"),
    }
}

impl fmt::Debug for CasimirPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CasimirPolynomial({self})")
    }
}

/// The finite coordinate space `{(i, k) : i ≤ n, k ≤ max_order}`, flattened in
/// lexicographic `(i, k)` order.
#[derive(Debug, Clone, Copy)]
struct Coords {
    n: u32,
    max_order: u32,
}

impl Coords {
    fn width(&self) -> usize {
        (self.max_order as usize) + 1
    }

    fn len(&self) -> usize {
        (self.n as usize + 1) * self.width()
    }

    fn index(&self, i: u32, k: u32) -> usize {
        i as usize * self.width() + k as usize
    }

    fn key(&self, idx: usize) -> (u32, u32) {
        ((idx / self.width()) as u32, (idx % self.width()) as u32)
    }

    fn to_dist(&self, v: &[Rational]) -> TransversalDist {
        TransversalDist::from_terms(
            self.n,
            v.iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(idx, a)| (self.key(idx), a.clone())),
        )
        .expect("indices are in range")
    }

    fn to_vec(&self, psi: &TransversalDist) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.len()];
        for ((i, k), a) in psi.terms() {
            assert!(k <= self.max_order, "order {k} exceeds cutoff {}", self.max_order);
            v[self.index(i, k)] = a.clone();
        }
        v
    }
}

/// Rewrites a spanning set of invariant distributions so that element `j` is
/// the unique one with `a_{n,j} = 1`, and `a_{n,j'} = 0` for the other
/// readout positions `j'` that are pivots.
///
/// Fails if the readout `ψ ↦ (a_{n,k})_k` is not injective on the span,
/// which would contradict the classification.
fn normalize_by_readout(coords: Coords, vectors: Vec<Vec<Rational>>) -> Result<Vec<TransversalDist>> {
    let n = coords.n;
    let readout: Vec<usize> = (0..=coords.max_order).map(|k| coords.index(n, k)).collect();
    let rest: Vec<usize> = (0..coords.len()).filter(|c| !readout.contains(c)).collect();
    let order: Vec<usize> = readout.iter().chain(&rest).copied().collect();

    let permuted: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|v| order.iter().map(|&c| v[c].clone()).collect())
        .collect();
    let (rows, pivots) = linalg::rref(&permuted, coords.len());
    if let Some(&bad) = pivots.iter().find(|&&p| p >= readout.len()) {
        let (i, k) = coords.key(order[bad]);
        return Err(Error::Contradiction(format!(
            "readout (a_{{n,k}})_k is not injective for n={n}: free coordinate at (i={i}, k={k})"
        )));
    }
    Ok(rows
        .into_iter()
        .map(|row| {
            let mut v = vec![Rational::zero(); coords.len()];
            for (pos, a) in row.into_iter().enumerate() {
                v[order[pos]] = a;
            }
            coords.to_dist(&v)
        })
        .collect())
}

/// Exact basis of the invariant distributions of δ-order at most `max_order`,
/// normalized so that element `j` has `a_{n,j} = 1`.
pub fn kernel_basis(n: u32, max_order: u32) -> Result<Vec<TransversalDist>> {
    let coords = Coords { n, max_order };
    let rep = make_irrep(n);
    // The defect preserves or lowers the δ-order, so its image lives in the
    // same coordinate space.
    let mut columns = Vec::with_capacity(coords.len());
    for idx in 0..coords.len() {
        let (i, k) = coords.key(idx);
        let e = TransversalDist::single(n, i, k, Rational::one())?;
        let x = transversal::apply_endo(rep.rho_x(), &e)?;
        let y = transversal::mul_y(&transversal::apply_endo(rep.rho_y(), &e)?);
        columns.push(coords.to_vec(&x.try_add(&y)?));
    }
    let rows: Vec<Vec<Rational>> = (0..coords.len())
        .map(|r| columns.iter().map(|col| col[r].clone()).collect())
        .collect();
    let null = linalg::nullspace(&rows, coords.len());
    let basis = normalize_by_readout(coords, null)?;
    debug_assert!(basis.iter().all(transversal::is_invariant));
    Ok(basis)
}

/// Expected dimension of the invariant space at δ-order ≤ `max_order`.
pub fn expected_kernel_dim(n: u32, max_order: u32) -> usize {
    if n % 2 == 0 {
        max_order as usize + 1
    } else {
        (max_order as usize + 1).min((n as usize + 1) / 2)
    }
}

/// Predicted dimension of the `p(□)`-annihilated invariants at δ-order
/// ≤ `max_order`.
///
/// Zero for even `n`. For odd `n`, `□` acts on the kernel as the shift along
/// the finite orbit `σ, …, □^{(n−1)/2}σ`, so only the order of vanishing `r`
/// of `p` at 0 matters: the answer is the number of orbit elements of index
/// at least `(n+1)/2 − r` and at most `max_order`.
pub fn expected_solution_dim(n: u32, p: &CasimirPolynomial, max_order: u32) -> usize {
    if n % 2 == 0 {
        return 0;
    }
    let r = p.lower.iter().take_while(|a| a.is_zero()).count();
    let len = expected_kernel_dim(n, max_order);
    let start = ((n as usize + 1) / 2).saturating_sub(r);
    len.saturating_sub(start)
}

/// `σ, □σ, □²σ, …` for the seed `σ = δ ⊗ v_n`.
///
/// For even `n` the iterates `0..=max_order` are returned. For odd `n` the
/// orbit is finite and every nonzero iterate is returned regardless of
/// `max_order`; the `(n+1)/2`-th iterate is checked to vanish.
pub fn casimir_orbit(n: u32, max_order: u32) -> Result<Vec<TransversalDist>> {
    let rep = make_irrep(n);
    let mut orbit = vec![transversal::delta_seed(n)];
    let target = if n % 2 == 0 {
        max_order as usize + 1
    } else {
        (n as usize + 1) / 2
    };
    while orbit.len() < target {
        let next = transversal::radial_casimir_in(&rep, orbit.last().unwrap());
        if next.is_zero() {
            return Err(Error::Contradiction(format!(
                "□^{} σ vanishes early for n={n}",
                orbit.len()
            )));
        }
        orbit.push(next);
    }
    if n % 2 == 1 {
        let next = transversal::radial_casimir_in(&rep, orbit.last().unwrap());
        if !next.is_zero() {
            return Err(Error::Contradiction(format!(
                "□^{} σ does not vanish for odd n={n}",
                orbit.len()
            )));
        }
    }
    if let Some(k) = orbit.iter().position(|psi| !transversal::is_invariant(psi)) {
        return Err(Error::Contradiction(format!("□^{k} σ is not invariant for n={n}")));
    }
    Ok(orbit)
}

/// `∏_{j=1..k} (n − 2j + 1)`, the `a_{n,k}` coefficient of `□^k σ`.
pub fn leading_coefficient(n: u32, k: u32) -> Rational {
    (1..=i64::from(k))
        .map(|j| rational::int(i64::from(n) - 2 * j + 1))
        .product()
}

/// Matrix expressing `σ, …, □^{max_order} σ` (columns) in the normalized
/// kernel basis (rows). It must be upper triangular with nonzero diagonal.
pub fn change_of_basis(n: u32, max_order: u32) -> Result<Vec<Vec<Rational>>> {
    if n % 2 == 1 && max_order > (n - 1) / 2 {
        return Err(Error::InvalidArgument(format!(
            "for odd n={n} the orbit has only {} elements; need max_order ≤ {}",
            (n + 1) / 2,
            (n - 1) / 2
        )));
    }
    let basis = kernel_basis(n, max_order)?;
    let orbit = casimir_orbit(n, max_order)?;
    let size = max_order as usize + 1;
    if basis.len() != size {
        return Err(Error::Contradiction(format!(
            "kernel dimension {} differs from {size} for n={n}",
            basis.len()
        )));
    }
    let mut m = vec![vec![Rational::zero(); size]; size];
    for (col, psi) in orbit.iter().take(size).enumerate() {
        let mut rebuilt = TransversalDist::zero(n);
        for (row, b) in basis.iter().enumerate() {
            let c = psi.coeff(n, row as u32);
            rebuilt = rebuilt.try_add(&b.scale(&c))?;
            m[row][col] = c;
        }
        if rebuilt != *psi {
            return Err(Error::Contradiction(format!(
                "□^{col} σ is not in the span of the kernel basis for n={n}"
            )));
        }
    }
    for (r, row) in m.iter().enumerate() {
        if row[r].is_zero() {
            return Err(Error::Contradiction(format!("singular diagonal at {r} for n={n}")));
        }
        if row[..r].iter().any(|a| !a.is_zero()) {
            return Err(Error::Contradiction(format!("not upper triangular at row {r} for n={n}")));
        }
    }
    Ok(m)
}

/// Exact basis of `{φ invariant : order(φ) ≤ max_order, p(□)φ = 0}`.
pub fn solve_polynomial(
    n: u32,
    p: &CasimirPolynomial,
    max_order: u32,
) -> Result<Vec<TransversalDist>> {
    let basis = kernel_basis(n, max_order)?;
    let images: Vec<TransversalDist> = basis.iter().map(|b| p.apply(b)).collect();

    let mut keys: Vec<(u32, u32)> = images.iter().flat_map(|d| d.terms().map(|(key, _)| key)).collect();
    keys.sort_unstable();
    keys.dedup();
    let rows: Vec<Vec<Rational>> = keys
        .iter()
        .map(|&(i, k)| images.iter().map(|d| d.coeff(i, k)).collect())
        .collect();
    let combos = linalg::nullspace(&rows, basis.len());

    let coords = Coords { n, max_order };
    let solutions = combos
        .iter()
        .map(|c| {
            let mut phi = TransversalDist::zero(n);
            for (cj, b) in c.iter().zip(&basis) {
                phi = phi.try_add(&b.scale(cj)).expect("same rep");
            }
            coords.to_vec(&phi)
        })
        .collect();
    normalize_by_readout(coords, solutions)
}
