//! Exact elimination over ℚ.
//!
//! Rows are cleared to primitive integer vectors and eliminated by
//! cross-multiplication, so no fractions appear until the final pivot
//! normalization. Pivots are chosen column by column, lowest column first and
//! topmost eligible row first, which makes the echelon form (and every basis
//! derived from it) reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Reduced row echelon form of a `rows × ncols` matrix. Returns the nonzero
/// rows of the RREF together with their pivot columns.
pub fn rref(rows: &[Vec<Rational>], ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            primitive(clear_denominators(r))
        })
        .filter(|r| r.iter().any(|a| !a.is_zero()))
        .collect();

    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == m.len() {
            break;
        }
        let Some(p) = (top..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(top, p);
        let pivot_row = m[top].clone();
        let pv = pivot_row[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (a, b) in row.iter_mut().zip(&pivot_row) {
                *a = &pv * &*a - &f * b;
            }
            *row = primitive(std::mem::take(row));
        }
        pivots.push(col);
        top += 1;
    }
    m.truncate(top);

    let reduced = m
        .into_iter()
        .zip(&pivots)
        .map(|(row, &c)| {
            let pv = row[c].clone();
            row.into_iter()
                .map(|a| Rational::new(a, pv.clone()))
                .collect()
        })
        .collect();
    (reduced, pivots)
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : A x = 0}`, one vector per free column, with a `1` in that
/// free column and `0` in the other free columns.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (row, &p) in r.iter().zip(&pivots) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
    row.iter()
        .map(|a| a.numer() * (&l / a.denom()))
        .collect()
}

/// Divide out the content; the first nonzero entry is made positive.
fn primitive(mut row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
    if g.is_zero() {
        return row;
    }
    let flip = row.iter().find(|a| !a.is_zero()).is_some_and(|a| a.is_negative());
    let g = if flip { -g } else { g };
    for a in &mut row {
        *a = &*a / &g;
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&a| int(a)).collect()).collect()
    }

    fn apply(a: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
        a.iter()
            .map(|r| r.iter().zip(x).map(|(p, q)| p * q).sum())
            .collect()
    }

    #[test]
    fn rref_of_small_matrix() {
        let a = mat(&[&[2, 4, 6], &[1, 3, 5]]);
        let (r, piv) = rref(&a, 3);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(r[0], vec![int(1), int(0), int(-1)]);
        assert_eq!(r[1], vec![int(0), int(1), int(2)]);
    }

    #[test]
    fn nullspace_with_fractions() {
        let a = vec![vec![frac(1, 2), frac(1, 3), int(0), int(1)], vec![int(0), int(0), int(1), frac(-2, 7)]];
        let ns = nullspace(&a, 4);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            assert!(apply(&a, x).iter().all(Zero::is_zero));
        }
        assert_eq!(rank(&a, 4), 2);
    }

    #[test]
    fn zero_and_empty_inputs() {
        assert_eq!(nullspace(&[], 3).len(), 3);
        assert_eq!(nullspace(&mat(&[&[0, 0]]), 2).len(), 2);
        assert!(nullspace(&mat(&[&[1, 0], &[0, 1]]), 2).is_empty());
    }
}
