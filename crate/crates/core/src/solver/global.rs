//! Decision tables over `SL(2,ℝ)`-invariant open sets.
//!
//! An invariant open `U` enters only through which nilpotent orbits it
//! contains: the origin, `N⁺` and `N⁻`. Any invariant open containing the
//! origin contains a neighborhood of it and therefore both half-cones; the
//! other flag combinations with `contains_origin` set are reported as not
//! realizable but still tabulated.

use serde::Serialize;

use super::{solve_polynomial, CasimirPolynomial};
use crate::character::invariant_dims;
use crate::error::Result;

pub const DEFAULT_MAX_DEGREE: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GlobalQuery {
    pub n: u32,
    pub contains_origin: bool,
    pub contains_n_plus: bool,
    pub contains_n_minus: bool,
}

impl GlobalQuery {
    pub fn new(n: u32, origin: bool, n_plus: bool, n_minus: bool) -> Self {
        Self {
            n,
            contains_origin: origin,
            contains_n_plus: n_plus,
            contains_n_minus: n_minus,
        }
    }

    pub fn realizable(&self) -> bool {
        !self.contains_origin || (self.contains_n_plus && self.contains_n_minus)
    }

    /// The eight flag combinations for `n`, origin flag varying slowest.
    pub fn all_flags(n: u32) -> Vec<GlobalQuery> {
        let mut out = Vec::with_capacity(8);
        for origin in [false, true] {
            for plus in [false, true] {
                for minus in [false, true] {
                    out.push(Self::new(n, origin, plus, minus));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorCount {
    Zero,
    CountablyInfinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseLine {
    pub case: &'static str,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlobalAnswer {
    pub query: GlobalQuery,
    pub realizable: bool,
    pub max_degree: u32,
    /// `dim` of the degree-`m` piece of the origin-supported part, `m = 0..=max_degree`.
    pub dim_supp0_graded: Vec<u64>,
    pub half_cone_plus_generators: GeneratorCount,
    pub half_cone_minus_generators: GeneratorCount,
    pub statement: Vec<CaseLine>,
}

pub fn classify_global(q: &GlobalQuery) -> GlobalAnswer {
    classify_global_to(q, DEFAULT_MAX_DEGREE)
}

pub fn classify_global_to(q: &GlobalQuery, max_degree: u32) -> GlobalAnswer {
    let n = q.n;
    let even = n % 2 == 0;

    let dim_supp0_graded = if q.contains_origin {
        invariant_dims(n, max_degree)
    } else {
        vec![0; max_degree as usize + 1]
    };
    let cone = |inside: bool| {
        if even && inside {
            GeneratorCount::CountablyInfinite
        } else {
            GeneratorCount::Zero
        }
    };

    let mut statement = Vec::new();
    statement.push(CaseLine {
        case: "(i)",
        text: if q.contains_origin {
            let tail = if dim_supp0_graded.iter().all(|&d| d == 0) {
                format!(" = {{0}} (V_{n} does not occur in S(g))")
            } else {
                String::new()
            };
            format!("S_{n}^0(U) ≅ (V_{n} ⊗ S(g))^g{tail}")
        } else {
            format!("S_{n}^0(U) = {{0}} since 0 ∉ U")
        },
    });
    if even {
        let mut parts = vec![format!("S_{n}^0(U)")];
        for (inside, sign) in [(q.contains_n_plus, '+'), (q.contains_n_minus, '-')] {
            if inside {
                parts.push(format!("span{{□^k(s_{n} δ_N{sign})|_U : k ∈ ℕ}}"));
            }
        }
        let mut text = format!("S_{n}(U) = {}", parts.join(" ⊕ "));
        for (inside, sign) in [(q.contains_n_plus, '+'), (q.contains_n_minus, '-')] {
            if inside {
                text.push_str(&format!(
                    "; S_{n}^{sign}(U) = S_{n}^0(U) ⊕ span{{□^k(s_{n} δ_N{sign})|_U : k ∈ ℕ}}"
                ));
            } else {
                text.push_str(&format!("; S_{n}^{sign}(U) = S_{n}^0(U)"));
            }
        }
        statement.push(CaseLine { case: "(ii)", text });
    } else {
        statement.push(CaseLine {
            case: "(iii)",
            text: format!("S_{n}(U) = S_{n}^+(U) = S_{n}^-(U) = S_{n}^0(U)"),
        });
    }

    GlobalAnswer {
        query: *q,
        realizable: q.realizable(),
        max_degree,
        dim_supp0_graded,
        half_cone_plus_generators: cone(q.contains_n_plus),
        half_cone_minus_generators: cone(q.contains_n_minus),
        statement,
    }
}

/// Whether every invariant distribution on `U`, supported on the cone and
/// annihilated by `p(□)`, is zero.
///
/// Combines three facts. The origin-supported part is a graded module on
/// which `□` raises degree by 2 injectively, so the top-degree term of
/// `p(□)φ` is `□^r φ_top ≠ 0`; the graded dimensions are checked to be
/// compatible with that (`d_m ≤ d_{m+2}`). For even `n` the local solutions
/// near each half-cone are computed and must be empty. For odd `n` local
/// solutions can exist, but no global invariant section of the moment map
/// exists, so the half-cones contribute nothing.
pub fn classify_square_finite_supported(
    q: &GlobalQuery,
    p: &CasimirPolynomial,
    max_order: u32,
) -> Result<bool> {
    let n = q.n;
    let supp0_ok = if q.contains_origin {
        let d = invariant_dims(n, DEFAULT_MAX_DEGREE);
        d.windows(3).all(|w| w[0] <= w[2])
    } else {
        true
    };
    let touches_cone = q.contains_n_plus || q.contains_n_minus;
    let cone_ok = if touches_cone && n % 2 == 0 {
        solve_polynomial(n, p, max_order)?.is_empty()
    } else {
        true
    };
    Ok(supp0_ok && cone_ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn odd_without_origin_is_empty() {
        let a = classify_global(&GlobalQuery::new(3, false, true, false));
        assert!(a.dim_supp0_graded.iter().all(|&d| d == 0));
        assert_eq!(a.half_cone_plus_generators, GeneratorCount::Zero);
        assert_eq!(a.half_cone_minus_generators, GeneratorCount::Zero);
        assert_eq!(a.statement[1].case, "(iii)");
    }

    #[test]
    fn adjoint_full_space() {
        let a = classify_global(&GlobalQuery::new(2, true, true, true));
        assert!(a.realizable);
        assert_eq!(a.dim_supp0_graded[..4], [0, 1, 0, 1]);
        assert_eq!(a.half_cone_plus_generators, GeneratorCount::CountablyInfinite);
        assert_eq!(a.half_cone_minus_generators, GeneratorCount::CountablyInfinite);
        assert_eq!(a.statement[1].case, "(ii)");
    }

    #[test]
    fn trivial_rep_matches_casimir_series() {
        let a = classify_global_to(&GlobalQuery::new(0, true, true, true), 10);
        let expected: Vec<u64> = (0..=10).map(|m| u64::from(m % 2 == 0)).collect();
        assert_eq!(a.dim_supp0_graded, expected);
    }

    #[test]
    fn realizability() {
        assert!(!GlobalQuery::new(0, true, false, true).realizable());
        assert!(GlobalQuery::new(0, false, false, true).realizable());
        assert_eq!(GlobalQuery::all_flags(4).len(), 8);
    }

    #[test]
    fn square_finite_is_always_zero() {
        let t2 = CasimirPolynomial::power(2).unwrap();
        let p = CasimirPolynomial::monic(vec![int(2), int(-1)]).unwrap();
        for q in GlobalQuery::all_flags(2).iter().chain(&GlobalQuery::all_flags(3)) {
            assert!(classify_square_finite_supported(q, &t2, 6).unwrap());
            assert!(classify_square_finite_supported(q, &p, 6).unwrap());
        }
        let q0 = GlobalQuery::new(0, true, true, true);
        assert!(classify_square_finite_supported(&q0, &t2, 6).unwrap());
    }
}
