//! Tensor-product quadrature on `[−R, R]²` with a fixed, symmetric node order.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Midpoint,
    GaussLegendre,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureGrid {
    pub radius: f64,
    pub points: usize,
    pub rule: Rule,
}

/// One node of the 2-D grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub a: f64,
    pub b: f64,
    pub weight: f64,
}

impl QuadratureGrid {
    pub fn new(radius: f64, points: usize, rule: Rule) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidArgument(format!("grid radius must be positive, got {radius}")));
        }
        if points == 0 {
            return Err(Error::InvalidArgument("grid needs at least one point per axis".into()));
        }
        Ok(Self { radius, points, rule })
    }

    pub fn gauss_legendre(radius: f64, points: usize) -> Result<Self> {
        Self::new(radius, points, Rule::GaussLegendre)
    }

    /// 1-D nodes and weights on `[−R, R]`, ascending, exactly symmetric
    /// (`x_{m−1−i} = −x_i` bit for bit).
    pub fn nodes_1d(&self) -> Vec<(f64, f64)> {
        let m = self.points;
        let half: Vec<(f64, f64)> = match self.rule {
            Rule::Midpoint => {
                let h = 2.0 * self.radius / m as f64;
                (0..m / 2)
                    .map(|i| (-self.radius + (i as f64 + 0.5) * h, h))
                    .collect()
            }
            Rule::GaussLegendre => gauss_legendre_negative_half(m)
                .into_iter()
                .map(|(x, w)| (x * self.radius, w * self.radius))
                .collect(),
        };
        let mut out = half.clone();
        if m % 2 == 1 {
            let w = match self.rule {
                Rule::Midpoint => 2.0 * self.radius / m as f64,
                Rule::GaussLegendre => gauss_legendre_center_weight(m) * self.radius,
            };
            out.push((0.0, w));
        }
        out.extend(half.iter().rev().map(|&(x, w)| (-x, w)));
        out
    }

    /// 2-D nodes ordered so that every node is immediately followed by its
    /// antipode `(−a, −b)`. The centre node, present when `m` is odd, comes
    /// last on its own.
    pub fn nodes(&self) -> Vec<Node> {
        let one = self.nodes_1d();
        let m = self.points;
        let total = m * m;
        let mut out = Vec::with_capacity(total);
        let node = |idx: usize| {
            let (a, wa) = one[idx / m];
            let (b, wb) = one[idx % m];
            Node { a, b, weight: wa * wb }
        };
        for idx in 0..total {
            let anti = total - 1 - idx;
            if idx < anti {
                out.push(node(idx));
                out.push(node(anti));
            }
        }
        if total % 2 == 1 {
            out.push(node(total / 2));
        }
        out
    }

    /// `∬ f(a, b) da db` for vector-valued `f` of length `dim`, reduced with
    /// the deterministic pairwise tree of [`pairwise_sum`].
    pub fn integrate(&self, dim: usize, mut f: impl FnMut(f64, f64) -> Vec<f64>) -> Vec<f64> {
        let nodes = self.nodes();
        let mut columns = vec![Vec::with_capacity(nodes.len()); dim];
        for nd in &nodes {
            let v = f(nd.a, nd.b);
            debug_assert_eq!(v.len(), dim);
            for (col, x) in columns.iter_mut().zip(v) {
                col.push(nd.weight * x);
            }
        }
        columns.iter().map(|c| pairwise_sum(c)).collect()
    }
}

/// Bottom-up pairwise summation: adjacent elements are added first, then
/// adjacent partial sums, and so on. An odd element at the end of a level is
/// carried up unchanged.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    let mut level: Vec<f64> = xs.to_vec();
    while level.len() > 1 {
        level = level
            .chunks(2)
            .map(|c| if c.len() == 2 { c[0] + c[1] } else { c[0] })
            .collect();
    }
    level[0]
}

fn legendre_with_derivative(m: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if m == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=m {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = m as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Negative Gauss–Legendre nodes on `[−1, 1]` (ascending) with weights, found
/// by Newton iteration from the Tricomi initial guesses.
fn gauss_legendre_negative_half(m: usize) -> Vec<(f64, f64)> {
    let mf = m as f64;
    let mut out: Vec<(f64, f64)> = (0..m / 2)
        .map(|i| {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (mf + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(m, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(m, x);
            (-x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect();
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

fn gauss_legendre_center_weight(m: usize) -> f64 {
    let (_, dp) = legendre_with_derivative(m, 0.0);
    2.0 / (dp * dp)
}
