use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use nilcone::character::{expected_invariant_dim, invariant_dims};
use nilcone::oracle::{
    default_radius, invariance_residual, invariance_residual_with, odd_section_obstruction,
    odd_section_obstruction_with, scalar_consistency, InvarianceVariant, QuadratureGrid,
    SectionVariant, TestFunction, CONSISTENCY_TOLERANCE, INVARIANCE_TOLERANCE,
    NEGATIVE_CONTROL_FLOOR, OBSTRUCTION_TOLERANCE,
};
use nilcone::rational::to_text;
use nilcone::sl2::{casimir_scalar, expected_casimir, make_irrep, Generator};
use nilcone::solver::{
    casimir_orbit, change_of_basis, classify_global_to, classify_square_finite_supported,
    expected_kernel_dim, expected_solution_dim, kernel_basis, leading_coefficient,
    solve_polynomial,
};
use nilcone::transversal::is_invariant;
use nilcone::{CasimirPolynomial, EndMatrix, GlobalQuery, Rational, TransversalDist};

use crate::CliError;

pub struct Report {
    pub command: &'static str,
    pub body: Map<String, Value>,
    pub table: String,
    pub pass: bool,
    pub detail: String,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Self { command, body: Map::new(), table: String::new(), pass: true, detail: String::new() }
    }

    fn set(&mut self, key: &str, value: Value) {
        self.body.insert(key.to_string(), value);
    }

    fn line(&mut self, text: impl AsRef<str>) {
        self.table.push_str(text.as_ref());
        self.table.push('\n');
    }

    fn verdict(&mut self, pass: bool, detail: String) {
        self.pass = pass;
        self.detail = detail;
    }

    pub fn verdict_line(&self) -> String {
        format!("{}: {}", if self.pass { "PASS" } else { "FAIL" }, self.detail)
    }

    pub fn to_json(&self) -> Value {
        let mut body = self.body.clone();
        body.insert("command".into(), json!(self.command));
        body.insert("verdict".into(), json!(if self.pass { "PASS" } else { "FAIL" }));
        body.insert("verdict_detail".into(), json!(self.detail));
        Value::Object(body)
    }
}

fn matrix_text(m: &EndMatrix) -> Vec<Vec<String>> {
    rational_rows(&m.rows())
}

fn display_rows(m: &[Vec<Rational>]) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

fn grid_lines(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "  [ {} ]", cells.join("  "));
    }
    out
}

fn dist_json(psi: &TransversalDist) -> Value {
    serde_json::to_value(psi).expect("records serialize")
}

fn rational_rows(m: &[Vec<Rational>]) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(to_text).collect()).collect()
}

pub fn irrep(n: u32) -> Result<Report, CliError> {
    let mut r = Report::new("irrep");
    let rep = make_irrep(n);
    r.set("n", json!(n));
    r.line(format!("irreducible representation V_{n}, dimension {}", n + 1));
    for z in Generator::ALL {
        r.line(format!("rho({})", z.label()));
        r.table.push_str(&grid_lines(&display_rows(&rep.rho(z).rows())));
        r.set(&format!("rho_{}", z.label().to_lowercase()), json!(matrix_text(rep.rho(z))));
    }
    let mut relations = Map::new();
    let mut all_hold = true;
    for (name, residual) in rep.relation_residuals() {
        let holds = residual.is_zero();
        all_hold &= holds;
        relations.insert(name.into(), json!(holds));
        r.line(format!("{name}: {}", if holds { "holds" } else { "violated" }));
    }
    r.set("relations", Value::Object(relations));
    let casimir = casimir_scalar(&rep)?;
    let expected = expected_casimir(n);
    r.set("casimir", json!(to_text(&casimir)));
    r.set("expected_casimir", json!(to_text(&expected)));
    r.line(format!("casimir scalar {casimir}"));
    r.verdict(
        all_hold && casimir == expected,
        format!("relations hold: {all_hold}, casimir {casimir} (expected n^2/2 + n = {expected})"),
    );
    Ok(r)
}

pub fn kernel(n: u32, max_order: u32) -> Result<Report, CliError> {
    let mut r = Report::new("kernel");
    let basis = kernel_basis(n, max_order)?;
    let expected = expected_kernel_dim(n, max_order);
    r.set("n", json!(n));
    r.set("max_order", json!(max_order));
    r.set("dimension", json!(basis.len()));
    r.set("expected_dimension", json!(expected));
    r.set("basis", json!(basis.iter().map(dist_json).collect::<Vec<_>>()));
    r.line(format!("invariant transversal distributions, n={n}, δ-order ≤ {max_order}"));
    for (j, psi) in basis.iter().enumerate() {
        r.line(format!("  e{j} = {psi}"));
    }
    r.line(format!("dimension {}", basis.len()));
    r.verdict(
        basis.len() == expected && basis.iter().all(is_invariant),
        format!("dimension {} (expected {expected})", basis.len()),
    );
    Ok(r)
}

pub fn orbit(n: u32, max_order: u32) -> Result<Report, CliError> {
    let mut r = Report::new("orbit");
    let orbit = casimir_orbit(n, max_order)?;
    let size = if n % 2 == 0 { max_order } else { max_order.min((n - 1) / 2) };
    let change = change_of_basis(n, size)?;
    r.set("n", json!(n));
    r.set("max_order", json!(max_order));
    r.set("orbit", json!(orbit.iter().map(dist_json).collect::<Vec<_>>()));
    r.set("change_of_basis", json!(rational_rows(&change)));
    r.line(format!("Casimir orbit of δ ⊗ v_{n}"));
    for (k, psi) in orbit.iter().enumerate() {
        r.line(format!("  □^{k} σ = {psi}"));
    }
    if n % 2 == 1 {
        r.line(format!("  □^{} σ = 0", orbit.len()));
    }
    r.line("change of basis to the normalized kernel basis");
    r.table.push_str(&grid_lines(&display_rows(&change)));
    let mismatches: Vec<usize> = (0..change.len())
        .filter(|&k| change[k][k] != leading_coefficient(n, k as u32))
        .collect();
    r.verdict(
        mismatches.is_empty(),
        if mismatches.is_empty() {
            format!("upper triangular, diagonal ∏(n-2j+1) for k ≤ {size}")
        } else {
            format!("diagonal differs at {mismatches:?}")
        },
    );
    Ok(r)
}

pub fn solve(n: u32, p: &CasimirPolynomial, max_order: u32) -> Result<Report, CliError> {
    let mut r = Report::new("solve");
    let sols = solve_polynomial(n, p, max_order)?;
    let expected = expected_solution_dim(n, p, max_order);
    let verified = sols.iter().all(|s| is_invariant(s) && p.apply(s).is_zero());
    r.set("n", json!(n));
    r.set("max_order", json!(max_order));
    r.set("polynomial", json!(p.to_string()));
    r.set("dimension", json!(sols.len()));
    r.set("expected_dimension", json!(expected));
    r.set("solutions", json!(sols.iter().map(dist_json).collect::<Vec<_>>()));
    r.line(format!("invariant solutions of p(□)φ = 0, p = {p}, n={n}, δ-order ≤ {max_order}"));
    if sols.is_empty() {
        r.line("  only zero");
    }
    for (j, s) in sols.iter().enumerate() {
        r.line(format!("  s{j} = {s}"));
    }
    r.verdict(
        sols.len() == expected && verified,
        format!("dimension {} (expected {expected})", sols.len()),
    );
    Ok(r)
}

pub fn supp0_dims(n: u32, max_degree: u32) -> Result<Report, CliError> {
    let mut r = Report::new("supp0-dims");
    let dims = invariant_dims(n, max_degree);
    let expected: Vec<u64> = (0..=max_degree).map(|m| expected_invariant_dim(n, m)).collect();
    r.set("n", json!(n));
    r.set("max_degree", json!(max_degree));
    r.set("dims", json!(dims));
    r.line(format!("multiplicity of V_{n} in S^m(g)"));
    for (m, d) in dims.iter().enumerate() {
        r.line(format!("  m={m:>3}  {d}"));
    }
    r.verdict(dims == expected, "matches S^m(g) = ⊕ V_{2m-4j}".into());
    Ok(r)
}

pub struct ClassifyArgs {
    pub query: GlobalQuery,
    pub max_degree: u32,
    pub poly: Option<CasimirPolynomial>,
    pub max_order: u32,
}

pub fn classify(args: &ClassifyArgs) -> Result<Report, CliError> {
    let mut r = Report::new("classify");
    let q = &args.query;
    let answer = classify_global_to(q, args.max_degree);
    r.set("answer", serde_json::to_value(&answer).expect("answer serializes"));
    r.line(format!(
        "n={}  origin={}  N+={}  N-={}",
        q.n, q.contains_origin, q.contains_n_plus, q.contains_n_minus
    ));
    if !answer.realizable {
        r.line("  note: an invariant open set containing 0 contains both half-cones");
    }
    for line in &answer.statement {
        r.line(format!("  {} {}", line.case, line.text));
    }
    r.line(format!("  origin-supported graded dims: {:?}", answer.dim_supp0_graded));
    r.line(format!(
        "  half-cone generators: N+ {:?}, N- {:?}",
        answer.half_cone_plus_generators, answer.half_cone_minus_generators
    ));
    let expected: Vec<u64> = (0..=args.max_degree)
        .map(|m| if q.contains_origin { expected_invariant_dim(q.n, m) } else { 0 })
        .collect();
    let mut pass = answer.dim_supp0_graded == expected;
    let mut detail = "graded dims match".to_string();
    if let Some(p) = &args.poly {
        let only_zero = classify_square_finite_supported(q, p, args.max_order)?;
        r.set(
            "square_finite_supported",
            json!({ "p": p.to_string(), "max_order": args.max_order, "only_zero": only_zero }),
        );
        r.line(format!(
            "  cone-supported invariants with p(□)φ = 0, p = {p}: {}",
            if only_zero { "only zero" } else { "nonzero solutions" }
        ));
        pass &= only_zero;
        detail.push_str(&format!("; p(□)-finite cone-supported invariants only zero: {only_zero}"));
    }
    r.verdict(pass, detail);
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckKind {
    Invariance,
    Obstruction,
    Pairing,
}

pub fn numcheck(n: u32, kind: CheckKind, points: usize, sigma: Option<f64>) -> Result<Report, CliError> {
    let mut r = Report::new("numcheck");
    let sigma = sigma.unwrap_or(match kind {
        CheckKind::Pairing => 0.2,
        _ => 1.0,
    });
    let radius = default_radius(sigma);
    let grid = QuadratureGrid::gauss_legendre(radius, points)?;
    let f = TestFunction::gaussian([0.0, 1.0, 0.0], sigma)?;
    r.set("n", json!(n));
    r.set("grid_points", json!(points));
    r.set("radius", json!(radius));
    r.set("sigma", json!(sigma));
    r.line(format!(
        "Gauss-Legendre {points}x{points} on [-{radius}, {radius}]^2, gaussian at X, sigma {sigma}"
    ));
    match kind {
        CheckKind::Invariance => {
            r.set("kind", json!("invariance"));
            let mut rows = Map::new();
            let mut worst: f64 = 0.0;
            for z in Generator::ALL {
                let res = invariance_residual(n, z, &f, &grid)?;
                worst = worst.max(res.relative);
                r.line(format!(
                    "  Z={}  relative residual {:.3e}  tail bound {:.1e}",
                    z.label(),
                    res.relative,
                    res.tail_bound
                ));
                rows.insert(z.label().into(), serde_json::to_value(res).expect("serializes"));
            }
            let control = invariance_residual_with(n, Generator::H, &f, &grid, InvarianceVariant::BrokenLhSign)?;
            r.line(format!("  negative control (wrong L_H sign) {:.3e}", control.relative));
            r.set("residuals", Value::Object(rows));
            r.set("negative_control", serde_json::to_value(control).expect("serializes"));
            r.verdict(
                worst < INVARIANCE_TOLERANCE,
                format!("worst relative residual {worst:.3e} (tolerance {INVARIANCE_TOLERANCE:e})"),
            );
        }
        CheckKind::Obstruction => {
            r.set("kind", json!("obstruction"));
            let res = odd_section_obstruction(n, &f, &grid)?;
            let control =
                odd_section_obstruction_with(n, &f, &grid, SectionVariant::AbsoluteFirstCoordinate)?;
            r.line(format!("  section integral relative size {:.3e}", res.relative));
            r.line(format!("  negative control (even section) {:.3e}", control.relative));
            r.set("residual", serde_json::to_value(res).expect("serializes"));
            r.set("negative_control", serde_json::to_value(control).expect("serializes"));
            r.verdict(
                res.relative < OBSTRUCTION_TOLERANCE && control.relative > NEGATIVE_CONTROL_FLOOR,
                format!(
                    "obstruction {:.3e} (tolerance {OBSTRUCTION_TOLERANCE:e}), control {:.3e}",
                    res.relative, control.relative
                ),
            );
        }
        CheckKind::Pairing => {
            if n != 0 {
                return Err(CliError::Usage("--kind pairing needs --n 0".into()));
            }
            r.set("kind", json!("pairing"));
            let c = scalar_consistency(&f, &grid, 2.0 + 10.0 * sigma, 200)?;
            r.line(format!("  measured  <δ, □F>/<δ, F> = {:.10}", c.measured_ratio));
            r.line(format!("  predicted from □_X δ     = {:.10}", c.predicted_ratio));
            r.line(format!("  measure / transversal delta = {:.10}", c.normalization));
            r.set("consistency", serde_json::to_value(c).expect("serializes"));
            r.verdict(
                c.relative_gap < CONSISTENCY_TOLERANCE,
                format!("relative gap {:.3e} (tolerance {CONSISTENCY_TOLERANCE:e})", c.relative_gap),
            );
        }
    }
    Ok(r)
}
