use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Rational64};
use serde::Serialize;

use crate::bounds::{
    asymptotic_edge, big_f, binary_entropy, edge_bound, edge_bound_theorem_form, g_negativity_scan_edge,
    g_negativity_scan_vertex, s_hat, spectral_vertex_bound, vertex_bound, vertex_bound_half, x_hat, BoundQuery,
};
use crate::exact::{
    boundary_coefficient, boundary_coefficient_inclusion_exclusion, boundary_polynomial,
    coefficient_asymptotics_check, expected_edge_count, expected_vertex_count, matchings_count, CoefficientQuery,
};
use crate::pairing::{enumerate_pairings, monte_carlo_expectation, signature_histogram, Caps};
use crate::{Error, Result};

use super::{GoldenTable, TableId};

/// Groups of checks run by `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifySuite {
    Identities,
    Scans,
    Expectation,
    Coefficients,
    Asymptotics,
}

impl VerifySuite {
    pub const ALL: [VerifySuite; 5] = [
        VerifySuite::Identities,
        VerifySuite::Scans,
        VerifySuite::Expectation,
        VerifySuite::Coefficients,
        VerifySuite::Asymptotics,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            VerifySuite::Identities => "identities",
            VerifySuite::Scans => "scans",
            VerifySuite::Expectation => "expectation",
            VerifySuite::Coefficients => "coefficients",
            VerifySuite::Asymptotics => "asymptotics",
        }
    }
}

impl FromStr for VerifySuite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for VerifySuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Self { name: name.to_string(), passed, detail }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: VerifySuite,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

/// Runs one suite. Computation errors inside a check count as failures.
pub fn cmd_verify(suite: VerifySuite) -> SuiteReport {
    let checks: Vec<Result<CheckResult>> = match suite {
        VerifySuite::Identities => vec![mode_identities(), half_dual_route(), edge_dual_route()],
        VerifySuite::Scans => vec![vertex_scans(), edge_scans()],
        VerifySuite::Expectation => vec![enumeration_oracle(2, 3), enumeration_oracle(4, 3), monte_carlo_agreement()],
        VerifySuite::Coefficients => vec![row_sums(), coefficient_routes(), coefficient_ratio()],
        VerifySuite::Asymptotics => vec![vertex_half_asymptotics(), edge_asymptotics(), spectral_dominance()],
    };
    let checks: Vec<CheckResult> = checks
        .into_iter()
        .map(|c| c.unwrap_or_else(|e| CheckResult::new("error", false, e.to_string())))
        .collect();
    SuiteReport { suite, passed: checks.iter().all(|c| c.passed), checks }
}

const IDENTITY_TOL: f64 = 1e-12;
const DUAL_TOL: f64 = 1e-9;

fn mode_identities() -> Result<CheckResult> {
    let ds = [3u32, 4, 5, 6, 8, 10, 15, 25, 50, 100];
    let mut worst = 0.0f64;
    for d in ds {
        for k in 1..=10 {
            let u = 0.05 * f64::from(k);
            let q = BoundQuery::new(d, u)?;
            let m = q.mode();
            let expect_s = (1.0 - u) * (1.0 - (1.0 - u).powi(d as i32));
            worst = worst
                .max((x_hat(&q, m)? - u / (1.0 - u)).abs())
                .max((s_hat(&q, m)? - expect_s).abs())
                .max((big_f(&q, m)? - binary_entropy(u)).abs());
        }
    }
    Ok(CheckResult::new("mode identities", worst <= IDENTITY_TOL, format!("max deviation {worst:.3e} on 10x10 grid")))
}

fn half_dual_route() -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for d in 3..=20 {
        let a = vertex_bound(&BoundQuery::new(d, 0.5)?)?;
        worst = worst.max((a - vertex_bound_half(d, 1e-12)?).abs());
    }
    Ok(CheckResult::new("vertex bound at u=1/2, two routes", worst <= DUAL_TOL, format!("max |delta| {worst:.3e}, d=3..20")))
}

fn edge_dual_route() -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for (d, u, _) in GoldenTable::builtin(TableId::Edge)?.iter() {
        let a = edge_bound(&BoundQuery::new(d, u)?)?;
        worst = worst.max((a - edge_bound_theorem_form(d, u, 1e-12)?).abs());
    }
    Ok(CheckResult::new("edge bound, two routes", worst <= DUAL_TOL, format!("max |delta| {worst:.3e} on edge grid")))
}

const SCAN_DEGREES: [u32; 4] = [3, 4, 5, 10];
const SCAN_GRID: usize = 256;

fn vertex_scans() -> Result<CheckResult> {
    let mut detail = Vec::new();
    let mut ok = true;
    for d in SCAN_DEGREES {
        let r = g_negativity_scan_vertex(d, SCAN_GRID)?;
        ok &= r.passed;
        detail.push(format!("d={d}: max {:.3e}", r.max_value));
    }
    Ok(CheckResult::new("vertex negativity scan", ok, detail.join("; ")))
}

fn edge_scans() -> Result<CheckResult> {
    let mut detail = Vec::new();
    let mut ok = true;
    for d in SCAN_DEGREES {
        for u in [0.25, 0.5] {
            let r = g_negativity_scan_edge(d, u, SCAN_GRID)?;
            ok &= r.passed;
            detail.push(format!("d={d} u={u}: max {:.3e}", r.max_value));
        }
    }
    Ok(CheckResult::new("edge negativity scan", ok, detail.join("; ")))
}

/// Per-signature totals of subset counts over every pairing.
fn enumerated_totals(n: usize, d: usize) -> Result<(BTreeMap<(usize, usize, usize), u64>, u64)> {
    let mut totals = BTreeMap::new();
    let mut pairings = 0u64;
    for p in enumerate_pairings(n, d, &Caps::default())? {
        pairings += 1;
        for un in 1..=n {
            for ((sn, yn), c) in signature_histogram(&p, un, &Caps::default())? {
                *totals.entry((un, sn, yn)).or_insert(0) += c;
            }
        }
    }
    Ok((totals, pairings))
}

/// Averages over all pairings equal the closed forms for every signature.
pub(crate) fn enumeration_oracle(n: usize, d: usize) -> Result<CheckResult> {
    let (totals, pairings) = enumerated_totals(n, d)?;
    let denom = BigInt::from(pairings);
    let mean = |count: u64| BigRational::new(BigInt::from(count), denom.clone());
    let (n64, d32) = (n as u64, d as u32);
    let mut checked = 0usize;
    let mut mismatches = Vec::new();
    for un in 1..=n {
        let dun = d * un;
        for yn in (0..=dun).filter(|yn| (dun + yn) % 2 == 0) {
            let mut edge_total = 0u64;
            for sn in 0..=n - un {
                let count = totals.get(&(un, sn, yn)).copied().unwrap_or(0);
                edge_total += count;
                let exact = expected_vertex_count(n64, d32, un as u64, sn as u64, yn as u64)?;
                checked += 1;
                if exact.value() != &mean(count) {
                    mismatches.push(format!("vertex ({un},{sn},{yn})"));
                }
            }
            let exact = expected_edge_count(n64, d32, un as u64, yn as u64)?;
            checked += 1;
            if exact.value() != &mean(edge_total) {
                mismatches.push(format!("edge ({un},{yn})"));
            }
        }
    }
    let want = matchings_count((n * d) as u64)?;
    let complete = BigUint::from(pairings) == want;
    let detail = format!(
        "n={n} d={d}: {pairings} pairings, {checked} signatures, mismatches: {}",
        if mismatches.is_empty() { "none".to_string() } else { mismatches.join(", ") }
    );
    Ok(CheckResult::new(&format!("enumeration oracle n={n}"), complete && mismatches.is_empty(), detail))
}

/// Signatures `(un, sn, yn)` at `n = 12, d = 3` for the Monte Carlo check;
/// `sn = None` is the edge-only count.
pub const MC_SIGNATURES: [(usize, Option<usize>, usize); 4] =
    [(6, Some(3), 4), (4, Some(4), 6), (5, Some(4), 7), (6, None, 6)];
pub const MC_SAMPLES: u64 = 100_000;

/// `|mean - exact| <= 4·std_error`, with exact equality required when the
/// standard error vanishes.
pub fn within_four_sigma(mean: f64, std_error: f64, exact: f64) -> bool {
    if std_error == 0.0 {
        mean == exact
    } else {
        (mean - exact).abs() <= 4.0 * std_error
    }
}

fn monte_carlo_agreement() -> Result<CheckResult> {
    let (n, d) = (12usize, 3usize);
    let mut ok = true;
    let mut detail = Vec::new();
    for (i, &(un, sn, yn)) in MC_SIGNATURES.iter().enumerate() {
        let est = monte_carlo_expectation(n, d, un, sn, yn, MC_SAMPLES, 1000 + i as u64, &Caps::default())?;
        let exact = match sn {
            Some(sn) => expected_vertex_count(12, 3, un as u64, sn as u64, yn as u64)?,
            None => expected_edge_count(12, 3, un as u64, yn as u64)?,
        }
        .to_f64();
        let pass = within_four_sigma(est.mean, est.std_error, exact);
        ok &= pass;
        detail.push(format!("({un},{sn:?},{yn}): {:.4} ± {:.4} vs {exact:.4}", est.mean, est.std_error));
    }
    // An impossible signature: 3·6 - 5 is odd.
    let zero = monte_carlo_expectation(n, d, 6, None, 5, 1000, 7, &Caps::default())?;
    ok &= zero.mean == 0.0;
    detail.push(format!("(6,None,5): {}", zero.mean));
    Ok(CheckResult::new("monte carlo n=12", ok, detail.join("; ")))
}

fn row_sums() -> Result<CheckResult> {
    let mut ok = true;
    for d in 1..=6u32 {
        for sn in 0..=30u64 {
            let total: BigUint = boundary_polynomial(d, sn).iter().sum();
            ok &= total == num_traits::pow(BigUint::from((1u64 << d) - 1), sn as usize);
        }
    }
    Ok(CheckResult::new("coefficient row sums", ok, "d<=6, sn<=30".into()))
}

fn coefficient_routes() -> Result<CheckResult> {
    let mut ok = true;
    for d in 1..=6u32 {
        for sn in 0..=12u64 {
            for yn in 0..=u64::from(d) * sn {
                let q = CoefficientQuery::new(d, sn, yn);
                ok &= boundary_coefficient(&q) == boundary_coefficient_inclusion_exclusion(&q);
            }
        }
    }
    Ok(CheckResult::new("convolution vs inclusion-exclusion", ok, "d<=6, sn<=12".into()))
}

fn coefficient_ratio() -> Result<CheckResult> {
    let ns = [10, 50, 100, 200];
    let pts = coefficient_asymptotics_check(3, Rational64::new(1, 10), Rational64::new(1, 5), &ns)?;
    let increasing = pts.windows(2).all(|w| w[1].value > w[0].value);
    let last = pts.last().map_or(0.0, |p| p.value);
    let bounded = pts.iter().all(|p| p.value <= 1.0);
    let values: Vec<String> = pts.iter().map(|p| format!("r({})={:.5}", p.n, p.value)).collect();
    Ok(CheckResult::new(
        "coefficient ratio d=3 s=1/10 y=1/5",
        increasing && bounded && last >= 0.9,
        values.join(", "),
    ))
}

fn vertex_half_asymptotics() -> Result<CheckResult> {
    let mut ok = true;
    let mut prev = f64::INFINITY;
    let mut detail = Vec::new();
    for d in [25u32, 50, 100] {
        let df = f64::from(d);
        let scaled = df * (1.0 - vertex_bound_half(d, 1e-12)?);
        ok &= scaled >= 2.0 && scaled <= 2.0 + 10.0 * df.ln() / df && scaled < prev;
        prev = scaled;
        detail.push(format!("d={d}: {scaled:.5}"));
    }
    Ok(CheckResult::new("d(1 - A_d(1/2)) in [2, 2 + 10 ln d/d], decreasing", ok, detail.join(", ")))
}

fn edge_asymptotics() -> Result<CheckResult> {
    let a = edge_bound(&BoundQuery::new(100, 0.5)?)?;
    let target = asymptotic_edge(100, 0.5)?;
    let gap = (a - target).abs();
    Ok(CheckResult::new("edge bound d=100 u=1/2 vs d/2 - sqrt(d ln 2)", gap <= 0.1, format!("{a:.5} vs {target:.5}, gap {gap:.4}")))
}

fn spectral_dominance() -> Result<CheckResult> {
    let mut ok = true;
    let mut detail = Vec::new();
    for d in [5u32, 10, 25, 50, 100] {
        let a = vertex_bound_half(d, 1e-12)?;
        let s = spectral_vertex_bound(d, 0.5)?;
        ok &= a > s;
        detail.push(format!("d={d}: {a:.5} > {s:.5}"));
    }
    Ok(CheckResult::new("first-moment bound beats spectral bound", ok, detail.join(", ")))
}
