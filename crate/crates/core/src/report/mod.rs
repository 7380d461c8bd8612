//! Tabulation, golden-table comparison, verification suites and simulation
//! reports behind the `isoperimetric` binary.

mod simulate;
mod verify;

pub use simulate::{cmd_simulate, SimulationReport, SimulationRow};
pub use verify::{cmd_verify, CheckResult, SuiteReport, VerifySuite};

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    edge_bound_solution, vertex_bound_half_solution, vertex_bound_solution, BoundQuery, BoundSolution,
    ACCEPTED_RESIDUAL, DEFAULT_MAX_ITER,
};
use crate::{Error, Result};

const TABLE1: &str = include_str!("../../data/table1.csv");
const TABLE2: &str = include_str!("../../data/table2.csv");
const TABLE3: &str = include_str!("../../data/table3.csv");

/// Relative tolerance used when comparing against a reference table.
pub const COMPARE_TOL: f64 = 1e-4;

/// The three published tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableId {
    /// `A_d(u)` over a `(d, u)` grid.
    VertexExpansion,
    /// `A_d(1/2)` for many `d`.
    VertexHalf,
    /// `Â_d(u)` over a `(d, u)` grid.
    Edge,
}

impl TableId {
    pub fn name(&self) -> &'static str {
        match self {
            TableId::VertexExpansion => "vertex-expansion",
            TableId::VertexHalf => "vertex-half",
            TableId::Edge => "edge",
        }
    }

    fn golden_source(&self) -> &'static str {
        match self {
            TableId::VertexExpansion => TABLE1,
            TableId::VertexHalf => TABLE2,
            TableId::Edge => TABLE3,
        }
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" | "vertex-expansion" => Ok(TableId::VertexExpansion),
            "2" | "vertex-half" => Ok(TableId::VertexHalf),
            "3" | "edge" => Ok(TableId::Edge),
            _ => Err(Error::InvalidInput(format!("unknown table {s:?}; use 1, 2, 3 or vertex-expansion, vertex-half, edge"))),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How a row's bound was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Zero of the vertex profile `F`.
    ProfileRoot,
    /// Closed-form equation at `u = 1/2`.
    HalfEquation,
    /// Smallest zero of the edge exponent.
    EdgeRoot,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ProfileRoot => "profile-root",
            Method::HalfEquation => "half-equation",
            Method::EdgeRoot => "edge-root",
        }
    }
}

/// Which cells to compute.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableSpec {
    pub id: TableId,
    pub ds: Vec<u32>,
    pub us: Vec<f64>,
    pub tol: f64,
}

impl TableSpec {
    /// The grid of the published table.
    pub fn standard(id: TableId, tol: f64) -> Result<Self> {
        let golden = GoldenTable::builtin(id)?;
        let mut ds: Vec<u32> = golden.cells.keys().map(|k| k.0).collect();
        ds.dedup();
        let mut us: Vec<f64> = golden.cells.keys().map(|k| key_to_u(k.1)).collect();
        us.sort_by(f64::total_cmp);
        us.dedup();
        Ok(Self { id, ds, us, tol })
    }

    pub fn validate(&self) -> Result<()> {
        if self.ds.is_empty() || self.us.is_empty() {
            return Err(Error::InvalidInput("table needs at least one d and one u".into()));
        }
        if let Some(d) = self.ds.iter().find(|&&d| d < 3) {
            return Err(Error::InvalidInput(format!("degree d={d} must be at least 3")));
        }
        if let Some(u) = self.us.iter().find(|&&u| !(u > 0.0 && u <= 0.5)) {
            return Err(Error::InvalidInput(format!("fraction u={u} must lie in (0, 1/2]")));
        }
        if self.id == TableId::VertexHalf && self.us.iter().any(|&u| u != 0.5) {
            return Err(Error::InvalidInput("the vertex-half table is defined at u = 1/2 only".into()));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidInput(format!("tolerance {} must be positive", self.tol)));
        }
        Ok(())
    }
}

/// One computed bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReportRow {
    pub d: u32,
    pub u: f64,
    pub bound: f64,
    pub method: Method,
    /// Defining function evaluated at the located root.
    pub residual: f64,
    pub iterations: usize,
    /// `|residual|` is within the accepted residual.
    pub converged: bool,
    pub reference: Option<f64>,
    pub delta: Option<f64>,
}

impl ReportRow {
    fn from_solution(d: u32, u: f64, method: Method, tol: f64, s: BoundSolution) -> Self {
        Self {
            d,
            u,
            bound: s.bound,
            method,
            residual: s.root.residual,
            iterations: s.root.iterations,
            converged: s.root.residual.abs() <= tol.max(ACCEPTED_RESIDUAL),
            reference: None,
            delta: None,
        }
    }

    /// Attaches a reference value and the signed difference `bound - reference`.
    pub fn with_reference(mut self, reference: f64) -> Self {
        self.reference = Some(reference);
        self.delta = Some(self.bound - reference);
        self
    }

    /// Within `COMPARE_TOL·max(1, |reference|)` of the reference, if any.
    pub fn matches_reference(&self) -> Option<bool> {
        let r = self.reference?;
        Some((self.bound - r).abs() <= COMPARE_TOL * r.abs().max(1.0))
    }
}

fn query(d: u32, u: f64, tol: f64) -> Result<BoundQuery> {
    BoundQuery::with_solver(d, u, tol, DEFAULT_MAX_ITER)
}

/// `A_d(u)` from the profile root; at `u = 1/2` a second row from the
/// closed-form equation, referenced against the first.
pub fn cmd_vertex(d: u32, u: f64, tol: f64) -> Result<Vec<ReportRow>> {
    let q = query(d, u, tol)?;
    let main = ReportRow::from_solution(d, u, Method::ProfileRoot, tol, vertex_bound_solution(&q)?);
    let mut rows = vec![main];
    if u == 0.5 {
        let half = ReportRow::from_solution(d, u, Method::HalfEquation, tol, vertex_bound_half_solution(d, tol)?);
        rows.push(half.with_reference(main.bound));
    }
    Ok(rows)
}

/// `Â_d(u)`.
pub fn cmd_edge(d: u32, u: f64, tol: f64) -> Result<ReportRow> {
    let q = query(d, u, tol)?;
    Ok(ReportRow::from_solution(d, u, Method::EdgeRoot, tol, edge_bound_solution(&q)?))
}

fn table_cell(id: TableId, d: u32, u: f64, tol: f64) -> Result<ReportRow> {
    match id {
        TableId::VertexExpansion => {
            let q = query(d, u, tol)?;
            Ok(ReportRow::from_solution(d, u, Method::ProfileRoot, tol, vertex_bound_solution(&q)?))
        }
        TableId::VertexHalf => {
            Ok(ReportRow::from_solution(d, u, Method::HalfEquation, tol, vertex_bound_half_solution(d, tol)?))
        }
        TableId::Edge => cmd_edge(d, u, tol),
    }
}

/// Every `(d, u)` cell of `spec`, computed in parallel and sorted by `(d, u)`.
pub fn cmd_table(spec: &TableSpec) -> Result<Vec<ReportRow>> {
    spec.validate()?;
    let cells: Vec<(u32, f64)> = spec.ds.iter().flat_map(|&d| spec.us.iter().map(move |&u| (d, u))).collect();
    let mut rows = cells
        .par_iter()
        .map(|&(d, u)| table_cell(spec.id, d, u, spec.tol))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| a.d.cmp(&b.d).then(a.u.total_cmp(&b.u)));
    Ok(rows)
}

/// `u` keys are stored in millionths so that `0.1` and `0.10` coincide.
fn u_key(u: f64) -> i64 {
    (u * 1e6).round() as i64
}

fn key_to_u(k: i64) -> f64 {
    k as f64 / 1e6
}

#[derive(Debug, Deserialize)]
struct GoldenRecord {
    d: u32,
    u: f64,
    value: f64,
}

/// Reference values keyed by `(d, u)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GoldenTable {
    cells: BTreeMap<(u32, i64), f64>,
}

impl GoldenTable {
    /// Parses CSV with header `d,u,value`.
    pub fn from_csv<R: std::io::Read>(reader: R) -> Result<Self> {
        let mut cells = BTreeMap::new();
        for record in csv::Reader::from_reader(reader).deserialize() {
            let r: GoldenRecord = record?;
            cells.insert((r.d, u_key(r.u)), r.value);
        }
        Ok(Self { cells })
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        Self::from_csv(std::fs::File::open(path)?)
    }

    /// The shipped copy of a published table.
    pub fn builtin(id: TableId) -> Result<Self> {
        Self::from_csv(id.golden_source().as_bytes())
    }

    pub fn get(&self, d: u32, u: f64) -> Option<f64> {
        self.cells.get(&(d, u_key(u))).copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, f64, f64)> + '_ {
        self.cells.iter().map(|(&(d, k), &v)| (d, key_to_u(k), v))
    }
}

/// Outcome of comparing rows against a reference table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub compared: usize,
    pub missing: usize,
    /// Cells outside `COMPARE_TOL·max(1, |reference|)`, as `(d, u)`.
    pub failures: Vec<(u32, f64)>,
    pub max_abs_delta: f64,
}

impl Comparison {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.missing == 0
    }
}

/// Fills `reference` and `delta` on every row found in `golden`.
pub fn compare(rows: &mut [ReportRow], golden: &GoldenTable) -> Comparison {
    let mut out = Comparison { compared: 0, missing: 0, failures: Vec::new(), max_abs_delta: 0.0 };
    for row in rows.iter_mut() {
        let Some(reference) = golden.get(row.d, row.u) else {
            out.missing += 1;
            continue;
        };
        *row = row.with_reference(reference);
        out.compared += 1;
        out.max_abs_delta = out.max_abs_delta.max((row.bound - reference).abs());
        if row.matches_reference() != Some(true) {
            out.failures.push((row.d, row.u));
        }
    }
    out
}

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::InvalidInput(format!("unknown format {s:?}; use csv or json"))),
        }
    }
}

/// `x` with 10 significant digits; exponent form for very large or small
/// magnitudes.
pub fn sig10(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if (-5..15).contains(&magnitude) {
        format!("{:.*}", (9 - magnitude).max(0) as usize, x)
    } else {
        format!("{x:.9e}")
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(sig10).unwrap_or_default()
}

pub const CSV_HEADER: [&str; 8] = ["d", "u", "bound", "method", "residual", "iterations", "reference", "delta"];

pub fn write_rows<W: Write>(rows: &[ReportRow], format: Format, out: W) -> Result<()> {
    match format {
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER)?;
            for r in rows {
                let method = if r.converged { r.method.as_str().to_string() } else { format!("{}:unconverged", r.method.as_str()) };
                w.write_record([
                    r.d.to_string(),
                    sig10(r.u),
                    sig10(r.bound),
                    method,
                    sig10(r.residual),
                    r.iterations.to_string(),
                    opt(r.reference),
                    opt(r.delta),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
