//! Grid scans confirming that the exponents stay negative below the bounds.

use rayon::prelude::*;
use serde::Serialize;

use crate::{Error, Result};

use super::edge::f_edge;
use super::vertex::{f_vertex, vertex_bound_half};
use super::{BoundQuery, ExponentPoint, DEFAULT_TOL};

/// Distance kept from the region boundaries where the scanned function tends to 0.
pub const SCAN_MARGIN: f64 = 1e-3;
/// A scan passes when its maximum is below `-PASS_THRESHOLD`.
const PASS_THRESHOLD: f64 = 1e-9;

/// Maximum of a scanned function over a rectangular grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanReport {
    pub d: u32,
    pub max_value: f64,
    /// `(u, r)` for the vertex scan, `(r, w)` for the edge scan.
    pub argmax: (f64, f64),
    /// Grid indices of `argmax`, row-major.
    pub argmax_index: (usize, usize),
    pub points: usize,
    pub passed: bool,
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| if i + 1 == n { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
        .collect()
}

/// Row-major maximum over `a × b`, ties broken by the smallest index so the
/// result does not depend on how the work is split.
fn grid_max<F>(d: u32, a: &[f64], b: &[f64], f: F) -> Result<ScanReport>
where
    F: Fn(f64, f64) -> Result<f64> + Sync,
{
    let rows: Vec<(usize, usize, f64)> = a
        .par_iter()
        .enumerate()
        .map(|(i, &ai)| {
            let mut best = (i, 0usize, f64::NEG_INFINITY);
            for (j, &bj) in b.iter().enumerate() {
                let v = f(ai, bj)?;
                if v > best.2 {
                    best = (i, j, v);
                }
            }
            Ok(best)
        })
        .collect::<Result<_>>()?;
    let best = rows
        .into_iter()
        .fold((0, 0, f64::NEG_INFINITY), |acc, r| if r.2 > acc.2 { r } else { acc });
    Ok(ScanReport {
        d,
        max_value: best.2,
        argmax: (a[best.0], b[best.1]),
        argmax_index: (best.0, best.1),
        points: a.len() * b.len(),
        passed: best.2 < -PASS_THRESHOLD,
    })
}

/// Scans `g_d(u,r) = f_d(u, ru, ru, 1)` over `u ∈ [δ, 1/2-δ]`,
/// `r ∈ [0, A_d(1/2) - δ]` with `grid` points per axis.
pub fn g_negativity_scan_vertex(d: u32, grid: usize) -> Result<ScanReport> {
    if grid < 64 {
        return Err(Error::InvalidInput(format!("grid = {grid} must be at least 64")));
    }
    let q = BoundQuery::new(d, 0.5)?;
    let a_half = vertex_bound_half(d, DEFAULT_TOL)?;
    let us = linspace(SCAN_MARGIN, 0.5 - SCAN_MARGIN, grid);
    let rs = linspace(0.0, a_half - SCAN_MARGIN, grid);
    grid_max(d, &us, &rs, |u, r| f_vertex(&q, &ExponentPoint::new(u, r * u, r * u, 1.0)))
}

/// Scans `g_d(r,w) = f̂_d(w, rw)` over `r ∈ [0, Â_d(u) - δ]`, `w ∈ [δ, u]`.
pub fn g_negativity_scan_edge(d: u32, u: f64, grid: usize) -> Result<ScanReport> {
    if grid < 64 {
        return Err(Error::InvalidInput(format!("grid = {grid} must be at least 64")));
    }
    let q = BoundQuery::new(d, u)?;
    let a_hat = super::edge::edge_bound(&q)?;
    let rs = linspace(0.0, a_hat - SCAN_MARGIN, grid);
    let ws = linspace(SCAN_MARGIN, u, grid);
    grid_max(d, &rs, &ws, |r, w| f_edge(&q.at_u(w)?, r * w))
}
