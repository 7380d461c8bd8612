use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{diameter_upper_bound, edge_bound, vertex_bound, BoundQuery};
use crate::pairing::{min_isoperimetric_exhaustive, replica_rng, sample_pairing_with, Caps};
use crate::{Error, Result};

use super::{sig10, Format};

/// Exhaustive isoperimetric numbers of one sampled multigraph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationRow {
    pub index: u64,
    pub simple: bool,
    pub connected: bool,
    /// `i_V` as `numerator/denominator`.
    pub i_vertex: String,
    pub i_vertex_value: f64,
    pub i_edge: String,
    pub i_edge_value: f64,
    /// Diameter upper bound from `i_V`; absent when `i_V = 0`.
    pub diameter_bound: Option<f64>,
}

/// Informational comparison of small random graphs with the asymptotic
/// bounds; nothing here is asserted.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationReport {
    pub n: usize,
    pub d: usize,
    pub u: f64,
    pub samples: u64,
    pub seed: u64,
    pub simple_fraction: f64,
    pub connected_fraction: f64,
    pub mean_i_vertex: f64,
    pub mean_i_edge: f64,
    /// `A_d(u)`, when `d >= 3` and `u <= 1/2`.
    pub vertex_bound: Option<f64>,
    /// `Â_d(u)`, under the same conditions.
    pub edge_bound: Option<f64>,
    pub rows: Vec<SimulationRow>,
}

/// Samples `samples` pairings (replica `i` from stream `i` of `seed`),
/// projects them and computes `i_V`, `i_E` over sets of size at most
/// `floor(u·n)` by exhaustive search.
pub fn cmd_simulate(n: usize, d: usize, u: f64, samples: u64, seed: u64, caps: &Caps) -> Result<SimulationReport> {
    if samples == 0 {
        return Err(Error::InvalidInput("samples must be positive".into()));
    }
    let rows = (0..samples)
        .into_par_iter()
        .map(|index| -> Result<SimulationRow> {
            let g = sample_pairing_with(n, d, &mut replica_rng(seed, index))?.project();
            let iso = min_isoperimetric_exhaustive(&g, u, caps)?;
            let iv = *iso.vertex.numer() as f64 / *iso.vertex.denom() as f64;
            let ie = *iso.edge.numer() as f64 / *iso.edge.denom() as f64;
            let diameter_bound = if iv > 0.0 { Some(diameter_upper_bound(n as u64, iv)?) } else { None };
            Ok(SimulationRow {
                index,
                simple: g.is_simple(),
                connected: g.is_connected(),
                i_vertex: iso.vertex.to_string(),
                i_vertex_value: iv,
                i_edge: iso.edge.to_string(),
                i_edge_value: ie,
                diameter_bound,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let k = samples as f64;
    let frac = |f: fn(&SimulationRow) -> bool| rows.iter().filter(|r| f(r)).count() as f64 / k;
    let analytic = u32::try_from(d)
        .ok()
        .and_then(|d| BoundQuery::new(d, u).ok())
        .map(|q| (vertex_bound(&q).ok(), edge_bound(&q).ok()));
    Ok(SimulationReport {
        n,
        d,
        u,
        samples,
        seed,
        simple_fraction: frac(|r| r.simple),
        connected_fraction: frac(|r| r.connected),
        mean_i_vertex: rows.iter().map(|r| r.i_vertex_value).sum::<f64>() / k,
        mean_i_edge: rows.iter().map(|r| r.i_edge_value).sum::<f64>() / k,
        vertex_bound: analytic.and_then(|a| a.0),
        edge_bound: analytic.and_then(|a| a.1),
        rows,
    })
}

impl SimulationReport {
    /// One CSV line per sample; the summary is available in JSON.
    pub fn write<W: Write>(&self, format: Format, mut out: W) -> Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, self)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record([
                    "index",
                    "simple",
                    "connected",
                    "i_vertex",
                    "i_edge",
                    "i_vertex_value",
                    "i_edge_value",
                    "diameter_bound",
                    "vertex_bound",
                    "edge_bound",
                ])?;
                let opt = |x: Option<f64>| x.map(sig10).unwrap_or_default();
                for r in &self.rows {
                    w.write_record([
                        r.index.to_string(),
                        r.simple.to_string(),
                        r.connected.to_string(),
                        r.i_vertex.clone(),
                        r.i_edge.clone(),
                        sig10(r.i_vertex_value),
                        sig10(r.i_edge_value),
                        opt(r.diameter_bound),
                        opt(self.vertex_bound),
                        opt(self.edge_bound),
                    ])?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}
