use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::{Error, Result};

use super::graph::Multigraph;
use super::model::{replica_rng, sample_pairing_with, Pairing};
use super::search::count_subsets_with_signature;
use super::Caps;

/// Sample mean of a subset count over independent pairings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub samples: u64,
    pub mean: f64,
    pub std_error: f64,
    /// Exact total of the per-sample counts.
    pub total: u128,
}

/// Estimates the expected number of `un`-subsets with `yn` boundary edges
/// (and `sn` boundary vertices, if given) from `samples` pairings.
///
/// Sample `i` is drawn from stream `i` of `seed`, and the counts are summed
/// as integers, so the result does not depend on the thread count.
pub fn monte_carlo_expectation(
    n: usize,
    d: usize,
    un: usize,
    sn: Option<usize>,
    yn: usize,
    samples: u64,
    seed: u64,
    caps: &Caps,
) -> Result<MonteCarloEstimate> {
    if samples < 2 {
        return Err(Error::InvalidInput("need at least two samples for a standard error".into()));
    }
    // Validate shape and caps once, before spawning work.
    let probe = sample_pairing_with(n, d, &mut replica_rng(seed, 0))?;
    count_subsets_with_signature(&probe, un, sn, yn, caps)?;

    let (total, total_sq) = (0..samples)
        .into_par_iter()
        .map(|i| -> Result<(u128, u128)> {
            let p = sample_pairing_with(n, d, &mut replica_rng(seed, i))?;
            let c = u128::from(count_subsets_with_signature(&p, un, sn, yn, caps)?);
            Ok((c, c * c))
        })
        .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;

    let k = samples as f64;
    let mean = total as f64 / k;
    // Sample variance from exact integer sums: (k·Σc² - (Σc)²) / (k(k-1)).
    let spread = (samples as u128 * total_sq).saturating_sub(total * total) as f64;
    let variance = spread / (k * (k - 1.0));
    Ok(MonteCarloEstimate { samples, mean, std_error: (variance / k).sqrt(), total })
}

/// A simple graph obtained by resampling pairings until the projection has
/// no loops or repeated edges.
#[derive(Debug, Clone)]
pub struct SimpleSample {
    pub pairing: Pairing,
    pub graph: Multigraph,
    /// Number of discarded non-simple pairings.
    pub rejections: u64,
}

pub fn sample_simple_with<R: Rng + ?Sized>(n: usize, d: usize, rng: &mut R, max_attempts: u64) -> Result<SimpleSample> {
    for attempt in 0..max_attempts {
        let pairing = sample_pairing_with(n, d, rng)?;
        let graph = pairing.project();
        if graph.is_simple() {
            return Ok(SimpleSample { pairing, graph, rejections: attempt });
        }
    }
    Err(Error::NotConverged { what: "simple-graph rejection sampling", iterations: max_attempts as usize, width: f64::NAN })
}

/// Replica `index` of a simple-graph study under `seed`.
pub fn sample_simple(n: usize, d: usize, seed: u64, index: u64, max_attempts: u64) -> Result<SimpleSample> {
    sample_simple_with(n, d, &mut replica_rng(seed, index), max_attempts)
}
