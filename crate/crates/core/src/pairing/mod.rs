//! The pairing (configuration) model: `n` cells of `d` points, a uniformly
//! random perfect matching of the points, and the multigraph obtained by
//! collapsing each cell to a vertex.
//!
//! Alongside sampling and enumeration this module computes boundary sizes,
//! exact isoperimetric numbers of small graphs, and Monte Carlo estimates of
//! subset counts that [`crate::exact`] evaluates in closed form.

mod graph;
mod model;
mod monte_carlo;
mod search;

pub use graph::{BoundarySummary, Multigraph};
pub use model::{enumerate_pairings, replica_rng, sample_pairing, sample_pairing_with, Pairing, PairingEnumerator};
pub use monte_carlo::{monte_carlo_expectation, sample_simple, sample_simple_with, MonteCarloEstimate, SimpleSample};
pub use search::{count_subsets_with_signature, min_isoperimetric_exhaustive, signature_histogram, IsoperimetricNumbers};

/// Size limits past which operations refuse instead of running for hours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest number of pairings `enumerate_pairings` will stream.
    pub pairings: u64,
    /// Largest `n` for which all `2^n` subsets are scanned.
    pub subset_scan_bits: u32,
    /// Largest number of fixed-size subsets counted per pairing.
    pub subsets: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self { pairings: 10_000_000, subset_scan_bits: 24, subsets: 10_000_000 }
    }
}
