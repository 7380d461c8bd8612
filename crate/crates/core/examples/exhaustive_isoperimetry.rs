//! Samples simple random cubic graphs and computes their isoperimetric
//! numbers by exhaustive subset search, set against the asymptotic bounds.
//!
//!     cargo run --release --example exhaustive_isoperimetry -- 18 50

use isoperimetric::bounds::{edge_bound, vertex_bound, BoundQuery};
use isoperimetric::pairing::{min_isoperimetric_exhaustive, sample_simple, Caps};

fn main() -> isoperimetric::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().ok());
    let n = args.next().flatten().unwrap_or(16) as usize;
    let samples = args.next().flatten().unwrap_or(40);
    let (d, u) = (3usize, 0.5);
    let q = BoundQuery::new(d as u32, u)?;
    let (mut iv_min, mut ie_min) = (f64::INFINITY, f64::INFINITY);
    for i in 0..samples {
        let s = sample_simple(n, d, 5, i, 10_000)?;
        let iso = min_isoperimetric_exhaustive(&s.graph, u, &Caps::default())?;
        let iv = *iso.vertex.numer() as f64 / *iso.vertex.denom() as f64;
        let ie = *iso.edge.numer() as f64 / *iso.edge.denom() as f64;
        iv_min = iv_min.min(iv);
        ie_min = ie_min.min(ie);
        println!("graph {i:>3}: i_V = {:<6} i_E = {:<6} witness {:?}", iso.vertex, iso.edge, iso.edge_witness);
    }
    println!("smallest i_V {iv_min:.4} (bound {:.4}), smallest i_E {ie_min:.4} (bound {:.4})", vertex_bound(&q)?, edge_bound(&q)?);
    Ok(())
}
