//! Exact expected counts of subsets with a given boundary signature in the
//! pairing model, as reduced fractions.
//!
//!     cargo run --example exact_expectations

use isoperimetric::exact::{expected_edge_count, expected_vertex_count, matchings_count};

fn main() -> isoperimetric::Result<()> {
    let (n, d) = (12u64, 3u32);
    println!("pairings of {} points: {}", n * u64::from(d), matchings_count(n * u64::from(d))?);
    let un = 6;
    println!("vertex signatures, un = {un}:");
    for sn in 1..=4 {
        for yn in [sn, sn + 2, sn + 4] {
            if (u64::from(d) * un + yn) % 2 == 1 {
                continue;
            }
            let e = expected_vertex_count(n, d, un, sn, yn)?;
            println!("  sn={sn} yn={yn}: {} ~ {:.6}", e.value(), e.to_f64());
        }
    }
    println!("edge signatures, un = {un}:");
    for yn in (0..=18).step_by(2) {
        let e = expected_edge_count(n, d, un, yn)?;
        println!("  yn={yn:>2}: {:.6}", e.to_f64());
    }
    Ok(())
}
