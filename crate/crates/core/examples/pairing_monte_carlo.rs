//! Monte Carlo estimates of subset-signature counts in random pairings,
//! compared with the exact expectations.
//!
//!     cargo run --release --example pairing_monte_carlo -- 20000

use isoperimetric::exact::{expected_edge_count, expected_vertex_count};
use isoperimetric::pairing::{monte_carlo_expectation, Caps};

fn main() -> isoperimetric::Result<()> {
    let samples = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(20_000);
    let (n, d) = (12usize, 3usize);
    for (i, (un, sn, yn)) in [(6, Some(3), 4), (4, Some(4), 6), (5, Some(4), 7), (6, None, 6)].into_iter().enumerate() {
        let est = monte_carlo_expectation(n, d, un, sn, yn, samples, 42 + i as u64, &Caps::default())?;
        let exact = match sn {
            Some(s) => expected_vertex_count(n as u64, d as u32, un as u64, s as u64, yn as u64)?,
            None => expected_edge_count(n as u64, d as u32, un as u64, yn as u64)?,
        };
        println!(
            "un={un} sn={:<4} yn={yn}: {:>9.4} ± {:.4}  exact {:>9.4}",
            sn.map_or("-".to_string(), |s| s.to_string()),
            est.mean,
            est.std_error,
            exact.to_f64()
        );
    }
    Ok(())
}
