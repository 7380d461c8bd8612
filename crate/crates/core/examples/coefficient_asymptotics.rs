//! Convergence of the exact coefficient and expectation growth rates to
//! their limiting exponents.
//!
//!     cargo run --release --example coefficient_asymptotics

use isoperimetric::exact::{
    coefficient_asymptotics_check, edge_exponent_convergence_check, exponent_convergence_check, log_log_slope,
};
use num_rational::Rational64;

fn main() -> isoperimetric::Result<()> {
    let ns: Vec<u64> = (1..=10).map(|k| 20 * k).collect();
    let points = coefficient_asymptotics_check(3, Rational64::new(1, 10), Rational64::new(1, 5), &ns)?;
    println!("coefficient ratio r(n), d=3 s=1/10 y=1/5");
    for p in &points {
        println!("  n={:>3} r={:.6}", p.n, p.value);
    }
    let gaps: Vec<f64> = points.iter().map(|p| 1.0 - p.value).collect();
    println!("  log-log slope of 1 - r(n): {:.3}", log_log_slope(&ns, &gaps)?);

    let ns: Vec<u64> = (1..=5).map(|k| 80 * k).collect();
    let v = exponent_convergence_check(3, Rational64::new(1, 2), Rational64::new(3, 40), Rational64::new(1, 8), &ns)?;
    println!("vertex exponent gap, d=3 u=1/2 s=3/40 y=1/8 (limit {:.6})", v[0].limit);
    for p in &v {
        println!("  n={:>3} gap={:.6}", p.n, p.value);
    }
    let ns: Vec<u64> = (1..=6).map(|k| 40 * k).collect();
    let e = edge_exponent_convergence_check(4, Rational64::new(1, 4), Rational64::new(3, 4), &ns)?;
    println!("edge exponent gap, d=4 u=1/4 y=3/4 (limit {:.6})", e[0].limit);
    for p in &e {
        println!("  n={:>3} gap={:.6}", p.n, p.value);
    }
    Ok(())
}
