//! Solves the one-variable equation for `A_d(1/2)` and checks it against the
//! general profile root, the spectral bound and the large-`d` asymptote.
//!
//!     cargo run --example half_bound

use isoperimetric::bounds::{
    asymptotic_vertex_half, spectral_vertex_bound, vertex_bound_half_solution, vertex_bound_solution, BoundQuery,
    DEFAULT_TOL,
};

fn main() -> isoperimetric::Result<()> {
    println!("{:>4} {:>10} {:>10} {:>9} {:>10} {:>10}", "d", "half eq", "profile", "gap", "spectral", "asymptote");
    for d in [3u32, 4, 5, 6, 8, 10, 20, 50, 100, 1000] {
        let half = vertex_bound_half_solution(d, DEFAULT_TOL)?;
        let profile = vertex_bound_solution(&BoundQuery::new(d, 0.5)?)?;
        println!(
            "{d:>4} {:>10.6} {:>10.6} {:>9.1e} {:>10.6} {:>10.6}",
            half.bound,
            profile.bound,
            (half.bound - profile.bound).abs(),
            spectral_vertex_bound(d, 0.5)?,
            asymptotic_vertex_half(d)?,
        );
    }
    Ok(())
}
