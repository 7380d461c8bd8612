//! Edge expansion bound `Â_d(u)` by both root-finding routes, with the
//! large-`d` formula for comparison.
//!
//!     cargo run --example edge_bound

use isoperimetric::bounds::{asymptotic_edge, edge_bound_solution, edge_bound_theorem_form, BoundQuery, DEFAULT_TOL};

fn main() -> isoperimetric::Result<()> {
    println!("{:>4} {:>5} {:>10} {:>10} {:>9} {:>10}", "d", "u", "bound", "scan", "gap", "asymptote");
    for d in [3u32, 5, 10, 50, 100] {
        for u in [0.1, 0.25, 0.5] {
            let s = edge_bound_solution(&BoundQuery::new(d, u)?)?;
            let t = edge_bound_theorem_form(d, u, DEFAULT_TOL)?;
            println!(
                "{d:>4} {u:>5} {:>10.5} {t:>10.5} {:>9.1e} {:>10.5}",
                s.bound,
                (s.bound - t).abs(),
                asymptotic_edge(d, u)?
            );
        }
    }
    Ok(())
}
