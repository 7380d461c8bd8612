//! Prints the vertex expansion bound `A_d(u)` over a grid of degrees and set
//! fractions, next to the stored reference values.
//!
//!     cargo run --example vertex_table

use isoperimetric::bounds::{vertex_bound, BoundQuery};
use isoperimetric::report::{GoldenTable, TableId};

fn main() -> isoperimetric::Result<()> {
    let golden = GoldenTable::builtin(TableId::VertexExpansion)?;
    let us = [0.05, 0.1, 0.2, 0.3, 0.4, 0.5];
    print!("{:>4}", "d");
    for u in us {
        print!("{u:>10}");
    }
    println!();
    for d in [3u32, 4, 5, 10, 25, 50, 100] {
        print!("{d:>4}");
        for u in us {
            print!("{:>10.5}", vertex_bound(&BoundQuery::new(d, u)?)?);
        }
        println!();
    }
    let worst = golden
        .iter()
        .map(|(d, u, v)| Ok((vertex_bound(&BoundQuery::new(d, u)?)? - v).abs() / v.abs().max(1.0)))
        .collect::<isoperimetric::Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    println!("largest scaled deviation over {} reference cells: {worst:.2e}", golden.len());
    Ok(())
}
