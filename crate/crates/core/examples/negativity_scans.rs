//! Grid maxima of the auxiliary function `g_d` over both scan regions.
//!
//!     cargo run --release --example negativity_scans -- 512

use isoperimetric::bounds::{g_negativity_scan_edge, g_negativity_scan_vertex};

fn main() -> isoperimetric::Result<()> {
    let grid = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(256);
    for d in [3u32, 4, 5, 10, 20] {
        let v = g_negativity_scan_vertex(d, grid)?;
        println!("vertex d={d:<3} max {:>12.4e} at {:?} ({})", v.max_value, v.argmax, if v.passed { "ok" } else { "FAIL" });
        for u in [0.25, 0.5] {
            let e = g_negativity_scan_edge(d, u, grid)?;
            println!("edge   d={d:<3} u={u:<4} max {:>12.4e} at {:?} ({})", e.max_value, e.argmax, if e.passed { "ok" } else { "FAIL" });
        }
    }
    Ok(())
}
