//! Edge expansion: the exponent `f̂_d(u,y)` and the bound `Â_d(u)`.

use crate::{Error, Result};

use super::roots::bisect;
use super::{xlogx, BoundQuery, BoundSolution};

fn edge_exponent(d: f64, u: f64, y: f64) -> Result<f64> {
    let du = d * u;
    if !(y >= 0.0 && y < du) {
        return Err(Error::InvalidPoint(format!("edge exponent needs 0 <= y < du = {du}, got {y}")));
    }
    Ok(xlogx(du, "du")? + xlogx(d - du, "d-du")? - xlogx(u, "u")? - xlogx(1.0 - u, "1-u")?
        - xlogx(y, "y")?
        - 0.5 * (xlogx(du - y, "du-y")? + xlogx(d - du - y, "d-du-y")? + d * d.ln()))
}

/// `f̂_d(u,y)`, the exponential growth rate of the expected number of
/// `un`-subsets with `yn` boundary edges. Strictly concave on `[0, du)` with
/// its maximum at `ỹ = du(1-u)`.
pub fn f_edge(q: &BoundQuery, y: f64) -> Result<f64> {
    edge_exponent(q.df(), q.u(), y)
}

/// `Â_d(u) = y*/u`, where `y*` is the smallest zero of `f̂_d(u,·)`.
///
/// `f̂` is increasing on `[0, ỹ]`, negative at `0` and positive at `ỹ`, so
/// bisection on that interval finds `y*`. The sign at `(y* + ỹ)/2` is
/// checked to confirm no earlier crossing was skipped.
pub fn edge_bound(q: &BoundQuery) -> Result<f64> {
    Ok(edge_bound_solution(q)?.bound)
}

/// `Â_d(u)` together with the located `y*`.
pub fn edge_bound_solution(q: &BoundQuery) -> Result<BoundSolution> {
    let mode = q.mode();
    let r = bisect("edge root", |y| f_edge(q, y), 0.0, mode, q.tol(), q.max_iter())?;
    let probe = f_edge(q, 0.5 * (r.value + mode))?;
    if !(probe > 0.0) {
        return Err(Error::NoRoot(format!(
            "edge exponent not positive between root {} and mode {mode}",
            r.value
        )));
    }
    Ok(BoundSolution { bound: r.value / q.u(), root: r })
}

/// `(d/2) log d + (d-1)u log u + (d-1)(1-u) log(1-u)
///  - (du-y)/2 log(du-y) - (d-du-y)/2 log(d-du-y) - y log y`,
/// the logarithm of the two sides of the closed-form equation for `y_{d,u}`.
pub fn theorem_form_residual(d: u32, u: f64, y: f64) -> Result<f64> {
    let d = f64::from(d);
    let du = d * u;
    if !(y >= 0.0 && y <= du) {
        return Err(Error::InvalidPoint(format!("need 0 <= y <= du = {du}, got {y}")));
    }
    Ok(0.5 * d * d.ln() + (d - 1.0) * xlogx(u, "u")? + (d - 1.0) * xlogx(1.0 - u, "1-u")?
        - 0.5 * xlogx(du - y, "du-y")?
        - 0.5 * xlogx(d - du - y, "d-du-y")?
        - xlogx(y, "y")?)
}

/// `y_{d,u}/u` from the closed-form equation.
///
/// The smallest positive root is bracketed by a forward scan of `(0, du]` in
/// 1024 cells and refined by bisection in the first cell with a sign change.
pub fn edge_bound_theorem_form(d: u32, u: f64, tol: f64) -> Result<f64> {
    let q = BoundQuery::with_solver(d, u, tol, super::DEFAULT_MAX_ITER)?;
    let du = f64::from(d) * u;
    const CELLS: usize = 1024;
    let mut prev_y = 0.0;
    let mut prev = theorem_form_residual(d, u, 0.0)?;
    for i in 1..=CELLS {
        let y = du * i as f64 / CELLS as f64;
        let cur = theorem_form_residual(d, u, y)?;
        if prev.signum() != cur.signum() || cur == 0.0 {
            let r = bisect(
                "theorem-form root",
                |y| theorem_form_residual(d, u, y),
                prev_y,
                y,
                q.tol(),
                q.max_iter(),
            )?;
            return Ok(r.value / u);
        }
        prev_y = y;
        prev = cur;
    }
    Err(Error::NoRoot(format!("no sign change on (0, du] for d={d}, u={u}")))
}
