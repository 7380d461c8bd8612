use serde::Serialize;

use crate::error::BracketDiagnostics;
use crate::{Error, Result};

/// A root located by bisection, with the final sign-change bracket.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootResult {
    pub value: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    /// Function value at `value`.
    pub residual: f64,
    pub iterations: usize,
}

impl RootResult {
    pub fn width(&self) -> f64 {
        self.bracket_hi - self.bracket_lo
    }
}

/// Bisection on `[lo, hi]`.
///
/// `f(lo)` and `f(hi)` must have opposite signs (or one of them vanish).
/// Iteration stops once the bracket is no wider than `tol·max(1, |mid|)`; the
/// returned bracket still straddles the sign change.
pub fn bisect<F>(
    what: &'static str,
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
    max_iter: usize,
) -> Result<RootResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    debug_assert!(lo <= hi);
    let mut f_lo = f(lo)?;
    let f_hi = f(hi)?;
    if f_lo == 0.0 {
        return Ok(RootResult { value: lo, bracket_lo: lo, bracket_hi: lo, residual: 0.0, iterations: 0 });
    }
    if f_hi == 0.0 {
        return Ok(RootResult { value: hi, bracket_lo: hi, bracket_hi: hi, residual: 0.0, iterations: 0 });
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::BracketFailure {
            what,
            diagnostics: BracketDiagnostics { lo, hi, f_lo, f_hi },
        });
    }

    for iteration in 1..=max_iter {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(RootResult { value: mid, bracket_lo: lo, bracket_hi: hi, residual: 0.0, iterations: iteration });
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        let centre = 0.5 * (lo + hi);
        if hi - lo <= tol * centre.abs().max(1.0) {
            let residual = f(centre)?;
            return Ok(RootResult { value: centre, bracket_lo: lo, bracket_hi: hi, residual, iterations: iteration });
        }
    }
    Err(Error::NotConverged { what, iterations: max_iter, width: hi - lo })
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`.
///
/// Returns `(argmax, max)`; the endpoints are compared too, so a maximum on
/// the boundary is not missed.
pub fn golden_section_max<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (a0, b0) = (lo, hi);
    let (fa0, fb0) = (f(a0)?, f(b0)?);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    while hi - lo > tol * (lo.abs() + hi.abs()).max(1.0) {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1)?;
        }
    }
    let mut best = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    for (x, fx) in [(a0, fa0), (b0, fb0)] {
        if fx > best.1 {
            best = (x, fx);
        }
    }
    Ok(best)
}
