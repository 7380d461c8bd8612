//! Real-valued exponent functions, their root finders, and reference bounds.
//!
//! Every exponent is evaluated in the log domain in `f64` with the convention
//! `0·log 0 = 0`. A logarithm whose multiplier is nonzero but whose argument is
//! not positive is reported as [`Error::InvalidPoint`] instead of producing
//! `-inf` or `NaN`.

mod edge;
mod reference;
mod roots;
mod scan;
mod vertex;

pub use edge::{edge_bound, edge_bound_solution, edge_bound_theorem_form, f_edge, theorem_form_residual};
pub use reference::{
    asymptotic_edge, asymptotic_vertex_half, diameter_upper_bound, psi, spectral_vertex_bound,
};
pub use roots::{bisect, golden_section_max, RootResult};
pub use scan::{g_negativity_scan_edge, g_negativity_scan_vertex, ScanReport, SCAN_MARGIN};
pub use vertex::{
    big_f, f_vertex, find_ybar, h_hat, h_numeric, half_equation, min_over_x, s_hat, s_of,
    solve_x0, vertex_bound, vertex_bound_half, vertex_bound_half_solution, vertex_bound_solution,
    vertex_exponent, x_hat, X0_SEARCH_CAP,
};

use serde::Serialize;

use crate::{Error, Result};

/// Default absolute/relative tolerance on located roots.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Default iteration budget for bisection.
pub const DEFAULT_MAX_ITER: usize = 200;
/// Largest function residual accepted at a located root.
pub const ACCEPTED_RESIDUAL: f64 = 1e-10;

/// Arguments this close to zero are treated as zero when their log has a
/// nonzero multiplier.
const LOG_FLOOR: f64 = 1e-300;
/// Rounding slack for arguments such as `d - du - y` that are exactly zero at
/// a domain boundary but may come out slightly negative in floating point.
const BOUNDARY_SLACK: f64 = 1e-12;

/// A degree `d` and subset fraction `u`, with the solver settings used for
/// every root located on their behalf.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundQuery {
    d: u32,
    u: f64,
    tol: f64,
    max_iter: usize,
}

impl BoundQuery {
    pub fn new(d: u32, u: f64) -> Result<Self> {
        Self::with_solver(d, u, DEFAULT_TOL, DEFAULT_MAX_ITER)
    }

    pub fn with_solver(d: u32, u: f64, tol: f64, max_iter: usize) -> Result<Self> {
        if d < 3 {
            return Err(Error::InvalidInput(format!("degree d={d} must be at least 3")));
        }
        if !(u > 0.0 && u <= 0.5) {
            return Err(Error::InvalidInput(format!("fraction u={u} must lie in (0, 1/2]")));
        }
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidInput(format!("tolerance {tol} must be positive")));
        }
        if max_iter == 0 {
            return Err(Error::InvalidInput("max_iter must be at least 1".into()));
        }
        Ok(Self { d, u, tol, max_iter })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn max_iter(&self) -> usize {
        self.max_iter
    }

    /// Same degree and solver settings, different fraction.
    pub fn at_u(&self, u: f64) -> Result<Self> {
        Self::with_solver(self.d, u, self.tol, self.max_iter)
    }

    pub(crate) fn df(&self) -> f64 {
        f64::from(self.d)
    }

    /// `ỹ = du(1-u)`, the mode of the vertex profile and the maximiser of the
    /// edge exponent.
    pub fn mode(&self) -> f64 {
        self.df() * self.u * (1.0 - self.u)
    }
}

/// A bound together with the root it was read off from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundSolution {
    pub bound: f64,
    pub root: RootResult,
}

/// A point `(u, s, y, x)`: subset fraction, vertex-boundary fraction,
/// edge-boundary fraction, and the free parameter of the coefficient bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExponentPoint {
    pub u: f64,
    pub s: f64,
    pub y: f64,
    pub x: f64,
}

impl ExponentPoint {
    pub fn new(u: f64, s: f64, y: f64, x: f64) -> Self {
        Self { u, s, y, x }
    }
}

/// Binary entropy in nats, `-u log u - (1-u) log(1-u)`.
pub fn binary_entropy(u: f64) -> f64 {
    -(u * u.ln()) - (1.0 - u) * (-u).ln_1p()
}

/// `t log t` with `0 log 0 = 0`; `label` names the term in error messages.
pub(crate) fn xlogx(t: f64, label: &str) -> Result<f64> {
    if t.is_nan() {
        return Err(Error::InvalidPoint(format!("{label} is NaN")));
    }
    if t > 0.0 {
        Ok(t * t.ln())
    } else if t >= -BOUNDARY_SLACK {
        Ok(0.0)
    } else {
        Err(Error::InvalidPoint(format!("{label} = {t:e} is negative")))
    }
}

/// `m log t`, zero when `m == 0` regardless of `t`.
pub(crate) fn mul_log(m: f64, t: f64, label: &str) -> Result<f64> {
    if m == 0.0 {
        return Ok(0.0);
    }
    if !(t > LOG_FLOOR) || !t.is_finite() {
        return Err(Error::InvalidPoint(format!(
            "log argument {label} = {t:e} with nonzero multiplier {m:e}"
        )));
    }
    Ok(m * t.ln())
}

/// `log((x+1)^d - 1)` for `x > 0`, stable for tiny `x` and for large `d`.
pub fn ln_pow_minus_one(x: f64, d: f64) -> f64 {
    let t = d * x.ln_1p();
    if t <= 1.0 {
        t.exp_m1().ln()
    } else {
        t + (-(-t).exp()).ln_1p()
    }
}

/// `1 - (x+1)^{-d}`.
pub(crate) fn one_minus_pow_neg(x: f64, d: f64) -> f64 {
    -(-d * x.ln_1p()).exp_m1()
}
