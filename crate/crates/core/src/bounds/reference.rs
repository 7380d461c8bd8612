//! Closed-form asymptotic and spectral reference bounds.

use crate::{Error, Result};

use super::binary_entropy;

fn check(d: u32, u: f64) -> Result<()> {
    if d < 3 {
        return Err(Error::InvalidInput(format!("degree d={d} must be at least 3")));
    }
    if !(u > 0.0 && u <= 0.5) {
        return Err(Error::InvalidInput(format!("fraction u={u} must lie in (0, 1/2]")));
    }
    Ok(())
}

/// Leading-order large-`d` behaviour of `A_d(1/2)`: `1 - 2/d`.
pub fn asymptotic_vertex_half(d: u32) -> Result<f64> {
    check(d, 0.5)?;
    Ok(1.0 - 2.0 / f64::from(d))
}

/// `ψ(u) = 2(1-u) sqrt(log(u^{-u} (1-u)^{u-1}))`.
pub fn psi(u: f64) -> f64 {
    2.0 * (1.0 - u) * binary_entropy(u).sqrt()
}

/// `d(1-u) - ψ(u) sqrt(d)`, the large-`d` expansion of `Â_d(u)`.
pub fn asymptotic_edge(d: u32, u: f64) -> Result<f64> {
    check(d, u)?;
    let d = f64::from(d);
    Ok(d * (1.0 - u) - psi(u) * d.sqrt())
}

/// Tanner's eigenvalue bound evaluated at the Friedman constant
/// `λ ≤ 2 sqrt(d-1)`: `1/(u(1-α²) + α²) - 1` with `α² = 4(d-1)/d²`.
pub fn spectral_vertex_bound(d: u32, u: f64) -> Result<f64> {
    check(d, u)?;
    let d = f64::from(d);
    let alpha2 = 4.0 * (d - 1.0) / (d * d);
    Ok(1.0 / (u * (1.0 - alpha2) + alpha2) - 1.0)
}

/// `2 log_{1+i_V}(n/2)`: neighbourhoods grow by a factor `1 + i_V` until they
/// cover half the graph.
pub fn diameter_upper_bound(n: u64, iv: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("n = {n} must be at least 2")));
    }
    if !(iv > 0.0) || !iv.is_finite() {
        return Err(Error::InvalidInput(format!("isoperimetric number {iv} must be positive")));
    }
    Ok(2.0 * (n as f64 / 2.0).ln() / iv.ln_1p())
}
