//! Vertex expansion: the exponent `f_d(u,s,y,x)`, the profile `F(y)` along
//! the curve `s = ŝ(y)`, and the bound `A_d(u) = ŝ(ȳ)/u`.

use crate::error::BracketDiagnostics;
use crate::{Error, Result};

use super::roots::{bisect, golden_section_max, RootResult};
use super::{ln_pow_minus_one, mul_log, one_minus_pow_neg, xlogx, BoundQuery, BoundSolution, ExponentPoint};

/// `solve_x0` searches `x` in `[1/cap, cap]`.
pub const X0_SEARCH_CAP: f64 = 1e12;

/// The `x`-free part of `f_d`.
fn base_terms(d: f64, u: f64, s: f64, y: f64) -> Result<f64> {
    let du = d * u;
    Ok(xlogx(du, "du")? + 0.5 * xlogx(d - du - y, "d-du-y")?
        - xlogx(u, "u")?
        - xlogx(s, "s")?
        - xlogx(1.0 - u - s, "1-u-s")?
        - 0.5 * xlogx(du - y, "du-y")?
        - 0.5 * d * d.ln())
}

/// `s log((x+1)^d - 1) - y log x`.
fn x_terms(d: f64, s: f64, y: f64, x: f64) -> Result<f64> {
    let coeff = if s == 0.0 {
        0.0
    } else if x > 0.0 && x.is_finite() {
        s * ln_pow_minus_one(x, d)
    } else {
        return Err(Error::InvalidPoint(format!("x = {x:e} must be positive when s = {s:e} > 0")));
    };
    Ok(coeff - mul_log(y, x, "x")?)
}

fn check_finite(p: &ExponentPoint) -> Result<()> {
    if [p.u, p.s, p.y, p.x].iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidPoint(format!("non-finite coordinate in {p:?}")));
    }
    if p.s < 0.0 || p.y < 0.0 {
        return Err(Error::InvalidPoint(format!("s and y must be nonnegative in {p:?}")));
    }
    Ok(())
}

/// `f_d(u,s,y,x)` for a real degree `d`.
pub fn vertex_exponent(d: f64, p: &ExponentPoint) -> Result<f64> {
    check_finite(p)?;
    Ok(base_terms(d, p.u, p.s, p.y)? + x_terms(d, p.s, p.y, p.x)?)
}

/// `f_d(u,s,y,x)`, with the degree taken from `q` and `u` from the point.
pub fn f_vertex(q: &BoundQuery, p: &ExponentPoint) -> Result<f64> {
    vertex_exponent(q.df(), p)
}

/// `x̂(y) = sqrt((du - y)/(d - du - y))`, the `x` at which `∂f/∂y = 0`.
pub fn x_hat(q: &BoundQuery, y: f64) -> Result<f64> {
    let d = q.df();
    let du = d * q.u();
    if !(y >= 0.0 && y < du && y < d - du) {
        return Err(Error::InvalidPoint(format!("x_hat needs 0 <= y < du = {du}, got y = {y}")));
    }
    Ok(((du - y) / (d - du - y)).sqrt())
}

/// `S(y,x) = y((x+1)^d - 1) / (x d (x+1)^{d-1})`: the `s` for which `x`
/// solves the stationarity equation in `x`.
pub fn s_of(q: &BoundQuery, y: f64, x: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::InvalidPoint(format!("S(y, x) needs x > 0, got x = {x}")));
    }
    if !(y >= 0.0) {
        return Err(Error::InvalidPoint(format!("S(y, x) needs y >= 0, got y = {y}")));
    }
    let d = q.df();
    Ok(y * (1.0 + x) * one_minus_pow_neg(x, d) / (x * d))
}

/// `ŝ(y) = S(y, x̂(y))`.
pub fn s_hat(q: &BoundQuery, y: f64) -> Result<f64> {
    if y == 0.0 {
        return Ok(0.0);
    }
    s_of(q, y, x_hat(q, y)?)
}

/// The profile `F(y) = f_d(u, ŝ(y), y, x̂(y))`; `F(0)` is the limit `y → 0+`.
pub fn big_f(q: &BoundQuery, y: f64) -> Result<f64> {
    let x = x_hat(q, y)?;
    let s = s_hat(q, y)?;
    f_vertex(q, &ExponentPoint::new(q.u(), s, y, x))
}

/// Solves `s d (x+1)^{d-1} / ((x+1)^d - 1) = y/x` for `x > 0`.
///
/// Equivalently `S(y, x) = s`; `S` decreases in `x` from `y` (at `x → 0`)
/// to `y/d` (at `x → ∞`), so the root exists exactly when `s < y < ds`.
/// The search runs over `ln x` and the reported residual is `S(y, x₀) - s`.
pub fn solve_x0(q: &BoundQuery, s: f64, y: f64) -> Result<RootResult> {
    let d = q.df();
    if !(s > 0.0) || !(y >= s) || !(y <= d * s) {
        return Err(Error::NoRoot(format!(
            "stationarity in x needs s > 0 and s <= y <= ds (s = {s}, y = {y}, d = {d})"
        )));
    }
    let g = |t: f64| -> Result<f64> { Ok(s_of(q, y, t.exp())? - s) };

    let cap = X0_SEARCH_CAP.ln();
    let (mut lo, mut hi) = (-1.0f64, 1.0f64);
    let (mut g_lo, mut g_hi) = (g(lo)?, g(hi)?);
    while g_lo < 0.0 && lo > -cap {
        hi = lo;
        g_hi = g_lo;
        lo = (2.0 * lo).max(-cap);
        g_lo = g(lo)?;
    }
    while g_hi > 0.0 && hi < cap {
        lo = hi;
        g_lo = g_hi;
        hi = (2.0 * hi).min(cap);
        g_hi = g(hi)?;
    }
    if !(g_lo >= 0.0 && g_hi <= 0.0) {
        return Err(Error::BracketFailure {
            what: "x0",
            diagnostics: BracketDiagnostics { lo: lo.exp(), hi: hi.exp(), f_lo: g_lo, f_hi: g_hi },
        });
    }
    let r = bisect("x0", g, lo, hi, q.tol(), q.max_iter())?;
    let x0 = r.value.exp();
    Ok(RootResult {
        value: x0,
        bracket_lo: r.bracket_lo.exp().min(x0),
        bracket_hi: r.bracket_hi.exp().max(x0),
        residual: s_of(q, y, x0)? - s,
        iterations: r.iterations,
    })
}

/// `M_d(u,s,y) = min_{x > 0} f_d(u,s,y,x)` with `u` from `q`.
///
/// At `y = s` and `y = ds` the minimum is the limit at `x → 0` or `x → ∞`.
pub fn min_over_x(q: &BoundQuery, s: f64, y: f64) -> Result<f64> {
    let d = q.df();
    let base = base_terms(d, q.u(), s, y)?;
    if s == 0.0 {
        if y != 0.0 {
            return Err(Error::InvalidPoint(format!("s = 0 forces y = 0, got y = {y}")));
        }
        return Ok(base);
    }
    if y == s {
        return Ok(base + s * d.ln());
    }
    if y == d * s {
        return Ok(base);
    }
    match solve_x0(q, s, y) {
        Ok(r) => Ok(base + x_terms(d, s, y, r.value)?),
        Err(Error::BracketFailure { .. }) => {
            let at_lo = x_terms(d, s, y, 1.0 / X0_SEARCH_CAP)?;
            let at_hi = x_terms(d, s, y, X0_SEARCH_CAP)?;
            Ok(base + at_lo.min(at_hi))
        }
        Err(e) => Err(e),
    }
}

fn check_s(q: &BoundQuery, s: f64) -> Result<()> {
    let u = q.u();
    if !(s >= 0.0 && s < 1.0 - u) {
        return Err(Error::InvalidInput(format!("s = {s} must lie in [0, 1-u = {})", 1.0 - u)));
    }
    if s > q.df() * u {
        return Err(Error::InvalidInput(format!("s = {s} exceeds du, so no y is admissible")));
    }
    Ok(())
}

/// Numerical `h_d(u,s) = max_{s ≤ y ≤ min(ds,du)} M_d(u,s,y)`.
///
/// The maximum over `y` is taken on a `grid`-point grid and then refined by
/// golden-section search inside the cells adjacent to the best grid point.
pub fn h_numeric(q: &BoundQuery, s: f64, grid: usize) -> Result<f64> {
    check_s(q, s)?;
    if grid < 16 {
        return Err(Error::InvalidInput(format!("grid = {grid} must be at least 16")));
    }
    if s == 0.0 {
        return base_terms(q.df(), q.u(), 0.0, 0.0);
    }
    let d = q.df();
    let (y_lo, y_hi) = (s, (d * s).min(d * q.u()));
    let step = (y_hi - y_lo) / (grid - 1) as f64;
    let ys: Vec<f64> = (0..grid)
        .map(|i| if i == grid - 1 { y_hi } else { y_lo + step * i as f64 })
        .collect();
    let mut best = (0usize, f64::NEG_INFINITY);
    for (i, &y) in ys.iter().enumerate() {
        let m = min_over_x(q, s, y)?;
        if m > best.1 {
            best = (i, m);
        }
    }
    let a = ys[best.0.saturating_sub(1)];
    let b = ys[(best.0 + 1).min(grid - 1)];
    let (_, refined) = golden_section_max(|y| min_over_x(q, s, y), a, b, 1e-10)?;
    Ok(refined.max(best.1))
}

/// `ĥ_d(u,s) = max_{s ≤ y ≤ min(ds,du)} f_d(u,s,y,1)`.
///
/// `∂f_d(u,s,y,1)/∂y = log x̂(y)` is negative for `u < 1/2` and zero at
/// `u = 1/2`, so the maximum is always attained at `y = s`.
pub fn h_hat(q: &BoundQuery, s: f64) -> Result<f64> {
    check_s(q, s)?;
    f_vertex(q, &ExponentPoint::new(q.u(), s, s, 1.0))
}

/// Locates `ȳ`, the unique zero of `F` on `(0, ỹ)`.
///
/// `F` is negative near `0`, positive at the mode `ỹ` and increasing in
/// between; both signs are checked before bisecting.
pub fn find_ybar(q: &BoundQuery) -> Result<RootResult> {
    let mode = q.mode();
    let lo = 1e-9 * mode;
    bisect("ybar", |y| big_f(q, y), lo, mode, q.tol(), q.max_iter())
}

/// `A_d(u) = ŝ(ȳ)/u`.
pub fn vertex_bound(q: &BoundQuery) -> Result<f64> {
    Ok(vertex_bound_solution(q)?.bound)
}

/// `A_d(u)` together with the located `ȳ`.
pub fn vertex_bound_solution(q: &BoundQuery) -> Result<BoundSolution> {
    let root = find_ybar(q)?;
    Ok(BoundSolution { bound: s_hat(q, root.value)? / q.u(), root })
}

/// `s log(2^d - 1) - (d/2 + s - 1) log 2 - (1/2 - s) log(1 - 2s) - s log s`,
/// whose smallest root in `(0, 1/2)` is `A_d(1/2)/2`.
pub fn half_equation(d: u32, s: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&s) {
        return Err(Error::InvalidPoint(format!("s = {s} must lie in [0, 1/2]")));
    }
    let d = f64::from(d);
    let ln2 = std::f64::consts::LN_2;
    Ok(s * ln_pow_minus_one(1.0, d) - (0.5 * d + s - 1.0) * ln2
        - 0.5 * xlogx(1.0 - 2.0 * s, "1-2s")?
        - xlogx(s, "s")?)
}

/// `A_d(1/2) = 2 s_d` from the closed-form equation for `s_d`.
///
/// The equation is negative at `0`, increases up to `1/2 - 2^{-d-1}` and
/// stays positive from there to `1/2`, so bisection on
/// `[0, 1/2 - 2^{-d-1}]` finds the smallest root.
pub fn vertex_bound_half(d: u32, tol: f64) -> Result<f64> {
    Ok(vertex_bound_half_solution(d, tol)?.bound)
}

/// `A_d(1/2)` together with the located `s_d`.
pub fn vertex_bound_half_solution(d: u32, tol: f64) -> Result<BoundSolution> {
    if d < 3 {
        return Err(Error::InvalidInput(format!("degree d={d} must be at least 3")));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidInput(format!("tolerance {tol} must be positive")));
    }
    let peak = 0.5 - 0.5f64.powi(d as i32 + 1);
    let root = bisect("s_d", |s| half_equation(d, s), 0.0, peak, tol, super::DEFAULT_MAX_ITER)?;
    Ok(BoundSolution { bound: 2.0 * root.value, root })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    /// Literal transcription of the displayed exponent, using `powf` and
    /// plain logarithms; only valid away from the domain boundary.
    fn f_direct(d: f64, u: f64, s: f64, y: f64, x: f64) -> f64 {
        let du = d * u;
        du * du.ln() + (d - du - y) * (d - du - y).ln() / 2.0
            + s * ((x + 1.0).powf(d) - 1.0).ln()
            - y * x.ln()
            - u * u.ln()
            - s * s.ln()
            - (1.0 - u - s) * (1.0 - u - s).ln()
            - (du - y) * (du - y).ln() / 2.0
            - d * d.ln() / 2.0
    }

    fn q(d: u32, u: f64) -> BoundQuery {
        BoundQuery::new(d, u).unwrap()
    }

    #[test]
    fn f_vertex_matches_direct_transcription() {
        for &(d, u, s, y, x) in &[
            (3.0, 0.5, 0.1, 0.2, 0.7),
            (4.0, 0.3, 0.2, 0.5, 1.3),
            (10.0, 0.1, 0.3, 0.8, 0.2),
            (25.0, 0.45, 0.2, 3.0, 2.5),
        ] {
            let got = vertex_exponent(d, &ExponentPoint::new(u, s, y, x)).unwrap();
            let want = f_direct(d, u, s, y, x);
            assert!((got - want).abs() < 1e-12, "({d},{u},{s},{y},{x}): {got} vs {want}");
        }
    }

    #[test]
    fn f_vertex_at_origin_is_minus_half_ln2() {
        let v = f_vertex(&q(3, 0.5), &ExponentPoint::new(0.5, 0.0, 0.0, 1.0)).unwrap();
        assert!((v + LN_2 / 2.0).abs() < 1e-15);
        // x is irrelevant when s = y = 0, even x = 0
        let v0 = f_vertex(&q(3, 0.5), &ExponentPoint::new(0.5, 0.0, 0.0, 0.0)).unwrap();
        assert_eq!(v, v0);
        // continuity: tiny s and y approach the same value
        let near = f_direct(3.0, 0.5, 1e-9, 1e-9, 1.0);
        assert!((near + LN_2 / 2.0).abs() < 1e-7);
    }

    #[test]
    fn f_vertex_at_mode_is_ln2() {
        let q = q(3, 0.5);
        let s = s_hat(&q, 0.75).unwrap();
        let v = f_vertex(&q, &ExponentPoint::new(0.5, s, 0.75, 1.0)).unwrap();
        assert!((v - LN_2).abs() < 1e-12);
    }

    #[test]
    fn f_vertex_rejects_log_domain_violations() {
        let q = q(3, 0.25);
        // s > 0 with x = 0
        assert!(matches!(
            f_vertex(&q, &ExponentPoint::new(0.25, 0.1, 0.2, 0.0)),
            Err(Error::InvalidPoint(_))
        ));
        // du - y < 0
        assert!(f_vertex(&q, &ExponentPoint::new(0.25, 0.1, 0.9, 1.0)).is_err());
        // 1 - u - s < 0
        assert!(f_vertex(&q, &ExponentPoint::new(0.25, 0.9, 0.5, 1.0)).is_err());
        assert!(f_vertex(&q, &ExponentPoint::new(0.25, f64::NAN, 0.5, 1.0)).is_err());
    }

    #[test]
    fn x0_minimises_the_x_dependent_terms() {
        let q = q(4, 0.3);
        for &(s, y) in &[(0.1, 0.2), (0.1, 0.35), (0.2, 0.7), (0.05, 0.06)] {
            let x0 = solve_x0(&q, s, y).unwrap().value;
            let at_x0 = f_vertex(&q, &ExponentPoint::new(0.3, s, y, x0)).unwrap();
            for &x in &[1e-3, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0] {
                let fx = f_vertex(&q, &ExponentPoint::new(0.3, s, y, x)).unwrap();
                assert!(fx - at_x0 >= -1e-12, "s={s} y={y} x={x}");
            }
        }
    }

    #[test]
    fn x_hat_examples() {
        for d in [3, 5, 10, 40] {
            let q = q(d, 0.5);
            for y in [0.0, 0.3, 1.0, f64::from(d) / 2.0 - 1e-3] {
                assert!((x_hat(&q, y).unwrap() - 1.0).abs() < 1e-15);
            }
        }
        for &(d, u) in &[(3, 0.25), (7, 0.1), (12, 0.4)] {
            let q = q(d, u);
            let xt = x_hat(&q, q.mode()).unwrap();
            assert!((xt - u / (1.0 - u)).abs() < 1e-14);
        }
        let v = x_hat(&q(3, 0.25), 0.0).unwrap();
        assert!((v - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!(x_hat(&q(3, 0.25), 0.75).is_err());
    }

    #[test]
    fn s_of_examples() {
        for d in [3, 4, 9, 30] {
            let q = q(d, 0.5);
            let df = f64::from(d);
            for y in [0.1, 0.7, 1.3] {
                let want = 2.0 * y * (1.0 - 0.5f64.powi(d as i32)) / df;
                assert!((s_of(&q, y, 1.0).unwrap() - want).abs() < 1e-15);
            }
            assert_eq!(s_of(&q, 0.0, 0.4).unwrap(), 0.0);
        }
        assert!((s_of(&q(3, 0.5), 1.0, 1.0).unwrap() - 7.0 / 12.0).abs() < 1e-15);
        assert!(s_of(&q(3, 0.5), 1.0, 0.0).is_err());
        assert!(s_of(&q(3, 0.5), 1.0, -1.0).is_err());
    }

    #[test]
    fn s_hat_examples() {
        for &(d, u) in &[(3, 0.5), (4, 0.25), (10, 0.1), (25, 0.45)] {
            let q = q(d, u);
            let want = (1.0 - u) * (1.0 - (1.0 - u).powi(d as i32));
            assert!((s_hat(&q, q.mode()).unwrap() - want).abs() < 1e-14);
            assert_eq!(s_hat(&q, 0.0).unwrap(), 0.0);
        }
        let q3 = q(3, 0.5);
        for y in [0.1, 0.5, 1.2] {
            assert!((s_hat(&q3, y).unwrap() - 7.0 * y / 12.0).abs() < 1e-15);
        }
    }

    #[test]
    fn big_f_examples() {
        let q3 = q(3, 0.5);
        assert!((big_f(&q3, 0.75).unwrap() - LN_2).abs() < 1e-12);
        let q4 = q(4, 0.25);
        let limit = 0.25 * 0.25f64.ln() + 0.75 * 0.75f64.ln();
        assert!((big_f(&q4, 1e-8).unwrap() - limit).abs() < 1e-6);
        assert!((big_f(&q4, 0.0).unwrap() - limit).abs() < 1e-15);
        assert!(big_f(&q3, 0.4).unwrap() < big_f(&q3, 0.75).unwrap());
        assert!(big_f(&q3, 0.74).unwrap() < big_f(&q3, 0.75).unwrap());
        assert!(big_f(&q3, 0.76).unwrap() < big_f(&q3, 0.75).unwrap());
    }

    #[test]
    fn solve_x0_examples() {
        for d in [3u32, 6, 11] {
            let q = q(d, 0.5);
            let df = f64::from(d);
            let y = 0.8;
            let s = 2.0 * y * (1.0 - 0.5f64.powi(d as i32)) / df;
            let r = solve_x0(&q, s, y).unwrap();
            assert!((r.value - 1.0).abs() < 1e-10, "d={d}: {}", r.value);
            assert!(r.bracket_lo <= r.value && r.value <= r.bracket_hi);
        }
        let r = solve_x0(&q(3, 0.5), 7.0 / 12.0, 1.0).unwrap();
        assert!((r.value - 1.0).abs() < 1e-10);
        assert!(r.residual.abs() < 1e-12);
    }

    #[test]
    fn solve_x0_boundary_and_errors() {
        let q = q(3, 0.5);
        assert!(matches!(solve_x0(&q, 0.1, 0.05), Err(Error::NoRoot(_))));
        assert!(matches!(solve_x0(&q, 0.1, 0.31), Err(Error::NoRoot(_))));
        assert!(matches!(solve_x0(&q, 0.0, 0.0), Err(Error::NoRoot(_))));
        // y = ds exactly sends the root to infinity
        assert!(matches!(solve_x0(&q, 0.1, 0.3), Err(Error::BracketFailure { .. })));
        assert!(matches!(solve_x0(&q, 0.1, 0.1), Err(Error::BracketFailure { .. })));
    }

    #[test]
    fn find_ybar_examples() {
        let a3 = 0.14420;
        let want3 = a3 * 3.0 / (4.0 * (1.0 - 0.125));
        let r = find_ybar(&q(3, 0.5)).unwrap();
        assert!((r.value - want3).abs() < 1e-5, "{}", r.value);
        assert!((r.value - 0.123600).abs() < 1e-5);
        let a10 = 0.71371;
        let want10 = a10 * 10.0 / (4.0 * (1.0 - 0.5f64.powi(10)));
        let r = find_ybar(&q(10, 0.5)).unwrap();
        assert!((r.value - want10).abs() < 1e-4, "{}", r.value);
        assert!((r.value - 1.78602).abs() < 1e-4);
    }

    #[test]
    fn vertex_bound_table_spots() {
        assert!((vertex_bound(&q(3, 0.10)).unwrap() - 0.36513).abs() < 1e-4);
        assert!((vertex_bound(&q(25, 0.25)).unwrap() - 2.52784).abs() < 1e-4);
        assert!((vertex_bound(&q(100, 0.01)).unwrap() - 52.21931).abs() < 1e-4 * 52.21931);
    }

    #[test]
    fn vertex_bound_half_table_spots() {
        assert!((vertex_bound_half(3, 1e-12).unwrap() - 0.14420).abs() < 1e-4);
        assert!((vertex_bound_half(18, 1e-12).unwrap() - 0.85582).abs() < 1e-4);
        assert!((vertex_bound_half(100, 1e-12).unwrap() - 0.97850).abs() < 1e-4);
        assert!(vertex_bound_half(2, 1e-12).is_err());
    }

    #[test]
    fn h_numeric_vanishes_at_the_bound() {
        for &(d, u) in &[(3, 0.5), (4, 0.3), (10, 0.2)] {
            let q = q(d, u);
            let ybar = find_ybar(&q).unwrap().value;
            let s_bar = s_hat(&q, ybar).unwrap();
            let h = h_numeric(&q, s_bar, 256).unwrap();
            assert!(h.abs() < 1e-8, "d={d} u={u}: h = {h:e}");
            let below = h_numeric(&q, 0.8 * s_bar, 256).unwrap();
            assert!(below < 0.0, "d={d} u={u}: {below}");
        }
    }

    #[test]
    fn h_numeric_at_zero() {
        let v = h_numeric(&q(3, 0.5), 0.0, 64).unwrap();
        assert!((v + LN_2 / 2.0).abs() < 1e-15);
        assert!(h_numeric(&q(3, 0.5), 0.1, 8).is_err());
        assert!(h_numeric(&q(3, 0.5), 0.5, 64).is_err());
    }

    #[test]
    fn h_hat_examples() {
        let q3 = q(3, 0.5);
        for s in [0.01, 0.03, 0.05, 0.07] {
            assert!(h_hat(&q3, s).unwrap() < 0.0, "s={s}");
        }
        let q4 = q(4, 0.3);
        let want = f_vertex(&q4, &ExponentPoint::new(0.3, 0.1, 0.1, 1.0)).unwrap();
        assert_eq!(h_hat(&q4, 0.1).unwrap(), want);
        // x̂ ≡ 1 at u = 1/2, so the x = 1 choice is already optimal
        for s in [0.02, 0.05, 0.1, 0.2] {
            let hh = h_hat(&q3, s).unwrap();
            let hn = h_numeric(&q3, s, 256).unwrap();
            assert!((hh - hn).abs() < 1e-9, "s={s}: {hh} vs {hn}");
        }
    }

    #[test]
    fn h_hat_dominates_h_numeric() {
        for &(d, u) in &[(3, 0.2), (5, 0.35), (10, 0.1)] {
            let q = q(d, u);
            for k in 1..10 {
                let s = (k as f64) * 0.9 * (1.0 - u).min(f64::from(d) * u) / 10.0;
                let hh = h_hat(&q, s).unwrap();
                let hn = h_numeric(&q, s, 128).unwrap();
                assert!(hh >= hn - 1e-9, "d={d} u={u} s={s}: {hh} < {hn}");
            }
        }
    }

    #[test]
    fn half_equation_endpoints() {
        for d in [3u32, 7, 50] {
            let df = f64::from(d);
            let at0 = half_equation(d, 0.0).unwrap();
            assert!((at0 + (df / 2.0 - 1.0) * LN_2).abs() < 1e-12);
            assert!(half_equation(d, 0.5).unwrap() > 0.0);
        }
    }
}
