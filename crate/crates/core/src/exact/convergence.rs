use num_rational::Rational64;
use serde::Serialize;

use crate::bounds::{f_edge, ln_pow_minus_one, min_over_x, solve_x0, BoundQuery};
use crate::{Error, Result};

use super::counts::{boundary_coefficient, CoefficientQuery};
use super::expectation::{expected_edge_count, expected_vertex_count};
use super::ln_biguint;

/// One size `n` of a convergence sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergencePoint {
    pub n: u64,
    /// `(1/n) ln` of the exact quantity.
    pub observed: f64,
    /// The predicted limit of `observed`.
    pub limit: f64,
    /// `exp(observed - limit)` for coefficient checks, `observed - limit`
    /// for exponent checks.
    pub value: f64,
}

fn to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// `n·r` as an integer; rejects rather than rounds.
fn scaled(n: u64, r: Rational64, name: &str) -> Result<u64> {
    if *r.numer() < 0 {
        return Err(Error::InvalidInput(format!("{name} = {r} is negative")));
    }
    let num = i128::from(n) * i128::from(*r.numer());
    let den = i128::from(*r.denom());
    if num % den != 0 {
        return Err(Error::InvalidInput(format!("{name}·n = {r}·{n} is not an integer")));
    }
    u64::try_from(num / den).map_err(|_| Error::InvalidInput(format!("{name}·n overflows")))
}

fn check_sizes(n_list: &[u64]) -> Result<()> {
    if n_list.is_empty() || n_list.contains(&0) {
        return Err(Error::InvalidInput("n_list must be nonempty and positive".into()));
    }
    Ok(())
}

/// `r(n) = C^{1/n} / (x₀^{-y} ((x₀+1)^d - 1)^s)` for each `n`, where
/// `C = [x^{yn}]((x+1)^d - 1)^{sn}` and `x₀` is the stationary point of the
/// bound. Needs `0 < s < y < ds`.
pub fn coefficient_asymptotics_check(
    d: u32,
    s: Rational64,
    y: Rational64,
    n_list: &[u64],
) -> Result<Vec<ConvergencePoint>> {
    check_sizes(n_list)?;
    let ds = s * Rational64::from_integer(i64::from(d));
    if !(s > Rational64::from_integer(0) && s < y && y < ds) {
        return Err(Error::InvalidInput(format!("need 0 < s < y < ds, got s = {s}, y = {y}, d = {d}")));
    }
    let (sf, yf) = (to_f64(s), to_f64(y));
    // u plays no part in the stationarity equation.
    let q = BoundQuery::new(d, 0.5)?;
    let x0 = solve_x0(&q, sf, yf)?.value;
    let limit = sf * ln_pow_minus_one(x0, f64::from(d)) - yf * x0.ln();
    n_list
        .iter()
        .map(|&n| {
            let c = boundary_coefficient(&CoefficientQuery::new(d, scaled(n, s, "s")?, scaled(n, y, "y")?));
            let observed = ln_biguint(&c) / n as f64;
            Ok(ConvergencePoint { n, observed, limit, value: (observed - limit).exp() })
        })
        .collect()
}

/// `e(n) = (1/n) ln E X_{u,s,y,d} - M_d(u,s,y)`, with `M_d` the exponent
/// minimised over `x`.
pub fn exponent_convergence_check(
    d: u32,
    u: Rational64,
    s: Rational64,
    y: Rational64,
    n_list: &[u64],
) -> Result<Vec<ConvergencePoint>> {
    check_sizes(n_list)?;
    let q = BoundQuery::new(d, to_f64(u))?;
    let limit = min_over_x(&q, to_f64(s), to_f64(y))?;
    n_list
        .iter()
        .map(|&n| {
            let e = expected_vertex_count(n, d, scaled(n, u, "u")?, scaled(n, s, "s")?, scaled(n, y, "y")?)?;
            let observed = e.ln() / n as f64;
            Ok(ConvergencePoint { n, observed, limit, value: observed - limit })
        })
        .collect()
}

/// `e(n) = (1/n) ln E X_{u,y,d} - f̂_d(u,y)`.
pub fn edge_exponent_convergence_check(
    d: u32,
    u: Rational64,
    y: Rational64,
    n_list: &[u64],
) -> Result<Vec<ConvergencePoint>> {
    check_sizes(n_list)?;
    let q = BoundQuery::new(d, to_f64(u))?;
    let limit = f_edge(&q, to_f64(y))?;
    n_list
        .iter()
        .map(|&n| {
            let e = expected_edge_count(n, d, scaled(n, u, "u")?, scaled(n, y, "y")?)?;
            let observed = e.ln() / n as f64;
            Ok(ConvergencePoint { n, observed, limit, value: observed - limit })
        })
        .collect()
}

/// Least-squares slope of `ln |gap|` against `ln n`.
pub fn log_log_slope(ns: &[u64], gaps: &[f64]) -> Result<f64> {
    if ns.len() != gaps.len() || ns.len() < 2 {
        return Err(Error::InvalidInput("need at least two (n, gap) pairs of equal length".into()));
    }
    let mut pts = Vec::with_capacity(ns.len());
    for (&n, &g) in ns.iter().zip(gaps) {
        if n == 0 || g == 0.0 || !g.is_finite() {
            return Err(Error::InvalidInput(format!("cannot take logs at n = {n}, gap = {g}")));
        }
        pts.push(((n as f64).ln(), g.abs().ln()));
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidInput("all n are equal".into()));
    }
    Ok(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::binary_entropy;

    fn r(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    #[test]
    fn coefficient_ratio_rises_towards_one() {
        let ns = [10, 50, 100, 200];
        let pts = coefficient_asymptotics_check(3, r(1, 10), r(1, 5), &ns).unwrap();
        for w in pts.windows(2) {
            assert!(w[1].value > w[0].value, "{w:?}");
        }
        assert!(pts.iter().all(|p| p.value <= 1.0));
        assert!(pts[3].value >= 0.9, "{:?}", pts[3]);
        let gaps: Vec<f64> = pts.iter().map(|p| 1.0 - p.value).collect();
        let slope = log_log_slope(&ns, &gaps).unwrap();
        assert!((-1.2..=-0.6).contains(&slope), "slope {slope}");
    }

    #[test]
    fn coefficient_check_rejects_bad_input() {
        assert!(coefficient_asymptotics_check(3, r(1, 10), r(1, 5), &[15]).is_err());
        assert!(coefficient_asymptotics_check(3, r(1, 10), r(1, 10), &[10]).is_err());
        assert!(coefficient_asymptotics_check(3, r(1, 10), r(3, 10), &[10]).is_err());
        assert!(coefficient_asymptotics_check(3, r(1, 10), r(1, 5), &[]).is_err());
    }

    #[test]
    fn vertex_exponent_gap_shrinks() {
        let ns = [80, 160, 240, 320, 400];
        let pts = exponent_convergence_check(3, r(1, 2), r(3, 40), r(1, 8), &ns).unwrap();
        for w in pts.windows(2) {
            assert!(w[1].value.abs() < w[0].value.abs(), "{w:?}");
        }
        assert!(pts[4].value.abs() < 0.02, "{:?}", pts[4]);
    }

    #[test]
    fn edge_exponent_gap_shrinks_at_the_mode() {
        let ns = [16, 64, 160, 400];
        let pts = edge_exponent_convergence_check(4, r(1, 4), r(3, 4), &ns).unwrap();
        for p in &pts {
            assert!((p.limit - binary_entropy(0.25)).abs() < 1e-12);
        }
        for w in pts.windows(2) {
            assert!(w[1].value.abs() < w[0].value.abs(), "{w:?}");
        }
        assert!(pts[3].value.abs() < 0.02);
    }

    #[test]
    fn non_integral_sizes_are_rejected() {
        assert!(exponent_convergence_check(3, r(1, 2), r(3, 40), r(1, 8), &[100]).is_err());
        assert!(edge_exponent_convergence_check(4, r(1, 4), r(3, 4), &[6]).is_err());
    }

    #[test]
    fn slope_of_exact_power_law() {
        let ns = [10u64, 20, 40, 80];
        let gaps: Vec<f64> = ns.iter().map(|&n| 3.0 / (n as f64).powi(2)).collect();
        assert!((log_log_slope(&ns, &gaps).unwrap() + 2.0).abs() < 1e-12);
        assert!(log_log_slope(&[10], &[0.1]).is_err());
        assert!(log_log_slope(&[10, 20], &[0.1, 0.0]).is_err());
    }
}
