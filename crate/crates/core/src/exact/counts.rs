use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bounds::ln_pow_minus_one;
use crate::{Error, Result};

use super::ln_biguint;

/// `M(2m) = (2m)! / (m! 2^m)`, the number of perfect matchings of `2m` points.
pub fn matchings_count(two_m: u64) -> Result<BigUint> {
    if two_m % 2 != 0 {
        return Err(Error::Parity(format!("cannot perfectly match an odd number ({two_m}) of points")));
    }
    Ok((1..two_m).step_by(2).fold(BigUint::one(), |acc, k| acc * k))
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Which coefficient of `((x+1)^d - 1)^{sn}` to extract.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoefficientQuery {
    pub d: u32,
    /// Number of groups (boundary vertices).
    pub sn: u64,
    /// Target exponent (boundary edges).
    pub yn: u64,
}

impl CoefficientQuery {
    pub fn new(d: u32, sn: u64, yn: u64) -> Self {
        Self { d, sn, yn }
    }

    /// `sn ≤ yn ≤ d·sn`; outside it the coefficient is zero.
    pub fn in_support(&self) -> bool {
        self.sn <= self.yn && self.yn <= u64::from(self.d) * self.sn
    }
}

fn group_polynomial(d: u32) -> Vec<BigUint> {
    // (x+1)^d - 1 = sum_{j=1..d} binom(d,j) x^j
    (0..=u64::from(d))
        .map(|j| if j == 0 { BigUint::zero() } else { binomial(u64::from(d), j) })
        .collect()
}

fn mul_truncated(a: &[BigUint], b: &[BigUint], max_degree: usize) -> Vec<BigUint> {
    let len = (a.len() + b.len() - 1).min(max_degree + 1);
    let mut out = vec![BigUint::zero(); len];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() || i >= len {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// All coefficients of `((x+1)^d - 1)^{sn}`, index = exponent.
pub fn boundary_polynomial(d: u32, sn: u64) -> Vec<BigUint> {
    let group = group_polynomial(d);
    let max_degree = (u64::from(d) * sn) as usize;
    let mut acc = vec![BigUint::one()];
    for _ in 0..sn {
        acc = mul_truncated(&acc, &group, max_degree);
    }
    acc
}

/// `C = [x^{yn}] ((x+1)^d - 1)^{sn}`: the number of ways to pick `yn` of the
/// `d·sn` points in `sn` cells of size `d` so that every cell is hit.
///
/// Dense convolution, one group at a time, with powers above `yn` dropped.
pub fn boundary_coefficient(q: &CoefficientQuery) -> BigUint {
    if !q.in_support() {
        return BigUint::zero();
    }
    let group = group_polynomial(q.d);
    let cap = q.yn as usize;
    let mut acc = vec![BigUint::one()];
    for _ in 0..q.sn {
        acc = mul_truncated(&acc, &group, cap);
    }
    acc.get(cap).cloned().unwrap_or_default()
}

/// The same coefficient by inclusion-exclusion over empty cells:
/// `sum_j (-1)^j binom(sn, j) binom(d(sn-j), yn)`.
pub fn boundary_coefficient_inclusion_exclusion(q: &CoefficientQuery) -> BigUint {
    let d = u64::from(q.d);
    let mut plus = BigUint::zero();
    let mut minus = BigUint::zero();
    for j in 0..=q.sn {
        let term = binomial(q.sn, j) * binomial(d * (q.sn - j), q.yn);
        if j % 2 == 0 {
            plus += term;
        } else {
            minus += term;
        }
    }
    plus - minus
}

/// The bound `C ≤ x^{-yn} ((x+1)^d - 1)^{sn}` evaluated at one `x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoefficientBound {
    pub log_bound: f64,
    /// `exp(log_bound)`; may be infinite for large inputs.
    pub bound: f64,
    /// `ln C`, `-inf` when the coefficient is zero.
    pub log_coefficient: f64,
    pub holds: bool,
}

pub fn coefficient_upper_bound_check(q: &CoefficientQuery, x: f64) -> Result<CoefficientBound> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::InvalidInput(format!("x = {x} must be positive")));
    }
    let log_bound = q.sn as f64 * ln_pow_minus_one(x, f64::from(q.d)) - q.yn as f64 * x.ln();
    let log_coefficient = ln_biguint(&boundary_coefficient(q));
    let holds = log_coefficient <= log_bound + 1e-12 * log_bound.abs().max(1.0);
    Ok(CoefficientBound { log_bound, bound: log_bound.exp(), log_coefficient, holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn matchings_small_values() {
        assert_eq!(matchings_count(0).unwrap(), big(1));
        assert_eq!(matchings_count(2).unwrap(), big(1));
        assert_eq!(matchings_count(4).unwrap(), big(3));
        assert_eq!(matchings_count(6).unwrap(), big(15));
        assert_eq!(matchings_count(12).unwrap(), big(10395));
        assert_eq!(matchings_count(12).unwrap(), factorial(12) / (factorial(6) * big(64)));
        assert!(matches!(matchings_count(7), Err(Error::Parity(_))));
    }

    #[test]
    fn matchings_recurrence() {
        let mut prev = matchings_count(0).unwrap();
        for m in 1..=200u64 {
            let cur = matchings_count(2 * m).unwrap();
            assert_eq!(cur, &prev * (2 * m - 1));
            prev = cur;
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(5, 0), big(1));
        assert_eq!(binomial(5, 6), big(0));
        assert_eq!(binomial(60, 30), big(118264581564861424));
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(boundary_coefficient(&CoefficientQuery::new(3, 1, 2)), big(3));
        assert_eq!(boundary_coefficient(&CoefficientQuery::new(3, 2, 4)), big(15));
        for d in 1..6u32 {
            for sn in 0..6u64 {
                let c = boundary_coefficient(&CoefficientQuery::new(d, sn, sn));
                assert_eq!(c, big(u64::from(d).pow(sn as u32)));
            }
        }
        assert_eq!(boundary_coefficient(&CoefficientQuery::new(3, 2, 1)), big(0));
        assert_eq!(boundary_coefficient(&CoefficientQuery::new(3, 2, 7)), big(0));
        assert_eq!(boundary_coefficient(&CoefficientQuery::new(3, 0, 0)), big(1));
    }

    #[test]
    fn convolution_agrees_with_inclusion_exclusion() {
        for d in 1..=6u32 {
            for sn in 0..=12u64 {
                for yn in 0..=u64::from(d) * sn + 1 {
                    let q = CoefficientQuery::new(d, sn, yn);
                    assert_eq!(
                        boundary_coefficient(&q),
                        boundary_coefficient_inclusion_exclusion(&q),
                        "{q:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn polynomial_row_sums() {
        for d in 1..=6u32 {
            for sn in 0..=30u64 {
                let total: BigUint = boundary_polynomial(d, sn).iter().sum();
                let want = num_traits::pow(big((1u64 << d) - 1), sn as usize);
                assert_eq!(total, want, "d={d} sn={sn}");
            }
        }
    }

    #[test]
    fn coefficients_are_log_concave() {
        for d in 1..=6u32 {
            for sn in 0..=30u64 {
                let c = boundary_polynomial(d, sn);
                for k in 1..c.len().saturating_sub(1) {
                    assert!(&c[k] * &c[k] >= &c[k - 1] * &c[k + 1], "d={d} sn={sn} k={k}");
                }
            }
        }
    }

    #[test]
    fn upper_bound_examples() {
        let q = CoefficientQuery::new(3, 2, 4);
        let b = coefficient_upper_bound_check(&q, 1.0).unwrap();
        assert!((b.bound - 49.0).abs() < 1e-9);
        assert!(b.holds);
        assert!((b.log_coefficient - 15f64.ln()).abs() < 1e-12);
        for x in [1e-3, 0.1, 0.5, 2.0, 30.0] {
            for (sn, yn) in [(1, 1), (1, 2), (3, 5), (10, 25), (4, 12)] {
                let q = CoefficientQuery::new(3, sn, yn);
                assert!(coefficient_upper_bound_check(&q, x).unwrap().holds, "{q:?} x={x}");
            }
        }
        assert!(coefficient_upper_bound_check(&q, 0.0).is_err());
    }

    #[test]
    fn stationary_x_tightens_the_bound() {
        let q = CoefficientQuery::new(3, 1, 2);
        let bq = crate::bounds::BoundQuery::new(3, 0.5).unwrap();
        let x0 = crate::bounds::solve_x0(&bq, 1.0, 2.0).unwrap().value;
        let at_x0 = coefficient_upper_bound_check(&q, x0).unwrap();
        let at_1 = coefficient_upper_bound_check(&q, 1.0).unwrap();
        assert!(at_x0.holds && at_1.holds);
        assert!(at_x0.log_bound < at_1.log_bound);
        assert!(at_x0.log_bound - at_x0.log_coefficient < at_1.log_bound - at_1.log_coefficient);
    }
}
