//! Exact big-integer and big-rational evaluation of the first-moment
//! formulas in the pairing model.
//!
//! These are the ground truth that the floating-point exponents in
//! [`crate::bounds`] and the simulations in [`crate::pairing`] are checked
//! against. Nothing in here falls back to floating point except the final
//! logarithms used for convergence diagnostics.

mod convergence;
mod counts;
mod expectation;

pub use convergence::{
    coefficient_asymptotics_check, edge_exponent_convergence_check, exponent_convergence_check,
    log_log_slope, ConvergencePoint,
};
pub use counts::{
    binomial, boundary_coefficient, boundary_coefficient_inclusion_exclusion, boundary_polynomial,
    coefficient_upper_bound_check, factorial, matchings_count, CoefficientBound, CoefficientQuery,
};
pub use expectation::{expected_edge_count, expected_vertex_count, ExactExpectation, Signature};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Natural log of a big unsigned integer via an exponent/mantissa split, so
/// values far beyond the `f64` range are fine. `ln 0 = -inf`.
pub fn ln_biguint(v: &BigUint) -> f64 {
    if v.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let mantissa = (v >> shift).to_f64().expect("64-bit mantissa");
    mantissa.ln() + shift as f64 * std::f64::consts::LN_2
}

fn ln_bigint(v: &BigInt) -> f64 {
    debug_assert!(!v.is_negative());
    ln_biguint(v.magnitude())
}

/// Natural log of a nonnegative big rational.
pub fn ln_rational(v: &BigRational) -> f64 {
    ln_bigint(v.numer()) - ln_bigint(v.denom())
}
