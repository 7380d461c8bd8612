use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::{Error, Result};

use super::counts::{binomial, boundary_coefficient, factorial, matchings_count, CoefficientQuery};
use super::ln_rational;

/// Integer counts identifying an expectation: `n` cells of `d` points, subsets
/// of `un` cells with `sn` boundary cells (vertex version only) and `yn`
/// boundary edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub n: u64,
    pub d: u32,
    pub un: u64,
    pub sn: Option<u64>,
    pub yn: u64,
}

/// An expected subset count over the pairing model, held exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactExpectation {
    value: BigRational,
    pub signature: Signature,
}

impl ExactExpectation {
    fn new(numerator: BigUint, denominator: BigUint, signature: Signature) -> Self {
        Self { value: BigRational::new(BigInt::from(numerator), BigInt::from(denominator)), signature }
    }

    fn zero(signature: Signature) -> Self {
        Self { value: BigRational::zero(), signature }
    }

    /// The value in lowest terms.
    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn numerator(&self) -> &BigInt {
        self.value.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.value.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn ln(&self) -> f64 {
        ln_rational(&self.value)
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or_else(|| self.ln().exp())
    }
}

/// Shared parity checks; returns `(dn, dun)`.
fn pairing_counts(n: u64, d: u32, un: u64, yn: u64) -> Result<(u64, u64)> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidInput(format!("need n >= 1 and d >= 1 (n = {n}, d = {d})")));
    }
    let dn = u64::from(d) * n;
    if dn % 2 != 0 {
        return Err(Error::Parity(format!("dn = {dn} is odd")));
    }
    if un > n {
        return Err(Error::InvalidInput(format!("un = {un} exceeds n = {n}")));
    }
    let dun = u64::from(d) * un;
    if (dun + yn) % 2 != 0 {
        return Err(Error::Parity(format!(
            "d·un - yn = {dun} - {yn} is odd, so the points inside U cannot be paired"
        )));
    }
    Ok((dn, dun))
}

/// `E X_{u,s,y,d}`: expected number of `un`-subsets with exactly `sn`
/// boundary cells and `yn` boundary edges,
///
/// `C · binom(n,un) binom(n-un,sn) binom(dun,yn) (yn)! M(dun-yn) M(dn-dun-yn) / M(dn)`.
pub fn expected_vertex_count(n: u64, d: u32, un: u64, sn: u64, yn: u64) -> Result<ExactExpectation> {
    let (dn, dun) = pairing_counts(n, d, un, yn)?;
    let signature = Signature { n, d, un, sn: Some(sn), yn };
    if yn > dun || yn > dn - dun || un + sn > n {
        return Ok(ExactExpectation::zero(signature));
    }
    let c = boundary_coefficient(&CoefficientQuery::new(d, sn, yn));
    if c.is_zero() {
        return Ok(ExactExpectation::zero(signature));
    }
    let numerator = c
        * binomial(n, un)
        * binomial(n - un, sn)
        * binomial(dun, yn)
        * factorial(yn)
        * matchings_count(dun - yn)?
        * matchings_count(dn - dun - yn)?;
    Ok(ExactExpectation::new(numerator, matchings_count(dn)?, signature))
}

/// `E X_{u,y,d}`: expected number of `un`-subsets with exactly `yn` boundary
/// edges,
///
/// `binom(n,un) binom(dun,yn) binom(dn-dun,yn) (yn)! M(dun-yn) M(dn-dun-yn) / M(dn)`.
pub fn expected_edge_count(n: u64, d: u32, un: u64, yn: u64) -> Result<ExactExpectation> {
    let (dn, dun) = pairing_counts(n, d, un, yn)?;
    let signature = Signature { n, d, un, sn: None, yn };
    if yn > dun || yn > dn - dun {
        return Ok(ExactExpectation::zero(signature));
    }
    let numerator = binomial(n, un)
        * binomial(dun, yn)
        * binomial(dn - dun, yn)
        * factorial(yn)
        * matchings_count(dun - yn)?
        * matchings_count(dn - dun - yn)?;
    Ok(ExactExpectation::new(numerator, matchings_count(dn)?, signature))
}
