//! Numerical necessary conditions for a line bundle `L` on an `n`-fold to be
//! `k`-very ample.

use num_bigint::BigInt;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarizedInvariants {
    #[serde(with = "crate::decimal")]
    pub n: u32,
    #[serde(with = "crate::decimal")]
    pub k: u32,
    /// `L^n`
    #[serde(with = "crate::decimal")]
    pub deg: BigInt,
    /// `h^0(L)`, when known.
    #[serde(with = "crate::decimal::option")]
    pub h0: Option<BigInt>,
}

impl PolarizedInvariants {
    pub fn new(n: u32, k: u32, deg: impl Into<BigInt>, h0: Option<BigInt>) -> Result<Self> {
        let deg = deg.into();
        if n == 0 {
            return Err(Error::Hypothesis("dimension must be at least 1".into()));
        }
        if deg < BigInt::from(1) {
            return Err(Error::Hypothesis(format!("degree must be positive, got {deg}")));
        }
        Ok(Self { n, k, deg, h0 })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsVerdict {
    pub degree_ok: bool,
    /// `None` when no section count was supplied.
    pub sections_ok: Option<bool>,
    pub borderline_consistent: bool,
    pub failures: Vec<String>,
}

impl BoundsVerdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub const DEGREE_BOUND: &str = "degree bound L^n >= 2^n + k - 2";
pub const SECTIONS_BOUND: &str = "section bound h0(L) >= 2n + k - 1";
pub const BORDERLINE: &str = "borderline h0(L) = 2n + k - 1 forces L^n = 2^n + k - 2";

fn require_order_two(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::Hypothesis(format!(
            "degree and section bounds need k >= 2, got k = {k}"
        )));
    }
    Ok(())
}

/// `2^n + k - 2`
pub fn min_degree(n: u32, k: u32) -> Result<BigInt> {
    require_order_two(k)?;
    if n == 0 {
        return Err(Error::Hypothesis("dimension must be at least 1".into()));
    }
    Ok((BigInt::from(1) << n) + BigInt::from(k) - 2)
}

/// `2n + k - 1`
pub fn min_sections(n: u32, k: u32) -> Result<BigInt> {
    require_order_two(k)?;
    if n == 0 {
        return Err(Error::Hypothesis("dimension must be at least 1".into()));
    }
    Ok(BigInt::from(2 * u64::from(n) + u64::from(k)) - 1)
}

pub fn check(inv: &PolarizedInvariants) -> Result<BoundsVerdict> {
    let min_deg = min_degree(inv.n, inv.k)?;
    let min_h0 = min_sections(inv.n, inv.k)?;
    let mut failures = Vec::new();

    let degree_ok = inv.deg >= min_deg;
    if !degree_ok {
        failures.push(DEGREE_BOUND.to_string());
    }
    let sections_ok = inv.h0.as_ref().map(|h0| *h0 >= min_h0);
    if sections_ok == Some(false) {
        failures.push(SECTIONS_BOUND.to_string());
    }
    let borderline_consistent = !(inv.h0.as_ref() == Some(&min_h0) && inv.deg != min_deg);
    if !borderline_consistent {
        failures.push(BORDERLINE.to_string());
    }
    Ok(BoundsVerdict {
        degree_ok,
        sections_ok,
        borderline_consistent,
        failures,
    })
}

/// Upper bound `(n+1)/k` on the nefvalue of `(X, L)` with `L` `k`-very
/// ample, for `n >= 3`, `k >= 2`.
pub fn nefvalue_bound(n: u32, k: u32) -> Result<Ratio<u64>> {
    if n < 3 || k < 2 {
        return Err(Error::Hypothesis(format!(
            "nefvalue bound needs n >= 3 and k >= 2, got n = {n}, k = {k}"
        )));
    }
    Ok(Ratio::new(u64::from(n) + 1, u64::from(k)))
}

/// Order of `L1 ⊠ L2` on `X1 × X2` for `k1`- and `k2`-very ample factors.
pub fn box_product_order(k1: u32, k2: u32) -> u32 {
    k1.min(k2)
}

/// A `k`-very ample bundle has degree at least `k` on every curve.
pub fn curve_degree_floor(k: u32) -> u32 {
    k
}

/// Whether a curve of `L`-degree `curve_degree` rules out `k`-very
/// ampleness.
pub fn curve_violates(k: u32, curve_degree: u32) -> bool {
    curve_degree < curve_degree_floor(k)
}
