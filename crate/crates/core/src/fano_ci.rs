//! Embedding order of the anticanonical bundle of a Fano complete
//! intersection `X ⊂ P^N`.
//!
//! `K_X = O_X(Σ d_i - N - 1)`, so `X` is Fano iff `Σ d_i <= N`, and then
//! `-K_X = O_X(k)` with `k = N + 1 - Σ d_i`. Restrictions of `O_{P^N}(k)`
//! are `k`-jet ample; a line `ℓ ⊂ X` has `-K_X · ℓ = k`, which rules out
//! `(k+1)`-spannedness. The order is therefore exact whenever `X` contains a
//! line, which every Fano complete intersection of dimension at least two
//! does.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lines::{count_lines, line_family_through_point, CompleteIntersection, LineCount};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingOrderReport {
    pub variety: CompleteIntersection,
    pub is_fano: bool,
    #[serde(with = "crate::decimal")]
    pub dim: u32,
    /// Largest `k` with `-K_X` `k`-jet ample; `None` when not Fano or for
    /// the plane conic.
    #[serde(with = "crate::decimal::option")]
    pub jet_order: Option<u32>,
    /// `jet_order + 1`: the first order at which `-K_X` is not spanned.
    #[serde(with = "crate::decimal::option")]
    pub not_spanned_order: Option<u32>,
    /// `None` for curves ("n/a").
    pub contains_line: Option<bool>,
    pub line_family: LineCount,
    #[serde(with = "crate::decimal::option")]
    pub family_through_point: Option<u32>,
    #[serde(with = "crate::decimal::option")]
    pub anticanonical_degree: Option<BigInt>,
    #[serde(with = "crate::decimal::option")]
    pub anticanonical_sections: Option<BigInt>,
    /// `X` is a conic in a plane, the one case the jet-order statement
    /// excludes.
    pub curve_exception: bool,
    /// The jet order of a curve is reported from the general formula rather
    /// than a separately established statement.
    pub formula_extrapolated: bool,
}

fn check_positive_dim(ci: &CompleteIntersection) -> Result<u32> {
    if ci.dim() < 1 {
        return Err(Error::NotPositiveDimensional {
            ambient: ci.ambient(),
            codim: ci.codim(),
        });
    }
    Ok(ci.dim() as u32)
}

pub fn is_fano(ci: &CompleteIntersection) -> bool {
    ci.degree_sum() <= u64::from(ci.ambient())
}

/// Plane conic pattern: a curve whose non-linear equations are a single
/// quadric.
fn is_plane_conic(ci: &CompleteIntersection) -> bool {
    let nonlinear: Vec<u32> = ci.degrees().iter().copied().filter(|&d| d > 1).collect();
    ci.dim() == 1 && nonlinear == [2]
}

/// Lines on `X`, with `P^N` itself handled through `G(2, N+1)`.
fn line_family(ci: &CompleteIntersection) -> Result<LineCount> {
    if ci.codim() > 0 {
        return count_lines(ci);
    }
    Ok(match ci.ambient() {
        1 => LineCount::Finite { count: BigInt::one() },
        n => LineCount::PositiveDimensionalFamily {
            dim: 2 * (n - 1),
            nonempty: true,
        },
    })
}

fn has_lines(family: &LineCount) -> bool {
    match family {
        LineCount::Finite { count } => count.is_positive(),
        LineCount::PositiveDimensionalFamily { nonempty, .. } => *nonempty,
        LineCount::Empty => false,
    }
}

pub fn analyze(ci: &CompleteIntersection) -> Result<EmbeddingOrderReport> {
    let dim = check_positive_dim(ci)?;
    let fano = is_fano(ci);
    let line_family = line_family(ci)?;
    let family_through_point = if ci.codim() == 0 {
        Some(ci.ambient() - 1)
    } else {
        line_family_through_point(ci)?
    };

    let curve_exception = fano && is_plane_conic(ci);
    let jet_order = (fano && !curve_exception)
        .then(|| (u64::from(ci.ambient()) + 1 - ci.degree_sum()) as u32);
    let contains_line = if dim == 1 {
        None
    } else if fano {
        Some(true)
    } else {
        Some(has_lines(&line_family))
    };

    let (anticanonical_degree, anticanonical_sections) = if fano {
        let index = (u64::from(ci.ambient()) + 1 - ci.degree_sum()) as u32;
        (Some(anticanonical_degree(ci)?), Some(h0_of_twist(ci, index)))
    } else {
        (None, None)
    };

    Ok(EmbeddingOrderReport {
        variety: ci.clone(),
        is_fano: fano,
        dim,
        jet_order,
        not_spanned_order: jet_order.map(|k| k + 1),
        contains_line,
        line_family,
        family_through_point,
        anticanonical_degree,
        anticanonical_sections,
        curve_exception,
        formula_extrapolated: fano && dim == 1 && !curve_exception,
    })
}

/// `(-K_X)^{dim X} = (N + 1 - Σ d_i)^{N-r} · ∏ d_i`.
pub fn anticanonical_degree(ci: &CompleteIntersection) -> Result<BigInt> {
    let dim = check_positive_dim(ci)?;
    if !is_fano(ci) {
        return Err(Error::NotFano {
            ambient: ci.ambient(),
            degree_sum: ci.degree_sum(),
        });
    }
    let k = BigInt::from(u64::from(ci.ambient()) + 1 - ci.degree_sum());
    Ok(num_traits::pow(k, dim as usize) * ci.degree())
}

fn binomial(n: i64, k: u32) -> BigInt {
    if n < i64::from(k) || n < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..i64::from(k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `h^0(O_X(t))`: the degree-`t` coefficient of the Hilbert series
/// `∏(1 - x^{d_i}) / (1 - x)^{N+1}`.
pub fn h0_of_twist(ci: &CompleteIntersection, t: u32) -> BigInt {
    // signed counts of subsets S by Σ_{i∈S} d_i, truncated at t
    let t = t as usize;
    let mut numerator = vec![BigInt::zero(); t + 1];
    numerator[0] = BigInt::one();
    for &d in ci.degrees() {
        let d = d as usize;
        for s in (d..=t).rev() {
            let shifted = numerator[s - d].clone();
            numerator[s] -= shifted;
        }
    }
    let n = ci.ambient();
    numerator
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(s, c)| c * binomial(i64::from(n) + (t - s) as i64, n))
        .sum()
}
