//! Lines on a generic complete intersection `X ⊂ P^N`.
//!
//! A hypersurface of degree `d` induces a section of `Sym^d F` on
//! `G(2, N+1)` vanishing exactly at the lines it contains, so the lines on
//! `X` are cut out by the product of the top Chern classes
//! `c_{d_i+1}(Sym^{d_i} F)`. All counts are expected counts with
//! multiplicity, valid for generic members.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::chern::sym_top_chern;
use crate::error::{Error, Result};
use crate::schubert::{from_chern_poly, CohomologyElement};

/// `X ⊂ P^N` cut out by hypersurfaces of the given degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompleteIntersection {
    #[serde(with = "crate::decimal")]
    ambient: u32,
    #[serde(with = "crate::decimal::vec")]
    degrees: Vec<u32>,
}

impl CompleteIntersection {
    /// Requires `N >= 1` and every degree `>= 1`. The empty degree list is
    /// `P^N` itself.
    pub fn new(ambient: u32, degrees: impl Into<Vec<u32>>) -> Result<Self> {
        let degrees = degrees.into();
        if ambient == 0 {
            return Err(Error::InvalidCompleteIntersection(
                "ambient dimension must be at least 1".into(),
            ));
        }
        if let Some(d) = degrees.iter().find(|&&d| d == 0) {
            return Err(Error::InvalidCompleteIntersection(format!(
                "hypersurface degree must be at least 1, got {d}"
            )));
        }
        Ok(Self { ambient, degrees })
    }

    /// `N`
    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// `r`, the number of hypersurfaces.
    pub fn codim(&self) -> usize {
        self.degrees.len()
    }

    /// `N - r`, negative when over-determined.
    pub fn dim(&self) -> i64 {
        i64::from(self.ambient) - self.degrees.len() as i64
    }

    pub fn degree_sum(&self) -> u64 {
        self.degrees.iter().map(|&d| u64::from(d)).sum()
    }

    /// `∏ d_i`, the degree of `X` in `P^N`.
    pub fn degree(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }

    /// Expected dimension of the Fano scheme of lines,
    /// `2(N-1) - Σ(d_i + 1)`.
    pub fn expected_line_dim(&self) -> i64 {
        2 * (i64::from(self.ambient) - 1) - (self.degree_sum() as i64 + self.codim() as i64)
    }

    /// `Σ d_i <= 2N - 2 - r`.
    pub fn satisfies_line_criterion(&self) -> bool {
        (self.degree_sum() as i64) <= 2 * i64::from(self.ambient) - 2 - self.codim() as i64
    }
}

impl fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return write!(f, "P^{}", self.ambient);
        }
        let degs: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(f, "X({}) ⊂ P^{}", degs.join(","), self.ambient)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LineCount {
    Finite {
        #[serde(with = "crate::decimal")]
        count: BigInt,
    },
    PositiveDimensionalFamily {
        #[serde(with = "crate::decimal")]
        dim: u32,
        nonempty: bool,
    },
    Empty,
}

impl fmt::Display for LineCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineCount::Finite { count } if count.is_one() => write!(f, "1 line"),
            LineCount::Finite { count } => write!(f, "{count} lines"),
            LineCount::PositiveDimensionalFamily { dim, nonempty: true } => {
                write!(f, "{dim}-dimensional family of lines")
            }
            LineCount::PositiveDimensionalFamily { dim, nonempty: false } => {
                write!(f, "no lines (expected dimension {dim}, class vanishes)")
            }
            LineCount::Empty => write!(f, "no lines"),
        }
    }
}

/// `∏ c_{d_i+1}(Sym^{d_i} F)` in `H*(G(2, N+1))`.
pub fn lines_class(ci: &CompleteIntersection) -> Result<CohomologyElement> {
    if ci.degrees.is_empty() {
        return Err(Error::NoHypersurfaces);
    }
    let m = ci.ambient + 1;
    let mut class = CohomologyElement::one(m)?;
    for &d in &ci.degrees {
        class = class.mul(&from_chern_poly(&sym_top_chern(d)?, m)?)?;
        if class.is_zero() {
            break;
        }
    }
    Ok(class)
}

/// Lines on a generic `X`: a finite count when the expected dimension is
/// zero, otherwise the family dimension and whether the family is nonempty.
///
/// Nonemptiness is decided by the inequality `Σ d_i <= 2N - 2 - r` and
/// cross-checked against the class itself; disagreement panics.
pub fn count_lines(ci: &CompleteIntersection) -> Result<LineCount> {
    if ci.degrees.is_empty() {
        return Err(Error::NoHypersurfaces);
    }
    if ci.dim() < 1 {
        return Err(Error::NotPositiveDimensional {
            ambient: ci.ambient,
            codim: ci.codim(),
        });
    }
    let delta = ci.expected_line_dim();
    if delta < 0 {
        return Ok(LineCount::Empty);
    }
    let class = lines_class(ci)?;
    let by_criterion = ci.satisfies_line_criterion();
    assert_eq!(
        by_criterion,
        !class.is_zero(),
        "line criterion and lines class disagree for {ci}"
    );
    if delta == 0 {
        let count = class.integrate();
        if count == BigInt::from(0) {
            return Ok(LineCount::Empty);
        }
        return Ok(LineCount::Finite { count });
    }
    Ok(LineCount::PositiveDimensionalFamily {
        dim: delta as u32,
        nonempty: by_criterion,
    })
}

/// Dimension `N - Σ d_i - 1` of the space of lines through a general point,
/// or `None` when `N <= Σ d_i`.
pub fn line_family_through_point(ci: &CompleteIntersection) -> Result<Option<u32>> {
    if ci.degrees.is_empty() {
        return Err(Error::NoHypersurfaces);
    }
    let n = u64::from(ci.ambient);
    let sum = ci.degree_sum();
    Ok((n > sum).then(|| (n - sum - 1) as u32))
}
