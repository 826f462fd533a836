//! Classified pairs `(X, L)` with `L` k-very ample, `k >= 2`: Fano threefolds
//! with `L = -K_X`, and Mukai varieties `K_X = -(n-2)L` of dimension 4 and 5.
//!
//! Every entry carries a [`Construction`] from which its degree, section
//! count and canonical class are recomputed by [`verify_all`]. Complete
//! intersections in projective space go through [`crate::fano_ci`]; the
//! others use the standard intersection rings of their constructions.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bounds::{self, box_product_order, PolarizedInvariants};
use crate::error::{Error, Result};
use crate::fano_ci::{analyze, h0_of_twist};
use crate::lines::CompleteIntersection;
use crate::schubert::{linear_section_hilbert_function, plucker_degree};

/// How `X` and `L` are built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    /// `X ⊂ P^N` cut by hypersurfaces of the given degrees, `L = O_X(twist)`.
    ProjectiveCompleteIntersection {
        #[serde(with = "crate::decimal")]
        ambient: u32,
        #[serde(with = "crate::decimal::vec")]
        degrees: Vec<u32>,
        #[serde(with = "crate::decimal")]
        twist: u32,
    },
    /// `X ⊂ P^{n_1} × … × P^{n_s}` cut by hypersurfaces of the given
    /// multidegrees, `L = O(t_1, …, t_s)` restricted.
    MultiprojectiveCompleteIntersection {
        #[serde(with = "crate::decimal::vec")]
        factors: Vec<u32>,
        hypersurfaces: Vec<Multidegree>,
        #[serde(with = "crate::decimal::vec")]
        twists: Vec<u32>,
    },
    /// `P^n` blown up at a point, `L = aH - bE`.
    PointBlowup {
        #[serde(with = "crate::decimal")]
        n: u32,
        #[serde(with = "crate::decimal")]
        hyperplane: u32,
        #[serde(with = "crate::decimal")]
        exceptional: u32,
    },
    /// Double cover `p: X -> P^n` branched along a hypersurface of even
    /// degree, `L = p^* O(twist)`.
    DoubleCover {
        #[serde(with = "crate::decimal")]
        n: u32,
        #[serde(with = "crate::decimal")]
        branch_degree: u32,
        #[serde(with = "crate::decimal")]
        twist: u32,
    },
    /// General codimension-`codim` linear section of `G(2, m)` in the
    /// Plücker embedding, `L = O_X(twist)`.
    GrassmannianLinearSection {
        #[serde(with = "crate::decimal")]
        m: u32,
        #[serde(with = "crate::decimal")]
        codim: u32,
        #[serde(with = "crate::decimal")]
        twist: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multidegree(#[serde(with = "crate::decimal::vec")] pub Vec<u32>);

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Truncated ring `Z[h_1..h_s] / (h_i^{n_i+1})`.
struct MultiprojectiveRing<'a> {
    factors: &'a [u32],
}

type RingElement = BTreeMap<Vec<u32>, BigInt>;

impl MultiprojectiveRing<'_> {
    fn one(&self) -> RingElement {
        BTreeMap::from([(vec![0; self.factors.len()], BigInt::one())])
    }

    fn mul_linear(&self, x: &RingElement, coeffs: &[u32]) -> RingElement {
        let mut out = RingElement::new();
        for (exps, c) in x {
            for (i, &a) in coeffs.iter().enumerate() {
                if a == 0 || exps[i] >= self.factors[i] {
                    continue;
                }
                let mut e = exps.clone();
                e[i] += 1;
                *out.entry(e).or_insert_with(BigInt::zero) += c * BigInt::from(a);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn top(&self, x: &RingElement) -> BigInt {
        x.get(self.factors).cloned().unwrap_or_default()
    }
}

impl Construction {
    pub fn dim(&self) -> i64 {
        match self {
            Construction::ProjectiveCompleteIntersection { ambient, degrees, .. } => {
                i64::from(*ambient) - degrees.len() as i64
            }
            Construction::MultiprojectiveCompleteIntersection { factors, hypersurfaces, .. } => {
                factors.iter().map(|&n| i64::from(n)).sum::<i64>() - hypersurfaces.len() as i64
            }
            Construction::PointBlowup { n, .. } | Construction::DoubleCover { n, .. } => i64::from(*n),
            Construction::GrassmannianLinearSection { m, codim, .. } => {
                2 * (i64::from(*m) - 2) - i64::from(*codim)
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Hypothesis(msg));
        match self {
            Construction::MultiprojectiveCompleteIntersection { factors, hypersurfaces, twists } => {
                if twists.len() != factors.len()
                    || hypersurfaces.iter().any(|h| h.0.len() != factors.len())
                {
                    return bad("multidegree length differs from the number of factors".into());
                }
            }
            Construction::PointBlowup { hyperplane, exceptional, .. } => {
                if exceptional > hyperplane {
                    return bad("blow-up polarization needs b <= a".into());
                }
            }
            Construction::DoubleCover { branch_degree, .. } => {
                if branch_degree % 2 != 0 {
                    return bad("double cover branch degree must be even".into());
                }
            }
            Construction::GrassmannianLinearSection { m, .. } => {
                if *m < 2 {
                    return bad("Grassmannian parameter must be at least 2".into());
                }
            }
            Construction::ProjectiveCompleteIntersection { .. } => {}
        }
        if self.dim() < 1 {
            return bad("construction is not positive-dimensional".into());
        }
        Ok(())
    }

    /// `L^n` from the intersection ring of the construction.
    pub fn degree(&self) -> Result<BigInt> {
        self.validate()?;
        let n = self.dim() as u32;
        Ok(match self {
            Construction::ProjectiveCompleteIntersection { degrees, twist, .. } => {
                num_traits::pow(BigInt::from(*twist), n as usize)
                    * degrees.iter().map(|&d| BigInt::from(d)).product::<BigInt>()
            }
            Construction::MultiprojectiveCompleteIntersection { factors, hypersurfaces, twists } => {
                let ring = MultiprojectiveRing { factors };
                let mut x = ring.one();
                for h in hypersurfaces {
                    x = ring.mul_linear(&x, &h.0);
                }
                for _ in 0..n {
                    x = ring.mul_linear(&x, twists);
                }
                ring.top(&x)
            }
            // (aH - bE)^n with E^n = (-1)^{n-1}
            Construction::PointBlowup { hyperplane, exceptional, .. } => {
                num_traits::pow(BigInt::from(*hyperplane), n as usize)
                    - num_traits::pow(BigInt::from(*exceptional), n as usize)
            }
            Construction::DoubleCover { twist, .. } => {
                2 * num_traits::pow(BigInt::from(*twist), n as usize)
            }
            Construction::GrassmannianLinearSection { m, twist, .. } => {
                plucker_degree(*m)? * num_traits::pow(BigInt::from(*twist), n as usize)
            }
        })
    }

    /// `h^0(L)`.
    pub fn sections(&self) -> Result<BigInt> {
        self.validate()?;
        match self {
            Construction::ProjectiveCompleteIntersection { ambient, degrees, twist } => {
                let ci = CompleteIntersection::new(*ambient, degrees.clone())?;
                Ok(h0_of_twist(&ci, *twist))
            }
            Construction::MultiprojectiveCompleteIntersection { factors, hypersurfaces, twists } => {
                // Koszul resolution + Künneth; every twist stays in the range
                // where higher cohomology on the product vanishes.
                let mut total = BigInt::zero();
                for mask in 0u64..(1 << hypersurfaces.len()) {
                    let mut shifted: Vec<i64> = twists.iter().map(|&t| i64::from(t)).collect();
                    for (j, h) in hypersurfaces.iter().enumerate() {
                        if mask >> j & 1 == 1 {
                            for (s, &e) in shifted.iter_mut().zip(&h.0) {
                                *s -= i64::from(e);
                            }
                        }
                    }
                    if shifted.iter().zip(factors).any(|(&a, &n)| a < -i64::from(n)) {
                        return Err(Error::Hypothesis(
                            "twist outside the vanishing range of the Koszul resolution".into(),
                        ));
                    }
                    let term: BigInt = shifted
                        .iter()
                        .zip(factors)
                        .map(|(&a, &n)| binomial(i64::from(n) + a, i64::from(n)))
                        .product();
                    if mask.count_ones() % 2 == 0 {
                        total += term;
                    } else {
                        total -= term;
                    }
                }
                Ok(total)
            }
            // degree-a hypersurfaces with multiplicity >= b at the point
            Construction::PointBlowup { n, hyperplane, exceptional } => {
                let n = i64::from(*n);
                Ok(binomial(n + i64::from(*hyperplane), n)
                    - binomial(n + i64::from(*exceptional) - 1, n))
            }
            // p_* O_X = O ⊕ O(-branch/2)
            Construction::DoubleCover { n, branch_degree, twist } => {
                let n = i64::from(*n);
                let t = i64::from(*twist);
                Ok(binomial(n + t, n) + binomial(n + t - i64::from(branch_degree / 2), n))
            }
            Construction::GrassmannianLinearSection { m, codim, twist } => {
                linear_section_hilbert_function(*m, *codim, *twist)
            }
        }
    }

    /// Whether `K_X = -(n-2) L`, from adjunction on the construction.
    pub fn is_mukai(&self) -> Result<bool> {
        self.validate()?;
        let n = self.dim();
        Ok(match self {
            Construction::ProjectiveCompleteIntersection { ambient, degrees, twist } => {
                let index = i64::from(*ambient) + 1 - degrees.iter().map(|&d| i64::from(d)).sum::<i64>();
                index == (n - 2) * i64::from(*twist)
            }
            Construction::MultiprojectiveCompleteIntersection { factors, hypersurfaces, twists } => {
                factors.iter().enumerate().all(|(i, &ni)| {
                    let index = i64::from(ni) + 1
                        - hypersurfaces.iter().map(|h| i64::from(h.0[i])).sum::<i64>();
                    index == (n - 2) * i64::from(twists[i])
                })
            }
            // K = -(n+1)H + (n-1)E
            Construction::PointBlowup { hyperplane, exceptional, .. } => {
                n + 1 == (n - 2) * i64::from(*hyperplane) && n - 1 == (n - 2) * i64::from(*exceptional)
            }
            // K_X = p^* O(-n-1+branch/2)
            Construction::DoubleCover { branch_degree, twist, .. } => {
                n + 1 - i64::from(branch_degree / 2) == (n - 2) * i64::from(*twist)
            }
            // K_G = O(-m)
            Construction::GrassmannianLinearSection { m, codim, twist } => {
                i64::from(*m) - i64::from(*codim) == (n - 2) * i64::from(*twist)
            }
        })
    }

    /// Order of `L` implied by the construction alone, where one is
    /// immediate: `O(t)` restricted from projective space is `t`-very ample,
    /// and box products take the minimum order of their factors.
    pub fn implied_order(&self) -> Option<u32> {
        match self {
            Construction::ProjectiveCompleteIntersection { twist, .. } => Some(*twist),
            Construction::MultiprojectiveCompleteIntersection { twists, .. } => {
                twists.iter().copied().reduce(box_product_order)
            }
            _ => None,
        }
    }
}

pub const NOT_JET_AMPLE_FLAG: &str = "2-very ample but not 2-jet ample";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    #[serde(with = "crate::decimal")]
    pub dim: u32,
    pub description: String,
    pub ambient: String,
    pub polarization: String,
    #[serde(with = "crate::decimal::option")]
    pub k_jet: Option<u32>,
    #[serde(with = "crate::decimal")]
    pub k_very_ample: u32,
    #[serde(with = "crate::decimal")]
    pub k_spanned: u32,
    /// `L^n`
    #[serde(with = "crate::decimal")]
    pub degree: BigInt,
    #[serde(with = "crate::decimal")]
    pub h0: BigInt,
    pub derivation: String,
    pub source: String,
    pub flags: Vec<String>,
    pub construction: Construction,
}

#[allow(clippy::too_many_arguments)]
fn entry(
    id: &str,
    description: &str,
    ambient: &str,
    polarization: &str,
    k: u32,
    degree: u64,
    h0: u64,
    derivation: &str,
    source: &str,
    construction: Construction,
) -> CatalogEntry {
    CatalogEntry {
        id: id.into(),
        dim: construction.dim() as u32,
        description: description.into(),
        ambient: ambient.into(),
        polarization: polarization.into(),
        k_jet: Some(k),
        k_very_ample: k,
        k_spanned: k,
        degree: degree.into(),
        h0: h0.into(),
        derivation: derivation.into(),
        source: source.into(),
        flags: Vec::new(),
        construction,
    }
}

fn pci(ambient: u32, degrees: &[u32], twist: u32) -> Construction {
    Construction::ProjectiveCompleteIntersection {
        ambient,
        degrees: degrees.to_vec(),
        twist,
    }
}

fn mpci(factors: &[u32], hypersurfaces: &[&[u32]], twists: &[u32]) -> Construction {
    Construction::MultiprojectiveCompleteIntersection {
        factors: factors.to_vec(),
        hypersurfaces: hypersurfaces.iter().map(|h| Multidegree(h.to_vec())).collect(),
        twists: twists.to_vec(),
    }
}

fn build_catalog() -> Vec<CatalogEntry> {
    const FANO: &str = "fano-threefolds-k-very-ample";
    const MUKAI: &str = "mukai-dim-4-5-k-very-ample";
    let mut items = vec![
        entry(
            "fano3-1",
            "divisor of bidegree (1,1) in P2 x P2",
            "P2 x P2",
            "O_X(2,2)",
            2,
            48,
            27,
            "deg: (2h1+2h2)^3 (h1+h2) on P2xP2 = 8*6; h0: h0(O(2,2)) - h0(O(1,1)) = 36 - 9",
            FANO,
            mpci(&[2, 2], &[&[1, 1]], &[2, 2]),
        ),
        entry(
            "fano3-2",
            "P1 x P2",
            "P1 x P2",
            "O(2) ⊠ O(3)",
            2,
            54,
            30,
            "deg: 3 * (2h1)(3h2)^2 = 54; h0: Künneth 3 * 10",
            FANO,
            mpci(&[1, 2], &[], &[2, 3]),
        ),
        entry(
            "fano3-3",
            "V7, the blow-up of P3 at a point",
            "Bl_p P3",
            "2(2H - E)",
            2,
            56,
            31,
            "deg: (4H-2E)^3 = 64 - 8 with E^3 = 1; h0: quartics with a double point, 35 - 4",
            FANO,
            Construction::PointBlowup {
                n: 3,
                hyperplane: 4,
                exceptional: 2,
            },
        ),
        entry(
            "fano3-4",
            "P1 x P1 x P1",
            "P1 x P1 x P1",
            "O(2) ⊠ O(2) ⊠ O(2)",
            2,
            48,
            27,
            "deg: 3! * 2^3; h0: Künneth 3^3",
            FANO,
            mpci(&[1, 1, 1], &[], &[2, 2, 2]),
        ),
        entry(
            "fano3-5",
            "projective space P3",
            "P3",
            "O(4)",
            4,
            64,
            35,
            "complete intersection recomputation: 4^3; binom(7,3)",
            FANO,
            pci(3, &[], 4),
        ),
        entry(
            "fano3-6",
            "hyperquadric in P4",
            "P4",
            "O_X(3)",
            3,
            54,
            30,
            "complete intersection recomputation: 3^3 * 2; binom(7,4) - binom(5,4)",
            FANO,
            pci(4, &[2], 3),
        ),
        entry(
            "fano3-7",
            "cubic hypersurface in P4",
            "P4",
            "O_X(2)",
            2,
            24,
            15,
            "complete intersection recomputation: 2^3 * 3; binom(6,4)",
            FANO,
            pci(4, &[3], 2),
        ),
        entry(
            "fano3-8",
            "complete intersection of two quadrics in P5",
            "P5",
            "O_X(2)",
            2,
            32,
            19,
            "complete intersection recomputation: 2^3 * 4; 21 - 2*1",
            FANO,
            pci(5, &[2, 2], 2),
        ),
        entry(
            "fano3-9",
            "double cover of P3 branched along a quartic",
            "P3 (double cover)",
            "p^* O(2)",
            2,
            16,
            11,
            "deg: covering degree 2 * 2^3; h0: H0(O_P3(2)) ⊕ H0(O_P3) = 10 + 1",
            FANO,
            Construction::DoubleCover {
                n: 3,
                branch_degree: 4,
                twist: 2,
            },
        ),
        entry(
            "fano3-10",
            "section of G(2,5) by a linear subspace of codimension 3",
            "G(2,5) ⊂ P9",
            "O_X(2)",
            2,
            40,
            23,
            "deg: Plücker degree 5 of G(2,5) * 2^3; h0: third difference of the G(2,5) \
             Hilbert function 50 - 3*10 + 3*1",
            FANO,
            Construction::GrassmannianLinearSection {
                m: 5,
                codim: 3,
                twist: 2,
            },
        ),
        entry(
            "mukai-1",
            "hyperquadric in P5",
            "P5",
            "O_Q(2)",
            2,
            32,
            20,
            "complete intersection recomputation: 2^4 * 2; binom(7,5) - 1",
            MUKAI,
            pci(5, &[2], 2),
        ),
        entry(
            "mukai-2",
            "projective space P5",
            "P5",
            "O(2)",
            2,
            32,
            21,
            "complete intersection recomputation: 2^5; binom(7,5)",
            MUKAI,
            pci(5, &[], 2),
        ),
    ];
    let double_cover = items.iter_mut().find(|e| e.id == "fano3-9").expect("present");
    double_cover.k_jet = Some(1);
    double_cover.flags.push(NOT_JET_AMPLE_FLAG.into());
    items
}

/// The shipped catalog.
pub fn builtin() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

pub const CATALOG_SIZE: usize = 12;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryFilter {
    pub dim: Option<u32>,
    pub k_very_ample: Option<u32>,
    pub id: Option<String>,
}

impl EntryFilter {
    pub fn matches(&self, e: &CatalogEntry) -> bool {
        self.dim.is_none_or(|n| e.dim == n)
            && self.k_very_ample.is_none_or(|k| e.k_very_ample == k)
            && self.id.as_ref().is_none_or(|id| &e.id == id)
    }
}

/// Catalog entries matching `filter`, in catalog order.
pub fn entries(filter: &EntryFilter) -> Vec<CatalogEntry> {
    builtin().iter().filter(|e| filter.matches(e)).cloned().collect()
}

pub fn to_json(entries: &[CatalogEntry]) -> serde_json::Value {
    serde_json::to_value(entries).expect("catalog entries serialize")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyFailure {
    pub id: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    #[serde(with = "crate::decimal")]
    pub entries_checked: usize,
    pub failures: Vec<VerifyFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn has_failure(&self, id: &str, message: &str) -> bool {
        self.failures
            .iter()
            .any(|f| f.id == id && f.message.starts_with(message))
    }
}

pub const DEGREE_MISMATCH_CI: &str = "degree mismatch vs fano_ci";
pub const H0_MISMATCH_CI: &str = "h0 mismatch vs fano_ci";
pub const DEGREE_MISMATCH: &str = "degree mismatch vs construction";
pub const H0_MISMATCH: &str = "h0 mismatch vs construction";
pub const JET_ORDER_MISMATCH: &str = "order mismatch vs fano_ci jet order";
pub const IMPLIED_ORDER_MISMATCH: &str = "order mismatch vs construction";
pub const DOUBLE_COVER_FLAG: &str = "double-cover flag violated";
pub const JET_GAP: &str = "unexpected gap between jet and very-ample order";
pub const ORDER_CHAIN: &str = "order chain k_jet <= k_very_ample <= k_spanned violated";
pub const SPANNED_ORDER: &str = "k_spanned differs from k_very_ample";
pub const NOT_MUKAI: &str = "canonical class is not -(n-2)L";
pub const DIM_MISMATCH: &str = "dimension mismatch vs construction";
pub const BOUNDS_FAILED: &str = "bounds check failed";
pub const DUPLICATE_ID: &str = "duplicate id";
pub const CONSTRUCTION_INVALID: &str = "construction invalid";

fn verify_entry(e: &CatalogEntry, fail: &mut dyn FnMut(&str, String)) {
    let c = &e.construction;
    if let Err(err) = c.validate() {
        fail(CONSTRUCTION_INVALID, format!("{CONSTRUCTION_INVALID}: {err}"));
        return;
    }
    if c.dim() != i64::from(e.dim) {
        fail(DIM_MISMATCH, format!("{DIM_MISMATCH}: stored {}, construction {}", e.dim, c.dim()));
    }

    // (a) degree and section bounds at the stored order
    match PolarizedInvariants::new(e.dim, e.k_very_ample, e.degree.clone(), Some(e.h0.clone()))
        .and_then(|inv| bounds::check(&inv))
    {
        Ok(v) if v.passed() => {}
        Ok(v) => fail(BOUNDS_FAILED, format!("{BOUNDS_FAILED}: {}", v.failures.join("; "))),
        Err(err) => fail(BOUNDS_FAILED, format!("{BOUNDS_FAILED}: {err}")),
    }

    // (b) recomputed invariants
    let is_ci = matches!(c, Construction::ProjectiveCompleteIntersection { .. });
    let (deg_msg, h0_msg) = if is_ci {
        (DEGREE_MISMATCH_CI, H0_MISMATCH_CI)
    } else {
        (DEGREE_MISMATCH, H0_MISMATCH)
    };
    match c.degree() {
        Ok(d) if d == e.degree => {}
        Ok(d) => fail(deg_msg, format!("{deg_msg}: stored {}, recomputed {d}", e.degree)),
        Err(err) => fail(deg_msg, format!("{deg_msg}: {err}")),
    }
    match c.sections() {
        Ok(h) if h == e.h0 => {}
        Ok(h) => fail(h0_msg, format!("{h0_msg}: stored {}, recomputed {h}", e.h0)),
        Err(err) => fail(h0_msg, format!("{h0_msg}: {err}")),
    }
    match c.is_mukai() {
        Ok(true) => {}
        _ => fail(NOT_MUKAI, NOT_MUKAI.to_string()),
    }

    // (c) orders implied by the construction
    if let Some(order) = c.implied_order() {
        if order != e.k_very_ample {
            fail(
                IMPLIED_ORDER_MISMATCH,
                format!("{IMPLIED_ORDER_MISMATCH}: stored {}, implied {order}", e.k_very_ample),
            );
        }
    }
    if let Construction::ProjectiveCompleteIntersection { ambient, degrees, .. } = c {
        // L = -K_X exactly for threefolds, where the jet order is known
        if e.dim == 3 {
            let jet = CompleteIntersection::new(*ambient, degrees.clone())
                .and_then(|ci| analyze(&ci))
                .ok()
                .and_then(|r| r.jet_order);
            if jet != e.k_jet {
                fail(JET_ORDER_MISMATCH, format!("{JET_ORDER_MISMATCH}: stored {:?}, analyzed {jet:?}", e.k_jet));
            }
        }
    }

    // (d) jet / very ample / spanned structure
    if let Some(j) = e.k_jet {
        if j > e.k_very_ample || e.k_very_ample > e.k_spanned {
            fail(ORDER_CHAIN, ORDER_CHAIN.to_string());
        }
    }
    if e.k_spanned != e.k_very_ample {
        fail(SPANNED_ORDER, SPANNED_ORDER.to_string());
    }
    let is_double_cover = matches!(c, Construction::DoubleCover { .. });
    if is_double_cover {
        let ok = e.k_very_ample == 2
            && e.k_jet == Some(1)
            && e.flags.iter().any(|f| f == NOT_JET_AMPLE_FLAG);
        if !ok {
            fail(DOUBLE_COVER_FLAG, format!("{DOUBLE_COVER_FLAG}: must be {NOT_JET_AMPLE_FLAG}"));
        }
    } else if e.k_jet != Some(e.k_very_ample) {
        fail(JET_GAP, JET_GAP.to_string());
    }
}

/// Checks a list of entries against every computational module.
pub fn verify_entries(items: &[CatalogEntry]) -> VerifyReport {
    let mut failures = Vec::new();
    let mut seen = HashSet::new();
    for e in items {
        if !seen.insert(e.id.as_str()) {
            failures.push(VerifyFailure {
                id: e.id.clone(),
                message: DUPLICATE_ID.into(),
            });
        }
        verify_entry(e, &mut |_, message| {
            failures.push(VerifyFailure {
                id: e.id.clone(),
                message,
            })
        });
    }
    VerifyReport {
        entries_checked: items.len(),
        failures,
    }
}

/// [`verify_entries`] on the shipped catalog.
pub fn verify_all() -> VerifyReport {
    let mut report = verify_entries(builtin());
    if builtin().len() != CATALOG_SIZE {
        report.failures.push(VerifyFailure {
            id: "*".into(),
            message: format!("expected {CATALOG_SIZE} entries, found {}", builtin().len()),
        });
    }
    report
}

/// One branch of the adjunction-theoretic structure of `(X, L)` with `L`
/// `k`-very ample on an `n`-fold, `n >= 3`, `k >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionOutcome {
    pub case_id: String,
    pub constraints: String,
    pub description: String,
}

struct CaseRule {
    id: &'static str,
    constraints: &'static str,
    description: &'static str,
    admits: fn(u32, u32) -> bool,
}

// A pair that is k-very ample is j-very ample for every j <= k, so a case
// realized at order k is listed for every order up to k.
const CASES: &[CaseRule] = &[
    CaseRule {
        id: "i",
        constraints: "n = 3, k = 2",
        description: "(P3, O(2))",
        admits: |n, k| n == 3 && k == 2,
    },
    CaseRule {
        id: "ii",
        constraints: "n = 3, k <= 3",
        description: "(P3, O(3))",
        admits: |n, k| n == 3 && k <= 3,
    },
    CaseRule {
        id: "iii",
        constraints: "n = 4, k = 2",
        description: "(P4, O(2))",
        admits: |n, k| n == 4 && k == 2,
    },
    CaseRule {
        id: "iv",
        constraints: "n = 3, k = 2",
        description: "(Q, O_Q(2)), Q a hyperquadric in P4",
        admits: |n, k| n == 3 && k == 2,
    },
    CaseRule {
        id: "v",
        constraints: "n = 3, k = 2",
        description: "morphism onto a smooth curve C with 2K + 3L the pullback of an ample \
                      bundle on C, every fiber (P2, O(2))",
        admits: |n, k| n == 3 && k == 2,
    },
    CaseRule {
        id: "vi",
        constraints: "n in {4, 5} and k = 2, or n = 3 and k <= 4",
        description: "Mukai variety, K = -(n-2)L",
        admits: |n, k| ((n == 4 || n == 5) && k == 2) || (n == 3 && k <= 4),
    },
    CaseRule {
        id: "vii",
        constraints: "n = 4, k = 2",
        description: "Del Pezzo fibration over a curve, general fiber (P3, O(2))",
        admits: |n, k| n == 4 && k == 2,
    },
    CaseRule {
        id: "second-reduction",
        constraints: "any n >= 3, k >= 2",
        description: "first reduction is an isomorphism and the second reduction (Z, D) exists",
        admits: |_, _| true,
    },
    CaseRule {
        id: "1",
        constraints: "n >= 4",
        description: "second reduction map is an isomorphism X ≅ Z",
        admits: |n, _| n >= 4,
    },
    CaseRule {
        id: "2",
        constraints: "n = 3, k = 2",
        description: "second reduction contracts divisors D ≅ P2 with L_D = O(2) and \
                      O_D(D) = O(-1); Z is smooth",
        admits: |n, k| n == 3 && k == 2,
    },
];

/// Outcomes whose integer constraints admit `(n, k)`, in table order.
pub fn adjunction_cases(n: u32, k: u32) -> Result<Vec<AdjunctionOutcome>> {
    if n < 3 || k < 2 {
        return Err(Error::Hypothesis(format!(
            "adjunction table needs n >= 3 and k >= 2, got n = {n}, k = {k}"
        )));
    }
    Ok(CASES
        .iter()
        .filter(|c| (c.admits)(n, k))
        .map(|c| AdjunctionOutcome {
            case_id: c.id.into(),
            constraints: c.constraints.into(),
            description: c.description.into(),
        })
        .collect())
}

/// Exceptions to ampleness of `K + (n-2)L` for `n >= 4`: the special cases
/// among [`adjunction_cases`]. Empty means `K + (n-2)L` is ample.
pub fn adjoint_ampleness_exceptions(n: u32, k: u32) -> Result<Vec<AdjunctionOutcome>> {
    if n < 4 {
        return Err(Error::Hypothesis(format!(
            "adjoint ampleness statement needs n >= 4, got n = {n}"
        )));
    }
    Ok(adjunction_cases(n, k)?
        .into_iter()
        .filter(|c| matches!(c.case_id.as_str(), "iii" | "vi" | "vii"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[CatalogEntry]) -> Vec<&str> {
        v.iter().map(|e| e.id.as_str()).collect()
    }

    #[test]
    fn filters() {
        let k4 = entries(&EntryFilter { k_very_ample: Some(4), ..Default::default() });
        assert_eq!(ids(&k4), vec!["fano3-5"]);
        let k3 = entries(&EntryFilter { k_very_ample: Some(3), ..Default::default() });
        assert_eq!(ids(&k3), vec!["fano3-6"]);
        let n5 = entries(&EntryFilter { dim: Some(5), ..Default::default() });
        assert_eq!(ids(&n5), vec!["mukai-2"]);
        assert_eq!(entries(&EntryFilter::default()).len(), CATALOG_SIZE);
    }

    #[test]
    fn shipped_catalog_verifies() {
        let report = verify_all();
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(report.entries_checked, 12);
    }

    #[test]
    fn injected_degree_fault() {
        let mut items = builtin().to_vec();
        items.iter_mut().find(|e| e.id == "fano3-7").unwrap().degree = 23.into();
        let report = verify_entries(&items);
        assert!(report.has_failure("fano3-7", DEGREE_MISMATCH_CI));
    }

    #[test]
    fn injected_jet_flag_fault() {
        let mut items = builtin().to_vec();
        items.iter_mut().find(|e| e.id == "fano3-9").unwrap().k_jet = Some(2);
        let report = verify_entries(&items);
        assert!(report.has_failure("fano3-9", DOUBLE_COVER_FLAG));
    }

    #[test]
    fn grassmannian_section_invariants() {
        let c = Construction::GrassmannianLinearSection { m: 5, codim: 3, twist: 2 };
        assert_eq!(c.degree().unwrap(), 40.into());
        assert_eq!(c.sections().unwrap(), 23.into());
        assert!(c.is_mukai().unwrap());
    }

    #[test]
    fn adjunction_examples() {
        let only_generic = adjunction_cases(3, 5).unwrap();
        assert_eq!(only_generic.len(), 1);
        assert_eq!(only_generic[0].case_id, "second-reduction");

        let n4: Vec<String> = adjunction_cases(4, 2).unwrap().into_iter().map(|c| c.case_id).collect();
        for id in ["iii", "vi", "vii"] {
            assert!(n4.iter().any(|c| c == id));
        }

        let n6: Vec<String> = adjunction_cases(6, 2).unwrap().into_iter().map(|c| c.case_id).collect();
        assert_eq!(n6, vec!["second-reduction", "1"]);

        assert!(adjunction_cases(2, 2).is_err());
        assert!(adjunction_cases(3, 1).is_err());
    }

    #[test]
    fn adjoint_ampleness() {
        assert!(adjoint_ampleness_exceptions(6, 2).unwrap().is_empty());
        assert!(adjoint_ampleness_exceptions(4, 3).unwrap().is_empty());
        assert_eq!(adjoint_ampleness_exceptions(5, 2).unwrap().len(), 1);
        assert!(adjoint_ampleness_exceptions(3, 2).is_err());
    }

    #[test]
    fn json_export_round_trips() {
        let json = to_json(builtin());
        let back: Vec<CatalogEntry> = serde_json::from_value(json.clone()).unwrap();
        assert_eq!(back, builtin());
        assert_eq!(json[0]["degree"], serde_json::json!("48"));
    }
}
