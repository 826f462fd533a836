//! Integral cohomology of the Grassmannian `G(2, m)` of 2-planes in an
//! `m`-dimensional space, in the Schubert basis.
//!
//! Basis classes are partitions `σ_(a,b)` with `m-2 >= a >= b >= 0`, of
//! codimension `a + b`. Elements are kept truncated at all times: any class
//! with `a > m-2` is dropped as soon as it is produced.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chern::{complete_homogeneous, ChernPolynomial};
use crate::error::{Error, Result};

/// Schubert class `σ_(a,b)`; `a >= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SchubertClass {
    a: u32,
    b: u32,
}

impl SchubertClass {
    /// `None` unless `a >= b`.
    pub fn new(a: u32, b: u32) -> Option<Self> {
        (a >= b).then_some(Self { a, b })
    }

    pub fn a(self) -> u32 {
        self.a
    }

    pub fn b(self) -> u32 {
        self.b
    }

    pub fn codim(self) -> u32 {
        self.a + self.b
    }

    /// Whether the class survives in `G(2, m)`.
    pub fn fits(self, m: u32) -> bool {
        m >= 2 && self.a <= m - 2
    }

    /// Poincaré dual `σ_(m-2-b, m-2-a)`; `None` if the class does not fit.
    pub fn dual(self, m: u32) -> Option<Self> {
        self.fits(m).then(|| Self {
            a: m - 2 - self.b,
            b: m - 2 - self.a,
        })
    }

    /// All basis classes of `G(2, m)`.
    pub fn all(m: u32) -> Vec<Self> {
        let top = m.saturating_sub(2);
        (0..=top)
            .flat_map(|a| (0..=a).map(move |b| Self { a, b }))
            .collect()
    }
}

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ({},{})", self.a, self.b)
    }
}

/// Graded integer combination of Schubert classes in `G(2, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyElement {
    m: u32,
    terms: BTreeMap<SchubertClass, BigInt>,
}

fn check_ambient(m: u32) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidAmbient(m));
    }
    Ok(())
}

impl CohomologyElement {
    pub fn zero(m: u32) -> Result<Self> {
        check_ambient(m)?;
        Ok(Self {
            m,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(m: u32) -> Result<Self> {
        Self::basis(m, SchubertClass { a: 0, b: 0 })
    }

    /// The single class `σ_(a,b)`, or zero when it does not fit in `G(2, m)`.
    pub fn basis(m: u32, class: SchubertClass) -> Result<Self> {
        let mut out = Self::zero(m)?;
        out.add_term(class, BigInt::one());
        Ok(out)
    }

    /// Builds an element from `(class, coefficient)` pairs, truncating.
    pub fn from_terms<I>(m: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SchubertClass, BigInt)>,
    {
        let mut out = Self::zero(m)?;
        for (class, coef) in terms {
            out.add_term(class, coef);
        }
        Ok(out)
    }

    fn add_term(&mut self, class: SchubertClass, coef: BigInt) {
        if coef.is_zero() || !class.fits(self.m) {
            return;
        }
        let slot = self.terms.entry(class).or_insert_with(BigInt::zero);
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&class);
        }
    }

    pub fn ambient(&self) -> u32 {
        self.m
    }

    /// Complex dimension of `G(2, m)`.
    pub fn grassmannian_dim(&self) -> u32 {
        2 * (self.m - 2)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, class: SchubertClass) -> BigInt {
        self.terms.get(&class).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SchubertClass, &BigInt)> {
        self.terms.iter()
    }

    /// The part of codimension exactly `codim`.
    pub fn graded_part(&self, codim: u32) -> Self {
        Self {
            m: self.m,
            terms: self
                .terms
                .iter()
                .filter(|(c, _)| c.codim() == codim)
                .map(|(c, v)| (*c, v.clone()))
                .collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_ambient(rhs)?;
        let mut out = self.clone();
        for (c, v) in &rhs.terms {
            out.add_term(*c, v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let mut out = Self {
            m: self.m,
            terms: BTreeMap::new(),
        };
        for (c, v) in &self.terms {
            out.add_term(*c, v * factor);
        }
        out
    }

    fn same_ambient(&self, rhs: &Self) -> Result<()> {
        if self.m != rhs.m {
            return Err(Error::AmbientMismatch(self.m, rhs.m));
        }
        Ok(())
    }

    /// Pieri: `σ_1 · σ_(a,b) = σ_(a+1,b) + σ_(a,b+1)`.
    pub fn mul_sigma1(&self) -> Self {
        let mut out = Self {
            m: self.m,
            terms: BTreeMap::new(),
        };
        for (&SchubertClass { a, b }, v) in &self.terms {
            out.add_term(SchubertClass { a: a + 1, b }, v.clone());
            if b < a {
                out.add_term(SchubertClass { a, b: b + 1 }, v.clone());
            }
        }
        out
    }

    /// Pieri: `σ_(1,1) · σ_(a,b) = σ_(a+1,b+1)`.
    pub fn mul_sigma11(&self) -> Self {
        let mut out = Self {
            m: self.m,
            terms: BTreeMap::new(),
        };
        for (&SchubertClass { a, b }, v) in &self.terms {
            out.add_term(SchubertClass { a: a + 1, b: b + 1 }, v.clone());
        }
        out
    }

    /// Multiplies by `c1^i c2^j`, i.e. `σ_1^i σ_(1,1)^j`.
    fn mul_chern_monomial(&self, i: u32, j: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..j {
            if out.is_zero() {
                return out;
            }
            out = out.mul_sigma11();
        }
        for _ in 0..i {
            if out.is_zero() {
                return out;
            }
            out = out.mul_sigma1();
        }
        out
    }

    /// Multiplies by a polynomial in `c1 = σ_1`, `c2 = σ_(1,1)`.
    pub fn mul_chern(&self, p: &ChernPolynomial) -> Self {
        let mut out = Self {
            m: self.m,
            terms: BTreeMap::new(),
        };
        for (&(i, j), coef) in p.terms() {
            for (c, v) in &self.mul_chern_monomial(i, j).terms {
                out.add_term(*c, v * coef);
            }
        }
        out
    }

    /// Ring product. Each basis class of `rhs` is rewritten as
    /// `σ_(a,b) = c2^b · h_(a-b)(c1, c2)` and applied through the Pieri rules.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.same_ambient(rhs)?;
        let mut out = Self::zero(self.m)?;
        for (&SchubertClass { a, b }, coef) in &rhs.terms {
            let shifted = self.mul_chern_monomial(0, b);
            if shifted.is_zero() {
                continue;
            }
            let prod = shifted.mul_chern(&complete_homogeneous(a - b));
            for (c, v) in &prod.terms {
                out.add_term(*c, v * coef);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Result<Self> {
        let mut acc = Self::one(self.m)?;
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Degree: the coefficient of the point class `σ_(m-2,m-2)`.
    pub fn integrate(&self) -> BigInt {
        let top = self.m - 2;
        self.coefficient(SchubertClass { a: top, b: top })
    }
}

impl fmt::Display for CohomologyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, v)| {
                if v.is_one() {
                    c.to_string()
                } else {
                    format!("{v}*{c}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Substitutes `c1 -> σ_(1,0)`, `c2 -> σ_(1,1)` in `G(2, m)`.
pub fn from_chern_poly(p: &ChernPolynomial, m: u32) -> Result<CohomologyElement> {
    Ok(CohomologyElement::one(m)?.mul_chern(p))
}

/// Degree of `G(2, m)` in its Plücker embedding, `∫ σ_1^{2(m-2)}`.
pub fn plucker_degree(m: u32) -> Result<BigInt> {
    let g = CohomologyElement::one(m)?;
    Ok(g.mul_chern_monomial(2 * (m - 2), 0).integrate())
}

/// `h^0(G(2, m), O(t))` in the Plücker embedding: the dimension of the
/// `GL_m` representation of shape `(t, t)`, by the hook-content formula.
pub fn grassmannian_hilbert_function(m: u32, t: u32) -> Result<BigInt> {
    check_ambient(m)?;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for row in 0..2i64 {
        for col in 0..i64::from(t) {
            let content = col - row;
            let arm = i64::from(t) - 1 - col;
            let leg = 1 - row;
            num *= i64::from(m) + content;
            den *= arm + leg + 1;
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// `h^0(O_X(t))` for `X` a general codimension-`codim` linear section of
/// `G(2, m)`. The Plücker coordinate ring is Cohen–Macaulay, so each
/// hyperplane is a nonzerodivisor and the Hilbert function is the
/// `codim`-fold finite difference of the Grassmannian's.
pub fn linear_section_hilbert_function(m: u32, codim: u32, t: u32) -> Result<BigInt> {
    if codim > 2 * (m.saturating_sub(2)) {
        return Err(Error::Hypothesis(format!(
            "codimension {codim} exceeds dim G(2,{m})"
        )));
    }
    let mut total = BigInt::zero();
    let mut binom = BigInt::one();
    for j in 0..=codim.min(t) {
        let term = &binom * grassmannian_hilbert_function(m, t - j)?;
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        binom = binom * BigInt::from(codim - j) / BigInt::from(j + 1);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: u32, b: u32) -> SchubertClass {
        SchubertClass::new(a, b).unwrap()
    }

    fn el(m: u32, terms: &[((u32, u32), i64)]) -> CohomologyElement {
        CohomologyElement::from_terms(m, terms.iter().map(|&((a, b), c)| (s(a, b), BigInt::from(c))))
            .unwrap()
    }

    #[test]
    fn pieri_in_g24() {
        let s1 = el(4, &[((1, 0), 1)]);
        assert_eq!(s1.mul(&s1).unwrap(), el(4, &[((2, 0), 1), ((1, 1), 1)]));
        let top = el(4, &[((2, 2), 1)]);
        assert!(top.mul(&s1).unwrap().is_zero());
    }

    #[test]
    fn strip_conditions_in_g25() {
        let s22 = el(5, &[((2, 2), 1)]);
        assert!(s22.mul(&el(5, &[((2, 0), 1)])).unwrap().is_zero());
        assert_eq!(s22.mul(&el(5, &[((1, 1), 1)])).unwrap(), el(5, &[((3, 3), 1)]));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let x = CohomologyElement::one(4).unwrap();
        let y = CohomologyElement::one(5).unwrap();
        assert_eq!(x.mul(&y), Err(Error::AmbientMismatch(4, 5)));
    }

    #[test]
    fn invalid_partitions_and_ambients() {
        assert!(SchubertClass::new(1, 2).is_none());
        assert!(CohomologyElement::zero(1).is_err());
        // a > m-2 is truncated on construction
        assert!(el(4, &[((3, 0), 5)]).is_zero());
    }

    #[test]
    fn integrate_reads_only_the_point_class() {
        for m in 2..8 {
            let top = CohomologyElement::basis(m, s(m - 2, m - 2)).unwrap();
            assert_eq!(top.integrate(), BigInt::one());
        }
        let mixed = el(4, &[((0, 0), 7), ((2, 1), 3), ((2, 2), 5)]);
        assert_eq!(mixed.integrate(), BigInt::from(5));
    }

    #[test]
    fn sigma1_powers() {
        let s1 = el(4, &[((1, 0), 1)]);
        assert_eq!(s1.pow(4).unwrap().integrate(), BigInt::from(2));
        let s1 = el(6, &[((1, 0), 1)]);
        assert_eq!(s1.pow(8).unwrap().integrate(), BigInt::from(14));
    }

    #[test]
    fn chern_substitution() {
        let c2 = ChernPolynomial::c2();
        for m in 3..7 {
            assert_eq!(from_chern_poly(&c2, m).unwrap(), el(m, &[((1, 1), 1)]));
        }
        let c1sq = ChernPolynomial::c1().pow(2);
        assert_eq!(
            from_chern_poly(&c1sq, 4).unwrap(),
            el(4, &[((2, 0), 1), ((1, 1), 1)])
        );
        let p = &c1sq * &ChernPolynomial::c2().pow(2);
        assert_eq!(from_chern_poly(&p, 5).unwrap(), el(5, &[((3, 3), 1)]));
    }

    #[test]
    fn plucker_degrees() {
        assert_eq!(plucker_degree(2).unwrap(), BigInt::from(1));
        assert_eq!(plucker_degree(4).unwrap(), BigInt::from(2));
        assert_eq!(plucker_degree(7).unwrap(), BigInt::from(42));
    }

    #[test]
    fn grassmannian_hilbert_function_small() {
        // G(2,5): 1, 10, 50
        let hf: Vec<BigInt> = (0..3)
            .map(|t| grassmannian_hilbert_function(5, t).unwrap())
            .collect();
        assert_eq!(hf, vec![1.into(), 10.into(), 50.into()]);
        // G(2,4) is a quadric in P^5
        assert_eq!(grassmannian_hilbert_function(4, 2).unwrap(), BigInt::from(20));
    }

    #[test]
    fn del_pezzo_quintic_threefold_sections() {
        // codim-3 linear section of G(2,5): h0(O(1)) = 7, h0(O(2)) = 23
        assert_eq!(linear_section_hilbert_function(5, 3, 1).unwrap(), BigInt::from(7));
        assert_eq!(linear_section_hilbert_function(5, 3, 2).unwrap(), BigInt::from(23));
        assert!(linear_section_hilbert_function(5, 7, 2).is_err());
    }

    #[test]
    fn dual_classes() {
        assert_eq!(s(2, 0).dual(5), Some(s(3, 1)));
        assert_eq!(s(3, 0).dual(4), None);
        assert_eq!(SchubertClass::all(4).len(), 6);
    }
}
