//! Polynomials in the Chern classes of the rank-2 tautological quotient
//! bundle `F` on `G(2, m)`, and the top Chern class of `Sym^d F`.
//!
//! `c1` has weight 1 and `c2` has weight 2. No relations are imposed here;
//! the Grassmannian relations only enter when a polynomial is pushed into
//! the Schubert basis by [`crate::schubert::from_chern_poly`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer polynomial in `c1`, `c2`. Keys are `(exp_c1, exp_c2)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChernPolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl ChernPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn c1() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn c2() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `coef * c1^i * c2^j`
    pub fn monomial(i: u32, j: u32, coef: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, coef.into());
        p
    }

    fn add_term(&mut self, i: u32, j: u32, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `((exp_c1, exp_c2), coefficient)`, in increasing key order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Weighted degrees `i + 2j` present among the nonzero terms.
    pub fn weighted_degrees(&self) -> Vec<u32> {
        let mut degs: Vec<u32> = self.terms.keys().map(|&(i, j)| i + 2 * j).collect();
        degs.sort_unstable();
        degs.dedup();
        degs
    }

    /// `Some(w)` when every term has weighted degree `w`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self.weighted_degrees().as_slice() {
            [w] => Some(*w),
            _ => None,
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, c * factor);
        }
        out
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add for &ChernPolynomial {
    type Output = ChernPolynomial;
    fn add(self, rhs: &ChernPolynomial) -> ChernPolynomial {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &ChernPolynomial {
    type Output = ChernPolynomial;
    fn sub(self, rhs: &ChernPolynomial) -> ChernPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &ChernPolynomial {
    type Output = ChernPolynomial;
    fn neg(self) -> ChernPolynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &ChernPolynomial {
    type Output = ChernPolynomial;
    fn mul(self, rhs: &ChernPolynomial) -> ChernPolynomial {
        let mut out = ChernPolynomial::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, a * b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ChernPolynomial {
            type Output = ChernPolynomial;
            fn $m(self, rhs: ChernPolynomial) -> ChernPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for ChernPolynomial {
    /// Highest weighted degree first, e.g. `24*c1^4*c2 + 58*c1^2*c2^2 + 9*c2^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + 2 * k.1, k.0)));
        for (n, &&(i, j)) in keys.iter().enumerate() {
            let c = &self.terms[&(i, j)];
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            match i {
                0 => {}
                1 => factors.push("c1".into()),
                _ => factors.push(format!("c1^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push("c2".into()),
                _ => factors.push(format!("c2^{j}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Complete homogeneous symmetric polynomial `h_j(x, y)` written in
/// `c1 = x + y`, `c2 = xy`. In `G(2, m)` this is the special Schubert class
/// `σ_(j,0)`.
pub fn complete_homogeneous(j: u32) -> ChernPolynomial {
    let mut prev = ChernPolynomial::zero();
    let mut cur = ChernPolynomial::one();
    for _ in 0..j {
        let next = &(&ChernPolynomial::c1() * &cur) - &(&ChernPolynomial::c2() * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Integer polynomial in two formal Chern roots `x`, `y`. Keys are
/// `(exp_x, exp_y)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootPolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl RootPolynomial {
    pub fn one() -> Self {
        Self::linear(0, 0).add_const(1)
    }

    fn add_const(mut self, c: i64) -> Self {
        self.add_term(0, 0, BigInt::from(c));
        self
    }

    /// `a*x + b*y`
    pub fn linear(a: i64, b: i64) -> Self {
        let mut p = Self::default();
        p.add_term(1, 0, BigInt::from(a));
        p.add_term(0, 1, BigInt::from(b));
        p
    }

    fn add_term(&mut self, i: u32, j: u32, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::default();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, a * b);
            }
        }
        out
    }

    fn sub_scaled(&mut self, rhs: &Self, factor: &BigInt) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, -(c * factor));
        }
    }

    /// `e1^p * e2^q` with `e1 = x + y`, `e2 = xy`.
    fn elementary_monomial(p: u32, q: u32) -> Self {
        let mut out = Self::one();
        let e1 = Self::linear(1, 1);
        for _ in 0..p {
            out = out.mul(&e1);
        }
        let mut e2 = Self::default();
        e2.add_term(1, 1, BigInt::one());
        for _ in 0..q {
            out = out.mul(&e2);
        }
        out
    }

    /// Rewrites a symmetric polynomial in the elementary symmetric
    /// functions, returning `None` if a nonzero remainder is left (the input
    /// was not symmetric).
    ///
    /// Repeatedly strips the lex-leading monomial `x^a y^b`, which for a
    /// symmetric polynomial has `a >= b` and is the leading monomial of
    /// `e1^(a-b) e2^b`.
    pub fn to_elementary(&self) -> Option<ChernPolynomial> {
        let mut rest = self.clone();
        let mut out = ChernPolynomial::zero();
        while let Some((&(a, b), c)) = rest.terms.iter().next_back() {
            if a < b {
                return None;
            }
            let c = c.clone();
            rest.sub_scaled(&Self::elementary_monomial(a - b, b), &c);
            out.add_term(a - b, b, c);
        }
        debug_assert!(rest.is_zero());
        Some(out)
    }
}

fn check_power(d: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidSymmetricPower(0));
    }
    Ok(())
}

/// Shared shape of the closed formulas:
/// `boundary * c2 * [(d/2) c1 if d even] * prod_{t=1}^{floor((d-1)/2)} (t(d-t) c1^2 + (d-2t)^2 c2)`.
fn closed_form(d: u32, boundary: BigInt) -> ChernPolynomial {
    let mut out = ChernPolynomial::monomial(0, 1, boundary);
    if d.is_multiple_of(2) {
        out = &out * &ChernPolynomial::monomial(1, 0, d / 2);
    }
    let d = i64::from(d);
    for t in 1..=(d - 1) / 2 {
        let pair = &ChernPolynomial::monomial(2, 0, t * (d - t))
            + &ChernPolynomial::monomial(0, 1, (d - 2 * t) * (d - 2 * t));
        out = &out * &pair;
    }
    out
}

/// The closed formula as commonly printed, with boundary coefficient
/// `(d+1)^2`. It differs from the true top Chern class by the constant factor
/// `(d+1)^2 / d^2`; kept for comparison only.
pub fn sym_top_chern_paper(d: u32) -> Result<ChernPolynomial> {
    check_power(d)?;
    Ok(closed_form(d, BigInt::from(d + 1).pow(2)))
}

/// `c_{d+1}(Sym^d F)` by the splitting principle: with Chern roots `x`, `y`
/// of `F`, the roots of `Sym^d F` are `t x + (d-t) y` for `0 <= t <= d`.
pub fn sym_top_chern_oracle(d: u32) -> Result<ChernPolynomial> {
    check_power(d)?;
    let d = i64::from(d);
    let product = (0..=d).fold(RootPolynomial::one(), |acc, t| {
        acc.mul(&RootPolynomial::linear(t, d - t))
    });
    Ok(product
        .to_elementary()
        .expect("product of the roots of Sym^d F is symmetric"))
}

/// `c_{d+1}(Sym^d F)` via the closed formula with boundary coefficient `d^2`.
///
/// Panics if the closed formula ever disagrees with [`sym_top_chern_oracle`].
pub fn sym_top_chern(d: u32) -> Result<ChernPolynomial> {
    check_power(d)?;
    let formula = closed_form(d, BigInt::from(d).pow(2));
    let oracle = sym_top_chern_oracle(d)?;
    assert_eq!(
        formula, oracle,
        "closed formula for c_top(Sym^{d} F) disagrees with the splitting principle"
    );
    Ok(formula)
}
