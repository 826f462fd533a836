//! Independent oracles. Nothing here goes through the library's Pieri
//! arithmetic, closed formulas or Hilbert-series code.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

pub type Partition = (u32, u32);

/// Bivariate integer polynomial keyed by `(exp_x, exp_y)`.
pub type Bivariate = BTreeMap<(u32, u32), BigInt>;

fn bivariate_mul(p: &Bivariate, q: &Bivariate) -> Bivariate {
    let mut out = Bivariate::new();
    for (&(a, b), c) in p {
        for (&(e, f), g) in q {
            *out.entry((a + e, b + f)).or_insert_with(BigInt::zero) += c * g;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `s_(a,b)(x, y) = (xy)^b (x^{a-b} + x^{a-b-1} y + … + y^{a-b})`.
pub fn schur(a: u32, b: u32) -> Bivariate {
    (0..=a - b)
        .map(|i| ((b + i, b + (a - b - i)), BigInt::from(1)))
        .collect()
}

/// Littlewood–Richardson coefficients for two-row partitions, by
/// multiplying Schur polynomials in two variables and peeling off leading
/// monomials. Truncated to `a <= m - 2`.
pub fn lr_product(m: u32, x: Partition, y: Partition) -> BTreeMap<Partition, BigInt> {
    let mut rest = bivariate_mul(&schur(x.0, x.1), &schur(y.0, y.1));
    let mut out = BTreeMap::new();
    while let Some((&(p, q), c)) = rest.iter().next_back() {
        assert!(p >= q, "product of Schur polynomials is symmetric");
        let c = c.clone();
        for (k, v) in schur(p, q) {
            *rest.entry(k).or_insert_with(BigInt::zero) -= &c * v;
        }
        rest.retain(|_, v| !v.is_zero());
        if p <= m - 2 {
            out.insert((p, q), c);
        }
    }
    out
}

/// `σ_1^i σ_(1,1)^j` expanded by Pieri in the stable ring (no ambient
/// bound), then truncated at the end: the free-ring-then-truncate route.
pub fn untruncated_chern_monomial(m: u32, i: u32, j: u32) -> BTreeMap<Partition, BigInt> {
    let mut cur: BTreeMap<Partition, BigInt> = BTreeMap::from([((j, j), BigInt::from(1))]);
    for _ in 0..i {
        let mut next = BTreeMap::new();
        for (&(a, b), c) in &cur {
            *next.entry((a + 1, b)).or_insert_with(BigInt::zero) += c;
            if b < a {
                *next.entry((a, b + 1)).or_insert_with(BigInt::zero) += c;
            }
        }
        cur = next;
    }
    cur.into_iter().filter(|&((a, _), _)| a + 2 <= m).collect()
}

/// `∫_{G(2,m)} Σ coef · c1^i c2^j` via [`untruncated_chern_monomial`].
pub fn integrate_free(m: u32, terms: &BTreeMap<(u32, u32), BigInt>) -> BigInt {
    let top = (m - 2, m - 2);
    terms
        .iter()
        .map(|(&(i, j), c)| {
            c * untruncated_chern_monomial(m, i, j)
                .get(&top)
                .cloned()
                .unwrap_or_default()
        })
        .sum()
}

/// `∏ (t x + (d-t) y)` evaluated at integers.
pub fn roots_product_at(d: i64, x: i64, y: i64) -> BigInt {
    (0..=d).map(|t| BigInt::from(t * x + (d - t) * y)).product()
}

pub fn catalan(k: u32) -> BigInt {
    // (2k)! / (k! (k+1)!)
    let fact = |n: u32| (1..=n).map(BigInt::from).product::<BigInt>();
    fact(2 * k) / (fact(k) * fact(k + 1))
}

/// Number of monomials of degree `t` in `n_vars` variables whose first
/// exponents are bounded by `exp_i < caps[i]`. With `caps = degrees` this is
/// the Hilbert function of the monomial complete intersection
/// `k[x_0..x_N] / (x_0^{d_1}, …, x_{r-1}^{d_r})`.
pub fn count_monomials(n_vars: usize, caps: &[u32], t: u32) -> u64 {
    fn go(var: usize, n_vars: usize, caps: &[u32], left: u32) -> u64 {
        if var + 1 == n_vars {
            return u64::from(caps.get(var).is_none_or(|&c| left < c));
        }
        let max = caps.get(var).map_or(left, |&c| left.min(c - 1));
        (0..=max).map(|e| go(var + 1, n_vars, caps, left - e)).sum()
    }
    go(0, n_vars, caps, t)
}

/// Semistandard tableaux of shape `(t, t)` with entries in `1..=m`, by
/// column-by-column enumeration.
pub fn count_ssyt_two_rows(m: u32, t: u32) -> u64 {
    let columns: Vec<(u32, u32)> = (1..=m)
        .flat_map(|a| (a + 1..=m).map(move |b| (a, b)))
        .collect();
    let mut counts: BTreeMap<(u32, u32), u64> = columns.iter().map(|&c| (c, 1)).collect();
    if t == 0 {
        return 1;
    }
    for _ in 1..t {
        let mut next = BTreeMap::new();
        for &(a, b) in &columns {
            let n: u64 = counts
                .iter()
                .filter(|(&(pa, pb), _)| pa <= a && pb <= b)
                .map(|(_, &v)| v)
                .sum();
            next.insert((a, b), n);
        }
        counts = next;
    }
    counts.values().sum()
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}
