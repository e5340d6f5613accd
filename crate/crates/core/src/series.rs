//! Exact power series for products and ratios of binomials `1 - t^m`.
//!
//! A [`ProductRatio`] is the rational function
//!
//! ```text
//!   prod_j (1 - t^{d_j})
//!   --------------------
//!   prod_i (1 - t^{a_i})
//! ```
//!
//! Every denominator factor has constant term 1, so the ratio always has a
//! formal power series expansion with integer coefficients. Expansion is done
//! one sparse binomial at a time, which keeps the cost at `O(M)` per factor
//! even when exponents exceed the truncation order.
//!
//! Equality of two ratios is decided exactly through their
//! [`CyclotomicSignature`]: `1 - t^m` factors as `-prod_{e | m} Phi_e(t)`,
//! so the multiplicity of `Phi_e` in a ratio is the number of numerator
//! exponents divisible by `e` minus the number of denominator exponents
//! divisible by `e`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::SeriesError;

/// A sorted multiset of binomial exponents; each entry `m` stands for `1 - t^m`.
///
/// The empty list is the constant 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FactorList(Vec<u64>);

impl FactorList {
    pub fn new(exponents: impl IntoIterator<Item = u64>) -> Result<Self, SeriesError> {
        let mut exponents: Vec<u64> = exponents.into_iter().collect();
        if let Some(pos) = exponents.iter().position(|&m| m == 0) {
            return Err(SeriesError::ZeroExponent { index: pos });
        }
        exponents.sort_unstable();
        Ok(FactorList(exponents))
    }

    pub fn empty() -> Self {
        FactorList(Vec::new())
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of all exponents, i.e. the degree of the product as a polynomial.
    pub fn total_degree(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl TryFrom<Vec<u64>> for FactorList {
    type Error = SeriesError;

    fn try_from(value: Vec<u64>) -> Result<Self, Self::Error> {
        FactorList::new(value)
    }
}

impl From<FactorList> for Vec<u64> {
    fn from(value: FactorList) -> Self {
        value.0
    }
}

/// `prod (1 - t^{numerator}) / prod (1 - t^{denominator})`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProductRatio {
    pub numerator: FactorList,
    pub denominator: FactorList,
}

impl ProductRatio {
    pub fn new(numerator: FactorList, denominator: FactorList) -> Self {
        ProductRatio {
            numerator,
            denominator,
        }
    }

    /// Convenience constructor from raw exponent slices.
    pub fn from_exponents(numerator: &[u64], denominator: &[u64]) -> Result<Self, SeriesError> {
        Ok(ProductRatio {
            numerator: FactorList::new(numerator.iter().copied())?,
            denominator: FactorList::new(denominator.iter().copied())?,
        })
    }

    /// Coefficients `0..=order` of the power series expansion.
    pub fn expand(&self, order: usize) -> SeriesPrefix {
        expand(self, order)
    }

    pub fn signature(&self) -> CyclotomicSignature {
        signature(self)
    }

    /// Degree bound for deciding `self == other` from power series prefixes:
    /// after cross-multiplying, both sides are polynomials of degree at most
    /// the sum of all four exponent lists.
    pub fn cross_degree_bound(&self, other: &ProductRatio) -> u64 {
        self.numerator.total_degree()
            + self.denominator.total_degree()
            + other.numerator.total_degree()
            + other.denominator.total_degree()
    }
}

impl fmt::Display for ProductRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn side(f: &mut fmt::Formatter<'_>, list: &FactorList) -> fmt::Result {
            if list.is_empty() {
                return write!(f, "1");
            }
            for (idx, m) in list.exponents().iter().enumerate() {
                if idx > 0 {
                    write!(f, "*")?;
                }
                write!(f, "(1-t^{m})")?;
            }
            Ok(())
        }
        side(f, &self.numerator)?;
        write!(f, " / ")?;
        side(f, &self.denominator)
    }
}

/// Signed multiplicities of cyclotomic polynomials `Phi_e` in a [`ProductRatio`].
///
/// Zero entries are never stored, so two signatures are equal exactly when
/// the underlying rational functions are equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclotomicSignature(BTreeMap<u64, i64>);

impl CyclotomicSignature {
    pub fn multiplicity(&self, e: u64) -> i64 {
        self.0.get(&e).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.0.iter().map(|(&e, &mult)| (e, mult))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}

impl FromIterator<(u64, i64)> for CyclotomicSignature {
    fn from_iter<T: IntoIterator<Item = (u64, i64)>>(iter: T) -> Self {
        let mut map = BTreeMap::new();
        for (e, mult) in iter {
            *map.entry(e).or_insert(0) += mult;
        }
        map.retain(|_, mult| *mult != 0);
        CyclotomicSignature(map)
    }
}

/// Leading coefficients of a power series, index 0 first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeriesPrefix(Vec<BigInt>);

impl SeriesPrefix {
    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coefficient(&self, m: usize) -> Option<&BigInt> {
        self.0.get(m)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_coefficients(self) -> Vec<BigInt> {
        self.0
    }
}

impl fmt::Display for SeriesPrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, c) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Number of exponent vectors `(m_0, .., m_N)` with `sum m_i * weights[i] == m`.
///
/// This is the dimension of the degree-`m` piece of the weighted polynomial
/// ring. Computed by the coin-change recurrence, one weight at a time.
///
/// # Panics
///
/// If any weight is zero.
pub fn monomial_count(weights: &[u64], m: u64) -> BigUint {
    assert!(
        weights.iter().all(|&w| w > 0),
        "monomial_count: weights must be positive"
    );
    let m = m as usize;
    let mut ways = vec![BigUint::zero(); m + 1];
    ways[0] = BigUint::one();
    for &w in weights {
        let w = w as usize;
        for j in w..=m {
            let (lo, hi) = ways.split_at_mut(j);
            hi[0] += &lo[j - w];
        }
    }
    ways.swap_remove(m)
}

/// Coefficients `0..=order` of the power series of `ratio`.
pub fn expand(ratio: &ProductRatio, order: usize) -> SeriesPrefix {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::one();

    // Divide by (1 - t^a): c[j] += c[j - a], ascending.
    for &a in ratio.denominator.exponents() {
        let a = a as usize;
        for j in a..=order {
            let (lo, hi) = coeffs.split_at_mut(j);
            hi[0] += &lo[j - a];
        }
    }
    // Multiply by (1 - t^d): c[j] -= c[j - d], descending.
    for &d in ratio.numerator.exponents() {
        let d = d as usize;
        if d > order {
            continue;
        }
        for j in (d..=order).rev() {
            let (lo, hi) = coeffs.split_at_mut(j);
            hi[0] -= &lo[j - d];
        }
    }
    SeriesPrefix(coeffs)
}

/// Divisor-counting signature of `ratio`.
pub fn signature(ratio: &ProductRatio) -> CyclotomicSignature {
    let mut counts: BTreeMap<u64, i64> = BTreeMap::new();
    let mut tally = |m: u64, sign: i64| {
        for e in divisors(m) {
            *counts.entry(e).or_insert(0) += sign;
        }
    };
    for &d in ratio.numerator.exponents() {
        tally(d, 1);
    }
    for &a in ratio.denominator.exponents() {
        tally(a, -1);
    }
    counts.retain(|_, mult| *mult != 0);
    CyclotomicSignature(counts)
}

/// Whether two ratios are equal as rational functions in `t`.
pub fn ratios_equal(lhs: &ProductRatio, rhs: &ProductRatio) -> bool {
    signature(lhs) == signature(rhs)
}

/// Positive divisors of `m`, ascending.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut e = 1;
    while e * e <= m {
        if m.is_multiple_of(e) {
            small.push(e);
            if e * e != m {
                large.push(m / e);
            }
        }
        e += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(num: &[u64], den: &[u64]) -> ProductRatio {
        ProductRatio::from_exponents(num, den).unwrap()
    }

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    /// Exhaustive enumeration of exponent vectors; independent of the DP.
    fn brute_monomials(weights: &[u64], m: u64) -> u64 {
        match weights.split_first() {
            None => u64::from(m == 0),
            Some((&w, rest)) => (0..=m / w).map(|e| brute_monomials(rest, m - e * w)).sum(),
        }
    }

    #[test]
    fn monomial_count_examples() {
        assert_eq!(monomial_count(&[1, 1], 5), BigUint::from(6u32));
        assert_eq!(brute_monomials(&[1, 1, 2, 3], 3), 7);
        assert_eq!(monomial_count(&[1, 1, 2, 3], 3), BigUint::from(7u32));
        assert_eq!(monomial_count(&[1, 1, 2, 3], 0), BigUint::one());
    }

    #[test]
    fn monomial_count_matches_enumeration() {
        for weights in [&[1u64, 1, 2, 3][..], &[2, 3, 5], &[4, 4, 6, 9], &[1]] {
            for m in 0..25 {
                assert_eq!(
                    monomial_count(weights, m),
                    BigUint::from(brute_monomials(weights, m)),
                    "weights {weights:?} m {m}"
                );
            }
        }
    }

    #[test]
    fn expand_examples() {
        assert_eq!(
            ratio(&[], &[1, 1]).expand(3).coefficients(),
            ints(&[1, 2, 3, 4])
        );

        // C(m+3,3) - C(m-1,3)
        let binom = |n: i64| if n < 3 { 0 } else { n * (n - 1) * (n - 2) / 6 };
        let oracle: Vec<i64> = (0..=5).map(|m| binom(m + 3) - binom(m - 1)).collect();
        assert_eq!(oracle, vec![1, 4, 10, 20, 34, 52]);
        assert_eq!(
            ratio(&[4], &[1, 1, 1, 1]).expand(5).coefficients(),
            ints(&oracle)
        );

        let oracle: Vec<i64> = (0..=6u64)
            .map(|m| {
                let lower = if m >= 6 {
                    brute_monomials(&[1, 1, 2, 3], m - 6)
                } else {
                    0
                };
                brute_monomials(&[1, 1, 2, 3], m) as i64 - lower as i64
            })
            .collect();
        assert_eq!(oracle, vec![1, 2, 4, 7, 11, 16, 22]);
        assert_eq!(
            ratio(&[6], &[1, 1, 2, 3]).expand(6).coefficients(),
            ints(&oracle)
        );
    }

    #[test]
    fn expand_of_constant_and_large_exponents() {
        assert_eq!(
            ratio(&[], &[]).expand(3).coefficients(),
            ints(&[1, 0, 0, 0])
        );
        // exponents beyond the order contribute nothing but the constant term
        assert_eq!(
            ratio(&[50], &[40]).expand(4).coefficients(),
            ints(&[1, 0, 0, 0, 0])
        );
        assert_eq!(ratio(&[2], &[]).expand(0).coefficients(), ints(&[1]));
    }

    #[test]
    fn signature_examples() {
        let sig = ratio(&[2], &[1]).signature();
        assert_eq!(sig.iter().collect::<Vec<_>>(), vec![(2, 1)]);

        let sig = ratio(&[4], &[1, 1, 1, 1]).signature();
        assert_eq!(
            sig.iter().collect::<Vec<_>>(),
            vec![(1, -3), (2, 1), (4, 1)]
        );

        assert!(ratio(&[], &[]).signature().is_empty());
    }

    #[test]
    fn ratios_equal_examples() {
        // (1 - t^2) cancels outright: both sides are 1 / (1 - t)^2
        let lhs = ratio(&[2], &[1, 1, 2]);
        let rhs = ratio(&[], &[1, 1]);
        assert!(ratios_equal(&lhs, &rhs));
        let bound = lhs.cross_degree_bound(&rhs) as usize;
        assert_eq!(lhs.expand(bound), rhs.expand(bound));

        let lhs = ratio(&[3], &[1, 1, 2]);
        assert!(!ratios_equal(&lhs, &rhs));
        let bound = lhs.cross_degree_bound(&rhs) as usize;
        assert_ne!(lhs.expand(bound), rhs.expand(bound));
        assert_ne!(lhs.expand(2).coefficient(2), rhs.expand(2).coefficient(2));

        assert!(ratios_equal(
            &ratio(&[2, 4], &[1, 1, 1, 1, 2]),
            &ratio(&[4], &[1, 1, 1, 1])
        ));
        let r = ratio(&[6, 6], &[1, 2, 3]);
        assert!(ratios_equal(&r, &r));
    }

    #[test]
    fn zero_exponent_is_rejected() {
        assert_eq!(
            FactorList::new([3, 0, 1]),
            Err(SeriesError::ZeroExponent { index: 1 })
        );
    }

    #[test]
    fn divisors_are_sorted() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            ratio(&[6], &[1, 2]).to_string(),
            "(1-t^6) / (1-t^1)*(1-t^2)"
        );
        assert_eq!(ratio(&[], &[]).to_string(), "1 / 1");
    }
}
