//! Combinatorial tests deciding properties of the general member of a family.
//!
//! The singular locus of a well formed `P(a_0, .., a_N)` is the union of the
//! strata `P_p`, one per prime `p`, where only the coordinates whose weight is
//! divisible by `p` are non-zero. Every composite-modulus stratum sits inside
//! a prime one, so primes are enough.
//!
//! On a coordinate stratum `P_T` (coordinates outside `T` vanish) a general
//! equation of degree `d` restricts to a non-zero form exactly when `d` lies in
//! the numerical semigroup generated by the weights in `T`. Writing `c_T` for
//! the number of such equations, the general member meets `P_T` in dimension
//! at least `|T| - 1 - c_T` (projective dimension theorem). On the open torus
//! orbit of `P_T` an equation restricting to a single monomial has no zeros,
//! and otherwise transversality for the torus action bounds the intersection
//! by `|T| - 1 - c_T` from above. Hence
//!
//! ```text
//!   dim (X ∩ P_p) = max over non-empty T ⊆ {i : p | a_i} of |T| - 1 - c_T,
//! ```
//!
//! negative meaning empty. Only the set of weight values in `T` matters, and
//! for a fixed value set the largest `T` is the worst, so the maximum runs
//! over subsets of distinct `p`-divisible weight values.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::presentation::Presentation;

/// Three-valued logic. Conjunction: `False` absorbs, then `Unknown`, then `True`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TriState {
    True,
    False,
    Unknown,
}

impl TriState {
    pub fn and(self, other: TriState) -> TriState {
        use TriState::*;
        match (self, other) {
            (False, _) | (_, False) => False,
            (Unknown, _) | (_, Unknown) => Unknown,
            (True, True) => True,
        }
    }

    pub fn all(values: impl IntoIterator<Item = TriState>) -> TriState {
        values.into_iter().fold(TriState::True, TriState::and)
    }

    pub fn is_true(self) -> bool {
        self == TriState::True
    }
}

impl From<bool> for TriState {
    fn from(value: bool) -> Self {
        if value {
            TriState::True
        } else {
            TriState::False
        }
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriState::True => "True",
            TriState::False => "False",
            TriState::Unknown => "Unknown",
        })
    }
}

/// Intersection of the general member with the stratum of one prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StratumReport {
    pub prime: u64,
    /// Number of weights divisible by `prime`.
    pub divisible_weights: usize,
    /// Number of degrees in the semigroup of the `prime`-divisible weights.
    pub attainable_degrees: usize,
    /// Dimension of the intersection, negative meaning empty. At least
    /// `divisible_weights - 1 - attainable_degrees`; larger when a smaller
    /// coordinate stratum lies inside the general member.
    pub general_dimension: i64,
    /// Weights spanning the coordinate stratum that realizes `general_dimension`.
    pub critical_weights: Vec<u64>,
}

/// Which rule decided quasi-smoothness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuasiSmoothTier {
    /// `k = 0`: the punctured affine cone is the punctured affine space.
    Ambient,
    /// All weights 1: Bertini.
    UnitWeights,
    /// `k = 1`: the subset criterion for weighted hypersurfaces.
    Hypersurface,
    /// Codimension at least 2 with non-trivial weights: no decision.
    Abstain,
}

impl fmt::Display for QuasiSmoothTier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuasiSmoothTier::Ambient => "T0-ambient",
            QuasiSmoothTier::UnitWeights => "T1-unit-weights",
            QuasiSmoothTier::Hypersurface => "T2-hypersurface",
            QuasiSmoothTier::Abstain => "T3-abstain",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuasiSmoothness {
    pub tier: QuasiSmoothTier,
    pub value: TriState,
}

/// Whether `d` is a non-negative integer combination of `generators`.
///
/// With no generators only `d = 0` is representable.
pub fn semigroup_member(d: u64, generators: &[u64]) -> bool {
    let mut gens: Vec<u64> = generators.iter().copied().filter(|&g| g > 0).collect();
    gens.sort_unstable();
    gens.dedup();
    if d == 0 {
        return true;
    }
    if gens.is_empty() {
        return false;
    }
    reachable(d as usize, &gens)[d as usize]
}

/// `table[j]` tells whether `j` is representable, for `j <= bound`.
fn reachable(bound: usize, generators: &[u64]) -> Vec<bool> {
    let mut table = vec![false; bound + 1];
    table[0] = true;
    for &g in generators {
        close_under(&mut table, g as usize);
    }
    table
}

fn close_under(table: &mut [bool], step: usize) {
    for j in step..table.len() {
        if table[j - step] {
            table[j] = true;
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Every `N` of the `N + 1` weights are coprime.
pub fn ambient_well_formed(weights: &[u64]) -> bool {
    // prefix[i] = gcd(weights[..i]), suffix[i] = gcd(weights[i..])
    let len = weights.len();
    let mut prefix = vec![0; len + 1];
    let mut suffix = vec![0; len + 1];
    for i in 0..len {
        prefix[i + 1] = gcd(prefix[i], weights[i]);
        suffix[len - 1 - i] = gcd(suffix[len - i], weights[len - 1 - i]);
    }
    (0..len).all(|i| gcd(prefix[i], suffix[i + 1]) == 1)
}

/// Distinct primes dividing at least one of `values`, ascending.
pub fn prime_divisors(values: &[u64]) -> Vec<u64> {
    let mut primes = Vec::new();
    for &v in values {
        let mut rest = v;
        let mut p = 2;
        while p * p <= rest {
            if rest % p == 0 {
                primes.push(p);
                while rest % p == 0 {
                    rest /= p;
                }
            }
            p += 1;
        }
        if rest > 1 {
            primes.push(rest);
        }
    }
    primes.sort_unstable();
    primes.dedup();
    primes
}

/// One report per prime dividing some weight, ascending by prime.
///
/// Meaningful when the ambient space is well formed.
pub fn stratum_reports(pres: &Presentation) -> Vec<StratumReport> {
    prime_divisors(pres.weights())
        .into_iter()
        .map(|prime| stratum_report(pres, prime))
        .collect()
}

fn stratum_report(pres: &Presentation, prime: u64) -> StratumReport {
    let divisible: Vec<u64> = pres
        .weights()
        .iter()
        .copied()
        .filter(|w| w % prime == 0)
        .collect();
    let attainable = |gens: &[u64]| {
        pres.degrees()
            .iter()
            .filter(|&&d| semigroup_member(d, gens))
            .count()
    };
    let mut values = divisible.clone();
    values.dedup();

    let mut best: Option<(i64, Vec<u64>)> = None;
    for mask in 1u64..(1 << values.len()) {
        let chosen: Vec<u64> = values
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask & (1 << bit) != 0)
            .map(|(_, &v)| v)
            .collect();
        let stratum: Vec<u64> = divisible
            .iter()
            .copied()
            .filter(|w| chosen.contains(w))
            .collect();
        let dim = stratum.len() as i64 - 1 - attainable(&chosen) as i64;
        // ties go to the larger stratum
        let better = match &best {
            None => true,
            Some((d, s)) => dim > *d || (dim == *d && stratum.len() > s.len()),
        };
        if better {
            best = Some((dim, stratum));
        }
    }
    let (general_dimension, critical_weights) = best.expect("prime divides some weight");
    StratumReport {
        prime,
        divisible_weights: divisible.len(),
        attainable_degrees: attainable(&divisible),
        general_dimension,
        critical_weights,
    }
}

/// The ambient space is well formed and the general member meets its singular
/// locus in codimension at least 2.
pub fn well_formed_general(pres: &Presentation) -> bool {
    let bound = pres.dim() as i64 - 2;
    ambient_well_formed(pres.weights())
        && stratum_reports(pres)
            .iter()
            .all(|r| r.general_dimension <= bound)
}

/// The general member misses the singular locus of the ambient space.
pub fn avoids_singular_locus(pres: &Presentation) -> bool {
    stratum_reports(pres)
        .iter()
        .all(|r| r.general_dimension < 0)
}

/// Quasi-smoothness of the general member, decided on the canonical form.
pub fn quasi_smooth_general(pres: &Presentation) -> TriState {
    quasi_smoothness(pres).value
}

/// Like [`quasi_smooth_general`], also reporting which rule decided it.
pub fn quasi_smoothness(pres: &Presentation) -> QuasiSmoothness {
    let canon = pres.canonical_form();
    let (tier, value) = if canon.codim() == 0 {
        (QuasiSmoothTier::Ambient, TriState::True)
    } else if canon.weights().iter().all(|&w| w == 1) {
        (QuasiSmoothTier::UnitWeights, TriState::True)
    } else if canon.codim() == 1 {
        let value = hypersurface_quasi_smooth(canon.weights(), canon.degrees()[0]);
        (QuasiSmoothTier::Hypersurface, value.into())
    } else {
        (QuasiSmoothTier::Abstain, TriState::Unknown)
    };
    QuasiSmoothness { tier, value }
}

/// Subset criterion for a general hypersurface of degree `degree` in
/// `P(weights)`: for every non-empty index set `I`, either some monomial in
/// the variables of `I` has degree `degree`, or there are `|I|` distinct
/// indices `e` outside `I` each admitting a monomial `x_I^M * x_e` of degree
/// `degree`.
pub fn hypersurface_quasi_smooth(weights: &[u64], degree: u64) -> bool {
    let bound = degree as usize;
    let mut table = vec![false; bound + 1];
    table[0] = true;
    let mut in_subset = vec![false; weights.len()];
    subsets_ok(weights, bound, 0, 0, &table, &mut in_subset)
}

fn subsets_ok(
    weights: &[u64],
    degree: usize,
    next: usize,
    size: usize,
    table: &[bool],
    in_subset: &mut [bool],
) -> bool {
    if next == weights.len() {
        return size == 0 || subset_ok(weights, degree, size, table, in_subset);
    }
    if !subsets_ok(weights, degree, next + 1, size, table, in_subset) {
        return false;
    }
    let mut extended = table.to_vec();
    close_under(&mut extended, weights[next] as usize);
    in_subset[next] = true;
    let ok = subsets_ok(weights, degree, next + 1, size + 1, &extended, in_subset);
    in_subset[next] = false;
    ok
}

fn subset_ok(
    weights: &[u64],
    degree: usize,
    size: usize,
    table: &[bool],
    in_subset: &[bool],
) -> bool {
    if table[degree] {
        return true;
    }
    let partners = weights
        .iter()
        .zip(in_subset)
        .filter(|&(&w, &inside)| !inside && (w as usize) <= degree && table[degree - w as usize])
        .count();
    partners >= size
}

/// Smoothness of the general member, on the canonical form: quasi-smooth,
/// well formed, and disjoint from the singular locus of the ambient space.
pub fn smooth_general(pres: &Presentation) -> TriState {
    let canon = pres.canonical_form();
    TriState::all([
        quasi_smooth_general(&canon),
        well_formed_general(&canon).into(),
        avoids_singular_locus(&canon).into(),
    ])
}
