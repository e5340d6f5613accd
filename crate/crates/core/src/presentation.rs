//! Presentations of weighted complete intersections.
//!
//! A [`Presentation`] is the pair (weights of the ambient weighted projective
//! space, degrees of the defining equations), both kept sorted ascending. It
//! stands for the general member of the family it describes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::PresentationError;
use crate::series::{self, FactorList, ProductRatio};

/// Sorted weights `a_0 <= .. <= a_N` and degrees `d_1 <= .. <= d_k`, with
/// `N >= 1` and `k < N` so the modeled variety has positive dimension.
///
/// `k = 0` is allowed and models the weighted projective space itself.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "PresentationDocument")]
pub struct Presentation {
    weights: Vec<u64>,
    degrees: Vec<u64>,
}

/// Unvalidated JSON form of a presentation: `{"weights": [..], "degrees": [..]}`
/// with `degrees` optional.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDocument {
    pub weights: Vec<i64>,
    #[serde(default)]
    pub degrees: Vec<i64>,
}

impl TryFrom<PresentationDocument> for Presentation {
    type Error = PresentationError;

    fn try_from(doc: PresentationDocument) -> Result<Self, Self::Error> {
        Presentation::normalize(&doc.weights, &doc.degrees)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    Fano,
    CalabiYau,
    GeneralType,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Fano => "Fano",
            Kind::CalabiYau => "CalabiYau",
            Kind::GeneralType => "GeneralType",
        })
    }
}

/// Numerical invariants read off a presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantsRecord {
    /// Dimension `N` of the ambient weighted projective space.
    pub ambient_dim: usize,
    /// Number `k` of equations.
    pub codim: usize,
    /// `n = N - k`.
    pub dim: usize,
    /// `i_X`: sum of weights minus sum of degrees.
    pub index: i64,
    /// The twist in `omega_X = O_X(-i_X)`.
    pub canonical_degree: i64,
    pub kind: Kind,
}

impl Presentation {
    /// Sorts and validates raw weight and degree lists.
    pub fn normalize(weights: &[i64], degrees: &[i64]) -> Result<Self, PresentationError> {
        let weights = weights
            .iter()
            .enumerate()
            .map(|(index, &value)| {
                u64::try_from(value)
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or(PresentationError::NonPositiveWeight { index, value })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let degrees = degrees
            .iter()
            .enumerate()
            .map(|(index, &value)| {
                u64::try_from(value)
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or(PresentationError::NonPositiveDegree { index, value })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(weights, degrees)
    }

    /// Builds a presentation from positive entries in any order.
    pub fn new(mut weights: Vec<u64>, mut degrees: Vec<u64>) -> Result<Self, PresentationError> {
        if let Some(index) = weights.iter().position(|&w| w == 0) {
            return Err(PresentationError::NonPositiveWeight { index, value: 0 });
        }
        if let Some(index) = degrees.iter().position(|&d| d == 0) {
            return Err(PresentationError::NonPositiveDegree { index, value: 0 });
        }
        if weights.len() < 2 {
            return Err(PresentationError::TooFewWeights {
                count: weights.len(),
            });
        }
        let ambient_dim = weights.len() - 1;
        if degrees.len() >= ambient_dim {
            return Err(PresentationError::CodimensionTooLarge {
                codim: degrees.len(),
                ambient_dim,
            });
        }
        weights.sort_unstable();
        degrees.sort_unstable();
        Ok(Presentation { weights, degrees })
    }

    /// The weighted projective space with the given weights, as a
    /// codimension-0 presentation.
    pub fn ambient(weights: Vec<u64>) -> Result<Self, PresentationError> {
        Self::new(weights, Vec::new())
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// `N`, the dimension of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn codim(&self) -> usize {
        self.degrees.len()
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim() - self.codim()
    }

    /// `i_X = sum(weights) - sum(degrees)`.
    pub fn index(&self) -> i64 {
        let weights: u64 = self.weights.iter().sum();
        let degrees: u64 = self.degrees.iter().sum();
        weights as i64 - degrees as i64
    }

    pub fn invariants(&self) -> InvariantsRecord {
        let index = self.index();
        let kind = match index {
            i if i > 0 => Kind::Fano,
            0 => Kind::CalabiYau,
            _ => Kind::GeneralType,
        };
        InvariantsRecord {
            ambient_dim: self.ambient_dim(),
            codim: self.codim(),
            dim: self.dim(),
            index,
            canonical_degree: -index,
            kind,
        }
    }

    /// Values occurring both as a weight and as a degree, each with
    /// multiplicity `min(#weights, #degrees)`. Empty exactly when the
    /// presentation is not an intersection with a linear cone.
    pub fn linear_cone_pairs(&self) -> Vec<u64> {
        // Both lists are sorted: a merge walk pairs equal values.
        let mut pairs = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.weights.len() && j < self.degrees.len() {
            match self.weights[i].cmp(&self.degrees[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    pairs.push(self.weights[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        pairs
    }

    pub fn is_linear_cone(&self) -> bool {
        !self.linear_cone_pairs().is_empty()
    }

    /// Cancels matched weight/degree pairs, smallest value first, until none
    /// remain. Each cancelled pair is a common factor `1 - t^v` of the
    /// Poincaré series, so the series is unchanged.
    ///
    /// Cancelling `c` pairs leaves `N + 1 - c` weights and `k - c` degrees,
    /// so the dimension is preserved and the result is always a valid
    /// presentation.
    pub fn canonical_form(&self) -> Presentation {
        let mut weights = self.weights.clone();
        let mut degrees = self.degrees.clone();
        loop {
            let current = Presentation {
                weights: weights.clone(),
                degrees: degrees.clone(),
            };
            let Some(&value) = current.linear_cone_pairs().first() else {
                return current;
            };
            let w = weights
                .iter()
                .position(|&a| a == value)
                .expect("matched weight");
            let d = degrees
                .iter()
                .position(|&b| b == value)
                .expect("matched degree");
            weights.remove(w);
            degrees.remove(d);
        }
    }

    pub fn is_canonical(&self) -> bool {
        !self.is_linear_cone()
    }

    /// The Poincaré series `prod (1 - t^{d_j}) / prod (1 - t^{a_i})`.
    pub fn poincare(&self) -> ProductRatio {
        ProductRatio::new(
            FactorList::new(self.degrees.iter().copied()).expect("positive degrees"),
            FactorList::new(self.weights.iter().copied()).expect("positive weights"),
        )
    }

    /// Coefficient of `t^m` in the Poincaré series: the dimension of the
    /// degree-`m` piece of the coordinate ring. For a quasi-smooth well formed
    /// member every section of `O_X(m)` restricts from the ambient space, so
    /// this is `h^0(X, O_X(m))`. Zero for negative `m`.
    ///
    /// Middle cohomology `H^i(X, O_X(m))`, `0 < i < dim X`, vanishes for all
    /// `m` and is not computed.
    pub fn h0(&self, m: i64) -> BigInt {
        if m < 0 {
            return BigInt::zero();
        }
        let m = m as usize;
        series::expand(&self.poincare(), m)
            .into_coefficients()
            .swap_remove(m)
    }

    /// Presentation equivalence: equal canonical forms.
    ///
    /// Since canonical forms are never linear cones, this agrees with
    /// equality of Poincaré series. It certifies isomorphism of the general
    /// members only for quasi-smooth well formed families of dimension at
    /// least 3 (and smooth Fano surfaces); it fails for elliptic curves, for
    /// K3 surfaces, and makes no claim for quasi-smooth del Pezzo surfaces.
    pub fn equivalent(&self, other: &Presentation) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    /// Adds one more coordinate of weight 1, keeping the degrees. The general
    /// member stays smooth and well formed, and `i_X` grows by one.
    pub fn extend(&self) -> Presentation {
        let mut weights = Vec::with_capacity(self.weights.len() + 1);
        weights.push(1);
        weights.extend_from_slice(&self.weights);
        Presentation {
            weights,
            degrees: self.degrees.clone(),
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, values: &[u64]) -> fmt::Result {
    for (idx, v) in values.iter().enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Inline form `w=1,1,2,3 d=6`; `d=` with nothing after it for `k = 0`.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("w=")?;
        write_list(f, &self.weights)?;
        f.write_str(" d=")?;
        write_list(f, &self.degrees)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseInlineError {
    #[error("unrecognized token `{0}`; expected `w=<ints>` or `d=<ints>`")]
    UnknownToken(String),
    #[error("`{0}` given more than once")]
    Repeated(&'static str),
    #[error("missing `w=` token")]
    MissingWeights,
    #[error("`{0}` is not an integer")]
    BadInteger(String),
    #[error(transparent)]
    Invalid(#[from] PresentationError),
}

fn parse_list(body: &str) -> Result<Vec<i64>, ParseInlineError> {
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| ParseInlineError::BadInteger(tok.to_string()))
        })
        .collect()
}

impl FromStr for Presentation {
    type Err = ParseInlineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut weights = None;
        let mut degrees = None;
        for token in s.split_whitespace() {
            if let Some(body) = token.strip_prefix("w=") {
                if weights.replace(parse_list(body)?).is_some() {
                    return Err(ParseInlineError::Repeated("w="));
                }
            } else if let Some(body) = token.strip_prefix("d=") {
                if degrees.replace(parse_list(body)?).is_some() {
                    return Err(ParseInlineError::Repeated("d="));
                }
            } else {
                return Err(ParseInlineError::UnknownToken(token.to_string()));
            }
        }
        let weights = weights.ok_or(ParseInlineError::MissingWeights)?;
        let degrees = degrees.unwrap_or_default();
        Ok(Presentation::normalize(&weights, &degrees)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(weights: &[u64], degrees: &[u64]) -> Presentation {
        Presentation::new(weights.to_vec(), degrees.to_vec()).unwrap()
    }

    #[test]
    fn normalize_sorts() {
        let pres = Presentation::normalize(&[3, 1, 2], &[6]).unwrap();
        assert_eq!(pres.weights(), &[1, 2, 3]);
        assert_eq!(pres.degrees(), &[6]);

        let pres = Presentation::normalize(&[1, 1], &[]).unwrap();
        assert_eq!((pres.weights(), pres.degrees()), (&[1u64, 1][..], &[][..]));

        let pres = Presentation::normalize(&[1, 1, 1, 1], &[4, 2]).unwrap();
        assert_eq!(pres.degrees(), &[2, 4]);
    }

    #[test]
    fn normalize_rejections_are_distinct() {
        assert_eq!(
            Presentation::normalize(&[1, 0, 2], &[]),
            Err(PresentationError::NonPositiveWeight { index: 1, value: 0 })
        );
        assert_eq!(
            Presentation::normalize(&[1, 1, 2], &[-3]),
            Err(PresentationError::NonPositiveDegree {
                index: 0,
                value: -3
            })
        );
        assert_eq!(
            Presentation::normalize(&[1], &[]),
            Err(PresentationError::TooFewWeights { count: 1 })
        );
        assert_eq!(
            Presentation::normalize(&[1, 1, 1], &[2, 2, 2]),
            Err(PresentationError::CodimensionTooLarge {
                codim: 3,
                ambient_dim: 2
            })
        );
        // k = N would be a zero-dimensional family
        assert!(matches!(
            Presentation::normalize(&[1, 1, 1], &[2, 2]),
            Err(PresentationError::CodimensionTooLarge { .. })
        ));
    }

    #[test]
    fn invariants_examples() {
        let inv = p(&[1, 1, 2, 3], &[6]).invariants();
        assert_eq!((inv.dim, inv.index, inv.kind), (2, 1, Kind::Fano));
        assert_eq!(inv.canonical_degree, -1);

        let inv = p(&[1, 1, 1, 1], &[4]).invariants();
        assert_eq!((inv.dim, inv.index, inv.kind), (2, 0, Kind::CalabiYau));

        let inv = p(&[1, 1, 1, 2, 3], &[6]).invariants();
        assert_eq!((inv.dim, inv.index, inv.kind), (3, 2, Kind::Fano));

        let inv = p(&[1, 1, 1], &[5]).invariants();
        assert_eq!(inv.kind, Kind::GeneralType);
        assert_eq!((inv.ambient_dim, inv.codim), (2, 1));
    }

    #[test]
    fn cone_pairs_examples() {
        assert_eq!(p(&[1, 1, 1, 1, 2], &[2, 4]).linear_cone_pairs(), vec![2]);
        assert!(p(&[1, 1, 2, 3], &[6]).linear_cone_pairs().is_empty());
        assert_eq!(p(&[1, 1, 2, 2], &[2, 2]).linear_cone_pairs(), vec![2, 2]);
        assert_eq!(p(&[1, 1, 2, 2], &[2]).linear_cone_pairs(), vec![2]);
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(
            p(&[1, 1, 1, 1, 2], &[2, 4]).canonical_form(),
            p(&[1, 1, 1, 1], &[4])
        );
        let sextic = p(&[1, 1, 2, 3], &[6]);
        assert_eq!(sextic.canonical_form(), sextic);

        let inflated = p(&[1, 1, 1, 2, 2], &[2, 4]);
        let canon = inflated.canonical_form();
        assert_eq!(canon, p(&[1, 1, 1, 2], &[4]));
        assert_eq!(inflated.poincare().expand(10), canon.poincare().expand(10));
        assert_eq!(inflated.index(), 1);
        assert_eq!(canon.index(), 1);
    }

    #[test]
    fn canonical_form_with_repeated_and_weight_one_pairs() {
        // a degree-1 equation cancels a weight-1 coordinate
        assert_eq!(p(&[1, 1, 1, 2], &[1]).canonical_form(), p(&[1, 1, 2], &[]));
        assert_eq!(p(&[1, 1, 2, 2], &[2, 2]).canonical_form(), p(&[1, 1], &[]));
    }

    #[test]
    fn poincare_examples() {
        let r = p(&[1, 1], &[]).poincare();
        assert!(r.numerator.is_empty());
        assert_eq!(r.denominator.exponents(), &[1, 1]);

        let r = p(&[1, 1, 1, 1], &[4]).poincare();
        assert_eq!(r.numerator.exponents(), &[4]);
        assert_eq!(r.denominator.exponents(), &[1, 1, 1, 1]);

        let r = p(&[1, 1, 2, 3], &[6]).poincare();
        assert_eq!(r.numerator.exponents(), &[6]);
        assert_eq!(r.denominator.exponents(), &[1, 1, 2, 3]);
    }

    #[test]
    fn h0_examples() {
        let sextic = p(&[1, 1, 2, 3], &[6]);
        assert_eq!(sextic.h0(1), BigInt::from(2));
        assert_eq!(sextic.h0(0), BigInt::from(1));
        assert_eq!(sextic.h0(-1), BigInt::zero());
        // C(7,3) - C(3,3)
        assert_eq!(p(&[1, 1, 1, 1], &[4]).h0(4), BigInt::from(34));
        assert_eq!(p(&[1, 1, 1, 1], &[4]).h0(0), BigInt::from(1));
    }

    #[test]
    fn h0_can_go_negative_without_a_regular_sequence() {
        // every monomial in P(2,2,2) has even degree, so a cubic equation is zero
        let pres = p(&[2, 2, 2], &[3]);
        assert_eq!(pres.h0(3), BigInt::from(-1));
        assert_eq!(pres.h0(5), BigInt::from(-3));
    }

    #[test]
    fn equivalent_examples() {
        assert!(p(&[1, 1, 1, 1, 2], &[2, 4]).equivalent(&p(&[1, 1, 1, 1], &[4])));
        let quartic = p(&[1, 1, 1, 1], &[4]);
        let sextic = p(&[1, 1, 1, 3], &[6]);
        assert!(!quartic.equivalent(&sextic));
        assert_eq!(quartic.h0(1), BigInt::from(4));
        assert_eq!(sextic.h0(1), BigInt::from(3));
        assert!(quartic.equivalent(&quartic));
    }

    #[test]
    fn extend_examples() {
        let sextic = p(&[1, 1, 2, 3], &[6]);
        let ext = sextic.extend();
        assert_eq!(ext, p(&[1, 1, 1, 2, 3], &[6]));
        assert_eq!(ext.index(), sextic.index() + 1);
        assert_eq!(ext.dim(), sextic.dim() + 1);
        assert_eq!(p(&[1, 1], &[]).extend(), p(&[1, 1, 1], &[]));
    }

    #[test]
    fn inline_round_trip() {
        let pres: Presentation = "w=3,1,2 d=6".parse().unwrap();
        assert_eq!(pres.to_string(), "w=1,2,3 d=6");
        let pres: Presentation = "w=1,1 d=".parse().unwrap();
        assert_eq!(pres.to_string(), "w=1,1 d=");
        let pres: Presentation = "w=1,1,1".parse().unwrap();
        assert_eq!(pres.codim(), 0);
    }

    #[test]
    fn inline_errors() {
        assert_eq!(
            "d=2".parse::<Presentation>(),
            Err(ParseInlineError::MissingWeights)
        );
        assert!(matches!(
            "w=1,x d=".parse::<Presentation>(),
            Err(ParseInlineError::BadInteger(_))
        ));
        assert!(matches!(
            "w=1,1 q=2".parse::<Presentation>(),
            Err(ParseInlineError::UnknownToken(_))
        ));
        assert!(matches!(
            "w=1,1 w=1,1".parse::<Presentation>(),
            Err(ParseInlineError::Repeated(_))
        ));
        assert!(matches!(
            "w=1,0,1 d=".parse::<Presentation>(),
            Err(ParseInlineError::Invalid(_))
        ));
    }
}
