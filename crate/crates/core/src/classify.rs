//! Fano index, large-index classification and the automorphism verdict.
//!
//! For a smooth well formed family of dimension `n` the verdict depends only
//! on `(n, i_X)`:
//!
//! | `n`  | `i_X`        | verdict                         |
//! |------|--------------|---------------------------------|
//! | any  | `> n + 1`    | Indeterminate/IndexOutOfRange   |
//! | 1    | `1, 2`       | InfiniteAut/RationalCurve       |
//! | 1    | `0`          | NotCovered/EllipticCurve        |
//! | 1    | `< 0`        | Finite/GeneralTypeCurve         |
//! | `>=2`| `n + 1`      | InfiniteAut/ProjectiveSpace     |
//! | `>=2`| `n`          | InfiniteAut/Quadric             |
//! | `>=2`| `n - 1`      | Finite/LowCoindex               |
//! | 2    | `0`          | NotCovered/CalabiYauSurface     |
//! | `>=2`| other `<= n - 2` | Finite/FlennerVanishing     |

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::checks::{smooth_general, TriState};
use crate::error::ClassifyError;
use crate::presentation::Presentation;

/// The four families of smooth Fano complete intersections with `i_X = n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Coindex2Family {
    /// Sextic in `P(1^n, 2, 3)`.
    Deg6In1n23,
    /// Quartic in `P(1^{n+1}, 2)`.
    Deg4In1n12,
    /// Cubic in `P^{n+1}`.
    Cubic,
    /// Two quadrics in `P^{n+2}`.
    TwoQuadrics,
}

impl Coindex2Family {
    pub const ALL: [Coindex2Family; 4] = [
        Coindex2Family::Deg6In1n23,
        Coindex2Family::Deg4In1n12,
        Coindex2Family::Cubic,
        Coindex2Family::TwoQuadrics,
    ];

    /// The canonical presentation of this family in dimension `dim`.
    pub fn presentation(self, dim: usize) -> Presentation {
        let ones = |count: usize| vec![1u64; count];
        let (weights, degrees) = match self {
            Coindex2Family::Deg6In1n23 => {
                let mut w = ones(dim);
                w.extend([2, 3]);
                (w, vec![6])
            }
            Coindex2Family::Deg4In1n12 => {
                let mut w = ones(dim + 1);
                w.push(2);
                (w, vec![4])
            }
            Coindex2Family::Cubic => (ones(dim + 2), vec![3]),
            Coindex2Family::TwoQuadrics => (ones(dim + 3), vec![2, 2]),
        };
        Presentation::new(weights, degrees).expect("valid family presentation")
    }

    pub fn name(self) -> &'static str {
        match self {
            Coindex2Family::Deg6In1n23 => "Deg6_In_1n23",
            Coindex2Family::Deg4In1n12 => "Deg4_In_1n1_2",
            Coindex2Family::Cubic => "Cubic",
            Coindex2Family::TwoQuadrics => "TwoQuadrics",
        }
    }
}

impl fmt::Display for Coindex2Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IndexClass {
    /// `i_X > n + 1`: impossible for a smooth well formed Fano family.
    ExceedsBound,
    /// `i_X = n + 1`.
    ProjectiveSpace,
    /// `i_X = n`.
    Quadric,
    /// `i_X = n - 1`; the family is named when `n >= 3`.
    Coindex2Family(Option<Coindex2Family>),
    /// `i_X <= n - 2`.
    Generic,
}

impl fmt::Display for IndexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexClass::ExceedsBound => f.write_str("ExceedsBound"),
            IndexClass::ProjectiveSpace => f.write_str("ProjectiveSpace"),
            IndexClass::Quadric => f.write_str("Quadric"),
            IndexClass::Coindex2Family(None) => f.write_str("Coindex2Family"),
            IndexClass::Coindex2Family(Some(tag)) => write!(f, "Coindex2Family/{tag}"),
            IndexClass::Generic => f.write_str("Generic"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FiniteBranch {
    /// `n >= 2`, `i_X <= n - 2` (and not a K3 surface): no vector fields.
    FlennerVanishing,
    /// `n >= 2`, `i_X = n - 1`.
    LowCoindex,
    /// Curves of genus at least 2.
    GeneralTypeCurve,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InfiniteBranch {
    ProjectiveSpace,
    Quadric,
    RationalCurve,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NotCoveredBranch {
    CalabiYauSurface,
    EllipticCurve,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IndeterminateBranch {
    SmoothnessUnknown,
    NotSmooth,
    IndexOutOfRange,
}

/// Finiteness of the automorphism group of the general member, together with
/// the reason.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "branch")]
pub enum Verdict {
    Finite(FiniteBranch),
    InfiniteAut(InfiniteBranch),
    NotCovered(NotCoveredBranch),
    Indeterminate(IndeterminateBranch),
}

impl Verdict {
    pub fn outcome(&self) -> &'static str {
        match self {
            Verdict::Finite(_) => "Finite",
            Verdict::InfiniteAut(_) => "InfiniteAut",
            Verdict::NotCovered(_) => "NotCovered",
            Verdict::Indeterminate(_) => "Indeterminate",
        }
    }

    pub fn branch(&self) -> &'static str {
        match self {
            Verdict::Finite(FiniteBranch::FlennerVanishing) => "FlennerVanishing",
            Verdict::Finite(FiniteBranch::LowCoindex) => "LowCoindex",
            Verdict::Finite(FiniteBranch::GeneralTypeCurve) => "GeneralTypeCurve",
            Verdict::InfiniteAut(InfiniteBranch::ProjectiveSpace) => "ProjectiveSpace",
            Verdict::InfiniteAut(InfiniteBranch::Quadric) => "Quadric",
            Verdict::InfiniteAut(InfiniteBranch::RationalCurve) => "RationalCurve",
            Verdict::NotCovered(NotCoveredBranch::CalabiYauSurface) => "CalabiYauSurface",
            Verdict::NotCovered(NotCoveredBranch::EllipticCurve) => "EllipticCurve",
            Verdict::Indeterminate(IndeterminateBranch::SmoothnessUnknown) => "SmoothnessUnknown",
            Verdict::Indeterminate(IndeterminateBranch::NotSmooth) => "NotSmooth",
            Verdict::Indeterminate(IndeterminateBranch::IndexOutOfRange) => "IndexOutOfRange",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outcome(), self.branch())
    }
}

/// The verdict for a smooth well formed family with invariants `(dim, index)`.
pub fn verdict_for_smooth(dim: usize, index: i64) -> Verdict {
    let n = dim as i64;
    if index > n + 1 {
        return Verdict::Indeterminate(IndeterminateBranch::IndexOutOfRange);
    }
    if dim == 1 {
        return match index {
            i if i > 0 => Verdict::InfiniteAut(InfiniteBranch::RationalCurve),
            0 => Verdict::NotCovered(NotCoveredBranch::EllipticCurve),
            _ => Verdict::Finite(FiniteBranch::GeneralTypeCurve),
        };
    }
    match index {
        i if i == n + 1 => Verdict::InfiniteAut(InfiniteBranch::ProjectiveSpace),
        i if i == n => Verdict::InfiniteAut(InfiniteBranch::Quadric),
        i if i == n - 1 => Verdict::Finite(FiniteBranch::LowCoindex),
        0 if dim == 2 => Verdict::NotCovered(NotCoveredBranch::CalabiYauSurface),
        _ => Verdict::Finite(FiniteBranch::FlennerVanishing),
    }
}

/// Decides finiteness of `Aut` for the general member of the family, after
/// eliminating linear cones and checking smoothness.
pub fn aut_verdict(pres: &Presentation) -> Verdict {
    let canon = pres.canonical_form();
    match smooth_general(&canon) {
        TriState::False => Verdict::Indeterminate(IndeterminateBranch::NotSmooth),
        TriState::Unknown => Verdict::Indeterminate(IndeterminateBranch::SmoothnessUnknown),
        TriState::True => verdict_for_smooth(canon.dim(), canon.index()),
    }
}

fn require_smooth(canon: &Presentation) -> Result<(), ClassifyError> {
    match smooth_general(canon) {
        TriState::True => Ok(()),
        TriState::False => Err(ClassifyError::NotSmooth),
        TriState::Unknown => Err(ClassifyError::SmoothnessUnknown),
    }
}

/// Fano index of the smooth general member: `i_X` in dimension at least 2,
/// and 2 for curves (a smooth Fano curve is `P^1`, even when presented as a
/// conic with `i_X = 1`).
pub fn fano_index(pres: &Presentation) -> Result<u64, ClassifyError> {
    let index = pres.index();
    if index <= 0 {
        return Err(ClassifyError::NotFano { index });
    }
    require_smooth(&pres.canonical_form())?;
    Ok(if pres.dim() == 1 { 2 } else { index as u64 })
}

/// Classifies a smooth Fano family of dimension at least 2 by its index.
///
/// For `i_X >= n - 1` the canonical form is forced; a mismatch is reported as
/// [`ClassifyError::Inconsistent`].
pub fn index_class(pres: &Presentation) -> Result<IndexClass, ClassifyError> {
    let dim = pres.dim();
    if dim < 2 {
        return Err(ClassifyError::DimensionTooSmall { dim });
    }
    let index = pres.index();
    if index <= 0 {
        return Err(ClassifyError::NotFano { index });
    }
    let canon = pres.canonical_form();
    require_smooth(&canon)?;

    let n = dim as i64;
    let expect = |expected: Presentation| {
        if canon == expected {
            Ok(())
        } else {
            Err(ClassifyError::Inconsistent {
                found: canon.to_string(),
                expected: expected.to_string(),
            })
        }
    };
    match index {
        i if i > n + 1 => Ok(IndexClass::ExceedsBound),
        i if i == n + 1 => {
            expect(Presentation::ambient(vec![1; dim + 1]).expect("projective space"))?;
            Ok(IndexClass::ProjectiveSpace)
        }
        i if i == n => {
            expect(Presentation::new(vec![1; dim + 2], vec![2]).expect("quadric"))?;
            Ok(IndexClass::Quadric)
        }
        i if i == n - 1 && dim == 2 => Ok(IndexClass::Coindex2Family(None)),
        i if i == n - 1 => Coindex2Family::ALL
            .into_iter()
            .find(|family| family.presentation(dim) == canon)
            .map(|family| IndexClass::Coindex2Family(Some(family)))
            .ok_or_else(|| ClassifyError::Inconsistent {
                found: canon.to_string(),
                expected: "one of the four index n-1 families".to_string(),
            }),
        _ => Ok(IndexClass::Generic),
    }
}
