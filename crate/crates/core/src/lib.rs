//! Exact combinatorics of weighted complete intersections.
//!
//! A family of weighted complete intersections is described by a
//! [`Presentation`]: the weights of the ambient weighted projective space and
//! the degrees of the equations. From it this crate computes
//!
//! - the Poincaré series and its coefficients ([`series`], [`Presentation::poincare`]),
//! - numerical invariants and the cone-free canonical form ([`presentation`]),
//! - well-formedness, quasi-smoothness and smoothness of the general member ([`checks`]),
//! - the Fano index, the large-index classification and the finiteness
//!   verdict for the automorphism group ([`classify`]),
//! - bounded exhaustive lists of smooth families ([`enumerate`]).
//!
//! All arithmetic is exact.

pub mod checks;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod presentation;
pub mod series;

pub use checks::{
    ambient_well_formed, avoids_singular_locus, quasi_smooth_general, quasi_smoothness,
    semigroup_member, smooth_general, stratum_reports, well_formed_general, QuasiSmoothTier,
    QuasiSmoothness, StratumReport, TriState,
};
pub use classify::{
    aut_verdict, fano_index, index_class, verdict_for_smooth, Coindex2Family, FiniteBranch,
    IndeterminateBranch, IndexClass, InfiniteBranch, NotCoveredBranch, Verdict,
};
pub use enumerate::{
    enumerate_coindex2, enumerate_coindex2_with, enumerate_wcis, reproduce_tables,
    EnumerationResult, SearchCaps, TablesReport,
};
pub use error::{ClassifyError, PresentationError, SeriesError};
pub use presentation::{
    InvariantsRecord, Kind, ParseInlineError, Presentation, PresentationDocument,
};
pub use series::{
    expand, monomial_count, ratios_equal, signature, CyclotomicSignature, FactorList, ProductRatio,
    SeriesPrefix,
};
