use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("binomial exponent at position {index} is zero; exponents must be positive")]
    ZeroExponent { index: usize },
}

/// Rejections raised while building a [`crate::Presentation`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("weight at position {index} is {value}; weights must be positive")]
    NonPositiveWeight { index: usize, value: i64 },
    #[error("degree at position {index} is {value}; degrees must be positive")]
    NonPositiveDegree { index: usize, value: i64 },
    #[error("need at least two weights, got {count}")]
    TooFewWeights { count: usize },
    #[error(
        "codimension {codim} leaves no positive dimension in an ambient space of dimension {ambient_dim}"
    )]
    CodimensionTooLarge { codim: usize, ambient_dim: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("i_X = {index} is not positive; the family is not Fano")]
    NotFano { index: i64 },
    #[error("smoothness of the general member could not be decided")]
    SmoothnessUnknown,
    #[error("the general member is not smooth")]
    NotSmooth,
    #[error("index classification needs dimension at least 2, got {dim}")]
    DimensionTooSmall { dim: usize },
    #[error("canonical form {found} contradicts the index classification (expected {expected})")]
    Inconsistent { found: String, expected: String },
}
