use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("Gram matrix is degenerate")]
    Degenerate,

    #[error("Gram matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("matrix does not preserve the Gram forms (not a metric embedding)")]
    NotMetric,

    #[error("embedding columns are linearly dependent")]
    DependentColumns,

    #[error("vector is not primitive (coordinate content {content})")]
    NotPrimitive { content: BigInt },

    #[error("matrix is not an isometry of the lattice")]
    NotIsometry,

    #[error("reflection is not integral: basis vector {basis_index} maps with coefficient {numerator}/{denominator}")]
    ReflectionNotIntegral {
        basis_index: usize,
        numerator: BigInt,
        denominator: BigInt,
    },

    #[error("reflection vector has norm zero")]
    IsotropicReflection,

    #[error("transvection precondition violated: {0}")]
    TransvectionPrecondition(String),

    #[error("transvection is not integral: a² = {norm} is odd")]
    TransvectionNotIntegral { norm: BigInt },

    #[error("first four basis vectors do not span an orthogonal summand U⊕U")]
    HyperbolicFrameMissing,

    #[error("vector has norm zero; a nonzero norm is required")]
    ZeroNorm,

    #[error("expected signature ({expected_pos},{expected_neg}), found ({pos},{neg},{zero})")]
    SignatureMismatch {
        expected_pos: usize,
        expected_neg: usize,
        pos: usize,
        neg: usize,
        zero: usize,
    },

    #[error("Clifford elements live over different host lattices")]
    HostMismatch,

    #[error("host rank {rank} exceeds the cap {cap}")]
    RankOverCap { rank: usize, cap: usize },

    #[error("lattice is not unimodular (determinant {det})")]
    NotUnimodular { det: BigInt },

    #[error("trace quotient for dual vector {index} is not integral: {numerator}/{denominator}")]
    NonIntegralTrace {
        index: usize,
        numerator: BigInt,
        denominator: BigInt,
    },

    #[error("no polarization element found with support ≤ {max_support} and coefficients in [-{coeff_bound}, {coeff_bound}]")]
    SearchExhausted {
        max_support: usize,
        coeff_bound: i64,
    },

    #[error("vector is isotropic; GSpin generators need nonzero norms")]
    IsotropicVector,

    #[error("sublattice is not saturated in its ambient")]
    NotSaturated,

    #[error("preconditions violated: {}", .0.join("; "))]
    Preconditions(Vec<String>),

    #[error("rank {rank} outside the supported range {min}..={max}")]
    RankOutOfRange { rank: usize, min: usize, max: usize },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
