use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: G(2,{0}) vs G(2,{1})")]
    AmbientMismatch(u32, u32),

    #[error("Grassmannian parameter m must be at least 2, got {0}")]
    InvalidAmbient(u32),

    #[error("symmetric power degree must be at least 1, got {0}")]
    InvalidSymmetricPower(i64),

    #[error("invalid complete intersection: {0}")]
    InvalidCompleteIntersection(String),

    #[error("no hypersurfaces: the lines class needs at least one defining degree")]
    NoHypersurfaces,

    #[error("not positive-dimensional: {codim} hypersurfaces in P^{ambient}")]
    NotPositiveDimensional { ambient: u32, codim: usize },

    #[error("not Fano: sum of degrees {degree_sum} exceeds ambient dimension {ambient}")]
    NotFano { ambient: u32, degree_sum: u64 },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}
