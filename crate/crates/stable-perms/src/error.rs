use thiserror::Error;

use crate::family::FamilySpec;

/// Largest supported image-table size (`n^k`). Constructors reject anything bigger.
pub const CAPACITY_LIMIT: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} out of range 1..={n}")]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("alphabet must be a positive integer")]
    EmptyAlphabet,

    #[error("multi-index length must be a positive integer")]
    EmptyIndex,

    #[error("code {code} out of range 0..{max}")]
    CodeOutOfRange { code: usize, max: usize },

    #[error("degree n^k = {n}^{k} exceeds the capacity limit {limit}")]
    CapacityExceeded { n: usize, k: usize, limit: usize },

    #[error("shape mismatch: ([{expected_n}]^{expected_k} vs [{found_n}]^{found_k})")]
    ShapeMismatch {
        expected_n: usize,
        expected_k: usize,
        found_n: usize,
        found_k: usize,
    },

    #[error("alphabet mismatch: [{left}] vs [{right}]")]
    AlphabetMismatch { left: usize, right: usize },

    #[error("image table is not a bijection of 0..{degree}")]
    NotABijection { degree: usize },

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("repeated multi-index {point} across cycles")]
    DuplicatePoint { point: String },

    #[error("cycle of length {len} (cycles need at least 2 points)")]
    ShortCycle { len: usize },

    #[error("operation requires a permutation of [n]^2, got length {found}")]
    RequiresPairs { found: usize },

    #[error("stability horizon k_max must be at least 1")]
    InvalidHorizon,

    #[error("invalid family spec: {reason}")]
    InvalidFamilySpec { reason: String },

    #[error(
        "classifier disagrees with the exact criterion on {spec} \
         (predicted {predicted}, verified {verified}); this indicates a bug"
    )]
    PredictionMismatch {
        spec: FamilySpec,
        predicted: bool,
        verified: bool,
    },

    #[error("no witness case matches {spec}; the case analysis is incomplete")]
    CaseAnalysisGap { spec: FamilySpec },

    #[error("infeasible search space {space}: {reason}")]
    InfeasibleSpace { space: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
