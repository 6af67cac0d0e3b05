use thiserror::Error;

/// Why a matrix was rejected as a Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotCartanReason {
    /// Not square.
    Shape(String),
    /// Violates c_ss = 2, c_st <= 0, or c_st = 0 <=> c_ts = 0.
    C1(String),
    /// Passes C1 but is not of finite type.
    NotFiniteType(String),
}

impl std::fmt::Display for NotCartanReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotCartanReason::Shape(s) => write!(f, "shape: {s}"),
            NotCartanReason::C1(s) => write!(f, "condition C1 fails: {s}"),
            NotCartanReason::NotFiniteType(s) => write!(f, "not of finite type: {s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a Cartan matrix ({0})")]
    NotCartan(NotCartanReason),
    #[error("bad rank {rank} for family {family}")]
    BadRank { family: char, rank: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("root closure exceeded {bound} roots")]
    ClosureBudgetExceeded { bound: usize },
    #[error("Weyl group would exceed the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("lattice does not contain the column lattice of C")]
    LatticeNotAboveZC,
    #[error("wrong type: {0}")]
    WrongType(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("bad type: {0}")]
    BadType(String),
    #[error("(MI1) violated: {0}")]
    MI1Violation(String),
    #[error("(MI2) violated: {0}")]
    MI2Violation(String),
    #[error("isogeny is not an endomorphism of one datum")]
    NotEndo,
    #[error("isogeny is not of Steinberg type")]
    NotSteinberg,
    #[error("datum is not semisimple")]
    NotSemisimple,
    #[error("datum is not simple")]
    NotSimple,
    #[error("internal consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("matrix has no finite order up to {bound}")]
    NotFiniteOrder { bound: u32 },
    #[error("map does not normalize W: {0}")]
    DoesNotNormalizeW(String),
    #[error("mixed radicands {0} and {1}")]
    MixedRadicand(u64, u64),
    #[error("unsupported coset representative: {0}")]
    UnsupportedCoset(String),
    #[error("q is not in the admissible set: {0}")]
    QNotInP(String),
    #[error("not integral: {0}")]
    NonIntegral(String),
    #[error("singular matrix")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
