use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: u64, right: u64 },

    #[error("conductor {from} does not divide {to}")]
    ConductorNotDividing { from: u64, to: u64 },

    #[error("{j} is not coprime to the conductor {conductor}")]
    NotCoprime { j: i64, conductor: u64 },

    #[error("invalid group presentation: {0}")]
    InvalidGroup(String),

    #[error("invalid subgroup character: {0}")]
    InvalidCharacter(String),

    #[error("invalid involution: {0}")]
    InvalidInvolution(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("invalid tame character: {0}")]
    InvalidTameCharacter(String),

    #[error("character is not regular")]
    NotRegular,

    #[error("representation is not self-dual")]
    NotSelfDual,

    #[error("f = {f} does not divide n = {n}")]
    DimensionNotDividing { f: u64, n: u64 },

    #[error("f = {0} must be even")]
    OddDimension(u64),

    #[error("an odd-dimensional irreducible self-dual parameter cannot be symplectic (n = {0})")]
    OddSymplectic(u64),

    #[error("parameter too large: {0}")]
    TooLarge(String),

    #[error("unsupported group shape: {0}")]
    UnsupportedGroup(String),

    /// A computed quantity contradicted a theorem the computation relies on.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
