use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a bijection: {0}")]
    NotABijection(String),
    #[error("permutations have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("gluing is disconnected: {0} of {1} squares reachable from square 1")]
    Disconnected(usize, usize),
    #[error("unknown catalog surface `{0}`")]
    UnknownName(String),
    #[error("orbit exceeds the cap of {0} surfaces")]
    OrbitTooLarge(usize),
    #[error("word {0} does not stabilize the surface")]
    WordDoesNotStabilize(String),
    #[error("coset enumeration exceeded {0} cosets")]
    CosetLimit(usize),
    #[error("chain is not a cycle")]
    NonCycleInput,
    #[error("vector is not in the span of the given basis")]
    NotInSpan,
    #[error("permutation is not an automorphism of the surface")]
    NotAnAutomorphism,
    #[error("generators do not commute")]
    NonCommutingGenerators,
    #[error("matrix has an eigenvalue outside Q or is not diagonalizable over Q")]
    IrrationalEigenvalue,
    #[error("subrepresentation is not irreducible")]
    NotIrreducible,
    #[error("decomposition incomplete: components cover {found} of {total} dimensions")]
    DecompositionIncomplete { found: usize, total: usize },
    #[error("division algebra {0} is not supported by the upper bound")]
    UnsupportedAlgebraType(String),
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("bounds differ: lower {lower}, upper {upper}")]
    NotCertified { lower: usize, upper: usize },
    #[error("no named basis for surface `{0}`")]
    NoNamedBasis(String),
    #[error("input error: {0}")]
    Input(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotABijection(_) | Error::LengthMismatch(..) | Error::Disconnected(..) => 3,
            Error::UnknownName(_) | Error::NoNamedBasis(_) | Error::Input(_) => 2,
            Error::OrbitTooLarge(_) | Error::CosetLimit(_) => 4,
            Error::WordDoesNotStabilize(_) => 5,
            Error::NonCycleInput | Error::NotInSpan => 6,
            Error::NotAnAutomorphism => 7,
            Error::NonCommutingGenerators
            | Error::IrrationalEigenvalue
            | Error::NotIrreducible
            | Error::DecompositionIncomplete { .. } => 8,
            Error::UnsupportedAlgebraType(_) => 9,
            Error::NotUnipotent => 10,
            Error::NotCertified { .. } => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
