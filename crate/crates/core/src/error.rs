use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("ill-formed table: {0}")]
    IllFormedTable(String),
    #[error("multiplication is not commutative on generators {0} and {1}")]
    NotCommutative(usize, usize),
    #[error("multiplication is not associative on generators ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("`one` does not act as identity on generator {0}")]
    NoIdentity(usize),
    #[error("subgroup is not an ideal")]
    NotAnIdeal,
    #[error("subgroup is not a unital subring")]
    NotASubring,
    #[error("ring of order {size} exceeds scan bound {bound}")]
    ScanBoundExceeded { size: u64, bound: u64 },
    #[error("ring is not local")]
    NotLocal,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("{0} is not a subfield degree of the residue field (degree {1})")]
    NotASubfieldDegree(u32, u32),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("ring characteristic is not prime")]
    CharacteristicNotP,
    #[error("ring is not unramified (maximal ideal differs from pR)")]
    NotUnramified,
    #[error("element is zero")]
    ZeroElement,
    #[error("subgroup is not stable under the residue field action")]
    NotStable,
    #[error("subspace is not a hyperplane")]
    NotHyperplane,
    #[error("local factors have different residue characteristics")]
    MixedCharacteristic,
}

pub type Result<T> = std::result::Result<T, RingError>;
