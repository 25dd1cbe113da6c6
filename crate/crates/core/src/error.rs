use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown index {index} (rank {rank})")]
    UnknownIndex { index: usize, rank: usize },
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("cannot pair two weights outside the root lattice")]
    BothOutsideRootLattice,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("word not reduced: {0:?}")]
    NonReducedWord(Vec<usize>),
    #[error("weight is not in the Weyl orbit of the given dominant weight")]
    NotInOrbit,
    #[error("weight is not dominant")]
    NotDominant,
    #[error("minor requires mu to precede zeta")]
    PrecedenceViolation,
    #[error("negative divided-power exponent at step {step}")]
    NegativeExponent { step: usize },
    #[error("word content does not match the weight of the minor")]
    WeightMismatch,
    #[error("minor value is not a Laurent polynomial")]
    NonLaurentResult,
    #[error("epsilon of the zero element is undefined")]
    ZeroElement,
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("grading shift is not an integer (twice the shift is {doubled})")]
    NonIntegralShift { doubled: i64 },
    #[error("direction {0} is frozen")]
    FrozenDirection(usize),
    #[error("exchange relation check failed in direction {0}")]
    ExchangeInconsistent(usize),
    #[error("group enumeration exceeded {0} elements")]
    GroupTooLarge(usize),
    #[error("nothing to undo")]
    EmptyHistory,
}
