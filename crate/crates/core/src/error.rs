use crate::chain::Chain;
use crate::recursion::RecursionTrace;
use crate::setfn::SubsetRef;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("ground set must have between 1 and {max} elements, got {got}")]
    GroundSetSize { got: usize, max: usize },
    #[error("duplicate ground-set label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid ground-set label `{0}`")]
    InvalidLabel(String),
    #[error("permutation sweeps are limited to {max} elements, ground set has {got}")]
    GroundSetTooLarge { got: usize, max: usize },
    #[error("expected {expected} values, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("set function must vanish on the empty set")]
    NonZeroEmptySet,
    #[error("subset mask {0:#x} lies outside the ground set")]
    SubsetOutOfRange(u32),
    #[error("order is not a permutation of the ground set")]
    InvalidChain,
    #[error("set function is not monotone: v({smaller}) > v({larger})")]
    NotMonotone { smaller: SubsetRef, larger: SubsetRef },
    #[error("negative increment at position {position} of chain {chain}")]
    NonMonotoneAlongChain { chain: Chain, position: usize },
    #[error("{inner} is not a subset of {outer}")]
    NotNested { outer: SubsetRef, inner: SubsetRef },
    #[error("set function is not submodular: witness pair ({a}, {b})")]
    NotSubmodular { a: SubsetRef, b: SubsetRef },
    #[error("total mass is zero")]
    ZeroTotalMass,
    #[error("function takes a negative value at element {0}")]
    NegativeValues(usize),
    #[error("negative weight at element {0}")]
    NegativeWeight(usize),
    #[error("recursion did not reach a fixed point within {max_steps} steps")]
    MaxStepsExceeded { max_steps: usize, trace: Box<RecursionTrace> },
    #[error("cardinality profile must start at 0 and be non-decreasing (fails at {0})")]
    ProfileNotMonotone(usize),
    #[error("quantile level {beta} outside [0, {total})")]
    BetaOutOfRange { beta: String, total: String },
    #[error("invalid step distribution: {0}")]
    InvalidDistribution(String),
    #[error("alpha {0} outside (0, 1]")]
    AlphaOutOfRange(String),
    #[error("function is not comonotone with the density (elements {0} and {1} cross)")]
    NotComonotone(usize, usize),
    #[error("density takes the same value at elements {0} and {1}")]
    TiedDensities(usize, usize),
    #[error("hypothesis not satisfied: {0}")]
    HypothesisViolated(&'static str),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
