//! Exact-arithmetic toolkit for monotone set functions on small finite
//! ground sets.
//!
//! * [`setfn`]: ground sets, subsets as bitmasks, set functions and their
//!   monotonicity and sub/supermodularity checks.
//! * [`chain`]: maximal chains, extremal measures and permutation sweeps.
//! * [`representation`]: cores, sup/inf over chains, local cores and the
//!   equivalence reports.
//! * [`choquet`]: Choquet integrals of simple functions and the coherent
//!   risk functional.
//! * [`recursion`]: the sup-over-chains recursion and its fixed points.
//! * [`law_invariant`]: distribution-determined submodular functions,
//!   quantiles and spectral decompositions.
//!
//! All arithmetic is over [`Scalar`] (arbitrary-precision rationals), so
//! every equality reported by the library is exact.
//!
//! ```
//! use chainrep::{recursion_step, GroundSet, SetFunction, SubsetRef};
//! use chainrep::scalar::int;
//!
//! let g = GroundSet::numbered(2).unwrap();
//! let v = SetFunction::from_fn(g, |a| int((a.len() * a.len()) as i64)).unwrap();
//! let v1 = recursion_step(&v).unwrap();
//! assert_eq!(v1.get(SubsetRef(0b01)), &int(3));
//! assert!(v1.is_submodular());
//! ```

pub mod chain;
pub mod choquet;
pub mod error;
pub mod law_invariant;
pub mod parallel;
pub mod recursion;
pub mod representation;
pub mod scalar;
pub mod setfn;

pub use chain::{
    all_chains, extremal_measure, insert_into_chain, insert_nested_pair, Chain, DiscreteMeasure, MAX_SWEEP,
};
pub use choquet::{
    choquet, choquet_sup_representation, layer_decompose, monotone_approximation, risk_measure, LayerDecomposition,
    SimpleFunction,
};
pub use error::{Error, Result};
pub use law_invariant::{
    choquet_product_formula, comonotone_attainment, comonotone_check, cvar_component, distribution_of_density,
    kusuoka_measure, spectral_decomposition_check, v_mu, v_mu_via_quantile, AttainmentMode, SpectralMeasure,
    StepDistribution, WeightedSpace,
};
pub use parallel::Execution;
pub use recursion::{iterate_to_fixed_point, recursion_step, symmetric_step, CardinalityProfile, RecursionTrace};
pub use representation::{
    inf_over_chains, local_core_inf, local_core_sup, sup_over_chains, verify_corollary_supermodular, verify_theorem2,
    ChainOptimum, EquivalenceReport, Side,
};
pub use scalar::{parse_scalar, Scalar};
pub use setfn::{GroundSet, SetFunction, SubsetRef, MAX_GROUND};
