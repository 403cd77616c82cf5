//! The recursion `v_{n+1}(A) = max_I μ_{v_n,I}(A)` and its fixed points.

use num_traits::Zero;

use crate::chain::check_sweep_size;
use crate::error::{Error, Result};
use crate::parallel::{map_indices, Execution};
use crate::representation::{IncrementTable, Side};
use crate::scalar::Scalar;
use crate::setfn::{GroundSet, SetFunction, SubsetRef};

/// Iterates `v₀, v₁, …` of the recursion.
///
/// When a fixed point is found at index `n`, `iterates` ends at `v_n`
/// (the repeated value is not stored twice).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionTrace {
    pub iterates: Vec<SetFunction>,
    pub submodular: Vec<bool>,
    pub fixed_point: Option<usize>,
}

impl RecursionTrace {
    pub fn last(&self) -> &SetFunction {
        self.iterates.last().expect("trace holds at least v0")
    }

    /// Number of recursion steps that were evaluated.
    pub fn steps(&self) -> usize {
        match self.fixed_point {
            Some(n) => n + 1,
            None => self.iterates.len() - 1,
        }
    }
}

/// One step of the recursion: `w(A) = sup_over_chains(v, A)` for every `A`.
pub fn recursion_step(v: &SetFunction) -> Result<SetFunction> {
    recursion_step_with(v, Execution::default())
}

pub fn recursion_step_with(v: &SetFunction, exec: Execution) -> Result<SetFunction> {
    let m = v.m();
    check_sweep_size(m)?;
    v.require_monotone()?;
    let table = IncrementTable::new(v);
    let values = map_indices(1usize << m, exec, |bits| {
        if bits == 0 {
            return Scalar::zero();
        }
        let set = SubsetRef(bits as u32);
        let coeffs: Vec<Scalar> = (0..m).map(|e| Scalar::from_integer(i64::from(set.contains(e)).into())).collect();
        table.optimum(&coeffs, Side::Submodular).value
    });
    SetFunction::new(v.ground().clone(), values)
}

/// Default step cap for [`iterate_to_fixed_point`]: `2^m`.
pub fn default_max_steps(m: usize) -> usize {
    1usize << m
}

/// Applies [`recursion_step`] until `v_{n+1} = v_n` exactly.
///
/// `max_steps` bounds the number of steps evaluated (a fixed point at index
/// `n` needs `n + 1` steps). On hitting the cap the partial trace is returned
/// inside [`Error::MaxStepsExceeded`].
pub fn iterate_to_fixed_point(v0: &SetFunction, max_steps: Option<usize>) -> Result<RecursionTrace> {
    iterate_to_fixed_point_with(v0, max_steps, Execution::default())
}

pub fn iterate_to_fixed_point_with(
    v0: &SetFunction,
    max_steps: Option<usize>,
    exec: Execution,
) -> Result<RecursionTrace> {
    check_sweep_size(v0.m())?;
    v0.require_monotone()?;
    let max_steps = max_steps.unwrap_or_else(|| default_max_steps(v0.m()));
    let mut trace =
        RecursionTrace { iterates: vec![v0.clone()], submodular: vec![v0.is_submodular()], fixed_point: None };
    for _ in 0..max_steps {
        let current = trace.last();
        let next = recursion_step_with(current, exec)?;
        let n = trace.iterates.len() - 1;
        if &next == current {
            if !trace.submodular[n] {
                return Err(Error::Inconsistent(format!("iterate {n} is a fixed point but not submodular")));
            }
            trace.fixed_point = Some(n);
            return Ok(trace);
        }
        if trace.submodular[n] {
            return Err(Error::Inconsistent(format!("iterate {n} is submodular but not a fixed point")));
        }
        trace.submodular.push(next.is_submodular());
        trace.iterates.push(next);
    }
    Err(Error::MaxStepsExceeded { max_steps, trace: Box::new(trace) })
}

/// Profile `g` of a symmetric set function `v(A) = g(|A|)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CardinalityProfile {
    ground: GroundSet,
    g: Vec<Scalar>,
}

impl CardinalityProfile {
    /// `g` has `m + 1` entries, starts at 0 and is non-decreasing.
    pub fn new(ground: GroundSet, g: Vec<Scalar>) -> Result<Self> {
        if g.len() != ground.len() + 1 {
            return Err(Error::DimensionMismatch { expected: ground.len() + 1, got: g.len() });
        }
        if !g[0].is_zero() {
            return Err(Error::ProfileNotMonotone(0));
        }
        if let Some(i) = (1..g.len()).find(|&i| g[i] < g[i - 1]) {
            return Err(Error::ProfileNotMonotone(i));
        }
        Ok(Self { ground, g })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn values(&self) -> &[Scalar] {
        &self.g
    }

    /// `g(i) − g(i−1)` for `i = 1..=m`.
    pub fn increments(&self) -> Vec<Scalar> {
        self.g.windows(2).map(|w| &w[1] - &w[0]).collect()
    }

    pub fn to_set_function(&self) -> SetFunction {
        SetFunction::from_fn(self.ground.clone(), |a| self.g[a.len()].clone()).expect("g(0) = 0")
    }
}

/// Closed form of one recursion step for a symmetric `v₀`: `v₁(A)` is the sum
/// of the `|A|` largest increments of `g`. The result is submodular, hence a
/// fixed point.
pub fn symmetric_step(profile: &CardinalityProfile) -> Result<SetFunction> {
    let mut inc = profile.increments();
    inc.sort_unstable_by(|a, b| b.cmp(a));
    let mut prefix = vec![Scalar::zero()];
    for d in &inc {
        let next = prefix.last().expect("non-empty") + d;
        prefix.push(next);
    }
    let v1 = SetFunction::from_fn(profile.ground.clone(), |a| prefix[a.len()].clone())?;
    if let Some(w) = v1.submodular_witness() {
        return Err(Error::Inconsistent(format!("symmetric step is not submodular at ({}, {})", w.a, w.b)));
    }
    Ok(v1)
}
