//! Choquet integration of simple functions, its sup-over-chains
//! representation, and the coherent risk functional.

use num_traits::{Signed, Zero};

use crate::chain::{check_sweep_size, Chain};
use crate::error::{Error, Result};
use crate::parallel::Execution;
use crate::representation::{sweep_optimum, ChainOptimum, Side};
use crate::scalar::{pow2, Scalar};
use crate::setfn::{GroundSet, SetFunction, SubsetRef};

/// A real function on the ground set (every such function is simple).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleFunction {
    ground: GroundSet,
    values: Vec<Scalar>,
}

impl SimpleFunction {
    pub fn new(ground: GroundSet, values: Vec<Scalar>) -> Result<Self> {
        if values.len() != ground.len() {
            return Err(Error::DimensionMismatch { expected: ground.len(), got: values.len() });
        }
        Ok(Self { ground, values })
    }

    pub fn constant(ground: GroundSet, c: Scalar) -> Self {
        let values = vec![c; ground.len()];
        Self { ground, values }
    }

    /// `χ_A`.
    pub fn indicator(ground: GroundSet, set: SubsetRef) -> Self {
        let values = (0..ground.len()).map(|i| Scalar::from_integer(i64::from(set.contains(i)).into())).collect();
        Self { ground, values }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn value(&self, element: usize) -> &Scalar {
        &self.values[element]
    }

    fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        Self { ground: self.ground.clone(), values: self.values.iter().map(f).collect() }
    }

    pub fn negated(&self) -> Self {
        self.map(|x| -x)
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        self.map(|x| x * factor)
    }

    /// `f + a·1`.
    pub fn shifted(&self, a: &Scalar) -> Self {
        self.map(|x| x + a)
    }

    pub fn plus(&self, other: &SimpleFunction) -> Result<Self> {
        self.check_dims(other.values.len())?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(Self { ground: self.ground.clone(), values })
    }

    pub fn min_value(&self) -> &Scalar {
        self.values.iter().min().expect("ground set is non-empty")
    }

    pub fn max_value(&self) -> &Scalar {
        self.values.iter().max().expect("ground set is non-empty")
    }

    /// Index of the first negative value, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.values.iter().position(|x| x.is_negative())
    }

    pub fn require_nonnegative(&self) -> Result<()> {
        match self.first_negative() {
            Some(i) => Err(Error::NegativeValues(i)),
            None => Ok(()),
        }
    }

    /// `{ω : f(ω) > z}`.
    pub fn strict_upper_level(&self, z: &Scalar) -> SubsetRef {
        SubsetRef::from_elements((0..self.values.len()).filter(|&i| &self.values[i] > z))
    }

    /// Chain listing elements by decreasing value, ties by element index.
    /// Its prefixes are the upper level sets of `f`.
    pub fn comonotone_chain(&self) -> Chain {
        let mut order: Vec<usize> = (0..self.values.len()).collect();
        order.sort_by(|&i, &j| self.values[j].cmp(&self.values[i]).then(i.cmp(&j)));
        Chain::new(order).expect("sorted indices form a permutation")
    }

    fn check_dims(&self, m: usize) -> Result<()> {
        if m != self.values.len() {
            return Err(Error::DimensionMismatch { expected: self.values.len(), got: m });
        }
        Ok(())
    }
}

/// `f = Σ aᵢ χ_{Aᵢ}` with `A₁ ⊂ … ⊂ Aₙ = Ω` and `aᵢ ≥ 0` for `i < n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub coefficients: Vec<Scalar>,
    pub sets: Vec<SubsetRef>,
}

impl LayerDecomposition {
    pub fn reconstruct(&self, ground: &GroundSet) -> SimpleFunction {
        let mut values = vec![Scalar::zero(); ground.len()];
        for (a, set) in self.coefficients.iter().zip(&self.sets) {
            for e in set.elements() {
                values[e] += a;
            }
        }
        SimpleFunction { ground: ground.clone(), values }
    }
}

/// Level-set decomposition: with distinct values `b₁ > … > bₙ`,
/// `Aᵢ = {f ≥ bᵢ}`, `aᵢ = bᵢ − bᵢ₊₁` and `aₙ = bₙ`.
pub fn layer_decompose(f: &SimpleFunction) -> LayerDecomposition {
    let mut levels: Vec<&Scalar> = f.values.iter().collect();
    levels.sort_unstable_by(|a, b| b.cmp(a));
    levels.dedup();
    let sets =
        levels.iter().map(|&b| SubsetRef::from_elements((0..f.values.len()).filter(|&i| &f.values[i] >= b))).collect();
    let coefficients = levels
        .iter()
        .enumerate()
        .map(|(i, &b)| match levels.get(i + 1) {
            Some(&next) => b - next,
            None => b.clone(),
        })
        .collect();
    LayerDecomposition { coefficients, sets }
}

fn check_pair(v: &SetFunction, f: &SimpleFunction) -> Result<()> {
    if v.m() != f.values.len() {
        return Err(Error::DimensionMismatch { expected: v.m(), got: f.values.len() });
    }
    Ok(())
}

/// Choquet integral `v(f) = Σ aᵢ v(Aᵢ)` over the layer decomposition.
/// Negative values are handled by the last coefficient, so
/// `v(f + a) = v(f) + a·v(Ω)` for every real `a`.
pub fn choquet(v: &SetFunction, f: &SimpleFunction) -> Result<Scalar> {
    check_pair(v, f)?;
    let layers = layer_decompose(f);
    Ok(layers.coefficients.iter().zip(&layers.sets).fold(Scalar::zero(), |acc, (a, set)| acc + a * v.get(*set)))
}

/// `max_I ∫ f dμ_{v,I}` over all chains, for monotone submodular `v`.
/// Equals [`choquet`], and the comonotone chain of `f` attains it.
pub fn choquet_sup_representation(v: &SetFunction, f: &SimpleFunction) -> Result<ChainOptimum> {
    choquet_sup_representation_with(v, f, Execution::default())
}

pub fn choquet_sup_representation_with(v: &SetFunction, f: &SimpleFunction, exec: Execution) -> Result<ChainOptimum> {
    check_pair(v, f)?;
    check_sweep_size(v.m())?;
    v.require_monotone()?;
    if let Some(w) = v.submodular_witness() {
        return Err(Error::NotSubmodular { a: w.a, b: w.b });
    }
    Ok(sweep_optimum(v, &f.values, Side::Submodular, exec))
}

/// `ρ(f) = v(−f) / v(Ω)`. Coherent when `v` is monotone and submodular.
pub fn risk_measure(v: &SetFunction, f: &SimpleFunction) -> Result<Scalar> {
    check_pair(v, f)?;
    let total = v.total();
    if total.is_zero() {
        return Err(Error::ZeroTotalMass);
    }
    Ok(choquet(v, &f.negated())? / total)
}

/// Dyadic lower approximation `f_k = min(⌊2ᵏ f⌋ / 2ᵏ, k)` of a nonnegative `f`.
/// Non-decreasing in `k`, bounded by `f`, and equal to `f` once `2ᵏ` clears
/// every denominator and `k ≥ max f`.
pub fn monotone_approximation(f: &SimpleFunction, k: u32) -> Result<SimpleFunction> {
    f.require_nonnegative()?;
    let scale = pow2(k);
    let cap = Scalar::from_integer(k.into());
    Ok(f.map(|x| {
        let rounded = (x * &scale).floor() / &scale;
        rounded.min(cap.clone())
    }))
}
