//! Maximal chains of subsets, chain insertion, and extremal measures.
//!
//! On a finite ground set every chain that generates the full power set is
//! maximal, so a chain is stored as the permutation `(σ₁, …, σ_m)` whose
//! prefixes `∅ ⊂ {σ₁} ⊂ {σ₁,σ₂} ⊂ … ⊂ Ω` form the chain.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::parallel::{fold_blocks, Execution};
use crate::scalar::Scalar;
use crate::setfn::{GroundSet, SetFunction, SubsetRef};

/// Practical ceiling for sweeps over all `m!` chains.
pub const MAX_SWEEP: usize = 9;

const SWEEP_BLOCK: usize = 720;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    order: Vec<usize>,
}

impl Chain {
    /// `order` must be a permutation of `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let mut seen = 0u32;
        for &e in &order {
            if e >= order.len() || seen >> e & 1 == 1 {
                return Err(Error::InvalidChain);
            }
            seen |= 1 << e;
        }
        Ok(Self { order })
    }

    pub fn identity(m: usize) -> Self {
        Self { order: (0..m).collect() }
    }

    /// The `rank`-th permutation of `0..m` in lexicographic order.
    pub fn from_rank(m: usize, mut rank: usize) -> Self {
        let mut pool: Vec<usize> = (0..m).collect();
        let mut order = Vec::with_capacity(m);
        for k in (0..m).rev() {
            let f = factorial(k);
            order.push(pool.remove(rank / f));
            rank %= f;
        }
        Self { order }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The `m + 1` prefix sets, from `∅` to `Ω`.
    pub fn prefixes(&self) -> impl Iterator<Item = SubsetRef> + '_ {
        std::iter::once(SubsetRef::EMPTY).chain(self.order.iter().scan(SubsetRef::EMPTY, |acc, &e| {
            *acc = acc.with(e);
            Some(*acc)
        }))
    }

    /// True iff `set` is one of the chain's prefixes.
    pub fn has_prefix(&self, set: SubsetRef) -> bool {
        let k = set.len();
        SubsetRef::from_elements(self.order[..k.min(self.order.len())].iter().copied()) == set
    }

    /// Elements of `set` in this chain's relative order, then the rest.
    /// The result has `set` as a prefix.
    pub fn insert(&self, set: SubsetRef) -> Chain {
        let (inside, outside): (Vec<usize>, Vec<usize>) = self.order.iter().partition(|&&e| set.contains(e));
        Chain { order: inside.into_iter().chain(outside).collect() }
    }

    /// Inserts the nested pair `inner ⊆ outer`; the result has both sets as
    /// prefixes and does not depend on the insertion order.
    pub fn insert_nested(&self, outer: SubsetRef, inner: SubsetRef) -> Result<Chain> {
        if !inner.is_subset_of(outer) {
            return Err(Error::NotNested { outer, inner });
        }
        Ok(self.insert(outer).insert(inner))
    }
}

impl fmt::Display for Chain {
    /// 1-based element numbers, e.g. `(2,3,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.order.iter().map(|e| (e + 1).to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Rearranges `order` into its lexicographic successor. Returns false (and
/// leaves the slice sorted ascending) after the last permutation.
pub fn next_permutation(order: &mut [usize]) -> bool {
    let n = order.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && order[i - 1] >= order[i] {
        i -= 1;
    }
    if i == 0 {
        order.reverse();
        return false;
    }
    let mut j = n - 1;
    while order[j] <= order[i - 1] {
        j -= 1;
    }
    order.swap(i - 1, j);
    order[i..].reverse();
    true
}

pub(crate) fn check_sweep_size(m: usize) -> Result<()> {
    if m > MAX_SWEEP {
        return Err(Error::GroundSetTooLarge { got: m, max: MAX_SWEEP });
    }
    Ok(())
}

/// Iterator over all `m!` chains in lexicographic permutation order.
pub struct Chains {
    current: Option<Vec<usize>>,
}

impl Iterator for Chains {
    type Item = Chain;

    fn next(&mut self) -> Option<Chain> {
        let order = self.current.as_mut()?;
        let chain = Chain { order: order.clone() };
        if !next_permutation(order) {
            self.current = None;
        }
        Some(chain)
    }
}

/// All chains of `ground`, each exactly once, lexicographically.
pub fn all_chains(ground: &GroundSet) -> Result<Chains> {
    check_sweep_size(ground.len())?;
    Ok(Chains { current: Some((0..ground.len()).collect()) })
}

/// Folds every chain of an `m`-element ground set. `visit` sees
/// `(accumulator, rank, order)` in increasing rank within a block, and
/// `reduce` combines block results in rank order.
pub(crate) fn sweep_chains<T, I, F, R>(m: usize, exec: Execution, init: I, visit: F, reduce: R) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, usize, &[usize]) + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    let total = factorial(m);
    fold_blocks(
        total,
        SWEEP_BLOCK,
        exec,
        |range| {
            let mut acc = init();
            let mut order = Chain::from_rank(m, range.start).order;
            for rank in range {
                visit(&mut acc, rank, &order);
                next_permutation(&mut order);
            }
            acc
        },
        reduce,
    )
    .expect("at least one chain")
}

/// Exact additive measure given by one nonnegative weight per element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiscreteMeasure {
    ground: GroundSet,
    weights: Vec<Scalar>,
}

impl DiscreteMeasure {
    pub fn new(ground: GroundSet, weights: Vec<Scalar>) -> Result<Self> {
        if weights.len() != ground.len() {
            return Err(Error::DimensionMismatch { expected: ground.len(), got: weights.len() });
        }
        if let Some(i) = weights.iter().position(|w| w.is_negative()) {
            return Err(Error::NegativeWeight(i));
        }
        Ok(Self { ground, weights })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn weights(&self) -> &[Scalar] {
        &self.weights
    }

    pub fn weight(&self, element: usize) -> &Scalar {
        &self.weights[element]
    }

    pub fn measure(&self, set: SubsetRef) -> Scalar {
        set.elements().fold(Scalar::zero(), |acc, i| acc + &self.weights[i])
    }

    pub fn total(&self) -> Scalar {
        self.weights.iter().fold(Scalar::zero(), |acc, w| acc + w)
    }

    /// Measure of every subset, indexed by mask.
    pub fn lattice_values(&self) -> Vec<Scalar> {
        subset_sums(&self.weights)
    }

    /// The measure viewed as a (modular) set function.
    pub fn to_set_function(&self) -> SetFunction {
        SetFunction::new(self.ground.clone(), self.lattice_values()).expect("measure of ∅ is 0")
    }

    /// `∫ f dμ` for per-element values `f`.
    pub fn integrate(&self, f: &[Scalar]) -> Scalar {
        self.weights.iter().zip(f).fold(Scalar::zero(), |acc, (w, x)| acc + w * x)
    }
}

/// `out[mask] = Σ_{i ∈ mask} weights[i]`.
pub(crate) fn subset_sums(weights: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); 1 << weights.len()];
    for mask in 1..out.len() {
        let low = mask.trailing_zeros() as usize;
        out[mask] = &out[mask & (mask - 1)] + &weights[low];
    }
    out
}

/// Telescoping increments of `v` along `order`, indexed by element.
pub(crate) fn increments(v: &SetFunction, order: &[usize]) -> Vec<Scalar> {
    let mut weights = vec![Scalar::zero(); order.len()];
    let mut prefix = SubsetRef::EMPTY;
    for &e in order {
        let next = prefix.with(e);
        weights[e] = v.get(next) - v.get(prefix);
        prefix = next;
    }
    weights
}

/// Extremal measure of `v` along `chain`: element `σᵢ` receives
/// `v({σ₁..σᵢ}) − v({σ₁..σᵢ₋₁})`, so the measure agrees with `v` on every
/// prefix of the chain.
pub fn extremal_measure(v: &SetFunction, chain: &Chain) -> Result<DiscreteMeasure> {
    if chain.len() != v.m() {
        return Err(Error::DimensionMismatch { expected: v.m(), got: chain.len() });
    }
    let weights = increments(v, chain.order());
    if let Some(position) = chain.order().iter().position(|&e| weights[e].is_negative()) {
        return Err(Error::NonMonotoneAlongChain { chain: chain.clone(), position });
    }
    Ok(DiscreteMeasure { ground: v.ground().clone(), weights })
}

/// Alias of [`Chain::insert`].
pub fn insert_into_chain(chain: &Chain, set: SubsetRef) -> Chain {
    chain.insert(set)
}

/// Alias of [`Chain::insert_nested`].
pub fn insert_nested_pair(chain: &Chain, outer: SubsetRef, inner: SubsetRef) -> Result<Chain> {
    chain.insert_nested(outer, inner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn chain1(order: &[usize]) -> Chain {
        Chain::new(order.iter().map(|e| e - 1).collect()).unwrap()
    }

    fn set1(elements: &[usize]) -> SubsetRef {
        SubsetRef::from_elements(elements.iter().map(|e| e - 1))
    }

    #[test]
    fn chain_validation() {
        assert_eq!(Chain::new(vec![0, 0]), Err(Error::InvalidChain));
        assert_eq!(Chain::new(vec![0, 2]), Err(Error::InvalidChain));
        let c = chain1(&[2, 3, 1]);
        let prefixes: Vec<SubsetRef> = c.prefixes().collect();
        assert_eq!(prefixes, vec![SubsetRef::EMPTY, set1(&[2]), set1(&[2, 3]), set1(&[1, 2, 3])]);
    }

    #[test]
    fn chain_counts_and_order() {
        let g1 = GroundSet::numbered(1).unwrap();
        assert_eq!(all_chains(&g1).unwrap().count(), 1);
        let g4 = GroundSet::numbered(4).unwrap();
        assert_eq!(all_chains(&g4).unwrap().count(), 24);
        let g3 = GroundSet::numbered(3).unwrap();
        let first = all_chains(&g3).unwrap().next().unwrap();
        assert_eq!(first.to_string(), "(1,2,3)");
        let all: Vec<Chain> = all_chains(&g4).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (rank, c) in all.iter().enumerate() {
            assert_eq!(&Chain::from_rank(4, rank), c);
        }
        let g10 = GroundSet::numbered(10).unwrap();
        assert!(matches!(all_chains(&g10), Err(Error::GroundSetTooLarge { got: 10, max: 9 })));
    }

    #[test]
    fn insertion_examples() {
        let c = chain1(&[1, 2, 3, 4]);
        let a = set1(&[2, 4]);
        let inserted = c.insert(a);
        assert_eq!(inserted, chain1(&[2, 4, 1, 3]));
        assert!(inserted.has_prefix(a));
        assert_eq!(c.insert(SubsetRef::EMPTY), c);
        assert_eq!(c.insert(SubsetRef::full(4)), c);
        assert_eq!(c.insert(set1(&[1, 2])), c);

        let pair = c.insert_nested(set1(&[1, 2, 3]), set1(&[2])).unwrap();
        assert_eq!(pair, chain1(&[2, 1, 3, 4]));
        assert_eq!(c.insert_nested(a, a).unwrap(), c.insert(a));
        assert_eq!(c.insert_nested(SubsetRef::full(4), SubsetRef::EMPTY).unwrap(), c);
        assert!(matches!(c.insert_nested(set1(&[1]), set1(&[2])), Err(Error::NotNested { .. })));
    }

    #[test]
    fn telescoping_example() {
        let g = GroundSet::numbered(3).unwrap();
        // masks: ∅,{1},{2},{12},{3},{13},{23},Ω
        let by_mask = [0, 1, 2, 3, 3, 4, 5, 6].map(int).to_vec();
        let v = SetFunction::new(g, by_mask).unwrap();
        let mu = extremal_measure(&v, &chain1(&[2, 3, 1])).unwrap();
        assert_eq!(mu.weights(), &[int(1), int(2), int(3)]);
    }

    #[test]
    fn negative_increment_is_reported() {
        let g = GroundSet::numbered(2).unwrap();
        let v = SetFunction::new(g, vec![int(0), int(3), int(1), int(2)]).unwrap();
        let err = extremal_measure(&v, &chain1(&[1, 2])).unwrap_err();
        assert!(matches!(err, Error::NonMonotoneAlongChain { position: 1, .. }));
        assert!(extremal_measure(&v, &chain1(&[2, 1])).is_ok());
    }

    #[test]
    fn measure_basics() {
        let g = GroundSet::numbered(3).unwrap();
        assert!(matches!(
            DiscreteMeasure::new(g.clone(), vec![int(1), int(-1), int(0)]),
            Err(Error::NegativeWeight(1))
        ));
        let mu = DiscreteMeasure::new(g, vec![int(1), int(2), int(4)]).unwrap();
        assert_eq!(mu.lattice_values(), (0..8).map(int).collect::<Vec<_>>());
        assert_eq!(mu.measure(set1(&[1, 3])), int(5));
        assert_eq!(mu.total(), int(7));
    }

    #[test]
    fn sweep_visits_every_rank_in_order() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            let ranks = sweep_chains(
                6,
                exec,
                Vec::new,
                |acc, rank, order| {
                    assert_eq!(Chain::from_rank(6, rank).order(), order);
                    acc.push(rank);
                },
                |mut a, b| {
                    a.extend(b);
                    a
                },
            );
            assert_eq!(ranks, (0..720).collect::<Vec<_>>());
        }
    }
}
