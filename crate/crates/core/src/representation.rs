//! Core membership, sup/inf-over-chains representations, local cores, and
//! the four-way equivalence reports for submodular and supermodular
//! functions.
//!
//! For a monotone `v` with `v(∅) = 0` the following are equivalent:
//!
//! * (a) `v` is submodular;
//! * (b) every extremal measure `μ_{v,I}` lies in the lower core
//!   `{μ : μ(Ω) = v(Ω), μ(B) ≤ v(B) ∀B}`;
//! * (c) `v(A) = max_I μ_{v,I}(A)` for every `A`;
//! * (d) `v(B) = sup { μ(B) : μ ∈ C_{-,v}(A) }` for every `B ⊆ A`, where
//!   `C_{-,v}(A)` is the core of `v` restricted to `A`.
//!
//! The supermodular version swaps `≤` for `≥` and `max` for `min`.
//!
//! Condition (d) is evaluated constructively: the candidate measures are
//! extremal measures of chains that pass through `A`, restricted to `A`.
//! A pair `(A, B)` passes when some candidate lies in `C_{-,v}(A)` and
//! attains `v(B)`. Passing certifies the true sup, and for submodular `v`
//! the chain obtained by inserting `A` and then `B` always passes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::chain::DiscreteMeasure;
use crate::chain::{check_sweep_size, increments, next_permutation, subset_sums, sweep_chains, Chain};
use crate::error::{Error, Result};
use crate::parallel::{find_first, Execution};
use crate::scalar::Scalar;
use crate::setfn::{PairWitness, SetFunction, SubsetRef};

/// Which half of the sub/supermodular duality a computation runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Lower cores, suprema, `μ ≤ v`.
    Submodular,
    /// Upper cores, infima, `μ ≥ v`.
    Supermodular,
}

impl Side {
    /// Core inequality between a measure value and a set-function value.
    fn admits(self, measure: &Scalar, value: &Scalar) -> bool {
        match self {
            Side::Submodular => measure <= value,
            Side::Supermodular => measure >= value,
        }
    }

    /// True if `candidate` strictly improves on `incumbent`.
    fn improves(self, candidate: &Scalar, incumbent: &Scalar) -> bool {
        match self {
            Side::Submodular => candidate > incumbent,
            Side::Supermodular => candidate < incumbent,
        }
    }

    fn pair_witness(self, v: &SetFunction) -> Option<PairWitness> {
        match self {
            Side::Submodular => v.submodular_witness(),
            Side::Supermodular => v.supermodular_witness(),
        }
    }
}

/// Optimal value over chains together with the lexicographically first
/// chain attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainOptimum {
    pub value: Scalar,
    pub chain: Chain,
}

/// First subset `B ⊆ set` breaking membership of `mu` in the core of `v`
/// on `set` (equality at `set`, core inequality on every subset).
pub fn core_violation_on(v: &SetFunction, mu: &DiscreteMeasure, set: SubsetRef, side: Side) -> Option<SubsetRef> {
    set.subsets().find(|&b| {
        let mass = mu.measure(b);
        if b == set {
            &mass != v.get(b)
        } else {
            !side.admits(&mass, v.get(b))
        }
    })
}

/// First subset witnessing `mu ∉ C_{-,v}(Ω)`, if any.
pub fn lower_core_witness(v: &SetFunction, mu: &DiscreteMeasure) -> Option<SubsetRef> {
    core_violation_on(v, mu, v.ground().full(), Side::Submodular)
}

/// `mu(Ω) = v(Ω)` and `mu(B) ≤ v(B)` for every `B`.
pub fn in_lower_core(v: &SetFunction, mu: &DiscreteMeasure) -> bool {
    lower_core_witness(v, mu).is_none()
}

/// First subset witnessing `mu ∉ C_{+,v}(Ω)`, if any.
pub fn upper_core_witness(v: &SetFunction, mu: &DiscreteMeasure) -> Option<SubsetRef> {
    core_violation_on(v, mu, v.ground().full(), Side::Supermodular)
}

pub fn in_upper_core(v: &SetFunction, mu: &DiscreteMeasure) -> bool {
    upper_core_witness(v, mu).is_none()
}

fn weighted(coeff: &Scalar, increment: Scalar) -> Scalar {
    if coeff.is_zero() {
        Scalar::zero()
    } else {
        increment * coeff
    }
}

/// Chain increments `v(P ∪ {e}) − v(P)` over the whole lattice, scaled by a
/// common denominator so the dynamic program runs on integers.
pub(crate) struct IncrementTable {
    m: usize,
    scale: BigInt,
    incs: Ints,
}

enum Ints {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

/// Integers above this many bits are not summed in `i128`.
const SMALL_BITS: u64 = 100;

fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

fn scaled(x: &Scalar, scale: &BigInt) -> BigInt {
    x.numer() * (scale / x.denom())
}

fn to_small(values: &[BigInt]) -> Option<Vec<i128>> {
    values.iter().map(|x| if x.bits() <= SMALL_BITS { x.to_i128() } else { None }).collect()
}

impl IncrementTable {
    pub(crate) fn new(v: &SetFunction) -> Self {
        let m = v.m();
        let scale = common_denominator(v.values());
        let mut incs = vec![BigInt::zero(); (1usize << m) * m];
        for mask in 0..(1usize << m) {
            let prefix = SubsetRef(mask as u32);
            for e in (0..m).filter(|&e| !prefix.contains(e)) {
                incs[mask * m + e] = scaled(&(v.get(prefix.with(e)) - v.get(prefix)), &scale);
            }
        }
        let incs = match to_small(&incs) {
            Some(small) => Ints::Small(small),
            None => Ints::Big(incs),
        };
        Self { m, scale, incs }
    }

    pub(crate) fn optimum(&self, coeffs: &[Scalar], side: Side) -> ChainOptimum {
        let m = self.m;
        let coeff_scale = common_denominator(coeffs);
        let ints: Vec<BigInt> = coeffs.iter().map(|c| scaled(c, &coeff_scale)).collect();
        let (value, order) = match (&self.incs, to_small(&ints)) {
            // i128 only when every path sum provably fits.
            (Ints::Small(incs), Some(c)) if fits(incs, &c, m) => {
                let (value, order) = dp(m, side, |i, e| incs[i] * c[e]);
                (BigInt::from(value), order)
            }
            (Ints::Small(incs), _) => dp(m, side, |i, e| BigInt::from(incs[i]) * &ints[e]),
            (Ints::Big(incs), _) => dp(m, side, |i, e| &incs[i] * &ints[e]),
        };
        let denom = &self.scale * coeff_scale;
        ChainOptimum {
            value: Scalar::new(value, denom),
            chain: Chain::new(order).expect("forward pass visits each element once"),
        }
    }
}

fn bit_len(values: &[i128]) -> u32 {
    values.iter().map(|x| 128 - x.unsigned_abs().leading_zeros()).max().unwrap_or(0)
}

fn fits(incs: &[i128], coeffs: &[i128], m: usize) -> bool {
    bit_len(incs) + bit_len(coeffs) + (usize::BITS - m.leading_zeros()) + 1 < 127
}

/// Longest (or shortest) path from `∅` to `Ω` through the lattice, where
/// stepping from `P` to `P ∪ {e}` gains `gain(P·m + e, e)`.
fn dp<T, G>(m: usize, side: Side, gain: G) -> (T, Vec<usize>)
where
    T: Clone + Ord + Zero + for<'a> std::ops::Add<&'a T, Output = T>,
    G: Fn(usize, usize) -> T,
{
    let size = 1usize << m;
    let better = |a: &T, b: &T| match side {
        Side::Submodular => a > b,
        Side::Supermodular => a < b,
    };
    let mut best_to_top = vec![T::zero(); size];
    for mask in (0..size - 1).rev() {
        let mut best: Option<T> = None;
        for e in (0..m).filter(|&e| mask >> e & 1 == 0) {
            let value = gain(mask * m + e, e) + &best_to_top[mask | 1 << e];
            if best.as_ref().is_none_or(|b| better(&value, b)) {
                best = Some(value);
            }
        }
        best_to_top[mask] = best.expect("proper prefix has a successor");
    }
    let mut order = Vec::with_capacity(m);
    let mut mask = 0usize;
    while order.len() < m {
        let target = &best_to_top[mask];
        let e = (0..m)
            .filter(|&e| mask >> e & 1 == 0)
            .find(|&e| &(gain(mask * m + e, e) + &best_to_top[mask | 1 << e]) == target)
            .expect("optimum is attained by some successor");
        order.push(e);
        mask |= 1 << e;
    }
    (best_to_top.swap_remove(0), order)
}

/// Optimises `Σ_e coeffs[e] · μ_{v,I}({e})` over all chains by dynamic
/// programming on the subset lattice: a chain is a monotone path from `∅`
/// to `Ω`, and the objective is additive along the path.
///
/// `best_to_top[P]` is the optimum over completions from prefix `P`; the
/// witness is rebuilt forwards taking the smallest optimal element at each
/// step, which yields the lexicographically first optimal chain.
pub fn lattice_optimum(v: &SetFunction, coeffs: &[Scalar], side: Side) -> ChainOptimum {
    IncrementTable::new(v).optimum(coeffs, side)
}

/// Same optimisation as [`lattice_optimum`] by visiting all `m!` chains.
pub fn sweep_optimum(v: &SetFunction, coeffs: &[Scalar], side: Side, exec: Execution) -> ChainOptimum {
    let m = v.m();
    let (value, rank) = sweep_chains(
        m,
        exec,
        || None::<(Scalar, usize)>,
        |best, rank, order| {
            let inc = increments(v, order);
            let value = inc.into_iter().zip(coeffs).fold(Scalar::zero(), |acc, (x, c)| acc + weighted(c, x));
            if best.as_ref().is_none_or(|(b, _)| side.improves(&value, b)) {
                *best = Some((value, rank));
            }
        },
        |left, right| match (left, right) {
            (Some(l), Some(r)) => Some(if side.improves(&r.0, &l.0) { r } else { l }),
            (l, r) => l.or(r),
        },
    )
    .expect("at least one chain");
    ChainOptimum { value, chain: Chain::from_rank(m, rank) }
}

fn indicator(m: usize, set: SubsetRef) -> Vec<Scalar> {
    (0..m).map(|e| if set.contains(e) { Scalar::from_integer(1.into()) } else { Scalar::zero() }).collect()
}

fn check_chain_input(v: &SetFunction, set: SubsetRef) -> Result<()> {
    check_sweep_size(v.m())?;
    v.ground().check_subset(set)?;
    v.require_monotone()
}

/// `max_I μ_{v,I}(A)` with the lexicographically first attaining chain.
/// For submodular `v` the value is `v(A)`.
pub fn sup_over_chains(v: &SetFunction, set: SubsetRef) -> Result<ChainOptimum> {
    check_chain_input(v, set)?;
    Ok(lattice_optimum(v, &indicator(v.m(), set), Side::Submodular))
}

/// `min_I μ_{v,I}(A)`; equals `v(A)` for supermodular `v`.
pub fn inf_over_chains(v: &SetFunction, set: SubsetRef) -> Result<ChainOptimum> {
    check_chain_input(v, set)?;
    Ok(lattice_optimum(v, &indicator(v.m(), set), Side::Supermodular))
}

/// [`sup_over_chains`] computed by the full `m!` sweep.
pub fn sup_over_chains_exhaustive(v: &SetFunction, set: SubsetRef, exec: Execution) -> Result<ChainOptimum> {
    check_chain_input(v, set)?;
    Ok(sweep_optimum(v, &indicator(v.m(), set), Side::Submodular, exec))
}

/// Best value of `μ(inner)` over chain-generated members of the local core
/// on `outer`, for every `inner ⊆ outer` at once (indexed by mask).
/// `None` where no candidate lies in the core.
fn local_core_table(v: &SetFunction, outer: SubsetRef, side: Side) -> Vec<Option<Scalar>> {
    let m = v.m();
    let rest: Vec<usize> = outer.complement(m).elements().collect();
    let mut inside: Vec<usize> = outer.elements().collect();
    let mut best: Vec<Option<Scalar>> = vec![None; 1 << m];
    loop {
        let order: Vec<usize> = inside.iter().chain(&rest).copied().collect();
        let mut weights = increments(v, &order);
        for &e in &rest {
            weights[e] = Scalar::zero();
        }
        let sums = subset_sums(&weights);
        let admissible = outer.subsets().all(|b| side.admits(&sums[b.index()], v.get(b)));
        if admissible {
            for b in outer.subsets() {
                let value = &sums[b.index()];
                if best[b.index()].as_ref().is_none_or(|cur| side.improves(value, cur)) {
                    best[b.index()] = Some(value.clone());
                }
            }
        }
        if !next_permutation(&mut inside) {
            break;
        }
    }
    best
}

/// Core-membership test for the restriction to `outer` of the extremal
/// measure along `chain` (which must have `outer` as a prefix).
fn restricted_in_core(v: &SetFunction, chain: &Chain, outer: SubsetRef, side: Side) -> bool {
    let weights = increments(v, chain.order());
    outer.subsets().all(|b| {
        let mass = b.elements().fold(Scalar::zero(), |acc, e| acc + &weights[e]);
        side.admits(&mass, v.get(b))
    })
}

fn local_core_extreme(v: &SetFunction, outer: SubsetRef, inner: SubsetRef, side: Side) -> Result<Option<Scalar>> {
    if !inner.is_subset_of(outer) {
        return Err(Error::NotNested { outer, inner });
    }
    check_chain_input(v, outer)?;
    let canonical = Chain::identity(v.m()).insert_nested(outer, inner)?;
    if restricted_in_core(v, &canonical, outer, side) {
        return Ok(Some(v.get(inner).clone()));
    }
    Ok(local_core_table(v, outer, side).swap_remove(inner.index()))
}

/// `sup { μ(B) : μ ∈ C_{-,v}(A) }` over chain-generated core measures, for
/// `B ⊆ A`. Returns `None` when no chain through `A` yields a core member.
pub fn local_core_sup(v: &SetFunction, outer: SubsetRef, inner: SubsetRef) -> Result<Option<Scalar>> {
    local_core_extreme(v, outer, inner, Side::Submodular)
}

/// Upper-core analogue of [`local_core_sup`].
pub fn local_core_inf(v: &SetFunction, outer: SubsetRef, inner: SubsetRef) -> Result<Option<Scalar>> {
    local_core_extreme(v, outer, inner, Side::Supermodular)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreFailure {
    pub chain: Chain,
    pub subset: SubsetRef,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationFailure {
    pub subset: SubsetRef,
    pub optimum: ChainOptimum,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCoreFailure {
    pub outer: SubsetRef,
    pub inner: SubsetRef,
    /// Best chain-generated core value, `None` if the core admitted none.
    pub best: Option<Scalar>,
}

/// Outcome of the four equivalent conditions, each with the first witness
/// of failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub side: Side,
    pub modularity: Option<PairWitness>,
    pub extremal_in_core: Option<CoreFailure>,
    pub chain_representation: Option<RepresentationFailure>,
    pub local_core: Option<LocalCoreFailure>,
}

impl EquivalenceReport {
    /// (a): sub/supermodularity.
    pub fn a(&self) -> bool {
        self.modularity.is_none()
    }

    /// (b): extremal measures lie in the core.
    pub fn b(&self) -> bool {
        self.extremal_in_core.is_none()
    }

    /// (c): `v` equals its sup/inf over chains.
    pub fn c(&self) -> bool {
        self.chain_representation.is_none()
    }

    /// (d): local core representation for all nested pairs.
    pub fn d(&self) -> bool {
        self.local_core.is_none()
    }

    pub fn flags(&self) -> [bool; 4] {
        [self.a(), self.b(), self.c(), self.d()]
    }

    pub fn all_agree(&self) -> bool {
        let f = self.flags();
        f.iter().all(|&x| x == f[0])
    }
}

fn verify(v: &SetFunction, side: Side, exec: Execution) -> Result<EquivalenceReport> {
    check_sweep_size(v.m())?;
    v.require_monotone()?;
    let m = v.m();
    let size = 1usize << m;
    let full = v.ground().full();

    let modularity = side.pair_witness(v);

    let extremal_in_core = find_first(crate::chain::factorial(m), exec, |rank| {
        let chain = Chain::from_rank(m, rank);
        let sums = subset_sums(&increments(v, chain.order()));
        (0..size)
            .map(|b| SubsetRef(b as u32))
            .find(|&b| b != full && !side.admits(&sums[b.index()], v.get(b)))
            .map(|subset| CoreFailure { chain: chain.clone(), subset })
    });

    let table = IncrementTable::new(v);
    let chain_representation = find_first(size, exec, |mask| {
        let subset = SubsetRef(mask as u32);
        let optimum = table.optimum(&indicator(m, subset), side);
        (&optimum.value != v.get(subset)).then_some(RepresentationFailure { subset, optimum })
    });

    let local_core = find_first(size, exec, |mask| {
        let outer = SubsetRef(mask as u32);
        let base = Chain::identity(m);
        let mut table: Option<Vec<Option<Scalar>>> = None;
        for inner in outer.subsets() {
            let canonical = base.insert_nested(outer, inner).expect("inner ⊆ outer");
            if restricted_in_core(v, &canonical, outer, side) {
                continue;
            }
            let best = table.get_or_insert_with(|| local_core_table(v, outer, side))[inner.index()].clone();
            if best.as_ref() != Some(v.get(inner)) {
                return Some(LocalCoreFailure { outer, inner, best });
            }
        }
        None
    });

    Ok(EquivalenceReport { side, modularity, extremal_in_core, chain_representation, local_core })
}

/// Evaluates the four submodular conditions for a monotone `v`.
pub fn verify_theorem2(v: &SetFunction) -> Result<EquivalenceReport> {
    verify(v, Side::Submodular, Execution::default())
}

pub fn verify_theorem2_with(v: &SetFunction, exec: Execution) -> Result<EquivalenceReport> {
    verify(v, Side::Submodular, exec)
}

/// Evaluates the four supermodular (convex game) conditions for a monotone `v`.
pub fn verify_corollary_supermodular(v: &SetFunction) -> Result<EquivalenceReport> {
    verify(v, Side::Supermodular, Execution::default())
}

pub fn verify_corollary_supermodular_with(v: &SetFunction, exec: Execution) -> Result<EquivalenceReport> {
    verify(v, Side::Supermodular, exec)
}
