//! Ground sets, subsets as bitmasks, and exact set functions.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::parallel::{find_first, Execution};
use crate::scalar::Scalar;

/// Largest ground set whose full subset lattice is stored densely.
pub const MAX_GROUND: usize = 16;

/// Ordered, labelled finite ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    /// Labels must be unique, non-empty and free of commas.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() || labels.len() > MAX_GROUND {
            return Err(Error::GroundSetSize { got: labels.len(), max: MAX_GROUND });
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.contains(',') || label.trim() != label {
                return Err(Error::InvalidLabel(label.clone()));
            }
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self { labels })
    }

    /// Ground set labelled `1..=m`.
    pub fn numbered(m: usize) -> Result<Self> {
        Self::new((1..=m).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, element: usize) -> &str {
        &self.labels[element]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Number of subsets, `2^m`.
    pub fn lattice_size(&self) -> usize {
        1 << self.len()
    }

    pub fn full(&self) -> SubsetRef {
        SubsetRef::full(self.len())
    }

    pub fn subsets(&self) -> impl Iterator<Item = SubsetRef> {
        (0..self.lattice_size() as u32).map(SubsetRef)
    }

    /// `{a,b}` using element labels; `∅` for the empty set.
    pub fn format_subset(&self, s: SubsetRef) -> String {
        if s.is_empty() {
            return "∅".to_owned();
        }
        let names: Vec<&str> = s.elements().map(|i| self.label(i)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub(crate) fn check_subset(&self, s: SubsetRef) -> Result<()> {
        if s.bits() >> self.len() != 0 {
            return Err(Error::SubsetOutOfRange(s.bits()));
        }
        Ok(())
    }
}

/// A subset of the ground set: bit `i` set iff element `i` belongs to it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetRef(pub u32);

impl SubsetRef {
    pub const EMPTY: SubsetRef = SubsetRef(0);

    pub fn full(m: usize) -> Self {
        SubsetRef(((1u64 << m) - 1) as u32)
    }

    pub fn singleton(element: usize) -> Self {
        SubsetRef(1 << element)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        SubsetRef(elements.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, element: usize) -> bool {
        self.0 >> element & 1 == 1
    }

    pub fn with(self, element: usize) -> Self {
        SubsetRef(self.0 | 1 << element)
    }

    pub fn without(self, element: usize) -> Self {
        SubsetRef(self.0 & !(1 << element))
    }

    pub fn union(self, other: Self) -> Self {
        SubsetRef(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        SubsetRef(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        SubsetRef(self.0 & !other.0)
    }

    pub fn complement(self, m: usize) -> Self {
        SubsetRef(!self.0 & Self::full(m).0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing element order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = SubsetRef> {
        let outer = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == outer { None } else { Some(((cur | !outer).wrapping_add(1)) & outer) };
            Some(SubsetRef(cur))
        })
    }
}

impl fmt::Display for SubsetRef {
    /// Uses 1-based element numbers, matching ground sets from [`GroundSet::numbered`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.elements().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Subsets ordered by cardinality, then lexicographically by element list.
pub fn table_order(m: usize) -> Vec<SubsetRef> {
    let mut all: Vec<SubsetRef> = (0..1u32 << m).map(SubsetRef).collect();
    all.sort_by_key(|s| (s.len(), s.elements().collect::<Vec<_>>()));
    all
}

/// First failing pair of a monotonicity check: `smaller ⊆ larger` but
/// `v(smaller) > v(larger)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonotoneWitness {
    pub smaller: SubsetRef,
    pub larger: SubsetRef,
}

/// First failing pair `(a, b)` of a modularity inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub a: SubsetRef,
    pub b: SubsetRef,
}

/// Exact set function on the full subset lattice, with `v(∅) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFunction {
    ground: GroundSet,
    values: Vec<Scalar>,
}

impl SetFunction {
    /// `values` is indexed by subset mask.
    pub fn new(ground: GroundSet, values: Vec<Scalar>) -> Result<Self> {
        if values.len() != ground.lattice_size() {
            return Err(Error::DimensionMismatch { expected: ground.lattice_size(), got: values.len() });
        }
        if !values[0].is_zero() {
            return Err(Error::NonZeroEmptySet);
        }
        Ok(Self { ground, values })
    }

    pub fn from_fn<F: FnMut(SubsetRef) -> Scalar>(ground: GroundSet, mut f: F) -> Result<Self> {
        let values = ground.subsets().map(&mut f).collect();
        Self::new(ground, values)
    }

    pub fn zero(ground: GroundSet) -> Self {
        let values = vec![Scalar::zero(); ground.lattice_size()];
        Self { ground, values }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn m(&self) -> usize {
        self.ground.len()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Scalar> {
        self.values
    }

    pub fn get(&self, s: SubsetRef) -> &Scalar {
        &self.values[s.index()]
    }

    /// `v(Ω)`.
    pub fn total(&self) -> &Scalar {
        self.values.last().expect("lattice is never empty")
    }

    /// First `(A, A ∪ {i})` with `v(A) > v(A ∪ {i})`, scanning masks then
    /// elements in increasing order. Local increments suffice because
    /// inclusion chains are built from single-element steps.
    pub fn monotone_witness(&self) -> Option<MonotoneWitness> {
        let m = self.m();
        find_first(self.values.len(), Execution::default(), |bits| {
            let a = SubsetRef(bits as u32);
            (0..m).filter(|&i| !a.contains(i)).find_map(|i| {
                let b = a.with(i);
                (self.get(a) > self.get(b)).then_some(MonotoneWitness { smaller: a, larger: b })
            })
        })
    }

    pub fn is_monotone(&self) -> bool {
        self.monotone_witness().is_none()
    }

    /// Returns `Err(NotMonotone)` with the first witness.
    pub fn require_monotone(&self) -> Result<()> {
        match self.monotone_witness() {
            None => Ok(()),
            Some(w) => Err(Error::NotMonotone { smaller: w.smaller, larger: w.larger }),
        }
    }

    fn local_pair_witness(&self, supermodular: bool) -> Option<PairWitness> {
        let m = self.m();
        find_first(self.values.len(), Execution::default(), |bits| {
            let base = SubsetRef(bits as u32);
            for i in (0..m).filter(|&i| !base.contains(i)) {
                for j in (i + 1..m).filter(|&j| !base.contains(j)) {
                    let (a, b) = (base.with(i), base.with(j));
                    let split = self.get(a) + self.get(b);
                    let joined = self.get(a.union(b)) + self.get(base);
                    let fails = if supermodular { split > joined } else { split < joined };
                    if fails {
                        return Some(PairWitness { a, b });
                    }
                }
            }
            None
        })
    }

    /// First pair violating `v(A) + v(B) ≥ v(A∪B) + v(A∩B)`, found through
    /// the local criterion on `(A∪{i}, A∪{j})` with `i < j`, `i, j ∉ A`.
    pub fn submodular_witness(&self) -> Option<PairWitness> {
        self.local_pair_witness(false)
    }

    pub fn is_submodular(&self) -> bool {
        self.submodular_witness().is_none()
    }

    /// Mirror of [`Self::submodular_witness`] with the inequality reversed.
    pub fn supermodular_witness(&self) -> Option<PairWitness> {
        self.local_pair_witness(true)
    }

    pub fn is_supermodular(&self) -> bool {
        self.supermodular_witness().is_none()
    }

    /// `ṽ(A) = v(Ω) − v(Aᶜ)`. An involution that exchanges submodular and
    /// supermodular functions.
    pub fn dual(&self) -> SetFunction {
        let m = self.m();
        let total = self.total();
        let values = self.ground.subsets().map(|a| total - self.get(a.complement(m))).collect();
        SetFunction { ground: self.ground.clone(), values }
    }

    /// True iff `v(N ∪ A) = v(Nᶜ ∩ A) = v(A)` for every `A`.
    pub fn is_null_set(&self, null: SubsetRef) -> bool {
        let keep = null.complement(self.m());
        self.ground.subsets().all(|a| {
            let v = self.get(a);
            self.get(null.union(a)) == v && self.get(keep.intersection(a)) == v
        })
    }

    /// Pointwise `self ≤ other`.
    pub fn dominated_by(&self, other: &SetFunction) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }
}
