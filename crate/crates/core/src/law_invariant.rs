//! Distribution-determined submodular functions `v_μ` on a weighted finite
//! space, their quantile representations, comonotone attainment, and the
//! spectral decomposition into CVaR-like components.
//!
//! Every distribution here is a step function with at most `m`
//! breakpoints, so every integral is a finite exact sum over segments.
//! Elements of zero reference weight carry no mass and are ignored by the
//! distributions.

use num_traits::{Signed, Zero};

use crate::chain::{all_chains, DiscreteMeasure};
use crate::choquet::{choquet, choquet_sup_representation, SimpleFunction};
use crate::error::{Error, Result};
use crate::scalar::{format_scalar, Scalar};
use crate::setfn::{GroundSet, SetFunction, SubsetRef};

/// Reference measure `ν` with a density `dμ/dν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedSpace {
    nu: DiscreteMeasure,
    density: Vec<Scalar>,
}

impl WeightedSpace {
    pub fn new(nu: DiscreteMeasure, density: Vec<Scalar>) -> Result<Self> {
        let m = nu.ground().len();
        if density.len() != m {
            return Err(Error::DimensionMismatch { expected: m, got: density.len() });
        }
        if let Some(i) = density.iter().position(|d| d.is_negative()) {
            return Err(Error::NegativeValues(i));
        }
        if nu.total().is_zero() {
            return Err(Error::ZeroTotalMass);
        }
        Ok(Self { nu, density })
    }

    /// `ν` = counting measure.
    pub fn counting(ground: GroundSet, density: Vec<Scalar>) -> Result<Self> {
        let ones = vec![Scalar::from_integer(1.into()); ground.len()];
        Self::new(DiscreteMeasure::new(ground, ones)?, density)
    }

    pub fn ground(&self) -> &GroundSet {
        self.nu.ground()
    }

    pub fn nu(&self) -> &DiscreteMeasure {
        &self.nu
    }

    pub fn density(&self) -> &[Scalar] {
        &self.density
    }

    /// `μ({i}) = density[i]·ν({i})`.
    pub fn mu(&self) -> DiscreteMeasure {
        let weights = self.density.iter().zip(self.nu.weights()).map(|(d, w)| d * w).collect();
        DiscreteMeasure::new(self.ground().clone(), weights).expect("products of nonnegatives")
    }

    pub fn nu_total(&self) -> Scalar {
        self.nu.total()
    }

    pub fn mu_total(&self) -> Scalar {
        self.mu().total()
    }

    fn check_function(&self, f: &SimpleFunction) -> Result<()> {
        if f.values().len() != self.density.len() {
            return Err(Error::DimensionMismatch { expected: self.density.len(), got: f.values().len() });
        }
        f.require_nonnegative()
    }
}

/// Right-continuous non-decreasing step function on `[0, ∞)`: `F(z)` is the
/// level of the last breakpoint `≤ z`, and 0 before the first one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepDistribution {
    breakpoints: Vec<Scalar>,
    levels: Vec<Scalar>,
}

impl StepDistribution {
    pub fn new(breakpoints: Vec<Scalar>, levels: Vec<Scalar>) -> Result<Self> {
        if breakpoints.is_empty() || breakpoints.len() != levels.len() {
            return Err(Error::InvalidDistribution("need one level per breakpoint".into()));
        }
        if breakpoints[0].is_negative() || breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidDistribution("breakpoints must be nonnegative and strictly increasing".into()));
        }
        if levels[0].is_negative() || levels.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidDistribution("levels must be nonnegative and non-decreasing".into()));
        }
        if !levels.last().expect("non-empty").is_positive() {
            return Err(Error::InvalidDistribution("total mass must be positive".into()));
        }
        Ok(Self { breakpoints, levels })
    }

    /// `F(y) = Σ { weights[i] : values[i] ≤ y }`, ignoring zero weights.
    /// Values must be nonnegative and some weight positive.
    pub fn of_values(values: &[Scalar], weights: &[Scalar]) -> Self {
        let mut pairs: Vec<(&Scalar, &Scalar)> = values.iter().zip(weights).filter(|(_, w)| w.is_positive()).collect();
        pairs.sort_by(|a, b| a.0.cmp(b.0));
        let mut breakpoints: Vec<Scalar> = Vec::new();
        let mut levels: Vec<Scalar> = Vec::new();
        let mut running = Scalar::zero();
        for (value, weight) in pairs {
            running += weight;
            if breakpoints.last() == Some(value) {
                *levels.last_mut().expect("parallel vectors") = running.clone();
            } else {
                breakpoints.push(value.clone());
                levels.push(running.clone());
            }
        }
        debug_assert!(!breakpoints.is_empty(), "some weight must be positive");
        Self { breakpoints, levels }
    }

    pub fn breakpoints(&self) -> &[Scalar] {
        &self.breakpoints
    }

    pub fn levels(&self) -> &[Scalar] {
        &self.levels
    }

    /// `F(+∞)`.
    pub fn total(&self) -> &Scalar {
        self.levels.last().expect("non-empty")
    }

    pub fn eval(&self, z: &Scalar) -> Scalar {
        let passed = self.breakpoints.partition_point(|b| b <= z);
        if passed == 0 {
            Scalar::zero()
        } else {
            self.levels[passed - 1].clone()
        }
    }

    /// `F⁻¹(β) = inf { z ≥ 0 : F(z) > β }` for `0 ≤ β < F(+∞)`.
    pub fn quantile(&self, beta: &Scalar) -> Result<Scalar> {
        if beta.is_negative() || beta >= self.total() {
            return Err(Error::BetaOutOfRange { beta: format_scalar(beta), total: format_scalar(self.total()) });
        }
        let k = self.levels.partition_point(|l| l <= beta);
        Ok(self.breakpoints[k].clone())
    }

    /// `F⁻¹` as `(lo, hi, value)` pieces covering `[0, F(+∞))`.
    pub fn quantile_segments(&self) -> Vec<(Scalar, Scalar, Scalar)> {
        let mut out = Vec::with_capacity(self.levels.len());
        let mut lo = Scalar::zero();
        for (z, level) in self.breakpoints.iter().zip(&self.levels) {
            if level > &lo {
                out.push((lo.clone(), level.clone(), z.clone()));
                lo = level.clone();
            }
        }
        out
    }

    /// `1 − F` as `(length, value)` pieces of positive length covering
    /// `[0, z_r)`. The survival is 0 beyond the last breakpoint.
    pub fn survival_segments(&self) -> Vec<(Scalar, Scalar)> {
        let total = self.total();
        let mut out = Vec::with_capacity(self.levels.len());
        let mut z = Scalar::zero();
        let mut level = Scalar::zero();
        for (next_z, next_level) in self.breakpoints.iter().zip(&self.levels) {
            if next_z > &z {
                out.push((next_z - &z, total - &level));
            }
            z = next_z.clone();
            level = next_level.clone();
        }
        out
    }

    /// `∫_a^b F⁻¹(β) dβ`, with the range clipped to `[0, F(+∞)]`.
    pub fn integrate_quantile(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.quantile_segments().into_iter().fold(Scalar::zero(), |acc, (lo, hi, z)| {
            let left = if &lo > a { lo } else { a.clone() };
            let right = if &hi < b { hi } else { b.clone() };
            if right > left {
                acc + (right - left) * z
            } else {
                acc
            }
        })
    }

    /// `∫_0^a F(z) dz` for `a ≥ 0`.
    pub fn integrate_cdf(&self, a: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for (k, z) in self.breakpoints.iter().enumerate() {
            if z >= a {
                break;
            }
            let end = match self.breakpoints.get(k + 1) {
                Some(next) if next < a => next,
                _ => a,
            };
            acc += (end - z) * &self.levels[k];
        }
        acc
    }

    /// `∫_0^∞ min(F(+∞) − F(z), cap) dz`.
    pub fn integrate_survival_min(&self, cap: &Scalar) -> Scalar {
        self.survival_segments().into_iter().fold(Scalar::zero(), |acc, (len, s)| {
            if &s < cap {
                acc + len * s
            } else {
                acc + len * cap
            }
        })
    }

    /// Checks `∫_0^α F⁻¹ + ∫_0^a F = a·α` at every breakpoint `a` with
    /// `α = F(a)`.
    pub fn rectangle_identity_holds(&self) -> bool {
        self.breakpoints
            .iter()
            .zip(&self.levels)
            .all(|(a, alpha)| self.integrate_quantile(&Scalar::zero(), alpha) + self.integrate_cdf(a) == a * alpha)
    }
}

/// `∫_0^T F⁻¹(β)·G⁻¹(β) dβ` for two distributions of equal total `T`.
pub fn quantile_product_integral(f: &StepDistribution, g: &StepDistribution) -> Result<Scalar> {
    if f.total() != g.total() {
        return Err(Error::Inconsistent("quantile product over distributions of different totals".into()));
    }
    let (fs, gs) = (f.quantile_segments(), g.quantile_segments());
    let (mut i, mut j) = (0, 0);
    let mut lo = Scalar::zero();
    let mut acc = Scalar::zero();
    while i < fs.len() && j < gs.len() {
        let hi = if fs[i].1 < gs[j].1 { fs[i].1.clone() } else { gs[j].1.clone() };
        acc += (&hi - &lo) * &fs[i].2 * &gs[j].2;
        if fs[i].1 == hi {
            i += 1;
        }
        if gs[j].1 == hi {
            j += 1;
        }
        lo = hi;
    }
    Ok(acc)
}

/// `F_μ(y) = ν({dμ/dν ≤ y})`.
pub fn distribution_of_density(w: &WeightedSpace) -> StepDistribution {
    StepDistribution::of_values(&w.density, w.nu.weights())
}

/// `F_f(z) = ν({f ≤ z})` for `f ≥ 0`.
pub fn distribution_of_function(w: &WeightedSpace, f: &SimpleFunction) -> Result<StepDistribution> {
    w.check_function(f)?;
    Ok(StepDistribution::of_values(f.values(), w.nu.weights()))
}

/// `v_μ(A) = ∫_0^∞ (ν(Ω) − F_μ(z)) ∧ ν(A) dz`.
pub fn v_mu(w: &WeightedSpace, set: SubsetRef) -> Result<Scalar> {
    w.ground().check_subset(set)?;
    Ok(distribution_of_density(w).integrate_survival_min(&w.nu.measure(set)))
}

/// `v_μ` on every subset.
pub fn v_mu_set_function(w: &WeightedSpace) -> SetFunction {
    let dist = distribution_of_density(w);
    SetFunction::from_fn(w.ground().clone(), |a| dist.integrate_survival_min(&w.nu.measure(a))).expect("v_μ(∅) = 0")
}

/// `v_μ(A) = ∫_{ν(Aᶜ)}^{ν(Ω)} F_μ⁻¹(β) dβ`.
pub fn v_mu_via_quantile(w: &WeightedSpace, set: SubsetRef) -> Result<Scalar> {
    w.ground().check_subset(set)?;
    let total = w.nu_total();
    let from = &total - w.nu.measure(set);
    Ok(distribution_of_density(w).integrate_quantile(&from, &total))
}

/// `v_μ(f) = ∫_0^{ν(Ω)} F_μ⁻¹(β)·F_f⁻¹(β) dβ` for `f ≥ 0`.
pub fn choquet_product_formula(w: &WeightedSpace, f: &SimpleFunction) -> Result<Scalar> {
    let f_dist = distribution_of_function(w, f)?;
    quantile_product_integral(&distribution_of_density(w), &f_dist)
}

/// A pair `(i, j)` with `f(i) < f(j)` and `g(i) > g(j)`, if one exists.
pub fn comonotone_crossing(f: &[Scalar], g: &[Scalar]) -> Option<(usize, usize)> {
    let m = f.len().min(g.len());
    (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).find(|&(i, j)| f[i] < f[j] && g[i] > g[j])
}

/// True iff the level-set families of `f` and `g` form a single chain.
pub fn comonotone_check(f: &SimpleFunction, g: &SimpleFunction) -> bool {
    comonotone_crossing(f.values(), g.values()).is_none()
}

/// `max ∫ f dμ′` over `μ′ ≪ ν` with `F_{μ′} = F_μ`, enumerated as density
/// rearrangements along `ν`-weight-preserving permutations.
pub fn rearrangement_sup(w: &WeightedSpace, f: &SimpleFunction) -> Result<Scalar> {
    if f.values().len() != w.density.len() {
        return Err(Error::DimensionMismatch { expected: w.density.len(), got: f.values().len() });
    }
    let nu = w.nu.weights();
    let mut best: Option<Scalar> = None;
    for chain in all_chains(w.ground())? {
        let pi = chain.order();
        if (0..pi.len()).any(|i| nu[pi[i]] != nu[i]) {
            continue;
        }
        let value = (0..pi.len()).fold(Scalar::zero(), |acc, i| acc + f.value(i) * &w.density[pi[i]] * &nu[i]);
        if best.as_ref().is_none_or(|b| &value > b) {
            best = Some(value);
        }
    }
    Ok(best.expect("identity permutation always qualifies"))
}

/// The two suprema of `∫ f dμ′`: over equally distributed measures, and
/// over extremal measures of chains of `v_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationReport {
    pub choquet: Scalar,
    pub integral: Scalar,
    pub rearrangement_sup: Scalar,
    pub chain_sup: Scalar,
}

impl DominationReport {
    /// `v_μ(f) − sup ∫ f dμ′` over rearrangements; always `≥ 0`.
    pub fn gap(&self) -> Scalar {
        &self.choquet - &self.rearrangement_sup
    }

    pub fn holds(&self) -> bool {
        self.choquet >= self.rearrangement_sup
            && self.rearrangement_sup >= self.integral
            && self.chain_sup == self.choquet
    }
}

pub fn domination_report(w: &WeightedSpace, f: &SimpleFunction) -> Result<DominationReport> {
    w.check_function(f)?;
    let v = v_mu_set_function(w);
    Ok(DominationReport {
        choquet: choquet(&v, f)?,
        integral: w.mu().integrate(f.values()),
        rearrangement_sup: rearrangement_sup(w, f)?,
        chain_sup: choquet_sup_representation(&v, f)?.value,
    })
}

/// How [`comonotone_attainment`] checks that the level sets of the density
/// are rich enough.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum AttainmentMode {
    /// Uniform `ν` and pairwise distinct densities.
    #[default]
    Strict,
    /// Every value of `ν` is a value of `F_μ` (or 0).
    Relaxed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttainmentReport {
    pub choquet: Scalar,
    pub integral: Scalar,
    pub rearrangement_sup: Scalar,
}

/// For `f` comonotone with the density, `v_μ(f) = ∫ f dμ` = the sup over
/// equally distributed measures. Returns the three values after checking
/// they agree.
pub fn comonotone_attainment(w: &WeightedSpace, f: &SimpleFunction, mode: AttainmentMode) -> Result<AttainmentReport> {
    w.check_function(f)?;
    if let Some((i, j)) = comonotone_crossing(f.values(), &w.density) {
        return Err(Error::NotComonotone(i, j));
    }
    match mode {
        AttainmentMode::Strict => {
            let m = w.density.len();
            if let Some((i, j)) =
                (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).find(|&(i, j)| w.density[i] == w.density[j])
            {
                return Err(Error::TiedDensities(i, j));
            }
            let nu = w.nu.weights();
            if nu.iter().any(|x| x != &nu[0]) {
                return Err(Error::HypothesisViolated("strict mode needs a uniform reference measure"));
            }
        }
        AttainmentMode::Relaxed => {
            let dist = distribution_of_density(w);
            let covered = w.ground().subsets().all(|a| {
                let x = w.nu.measure(a);
                x.is_zero() || dist.levels().contains(&x)
            });
            if !covered {
                return Err(Error::HypothesisViolated(
                    "some value of the reference measure is not a value of the distribution",
                ));
            }
        }
    }
    let report = AttainmentReport {
        choquet: choquet(&v_mu_set_function(w), f)?,
        integral: w.mu().integrate(f.values()),
        rearrangement_sup: rearrangement_sup(w, f)?,
    };
    if report.choquet != report.integral || report.integral != report.rearrangement_sup {
        return Err(Error::Inconsistent(format!(
            "comonotone attainment failed: {} / {} / {}",
            format_scalar(&report.choquet),
            format_scalar(&report.integral),
            format_scalar(&report.rearrangement_sup)
        )));
    }
    Ok(report)
}

/// Finite measure on `(0, 1]` given by atoms `(α, mass)`, sorted by `α`
/// descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralMeasure {
    atoms: Vec<(Scalar, Scalar)>,
}

impl SpectralMeasure {
    pub fn atoms(&self) -> &[(Scalar, Scalar)] {
        &self.atoms
    }

    pub fn total_mass(&self) -> Scalar {
        self.atoms.iter().map(|(_, m)| m).sum()
    }

    /// `m((0, γ])`.
    pub fn cumulative(&self, gamma: &Scalar) -> Scalar {
        self.atoms.iter().filter(|(a, _)| a <= gamma).map(|(_, m)| m).sum()
    }

    /// `∫_{[1−γ, 1]} m(dα)/α`.
    pub fn zeta(&self, gamma: &Scalar) -> Scalar {
        let from = Scalar::from_integer(1.into()) - gamma;
        self.atoms.iter().filter(|(a, _)| a >= &from).map(|(a, m)| m / a).sum()
    }
}

/// Spectral measure with `m((0, γ]) = (1/μ(Ω)) ∫_{ S(y) ≤ γν(Ω) } S(y) dy`,
/// where `S(y) = ν(dμ/dν > y)`. Each survival plateau contributes one atom.
pub fn kusuoka_measure(w: &WeightedSpace) -> Result<SpectralMeasure> {
    let mu_total = w.mu_total();
    if mu_total.is_zero() {
        return Err(Error::ZeroTotalMass);
    }
    let nu_total = w.nu_total();
    let mut atoms: Vec<(Scalar, Scalar)> = Vec::new();
    for (len, s) in distribution_of_density(w).survival_segments() {
        let alpha = &s / &nu_total;
        let mass = len * s / &mu_total;
        match atoms.iter_mut().find(|(a, _)| a == &alpha) {
            Some((_, m)) => *m += mass,
            None => atoms.push((alpha, mass)),
        }
    }
    atoms.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(SpectralMeasure { atoms })
}

/// `v_α(f) = (μ(Ω)/(αν(Ω))) ∫_0^∞ ν(f > z) ∧ αν(Ω) dz` for `0 < α ≤ 1`.
pub fn cvar_component(w: &WeightedSpace, f: &SimpleFunction, alpha: &Scalar) -> Result<Scalar> {
    if !alpha.is_positive() || alpha > &Scalar::from_integer(1.into()) {
        return Err(Error::AlphaOutOfRange(format_scalar(alpha)));
    }
    let dist = distribution_of_function(w, f)?;
    let cap = alpha * w.nu_total();
    Ok(w.mu_total() / &cap * dist.integrate_survival_min(&cap))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralTerm {
    pub alpha: Scalar,
    pub mass: Scalar,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralReport {
    pub choquet: Scalar,
    pub decomposition: Scalar,
    pub terms: Vec<SpectralTerm>,
}

impl SpectralReport {
    pub fn holds(&self) -> bool {
        self.choquet == self.decomposition
    }
}

/// Compares `v_μ(f)` with `Σ m({α})·v_α(f)` over the atoms of the spectral
/// measure.
pub fn spectral_decomposition_check(w: &WeightedSpace, f: &SimpleFunction) -> Result<SpectralReport> {
    w.check_function(f)?;
    let spectral = kusuoka_measure(w)?;
    let terms = spectral
        .atoms
        .iter()
        .map(|(alpha, mass)| {
            Ok(SpectralTerm { alpha: alpha.clone(), mass: mass.clone(), value: cvar_component(w, f, alpha)? })
        })
        .collect::<Result<Vec<_>>>()?;
    let decomposition = terms.iter().map(|t| &t.mass * &t.value).sum();
    Ok(SpectralReport { choquet: choquet(&v_mu_set_function(w), f)?, decomposition, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn two_point() -> WeightedSpace {
        WeightedSpace::counting(GroundSet::new(["a", "b"]).unwrap(), ints(&[2, 0])).unwrap()
    }

    fn func(w: &WeightedSpace, v: &[i64]) -> SimpleFunction {
        SimpleFunction::new(w.ground().clone(), ints(v)).unwrap()
    }

    #[test]
    fn two_point_distribution() {
        let w = two_point();
        let f = distribution_of_density(&w);
        assert_eq!(f.breakpoints(), &ints(&[0, 2]));
        assert_eq!(f.levels(), &ints(&[1, 2]));
        assert_eq!(f.eval(&ratio(3, 2)), int(1));
        assert_eq!(f.eval(&int(2)), int(2));
        assert!(f.rectangle_identity_holds());
    }

    #[test]
    fn quantile_example() {
        let f = StepDistribution::new(ints(&[1, 3]), ints(&[2, 4])).unwrap();
        assert_eq!(f.quantile(&int(0)).unwrap(), int(1));
        assert_eq!(f.quantile(&ratio(19, 10)).unwrap(), int(1));
        assert_eq!(f.quantile(&int(2)).unwrap(), int(3));
        assert!(matches!(f.quantile(&int(4)), Err(Error::BetaOutOfRange { .. })));
        assert!(f.rectangle_identity_holds());
        assert_eq!(f.integrate_cdf(&int(5)), int(2 * 2 + 4 * 2));
    }

    #[test]
    fn distribution_validation() {
        assert!(StepDistribution::new(ints(&[1, 1]), ints(&[1, 2])).is_err());
        assert!(StepDistribution::new(ints(&[1, 2]), ints(&[2, 1])).is_err());
        assert!(StepDistribution::new(ints(&[0]), ints(&[0])).is_err());
        assert!(StepDistribution::new(vec![], vec![]).is_err());
    }

    #[test]
    fn two_point_v_mu() {
        let w = two_point();
        let v = v_mu_set_function(&w);
        assert_eq!(v.values(), &ints(&[0, 2, 2, 2]));
        assert_eq!(v_mu_via_quantile(&w, SubsetRef(0b01)).unwrap(), int(2));
        assert_eq!(v_mu_via_quantile(&w, SubsetRef(0b11)).unwrap(), int(2));
        assert_eq!(v_mu_via_quantile(&w, SubsetRef::EMPTY).unwrap(), int(0));
    }

    #[test]
    fn two_point_spectral() {
        let w = two_point();
        let k = kusuoka_measure(&w).unwrap();
        assert_eq!(k.atoms(), &[(ratio(1, 2), int(1))]);
        assert_eq!(k.total_mass(), int(1));
        let report = spectral_decomposition_check(&w, &func(&w, &[1, 0])).unwrap();
        assert!(report.holds());
        assert_eq!(report.choquet, int(2));
    }

    #[test]
    fn constant_density_is_modular() {
        let w = WeightedSpace::new(
            DiscreteMeasure::new(GroundSet::numbered(3).unwrap(), vec![int(1), int(2), ratio(1, 2)]).unwrap(),
            vec![int(3); 3],
        )
        .unwrap();
        let v = v_mu_set_function(&w);
        assert_eq!(v, w.mu().to_set_function());
        let k = kusuoka_measure(&w).unwrap();
        assert_eq!(k.atoms(), &[(int(1), int(1))]);
        let q = distribution_of_density(&w);
        assert_eq!(q.quantile(&int(0)).unwrap(), int(3));
    }

    #[test]
    fn attainment_and_its_failures() {
        let w = WeightedSpace::counting(GroundSet::numbered(3).unwrap(), ints(&[1, 2, 4])).unwrap();
        let f = func(&w, &[1, 2, 4]);
        let r = comonotone_attainment(&w, &f, AttainmentMode::Strict).unwrap();
        assert_eq!(r.choquet, int(21));
        let anti = func(&w, &[4, 2, 1]);
        assert_eq!(comonotone_attainment(&w, &anti, AttainmentMode::Strict), Err(Error::NotComonotone(1, 0)));
        let d = domination_report(&w, &anti).unwrap();
        assert!(d.holds());
        assert!(d.choquet > d.integral);
        let tied = WeightedSpace::counting(GroundSet::numbered(3).unwrap(), ints(&[1, 1, 4])).unwrap();
        assert_eq!(
            comonotone_attainment(&tied, &func(&tied, &[1, 1, 1]), AttainmentMode::Strict),
            Err(Error::TiedDensities(0, 1))
        );
    }

    #[test]
    fn cvar_examples() {
        let w = WeightedSpace::counting(GroundSet::numbered(2).unwrap(), ints(&[1, 1])).unwrap();
        let f = func(&w, &[6, 2]);
        assert_eq!(cvar_component(&w, &f, &int(1)).unwrap(), int(8));
        assert_eq!(cvar_component(&w, &f, &ratio(1, 2)).unwrap(), int(12));
        assert_eq!(cvar_component(&w, &func(&w, &[0, 0]), &ratio(1, 3)).unwrap(), int(0));
        assert!(matches!(cvar_component(&w, &f, &int(0)), Err(Error::AlphaOutOfRange(_))));
    }

    #[test]
    fn comonotone_examples() {
        let g = GroundSet::numbered(2).unwrap();
        let f = SimpleFunction::new(g.clone(), ints(&[1, 2])).unwrap();
        let h = SimpleFunction::new(g.clone(), ints(&[2, 1])).unwrap();
        assert!(comonotone_check(&f, &f));
        assert!(!comonotone_check(&f, &h));
        assert!(comonotone_check(&h, &SimpleFunction::constant(g, int(7))));
    }
}
