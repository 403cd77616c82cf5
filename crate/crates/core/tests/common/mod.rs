//! Seeded generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use chainrep::scalar::{int, ratio};
use chainrep::setfn::table_order;
use chainrep::{DiscreteMeasure, GroundSet, Scalar, SetFunction, SimpleFunction, SubsetRef, WeightedSpace};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The m=4 table: v₀, v₁, v₂ in cardinality-then-lexicographic order.
pub const V0: [i64; 16] = [0, 7, 13, 20, 19, 17, 24, 30, 28, 34, 41, 31, 36, 42, 43, 44];
pub const V1: [i64; 16] = [0, 11, 15, 22, 23, 17, 24, 30, 28, 34, 41, 31, 36, 42, 43, 44];
pub const V2: [i64; 16] = [0, 11, 15, 22, 23, 18, 25, 30, 29, 34, 41, 31, 36, 42, 43, 44];

pub fn from_table(row: &[i64; 16]) -> SetFunction {
    let mut values = vec![Scalar::zero(); 16];
    for (set, &x) in table_order(4).into_iter().zip(row) {
        values[set.index()] = int(x);
    }
    SetFunction::new(GroundSet::numbered(4).unwrap(), values).unwrap()
}

pub fn table_row(v: &SetFunction) -> Vec<Scalar> {
    table_order(v.m()).into_iter().map(|s| v.get(s).clone()).collect()
}

pub fn set(elements: &[usize]) -> SubsetRef {
    SubsetRef::from_elements(elements.iter().map(|e| e - 1))
}

/// Small nonnegative rational with denominator in 1..=4.
pub fn small_rational(rng: &mut ChaCha8Rng, max_num: i64) -> Scalar {
    ratio(rng.gen_range(0..=max_num), rng.gen_range(1..=4))
}

/// Rational in `[-max_num, max_num]` with denominator in 1..=4.
pub fn signed_rational(rng: &mut ChaCha8Rng, max_num: i64) -> Scalar {
    ratio(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=4))
}

/// Arbitrary monotone `v`: each `v(A)` is the max over its lower covers
/// plus a random nonnegative jump (zero with probability 1/4).
pub fn random_monotone(rng: &mut ChaCha8Rng, m: usize) -> SetFunction {
    let n = 1usize << m;
    let mut values = vec![Scalar::zero(); n];
    for set in table_order(m).into_iter().skip(1) {
        let base = set.elements().map(|e| values[set.without(e).index()].clone()).max().unwrap();
        let jump = if rng.gen_range(0..4) == 0 { Scalar::zero() } else { small_rational(rng, 12) };
        values[set.index()] = base + jump;
    }
    SetFunction::new(GroundSet::numbered(m).unwrap(), values).unwrap()
}

/// Monotone submodular `v` built as a nonnegative combination of
/// `min(c, ν(A))`, weighted coverage functions and a modular part.
pub fn random_submodular(rng: &mut ChaCha8Rng, m: usize) -> SetFunction {
    let g = GroundSet::numbered(m).unwrap();
    let mut values = vec![Scalar::zero(); 1 << m];
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        match rng.gen_range(0..3) {
            0 => {
                let nu: Vec<Scalar> = (0..m).map(|_| small_rational(rng, 6)).collect();
                let cap = small_rational(rng, 10);
                let scale = ratio(rng.gen_range(1..=3), 1);
                for s in g.subsets() {
                    let mass: Scalar = s.elements().map(|e| &nu[e]).sum();
                    values[s.index()] += &scale * mass.min(cap.clone());
                }
            }
            1 => {
                let universe = rng.gen_range(1..=5);
                let cover: Vec<u32> = (0..m).map(|_| rng.gen_range(0..(1u32 << universe))).collect();
                let weights: Vec<Scalar> = (0..universe).map(|_| small_rational(rng, 5)).collect();
                for s in g.subsets() {
                    let covered = s.elements().fold(0u32, |acc, e| acc | cover[e]);
                    values[s.index()] +=
                        (0..universe).filter(|u| covered >> u & 1 == 1).map(|u| &weights[u]).sum::<Scalar>();
                }
            }
            _ => {
                let w: Vec<Scalar> = (0..m).map(|_| small_rational(rng, 4)).collect();
                for s in g.subsets() {
                    values[s.index()] += s.elements().map(|e| &w[e]).sum::<Scalar>();
                }
            }
        }
    }
    SetFunction::new(g, values).unwrap()
}

/// Half arbitrary monotone (rarely submodular past m = 2), half submodular.
pub fn random_mixed(rng: &mut ChaCha8Rng, m: usize) -> SetFunction {
    if rng.gen_bool(0.5) {
        random_monotone(rng, m)
    } else {
        random_submodular(rng, m)
    }
}

pub fn random_function(rng: &mut ChaCha8Rng, m: usize, signed: bool) -> SimpleFunction {
    let values = (0..m)
        .map(|_| {
            // Small value pool so that ties occur regularly.
            if signed {
                signed_rational(rng, 6)
            } else {
                small_rational(rng, 6)
            }
        })
        .collect();
    SimpleFunction::new(GroundSet::numbered(m).unwrap(), values).unwrap()
}

pub fn random_profile(rng: &mut ChaCha8Rng, m: usize) -> Vec<Scalar> {
    let mut g = vec![Scalar::zero()];
    for _ in 0..m {
        let next = g.last().unwrap() + small_rational(rng, 10);
        g.push(next);
    }
    g
}

/// Weighted space with pairwise distinct densities; `uniform` forces ν = counting.
pub fn random_space(rng: &mut ChaCha8Rng, m: usize, uniform: bool) -> WeightedSpace {
    let g = GroundSet::numbered(m).unwrap();
    let mut pool: Vec<i64> = (0..4 * m as i64 + 4).collect();
    pool.shuffle(rng);
    let den = rng.gen_range(1..=3);
    let density: Vec<Scalar> = pool[..m].iter().map(|&k| ratio(k, den)).collect();
    let nu: Vec<Scalar> = if uniform {
        vec![int(1); m]
    } else {
        let mut w: Vec<Scalar> = (0..m).map(|_| ratio(rng.gen_range(0..=5), rng.gen_range(1..=3))).collect();
        if w.iter().all(|x| x.is_zero()) {
            w[0] = int(1);
        }
        w
    };
    let mut space = WeightedSpace::new(DiscreteMeasure::new(g.clone(), nu.clone()).unwrap(), density.clone()).unwrap();
    if space.mu_total().is_zero() {
        // Give the heaviest element a positive density so that μ(Ω) > 0.
        let heavy = (0..m).max_by_key(|&i| nu[i].clone()).unwrap();
        let mut d = density;
        let top = d.iter().max().unwrap() + int(1);
        d[heavy] = top;
        space = WeightedSpace::new(DiscreteMeasure::new(g, nu).unwrap(), d).unwrap();
    }
    space
}

/// All permutations of `0..m` in lexicographic order, by plain recursion.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for e in 0..used.len() {
            if !used[e] {
                used[e] = true;
                prefix.push(e);
                go(prefix, used, out);
                prefix.pop();
                used[e] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

/// Telescoping weights of `v` along `order`, recomputed from scratch.
pub fn oracle_weights(v: &SetFunction, order: &[usize]) -> Vec<Scalar> {
    let mut w = vec![Scalar::zero(); order.len()];
    let mut prefix = SubsetRef::EMPTY;
    for &e in order {
        let next = prefix.with(e);
        w[e] = v.get(next) - v.get(prefix);
        prefix = next;
    }
    w
}

/// `max_σ Σ coeffs[e]·μ_{v,σ}({e})` over all permutations, with the first
/// maximising permutation.
pub fn oracle_chain_max(v: &SetFunction, coeffs: &[Scalar]) -> (Scalar, Vec<usize>) {
    let mut best: Option<(Scalar, Vec<usize>)> = None;
    for order in permutations(v.m()) {
        let w = oracle_weights(v, &order);
        let value: Scalar = w.iter().zip(coeffs).map(|(a, b)| a * b).sum();
        if best.as_ref().is_none_or(|(b, _)| &value > b) {
            best = Some((value, order));
        }
    }
    best.unwrap()
}

pub fn oracle_chain_min(v: &SetFunction, coeffs: &[Scalar]) -> Scalar {
    permutations(v.m())
        .into_iter()
        .map(|order| oracle_weights(v, &order).iter().zip(coeffs).map(|(a, b)| a * b).sum::<Scalar>())
        .min()
        .unwrap()
}

pub fn indicator(m: usize, s: SubsetRef) -> Vec<Scalar> {
    (0..m).map(|e| if s.contains(e) { int(1) } else { int(0) }).collect()
}

/// Submodularity over all pairs `(A, B)`, not just local ones.
pub fn oracle_submodular(v: &SetFunction) -> bool {
    let n = 1u32 << v.m();
    (0..n).all(|a| {
        (0..n).all(|b| {
            let (a, b) = (SubsetRef(a), SubsetRef(b));
            v.get(a) + v.get(b) >= v.get(a.union(b)) + v.get(a.intersection(b))
        })
    })
}

/// Choquet integral in layer-cake form with ascending values:
/// `u₁·v(Ω) + Σ_{k≥2} (u_k − u_{k−1})·v({f ≥ u_k})`.
pub fn oracle_choquet(v: &SetFunction, f: &[Scalar]) -> Scalar {
    let mut levels: Vec<Scalar> = f.to_vec();
    levels.sort();
    levels.dedup();
    let upper = |u: &Scalar| SubsetRef::from_elements((0..f.len()).filter(|&i| &f[i] >= u));
    let mut total = &levels[0] * v.total();
    for k in 1..levels.len() {
        total += (&levels[k] - &levels[k - 1]) * v.get(upper(&levels[k]));
    }
    total
}

fn nu_where(w: &WeightedSpace, pred: impl Fn(usize) -> bool) -> Scalar {
    (0..w.density().len()).filter(|&i| pred(i)).map(|i| w.nu().weight(i).clone()).sum()
}

/// Sorted distinct values of `xs` together with 0.
fn grid(xs: &[Scalar]) -> Vec<Scalar> {
    let mut g: Vec<Scalar> = xs.to_vec();
    g.push(Scalar::zero());
    g.sort();
    g.dedup();
    g
}

/// `∫_0^∞ φ(z) dz` for a `φ` that is constant between consecutive grid
/// points and vanishes past the last one, by midpoint evaluation.
fn integrate_piecewise(points: &[Scalar], phi: impl Fn(&Scalar) -> Scalar) -> Scalar {
    points
        .windows(2)
        .map(|w| {
            let mid = (&w[0] + &w[1]) / int(2);
            (&w[1] - &w[0]) * phi(&mid)
        })
        .sum()
}

/// `v_μ(A) = ∫_0^∞ ν(d > z) ∧ ν(A) dz`, straight from the definition.
pub fn oracle_v_mu(w: &WeightedSpace, a: SubsetRef) -> Scalar {
    let nu_a = w.nu().measure(a);
    integrate_piecewise(&grid(w.density()), |z| nu_where(w, |i| &w.density()[i] > z).min(nu_a.clone()))
}

/// `F⁻¹(β)`: the least density value `z` with `ν(d ≤ z) > β`.
pub fn oracle_quantile(w: &WeightedSpace, beta: &Scalar) -> Scalar {
    grid(w.density()).into_iter().find(|z| &nu_where(w, |i| &w.density()[i] <= z) > beta).unwrap()
}

/// `m((0, γ]) = (1/μ(Ω)) ∫ 1{S(y) ≤ γν(Ω)} S(y) dy` with `S(y) = ν(d > y)`.
pub fn oracle_kusuoka_cdf(w: &WeightedSpace, gamma: &Scalar) -> Scalar {
    let threshold = gamma * w.nu_total();
    let integral = integrate_piecewise(&grid(w.density()), |y| {
        let s = nu_where(w, |i| &w.density()[i] > y);
        if s <= threshold {
            s
        } else {
            Scalar::zero()
        }
    });
    integral / w.mu_total()
}
