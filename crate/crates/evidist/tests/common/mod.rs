//! Shared generators and independent reference computations.
//!
//! Everything here recomputes results from raw data (bit patterns,
//! position slices, mass maps) with its own loops, so agreement with
//! the library is evidence rather than tautology.

#![allow(dead_code)]

use std::collections::BTreeMap;

use evidist::{Bpa, Frame};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The raw mass map of a BPA, keyed by membership bits.
pub fn mass_map(bpa: &Bpa) -> BTreeMap<u64, f64> {
    bpa.iter().map(|(set, mass)| (set.bits(), mass)).collect()
}

/// Positions of the members of `bits`.
pub fn member_positions(bits: u64, positions: &[f64]) -> Vec<f64> {
    positions
        .iter()
        .enumerate()
        .filter(|&(i, _)| bits >> i & 1 == 1)
        .map(|(_, &p)| p)
        .collect()
}

/// Jaccard similarity by explicit per-element counting.
pub fn jaccard_oracle(a: u64, b: u64, n: usize) -> f64 {
    let mut inter = 0u32;
    let mut union = 0u32;
    for i in 0..n {
        let in_a = a >> i & 1 == 1;
        let in_b = b >> i & 1 == 1;
        if in_a && in_b {
            inter += 1;
        }
        if in_a || in_b {
            union += 1;
        }
    }
    if union == 0 {
        1.0
    } else {
        f64::from(inter) / f64::from(union)
    }
}

/// Distance from a point to a closed interval.
fn point_to_interval(x: f64, lo: f64, hi: f64) -> f64 {
    (lo - x).max(x - hi).max(0.0)
}

/// Hausdorff distance between two point sets read as intervals of the
/// real line, straight from the sup-inf definition: each directed part
/// is the largest distance from a member point to the other set's
/// interval, and the distance is the larger directed part.
pub fn hausdorff_oracle(a: &[f64], b: &[f64]) -> f64 {
    assert!(!a.is_empty() && !b.is_empty());
    let hull = |points: &[f64]| {
        points.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &p| {
            (lo.min(p), hi.max(p))
        })
    };
    let (a_lo, a_hi) = hull(a);
    let (b_lo, b_hi) = hull(b);
    let from_a = a
        .iter()
        .map(|&x| point_to_interval(x, b_lo, b_hi))
        .fold(0.0, f64::max);
    let from_b = b
        .iter()
        .map(|&y| point_to_interval(y, a_lo, a_hi))
        .fold(0.0, f64::max);
    from_a.max(from_b)
}

#[derive(Clone, Copy)]
pub enum OracleMetric {
    Jousselme,
    Sunberg { tuning: f64 },
    Generalized { alpha: f64, tuning: f64 },
}

fn oracle_similarity(a: u64, b: u64, n: usize, positions: Option<&[f64]>, metric: OracleMetric) -> f64 {
    let hausdorff_sim = |tuning: f64| {
        let positions = positions.expect("embedded frame required");
        let h = hausdorff_oracle(
            &member_positions(a, positions),
            &member_positions(b, positions),
        );
        1.0 / (1.0 + tuning * h)
    };
    match metric {
        OracleMetric::Jousselme => jaccard_oracle(a, b, n),
        OracleMetric::Sunberg { tuning } => hausdorff_sim(tuning),
        OracleMetric::Generalized { alpha, tuning } => {
            alpha * jaccard_oracle(a, b, n) + (1.0 - alpha) * hausdorff_sim(tuning)
        }
    }
}

/// The distance computed the expensive way: mass vectors over the full
/// powerset (all nonempty subsets of an n-element frame, n small) and
/// the full similarity matrix, no support shortcut anywhere.
pub fn dense_distance(
    n: usize,
    positions: Option<&[f64]>,
    m1: &BTreeMap<u64, f64>,
    m2: &BTreeMap<u64, f64>,
    metric: OracleMetric,
) -> f64 {
    assert!(n <= 16, "dense enumeration is exponential in n");
    let count = (1usize << n) - 1;
    let mass = |m: &BTreeMap<u64, f64>, bits: u64| m.get(&bits).copied().unwrap_or(0.0);
    let delta: Vec<f64> = (1..=count as u64)
        .map(|bits| mass(m1, bits) - mass(m2, bits))
        .collect();
    let mut inner = 0.0;
    for i in 0..count {
        for j in 0..count {
            let sim = oracle_similarity((i + 1) as u64, (j + 1) as u64, n, positions, metric);
            inner += delta[i] * sim * delta[j];
        }
    }
    (0.5 * inner).max(0.0).sqrt()
}

/// An independent sparse route for frames too large to enumerate
/// densely: same reduction to the union of supports, recomputed here
/// from the raw mass maps with oracle similarities and a transposed
/// accumulation order.
pub fn sparse_reference_distance(
    n: usize,
    positions: Option<&[f64]>,
    m1: &BTreeMap<u64, f64>,
    m2: &BTreeMap<u64, f64>,
    metric: OracleMetric,
) -> f64 {
    let mut keys: Vec<u64> = m1.keys().chain(m2.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let delta: Vec<f64> = keys
        .iter()
        .map(|bits| {
            m1.get(bits).copied().unwrap_or(0.0) - m2.get(bits).copied().unwrap_or(0.0)
        })
        .collect();
    let mut inner = 0.0;
    for j in 0..keys.len() {
        for i in 0..keys.len() {
            let sim = oracle_similarity(keys[i], keys[j], n, positions, metric);
            inner += delta[i] * sim * delta[j];
        }
    }
    (0.5 * inner).max(0.0).sqrt()
}

/// Textbook Dempster combination over the full powerset-pair loop,
/// normalizing by 1 − k. Returns the conflict and the combined map, or
/// the conflict alone when it is total.
pub fn brute_combine(
    n: usize,
    m1: &BTreeMap<u64, f64>,
    m2: &BTreeMap<u64, f64>,
) -> (f64, Option<BTreeMap<u64, f64>>) {
    let full = (1u64 << n) - 1;
    let mut k = 0.0;
    let mut unnormalized: BTreeMap<u64, f64> = BTreeMap::new();
    for a in 0..=full {
        for b in 0..=full {
            let product = m1.get(&a).copied().unwrap_or(0.0) * m2.get(&b).copied().unwrap_or(0.0);
            if product == 0.0 {
                continue;
            }
            if a & b == 0 {
                k += product;
            } else {
                *unnormalized.entry(a & b).or_insert(0.0) += product;
            }
        }
    }
    if k >= 1.0 - 1e-12 {
        return (k, None);
    }
    let combined = unnormalized
        .into_iter()
        .map(|(bits, mass)| (bits, mass / (1.0 - k)))
        .collect();
    (k, Some(combined))
}

/// A random frame of 1..=max_n elements embedded at distinct positions
/// on a quarter-integer lattice.
pub fn random_embedded_frame(rng: &mut ChaCha8Rng, max_n: usize) -> Frame {
    let n = rng.random_range(1..=max_n);
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let positions: Vec<f64> = rand::seq::index::sample(rng, 201, n)
        .into_iter()
        .map(|idx| idx as f64 / 4.0 - 25.0)
        .collect();
    Frame::embedded(labels, positions).unwrap()
}

/// A random BPA with 1..=4 focal sets (bounded by the powerset) and
/// normalized positive masses.
pub fn random_bpa(rng: &mut ChaCha8Rng, frame: &Frame) -> Bpa {
    let subsets = (1usize << frame.len()) - 1;
    let focal = rng.random_range(1..=subsets.min(4));
    let sets: Vec<u64> = rand::seq::index::sample(rng, subsets, focal)
        .into_iter()
        .map(|idx| idx as u64 + 1)
        .collect();
    let weights: Vec<f64> = (0..focal).map(|_| rng.random_range(0.05..1.0)).collect();
    let total: f64 = weights.iter().sum();
    let assignments = sets
        .into_iter()
        .zip(&weights)
        .map(|(bits, w)| (frame.subset_from_bits(bits).unwrap(), w / total));
    Bpa::new(frame, assignments).unwrap()
}

/// A frame, for document tests, that sometimes has no embedding.
pub fn random_frame_maybe_bare(rng: &mut ChaCha8Rng, max_n: usize) -> Frame {
    if rng.random_bool(0.5) {
        random_embedded_frame(rng, max_n)
    } else {
        let n = rng.random_range(1..=max_n);
        Frame::new((0..n).map(|i| format!("e{i}"))).unwrap()
    }
}
