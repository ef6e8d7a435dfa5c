//! Dempster's rule of combination and the conflict coefficient.

use std::collections::BTreeMap;

use crate::bpa::Bpa;
use crate::error::{Error, Result};

/// Conflict at or above `1 − TOTAL_CONFLICT_TOLERANCE` counts as total.
/// The rule's normalization divides by `1 − k`, which is undefined at
/// `k = 1`; a strict equality test would be numerically fragile.
pub const TOTAL_CONFLICT_TOLERANCE: f64 = 1e-12;

/// The conflict coefficient `k`: total mass product over pairs of focal
/// sets with empty intersection. `k = 1` means the two bodies of
/// evidence are entirely contradictory.
pub fn conflict(m1: &Bpa, m2: &Bpa) -> Result<f64> {
    if m1.frame() != m2.frame() {
        return Err(Error::FrameMismatch);
    }
    let mut k = 0.0;
    for (b, mass_b) in m1.entries() {
        for (c, mass_c) in m2.entries() {
            if b & c == 0 {
                k += mass_b * mass_c;
            }
        }
    }
    Ok(k.min(1.0))
}

/// Dempster's rule: the conjunctive combination of two BPAs,
/// renormalized by the non-conflicting mass.
///
/// Iterates over support pairs only, never the powerset, so cost is
/// `O(|support₁| · |support₂|)` regardless of frame size. Fails with
/// [`Error::TotalConflict`] when `k` reaches 1 within
/// [`TOTAL_CONFLICT_TOLERANCE`].
pub fn dempster_combine(m1: &Bpa, m2: &Bpa) -> Result<Bpa> {
    if m1.frame() != m2.frame() {
        return Err(Error::FrameMismatch);
    }
    let mut accumulated: BTreeMap<u64, f64> = BTreeMap::new();
    let mut k = 0.0;
    for (b, mass_b) in m1.entries() {
        for (c, mass_c) in m2.entries() {
            let product = mass_b * mass_c;
            let intersection = b & c;
            if intersection == 0 {
                k += product;
            } else {
                *accumulated.entry(intersection).or_insert(0.0) += product;
            }
        }
    }
    if k >= 1.0 - TOTAL_CONFLICT_TOLERANCE {
        return Err(Error::TotalConflict(k.min(1.0)));
    }
    // Normalize by the accumulated non-conflicting mass. This equals
    // 1 − k exactly in real arithmetic and keeps the output's unit sum
    // accurate even when k is close to the total-conflict threshold.
    let total: f64 = accumulated.values().sum();
    let frame = m1.frame();
    let assignments = accumulated
        .into_iter()
        .map(|(bits, mass)| Ok((frame.subset_from_bits(bits)?, mass / total)))
        .collect::<Result<Vec<_>>>()?;
    Bpa::new(frame, assignments)
}
