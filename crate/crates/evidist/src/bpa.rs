//! Basic probability assignments.
//!
//! A [`Bpa`] maps focal sets to strictly positive masses that sum to 1,
//! with no mass on the empty set. Masses are stored sparsely, keyed by
//! the focal set's bit pattern, so the frame's powerset never has to be
//! enumerated.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::frame::{FocalSet, Frame};

/// How far the mass total may drift from 1 before construction fails.
/// Loose enough for decimal inputs like 1/3 + 1/3 + 1/3, tight enough to
/// catch genuine data-entry mistakes.
pub const MASS_SUM_TOLERANCE: f64 = 1e-9;

/// A validated basic probability assignment over one frame.
///
/// Masses are kept exactly as given; a vector that does not sum to 1 is
/// rejected rather than rescaled, so data-entry errors in experiment
/// files surface immediately. Zero-mass entries in the input are
/// accepted and dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct Bpa {
    frame: Frame,
    masses: BTreeMap<u64, f64>,
}

impl Bpa {
    /// Validates and builds a BPA from `(focal set, mass)` assignments.
    pub fn new<I>(frame: &Frame, assignments: I) -> Result<Bpa>
    where
        I: IntoIterator<Item = (FocalSet, f64)>,
    {
        let mut masses = BTreeMap::new();
        for (set, mass) in assignments {
            if set.frame() != frame {
                return Err(Error::FrameMismatch);
            }
            if !(0.0..=1.0).contains(&mass) {
                return Err(Error::MassOutOfRange(mass));
            }
            if mass == 0.0 {
                continue; // structural zero from a generator
            }
            if set.is_empty() {
                return Err(Error::EmptySetMass);
            }
            if masses.insert(set.bits(), mass).is_some() {
                return Err(Error::DuplicateFocalSet(set.to_string()));
            }
        }
        let sum: f64 = masses.values().sum();
        if (sum - 1.0).abs() > MASS_SUM_TOLERANCE {
            return Err(Error::MassSumViolation(sum));
        }
        Ok(Bpa {
            frame: frame.clone(),
            masses,
        })
    }

    /// The BPA that assigns all mass to a single focal set.
    pub fn categorical(set: FocalSet) -> Result<Bpa> {
        let frame = set.frame().clone();
        Bpa::new(&frame, [(set, 1.0)])
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Focal sets with positive mass, in canonical (ascending bit
    /// pattern) order. The order is deterministic across runs.
    pub fn support(&self) -> Vec<FocalSet> {
        self.masses
            .keys()
            .map(|&bits| {
                self.frame
                    .subset_from_bits(bits)
                    .expect("stored bits are valid for the frame")
            })
            .collect()
    }

    /// Number of focal sets.
    pub fn focal_count(&self) -> usize {
        self.masses.len()
    }

    /// The mass of a subset: the stored value for focal sets, 0 for any
    /// other subset including the empty set.
    pub fn mass(&self, set: &FocalSet) -> Result<f64> {
        if set.frame() != &self.frame {
            return Err(Error::FrameMismatch);
        }
        Ok(self.masses.get(&set.bits()).copied().unwrap_or(0.0))
    }

    /// Iterates `(focal set, mass)` pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (FocalSet, f64)> + '_ {
        self.masses.iter().map(|(&bits, &mass)| {
            (
                self.frame
                    .subset_from_bits(bits)
                    .expect("stored bits are valid for the frame"),
                mass,
            )
        })
    }

    /// Sparse view as `(bit pattern, mass)` pairs in ascending order.
    pub(crate) fn entries(&self) -> impl Iterator<Item = (u64, f64)> + '_ {
        self.masses.iter().map(|(&bits, &mass)| (bits, mass))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame20() -> Frame {
        let labels: Vec<String> = (1..=20).map(|i| i.to_string()).collect();
        let positions: Vec<f64> = (1..=20).map(f64::from).collect();
        Frame::embedded(labels, positions).unwrap()
    }

    fn stationary_bpa() -> (Frame, Bpa) {
        let frame = Frame::embedded(
            ["2", "2.3", "2.5", "2.7", "3"],
            vec![2.0, 2.3, 2.5, 2.7, 3.0],
        )
        .unwrap();
        let sets = [
            vec!["2"],
            vec!["2", "2.3"],
            vec!["2", "2.3", "2.5"],
            vec!["2", "2.3", "2.5", "2.7"],
            vec!["2", "2.3", "2.5", "2.7", "3"],
        ];
        let masses = [0.1, 0.2, 0.4, 0.2, 0.1];
        let assignments: Vec<_> = sets
            .iter()
            .zip(masses)
            .map(|(labels, m)| (frame.subset(labels.clone()).unwrap(), m))
            .collect();
        let bpa = Bpa::new(&frame, assignments).unwrap();
        (frame, bpa)
    }

    #[test]
    fn accepts_the_four_set_case_one_bpa() {
        let f = frame20();
        let bpa = Bpa::new(
            &f,
            [
                (f.subset(["2", "3", "4"]).unwrap(), 0.05),
                (f.subset(["7"]).unwrap(), 0.05),
                (f.full_set(), 0.1),
                (f.subset(["1"]).unwrap(), 0.8),
            ],
        )
        .unwrap();
        assert_eq!(bpa.focal_count(), 4);
        assert_eq!(bpa.mass(&f.full_set()).unwrap(), 0.1);
    }

    #[test]
    fn accepts_a_categorical_bpa() {
        let f = frame20();
        let bpa = Bpa::categorical(f.subset(["1", "2", "3", "4", "5"]).unwrap()).unwrap();
        assert_eq!(bpa.focal_count(), 1);
        assert_eq!(bpa.support()[0].cardinality(), 5);
    }

    #[test]
    fn rejects_masses_that_do_not_sum_to_one() {
        let f = frame20();
        let err = Bpa::new(
            &f,
            [
                (f.subset(["1"]).unwrap(), 0.5),
                (f.subset(["2"]).unwrap(), 0.4),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::MassSumViolation(s) if (s - 0.9).abs() < 1e-12));
    }

    #[test]
    fn rejects_out_of_range_masses() {
        let f = frame20();
        let set = f.subset(["1"]).unwrap();
        assert!(matches!(
            Bpa::new(&f, [(set.clone(), -0.1), (f.subset(["2"]).unwrap(), 1.1)]),
            Err(Error::MassOutOfRange(_))
        ));
        assert!(matches!(
            Bpa::new(&f, [(set, f64::NAN)]),
            Err(Error::MassOutOfRange(_))
        ));
    }

    #[test]
    fn rejects_mass_on_the_empty_set_and_duplicates() {
        let f = frame20();
        assert!(matches!(
            Bpa::new(&f, [(f.empty_set(), 0.5), (f.full_set(), 0.5)]),
            Err(Error::EmptySetMass)
        ));
        let s = f.subset(["1"]).unwrap();
        assert!(matches!(
            Bpa::new(&f, [(s.clone(), 0.5), (s, 0.5)]),
            Err(Error::DuplicateFocalSet(_))
        ));
    }

    #[test]
    fn rejects_sets_from_another_frame() {
        let f = frame20();
        let other = Frame::new(["x"]).unwrap();
        assert!(matches!(
            Bpa::new(&f, [(other.full_set(), 1.0)]),
            Err(Error::FrameMismatch)
        ));
    }

    #[test]
    fn drops_zero_mass_entries() {
        let f = frame20();
        let bpa = Bpa::new(
            &f,
            [
                (f.subset(["1"]).unwrap(), 0.0),
                (f.full_set(), 1.0),
                (f.empty_set(), 0.0),
            ],
        )
        .unwrap();
        assert_eq!(bpa.focal_count(), 1);
        assert_eq!(bpa.mass(&f.subset(["1"]).unwrap()).unwrap(), 0.0);
    }

    #[test]
    fn mass_lookups_match_the_assignments() {
        let (frame, bpa) = stationary_bpa();
        let s = frame.subset(["2", "2.3"]).unwrap();
        assert_eq!(bpa.mass(&s).unwrap(), 0.2);
        assert_eq!(bpa.mass(&frame.empty_set()).unwrap(), 0.0);
        // not in the support
        let lone = frame.subset(["3"]).unwrap();
        assert_eq!(bpa.mass(&lone).unwrap(), 0.0);
    }

    #[test]
    fn mass_rejects_cross_frame_lookup() {
        let (_, bpa) = stationary_bpa();
        let other = frame20();
        assert!(matches!(
            bpa.mass(&other.subset(["7"]).unwrap()),
            Err(Error::FrameMismatch)
        ));
    }

    #[test]
    fn support_is_in_ascending_bit_order() {
        let f = Frame::new(["1", "2", "3"]).unwrap();
        let bpa = Bpa::new(
            &f,
            [
                (f.subset(["1", "3"]).unwrap(), 0.5), // bits 0b101
                (f.subset(["2"]).unwrap(), 0.5),      // bits 0b010
            ],
        )
        .unwrap();
        let support = bpa.support();
        assert_eq!(support[0].bits(), 0b010);
        assert_eq!(support[1].bits(), 0b101);
    }

    #[test]
    fn nested_support_of_the_stationary_bpa_is_sorted() {
        let (_, bpa) = stationary_bpa();
        let support = bpa.support();
        assert_eq!(support.len(), 5);
        for pair in support.windows(2) {
            assert!(pair[0].bits() < pair[1].bits());
            assert!(pair[0].cardinality() < pair[1].cardinality());
        }
    }

    #[test]
    fn masses_sum_to_one_within_tolerance() {
        let (_, bpa) = stationary_bpa();
        let sum: f64 = bpa.iter().map(|(_, m)| m).sum();
        assert!((sum - 1.0).abs() <= MASS_SUM_TOLERANCE);
    }
}
