//! Frame of discernment and focal sets.
//!
//! A [`Frame`] is the finite set of mutually exclusive hypotheses that
//! evidence is assigned over. Each element is identified by an opaque
//! string label and may optionally carry a position on the real line;
//! positions are what make Hausdorff-based comparisons between focal
//! sets possible.
//!
//! A [`FocalSet`] is a subset of one frame's elements, stored as a bit
//! pattern over element indices. Frames are capped at 64 elements so a
//! subset always fits in a single `u64` and set algebra stays O(1);
//! the powerset is never materialized.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug)]
struct FrameInner {
    elements: Vec<String>,
    positions: Option<Vec<f64>>,
    index: HashMap<String, usize>,
}

/// An ordered set of distinct element labels, optionally embedded on the
/// real line. Immutable after construction and cheap to clone.
#[derive(Clone, Debug)]
pub struct Frame {
    inner: Arc<FrameInner>,
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.elements == other.inner.elements
                && self.inner.positions == other.inner.positions)
    }
}

impl Frame {
    /// Builds an unembedded frame from element labels.
    pub fn new<I, S>(labels: I) -> Result<Frame>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::build(labels.into_iter().map(Into::into).collect(), None)
    }

    /// Builds a frame whose i-th element sits at `positions[i]` on the
    /// real line.
    pub fn embedded<I, S>(labels: I, positions: Vec<f64>) -> Result<Frame>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::build(
            labels.into_iter().map(Into::into).collect(),
            Some(positions),
        )
    }

    fn build(elements: Vec<String>, positions: Option<Vec<f64>>) -> Result<Frame> {
        if elements.is_empty() {
            return Err(Error::EmptyFrame);
        }
        if elements.len() > 64 {
            return Err(Error::TooManyElements(elements.len()));
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, label) in elements.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        if let Some(pos) = &positions {
            if pos.len() != elements.len() {
                return Err(Error::PositionLengthMismatch {
                    labels: elements.len(),
                    positions: pos.len(),
                });
            }
            for (i, p) in pos.iter().enumerate() {
                if !p.is_finite() {
                    return Err(Error::NonFinitePosition(elements[i].clone()));
                }
            }
        }
        Ok(Frame {
            inner: Arc::new(FrameInner {
                elements,
                positions,
                index,
            }),
        })
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.inner.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty frames
    }

    /// Element labels in frame order.
    pub fn labels(&self) -> &[String] {
        &self.inner.elements
    }

    /// Real-line positions, if the frame is embedded.
    pub fn positions(&self) -> Option<&[f64]> {
        self.inner.positions.as_deref()
    }

    /// Whether elements carry real-line positions.
    pub fn is_embedded(&self) -> bool {
        self.inner.positions.is_some()
    }

    /// Index of a label within the frame.
    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.inner
            .index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    /// The focal set containing the given labels.
    pub fn subset<I, S>(&self, labels: I) -> Result<FocalSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u64;
        for label in labels {
            bits |= 1u64 << self.index_of(label.as_ref())?;
        }
        Ok(FocalSet {
            frame: self.clone(),
            bits,
        })
    }

    /// The focal set with the given membership bit pattern (element `i`
    /// is a member iff bit `i` is set).
    pub fn subset_from_bits(&self, bits: u64) -> Result<FocalSet> {
        if self.len() < 64 && bits >> self.len() != 0 {
            return Err(Error::BitsOutOfRange);
        }
        Ok(FocalSet {
            frame: self.clone(),
            bits,
        })
    }

    /// The empty subset.
    pub fn empty_set(&self) -> FocalSet {
        FocalSet {
            frame: self.clone(),
            bits: 0,
        }
    }

    /// The subset containing every element, usually written Ω.
    pub fn full_set(&self) -> FocalSet {
        let bits = if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        };
        FocalSet {
            frame: self.clone(),
            bits,
        }
    }
}

/// A subset of one frame's elements. Carries its frame so that mixing
/// sets from different frames is caught as an error rather than silently
/// comparing unrelated bit patterns.
#[derive(Clone, Debug)]
pub struct FocalSet {
    frame: Frame,
    bits: u64,
}

impl PartialEq for FocalSet {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && self.frame == other.frame
    }
}

impl FocalSet {
    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Membership bit pattern over the frame's element indices.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Number of member elements.
    pub fn cardinality(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains_index(&self, index: usize) -> bool {
        index < self.frame.len() && self.bits >> index & 1 == 1
    }

    /// Member element indices in ascending order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.frame.len()).filter(move |i| bits >> i & 1 == 1)
    }

    /// Member element labels in frame order.
    pub fn member_labels(&self) -> impl Iterator<Item = &str> + '_ {
        self.indices().map(|i| self.frame.inner.elements[i].as_str())
    }

    fn check_same_frame(&self, other: &FocalSet) -> Result<()> {
        if self.frame == other.frame {
            Ok(())
        } else {
            Err(Error::FrameMismatch)
        }
    }

    pub fn union(&self, other: &FocalSet) -> Result<FocalSet> {
        self.check_same_frame(other)?;
        Ok(FocalSet {
            frame: self.frame.clone(),
            bits: self.bits | other.bits,
        })
    }

    pub fn intersection(&self, other: &FocalSet) -> Result<FocalSet> {
        self.check_same_frame(other)?;
        Ok(FocalSet {
            frame: self.frame.clone(),
            bits: self.bits & other.bits,
        })
    }

    /// Jaccard similarity |A∩B| / |A∪B|.
    ///
    /// Two empty sets are defined to have similarity 1 (self-similarity);
    /// an empty set against a nonempty one gives 0. With no mass ever on
    /// the empty set, the convention never reaches a distance value, but
    /// it keeps the function total.
    pub fn jaccard(&self, other: &FocalSet) -> Result<f64> {
        self.check_same_frame(other)?;
        let union = (self.bits | other.bits).count_ones();
        if union == 0 {
            return Ok(1.0);
        }
        let inter = (self.bits & other.bits).count_ones();
        Ok(f64::from(inter) / f64::from(union))
    }

    /// Smallest real-line position among member elements.
    pub fn min_position(&self) -> Result<f64> {
        self.position_span().map(|(lo, _)| lo)
    }

    /// Largest real-line position among member elements.
    pub fn max_position(&self) -> Result<f64> {
        self.position_span().map(|(_, hi)| hi)
    }

    fn position_span(&self) -> Result<(f64, f64)> {
        let positions = self.frame.positions().ok_or(Error::NoEmbedding)?;
        if self.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in self.indices() {
            lo = lo.min(positions[i]);
            hi = hi.max(positions[i]);
        }
        Ok((lo, hi))
    }

    /// Hausdorff distance between two focal sets of an embedded frame,
    /// in its one-dimensional form
    /// `max(|min(A) − min(B)|, |max(A) − max(B)|)`.
    ///
    /// Both sets must be nonempty and the frame must carry positions;
    /// there is no meaningful default for either case.
    pub fn hausdorff_1d(&self, other: &FocalSet) -> Result<f64> {
        self.check_same_frame(other)?;
        let (a_lo, a_hi) = self.position_span()?;
        let (b_lo, b_hi) = other.position_span()?;
        Ok((a_lo - b_lo).abs().max((a_hi - b_hi).abs()))
    }
}

impl fmt::Display for FocalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, label) in self.member_labels().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{label}")?;
        }
        write!(f, "}}")
    }
}
