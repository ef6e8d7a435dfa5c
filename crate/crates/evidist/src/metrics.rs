//! Evidence distance metrics over a shared sparse quadratic-form engine.
//!
//! All three distances in this crate share one structure,
//!
//! ```text
//!     d(m₁, m₂) = sqrt( ½ (m₁ − m₂)ᵀ D (m₁ − m₂) )
//! ```
//!
//! and differ only in the similarity matrix `D`:
//!
//! * **Jousselme**: `D(A,B) = |A∩B| / |A∪B|`, the Jaccard similarity
//!   of the focal sets. Sensitive to how mass is spread over subsets,
//!   blind to where subsets sit on the real line.
//! * **Sunberg**: `D(A,B) = 1 / (1 + K·H(A,B))` with `H` the Hausdorff
//!   distance between the focal sets of an embedded frame. Sensitive to
//!   physical separation along the line.
//! * **Generalized**: the entrywise convex combination
//!   `α·D_Jaccard + (1−α)·D_Hausdorff`, which recovers Jousselme at
//!   `α = 1` and Sunberg at `α = 0`.
//!
//! Formally the mass vectors range over the whole powerset, but every
//! coordinate outside the two supports has `m₁ − m₂ = 0` and contributes
//! nothing to the quadratic form. [`JointSupport`] therefore restricts
//! the computation to the union of the two supports, which is what makes
//! 20-element frames (and larger) practical. The equivalence with the
//! dense powerset evaluation is covered by tests on small frames.

use crate::bpa::Bpa;
use crate::error::{Error, Result};
use crate::frame::{FocalSet, Frame};

/// Parameters for the generalized distance: the blend weight `alpha`
/// and the Hausdorff tuning constant `k`. Defaults are `alpha = 0.5`
/// and `k = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceParams {
    alpha: f64,
    hausdorff_k: f64,
}

impl Default for DistanceParams {
    fn default() -> Self {
        DistanceParams {
            alpha: 0.5,
            hausdorff_k: 1.0,
        }
    }
}

impl DistanceParams {
    pub fn new(alpha: f64, hausdorff_k: f64) -> Result<DistanceParams> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        if !(hausdorff_k > 0.0 && hausdorff_k.is_finite()) {
            return Err(Error::TuningOutOfRange(hausdorff_k));
        }
        Ok(DistanceParams { alpha, hausdorff_k })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn hausdorff_k(&self) -> f64 {
        self.hausdorff_k
    }
}

/// The union of two BPAs' supports with both mass vectors aligned to it.
///
/// `sets` is deduplicated and canonically ordered (ascending bit
/// pattern); `v1` and `v2` hold the masses of the first and second BPA
/// at each set, zero where a set belongs to only one support.
#[derive(Clone, Debug, PartialEq)]
pub struct JointSupport {
    frame: Frame,
    sets: Vec<FocalSet>,
    v1: Vec<f64>,
    v2: Vec<f64>,
}

impl JointSupport {
    /// Merges the two supports. Both BPAs must share a frame.
    pub fn new(m1: &Bpa, m2: &Bpa) -> Result<JointSupport> {
        if m1.frame() != m2.frame() {
            return Err(Error::FrameMismatch);
        }
        let frame = m1.frame().clone();
        let mut sets = Vec::new();
        let mut v1 = Vec::new();
        let mut v2 = Vec::new();
        let mut left = m1.entries().peekable();
        let mut right = m2.entries().peekable();
        loop {
            let (bits, a, b) = match (left.peek().copied(), right.peek().copied()) {
                (Some((lb, lm)), Some((rb, _))) if lb < rb => {
                    left.next();
                    (lb, lm, 0.0)
                }
                (Some((lb, _)), Some((rb, rm))) if rb < lb => {
                    right.next();
                    (rb, 0.0, rm)
                }
                (Some((lb, lm)), Some((_, rm))) => {
                    left.next();
                    right.next();
                    (lb, lm, rm)
                }
                (Some((lb, lm)), None) => {
                    left.next();
                    (lb, lm, 0.0)
                }
                (None, Some((rb, rm))) => {
                    right.next();
                    (rb, 0.0, rm)
                }
                (None, None) => break,
            };
            sets.push(frame.subset_from_bits(bits)?);
            v1.push(a);
            v2.push(b);
        }
        Ok(JointSupport {
            frame,
            sets,
            v1,
            v2,
        })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// The joint focal sets in canonical order.
    pub fn sets(&self) -> &[FocalSet] {
        &self.sets
    }

    /// The two mass vectors aligned to [`JointSupport::sets`].
    pub fn mass_vectors(&self) -> (&[f64], &[f64]) {
        (&self.v1, &self.v2)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Which similarity kernel a matrix was built with.
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixKind {
    Jaccard,
    Hausdorff { tuning: f64 },
    Blend { alpha: f64, tuning: f64 },
}

impl MatrixKind {
    fn name(&self) -> &'static str {
        match self {
            MatrixKind::Jaccard => "jaccard",
            MatrixKind::Hausdorff { .. } => "hausdorff",
            MatrixKind::Blend { .. } => "blend",
        }
    }
}

/// A symmetric, unit-diagonal similarity matrix over a joint support.
#[derive(Clone, Debug, PartialEq)]
pub struct SimilarityMatrix {
    support: JointSupport,
    kind: MatrixKind,
    entries: Vec<f64>, // row-major, len = support.len()²
}

impl SimilarityMatrix {
    /// The Jaccard similarity matrix: `entry(i,j) = |Aᵢ∩Aⱼ| / |Aᵢ∪Aⱼ|`.
    pub fn jaccard(support: &JointSupport) -> SimilarityMatrix {
        let sets = support.sets();
        let n = sets.len();
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let s = sets[i]
                    .jaccard(&sets[j])
                    .expect("joint support shares one frame");
                entries[i * n + j] = s;
                entries[j * n + i] = s;
            }
        }
        SimilarityMatrix {
            support: support.clone(),
            kind: MatrixKind::Jaccard,
            entries,
        }
    }

    /// The Hausdorff similarity matrix:
    /// `entry(i,j) = 1 / (1 + tuning · H(Aᵢ, Aⱼ))`.
    ///
    /// Requires an embedded frame, nonempty sets, and `tuning > 0`.
    pub fn hausdorff(support: &JointSupport, tuning: f64) -> Result<SimilarityMatrix> {
        if !(tuning > 0.0 && tuning.is_finite()) {
            return Err(Error::TuningOutOfRange(tuning));
        }
        let sets = support.sets();
        let n = sets.len();
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let h = sets[i].hausdorff_1d(&sets[j])?;
                let s = 1.0 / (1.0 + tuning * h);
                entries[i * n + j] = s;
                entries[j * n + i] = s;
            }
        }
        Ok(SimilarityMatrix {
            support: support.clone(),
            kind: MatrixKind::Hausdorff { tuning },
            entries,
        })
    }

    /// The entrywise convex combination
    /// `alpha · jaccard + (1 − alpha) · hausdorff`.
    ///
    /// At `alpha = 1` the result carries exactly the Jaccard entries and
    /// at `alpha = 0` exactly the Hausdorff entries, so the generalized
    /// distance reproduces its two special cases bit for bit.
    pub fn blend(
        jaccard: &SimilarityMatrix,
        hausdorff: &SimilarityMatrix,
        alpha: f64,
    ) -> Result<SimilarityMatrix> {
        if jaccard.kind != MatrixKind::Jaccard {
            return Err(Error::MatrixKindMismatch {
                expected: "jaccard",
                found: jaccard.kind.name(),
            });
        }
        let tuning = match hausdorff.kind {
            MatrixKind::Hausdorff { tuning } => tuning,
            _ => {
                return Err(Error::MatrixKindMismatch {
                    expected: "hausdorff",
                    found: hausdorff.kind.name(),
                })
            }
        };
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        if jaccard.support != hausdorff.support {
            return Err(Error::SupportMismatch);
        }
        let entries = jaccard
            .entries
            .iter()
            .zip(&hausdorff.entries)
            .map(|(&dj, &dh)| alpha * dj + (1.0 - alpha) * dh)
            .collect();
        Ok(SimilarityMatrix {
            support: jaccard.support.clone(),
            kind: MatrixKind::Blend { alpha, tuning },
            entries,
        })
    }

    pub fn support(&self) -> &JointSupport {
        &self.support
    }

    pub fn kind(&self) -> &MatrixKind {
        &self.kind
    }

    /// Matrix dimension (the number of joint focal sets).
    pub fn order(&self) -> usize {
        self.support.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order() + j]
    }
}

/// Inner values below this are treated as genuine indefiniteness rather
/// than rounding when the quadratic form comes out negative.
pub const NEGATIVE_CLAMP_FLAG: f64 = -1e-9;

/// A distance value plus the one diagnostic the quadratic form can
/// produce: `negative_inner` records the raw inner value when it fell
/// below [`NEGATIVE_CLAMP_FLAG`] and was clamped to zero. A tiny
/// negative inner value is ordinary floating-point rounding on
/// zero-distance inputs; one below the flag threshold would mean the
/// similarity matrix is not positive semidefinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DistanceReport {
    pub value: f64,
    pub negative_inner: Option<f64>,
}

/// Evaluates `sqrt(½ Δᵀ D Δ)` with `Δ = v₁ − v₂` over the joint
/// support, clamping a negative inner value to zero.
pub fn quadratic_distance(support: &JointSupport, matrix: &SimilarityMatrix) -> Result<f64> {
    quadratic_distance_report(support, matrix).map(|r| r.value)
}

/// Like [`quadratic_distance`] but also reports whether a significant
/// negative inner value was clamped.
pub fn quadratic_distance_report(
    support: &JointSupport,
    matrix: &SimilarityMatrix,
) -> Result<DistanceReport> {
    if matrix.support() != support {
        return Err(Error::SupportMismatch);
    }
    let n = support.len();
    let (v1, v2) = support.mass_vectors();
    let delta: Vec<f64> = v1.iter().zip(v2).map(|(a, b)| a - b).collect();
    let mut inner = 0.0;
    for i in 0..n {
        for j in 0..n {
            inner += delta[i] * matrix.entry(i, j) * delta[j];
        }
    }
    inner *= 0.5;
    Ok(DistanceReport {
        value: inner.max(0.0).sqrt(),
        negative_inner: (inner < NEGATIVE_CLAMP_FLAG).then_some(inner),
    })
}

/// Selects one of the three evidence distances.
#[derive(Clone, Debug, PartialEq)]
pub enum EvidenceMetric {
    /// Jousselme's distance (Jaccard similarity matrix).
    Jousselme,
    /// Sunberg's Hausdorff-based distance with tuning constant `tuning`.
    Sunberg { tuning: f64 },
    /// The α-weighted blend of the two.
    Generalized(DistanceParams),
}

/// Computes the selected evidence distance between two BPAs.
pub fn evidence_distance(m1: &Bpa, m2: &Bpa, metric: &EvidenceMetric) -> Result<f64> {
    evidence_distance_report(m1, m2, metric).map(|r| r.value)
}

/// Computes the selected evidence distance and its clamp diagnostic.
pub fn evidence_distance_report(
    m1: &Bpa,
    m2: &Bpa,
    metric: &EvidenceMetric,
) -> Result<DistanceReport> {
    let support = JointSupport::new(m1, m2)?;
    let matrix = match metric {
        EvidenceMetric::Jousselme => SimilarityMatrix::jaccard(&support),
        EvidenceMetric::Sunberg { tuning } => SimilarityMatrix::hausdorff(&support, *tuning)?,
        EvidenceMetric::Generalized(params) => {
            let dj = SimilarityMatrix::jaccard(&support);
            let dh = SimilarityMatrix::hausdorff(&support, params.hausdorff_k())?;
            SimilarityMatrix::blend(&dj, &dh, params.alpha())?
        }
    };
    quadratic_distance_report(&support, &matrix)
}

/// Jousselme's evidence distance.
pub fn distance_jousselme(m1: &Bpa, m2: &Bpa) -> Result<f64> {
    evidence_distance(m1, m2, &EvidenceMetric::Jousselme)
}

/// Sunberg's Hausdorff-based evidence distance for embedded frames.
pub fn distance_sunberg(m1: &Bpa, m2: &Bpa, tuning: f64) -> Result<f64> {
    evidence_distance(m1, m2, &EvidenceMetric::Sunberg { tuning })
}

/// The generalized evidence distance: the α-weighted blend of the
/// Jaccard and Hausdorff similarity matrices inside the shared
/// quadratic form.
pub fn distance_generalized(m1: &Bpa, m2: &Bpa, params: &DistanceParams) -> Result<f64> {
    evidence_distance(m1, m2, &EvidenceMetric::Generalized(params.clone()))
}
