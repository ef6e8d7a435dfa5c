//! Scenario generators and sweep runners for two benchmark families.
//!
//! Both sweeps hold one body of evidence fixed and vary the other along
//! a single integer parameter, reporting all three distances at each
//! step:
//!
//! * [`Scenario::Shifted`] keeps a BPA with nested focal sets near 2–3
//!   on the real line and slides a second three-element BPA from 2 out
//!   to 12. Once the supports stop overlapping the Jousselme distance
//!   goes flat while the Hausdorff-based distances keep growing with
//!   the separation.
//! * [`Scenario::Growing`] compares a fixed BPA against one whose main
//!   focal set A = {1, …, case} gains an element per case over a frame
//!   of twenty integer positions. All three distances dip where A best
//!   matches the fixed evidence and rise again as A dilutes.

use crate::bpa::Bpa;
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::metrics::{evidence_distance_report, DistanceParams, EvidenceMetric};

/// Which sweep family to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scenario {
    /// One BPA slides right along the real line, i = 2…12.
    Shifted,
    /// One focal set grows an element per case, case = 1…20.
    Growing,
}

impl Scenario {
    /// The inclusive step range the sweep iterates over.
    pub fn steps(self) -> std::ops::RangeInclusive<u32> {
        match self {
            Scenario::Shifted => 2..=12,
            Scenario::Growing => 1..=20,
        }
    }

    /// Builds the BPA pair for one step of this scenario.
    pub fn bpas(self, step: u32) -> Result<(Bpa, Bpa, Frame)> {
        match self {
            Scenario::Shifted => scenario_shifted(step),
            Scenario::Growing => scenario_growing(step),
        }
    }
}

/// A clamped negative inner value observed at one sweep step.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClampEvent {
    /// Which metric produced it: "jousselme", "sunberg", or "generalized".
    pub metric: &'static str,
    /// The raw inner value that was clamped to zero.
    pub inner: f64,
}

/// The three distances at one sweep step.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    /// Shift index i, or the subset size |A|.
    pub step: u32,
    pub d_jousselme: f64,
    pub d_sunberg: f64,
    pub d_generalized: f64,
    /// Negative-clamp diagnostics, empty in healthy runs.
    pub clamp_events: Vec<ClampEvent>,
}

/// Merges two sorted position lists into one embedded frame, labelling
/// each element with the shortest decimal form of its position so that
/// coinciding values (2.0 and 2, say) land on one element.
fn union_frame(a_points: &[f64], b_points: &[f64]) -> Result<Frame> {
    let mut points: Vec<f64> = a_points.iter().chain(b_points).copied().collect();
    points.sort_by(f64::total_cmp);
    points.dedup();
    let labels: Vec<String> = points.iter().map(|p| p.to_string()).collect();
    Frame::embedded(labels, points)
}

/// The shifted-BPA scenario at shift index `i`, 2 ≤ i ≤ 12.
///
/// The first BPA is fixed: masses 0.1, 0.2, 0.4, 0.2, 0.1 on the nested
/// prefixes of (2, 2.3, 2.5, 2.7, 3). The second puts ⅓ each on {i},
/// {i, i+0.5}, and {i, i+0.5, i+1}. Both live on the union frame of the
/// two element universes, each element embedded at its numeric value;
/// at small i the universes overlap (at i = 2 the frame is just the
/// five fixed elements) and from i = 4 on they are disjoint.
pub fn scenario_shifted(i: u32) -> Result<(Bpa, Bpa, Frame)> {
    if !(2..=12).contains(&i) {
        return Err(Error::StepOutOfRange(i));
    }
    let a_points = [2.0, 2.3, 2.5, 2.7, 3.0];
    let a_masses = [0.1, 0.2, 0.4, 0.2, 0.1];
    let base = f64::from(i);
    let b_points = [base, base + 0.5, base + 1.0];

    let frame = union_frame(&a_points, &b_points)?;
    let prefix_sets = |points: &[f64], frame: &Frame| -> Result<Vec<crate::frame::FocalSet>> {
        (1..=points.len())
            .map(|n| frame.subset(points[..n].iter().map(|p| p.to_string())))
            .collect()
    };

    let a_sets = prefix_sets(&a_points, &frame)?;
    let m_a = Bpa::new(&frame, a_sets.into_iter().zip(a_masses))?;

    let third = 1.0 / 3.0;
    let b_sets = prefix_sets(&b_points, &frame)?;
    let m_b = Bpa::new(&frame, b_sets.into_iter().map(|s| (s, third)))?;

    Ok((m_a, m_b, frame))
}

/// The growing-subset scenario at `case`, 1 ≤ case ≤ 20.
///
/// The frame is "1"…"20" embedded at 1…20. The first BPA assigns 0.05
/// to {2,3,4}, 0.05 to {7}, 0.1 to Ω, and 0.8 to A = {1, …, case}; the
/// second is categorical on {1,2,3,4,5}. At case 20, A coincides with Ω
/// and the two masses merge additively into m(Ω) = 0.9.
pub fn scenario_growing(case: u32) -> Result<(Bpa, Bpa, Frame)> {
    if !(1..=20).contains(&case) {
        return Err(Error::CaseOutOfRange(case));
    }
    let labels: Vec<String> = (1..=20).map(|j| j.to_string()).collect();
    let positions: Vec<f64> = (1..=20).map(f64::from).collect();
    let frame = Frame::embedded(labels, positions)?;

    let label_range = |lo: u32, hi: u32| (lo..=hi).map(|j| j.to_string());
    let mut assignments = vec![
        (frame.subset(label_range(2, 4))?, 0.05),
        (frame.subset(["7"])?, 0.05),
        (frame.full_set(), 0.1),
    ];
    let a = frame.subset(label_range(1, case))?;
    match assignments.iter_mut().find(|(set, _)| *set == a) {
        Some((_, mass)) => *mass += 0.8,
        None => assignments.push((a, 0.8)),
    }
    let m1 = Bpa::new(&frame, assignments)?;

    let m2 = Bpa::categorical(frame.subset(label_range(1, 5))?)?;
    Ok((m1, m2, frame))
}

/// Runs a full sweep, returning one result per step in ascending order.
pub fn run_sweep(scenario: Scenario, params: &DistanceParams) -> Result<Vec<SweepResult>> {
    let metrics: [(&'static str, EvidenceMetric); 3] = [
        ("jousselme", EvidenceMetric::Jousselme),
        (
            "sunberg",
            EvidenceMetric::Sunberg {
                tuning: params.hausdorff_k(),
            },
        ),
        ("generalized", EvidenceMetric::Generalized(params.clone())),
    ];
    scenario
        .steps()
        .map(|step| {
            let (m1, m2, _) = scenario.bpas(step)?;
            let mut values = [0.0; 3];
            let mut clamp_events = Vec::new();
            for (slot, (name, metric)) in values.iter_mut().zip(&metrics) {
                let report = evidence_distance_report(&m1, &m2, metric)?;
                *slot = report.value;
                if let Some(inner) = report.negative_inner {
                    clamp_events.push(ClampEvent {
                        metric: name,
                        inner,
                    });
                }
            }
            Ok(SweepResult {
                step,
                d_jousselme: values[0],
                d_sunberg: values[1],
                d_generalized: values[2],
                clamp_events,
            })
        })
        .collect()
}

/// Renders sweep results as CSV: a fixed header, one row per step,
/// 12 significant digits, LF line endings.
pub fn sweep_csv(results: &[SweepResult]) -> String {
    use crate::sigfig::format_sig;
    let mut out = String::from("step,d_jousselme,d_sunberg,d_generalized\n");
    for r in results {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.step,
            format_sig(r.d_jousselme, 12),
            format_sig(r.d_sunberg, 12),
            format_sig(r.d_generalized, 12),
        ));
    }
    out
}
