//! Fusing two bodies of evidence with Dempster's rule.
//!
//! Two witnesses weigh the same three suspects differently; the
//! combination concentrates mass where they agree and renormalizes
//! away the conflicting part.

use evidist::{conflict, dempster_combine, Bpa, Frame, Result};

fn main() -> Result<()> {
    let frame = Frame::new(vec!["peter", "paul", "mary"])?;

    let first = Bpa::new(
        &frame,
        [
            (frame.subset(["peter"])?, 0.6),
            (frame.subset(["paul"])?, 0.3),
            (frame.full_set(), 0.1),
        ],
    )?;
    let second = Bpa::new(
        &frame,
        [
            (frame.subset(["peter"])?, 0.2),
            (frame.subset(["paul"])?, 0.5),
            (frame.subset(["mary"])?, 0.2),
            (frame.full_set(), 0.1),
        ],
    )?;

    let k = conflict(&first, &second)?;
    println!("conflict between the witnesses: k = {k:.4}");

    let fused = dempster_combine(&first, &second)?;
    println!("fused assignment:");
    for (set, mass) in fused.iter() {
        println!("  m({set}) = {mass:.4}");
    }
    Ok(())
}
