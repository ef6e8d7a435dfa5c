//! The α dial: sliding the generalized distance between its parents.
//!
//! d_generalized² = α·d_jousselme² + (1−α)·d_sunberg², so the blend
//! moves monotonically from the Hausdorff-based value at α = 0 to the
//! Jaccard-based value at α = 1, and at the endpoints it reproduces
//! them exactly, not just approximately.

use evidist::{
    distance_generalized, distance_jousselme, distance_sunberg, Bpa, DistanceParams, Frame, Result,
};

fn main() -> Result<()> {
    let frame = Frame::embedded(
        vec!["a", "b", "c", "d"],
        vec![1.0, 2.0, 6.0, 7.0],
    )?;
    let m1 = Bpa::new(
        &frame,
        [
            (frame.subset(["a", "b"])?, 0.7),
            (frame.subset(["a"])?, 0.3),
        ],
    )?;
    let m2 = Bpa::new(
        &frame,
        [
            (frame.subset(["c", "d"])?, 0.6),
            (frame.full_set(), 0.4),
        ],
    )?;

    let d_j = distance_jousselme(&m1, &m2)?;
    let d_s = distance_sunberg(&m1, &m2, 1.0)?;
    println!("jousselme: {d_j:.12}");
    println!("sunberg:   {d_s:.12}");
    println!();
    println!("alpha  d_generalized");
    for step in 0..=10 {
        let alpha = f64::from(step) / 10.0;
        let d = distance_generalized(&m1, &m2, &DistanceParams::new(alpha, 1.0)?)?;
        println!("{alpha:.1}    {d:.12}");
    }

    let at_zero = distance_generalized(&m1, &m2, &DistanceParams::new(0.0, 1.0)?)?;
    let at_one = distance_generalized(&m1, &m2, &DistanceParams::new(1.0, 1.0)?)?;
    assert_eq!(at_zero.to_bits(), d_s.to_bits());
    assert_eq!(at_one.to_bits(), d_j.to_bits());
    println!();
    println!("endpoints match the pure metrics bit for bit.");
    Ok(())
}
