//! Why three distances? A structural metric cannot see positions.
//!
//! Three categorical BPAs sit on a frame embedded on the real line:
//! one at 0, one at 1, one far away at 10. Jousselme's distance only
//! compares set structure, so both alternatives look equally different
//! from the first. The Hausdorff-based distance grows with physical
//! separation, and the generalized distance blends the two views.

use evidist::{
    distance_generalized, distance_jousselme, distance_sunberg, Bpa, DistanceParams, Frame, Result,
};

fn main() -> Result<()> {
    let frame = Frame::embedded(vec!["low", "mid", "high"], vec![0.0, 1.0, 10.0])?;
    let at_low = Bpa::categorical(frame.subset(["low"])?)?;
    let at_mid = Bpa::categorical(frame.subset(["mid"])?)?;
    let at_high = Bpa::categorical(frame.subset(["high"])?)?;

    let params = DistanceParams::default();
    println!("pair            jousselme   sunberg     generalized");
    for (name, a, b) in [
        ("low vs mid ", &at_low, &at_mid),
        ("low vs high", &at_low, &at_high),
    ] {
        println!(
            "{name}     {:.6}    {:.6}    {:.6}",
            distance_jousselme(a, b)?,
            distance_sunberg(a, b, 1.0)?,
            distance_generalized(a, b, &params)?,
        );
    }
    println!();
    println!("jousselme rates both pairs 1.0; only the embedded metrics");
    println!("notice that `high` is ten times farther away than `mid`.");
    Ok(())
}
