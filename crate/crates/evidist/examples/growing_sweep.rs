//! The growing-subset sweep: distance as a focal set dilutes.
//!
//! Over a frame of twenty integer positions, one BPA pins 0.8 of its
//! mass on A = {1, …, case} while the other is categorical on
//! {1, 2, 3, 4, 5}. All three distances bottom out at case 5, where A
//! coincides with the categorical set, and climb again as A swallows
//! the rest of the frame.

use evidist::{run_sweep, sweep_csv, DistanceParams, Result, Scenario};

fn main() -> Result<()> {
    let results = run_sweep(Scenario::Growing, &DistanceParams::default())?;
    print!("{}", sweep_csv(&results));

    let min = results
        .iter()
        .min_by(|a, b| a.d_jousselme.total_cmp(&b.d_jousselme))
        .unwrap();
    eprintln!();
    eprintln!(
        "d_jousselme is smallest at case {} ({:.6})",
        min.step, min.d_jousselme
    );
    Ok(())
}
