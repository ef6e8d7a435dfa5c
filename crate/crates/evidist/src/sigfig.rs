//! Fixed-notation formatting with a given number of significant digits.
//!
//! Used for all numeric CLI and CSV output so repeated runs are
//! byte-identical.

/// Formats `value` in plain decimal notation with `digits` significant
/// digits. Zero is written with `digits` decimal places, e.g.
/// `format_sig(0.0, 12)` is `"0.000000000000"`.
///
/// Magnitudes of 10^digits and above exceed what plain notation can
/// express in `digits` significant digits; they are written with all
/// their integer digits instead.
pub fn format_sig(value: f64, digits: usize) -> String {
    assert!(digits >= 1, "need at least one significant digit");
    if !value.is_finite() {
        return value.to_string();
    }
    if value == 0.0 {
        return format!("{:.*}", digits, 0.0);
    }
    let mut magnitude = decimal_exponent(value);
    // Rounding can carry into the next power of ten (0.99999… → 1.0…),
    // which would add a significant digit; reformat once if it does.
    for _ in 0..2 {
        let decimals = (digits as i64 - 1 - magnitude).clamp(0, 64) as usize;
        let rendered = format!("{:.*}", decimals, value);
        let rounded: f64 = rendered.parse().expect("decimal output reparses");
        let new_magnitude = if rounded == 0.0 {
            magnitude
        } else {
            decimal_exponent(rounded)
        };
        if new_magnitude == magnitude || decimals == 0 {
            return rendered;
        }
        magnitude = new_magnitude;
    }
    unreachable!("magnitude settles after one correction");
}

/// floor(log10(|value|)), taken from scientific notation so it is exact
/// even right at a power of ten.
fn decimal_exponent(value: f64) -> i64 {
    let sci = format!("{:e}", value.abs());
    let e = sci.find('e').expect("{:e} output contains an exponent");
    sci[e + 1..].parse().expect("{:e} exponent is an integer")
}
