//! Deterministic float formatting for the text emitters.

/// Format with `digits` significant digits, trimming the exponent form
/// rustc would sometimes pick. Output is a plain decimal like `-1.23456`
/// or `0.000123456`, stable across runs.
pub(crate) fn sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // trim trailing zeros after a decimal point
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        if t == "-0" {
            "0".to_string()
        } else {
            t.to_string()
        }
    } else {
        s
    }
}
