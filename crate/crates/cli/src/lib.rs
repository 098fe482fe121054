//! Text formats and the `semigraph` command-line tool.

pub mod format;
mod run;

pub use format::{emit_qmat, emit_smg, parse_qmat, parse_smg, FormatError};
pub use run::run;

/// Fixed-point text with 10 significant digits; magnitudes below `snap` print as zero.
pub fn fmt_real(x: f64, snap: f64) -> String {
    if x.abs() < snap || x == 0.0 {
        return "0.000000000".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // Rounding can carry into a new digit (9.9999999999 -> 10.000000000).
    let rounded: f64 = s.parse().unwrap_or(x);
    if rounded.abs() >= 10f64.powi(magnitude + 1) && decimals > 0 {
        format!("{x:.prec$}", prec = decimals - 1)
    } else {
        s
    }
}
