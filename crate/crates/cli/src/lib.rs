//! Pieces of the `pair014` command line that are worth testing on their own:
//! model manifests, report formatting, and the benchmark table.

pub mod bench;
pub mod manifest;
pub mod report;

use pair014_core::Rational;

/// `r` as a percentage rounded to two decimals, e.g. `1/72 -> "1.39"`.
pub fn percent_2dp(r: Rational) -> String {
    let hundredths = (r * Rational::from_integer(10_000)).round().to_integer();
    let sign = if hundredths < 0 { "-" } else { "" };
    let abs = hundredths.abs();
    format!("{sign}{}.{:02}", abs / 100, abs % 100)
}

/// `r` as a percentage with one decimal, e.g. `449/500 -> "89.8"`.
pub fn percent_1dp(r: Rational) -> String {
    let tenths = (r * Rational::from_integer(1_000)).round().to_integer();
    format!("{}.{}", tenths / 10, tenths % 10)
}
