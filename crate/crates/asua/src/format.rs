//! Text rendering of exact values and the per-vertex ASUA table.
//!
//! The table format is one line per vertex, tab-separated:
//! `v<id>\t<p>/<q>\t<decimal>`, absorbing vertices shown as `0/1`. The
//! rational field is bit-exact across platforms; the decimal column is a
//! 12-place rendering computed in integer arithmetic, never through f64.

use std::fmt::Write as _;

use num::{BigInt, Signed, Zero};

use crate::chain::{AsuaVector, FloatSolution, TransitionMatrix};
use crate::rational::Rational;

/// `p/q` with the denominator always present (`13/1`, `0/1`).
pub fn rational_str(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Fixed-point decimal with `places` digits after the point, rounded half
/// away from zero, computed exactly.
pub fn decimal_places(r: &Rational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let numer = r.numer().abs() * &scale;
    let denom = r.denom();
    let two = BigInt::from(2);
    // round half away from zero: floor((2|n| + d) / 2d)
    let scaled = (numer * &two + denom) / (denom * &two);
    let digits = scaled.to_string();
    let places = places as usize;
    let padded = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits
    };
    let split = padded.len() - places;
    let sign = if r.is_negative() && !scaled.is_zero() { "-" } else { "" };
    if places == 0 {
        format!("{sign}{padded}")
    } else {
        format!("{sign}{}.{}", &padded[..split], &padded[split..])
    }
}

/// 12-place decimal, the table rendering.
pub fn decimal_12(r: &Rational) -> String {
    decimal_places(r, 12)
}

/// 2-place decimal, used for compact grid output.
pub fn decimal_2(r: &Rational) -> String {
    decimal_places(r, 2)
}

/// Exact ASUA table over all states of a chain.
pub fn exact_table(tm: &TransitionMatrix, t: &AsuaVector) -> String {
    let mut out = String::new();
    for i in 0..tm.order() {
        let v = crate::graph::VertexId::new(i);
        let value = if tm.is_absorbing(v) {
            Rational::zero()
        } else {
            t.value_or_zero(v)
        };
        let _ = writeln!(out, "{v}\t{}\t{}", rational_str(&value), decimal_12(&value));
    }
    out
}

/// Float ASUA table, same layout. A float has no meaningful exact
/// fraction, so the rational column prints `~` for transient states.
pub fn float_table(tm: &TransitionMatrix, f: &FloatSolution) -> String {
    let mut out = String::new();
    for i in 0..tm.order() {
        let v = crate::graph::VertexId::new(i);
        if tm.is_absorbing(v) {
            let _ = writeln!(out, "{v}\t0/1\t{:.12}", 0.0);
        } else {
            let _ = writeln!(out, "{v}\t~\t{:.12}", f.value_or_zero(v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{fraction, integer};

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_12(&integer(1)), "1.000000000000");
        assert_eq!(decimal_12(&integer(0)), "0.000000000000");
        assert_eq!(decimal_12(&fraction(1, 3)), "0.333333333333");
        assert_eq!(decimal_12(&fraction(2, 3)), "0.666666666667");
        assert_eq!(decimal_12(&fraction(-7, 2)), "-3.500000000000");
        assert_eq!(decimal_2(&fraction(49, 5)), "9.80");
        assert_eq!(decimal_places(&fraction(1, 2), 0), "1");
        assert_eq!(decimal_places(&fraction(-1, 200), 2), "-0.01");
    }

    #[test]
    fn table_layout() {
        let g = crate::families::gen_path(2).unwrap();
        let tm = crate::build_transition(&g).unwrap();
        let t = crate::solve_asua(&tm).unwrap();
        assert_eq!(
            exact_table(&tm, &t),
            "v1\t1/1\t1.000000000000\nv2\t0/1\t0.000000000000\n"
        );
    }
}
