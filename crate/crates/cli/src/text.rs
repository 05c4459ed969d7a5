//! Human-readable rendering.

use albert_core::{Jordan64, Octonion64};

/// Fixed six decimals with trailing zeros trimmed; `-0` prints as `0`.
pub fn real(x: f64) -> String {
    let s = format!("{x:.6}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_owned()
    } else {
        s
    };
    if s == "-0" {
        "0".to_owned()
    } else {
        s
    }
}

/// `c0 + c1 e1 + ... + c7 e7`, omitting terms that print as zero.
pub fn octonion(x: &Octonion64) -> String {
    let mut out = String::new();
    for (k, &c) in x.coeffs().iter().enumerate() {
        let mag = real(c.abs());
        if mag == "0" {
            continue;
        }
        let unit = if k == 0 {
            String::new()
        } else {
            format!("e{k}")
        };
        let term = match (k, mag.as_str()) {
            (0, _) => mag,
            (_, "1") => unit,
            _ => format!("{mag} {unit}"),
        };
        if out.is_empty() {
            if c < 0.0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0.0 { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        "0".to_owned()
    } else {
        out
    }
}

/// Three rows with left-aligned, padded columns.
pub fn grid(a: &Jordan64) -> String {
    let cells: Vec<Vec<String>> = (0..3)
        .map(|i| (0..3).map(|j| octonion(&a.entry(i, j))).collect())
        .collect();
    let widths: Vec<usize> = (0..3)
        .map(|j| {
            cells
                .iter()
                .map(|row| row[j].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        out.push_str("[ ");
        out.push_str(line.join("  ").trim_end());
        out.push_str(" ]\n");
    }
    out
}

pub fn reals(xs: &[f64]) -> String {
    let parts: Vec<String> = xs.iter().map(|&x| real(x)).collect();
    format!("[{}]", parts.join(", "))
}

pub fn sci(x: f64) -> String {
    // Adding 0.0 turns -0 into +0.
    format!("{:.3e}", x + 0.0)
}
