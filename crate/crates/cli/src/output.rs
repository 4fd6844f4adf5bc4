//! Plain-text renderings shared by the commands.

use std::fmt::Write;

use num_bigint::BigInt;

/// Quotes a CSV field when it contains a delimiter, a quote or a newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// A sequence indexed from 1: one value per line (`text`), `n a(n)` lines
/// (`bfile`), or `arity,count` rows (`csv`).
pub fn sequence(values: &[BigInt], format: &str) -> String {
    let mut s = String::new();
    if format == "csv" {
        s.push_str("arity,count\n");
    }
    for (i, v) in values.iter().enumerate() {
        match format {
            "bfile" => writeln!(s, "{} {v}", i + 1),
            "csv" => writeln!(s, "{},{v}", i + 1),
            _ => writeln!(s, "{v}"),
        }
        .expect("writing to a string");
    }
    s
}

/// Values joined by commas, for report lines.
pub fn joined<T: ToString>(values: &[T]) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}
