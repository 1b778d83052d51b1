use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Number, Value};

use xns9_core::CheckReport;

/// Rendered result of one subcommand.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

impl Output {
    pub fn from_report(report: CheckReport) -> Self {
        Output { text: report.to_string(), passed: report.passed(), json: json!(report) }
    }

    pub fn from_reports(reports: Vec<CheckReport>) -> Self {
        let passed = reports.iter().all(CheckReport::passed);
        let text = reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
        Output { text, passed, json: json!(reports) }
    }
}

/// Exact integer as a JSON number of any size.
pub fn big(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

/// `{"num": .., "den": ..}` with integer parts.
pub fn rational(q: &BigRational) -> Value {
    json!({ "num": big(q.numer()), "den": big(q.denom()) })
}

/// Top-level JSON document for `command`.
pub fn document(command: &str, body: Value) -> Value {
    json!({ "version": env!("CARGO_PKG_VERSION"), "command": command, "result": body })
}

/// `2^6·3^3`, with a leading `-` for negative values and `1` for the empty product.
pub fn factored(negative: bool, factors: &[(u64, u32)]) -> String {
    let body = if factors.is_empty() {
        "1".to_string()
    } else {
        factors.iter().map(|(p, e)| format!("{p}^{e}")).collect::<Vec<_>>().join("·")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}", w = *w)).collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(header.to_vec())];
    out.extend(rows.iter().map(|r| line(r.iter().map(String::as_str).collect())));
    out.join("\n") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_stay_exact() {
        let n = BigInt::from(640320).pow(3) * BigInt::from(-1);
        assert_eq!(serde_json::to_string(&big(&n)).unwrap(), "-262537412640768000");
        let huge = BigInt::from(1117947).pow(3) * BigInt::from(10).pow(30);
        assert_eq!(serde_json::to_string(&big(&huge)).unwrap(), huge.to_string());
    }

    #[test]
    fn factored_forms() {
        assert_eq!(factored(false, &[(2, 6), (3, 3)]), "2^6·3^3");
        assert_eq!(factored(true, &[(3, 3), (5, 3)]), "-3^3·5^3");
        assert_eq!(factored(false, &[]), "1");
    }

    #[test]
    fn keys_are_sorted() {
        let doc = document("x", json!({ "b": 1, "a": 2 }));
        assert_eq!(
            serde_json::to_string(&doc).unwrap(),
            r#"{"command":"x","result":{"a":2,"b":1},"version":"0.1.0"}"#
        );
    }

    #[test]
    fn columns_line_up() {
        let t = table(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    bb\nxyz  1\n");
    }
}
