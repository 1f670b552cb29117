//! Minimal JSON document builder with deterministic output.
//!
//! Reports must be byte-identical across runs, so floats are always printed
//! with 17 significant digits (`{:.16e}`) instead of a shortest-round-trip
//! scheme, and object keys keep insertion order.

use std::fmt;

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub enum JsonValue {
    Null,
    Bool(bool),
    Int(i64),
    Float(f64),
    Str(String),
    Array(Vec<JsonValue>),
    Object(Vec<(String, JsonValue)>),
}

impl JsonValue {
    pub fn object() -> JsonValue {
        JsonValue::Object(Vec::new())
    }

    /// Append a key to an object; panics on non-objects.
    pub fn push(&mut self, key: &str, value: impl Into<JsonValue>) -> &mut Self {
        match self {
            JsonValue::Object(entries) => entries.push((key.to_owned(), value.into())),
            _ => panic!("push on non-object JSON value"),
        }
        self
    }

    /// `[re, im]` rendering used for complex numbers throughout the CLI.
    pub fn complex(z: Complex64) -> JsonValue {
        JsonValue::Array(vec![JsonValue::from(z.re), JsonValue::from(z.im)])
    }

    /// Serialize without any whitespace.
    pub fn to_string(&self) -> String {
        let mut out = String::new();
        self.write(&mut out).expect("string formatting cannot fail");
        out
    }

    fn write(&self, out: &mut impl fmt::Write) -> fmt::Result {
        match self {
            JsonValue::Null => out.write_str("null"),
            JsonValue::Bool(b) => out.write_str(if *b { "true" } else { "false" }),
            JsonValue::Int(n) => write!(out, "{n}"),
            JsonValue::Float(x) => write!(out, "{}", format_float(*x)),
            JsonValue::Str(s) => write_escaped(out, s),
            JsonValue::Array(items) => {
                out.write_char('[')?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.write_char(',')?;
                    }
                    item.write(out)?;
                }
                out.write_char(']')
            }
            JsonValue::Object(entries) => {
                out.write_char('{')?;
                for (i, (key, value)) in entries.iter().enumerate() {
                    if i > 0 {
                        out.write_char(',')?;
                    }
                    write_escaped(out, key)?;
                    out.write_char(':')?;
                    value.write(out)?;
                }
                out.write_char('}')
            }
        }
    }
}

/// 17 significant digits, sign-normalized so `-0.0` prints as `0.0`.
pub fn format_float(x: f64) -> String {
    assert!(x.is_finite(), "non-finite float in JSON output: {x}");
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

fn write_escaped(out: &mut impl fmt::Write, s: &str) -> fmt::Result {
    out.write_char('"')?;
    for c in s.chars() {
        match c {
            '"' => out.write_str("\\\"")?,
            '\\' => out.write_str("\\\\")?,
            '\n' => out.write_str("\\n")?,
            '\r' => out.write_str("\\r")?,
            '\t' => out.write_str("\\t")?,
            c if (c as u32) < 0x20 => write!(out, "\\u{:04x}", c as u32)?,
            c => out.write_char(c)?,
        }
    }
    out.write_char('"')
}

impl From<bool> for JsonValue {
    fn from(b: bool) -> Self {
        JsonValue::Bool(b)
    }
}

impl From<i64> for JsonValue {
    fn from(n: i64) -> Self {
        JsonValue::Int(n)
    }
}

impl From<usize> for JsonValue {
    fn from(n: usize) -> Self {
        JsonValue::Int(n as i64)
    }
}

impl From<f64> for JsonValue {
    fn from(x: f64) -> Self {
        JsonValue::Float(x)
    }
}

impl From<&str> for JsonValue {
    fn from(s: &str) -> Self {
        JsonValue::Str(s.to_owned())
    }
}

impl From<String> for JsonValue {
    fn from(s: String) -> Self {
        JsonValue::Str(s)
    }
}

impl<T: Into<JsonValue>> From<Vec<T>> for JsonValue {
    fn from(items: Vec<T>) -> Self {
        JsonValue::Array(items.into_iter().map(Into::into).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_have_17_significant_digits() {
        assert_eq!(format_float(0.25), "2.5000000000000000e-1");
        assert_eq!(format_float(-0.0), "0.0000000000000000e0");
        assert_eq!(format_float(1.0 / 3.0), "3.3333333333333331e-1");
    }

    #[test]
    fn object_preserves_insertion_order() {
        let mut doc = JsonValue::object();
        doc.push("zeta", 1i64).push("alpha", true);
        assert_eq!(doc.to_string(), r#"{"zeta":1,"alpha":true}"#);
    }

    #[test]
    fn strings_are_escaped() {
        let v = JsonValue::from("a\"b\\c\n");
        assert_eq!(v.to_string(), r#""a\"b\\c\n""#);
    }

    #[test]
    fn complex_renders_as_pair() {
        let v = JsonValue::complex(Complex64::new(0.5, -1.0));
        assert_eq!(
            v.to_string(),
            "[5.0000000000000000e-1,-1.0000000000000000e0]"
        );
    }
}
