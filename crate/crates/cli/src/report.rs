//! Run reports: a machine-readable JSON document per command, emitted byte-
//! identically for identical flags and seed.

use std::fs;
use std::path::PathBuf;

use disk_squeeze_core::geometry::ExtendedComplex;
use disk_squeeze_core::json::JsonValue;

pub const SCHEMA: &str = "disk-squeeze/1";

pub fn new_report(command: &str) -> JsonValue {
    let mut doc = JsonValue::object();
    doc.push("schema", SCHEMA).push("command", command);
    doc
}

pub fn extended_json(x: ExtendedComplex) -> JsonValue {
    match x {
        ExtendedComplex::Finite(z) => JsonValue::complex(z),
        ExtendedComplex::Infinity => JsonValue::from("infinity"),
    }
}

/// One named check with its measured residual.
pub fn check_entry(name: &str, residual: f64, tolerance: f64) -> (JsonValue, bool) {
    let pass = residual <= tolerance;
    let mut doc = JsonValue::object();
    doc.push("name", name)
        .push("residual", residual)
        .push("tolerance", tolerance)
        .push("pass", pass);
    (doc, pass)
}

/// Write to `--out` or stdout, always with a trailing newline.
pub fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, format!("{content}\n"))
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}
