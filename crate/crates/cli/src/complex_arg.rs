//! Complex literals on the command line: `a`, `bi`, `a+bi`, `a-bi`.
//! No whitespace; exponent signs (`1e-3`) do not split the literal.

use num_complex::Complex64;

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let bad = || format!("malformed complex literal {s:?}: expected a, bi, a+bi or a-bi");
    if s.is_empty() || s.chars().any(char::is_whitespace) {
        return Err(bad());
    }
    // Split at the last top-level +/- (not a leading sign, not an exponent).
    let bytes = s.as_bytes();
    let mut split = None;
    for i in (1..bytes.len()).rev() {
        let c = bytes[i];
        if (c == b'+' || c == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
            split = Some(i);
            break;
        }
    }
    if let Some(i) = split {
        let re: f64 = s[..i].parse().map_err(|_| bad())?;
        let imag_part = &s[i..];
        let digits = imag_part
            .strip_suffix(['i', 'I'])
            .ok_or_else(bad)?;
        let im: f64 = match digits {
            "+" => 1.0,
            "-" => -1.0,
            d => d.parse().map_err(|_| bad())?,
        };
        Ok(Complex64::new(re, im))
    } else if let Some(digits) = s.strip_suffix(['i', 'I']) {
        let im: f64 = match digits {
            "" => 1.0,
            "-" => -1.0,
            d => d.parse().map_err(|_| bad())?,
        };
        Ok(Complex64::new(0.0, im))
    } else {
        Ok(Complex64::new(s.parse().map_err(|_| bad())?, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepted_forms() {
        assert_eq!(parse_complex("1.5").unwrap(), Complex64::new(1.5, 0.0));
        assert_eq!(parse_complex("-2").unwrap(), Complex64::new(-2.0, 0.0));
        assert_eq!(parse_complex("3i").unwrap(), Complex64::new(0.0, 3.0));
        assert_eq!(parse_complex("-0.5i").unwrap(), Complex64::new(0.0, -0.5));
        assert_eq!(parse_complex("1+2i").unwrap(), Complex64::new(1.0, 2.0));
        assert_eq!(parse_complex("1-2i").unwrap(), Complex64::new(1.0, -2.0));
        assert_eq!(parse_complex("-1.5+0i").unwrap(), Complex64::new(-1.5, 0.0));
        assert_eq!(parse_complex("1e-3+2e2i").unwrap(), Complex64::new(1e-3, 200.0));
        assert_eq!(parse_complex("1+i").unwrap(), Complex64::new(1.0, 1.0));
        assert_eq!(parse_complex("1-i").unwrap(), Complex64::new(1.0, -1.0));
    }

    #[test]
    fn rejected_forms() {
        for s in ["", "1 + 2i", "2i+1", "abc", "1+2j", "1++2i", "i2"] {
            assert!(parse_complex(s).is_err(), "{s:?} should be rejected");
        }
    }
}
