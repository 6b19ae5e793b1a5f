//! Number formatting and CSV/JSON writers shared by the subcommands.

use std::io::{self, Write};

pub const DEFAULT_PRECISION: usize = 12;
pub const PRECISION_ENV: &str = "WIGNER_ENT_PRECISION";

/// `%g`-style formatting with `digits` significant digits: fixed notation for
/// moderate exponents, scientific otherwise, trailing zeros trimmed.
pub fn format_sig(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    // round first so the exponent reflects the printed mantissa
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Rounds to `digits` significant digits (what the CSV would show).
pub fn round_sig(x: f64, digits: usize) -> f64 {
    format_sig(x, digits).parse().unwrap_or(x)
}

pub fn write_csv(
    out: &mut dyn Write,
    columns: &[String],
    rows: &[Vec<f64>],
    digits: usize,
) -> io::Result<()> {
    writeln!(out, "{}", columns.join(","))?;
    for row in rows {
        let cells: Vec<String> = row.iter().map(|&x| format_sig(x, digits)).collect();
        writeln!(out, "{}", cells.join(","))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(0.0, 12), "0");
        assert_eq!(format_sig(-0.0, 12), "0");
        assert_eq!(format_sig(1.0, 12), "1");
        assert_eq!(format_sig(0.5, 12), "0.5");
        assert_eq!(format_sig(std::f64::consts::PI, 12), "3.14159265359");
        assert_eq!(format_sig(-0.000123456789012345, 12), "-0.000123456789012");
        assert_eq!(format_sig(1.5e-7, 12), "1.5e-7");
        assert_eq!(format_sig(123456.0, 3), "1.23e5");
        assert_eq!(format_sig(0.999999999999999, 12), "1");
        assert_eq!(format_sig(2.0 / 3.0, 4), "0.6667");
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write_csv(
            &mut buf,
            &["x".into(), "y".into()],
            &[vec![0.0, 0.25], vec![1.0, 0.5]],
            12,
        )
        .unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "x,y\n0,0.25\n1,0.5\n");
    }
}
