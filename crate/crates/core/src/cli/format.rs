//! Deterministic number and CSV formatting.

use std::fmt::Write as _;

/// 12 significant digits; scientific when `|x| < 1e-4` or `|x| >= 1e6`.
/// Trailing zeros are dropped and zero prints as `0`.
pub fn num(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        return format!("{}e{exp}", trim_zeros(mantissa));
    }
    let decimals = (11 - exp) as usize;
    let rounded: f64 = sci.parse().expect("round trip");
    trim_zeros(&format!("{rounded:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Rows of already-formatted cells, joined with commas and LF.
#[derive(Clone, Debug, Default)]
pub struct Csv {
    buf: String,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        let mut csv = Self::default();
        csv.row(header.iter().map(|s| s.to_string()));
        csv
    }

    pub fn row<I, S>(&mut self, cells: I)
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut first = true;
        for cell in cells {
            if !first {
                self.buf.push(',');
            }
            first = false;
            self.buf.push_str(cell.as_ref());
        }
        self.buf.push('\n');
    }

    pub fn nums(&mut self, values: &[f64]) {
        self.row(values.iter().map(|&v| num(v)));
    }

    pub fn into_string(self) -> String {
        self.buf
    }
}

/// `key=value` pairs joined by spaces, prefixed by a tag.
pub fn summary_line(tag: &str, fields: &[(&str, String)]) -> String {
    let mut s = tag.to_string();
    for (k, v) in fields {
        let _ = write!(s, " {k}={v}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(num(0.0), "0");
        assert_eq!(num(-0.0), "0");
        assert_eq!(num(1.0), "1");
        assert_eq!(num(2.0 / 3.0), "0.666666666667");
        assert_eq!(num(-1234.5), "-1234.5");
        assert_eq!(num(9.4736842105263), "9.47368421053");
        assert_eq!(num(999999.9999999), "1e6");
        assert_eq!(num(123456.7), "123456.7");
        assert_eq!(num(1e-4), "0.0001");
        assert_eq!(num(9.99e-5), "9.99e-5");
        assert_eq!(num(1.0 / 3.0 * 1e-7), "3.33333333333e-8");
        assert_eq!(num(2.5e10), "2.5e10");
        assert_eq!(num(f64::NAN), "nan");
        assert_eq!(num(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn csv_rows() {
        let mut c = Csv::new(&["a", "b"]);
        c.nums(&[1.0, 0.5]);
        c.row(["x", "y"]);
        assert_eq!(c.into_string(), "a,b\n1,0.5\nx,y\n");
        assert_eq!(summary_line("S", &[("k", "1".into())]), "S k=1");
    }
}
