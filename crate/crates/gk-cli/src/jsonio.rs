//! JSON export of matrices and rotors. Floats are serialized with 17
//! significant digits so every f64 round-trips exactly.

use std::collections::BTreeMap;
use std::io;

use gk_core::{BladeMask, CliffordElement, DenseMatrix};
use serde::Serialize;

/// Matrix schema: `{"rows": R, "cols": C, "entries": [[re, im], ...]}`
/// with entries in row-major order.
#[derive(Debug, Serialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<[f64; 2]>,
}

impl MatrixJson {
    pub fn from_matrix(m: &DenseMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|c| [c.re, c.im]).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RotorJson {
    pub plane: [usize; 2],
    pub angle: f64,
    /// Rotor coefficients keyed by blade name ("1" for the scalar part).
    pub rotor: BTreeMap<String, [f64; 2]>,
    pub rotation: MatrixJson,
}

pub fn blade_name(mask: BladeMask) -> String {
    if mask == 0 {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for i in 0..32 {
        if mask & (1 << i) != 0 {
            parts.push(format!("e{}", i + 1));
        }
    }
    parts.join("^")
}

pub fn element_coefficients(elem: &CliffordElement) -> BTreeMap<String, [f64; 2]> {
    elem.mv()
        .iter_terms()
        .map(|(mask, c)| (blade_name(mask), [c.re, c.im]))
        .collect()
}

/// JSON formatter that writes every float as `{:.16e}` (17 significant
/// digits) instead of the shortest round-trip form.
struct SigDigitFormatter;

impl serde_json::ser::Formatter for SigDigitFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

pub fn to_json_string<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigDigitFormatter);
    value.serialize(&mut ser)?;
    Ok(String::from_utf8(out).expect("serde_json emits utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use gk_core::Complex64;

    #[test]
    fn floats_carry_seventeen_significant_digits() {
        let m = DenseMatrix::identity(1);
        let json = to_json_string(&MatrixJson::from_matrix(&m)).unwrap();
        assert!(json.contains("1.0000000000000000e0"), "{json}");
    }

    #[test]
    fn entries_are_row_major_pairs() {
        let mut m = DenseMatrix::zeros(2, 2);
        m.set(0, 1, Complex64::new(3.0, -4.0));
        let j = MatrixJson::from_matrix(&m);
        assert_eq!(j.entries.len(), 4);
        assert_eq!(j.entries[1], [3.0, -4.0]);
    }

    #[test]
    fn blade_names() {
        assert_eq!(blade_name(0), "1");
        assert_eq!(blade_name(0b1), "e1");
        assert_eq!(blade_name(0b10011), "e1^e2^e5");
    }

    #[test]
    fn exported_json_parses_back() {
        let m = DenseMatrix::identity(2).scale(Complex64::new(0.1, -0.25));
        let json = to_json_string(&MatrixJson::from_matrix(&m)).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["rows"], 2);
        let entry = &parsed["entries"][0];
        assert_eq!(entry[0].as_f64().unwrap(), 0.1);
        assert_eq!(entry[1].as_f64().unwrap(), -0.25);
    }
}
