//! Embedded reference table of M_l(x) values (l = 0..=5, x = 0.0..=5.0 in
//! steps of 0.1, tabulated to ten decimals) and the comparison machinery the
//! validation suite and CLI diff against it.

use crate::coherent::bessel::bessel_m;
use crate::error::{Error, Result};

const EMBEDDED_CSV: &str = include_str!("bessel_m_table.csv");

/// Absolute tolerance for table entries below [`ABS_REL_SPLIT`], relative
/// tolerance above it.
pub const TABLE_TOLERANCE: f64 = 1e-9;
/// Entries at least this large are compared in relative terms.
pub const ABS_REL_SPLIT: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub x: f64,
    pub m: [f64; 6],
}

/// The M_l reference grid.
#[derive(Debug, Clone, PartialEq)]
pub struct BesselMTable {
    rows: Vec<TableRow>,
}

impl BesselMTable {
    /// The table shipped inside the crate.
    pub fn embedded() -> Self {
        Self::from_csv_str(EMBEDDED_CSV).expect("embedded table asset is well-formed")
    }

    /// Parses a CSV with header `x,M0,M1,M2,M3,M4,M5`.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidTable("empty table".into()))?;
        if header.trim() != "x,M0,M1,M2,M3,M4,M5" {
            return Err(Error::InvalidTable(format!(
                "unexpected header '{header}'"
            )));
        }
        let mut rows = Vec::new();
        for (idx, line) in lines.enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 7 {
                return Err(Error::InvalidTable(format!(
                    "row {} has {} fields, expected 7",
                    idx + 1,
                    fields.len()
                )));
            }
            let mut parsed = [0.0f64; 7];
            for (k, f) in fields.iter().enumerate() {
                parsed[k] = f.parse().map_err(|_| {
                    Error::InvalidTable(format!("row {}: bad number '{f}'", idx + 1))
                })?;
            }
            rows.push(TableRow {
                x: parsed[0],
                m: [
                    parsed[1], parsed[2], parsed[3], parsed[4], parsed[5], parsed[6],
                ],
            });
        }
        if rows.is_empty() {
            return Err(Error::InvalidTable("table has no data rows".into()));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[TableRow] {
        &self.rows
    }

    /// Number of (x, l) reference values.
    pub fn entry_count(&self) -> usize {
        self.rows.len() * 6
    }
}

/// Outcome of recomputing one table entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableComparison {
    pub x: f64,
    pub l: u32,
    pub expected: f64,
    pub computed: f64,
    /// Absolute error for small entries, relative error for large ones.
    pub error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Recomputes every table entry with [`bessel_m`] and reports the residuals.
pub fn compare_table(table: &BesselMTable) -> Vec<TableComparison> {
    let mut out = Vec::with_capacity(table.entry_count());
    for row in table.rows() {
        for l in 0..6u32 {
            let expected = row.m[l as usize];
            let computed = bessel_m::<f64>(l, row.x);
            let error = if expected.abs() < ABS_REL_SPLIT {
                (computed - expected).abs()
            } else {
                (computed - expected).abs() / expected.abs()
            };
            out.push(TableComparison {
                x: row.x,
                l,
                expected,
                computed,
                error,
                tolerance: TABLE_TOLERANCE,
                pass: error <= TABLE_TOLERANCE,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_table_has_full_grid() {
        let table = BesselMTable::embedded();
        assert_eq!(table.rows().len(), 51);
        assert_eq!(table.entry_count(), 306);
        assert_eq!(table.rows()[0].x, 0.0);
        assert_eq!(table.rows()[50].x, 5.0);
    }

    #[test]
    fn zero_row_is_sqrt_factorial_limit() {
        let table = BesselMTable::embedded();
        let row = table.rows()[0];
        let mut fact = 1.0f64;
        for l in 0..6u32 {
            if l > 0 {
                fact *= f64::from(2 * l) * f64::from(2 * l + 1);
            }
            assert!(
                (row.m[l as usize] - fact.sqrt()).abs() <= 1e-9 * fact.sqrt().max(1.0),
                "l={l}"
            );
        }
    }

    #[test]
    fn every_entry_reproduced() {
        let results = compare_table(&BesselMTable::embedded());
        assert_eq!(results.len(), 306);
        let failures: Vec<_> = results.iter().filter(|r| !r.pass).collect();
        assert!(failures.is_empty(), "failures: {failures:?}");
    }

    #[test]
    fn corrupted_entry_is_detected_and_named() {
        let mut csv = String::from(EMBEDDED_CSV);
        // flip one digit in the x = 1.0, M0 entry
        csv = csv.replace("0.9405884429", "0.9405884529");
        let table = BesselMTable::from_csv_str(&csv).unwrap();
        let results = compare_table(&table);
        let failures: Vec<_> = results.iter().filter(|r| !r.pass).collect();
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[0].l, 0);
        assert!((failures[0].x - 1.0).abs() < 1e-12);
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(BesselMTable::from_csv_str("").is_err());
        assert!(BesselMTable::from_csv_str("bad,header\n1,2").is_err());
        assert!(BesselMTable::from_csv_str("x,M0,M1,M2,M3,M4,M5\n0.0,1.0").is_err());
        assert!(BesselMTable::from_csv_str("x,M0,M1,M2,M3,M4,M5\n0.0,a,b,c,d,e,f").is_err());
        assert!(BesselMTable::from_csv_str("x,M0,M1,M2,M3,M4,M5\n").is_err());
    }
}
