//! CSV and JSON records written by the commands.
//!
//! Extended-exponent values are split into `mantissa * 2^exp2` with the
//! mantissa printed to 17 significant digits, so a CSV file reads back to the
//! identical value.

use crate::error::{Error, Result};
use crate::numerics::ScaledReal;
use serde::{Deserialize, Serialize};
use std::io::{Read, Write};

/// Header of value files written by `eval` and `asym`.
pub const VALUE_HEADER: [&str; 6] = ["family", "N", "y", "exact_mantissa", "exact_exp2", "sign"];

/// One evaluated value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValueRecord {
    pub family: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub y: f64,
    pub exact_mantissa: f64,
    pub exact_exp2: i64,
    pub sign: i8,
}

impl ValueRecord {
    pub fn new(family: &str, n: usize, y: f64, v: ScaledReal) -> Self {
        ValueRecord {
            family: family.to_string(),
            n,
            y,
            exact_mantissa: v.mantissa(),
            exact_exp2: v.exponent(),
            sign: v.sign(),
        }
    }

    pub fn value(&self) -> ScaledReal {
        ScaledReal::from_fields(self.sign, self.exact_mantissa, self.exact_exp2)
    }
}

/// Mantissa to 17 significant digits.
pub fn fmt_mantissa(m: f64) -> String {
    format!("{m:.16e}")
}

/// Writes value records as CSV.
pub fn write_values_csv<W: Write>(out: W, rows: &[ValueRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(VALUE_HEADER)?;
    for r in rows {
        w.write_record([
            r.family.clone(),
            r.n.to_string(),
            r.y.to_string(),
            fmt_mantissa(r.exact_mantissa),
            r.exact_exp2.to_string(),
            r.sign.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Reads value records written by [`write_values_csv`].
pub fn read_values_csv<R: Read>(input: R) -> Result<Vec<ValueRecord>> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers()?.clone();
    if header.iter().ne(VALUE_HEADER) {
        return Err(Error::Usage(format!("unexpected CSV header {:?}", header.iter().collect::<Vec<_>>())));
    }
    r.deserialize().map(|row| row.map_err(Error::from)).collect()
}

/// One `(N, y)` row of an error table, flattened.
#[derive(Clone, Debug, Serialize)]
pub struct TableRecord {
    pub family: String,
    pub region: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub y: f64,
    pub exact_mantissa: f64,
    pub exact_exp2: i64,
    pub exact_sign: i8,
    pub asym_mantissa: f64,
    pub asym_exp2: i64,
    pub asym_sign: i8,
    pub rel_dev: f64,
}

/// Writes table records as CSV.
pub fn write_table_csv<W: Write>(out: W, rows: &[TableRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "family",
        "region",
        "N",
        "y",
        "exact_mantissa",
        "exact_exp2",
        "exact_sign",
        "asym_mantissa",
        "asym_exp2",
        "asym_sign",
        "rel_dev",
    ])?;
    for r in rows {
        w.write_record([
            r.family.clone(),
            r.region.clone(),
            r.n.to_string(),
            r.y.to_string(),
            fmt_mantissa(r.exact_mantissa),
            r.exact_exp2.to_string(),
            r.exact_sign.to_string(),
            fmt_mantissa(r.asym_mantissa),
            r.asym_exp2.to_string(),
            r.asym_sign.to_string(),
            format!("{:.6e}", r.rel_dev),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// One zero prediction next to the zero found by bisection.
#[derive(Clone, Debug, Serialize)]
pub struct ZeroRecord {
    pub family: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub edge: String,
    pub k: usize,
    pub predicted: f64,
    pub exact: f64,
    pub abs_err: f64,
}

/// Writes any flat serializable records as CSV using their field names.
pub fn write_serde_csv<W: Write, T: Serialize>(out: W, rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
