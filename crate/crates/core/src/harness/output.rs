use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use super::SweepReport;

pub const CSV_HEADER: [&str; 10] = [
    "n",
    "lambda",
    "alpha_or_mu",
    "lhs_num",
    "lhs_den",
    "rhs_num",
    "rhs_den",
    "implied_c_num",
    "implied_c_den",
    "satisfied",
];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected csv or json)")),
        }
    }
}

pub fn write_csv<W: Write>(report: &SweepReport, out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in &report.records {
        w.write_record([
            r.n.to_string(),
            r.lambda.clone(),
            r.alpha_or_mu.clone(),
            r.lhs.numer().to_string(),
            r.lhs.denom().to_string(),
            r.rhs.numer().to_string(),
            r.rhs.denom().to_string(),
            r.implied_constant.power.numer().to_string(),
            r.implied_constant.power.denom().to_string(),
            r.satisfied.to_string(),
        ])?;
    }
    w.flush()
}

pub fn write_json<W: Write, T: Serialize>(value: &T, mut out: W) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)
}

/// Exact rationals as `{"num": "...", "den": "..."}` decimal strings.
pub(crate) mod rational {
    use num_rational::BigRational;
    use serde::ser::SerializeStruct;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Rational", 2)?;
        st.serialize_field("num", &r.numer().to_string())?;
        st.serialize_field("den", &r.denom().to_string())?;
        st.end()
    }
}
