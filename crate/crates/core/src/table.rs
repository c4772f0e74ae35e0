//! Named tables of exact integers, with CSV and JSON encodings.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::bounds::{crossover_intervals, factorial_branch, g_function, XI5_RANGE, XI6_RANGE};
use crate::tschirnhaus::xi;
use crate::{BigNat, Error, Result, SemanticsMode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub key: String,
    pub values: Vec<BigNat>,
}

/// A named table. `column_labels[0]` labels the row keys; the rest label the
/// values of each row. Cells are always exact; see [`format_approximate`] for
/// the rounded presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundTable {
    pub name: String,
    pub column_labels: Vec<String>,
    pub rows: Vec<TableRow>,
}

/// The tables the command line can emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// `Xi(m, 5)` against `(m-1)!/5! + 1` for `m` in `[13, 17]`.
    XiDegreeFive,
    /// `Xi(m, 6)` against `(m-1)!/6! + 1` for `m` in `[22, 25]`.
    XiDegreeSix,
    /// `G(m)` for `m` in `[1, 14]`.
    BoundingFunction,
    /// `(m_d, M_d)` for `d` in `[5, 8]`.
    Crossover,
}

impl TableKind {
    pub const ALL: [TableKind; 4] = [
        TableKind::XiDegreeFive,
        TableKind::XiDegreeSix,
        TableKind::BoundingFunction,
        TableKind::Crossover,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableKind::XiDegreeFive => "thm4.6-xi5",
            TableKind::XiDegreeSix => "thm4.6-xi6",
            TableKind::BoundingFunction => "def4.2-G",
            TableKind::Crossover => "sec4.3-crossover",
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown table {s:?}")))
    }
}

fn xi_table(kind: TableKind, degree: u64, ms: impl Iterator<Item = u64>, mode: SemanticsMode) -> Result<BoundTable> {
    let rows = ms
        .map(|m| {
            Ok(TableRow {
                key: m.to_string(),
                values: vec![xi(m, degree, mode)?.xi, factorial_branch(m, degree)?],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundTable {
        name: kind.name().into(),
        column_labels: vec!["m".into(), "xi".into(), "factorial".into()],
        rows,
    })
}

pub fn build_table(kind: TableKind, mode: SemanticsMode) -> Result<BoundTable> {
    match kind {
        TableKind::XiDegreeFive => xi_table(kind, 5, XI5_RANGE, mode),
        TableKind::XiDegreeSix => xi_table(kind, 6, XI6_RANGE, mode),
        TableKind::BoundingFunction => {
            let rows = (1..=14)
                .map(|m| Ok(TableRow { key: m.to_string(), values: vec![g_function(m)?] }))
                .collect::<Result<Vec<_>>>()?;
            Ok(BoundTable {
                name: kind.name().into(),
                column_labels: vec!["m".into(), "G".into()],
                rows,
            })
        }
        TableKind::Crossover => {
            let mut table = crossover_intervals(5..=8, mode)?;
            table.name = kind.name().into();
            Ok(table)
        }
    }
}

fn parse_cell(text: &str) -> Result<BigNat> {
    text.trim()
        .parse()
        .map_err(|_| Error::MalformedType(format!("table cell {text:?} is not a nonnegative integer")))
}

impl BoundTable {
    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Internal(format!("csv: {e}"));
        writer.write_record(&self.column_labels).map_err(io)?;
        for row in &self.rows {
            let mut record = vec![row.key.clone()];
            record.extend(row.values.iter().map(|v| v.to_string()));
            writer.write_record(&record).map_err(io)?;
        }
        let bytes = writer.into_inner().map_err(|e| Error::Internal(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(format!("csv: {e}")))
    }

    /// Parses the output of [`BoundTable::to_csv`]. CSV carries no name, so it
    /// is supplied by the caller.
    pub fn from_csv(name: &str, text: &str) -> Result<Self> {
        let malformed = |e: csv::Error| Error::MalformedType(format!("csv: {e}"));
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let column_labels = reader.headers().map_err(malformed)?.iter().map(String::from).collect();
        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record.map_err(malformed)?;
            let mut fields = record.iter();
            let key = fields.next().unwrap_or_default().to_string();
            let values = fields.map(parse_cell).collect::<Result<Vec<_>>>()?;
            rows.push(TableRow { key, values });
        }
        Ok(BoundTable { name: name.into(), column_labels, rows })
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "name": self.name,
            "column_labels": self.column_labels,
            "rows": self.rows.iter().map(|r| json!({
                "key": r.key,
                "values": r.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json_value(value: &Value) -> Result<Self> {
        let malformed = |what: &str| Error::MalformedType(format!("table json: {what}"));
        let str_field = |v: &Value, key: &str| {
            v.get(key).and_then(Value::as_str).map(String::from).ok_or_else(|| malformed(key))
        };
        let column_labels = value
            .get("column_labels")
            .and_then(Value::as_array)
            .ok_or_else(|| malformed("column_labels"))?
            .iter()
            .map(|l| l.as_str().map(String::from).ok_or_else(|| malformed("column label")))
            .collect::<Result<Vec<_>>>()?;
        let rows = value
            .get("rows")
            .and_then(Value::as_array)
            .ok_or_else(|| malformed("rows"))?
            .iter()
            .map(|row| {
                let values = row
                    .get("values")
                    .and_then(Value::as_array)
                    .ok_or_else(|| malformed("values"))?
                    .iter()
                    .map(|c| c.as_str().ok_or_else(|| malformed("cell")).and_then(parse_cell))
                    .collect::<Result<Vec<_>>>()?;
                Ok(TableRow { key: str_field(row, "key")?, values })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BoundTable { name: str_field(value, "name")?, column_labels, rows })
    }

    pub fn column(&self, label: &str) -> Option<Vec<&BigNat>> {
        let index = self.column_labels.iter().position(|l| l == label)?.checked_sub(1)?;
        self.rows.iter().map(|r| r.values.get(index)).collect()
    }
}

/// The JSON envelope used for every command line result.
pub fn envelope(op: &str, inputs: Value, mode: Option<SemanticsMode>, result: Value) -> Value {
    json!({
        "op": op,
        "inputs": inputs,
        "mode": mode.map(|m| m.name()),
        "result": result,
    })
}

/// `n` rounded half-up to `digits` significant digits, as `"3.819e17"`.
pub fn format_scientific(n: &BigNat, digits: usize) -> String {
    let digits = digits.max(1);
    if n.is_zero() {
        return "0".into();
    }
    let text = n.to_string();
    let mut exponent = text.len() - 1;
    let mantissa = if text.len() <= digits {
        text.clone()
    } else {
        let scale = BigNat::from(10u32).pow((text.len() - digits) as u32);
        let (q, r) = n.div_rem(&scale);
        let q = if r * 2u32 >= scale { q + 1u32 } else { q };
        let q = q.to_string();
        if q.len() > digits {
            exponent += 1;
        }
        q[..digits].to_string()
    };
    let (head, tail) = mantissa.split_at(1);
    if tail.is_empty() {
        format!("{head}e{exponent}")
    } else {
        format!("{head}.{tail}e{exponent}")
    }
}

/// Same rounding as [`format_scientific`], written as `"~3.819 × 10^17"`.
pub fn format_approximate(n: &BigNat, digits: usize) -> String {
    let s = format_scientific(n, digits);
    match s.split_once('e') {
        Some((mantissa, exponent)) => format!("~{mantissa} × 10^{exponent}"),
        None => s,
    }
}
