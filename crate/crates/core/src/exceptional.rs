//! Embedded tables of (-1)-distinguished nilpotent K-orbits for the twelve
//! non-compact exceptional symmetric pairs.
//!
//! The shipped text file is parsed once. Every row must satisfy the
//! centralizer identity `dim K.x + dim levi + dim rad_u = dim k`; a single bad
//! row refuses the whole load.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{symmetric_pair_dims, ExceptionalForm, RealFormId};

const DATA: &str = include_str!("../data/exceptional_tables.txt");
const SCHEMA_VERSION: u32 = 1;

/// A simple or toral summand of a reductive Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SimpleType {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
    /// An `m`-dimensional torus.
    T(u32),
}

impl SimpleType {
    pub fn dimension(self) -> u64 {
        use SimpleType::*;
        match self {
            A(k) => (k * k + 2 * k) as u64,
            B(k) | C(k) => (2 * k * k + k) as u64,
            D(k) => (2 * k * k - k) as u64,
            G2 => 14,
            F4 => 52,
            E6 => 78,
            E7 => 133,
            E8 => 248,
            T(m) => m as u64,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SimpleType::*;
        match self {
            A(k) => write!(f, "A_{k}"),
            B(k) => write!(f, "B_{k}"),
            C(k) => write!(f, "C_{k}"),
            D(k) => write!(f, "D_{k}"),
            G2 => f.write_str("G_2"),
            F4 => f.write_str("F_4"),
            E6 => f.write_str("E_6"),
            E7 => f.write_str("E_7"),
            E8 => f.write_str("E_8"),
            T(m) => write!(f, "T_{m}"),
        }
    }
}

/// Type of a reductive Levi factor; the zero algebra has no summands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviType {
    pub summands: Vec<(SimpleType, u32)>,
}

impl LeviType {
    pub fn dimension(&self) -> u64 {
        self.summands.iter().map(|(t, k)| t.dimension() * *k as u64).sum()
    }
}

impl fmt::Display for LeviType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|(t, k)| if *k == 1 { t.to_string() } else { format!("{k}{t}") })
            .collect();
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for LeviType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(LeviType { summands: vec![] });
        }
        let mut summands = Vec::new();
        for tok in s.split('+') {
            let digits = tok.chars().take_while(char::is_ascii_digit).count();
            let mult = if digits == 0 {
                1
            } else {
                tok[..digits].parse().map_err(|_| Error::parse(tok, "bad multiplicity"))?
            };
            let (letter, rank) = tok[digits..]
                .split_once('_')
                .ok_or_else(|| Error::parse(tok, "expected a type like A_2 or T_1"))?;
            let r: u32 = rank.parse().map_err(|_| Error::parse(tok, "bad rank"))?;
            use SimpleType::*;
            let t = match (letter, r) {
                ("A", k) if k >= 1 => A(k),
                ("B", k) if k >= 2 => B(k),
                ("C", k) if k >= 3 => C(k),
                ("D", k) if k >= 4 => D(k),
                ("G", 2) => G2,
                ("F", 4) => F4,
                ("E", 6) => E6,
                ("E", 7) => E7,
                ("E", 8) => E8,
                ("T", m) if m >= 1 => T(m),
                _ => return Err(Error::parse(tok, "unknown simple type")),
            };
            if mult == 0 {
                return Err(Error::parse(tok, "multiplicity must be positive"));
            }
            summands.push((t, mult));
        }
        Ok(LeviType { summands })
    }
}

/// One (-1)-distinguished K-orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalRow {
    pub form: ExceptionalForm,
    pub row_no: usize,
    pub dyn_k: Vec<i32>,
    pub dyn_g: Vec<i32>,
    pub dim_k_orbit: u64,
    pub intersection_count: u32,
    pub levi: LeviType,
    pub radu_dim: u64,
}

impl ExceptionalRow {
    pub fn realform(&self) -> RealFormId {
        RealFormId::Exceptional(self.form)
    }
}

/// Outcome of [`check_row`]; empty `violations` means the row is sound.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RowCheck {
    pub violations: Vec<String>,
}

impl RowCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the per-row invariants against the `k`/`p` dimensions of the form.
pub fn check_row(row: &ExceptionalRow) -> RowCheck {
    let dims = symmetric_pair_dims(row.form);
    let mut v = Vec::new();
    let lhs = row.dim_k_orbit + row.levi.dimension() + row.radu_dim;
    if lhs != dims.dim_k {
        v.push(format!(
            "{} + {} + {} = {lhs}, expected dim k = {}",
            row.dim_k_orbit,
            row.levi.dimension(),
            row.radu_dim,
            dims.dim_k
        ));
    }
    if row.dim_k_orbit == 0 || row.dim_k_orbit > dims.dim_p {
        v.push(format!("orbit dimension {} outside 1..={}", row.dim_k_orbit, dims.dim_p));
    }
    if row.intersection_count == 0 {
        v.push("intersection count must be positive".into());
    }
    if row.dyn_k.len() != row.form.k_diagram_len() {
        v.push(format!("dyn_k has {} entries, expected {}", row.dyn_k.len(), row.form.k_diagram_len()));
    }
    if row.dyn_g.len() != row.form.rank() {
        v.push(format!("dyn_g has {} entries, expected {}", row.dyn_g.len(), row.form.rank()));
    }
    RowCheck { violations: v }
}

/// The parsed dataset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalTables {
    pub version: u32,
    /// Free-text notes on the base used for `dyn_k`, per form.
    pub basis: BTreeMap<ExceptionalForm, String>,
    rows: Vec<ExceptionalRow>,
}

impl ExceptionalTables {
    pub fn rows(&self) -> &[ExceptionalRow] {
        &self.rows
    }

    pub fn rows_of(&self, form: ExceptionalForm) -> impl Iterator<Item = &ExceptionalRow> {
        self.rows.iter().filter(move |r| r.form == form)
    }
}

fn integrity(form: &str, row: usize, message: impl Into<String>) -> Error {
    Error::DataIntegrity {
        form: form.to_string(),
        row,
        message: message.into(),
    }
}

fn parse_weights(s: &str, form: &str, row: usize) -> Result<Vec<i32>> {
    s.split(',')
        .map(|t| t.parse::<i32>().map_err(|_| integrity(form, row, format!("bad weight `{t}`"))))
        .collect()
}

/// Parses and validates a dataset in the shipped text format.
pub fn parse_tables(text: &str) -> Result<ExceptionalTables> {
    let mut version = None;
    let mut basis = BTreeMap::new();
    let mut rows: Vec<ExceptionalRow> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(v) = line.strip_prefix("@version") {
            let v: u32 = v.trim().parse().map_err(|_| integrity("-", 0, "bad @version"))?;
            version = Some(v);
            continue;
        }
        if let Some(rest) = line.strip_prefix("@basis") {
            let (label, note) = rest.trim().split_once(' ').ok_or_else(|| integrity("-", 0, "bad @basis"))?;
            let f = exceptional_label(label, 0)?;
            basis.insert(f, note.trim().to_string());
            continue;
        }
        let cols: Vec<&str> = line.split_whitespace().collect();
        let row_no: usize = cols.get(1).and_then(|c| c.parse().ok()).unwrap_or(0);
        let label = cols.first().copied().unwrap_or("-");
        if cols.len() != 8 {
            return Err(integrity(label, row_no, format!("expected 8 columns, found {}", cols.len())));
        }
        let form = exceptional_label(label, row_no)?;
        let num = |i: usize| -> Result<u64> {
            cols[i]
                .parse()
                .map_err(|_| integrity(label, row_no, format!("bad integer `{}`", cols[i])))
        };
        let expected_row = rows.iter().filter(|r| r.form == form).count() + 1;
        if row_no != expected_row {
            return Err(integrity(label, row_no, format!("row numbers must be contiguous; expected {expected_row}")));
        }
        if let Some(last) = rows.last() {
            if last.form != form && rows.iter().any(|r| r.form == form) {
                return Err(integrity(label, row_no, "rows of a form must form one block"));
            }
        }
        let row = ExceptionalRow {
            form,
            row_no,
            dyn_k: parse_weights(cols[2], label, row_no)?,
            dyn_g: parse_weights(cols[3], label, row_no)?,
            dim_k_orbit: num(4)?,
            intersection_count: num(5)? as u32,
            levi: cols[6].parse().map_err(|e: Error| integrity(label, row_no, e.to_string()))?,
            radu_dim: num(7)?,
        };
        let check = check_row(&row);
        if !check.passed() {
            return Err(integrity(label, row_no, check.violations.join("; ")));
        }
        rows.push(row);
    }
    match version {
        Some(SCHEMA_VERSION) => {}
        Some(v) => return Err(integrity("-", 0, format!("unsupported schema version {v}"))),
        None => return Err(integrity("-", 0, "missing @version")),
    }
    for f in ExceptionalForm::ALL {
        if !rows.iter().any(|r| r.form == f) {
            return Err(integrity(f.label(), 0, "form has no rows"));
        }
    }
    Ok(ExceptionalTables {
        version: SCHEMA_VERSION,
        basis,
        rows,
    })
}

fn exceptional_label(s: &str, row: usize) -> Result<ExceptionalForm> {
    match s.parse::<RealFormId>() {
        Ok(RealFormId::Exceptional(e)) => Ok(e),
        _ => Err(integrity(s, row, "unknown exceptional form")),
    }
}

/// Parses the shipped dataset afresh.
pub fn load_tables() -> Result<ExceptionalTables> {
    parse_tables(DATA)
}

/// The shipped dataset, parsed on first use.
pub fn tables() -> Result<&'static ExceptionalTables> {
    static CELL: OnceLock<Result<ExceptionalTables>> = OnceLock::new();
    CELL.get_or_init(load_tables).as_ref().map_err(Clone::clone)
}

fn require_exceptional(form: &RealFormId) -> Result<ExceptionalForm> {
    match form {
        RealFormId::Exceptional(e) => Ok(*e),
        other => Err(Error::ClassicalForm(other.to_string())),
    }
}

/// Rows of one form in table order, optionally filtered.
pub fn query(
    form: &RealFormId,
    filter: Option<&dyn Fn(&ExceptionalRow) -> bool>,
) -> Result<Vec<&'static ExceptionalRow>> {
    let e = require_exceptional(form)?;
    Ok(tables()?
        .rows_of(e)
        .filter(|r| filter.is_none_or(|f| f(r)))
        .collect())
}

/// Rows whose centralizer has no unipotent radical.
pub fn affine_minus1_distinguished(form: &RealFormId) -> Result<Vec<&'static ExceptionalRow>> {
    query(form, Some(&|r: &ExceptionalRow| r.radu_dim == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(s: &str) -> RealFormId {
        s.parse().unwrap()
    }

    #[test]
    fn sample_rows() {
        let r = query(&form("E6(6)"), None).unwrap()[0];
        assert_eq!(r.dyn_k, [2, 2, 2, 2]);
        assert_eq!(r.dyn_g, [2, 0, 2, 2, 2, 2]);
        assert_eq!((r.dim_k_orbit, r.intersection_count, r.radu_dim), (35, 1, 1));
        assert!(r.levi.summands.is_empty());

        let r = query(&form("E7(-25)"), None).unwrap()[0];
        assert_eq!(r.dyn_g, [0, 0, 0, 0, 0, 0, 2]);
        assert_eq!(r.levi.to_string(), "F_4");
        assert_eq!((r.dim_k_orbit, r.intersection_count, r.radu_dim), (27, 4, 0));

        let r = query(&form("G2(2)"), None).unwrap()[2];
        assert_eq!((r.dyn_k.as_slice(), r.dyn_g.as_slice()), (&[4, 8][..], &[2, 2][..]));
        assert_eq!(r.dim_k_orbit, 6);

        let r = query(&form("E7(-25)"), None).unwrap()[10];
        assert_eq!(r.dyn_k, [4, 0, 0, 0, 0, 4, -10]);
    }

    #[test]
    fn queries() {
        assert_eq!(query(&form("F4(4)"), None).unwrap().len(), 10);
        let r = query(&form("E6(2)"), Some(&|r: &ExceptionalRow| r.radu_dim == 0)).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].row_no, 6);
        let d: Vec<u64> = query(&form("F4(-20)"), None).unwrap().iter().map(|r| r.dim_k_orbit).collect();
        assert_eq!(d, [11, 15]);
        assert_eq!(query(&form("so(3,2)"), None).unwrap_err().code(), "classical_form");
    }

    #[test]
    fn affine_rows() {
        let rows = |s| -> Vec<usize> { affine_minus1_distinguished(&form(s)).unwrap().iter().map(|r| r.row_no).collect() };
        assert_eq!(rows("E6(6)"), [4]);
        assert_eq!(rows("E7(7)"), [26, 27]);
        assert!(rows("F4(-20)").is_empty());
    }

    #[test]
    fn row_identity() {
        let t = tables().unwrap();
        let e62 = t.rows_of(ExceptionalForm::E6_2).next().unwrap();
        assert_eq!(e62.dim_k_orbit + e62.levi.dimension() + e62.radu_dim, 38);
        assert_eq!(e62.levi.dimension(), 16);
        let mut bad = e62.clone();
        bad.radu_dim = 2;
        assert!(!check_row(&bad).passed());
    }

    #[test]
    fn corrupted_data_is_refused() {
        let corrupted = DATA.replacen("E6(6)     1  2,2,2,2                2,0,2,2,2,2       35 1 0        1", "E6(6)     1  2,2,2,2                2,0,2,2,2,2       35 1 0        2", 1);
        assert_ne!(corrupted, DATA);
        match parse_tables(&corrupted).unwrap_err() {
            Error::DataIntegrity { form, row, .. } => assert_eq!((form.as_str(), row), ("E6(6)", 1)),
            e => panic!("unexpected {e}"),
        }
        let no_version = DATA.replace("@version 1", "");
        assert!(parse_tables(&no_version).is_err());
        let gap = DATA.replacen("G2(2)     2 ", "G2(2)     5 ", 1);
        assert!(parse_tables(&gap).is_err());
    }

    #[test]
    fn levi_syntax() {
        for s in ["0", "2A_2+T_1", "G_2+A_1", "E_6", "3A_1", "B_3+T_1"] {
            assert_eq!(s.parse::<LeviType>().unwrap().to_string(), s);
        }
        assert!("X_2".parse::<LeviType>().is_err());
        assert!("A2".parse::<LeviType>().is_err());
    }
}
