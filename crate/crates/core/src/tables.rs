//! Rendering of Kostka matrices (json, csv, latex, text) and the embedded
//! reference tables used as golden data.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::double_symfunc::PolyMatrix;
use crate::error::{Error, Result};
use crate::partition::DoublePartition;
use crate::poly::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "latex" => Ok(Format::Latex),
            "text" => Ok(Format::Text),
            _ => Err(Error::Parse(format!("unknown format `{s}`"))),
        }
    }
}

/// A labelled square table of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableDocument {
    pub n: usize,
    pub order: Vec<DoublePartition>,
    pub entries: Vec<Vec<IntPoly>>,
}

#[derive(Serialize, Deserialize)]
struct JsonTable {
    n: usize,
    order: Vec<String>,
    entries: BTreeMap<String, String>,
}

impl TableDocument {
    pub fn from_matrix(m: &PolyMatrix) -> Self {
        TableDocument { n: m.n, order: m.order.clone(), entries: m.entries.clone() }
    }

    pub fn entry(&self, row: &DoublePartition, col: &DoublePartition) -> Option<&IntPoly> {
        let i = self.order.iter().position(|d| d == row)?;
        let j = self.order.iter().position(|d| d == col)?;
        Some(&self.entries[i][j])
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Latex => self.to_latex(),
            Format::Text => self.to_text(),
        }
    }

    fn cell(&self, i: usize, j: usize) -> String {
        let e = &self.entries[i][j];
        if e.is_zero() {
            String::new()
        } else {
            e.to_string()
        }
    }

    pub fn to_json(&self) -> String {
        let mut entries = BTreeMap::new();
        for (i, r) in self.order.iter().enumerate() {
            for (j, c) in self.order.iter().enumerate() {
                if !self.entries[i][j].is_zero() {
                    entries.insert(format!("{r}|{c}"), self.entries[i][j].to_string());
                }
            }
        }
        let doc = JsonTable { n: self.n, order: self.order.iter().map(|d| d.to_string()).collect(), entries };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: JsonTable = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let order: Vec<DoublePartition> = doc.order.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        let m = order.len();
        let mut entries = vec![vec![IntPoly::zero(); m]; m];
        for (key, val) in &doc.entries {
            let (r, c) = key.split_once('|').ok_or_else(|| Error::Parse(format!("bad key `{key}`")))?;
            let (r, c): (DoublePartition, DoublePartition) = (r.parse()?, c.parse()?);
            let i = order.iter().position(|d| *d == r).ok_or_else(|| Error::Parse(format!("unknown row `{r}`")))?;
            let j = order.iter().position(|d| *d == c).ok_or_else(|| Error::Parse(format!("unknown column `{c}`")))?;
            entries[i][j] = val.parse()?;
        }
        Ok(TableDocument { n: doc.n, order, entries })
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        let header: Vec<String> =
            std::iter::once(String::new()).chain(self.order.iter().map(|d| d.to_string())).collect();
        s.push_str(&header.join(","));
        s.push('\n');
        for (i, r) in self.order.iter().enumerate() {
            let mut row = vec![r.to_string()];
            row.extend((0..self.order.len()).map(|j| self.cell(i, j)));
            s.push_str(&row.join(","));
            s.push('\n');
        }
        s
    }

    pub fn to_latex(&self) -> String {
        let tex_label = |d: &DoublePartition| format!("${d}$");
        let tex_poly = |p: &str| if p.is_empty() { String::new() } else { format!("${p}$") };
        let m = self.order.len();
        let mut s = String::new();
        let _ = writeln!(s, "\\begin{{tabular}}{{|c|{}|}}", "c".repeat(m));
        s.push_str("\\hline\n");
        let head: Vec<String> = self.order.iter().map(tex_label).collect();
        let _ = writeln!(s, "  & {} \\\\", head.join(" & "));
        s.push_str("\\hline\n");
        for (i, r) in self.order.iter().enumerate() {
            let cells: Vec<String> = (0..m).map(|j| tex_poly(&self.cell(i, j))).collect();
            let _ = writeln!(s, "{} & {} \\\\", tex_label(r), cells.join(" & "));
        }
        s.push_str("\\hline\n\\end{tabular}\n");
        s
    }

    pub fn to_text(&self) -> String {
        let m = self.order.len();
        let labels: Vec<String> = self.order.iter().map(|d| d.to_string()).collect();
        let cells: Vec<Vec<String>> = (0..m).map(|i| (0..m).map(|j| self.cell(i, j)).collect()).collect();
        let lw = labels.iter().map(String::len).max().unwrap_or(0);
        let widths: Vec<usize> =
            (0..m).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0).max(labels[j].len())).collect();
        let mut s = String::new();
        let _ = write!(s, "{:lw$}", "");
        for j in 0..m {
            let _ = write!(s, " | {:w$}", labels[j], w = widths[j]);
        }
        s.push('\n');
        for i in 0..m {
            let _ = write!(s, "{:lw$}", labels[i]);
            for j in 0..m {
                let _ = write!(s, " | {:w$}", cells[i][j], w = widths[j]);
            }
            s.push('\n');
        }
        s
    }
}

/// Reference tables, transcribed once by hand (sizes 2 to 5).
pub fn golden_table(n: usize) -> Option<TableDocument> {
    let raw = match n {
        2 => include_str!("../data/table_n2.json"),
        3 => include_str!("../data/table_n3.json"),
        4 => include_str!("../data/table_n4.json"),
        5 => include_str!("../data/table_n5.json"),
        _ => return None,
    };
    Some(TableDocument::from_json(raw).expect("embedded table parses"))
}

/// Labelled entries where a computed matrix disagrees with a golden table.
pub fn compare_with_golden(computed: &PolyMatrix, golden: &TableDocument) -> Vec<String> {
    let mut bad = Vec::new();
    if computed.order.len() != golden.order.len() {
        bad.push(format!("size mismatch: {} vs {}", computed.order.len(), golden.order.len()));
    }
    for r in &golden.order {
        for c in &golden.order {
            let want = golden.entry(r, c).cloned().unwrap_or_default();
            let got = computed.entry(r, c);
            if got != want {
                bad.push(format!("K[{r},{c}] = {got}, table has {want}"));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_tables_load() {
        let sizes: Vec<usize> = (2..=5).map(|n| golden_table(n).unwrap().order.len()).collect();
        assert_eq!(sizes, vec![5, 10, 20, 36]);
        assert!(golden_table(6).is_none());
        let t = golden_table(2).unwrap();
        assert_eq!(t.entry(&"1.1".parse().unwrap(), &".1^2".parse().unwrap()).unwrap().to_string(), "t^3 + t");
    }

    #[test]
    fn json_round_trip() {
        let t = golden_table(3).unwrap();
        assert_eq!(TableDocument::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn csv_blanks_for_zero() {
        let t = golden_table(2).unwrap();
        let csv = t.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], ",2.,1.1,.2,1^2.,.1^2");
        assert_eq!(lines.len(), 6);
        assert!(lines.iter().skip(1).all(|l| l.split(',').count() == 6));
        assert!(t.to_latex().contains("\\begin{tabular}"));
        assert!(t.to_text().lines().count() == 6);
    }
}
