//! Line-oriented reports: `key<TAB>value` records separated by blank lines,
//! or the same records laid out as aligned tables.

use std::fmt::Write as _;

/// One group of `key, value` lines. Keys may repeat.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Record {
    pub fields: Vec<(String, String)>,
}

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn field(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.push(key, value);
        self
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.fields.push((key.into(), value.to_string()));
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Records,
    Table,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "records" => Ok(Format::Records),
            "table" => Ok(Format::Table),
            _ => Err(format!("unknown format `{s}`")),
        }
    }
}

pub fn render(records: &[Record], format: Format) -> String {
    match format {
        Format::Records => render_records(records),
        Format::Table => render_table(records),
    }
}

fn render_records(records: &[Record]) -> String {
    let mut out = String::new();
    for (k, r) in records.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        for (key, value) in &r.fields {
            let _ = writeln!(out, "{key}\t{value}");
        }
    }
    out
}

/// Consecutive records with the same key sequence share one table with a
/// header row.
fn render_table(records: &[Record]) -> String {
    let mut out = String::new();
    let mut start = 0;
    while start < records.len() {
        let keys: Vec<&str> = records[start].fields.iter().map(|f| f.0.as_str()).collect();
        let mut end = start + 1;
        while end < records.len() && records[end].fields.iter().map(|f| f.0.as_str()).eq(keys.iter().copied()) {
            end += 1;
        }
        if start > 0 {
            out.push('\n');
        }
        let rows: Vec<Vec<&str>> = records[start..end]
            .iter()
            .map(|r| r.fields.iter().map(|f| f.1.as_str()).collect())
            .collect();
        let widths: Vec<usize> = (0..keys.len())
            .map(|c| rows.iter().map(|r| r[c].chars().count()).chain([keys[c].chars().count()]).max().unwrap_or(0))
            .collect();
        for row in std::iter::once(&keys).chain(rows.iter()) {
            let mut line = String::new();
            for (c, cell) in row.iter().enumerate() {
                line.push_str(cell);
                line.push_str(&" ".repeat(widths[c] - cell.chars().count() + 2));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        start = end;
    }
    out
}
