//! Comparison of OEIS b-files against row-by-row readings of the tables.
//!
//! A reading takes rows `n = first_row, first_row + 1, ...` of the `i`-table,
//! each row holding `N_i(n, j)` for `j = i..=n`. For `n > i` the last entry
//! (`j = n`) is the structural zero printed in the tables; it can be dropped,
//! since OEIS triangles usually omit it. Rows may be reversed.

use std::path::Path;

use clap::ValueEnum;
use narayana::{gen_narayana, Count};
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum OeisTarget {
    /// i = 1 table from row 2, i.e. the Narayana triangle A001263
    #[value(name = "i1_as_A001263")]
    I1AsA001263,
    /// i = 2 table, A108838
    #[value(name = "i2_as_A108838")]
    I2AsA108838,
    /// i = 3 table with rows reversed, A281293
    #[value(name = "i3_reversed_as_A281293")]
    I3ReversedAsA281293,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Layout {
    pub i: u32,
    pub first_row: u32,
    pub drop_trailing_zeros: bool,
    pub reverse_rows: bool,
}

impl OeisTarget {
    /// The i = 1 target drops the zeros because it stands for the classical
    /// triangle; the other two follow the printed tables.
    pub fn default_layout(self) -> Layout {
        match self {
            Self::I1AsA001263 => Layout {
                i: 1,
                first_row: 2,
                drop_trailing_zeros: true,
                reverse_rows: false,
            },
            Self::I2AsA108838 => Layout {
                i: 2,
                first_row: 2,
                drop_trailing_zeros: false,
                reverse_rows: false,
            },
            Self::I3ReversedAsA281293 => Layout {
                i: 3,
                first_row: 3,
                drop_trailing_zeros: false,
                reverse_rows: true,
            },
        }
    }
}

/// First `len` terms of the reading described by `layout`.
pub fn linearize(layout: Layout, len: usize) -> Vec<Count> {
    let mut out = Vec::with_capacity(len);
    let mut n = layout.first_row.max(layout.i);
    while out.len() < len {
        let last = if layout.drop_trailing_zeros && n > layout.i {
            n - 1
        } else {
            n
        };
        let mut row: Vec<Count> = (layout.i..=last)
            .map(|j| gen_narayana(layout.i, n, j).expect("cell in domain"))
            .collect();
        if layout.reverse_rows {
            row.reverse();
        }
        out.extend(row);
        n += 1;
    }
    out.truncate(len);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFileEntry {
    pub line: usize,
    pub index: i64,
    pub value: Count,
}

/// Parses `index value` lines; blank lines and `#` comments are skipped.
pub fn parse_bfile(path: &Path, text: &str) -> Result<Vec<BFileEntry>, CliError> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let bad = |message: String| CliError::BFile {
            path: path.to_path_buf(),
            line,
            message,
        };
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [index, value] = fields[..] else {
            return Err(bad(format!("expected `index value`, got {content:?}")));
        };
        let index = index
            .parse::<i64>()
            .map_err(|_| bad(format!("bad index {index:?}")))?;
        let value = value
            .parse::<Count>()
            .map_err(|_| bad(format!("bad value {value:?}")))?;
        entries.push(BFileEntry { line, index, value });
    }
    if entries.is_empty() {
        return Err(CliError::EmptyBFile {
            path: path.to_path_buf(),
        });
    }
    Ok(entries)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub index: i64,
    pub line: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OeisReport {
    pub target: OeisTarget,
    pub layout: Layout,
    pub offset: i64,
    pub terms_compared: usize,
    pub first_divergence: Option<Divergence>,
}

impl OeisReport {
    pub fn matched(&self) -> bool {
        self.first_divergence.is_none()
    }

    pub fn exit_code(&self) -> i32 {
        if self.matched() {
            crate::exit::OK
        } else {
            crate::exit::MISMATCH
        }
    }
}

impl std::fmt::Display for OeisReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.first_divergence {
            None => write!(f, "match: {} terms agree", self.terms_compared),
            Some(d) => write!(
                f,
                "divergence at index {} (line {}): expected {}, found {}",
                d.index, d.line, d.expected, d.found
            ),
        }
    }
}

/// Compares b-file entries with the reading; `offset` is the b-file index of
/// the first term of the reading.
pub fn check_entries(
    entries: &[BFileEntry],
    target: OeisTarget,
    layout: Layout,
    offset: i64,
) -> Result<OeisReport, (usize, String)> {
    let mut positions = Vec::with_capacity(entries.len());
    for e in entries {
        let pos = e.index - offset;
        if pos < 0 {
            return Err((
                e.line,
                format!("index {} is below the offset {offset}", e.index),
            ));
        }
        positions.push(pos as usize);
    }
    let len = positions.iter().max().map_or(0, |m| m + 1);
    let expected = linearize(layout, len);
    let first_divergence = entries
        .iter()
        .zip(&positions)
        .filter(|(e, &pos)| e.value != expected[pos])
        .min_by_key(|(e, _)| e.index)
        .map(|(e, &pos)| Divergence {
            index: e.index,
            line: e.line,
            expected: expected[pos].to_string(),
            found: e.value.to_string(),
        });
    Ok(OeisReport {
        target,
        layout,
        offset,
        terms_compared: entries.len(),
        first_divergence,
    })
}

pub fn check_bfile_text(
    path: &Path,
    text: &str,
    target: OeisTarget,
    layout: Layout,
    offset: i64,
) -> Result<OeisReport, CliError> {
    let entries = parse_bfile(path, text)?;
    check_entries(&entries, target, layout, offset).map_err(|(line, message)| CliError::BFile {
        path: path.to_path_buf(),
        line,
        message,
    })
}

pub fn check_bfile(
    path: &Path,
    target: OeisTarget,
    layout: Layout,
    offset: i64,
) -> Result<OeisReport, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    check_bfile_text(path, &text, target, layout, offset)
}
