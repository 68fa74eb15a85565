//! Triangular tables of `N_i(n, j)` for fixed `i`.

use std::fmt::Write;

use clap::ValueEnum;
use narayana::{gen_narayana, Count};

use crate::CliError;

pub const MAX_TABLE_ROWS: u32 = 50;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    #[default]
    Aligned,
    Tsv,
}

/// Rows `n = i..=nmax`, each holding `N_i(n, j)` for `j = i..=n`.
pub fn table_rows(i: u32, nmax: u32) -> Result<Vec<(u32, Vec<Count>)>, CliError> {
    if i < 1 || i > nmax || nmax > MAX_TABLE_ROWS {
        return Err(CliError::Domain(format!(
            "table needs 1 <= i <= nmax <= {MAX_TABLE_ROWS}, got i={i}, nmax={nmax}"
        )));
    }
    Ok((i..=nmax)
        .map(|n| {
            let row = (i..=n)
                .map(|j| gen_narayana(i, n, j).expect("cell in domain"))
                .collect();
            (n, row)
        })
        .collect())
}

pub fn render_table(i: u32, nmax: u32, format: TableFormat) -> Result<String, CliError> {
    let rows = table_rows(i, nmax)?;
    let mut out = String::new();
    match format {
        TableFormat::Tsv => {
            out.push_str("n\\j");
            for j in i..=nmax {
                write!(out, "\t{j}").unwrap();
            }
            out.push('\n');
            for (n, row) in &rows {
                write!(out, "{n}").unwrap();
                for v in row {
                    write!(out, "\t{v}").unwrap();
                }
                out.push('\n');
            }
        }
        TableFormat::Aligned => {
            let width = rows
                .iter()
                .flat_map(|(_, r)| r.iter().map(|v| v.to_string().len()))
                .chain(std::iter::once(nmax.to_string().len()))
                .max()
                .unwrap_or(1);
            let label = "n\\j".len().max(nmax.to_string().len());
            let mut line = format!("{:<label$}", "n\\j");
            for j in i..=nmax {
                write!(line, " {j:>width$}").unwrap();
            }
            out.push_str(line.trim_end());
            out.push('\n');
            for (n, row) in &rows {
                let mut line = format!("{n:<label$}");
                for v in row {
                    write!(line, " {:>width$}", v.to_string()).unwrap();
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row_tokens(text: &str, n: u32) -> Vec<String> {
        text.lines()
            .map(|l| l.split_whitespace().map(str::to_string).collect::<Vec<_>>())
            .find(|t| t.first().map(String::as_str) == Some(&n.to_string()))
            .map(|t| t[1..].to_vec())
            .unwrap()
    }

    #[test]
    fn table_rows_match_printed_values() {
        let t = render_table(2, 6, TableFormat::Aligned).unwrap();
        assert_eq!(row_tokens(&t, 6).join(" "), "5 20 15 2 0");
        let t = render_table(1, 5, TableFormat::Aligned).unwrap();
        assert_eq!(row_tokens(&t, 5).join(" "), "1 6 6 1 0");
        let t = render_table(4, 4, TableFormat::Tsv).unwrap();
        assert_eq!(t, "n\\j\t4\n4\t1\n");
    }

    #[test]
    fn tsv_layout() {
        let t = render_table(2, 4, TableFormat::Tsv).unwrap();
        assert_eq!(t, "n\\j\t2\t3\t4\n2\t1\n3\t2\t0\n4\t3\t2\t0\n");
    }

    #[test]
    fn aligned_layout() {
        let t = render_table(3, 7, TableFormat::Aligned).unwrap();
        let expect = "\
n\\j  3  4  5  6  7
3    1
4    3  0
5    6  3  0
6   10 15  3  0
7   15 45 27  3  0
";
        assert_eq!(t, expect);
    }

    #[test]
    fn domain_errors() {
        assert!(render_table(0, 5, TableFormat::Tsv).is_err());
        assert!(render_table(6, 5, TableFormat::Tsv).is_err());
        assert!(render_table(1, 51, TableFormat::Tsv).is_err());
        assert!(render_table(1, 50, TableFormat::Tsv).is_ok());
    }
}
