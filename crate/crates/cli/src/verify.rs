//! Cross-checks independent producers of `N_i(n, j)` cell by cell.

use std::collections::{BTreeMap, BTreeSet};

use clap::ValueEnum;
use narayana::counting::{closed_form_table, lgv_table};
use narayana::dyck::census_bounded;
use narayana::series::gf_table_bounded;
use narayana::{Cell, Count, CountTable, DEFAULT_ENUMERATION_BOUND, DEFAULT_GF_BOUND};
use serde::Serialize;

/// Something that can tabulate every cell with `n <= nmax`.
pub trait Oracle {
    fn name(&self) -> String;
    fn table(&self, nmax: u32) -> Result<CountTable<Count>, String>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum OracleKind {
    /// brute-force Dyck path enumeration
    Census,
    /// closed-form formula
    Closed,
    /// Lindström–Gessel–Viennot determinant
    Lgv,
    /// generating-function expansion
    Gf,
}

impl OracleKind {
    pub const ALL: [OracleKind; 4] = [Self::Census, Self::Closed, Self::Lgv, Self::Gf];
}

#[derive(Clone, Copy, Debug)]
pub struct BuiltinOracle {
    pub kind: OracleKind,
    pub enumeration_bound: u32,
    pub gf_bound: u32,
}

impl BuiltinOracle {
    pub fn new(kind: OracleKind) -> Self {
        Self {
            kind,
            enumeration_bound: DEFAULT_ENUMERATION_BOUND,
            gf_bound: DEFAULT_GF_BOUND,
        }
    }
}

impl Oracle for BuiltinOracle {
    fn name(&self) -> String {
        self.kind
            .to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }

    fn table(&self, nmax: u32) -> Result<CountTable<Count>, String> {
        match self.kind {
            OracleKind::Census => {
                let mut table = CountTable::new();
                for n in 1..=nmax {
                    table.merge(
                        census_bounded(n, self.enumeration_bound).map_err(|e| e.to_string())?,
                    );
                }
                Ok(table)
            }
            OracleKind::Closed => Ok(closed_form_table(nmax)),
            OracleKind::Lgv => Ok(lgv_table(nmax)),
            OracleKind::Gf => gf_table_bounded(nmax, self.gf_bound).map_err(|e| e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellReport {
    pub i: u32,
    pub n: u32,
    pub j: u32,
    /// Oracle name to decimal value.
    pub values: BTreeMap<String, String>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleFailure {
    pub oracle: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub nmax: u32,
    pub oracles: Vec<String>,
    pub unavailable: Vec<OracleFailure>,
    pub cells_checked: usize,
    pub mismatches: usize,
    pub cells: Vec<CellReport>,
}

impl VerifyReport {
    pub fn exit_code(&self) -> i32 {
        if self.mismatches > 0 {
            crate::exit::MISMATCH
        } else if !self.unavailable.is_empty() {
            crate::exit::USAGE
        } else {
            crate::exit::OK
        }
    }

    pub fn mismatched_cells(&self) -> impl Iterator<Item = &CellReport> {
        self.cells.iter().filter(|c| !c.agree)
    }
}

/// Every domain cell with `n <= nmax` is checked, plus any cell an oracle
/// reports outside the domain (those must be zero to agree).
pub fn verify(nmax: u32, oracles: &[&dyn Oracle]) -> VerifyReport {
    let mut tables = Vec::new();
    let mut unavailable = Vec::new();
    for oracle in oracles {
        match oracle.table(nmax) {
            Ok(t) => tables.push((oracle.name(), t)),
            Err(reason) => unavailable.push(OracleFailure {
                oracle: oracle.name(),
                reason,
            }),
        }
    }

    let mut cells: BTreeSet<Cell> = Cell::domain(nmax).collect();
    for (_, t) in &tables {
        cells.extend(t.cells());
    }

    let reports: Vec<CellReport> = cells
        .into_iter()
        .map(|cell| {
            let values: Vec<(String, Count)> = tables
                .iter()
                .map(|(name, t)| (name.clone(), t.get(cell)))
                .collect();
            let all_equal = values.windows(2).all(|w| w[0].1 == w[1].1);
            let zero_outside = cell.in_domain() || values.iter().all(|(_, v)| *v == Count::from(0));
            CellReport {
                i: cell.i,
                n: cell.n,
                j: cell.j,
                values: values
                    .into_iter()
                    .map(|(k, v)| (k, v.to_string()))
                    .collect(),
                agree: all_equal && zero_outside,
            }
        })
        .collect();

    VerifyReport {
        nmax,
        oracles: tables.into_iter().map(|(name, _)| name).collect(),
        unavailable,
        cells_checked: reports.len(),
        mismatches: reports.iter().filter(|c| !c.agree).count(),
        cells: reports,
    }
}

/// Runs the built-in oracles of the given kinds.
pub fn verify_builtin(
    nmax: u32,
    kinds: &[OracleKind],
    enumeration_bound: u32,
    gf_bound: u32,
) -> VerifyReport {
    let kinds: BTreeSet<OracleKind> = kinds.iter().copied().collect();
    let oracles: Vec<BuiltinOracle> = kinds
        .into_iter()
        .map(|kind| BuiltinOracle {
            kind,
            enumeration_bound,
            gf_bound,
        })
        .collect();
    let refs: Vec<&dyn Oracle> = oracles.iter().map(|o| o as &dyn Oracle).collect();
    verify(nmax, &refs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cell() {
        let r = verify_builtin(1, &OracleKind::ALL, 14, 12);
        assert_eq!(r.cells_checked, 1);
        assert_eq!(r.mismatches, 0);
        let cell = &r.cells[0];
        assert_eq!((cell.i, cell.n, cell.j), (1, 1, 1));
        assert!(cell.values.values().all(|v| v == "1"));
        assert_eq!(cell.values.len(), 4);
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn bound_violations_are_per_oracle() {
        let r = verify_builtin(13, &OracleKind::ALL, 14, 12);
        assert_eq!(r.unavailable.len(), 1);
        assert_eq!(r.unavailable[0].oracle, "gf");
        assert_eq!(r.oracles, ["census", "closed", "lgv"]);
        assert_eq!(r.mismatches, 0);
        assert_eq!(r.exit_code(), crate::exit::USAGE);
    }

    #[test]
    fn report_serializes() {
        let r = verify_builtin(2, &[OracleKind::Closed], 14, 12);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["cells_checked"], 4);
        assert_eq!(json["cells"][0]["values"]["closed"], "1");
    }
}
