use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use narayana::dyck::census_bounded;
use narayana::series::gf_expand_bounded;
use narayana::{
    parse_path, phi, to_lattice_pair, to_polyomino, Rational, DEFAULT_ENUMERATION_BOUND,
    DEFAULT_GF_BOUND,
};
use narayana_cli::oeis::{check_bfile, OeisTarget};
use narayana_cli::table::{render_table, TableFormat};
use narayana_cli::verify::{verify_builtin, OracleKind};
use narayana_cli::{exit, figure, CliError};

/// Generalized Narayana numbers: tables, cross-checks, bijections, figures.
#[derive(Parser, Debug)]
#[command(name = "narayana", version)]
struct Cli {
    /// Write output here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the triangle N_i(n, j) for n = i..=nmax.
    Table {
        #[arg(short)]
        i: u32,
        #[arg(long)]
        nmax: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Aligned)]
        format: TableFormat,
    },
    /// Cross-check independent oracles on every cell with n <= nmax; emits a JSON report.
    Verify {
        #[arg(long)]
        nmax: u32,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = OracleKind::ALL)]
        oracles: Vec<OracleKind>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND)]
        enumeration_bound: u32,
        #[arg(long, default_value_t = DEFAULT_GF_BOUND)]
        gf_bound: u32,
    },
    /// Compare a local OEIS b-file with a row-by-row reading of a table.
    OeisCheck {
        bfile: PathBuf,
        #[arg(long, value_enum)]
        target: OeisTarget,
        /// b-file index of the first term.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        offset: i64,
        #[arg(long, conflicts_with = "keep_trailing_zeros")]
        drop_trailing_zeros: bool,
        #[arg(long)]
        keep_trailing_zeros: bool,
        /// First row n of the reading (defaults per target).
        #[arg(long)]
        first_row: Option<u32>,
        #[arg(long, conflicts_with = "no_reverse")]
        reverse: bool,
        #[arg(long)]
        no_reverse: bool,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Write an SVG of a path, its involution image and the image's polyomino.
    Figure { path: String },
    /// Apply the involution to a path.
    Phi { path: String },
    /// Semilength, returns, peaks and initial ascent of a path.
    Stats { path: String },
    /// Boundary words and lattice-path pair of a path's polyomino.
    Polyomino { path: String },
    /// Brute-force census of semilength-n paths by (returns, peaks).
    Census {
        n: u32,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND)]
        enumeration_bound: u32,
    },
    /// Expand the generating function; one `n i j num/den` line per term.
    Gf {
        #[arg(long)]
        order: u32,
        #[arg(long, default_value_t = DEFAULT_GF_BOUND)]
        gf_bound: u32,
    },
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let out = cli.output.as_deref();
    match cli.command {
        Command::Table { i, nmax, format } => emit(out, &render_table(i, nmax, format)?)?,
        Command::Verify {
            nmax,
            oracles,
            enumeration_bound,
            gf_bound,
        } => {
            let report = verify_builtin(nmax, &oracles, enumeration_bound, gf_bound);
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            emit(out, &(json + "\n"))?;
            for failure in &report.unavailable {
                eprintln!("oracle {} unavailable: {}", failure.oracle, failure.reason);
            }
            for cell in report.mismatched_cells() {
                eprintln!(
                    "mismatch at (i={}, n={}, j={}): {:?}",
                    cell.i, cell.n, cell.j, cell.values
                );
            }
            return Ok(report.exit_code());
        }
        Command::OeisCheck {
            bfile,
            target,
            offset,
            drop_trailing_zeros,
            keep_trailing_zeros,
            first_row,
            reverse,
            no_reverse,
            json,
        } => {
            let mut layout = target.default_layout();
            if drop_trailing_zeros || keep_trailing_zeros {
                layout.drop_trailing_zeros = drop_trailing_zeros;
            }
            if reverse || no_reverse {
                layout.reverse_rows = reverse;
            }
            if let Some(row) = first_row {
                layout.first_row = row;
            }
            let report = check_bfile(&bfile, target, layout, offset)?;
            let text = if json {
                serde_json::to_string_pretty(&report).expect("report serializes")
            } else {
                report.to_string()
            };
            emit(out, &(text + "\n"))?;
            return Ok(report.exit_code());
        }
        Command::Figure { path } => {
            let svg = figure::render_figure(&parse_path(&path)?)?;
            emit(out, &svg)?;
        }
        Command::Phi { path } => emit(out, &format!("{}\n", phi(&parse_path(&path)?)))?,
        Command::Stats { path } => {
            let s = parse_path(&path)?.stats();
            emit(
                out,
                &format!(
                    "semilength {}\nreturns {}\npeaks {}\ninitial_ascent {}\n",
                    s.semilength, s.returns, s.peaks, s.initial_ascent
                ),
            )?;
        }
        Command::Polyomino { path } => {
            let q = to_polyomino(&parse_path(&path)?)?;
            let pair = to_lattice_pair(&q);
            let mut text = format!("upper {}\nlower {}\n", q.upper(), q.lower());
            if pair.degenerate {
                text += "degenerate (j = n): no upper lattice path\n";
            } else {
                text += &format!(
                    "upper_path {} {} -> {}\nlower_path {} {} -> {}\n",
                    pair.upper_path, pair.a1, pair.b1, pair.lower_path, pair.a2, pair.b2
                );
            }
            emit(out, &text)?;
        }
        Command::Census {
            n,
            enumeration_bound,
        } => {
            let table = census_bounded(n, enumeration_bound)?;
            let text: String = table
                .iter()
                .map(|(c, v)| format!("{} {} {} {v}\n", c.i, c.n, c.j))
                .collect();
            emit(out, &text)?;
        }
        Command::Gf { order, gf_bound } => {
            emit(
                out,
                &gf_expand_bounded::<Rational>(order, gf_bound)?.to_lines(),
            )?;
        }
    }
    Ok(exit::OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit::USAGE as u8)
        }
    }
}
