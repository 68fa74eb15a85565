//! Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any
//! criterion fails. All comparisons are exact; each criterion also has a
//! wall-clock budget.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use narayana::counting::printed_lgv_binomials;
use narayana::series::gf_expand;
use narayana::{
    binomial, census, from_polyomino, gen_narayana, lgv_count, narayana_classic, parse_path, phi,
    to_lattice_pair, to_polyomino, Cell, Count, DyckIter, Point, Rational, Scalar,
};
use narayana_cli::table::{render_table, TableFormat};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tokens(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect()
}

fn table_reproduction() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (i, nmax) in [(1, 5), (2, 6), (3, 7), (4, 8)] {
        let golden = std::fs::read_to_string(dir.join(format!("table_i{i}.txt")))
            .map_err(|e| e.to_string())?;
        let got = render_table(i, nmax, TableFormat::Aligned).map_err(|e| e.to_string())?;
        ensure(tokens(&got) == tokens(&golden), || {
            format!("i={i} table differs:\n{got}")
        })?;
    }
    Ok("4 tables, all cells equal".into())
}

fn theorem_census() -> Outcome {
    let mut cells = 0;
    for n in 1..=11 {
        let c = census(n).map_err(|e| e.to_string())?;
        for cell in c.cells() {
            ensure(cell.in_domain(), || {
                format!("census cell outside domain: {cell:?}")
            })?;
        }
        for cell in Cell::domain(n).filter(|c| c.n == n) {
            let want: Count = gen_narayana(cell.i, cell.n, cell.j).unwrap();
            ensure(c.get(cell) == want, || {
                format!("{cell:?}: census {} vs formula {want}", c.get(cell))
            })?;
            cells += 1;
        }
    }
    Ok(format!("{cells} cells, n <= 11"))
}

fn involution_suite() -> Outcome {
    let mut paths = 0;
    for n in 0..=10 {
        for p in DyckIter::new(n, 10).unwrap() {
            let q = phi(&p);
            ensure(phi(&q) == p, || format!("phi(phi({p})) != {p}"))?;
            if n > 0 {
                let (s, t) = (p.stats(), q.stats());
                ensure(
                    t.initial_ascent == s.returns && t.returns == s.initial_ascent,
                    || format!("returns/initial ascent not exchanged for {p}"),
                )?;
                ensure(s.peaks + t.peaks == n + 1, || {
                    format!("peak sum wrong for {p}")
                })?;
            }
            paths += 1;
        }
    }
    Ok(format!("{paths} paths"))
}

fn bijection_suite() -> Outcome {
    let mut paths = 0;
    for n in 1..=10 {
        for p in DyckIter::new(n, 10).unwrap() {
            let q = to_polyomino(&p).map_err(|e| e.to_string())?;
            ensure(from_polyomino(&q) == p, || {
                format!("round trip failed for {p}")
            })?;
            let s = p.stats();
            let image = to_polyomino(&phi(&p)).unwrap();
            let (nn, j) = (n as i64, s.peaks as i64);
            ensure(image.upper_right() == Point::new(nn + 1 - j, j), || {
                format!("upper-right vertex wrong for {p}")
            })?;
            ensure(image.initial_north_run() == s.returns, || {
                format!("initial North run wrong for {p}")
            })?;
            paths += 1;
        }
    }
    Ok(format!("{paths} paths"))
}

fn lgv_identity() -> Outcome {
    let mut cells = 0;
    for cell in Cell::domain(50) {
        let a: Count = lgv_count(cell.i, cell.n, cell.j).unwrap();
        let b: Count = gen_narayana(cell.i, cell.n, cell.j).unwrap();
        ensure(a == b, || format!("{cell:?}: lgv {a} vs formula {b}"))?;
        cells += 1;
    }
    let printed: Count = printed_lgv_binomials(4, 10, 6);
    let endpoint: Count = lgv_count(4, 10, 6).unwrap();
    ensure(
        printed == Count::from(0) && endpoint == Count::from(840),
        || format!("erratum pin: printed {printed}, endpoint {endpoint}"),
    )?;
    Ok(format!(
        "{cells} cells; printed binomials give 0, endpoints give 840 at (4,10,6)"
    ))
}

fn generating_function() -> Outcome {
    let gf = gf_expand::<Rational>(10).map_err(|e| e.to_string())?;
    let mut seen = 0;
    for (&(n, i, j), c) in gf.terms() {
        let v = c
            .as_exact_integer()
            .ok_or_else(|| format!("non-integral coefficient at {:?}", (n, i, j)))?;
        let want = if n == 0 && i == 0 && j == 0 {
            Count::from(1)
        } else if Cell::new(i, n, j).in_domain() {
            seen += 1;
            gen_narayana(i, n, j).unwrap()
        } else {
            Count::from(0)
        };
        ensure(v == want, || format!("x^{n} y^{i} z^{j}: {v} vs {want}"))?;
    }
    for cell in Cell::domain(10) {
        let want: Count = gen_narayana(cell.i, cell.n, cell.j).unwrap();
        let got = gf
            .coefficient(cell.n, cell.i, cell.j)
            .as_exact_integer()
            .unwrap();
        ensure(got == want, || {
            format!("{cell:?}: gf {got} vs formula {want}")
        })?;
    }
    Ok(format!("{} terms, {seen} nonzero in-range", gf.len()))
}

fn marginals() -> Outcome {
    for n in 1..=11 {
        for j in 1..=n {
            let sum: Count = (1..=j)
                .map(|i| gen_narayana::<Count>(i, n, j).unwrap())
                .sum();
            let want: Count = narayana_classic(n, j).unwrap();
            ensure(sum == want, || {
                format!("sum over i at n={n}, j={j}: {sum} vs {want}")
            })?;
        }
        let mut by_returns: BTreeMap<u32, u64> = BTreeMap::new();
        for p in DyckIter::new(n, 11).unwrap() {
            *by_returns.entry(p.stats().returns).or_default() += 1;
        }
        for i in 1..=n {
            let sum: Count = (i..=n)
                .map(|j| gen_narayana::<Count>(i, n, j).unwrap())
                .sum();
            let want = Count::from(by_returns.get(&i).copied().unwrap_or(0));
            ensure(sum == want, || {
                format!("sum over j at n={n}, i={i}: {sum} vs {want}")
            })?;
        }
    }
    Ok("n <= 11".into())
}

fn divisibility() -> Outcome {
    let mut cells = 0;
    for cell in Cell::domain(50) {
        let (i, n, j) = (cell.i as i64, cell.n as i64, cell.j as i64);
        let product =
            Count::from(i) * binomial::<Count>(n, j) * binomial::<Count>(n - i - 1, j - i);
        ensure(&product % Count::from(n) == Count::from(0), || {
            format!("{cell:?}: n does not divide {product}")
        })?;
        cells += 1;
    }
    Ok(format!("{cells} cells"))
}

fn figure_fidelity() -> Outcome {
    let p = parse_path("UUUDDUDDUUDUUDDDUDUD").map_err(|e| e.to_string())?;
    let s = p.stats();
    let got = (s.semilength, s.returns, s.peaks, s.initial_ascent);
    ensure(got == (10, 4, 6, 3), || format!("stats {got:?}"))?;
    let pair = to_lattice_pair(&to_polyomino(&phi(&p)).unwrap());
    let marks = [pair.a1, pair.a2, pair.b1, pair.b2];
    let want = [
        Point::new(1, 4),
        Point::new(1, 0),
        Point::new(4, 6),
        Point::new(5, 5),
    ];
    ensure(marks == want, || format!("marked points {marks:?}"))?;
    Ok("stats (10,4,6,3); A1=(1,4) A2=(1,0) B1=(4,6) B2=(5,5)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1. table reproduction", 1, table_reproduction),
        (
            "2. theorem at desk scale (census = formula, n <= 11)",
            10,
            theorem_census,
        ),
        ("3. involution suite (n <= 10)", 10, involution_suite),
        ("4. bijection suite (n <= 10)", 10, bijection_suite),
        (
            "5. LGV identity (n <= 50) + printed-binomial erratum",
            5,
            lgv_identity,
        ),
        ("6. generating function (order 10)", 30, generating_function),
        ("7. marginals (n <= 11)", 10, marginals),
        ("8. divisibility (n <= 50)", 5, divisibility),
        ("9. figure fidelity", 1, figure_fidelity),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(budget);
        match outcome {
            Ok(detail) if !over => {
                println!("PASS  {name}: {detail} [{elapsed:.2?}]");
            }
            Ok(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}, but took {elapsed:.2?} > {budget} s");
            }
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why} [{elapsed:.2?}]");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 9 criteria failed");
        ExitCode::FAILURE
    }
}
