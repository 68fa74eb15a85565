//! Cross-module properties checked exhaustively at small semilength.

use std::collections::{BTreeMap, HashSet};

use narayana::counting::{closed_form_table, lgv_table, printed_lgv_binomials};
use narayana::dyck::census_bounded;
use narayana::series::gf_table;
use narayana::{
    catalan, census, enumerate_dyck, gen_narayana, lgv_count, narayana_classic, phi,
    to_lattice_pair, to_polyomino, Cell, Count, CountInt, DyckIter, Point, Step,
};

fn big(v: u64) -> Count {
    Count::from(v)
}

#[test]
fn enumeration_counts_catalan_and_revalidates() {
    for n in 0..=12 {
        let mut seen = 0u64;
        for path in DyckIter::new(n, 12).unwrap() {
            let mut h = 0i32;
            for s in path.steps() {
                h += if *s == Step::Up { 1 } else { -1 };
                assert!(h >= 0);
            }
            assert_eq!(h, 0);
            assert_eq!(path.semilength(), n);
            seen += 1;
        }
        assert_eq!(big(seen), catalan::<Count>(n));
    }
}

#[test]
fn census_total_and_zero_pattern() {
    for n in 1..=12 {
        let c = census(n).unwrap();
        assert_eq!(c.total(), catalan::<Count>(n));
        assert!(c.cells().all(|cell| cell.in_domain()), "n={n}");
    }
}

#[test]
fn census_equals_closed_form() {
    for n in 1..=11 {
        let c = census(n).unwrap();
        for cell in Cell::domain(n).filter(|c| c.n == n) {
            assert_eq!(
                c.get(cell),
                gen_narayana::<Count>(cell.i, cell.n, cell.j).unwrap(),
                "{cell:?}"
            );
        }
    }
}

#[test]
fn involution_properties() {
    for n in 0..=10 {
        for p in DyckIter::new(n, 10).unwrap() {
            let q = phi(&p);
            assert_eq!(phi(&q), p);
            assert_eq!(q.semilength(), n);
            if n > 0 {
                let (s, t) = (p.stats(), q.stats());
                assert_eq!(t.initial_ascent, s.returns);
                assert_eq!(t.returns, s.initial_ascent);
                assert_eq!(s.peaks + t.peaks, n + 1);
            }
        }
    }
}

#[test]
fn involution_is_a_cellwise_bijection() {
    for n in 1..=10 {
        let mut source: BTreeMap<(u32, u32), HashSet<String>> = BTreeMap::new();
        let mut target: BTreeMap<(u32, u32), HashSet<String>> = BTreeMap::new();
        for p in enumerate_dyck(n).unwrap() {
            let s = p.stats();
            source
                .entry((s.returns, s.peaks))
                .or_default()
                .insert(phi(&p).to_string());
            // B_i(n,j): initial ascent i and n+1-j peaks
            target
                .entry((s.initial_ascent, n + 1 - s.peaks))
                .or_default()
                .insert(p.to_string());
        }
        assert_eq!(source, target, "n={n}");
    }
}

#[test]
fn polyomino_characterization_through_phi() {
    for n in 1..=10 {
        for p in DyckIter::new(n, 10).unwrap() {
            let s = p.stats();
            let q = to_polyomino(&phi(&p)).unwrap();
            let (n, i, j) = (n as i64, s.returns, s.peaks as i64);
            assert_eq!(q.upper_right(), Point::new(n + 1 - j, j));
            assert_eq!(q.initial_north_run(), i);
        }
    }
}

#[test]
fn lattice_pairs_are_injective_and_nonintersecting() {
    for n in 1..=10 {
        let mut images: BTreeMap<(u32, u32), HashSet<(String, String)>> = BTreeMap::new();
        let mut sizes: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        for p in DyckIter::new(n, 10).unwrap() {
            let s = p.stats();
            let pair = to_lattice_pair(&to_polyomino(&phi(&p)).unwrap());
            assert_eq!((pair.n, pair.i, pair.j), (n, s.returns, s.peaks));
            assert_eq!(pair.degenerate, s.peaks == n);
            if pair.degenerate {
                continue;
            }
            assert_eq!(*pair.upper_points().last().unwrap(), pair.b1);
            assert_eq!(*pair.lower_points().last().unwrap(), pair.b2);
            assert!(pair.is_nonintersecting(), "{p}");
            images
                .entry((s.returns, s.peaks))
                .or_default()
                .insert((pair.upper_path.to_string(), pair.lower_path.to_string()));
            *sizes.entry((s.returns, s.peaks)).or_default() += 1;
        }
        for (cell, set) in &images {
            assert_eq!(set.len(), sizes[cell], "collision in n={n} cell {cell:?}");
        }
    }
}

#[test]
fn determinant_matches_closed_form_to_fifty() {
    assert_eq!(lgv_table::<Count>(50), closed_form_table::<Count>(50));
    assert_eq!(printed_lgv_binomials::<Count>(4, 10, 6), big(0));
    assert_eq!(lgv_count::<Count>(4, 10, 6).unwrap(), big(840));
}

fn divisible<T: CountInt>(nmax: u32) -> bool {
    use narayana::binomial;
    Cell::domain(nmax).all(|c| {
        let (i, n, j) = (c.i as i64, c.n as i64, c.j as i64);
        let product =
            T::from_i64(i).unwrap() * binomial::<T>(n, j) * binomial::<T>(n - i - 1, j - i);
        product.is_multiple_of(&T::from_i64(n).unwrap())
    })
}

#[test]
fn divisibility_to_fifty() {
    assert!(divisible::<Count>(50));
}

#[test]
fn marginals() {
    for n in 1..=11 {
        for j in 1..=n {
            let sum: Count = (1..=j)
                .map(|i| gen_narayana::<Count>(i, n, j).unwrap())
                .sum();
            assert_eq!(sum, narayana_classic::<Count>(n, j).unwrap());
        }
        let c = census_bounded(n, 11).unwrap();
        for i in 1..=n {
            let by_returns: Count = c
                .iter()
                .filter(|(k, _)| k.i == i)
                .map(|(_, v)| v.clone())
                .sum();
            let sum: Count = (i..=n)
                .map(|j| gen_narayana::<Count>(i, n, j).unwrap())
                .sum();
            assert_eq!(sum, by_returns);
        }
    }
    for n in 2..=11 {
        for j in 1..n {
            assert_eq!(
                gen_narayana::<Count>(1, n, j).unwrap(),
                narayana_classic::<Count>(n - 1, j).unwrap()
            );
        }
    }
}

#[test]
fn generating_function_agrees_everywhere() {
    let gf = gf_table(10).unwrap();
    assert!(gf.cells().all(|c| c.in_domain()));
    assert_eq!(gf, closed_form_table::<Count>(10));
}

#[test]
fn generating_function_golden_lines() {
    use narayana::series::gf_expand;
    use narayana::{Rational, RationalSeries3};
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/gf_order5.txt");
    let golden = std::fs::read_to_string(path).unwrap();
    let gf = gf_expand::<Rational>(5).unwrap();
    assert_eq!(gf.to_lines(), golden);
    assert_eq!(RationalSeries3::from_lines(5, &golden).unwrap(), gf);
}
