//! Exact counting: binomials with explicit edge conventions, Catalan and
//! Narayana numbers, the generalized Narayana closed form, and the
//! Lindström–Gessel–Viennot determinant.
//!
//! Every function is generic over [`CountInt`]. Fixed-width integers work as
//! long as intermediate products fit; [`crate::Count`] never overflows.

use std::collections::BTreeMap;
use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};
use thiserror::Error;

use crate::polyomino::{Endpoints, Point};

/// Integer types usable for exact counts.
pub trait CountInt: Integer + Signed + Clone + Debug + Display + FromPrimitive + Sum {}

impl<T> CountInt for T where T: Integer + Signed + Clone + Debug + Display + FromPrimitive + Sum {}

fn int<T: CountInt>(v: i64) -> T {
    T::from_i64(v).expect("value representable in the count type")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("cell (i={i}, n={n}, j={j}) is outside 1 <= i <= j <= n")]
    Cell { i: u32, n: u32, j: u32 },
    #[error("Narayana index (n={n}, k={k}) is outside 1 <= k <= n")]
    Narayana { n: u32, k: u32 },
}

/// Index `(i, n, j)`: `i` returns, semilength `n`, `j` peaks.
///
/// Ordered by `n`, then `i`, then `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub n: u32,
    pub i: u32,
    pub j: u32,
}

impl Cell {
    pub fn new(i: u32, n: u32, j: u32) -> Self {
        Self { n, i, j }
    }

    pub fn in_domain(&self) -> bool {
        1 <= self.i && self.i <= self.j && self.j <= self.n
    }

    /// All cells with `1 <= i <= j <= n <= nmax`, in `Cell` order.
    pub fn domain(nmax: u32) -> impl Iterator<Item = Cell> {
        (1..=nmax).flat_map(|n| (1..=n).flat_map(move |i| (i..=n).map(move |j| Cell { n, i, j })))
    }
}

/// Sparse exact table; an absent cell means zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable<T> {
    entries: BTreeMap<Cell, T>,
}

impl<T: CountInt> CountTable<T> {
    pub fn new() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    /// Stores `value`, dropping zeros. Negative values are kept so that a
    /// faulty producer is visible to comparisons.
    pub fn insert(&mut self, cell: Cell, value: T) {
        if value.is_zero() {
            self.entries.remove(&cell);
        } else {
            self.entries.insert(cell, value);
        }
    }

    pub fn get(&self, cell: Cell) -> T {
        self.entries.get(&cell).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Cell, &T)> {
        self.entries.iter()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.entries.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> T {
        self.entries.values().cloned().sum()
    }

    pub fn merge(&mut self, other: CountTable<T>) {
        for (cell, v) in other.entries {
            let sum = self.get(cell) + v;
            self.insert(cell, sum);
        }
    }
}

/// Binomial coefficient with the combinatorial conventions:
/// `C(m, 0) = 1` for every `m` (including negative), `C(m, k) = 0` when
/// `k < 0` or `m < k`.
///
/// The polynomial extension `C(-1, k) = (-1)^k` is deliberately not used.
pub fn binomial<T: CountInt>(m: i64, k: i64) -> T {
    if k == 0 {
        return T::one();
    }
    if k < 0 || m < k {
        return T::zero();
    }
    let k = k.min(m - k);
    let mut acc = T::one();
    for t in 1..=k {
        acc = acc * int(m - k + t) / int(t);
    }
    acc
}

pub fn catalan<T: CountInt>(n: u32) -> T {
    let n = i64::from(n);
    binomial::<T>(2 * n, n) / int(n + 1)
}

/// `(1/n) C(n, k) C(n, k-1)`: Dyck paths of semilength `n` with `k` peaks.
pub fn narayana_classic<T: CountInt>(n: u32, k: u32) -> Result<T, DomainError> {
    if k < 1 || k > n {
        return Err(DomainError::Narayana { n, k });
    }
    let (n, k) = (i64::from(n), i64::from(k));
    let product = binomial::<T>(n, k) * binomial::<T>(n, k - 1);
    let (q, r) = product.div_rem(&int(n));
    assert!(r.is_zero(), "Narayana numerator not divisible by n={n}");
    Ok(q)
}

/// Generalized Narayana number `(i/n) C(n, j) C(n-i-1, j-i)`.
///
/// Panics if the division by `n` is inexact, which would mean the formula
/// itself is wrong.
pub fn gen_narayana<T: CountInt>(i: u32, n: u32, j: u32) -> Result<T, DomainError> {
    let cell = Cell::new(i, n, j);
    if !cell.in_domain() {
        return Err(DomainError::Cell { i, n, j });
    }
    let (i, n, j) = (i64::from(i), i64::from(n), i64::from(j));
    let product = int::<T>(i) * binomial::<T>(n, j) * binomial::<T>(n - i - 1, j - i);
    let (q, r) = product.div_rem(&int(n));
    assert!(
        r.is_zero(),
        "n={n} does not divide i*C(n,j)*C(n-i-1,j-i) at (i={i}, j={j})"
    );
    Ok(q)
}

/// Algebraic count of North/East lattice paths from `a` to `b`:
/// `C(dx + dy, dy)` under the [`binomial`] conventions. Equals the geometric
/// count whenever `b` is weakly north-east of `a`.
pub fn lattice_path_count<T: CountInt>(a: Point, b: Point) -> T {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    binomial(dx + dy, dy)
}

/// 2x2 LGV determinant for the endpoints `A1=(1,i)`, `B1=(n-j,j)`,
/// `A2=(1,0)`, `B2=(n+1-j,j-1)`.
pub fn lgv_count<T: CountInt>(i: u32, n: u32, j: u32) -> Result<T, DomainError> {
    if !Cell::new(i, n, j).in_domain() {
        return Err(DomainError::Cell { i, n, j });
    }
    let e = Endpoints::for_cell(i, n, j);
    let det = lattice_path_count::<T>(e.a1, e.b1) * lattice_path_count::<T>(e.a2, e.b2)
        - lattice_path_count::<T>(e.a1, e.b2) * lattice_path_count::<T>(e.a2, e.b1);
    debug_assert!(!det.is_negative());
    Ok(det)
}

/// The determinant as literally printed alongside the LGV argument:
/// `C(n-j-1, j-i) C(n-j, j-1) - C(n-j, j-1-i) C(n-j-1, j)`.
///
/// These binomials do not match the stated endpoints and do not reproduce
/// the counts (0 instead of 840 at `(4, 10, 6)`); kept only to pin that fact.
pub fn printed_lgv_binomials<T: CountInt>(i: u32, n: u32, j: u32) -> T {
    let (i, n, j) = (i64::from(i), i64::from(n), i64::from(j));
    binomial::<T>(n - j - 1, j - i) * binomial::<T>(n - j, j - 1)
        - binomial::<T>(n - j, j - 1 - i) * binomial::<T>(n - j - 1, j)
}

/// Closed-form values on every cell with `n <= nmax`.
pub fn closed_form_table<T: CountInt>(nmax: u32) -> CountTable<T> {
    let mut table = CountTable::new();
    for cell in Cell::domain(nmax) {
        table.insert(
            cell,
            gen_narayana(cell.i, cell.n, cell.j).expect("domain cell"),
        );
    }
    table
}

/// LGV determinant on every cell with `n <= nmax`.
pub fn lgv_table<T: CountInt>(nmax: u32) -> CountTable<T> {
    let mut table = CountTable::new();
    for cell in Cell::domain(nmax) {
        table.insert(
            cell,
            lgv_count(cell.i, cell.n, cell.j).expect("domain cell"),
        );
    }
    table
}
