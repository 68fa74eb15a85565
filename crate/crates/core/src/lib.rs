//! Exact enumerative combinatorics for generalized Narayana numbers.
//!
//! `N_i(n, j)` counts Dyck paths of semilength `n` with `i` returns to ground
//! level and `j` peaks. This crate computes it several independent ways:
//!
//! * [`dyck::census`] enumerates every Dyck path and tallies statistics,
//! * [`counting::gen_narayana`] evaluates the closed form
//!   `(i/n) C(n, j) C(n-i-1, j-i)`,
//! * [`counting::lgv_count`] evaluates a 2x2 Lindström–Gessel–Viennot
//!   determinant over nonintersecting lattice paths,
//! * [`series::gf_expand`] expands the trivariate generating function.
//!
//! The two bijections that connect these counts, Deutsch's involution
//! ([`involution::phi`]) and the Dyck path to parallelogram polyomino map
//! ([`polyomino::to_polyomino`]), are implemented as well.
//!
//! Counting is generic over the integer type ([`counting::CountInt`]) and the
//! series over the coefficient field ([`scalar::Scalar`]); the aliases below
//! fix the exact, arbitrary-precision instantiations used by default.

pub mod counting;
pub mod dyck;
pub mod involution;
pub mod polyomino;
pub mod scalar;
pub mod series;

pub use counting::{
    binomial, catalan, gen_narayana, lattice_path_count, lgv_count, narayana_classic, Cell,
    CountInt, CountTable, DomainError,
};
pub use dyck::{
    census, enumerate_dyck, parse_path, render_path, DyckIter, DyckPath, EnumerationError,
    ParseError, PathStats, Step, DEFAULT_ENUMERATION_BOUND,
};
pub use involution::{first_return_split, phi, EmptyPathError};
pub use polyomino::{
    from_polyomino, to_lattice_pair, to_polyomino, BoundaryWord, Dir, Endpoints, LatticePathPair,
    ParallelogramPolyomino, Point, PolyominoError,
};
pub use scalar::Scalar;
pub use series::{gf_coefficient, gf_expand, Series3, SeriesError, DEFAULT_GF_BOUND};

/// Arbitrary-precision count.
pub type Count = num_bigint::BigInt;

/// Exact rational coefficient.
pub type Rational = num_rational::BigRational;

/// Count table with arbitrary-precision entries.
pub type BigCountTable = CountTable<Count>;

/// Truncated trivariate series over exact rationals.
pub type RationalSeries3 = Series3<Rational>;

/// Truncated trivariate series over `f64`, for quick approximate expansion.
pub type FloatSeries3 = Series3<f64>;
