//! Dyck paths to parallelogram polyominoes, and the trimming of a polyomino
//! into a pair of nonintersecting lattice paths with fixed endpoints.
//!
//! For a path with ascent lengths `a_1..a_m` and descent lengths `d_1..d_m`:
//!
//! ```text
//! upper = N (N^{a_1-1} E) (N^{a_2-1} E) ... (N^{a_m-1} E)
//! lower = (E N^{d_1-1}) (E N^{d_2-1}) ... (E N^{d_m-1}) N
//! ```
//!
//! Both boundaries start at the origin and meet again at `(m, n+1-m)`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::dyck::{DyckPath, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    North,
    East,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn step(self, d: Dir) -> Self {
        match d {
            Dir::North => Self::new(self.x, self.y + 1),
            Dir::East => Self::new(self.x + 1, self.y),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyominoError {
    #[error("the empty path has no polyomino")]
    EmptyPath,
    #[error("foreign character {found:?} at position {position} in boundary word")]
    ForeignCharacter { position: usize, found: char },
    #[error("boundary word is empty")]
    EmptyBoundary,
    #[error("upper boundary must start with North")]
    UpperStart,
    #[error("upper boundary must end with East")]
    UpperEnd,
    #[error("lower boundary must start with East")]
    LowerStart,
    #[error("lower boundary must end with North")]
    LowerEnd,
    #[error("boundaries end at different points: upper {upper}, lower {lower}")]
    DisplacementMismatch { upper: Point, lower: Point },
    #[error("boundaries touch after {step} steps")]
    BoundariesTouch { step: usize },
    #[error(
        "cell (i={i}, n={n}, j={j}) has no lattice-path pair: B1 {b1} is not north-east of A1 {a1}"
    )]
    InfeasibleEndpoints {
        i: u32,
        n: u32,
        j: u32,
        a1: Point,
        b1: Point,
    },
}

/// Monotone lattice word over `{North, East}`, written as `N`/`E`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BoundaryWord(pub Vec<Dir>);

impl BoundaryWord {
    pub fn steps(&self) -> &[Dir] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, d: Dir) -> usize {
        self.0.iter().filter(|s| **s == d).count()
    }

    pub fn displacement(&self) -> Point {
        Point::new(self.count(Dir::East) as i64, self.count(Dir::North) as i64)
    }

    /// Visited lattice points, starting with `origin`.
    pub fn points_from(&self, origin: Point) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut at = origin;
        out.push(at);
        for &d in &self.0 {
            at = at.step(d);
            out.push(at);
        }
        out
    }
}

impl fmt::Display for BoundaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            f.write_str(match d {
                Dir::North => "N",
                Dir::East => "E",
            })?;
        }
        Ok(())
    }
}

impl FromStr for BoundaryWord {
    type Err = PolyominoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(idx, c)| match c {
                'N' => Ok(Dir::North),
                'E' => Ok(Dir::East),
                other => Err(PolyominoError::ForeignCharacter {
                    position: idx + 1,
                    found: other,
                }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BoundaryWord)
    }
}

/// A parallelogram polyomino given by its two boundary words, both anchored
/// at the origin. Construction validates all invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParallelogramPolyomino {
    upper: BoundaryWord,
    lower: BoundaryWord,
}

impl ParallelogramPolyomino {
    pub fn new(upper: BoundaryWord, lower: BoundaryWord) -> Result<Self, PolyominoError> {
        use PolyominoError::*;
        if upper.is_empty() || lower.is_empty() {
            return Err(EmptyBoundary);
        }
        if upper.0[0] != Dir::North {
            return Err(UpperStart);
        }
        if upper.0[upper.len() - 1] != Dir::East {
            return Err(UpperEnd);
        }
        if lower.0[0] != Dir::East {
            return Err(LowerStart);
        }
        if lower.0[lower.len() - 1] != Dir::North {
            return Err(LowerEnd);
        }
        let (du, dl) = (upper.displacement(), lower.displacement());
        if du != dl {
            return Err(DisplacementMismatch {
                upper: du,
                lower: dl,
            });
        }
        // After k < len steps both walkers sit on the antidiagonal x + y = k;
        // the upper one must be strictly to the left.
        let (mut xu, mut xl) = (0usize, 0usize);
        for k in 1..upper.len() {
            xu += usize::from(upper.0[k - 1] == Dir::East);
            xl += usize::from(lower.0[k - 1] == Dir::East);
            if xu >= xl {
                return Err(BoundariesTouch { step: k });
            }
        }
        Ok(Self { upper, lower })
    }

    pub fn parse(upper: &str, lower: &str) -> Result<Self, PolyominoError> {
        Self::new(upper.parse()?, lower.parse()?)
    }

    pub fn upper(&self) -> &BoundaryWord {
        &self.upper
    }

    pub fn lower(&self) -> &BoundaryWord {
        &self.lower
    }

    pub fn upper_right(&self) -> Point {
        self.upper.displacement()
    }

    /// Length of the leading North run of the upper boundary.
    pub fn initial_north_run(&self) -> u32 {
        self.upper
            .0
            .iter()
            .take_while(|d| **d == Dir::North)
            .count() as u32
    }

    /// Semilength of the corresponding Dyck path (half-perimeter minus one).
    pub fn semilength(&self) -> u32 {
        (self.upper.len() - 1) as u32
    }
}

fn runs(steps: &[Step]) -> (Vec<usize>, Vec<usize>) {
    let (mut ascents, mut descents) = (Vec::new(), Vec::new());
    let mut idx = 0;
    while idx < steps.len() {
        let step = steps[idx];
        let len = steps[idx..].iter().take_while(|s| **s == step).count();
        match step {
            Step::Up => ascents.push(len),
            Step::Down => descents.push(len),
        }
        idx += len;
    }
    (ascents, descents)
}

/// Maps a nonempty Dyck path to its parallelogram polyomino.
pub fn to_polyomino(p: &DyckPath) -> Result<ParallelogramPolyomino, PolyominoError> {
    if p.is_empty() {
        return Err(PolyominoError::EmptyPath);
    }
    let (ascents, descents) = runs(p.steps());
    let mut upper = vec![Dir::North];
    for a in ascents {
        upper.extend(std::iter::repeat_n(Dir::North, a - 1));
        upper.push(Dir::East);
    }
    let mut lower = Vec::with_capacity(upper.len());
    for d in descents {
        lower.push(Dir::East);
        lower.extend(std::iter::repeat_n(Dir::North, d - 1));
    }
    lower.push(Dir::North);
    Ok(
        ParallelogramPolyomino::new(BoundaryWord(upper), BoundaryWord(lower))
            .expect("image of a Dyck path is a parallelogram polyomino"),
    )
}

/// Inverse of [`to_polyomino`].
pub fn from_polyomino(q: &ParallelogramPolyomino) -> DyckPath {
    // Each East closes an ascent on the upper word and opens a descent on the
    // lower word; Norths in between extend the current run.
    let ascents = q.upper.0[1..]
        .split_inclusive(|d| *d == Dir::East)
        .map(|b| b.len());
    let lower = &q.lower.0[..q.lower.len() - 1];
    let descents = lower
        .split(|d| *d == Dir::East)
        .skip(1)
        .map(|b| b.len() + 1);
    let mut steps = Vec::with_capacity(2 * q.semilength() as usize);
    for (a, d) in ascents.zip(descents) {
        steps.extend(std::iter::repeat_n(Step::Up, a));
        steps.extend(std::iter::repeat_n(Step::Down, d));
    }
    DyckPath::from_steps(steps).expect("validated polyomino encodes a Dyck path")
}

/// Endpoints `A1=(1,i)`, `B1=(n-j,j)`, `A2=(1,0)`, `B2=(n+1-j,j-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Endpoints {
    pub a1: Point,
    pub b1: Point,
    pub a2: Point,
    pub b2: Point,
}

impl Endpoints {
    pub fn for_cell(i: u32, n: u32, j: u32) -> Self {
        let (i, n, j) = (i64::from(i), i64::from(n), i64::from(j));
        Self {
            a1: Point::new(1, i),
            b1: Point::new(n - j, j),
            a2: Point::new(1, 0),
            b2: Point::new(n + 1 - j, j - 1),
        }
    }

    /// Like [`Endpoints::for_cell`], but rejects cells where no monotone
    /// upper path exists (`B1` not weakly north-east of `A1`).
    pub fn feasible(i: u32, n: u32, j: u32) -> Result<Self, PolyominoError> {
        let e = Self::for_cell(i, n, j);
        if e.b1.x < e.a1.x || e.b1.y < e.a1.y {
            return Err(PolyominoError::InfeasibleEndpoints {
                i,
                n,
                j,
                a1: e.a1,
                b1: e.b1,
            });
        }
        Ok(e)
    }
}

/// Trimmed boundaries of a polyomino, re-anchored at the LGV endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePathPair {
    pub n: u32,
    pub i: u32,
    pub j: u32,
    pub a1: Point,
    pub b1: Point,
    pub a2: Point,
    pub b2: Point,
    /// Runs `a1 -> b1`; empty when `degenerate`.
    pub upper_path: BoundaryWord,
    /// Runs `a2 -> b2`.
    pub lower_path: BoundaryWord,
    /// `j = n`: the upper boundary has a single East step, so the East after
    /// the initial North run and the final East coincide.
    pub degenerate: bool,
}

impl LatticePathPair {
    pub fn endpoints(&self) -> Endpoints {
        Endpoints {
            a1: self.a1,
            b1: self.b1,
            a2: self.a2,
            b2: self.b2,
        }
    }

    pub fn upper_points(&self) -> Vec<Point> {
        self.upper_path.points_from(self.a1)
    }

    pub fn lower_points(&self) -> Vec<Point> {
        self.lower_path.points_from(self.a2)
    }

    /// True when the two paths share no lattice point. The degenerate pair
    /// has no upper path and counts as nonintersecting.
    pub fn is_nonintersecting(&self) -> bool {
        if self.degenerate {
            return true;
        }
        let upper: HashSet<Point> = self.upper_points().into_iter().collect();
        self.lower_points().iter().all(|p| !upper.contains(p))
    }
}

/// Deletes the mandatory steps of `q`: on the upper boundary the initial
/// North run, the East right after it and the final East; on the lower
/// boundary the first East and the final North.
pub fn to_lattice_pair(q: &ParallelogramPolyomino) -> LatticePathPair {
    let n = q.semilength();
    let i = q.initial_north_run();
    let easts = q.upper.count(Dir::East) as u32;
    let j = n + 1 - easts;
    let e = Endpoints::for_cell(i, n, j);
    let degenerate = easts == 1;
    let upper_path = if degenerate {
        BoundaryWord::default()
    } else {
        BoundaryWord(q.upper.0[i as usize + 1..q.upper.len() - 1].to_vec())
    };
    let lower_path = BoundaryWord(q.lower.0[1..q.lower.len() - 1].to_vec());
    LatticePathPair {
        n,
        i,
        j,
        a1: e.a1,
        b1: e.b1,
        a2: e.a2,
        b2: e.b2,
        upper_path,
        lower_path,
        degenerate,
    }
}
