//! Dyck path representation, validation, statistics and enumeration.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::counting::{Cell, CountTable};
use crate::Count;

/// Largest semilength enumerated unless the caller raises the bound.
pub const DEFAULT_ENUMERATION_BOUND: u32 = 14;

/// A single step of a Dyck path. `Up < Down`, which fixes enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

/// Rejection reasons for step words. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("foreign character {found:?} at position {position} (only 'U' and 'D' are allowed)")]
    ForeignCharacter { position: usize, found: char },
    #[error("path goes below ground level at position {position}")]
    BelowGround { position: usize },
    #[error("unbalanced path: up-step at position {position} is never matched")]
    Unbalanced { position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("semilength {requested} exceeds the enumeration bound {bound}")]
    BoundExceeded { requested: u32, bound: u32 },
}

/// A validated Dyck path: balanced, and never below ground level.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// Statistics of a single path. All zero for the empty path.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PathStats {
    pub semilength: u32,
    /// Down steps that land on ground level.
    pub returns: u32,
    /// Occurrences of the factor `UD`.
    pub peaks: u32,
    /// Length of the maximal leading run of up-steps.
    pub initial_ascent: u32,
}

impl DyckPath {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<Self, ParseError> {
        validate(&steps)?;
        Ok(Self { steps })
    }

    /// Wraps steps already known to form a Dyck path.
    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(validate(&steps).is_ok());
        Self { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn semilength(&self) -> u32 {
        (self.steps.len() / 2) as u32
    }

    pub fn stats(&self) -> PathStats {
        stats_of(&self.steps)
    }
}

fn validate(steps: &[Step]) -> Result<(), ParseError> {
    let mut open = Vec::new();
    for (idx, step) in steps.iter().enumerate() {
        match step {
            Step::Up => open.push(idx),
            Step::Down => {
                if open.pop().is_none() {
                    return Err(ParseError::BelowGround { position: idx + 1 });
                }
            }
        }
    }
    match open.first() {
        Some(&idx) => Err(ParseError::Unbalanced { position: idx + 1 }),
        None => Ok(()),
    }
}

pub(crate) fn stats_of(steps: &[Step]) -> PathStats {
    let mut out = PathStats {
        semilength: (steps.len() / 2) as u32,
        initial_ascent: steps.iter().take_while(|s| **s == Step::Up).count() as u32,
        ..PathStats::default()
    };
    let mut height = 0i64;
    let mut prev = None;
    for &step in steps {
        match step {
            Step::Up => height += 1,
            Step::Down => {
                height -= 1;
                if height == 0 {
                    out.returns += 1;
                }
                if prev == Some(Step::Up) {
                    out.peaks += 1;
                }
            }
        }
        prev = Some(step);
    }
    out
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_path(s)
    }
}

/// Parses a word over `{U, D}` (case-sensitive).
pub fn parse_path(text: &str) -> Result<DyckPath, ParseError> {
    let steps = text
        .chars()
        .enumerate()
        .map(|(idx, c)| match c {
            'U' => Ok(Step::Up),
            'D' => Ok(Step::Down),
            other => Err(ParseError::ForeignCharacter {
                position: idx + 1,
                found: other,
            }),
        })
        .collect::<Result<Vec<_>, _>>()?;
    DyckPath::from_steps(steps)
}

pub fn render_path(p: &DyckPath) -> String {
    p.to_string()
}

/// Streams all Dyck paths of one semilength in lexicographic order (`U < D`).
#[derive(Debug, Clone)]
pub struct DyckIter {
    semilength: usize,
    current: Option<Vec<Step>>,
}

impl DyckIter {
    pub fn new(n: u32, bound: u32) -> Result<Self, EnumerationError> {
        if n > bound {
            return Err(EnumerationError::BoundExceeded {
                requested: n,
                bound,
            });
        }
        let n = n as usize;
        let mut first = vec![Step::Up; n];
        first.extend(std::iter::repeat_n(Step::Down, n));
        Ok(Self {
            semilength: n,
            current: Some(first),
        })
    }

    /// Lexicographic successor: flip the rightmost up-step that may become a
    /// down-step, then complete with the smallest suffix `U^a D^b`.
    fn successor(&self, steps: &[Step]) -> Option<Vec<Step>> {
        let n = self.semilength;
        let (mut ups, mut downs) = (n, n);
        for k in (0..steps.len()).rev() {
            match steps[k] {
                Step::Up => ups -= 1,
                Step::Down => downs -= 1,
            }
            // counts now cover the prefix steps[..k]
            if steps[k] == Step::Up && ups > downs && downs < n {
                let mut next = steps[..k].to_vec();
                next.push(Step::Down);
                next.extend(std::iter::repeat_n(Step::Up, n - ups));
                next.extend(std::iter::repeat_n(Step::Down, n - downs - 1));
                return Some(next);
            }
        }
        None
    }
}

impl Iterator for DyckIter {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let steps = self.current.take()?;
        self.current = self.successor(&steps);
        Some(DyckPath::from_steps_unchecked(steps))
    }
}

/// All Dyck paths of semilength `n`, under [`DEFAULT_ENUMERATION_BOUND`].
pub fn enumerate_dyck(n: u32) -> Result<Vec<DyckPath>, EnumerationError> {
    enumerate_dyck_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_dyck_bounded(n: u32, bound: u32) -> Result<Vec<DyckPath>, EnumerationError> {
    Ok(DyckIter::new(n, bound)?.collect())
}

/// Brute-force count of semilength-`n` paths by (returns, peaks).
pub fn census(n: u32) -> Result<CountTable<Count>, EnumerationError> {
    census_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn census_bounded(n: u32, bound: u32) -> Result<CountTable<Count>, EnumerationError> {
    let mut tally: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for path in DyckIter::new(n, bound)? {
        let s = path.stats();
        if n > 0 {
            *tally.entry((s.returns, s.peaks)).or_default() += 1;
        }
    }
    let mut table = CountTable::new();
    for ((i, j), count) in tally {
        table.insert(Cell { i, n, j }, Count::from(count));
    }
    Ok(table)
}
