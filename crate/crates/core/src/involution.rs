//! Deutsch's involution on Dyck paths and the first-return decomposition.

use std::ops::Range;

use thiserror::Error;

use crate::dyck::{DyckPath, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("the empty path has no first return")]
pub struct EmptyPathError;

/// Index of the step that first returns to ground level.
fn first_return(steps: &[Step]) -> usize {
    let mut height = 0i64;
    for (idx, step) in steps.iter().enumerate() {
        height += if *step == Step::Up { 1 } else { -1 };
        if height == 0 {
            return idx;
        }
    }
    unreachable!("nonempty Dyck word always returns to ground")
}

/// Writes a nonempty path as `U P1 D P2`, where the `D` is the first return.
pub fn first_return_split(p: &DyckPath) -> Result<(DyckPath, DyckPath), EmptyPathError> {
    let steps = p.steps();
    if steps.is_empty() {
        return Err(EmptyPathError);
    }
    let r = first_return(steps);
    Ok((
        DyckPath::from_steps_unchecked(steps[1..r].to_vec()),
        DyckPath::from_steps_unchecked(steps[r + 1..].to_vec()),
    ))
}

/// Inverse of [`first_return_split`].
pub fn join_first_return(p1: &DyckPath, p2: &DyckPath) -> DyckPath {
    let mut steps = Vec::with_capacity(p1.steps().len() + p2.steps().len() + 2);
    steps.push(Step::Up);
    steps.extend_from_slice(p1.steps());
    steps.push(Step::Down);
    steps.extend_from_slice(p2.steps());
    DyckPath::from_steps_unchecked(steps)
}

enum Task {
    Map(Range<usize>),
    Emit(Step),
}

/// For every up-step, the index of its matching down-step.
fn matching_downs(steps: &[Step]) -> Vec<usize> {
    let mut matched = vec![usize::MAX; steps.len()];
    let mut open = Vec::new();
    for (idx, step) in steps.iter().enumerate() {
        match step {
            Step::Up => open.push(idx),
            Step::Down => {
                let up = open.pop().expect("validated Dyck word");
                matched[up] = idx;
            }
        }
    }
    matched
}

/// `phi(ε) = ε`, `phi(U P1 D P2) = U phi(P2) D phi(P1)`.
///
/// Evaluated with an explicit work stack over index ranges of the input, so
/// deep paths cannot overflow the call stack. Linear time.
pub fn phi(p: &DyckPath) -> DyckPath {
    let steps = p.steps();
    let matched = matching_downs(steps);
    let mut out = Vec::with_capacity(steps.len());
    let mut stack = vec![Task::Map(0..steps.len())];
    while let Some(task) = stack.pop() {
        match task {
            Task::Emit(step) => out.push(step),
            Task::Map(range) if range.is_empty() => {}
            Task::Map(range) => {
                let r = matched[range.start];
                // popped in reverse: U, phi(P2), D, phi(P1)
                stack.push(Task::Map(range.start + 1..r));
                stack.push(Task::Emit(Step::Down));
                stack.push(Task::Map(r + 1..range.end));
                stack.push(Task::Emit(Step::Up));
            }
        }
    }
    DyckPath::from_steps_unchecked(out)
}
