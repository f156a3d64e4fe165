//! Elementary transformations of reduction sequences.
//!
//! Two kinds of edit turn one reduction sequence of a word into another:
//!
//! * a *swap* exchanges two consecutive steps whose redexes are both present,
//!   and disjoint, in the word before the first of them;
//! * an *overlap switch* changes a step acting on `x x̄ x` from one of the
//!   two overlapping redexes to the other. The word after the step is the
//!   same either way, so later steps are untouched.
//!
//! Text form: `swap@i`, `ovl@i`, `ovr@i`; chains are comma separated.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::reduction::ReductionSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    Swap,
    OverlapLeft,
    OverlapRight,
}

impl MoveKind {
    pub fn label(self) -> &'static str {
        match self {
            MoveKind::Swap => "swap",
            MoveKind::OverlapLeft => "ovl",
            MoveKind::OverlapRight => "ovr",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub kind: MoveKind,
    /// Step index into the sequence.
    pub at: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("step {at} does not exist in a sequence of {steps} steps")]
    IndexOutOfRange { at: usize, steps: usize },
    #[error("steps {at} and {} are nested, not independent", .at + 1)]
    NotIndependent { at: usize },
    #[error("step {at} is not part of an overlap configuration ({direction:?})")]
    NoOverlap { at: usize, direction: Direction },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("move {index} ({mv}) failed: {source}")]
pub struct ChainError {
    pub index: usize,
    pub mv: Move,
    #[source]
    pub source: MoveError,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse move {0:?}; expected swap@i, ovl@i or ovr@i")]
pub struct MoveParseError(pub String);

impl Move {
    pub fn swap(at: usize) -> Self {
        Move { kind: MoveKind::Swap, at }
    }

    pub fn overlap_left(at: usize) -> Self {
        Move { kind: MoveKind::OverlapLeft, at }
    }

    pub fn overlap_right(at: usize) -> Self {
        Move { kind: MoveKind::OverlapRight, at }
    }

    pub fn apply(&self, r: &ReductionSequence) -> Result<ReductionSequence, MoveError> {
        match self.kind {
            MoveKind::Swap => swap(r, self.at),
            MoveKind::OverlapLeft => overlap_switch(r, self.at, Direction::Left),
            MoveKind::OverlapRight => overlap_switch(r, self.at, Direction::Right),
        }
    }

    /// The move that undoes `self` on the sequence `self` produced.
    pub fn inverse(&self) -> Move {
        let kind = match self.kind {
            MoveKind::Swap => MoveKind::Swap,
            MoveKind::OverlapLeft => MoveKind::OverlapRight,
            MoveKind::OverlapRight => MoveKind::OverlapLeft,
        };
        Move { kind, at: self.at }
    }

    /// Same move, `by` steps further into the sequence.
    pub fn shifted(&self, by: usize) -> Move {
        Move {
            kind: self.kind,
            at: self.at + by,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind.label(), self.at)
    }
}

impl FromStr for Move {
    type Err = MoveParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || MoveParseError(s.to_owned());
        let (label, at) = s.trim().split_once('@').ok_or_else(err)?;
        let kind = match label {
            "swap" => MoveKind::Swap,
            "ovl" => MoveKind::OverlapLeft,
            "ovr" => MoveKind::OverlapRight,
            _ => return Err(err()),
        };
        if at.is_empty() || !at.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let at = at.parse().map_err(|_| err())?;
        Ok(Move { kind, at })
    }
}

/// A finite list of moves, applied left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MoveChain {
    moves: Vec<Move>,
}

impl MoveChain {
    pub fn new() -> Self {
        MoveChain::default()
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn push(&mut self, mv: Move) {
        self.moves.push(mv);
    }

    pub fn extend(&mut self, other: MoveChain) {
        self.moves.extend(other.moves);
    }

    pub fn shifted(&self, by: usize) -> MoveChain {
        self.moves.iter().map(|m| m.shifted(by)).collect()
    }

    /// Applies the chain, keeping every intermediate sequence (input first).
    pub fn replay(&self, r: &ReductionSequence) -> Result<Vec<ReductionSequence>, ChainError> {
        let mut out = Vec::with_capacity(self.moves.len() + 1);
        out.push(r.clone());
        for (index, mv) in self.moves.iter().enumerate() {
            let next = mv
                .apply(out.last().unwrap())
                .map_err(|source| ChainError { index, mv: *mv, source })?;
            out.push(next);
        }
        Ok(out)
    }
}

impl From<Vec<Move>> for MoveChain {
    fn from(moves: Vec<Move>) -> Self {
        MoveChain { moves }
    }
}

impl FromIterator<Move> for MoveChain {
    fn from_iter<I: IntoIterator<Item = Move>>(iter: I) -> Self {
        MoveChain {
            moves: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for MoveChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, mv) in self.moves.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{mv}")?;
        }
        Ok(())
    }
}

impl FromStr for MoveChain {
    type Err = MoveParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect()
    }
}

/// Exchanges steps `i` and `i + 1`.
///
/// With `p` the position of step `i` and `q` that of step `i + 1`, the steps
/// are independent unless `q == p - 1`. In the word before step `i` the second
/// redex sits at `q` when `q <= p - 2` and at `q + 2` when `q >= p`.
pub fn swap(r: &ReductionSequence, i: usize) -> Result<ReductionSequence, MoveError> {
    let steps = r.steps();
    if i + 1 >= steps.len() {
        return Err(MoveError::IndexOutOfRange { at: i, steps: steps.len() });
    }
    let (p, q) = (steps[i], steps[i + 1]);
    let (first, second) = if q + 2 <= p {
        (q, p - 2)
    } else if q >= p {
        (q + 2, p)
    } else {
        return Err(MoveError::NotIndependent { at: i });
    };
    let mut new_steps = steps.to_vec();
    new_steps[i] = first;
    new_steps[i + 1] = second;
    Ok(ReductionSequence::from_parts_unchecked(r.word().clone(), new_steps))
}

/// Moves step `i` one position left or right inside an `x x̄ x` window.
pub fn overlap_switch(
    r: &ReductionSequence,
    i: usize,
    direction: Direction,
) -> Result<ReductionSequence, MoveError> {
    if i >= r.len() {
        return Err(MoveError::IndexOutOfRange { at: i, steps: r.len() });
    }
    let before = r.word_before(i);
    let p = r.steps()[i];
    let target = match direction {
        Direction::Right => {
            let ok = matches!((before.get(p), before.get(p + 2)), (Some(x), Some(z)) if x == z);
            ok.then_some(p + 1)
        }
        Direction::Left => p.checked_sub(1).filter(|&l| before.get(l) == before.get(p + 1)),
    };
    let target = target.ok_or(MoveError::NoOverlap { at: i, direction })?;
    let mut new_steps = r.steps().to_vec();
    new_steps[i] = target;
    Ok(ReductionSequence::from_parts_unchecked(r.word().clone(), new_steps))
}

pub fn apply_chain(r: &ReductionSequence, chain: &MoveChain) -> Result<ReductionSequence, ChainError> {
    chain.moves.iter().enumerate().try_fold(r.clone(), |cur, (index, mv)| {
        mv.apply(&cur).map_err(|source| ChainError { index, mv: *mv, source })
    })
}

/// Every move applicable to `r`, with its result.
pub fn applicable_moves(r: &ReductionSequence) -> Vec<(Move, ReductionSequence)> {
    let mut out = Vec::new();
    for at in 0..r.len() {
        for mv in [Move::swap(at), Move::overlap_left(at), Move::overlap_right(at)] {
            if let Ok(next) = mv.apply(r) {
                out.push((mv, next));
            }
        }
    }
    out
}
