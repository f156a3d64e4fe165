//! Connecting reduction sequences by chains of moves.
//!
//! [`front_reduction`] rewrites a sequence so that a chosen redex is removed
//! first. Repeating it level by level gives [`transform_to`], which connects
//! any two sequences of the same word. [`extend_reduction`] and
//! [`drop_redex`] show that reducing a redex never loses reducibility.

use thiserror::Error;

use crate::moves::{ChainError, Move, MoveChain, MoveError};
use crate::reduction::{ReductionError, ReductionSequence};
use crate::word::{SignedGenerator, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("no redex at position {position} of `{word}`")]
    InvalidRedex { position: usize, word: Word },
    #[error("sequences reduce different words: `{left}` and `{right}`")]
    WordMismatch { left: Word, right: Word },
    /// A move the construction relies on was rejected. This indicates a bug
    /// in the construction, never bad input.
    #[error("construction step {mv} was rejected: {source}")]
    MoveRejected {
        mv: Move,
        #[source]
        source: MoveError,
    },
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
}

fn push_applied(
    chain: &mut MoveChain,
    current: &mut ReductionSequence,
    mv: Move,
) -> Result<(), TransformError> {
    *current = mv
        .apply(current)
        .map_err(|source| TransformError::MoveRejected { mv, source })?;
    chain.push(mv);
    Ok(())
}

/// Transforms `r` into a sequence whose first step removes the redex at `p`.
///
/// Let `m` be the step removing index `p` and `n` the step removing `p + 1`.
/// If they differ, one overlap switch at the earlier of the two makes a
/// single step remove the marked pair. That step is then bubbled to the
/// front by swaps at decreasing step indices.
pub fn front_reduction(
    r: &ReductionSequence,
    p: usize,
) -> Result<(MoveChain, ReductionSequence), TransformError> {
    if !r.word().is_redex_at(p) {
        return Err(TransformError::InvalidRedex {
            position: p,
            word: r.word().clone(),
        });
    }
    let consumed = r.consumption();
    let (m, n) = (consumed[p], consumed[p + 1]);

    let mut chain = MoveChain::new();
    let mut current = r.clone();
    let target = if m > n {
        // before step n: u x x̄ x v, with step n reducing x̄ x
        push_applied(&mut chain, &mut current, Move::overlap_left(n))?;
        n
    } else if m < n {
        push_applied(&mut chain, &mut current, Move::overlap_right(m))?;
        m
    } else {
        n
    };
    for at in (0..target).rev() {
        push_applied(&mut chain, &mut current, Move::swap(at))?;
    }
    debug_assert_eq!(current.steps().first(), Some(&p));
    Ok((chain, current))
}

/// A chain of moves taking `r` to `s`.
///
/// Level by level: bring the redex `s` reduces first to the front of the
/// current sequence, then continue on both tails. Tail moves are shifted by
/// the level. The chain is not minimal and is usually nonempty even when
/// `r == s`.
pub fn transform_to(r: &ReductionSequence, s: &ReductionSequence) -> Result<MoveChain, TransformError> {
    if r.word() != s.word() {
        return Err(TransformError::WordMismatch {
            left: r.word().clone(),
            right: s.word().clone(),
        });
    }
    let mut chain = MoveChain::new();
    let mut current = r.clone();
    let mut target = s.clone();
    let mut level = 0;
    while let Some((p, target_tail)) = target.split_first() {
        let (front_chain, fronted) = front_reduction(&current, p)?;
        chain.extend(front_chain.shifted(level));
        let (_, tail) = fronted.split_first().expect("same step count as the target");
        current = tail;
        target = target_tail;
        level += 1;
    }
    Ok(chain)
}

/// From a reduction of `y z`, a reduction of `y a ā z` that removes the
/// inserted pair first.
pub fn extend_reduction(
    y: &Word,
    a: &SignedGenerator,
    z: &Word,
    r: &ReductionSequence,
) -> Result<ReductionSequence, TransformError> {
    let joined = y.concat(z);
    if r.word() != &joined {
        return Err(TransformError::WordMismatch {
            left: r.word().clone(),
            right: joined,
        });
    }
    let pair = Word::from_items(vec![a.clone(), a.invert()]);
    let word = y.concat(&pair).concat(z);
    let mut steps = Vec::with_capacity(r.len() + 1);
    steps.push(y.len());
    steps.extend_from_slice(r.steps());
    Ok(ReductionSequence::from_parts_unchecked(word, steps))
}

/// From a reduction of a word with a redex at `p`, a reduction of the word
/// with that redex removed.
pub fn drop_redex(r: &ReductionSequence, p: usize) -> Result<ReductionSequence, TransformError> {
    let (_, fronted) = front_reduction(r, p)?;
    let (_, tail) = fronted
        .split_first()
        .expect("a word with a redex has at least one step");
    Ok(tail)
}

/// Largest chain [`transform_to`] may produce for sequences of `k` steps.
pub fn transform_chain_bound(k: usize) -> usize {
    k * (k + 1) / 2 + k
}
