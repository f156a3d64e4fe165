//! Reduction sequences: witnesses that a word reduces to the empty word.
//!
//! A sequence is stored as the list of redex positions it reduces, each
//! position relative to the word left over by the preceding steps.

use std::fmt;

use thiserror::Error;

use crate::word::{SignedGenerator, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("step {step}: no redex at position {position}{}", describe_pair(.pair))]
    InvalidRedex {
        step: usize,
        position: usize,
        pair: Option<(SignedGenerator, SignedGenerator)>,
    },
    #[error("reduction ends at the nonempty word `{remaining}`")]
    IncompleteReduction { remaining: Word },
}

fn describe_pair(pair: &Option<(SignedGenerator, SignedGenerator)>) -> String {
    match pair {
        Some((x, y)) => format!(" (found `{x} {y}`)"),
        None => " (out of range)".to_owned(),
    }
}

fn pair_at(w: &Word, p: usize) -> Option<(SignedGenerator, SignedGenerator)> {
    Some((w.get(p)?.clone(), w.get(p.checked_add(1)?)?.clone()))
}

/// Removes the redex at `p`. Errors report step 0.
pub fn apply_step(w: &Word, p: usize) -> Result<Word, ReductionError> {
    apply_numbered_step(w, p, 0)
}

fn apply_numbered_step(w: &Word, p: usize, step: usize) -> Result<Word, ReductionError> {
    if w.is_redex_at(p) {
        Ok(w.remove_pair_unchecked(p))
    } else {
        Err(ReductionError::InvalidRedex {
            step,
            position: p,
            pair: pair_at(w, p),
        })
    }
}

/// A complete reduction of `word` to the empty word.
///
/// Values of this type are always valid: every step is a redex in its
/// context, the last step leaves the empty word, and there are exactly
/// `word.len() / 2` steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReductionSequence {
    word: Word,
    steps: Vec<usize>,
}

impl ReductionSequence {
    pub fn new(word: Word, steps: Vec<usize>) -> Result<Self, ReductionError> {
        let mut current = word.clone();
        for (i, &p) in steps.iter().enumerate() {
            current = apply_numbered_step(&current, p, i)?;
        }
        if !current.is_empty() {
            return Err(ReductionError::IncompleteReduction { remaining: current });
        }
        Ok(ReductionSequence { word, steps })
    }

    /// Caller guarantees validity.
    pub(crate) fn from_parts_unchecked(word: Word, steps: Vec<usize>) -> Self {
        debug_assert_eq!(word.len(), 2 * steps.len());
        ReductionSequence { word, steps }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The intermediate words, from `word` down to the empty word.
    pub fn run(&self) -> Vec<Word> {
        let mut trace = Vec::with_capacity(self.steps.len() + 1);
        let mut current = self.word.clone();
        for &p in &self.steps {
            let next = current.remove_pair_unchecked(p);
            trace.push(current);
            current = next;
        }
        trace.push(current);
        trace
    }

    /// The word in front of step `i`; `i == len()` gives the empty word.
    pub fn word_before(&self, i: usize) -> Word {
        self.steps[..i]
            .iter()
            .fold(self.word.clone(), |w, &p| w.remove_pair_unchecked(p))
    }

    /// For every index of the original word, the step that removes it.
    pub fn consumption(&self) -> Vec<usize> {
        let mut alive: Vec<usize> = (0..self.word.len()).collect();
        let mut step_of = vec![0; self.word.len()];
        for (step, &p) in self.steps.iter().enumerate() {
            step_of[alive[p]] = step;
            step_of[alive[p + 1]] = step;
            alive.drain(p..p + 2);
        }
        step_of
    }

    /// The step at which the item originally at `index` is removed.
    pub fn step_of_index(&self, index: usize) -> usize {
        assert!(
            index < self.word.len(),
            "index {index} out of range for a word of length {}",
            self.word.len()
        );
        self.consumption()[index]
    }

    /// Splits off the first step; the rest reduces the word after it.
    pub fn split_first(&self) -> Option<(usize, ReductionSequence)> {
        let (&first, rest) = self.steps.split_first()?;
        let tail = ReductionSequence {
            word: self.word.remove_pair_unchecked(first),
            steps: rest.to_vec(),
        };
        Some((first, tail))
    }

    pub fn into_parts(self) -> (Word, Vec<usize>) {
        (self.word, self.steps)
    }
}

impl fmt::Display for ReductionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::syntax::render_positions(&self.steps))
    }
}

pub fn validate_sequence(w: &Word, positions: &[usize]) -> Result<ReductionSequence, ReductionError> {
    ReductionSequence::new(w.clone(), positions.to_vec())
}

pub fn run_sequence(r: &ReductionSequence) -> Vec<Word> {
    r.run()
}

pub fn step_of_index(r: &ReductionSequence, index: usize) -> usize {
    r.step_of_index(index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn apply_step_examples() {
        assert_eq!(apply_step(&w("a a' b c c' b'"), 3).unwrap(), w("a a' b b'"));
        assert_eq!(apply_step(&w("a a'"), 0).unwrap(), Word::empty());
        assert_eq!(apply_step(&w("a a' a a'"), 1).unwrap(), w("a a'"));
    }

    #[test]
    fn apply_step_rejects_non_redex() {
        let err = apply_step(&w("a b"), 0).unwrap_err();
        assert!(matches!(err, ReductionError::InvalidRedex { position: 0, pair: Some(_), .. }));
        let err = apply_step(&w("a a'"), 1).unwrap_err();
        assert!(matches!(err, ReductionError::InvalidRedex { pair: None, .. }));
        assert!(apply_step(&w("a a"), 0).is_err());
    }

    #[test]
    fn validate_examples() {
        let word = w("a a' b c c' b'");
        assert!(validate_sequence(&word, &[3, 0, 0]).is_ok());
        // a a' first, then b c c' b' needs the inner pair next
        assert!(validate_sequence(&word, &[0, 1, 0]).is_ok());
        assert!(matches!(
            validate_sequence(&word, &[0, 0, 0]),
            Err(ReductionError::InvalidRedex { step: 1, position: 0, .. })
        ));
        assert!(validate_sequence(&Word::empty(), &[]).is_ok());
    }

    #[test]
    fn validate_errors() {
        let word = w("a a' b c c' b'");
        assert_eq!(
            validate_sequence(&word, &[3, 1, 0]).unwrap_err(),
            ReductionError::InvalidRedex {
                step: 1,
                position: 1,
                pair: Some((w("a'").items()[0].clone(), w("b").items()[0].clone())),
            }
        );
        assert!(matches!(
            validate_sequence(&word, &[3, 0]),
            Err(ReductionError::IncompleteReduction { .. })
        ));
        // too many steps run off the end
        assert!(matches!(
            validate_sequence(&word, &[3, 0, 0, 0]),
            Err(ReductionError::InvalidRedex { step: 3, .. })
        ));
        assert!(validate_sequence(&w("a"), &[]).is_err());
    }

    #[test]
    fn run_examples() {
        let r = validate_sequence(&w("a a' b c c' b'"), &[3, 0, 0]).unwrap();
        assert_eq!(
            run_sequence(&r),
            vec![w("a a' b c c' b'"), w("a a' b b'"), w("b b'"), Word::empty()]
        );
        let r = validate_sequence(&Word::empty(), &[]).unwrap();
        assert_eq!(run_sequence(&r), vec![Word::empty()]);
        let r = validate_sequence(&w("a a'"), &[0]).unwrap();
        assert_eq!(run_sequence(&r), vec![w("a a'"), Word::empty()]);
    }

    #[test]
    fn step_of_index_examples() {
        let r = validate_sequence(&w("a a' b c c' b'"), &[3, 0, 0]).unwrap();
        assert_eq!(step_of_index(&r, 3), 0);
        assert_eq!(step_of_index(&r, 0), 1);
        assert_eq!(r.consumption(), vec![1, 1, 2, 0, 0, 2]);
        let r = validate_sequence(&w("a a'"), &[0]).unwrap();
        assert_eq!(step_of_index(&r, 1), 0);
    }

    #[test]
    fn split_first_and_word_before() {
        let r = validate_sequence(&w("a a' b c c' b'"), &[3, 0, 0]).unwrap();
        let (first, tail) = r.split_first().unwrap();
        assert_eq!(first, 3);
        assert_eq!(tail.word(), &w("a a' b b'"));
        assert_eq!(tail.steps(), &[0, 0]);
        assert_eq!(r.word_before(2), w("b b'"));
        assert_eq!(r.word_before(3), Word::empty());
    }
}
