//! Text and JSON forms of words, position lists and reduction traces.
//!
//! ```text
//! word  := token*                    (whitespace separated)
//! token := identifier | identifier "'"
//! identifier := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! A trailing apostrophe marks the inverse generator, so `a a' b` is
//! `a ā b`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::reduction::{apply_step, ReductionError, ReductionSequence};
use crate::word::{is_identifier, Generator, Sign, SignedGenerator, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message} `{token}`")]
pub struct ParseError {
    pub offset: usize,
    pub token: String,
    pub message: &'static str,
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split(|c: char| c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(move |t| (t.as_ptr() as usize - text.as_ptr() as usize, t))
}

pub fn parse_signed_generator(token: &str) -> Option<SignedGenerator> {
    let (name, sign) = match token.strip_suffix('\'') {
        Some(name) => (name, Sign::Negative),
        None => (token, Sign::Positive),
    };
    if !is_identifier(name) {
        return None;
    }
    Some(SignedGenerator::new(Generator::new(name).ok()?, sign))
}

pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    tokens(text)
        .map(|(offset, token)| {
            parse_signed_generator(token).ok_or_else(|| ParseError {
                offset,
                token: token.to_owned(),
                message: "invalid token",
            })
        })
        .collect()
}

/// Positions separated by commas and/or whitespace, e.g. `3,0,0`.
pub fn parse_positions(text: &str) -> Result<Vec<usize>, ParseError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            let offset = t.as_ptr() as usize - text.as_ptr() as usize;
            let err = || ParseError {
                offset,
                token: t.to_owned(),
                message: "invalid position",
            };
            if !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            t.parse().map_err(|_| err())
        })
        .collect()
}

pub fn render_positions(positions: &[usize]) -> String {
    positions
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// One line per intermediate word. Every line after the first is prefixed
/// by the redex the step removed: `-[c c']-> a a' b b'`. The last line ends
/// in `nil`.
pub fn render_trace(r: &ReductionSequence) -> Vec<String> {
    render_steps(r.word(), r.steps()).expect("reduction sequences are valid")
}

/// Like [`render_trace`], for any run of valid steps; the last line is
/// whatever word the steps leave.
pub fn render_steps(word: &Word, positions: &[usize]) -> Result<Vec<String>, ReductionError> {
    let mut lines = Vec::with_capacity(positions.len() + 1);
    lines.push(word.to_text_or_nil());
    let mut current = word.clone();
    for (step, &p) in positions.iter().enumerate() {
        let next = apply_step(&current, p).map_err(|e| match e {
            ReductionError::InvalidRedex { position, pair, .. } => ReductionError::InvalidRedex { step, position, pair },
            other => other,
        })?;
        let (x, y) = (&current.items()[p], &current.items()[p + 1]);
        lines.push(format!("-[{x} {y}]-> {}", next.to_text_or_nil()));
        current = next;
    }
    Ok(lines)
}

/// `{"word": "a a' b b'", "steps": [0, 0]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDoc {
    pub word: String,
    pub steps: Vec<usize>,
}

#[derive(Debug, Error)]
pub enum SequenceDocError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
}

impl SequenceDoc {
    pub fn from_sequence(r: &ReductionSequence) -> Self {
        SequenceDoc {
            word: r.word().to_string(),
            steps: r.steps().to_vec(),
        }
    }

    pub fn to_sequence(&self) -> Result<ReductionSequence, SequenceDocError> {
        let word = parse_word(&self.word)?;
        Ok(ReductionSequence::new(word, self.steps.clone())?)
    }
}
