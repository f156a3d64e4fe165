//! The free group as redex-free words.

use std::collections::BTreeMap;
use std::fmt;

use crate::word::{Generator, Sign, SignedGenerator, Word};

/// A word with no redex. Its items are the canonical representative of a
/// free group element.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalWord(Word);

impl NormalWord {
    pub fn identity() -> Self {
        NormalWord(Word::empty())
    }

    /// `None` unless `w` is already redex-free.
    pub fn new(w: Word) -> Option<Self> {
        w.find_redexes().is_empty().then_some(NormalWord(w))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &NormalWord) -> NormalWord {
        mul(self, other)
    }

    pub fn inv(&self) -> NormalWord {
        inv(self)
    }
}

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl std::ops::Mul for &NormalWord {
    type Output = NormalWord;

    fn mul(self, rhs: &NormalWord) -> NormalWord {
        mul(self, rhs)
    }
}

/// Single left-to-right pass with a stack: an item that cancels the top of
/// the stack pops it, anything else is pushed.
pub fn normal_form(w: &Word) -> NormalWord {
    normal_form_with_witness(w).0
}

/// The normal form together with the positions of the redexes removed on
/// the way, in order. Replaying them with
/// [`apply_step`](crate::reduction::apply_step) from `w` ends at the
/// normal form.
pub fn normal_form_with_witness(w: &Word) -> (NormalWord, Vec<usize>) {
    let mut stack: Vec<SignedGenerator> = Vec::with_capacity(w.len());
    let mut witness = Vec::new();
    for item in w.items() {
        match stack.last() {
            Some(top) if top.cancels(item) => {
                // current word is stack ++ rest; the redex straddles its boundary
                witness.push(stack.len() - 1);
                stack.pop();
            }
            _ => stack.push(item.clone()),
        }
    }
    (NormalWord(Word::from_items(stack)), witness)
}

pub fn mul(u: &NormalWord, v: &NormalWord) -> NormalWord {
    normal_form(&u.0.concat(&v.0))
}

pub fn inv(u: &NormalWord) -> NormalWord {
    NormalWord(u.0.inverse())
}

/// Decides equality in the free group.
pub fn eq(u: &Word, v: &Word) -> bool {
    normal_form(u) == normal_form(v)
}

/// Raw prepend, no cancellation.
pub fn cons(c: &SignedGenerator, w: &Word) -> Word {
    w.prepend(c.clone())
}

/// Exponent sum per generator. Only nonzero sums are present.
pub fn abelianize(w: &Word) -> BTreeMap<Generator, i64> {
    let mut sums: BTreeMap<Generator, i64> = BTreeMap::new();
    for item in w.items() {
        let delta = match item.sign {
            Sign::Positive => 1,
            Sign::Negative => -1,
        };
        *sums.entry(item.generator.clone()).or_default() += delta;
    }
    sums.retain(|_, v| *v != 0);
    sums
}

/// `g^n` as a normal word (`g'^|n|` for negative `n`).
pub fn power(g: &Generator, n: i64) -> NormalWord {
    let item = if n >= 0 { g.positive() } else { g.negative() };
    NormalWord(Word::from_items(vec![item; n.unsigned_abs() as usize]))
}
