//! Signed generators and words over them.
//!
//! A word is a finite list of generators, each tagged positive (the generator
//! itself) or negative (its formal inverse). A *redex* is an adjacent pair
//! `x x̄`; positions are 0-based and a redex at `p` occupies `p` and `p + 1`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// A generator name: `[A-Za-z_][A-Za-z0-9_]*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(Arc<str>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid generator name {0:?}")]
pub struct InvalidGenerator(pub String);

impl Generator {
    pub fn new(name: &str) -> Result<Self, InvalidGenerator> {
        if is_identifier(name) {
            Ok(Generator(Arc::from(name)))
        } else {
            Err(InvalidGenerator(name.to_owned()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    pub fn positive(&self) -> SignedGenerator {
        SignedGenerator::new(self.clone(), Sign::Positive)
    }

    pub fn negative(&self) -> SignedGenerator {
        SignedGenerator::new(self.clone(), Sign::Negative)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// An element of `A + A`: a generator together with a sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedGenerator {
    pub generator: Generator,
    pub sign: Sign,
}

impl SignedGenerator {
    pub fn new(generator: Generator, sign: Sign) -> Self {
        SignedGenerator { generator, sign }
    }

    /// Same generator, opposite sign. An involution.
    pub fn invert(&self) -> SignedGenerator {
        SignedGenerator::new(self.generator.clone(), self.sign.flip())
    }

    /// True iff `self` followed by `other` is a redex.
    pub fn cancels(&self, other: &SignedGenerator) -> bool {
        self.generator == other.generator && self.sign != other.sign
    }
}

impl fmt::Display for SignedGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Positive => write!(f, "{}", self.generator),
            Sign::Negative => write!(f, "{}'", self.generator),
        }
    }
}

/// Free function form of [`SignedGenerator::invert`].
pub fn invert(s: &SignedGenerator) -> SignedGenerator {
    s.invert()
}

/// A finite sequence of signed generators. Displayed in the whitespace
/// separated text form, e.g. `a a' b`; the empty word displays as `""`.
///
/// Words are immutable and cloning shares the item buffer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    items: Arc<[SignedGenerator]>,
}

impl Default for Word {
    fn default() -> Self {
        Word::empty()
    }
}

impl Word {
    pub fn empty() -> Self {
        Word::from_items(Vec::new())
    }

    pub fn from_items(items: Vec<SignedGenerator>) -> Self {
        Word { items: items.into() }
    }

    pub fn items(&self) -> &[SignedGenerator] {
        &self.items
    }

    pub fn into_items(self) -> Vec<SignedGenerator> {
        self.items.to_vec()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&SignedGenerator> {
        self.items.get(index)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut items = Vec::with_capacity(self.len() + other.len());
        items.extend_from_slice(&self.items);
        items.extend_from_slice(&other.items);
        Word::from_items(items)
    }

    /// `c` followed by `self`, without any cancellation.
    pub fn prepend(&self, c: SignedGenerator) -> Word {
        let mut items = Vec::with_capacity(self.len() + 1);
        items.push(c);
        items.extend_from_slice(&self.items);
        Word::from_items(items)
    }

    /// Out-of-range positions are not redexes.
    pub fn is_redex_at(&self, p: usize) -> bool {
        match (self.items.get(p), p.checked_add(1).and_then(|q| self.items.get(q))) {
            (Some(x), Some(y)) => x.cancels(y),
            _ => false,
        }
    }

    pub fn find_redexes(&self) -> Vec<usize> {
        self.items
            .windows(2)
            .enumerate()
            .filter(|(_, pair)| pair[0].cancels(&pair[1]))
            .map(|(p, _)| p)
            .collect()
    }

    /// Removes the pair at `p` and `p + 1` without checking it is a redex.
    pub(crate) fn remove_pair_unchecked(&self, p: usize) -> Word {
        let mut items = Vec::with_capacity(self.len() - 2);
        items.extend_from_slice(&self.items[..p]);
        items.extend_from_slice(&self.items[p + 2..]);
        Word::from_items(items)
    }

    /// Reversed, with every sign flipped.
    pub fn inverse(&self) -> Word {
        self.items.iter().rev().map(SignedGenerator::invert).collect()
    }

    /// Renders the word, using `nil` for the empty word.
    pub fn to_text_or_nil(&self) -> String {
        if self.is_empty() {
            "nil".to_owned()
        } else {
            self.to_string()
        }
    }
}

impl From<Vec<SignedGenerator>> for Word {
    fn from(items: Vec<SignedGenerator>) -> Self {
        Word::from_items(items)
    }
}

impl FromIterator<SignedGenerator> for Word {
    fn from_iter<I: IntoIterator<Item = SignedGenerator>>(iter: I) -> Self {
        Word {
            items: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, item) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{item}")?;
        }
        Ok(())
    }
}

pub fn concat(x: &Word, y: &Word) -> Word {
    x.concat(y)
}

pub fn is_redex_at(w: &Word, p: usize) -> bool {
    w.is_redex_at(p)
}

pub fn find_redexes(w: &Word) -> Vec<usize> {
    w.find_redexes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn invert_flips_sign() {
        let a = Generator::new("a").unwrap();
        assert_eq!(a.positive().invert(), a.negative());
        let c = Generator::new("c").unwrap();
        assert_eq!(invert(&c.negative()), c.positive());
        let b = Generator::new("b").unwrap().negative();
        assert_eq!(b.invert().invert(), b);
    }

    #[test]
    fn generator_names() {
        assert!(Generator::new("x_1").is_ok());
        assert!(Generator::new("_").is_ok());
        assert!(Generator::new("").is_err());
        assert!(Generator::new("1a").is_err());
        assert!(Generator::new("a'").is_err());
    }

    #[test]
    fn concat_examples() {
        assert_eq!(concat(&w("a b"), &w("c d")), w("a b c d"));
        assert_eq!(concat(&w(""), &w("a")), w("a"));
        assert_eq!(concat(&w("a"), &w("")), w("a"));
        assert_eq!(w("a b").concat(&w("c")).len(), 3);
    }

    #[test]
    fn redex_detection() {
        let x = w("a a' b");
        assert!(is_redex_at(&x, 0));
        assert!(!is_redex_at(&x, 1));
        assert!(!is_redex_at(&x, 2));
        assert!(!is_redex_at(&x, usize::MAX));
        let y = w("a a' a a'");
        assert!((0..3).all(|p| y.is_redex_at(p)));
    }

    #[test]
    fn find_redexes_examples() {
        assert_eq!(find_redexes(&w("a a' b c c' b'")), vec![0, 3]);
        assert_eq!(find_redexes(&w("")), Vec::<usize>::new());
        assert_eq!(find_redexes(&w("a a' a a'")), vec![0, 1, 2]);
        assert_eq!(find_redexes(&w("a' a")), vec![0]);
        assert_eq!(find_redexes(&w("a a b")), Vec::<usize>::new());
    }

    #[test]
    fn inverse_reverses_and_flips() {
        assert_eq!(w("a b'").inverse(), w("b a'"));
        assert_eq!(Word::empty().inverse(), Word::empty());
    }

    #[test]
    fn nil_rendering() {
        assert_eq!(Word::empty().to_text_or_nil(), "nil");
        assert_eq!(w("a  b'").to_text_or_nil(), "a b'");
    }
}
