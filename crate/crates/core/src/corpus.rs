//! Word generators for exhaustive and randomized checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::group::normal_form;
use crate::word::{Generator, SignedGenerator, Word};

fn signed_alphabet(alphabet: &[Generator]) -> Vec<SignedGenerator> {
    alphabet
        .iter()
        .flat_map(|g| [g.positive(), g.negative()])
        .collect()
}

/// Every word of exactly `len` items, in lexicographic order of the signed
/// alphabet `a, a', b, b', ...`.
pub fn words_of_length(alphabet: &[Generator], len: usize) -> Vec<Word> {
    let letters = signed_alphabet(alphabet);
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<SignedGenerator>| {
                letters.iter().map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x.clone());
                    next
                })
            })
            .collect();
    }
    if letters.is_empty() && len > 0 {
        return Vec::new();
    }
    out.into_iter().map(Word::from_items).collect()
}

/// Every word of length at most `max_len`.
pub fn words_up_to(alphabet: &[Generator], max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|n| words_of_length(alphabet, n)).collect()
}

/// Every word of length at most `max_len` that reduces to the empty word.
pub fn reducible_words_up_to(alphabet: &[Generator], max_len: usize) -> Vec<Word> {
    (0..=max_len)
        .step_by(2)
        .flat_map(|n| words_of_length(alphabet, n))
        .filter(|w| normal_form(w).is_identity())
        .collect()
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, alphabet: &[Generator], len: usize) -> Word {
    let letters = signed_alphabet(alphabet);
    (0..len)
        .map(|_| letters.choose(rng).expect("nonempty alphabet").clone())
        .collect()
}

/// A word reducing to the empty word, built by inserting `pairs` redexes
/// `x x̄` at random places.
pub fn random_reducible_word<R: Rng + ?Sized>(rng: &mut R, alphabet: &[Generator], pairs: usize) -> Word {
    let letters = signed_alphabet(alphabet);
    let mut items: Vec<SignedGenerator> = Vec::with_capacity(2 * pairs);
    for _ in 0..pairs {
        let x = letters.choose(rng).expect("nonempty alphabet").clone();
        let at = rng.gen_range(0..=items.len());
        let inv = x.invert();
        items.splice(at..at, [x, inv]);
    }
    Word::from_items(items)
}

/// Generators named by `names`, e.g. `["a", "b"]`.
pub fn alphabet(names: &[&str]) -> Vec<Generator> {
    names
        .iter()
        .map(|n| Generator::new(n).expect("valid generator name"))
        .collect()
}
