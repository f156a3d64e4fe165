//! Brute-force reference computations shared by the integration tests.
//! None of these go through the normal-form stack or the enumerator.

#![allow(dead_code)]

use std::collections::BTreeSet;

use freegroup::reduction::apply_step;
use freegroup::{validate_sequence, Word};

/// Every word reachable by a maximal chain of redex removals, trying every
/// redex at every step.
pub fn terminal_words(w: &Word) -> BTreeSet<Word> {
    let redexes: Vec<usize> = (0..w.len()).filter(|&p| w.is_redex_at(p)).collect();
    if redexes.is_empty() {
        return BTreeSet::from([w.clone()]);
    }
    redexes
        .into_iter()
        .flat_map(|p| terminal_words(&apply_step(w, p).unwrap()))
        .collect()
}

/// All valid position lists, found by trying every list in
/// `[0, len)^(len/2)` against `validate_sequence`.
pub fn brute_force_sequences(w: &Word) -> BTreeSet<Vec<usize>> {
    if w.len() % 2 == 1 {
        return BTreeSet::new();
    }
    let k = w.len() / 2;
    let mut out = BTreeSet::new();
    let mut candidate = vec![0usize; k];
    loop {
        if validate_sequence(w, &candidate).is_ok() {
            out.insert(candidate.clone());
        }
        // odometer over [0, len)^k
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            candidate[i] += 1;
            if candidate[i] < w.len().max(1) {
                break;
            }
            candidate[i] = 0;
            i += 1;
        }
    }
}
