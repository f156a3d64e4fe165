mod common;

use std::collections::{BTreeMap, BTreeSet};

use freegroup::corpus::{alphabet, random_reducible_word, reducible_words_up_to, words_up_to};
use freegroup::group::{abelianize, cons, eq, inv, mul, normal_form, normal_form_with_witness, power};
use freegroup::moves::applicable_moves;
use freegroup::oracle::enumerate_sequences;
use freegroup::reduction::apply_step;
use freegroup::transform::{drop_redex, extend_reduction, front_reduction, transform_chain_bound, transform_to};
use freegroup::{
    apply_chain, parse_word, validate_sequence, Generator, OracleConfig, ReductionSequence, Sign,
    SignedGenerator, Word,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const NAMES: [&str; 3] = ["a", "b", "c"];

fn signed(i: usize, negative: bool) -> SignedGenerator {
    let g = Generator::new(NAMES[i]).unwrap();
    SignedGenerator::new(g, if negative { Sign::Negative } else { Sign::Positive })
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..3usize, any::<bool>()), 0..=max_len)
        .prop_map(|v| v.into_iter().map(|(i, n)| signed(i, n)).collect())
}

fn reducible_strategy(min_pairs: usize, max_pairs: usize) -> impl Strategy<Value = Word> {
    (any::<u64>(), min_pairs..=max_pairs).prop_map(|(seed, pairs)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_reducible_word(&mut rng, &alphabet(&NAMES), pairs)
    })
}

/// A reducible word together with one of its sequences, chosen by index.
fn sequence_strategy(min_pairs: usize, max_pairs: usize) -> impl Strategy<Value = ReductionSequence> {
    (reducible_strategy(min_pairs, max_pairs), any::<prop::sample::Index>()).prop_map(|(w, idx)| {
        let all = enumerate_sequences(&w, &OracleConfig::default()).unwrap();
        all[idx.index(all.len())].clone()
    })
}

fn sequence_pair_strategy(max_pairs: usize) -> impl Strategy<Value = (ReductionSequence, ReductionSequence)> {
    (reducible_strategy(0, max_pairs), any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_map(
        |(w, i, j)| {
            let all = enumerate_sequences(&w, &OracleConfig::default()).unwrap();
            (all[i.index(all.len())].clone(), all[j.index(all.len())].clone())
        },
    )
}

proptest! {
    #[test]
    fn invert_is_an_involution(i in 0..3usize, n in any::<bool>()) {
        let s = signed(i, n);
        prop_assert_eq!(s.invert().invert(), s.clone());
        prop_assert_eq!(s.invert().generator, s.generator.clone());
        prop_assert_ne!(s.invert().sign, s.sign);
    }

    #[test]
    fn concat_is_a_monoid(x in word_strategy(6), y in word_strategy(6), z in word_strategy(6)) {
        prop_assert_eq!(x.concat(&y.concat(&z)), x.concat(&y).concat(&z));
        prop_assert_eq!(x.concat(&Word::empty()), x.clone());
        prop_assert_eq!(Word::empty().concat(&x), x.clone());
        prop_assert_eq!(x.concat(&y).len(), x.len() + y.len());
    }

    #[test]
    fn redex_characterisation(w in word_strategy(10), p in 0..12usize) {
        let expected = p + 1 < w.len()
            && w.items()[p].generator == w.items()[p + 1].generator
            && w.items()[p].sign != w.items()[p + 1].sign;
        prop_assert_eq!(w.is_redex_at(p), expected);
        let listed: Vec<usize> = (0..w.len()).filter(|&q| w.is_redex_at(q)).collect();
        prop_assert_eq!(w.find_redexes(), listed);
    }

    #[test]
    fn traces_shrink_by_two(r in sequence_strategy(0, 6)) {
        let trace = r.run();
        prop_assert_eq!(trace.len(), r.len() + 1);
        prop_assert!(trace.last().unwrap().is_empty());
        for pair in trace.windows(2) {
            prop_assert_eq!(pair[0].len(), pair[1].len() + 2);
        }
        prop_assert_eq!(r.len() * 2, r.word().len());
    }

    #[test]
    fn removed_items_are_the_word(r in sequence_strategy(0, 6)) {
        let trace = r.run();
        let mut removed: Vec<SignedGenerator> = r
            .steps()
            .iter()
            .zip(&trace)
            .flat_map(|(&p, w)| [w.items()[p].clone(), w.items()[p + 1].clone()])
            .collect();
        let mut items = r.word().items().to_vec();
        removed.sort();
        items.sort();
        prop_assert_eq!(removed, items);
    }

    #[test]
    fn consumption_pairs_up_indices(r in sequence_strategy(0, 6)) {
        let consumed = r.consumption();
        let mut per_step = vec![0; r.len()];
        for &s in &consumed {
            per_step[s] += 1;
        }
        prop_assert!(per_step.iter().all(|&c| c == 2));
        prop_assert_eq!(consumed.len(), r.word().len());
        for (i, &step) in consumed.iter().enumerate() {
            prop_assert_eq!(r.step_of_index(i), step);
        }
    }

    #[test]
    fn moves_preserve_validity(r in sequence_strategy(0, 6)) {
        for (mv, next) in applicable_moves(&r) {
            prop_assert_eq!(next.word(), r.word());
            prop_assert!(validate_sequence(next.word(), next.steps()).is_ok());
            let changed: Vec<usize> = (0..r.len()).filter(|&i| r.steps()[i] != next.steps()[i]).collect();
            prop_assert!(!changed.is_empty() && changed.len() <= 2);
            prop_assert!(changed.iter().all(|&i| i == mv.at || i == mv.at + 1));
            prop_assert_eq!(mv.inverse().apply(&next).unwrap(), r.clone());
        }
    }

    #[test]
    fn swaps_lift_to_disjoint_redexes(r in sequence_strategy(0, 6)) {
        for i in 0..r.len().saturating_sub(1) {
            if let Ok(next) = freegroup::swap(&r, i) {
                let before = r.word_before(i);
                let (p, x) = (r.steps()[i], next.steps()[i]);
                prop_assert!(before.is_redex_at(p) && before.is_redex_at(x));
                prop_assert!(x + 1 < p || p + 1 < x);
            }
        }
    }

    #[test]
    fn transform_to_replays((r, s) in sequence_pair_strategy(6)) {
        let chain = transform_to(&r, &s).unwrap();
        prop_assert_eq!(apply_chain(&r, &chain).unwrap(), s);
        prop_assert!(chain.len() <= transform_chain_bound(r.len()));
    }

    #[test]
    fn front_reduction_contract(r in sequence_strategy(1, 6), pick in any::<prop::sample::Index>()) {
        let redexes = r.word().find_redexes();
        let p = redexes[pick.index(redexes.len())];
        let (chain, out) = front_reduction(&r, p).unwrap();
        prop_assert_eq!(out.steps()[0], p);
        prop_assert!(validate_sequence(out.word(), out.steps()).is_ok());
        prop_assert_eq!(apply_chain(&r, &chain).unwrap(), out);
        prop_assert!(chain.len() <= r.len());
    }

    #[test]
    fn extend_then_drop_round_trips(
        seed in any::<u64>(),
        pairs in 0..5usize,
        cut in any::<prop::sample::Index>(),
        pick in any::<prop::sample::Index>(),
        i in 0..3usize,
        n in any::<bool>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_reducible_word(&mut rng, &alphabet(&NAMES), pairs);
        let all = enumerate_sequences(&w, &OracleConfig::default()).unwrap();
        let r = all[pick.index(all.len())].clone();
        let at = cut.index(w.len() + 1);
        let y = Word::from_items(w.items()[..at].to_vec());
        let z = Word::from_items(w.items()[at..].to_vec());
        let extended = extend_reduction(&y, &signed(i, n), &z, &r).unwrap();
        prop_assert!(validate_sequence(extended.word(), extended.steps()).is_ok());
        prop_assert_eq!(drop_redex(&extended, at).unwrap(), r);
    }

    #[test]
    fn drop_redex_lands_on_the_reduced_word(r in sequence_strategy(1, 5), pick in any::<prop::sample::Index>()) {
        let redexes = r.word().find_redexes();
        let p = redexes[pick.index(redexes.len())];
        let dropped = drop_redex(&r, p).unwrap();
        prop_assert_eq!(dropped.word(), &apply_step(r.word(), p).unwrap());
        prop_assert!(validate_sequence(dropped.word(), dropped.steps()).is_ok());
    }

    #[test]
    fn normal_form_is_idempotent(w in word_strategy(12)) {
        let n = normal_form(&w);
        prop_assert!(n.word().find_redexes().is_empty());
        prop_assert_eq!(normal_form(n.word()), n.clone());
        let (again, witness) = normal_form_with_witness(&w);
        prop_assert_eq!(&again, &n);
        prop_assert_eq!(witness.len() * 2 + n.word().len(), w.len());
        let end = witness.iter().fold(w.clone(), |cur, &p| apply_step(&cur, p).unwrap());
        prop_assert_eq!(&end, n.word());
    }

    #[test]
    fn group_laws(u in word_strategy(10), v in word_strategy(10), x in word_strategy(10)) {
        let (u, v, x) = (normal_form(&u), normal_form(&v), normal_form(&x));
        prop_assert_eq!(mul(&mul(&u, &v), &x), mul(&u, &mul(&v, &x)));
        let e = freegroup::NormalWord::identity();
        prop_assert_eq!(mul(&u, &e), u.clone());
        prop_assert_eq!(mul(&e, &u), u.clone());
        prop_assert!(mul(&u, &inv(&u)).is_identity());
        prop_assert!(mul(&inv(&u), &u).is_identity());
        prop_assert!(inv(&u).word().find_redexes().is_empty());
    }

    #[test]
    fn eq_matches_brute_force(u in word_strategy(8), v in word_strategy(8)) {
        let tu = common::terminal_words(&u);
        let tv = common::terminal_words(&v);
        prop_assert_eq!(tu.len(), 1);
        prop_assert_eq!(eq(&u, &v), tu == tv);
    }

    #[test]
    fn abelianization(u in word_strategy(10), v in word_strategy(10), p in 0..10usize) {
        let (nu, nv) = (normal_form(&u), normal_form(&v));
        let mut sum = abelianize(nu.word());
        for (g, k) in abelianize(nv.word()) {
            *sum.entry(g).or_default() += k;
        }
        sum.retain(|_, k| *k != 0);
        prop_assert_eq!(abelianize(mul(&nu, &nv).word()), sum);
        if u.is_redex_at(p) {
            prop_assert_eq!(abelianize(&apply_step(&u, p).unwrap()), abelianize(&u));
        }
        prop_assert_eq!(abelianize(&u), abelianize(nu.word()));
    }

    #[test]
    fn prepend_inverse_cancels(w in word_strategy(8), i in 0..3usize, n in any::<bool>()) {
        let c = signed(i, n);
        prop_assert_eq!(normal_form(&cons(&c, &cons(&c.invert(), &w))), normal_form(&w));
        prop_assert_eq!(cons(&c, &w).len(), w.len() + 1);
    }
}

#[test]
fn confluence_up_to_length_eight() {
    for w in words_up_to(&alphabet(&["a", "b"]), 8) {
        let terminals = common::terminal_words(&w);
        assert_eq!(terminals, BTreeSet::from([normal_form(&w).into_word()]), "word {w}");
    }
}

#[test]
fn enumeration_matches_brute_force() {
    let cfg = OracleConfig::default();
    for w in words_up_to(&alphabet(&["a", "b"]), 6) {
        let listed: Vec<Vec<usize>> = enumerate_sequences(&w, &cfg)
            .unwrap()
            .iter()
            .map(|r| r.steps().to_vec())
            .collect();
        let unique: BTreeSet<Vec<usize>> = listed.iter().cloned().collect();
        assert_eq!(unique.len(), listed.len(), "duplicates for {w}");
        assert_eq!(unique, common::brute_force_sequences(&w), "word {w}");
    }
}

#[test]
fn reducible_iff_sequences_exist() {
    let cfg = OracleConfig::default();
    let reducible: BTreeSet<Word> = reducible_words_up_to(&alphabet(&["a", "b"]), 6).into_iter().collect();
    for w in words_up_to(&alphabet(&["a", "b"]), 6) {
        let has = !enumerate_sequences(&w, &cfg).unwrap().is_empty();
        assert_eq!(has, normal_form(&w).is_identity(), "word {w}");
        assert_eq!(has, reducible.contains(&w));
    }
}

#[test]
fn single_generator_is_the_integers() {
    let g = Generator::new("a").unwrap();
    let mut seen = BTreeMap::new();
    for w in words_up_to(&alphabet(&["a"]), 10) {
        let n = normal_form(&w);
        let sum: i64 = abelianize(n.word()).values().sum();
        assert_eq!(n, power(&g, sum));
        seen.insert(sum, n);
    }
    assert_eq!(seen.keys().copied().collect::<Vec<_>>(), (-10..=10).collect::<Vec<_>>());
    for (x, u) in &seen {
        for (y, v) in &seen {
            assert_eq!(mul(u, v), power(&g, x + y));
        }
    }
}

#[test]
fn sample_sequence_matches_hand_execution() {
    let w = parse_word("a a' b c c' b'").unwrap();
    let r = validate_sequence(&w, &[3, 0, 0]).unwrap();
    assert_eq!(
        r.run().iter().map(Word::to_text_or_nil).collect::<Vec<_>>(),
        vec!["a a' b c c' b'", "a a' b b'", "b b'", "nil"]
    );
}
