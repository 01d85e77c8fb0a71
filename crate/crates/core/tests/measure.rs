mod common;

use std::collections::BTreeSet;

use common::*;
use mk1::element::Mk1Element;
use mk1::error::Error;
use mk1::green;
use mk1::measure::*;
use mk1::plep::{GeneratorWord, Gate, Symbol};
use mk1::words::Word;
use proptest::prelude::*;
use rand::Rng;

fn truth_table(r: &mut rand::rngs::StdRng, m: usize, n: usize) -> Vec<bool> {
    (0..1usize << (m + n)).map(|_| r.gen_bool(0.5)).collect()
}

/// Brute-force `(N1, N0)`.
fn count_oracle(table: &[bool], m: usize, n: usize) -> (u64, u64) {
    let mut out = (0, 0);
    for y in 0..1usize << n {
        let col: Vec<bool> = (0..1usize << m).map(|x| table[x | y << m]).collect();
        if col.iter().all(|&v| v) {
            out.0 += 1;
        }
        if col.iter().all(|&v| !v) {
            out.1 += 1;
        }
    }
    out
}

fn bits(v: usize, len: usize) -> Vec<u8> {
    (0..len).map(|j| (v >> j & 1) as u8).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn fibers_are_trie_languages(s in any::<u64>(), k in 2u32..=3) {
        let e = random_element(&mut rng(s), alpha(k), 3);
        for (y, fiber) in e.image_code_table().fibers() {
            let d = trie_dfa(e.alphabet(), &fiber).unwrap();
            prop_assert_eq!(d.language(fiber.iter().map(Word::len).max().unwrap()), fiber.clone());
            prop_assert_eq!(ratio(&dfa_measure(&d).unwrap()), mu_oracle(k, &fiber));
            prop_assert_eq!(preimage_measure(&e, &y).unwrap(), dfa_measure(&d).unwrap());
            prop_assert_eq!(AcyclicDfa::parse(None, &d.to_string()).unwrap(), d);
        }
    }

    #[test]
    fn automaton_heights_agree(s in any::<u64>(), k in 2u32..=3) {
        let e = random_element(&mut rng(s), alpha(k), 3);
        let h = heights_via_dfa(&e);
        prop_assert_eq!(h.height_r, green::height_r(&e));
        prop_assert_eq!(h.noncoll, green::height_l(&e));
        prop_assert_eq!(h.coll, green::coll(&e));
        prop_assert_eq!(h.mu_dom, e.image_code_table().domain_code().mu());
    }

    #[test]
    fn injective_preimages_are_min_reps(s in any::<u64>(), k in 2u32..=3) {
        let e = random_injective(&mut rng(s), alpha(k), 3);
        for (_, y) in e.image_code_table().rows() {
            prop_assert_eq!(preimage_measure(&e, y).unwrap(), min_rep_measure(&e, y).unwrap());
        }
    }

    #[test]
    fn counts_match_brute_force(s in any::<u64>(), m in 1usize..=3, n in 1usize..=3) {
        let r = &mut rng(s);
        let t = truth_table(r, m, n);
        let b = BooleanFormula::from_truth_table(m, n, &t).unwrap();
        for x in 0..1usize << m {
            for y in 0..1usize << n {
                prop_assert_eq!(b.eval(x as u64, y as u64), t[x | y << m]);
            }
        }
        prop_assert_eq!(count_forall_sat(&b).unwrap(), count_oracle(&t, m, n));
        let again = BooleanFormula::parse(&b.to_string()).unwrap();
        prop_assert_eq!(count_forall_sat(&again).unwrap(), count_forall_sat(&b).unwrap());
        let sur = ensure_surjectivity(&b).unwrap();
        prop_assert_eq!(count_forall_sat(&sur).unwrap().0, count_oracle(&t, m, n).0);
        prop_assert_eq!(count_forall_sat(&sur).unwrap().1, 0);
    }

    #[test]
    fn phi_b_identity(s in any::<u64>(), n in 1usize..=3) {
        let r = &mut rng(s);
        let t = truth_table(r, n, n);
        let b = ensure_surjectivity(&BooleanFormula::from_truth_table(n, n, &t).unwrap()).unwrap();
        let (count, _) = count_forall_sat(&b).unwrap();
        let phi = phi_b(&b).unwrap();
        let noncoll = green::height_l(&phi);
        prop_assert_eq!(&noncoll, &expected_noncoll(b.m(), b.n(), count));
        prop_assert_eq!(recover_count(&noncoll, b.m(), b.n()).unwrap(), count);
    }

    #[test]
    fn padding_has_fixed_length(s in any::<u64>(), k in 2u32..=4, p in 0usize..=5) {
        let r = &mut rng(s);
        let a = alpha(k);
        let w = random_word(r, a, 0, 5);
        match pad_encode(a, &w, p) {
            Ok(v) => {
                prop_assert_eq!(v.len(), 2 * p);
                let evens: Vec<u8> = v.letters().iter().step_by(2).copied().take(w.len()).collect();
                prop_assert_eq!(evens.as_slice(), w.letters());
            }
            Err(e) => {
                prop_assert_eq!(e, Error::TooLong);
                prop_assert!(w.len() > p);
            }
        }
    }

    #[test]
    fn preimage_length_bound(s in any::<u64>()) {
        let r = &mut rng(s);
        let a = alpha(2);
        let pool = [Gate::And, Gate::Or, Gate::Not, Gate::Fork, Gate::Proj2, Gate::Guard, Gate::Eq(0), Gate::Eq(1)];
        let len = r.gen_range(1..=5);
        let word = GeneratorWord(
            (0..len)
                .map(|_| if r.gen_bool(0.2) { Symbol::Tau(r.gen_range(1..=3)) } else { Symbol::Gate(pool[r.gen_range(0..pool.len())]) })
                .collect(),
        );
        for y in words_between(a, 0, 6) {
            prop_assert!(length_bound_check(a, &word, &y).unwrap());
        }
    }
}

#[test]
fn small_measures() {
    let a = alpha(2);
    let d = trie_dfa(a, &words(&["a", "ba", "bb"]).into_iter().collect()).unwrap();
    assert_eq!(dfa_measure(&d).unwrap(), mk1::kary::KRational::one(2));
    let d = trie_dfa(a, &words(&["ab", "bb"]).into_iter().collect()).unwrap();
    assert_eq!(d.num_states(), 3);
    assert!(trie_dfa(a, &words(&["a", "ab"]).into_iter().collect()).is_err());
    assert!(trie_dfa(a, &BTreeSet::new()).is_err());
    let cyclic = AcyclicDfa::parse(Some(2), "start: q0\naccept: q1\nq0 --a--> q1\nq1 --a--> q0\n");
    assert!(cyclic.is_err() || state_measures(&cyclic.unwrap()).is_err());
}

/// Reading the output block as the quantified one breaks the counting identity.
#[test]
fn block_order_matters() {
    let n = 2;
    // B(x, y) = [y = 0] ∨ x_1: columns y = 0 are constantly 1, others mixed.
    let t: Vec<bool> = (0..16).map(|i| (i >> 2) == 0 || i & 1 == 1).collect();
    let b = BooleanFormula::from_truth_table(n, n, &t).unwrap();
    let (count, zeros) = count_forall_sat(&b).unwrap();
    assert_eq!((count, zeros), (1, 0));
    let good = green::height_l(&phi_b(&b).unwrap());
    assert_eq!(good, expected_noncoll(n, n, count));
    let mut rows = Vec::new();
    for u in 0..4usize {
        for v in 0..4usize {
            let dom = [vec![0], bits(u, n), bits(v, n)].concat();
            let img = [vec![t[u | v << n] as u8], bits(u, n)].concat();
            rows.push((Word::new(dom), Word::new(img)));
        }
        for w in 0..8usize {
            rows.push((Word::new([vec![1], bits(u, n), bits(w, n + 1)].concat()), Word::new([vec![0], bits(u, n)].concat())));
        }
    }
    let literal = Mk1Element::from_rows(alpha(2), rows).unwrap();
    assert_ne!(green::height_l(&literal), expected_noncoll(n, n, count));
}

#[test]
fn formula_text() {
    let b = BooleanFormula::parse("m=1 n=1\n# xnor\n(x1 & y1) | (!x1 & !y1)\n").unwrap();
    assert_eq!(count_forall_sat(&b).unwrap(), (0, 0));
    assert!(BooleanFormula::parse("m=1 n=1\nx3\n").is_err());
    assert!(BooleanFormula::parse("m=1 n=1\nx1 &\n").is_err());
    let one = BooleanFormula::parse("m=2 n=2\n1\n").unwrap();
    assert_eq!(count_forall_sat(&one).unwrap(), (4, 0));
    assert_eq!(recover_count(&green::height_l(&phi_b(&one).unwrap()), 2, 2).unwrap(), 4);
    let zero = BooleanFormula::parse("m=1 n=1\n0\n").unwrap();
    assert_eq!(phi_b(&zero), Err(Error::NotSurjective));
}

#[test]
fn completion_to_fixed_length() {
    let pairs = vec![(Word::from("a"), code(2, &["a", "ba"]))];
    let done = fixedlen_complete(&pairs, 3).unwrap();
    assert_eq!(done[0].1.len(), 6);
    assert!(done[0].1.iter().all(|w| w.len() == 3));
    assert_eq!(done[0].1.mu(), pairs[0].1.mu());
    assert_eq!(fixedlen_complete(&pairs, 1), Err(Error::TooLong));
}
