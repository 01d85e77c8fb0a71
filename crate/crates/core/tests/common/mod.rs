//! Seeded generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use mk1::element::{Applied, Mk1Element};
use mk1::kary::KRational;
use mk1::words::{Alphabet, PrefixCode, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn alpha(k: u32) -> Alphabet {
    Alphabet::new(k).unwrap()
}

pub fn words(ws: &[&str]) -> Vec<Word> {
    ws.iter().map(|s| Word::from(*s)).collect()
}

pub fn code(k: u32, ws: &[&str]) -> PrefixCode {
    PrefixCode::new(alpha(k), words(ws)).unwrap()
}

pub fn element(k: u32, rows: &[(&str, &str)]) -> Mk1Element {
    Mk1Element::from_rows(alpha(k), rows.iter().map(|(x, y)| (Word::from(*x), Word::from(*y)))).unwrap()
}

// ---------- oracles ----------

/// Exact value as a big rational.
pub fn ratio(q: &KRational) -> BigRational {
    let den = BigInt::from(q.base()).pow(q.exponent() as u32);
    BigRational::new(BigInt::from(q.numerator().clone()), den)
}

/// `Σ k^(-|w|)` in big rationals.
pub fn mu_oracle<'a>(k: u32, ws: impl IntoIterator<Item = &'a Word>) -> BigRational {
    ws.into_iter().fold(BigRational::zero(), |acc, w| {
        acc + BigRational::new(BigInt::one(), BigInt::from(k).pow(w.len() as u32))
    })
}

/// All words of length `lo..=hi`.
pub fn words_between(a: Alphabet, lo: usize, hi: usize) -> Vec<Word> {
    (lo..=hi).flat_map(|n| a.words_of_length(n)).collect()
}

/// Action on a finite word from raw rows, by linear scan.
pub fn act(rows: &[(Word, Word)], x: &Word) -> Option<Word> {
    rows.iter().find(|(p, _)| p.is_prefix_of(x)).map(|(p, q)| q.concat(&x.suffix_from(p.len())))
}

pub fn rows_of(e: &Mk1Element) -> Vec<(Word, Word)> {
    e.table().rows().map(|(x, y)| (x.clone(), y.clone())).collect()
}

pub fn max_dom(e: &Mk1Element) -> usize {
    e.table().max_domain_len()
}

/// Equality as maps on ends: agreement on every word of one length
/// at least every domain length.
pub fn ends_equal(f: &Mk1Element, g: &Mk1Element) -> bool {
    let d = max_dom(f).max(max_dom(g));
    let (rf, rg) = (rows_of(f), rows_of(g));
    f.alphabet().words_of_length(d).iter().all(|x| act(&rf, x) == act(&rg, x))
}

/// `(f∘g)(x) = f(g(x))` on all words of length `max_dom(f) + max_dom(g) + extra`.
pub fn compose_consistent(f: &Mk1Element, g: &Mk1Element, fg: &Mk1Element, extra: usize) -> bool {
    let d = max_dom(f) + max_dom(g) + extra;
    let (rf, rg, rfg) = (rows_of(f), rows_of(g), rows_of(fg));
    f.alphabet()
        .words_of_length(d)
        .iter()
        .all(|x| act(&rfg, x) == act(&rg, x).and_then(|y| act(&rf, &y)))
}

/// `f ≤_R g`: every long enough word with a prefix in `im(f)` has one in `im(g)`.
pub fn leq_r_oracle(f: &Mk1Element, g: &Mk1Element) -> bool {
    let img = |e: &Mk1Element| e.table().rows().map(|(_, y)| y.clone()).collect::<Vec<_>>();
    let (i_f, i_g) = (img(f), img(g));
    let d = i_f.iter().chain(&i_g).map(Word::len).max().unwrap_or(0);
    let hit = |set: &[Word], y: &Word| set.iter().any(|p| p.is_prefix_of(y));
    f.alphabet().words_of_length(d).iter().all(|y| !hit(&i_f, y) || hit(&i_g, y))
}

/// `f ≤_L g`: `f` is defined only where `g` is, and `g(ξ) = g(ξ')` forces
/// `f(ξ) = f(ξ')` on ends. For each `x` of length `L` every preimage of
/// `g(x)` is enumerated from the rows of `g`; ends are compared through
/// all extensions of length `L`.
pub fn leq_l_oracle(f: &Mk1Element, g: &Mk1Element) -> bool {
    let a = f.alphabet();
    let l = max_dom(f).max(max_dom(g));
    let (rf, rg) = (rows_of(f), rows_of(g));
    let tails = a.words_of_length(l);
    let same_ends = |u: &Word, v: &Word| tails.iter().all(|w| act(&rf, &u.concat(w)) == act(&rf, &v.concat(w)));
    for x in a.words_of_length(l) {
        let Some(y) = act(&rg, &x) else {
            if act(&rf, &x).is_some() {
                return false;
            }
            continue;
        };
        for (p, q) in &rg {
            let ok = if q.is_prefix_of(&y) {
                same_ends(&x, &p.concat(&y.suffix_from(q.len())))
            } else if y.is_prefix_of(q) {
                same_ends(&x.concat(&q.suffix_from(y.len())), p)
            } else {
                true
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Whether `w` lies in the ideal `PA*` of a finite set.
pub fn in_ideal(set: &BTreeSet<Word>, w: &Word) -> bool {
    set.iter().any(|p| p.is_prefix_of(w))
}

// ---------- generators ----------

pub fn random_word(r: &mut StdRng, a: Alphabet, min: usize, max: usize) -> Word {
    let n = r.gen_range(min..=max);
    Word::new((0..n).map(|_| r.gen_range(0..a.k()) as u8).collect())
}

/// A maximal prefix code grown from `{ε}` by `splits` random leaf splits,
/// never beyond `max_len`.
pub fn random_maximal_code(r: &mut StdRng, a: Alphabet, splits: usize, max_len: usize) -> Vec<Word> {
    let mut leaves = vec![Word::empty()];
    for _ in 0..splits {
        let candidates: Vec<usize> = (0..leaves.len()).filter(|&i| leaves[i].len() < max_len).collect();
        let Some(&i) = candidates.choose(r) else { break };
        let w = leaves.swap_remove(i);
        leaves.extend(a.letters().map(|c| w.child(c)));
    }
    leaves
}

/// A non-empty prefix code: a random subset of a random maximal code.
pub fn random_code(r: &mut StdRng, a: Alphabet, max_len: usize) -> PrefixCode {
    let splits = r.gen_range(0..=3 * max_len);
    let full = random_maximal_code(r, a, splits, max_len);
    let p = r.gen_range(0.3..=1.0);
    let mut kept: Vec<Word> = full.iter().filter(|_| r.gen_bool(p)).cloned().collect();
    if kept.is_empty() {
        kept.push(full.choose(r).unwrap().clone());
    }
    PrefixCode::new(a, kept).unwrap()
}

/// A random non-zero element with arbitrary (possibly colliding) images.
pub fn random_element(r: &mut StdRng, a: Alphabet, depth: usize) -> Mk1Element {
    let dom = random_code(r, a, depth);
    let rows: Vec<(Word, Word)> = dom.iter().map(|x| (x.clone(), random_word(r, a, 0, depth))).collect();
    Mk1Element::from_rows(a, rows).unwrap()
}

pub fn random_element_or_zero(r: &mut StdRng, a: Alphabet, depth: usize) -> Mk1Element {
    if r.gen_ratio(1, 12) {
        Mk1Element::zero(a)
    } else {
        random_element(r, a, depth)
    }
}

/// Random bijection between two prefix codes of equal size.
pub fn random_injective(r: &mut StdRng, a: Alphabet, depth: usize) -> Mk1Element {
    let splits = r.gen_range(0..=2 * depth);
    let p = random_maximal_code(r, a, splits, depth);
    let q = random_maximal_code(r, a, splits, depth);
    let n = p.len().min(q.len());
    let size = r.gen_range(1..=n);
    let mut p: Vec<Word> = p.choose_multiple(r, size).cloned().collect();
    let q: Vec<Word> = q.choose_multiple(r, size).cloned().collect();
    p.shuffle(r);
    Mk1Element::from_rows(a, p.into_iter().zip(q)).unwrap()
}

/// Identity on a code `Q`, plus some complement words sent into `QA*`.
pub fn random_idempotent(r: &mut StdRng, a: Alphabet, depth: usize) -> Mk1Element {
    let q = random_code(r, a, depth);
    let qs: Vec<Word> = q.iter().cloned().collect();
    let mut rows: Vec<(Word, Word)> = qs.iter().map(|w| (w.clone(), w.clone())).collect();
    for c in q.complement().iter() {
        if r.gen_bool(0.6) {
            let target = qs.choose(r).unwrap().concat(&random_word(r, a, 0, 2));
            rows.push((c.clone(), target));
        }
    }
    Mk1Element::from_rows(a, rows).unwrap()
}

/// A plep element `A^m ⊇ dom → A^n`; total when `total`.
pub fn random_plep(r: &mut StdRng, a: Alphabet, m: usize, n: usize, total: bool) -> Mk1Element {
    let mut dom = a.words_of_length(m);
    if !total {
        let keep = r.gen_range(1..=dom.len());
        dom.shuffle(r);
        dom.truncate(keep);
    }
    let img = a.words_of_length(n);
    let rows: Vec<(Word, Word)> = dom.into_iter().map(|x| (x, img.choose(r).unwrap().clone())).collect();
    Mk1Element::from_rows(a, rows).unwrap()
}

/// A value in `(0, 1]` with at most `max_exp` fractional digits.
pub fn random_unit_kr(r: &mut StdRng, k: u32, max_exp: u64) -> KRational {
    loop {
        let n = r.gen_range(0..=max_exp);
        let bound = (k as u64).pow(n as u32);
        let a = r.gen_range(1..=bound);
        let q = KRational::new(k, a, n).unwrap();
        if !q.is_zero() {
            return q;
        }
    }
}

/// Random seeds for property loops.
pub fn seeds(base: u64, n: usize) -> impl Iterator<Item = u64> {
    (0..n as u64).map(move |i| base.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i))
}

pub fn applied_value(a: Applied) -> Option<Word> {
    match a {
        Applied::Value(w) => Some(w),
        _ => None,
    }
}
