//! Words over a k-letter alphabet, prefix codes and their right ideals.
//!
//! Letter `a_j` is stored as index `j-1`. The derived `Ord` on [`Word`] is
//! the dictionary order: a prefix precedes its extensions, otherwise the
//! first differing letter decides.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::kary::KRational;

/// Alphabet size `k`, with `2 <= k <= 255`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(u8);

impl Alphabet {
    pub fn new(k: u32) -> Result<Self> {
        match k {
            0 | 1 => Err(Error::BaseTooSmall(k)),
            2..=255 => Ok(Alphabet(k as u8)),
            _ => Err(Error::BaseTooLarge(k)),
        }
    }

    pub fn k(self) -> u32 {
        self.0 as u32
    }

    pub fn letters(self) -> impl Iterator<Item = u8> + Clone {
        0..self.0
    }

    pub fn last_letter(self) -> u8 {
        self.0 - 1
    }

    pub fn check(self, w: &Word) -> Result<()> {
        match w.0.iter().find(|&&l| l >= self.0) {
            Some(&l) => Err(Error::LetterOutOfRange { letter: l as u32, k: self.k() }),
            None => Ok(()),
        }
    }

    pub fn unit(self, len: usize) -> KRational {
        KRational::unit(self.k(), len as u64)
    }

    /// All words of length `n` in dictionary order.
    pub fn words_of_length(self, n: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..n {
            out = out
                .iter()
                .flat_map(|w| self.letters().map(move |a| w.child(a)))
                .collect();
        }
        out
    }
}

/// A finite word; `ε` is the empty word and prints as `^`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn is_proper_prefix_of(&self, other: &Word) -> bool {
        self.len() < other.len() && self.is_prefix_of(other)
    }

    pub fn comparable(&self, other: &Word) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn child(&self, a: u8) -> Word {
        let mut v = self.0.clone();
        v.push(a);
        Word(v)
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    /// The remainder after removing the prefix of length `n`.
    pub fn suffix_from(&self, n: usize) -> Word {
        Word(self.0[n..].to_vec())
    }

    /// Drop the last letter; `None` for `ε`.
    pub fn parent(&self) -> Option<(Word, u8)> {
        let (&last, rest) = self.0.split_last()?;
        Some((Word(rest.to_vec()), last))
    }

    /// Parse letters `a`, `b`, … or `^` for `ε`.
    pub fn parse(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "^" {
            return Ok(Word::empty());
        }
        if s.is_empty() {
            return Err(Error::parse(0, "empty word token (use ^ for the empty word)"));
        }
        s.chars()
            .map(|c| {
                if c.is_ascii_lowercase() {
                    Ok(c as u8 - b'a')
                } else {
                    Err(Error::parse(0, format!("bad letter {c:?}")))
                }
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }

    pub fn parse_in(alpha: Alphabet, s: &str) -> Result<Word> {
        let w = Word::parse(s)?;
        alpha.check(&w).map_err(|e| Error::parse(0, e.to_string()))?;
        Ok(w)
    }
}

impl From<&str> for Word {
    /// Panics on malformed input; intended for literals.
    fn from(s: &str) -> Word {
        Word::parse(s).expect("word literal")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("^");
        }
        for &l in &self.0 {
            if l < 26 {
                write!(f, "{}", (b'a' + l) as char)?;
            } else {
                write!(f, "<{l}>")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical order: by length, then dictionary order.
pub fn canonical_cmp(x: &Word, y: &Word) -> std::cmp::Ordering {
    x.len().cmp(&y.len()).then_with(|| x.cmp(y))
}

/// The member of `set` that is a prefix of `w`, if any.
pub fn prefix_in<'a>(set: &'a BTreeSet<Word>, w: &Word) -> Option<&'a Word> {
    (0..=w.len()).find_map(|n| set.get(&w.prefix(n)))
}

/// Members of `set` having `w` as a proper prefix.
pub fn extensions_in<'a>(set: &'a BTreeSet<Word>, w: &'a Word) -> impl Iterator<Item = &'a Word> {
    set.range(w..)
        .take_while(move |x| w.is_prefix_of(x))
        .filter(move |x| x.len() > w.len())
}

pub fn is_prefix_code<'a>(words: impl IntoIterator<Item = &'a Word>) -> bool {
    let set: BTreeSet<&Word> = words.into_iter().collect();
    // In dictionary order a word's extensions follow it immediately.
    set.iter()
        .zip(set.iter().skip(1))
        .all(|(a, b)| !a.is_prefix_of(b))
}

/// `μ(S) = Σ k^(-|x|)`.
pub fn mu<'a>(alpha: Alphabet, words: impl IntoIterator<Item = &'a Word>) -> KRational {
    let mut counts: Vec<u64> = Vec::new();
    for w in words {
        if counts.len() <= w.len() {
            counts.resize(w.len() + 1, 0);
        }
        counts[w.len()] += 1;
    }
    let k = alpha.k();
    let Some(top) = counts.len().checked_sub(1) else {
        return KRational::zero(k);
    };
    let kb = num_bigint::BigUint::from(k);
    let mut num = num_bigint::BigUint::from(0u32);
    for c in &counts {
        num = num * &kb + num_bigint::BigUint::from(*c);
    }
    KRational::new(k, num, top as u64).expect("valid base")
}

/// A finite prefix code over a fixed alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrefixCode {
    alpha: Alphabet,
    words: BTreeSet<Word>,
}

impl PrefixCode {
    pub fn new(alpha: Alphabet, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        let words: BTreeSet<Word> = words.into_iter().collect();
        for w in &words {
            alpha.check(w)?;
        }
        if !is_prefix_code(&words) {
            return Err(Error::NotPrefixCode);
        }
        Ok(PrefixCode { alpha, words })
    }

    pub(crate) fn from_set_unchecked(alpha: Alphabet, words: BTreeSet<Word>) -> Self {
        debug_assert!(is_prefix_code(&words));
        PrefixCode { alpha, words }
    }

    pub fn empty(alpha: Alphabet) -> Self {
        PrefixCode { alpha, words: BTreeSet::new() }
    }

    pub fn singleton(alpha: Alphabet, w: Word) -> Self {
        PrefixCode { alpha, words: BTreeSet::from([w]) }
    }

    /// The fixed-length code `A^n`.
    pub fn full_level(alpha: Alphabet, n: usize) -> Self {
        PrefixCode { alpha, words: alpha.words_of_length(n).into_iter().collect() }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alpha
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    /// Words in dictionary order.
    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    pub fn as_set(&self) -> &BTreeSet<Word> {
        &self.words
    }

    /// Words sorted by length, then dictionary order.
    pub fn canonical(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self.words.iter().cloned().collect();
        v.sort_by(canonical_cmp);
        v
    }

    pub fn max_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    /// `Some(n)` if every word has length `n` (and the code is non-empty).
    pub fn fixed_length(&self) -> Option<usize> {
        let mut it = self.words.iter().map(Word::len);
        let first = it.next()?;
        it.all(|l| l == first).then_some(first)
    }

    pub fn mu(&self) -> KRational {
        mu(self.alpha, &self.words)
    }

    pub fn is_maximal(&self) -> bool {
        self.mu().is_one()
    }

    /// The member that is a prefix of `w`.
    pub fn prefix_of(&self, w: &Word) -> Option<&Word> {
        prefix_in(&self.words, w)
    }

    /// True iff some member has `w` as a proper prefix.
    pub fn has_extension(&self, w: &Word) -> bool {
        extensions_in(&self.words, w).next().is_some()
    }

    /// (r1): replace `c` by its `k` children.
    pub fn replace_r1(&self, c: &Word) -> Result<Self> {
        if !self.words.contains(c) {
            return Err(Error::NotInCode(c.to_string()));
        }
        let mut words = self.words.clone();
        words.remove(c);
        words.extend(self.alpha.letters().map(|a| c.child(a)));
        Ok(PrefixCode { alpha: self.alpha, words })
    }

    /// (r2): replace the `k` children of `c` by `c`.
    pub fn replace_r2(&self, c: &Word) -> Result<Self> {
        let kids: Vec<Word> = self.alpha.letters().map(|a| c.child(a)).collect();
        if !kids.iter().all(|x| self.words.contains(x)) {
            return Err(Error::ChildrenMissing(c.to_string()));
        }
        let mut words = self.words.clone();
        for x in &kids {
            words.remove(x);
        }
        words.insert(c.clone());
        Ok(PrefixCode { alpha: self.alpha, words })
    }

    /// `ends(wA*) ⊆ ends(PA*)`.
    pub fn covers(&self, w: &Word) -> bool {
        covered_in(self.alpha, &self.words, w)
    }

    /// `PA* ⊆_ess QA*` where `self = P`.
    pub fn ess_leq(&self, other: &PrefixCode) -> bool {
        self.words.iter().all(|w| other.covers(w))
    }

    pub fn ess_eq(&self, other: &PrefixCode) -> bool {
        self.ess_leq(other) && other.ess_leq(self)
    }

    /// The antichain of maximal nodes whose subtrees avoid `PA*`.
    pub fn complement(&self) -> PrefixCode {
        let mut out = BTreeSet::new();
        let mut stack = vec![Word::empty()];
        while let Some(v) = stack.pop() {
            if self.prefix_of(&v).is_some() {
                continue;
            }
            if self.has_extension(&v) {
                stack.extend(self.alpha.letters().map(|a| v.child(a)));
            } else {
                out.insert(v);
            }
        }
        PrefixCode { alpha: self.alpha, words: out }
    }

    /// `P_h`: the digit-block code with `μ(P_h) = h`.
    pub fn build_p_h(alpha: Alphabet, h: &KRational) -> Result<Self> {
        if h.base() != alpha.k() {
            return Err(Error::BaseMismatch(h.base(), alpha.k()));
        }
        let (int, digits) = h.digits();
        if int > 1u32.into() || (int == 1u32.into() && !digits.is_empty()) {
            return Err(Error::OutOfRange);
        }
        if h.is_one() {
            return Ok(PrefixCode::singleton(alpha, Word::empty()));
        }
        let mut words = BTreeSet::new();
        let mut prefix = Word::empty();
        for &d in &digits {
            for j in 0..d {
                words.insert(prefix.child(j as u8));
            }
            prefix = prefix.child(d as u8);
        }
        Ok(PrefixCode { alpha, words })
    }

    /// Union with a code whose ideal is disjoint from this one.
    pub fn union_disjoint(&self, other: &PrefixCode) -> Result<PrefixCode> {
        PrefixCode::new(self.alpha, self.words.iter().chain(other.iter()).cloned())
    }
}

pub(crate) fn covered_in(alpha: Alphabet, set: &BTreeSet<Word>, w: &Word) -> bool {
    if prefix_in(set, w).is_some() {
        return true;
    }
    if extensions_in(set, w).next().is_none() {
        return false;
    }
    alpha.letters().all(|a| covered_in(alpha, set, &w.child(a)))
}

impl fmt::Display for PrefixCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.canonical().iter().map(Word::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for PrefixCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
