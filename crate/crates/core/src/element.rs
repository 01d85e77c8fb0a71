//! Elements of `M_{k,1}` as finite tables in maximal-extension normal form.
//!
//! A [`Table`] is any finite map from a prefix code to words; many tables
//! represent the same monoid element. [`Mk1Element`] wraps the unique
//! maximally extended table, so element equality is structural.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::kary::KRational;
use crate::words::{self, canonical_cmp, extensions_in, prefix_in, Alphabet, PrefixCode, Word};

/// A finite table `domain word -> image word` over a prefix-code domain.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Table {
    alpha: Alphabet,
    rows: BTreeMap<Word, Word>,
}

/// Outcome of the partial action on a finite word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Applied {
    Value(Word),
    Undefined,
    /// The word is a proper prefix of a domain-code word.
    NeedLongerWord,
}

impl Table {
    pub fn new(alpha: Alphabet, rows: impl IntoIterator<Item = (Word, Word)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (x, y) in rows {
            alpha.check(&x)?;
            alpha.check(&y)?;
            match map.get(&x) {
                Some(old) if old != &y => return Err(Error::DomainNotPrefixCode),
                _ => {
                    map.insert(x, y);
                }
            }
        }
        if !words::is_prefix_code(map.keys()) {
            return Err(Error::DomainNotPrefixCode);
        }
        Ok(Table { alpha, rows: map })
    }

    pub fn empty(alpha: Alphabet) -> Self {
        Table { alpha, rows: BTreeMap::new() }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alpha
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows in dictionary order of the domain word.
    pub fn rows(&self) -> impl Iterator<Item = (&Word, &Word)> {
        self.rows.iter()
    }

    /// Rows sorted canonically by domain word.
    pub fn canonical_rows(&self) -> Vec<(Word, Word)> {
        let mut v: Vec<(Word, Word)> = self.rows.iter().map(|(x, y)| (x.clone(), y.clone())).collect();
        v.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
        v
    }

    pub fn get(&self, x: &Word) -> Option<&Word> {
        self.rows.get(x)
    }

    pub fn domain_code(&self) -> PrefixCode {
        PrefixCode::from_set_unchecked(self.alpha, self.rows.keys().cloned().collect())
    }

    /// Image words with multiplicity, in domain order.
    pub fn image_words(&self) -> Vec<Word> {
        self.rows.values().cloned().collect()
    }

    /// `μ` of the set of image words.
    pub fn image_mu(&self) -> KRational {
        let set: BTreeSet<&Word> = self.rows.values().collect();
        words::mu(self.alpha, set)
    }

    pub fn max_domain_len(&self) -> usize {
        self.rows.keys().map(Word::len).max().unwrap_or(0)
    }

    /// True iff the image multiset is a prefix code (equal words allowed).
    pub fn has_image_code(&self) -> bool {
        let set: BTreeSet<&Word> = self.rows.values().collect();
        words::is_prefix_code(set)
    }

    /// Fibers `y -> {x : table(x) = y}`.
    pub fn fibers(&self) -> BTreeMap<Word, BTreeSet<Word>> {
        let mut out: BTreeMap<Word, BTreeSet<Word>> = BTreeMap::new();
        for (x, y) in &self.rows {
            out.entry(y.clone()).or_default().insert(x.clone());
        }
        out
    }

    /// Split row `x` into `{(xa, ya)}`.
    pub fn restrict_row(&self, x: &Word) -> Result<Table> {
        let y = self.rows.get(x).ok_or_else(|| Error::NotInDomainCode(x.to_string()))?.clone();
        let mut rows = self.rows.clone();
        rows.remove(x);
        for a in self.alpha.letters() {
            rows.insert(x.child(a), y.child(a));
        }
        Ok(Table { alpha: self.alpha, rows })
    }

    /// Split every row whose image is `y` (a class-wise step).
    pub fn restrict_class(&self, y: &Word) -> Table {
        let mut rows = BTreeMap::new();
        for (x, img) in &self.rows {
            if img == y {
                for a in self.alpha.letters() {
                    rows.insert(x.child(a), img.child(a));
                }
            } else {
                rows.insert(x.clone(), img.clone());
            }
        }
        Table { alpha: self.alpha, rows }
    }

    /// Split rows until the image multiset is a prefix code.
    ///
    /// Always splits the offending row with the least `(|y|, y, x)`.
    pub fn image_code_restriction(&self) -> Table {
        let mut t = self.clone();
        loop {
            let images: BTreeSet<Word> = t.rows.values().cloned().collect();
            let offender = t
                .rows
                .iter()
                .filter(|(_, y)| extensions_in(&images, y).next().is_some())
                .min_by(|a, b| (a.1.len(), a.1, a.0).cmp(&(b.1.len(), b.1, b.0)))
                .map(|(x, _)| x.clone());
            match offender {
                Some(x) => t = t.restrict_row(&x).expect("row exists"),
                None => return t,
            }
        }
    }

    /// Split rows until every domain word has length `m`.
    pub fn uniform_domain_restriction(&self, m: usize) -> Result<Table> {
        let top = self.max_domain_len();
        if m < top {
            return Err(Error::LengthTooSmall(m));
        }
        let mut rows = BTreeMap::new();
        for (x, y) in &self.rows {
            for u in self.alpha.words_of_length(m - x.len()) {
                rows.insert(x.concat(&u), y.concat(&u));
            }
        }
        Ok(Table { alpha: self.alpha, rows })
    }

    /// Class-wise splits until all image words share one length.
    ///
    /// Starts from the image-code restriction, so the result keeps a
    /// prefix-code image.
    pub fn uniform_image_restriction(&self) -> Table {
        let mut t = self.image_code_restriction();
        loop {
            let Some(short) = t.rows.values().min_by(|a, b| canonical_cmp(a, b)).cloned() else {
                return t;
            };
            if t.rows.values().all(|y| y.len() == short.len()) {
                return t;
            }
            t = t.restrict_class(&short);
        }
    }

    /// Class-wise splits until all class-minimum lengths agree.
    pub fn equalize_min_reps(&self) -> Table {
        let mut t = self.image_code_restriction();
        loop {
            let fibers = t.fibers();
            let mins: Vec<(usize, &Word)> = fibers
                .iter()
                .map(|(y, xs)| (xs.iter().map(Word::len).min().expect("non-empty fiber"), y))
                .collect();
            let Some(&(lo, y)) = mins.iter().min() else {
                return t;
            };
            if mins.iter().all(|&(l, _)| l == lo) {
                return t;
            }
            let y = y.clone();
            t = t.restrict_class(&y);
        }
    }

    /// Partial action on a finite word.
    pub fn apply(&self, w: &Word) -> Applied {
        if let Some(x) = prefix_in_map(&self.rows, w) {
            let y = &self.rows[x];
            return Applied::Value(y.concat(&w.suffix_from(x.len())));
        }
        if self.rows.range(w..).next().is_some_and(|(x, _)| w.is_prefix_of(x)) {
            Applied::NeedLongerWord
        } else {
            Applied::Undefined
        }
    }

    /// The maximal essentially equal extension.
    pub fn normalize(&self) -> Mk1Element {
        Mk1Element { table: Table { alpha: self.alpha, rows: max_extend(self.alpha, self.rows.clone()) } }
    }
}

fn prefix_in_map<'a>(rows: &'a BTreeMap<Word, Word>, w: &Word) -> Option<&'a Word> {
    (0..=w.len()).find_map(|n| rows.get_key_value(&w.prefix(n)).map(|(k, _)| k))
}

fn max_extend(alpha: Alphabet, mut rows: BTreeMap<Word, Word>) -> BTreeMap<Word, Word> {
    let top = rows.keys().map(Word::len).max().unwrap_or(0);
    for len in (1..=top).rev() {
        let firsts: Vec<Word> = rows
            .keys()
            .filter(|x| x.len() == len && x.letters()[len - 1] == 0)
            .cloned()
            .collect();
        for first in firsts {
            let (parent, _) = first.parent().expect("non-empty");
            let Some((stem, 0)) = rows.get(&first).and_then(Word::parent) else {
                continue;
            };
            let family = alpha
                .letters()
                .all(|a| rows.get(&parent.child(a)) == Some(&stem.child(a)));
            if family {
                for a in alpha.letters() {
                    rows.remove(&parent.child(a));
                }
                rows.insert(parent, stem);
            }
        }
    }
    rows
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k {}", self.alpha.k())?;
        for (x, y) in self.canonical_rows() {
            writeln!(f, "{x} -> {y}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.canonical_rows().iter().map(|(x, y)| format!("{x}->{y}")).collect();
        write!(f, "{{{}}}", rows.join(", "))
    }
}

/// An element of `M_{k,1}`, stored as its maximally extended table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mk1Element {
    table: Table,
}

impl Mk1Element {
    /// Build from rows and normalize.
    pub fn from_rows(alpha: Alphabet, rows: impl IntoIterator<Item = (Word, Word)>) -> Result<Self> {
        Ok(Table::new(alpha, rows)?.normalize())
    }

    pub fn zero(alpha: Alphabet) -> Self {
        Mk1Element { table: Table::empty(alpha) }
    }

    pub fn identity(alpha: Alphabet) -> Self {
        Self::single_row(alpha, Word::empty(), Word::empty())
    }

    pub fn single_row(alpha: Alphabet, u: Word, v: Word) -> Self {
        Mk1Element { table: Table { alpha, rows: BTreeMap::from([(u, v)]) } }
    }

    pub fn partial_identity(p: &PrefixCode) -> Self {
        let rows = p.iter().map(|w| (w.clone(), w.clone()));
        Table { alpha: p.alphabet(), rows: rows.collect() }.normalize()
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn alphabet(&self) -> Alphabet {
        self.table.alpha
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.alphabet())
    }

    pub fn apply(&self, w: &Word) -> Applied {
        self.table.apply(w)
    }

    /// `self ∘ g`: apply `g` first.
    pub fn compose(&self, g: &Mk1Element) -> Result<Mk1Element> {
        if self.alphabet() != g.alphabet() {
            return Err(Error::AlphabetMismatch(self.alphabet().k(), g.alphabet().k()));
        }
        let dom: BTreeSet<Word> = self.table.rows.keys().cloned().collect();
        let mut out = BTreeMap::new();
        let mut stack: Vec<(Word, Word)> = g.table.rows.iter().map(|(x, y)| (x.clone(), y.clone())).collect();
        while let Some((x, y)) = stack.pop() {
            if let Some(d) = prefix_in(&dom, &y) {
                let img = self.table.rows[d].concat(&y.suffix_from(d.len()));
                out.insert(x, img);
            } else if extensions_in(&dom, &y).next().is_some() {
                for a in self.alphabet().letters() {
                    stack.push((x.child(a), y.child(a)));
                }
            }
        }
        Ok(Table { alpha: self.alphabet(), rows: out }.normalize())
    }

    pub fn dom_code(&self) -> PrefixCode {
        self.table.domain_code()
    }

    /// The image-code restriction of the normal form.
    pub fn image_code_table(&self) -> Table {
        self.table.image_code_restriction()
    }

    pub fn im_code(&self) -> PrefixCode {
        let t = self.image_code_table();
        PrefixCode::from_set_unchecked(self.alphabet(), t.rows.values().cloned().collect())
    }

    /// The fiber partition of the image-code restriction.
    pub fn part(&self) -> Congruence {
        let t = self.image_code_table();
        Congruence::from_classes_unchecked(self.alphabet(), t.fibers().into_values())
    }

    pub fn restrict_row(&self, x: &Word) -> Result<Table> {
        self.table.restrict_row(x)
    }

    pub fn uniform_domain_restriction(&self, m: usize) -> Result<Table> {
        self.table.uniform_domain_restriction(m)
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose(self).as_ref() == Ok(self)
    }

    pub fn is_injective(&self) -> bool {
        self.image_code_table().fibers().values().all(|xs| xs.len() == 1)
    }

    pub fn is_total(&self) -> bool {
        self.dom_code().is_maximal()
    }

    pub fn is_surjective(&self) -> bool {
        self.im_code().is_maximal()
    }

    /// Inverse of an injective element.
    pub fn inverse(&self) -> Result<Mk1Element> {
        if !self.is_injective() {
            return Err(Error::NotInjective);
        }
        let t = self.image_code_table();
        Ok(Table { alpha: self.alphabet(), rows: t.rows.iter().map(|(x, y)| (y.clone(), x.clone())).collect() }
            .normalize())
    }
}

impl fmt::Display for Mk1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.table, f)
    }
}

impl fmt::Debug for Mk1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.table, f)
    }
}

/// A prefix code partitioned into classes.
///
/// Canonical: classes are kept as a set of sets, so two congruences with
/// the same blocks compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    alpha: Alphabet,
    classes: BTreeSet<BTreeSet<Word>>,
}

impl Congruence {
    pub fn new(alpha: Alphabet, classes: impl IntoIterator<Item = BTreeSet<Word>>) -> Result<Self> {
        let classes: Vec<BTreeSet<Word>> = classes.into_iter().collect();
        let mut all = BTreeSet::new();
        for c in &classes {
            if c.is_empty() {
                return Err(Error::NotAClass);
            }
            for w in c {
                alpha.check(w)?;
                if !all.insert(w.clone()) {
                    return Err(Error::NotAClass);
                }
            }
        }
        if !words::is_prefix_code(&all) {
            return Err(Error::NotPrefixCode);
        }
        Ok(Congruence { alpha, classes: classes.into_iter().collect() })
    }

    fn from_classes_unchecked(alpha: Alphabet, classes: impl IntoIterator<Item = BTreeSet<Word>>) -> Self {
        Congruence { alpha, classes: classes.into_iter().collect() }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alpha
    }

    pub fn classes(&self) -> impl Iterator<Item = &BTreeSet<Word>> {
        self.classes.iter()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn code(&self) -> PrefixCode {
        PrefixCode::from_set_unchecked(self.alpha, self.classes.iter().flatten().cloned().collect())
    }

    /// Refine class `c` into `{c·a : a ∈ A}`.
    pub fn classwise_replace(&self, c: &BTreeSet<Word>) -> Result<Congruence> {
        if !self.classes.contains(c) {
            return Err(Error::NotAClass);
        }
        let mut classes = self.classes.clone();
        classes.remove(c);
        for a in self.alpha.letters() {
            classes.insert(c.iter().map(|w| w.child(a)).collect());
        }
        Ok(Congruence { alpha: self.alpha, classes })
    }

    /// Merge `{Ca_1, …, Ca_k}` into `C` until no such family remains.
    pub fn max_congruence(&self) -> Congruence {
        let mut classes = self.classes.clone();
        'outer: loop {
            for cls in &classes {
                let Some(stem) = sibling_stem(cls) else { continue };
                let family: Vec<BTreeSet<Word>> = self
                    .alpha
                    .letters()
                    .map(|a| stem.iter().map(|w| w.child(a)).collect())
                    .collect();
                if family.iter().all(|f| classes.contains(f)) {
                    for f in &family {
                        classes.remove(f);
                    }
                    classes.insert(stem);
                    continue 'outer;
                }
            }
            return Congruence { alpha: self.alpha, classes };
        }
    }

    /// Shortest member of each class, ties by dictionary order.
    pub fn min_reps(&self) -> Vec<Word> {
        self.classes
            .iter()
            .map(|c| c.iter().min_by(|a, b| canonical_cmp(a, b)).expect("non-empty").clone())
            .collect()
    }

    /// Longest member of each class, ties by dictionary order.
    pub fn max_reps(&self) -> Vec<Word> {
        self.classes
            .iter()
            .map(|c| {
                c.iter()
                    .min_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)))
                    .expect("non-empty")
                    .clone()
            })
            .collect()
    }

    /// `μ(P_∅) + Σ μ(P_i − {m_i})`.
    pub fn coll_by_complement(&self) -> KRational {
        let k = self.alpha.k();
        let mut total = self.code().complement().mu();
        for (c, m) in self.classes.iter().zip(self.min_reps()) {
            total = &total + &words::mu(self.alpha, c.iter().filter(|w| **w != m));
        }
        debug_assert_eq!(total.base(), k);
        total
    }

    /// `Σ μ(m_i)`.
    pub fn noncoll(&self) -> KRational {
        words::mu(self.alpha, &self.min_reps())
    }

    /// `1 − Σ μ(m_i)`, checked against the complement formula.
    pub fn coll(&self) -> KRational {
        let dual = &KRational::one(self.alpha.k()) - &self.noncoll();
        assert_eq!(dual, self.coll_by_complement(), "collision formulas disagree");
        dual
    }
}

fn sibling_stem(cls: &BTreeSet<Word>) -> Option<BTreeSet<Word>> {
    cls.iter()
        .map(|w| match w.parent() {
            Some((p, 0)) => Some(p),
            _ => None,
        })
        .collect()
}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .classes
            .iter()
            .map(|c| {
                let ws: Vec<String> = c.iter().map(Word::to_string).collect();
                format!("{{{}}}", ws.join(","))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Alphabet {
        Alphabet::new(2).unwrap()
    }

    fn tbl(rows: &[(&str, &str)]) -> Table {
        Table::new(a2(), rows.iter().map(|(x, y)| (Word::from(*x), Word::from(*y)))).unwrap()
    }

    fn phi(n: usize) -> Table {
        match n {
            1 => tbl(&[("aa", "a"), ("ab", "aa"), ("b", "aaa")]),
            2 => tbl(&[("aaa", "aa"), ("aab", "ab"), ("ab", "aa"), ("b", "aaa")]),
            3 => tbl(&[("aaaa", "aaa"), ("aaab", "aab"), ("aab", "ab"), ("ab", "aa"), ("b", "aaa")]),
            _ => tbl(&[("aaaa", "aaa"), ("aaab", "aab"), ("aab", "ab"), ("aba", "aaa"), ("abb", "aab"), ("b", "aaa")]),
        }
    }

    #[test]
    fn worked_tables() {
        let q = |a: u32, n: u64| KRational::new(2, a, n).unwrap();
        assert_eq!(phi(1).image_mu(), q(7, 3));
        assert_eq!(phi(2).image_mu(), q(5, 3));
        assert_eq!(phi(3).image_mu(), q(3, 2));
        assert_eq!(phi(4).image_mu(), q(1, 1));
        assert_eq!(phi(1).restrict_row(&"aa".into()).unwrap(), phi(2));
        assert_eq!(phi(2).restrict_row(&"aaa".into()).unwrap(), phi(3));
        assert_eq!(phi(1).image_code_restriction(), phi(4));
        for n in 1..=4 {
            assert_eq!(phi(n).normalize().table(), &phi(1));
        }
    }

    #[test]
    fn sibling_merges() {
        assert_eq!(tbl(&[("aa", "ba"), ("ab", "bb")]).normalize().table(), &tbl(&[("a", "b")]));
        assert_eq!(
            tbl(&[("aa", "ba"), ("ab", "bb"), ("b", "a")]).normalize().table(),
            &tbl(&[("a", "b"), ("b", "a")])
        );
        assert!(Table::empty(a2()).normalize().is_zero());
        assert_eq!(
            Table::new(a2(), [("a".into(), "a".into()), ("ab".into(), "b".into())]),
            Err(Error::DomainNotPrefixCode)
        );
    }

    #[test]
    fn uniform_domain() {
        let t = phi(1).uniform_domain_restriction(2).unwrap();
        assert_eq!(t, tbl(&[("aa", "a"), ("ab", "aa"), ("ba", "aaaa"), ("bb", "aaab")]));
        assert_eq!(phi(1).uniform_domain_restriction(1), Err(Error::LengthTooSmall(1)));
    }

    #[test]
    fn action() {
        let e = phi(1).normalize();
        assert_eq!(e.apply(&"abb".into()), Applied::Value("aab".into()));
        assert_eq!(e.apply(&"a".into()), Applied::NeedLongerWord);
        assert_eq!(Mk1Element::zero(a2()).apply(&"a".into()), Applied::Undefined);
    }

    #[test]
    fn codes_and_predicates() {
        let e = phi(1).normalize();
        let expected = PrefixCode::new(a2(), ["aaa", "aab", "ab"].map(Word::from)).unwrap();
        assert_eq!(e.im_code(), expected);
        assert!(!e.is_injective());
        assert!(Mk1Element::zero(a2()).dom_code().is_empty());
        let id = Mk1Element::identity(a2());
        assert!(id.is_total() && id.is_surjective() && id.is_idempotent());
        let p = PrefixCode::new(a2(), ["aa", "b"].map(Word::from)).unwrap();
        assert!(Mk1Element::partial_identity(&p).is_idempotent());
        assert!(Mk1Element::partial_identity(&PrefixCode::empty(a2())).is_zero());
    }

    #[test]
    fn composition() {
        let p = PrefixCode::new(a2(), ["aa", "b"].map(Word::from)).unwrap();
        let idp = Mk1Element::partial_identity(&p);
        let one = Mk1Element::identity(a2());
        assert_eq!(idp.compose(&one).unwrap(), idp);
        assert_eq!(one.compose(&idp).unwrap(), idp);
        let e = phi(1).normalize();
        assert!(e.compose(&Mk1Element::zero(a2())).unwrap().is_zero());
        // (aaa ↦ aaa) ∘ Φ ∘ (b ↦ b) = (b ↦ aaa)
        let l = Mk1Element::single_row(a2(), "aaa".into(), "aaa".into());
        let r = Mk1Element::single_row(a2(), "b".into(), "b".into());
        let s = l.compose(&e.compose(&r).unwrap()).unwrap();
        assert_eq!(s, Mk1Element::single_row(a2(), "b".into(), "aaa".into()));
    }

    #[test]
    fn inverse_of_bijection() {
        let e = tbl(&[("a", "ba"), ("b", "bb")]).normalize();
        let inv = e.inverse().unwrap();
        assert_eq!(inv.compose(&e).unwrap(), Mk1Element::identity(a2()));
        assert_eq!(phi(1).normalize().inverse(), Err(Error::NotInjective));
    }

    #[test]
    fn congruences() {
        let w = |s: &str| Word::from(s);
        let c = Congruence::new(a2(), [BTreeSet::from([w("aa"), w("ba")]), BTreeSet::from([w("ab"), w("bb")])])
            .unwrap();
        let m = c.max_congruence();
        assert_eq!(m, Congruence::new(a2(), [BTreeSet::from([w("a"), w("b")])]).unwrap());
        let singles = Congruence::new(a2(), ["aa", "ab", "ba", "bb"].map(|s| BTreeSet::from([w(s)]))).unwrap();
        // {a},{b} is again a sibling family, so saturation reaches {ε}.
        assert_eq!(singles.max_congruence(), Congruence::new(a2(), [BTreeSet::from([w("^")])]).unwrap());
        let one = Congruence::new(a2(), [BTreeSet::from([w("a")])]).unwrap();
        let split = one.classwise_replace(&BTreeSet::from([w("a")])).unwrap();
        assert_eq!(split.num_classes(), 2);
        assert_eq!(split.coll(), one.coll());
        assert_eq!(one.classwise_replace(&BTreeSet::from([w("b")])), Err(Error::NotAClass));
    }
}
