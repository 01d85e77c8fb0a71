//! Green-relation structure of `M_{k,1}`: heights, collision, the R and L
//! pre-orders, the D-index, and constructions that realize prescribed
//! heights or separate two elements by a two-sided context.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::element::{Applied, Congruence, Mk1Element, Table};
use crate::error::{Error, Result};
use crate::kary::{class_mod, KRational};
use crate::words::{canonical_cmp, Alphabet, PrefixCode, Word};

/// D-class index in `M_{k,1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DIndex {
    Zero,
    Index(u32),
}

impl fmt::Display for DIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DIndex::Zero => f.write_str("zero"),
            DIndex::Index(i) => write!(f, "{i}"),
        }
    }
}

/// A formal sum `Σ k^(-q)` with rational exponents `q`.
///
/// Terms are grouped by the fractional part `f` of `q` as `c_f · k^(-f)`
/// with `c_f` a k-ary rational; the value is exact (k-ary) iff only
/// `f = 0` occurs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LengthMeasure {
    k: u32,
    terms: BTreeMap<Ratio<u64>, KRational>,
}

impl LengthMeasure {
    pub fn zero(k: u32) -> Self {
        LengthMeasure { k, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, q: Ratio<u64>) {
        let whole = q.to_integer();
        let frac = q.fract();
        let unit = KRational::unit(self.k, whole);
        let slot = self.terms.entry(frac).or_insert_with(|| KRational::zero(self.k));
        *slot = &*slot + &unit;
    }

    /// The k-ary value when every exponent is an integer.
    pub fn exact(&self) -> Option<KRational> {
        match self.terms.len() {
            0 => Some(KRational::zero(self.k)),
            1 => self.terms.get(&Ratio::from_integer(0)).cloned(),
            _ => None,
        }
    }

    /// Coefficients keyed by fractional exponent.
    pub fn terms(&self) -> &BTreeMap<Ratio<u64>, KRational> {
        &self.terms
    }
}

impl fmt::Display for LengthMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(fr, c)| {
                if *fr.numer() == 0 {
                    c.to_string()
                } else {
                    format!("{c}*{}^(-{}/{})", self.k, fr.numer(), fr.denom())
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for LengthMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All height data of one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightReport {
    pub height_r: KRational,
    pub height_l_min: KRational,
    pub height_l_max: KRational,
    pub height_l_ave: LengthMeasure,
    pub height_l_med: LengthMeasure,
    pub coll: KRational,
    pub d_index: DIndex,
}

impl fmt::Display for HeightReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "height_R {}", self.height_r)?;
        writeln!(f, "height_L {}", self.height_l_min)?;
        writeln!(f, "height_L_max {}", self.height_l_max)?;
        writeln!(f, "height_L_ave {}", self.height_l_ave)?;
        writeln!(f, "height_L_med {}", self.height_l_med)?;
        writeln!(f, "coll {}", self.coll)?;
        writeln!(f, "d_index {}", self.d_index)
    }
}

pub fn height_r(e: &Mk1Element) -> KRational {
    e.im_code().mu()
}

pub fn coll(e: &Mk1Element) -> KRational {
    e.part().coll()
}

/// `Σ μ(m_i)` over shortest class representatives.
pub fn height_l(e: &Mk1Element) -> KRational {
    e.part().noncoll()
}

pub fn height_l_max(e: &Mk1Element) -> KRational {
    let part = e.part();
    crate::words::mu(e.alphabet(), &part.max_reps())
}

fn length_statistic(e: &Mk1Element, stat: impl Fn(&mut Vec<u64>) -> Ratio<u64>) -> LengthMeasure {
    let mut out = LengthMeasure::zero(e.alphabet().k());
    for class in e.part().classes() {
        let mut lens: Vec<u64> = class.iter().map(|w| w.len() as u64).collect();
        out.add_term(stat(&mut lens));
    }
    out
}

/// `Σ_y k^(-ave(φ⁻¹(y)))`.
pub fn height_l_ave(e: &Mk1Element) -> LengthMeasure {
    length_statistic(e, |lens| Ratio::new(lens.iter().sum(), lens.len() as u64))
}

/// `Σ_y k^(-med(φ⁻¹(y)))`; even-sized classes use the mean of the middle pair.
pub fn height_l_med(e: &Mk1Element) -> LengthMeasure {
    length_statistic(e, |lens| median(lens))
}

pub fn median(lens: &mut [u64]) -> Ratio<u64> {
    lens.sort_unstable();
    let n = lens.len();
    if n % 2 == 1 {
        Ratio::from_integer(lens[n / 2])
    } else {
        Ratio::new(lens[n / 2 - 1] + lens[n / 2], 2)
    }
}

pub fn d_index_m(e: &Mk1Element) -> DIndex {
    if e.is_zero() {
        return DIndex::Zero;
    }
    DIndex::Index(class_mod(e.im_code().len() as u64, e.alphabet().k()))
}

pub fn heights(e: &Mk1Element) -> HeightReport {
    let part = e.part();
    let coll = part.coll();
    HeightReport {
        height_r: height_r(e),
        height_l_min: part.noncoll(),
        height_l_max: crate::words::mu(e.alphabet(), &part.max_reps()),
        height_l_ave: height_l_ave(e),
        height_l_med: height_l_med(e),
        coll,
        d_index: d_index_m(e),
    }
}

/// `f ≤_R g`, i.e. `f = g·α` for some `α`.
pub fn leq_r(f: &Mk1Element, g: &Mk1Element) -> bool {
    f.im_code().ess_leq(&g.im_code())
}

pub fn equiv_r(f: &Mk1Element, g: &Mk1Element) -> bool {
    leq_r(f, g) && leq_r(g, f)
}

/// `f ≤_L g`, i.e. `f = α·g` for some `α`.
///
/// Every class of `part(f)`, refined below the domain of
/// `M = max(part(g))`, must be closed under `p·u ↦ p'·u` for `p ~_M p'`.
pub fn leq_l(f: &Mk1Element, g: &Mk1Element) -> bool {
    if f.is_zero() {
        return true;
    }
    if g.is_zero() {
        return false;
    }
    let m = g.part().max_congruence();
    let mdom = m.code();
    let mut class_of: BTreeMap<&Word, &BTreeSet<Word>> = BTreeMap::new();
    for c in m.classes() {
        for w in c {
            class_of.insert(w, c);
        }
    }
    let mut cf = f.part();
    loop {
        let shallow = cf
            .classes()
            .find(|c| c.iter().any(|x| mdom.has_extension(x)))
            .cloned();
        match shallow {
            Some(c) => cf = cf.classwise_replace(&c).expect("class of cf"),
            None => break,
        }
    }
    let closed = cf.classes().all(|cls| {
        cls.iter().all(|x| {
            let Some(p) = mdom.prefix_of(x) else { return false };
            let u = x.suffix_from(p.len());
            class_of[p].iter().all(|p2| cls.contains(&p2.concat(&u)))
        })
    });
    closed
}

pub fn equiv_l(f: &Mk1Element, g: &Mk1Element) -> bool {
    leq_l(f, g) && leq_l(g, f)
}

/// `J`-equivalence in `M_{k,1}` coincides with `D`; decided by the index.
pub fn equiv_d(f: &Mk1Element, g: &Mk1Element) -> bool {
    d_index_m(f) == d_index_m(g)
}

fn check_unit_interval(alpha: Alphabet, h: &KRational) -> Result<()> {
    if h.base() != alpha.k() {
        return Err(Error::BaseMismatch(h.base(), alpha.k()));
    }
    if *h > KRational::one(alpha.k()) {
        return Err(Error::OutOfRange);
    }
    Ok(())
}

/// `id_{P_h}`: R- and L-height both equal `h`.
pub fn dense_chain_element(alpha: Alphabet, h: &KRational) -> Result<Mk1Element> {
    check_unit_interval(alpha, h)?;
    Ok(Mk1Element::partial_identity(&PrefixCode::build_p_h(alpha, h)?))
}

/// Replace the last word (canonical order) by its children until `len` is reached.
fn grow_by_corner(alpha: Alphabet, code: &mut Vec<Word>, len: usize) {
    while code.len() < len {
        let last = code.pop().expect("non-empty code");
        code.extend(alpha.letters().map(|a| last.child(a)));
    }
}

/// An injective element with `height_L = h1` and `height_R = h2`.
pub fn element_with_heights(alpha: Alphabet, h1: &KRational, h2: &KRational) -> Result<Mk1Element> {
    for h in [h1, h2] {
        check_unit_interval(alpha, h)?;
        if h.is_zero() {
            return Err(Error::OutOfRange);
        }
    }
    let k = alpha.k();
    let n1 = class_mod((h1.reduced_numerator() % (k - 1)).to_u64().expect("small"), k);
    let n2 = class_mod((h2.reduced_numerator() % (k - 1)).to_u64().expect("small"), k);
    if n1 != n2 {
        return Err(Error::IndexMismatch);
    }
    let mut p = PrefixCode::build_p_h(alpha, h1)?.canonical();
    let mut q = PrefixCode::build_p_h(alpha, h2)?.canonical();
    let target = p.len().max(q.len());
    grow_by_corner(alpha, &mut p, target);
    grow_by_corner(alpha, &mut q, target);
    p.sort_by(canonical_cmp);
    q.sort_by(canonical_cmp);
    Mk1Element::from_rows(alpha, p.into_iter().zip(q))
}

/// Which proof case produced a separating context.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeparationCase {
    /// One input is zero.
    Zero,
    /// Domains are not essentially equal.
    Domain,
    /// Domains agree, images are not essentially equal.
    Image,
    /// A common domain word has prefix-incomparable images.
    Incomparable,
    /// A common domain word has prefix-comparable, distinct images.
    Comparable,
}

/// Contexts with `left·f·right` and `left·g·right` separated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub left: Mk1Element,
    pub right: Mk1Element,
    pub case: SeparationCase,
    /// True if the sandwich of the first argument is the non-zero one.
    pub first_survives: bool,
}

impl Separation {
    pub fn sandwich(&self, e: &Mk1Element) -> Mk1Element {
        let inner = e.compose(&self.right).expect("same alphabet");
        self.left.compose(&inner).expect("same alphabet")
    }

    /// Exactly one sandwich is zero; the other is a single non-zero row.
    pub fn verify(&self, f: &Mk1Element, g: &Mk1Element) -> bool {
        let (sf, sg) = (self.sandwich(f), self.sandwich(g));
        let (live, dead) = if self.first_survives { (sf, sg) } else { (sg, sf) };
        dead.is_zero() && live.table().len() == 1
    }
}

/// A node `x0` with `x0A* ⊆ PA*` and `x0A* ∩ QA* = ∅`, if one exists.
fn region_outside(p: &PrefixCode, q: &PrefixCode) -> Option<Word> {
    let comp = q.complement();
    p.canonical().into_iter().find_map(|x| {
        if q.covers(&x) {
            return None;
        }
        let c = comp.iter().find(|c| c.comparable(&x)).expect("uncovered node meets the complement");
        Some(if c.len() > x.len() { c.clone() } else { x })
    })
}

fn fix(alpha: Alphabet, w: &Word) -> Mk1Element {
    Mk1Element::single_row(alpha, w.clone(), w.clone())
}

/// Two-sided contexts separating distinct elements.
pub fn separating_context(f: &Mk1Element, g: &Mk1Element) -> Result<Separation> {
    if f.alphabet() != g.alphabet() {
        return Err(Error::AlphabetMismatch(f.alphabet().k(), g.alphabet().k()));
    }
    if f == g {
        return Err(Error::NotDistinct);
    }
    let alpha = f.alphabet();
    let one = Mk1Element::identity(alpha);

    if f.is_zero() || g.is_zero() {
        let first_survives = g.is_zero();
        let live = if first_survives { f } else { g };
        let right = if live.table().len() == 1 {
            one.clone()
        } else {
            let x0 = live.dom_code().canonical().remove(0);
            fix(alpha, &x0)
        };
        return Ok(Separation { left: one, right, case: SeparationCase::Zero, first_survives });
    }

    let (df, dg) = (f.dom_code(), g.dom_code());
    for (p, q, first_survives) in [(&df, &dg, true), (&dg, &df, false)] {
        if let Some(x0) = region_outside(p, q) {
            return Ok(Separation { left: one, right: fix(alpha, &x0), case: SeparationCase::Domain, first_survives });
        }
    }

    let (tf, tg) = (f.image_code_table(), g.image_code_table());
    let (imf, img) = (f.im_code(), g.im_code());
    for (p, q, t, first_survives) in [(&imf, &img, &tf, true), (&img, &imf, &tg, false)] {
        if let Some(y0) = region_outside(p, q) {
            let (x, y) = t.rows().find(|(_, y)| y.is_prefix_of(&y0)).expect("y0 extends an image word");
            let x0 = x.concat(&y0.suffix_from(y.len()));
            return Ok(Separation {
                left: fix(alpha, &y0),
                right: fix(alpha, &x0),
                case: SeparationCase::Image,
                first_survives,
            });
        }
    }

    let m = f.table().max_domain_len().max(g.table().max_domain_len());
    let uf: Table = f.uniform_domain_restriction(m)?;
    let ug: Table = g.uniform_domain_restriction(m)?;
    let (x0, y0, y1) = uf
        .rows()
        .find_map(|(x, y0)| match ug.apply(x) {
            Applied::Value(y1) if &y1 != y0 => Some((x.clone(), y0.clone(), y1)),
            _ => None,
        })
        .expect("distinct elements with equal domains differ on a domain word");
    if !y0.comparable(&y1) {
        return Ok(Separation {
            left: fix(alpha, &y0),
            right: fix(alpha, &x0),
            case: SeparationCase::Incomparable,
            first_survives: true,
        });
    }
    // Extend by a letter that breaks comparability; the shorter image survives.
    let first_survives = y0.len() < y1.len();
    let (short, long) = if first_survives { (&y0, &y1) } else { (&y1, &y0) };
    let c = long.letters()[short.len()];
    let c2 = ((c as u32 + 1) % alpha.k()) as u8;
    Ok(Separation {
        left: fix(alpha, &short.child(c2)),
        right: fix(alpha, &x0.child(c2)),
        case: SeparationCase::Comparable,
        first_survives,
    })
}

/// Saturation `max(part(e))`.
pub fn max_part(e: &Mk1Element) -> Congruence {
    e.part().max_congruence()
}
