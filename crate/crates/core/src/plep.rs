//! The length-equality-preserving submonoids `plepM_{k,1}` and
//! `tlepM_{k,1}`, their D-classes, and the circuit-like generating set
//! `Γ ∪ τ` with partial-identity synthesis.

use std::fmt;

use num_bigint::BigUint;

use crate::element::{Mk1Element, Table};
use crate::error::{Error, Result};
use crate::green::height_r;
use crate::words::{Alphabet, PrefixCode, Word};

/// Uniform-domain representative; `None` when image lengths disagree.
fn fixed_length_table(e: &Mk1Element) -> Option<Table> {
    let t = e.uniform_domain_restriction(e.table().max_domain_len()).expect("max length");
    let first = t.rows().next().map(|(_, y)| y.len());
    let uniform = t.rows().all(|(_, y)| Some(y.len()) == first);
    uniform.then_some(t)
}

/// Equal-length inputs go to equal-length outputs.
pub fn is_plep(e: &Mk1Element) -> bool {
    e.is_zero() || fixed_length_table(e).is_some()
}

pub fn is_tlep(e: &Mk1Element) -> bool {
    is_plep(e) && e.is_total()
}

/// The fixed-length image code of a non-zero plep element.
pub fn fixed_image_code(e: &Mk1Element) -> Result<PrefixCode> {
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    let t = fixed_length_table(e).ok_or(Error::NotPlep)?;
    PrefixCode::new(e.alphabet(), t.rows().map(|(_, y)| y.clone()))
}

/// `num(μ(imC(e)))`, the index of the D-class in `plepM_{k,1}`.
pub fn d_index_plep(e: &Mk1Element) -> Result<BigUint> {
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !is_plep(e) {
        return Err(Error::NotPlep);
    }
    Ok(height_r(e).reduced_numerator())
}

pub fn d_equiv_plep(e1: &Mk1Element, e2: &Mk1Element) -> Result<bool> {
    for e in [e1, e2] {
        if !is_plep(e) {
            return Err(Error::NotPlep);
        }
    }
    match (e1.is_zero(), e2.is_zero()) {
        (true, true) => Ok(true),
        (false, false) => Ok(d_index_plep(e1)? == d_index_plep(e2)?),
        _ => Ok(false),
    }
}

/// `η_{Q,q0}`: identity on `Q`, every other word of `A^n` goes to `q0`.
pub fn eta_idempotent(q: &PrefixCode, q0: &Word) -> Result<Mk1Element> {
    if q.is_empty() || !q.contains(q0) {
        return Err(Error::RepNotInCode);
    }
    let n = q.fixed_length().ok_or(Error::NotFixedLength)?;
    let alpha = q.alphabet();
    let rows = alpha.words_of_length(n).into_iter().map(|x| {
        let y = if q.contains(&x) { x.clone() } else { q0.clone() };
        (x, y)
    });
    Mk1Element::from_rows(alpha, rows)
}

/// A tlep element whose plep D-index is `i`.
pub fn plep_element_with_index(alpha: Alphabet, i: u64) -> Result<Mk1Element> {
    let k = alpha.k() as u64;
    if i.is_multiple_of(k) {
        return Err(Error::DivisibleIndex(i));
    }
    let mut n = 1;
    while k.pow(n as u32) <= i {
        n += 1;
    }
    let words: Vec<Word> = alpha.words_of_length(n).into_iter().take(i as usize).collect();
    let q0 = words[0].clone();
    eta_idempotent(&PrefixCode::new(alpha, words)?, &q0)
}

/// `Q·A^d`.
fn expand(q: &PrefixCode, d: usize) -> PrefixCode {
    let tails = q.alphabet().words_of_length(d);
    PrefixCode::new(q.alphabet(), q.iter().flat_map(|w| tails.iter().map(move |u| w.concat(u))))
        .expect("extensions of a prefix code")
}

/// Exponent `j` with `big = small · k^j`, if any.
fn power_ratio(small: usize, big: usize, k: usize) -> Option<usize> {
    let (mut s, mut j) = (small, 0);
    while s < big {
        s *= k;
        j += 1;
    }
    (s == big).then_some(j)
}

fn codes_of_equal_size(e1: &Mk1Element, e2: &Mk1Element) -> Result<(PrefixCode, PrefixCode, usize, usize)> {
    if !d_equiv_plep(e1, e2)? || e1.is_zero() {
        return Err(Error::IndexMismatch);
    }
    let (q1, q2) = (fixed_image_code(e1)?, fixed_image_code(e2)?);
    let k = e1.alphabet().k() as usize;
    let (d1, d2) = if q1.len() <= q2.len() {
        (power_ratio(q1.len(), q2.len(), k).ok_or(Error::IndexMismatch)?, 0)
    } else {
        (0, power_ratio(q2.len(), q1.len(), k).ok_or(Error::IndexMismatch)?)
    };
    Ok((expand(&q1, d1), expand(&q2, d2), d1, d2))
}

/// Conjugation witnesses for D-equivalence in `tlepM_{k,1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlepWitness {
    pub eta1: Mk1Element,
    pub eta2: Mk1Element,
    pub b: Mk1Element,
    pub b_prime: Mk1Element,
}

/// Conjugation witnesses for D-equivalence in `plepM_{k,1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlepWitness {
    pub q1: PrefixCode,
    pub q2: PrefixCode,
    pub beta: Mk1Element,
    pub beta_inv: Mk1Element,
    pub tlep: Option<TlepWitness>,
}

impl PlepWitness {
    /// Every conjugation identity holds exactly.
    pub fn verify(&self) -> bool {
        let id1 = Mk1Element::partial_identity(&self.q1);
        let id2 = Mk1Element::partial_identity(&self.q2);
        let c = |f: &Mk1Element, g: &Mk1Element| f.compose(g).expect("same alphabet");
        let plep_ok = c(&self.beta_inv, &self.beta) == id1
            && c(&self.beta, &self.beta_inv) == id2
            && c(&self.beta, &c(&id1, &self.beta_inv)) == id2
            && [&self.beta, &self.beta_inv].iter().all(|e| is_plep(e));
        let tlep_ok = self.tlep.as_ref().is_none_or(|t| {
            c(&t.b_prime, &t.b) == t.eta1
                && c(&t.b, &t.b_prime) == t.eta2
                && c(&t.b, &c(&t.eta1, &t.b_prime)) == t.eta2
                && c(&t.b_prime, &c(&t.eta2, &t.b)) == t.eta1
                && c(&c(&t.b, &t.b_prime), &t.eta2) == t.eta2
                && [&t.b, &t.b_prime, &t.eta1, &t.eta2].iter().all(|e| is_tlep(e))
        });
        plep_ok && tlep_ok
    }
}

fn total_extension(alpha: Alphabet, from: &[Word], to: &[Word], n: usize, default: &Word) -> Result<Mk1Element> {
    let rows = alpha.words_of_length(n).into_iter().map(|x| {
        let y = from.iter().position(|w| *w == x).map_or_else(|| default.clone(), |i| to[i].clone());
        (x, y)
    });
    Mk1Element::from_rows(alpha, rows)
}

/// Sorted-order bijection `β: Q1 → Q2'` and, for tlep inputs, the total
/// maps `B, B'` through `η` idempotents with `β(q_{0,1}) = q'_{0,2}`.
pub fn plep_d_witness(e1: &Mk1Element, e2: &Mk1Element) -> Result<PlepWitness> {
    let (q1, q2, _, _) = codes_of_equal_size(e1, e2)?;
    let alpha = e1.alphabet();
    let w1: Vec<Word> = q1.iter().cloned().collect();
    let w2: Vec<Word> = q2.iter().cloned().collect();
    let beta = Mk1Element::from_rows(alpha, w1.iter().cloned().zip(w2.iter().cloned()))?;
    let beta_inv = Mk1Element::from_rows(alpha, w2.iter().cloned().zip(w1.iter().cloned()))?;
    let tlep = if is_tlep(e1) && is_tlep(e2) {
        let (n1, n2) = (q1.fixed_length().expect("fixed"), q2.fixed_length().expect("fixed"));
        Some(TlepWitness {
            eta1: eta_idempotent(&q1, &w1[0])?,
            eta2: eta_idempotent(&q2, &w2[0])?,
            b: total_extension(alpha, &w1, &w2, n1, &w2[0])?,
            b_prime: total_extension(alpha, &w2, &w1, n2, &w1[0])?,
        })
    } else {
        None
    };
    Ok(PlepWitness { q1, q2, beta, beta_inv, tlep })
}

/// Fixed-length representatives whose image codes have equal size.
///
/// Image lengths can differ: equal size and equal length together would
/// force equal R-heights.
pub fn common_image_refinement(e1: &Mk1Element, e2: &Mk1Element) -> Result<(Table, Table)> {
    let (_, _, d1, d2) = codes_of_equal_size(e1, e2)?;
    let m1 = e1.table().max_domain_len() + d1;
    let m2 = e2.table().max_domain_len() + d2;
    Ok((e1.uniform_domain_restriction(m1)?, e2.uniform_domain_restriction(m2)?))
}

/// A gate of `Γ`; letter `a_1` is false, every other letter is true.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    And,
    Or,
    Not,
    Fork,
    Proj2,
    /// `E_{a_i}` for the 0-based letter index.
    Eq(u8),
    /// `id_{A − a_1}`.
    Guard,
}

/// A symbol of `Γ ∪ τ`; `Tau(i)` is `τ_{i,i+1}` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    Gate(Gate),
    Tau(usize),
}

fn bit(b: bool) -> u8 {
    b as u8
}

/// The defining table of a gate.
pub fn gate_table(gate: Gate, alpha: Alphabet) -> Result<Table> {
    let pairs: Vec<(Vec<u8>, Vec<u8>)> = match gate {
        Gate::And | Gate::Or | Gate::Proj2 => alpha
            .letters()
            .flat_map(|i| alpha.letters().map(move |j| (i, j)))
            .map(|(i, j)| {
                let out = match gate {
                    Gate::And => bit(i != 0 && j != 0),
                    Gate::Or => bit(i != 0 || j != 0),
                    _ => j,
                };
                (vec![i, j], vec![out])
            })
            .collect(),
        Gate::Not => alpha.letters().map(|i| (vec![i], vec![bit(i == 0)])).collect(),
        Gate::Fork => alpha.letters().map(|i| (vec![i], vec![i, i])).collect(),
        Gate::Eq(l) => {
            if l as u32 >= alpha.k() {
                return Err(Error::UnknownGate(format!("E{}", l as u32 + 1)));
            }
            alpha.letters().map(|i| (vec![i], vec![bit(i == l)])).collect()
        }
        Gate::Guard => alpha.letters().skip(1).map(|i| (vec![i], vec![i])).collect(),
    };
    Table::new(alpha, pairs.into_iter().map(|(x, y)| (Word::new(x), Word::new(y))))
}

/// `τ_{i,i+1}` on `A^{i+1}`: `uab ↦ uba`.
pub fn tau_table(i: usize, alpha: Alphabet) -> Result<Table> {
    if i == 0 {
        return Err(Error::UnknownGate("tau(0)".into()));
    }
    let rows = alpha.words_of_length(i + 1).into_iter().map(|x| {
        let mut y = x.letters().to_vec();
        y.swap(i - 1, i);
        (x, Word::new(y))
    });
    Table::new(alpha, rows)
}

pub fn symbol_element(s: Symbol, alpha: Alphabet) -> Result<Mk1Element> {
    Ok(match s {
        Symbol::Gate(g) => gate_table(g, alpha)?,
        Symbol::Tau(i) => tau_table(i, alpha)?,
    }
    .normalize())
}

/// `c_Γ`: the longest word in any gate table.
pub fn c_gamma(alpha: Alphabet) -> usize {
    let mut gates = vec![Gate::And, Gate::Or, Gate::Not, Gate::Fork, Gate::Proj2, Gate::Guard];
    gates.extend(alpha.letters().map(Gate::Eq));
    gates
        .into_iter()
        .flat_map(|g| {
            let t = gate_table(g, alpha).expect("valid gate");
            t.rows().flat_map(|(x, y)| [x.len(), y.len()]).collect::<Vec<_>>()
        })
        .max()
        .unwrap_or(1)
}

/// A word over `Γ ∪ τ`, written left to right; the rightmost symbol acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GeneratorWord(pub Vec<Symbol>);

impl GeneratorWord {
    /// Gates count 1; `Tau(i)` counts `i + 1`.
    pub fn length(&self) -> usize {
        self.0
            .iter()
            .map(|s| match s {
                Symbol::Gate(_) => 1,
                Symbol::Tau(i) => i + 1,
            })
            .sum()
    }

    pub fn eval(&self, alpha: Alphabet) -> Result<Mk1Element> {
        let mut acc = Mk1Element::identity(alpha);
        for s in self.0.iter().rev() {
            acc = symbol_element(*s, alpha)?.compose(&acc)?;
        }
        Ok(acc)
    }

    /// `self · other`: `other` acts first.
    pub fn then_after(&self, other: &GeneratorWord) -> GeneratorWord {
        GeneratorWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn parse(alpha: Alphabet, text: &str) -> Result<GeneratorWord> {
        let mut out = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            for tok in line.split_whitespace() {
                out.push(parse_symbol(alpha, tok).map_err(|e| match e {
                    Error::UnknownGate(g) => Error::parse(ln + 1, format!("unknown symbol {g:?}")),
                    other => other,
                })?);
            }
        }
        Ok(GeneratorWord(out))
    }
}

fn parse_symbol(alpha: Alphabet, tok: &str) -> Result<Symbol> {
    let unknown = || Error::UnknownGate(tok.to_string());
    let g = match tok {
        "and" => Gate::And,
        "or" => Gate::Or,
        "not" => Gate::Not,
        "fork" => Gate::Fork,
        "proj2" => Gate::Proj2,
        "guard" => Gate::Guard,
        _ => {
            if let Some(i) = tok.strip_prefix("tau(").and_then(|r| r.strip_suffix(')')) {
                let i: usize = i.parse().map_err(|_| unknown())?;
                return if i >= 1 { Ok(Symbol::Tau(i)) } else { Err(unknown()) };
            }
            let i: u32 = tok.strip_prefix('E').and_then(|r| r.parse().ok()).ok_or_else(unknown)?;
            if i == 0 || i > alpha.k() {
                return Err(unknown());
            }
            Gate::Eq((i - 1) as u8)
        }
    };
    Ok(Symbol::Gate(g))
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Tau(i) => write!(f, "tau({i})"),
            Symbol::Gate(g) => match g {
                Gate::And => f.write_str("and"),
                Gate::Or => f.write_str("or"),
                Gate::Not => f.write_str("not"),
                Gate::Fork => f.write_str("fork"),
                Gate::Proj2 => f.write_str("proj2"),
                Gate::Guard => f.write_str("guard"),
                Gate::Eq(l) => write!(f, "E{}", *l as u32 + 1),
            },
        }
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Symbol::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Wire {
    Input(usize),
    Copy(usize),
    Test(usize),
    Acc,
    Flag,
}

/// Tracks wire positions; gates read the front of the word.
struct Circuit {
    wires: Vec<Wire>,
    ops: Vec<Symbol>,
}

impl Circuit {
    fn pos(&self, w: Wire) -> usize {
        self.wires.iter().position(|&x| x == w).expect("live wire")
    }

    /// Move the wire at index `from` to index `to <= from`.
    fn lift(&mut self, from: usize, to: usize) {
        for p in (to + 1..=from).rev() {
            self.wires.swap(p - 1, p);
            self.ops.push(Symbol::Tau(p));
        }
    }

    fn front(&mut self, ws: &[Wire]) {
        for (t, &w) in ws.iter().enumerate() {
            let from = self.pos(w);
            self.lift(from, t);
        }
    }

    fn gate(&mut self, g: Gate, inputs: &[Wire], outputs: &[Wire]) {
        self.front(inputs);
        self.wires.splice(0..inputs.len(), outputs.iter().copied());
        self.ops.push(Symbol::Gate(g));
    }

    fn into_word(self) -> GeneratorWord {
        GeneratorWord(self.ops.into_iter().rev().collect())
    }
}

/// A word over `Γ ∪ τ` evaluating to `id_{A^m − {s}}`, `m = |s|`.
///
/// Stages: fork copies of every input letter, test each copy against
/// `s_i`, fold the tests with a left comb of `and`, negate, guard, and
/// drop the flag with `proj2`.
pub fn synthesize_partial_identity(s: &Word) -> Result<GeneratorWord> {
    let m = s.len();
    if m == 0 {
        return Err(Error::EmptyTarget);
    }
    let mut c = Circuit { wires: (0..m).map(Wire::Input).collect(), ops: Vec::new() };
    for i in 0..m {
        c.gate(Gate::Fork, &[Wire::Input(i)], &[Wire::Input(i), Wire::Copy(i)]);
    }
    for i in 0..m {
        c.gate(Gate::Eq(s.letters()[i]), &[Wire::Copy(i)], &[Wire::Test(i)]);
    }
    let mut acc = Wire::Test(0);
    for i in 1..m {
        c.gate(Gate::And, &[acc, Wire::Test(i)], &[Wire::Acc]);
        acc = Wire::Acc;
    }
    c.gate(Gate::Not, &[acc], &[Wire::Flag]);
    let order: Vec<Wire> = std::iter::once(Wire::Flag).chain((0..m).map(Wire::Input)).collect();
    c.front(&order);
    c.gate(Gate::Guard, &[Wire::Flag], &[Wire::Flag]);
    c.gate(Gate::Proj2, &[Wire::Flag, Wire::Input(0)], &[Wire::Input(0)]);
    Ok(c.into_word())
}

/// `id_P` for `P ⊆ A^m` as a product of synthesized partial identities.
pub fn synthesize_fixed_length_identity(alpha: Alphabet, p: &PrefixCode, m: usize) -> Result<GeneratorWord> {
    if p.iter().any(|w| w.len() != m) {
        return Err(Error::NotFixedLength);
    }
    let mut word = GeneratorWord::default();
    for s in alpha.words_of_length(m) {
        if !p.contains(&s) {
            word = word.then_after(&synthesize_partial_identity(&s)?);
        }
    }
    Ok(word)
}
