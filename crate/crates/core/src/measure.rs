//! Measure computations through acyclic automata, the `φ_B` counting
//! reduction, and the padding constructions relating measure and
//! counting classes.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::element::Mk1Element;
use crate::error::{Error, Result};
use crate::kary::KRational;
use crate::plep::{c_gamma, GeneratorWord};
use crate::words::{is_prefix_code, Alphabet, PrefixCode, Word};

/// A partial deterministic automaton with one start and one accept state.
///
/// Construction does not check acyclicity; [`dfa_measure`] does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcyclicDfa {
    alpha: Alphabet,
    num_states: usize,
    start: usize,
    accept: usize,
    edges: BTreeMap<(usize, u8), usize>,
}

impl AcyclicDfa {
    pub fn new(
        alpha: Alphabet,
        num_states: usize,
        start: usize,
        accept: usize,
        edges: impl IntoIterator<Item = ((usize, u8), usize)>,
    ) -> Result<Self> {
        let edges: BTreeMap<_, _> = edges.into_iter().collect();
        let in_range = |q: usize| q < num_states;
        if !in_range(start) || !in_range(accept) || edges.iter().any(|(&(p, _), &q)| !in_range(p) || !in_range(q)) {
            return Err(Error::OutOfRange);
        }
        if let Some(&(_, a)) = edges.keys().find(|(_, a)| *a as u32 >= alpha.k()) {
            return Err(Error::LetterOutOfRange { letter: a as u32, k: alpha.k() });
        }
        Ok(AcyclicDfa { alpha, num_states, start, accept, edges })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alpha
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn accept(&self) -> usize {
        self.accept
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, u8, usize)> + '_ {
        self.edges.iter().map(|(&(p, a), &q)| (p, a, q))
    }

    pub fn step(&self, q: usize, a: u8) -> Option<usize> {
        self.edges.get(&(q, a)).copied()
    }

    pub fn accepts(&self, w: &Word) -> bool {
        w.letters().iter().try_fold(self.start, |q, &a| self.step(q, a)) == Some(self.accept)
    }

    /// Accepted words of length at most `depth`, in dictionary order.
    pub fn language(&self, depth: usize) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        let mut stack = vec![(self.start, Word::empty())];
        while let Some((q, w)) = stack.pop() {
            if q == self.accept {
                out.insert(w.clone());
            }
            if w.len() < depth {
                for a in self.alpha.letters() {
                    if let Some(r) = self.step(q, a) {
                        stack.push((r, w.child(a)));
                    }
                }
            }
        }
        out
    }

    /// Length of the shortest accepted word (breadth-first search).
    pub fn shortest_accepted(&self) -> Option<usize> {
        let mut dist = vec![None; self.num_states];
        dist[self.start] = Some(0);
        let mut queue = VecDeque::from([self.start]);
        while let Some(q) = queue.pop_front() {
            let d = dist[q].expect("queued states have a distance");
            if q == self.accept {
                return Some(d);
            }
            for a in self.alpha.letters() {
                if let Some(r) = self.step(q, a) {
                    if dist[r].is_none() {
                        dist[r] = Some(d + 1);
                        queue.push_back(r);
                    }
                }
            }
        }
        None
    }

    /// Parses the edge-list dump; state names are arbitrary tokens.
    pub fn parse(k: Option<u32>, text: &str) -> Result<AcyclicDfa> {
        let mut k = k;
        let mut names: HashMap<String, usize> = HashMap::new();
        let mut id = |s: &str| {
            let n = names.len();
            *names.entry(s.to_string()).or_insert(n)
        };
        let (mut start, mut accept) = (None, None);
        let mut raw_edges = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let ln = i + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("start:") {
                start = Some(id(rest.trim()));
            } else if let Some(rest) = line.strip_prefix("accept:") {
                accept = Some(id(rest.trim()));
            } else if let Some(rest) = line.strip_prefix("k ") {
                k = Some(rest.trim().parse().map_err(|_| Error::parse(ln, "bad k header"))?);
            } else {
                let toks: Vec<&str> = line.split_whitespace().collect();
                let [p, arrow, q] = toks[..] else {
                    return Err(Error::parse(ln, "expected `p --a--> q`"));
                };
                let letter = arrow
                    .strip_prefix("--")
                    .and_then(|r| r.strip_suffix("-->"))
                    .ok_or_else(|| Error::parse(ln, "expected `--a-->`"))?;
                let w = Word::parse(letter).map_err(|_| Error::parse(ln, "bad letter"))?;
                if w.len() != 1 {
                    return Err(Error::parse(ln, "edge label must be one letter"));
                }
                raw_edges.push(((id(p), w.letters()[0]), id(q), ln));
            }
        }
        let alpha = Alphabet::new(k.ok_or_else(|| Error::parse(0, "missing k (header `k N` or --k)"))?)?;
        let start = start.ok_or_else(|| Error::parse(0, "missing start: line"))?;
        let accept = accept.ok_or_else(|| Error::parse(0, "missing accept: line"))?;
        // Dumped names `q0..q{n-1}` keep their numbering.
        let numbered: Option<Vec<usize>> = {
            let mut by_id = vec![0; names.len()];
            for (name, &i) in &names {
                match name.strip_prefix('q').and_then(|r| r.parse::<usize>().ok()).filter(|&j| j < names.len()) {
                    Some(j) => by_id[i] = j,
                    None => return Self::build(alpha, names.len(), start, accept, raw_edges, |i| i),
                }
            }
            let distinct: BTreeSet<usize> = by_id.iter().copied().collect();
            (distinct.len() == by_id.len()).then_some(by_id)
        };
        match numbered {
            Some(by_id) => Self::build(alpha, names.len(), start, accept, raw_edges, |i| by_id[i]),
            None => Self::build(alpha, names.len(), start, accept, raw_edges, |i| i),
        }
    }

    fn build(
        alpha: Alphabet,
        n: usize,
        start: usize,
        accept: usize,
        raw_edges: Vec<((usize, u8), usize, usize)>,
        relabel: impl Fn(usize) -> usize,
    ) -> Result<AcyclicDfa> {
        let mut edges = BTreeMap::new();
        for ((p, a), q, ln) in raw_edges {
            let (key, q) = ((relabel(p), a), relabel(q));
            if edges.insert(key, q).is_some_and(|old| old != q) {
                return Err(Error::parse(ln, "nondeterministic edge"));
            }
        }
        AcyclicDfa::new(alpha, n, relabel(start), relabel(accept), edges)
    }
}

impl fmt::Display for AcyclicDfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k {}", self.alpha.k())?;
        writeln!(f, "start: q{}", self.start)?;
        writeln!(f, "accept: q{}", self.accept)?;
        for (p, a, q) in self.edges() {
            writeln!(f, "q{p} --{}--> q{q}", Word::new(vec![a]))?;
        }
        Ok(())
    }
}

/// The minimal acyclic automaton of a finite prefix code.
///
/// States are residual languages; the residual `{ε}` is the single accept
/// state. States are numbered breadth-first from the start state.
pub fn trie_dfa(alpha: Alphabet, lang: &BTreeSet<Word>) -> Result<AcyclicDfa> {
    if lang.is_empty() {
        return Err(Error::EmptyLanguage);
    }
    for w in lang {
        alpha.check(w)?;
    }
    if !is_prefix_code(lang) {
        return Err(Error::NotPrefixCode);
    }
    let mut memo: HashMap<Vec<(u8, usize)>, usize> = HashMap::new();
    let mut out_edges: Vec<Vec<(u8, usize)>> = Vec::new();
    let root = intern(alpha, lang.iter().map(|w| w.letters()).collect(), &mut memo, &mut out_edges);
    let accept_raw = memo[&Vec::new()];

    let mut order = vec![usize::MAX; out_edges.len()];
    let mut queue = VecDeque::from([root]);
    order[root] = 0;
    let mut next = 1;
    while let Some(q) = queue.pop_front() {
        for &(_, r) in &out_edges[q] {
            if order[r] == usize::MAX {
                order[r] = next;
                next += 1;
                queue.push_back(r);
            }
        }
    }
    let edges = out_edges
        .iter()
        .enumerate()
        .flat_map(|(p, es)| es.iter().map(move |&(a, q)| ((p, a), q)))
        .map(|((p, a), q)| ((order[p], a), order[q]));
    AcyclicDfa::new(alpha, next, 0, order[accept_raw], edges)
}

/// Hash-conses the residual automaton of `words` (a prefix code).
fn intern(
    alpha: Alphabet,
    words: Vec<&[u8]>,
    memo: &mut HashMap<Vec<(u8, usize)>, usize>,
    out_edges: &mut Vec<Vec<(u8, usize)>>,
) -> usize {
    let mut sig = Vec::new();
    if !(words.len() == 1 && words[0].is_empty()) {
        for a in alpha.letters() {
            let tails: Vec<&[u8]> = words.iter().filter(|w| w[0] == a).map(|w| &w[1..]).collect();
            if !tails.is_empty() {
                sig.push((a, intern(alpha, tails, memo, out_edges)));
            }
        }
    }
    if let Some(&q) = memo.get(&sig) {
        return q;
    }
    out_edges.push(sig.clone());
    memo.insert(sig, out_edges.len() - 1);
    out_edges.len() - 1
}

/// `μ(q)` for every state: `μ(q_0) = 1`, `μ(q) = (1/k) Σ_{edges p→q} μ(p)`.
///
/// States are finalized in source-elimination order.
pub fn state_measures(d: &AcyclicDfa) -> Result<Vec<KRational>> {
    let k = d.alpha.k();
    let mut indeg = vec![0usize; d.num_states];
    for (_, _, q) in d.edges() {
        indeg[q] += 1;
    }
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); d.num_states];
    for (p, _, q) in d.edges() {
        succ[p].push(q);
    }
    let mut sums = vec![KRational::zero(k); d.num_states];
    let mut out = vec![KRational::zero(k); d.num_states];
    let mut ready: VecDeque<usize> = (0..d.num_states).filter(|&q| indeg[q] == 0).collect();
    let mut done = 0;
    while let Some(p) = ready.pop_front() {
        done += 1;
        let base = if p == d.start { KRational::one(k) } else { KRational::zero(k) };
        out[p] = &base + &sums[p].scale_pow(-1);
        for &q in &succ[p] {
            sums[q] = &sums[q] + &out[p];
            indeg[q] -= 1;
            if indeg[q] == 0 {
                ready.push_back(q);
            }
        }
    }
    if done < d.num_states {
        return Err(Error::CyclicGraph);
    }
    Ok(out)
}

/// `μ(q_acc)`, the measure of the accepted prefix code.
pub fn dfa_measure(d: &AcyclicDfa) -> Result<KRational> {
    Ok(state_measures(d)?.swap_remove(d.accept))
}

fn fiber(e: &Mk1Element, y: &Word) -> Result<BTreeSet<Word>> {
    e.image_code_table().fibers().remove(y).ok_or_else(|| Error::NotInImageCode(y.to_string()))
}

/// `μ(φ⁻¹(y))` through the fiber automaton.
pub fn preimage_measure(e: &Mk1Element, y: &Word) -> Result<KRational> {
    dfa_measure(&trie_dfa(e.alphabet(), &fiber(e, y)?)?)
}

/// `μ(m_y) = k^(-|m_y|)` for a shortest preimage `m_y`.
pub fn min_rep_measure(e: &Mk1Element, y: &Word) -> Result<KRational> {
    let d = trie_dfa(e.alphabet(), &fiber(e, y)?)?;
    Ok(e.alphabet().unit(d.shortest_accepted().expect("accept state is reachable")))
}

/// Height data assembled from per-fiber automata only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DfaHeights {
    pub height_r: KRational,
    pub mu_dom: KRational,
    pub noncoll: KRational,
    pub coll: KRational,
}

impl fmt::Display for DfaHeights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "height_R {}", self.height_r)?;
        writeln!(f, "mu_dom {}", self.mu_dom)?;
        writeln!(f, "noncoll {}", self.noncoll)?;
        writeln!(f, "coll {}", self.coll)
    }
}

pub fn heights_via_dfa(e: &Mk1Element) -> DfaHeights {
    let k = e.alphabet().k();
    let (mut height_r, mut mu_dom, mut noncoll) = (KRational::zero(k), KRational::zero(k), KRational::zero(k));
    for (y, fiber) in e.image_code_table().fibers() {
        let d = trie_dfa(e.alphabet(), &fiber).expect("fibers are non-empty prefix codes");
        height_r = &height_r + &e.alphabet().unit(y.len());
        mu_dom = &mu_dom + &dfa_measure(&d).expect("trie automata are acyclic");
        noncoll = &noncoll + &e.alphabet().unit(d.shortest_accepted().expect("accept state is reachable"));
    }
    DfaHeights { height_r, mu_dom, coll: &KRational::one(k) - &noncoll, noncoll }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Const(bool),
    /// `x_i`, 1-based.
    X(usize),
    /// `y_i`, 1-based.
    Y(usize),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Bit `i - 1` of `x` holds `x_i`; likewise for `y`.
    pub fn eval(&self, x: u64, y: u64) -> bool {
        match self {
            Expr::Const(b) => *b,
            Expr::X(i) => x >> (i - 1) & 1 == 1,
            Expr::Y(i) => y >> (i - 1) & 1 == 1,
            Expr::Not(a) => !a.eval(x, y),
            Expr::And(a, b) => a.eval(x, y) && b.eval(x, y),
            Expr::Or(a, b) => a.eval(x, y) || b.eval(x, y),
        }
    }

    fn max_vars(&self) -> (usize, usize) {
        match self {
            Expr::Const(_) => (0, 0),
            Expr::X(i) => (*i, 0),
            Expr::Y(i) => (0, *i),
            Expr::Not(a) => a.max_vars(),
            Expr::And(a, b) | Expr::Or(a, b) => {
                let (p, q) = (a.max_vars(), b.max_vars());
                (p.0.max(q.0), p.1.max(q.1))
            }
        }
    }

    fn prec(&self) -> u8 {
        match self {
            Expr::Or(..) => 0,
            Expr::And(..) => 1,
            _ => 2,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            f.write_str("(")?;
            self.write(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Const(b) => f.write_str(if *b { "1" } else { "0" }),
            Expr::X(i) => write!(f, "x{i}"),
            Expr::Y(i) => write!(f, "y{i}"),
            Expr::Not(a) => {
                f.write_str("!")?;
                a.write(f, 2)
            }
            Expr::And(a, b) => {
                a.write(f, 1)?;
                f.write_str(" & ")?;
                b.write(f, 2)
            }
            Expr::Or(a, b) => {
                a.write(f, 0)?;
                f.write_str(" | ")?;
                b.write(f, 1)
            }
        }
    }
}

/// `B(x, y)` with `x ∈ {0,1}^m` universally quantified and `y ∈ {0,1}^n` counted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BooleanFormula {
    m: usize,
    n: usize,
    expr: Expr,
}

/// Counting and enumeration stay below `2^MAX_VARS` assignments.
pub const MAX_VARS: usize = 24;

impl BooleanFormula {
    pub fn new(m: usize, n: usize, expr: Expr) -> Result<Self> {
        let (mx, my) = expr.max_vars();
        if mx > m {
            return Err(Error::ArityMismatch(format!("x{mx}")));
        }
        if my > n {
            return Err(Error::ArityMismatch(format!("y{my}")));
        }
        Ok(BooleanFormula { m, n, expr })
    }

    /// Disjunction of minterms; `table[x | y << m]` is the value at `(x, y)`.
    pub fn from_truth_table(m: usize, n: usize, table: &[bool]) -> Result<Self> {
        if m + n > MAX_VARS {
            return Err(Error::TooLarge(m + n));
        }
        if table.len() != 1 << (m + n) {
            return Err(Error::OutOfRange);
        }
        let lit = |v: Expr, on: bool| if on { v } else { Expr::Not(Box::new(v)) };
        let mut expr: Option<Expr> = None;
        for (idx, _) in table.iter().enumerate().filter(|(_, &b)| b) {
            let mut term: Option<Expr> = None;
            let vars = (1..=m).map(|i| lit(Expr::X(i), idx >> (i - 1) & 1 == 1))
                .chain((1..=n).map(|i| lit(Expr::Y(i), idx >> (m + i - 1) & 1 == 1)));
            for v in vars {
                term = Some(match term {
                    None => v,
                    Some(t) => Expr::And(Box::new(t), Box::new(v)),
                });
            }
            let term = term.unwrap_or(Expr::Const(true));
            expr = Some(match expr {
                None => term,
                Some(e) => Expr::Or(Box::new(e), Box::new(term)),
            });
        }
        BooleanFormula::new(m, n, expr.unwrap_or(Expr::Const(false)))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }

    pub fn eval(&self, x: u64, y: u64) -> bool {
        self.expr.eval(x, y)
    }

    /// Header `m=<int> n=<int>`, then one expression over `x<i>`, `y<i>`,
    /// `0`, `1`, `!`, `&`, `|` and parentheses; `#` starts a comment.
    pub fn parse(text: &str) -> Result<BooleanFormula> {
        let mut toks = tokenize(text)?;
        let (m, n) = parse_header(&mut toks)?;
        let mut p = Parser { toks, pos: 0 };
        let expr = p.or()?;
        if let Some((ln, t)) = p.toks.get(p.pos) {
            return Err(Error::parse(*ln, format!("unexpected token {t:?}")));
        }
        BooleanFormula::new(m, n, expr)
    }
}

impl fmt::Display for BooleanFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "m={} n={}", self.m, self.n)?;
        self.expr.write(f, 0)?;
        writeln!(f)
    }
}

fn tokenize(text: &str) -> Result<VecDeque<(usize, String)>> {
    let mut out = VecDeque::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let mut chars = line.chars().peekable();
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
            } else if "()!&|".contains(c) {
                out.push_back((i + 1, c.to_string()));
                chars.next();
            } else if c.is_ascii_alphanumeric() || c == '=' {
                let mut t = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '=' {
                        t.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push_back((i + 1, t));
            } else {
                return Err(Error::parse(i + 1, format!("unexpected character {c:?}")));
            }
        }
    }
    Ok(out)
}

fn parse_header(toks: &mut VecDeque<(usize, String)>) -> Result<(usize, usize)> {
    let mut field = |name: &str| -> Result<usize> {
        let (ln, t) = toks.pop_front().ok_or_else(|| Error::parse(1, "missing header `m=<int> n=<int>`"))?;
        t.strip_prefix(name)
            .and_then(|r| r.strip_prefix('='))
            .and_then(|r| r.parse().ok())
            .ok_or_else(|| Error::parse(ln, format!("expected {name}=<int>")))
    };
    Ok((field("m")?, field("n")?))
}

struct Parser {
    toks: VecDeque<(usize, String)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&str> {
        self.toks.get(self.pos).map(|(_, t)| t.as_str())
    }

    fn line(&self) -> usize {
        self.toks.get(self.pos).or(self.toks.back()).map_or(1, |(l, _)| *l)
    }

    fn or(&mut self) -> Result<Expr> {
        let mut e = self.and()?;
        while self.peek() == Some("|") {
            self.pos += 1;
            e = Expr::Or(Box::new(e), Box::new(self.and()?));
        }
        Ok(e)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        while self.peek() == Some("&") {
            self.pos += 1;
            e = Expr::And(Box::new(e), Box::new(self.unary()?));
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr> {
        let line = self.line();
        let Some(t) = self.peek().map(str::to_string) else {
            return Err(Error::parse(line, "unexpected end of formula"));
        };
        self.pos += 1;
        match t.as_str() {
            "!" => Ok(Expr::Not(Box::new(self.unary()?))),
            "(" => {
                let e = self.or()?;
                if self.peek() != Some(")") {
                    return Err(Error::parse(self.line(), "expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            "0" => Ok(Expr::Const(false)),
            "1" => Ok(Expr::Const(true)),
            _ => {
                let var = |p: char| t.strip_prefix(p).and_then(|r| r.parse::<usize>().ok()).filter(|&i| i >= 1);
                if let Some(i) = var('x') {
                    Ok(Expr::X(i))
                } else if let Some(i) = var('y') {
                    Ok(Expr::Y(i))
                } else {
                    Err(Error::parse(line, format!("unexpected token {t:?}")))
                }
            }
        }
    }
}

/// `(N_{B,1}, N_{B,0})`: the numbers of `y` with `B(·, y)` constantly 1, resp. 0.
pub fn count_forall_sat(b: &BooleanFormula) -> Result<(u64, u64)> {
    if b.m + b.n > MAX_VARS {
        return Err(Error::TooLarge(b.m + b.n));
    }
    let (mut ones, mut zeros) = (0, 0);
    for y in 0..1u64 << b.n {
        let mut vals = (0..1u64 << b.m).map(|x| b.eval(x, y));
        let first = vals.next().expect("at least one x");
        if vals.all(|v| v == first) {
            if first {
                ones += 1;
            } else {
                zeros += 1;
            }
        }
    }
    Ok((ones, zeros))
}

/// `β(x, x_{m+1}, y) = x_{m+1} ∨ B(x, y)` unless `B` already has `∀y ∃x B = 1`.
pub fn ensure_surjectivity(b: &BooleanFormula) -> Result<BooleanFormula> {
    if count_forall_sat(b)?.1 == 0 {
        return Ok(b.clone());
    }
    let expr = Expr::Or(Box::new(Expr::X(b.m + 1)), Box::new(b.expr.clone()));
    BooleanFormula::new(b.m + 1, b.n, expr)
}

fn bits(v: u64, len: usize) -> impl Iterator<Item = u8> {
    (0..len).map(move |j| (v >> j & 1) as u8)
}

/// The binary element `φ_B`: `0·y·x ↦ B(x,y)·y` and `1·y·w ↦ 0·y` for
/// `|y| = n`, `|x| = m`, `|w| = m + 1`.
pub fn phi_b(b: &BooleanFormula) -> Result<Mk1Element> {
    if b.m + b.n + 2 > MAX_VARS {
        return Err(Error::TooLarge(b.m + b.n));
    }
    if count_forall_sat(b)?.1 != 0 {
        return Err(Error::NotSurjective);
    }
    let alpha = Alphabet::new(2)?;
    let mut rows = Vec::with_capacity(3 << (b.m + b.n));
    for y in 0..1u64 << b.n {
        let yw: Vec<u8> = bits(y, b.n).collect();
        for x in 0..1u64 << b.m {
            let dom = std::iter::once(0).chain(yw.iter().copied()).chain(bits(x, b.m)).collect();
            let img = std::iter::once(b.eval(x, y) as u8).chain(yw.iter().copied()).collect();
            rows.push((Word::new(dom), Word::new(img)));
        }
        let img = Word::new(std::iter::once(0).chain(yw.iter().copied()).collect());
        for w in 0..1u64 << (b.m + 1) {
            let dom = std::iter::once(1).chain(yw.iter().copied()).chain(bits(w, b.m + 1)).collect();
            rows.push((Word::new(dom), img.clone()));
        }
    }
    Mk1Element::from_rows(alpha, rows)
}

/// `2^(-m) − 2^(-(n+m+2))·N`; equals `2^(-n) − 2^(-(2n+2))·N` when `m = n`.
pub fn expected_noncoll(m: usize, n: usize, count: u64) -> KRational {
    let head = KRational::unit(2, m as u64);
    let tail = KRational::new(2, count, (n + m + 2) as u64).expect("base 2");
    &head - &tail
}

/// `N = 2^(n+2) − noncoll·2^(n+m+2)`.
pub fn recover_count(noncoll: &KRational, m: usize, n: usize) -> Result<u64> {
    let lead = KRational::from_integer(2, BigUint::from(1u8) << (n + 2));
    let diff = lead.checked_sub(&noncoll.scale_pow((n + m + 2) as i64))?;
    if diff.exponent() != 0 {
        return Err(Error::OutOfRange);
    }
    diff.numerator().to_u64().ok_or(Error::OutOfRange)
}

/// `c(w)·a_1^(2p − 2|w|)` with `c(a_i) = a_i a_2`; always of length `2p`.
pub fn pad_encode(alpha: Alphabet, w: &Word, p: usize) -> Result<Word> {
    alpha.check(w)?;
    if w.len() > p {
        return Err(Error::TooLong);
    }
    let mut out: Vec<u8> = w.letters().iter().flat_map(|&a| [a, 1]).collect();
    out.resize(2 * p, 0);
    Ok(Word::new(out))
}

/// Replaces each code by all of its length-`p` extensions.
pub fn fixedlen_complete(pairs: &[(Word, PrefixCode)], p: usize) -> Result<Vec<(Word, PrefixCode)>> {
    pairs
        .iter()
        .map(|(v, code)| {
            if code.max_len() > p {
                return Err(Error::TooLong);
            }
            let alpha = code.alphabet();
            let ext = code.iter().flat_map(|w| alpha.words_of_length(p - w.len()).into_iter().map(move |u| w.concat(&u)));
            Ok((v.clone(), PrefixCode::new(alpha, ext)?))
        })
        .collect()
}

/// `|x| ≤ |y| + c_Γ·|W|` for a shortest preimage `x` of `y`, when one exists.
pub fn length_bound_check(alpha: Alphabet, word: &GeneratorWord, y: &Word) -> Result<bool> {
    let e = word.eval(alpha)?;
    let shortest = e
        .table()
        .rows()
        .filter(|(_, q)| q.is_prefix_of(y))
        .map(|(p, q)| p.len() + y.len() - q.len())
        .min();
    Ok(shortest.is_none_or(|len| len <= y.len() + c_gamma(alpha) * word.length()))
}
