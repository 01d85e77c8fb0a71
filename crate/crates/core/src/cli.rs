//! Batch front end. Exit codes: 0 success, 1 malformed input or usage,
//! 2 domain error (reason code on stderr).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::element::Mk1Element;
use crate::error::Error;
use crate::green;
use crate::kary::KRational;
use crate::measure::{self, AcyclicDfa, BooleanFormula};
use crate::plep::{self, GeneratorWord};
use crate::text;
use crate::words::{Alphabet, PrefixCode, Word};

#[derive(Parser, Debug)]
#[command(name = "mk1", version, about = "Exact computations in the Thompson-Higman monoids M_{k,1}")]
struct Cli {
    /// Alphabet size for files without a `k` header.
    #[arg(long, global = true)]
    k: Option<u32>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Relation {
    #[value(name = "leqR")]
    LeqR,
    #[value(name = "leqL")]
    LeqL,
    #[value(name = "eqR")]
    EqR,
    #[value(name = "eqL")]
    EqL,
    #[value(name = "eqD-M")]
    EqDM,
    #[value(name = "eqD-plep")]
    EqDPlep,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Monoid {
    #[value(name = "M")]
    M,
    #[value(name = "plep")]
    Plep,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form (maximal extension) of a table.
    Normalize { file: PathBuf },
    /// Print f∘g (g acts first).
    Compose { f: PathBuf, g: PathBuf },
    /// Measure of a word list, or of the image set of a table.
    Measure { file: PathBuf },
    /// Print the R- and L-heights, collision and D-index.
    Heights {
        file: PathBuf,
        /// Recompute through per-fiber automata instead.
        #[arg(long)]
        dfa: bool,
    },
    /// Decide a Green relation between two elements.
    Green { relation: Relation, f: PathBuf, g: PathBuf },
    /// D-class index in M_{k,1} or in plepM_{k,1}.
    Dindex { monoid: Monoid, file: PathBuf },
    /// Elements of a dense R-chain, one per height (needs --k).
    Chain { heights: Vec<String> },
    /// An injective element with L-height h1 and R-height h2 (needs --k).
    WithHeights { h1: String, h2: String },
    /// A generator word for id on A^m minus {s} (needs --k).
    SynthId { word: String },
    /// Evaluate a generator-word file (needs --k).
    EvalGen { file: PathBuf },
    /// Build φ_B for a formula file and report its non-collision.
    PhiB {
        file: PathBuf,
        /// Also verify the counting identity against brute force.
        #[arg(long)]
        check: bool,
        /// Print the table of φ_B.
        #[arg(long)]
        table: bool,
    },
    /// Brute-force N_{B,1} and N_{B,0}.
    CountForallsat { file: PathBuf },
    /// Measure accepted by a DFA dump, or by the automaton of a word list.
    DfaMu {
        file: PathBuf,
        /// Read a word list and print its minimal automaton first.
        #[arg(long)]
        words: bool,
    },
    /// Conjugation witnesses for plep D-equivalence.
    WitnessPlep { f: PathBuf, g: PathBuf },
    /// Contexts separating two distinct elements.
    Separate { f: PathBuf, g: PathBuf },
}

enum Failure {
    Input(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse() {
            Failure::Input(e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

type Out<'a> = &'a mut dyn Write;

/// Runs one invocation; returns the process exit code.
pub fn run<I, T>(args: I, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut buf = Vec::new();
    match dispatch(&cli, &mut buf) {
        Ok(()) => {
            let _ = out.write_all(&buf);
            0
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}\nreason={}", e.reason());
            2
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn element(path: &Path, k: Option<u32>) -> Result<Mk1Element, Failure> {
    Ok(text::parse_element(&read(path)?, k)?)
}

fn alphabet(k: Option<u32>) -> Result<Alphabet, Failure> {
    let k = k.ok_or_else(|| Failure::Input("this subcommand needs --k".into()))?;
    Ok(Alphabet::new(k)?)
}

fn krational(k: u32, s: &str) -> Result<KRational, Failure> {
    Ok(KRational::parse(k, s)?)
}

fn verdict(out: Out, holds: bool, yes: &str, no: &str) -> std::io::Result<()> {
    writeln!(out, "{holds}")?;
    writeln!(out, "reason={}", if holds { yes } else { no })
}

fn dispatch(cli: &Cli, out: Out) -> Result<(), Failure> {
    let k = cli.k;
    let io = |e: std::io::Error| Failure::Input(e.to_string());
    match &cli.cmd {
        Command::Normalize { file } => write!(out, "{}", element(file, k)?).map_err(io)?,
        Command::Compose { f, g } => {
            let (f, g) = (element(f, k)?, element(g, k)?);
            write!(out, "{}", f.compose(&g)?).map_err(io)?
        }
        Command::Measure { file } => {
            let src = read(file)?;
            let value = if src.contains("->") {
                text::parse_table(&src, k)?.image_mu()
            } else {
                let (alpha, words) = text::parse_words(&src, k)?;
                PrefixCode::new(alpha, words)?.mu()
            };
            writeln!(out, "{value}").map_err(io)?
        }
        Command::Heights { file, dfa } => {
            let e = element(file, k)?;
            if *dfa {
                write!(out, "{}", measure::heights_via_dfa(&e)).map_err(io)?
            } else {
                write!(out, "{}", green::heights(&e)).map_err(io)?
            }
        }
        Command::Green { relation, f, g } => {
            let (f, g) = (element(f, k)?, element(g, k)?);
            if f.alphabet() != g.alphabet() {
                return Err(Error::AlphabetMismatch(f.alphabet().k(), g.alphabet().k()).into());
            }
            let v = match relation {
                Relation::LeqR => (green::leq_r(&f, &g), "image-ideal-contained", "image-ideal-not-contained"),
                Relation::LeqL => (green::leq_l(&f, &g), "partition-coarser", "partition-not-coarser"),
                Relation::EqR => (green::equiv_r(&f, &g), "image-ideals-equal", "image-ideals-differ"),
                Relation::EqL => (green::equiv_l(&f, &g), "partitions-equal", "partitions-differ"),
                Relation::EqDM => (green::equiv_d(&f, &g), "d-index-equal", "d-index-differs"),
                Relation::EqDPlep => (plep::d_equiv_plep(&f, &g)?, "plep-index-equal", "plep-index-differs"),
            };
            verdict(out, v.0, v.1, v.2).map_err(io)?
        }
        Command::Dindex { monoid, file } => {
            let e = element(file, k)?;
            match monoid {
                Monoid::M => writeln!(out, "{}", green::d_index_m(&e)),
                Monoid::Plep => writeln!(out, "{}", plep::d_index_plep(&e)?),
            }
            .map_err(io)?
        }
        Command::Chain { heights } => {
            let alpha = alphabet(k)?;
            let mut hs = heights.iter().map(|h| krational(alpha.k(), h)).collect::<Result<Vec<_>, _>>()?;
            hs.sort_by(|a, b| a.try_cmp(b).expect("same base"));
            for h in hs {
                writeln!(out, "# h={h}").map_err(io)?;
                writeln!(out, "{}", green::dense_chain_element(alpha, &h)?).map_err(io)?;
            }
        }
        Command::WithHeights { h1, h2 } => {
            let alpha = alphabet(k)?;
            let (h1, h2) = (krational(alpha.k(), h1)?, krational(alpha.k(), h2)?);
            write!(out, "{}", green::element_with_heights(alpha, &h1, &h2)?).map_err(io)?
        }
        Command::SynthId { word } => {
            let alpha = alphabet(k)?;
            let s = Word::parse_in(alpha, word)?;
            let w = plep::synthesize_partial_identity(&s)?;
            writeln!(out, "{w}\n# length {}", w.length()).map_err(io)?
        }
        Command::EvalGen { file } => {
            let alpha = alphabet(k)?;
            let w = GeneratorWord::parse(alpha, &read(file)?)?;
            writeln!(out, "{}# length {}", w.eval(alpha)?, w.length()).map_err(io)?
        }
        Command::PhiB { file, check, table } => phi_b(&read(file)?, *check, *table, out)?,
        Command::CountForallsat { file } => {
            let b = BooleanFormula::parse(&read(file)?)?;
            let (n1, n0) = measure::count_forall_sat(&b)?;
            writeln!(out, "N_B1 {n1}\nN_B0 {n0}").map_err(io)?
        }
        Command::DfaMu { file, words } => {
            let src = read(file)?;
            let d = if *words {
                let (alpha, ws) = text::parse_words(&src, k)?;
                let d = measure::trie_dfa(alpha, &ws.into_iter().collect())?;
                write!(out, "{d}").map_err(io)?;
                d
            } else {
                AcyclicDfa::parse(k, &src)?
            };
            writeln!(out, "mu {}", measure::dfa_measure(&d)?).map_err(io)?
        }
        Command::WitnessPlep { f, g } => {
            let w = plep::plep_d_witness(&element(f, k)?, &element(g, k)?)?;
            writeln!(out, "Q1 {}\nQ2 {}", w.q1, w.q2).map_err(io)?;
            write!(out, "# beta\n{}# beta_inv\n{}", w.beta, w.beta_inv).map_err(io)?;
            if let Some(t) = &w.tlep {
                write!(out, "# B\n{}# B'\n{}", t.b, t.b_prime).map_err(io)?;
            }
            writeln!(out, "verified {}", w.verify()).map_err(io)?
        }
        Command::Separate { f, g } => {
            let (f, g) = (element(f, k)?, element(g, k)?);
            let s = green::separating_context(&f, &g)?;
            writeln!(out, "case {:?}", s.case).map_err(io)?;
            write!(out, "# left\n{}# right\n{}", s.left, s.right).map_err(io)?;
            let survivor = if s.first_survives { "first" } else { "second" };
            writeln!(out, "survivor {survivor}\nverified {}", s.verify(&f, &g)).map_err(io)?
        }
    }
    Ok(())
}

fn phi_b(src: &str, check: bool, table: bool, out: Out) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Input(e.to_string());
    let b = BooleanFormula::parse(src)?;
    let (n1, _) = measure::count_forall_sat(&b)?;
    let beta = measure::ensure_surjectivity(&b)?;
    if beta.m() != b.m() {
        writeln!(out, "# surjectivity: added x{}", beta.m()).map_err(io)?;
    }
    let e = measure::phi_b(&beta)?;
    let noncoll = green::height_l(&e);
    writeln!(out, "N_B1 {n1}\nnoncoll {noncoll}").map_err(io)?;
    if check {
        let expected = measure::expected_noncoll(beta.m(), beta.n(), n1);
        let recovered = measure::recover_count(&noncoll, beta.m(), beta.n())?;
        let ok = expected == noncoll && recovered == n1;
        writeln!(out, "identity: {}", if ok { "ok" } else { "FAILED" }).map_err(io)?;
    }
    if table {
        write!(out, "{e}").map_err(io)?;
    }
    Ok(())
}
