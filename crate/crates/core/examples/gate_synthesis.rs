//! Partial identities written as words over the gates and adjacent swaps.
use mk1::element::Mk1Element;
use mk1::plep::*;
use mk1::words::{Alphabet, PrefixCode, Word};

fn main() -> mk1::error::Result<()> {
    let alpha = Alphabet::new(3)?;
    println!("c_Gamma = {}", c_gamma(alpha));
    for s in ["a", "c", "ab", "cb"] {
        let s = Word::parse_in(alpha, s)?;
        let w = synthesize_partial_identity(&s)?;
        let rest = PrefixCode::new(alpha, alpha.words_of_length(s.len()).into_iter().filter(|x| *x != s))?;
        let ok = w.eval(alpha)? == Mk1Element::partial_identity(&rest);
        println!("id on A^{} minus {s}: length {}, correct {ok}", s.len(), w.length());
    }
    let p = PrefixCode::new(alpha, ["aa", "bc", "cc"].map(Into::into))?;
    let w = synthesize_fixed_length_identity(alpha, &p, 2)?;
    println!("id on {p}: {} symbols, correct {}", w.0.len(), w.eval(alpha)? == Mk1Element::partial_identity(&p));
    // With two letters every letter is its own truth value, so `and` undoes `fork`.
    let binary = Alphabet::new(2)?;
    let g = GeneratorWord::parse(binary, "and fork")?;
    println!("`and fork` over two letters is the identity: {}", g.eval(binary)?.is_identity());
    Ok(())
}
