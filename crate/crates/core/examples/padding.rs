//! Fixed-length encodings and the preimage length bound for generator words.
use mk1::measure::*;
use mk1::plep::GeneratorWord;
use mk1::words::{Alphabet, PrefixCode, Word};

fn main() -> mk1::error::Result<()> {
    let alpha = Alphabet::new(3)?;
    for w in ["^", "a", "cab"] {
        println!("pad({w:?}, 4) = {}", pad_encode(alpha, &Word::parse_in(alpha, w)?, 4)?);
    }
    let pairs = vec![(Word::from("a"), PrefixCode::new(alpha, ["a", "ba"].map(Into::into))?)];
    for (v, code) in fixedlen_complete(&pairs, 2)? {
        println!("{v}: {code} (mu {})", code.mu());
    }
    let word = GeneratorWord::parse(alpha, "proj2 guard not E1 fork")?;
    let ok = alpha.words_of_length(3).iter().all(|y| length_bound_check(alpha, &word, y).unwrap_or(false));
    println!("`{word}` has length {} and respects the bound on A^3: {ok}", word.length());
    Ok(())
}
