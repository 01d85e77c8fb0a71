//! Measures of finite prefix codes through their minimal acyclic automata.
use std::collections::BTreeSet;

use mk1::measure::*;
use mk1::text::parse_element;
use mk1::words::{Alphabet, Word};

fn main() -> mk1::error::Result<()> {
    let alpha = Alphabet::new(2)?;
    let lang: BTreeSet<Word> = ["ab", "bb"].map(Word::from).into();
    let d = trie_dfa(alpha, &lang)?;
    println!("{d}");
    println!("state measures {:?}", state_measures(&d)?.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("mu = {}", dfa_measure(&d)?);

    let e = parse_element("k 2\naa -> a\nab -> aa\nb -> aaa\n", None)?;
    print!("{}", heights_via_dfa(&e));
    for y in e.image_code_table().fibers().keys() {
        println!("fiber of {y}: preimage mu {}, shortest rep mu {}", preimage_measure(&e, y)?, min_rep_measure(&e, y)?);
    }
    Ok(())
}
