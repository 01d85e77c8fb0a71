//! D-equivalence in the length-equality-preserving submonoids, with witnesses.
use mk1::element::Mk1Element;
use mk1::plep::*;
use mk1::words::{Alphabet, PrefixCode};

fn main() -> mk1::error::Result<()> {
    let alpha = Alphabet::new(2)?;
    for i in [1, 3, 5, 7] {
        let e = plep_element_with_index(alpha, i)?;
        println!("index {i}: image code {}", fixed_image_code(&e)?);
    }
    println!("index 4: {:?}", plep_element_with_index(alpha, 4).err());

    let e1 = plep_element_with_index(alpha, 3)?;
    let e2 = Mk1Element::partial_identity(&PrefixCode::new(alpha, ["aaa", "aab", "aba"].map(Into::into))?);
    println!("indices {} and {}", d_index_plep(&e1)?, d_index_plep(&e2)?);
    let w = plep_d_witness(&e1, &e2)?;
    println!("Q1 {}  Q2 {}", w.q1, w.q2);
    println!("beta {:?}", w.beta);
    println!("witness verified: {}", w.verify());

    let (t1, t2) = common_image_refinement(&e1, &e2)?;
    println!("refined tables with {} and {} rows", t1.len(), t2.len());
    Ok(())
}
