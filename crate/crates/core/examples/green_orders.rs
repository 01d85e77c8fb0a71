//! Green's preorders, the D-index, and elements with prescribed heights.
use mk1::element::Mk1Element;
use mk1::green::*;
use mk1::kary::KRational;
use mk1::words::{Alphabet, PrefixCode};

fn main() -> mk1::error::Result<()> {
    let alpha = Alphabet::new(2)?;
    let id = |ws: &[&str]| -> mk1::error::Result<Mk1Element> {
        Ok(Mk1Element::partial_identity(&PrefixCode::new(alpha, ws.iter().map(|w| (*w).into()))?))
    };
    let (small, big) = (id(&["aa", "b"])?, Mk1Element::identity(alpha));
    println!("id{{aa,b}} <=_R 1: {}", leq_r(&small, &big));
    println!("1 <=_R id{{aa,b}}: {}", leq_r(&big, &small));
    println!("id{{aa,b}} <=_L 1: {}", leq_l(&small, &big));
    println!("D-index: {} and {}", d_index_m(&small), d_index_m(&big));

    println!("dense chain in base 2:");
    for h in ["0.01", "0.1", "0.11", "0.111"] {
        let e = dense_chain_element(alpha, &KRational::parse(2, h)?)?;
        println!("  h={h}: {} rows, heights R={} L={}", e.table().len(), height_r(&e), height_l(&e));
    }

    let alpha3 = Alphabet::new(3)?;
    let (h1, h2) = (KRational::parse(3, "0.21")?, KRational::parse(3, "0.1")?);
    let e = element_with_heights(alpha3, &h1, &h2)?;
    println!("base 3, L-height {h1} and R-height {h2}:\n{e}");
    let bad = element_with_heights(alpha3, &KRational::parse(3, "0.1")?, &KRational::parse(3, "0.2")?);
    println!("L-height 0.1 with R-height 0.2: {:?}", bad.err());
    Ok(())
}
