//! Prefix codes of prescribed measure and the replacement steps between codes.
use mk1::kary::KRational;
use mk1::words::{Alphabet, PrefixCode};

fn main() -> mk1::error::Result<()> {
    for (k, h) in [(2, "0.1011"), (3, "0.21"), (5, "0.0031042"), (11, "0.[10,0,3]")] {
        let alpha = Alphabet::new(k)?;
        let h = KRational::parse(k, h)?;
        let p = PrefixCode::build_p_h(alpha, &h)?;
        println!("k={k} h={h}: P_h = {p}");
        println!("  mu = {}, digit-sum class = {}", p.mu(), h.digit_sum_class()?);
        let c = p.complement();
        println!("  complement {c} has mu {}", c.mu());
    }
    let alpha = Alphabet::new(2)?;
    let p = PrefixCode::new(alpha, ["a", "ba", "bb"].map(Into::into))?;
    println!("{p} --R2(b)--> {}", p.replace_r2(&"b".into())?);
    println!("{p} --R1(a)--> {}", p.replace_r1(&"a".into())?);
    Ok(())
}
