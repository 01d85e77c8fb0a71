//! Counting universally satisfied columns of a formula through a collision measure.
use mk1::green::height_l;
use mk1::measure::*;

fn main() -> mk1::error::Result<()> {
    for text in ["m=1 n=1\n(x1 & y1) | (!x1 & !y1)", "m=2 n=2\ny1 | (x1 & y2)", "m=2 n=2\n1", "m=2 n=2\nx1 & y1"] {
        let b = BooleanFormula::parse(text)?;
        let (n1, n0) = count_forall_sat(&b)?;
        let s = ensure_surjectivity(&b)?;
        let phi = phi_b(&s)?;
        let noncoll = height_l(&phi);
        let back = recover_count(&noncoll, s.m(), s.n())?;
        println!("{}", b.to_string().trim_end().replace('\n', ": "));
        println!("  N_B1 {n1}, N_B0 {n0}, {} rows, noncoll {noncoll}, recovered {back}", phi.table().len());
        assert_eq!(noncoll, expected_noncoll(s.m(), s.n(), n1));
    }
    Ok(())
}
