//! Composition, inverses and idempotents of table-defined elements.
use mk1::text::parse_element;

fn main() -> mk1::error::Result<()> {
    let f = parse_element("k 3\na -> ba\nb -> c\nc -> bb\n", None)?;
    let g = parse_element("k 3\na -> a\nbc -> b\n", None)?;
    println!("f = {f:?}\ng = {g:?}");
    println!("f.g = {:?}", f.compose(&g)?);
    println!("g.f = {:?}", g.compose(&f)?);
    let inv = f.inverse()?;
    println!("f^-1 = {inv:?}");
    println!("f^-1 f = {:?}, f f^-1 = {:?}", inv.compose(&f)?, f.compose(&inv)?);
    let e = parse_element("k 3\na -> a\nb -> ab\nc -> c\n", None)?;
    println!("{e:?} idempotent: {}", e.is_idempotent());
    println!("partition {:?}", e.part().classes().collect::<Vec<_>>());
    Ok(())
}
