//! Two-sided contexts that send exactly one of two distinct elements to zero.
use mk1::element::Mk1Element;
use mk1::green::separating_context;
use mk1::text::parse_element;

fn el(rows: &str) -> Mk1Element {
    parse_element(&format!("k 2\n{}", rows.replace(';', "\n")), None).expect("valid table")
}

fn main() {
    let pairs = [
        (el("a -> a"), Mk1Element::zero(mk1::words::Alphabet::new(2).unwrap())),
        (el("a -> a"), el("b -> a")),
        (el("a -> a"), el("a -> b")),
        (el("a -> a;b -> b"), el("a -> b;b -> a")),
        (el("a -> a;b -> b"), el("aa -> a;ab -> b;b -> ^")),
    ];
    for (f, g) in &pairs {
        let s = separating_context(f, g).expect("distinct");
        let survivor = if s.first_survives { "f" } else { "g" };
        println!("{:?} vs {:?}", f, g);
        println!("  case {:?}: left {:?}, right {:?}, {survivor} survives, verified {}", s.case, s.left, s.right, s.verify(f, g));
    }
}
