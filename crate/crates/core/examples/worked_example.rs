//! The four tables of one element, their normal form, and its heights.
use mk1::green::heights;
use mk1::text::parse_table;

const TABLES: [&str; 4] = [
    "k 2\naa -> a\nab -> aa\nb -> aaa\n",
    "k 2\naaa -> aa\naab -> ab\nab -> aa\nb -> aaa\n",
    "k 2\naaaa -> aaa\naaab -> aab\naab -> ab\nab -> aa\nb -> aaa\n",
    "k 2\naaaa -> aaa\naaab -> aab\naab -> ab\naba -> aaa\nabb -> aab\nb -> aaa\n",
];

fn main() {
    let mut normal = None;
    for (i, text) in TABLES.iter().enumerate() {
        let t = parse_table(text, None).expect("valid table");
        let e = t.normalize();
        println!("table {} ({} rows): image measure {}", i + 1, t.len(), t.image_mu());
        match &normal {
            None => normal = Some(e),
            Some(n) => println!("  same element as table 1: {}", *n == e),
        }
    }
    let e = normal.expect("at least one table");
    println!("normal form:\n{e}");
    print!("{}", heights(&e));
}
