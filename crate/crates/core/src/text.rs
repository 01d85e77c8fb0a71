//! Line-oriented file formats: tables (`k N` header, `x -> y` rows) and
//! word lists. `#` starts a comment everywhere.

use crate::element::{Mk1Element, Table};
use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Reads a `k N` header line; returns `None` for any other line.
fn header(line: &str, ln: usize) -> Result<Option<u32>> {
    let mut toks = line.split_whitespace();
    if toks.next() != Some("k") {
        return Ok(None);
    }
    match (toks.next().and_then(|t| t.parse().ok()), toks.next()) {
        (Some(k), None) => Ok(Some(k)),
        _ => Err(Error::parse(ln, "expected `k <int>`")),
    }
}

/// The header `k` wins; `fallback` (a `--k` option) is used only without one.
fn resolve_k(found: Option<u32>, fallback: Option<u32>) -> Result<Alphabet> {
    match (found, fallback) {
        (Some(a), Some(b)) if a != b => Err(Error::AlphabetMismatch(a, b)),
        (Some(k), _) | (None, Some(k)) => Alphabet::new(k),
        (None, None) => Err(Error::parse(1, "missing `k <int>` header (or pass --k)")),
    }
}

fn word_at(alpha: Alphabet, tok: &str, ln: usize) -> Result<Word> {
    Word::parse_in(alpha, tok).map_err(|e| match e {
        Error::Parse { msg, .. } => Error::parse(ln, msg),
        other => other,
    })
}

pub fn parse_table(text: &str, k: Option<u32>) -> Result<Table> {
    let mut found = None;
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let line = strip_comment(line);
        if line.is_empty() {
            continue;
        }
        if let Some(h) = header(line, ln)? {
            if found.replace(h).is_some() || !rows.is_empty() {
                return Err(Error::parse(ln, "`k` header must come first and only once"));
            }
            continue;
        }
        let (x, y) = line.split_once("->").ok_or_else(|| Error::parse(ln, "expected `x -> y`"))?;
        rows.push((x.trim().to_string(), y.trim().to_string(), ln));
    }
    let alpha = resolve_k(found, k)?;
    let rows = rows
        .into_iter()
        .map(|(x, y, ln)| Ok((word_at(alpha, &x, ln)?, word_at(alpha, &y, ln)?)))
        .collect::<Result<Vec<_>>>()?;
    Table::new(alpha, rows)
}

pub fn parse_element(text: &str, k: Option<u32>) -> Result<Mk1Element> {
    Ok(parse_table(text, k)?.normalize())
}

/// Words separated by whitespace or commas; braces are ignored.
pub fn parse_words(text: &str, k: Option<u32>) -> Result<(Alphabet, Vec<Word>)> {
    let mut found = None;
    let mut toks = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let line = strip_comment(line);
        if let Some(h) = header(line, ln)? {
            found = Some(h);
            continue;
        }
        let cleaned = line.replace(['{', '}', ','], " ");
        toks.extend(cleaned.split_whitespace().map(|t| (t.to_string(), ln)));
    }
    let alpha = resolve_k(found, k)?;
    let words = toks.iter().map(|(t, ln)| word_at(alpha, t, *ln)).collect::<Result<_>>()?;
    Ok((alpha, words))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables() {
        let t = parse_table("# phi\nk 2\naa -> a\nab -> aa  # row\nb -> aaa\n", None).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(parse_table(&t.to_string(), None).unwrap(), t);
        let z = parse_element("k 3\n", None).unwrap();
        assert!(z.is_zero());
        assert!(parse_table("aa -> a\n", Some(2)).is_ok());
        assert!(parse_table("aa -> a\n", None).unwrap_err().is_parse());
        assert_eq!(parse_table("k 2\naa => a\n", None), Err(Error::parse(2, "expected `x -> y`")));
        assert!(matches!(parse_table("k 2\nac -> a\n", None), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_table("k 2\na -> a\naa -> b\n", None), Err(Error::DomainNotPrefixCode));
        assert_eq!(parse_table("k 2\n^ -> ^\n", Some(3)), Err(Error::AlphabetMismatch(2, 3)));
    }

    #[test]
    fn word_lists() {
        let (alpha, ws) = parse_words("k 3\n{a, bc}\ncc\n", None).unwrap();
        assert_eq!(alpha.k(), 3);
        assert_eq!(ws, vec![Word::from("a"), Word::from("bc"), Word::from("cc")]);
    }
}
