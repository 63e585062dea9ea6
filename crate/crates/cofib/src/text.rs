//! The line-oriented poset text format.
//!
//! ```text
//! poset diamond
//! elements: b l r t
//! covers: b<l b<r l<t r<t
//! ```

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poset::Poset;

#[derive(Clone, Debug)]
pub struct PosetFile {
    pub name: String,
    pub poset: Poset,
}

pub fn is_valid_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::ParseError { line, column, message: message.into() }
}

/// Significant lines with their 1-based line numbers and the column where
/// the content starts.
fn significant_lines(text: &str) -> Vec<(usize, usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let trimmed = body.trim();
            if trimmed.is_empty() {
                return None;
            }
            let col = body.len() - body.trim_start().len() + 1;
            Some((i + 1, col, trimmed))
        })
        .collect()
}

fn field<'a>(line: (usize, usize, &'a str), key: &str) -> Result<&'a str> {
    let (ln, col, s) = line;
    let rest = s
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix(':'))
        .ok_or_else(|| err(ln, col, format!("expected `{key}:`")))?;
    Ok(rest)
}

/// Parses every `poset` block in the text.
pub fn parse_posets(text: &str) -> Result<Vec<PosetFile>> {
    let lines = significant_lines(text);
    if lines.is_empty() {
        return Err(err(1, 1, "empty input"));
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let (ln, col, header) = lines[i];
        let name = header
            .strip_prefix("poset")
            .filter(|r| r.starts_with(char::is_whitespace))
            .map(str::trim)
            .filter(|r| !r.is_empty() && !r.contains(char::is_whitespace))
            .ok_or_else(|| err(ln, col, "expected `poset <name>`"))?;
        let el = *lines.get(i + 1).ok_or_else(|| err(ln + 1, 1, "missing `elements:` line"))?;
        let cv = *lines.get(i + 2).ok_or_else(|| err(el.0 + 1, 1, "missing `covers:` line"))?;
        let labels: Vec<&str> = field(el, "elements")?.split_whitespace().collect();
        let mut seen = HashSet::new();
        for l in &labels {
            if !is_valid_label(l) {
                return Err(err(el.0, el.1, format!("invalid label {l:?}")));
            }
            if !seen.insert(*l) {
                return Err(err(el.0, el.1, format!("duplicate label {l:?}")));
            }
        }
        let mut pairs = Vec::new();
        for tok in field(cv, "covers")?.split_whitespace() {
            let (a, b) = tok
                .split_once('<')
                .filter(|(a, b)| is_valid_label(a) && is_valid_label(b))
                .ok_or_else(|| err(cv.0, cv.1, format!("malformed cover {tok:?}")))?;
            pairs.push((a, b));
        }
        let poset = Poset::from_covers(&labels, &pairs)?;
        out.push(PosetFile { name: name.to_string(), poset });
        i += 3;
    }
    Ok(out)
}

/// Parses a file holding exactly one poset.
pub fn parse_poset(text: &str) -> Result<PosetFile> {
    let mut all = parse_posets(text)?;
    if all.len() != 1 {
        return Err(err(1, 1, format!("expected one poset block, found {}", all.len())));
    }
    Ok(all.remove(0))
}

/// Labels usable in the text format: the poset's own when they are valid
/// and distinct, `e0 e1 ...` otherwise.
pub fn printable_labels(p: &Poset) -> Vec<String> {
    let ok = p.labels().iter().all(|l| is_valid_label(l)) && p.labels().iter().collect::<HashSet<_>>().len() == p.len();
    if ok {
        p.labels().to_vec()
    } else {
        (0..p.len()).map(|i| format!("e{i}")).collect()
    }
}

pub fn write_poset(name: &str, p: &Poset) -> String {
    let labels = printable_labels(p);
    let covers: Vec<String> = p.covers().iter().map(|&(a, b)| format!("{}<{}", labels[a], labels[b])).collect();
    let mut s = format!("poset {name}\nelements: {}\n", labels.join(" "));
    if covers.is_empty() {
        s.push_str("covers:\n");
    } else {
        s.push_str(&format!("covers: {}\n", covers.join(" ")));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let text = "# a diamond\nposet diamond\n\nelements: b l r t\ncovers: b<l b<r l<t r<t  # done\n";
        let f = parse_poset(text).unwrap();
        assert_eq!(f.name, "diamond");
        assert_eq!(f.poset.len(), 4);
        assert!(f.poset.leq(0, 3));
    }

    #[test]
    fn empty_covers_allowed() {
        let f = parse_poset("poset pt\nelements: a\ncovers:\n").unwrap();
        assert_eq!(f.poset.len(), 1);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poset("poset x\nelements: a b\ncovers: a-b\n") {
            Err(Error::ParseError { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_poset("poset x\nelements: a\ncovers: a<q\n"), Err(Error::UnknownLabel(_))));
        assert!(matches!(parse_poset("elements: a\n"), Err(Error::ParseError { .. })));
    }

    #[test]
    fn round_trip() {
        let p = Poset::from_index_covers(4, &[(0, 1), (2, 1), (2, 3)]).unwrap();
        let text = write_poset("z", &p);
        assert_eq!(parse_poset(&text).unwrap().poset, p);
    }
}
