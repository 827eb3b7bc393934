//! One morphism per line:
//!
//! ```text
//! n -> m ; 0: j± j± … ; 1: … ; m: …
//! ```
//!
//! `+` is the label 1 and `-` the label t; `.` stands for an empty preimage.
//! [`render_morphism`] is the inverse of [`parse_morphism`] on canonical text.

use ifas_core::ncsets::{LabeledPreimage, NCMorphism};

use super::ParseError;

pub fn render_morphism(f: &NCMorphism) -> String {
    f.to_string()
}

/// Parses every non-blank line that does not start with `#`.
pub fn parse_morphisms(text: &str) -> Result<Vec<NCMorphism>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| parse_line(l, i + 1))
        .collect()
}

/// Parses a single morphism (surrounding whitespace allowed).
pub fn parse_morphism(text: &str) -> Result<NCMorphism, ParseError> {
    let mut found = parse_morphisms(text)?;
    match found.len() {
        1 => Ok(found.remove(0)),
        0 => Err(ParseError::new(1, 1, "no morphism found")),
        _ => Err(ParseError::new(2, 1, "expected a single morphism")),
    }
}

/// A word of the line together with its 1-based starting column.
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(segment: &str, offset: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in segment.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token { text: &segment[s..i], column: offset + segment[..s].chars().count() + 1 });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &segment[s..], column: offset + segment[..s].chars().count() + 1 });
    }
    out
}

fn number(tok: &Token<'_>, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.text
        .parse()
        .map_err(|_| ParseError::new(line, tok.column, format!("expected {what}, found `{}`", tok.text)))
}

fn parse_line(line_text: &str, line: usize) -> Result<NCMorphism, ParseError> {
    // Split on ';', remembering the character offset of each segment.
    let mut segments = Vec::new();
    let mut offset = 0;
    for seg in line_text.split(';') {
        segments.push((seg, offset));
        offset += seg.chars().count() + 1;
    }
    let (header, header_off) = segments[0];
    let head = tokens(header, header_off);
    let end_col = line_text.chars().count() + 1;
    if head.len() != 3 || head[1].text != "->" {
        let col = head.get(1).map_or(head.first().map_or(1, |t| t.column), |t| t.column);
        return Err(ParseError::new(line, col, "expected `n -> m`"));
    }
    let n = number(&head[0], line, "a source size")?;
    let m = number(&head[2], line, "a target size")?;
    if segments.len() != m + 2 {
        let col = segments.get(m + 2).map_or(end_col, |(_, off)| off + 1);
        return Err(ParseError::new(
            line,
            col,
            format!("expected {} preimage lists for target [{m}], found {}", m + 1, segments.len() - 1),
        ));
    }
    let mut preimages = Vec::with_capacity(m + 1);
    for (i, &(seg, off)) in segments[1..].iter().enumerate() {
        let toks = tokens(seg, off);
        let Some(label) = toks.first() else {
            return Err(ParseError::new(line, off + 1, format!("missing `{i}:`")));
        };
        if label.text != format!("{i}:") {
            return Err(ParseError::new(line, label.column, format!("expected `{i}:`, found `{}`", label.text)));
        }
        let rest = &toks[1..];
        if rest.is_empty() {
            return Err(ParseError::new(line, label.column, "empty preimage must be written `.`"));
        }
        if rest.len() == 1 && rest[0].text == "." {
            preimages.push(LabeledPreimage::default());
            continue;
        }
        let mut entries = Vec::with_capacity(rest.len());
        for tok in rest {
            let (digits, sign) = tok.text.split_at(tok.text.len().saturating_sub(1));
            let z = match sign {
                "+" => false,
                "-" => true,
                _ => return Err(ParseError::new(line, tok.column, format!("`{}` lacks a `+`/`-` label", tok.text))),
            };
            let j: usize = digits
                .parse()
                .map_err(|_| ParseError::new(line, tok.column, format!("bad source element `{}`", tok.text)))?;
            entries.push((j, z));
        }
        preimages.push(LabeledPreimage(entries));
    }
    NCMorphism::new(n, m, preimages).map_err(|e| ParseError::new(line, 1, e.to_string()))
}
