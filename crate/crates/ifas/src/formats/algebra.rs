//! Line-oriented algebra files.
//!
//! ```text
//! ring Q                      # Q, Z or F<p>
//! dim 2
//! basis 1 x
//! unit 1 0
//! mult 0 0 : 1 0              # e_i e_j, all dim² lines required
//! mult 0 1 : 0 1
//! mult 1 0 : 0 1
//! mult 1 1 : 0 0
//! inv 0 : 1 0                 # image of e_i under the involution
//! inv 1 : 0 -1
//! ```
//!
//! Coefficients are integers or fractions `p/q`. Everything after `#` is a
//! comment. Lines may come in any order once `dim` is known.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use ifas_core::invalg::InvolutiveAlgebra;
use ifas_core::linalg::{Ring, Scalar};

use super::ParseError;

struct Word<'a> {
    text: &'a str,
    column: usize,
}

fn words(line: &str) -> Vec<Word<'_>> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let mut col = 0;
    let mut start_col = 0;
    for (i, c) in line.char_indices() {
        col += 1;
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Word { text: &line[s..i], column: start_col });
            }
        } else if start.is_none() {
            start = Some(i);
            start_col = col;
        }
    }
    if let Some(s) = start {
        out.push(Word { text: &line[s..], column: start_col });
    }
    out
}

fn index(w: &Word<'_>, line: usize, dim: usize) -> Result<usize, ParseError> {
    let i: usize = w.text.parse().map_err(|_| ParseError::new(line, w.column, format!("expected an index, found `{}`", w.text)))?;
    if i >= dim {
        return Err(ParseError::new(line, w.column, format!("index {i} outside 0..{dim}")));
    }
    Ok(i)
}

/// A coefficient together with where it was written, reduced once the ring is known.
type Located = (usize, usize, Scalar);

fn coefficients(ws: &[Word<'_>], line: usize, dim: usize, after: usize) -> Result<Vec<Located>, ParseError> {
    if ws.len() != dim {
        let col = ws.get(dim).map_or(after, |w| w.column);
        return Err(ParseError::new(line, col, format!("expected {dim} coefficients, found {}", ws.len())));
    }
    ws.iter()
        .map(|w| {
            w.text
                .parse::<Scalar>()
                .map(|x| (line, w.column, x))
                .map_err(|_| ParseError::new(line, w.column, format!("bad coefficient `{}`", w.text)))
        })
        .collect()
}

/// Parses an algebra file. With `ring_override`, coefficients are read into
/// that ring instead of the one named in the file.
pub fn parse_algebra(text: &str, ring_override: Option<Ring>) -> Result<InvolutiveAlgebra, ParseError> {
    let mut ring: Option<(Ring, usize)> = None;
    let mut dim: Option<usize> = None;
    let mut basis: Option<Vec<String>> = None;
    let mut unit: Option<Vec<Located>> = None;
    let mut mult: BTreeMap<(usize, usize), Vec<Located>> = BTreeMap::new();
    let mut inv: BTreeMap<usize, Vec<Located>> = BTreeMap::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let ws = words(content);
        let Some(head) = ws.first() else { continue };
        let end = content.chars().count() + 1;
        let need_dim = |dim: Option<usize>| dim.ok_or_else(|| ParseError::new(line, head.column, "`dim` must come first"));
        match head.text {
            "ring" => {
                if ws.len() != 2 {
                    return Err(ParseError::new(line, head.column, "expected `ring Q|Z|F<p>`"));
                }
                let r: Ring = ws[1].text.parse().map_err(|e: ifas_core::linalg::LinalgError| {
                    ParseError::new(line, ws[1].column, e.to_string())
                })?;
                ring = Some((r, line));
            }
            "dim" => {
                if ws.len() != 2 {
                    return Err(ParseError::new(line, head.column, "expected `dim <d>`"));
                }
                let d: usize = ws[1].text.parse().map_err(|_| ParseError::new(line, ws[1].column, "bad dimension"))?;
                if d == 0 {
                    return Err(ParseError::new(line, ws[1].column, "dimension must be positive"));
                }
                dim = Some(d);
            }
            "basis" => {
                let d = need_dim(dim)?;
                if ws.len() != d + 1 {
                    return Err(ParseError::new(line, head.column, format!("expected {d} basis names")));
                }
                basis = Some(ws[1..].iter().map(|w| w.text.to_string()).collect());
            }
            "unit" => {
                let d = need_dim(dim)?;
                unit = Some(coefficients(&ws[1..], line, d, end)?);
            }
            "mult" => {
                let d = need_dim(dim)?;
                if ws.len() < 4 || ws[3].text != ":" {
                    return Err(ParseError::new(line, head.column, "expected `mult <i> <j> : <coefficients>`"));
                }
                let key = (index(&ws[1], line, d)?, index(&ws[2], line, d)?);
                if mult.insert(key, coefficients(&ws[4..], line, d, end)?).is_some() {
                    return Err(ParseError::new(line, head.column, format!("duplicate mult {} {}", key.0, key.1)));
                }
            }
            "inv" => {
                let d = need_dim(dim)?;
                if ws.len() < 3 || ws[2].text != ":" {
                    return Err(ParseError::new(line, head.column, "expected `inv <i> : <coefficients>`"));
                }
                let i = index(&ws[1], line, d)?;
                if inv.insert(i, coefficients(&ws[3..], line, d, end)?).is_some() {
                    return Err(ParseError::new(line, head.column, format!("duplicate inv {i}")));
                }
            }
            other => return Err(ParseError::new(line, head.column, format!("unknown directive `{other}`"))),
        }
    }
    let eof = last_line + 1;
    let (file_ring, _) = ring.ok_or_else(|| ParseError::new(eof, 1, "missing `ring` line"))?;
    let ring = ring_override.unwrap_or(file_ring);
    let d = dim.ok_or_else(|| ParseError::new(eof, 1, "missing `dim` line"))?;
    let basis = basis.ok_or_else(|| ParseError::new(eof, 1, "missing `basis` line"))?;
    let reduce = |v: Vec<Located>| -> Result<Vec<Scalar>, ParseError> {
        v.into_iter()
            .map(|(l, c, x)| ring.reduce(&x).map_err(|e| ParseError::new(l, c, e.to_string())))
            .collect()
    };
    let unit = reduce(unit.ok_or_else(|| ParseError::new(eof, 1, "missing `unit` line"))?)?;
    let mut table = Vec::with_capacity(d);
    for i in 0..d {
        let mut row = Vec::with_capacity(d);
        for j in 0..d {
            let entry = mult.remove(&(i, j)).ok_or_else(|| ParseError::new(eof, 1, format!("missing `mult {i} {j}` line")))?;
            row.push(reduce(entry)?);
        }
        table.push(row);
    }
    let mut involution = Vec::with_capacity(d);
    for i in 0..d {
        let entry = inv.remove(&i).ok_or_else(|| ParseError::new(eof, 1, format!("missing `inv {i}` line")))?;
        involution.push(reduce(entry)?);
    }
    InvolutiveAlgebra::new(ring, basis, table, unit, involution).map_err(|e| ParseError::new(eof, 1, e.to_string()))
}

/// Canonical text for an algebra; [`parse_algebra`] reads it back unchanged.
pub fn render_algebra(a: &InvolutiveAlgebra) -> String {
    let join = |v: &[Scalar]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let d = a.dim();
    let mut out = String::new();
    let _ = writeln!(out, "ring {}", a.ring());
    let _ = writeln!(out, "dim {d}");
    let _ = writeln!(out, "basis {}", a.basis_names().join(" "));
    let _ = writeln!(out, "unit {}", join(a.unit()));
    for i in 0..d {
        for j in 0..d {
            let _ = writeln!(out, "mult {i} {j} : {}", join(a.basis_product(i, j)));
        }
    }
    for i in 0..d {
        let _ = writeln!(out, "inv {i} : {}", join(a.involution_image(i)));
    }
    out
}
