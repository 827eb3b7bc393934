//! Homology tables, for people (`human`) and for diffing (`machine`).

use std::fmt::Write as _;

use ifas_core::linalg::{HomologyGroup, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Human,
    Machine,
}

/// `Z^2 (+) Z/2`, `Q`, `F_2^3`, `0`.
pub fn render_group(h: &HomologyGroup) -> String {
    if h.is_zero() {
        return "0".into();
    }
    let base = match h.ring {
        Ring::Integers => "Z".to_string(),
        Ring::Rationals => "Q".to_string(),
        Ring::PrimeField(p) => format!("F_{p}"),
    };
    let mut parts = Vec::new();
    match h.free_rank {
        0 => {}
        1 => parts.push(base),
        r => parts.push(format!("{base}^{r}")),
    }
    parts.extend(h.torsion.iter().map(|d| format!("Z/{d}")));
    parts.join(" (+) ")
}

/// What a table is about; printed as the header of the machine format.
#[derive(Clone, Debug)]
pub struct TableHeader<'a> {
    pub theory: &'a str,
    pub algebra: &'a str,
    pub ring: Ring,
}

pub fn render_table(header: &TableHeader<'_>, groups: &[HomologyGroup], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Human => {
            for (n, h) in groups.iter().enumerate() {
                let _ = writeln!(out, "H_{n} = {}", render_group(h));
            }
        }
        OutputFormat::Machine => {
            let _ = writeln!(out, "theory = {}", header.theory);
            let _ = writeln!(out, "algebra = {}", header.algebra);
            let _ = writeln!(out, "ring = {}", header.ring);
            let _ = writeln!(out, "degrees = {}", groups.len().saturating_sub(1));
            for (n, h) in groups.iter().enumerate() {
                let torsion: Vec<String> = h.torsion.iter().map(|d| d.to_string()).collect();
                let _ = writeln!(out);
                let _ = writeln!(out, "degree = {n}");
                let _ = writeln!(out, "free_rank = {}", h.free_rank);
                let _ = writeln!(out, "torsion = [{}]", torsion.join(", "));
            }
        }
    }
    out
}
