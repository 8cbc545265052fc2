//! Text form of charged multipartitions.
//!
//! ```text
//! 4.2^2.1^3|5.2^3.1^4|-  @ 0,9,5
//! ```
//!
//! Components are separated by `|`; an empty component is `-`; parts are
//! separated by `.` and `P^K` stands for `K` copies of `P`. The charge follows
//! `@` as a comma-separated list. Whitespace is allowed around `@`, `|`, `.`
//! and `,`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::multipartition::{ChargedMultipartition, Multicharge, Partition};

/// Parses the text form. See the module docs for the grammar.
pub fn parse(text: &str) -> Result<ChargedMultipartition> {
    let at = text
        .find('@')
        .ok_or_else(|| Error::parse(text.len(), "expected `@` followed by a charge"))?;
    let (lhs, rhs) = (&text[..at], &text[at + 1..]);

    let mut components = Vec::new();
    let mut offset = 0;
    for comp in lhs.split('|') {
        components.push(parse_component(comp, offset)?);
        offset += comp.len() + 1;
    }

    let mut charge = Vec::new();
    let mut offset = at + 1;
    for tok in rhs.split(',') {
        charge.push(parse_int::<i64>(tok, offset)?);
        offset += tok.len() + 1;
    }
    if charge.len() != components.len() {
        return Err(Error::parse(
            at,
            format!(
                "{} components but {} charges",
                components.len(),
                charge.len()
            ),
        ));
    }
    ChargedMultipartition::new(components, Multicharge::new(charge)?)
}

fn parse_component(src: &str, offset: usize) -> Result<Partition> {
    if src.trim() == "-" {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    let mut pos = offset;
    for tok in src.split('.') {
        let (part, mult) = match tok.find('^') {
            Some(k) => (
                parse_int::<usize>(&tok[..k], pos)?,
                parse_int::<usize>(&tok[k + 1..], pos + k + 1)?,
            ),
            None => (parse_int::<usize>(tok, pos)?, 1),
        };
        if part == 0 || mult == 0 {
            return Err(Error::parse(
                pos,
                "parts and multiplicities must be positive",
            ));
        }
        parts.extend(std::iter::repeat_n(part, mult));
        pos += tok.len() + 1;
    }
    Partition::new(parts).map_err(|e| Error::parse(offset, e.to_string()))
}

fn parse_int<T: FromStr>(tok: &str, offset: usize) -> Result<T> {
    let lead = tok.len() - tok.trim_start().len();
    let t = tok.trim();
    if t.is_empty() {
        return Err(Error::parse(offset + lead, "expected a number"));
    }
    t.parse::<T>()
        .map_err(|_| Error::parse(offset + lead, format!("invalid number `{t}`")))
}

/// Multiplicative notation for one partition, `-` when empty.
pub fn format_partition(lam: &Partition) -> String {
    if lam.is_empty() {
        return "-".to_string();
    }
    let mut out = Vec::new();
    let parts = lam.parts();
    let mut i = 0;
    while i < parts.len() {
        let j = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
        if j == 1 {
            out.push(parts[i].to_string());
        } else {
            out.push(format!("{}^{}", parts[i], j));
        }
        i += j;
    }
    out.join(".")
}

pub fn format_charge(s: &Multicharge) -> String {
    s.as_slice()
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Canonical text form, the inverse of [`parse`].
pub fn format(m: &ChargedMultipartition) -> String {
    let comps: Vec<String> = m.components().iter().map(format_partition).collect();
    format!("{} @ {}", comps.join("|"), format_charge(m.charge()))
}

impl fmt::Display for ChargedMultipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format(self))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_partition(self))
    }
}

impl FromStr for ChargedMultipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}
