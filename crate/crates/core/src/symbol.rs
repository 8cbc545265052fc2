//! β-number symbols of charged multipartitions.
//!
//! Row `c` of the symbol of size `p` lists the numbers
//! `lambda^c_a - a + p + s_c` for `a = p + s_c, ..., 1`, which is a strictly
//! increasing sequence. Rows are left-aligned and displayed with component `l`
//! on top and component 1 at the bottom.

use std::fmt;

use crate::error::{Error, Result};
use crate::multipartition::{ChargedMultipartition, Multicharge, Partition};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Symbol {
    /// `rows[c - 1]` is the row of component `c`.
    rows: Vec<Vec<i64>>,
    size: i64,
}

impl Symbol {
    /// Rows are given bottom first (component 1 first).
    pub fn new(rows: Vec<Vec<i64>>, size: i64) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::domain("a symbol needs at least one row"));
        }
        for (c, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::domain(format!(
                    "row {} is not strictly increasing",
                    c + 1
                )));
            }
            if row.first().is_some_and(|&x| x < 0) {
                return Err(Error::domain(format!("row {} has a negative entry", c + 1)));
            }
        }
        Ok(Symbol { rows, size })
    }

    /// Rows given top first, as they are displayed.
    pub fn from_top_rows(mut rows: Vec<Vec<i64>>, size: i64) -> Result<Self> {
        rows.reverse();
        Self::new(rows, size)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Rows top first.
    pub fn top_rows(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.rows.iter().rev()
    }

    pub fn row(&self, c: usize) -> &[i64] {
        &self.rows[c - 1]
    }

    pub fn size(&self) -> i64 {
        self.size
    }

    pub fn level(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The charge encoded by the row lengths.
    pub fn charge(&self) -> Multicharge {
        Multicharge::new(
            self.rows
                .iter()
                .map(|r| r.len() as i64 - self.size)
                .collect(),
        )
        .expect("a symbol has at least one row")
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.top_rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// The least admissible size, `max_c(1 - s_c + h(lambda^c))`. May be < 1.
pub fn min_size(m: &ChargedMultipartition) -> i64 {
    m.components()
        .iter()
        .zip(m.charge().as_slice())
        .map(|(lam, &s)| 1 - s + lam.height() as i64)
        .max()
        .expect("at least one component")
}

/// The size used when none is requested: the least admissible size, but at least 1.
pub fn default_size(m: &ChargedMultipartition) -> i64 {
    min_size(m).max(1)
}

/// The symbol of `m` of size `p` (default: [`default_size`]).
pub fn build_symbol(m: &ChargedMultipartition, p: Option<i64>) -> Result<Symbol> {
    let bound = min_size(m);
    let p = p.unwrap_or_else(|| default_size(m));
    if p < bound {
        return Err(Error::domain(format!(
            "symbol size {p} is below the bound {bound}"
        )));
    }
    let rows = m
        .components()
        .iter()
        .zip(m.charge().as_slice())
        .map(|(lam, &s)| {
            let len = p + s;
            (1..=len)
                .rev()
                .map(|a| lam.part(a as usize) as i64 - a + len)
                .collect()
        })
        .collect();
    Ok(Symbol { rows, size: p })
}

/// Inverse of [`build_symbol`] at the symbol's own size.
pub fn to_charged(sym: &Symbol) -> Result<ChargedMultipartition> {
    let mut comps = Vec::with_capacity(sym.level());
    let mut charge = Vec::with_capacity(sym.level());
    for (c, row) in sym.rows.iter().enumerate() {
        if row.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain(format!(
                "row {} is not strictly increasing",
                c + 1
            )));
        }
        let m = row.len() as i64;
        charge.push(m - sym.size);
        let mut parts = Vec::with_capacity(row.len());
        for k in 1..=m {
            let x = row[(m - k) as usize];
            let part = x - (m - k);
            if part < 0 {
                return Err(Error::domain(format!(
                    "row {} encodes a negative part",
                    c + 1
                )));
            }
            parts.push(part as usize);
        }
        comps.push(Partition::new(parts)?);
    }
    ChargedMultipartition::new(comps, Multicharge::new(charge)?)
}

/// Weakly increasing charge, strictly increasing rows, and left-aligned
/// columns weakly increasing from the top row (component `l`) down to the
/// bottom row (component 1).
pub fn is_semistandard(sym: &Symbol) -> bool {
    let rows = &sym.rows;
    if rows.windows(2).any(|w| w[0].len() > w[1].len()) {
        return false;
    }
    if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
        return false;
    }
    rows.windows(2)
        .all(|w| w[0].iter().zip(&w[1]).all(|(below, above)| above <= below))
}

/// Rows read right to left, top row first.
pub fn reading(sym: &Symbol) -> Vec<i64> {
    sym.top_rows()
        .flat_map(|r| r.iter().rev().copied())
        .collect()
}
