//! Pseudoperiods of cylindric multipartitions.
//!
//! The first pseudoperiod has width `α`, the largest part size whose
//! rows end in nodes covering every residue. Its nodes are picked greedily
//! by decreasing content, preferring the smallest component on ties; the
//! `k`-th pseudoperiod is the first one of the multipartition with the rows
//! of the previous ones forgotten.

use crate::error::{Error, Result};
use crate::multipartition::{ChargedMultipartition, MaskedMultipartition, Node};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Pseudoperiod {
    pub alpha: usize,
    /// `γ_1, ..., γ_e`, contents decreasing by one at each step.
    pub nodes: Vec<Node>,
}

impl Pseudoperiod {
    /// Whether row `row` of component `comp` ends in one of the nodes.
    pub fn contains_row(&self, row: usize, comp: usize) -> bool {
        self.nodes.iter().any(|n| n.row == row && n.comp == comp)
    }

    /// Number of nodes in component `comp`.
    pub fn count_in(&self, comp: usize) -> usize {
        self.nodes.iter().filter(|n| n.comp == comp).count()
    }
}

fn check_cylindric(m: &ChargedMultipartition, e: i64) -> Result<()> {
    if !m.is_cylindric(e) {
        return Err(Error::domain(format!("{m} is not cylindric for e = {e}")));
    }
    Ok(())
}

pub fn first_pseudoperiod(mm: &MaskedMultipartition, e: i64) -> Result<Option<Pseudoperiod>> {
    let m = mm.ambient();
    check_cylindric(m, e)?;
    let s = m.charge();
    let eu = e as usize;

    let mut widths: Vec<usize> = mm.surviving_rows().map(|(_, _, part)| part).collect();
    widths.sort_unstable_by(|a, b| b.cmp(a));
    widths.dedup();

    for alpha in widths {
        let candidates: Vec<Node> = mm
            .surviving_rows()
            .filter(|&(_, _, part)| part == alpha)
            .map(|(row, comp, _)| Node::new(row, alpha, comp))
            .collect();
        let mut seen = vec![false; eu];
        for n in &candidates {
            seen[n.residue(s, e) as usize] = true;
        }
        if !seen.iter().all(|&x| x) {
            continue;
        }

        let mut nodes: Vec<Node> = Vec::with_capacity(eu);
        let mut bound = i64::MAX;
        for _ in 0..eu {
            let best = candidates
                .iter()
                .filter(|n| n.content(s) < bound)
                .max_by_key(|n| (n.content(s), std::cmp::Reverse(n.comp)))
                .copied()
                .ok_or_else(|| Error::internal("pseudoperiod ran out of candidate nodes"))?;
            bound = best.content(s);
            nodes.push(best);
        }

        for w in nodes.windows(2) {
            if w[1].content(s) != w[0].content(s) - 1 {
                return Err(Error::internal(format!(
                    "pseudoperiod contents of {m} are not consecutive"
                )));
            }
            if w[1].comp > w[0].comp {
                return Err(Error::internal(format!(
                    "pseudoperiod components of {m} are not non-increasing"
                )));
            }
        }
        let mut res: Vec<i64> = nodes.iter().map(|n| n.residue(s, e)).collect();
        res.sort_unstable();
        if res != (0..e).collect::<Vec<_>>() {
            return Err(Error::internal(format!(
                "pseudoperiod residues of {m} do not cover"
            )));
        }
        return Ok(Some(Pseudoperiod { alpha, nodes }));
    }
    Ok(None)
}

/// All pseudoperiods in order; the list is empty iff `m` is FLOTW.
pub fn pseudoperiods(m: &ChargedMultipartition, e: i64) -> Result<Vec<Pseudoperiod>> {
    let mut mm = MaskedMultipartition::full(m.clone());
    let mut out = Vec::new();
    while let Some(pp) = first_pseudoperiod(&mm, e)? {
        for n in &pp.nodes {
            mm.mask(n.row, n.comp);
        }
        out.push(pp);
    }
    Ok(out)
}
