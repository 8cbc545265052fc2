//! Partitions, multicharges, nodes and charged multipartitions, together with
//! the cylindric and FLOTW predicates.
//!
//! Indices follow the usual combinatorial conventions: rows `a`, columns `b`
//! and components `c` are all 1-based. Partitions never store trailing zeros;
//! any part beyond the height reads as 0.

use std::fmt;

use crate::error::{Error, Result};

/// Rejects `e <= 1`.
pub fn check_e(e: i64) -> Result<()> {
    if e > 1 {
        Ok(())
    } else {
        Err(Error::domain(format!("e must be > 1, got {e}")))
    }
}

/// An integer partition, stored as its non-zero parts in weakly decreasing order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::domain(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts an arbitrary multiset of parts into a partition.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The part in row `a` (1-based); zero beyond the height.
    pub fn part(&self, a: usize) -> usize {
        if a == 0 {
            return 0;
        }
        self.parts.get(a - 1).copied().unwrap_or(0)
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// `self.part(a) >= lower.part(a + shift)` for every `a >= 1`.
    pub(crate) fn dominates_shifted(&self, lower: &Partition, shift: usize) -> bool {
        (1..=lower.height()).all(|a| self.part(a) >= lower.part(a + shift))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

/// An `l`-tuple of integer charges.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Multicharge(Vec<i64>);

impl Multicharge {
    pub fn new(s: Vec<i64>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::domain("a multicharge needs at least one component"));
        }
        Ok(Multicharge(s))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    /// Charge of component `c` (1-based).
    pub fn get(&self, c: usize) -> i64 {
        self.0[c - 1]
    }

    /// `0 <= s_c - s_c' < e` for all `c' < c`.
    pub fn in_s_e(&self, e: i64) -> bool {
        let s = &self.0;
        (0..s.len()).all(|c| (0..c).all(|d| (0..e).contains(&(s[c] - s[d]))))
    }

    /// `0 <= s_1 <= ... <= s_l < e`.
    pub fn in_d_e(&self, e: i64) -> bool {
        let s = &self.0;
        s.windows(2).all(|w| w[0] <= w[1]) && s[0] >= 0 && s[s.len() - 1] < e
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// `sum_{k >= 2} (s_k - s_1)`, the statistic driving termination of the
    /// cylindric reduction loop.
    pub fn spread(&self) -> i64 {
        let s1 = self.0[0];
        self.0[1..].iter().map(|&s| s - s1).sum()
    }
}

/// A box `(a, b, c)`: row `a`, column `b`, component `c`, all 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Node { row, col, comp }
    }

    /// `b - a + s_c`.
    pub fn content(&self, s: &Multicharge) -> i64 {
        self.col as i64 - self.row as i64 + s.get(self.comp)
    }

    /// Content reduced into `0..e`.
    pub fn residue(&self, s: &Multicharge, e: i64) -> i64 {
        self.content(s).rem_euclid(e)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

/// The pair `|lambda, s>`: an `l`-partition together with an `l`-charge.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ChargedMultipartition {
    components: Vec<Partition>,
    charge: Multicharge,
}

impl ChargedMultipartition {
    pub fn new(components: Vec<Partition>, charge: Multicharge) -> Result<Self> {
        if components.len() != charge.level() {
            return Err(Error::domain(format!(
                "{} components but a charge of length {}",
                components.len(),
                charge.level()
            )));
        }
        Ok(ChargedMultipartition { components, charge })
    }

    /// Convenience constructor from raw parts, mostly for tests.
    pub fn from_parts(components: Vec<Vec<usize>>, charge: Vec<i64>) -> Result<Self> {
        let components = components
            .into_iter()
            .map(Partition::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(components, Multicharge::new(charge)?)
    }

    pub fn empty(charge: Multicharge) -> Self {
        ChargedMultipartition {
            components: vec![Partition::empty(); charge.level()],
            charge,
        }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `c` (1-based).
    pub fn component(&self, c: usize) -> &Partition {
        &self.components[c - 1]
    }

    pub fn charge(&self) -> &Multicharge {
        &self.charge
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Partition::rank).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    pub fn into_parts(self) -> (Vec<Partition>, Multicharge) {
        (self.components, self.charge)
    }

    pub fn content(&self, node: &Node) -> i64 {
        node.content(&self.charge)
    }

    pub fn residue(&self, node: &Node, e: i64) -> i64 {
        node.residue(&self.charge, e)
    }

    /// Whether `node` is a box of the Young diagram.
    pub fn contains(&self, node: &Node) -> bool {
        node.comp >= 1
            && node.comp <= self.level()
            && node.col >= 1
            && node.col <= self.component(node.comp).part(node.row)
    }

    /// Every box, component by component, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.components.iter().enumerate().flat_map(|(ci, lam)| {
            lam.parts()
                .iter()
                .enumerate()
                .flat_map(move |(ai, &len)| (1..=len).map(move |b| Node::new(ai + 1, b, ci + 1)))
        })
    }

    /// Positions whose addition leaves a multipartition.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (ci, lam) in self.components.iter().enumerate() {
            for a in 1..=lam.height() + 1 {
                if a == 1 || lam.part(a - 1) > lam.part(a) {
                    out.push(Node::new(a, lam.part(a) + 1, ci + 1));
                }
            }
        }
        out
    }

    /// Boxes whose removal leaves a multipartition.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (ci, lam) in self.components.iter().enumerate() {
            for a in 1..=lam.height() {
                if lam.part(a) > lam.part(a + 1) {
                    out.push(Node::new(a, lam.part(a), ci + 1));
                }
            }
        }
        out
    }

    pub fn add_node(&self, node: &Node) -> Result<Self> {
        if !self.addable_nodes().contains(node) {
            return Err(Error::domain(format!("{node} is not addable")));
        }
        let mut out = self.clone();
        let parts = &mut out.components[node.comp - 1].parts;
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        Ok(out)
    }

    pub fn remove_node(&self, node: &Node) -> Result<Self> {
        if !self.removable_nodes().contains(node) {
            return Err(Error::domain(format!("{node} is not removable")));
        }
        let mut out = self.clone();
        let parts = &mut out.components[node.comp - 1].parts;
        parts[node.row - 1] -= 1;
        if parts[node.row - 1] == 0 {
            parts.pop();
        }
        Ok(out)
    }

    /// Same partitions, different charge.
    pub fn with_charge(&self, charge: Multicharge) -> Result<Self> {
        Self::new(self.components.clone(), charge)
    }

    /// Charge in `S_e` plus the shifted row-domination inequalities between
    /// consecutive components, including the wrap from component `l` back to 1.
    pub fn is_cylindric(&self, e: i64) -> bool {
        if !self.charge.in_s_e(e) {
            return false;
        }
        let s = self.charge.as_slice();
        let l = self.level();
        for c in 0..l - 1 {
            let shift = (s[c + 1] - s[c]) as usize;
            if !self.components[c].dominates_shifted(&self.components[c + 1], shift) {
                return false;
            }
        }
        let wrap = (e + s[0] - s[l - 1]) as usize;
        self.components[l - 1].dominates_shifted(&self.components[0], wrap)
    }

    /// Cylindric, and for no part size do the residues at the ends of the
    /// rows of that size cover all of `0..e`.
    pub fn is_flotw(&self, e: i64) -> bool {
        self.is_cylindric(e) && !self.has_covering_width(e)
    }

    fn has_covering_width(&self, e: i64) -> bool {
        let mut widths: Vec<usize> = self
            .components
            .iter()
            .flat_map(|lam| lam.parts().iter().copied())
            .collect();
        widths.sort_unstable();
        widths.dedup();
        widths.into_iter().any(|alpha| {
            let mut seen = vec![false; e as usize];
            for (ci, lam) in self.components.iter().enumerate() {
                for (ai, &p) in lam.parts().iter().enumerate() {
                    if p == alpha {
                        let r = Node::new(ai + 1, alpha, ci + 1).residue(&self.charge, e);
                        seen[r as usize] = true;
                    }
                }
            }
            seen.iter().all(|&x| x)
        })
    }
}

/// All `l`-tuples of partitions of total rank `n`.
pub fn all_multipartitions(l: usize, n: usize) -> Vec<Vec<Partition>> {
    let tables: Vec<Vec<Partition>> = (0..=n).map(Partition::all).collect();
    let mut out = Vec::new();
    fn rec(
        l: usize,
        rest: usize,
        tables: &[Vec<Partition>],
        cur: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if cur.len() + 1 == l {
            for p in &tables[rest] {
                cur.push(p.clone());
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for k in 0..=rest {
            for p in &tables[k] {
                cur.push(p.clone());
                rec(l, rest - k, tables, cur, out);
                cur.pop();
            }
        }
    }
    rec(l, n, &tables, &mut Vec::new(), &mut out);
    out
}

/// All FLOTW multipartitions of rank `n` over `s`, sorted by their text form.
///
/// Components are chosen left to right, pruning on the domination inequality
/// against the previous component as soon as it can be checked.
pub fn enumerate_flotw(s: &Multicharge, e: i64, n: usize) -> Result<Vec<ChargedMultipartition>> {
    check_e(e)?;
    if !s.in_s_e(e) {
        return Err(Error::domain(format!(
            "charge {:?} is not in S_e for e={e}",
            s.as_slice()
        )));
    }
    let tables: Vec<Vec<Partition>> = (0..=n).map(Partition::all).collect();
    let l = s.level();
    let shifts: Vec<usize> = s
        .as_slice()
        .windows(2)
        .map(|w| (w[1] - w[0]) as usize)
        .collect();

    fn dfs(
        depth: usize,
        rest: usize,
        l: usize,
        tables: &[Vec<Partition>],
        shifts: &[usize],
        cur: &mut Vec<Partition>,
        found: &mut Vec<Vec<Partition>>,
    ) {
        let ranks: Vec<usize> = if depth + 1 == l {
            vec![rest]
        } else {
            (0..=rest).collect()
        };
        for k in ranks {
            for p in &tables[k] {
                if depth > 0 && !cur[depth - 1].dominates_shifted(p, shifts[depth - 1]) {
                    continue;
                }
                cur.push(p.clone());
                if depth + 1 == l {
                    found.push(cur.clone());
                } else {
                    dfs(depth + 1, rest - k, l, tables, shifts, cur, found);
                }
                cur.pop();
            }
        }
    }
    let mut found = Vec::new();
    dfs(
        0,
        n,
        l,
        &tables,
        &shifts,
        &mut Vec::with_capacity(l),
        &mut found,
    );
    let mut out = Vec::new();
    for comps in found {
        let m = ChargedMultipartition::new(comps, s.clone())?;
        if m.is_flotw(e) {
            out.push(m);
        }
    }
    out.sort_by_cached_key(|m| m.to_string());
    Ok(out)
}

/// A charged multipartition with some rows forgotten. Surviving rows keep
/// their original row index, and hence their contents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaskedMultipartition {
    ambient: ChargedMultipartition,
    alive: Vec<Vec<bool>>,
}

impl MaskedMultipartition {
    pub fn full(ambient: ChargedMultipartition) -> Self {
        let alive = ambient
            .components()
            .iter()
            .map(|lam| vec![true; lam.height()])
            .collect();
        MaskedMultipartition { ambient, alive }
    }

    pub fn ambient(&self) -> &ChargedMultipartition {
        &self.ambient
    }

    pub fn is_alive(&self, row: usize, comp: usize) -> bool {
        self.alive
            .get(comp - 1)
            .and_then(|rows| rows.get(row - 1))
            .copied()
            .unwrap_or(false)
    }

    /// Forgets row `row` of component `comp`.
    pub fn mask(&mut self, row: usize, comp: usize) {
        if let Some(flag) = self
            .alive
            .get_mut(comp - 1)
            .and_then(|r| r.get_mut(row - 1))
        {
            *flag = false;
        }
    }

    /// `(row, comp, part)` for every surviving non-empty row.
    pub fn surviving_rows(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.ambient
            .components()
            .iter()
            .enumerate()
            .flat_map(move |(ci, lam)| {
                lam.parts()
                    .iter()
                    .enumerate()
                    .filter(move |(ai, _)| self.alive[ci][*ai])
                    .map(move |(ai, &p)| (ai + 1, ci + 1, p))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cm(comps: Vec<Vec<usize>>, s: Vec<i64>) -> ChargedMultipartition {
        ChargedMultipartition::from_parts(comps, s).unwrap()
    }

    #[test]
    fn contents_and_residues() {
        let s = Multicharge::new(vec![0, 3, -2]).unwrap();
        assert_eq!(Node::new(1, 4, 1).content(&s), 3);
        assert_eq!(Node::new(2, 1, 3).content(&s), -3);
        assert_eq!(Node::new(2, 1, 3).residue(&s, 3), 0);
        let z = Multicharge::new(vec![0]).unwrap();
        assert_eq!(Node::new(1, 1, 1).content(&z), 0);
        assert_eq!(Node::new(3, 1, 1).residue(&z, 3), 1);
    }

    #[test]
    fn addable_and_removable() {
        let m = cm(vec![vec![4, 1], vec![2, 2], vec![3]], vec![0, 3, -2]);
        assert!(m.removable_nodes().contains(&Node::new(2, 2, 2)));
        assert!(m.addable_nodes().contains(&Node::new(2, 1, 3)));
        // (2,2) has no addable node in row 2
        assert!(!m.addable_nodes().contains(&Node::new(2, 3, 2)));

        let empty = cm(vec![vec![], vec![]], vec![0, 0]);
        assert_eq!(
            empty.addable_nodes(),
            vec![Node::new(1, 1, 1), Node::new(1, 1, 2)]
        );
        assert!(empty.removable_nodes().is_empty());

        let one = cm(vec![vec![1]], vec![0]);
        assert_eq!(
            one.addable_nodes(),
            vec![Node::new(1, 2, 1), Node::new(2, 1, 1)]
        );
        assert_eq!(one.removable_nodes(), vec![Node::new(1, 1, 1)]);
    }

    #[test]
    fn add_then_remove() {
        let m = cm(vec![vec![3, 1, 1], vec![2]], vec![1, 0]);
        for g in m.addable_nodes() {
            assert_eq!(m.add_node(&g).unwrap().remove_node(&g).unwrap(), m);
        }
        for g in m.removable_nodes() {
            assert_eq!(m.remove_node(&g).unwrap().add_node(&g).unwrap(), m);
        }
        assert!(m.add_node(&Node::new(3, 2, 1)).is_err());
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap().parts(), &[2, 1]);
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
    }

    #[test]
    fn charge_domains() {
        let s = Multicharge::new(vec![0, 1, 3]).unwrap();
        assert!(s.in_s_e(4) && s.in_d_e(4));
        assert!(!s.in_s_e(3));
        let t = Multicharge::new(vec![3, 3, 4]).unwrap();
        assert!(t.in_s_e(3) && !t.in_d_e(3));
        assert!(!Multicharge::new(vec![1, 0]).unwrap().in_s_e(5));
        assert!(Multicharge::new(vec![]).is_err());
    }

    #[test]
    fn cylindric_examples() {
        let m = cm(
            vec![
                vec![4, 2, 2, 1, 1, 1],
                vec![7, 3, 3, 2, 2, 1, 1, 1],
                vec![3, 3, 2, 1, 1],
            ],
            vec![-4, -1, -1],
        );
        assert!(m.is_cylindric(4));
        assert!(!m.is_flotw(4));
        let hw = cm(
            vec![vec![3, 3, 2], vec![2, 2, 1], vec![3, 1, 1]],
            vec![3, 3, 4],
        );
        assert!(hw.is_cylindric(3));
        assert!(!hw.is_flotw(3));
        let pp = cm(
            vec![vec![2, 1, 1], vec![2, 1, 1, 1], vec![2, 1, 1, 1, 1]],
            vec![2, 3, 4],
        );
        assert!(pp.is_cylindric(3));
        assert!(!pp.is_flotw(3));
    }

    #[test]
    fn flotw_small_cases() {
        let empty = cm(vec![vec![], vec![]], vec![0, 2]);
        assert!(empty.is_cylindric(3) && empty.is_flotw(3));
        assert!(cm(vec![vec![1], vec![]], vec![0, 1]).is_flotw(2));
        // charge outside S_e is never cylindric
        assert!(!cm(vec![vec![], vec![]], vec![1, 0]).is_cylindric(3));
    }

    #[test]
    fn enumerate_small() {
        let s01 = Multicharge::new(vec![0, 1]).unwrap();
        let got = enumerate_flotw(&s01, 2, 1).unwrap();
        assert_eq!(
            got,
            vec![
                cm(vec![vec![], vec![1]], vec![0, 1]),
                cm(vec![vec![1], vec![]], vec![0, 1])
            ]
        );
        assert_eq!(
            enumerate_flotw(&s01, 2, 0).unwrap(),
            vec![ChargedMultipartition::empty(s01)]
        );
        let s0 = Multicharge::new(vec![0]).unwrap();
        assert_eq!(
            enumerate_flotw(&s0, 2, 2).unwrap(),
            vec![cm(vec![vec![2]], vec![0])]
        );
        assert!(enumerate_flotw(&Multicharge::new(vec![0, 5]).unwrap(), 2, 1).is_err());
    }

    #[test]
    fn masking_keeps_indices() {
        let m = cm(vec![vec![2, 1, 1]], vec![0]);
        let mut mm = MaskedMultipartition::full(m);
        mm.mask(2, 1);
        let rows: Vec<_> = mm.surviving_rows().collect();
        assert_eq!(rows, vec![(1, 1, 2), (3, 1, 1)]);
        assert!(!mm.is_alive(2, 1));
    }
}
