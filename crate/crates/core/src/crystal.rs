//! Kashiwara crystal structure on charged multipartitions.
//!
//! For a residue `i` (or a content, when `e = ∞`), the addable and removable
//! `i`-nodes are listed by increasing content, ties broken by decreasing
//! component. Cancelling `RA` pairs leaves a word `A^α R^β`; the crystal
//! operators add the node of the rightmost surviving `A` and remove the node
//! of the leftmost surviving `R`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::multipartition::{check_e, ChargedMultipartition, Multicharge, Node};

/// Which crystal structure to use.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Mode {
    /// Level `e > 1`; operators indexed by residues `0..e`.
    Finite(i64),
    /// `e = ∞`; operators indexed by contents.
    Infinite,
}

impl Mode {
    pub fn finite(e: i64) -> Result<Self> {
        check_e(e)?;
        Ok(Mode::Finite(e))
    }

    fn selects(&self, content: i64, i: i64) -> bool {
        match *self {
            Mode::Finite(e) => content.rem_euclid(e) == i.rem_euclid(e),
            Mode::Infinite => content == i,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    A,
    R,
}

/// Addable (`A`) and removable (`R`) nodes in increasing `≺_s` order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SignedWord(Vec<(Letter, Node)>);

impl SignedWord {
    pub fn new(entries: Vec<(Letter, Node)>) -> Self {
        SignedWord(entries)
    }

    pub fn entries(&self) -> &[(Letter, Node)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|(l, _)| *l == letter).count()
    }

    /// Node of the rightmost `A`. Meaningful on reduced words.
    pub fn last_addable(&self) -> Option<Node> {
        self.0
            .iter()
            .rev()
            .find(|(l, _)| *l == Letter::A)
            .map(|&(_, n)| n)
    }

    /// Node of the leftmost `R`. Meaningful on reduced words.
    pub fn first_removable(&self) -> Option<Node> {
        self.0
            .iter()
            .find(|(l, _)| *l == Letter::R)
            .map(|&(_, n)| n)
    }

    /// Concatenation, keeping the node labels.
    pub fn concat<'a>(words: impl IntoIterator<Item = &'a SignedWord>) -> SignedWord {
        SignedWord(
            words
                .into_iter()
                .flat_map(|w| w.0.iter().copied())
                .collect(),
        )
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (l, _) in &self.0 {
            f.write_str(match l {
                Letter::A => "A",
                Letter::R => "R",
            })?;
        }
        Ok(())
    }
}

/// The `i`-word of `m`.
pub fn i_word(m: &ChargedMultipartition, mode: Mode, i: i64) -> SignedWord {
    let s = m.charge();
    let mut entries: Vec<(Letter, Node)> = m
        .addable_nodes()
        .into_iter()
        .map(|n| (Letter::A, n))
        .chain(m.removable_nodes().into_iter().map(|n| (Letter::R, n)))
        .filter(|(_, n)| mode.selects(n.content(s), i))
        .collect();
    entries.sort_by_key(|(_, n)| (n.content(s), std::cmp::Reverse(n.comp)));
    SignedWord(entries)
}

/// Deletes `RA` factors until none remain.
pub fn reduce_word(w: &SignedWord) -> SignedWord {
    let mut stack: Vec<(Letter, Node)> = Vec::with_capacity(w.len());
    for &(letter, node) in &w.0 {
        if letter == Letter::A && matches!(stack.last(), Some((Letter::R, _))) {
            stack.pop();
        } else {
            stack.push((letter, node));
        }
    }
    SignedWord(stack)
}

pub fn good_addable(m: &ChargedMultipartition, mode: Mode, i: i64) -> Option<Node> {
    reduce_word(&i_word(m, mode, i)).last_addable()
}

pub fn good_removable(m: &ChargedMultipartition, mode: Mode, i: i64) -> Option<Node> {
    reduce_word(&i_word(m, mode, i)).first_removable()
}

/// `f̃_i`: adds the good addable `i`-node, if any.
pub fn f_op(m: &ChargedMultipartition, mode: Mode, i: i64) -> Option<ChargedMultipartition> {
    let node = good_addable(m, mode, i)?;
    Some(m.add_node(&node).expect("good addable node is addable"))
}

/// `ẽ_i`: removes the good removable `i`-node, if any.
pub fn e_op(m: &ChargedMultipartition, mode: Mode, i: i64) -> Option<ChargedMultipartition> {
    let node = good_removable(m, mode, i)?;
    Some(
        m.remove_node(&node)
            .expect("good removable node is removable"),
    )
}

/// No `ẽ_i` acts.
pub fn is_highest_weight(m: &ChargedMultipartition, e: i64) -> Result<bool> {
    let mode = Mode::finite(e)?;
    Ok((0..e).all(|i| good_removable(m, mode, i).is_none()))
}

/// Climbs to the highest weight vertex, trying residues `0, 1, ..., e-1` and
/// restarting from 0 after every successful step. Returns the vertex and the
/// residues in the order they were applied.
pub fn to_highest_weight(
    m: &ChargedMultipartition,
    e: i64,
) -> Result<(ChargedMultipartition, Vec<i64>)> {
    to_highest_weight_with_order(m, e, &(0..e).collect::<Vec<_>>())
}

/// As [`to_highest_weight`], trying residues in the given order.
pub fn to_highest_weight_with_order(
    m: &ChargedMultipartition,
    e: i64,
    order: &[i64],
) -> Result<(ChargedMultipartition, Vec<i64>)> {
    let mode = Mode::finite(e)?;
    let mut cur = m.clone();
    let mut path = Vec::new();
    'outer: loop {
        for &i in order {
            if let Some(next) = e_op(&cur, mode, i) {
                cur = next;
                path.push(i.rem_euclid(e));
                continue 'outer;
            }
        }
        break;
    }
    if !is_highest_weight(&cur, e)? {
        return Err(Error::domain("residue order does not cover every residue"));
    }
    Ok((cur, path))
}

/// Coefficients `a_0, ..., a_{e-1}` of the fundamental weights in `wt(m)`;
/// the `δ` part is not tracked.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// `a_i = #{c : s_c ≡ i} + M_{i-1} - 2 M_i + M_{i+1}`, `M_j` counting the
/// `j`-nodes of `m`.
pub fn weight_coeffs(m: &ChargedMultipartition, e: i64) -> Result<WeightVector> {
    check_e(e)?;
    let eu = e as usize;
    let mut counts = vec![0i64; eu];
    for node in m.nodes() {
        counts[m.residue(&node, e) as usize] += 1;
    }
    let mut a = vec![0i64; eu];
    for &s in m.charge().as_slice() {
        a[s.rem_euclid(e) as usize] += 1;
    }
    for i in 0..eu {
        a[i] += counts[(i + eu - 1) % eu] - 2 * counts[i] + counts[(i + 1) % eu];
    }
    Ok(WeightVector(a))
}

/// The weakly increasing charge in `D_e` containing `a_i` copies of `i`,
/// for a highest weight vertex `m`.
pub fn highest_weight_charge(m: &ChargedMultipartition, e: i64) -> Result<Multicharge> {
    if !is_highest_weight(m, e)? {
        return Err(Error::domain(format!("{m} is not a highest weight vertex")));
    }
    let w = weight_coeffs(m, e)?;
    if w.total() != m.level() as i64 || w.0.iter().any(|&a| a < 0) {
        return Err(Error::internal(format!(
            "weight {:?} of a highest weight vertex of level {} is not dominant of level l",
            w.0,
            m.level()
        )));
    }
    let s: Vec<i64> =
        w.0.iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i as i64, a as usize))
            .collect();
    Multicharge::new(s)
}

/// The canonical image computed by path-finding: climb to the highest
/// weight vertex, read off its weight, and replay the path from the empty
/// multipartition in the fundamental domain.
pub fn canonical_oracle(
    m: &ChargedMultipartition,
    e: i64,
) -> Result<(ChargedMultipartition, Multicharge)> {
    let (top, path) = to_highest_weight(m, e)?;
    let r = highest_weight_charge(&top, e)?;
    let mode = Mode::Finite(e);
    let mut cur = ChargedMultipartition::empty(r.clone());
    for &i in path.iter().rev() {
        cur = f_op(&cur, mode, i).ok_or_else(|| {
            Error::internal(format!("f_{i} vanished while replaying the path of {m}"))
        })?;
    }
    Ok((cur, r))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: i64,
}

/// A finite piece of a crystal graph. Vertices are sorted by rank, then by
/// text form; edges index into `vertices`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrystalGraph {
    pub vertices: Vec<ChargedMultipartition>,
    pub edges: Vec<Edge>,
}

impl CrystalGraph {
    pub fn vertices_of_rank(&self, n: usize) -> Vec<ChargedMultipartition> {
        self.vertices
            .iter()
            .filter(|v| v.rank() == n)
            .cloned()
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{k} [label=\"{v}\"];\n"));
        }
        for ed in &self.edges {
            out.push_str(&format!(
                "  v{} -> v{} [label=\"{}\"];\n",
                ed.from, ed.to, ed.label
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("{k}: {v}\n"));
        }
        for ed in &self.edges {
            out.push_str(&format!("{} -{}-> {}\n", ed.from, ed.label, ed.to));
        }
        out
    }
}

/// Everything reachable from `m` by at most `depth` applications of the `f̃_i`.
pub fn explore(m: &ChargedMultipartition, e: i64, depth: usize) -> Result<CrystalGraph> {
    let mode = Mode::finite(e)?;
    let mut seen: HashSet<ChargedMultipartition> = HashSet::new();
    let mut raw_edges = Vec::new();
    let mut frontier = vec![m.clone()];
    seen.insert(m.clone());
    for _ in 0..depth {
        let mut next = Vec::new();
        for v in &frontier {
            for i in 0..e {
                if let Some(w) = f_op(v, mode, i) {
                    raw_edges.push((v.clone(), w.clone(), i));
                    if seen.insert(w.clone()) {
                        next.push(w);
                    }
                }
            }
        }
        frontier = next;
    }

    let mut vertices: Vec<ChargedMultipartition> = seen.into_iter().collect();
    vertices.sort_by_cached_key(|v| (v.rank(), v.to_string()));
    let index: HashMap<&ChargedMultipartition, usize> =
        vertices.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let mut edges: Vec<Edge> = raw_edges
        .iter()
        .map(|(a, b, i)| Edge {
            from: index[a],
            to: index[b],
            label: *i,
        })
        .collect();
    edges.sort();
    Ok(CrystalGraph { vertices, edges })
}
