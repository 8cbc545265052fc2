//! Schensted insertion of symbol readings, recording symbols and the `rs`
//! isomorphism with its inverse.
//!
//! Insertion runs on an ordinary tableau (rows weakly increasing, columns
//! strictly increasing) using row bumping: `x` displaces the leftmost entry
//! strictly greater than `x`. The resulting symbol is the transpose of the
//! tableau, its first column becoming the top symbol row (component `l`).

use std::fmt;

use crate::error::{Error, Result};
use crate::multipartition::ChargedMultipartition;
use crate::symbol::{build_symbol, default_size, reading, to_charged, Symbol};

/// Where each cell of an insertion result was created: entry `k` marks the
/// cell created by the `k`-th letter. Rows are stored top first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RecordingSymbol {
    rows: Vec<Vec<usize>>,
}

impl RecordingSymbol {
    /// Validates that the entries form a permutation of `1..=n` increasing
    /// along rows and down columns of the underlying tableau.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &k in rows.iter().flatten() {
            if k == 0 || k > n || std::mem::replace(&mut seen[k], true) {
                return Err(Error::domain(format!(
                    "recording symbol entries must be a permutation of 1..={n}"
                )));
            }
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::domain(
                "recording symbol rows must weakly shrink downwards",
            ));
        }
        for (j, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::domain(format!(
                    "recording row {} is not increasing",
                    j + 1
                )));
            }
        }
        for w in rows.windows(2) {
            if w[0].iter().zip(&w[1]).any(|(a, b)| a >= b) {
                return Err(Error::domain(
                    "recording symbol columns must increase downwards",
                ));
            }
        }
        Ok(RecordingSymbol { rows })
    }

    /// Rows, top first.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Row lengths, top first.
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }
}

impl fmt::Display for RecordingSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

fn transpose<T: Copy>(tab: &[Vec<T>]) -> Vec<Vec<T>> {
    let width = tab.first().map_or(0, Vec::len);
    (0..width)
        .map(|j| {
            tab.iter()
                .take_while(|r| r.len() > j)
                .map(|r| r[j])
                .collect()
        })
        .collect()
}

/// Inserts `w` letter by letter. Returns the insertion symbol rows and the
/// recording symbol, both top row first.
pub fn insert_word(w: &[i64]) -> (Vec<Vec<i64>>, RecordingSymbol) {
    let mut p: Vec<Vec<i64>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &letter) in w.iter().enumerate() {
        let mut x = letter;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            let row = &mut p[r];
            match row.iter().position(|&y| y > x) {
                Some(j) => {
                    x = std::mem::replace(&mut row[j], x);
                    r += 1;
                }
                None => {
                    row.push(x);
                    q[r].push(step + 1);
                    break;
                }
            }
        }
    }
    (
        transpose(&p),
        RecordingSymbol {
            rows: transpose(&q),
        },
    )
}

/// Undoes [`insert_word`]: recovers the word from the insertion rows and
/// the recording symbol (both top row first).
pub fn uninsert(p_rows: &[Vec<i64>], q: &RecordingSymbol) -> Result<Vec<i64>> {
    let p_shape: Vec<usize> = p_rows.iter().map(Vec::len).collect();
    if p_shape != q.shape() {
        return Err(Error::domain(format!(
            "recording shape {:?} does not match symbol shape {:?}",
            q.shape(),
            p_shape
        )));
    }
    let mut tab = transpose(p_rows);
    let qtab = transpose(q.rows());
    if tab.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
        return Err(Error::domain("insertion rows are not strictly increasing"));
    }
    let n = q.len();
    let mut where_k = vec![(0usize, 0usize); n + 1];
    for (r, row) in qtab.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            where_k[k] = (r, j);
        }
    }
    let mut word = vec![0i64; n];
    for k in (1..=n).rev() {
        let (r, j) = where_k[k];
        if tab[r].len() != j + 1 || tab.get(r + 1).is_some_and(|below| below.len() > j) {
            return Err(Error::domain(format!(
                "step {k} of the recording symbol is not a corner"
            )));
        }
        let mut x = tab[r].pop().expect("corner cell exists");
        if tab[r].is_empty() {
            tab.pop();
        }
        for row in tab[..r].iter_mut().rev() {
            let j = row
                .iter()
                .rposition(|&y| y < x)
                .ok_or_else(|| Error::domain("reverse bumping found no smaller entry"))?;
            x = std::mem::replace(&mut row[j], x);
        }
        word[k - 1] = x;
    }
    Ok(word)
}

/// Splits a reading word after each `0` into `l` strictly decreasing
/// segments and rebuilds the symbol of size `p` they are the reading of.
pub fn split_reading(word: &[i64], l: usize, p: i64) -> Result<Symbol> {
    let mut top_rows: Vec<Vec<i64>> = Vec::with_capacity(l);
    let mut cur = Vec::new();
    for &x in word {
        if cur.last().is_some_and(|&y| y <= x) {
            return Err(Error::domain("reading segment is not strictly decreasing"));
        }
        cur.push(x);
        if x == 0 {
            cur.reverse();
            top_rows.push(std::mem::take(&mut cur));
        }
    }
    if !cur.is_empty() || top_rows.len() != l {
        return Err(Error::domain(format!(
            "word does not split into {l} segments each ending in 0"
        )));
    }
    Symbol::from_top_rows(top_rows, p)
}

/// `rs` at an explicit symbol size.
pub fn rs_with_size(
    m: &ChargedMultipartition,
    p: i64,
) -> Result<(ChargedMultipartition, RecordingSymbol)> {
    let sym = build_symbol(m, Some(p))?;
    let (rows, q) = insert_word(&reading(&sym));
    if rows.len() != m.level() {
        return Err(Error::internal(format!(
            "insertion produced {} rows for level {}",
            rows.len(),
            m.level()
        )));
    }
    let out = to_charged(&Symbol::from_top_rows(rows, p)?)?;
    Ok((out, q))
}

/// `rs` at the default symbol size. Returns the image, the recording symbol
/// and the size used.
pub fn rs(m: &ChargedMultipartition) -> Result<(ChargedMultipartition, RecordingSymbol, i64)> {
    let p = default_size(m);
    let (out, q) = rs_with_size(m, p)?;
    Ok((out, q, p))
}

/// Inverse of [`rs_with_size`] given the recording symbol and size.
pub fn inverse_rs(
    image: &ChargedMultipartition,
    q: &RecordingSymbol,
    p: i64,
) -> Result<ChargedMultipartition> {
    let sym = build_symbol(image, Some(p))?;
    let top: Vec<Vec<i64>> = sym.top_rows().cloned().collect();
    let word = uninsert(&top, q)?;
    to_charged(&split_reading(&word, image.level(), p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::is_semistandard;
    use crate::text::parse;

    fn cm(s: &str) -> ChargedMultipartition {
        parse(s).unwrap()
    }

    #[test]
    fn bumping_example() {
        let (p, q) = insert_word(&[5, 4, 0, 7, 5, 2, 1, 0]);
        assert_eq!(p, vec![vec![0, 1, 2, 4, 5], vec![0, 5, 7]]);
        assert_eq!(q.rows(), &[vec![1, 2, 3, 7, 8], vec![4, 5, 6]]);
        assert_eq!(uninsert(&p, &q).unwrap(), vec![5, 4, 0, 7, 5, 2, 1, 0]);
        let back = inverse_rs(
            &to_charged(&Symbol::from_top_rows(p, 3).unwrap()).unwrap(),
            &q,
            3,
        );
        assert_eq!(back.unwrap(), cm("3.2|3^2 @ 2,0"));
    }

    #[test]
    fn long_reading() {
        let w = [7, 3, 2, 0, 9, 5, 4, 3, 2, 1, 0, 6, 4, 2, 1, 0];
        let (p, _) = insert_word(&w);
        assert_eq!(
            p,
            vec![
                vec![0, 1, 2, 3, 4, 5, 7],
                vec![0, 1, 2, 3, 6, 9],
                vec![0, 2, 4]
            ]
        );
        let sym = Symbol::from_top_rows(p, 5).unwrap();
        assert!(is_semistandard(&sym));
    }

    #[test]
    fn empty_word() {
        let (p, q) = insert_word(&[]);
        assert!(p.is_empty() && q.is_empty());
        assert_eq!(uninsert(&p, &q).unwrap(), Vec::<i64>::new());
        assert!(split_reading(&[], 1, 1).is_err());
    }

    #[test]
    fn rs_examples() {
        let m = cm("2.1|3|4.1^2 @ 0,2,-1");
        let (img, q, p) = rs(&m).unwrap();
        assert_eq!(img, cm("2.1|4.2|1 @ -2,1,2"));
        assert_eq!(inverse_rs(&img, &q, p).unwrap(), m);

        let big = cm("4.2^2.1^3|5.2^3.1^4|7^2.6.4^2.2^2.1^3 @ 0,9,5");
        assert_eq!(
            rs(&big).unwrap().0,
            cm("4.2^2.1^3|10.6.4^2.3.2.1^3|2^5.1^3 @ 0,4,10")
        );

        let fixed = cm("1|- @ 0,1");
        assert_eq!(rs(&fixed).unwrap().0, fixed);
    }

    #[test]
    fn recording_validation() {
        assert!(RecordingSymbol::new(vec![vec![1, 2], vec![3]]).is_ok());
        assert!(RecordingSymbol::new(vec![vec![1, 1]]).is_err());
        assert!(RecordingSymbol::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(RecordingSymbol::new(vec![vec![2, 3], vec![1]]).is_err());
        let img = cm("- @ 0");
        let bad = RecordingSymbol::new(vec![vec![1, 2]]).unwrap();
        assert!(inverse_rs(&img, &bad, 1).is_err());
    }
}
