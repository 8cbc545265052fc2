//! The reduction isomorphism `ψ`, which deletes the first pseudoperiod of a
//! cylindric multipartition, and its refinement `Ψ = ξ^p ∘ ψ` that stays
//! within cylindric multipartitions.
//!
//! With `α` the width of the pseudoperiod, component `c` of `ψ(λ)` collects
//! the parts of `λ^c` below `α`, the parts of `λ^{c-1}` above `α` (those of
//! `λ^l` for `c = 1`) and the `α`-parts of `λ^c` outside the pseudoperiod.
//! The new charge is `ξ(s)`.

use crate::error::{Error, Result};
use crate::multipartition::{ChargedMultipartition, MaskedMultipartition, Partition};

use super::cyclage::{xi_charge, xi_inv_charge, xi_pow};
use super::pseudoperiod::{first_pseudoperiod, Pseudoperiod};
use super::steplog::Step;

/// Per-component counts of parts above `α` and of deleted `α`-parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionStats {
    pub alpha: usize,
    pub above: Vec<usize>,
    pub deleted: Vec<usize>,
}

impl ReductionStats {
    pub fn of(m: &ChargedMultipartition, pp: &Pseudoperiod) -> Self {
        let above = m
            .components()
            .iter()
            .map(|lam| lam.parts().iter().filter(|&&x| x > pp.alpha).count())
            .collect();
        let deleted = (1..=m.level()).map(|c| pp.count_in(c)).collect();
        ReductionStats {
            alpha: pp.alpha,
            above,
            deleted,
        }
    }
}

fn pseudoperiod_of(m: &ChargedMultipartition, e: i64) -> Result<Pseudoperiod> {
    first_pseudoperiod(&MaskedMultipartition::full(m.clone()), e)?
        .ok_or_else(|| Error::domain(format!("{m} is FLOTW and has no pseudoperiod")))
}

/// Leftmost-node content of row `a` of component `c`.
fn left_content(s: &[i64], a: usize, c: usize) -> i64 {
    1 - a as i64 + s[c]
}

/// `ψ(m)`. Requires `m` cylindric and not FLOTW.
pub fn psi(m: &ChargedMultipartition, e: i64) -> Result<ChargedMultipartition> {
    let pp = pseudoperiod_of(m, e)?;
    psi_with(m, &pp, e)
}

fn psi_with(m: &ChargedMultipartition, pp: &Pseudoperiod, e: i64) -> Result<ChargedMultipartition> {
    let l = m.level();
    let alpha = pp.alpha;
    let s = m.charge().as_slice();
    let new_charge = xi_charge(m.charge(), e);
    let t = new_charge.as_slice();

    // (part, expected leftmost content) per target component
    let mut target: Vec<Vec<(usize, i64)>> = vec![Vec::new(); l];
    for (ci, lam) in m.components().iter().enumerate() {
        for (ai, &part) in lam.parts().iter().enumerate() {
            let cont = left_content(s, ai + 1, ci);
            if part > alpha {
                if ci + 1 == l {
                    target[0].push((part, cont - e));
                } else {
                    target[ci + 1].push((part, cont));
                }
            } else if part < alpha || !pp.contains_row(ai + 1, ci + 1) {
                target[ci].push((part, cont));
            }
        }
    }

    let mut comps = Vec::with_capacity(l);
    for (ci, mut rows) in target.into_iter().enumerate() {
        rows.sort_by(|x, y| y.cmp(x));
        for (ai, &(_, cont)) in rows.iter().enumerate() {
            if left_content(t, ai + 1, ci) != cont {
                return Err(Error::internal(format!(
                    "psi moved row {} of component {} of {m} to the wrong content",
                    ai + 1,
                    ci + 1
                )));
            }
        }
        comps.push(Partition::new(rows.into_iter().map(|(p, _)| p).collect())?);
    }
    let out = ChargedMultipartition::new(comps, new_charge)?;
    if out.rank() + e as usize * alpha != m.rank() {
        return Err(Error::internal(format!(
            "psi of {m} did not delete e·α nodes"
        )));
    }
    Ok(out)
}

/// Inverse of [`psi`] given the width of the deleted pseudoperiod.
pub fn psi_inv(mu: &ChargedMultipartition, alpha: usize, e: i64) -> Result<ChargedMultipartition> {
    crate::multipartition::check_e(e)?;
    if alpha == 0 {
        return Err(Error::domain("pseudoperiod width must be positive"));
    }
    let l = mu.level();
    let charge = xi_inv_charge(mu.charge(), e);
    let s = charge.as_slice();

    let mut above: Vec<Vec<usize>> = vec![Vec::new(); l];
    let mut rest: Vec<Vec<usize>> = vec![Vec::new(); l];
    for (ci, lam) in mu.components().iter().enumerate() {
        for &part in lam.parts() {
            if part > alpha {
                above[(ci + l - 1) % l].push(part);
            } else {
                rest[ci].push(part);
            }
        }
    }
    let n_above: Vec<i64> = above.iter().map(|v| v.len() as i64).collect();
    let mut deleted = vec![0i64; l];
    deleted[0] = s[0] - n_above[0] - s[l - 1] + e + n_above[l - 1];
    for c in 1..l {
        deleted[c] = (s[c] - n_above[c]) - (s[c - 1] - n_above[c - 1]);
    }
    if let Some(c) = deleted.iter().position(|&n| n < 0) {
        return Err(Error::domain(format!(
            "{mu} is not the image of a width-{alpha} reduction: component {} would lose {} parts",
            c + 1,
            deleted[c]
        )));
    }
    if deleted.iter().sum::<i64>() != e {
        return Err(Error::internal("deleted part counts do not sum to e"));
    }

    let comps = (0..l)
        .map(|c| {
            let mut parts = std::mem::take(&mut above[c]);
            parts.extend(std::iter::repeat_n(alpha, deleted[c] as usize));
            parts.extend(std::mem::take(&mut rest[c]));
            Partition::new(parts)
        })
        .collect::<Result<Vec<_>>>()?;
    let lam = ChargedMultipartition::new(comps, charge)?;

    if !lam.is_cylindric(e) {
        return Err(Error::internal(format!(
            "psi inverse of {mu} is not cylindric"
        )));
    }
    let pp = pseudoperiod_of(&lam, e)
        .map_err(|_| Error::internal(format!("psi inverse of {mu} has no pseudoperiod")))?;
    if pp.alpha != alpha || psi_with(&lam, &pp, e)? != *mu {
        return Err(Error::internal(format!(
            "psi inverse of {mu} at width {alpha} does not round-trip"
        )));
    }
    Ok(lam)
}

/// `Ψ`: `ψ`, followed by `ξ^p` when `ξ(s)` leaves `S_e`, `p` being the
/// number of entries of `ξ(s)` equal to its last one. Returns the result
/// and the steps taken.
pub fn big_psi(m: &ChargedMultipartition, e: i64) -> Result<(ChargedMultipartition, Vec<Step>)> {
    let pp = pseudoperiod_of(m, e)?;
    let mu = psi_with(m, &pp, e)?;
    let mut steps = vec![Step::Psi { alpha: pp.alpha }];
    let t = mu.charge();
    if t.in_s_e(e) {
        return Ok((mu, steps));
    }
    let last = *t.as_slice().last().expect("non-empty");
    let p = t.as_slice().iter().filter(|&&x| x == last).count() as i64;
    steps.push(Step::Xi { k: p });
    Ok((xi_pow(&mu, p, e), steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{f_op, Mode};
    use crate::isom::pseudoperiod::pseudoperiods;
    use crate::text::parse;

    fn cm(s: &str) -> ChargedMultipartition {
        parse(s).unwrap()
    }

    #[test]
    fn four_level_example() {
        let m = cm("6^2.2.1^2|3.2^3.1^2|6.2^2.1^3 @ 5,6,8");
        let mu = psi(&m, 4).unwrap();
        assert_eq!(mu, cm("6.2.1^2|6^2.2.1^2|3.1^3 @ 4,5,6"));
        assert_eq!(psi_inv(&mu, 2, 4).unwrap(), m);
        let pp = first_pseudoperiod(&MaskedMultipartition::full(m.clone()), 4)
            .unwrap()
            .unwrap();
        let stats = ReductionStats::of(&m, &pp);
        assert_eq!(stats.above, vec![2, 1, 1]);
        assert_eq!(stats.deleted, vec![0, 2, 2]);
    }

    #[test]
    fn commutation_square() {
        let m = cm("3.2.1^2|4.2.1|2^3 @ 2,3,4");
        let mu = psi(&m, 4).unwrap();
        assert_eq!(mu, cm("1^2|3.1|4.2 @ 0,2,3"));
        assert_eq!(psi_inv(&mu, 2, 4).unwrap(), m);
        let mode = Mode::Finite(4);
        let fm = f_op(&m, mode, 0).unwrap();
        assert_eq!(psi(&fm, 4).unwrap(), f_op(&mu, mode, 0).unwrap());
    }

    #[test]
    fn big_psi_drops_one_pseudoperiod() {
        let m = cm("2.1^2|2.1^3|2.1^4 @ 2,3,4");
        assert_eq!(pseudoperiods(&m, 3).unwrap().len(), 3);
        let (out, steps) = big_psi(&m, 3).unwrap();
        assert_eq!(steps, vec![Step::Psi { alpha: 2 }]);
        assert_eq!(out, psi(&m, 3).unwrap());
        assert!(out.is_cylindric(3));
        assert_eq!(pseudoperiods(&out, 3).unwrap().len(), 2);
    }

    #[test]
    fn big_psi_with_cyclage() {
        let m = cm("3^2.2|2^2.1|3.1^2 @ 3,3,4");
        let (mut cur, _) = big_psi(&m, 3).unwrap();
        let mut steps = 1;
        while !cur.is_flotw(3) {
            assert!(cur.is_cylindric(3));
            let (next, st) = big_psi(&cur, 3).unwrap();
            if st.len() == 2 {
                assert!(matches!(st[1], Step::Xi { k } if k >= 1));
            }
            cur = next;
            steps += 1;
        }
        assert!(cur.is_empty());
        assert_eq!(steps, 3);
    }

    #[test]
    fn errors() {
        assert!(matches!(psi(&cm("1|- @ 0,1"), 2), Err(Error::Domain(_))));
        assert!(matches!(
            psi(&cm("4.1|2^2|3 @ 0,3,-2"), 3),
            Err(Error::Domain(_))
        ));
        assert!(psi_inv(&cm("-|- @ 0,1"), 0, 2).is_err());
    }
}
