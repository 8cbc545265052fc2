//! The canonical crystal isomorphism `Φ = φ ∘ (rs ∘ ξ)^m ∘ rs`, completed by
//! `Ψ` reductions and a final cyclage into the fundamental domain, and its
//! inverse driven by the recorded steps.

use crate::crystal::explore;
use crate::error::{Error, Result};
use crate::multipartition::{check_e, ChargedMultipartition};
use crate::rsk::{inverse_rs, rs_with_size};
use crate::symbol::default_size;

use super::cyclage::{xi_pow, xi_pow_charge};
use super::cylindric::to_cylindric_sized;
use super::pseudoperiod::pseudoperiods;
use super::reduction::{big_psi, psi, psi_inv};
use super::steplog::{Step, StepLog};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalResult {
    /// FLOTW, charged in the fundamental domain.
    pub image: ChargedMultipartition,
    pub log: StepLog,
    /// Number of `rs ∘ ξ` rounds needed to become cylindric.
    pub m: usize,
    /// Number of pseudoperiods removed.
    pub t: usize,
    /// Exponent of the final cyclage.
    pub u: i64,
    /// Widths of the removed pseudoperiods, in order.
    pub widths: Vec<usize>,
}

/// `Φ(m)` with the symbol size of every `rs` step at its default.
pub fn canonical(m: &ChargedMultipartition, e: i64) -> Result<CanonicalResult> {
    canonical_sized(m, e, default_size)
}

/// `Φ(m)` with symbol sizes large enough that the recorded log also
/// inverts every vertex of the component of `m` of rank at most `max_rank`.
pub fn canonical_for_rank(
    m: &ChargedMultipartition,
    e: i64,
    max_rank: usize,
) -> Result<CanonicalResult> {
    canonical_sized(m, e, |x| {
        let low = *x.charge().as_slice().iter().min().expect("non-empty");
        default_size(x).max(1 - low + max_rank as i64)
    })
}

fn canonical_sized(
    m: &ChargedMultipartition,
    e: i64,
    size: impl Fn(&ChargedMultipartition) -> i64,
) -> Result<CanonicalResult> {
    check_e(e)?;
    let (mut cur, rounds, steps) = to_cylindric_sized(m, e, size)?;
    let mut log = StepLog::new(steps);
    let mut widths = Vec::new();
    while !cur.is_flotw(e) {
        let (next, steps) = big_psi(&cur, e)?;
        if let Some(Step::Psi { alpha }) = steps.first() {
            widths.push(*alpha);
        }
        log.steps.extend(steps);
        if !next.is_cylindric(e) {
            return Err(Error::internal(format!(
                "reducing {cur} left the cylindric set"
            )));
        }
        cur = next;
    }

    let u = fundamental_exponent(&cur, e)?;
    if u != 0 {
        cur = xi_pow(&cur, u, e);
        log.push(Step::Xi { k: u });
    }
    if !cur.is_flotw(e) {
        return Err(Error::internal(format!(
            "canonical image {cur} is not FLOTW"
        )));
    }
    Ok(CanonicalResult {
        image: cur,
        log,
        m: rounds,
        t: widths.len(),
        widths,
        u,
    })
}

/// The exponent `u` with `ξ^u(s)` in the fundamental domain. Since `ξ^l`
/// subtracts `e` from every entry, the search is centred on the exponent `u_0`
/// moving `min s` into `0..e` and tries `u_0, u_0 + 1, u_0 - 1, ...` up to a
/// radius of `l·(⌈(max s - min s)/e⌉ + 2)`.
fn fundamental_exponent(m: &ChargedMultipartition, e: i64) -> Result<i64> {
    let s = m.charge();
    let v = s.as_slice();
    let l = v.len() as i64;
    let (lo, hi) = (*v.iter().min().unwrap(), *v.iter().max().unwrap());
    let centre = l * lo.div_euclid(e);
    let radius = l * ((hi - lo + e - 1) / e + 2);
    for d in 0..=radius {
        for k in [centre + d, centre - d] {
            if xi_pow_charge(s, k, e).in_d_e(e) {
                return Ok(k);
            }
        }
    }
    Err(Error::internal(format!(
        "no cyclage of {:?} within {radius} steps of {centre} lies in D_e",
        s.as_slice()
    )))
}

/// Replays `log` forward from `m`, checking every recorded step (recording
/// symbols and widths must match). Returns the value after each step.
pub fn replay(
    m: &ChargedMultipartition,
    log: &StepLog,
    e: i64,
) -> Result<Vec<ChargedMultipartition>> {
    check_e(e)?;
    let mut cur = m.clone();
    let mut out = Vec::with_capacity(log.len());
    for (i, step) in log.iter().enumerate() {
        cur = match step {
            Step::Rs { p, q } => {
                let (next, got) = rs_with_size(&cur, *p)?;
                if got != *q {
                    return Err(Error::domain(format!(
                        "step {}: recording symbol of {cur} differs from the log",
                        i + 1
                    )));
                }
                next
            }
            Step::Xi { k } => xi_pow(&cur, *k, e),
            Step::Psi { alpha } => {
                let got = pseudoperiods(&cur, e)?.first().map(|p| p.alpha);
                if got != Some(*alpha) {
                    return Err(Error::domain(format!(
                        "step {}: {cur} has no pseudoperiod of width {alpha} to remove",
                        i + 1
                    )));
                }
                psi(&cur, e)?
            }
        };
        out.push(cur.clone());
    }
    Ok(out)
}

/// `Φ^{-1}`: replays `log` backwards from `image`.
pub fn canonical_inverse(
    image: &ChargedMultipartition,
    log: &StepLog,
    e: i64,
) -> Result<ChargedMultipartition> {
    check_e(e)?;
    let mut cur = image.clone();
    for step in log.steps.iter().rev() {
        cur = match step {
            Step::Xi { k } => xi_pow(&cur, -k, e),
            Step::Psi { alpha } => psi_inv(&cur, *alpha, e)?,
            Step::Rs { p, q } => inverse_rs(&cur, q, *p)?,
        };
    }
    Ok(cur)
}

/// The vertices of rank at most `max_rank` in the crystal component of
/// `m`, obtained by pulling back the FLOTW vertices of the image component.
/// Sorted by rank, then text form.
pub fn component_vertices(
    m: &ChargedMultipartition,
    e: i64,
    max_rank: usize,
) -> Result<Vec<ChargedMultipartition>> {
    let res = canonical_for_rank(m, e, max_rank)?;
    let top_rank = m.rank() - res.image.rank();
    if max_rank < top_rank {
        return Ok(Vec::new());
    }
    let root = ChargedMultipartition::empty(res.image.charge().clone());
    let graph = explore(&root, e, max_rank - top_rank)?;
    let mut out = graph
        .vertices
        .iter()
        .map(|v| canonical_inverse(v, &res.log, e))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_cached_key(|v| (v.rank(), v.to_string()));
    Ok(out)
}
