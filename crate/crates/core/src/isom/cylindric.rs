//! Reduction to a cylindric multipartition by alternating `ξ` and `rs`.

use crate::error::{Error, Result};
use crate::multipartition::{check_e, ChargedMultipartition};
use crate::rsk::rs_with_size;
use crate::symbol::default_size;

use super::cyclage::xi;
use super::steplog::Step;

/// Applies `rs`, then `rs ∘ ξ` until the result is cylindric. Returns the
/// cylindric multipartition, the number of `rs ∘ ξ` rounds, and the steps.
///
/// Every round must either lower the rank or, keeping it, lower
/// `Σ_{k≥2} (s_k - s_1)` by exactly `e`; anything else is reported as an
/// internal error.
pub fn to_cylindric(
    m: &ChargedMultipartition,
    e: i64,
) -> Result<(ChargedMultipartition, usize, Vec<Step>)> {
    to_cylindric_sized(m, e, default_size)
}

/// As [`to_cylindric`], with the symbol size of each `rs` step chosen by
/// `size` (which must return an admissible size).
pub fn to_cylindric_sized(
    m: &ChargedMultipartition,
    e: i64,
    size: impl Fn(&ChargedMultipartition) -> i64,
) -> Result<(ChargedMultipartition, usize, Vec<Step>)> {
    check_e(e)?;
    let mut steps = Vec::new();
    let p = size(m);
    let (mut cur, q) = rs_with_size(m, p)?;
    steps.push(Step::Rs { p, q });
    let mut rounds = 0;
    while !cur.is_cylindric(e) {
        let prev = cur;
        let x = xi(&prev, e);
        let p = size(&x);
        let (next, q) = rs_with_size(&x, p)?;
        steps.push(Step::Xi { k: 1 });
        steps.push(Step::Rs { p, q });
        rounds += 1;

        if next.rank() > prev.rank() {
            return Err(Error::internal(format!("rs ∘ ξ raised the rank of {prev}")));
        }
        if next.rank() == prev.rank() && prev.charge().spread() - next.charge().spread() != e {
            return Err(Error::internal(format!(
                "rs ∘ ξ kept the rank of {prev} but did not lower the charge spread by {e}"
            )));
        }
        cur = next;
    }
    Ok((cur, rounds, steps))
}
