//! Shared fixtures for the benchmarks.

use affine_crystal::crystal::{f_op, Mode};
use affine_crystal::{ChargedMultipartition, Multicharge};

/// A level-3 instance that needs five `rs ∘ ξ` rounds and two reductions.
pub const WORKED: &str = "4.2^2.1^3|5.2^3.1^4|7^2.6.4^2.2^2.1^3 @ 0,9,5";

pub fn worked() -> ChargedMultipartition {
    WORKED.parse().expect("fixture parses")
}

/// A vertex of rank `n` in the component of `∅@s`, reached by applying
/// `f̃_i` for `i = 0, 1, 2, ...` (mod `e`) and skipping undefined ones.
pub fn grown(s: &[i64], e: i64, n: usize) -> ChargedMultipartition {
    let charge = Multicharge::new(s.to_vec()).expect("non-empty charge");
    let mut cur = ChargedMultipartition::empty(charge);
    let mode = Mode::Finite(e);
    let mut i = 0;
    while cur.rank() < n {
        if let Some(next) = f_op(&cur, mode, i % e) {
            cur = next;
        }
        i += 1;
    }
    cur
}

/// `grown`, then moved out of the fundamental domain by a spread-out charge
/// so that the reduction loop has work to do.
pub fn scattered(l: usize, e: i64, n: usize) -> ChargedMultipartition {
    let s: Vec<i64> = (0..l as i64).map(|c| (c * 7) % (3 * e) - e).collect();
    grown(&s, e, n)
}
