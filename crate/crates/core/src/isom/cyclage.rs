//! The cyclage `ξ`: rotate the components one step to the right and replace
//! the charge by `(s_l - e, s_1, ..., s_{l-1})`.

use crate::multipartition::{ChargedMultipartition, Multicharge};

pub fn xi_charge(s: &Multicharge, e: i64) -> Multicharge {
    let v = s.as_slice();
    let l = v.len();
    let mut out = Vec::with_capacity(l);
    out.push(v[l - 1] - e);
    out.extend_from_slice(&v[..l - 1]);
    Multicharge::new(out).expect("non-empty")
}

pub fn xi_inv_charge(s: &Multicharge, e: i64) -> Multicharge {
    let v = s.as_slice();
    let mut out = v[1..].to_vec();
    out.push(v[0] + e);
    Multicharge::new(out).expect("non-empty")
}

/// `ξ^k(s)` for any integer `k`.
pub fn xi_pow_charge(s: &Multicharge, k: i64, e: i64) -> Multicharge {
    // ξ^l shifts every entry by -e, so only k mod l steps are done one by one.
    let l = s.level() as i64;
    let (q, r) = (k.div_euclid(l), k.rem_euclid(l));
    let mut cur = s.clone();
    for _ in 0..r {
        cur = xi_charge(&cur, e);
    }
    Multicharge::new(cur.as_slice().iter().map(|x| x - q * e).collect()).expect("non-empty")
}

pub fn xi(m: &ChargedMultipartition, e: i64) -> ChargedMultipartition {
    xi_pow(m, 1, e)
}

pub fn xi_inv(m: &ChargedMultipartition, e: i64) -> ChargedMultipartition {
    xi_pow(m, -1, e)
}

pub fn xi_pow(m: &ChargedMultipartition, k: i64, e: i64) -> ChargedMultipartition {
    let l = m.level();
    let r = k.rem_euclid(l as i64) as usize;
    let mut comps = m.components().to_vec();
    comps.rotate_right(r);
    ChargedMultipartition::new(comps, xi_pow_charge(m.charge(), k, e))
        .expect("rotation keeps the level")
}
