#![allow(dead_code)]

use affine_crystal::isom::to_cylindric;
use affine_crystal::{ChargedMultipartition, Multicharge, Partition};
use rand::Rng;

pub fn cm(s: &str) -> ChargedMultipartition {
    s.parse().unwrap()
}

pub fn random_partition<R: Rng>(rng: &mut R, n: usize) -> Partition {
    let mut parts = Vec::new();
    let mut left = n;
    while left > 0 {
        let p = rng.gen_range(1..=left);
        parts.push(p);
        left -= p;
    }
    Partition::from_multiset(parts)
}

/// A random charged multipartition of level `l` and rank exactly `n`, with
/// charges in `-4..=6`.
pub fn random_cm<R: Rng>(rng: &mut R, l: usize, n: usize) -> ChargedMultipartition {
    let mut sizes = vec![0usize; l];
    for _ in 0..n {
        sizes[rng.gen_range(0..l)] += 1;
    }
    let comps = sizes.iter().map(|&k| random_partition(rng, k)).collect();
    let s = (0..l).map(|_| rng.gen_range(-4..=6)).collect();
    ChargedMultipartition::new(comps, Multicharge::new(s).unwrap()).unwrap()
}

/// `(l, e, m)` with `l ∈ {1,2,3}`, `e ∈ {2,3,4}` and rank at most `max_rank`.
pub fn random_instance<R: Rng>(
    rng: &mut R,
    max_rank: usize,
) -> (usize, i64, ChargedMultipartition) {
    let l = rng.gen_range(1..=3);
    let e = rng.gen_range(2..=4);
    let n = rng.gen_range(0..=max_rank);
    (l, e, random_cm(rng, l, n))
}

/// A random cylindric multipartition (the cylindric reduction of a random one).
pub fn random_cylindric<R: Rng>(rng: &mut R, max_rank: usize) -> (i64, ChargedMultipartition) {
    let (_, e, m) = random_instance(rng, max_rank);
    (e, to_cylindric(&m, e).unwrap().0)
}
