use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_CLIQUE_LIMIT: usize = 32;

/// Order of a maximum clique, by branch and bound over bitmask candidate sets.
///
/// Fails with `TooLarge` above `limit` (which is itself clamped to 64).
pub fn clique_number(g: &Graph, limit: usize) -> Result<usize> {
    let n = g.n();
    let limit = limit.min(64);
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    if n == 0 {
        return Ok(0);
    }
    let nbrs: Vec<u64> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 1;
    expand(&nbrs, 0, all, &mut best);
    Ok(best)
}

fn expand(nbrs: &[u64], size: usize, mut candidates: u64, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    while candidates != 0 {
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        expand(nbrs, size + 1, candidates & nbrs[v], best);
    }
}
