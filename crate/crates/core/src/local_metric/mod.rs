//! Local metric generators, exact minimum search, basis enumeration, and the
//! constrained quantities `rho` and `alpha` used by the block decomposition.
//!
//! A set `W` is a local metric generator when every pair of adjacent
//! vertices has different distances to some member of `W`.

mod search;

use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::{clique_number, Graph, VertexSet};

pub(crate) use search::CoverTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    BipartiteFastPath,
    CompleteFastPath,
    CliqueFastPath,
    BruteForce,
    Decomposition,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::BipartiteFastPath => "bipartite-fast-path",
            Method::CompleteFastPath => "complete-fast-path",
            Method::CliqueFastPath => "clique-fast-path",
            Method::BruteForce => "brute-force",
            Method::Decomposition => "decomposition",
            Method::ClosedForm => "closed-form",
        }
    }
}

/// A computed local metric dimension with a witnessing generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimResult {
    pub dimension: usize,
    pub method: Method,
    pub witness: VertexSet,
}

/// All local metric bases of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisFamily {
    pub dimension: usize,
    /// In lexicographic order.
    pub bases: Vec<VertexSet>,
}

impl BasisFamily {
    /// True if some basis contains `v`.
    pub fn covers(&self, v: usize) -> bool {
        self.bases.iter().any(|b| b.contains(v))
    }

    /// Largest overlap of `c` with any basis.
    pub fn max_overlap(&self, c: &VertexSet) -> usize {
        self.bases
            .iter()
            .map(|b| b.intersection(c).len())
            .max()
            .unwrap_or(0)
    }
}

/// Distances from `u` to each landmark in `w`, in order.
pub fn representation(g: &Graph, u: usize, w: &[usize]) -> Result<Vec<usize>> {
    if let Some(&bad) = w.iter().find(|&&x| x >= g.n()) {
        return Err(Error::VertexOutOfRange(bad));
    }
    let dist = g.bfs_distances(u)?;
    Ok(w.iter().map(|&x| dist[x]).collect())
}

pub fn is_local_metric_generator(g: &Graph, w: &VertexSet) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    if w.bound() > g.n() {
        return Err(Error::VertexOutOfRange(w.bound() - 1));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let rows: Vec<Vec<usize>> = w
        .iter()
        .map(|x| g.bfs_distances(x).expect("landmark in range"))
        .collect();
    Ok(g
        .edges()
        .all(|(u, v)| rows.iter().any(|d| d[u] != d[v])))
}

fn check_solvable(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::Trivial);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn exact_table(g: &Graph, cap: usize) -> Result<CoverTable> {
    if g.n() > cap {
        return Err(Error::SearchLimitExceeded { n: g.n(), cap });
    }
    Ok(CoverTable::new(g))
}

/// Minimum local metric generator of a connected graph.
///
/// With fast paths enabled, bipartite graphs, complete graphs and graphs of
/// clique number `n - 1` skip the general search. The witness is always the
/// lexicographically first minimum generator.
pub fn local_metric_dimension(g: &Graph, cfg: &Config) -> Result<DimResult> {
    check_solvable(g)?;
    let n = g.n();
    if cfg.fast_paths {
        if g.is_bipartite() {
            return Ok(DimResult {
                dimension: 1,
                method: Method::BipartiteFastPath,
                witness: VertexSet::from_iter([0]),
            });
        }
        if g.is_complete() {
            return Ok(DimResult {
                dimension: n - 1,
                method: Method::CompleteFastPath,
                witness: (0..n - 1).collect(),
            });
        }
        if n <= cfg.max_clique.min(64) && clique_number(g, cfg.max_clique)? == n - 1 {
            let table = CoverTable::new(g);
            let all: Vec<usize> = (0..n).collect();
            let mask = table
                .first_of_size(&table.uncovered(0), &all, n - 2)
                .ok_or(Error::Infeasible)?;
            return Ok(DimResult {
                dimension: n - 2,
                method: Method::CliqueFastPath,
                witness: VertexSet::from_mask(mask),
            });
        }
    }
    exhaustive_dimension(g, cfg)
}

/// Minimum local metric generator by subset search alone, never using the
/// structural shortcuts.
pub fn exhaustive_dimension(g: &Graph, cfg: &Config) -> Result<DimResult> {
    check_solvable(g)?;
    let table = exact_table(g, cfg.exact_cap())?;
    let all: Vec<usize> = (0..g.n()).collect();
    let (dimension, mask) = table.min_extension(0, &all).ok_or(Error::Infeasible)?;
    Ok(DimResult {
        dimension,
        method: Method::BruteForce,
        witness: VertexSet::from_mask(mask),
    })
}

pub fn enumerate_local_metric_bases(g: &Graph, cfg: &Config) -> Result<BasisFamily> {
    check_solvable(g)?;
    let table = exact_table(g, cfg.max_bases.min(cfg.exact_cap()))?;
    let all: Vec<usize> = (0..g.n()).collect();
    let (dimension, _) = table.min_extension(0, &all).ok_or(Error::Infeasible)?;
    let bases = table
        .all_of_size(&table.uncovered(0), &all, dimension)
        .into_iter()
        .map(VertexSet::from_mask)
        .collect();
    Ok(BasisFamily { dimension, bases })
}

/// Minimum `|S|` such that `S ∪ c` is a local metric generator, with the
/// lexicographically first minimizing `S` (always disjoint from `c`).
pub fn rho(g: &Graph, c: &VertexSet, cfg: &Config) -> Result<(usize, VertexSet)> {
    if c.bound() > g.n() {
        return Err(Error::VertexOutOfRange(c.bound() - 1));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if g.m() == 0 {
        return Ok((0, VertexSet::new()));
    }
    if g.is_bipartite() {
        // Any single vertex is already a generator.
        return Ok(if c.is_empty() {
            (1, VertexSet::from_iter([0]))
        } else {
            (0, VertexSet::new())
        });
    }
    if g.is_complete() {
        // Generators of K_n are exactly the sets missing at most one vertex.
        let need = (n - 1).saturating_sub(c.len());
        let witness: VertexSet = (0..n).filter(|v| !c.contains(*v)).take(need).collect();
        return Ok((need, witness));
    }
    let table = exact_table(g, cfg.exact_cap())?;
    let forced = c.as_mask().expect("c within a graph of at most 64 vertices");
    let candidates: Vec<usize> = (0..n).filter(|v| !c.contains(*v)).collect();
    let (size, mask) = table
        .min_extension(forced, &candidates)
        .ok_or(Error::Infeasible)?;
    Ok((size, VertexSet::from_mask(mask)))
}

/// Largest `|c ∩ B|` over all local metric bases `B` of `g`.
pub fn alpha(g: &Graph, c: &VertexSet, cfg: &Config) -> Result<usize> {
    if c.bound() > g.n() {
        return Err(Error::VertexOutOfRange(c.bound() - 1));
    }
    if c.is_empty() {
        check_solvable(g)?;
        return Ok(0);
    }
    Ok(enumerate_local_metric_bases(g, cfg)?.max_overlap(c))
}

/// True iff every inclusion-minimal local metric generator of `g` is also
/// minimum. Exhaustive over all subsets.
pub fn is_minimal_generator_always_minimum(g: &Graph, cfg: &Config) -> Result<bool> {
    let n = g.n();
    let limit = cfg.max_minimality.min(30);
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    check_solvable(g)?;
    let table = CoverTable::new(g);
    let covers: Vec<bool> = (0u64..1 << n).map(|s| table.is_cover(s)).collect();
    let dim = (1u64..1 << n)
        .filter(|&s| covers[s as usize])
        .map(|s| s.count_ones())
        .min()
        .expect("the full vertex set is a generator");
    Ok((1u64..1 << n).all(|s| {
        if !covers[s as usize] || s.count_ones() == dim {
            return true;
        }
        let mut m = s;
        while m != 0 {
            let bit = m & m.wrapping_neg();
            m &= m - 1;
            if covers[(s & !bit) as usize] {
                return true; // not minimal
            }
        }
        false
    }))
}

#[cfg(test)]
mod tests;
