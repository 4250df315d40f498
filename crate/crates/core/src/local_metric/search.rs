//! Minimum set-cover search over "edges distinguished by a vertex".
//!
//! Vertex `x` covers edge `uv` when `d(u, x) != d(v, x)`. A vertex set is a
//! local metric generator exactly when its members cover every edge.

use std::ops::ControlFlow;

use crate::graph::Graph;

pub(crate) struct CoverTable {
    full: Vec<u64>,
    cover: Vec<Vec<u64>>,
    gain: Vec<usize>,
}

impl CoverTable {
    /// Builds the table for a connected graph on at most 64 vertices.
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.n();
        debug_assert!(n <= 64);
        let dist = g.distance_matrix();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let words = edges.len().div_ceil(64);
        let mut full = vec![0u64; words];
        for i in 0..edges.len() {
            full[i / 64] |= 1 << (i % 64);
        }
        let cover: Vec<Vec<u64>> = (0..n)
            .map(|x| {
                let mut bits = vec![0u64; words];
                for (i, &(u, v)) in edges.iter().enumerate() {
                    if dist[x][u] != dist[x][v] {
                        bits[i / 64] |= 1 << (i % 64);
                    }
                }
                bits
            })
            .collect();
        let gain = cover.iter().map(|c| popcount(c)).collect();
        Self {
            full,
            cover,
            gain,
        }
    }

    /// Edges left uncovered by the vertices in `mask`.
    pub(crate) fn uncovered(&self, mask: u64) -> Vec<u64> {
        let mut need = self.full.clone();
        let mut m = mask;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            m &= m - 1;
            for (w, c) in need.iter_mut().zip(&self.cover[x]) {
                *w &= !c;
            }
        }
        need
    }

    pub(crate) fn is_cover(&self, mask: u64) -> bool {
        is_zero(&self.uncovered(mask))
    }

    /// Lexicographically first minimum `S` among `candidates` such that
    /// `S` together with `forced` covers every edge.
    ///
    /// Returns `None` only if even all candidates fail.
    pub(crate) fn min_extension(&self, forced: u64, candidates: &[usize]) -> Option<(usize, u64)> {
        let need = self.uncovered(forced);
        (0..=candidates.len()).find_map(|k| {
            self.first_of_size(&need, candidates, k)
                .map(|mask| (k, mask))
        })
    }

    /// Lexicographically first `k`-subset of `candidates` covering `need`.
    pub(crate) fn first_of_size(&self, need: &[u64], candidates: &[usize], k: usize) -> Option<u64> {
        let mut found = None;
        let _ = self.walk(need, candidates, k, &mut |mask| {
            found = Some(mask);
            ControlFlow::Break(())
        });
        found
    }

    /// Every `k`-subset of `candidates` covering `need`, in lexicographic order.
    pub(crate) fn all_of_size(&self, need: &[u64], candidates: &[usize], k: usize) -> Vec<u64> {
        let mut out = Vec::new();
        let _ = self.walk(need, candidates, k, &mut |mask| {
            out.push(mask);
            ControlFlow::Continue(())
        });
        out
    }

    fn walk(
        &self,
        need: &[u64],
        candidates: &[usize],
        k: usize,
        visit: &mut dyn FnMut(u64) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if k > candidates.len() {
            return ControlFlow::Continue(());
        }
        // suffix[i]: union of coverage of candidates[i..]; best[i]: max single gain there.
        let words = self.full.len();
        let mut suffix = vec![vec![0u64; words]; candidates.len() + 1];
        let mut best = vec![0usize; candidates.len() + 1];
        for i in (0..candidates.len()).rev() {
            let x = candidates[i];
            for w in 0..words {
                suffix[i][w] = suffix[i + 1][w] | self.cover[x][w];
            }
            best[i] = best[i + 1].max(self.gain[x]);
        }
        let mut state = Walk {
            table: self,
            candidates,
            suffix: &suffix,
            best: &best,
            visit,
        };
        state.descend(0, k, need.to_vec(), 0)
    }
}

struct Walk<'a> {
    table: &'a CoverTable,
    candidates: &'a [usize],
    suffix: &'a [Vec<u64>],
    best: &'a [usize],
    visit: &'a mut dyn FnMut(u64) -> ControlFlow<()>,
}

impl Walk<'_> {
    fn descend(&mut self, pos: usize, remaining: usize, need: Vec<u64>, mask: u64) -> ControlFlow<()> {
        if remaining == 0 {
            if is_zero(&need) {
                return (self.visit)(mask);
            }
            return ControlFlow::Continue(());
        }
        let last_start = self.candidates.len() - remaining;
        for i in pos..=last_start {
            if !covered_by(&need, &self.suffix[i]) {
                break;
            }
            if popcount(&need) > remaining * self.best[i] {
                break;
            }
            let x = self.candidates[i];
            let next: Vec<u64> = need
                .iter()
                .zip(&self.table.cover[x])
                .map(|(a, c)| a & !c)
                .collect();
            self.descend(i + 1, remaining - 1, next, mask | (1 << x))?;
        }
        ControlFlow::Continue(())
    }
}

fn covered_by(need: &[u64], available: &[u64]) -> bool {
    need.iter().zip(available).all(|(a, b)| a & !b == 0)
}

fn is_zero(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}
