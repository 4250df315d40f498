/// Search limits and execution settings shared by every solver entry point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest graph the exact subset search will attempt (at most 64).
    pub max_exact: usize,
    /// Largest graph whose local metric bases may be enumerated in full.
    pub max_bases: usize,
    /// Largest graph for which the clique-number fast path is tried.
    pub max_clique: usize,
    /// Largest graph for the exhaustive minimal-generator check.
    pub max_minimality: usize,
    /// Use the bipartite, complete and clique-number shortcuts.
    pub fast_paths: bool,
    /// Worker threads for per-block solves; 1 runs everything inline.
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            max_exact: 24,
            max_bases: 16,
            max_clique: crate::graph::DEFAULT_CLIQUE_LIMIT,
            max_minimality: 12,
            fast_paths: true,
            threads: 1,
        }
    }
}

impl Config {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn without_fast_paths(mut self) -> Self {
        self.fast_paths = false;
        self
    }

    pub(crate) fn exact_cap(&self) -> usize {
        self.max_exact.min(64)
    }
}
