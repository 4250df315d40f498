//! Whole-graph search versus the block-sum engine, timed.

use std::time::Instant;

use serde::Serialize;

use crate::config::Config;
use crate::decomposition::dim_via_decomposition;
use crate::graph::Graph;
use crate::local_metric::local_metric_dimension;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchMethod {
    BruteForce,
    Decomposition,
}

impl BenchMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            BenchMethod::BruteForce => "brute-force",
            BenchMethod::Decomposition => "decomposition",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MethodRun {
    pub method: BenchMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    /// Wall time in microseconds; absent when timing is disabled or the
    /// method did not run.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchReport {
    pub instance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub n: usize,
    pub m: usize,
    pub runs: Vec<MethodRun>,
    /// No method failed and every method that ran returned the same value.
    pub agreement: bool,
}

impl BenchReport {
    pub fn dimension(&self) -> Option<usize> {
        self.runs.iter().find_map(|r| r.dimension)
    }

    pub fn run(&self, method: BenchMethod) -> Option<&MethodRun> {
        self.runs.iter().find(|r| r.method == method)
    }

    pub fn strip_timing(&mut self) {
        for r in &mut self.runs {
            r.micros = None;
        }
    }
}

fn run_one(g: &Graph, method: BenchMethod, cfg: &Config) -> MethodRun {
    let mut run = MethodRun {
        method,
        dimension: None,
        micros: None,
        skipped: None,
        error: None,
    };
    if method == BenchMethod::BruteForce && g.n() > cfg.max_exact {
        run.skipped = Some(format!("n = {} exceeds max-exact {}", g.n(), cfg.max_exact));
        return run;
    }
    let start = Instant::now();
    let result = match method {
        BenchMethod::BruteForce => local_metric_dimension(g, cfg),
        BenchMethod::Decomposition => dim_via_decomposition(g, cfg),
    };
    run.micros = Some(start.elapsed().as_micros() as u64);
    match result {
        Ok(r) => run.dimension = Some(r.dimension),
        Err(e) => run.error = Some(e.to_string()),
    }
    run
}

pub fn bench_compare(
    instance: &str,
    seed: Option<u64>,
    g: &Graph,
    methods: &[BenchMethod],
    cfg: &Config,
) -> BenchReport {
    let runs: Vec<MethodRun> = methods.iter().map(|&m| run_one(g, m, cfg)).collect();
    let failed = runs.iter().any(|r| r.error.is_some());
    let mut values = runs.iter().filter_map(|r| r.dimension);
    let first = values.next();
    let agreement = !failed && values.all(|v| Some(v) == first);
    BenchReport {
        instance: instance.to_string(),
        seed,
        n: g.n(),
        m: g.m(),
        runs,
        agreement,
    }
}
