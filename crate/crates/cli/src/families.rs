use std::fmt::Write as _;

use clap::{Args, ValueEnum};
use locdim::bench::{bench_compare, BenchMethod, BenchReport};
use locdim::generate::{cut_vertex_suite, generate, Family, GeneratorConfig};
use locdim::graph::write_edge_list;
use locdim::{Config, Graph};

use crate::commands::read_graph;
use crate::{CmdResult, Failure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    RandomConnected,
    Unicyclic,
    BlockGraph,
    ChainOf,
    Cactus,
    Attached,
    /// Mixed cut-vertex instances (bench only).
    Suite,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyKind,
    /// Vertex count (random-connected, unicyclic, cactus) or size cap (suite).
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge probability.
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    #[arg(long)]
    pub cycle_len: Option<usize>,
    #[arg(long)]
    pub blocks: Option<usize>,
    #[arg(long)]
    pub max_order: Option<usize>,
    /// Part orders for chain-of, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub orders: Vec<usize>,
    #[arg(long)]
    pub parts: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct BenchSource {
    #[arg(long, value_enum, conflicts_with_all = ["input", "dsl"])]
    pub family: Option<FamilyKind>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    #[arg(long)]
    pub cycle_len: Option<usize>,
    #[arg(long)]
    pub blocks: Option<usize>,
    #[arg(long)]
    pub max_order: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub orders: Vec<usize>,
    #[arg(long)]
    pub parts: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge-list file to benchmark instead of a family.
    #[arg(long)]
    pub input: Option<std::path::PathBuf>,
    /// Construction expression to benchmark instead of a family.
    #[arg(long, conflicts_with = "input")]
    pub dsl: Option<String>,
}

impl BenchSource {
    fn family_args(&self, family: FamilyKind) -> FamilyArgs {
        FamilyArgs {
            family,
            n: self.n,
            p: self.p,
            cycle_len: self.cycle_len,
            blocks: self.blocks,
            max_order: self.max_order,
            orders: self.orders.clone(),
            parts: self.parts,
            seed: self.seed,
        }
    }
}

fn need<T: Copy>(value: Option<T>, flag: &str, family: FamilyKind) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this family ({family:?})")))
}

fn family_of(args: &FamilyArgs) -> Result<Family, Failure> {
    let kind = args.family;
    Ok(match kind {
        FamilyKind::RandomConnected => Family::RandomConnected {
            n: need(args.n, "n", kind)?,
            p: args.p,
        },
        FamilyKind::Unicyclic => Family::Unicyclic {
            n: need(args.n, "n", kind)?,
            cycle_len: args.cycle_len,
        },
        FamilyKind::BlockGraph => Family::BlockGraph {
            blocks: need(args.blocks, "blocks", kind)?,
            max_order: need(args.max_order, "max-order", kind)?,
        },
        FamilyKind::ChainOf => Family::ChainOf {
            orders: args.orders.clone(),
            p: args.p,
        },
        FamilyKind::Cactus => Family::Cactus {
            n: need(args.n, "n", kind)?,
        },
        FamilyKind::Attached => Family::Attached {
            parts: need(args.parts, "parts", kind)?,
            max_order: need(args.max_order, "max-order", kind)?,
            p: args.p,
        },
        FamilyKind::Suite => return Err(Failure::Usage("the suite family is only available to bench".into())),
    })
}

pub fn gen(args: &FamilyArgs) -> CmdResult {
    let g = generate(&GeneratorConfig::new(family_of(args)?, args.seed))?;
    Ok(write_edge_list(&g))
}

fn instances(source: &BenchSource, count: usize) -> Result<Vec<(String, Option<u64>, Graph)>, Failure> {
    let Some(kind) = source.family else {
        let input = crate::Input {
            input: source.input.clone(),
            dsl: source.dsl.clone(),
        };
        let g = read_graph(&input)?;
        let name = match (&source.input, &source.dsl) {
            (Some(p), _) => p.display().to_string(),
            (None, Some(d)) => d.clone(),
            _ => unreachable!(),
        };
        return Ok(vec![(name, None, g)]);
    };
    if kind == FamilyKind::Suite {
        let max_n = source.n.unwrap_or(12);
        return Ok(cut_vertex_suite(count, max_n, source.seed)
            .into_iter()
            .map(|i| (i.id, Some(i.config.seed), i.graph))
            .collect());
    }
    let args = source.family_args(kind);
    let family = family_of(&args)?;
    let name = kind.to_possible_value().expect("no skipped variants").get_name().to_string();
    (0..count as u64)
        .map(|i| {
            let seed = source.seed.wrapping_add(i);
            let g = generate(&GeneratorConfig::new(family.clone(), seed))?;
            Ok((format!("{name}-{seed}"), Some(seed), g))
        })
        .collect()
}

fn table(reports: &[BenchReport]) -> String {
    let cell = |r: &BenchReport, m: BenchMethod| -> (String, String) {
        match r.run(m) {
            None => ("-".into(), "-".into()),
            Some(run) if run.skipped.is_some() => ("skipped".into(), "-".into()),
            Some(run) if run.error.is_some() => ("error".into(), "-".into()),
            Some(run) => (
                run.dimension.map_or("-".into(), |d| d.to_string()),
                run.micros.map_or("-".into(), |t| t.to_string()),
            ),
        }
    };
    let mut out = format!(
        "{:<24} {:>5} {:>6} {:>8} {:>8} {:>12} {:>12} {:>6}\n",
        "instance", "n", "m", "brute", "decomp", "brute_us", "decomp_us", "agree"
    );
    for r in reports {
        let (bd, bt) = cell(r, BenchMethod::BruteForce);
        let (dd, dt) = cell(r, BenchMethod::Decomposition);
        writeln!(
            out,
            "{:<24} {:>5} {:>6} {:>8} {:>8} {:>12} {:>12} {:>6}",
            r.instance, r.n, r.m, bd, dd, bt, dt, r.agreement
        )
        .unwrap();
    }
    out
}

pub fn bench(source: &BenchSource, compare: bool, count: usize, no_timing: bool, json: bool, cfg: &Config) -> CmdResult {
    let methods: &[BenchMethod] = if compare {
        &[BenchMethod::BruteForce, BenchMethod::Decomposition]
    } else {
        &[BenchMethod::Decomposition]
    };
    let mut reports = Vec::new();
    for (name, seed, g) in instances(source, count)? {
        let mut r = bench_compare(&name, seed, &g, methods, cfg);
        if no_timing {
            r.strip_timing();
        }
        reports.push(r);
    }
    let out = if json {
        reports
            .iter()
            .map(|r| serde_json::to_string(r).expect("plain data serializes") + "\n")
            .collect()
    } else {
        table(&reports)
    };
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.agreement)
        .map(|r| r.instance.as_str())
        .collect();
    if failed.is_empty() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Compute(format!("methods disagree or failed on: {}", failed.join(", "))))
    }
}
