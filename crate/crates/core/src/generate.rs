//! Seeded random instance families. Every family yields a connected simple
//! graph, and the same config always yields the same graph.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::constructions::{chain, point_attach, ChainSpec};
use crate::error::{Error, Result};
use crate::graph::{complete, Graph};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// A random spanning tree plus each remaining pair with probability `p`.
    RandomConnected { n: usize, p: f64 },
    /// One cycle (random length if unset) with random trees hanging off it.
    Unicyclic { n: usize, cycle_len: Option<usize> },
    /// `blocks` cliques of order 2..=max_order glued at random vertices.
    BlockGraph { blocks: usize, max_order: usize },
    /// Random connected parts of the given orders, glued end to end.
    ChainOf { orders: Vec<usize>, p: f64 },
    /// Cycles and bridges glued at random vertices, `n` vertices total.
    Cactus { n: usize },
    /// `parts` random connected parts of order 2..=max_order, each glued to
    /// a random vertex of the graph built so far.
    Attached { parts: usize, max_order: usize, p: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneratorConfig {
    #[serde(flatten)]
    pub family: Family,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn new(family: Family, seed: u64) -> Self {
        Self { family, seed }
    }
}

pub fn generate(cfg: &GeneratorConfig) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    match &cfg.family {
        Family::RandomConnected { n, p } => {
            check_prob(*p)?;
            if *n == 0 {
                return Err(bad("n must be at least 1"));
            }
            random_connected(*n, *p, &mut rng)
        }
        Family::Unicyclic { n, cycle_len } => unicyclic(*n, *cycle_len, &mut rng),
        Family::BlockGraph { blocks, max_order } => block_graph(*blocks, *max_order, &mut rng),
        Family::ChainOf { orders, p } => {
            check_prob(*p)?;
            chain_of(orders, *p, &mut rng)
        }
        Family::Cactus { n } => cactus(*n, &mut rng),
        Family::Attached { parts, max_order, p } => {
            check_prob(*p)?;
            attached(*parts, *max_order, *p, &mut rng)
        }
    }
}

/// A generated instance with a stable name.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub id: String,
    pub config: GeneratorConfig,
    pub graph: Graph,
}

/// Rotating family choice for instance `i`, with sizes drawn from `rng`.
fn mixed_family(i: usize, max_n: usize, rng: &mut impl Rng) -> Family {
    let big = max_n.max(6);
    match i % 4 {
        0 => Family::Cactus {
            n: rng.gen_range(big / 2..=big),
        },
        1 => Family::BlockGraph {
            blocks: rng.gen_range(2..=5),
            max_order: rng.gen_range(3..=5),
        },
        2 => {
            let k = rng.gen_range(2..=4);
            Family::ChainOf {
                orders: (0..k).map(|_| rng.gen_range(2..=5)).collect(),
                p: 0.5,
            }
        }
        _ => Family::Attached {
            parts: rng.gen_range(2..=5),
            max_order: 5,
            p: 0.5,
        },
    }
}

/// `count` connected graphs with at least one cut vertex and at most
/// `max_n` vertices, rotating through cacti, block graphs, chains and
/// random attachments. Candidates that miss the constraints are skipped.
pub fn cut_vertex_suite(count: usize, max_n: usize, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut i = 0;
    while out.len() < count {
        let config = GeneratorConfig::new(mixed_family(i, max_n, &mut rng), rng.gen());
        i += 1;
        let Ok(graph) = generate(&config) else { continue };
        if graph.n() > max_n || !has_cut_vertex(&graph) {
            continue;
        }
        out.push(Instance {
            id: format!("suite-{seed}-{:03}", out.len()),
            config,
            graph,
        });
    }
    out
}

fn has_cut_vertex(g: &Graph) -> bool {
    crate::decomposition::articulation_points(g).is_ok_and(|s| !s.is_empty())
}

fn bad(msg: &str) -> Error {
    Error::BadConfig(msg.to_string())
}

fn check_prob(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(bad("edge probability must lie in [0, 1]"))
    }
}

/// Random labelled tree by attaching each vertex to an earlier one, then
/// shuffling labels, then adding extra edges independently.
pub fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((perm[i], perm[j]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

fn unicyclic(n: usize, cycle_len: Option<usize>, rng: &mut impl Rng) -> Result<Graph> {
    if n < 3 {
        return Err(bad("a unicyclic graph needs at least 3 vertices"));
    }
    let len = match cycle_len {
        Some(l) if l < 3 || l > n => return Err(bad("cycle length must lie in 3..=n")),
        Some(l) => l,
        None => rng.gen_range(3..=n),
    };
    let mut edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    for v in len..n {
        edges.push((v, rng.gen_range(0..v)));
    }
    Graph::from_edge_list(n, &edges)
}

fn block_graph(blocks: usize, max_order: usize, rng: &mut impl Rng) -> Result<Graph> {
    if blocks == 0 || max_order < 2 {
        return Err(bad("need at least one block and max order at least 2"));
    }
    let mut parts = Vec::with_capacity(blocks);
    let mut ids = Vec::new();
    let mut sizes = Vec::with_capacity(blocks);
    for j in 0..blocks {
        let t = rng.gen_range(2..=max_order);
        parts.push(complete(t)?);
        sizes.push(t);
        if j > 0 {
            let p = rng.gen_range(0..j);
            let v = rng.gen_range(0..sizes[p]);
            ids.push(((p, v), (j, 0)));
        }
    }
    Ok(point_attach(&parts, &ids)?.0)
}

fn chain_of(orders: &[usize], p: f64, rng: &mut impl Rng) -> Result<Graph> {
    if orders.len() < 2 || orders.iter().any(|&o| o < 2) {
        return Err(bad("a chain needs at least two parts of order at least 2"));
    }
    let parts = orders
        .iter()
        .map(|&o| random_connected(o, p, rng))
        .collect::<Result<Vec<_>>>()?;
    let k = parts.len();
    let mut entry = vec![0usize; k];
    let mut links = Vec::with_capacity(k - 1);
    for i in 0..k - 1 {
        let exit = loop {
            let y = rng.gen_range(0..orders[i]);
            if i == 0 || y != entry[i] {
                break y;
            }
        };
        entry[i + 1] = rng.gen_range(0..orders[i + 1]);
        links.push((exit, entry[i + 1]));
    }
    Ok(chain(&ChainSpec { parts, links })?.0)
}

fn cactus(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    if n == 0 {
        return Err(bad("n must be at least 1"));
    }
    let mut edges = Vec::new();
    let mut count = 1;
    while count < n {
        let x = rng.gen_range(0..count);
        let room = n - count;
        if room >= 2 && rng.gen_bool(0.6) {
            let len = rng.gen_range(3..=(room + 1).min(7));
            let mut prev = x;
            for _ in 1..len {
                edges.push((prev, count));
                prev = count;
                count += 1;
            }
            edges.push((prev, x));
        } else {
            edges.push((x, count));
            count += 1;
        }
    }
    Graph::from_edge_list(n, &edges)
}

fn attached(parts: usize, max_order: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    if parts == 0 || max_order < 2 {
        return Err(bad("need at least one part and max order at least 2"));
    }
    let mut graphs = Vec::with_capacity(parts);
    let mut ids = Vec::new();
    for j in 0..parts {
        let order = rng.gen_range(2..=max_order);
        graphs.push(random_connected(order, p, rng)?);
        if j > 0 {
            let q = rng.gen_range(0..j);
            let u = rng.gen_range(0..graphs[q].n());
            let v = rng.gen_range(0..order);
            ids.push(((q, u), (j, v)));
        }
    }
    Ok(point_attach(&graphs, &ids)?.0)
}
