//! Block decomposition and the block-sum formula for the local metric
//! dimension.
//!
//! Every non-bipartite block `j` contributes `rho_j`: the fewest extra
//! vertices that, together with the block's attachment set `C_j`, form a
//! local metric generator of the block. `C_j` holds the cut vertices of the
//! block whose far side (the part of the graph hanging off that vertex away
//! from the block) is non-bipartite. The dimension of the whole graph is the
//! sum of the `rho_j`.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::local_metric::{
    alpha, is_local_metric_generator, is_minimal_generator_always_minimum,
    local_metric_dimension, rho, DimResult, Method,
};

/// Bipartite incidence between blocks and cut vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BlockCutTree {
    /// Cut vertices of each block, ascending.
    pub block_cuts: Vec<Vec<usize>>,
    /// Blocks containing each cut vertex, ascending.
    pub cut_blocks: BTreeMap<usize, Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// Vertex sets of the blocks, in lexicographic order.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    pub tree: BlockCutTree,
    /// `true` for blocks that are not bipartite.
    pub nonbipartite: Vec<bool>,
    /// Attachment set of each block, in original vertex indices. Empty
    /// until [`classify`] runs.
    pub attachments: Vec<VertexSet>,
}

/// One block as a standalone graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockView {
    pub block_index: usize,
    pub subgraph: Graph,
    /// Block-local index to original vertex.
    pub back_map: Vec<usize>,
}

impl BlockView {
    /// Translate a set of original vertices into block-local indices,
    /// dropping vertices outside the block.
    pub fn localize(&self, s: &VertexSet) -> VertexSet {
        self.back_map
            .iter()
            .enumerate()
            .filter(|(_, &v)| s.contains(v))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn globalize(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|i| self.back_map[i]).collect()
    }
}

impl Decomposition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_view(&self, g: &Graph, j: usize) -> BlockView {
        let (subgraph, back_map) = g
            .induced_subgraph(&self.blocks[j])
            .expect("blocks are nonempty subsets of the graph");
        BlockView {
            block_index: j,
            subgraph,
            back_map,
        }
    }

    /// Indices of the non-bipartite blocks.
    pub fn nonbipartite_blocks(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.blocks.len()).filter(|&j| self.nonbipartite[j])
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Depth-first search with low-link values, collecting blocks on an edge
/// stack. Returns the blocks (unsorted) and the articulation points.
fn low_link(g: &Graph) -> (Vec<VertexSet>, VertexSet) {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut cuts = VertexSet::new();
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if g.degree(root) == 0 {
            blocks.push(VertexSet::from_iter([root]));
            continue;
        }
        let mut root_children = 0;
        // (vertex, parent, next neighbor position)
        let mut stack = vec![(root, UNSEEN, 0usize)];
        while let Some(frame) = stack.last_mut() {
            let (u, parent) = (frame.0, frame.1);
            if frame.2 < g.degree(u) {
                let v = g.neighbors(u)[frame.2];
                frame.2 += 1;
                if v == parent {
                    continue;
                }
                if disc[v] == UNSEEN {
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    edge_stack.push((u, v));
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, u, 0));
                } else if disc[v] < disc[u] {
                    low[u] = low[u].min(disc[v]);
                    edge_stack.push((u, v));
                }
                continue;
            }
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[u]);
                if low[u] >= disc[p] {
                    if p != root {
                        cuts.insert(p);
                    }
                    let mut block = VertexSet::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (p, u) {
                            break;
                        }
                    }
                    blocks.push(block);
                }
            }
        }
        if root_children > 1 {
            cuts.insert(root);
        }
    }
    (blocks, cuts)
}

pub fn articulation_points(g: &Graph) -> Result<VertexSet> {
    require_connected(g)?;
    Ok(low_link(g).1)
}

/// Blocks, cut vertices and block-cut tree. Bipartiteness flags are filled
/// in; attachment sets are left empty until [`classify`].
pub fn blocks(g: &Graph) -> Result<Decomposition> {
    require_connected(g)?;
    let (mut blocks, cut_vertices) = low_link(g);
    blocks.sort();
    let mut tree = BlockCutTree::default();
    for (j, b) in blocks.iter().enumerate() {
        let cuts: Vec<usize> = b.iter().filter(|&v| cut_vertices.contains(v)).collect();
        for &x in &cuts {
            tree.cut_blocks.entry(x).or_default().push(j);
        }
        tree.block_cuts.push(cuts);
    }
    let nonbipartite = blocks
        .iter()
        .map(|b| {
            let (sub, _) = g.induced_subgraph(b).expect("block is nonempty");
            !sub.is_bipartite()
        })
        .collect();
    Ok(Decomposition {
        attachments: vec![VertexSet::new(); blocks.len()],
        blocks,
        cut_vertices,
        tree,
        nonbipartite,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    Block(usize),
    Cut(usize),
}

/// Fill in the attachment sets by a dynamic program over the block-cut tree:
/// each node learns how many non-bipartite blocks lie in its subtree, which
/// decides for every (block, cut vertex) pair whether the far side is
/// non-bipartite.
pub fn classify(g: &Graph, mut d: Decomposition) -> Result<Decomposition> {
    let k = d.blocks.len();
    if k == 0 || d.nonbipartite.len() != k || d.tree.block_cuts.len() != k {
        return Err(Error::InconsistentDecomposition(
            "block data has mismatched lengths".into(),
        ));
    }
    if d.blocks.iter().any(|b| b.bound() > g.n()) {
        return Err(Error::InconsistentDecomposition(
            "block refers to a vertex outside the graph".into(),
        ));
    }
    let total = d.nonbipartite.iter().filter(|&&b| b).count();

    // Iterative DFS from block 0 producing a preorder with parents.
    let mut order = Vec::with_capacity(k + d.tree.cut_blocks.len());
    let mut parent_of_block = vec![None::<usize>; k];
    let mut parent_of_cut: BTreeMap<usize, usize> = BTreeMap::new();
    let mut seen_blocks = vec![false; k];
    let mut stack = vec![Node::Block(0)];
    seen_blocks[0] = true;
    while let Some(node) = stack.pop() {
        order.push(node);
        match node {
            Node::Block(j) => {
                for &x in d.tree.block_cuts[j].iter().rev() {
                    if parent_of_block[j] == Some(x) {
                        continue;
                    }
                    if parent_of_cut.insert(x, j).is_some() {
                        return Err(Error::InconsistentDecomposition(
                            "block-cut tree contains a cycle".into(),
                        ));
                    }
                    stack.push(Node::Cut(x));
                }
            }
            Node::Cut(x) => {
                let blocks_at = d.tree.cut_blocks.get(&x).ok_or_else(|| {
                    Error::InconsistentDecomposition(format!("cut vertex {x} has no blocks"))
                })?;
                for &j in blocks_at.iter().rev() {
                    if parent_of_cut[&x] == j {
                        continue;
                    }
                    if seen_blocks[j] {
                        return Err(Error::InconsistentDecomposition(
                            "block-cut tree contains a cycle".into(),
                        ));
                    }
                    seen_blocks[j] = true;
                    parent_of_block[j] = Some(x);
                    stack.push(Node::Block(j));
                }
            }
        }
    }
    if seen_blocks.iter().any(|s| !s) {
        return Err(Error::InconsistentDecomposition(
            "block-cut tree is disconnected".into(),
        ));
    }

    // Subtree counts in reverse preorder.
    let mut below_block = vec![0usize; k];
    let mut below_cut: BTreeMap<usize, usize> = BTreeMap::new();
    for &node in order.iter().rev() {
        match node {
            Node::Block(j) => {
                below_block[j] += usize::from(d.nonbipartite[j]);
                if let Some(x) = parent_of_block[j] {
                    *below_cut.entry(x).or_default() += below_block[j];
                }
            }
            Node::Cut(x) => {
                let count = below_cut.get(&x).copied().unwrap_or(0);
                below_block[parent_of_cut[&x]] += count;
            }
        }
    }

    for j in 0..k {
        let mut c = VertexSet::new();
        for &x in &d.tree.block_cuts[j] {
            let far = if parent_of_block[j] == Some(x) {
                total - below_block[j]
            } else {
                below_cut.get(&x).copied().unwrap_or(0)
            };
            if far > 0 {
                c.insert(x);
            }
        }
        d.attachments[j] = c;
    }
    Ok(d)
}

/// Blocks with flags and attachment sets.
pub fn decompose(g: &Graph) -> Result<Decomposition> {
    classify(g, blocks(g)?)
}

/// Vertices of the component containing `x` after deleting every edge
/// between `x` and the other vertices of block `j`, found by plain search.
pub fn hanging_part(g: &Graph, d: &Decomposition, j: usize, x: usize) -> VertexSet {
    let block = &d.blocks[j];
    let mut seen = VertexSet::from_iter([x]);
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if u == x && block.contains(v) {
                continue;
            }
            if seen.insert(v) {
                queue.push_back(v);
            }
        }
    }
    seen
}

/// Per-block contribution to the block-sum formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSolve {
    pub block: usize,
    pub rho: usize,
    /// Minimizing set in original vertex indices, disjoint from the block's
    /// attachment set.
    pub witness: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineReport {
    pub decomposition: Decomposition,
    /// One entry per non-bipartite block, ascending by block index. Empty
    /// when the graph is bipartite or has no cut vertex.
    pub blocks: Vec<BlockSolve>,
    pub result: DimResult,
}

fn solve_block(g: &Graph, d: &Decomposition, j: usize, cfg: &Config) -> Result<BlockSolve> {
    let view = d.block_view(g, j);
    let c = view.localize(&d.attachments[j]);
    let (value, local) = rho(&view.subgraph, &c, cfg)?;
    Ok(BlockSolve {
        block: j,
        rho: value,
        witness: view.globalize(&local),
    })
}

fn in_pool<T: Send>(threads: usize, work: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}

/// Full engine run, keeping the per-block breakdown.
pub fn solve(g: &Graph, cfg: &Config) -> Result<EngineReport> {
    if g.n() < 2 {
        return Err(Error::Trivial);
    }
    let d = decompose(g)?;
    if d.nonbipartite.iter().all(|&b| !b) {
        let result = DimResult {
            dimension: 1,
            method: Method::BipartiteFastPath,
            witness: VertexSet::from_iter([0]),
        };
        return Ok(EngineReport {
            decomposition: d,
            blocks: Vec::new(),
            result,
        });
    }
    if d.cut_vertices.is_empty() {
        let result = local_metric_dimension(g, cfg)?;
        return Ok(EngineReport {
            decomposition: d,
            blocks: Vec::new(),
            result,
        });
    }

    let targets: Vec<usize> = d.nonbipartite_blocks().collect();
    let solved: Result<Vec<BlockSolve>> = if cfg.threads <= 1 {
        targets.iter().map(|&j| solve_block(g, &d, j, cfg)).collect()
    } else {
        in_pool(cfg.threads, || {
            targets.par_iter().map(|&j| solve_block(g, &d, j, cfg)).collect()
        })
    };
    let solved = solved?;

    let dimension = solved.iter().map(|s| s.rho).sum();
    let witness = solved
        .iter()
        .fold(VertexSet::new(), |acc, s| acc.union(&s.witness));
    if witness.len() != dimension || !is_local_metric_generator(g, &witness)? {
        return Err(Error::WitnessRejected);
    }
    Ok(EngineReport {
        decomposition: d,
        blocks: solved,
        result: DimResult {
            dimension,
            method: Method::Decomposition,
            witness,
        },
    })
}

pub fn dim_via_decomposition(g: &Graph, cfg: &Config) -> Result<DimResult> {
    Ok(solve(g, cfg)?.result)
}

fn nonbipartite_views(g: &Graph, limit: usize) -> Result<(Decomposition, Vec<BlockView>)> {
    let d = decompose(g)?;
    if d.nonbipartite.iter().all(|&b| !b) {
        return Err(Error::Bipartite);
    }
    let views: Vec<BlockView> = d.nonbipartite_blocks().map(|j| d.block_view(g, j)).collect();
    if let Some(big) = views.iter().find(|v| v.subgraph.n() > limit) {
        return Err(Error::TooLarge {
            n: big.subgraph.n(),
            limit,
        });
    }
    Ok((d, views))
}

/// Sum over non-bipartite blocks of `dim_l(block) - alpha_j`, an upper bound
/// on the dimension of the whole graph.
pub fn upper_bound_via_alpha(g: &Graph, cfg: &Config) -> Result<usize> {
    let limit = cfg.max_bases.min(cfg.exact_cap());
    let (d, views) = nonbipartite_views(g, limit)?;
    views.iter().try_fold(0, |acc, view| {
        let dim = local_metric_dimension(&view.subgraph, cfg)?.dimension;
        let c = view.localize(&d.attachments[view.block_index]);
        Ok(acc + dim - alpha(&view.subgraph, &c, cfg)?)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockHypothesis {
    pub block: usize,
    pub order: usize,
    pub nonbipartite: bool,
    /// Every inclusion-minimal local metric generator of the block is minimum.
    pub minimal_is_minimum: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityClaim {
    pub bound: usize,
    pub dimension: usize,
    pub holds: bool,
}

/// Outcome of checking when the alpha upper bound is exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
    pub blocks: Vec<BlockHypothesis>,
    pub hypothesis_holds: bool,
    /// Present only when every block satisfies the hypothesis.
    pub claim: Option<EqualityClaim>,
}

/// When every block has all its minimal generators minimum, the alpha bound
/// is claimed exact; the claim is cross-checked against the block-sum engine.
pub fn equality_certificate(g: &Graph, cfg: &Config) -> Result<EqualityReport> {
    let d = decompose(g)?;
    if d.nonbipartite.iter().all(|&b| !b) {
        return Err(Error::Bipartite);
    }
    let blocks = (0..d.block_count())
        .map(|j| {
            let view = d.block_view(g, j);
            Ok(BlockHypothesis {
                block: j,
                order: view.subgraph.n(),
                nonbipartite: d.nonbipartite[j],
                minimal_is_minimum: is_minimal_generator_always_minimum(&view.subgraph, cfg)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let hypothesis_holds = blocks.iter().all(|b| b.minimal_is_minimum);
    let claim = if hypothesis_holds {
        let bound = upper_bound_via_alpha(g, cfg)?;
        let dimension = dim_via_decomposition(g, cfg)?.dimension;
        Some(EqualityClaim {
            bound,
            dimension,
            holds: bound == dimension,
        })
    } else {
        None
    };
    Ok(EqualityReport {
        blocks,
        hypothesis_holds,
        claim,
    })
}
