//! Point-attaching builders (rooted products, coronas, bouquets, chains) and
//! closed-form evaluators for their local metric dimensions.
//!
//! Closed forms never stand alone: [`triangulate`] runs the block-sum engine
//! and, when small enough, whole-graph search on the built graph.

use serde::Serialize;

use crate::config::Config;
use crate::decomposition::{decompose, dim_via_decomposition};
use crate::error::{Error, Result};
use crate::graph::{complete, Graph};
use crate::local_metric::{enumerate_local_metric_bases, local_metric_dimension, rho, BasisFamily};

/// A vertex of one input part: `(part index, vertex within the part)`.
pub type VertexRef = (usize, usize);

/// Provenance of a point-attached graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AttachmentMeta {
    /// For each constructed vertex, every part vertex merged into it.
    pub origins: Vec<Vec<VertexRef>>,
    /// `part_maps[p][v]` is the constructed vertex for vertex `v` of part `p`.
    pub part_maps: Vec<Vec<usize>>,
    /// Constructed vertices produced by identification, ascending.
    pub attachment_vertices: Vec<usize>,
}

impl AttachmentMeta {
    /// Metadata for a graph built from a single part.
    pub fn identity(n: usize) -> Self {
        Self {
            origins: (0..n).map(|v| vec![(0, v)]).collect(),
            part_maps: vec![(0..n).collect()],
            attachment_vertices: Vec::new(),
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Glue `parts` together by identifying the listed vertex pairs, in order.
///
/// Each identification must join two parts that are not yet connected, so
/// the result has the tree-like structure of a point-attached graph. Parts
/// are laid out left to right and a merged vertex takes the earliest index.
pub fn point_attach(parts: &[Graph], identifications: &[(VertexRef, VertexRef)]) -> Result<(Graph, AttachmentMeta)> {
    if parts.is_empty() {
        return Err(Error::BadIdentification("no parts given".into()));
    }
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.n();
            Some(o)
        })
        .collect();
    let total: usize = parts.iter().map(Graph::n).sum();
    let mut vertex_parent: Vec<usize> = (0..total).collect();
    let mut part_parent: Vec<usize> = (0..parts.len()).collect();

    let flat = |&(p, v): &VertexRef| -> Result<usize> {
        match parts.get(p) {
            None => Err(Error::BadIdentification(format!("no part {p}"))),
            Some(g) if v >= g.n() => Err(Error::BadIdentification(format!(
                "part {p} has no vertex {v}"
            ))),
            Some(_) => Ok(offsets[p] + v),
        }
    };
    for (a, b) in identifications {
        let (fa, fb) = (flat(a)?, flat(b)?);
        let (ga, gb) = (find(&mut part_parent, a.0), find(&mut part_parent, b.0));
        if ga == gb {
            return Err(Error::BadIdentification(format!(
                "{a:?} and {b:?} already lie in the same connected piece"
            )));
        }
        part_parent[ga.max(gb)] = ga.min(gb);
        let (ra, rb) = (find(&mut vertex_parent, fa), find(&mut vertex_parent, fb));
        vertex_parent[ra.max(rb)] = ra.min(rb);
    }
    let root = find(&mut part_parent, 0);
    if (0..parts.len()).any(|p| find(&mut part_parent, p) != root) {
        return Err(Error::DisconnectedResult);
    }

    // Class representatives are minimal flat indices, so ascending flat
    // order visits each class first at its representative.
    let mut index = vec![usize::MAX; total];
    let mut origins: Vec<Vec<VertexRef>> = Vec::new();
    for f in 0..total {
        let r = find(&mut vertex_parent, f);
        if r == f {
            index[f] = origins.len();
            origins.push(Vec::new());
        }
    }
    let mut part_maps = Vec::with_capacity(parts.len());
    for (p, g) in parts.iter().enumerate() {
        let map: Vec<usize> = (0..g.n())
            .map(|v| {
                let r = find(&mut vertex_parent, offsets[p] + v);
                origins[index[r]].push((p, v));
                index[r]
            })
            .collect();
        part_maps.push(map);
    }
    let mut edges = Vec::new();
    for (p, g) in parts.iter().enumerate() {
        edges.extend(g.edges().map(|(u, v)| (part_maps[p][u], part_maps[p][v])));
    }
    let graph = Graph::from_edge_list(origins.len(), &edges)?;
    if !graph.is_connected() {
        return Err(Error::DisconnectedResult);
    }
    let attachment_vertices = (0..origins.len()).filter(|&v| origins[v].len() > 1).collect();
    Ok((
        graph,
        AttachmentMeta {
            origins,
            part_maps,
            attachment_vertices,
        },
    ))
}

/// A base graph and one rooted factor per base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedSpec {
    pub base: Graph,
    /// `(factor, root)` for each base vertex, in order.
    pub factors: Vec<(Graph, usize)>,
}

impl RootedSpec {
    /// The same factor and root on every base vertex.
    pub fn uniform(base: Graph, factor: Graph, root: usize) -> Self {
        let factors = vec![(factor, root); base.n()];
        Self { base, factors }
    }
}

/// Identify the root of the `i`-th factor with base vertex `i`. Base
/// vertices keep indices `0..n`.
pub fn rooted_product(spec: &RootedSpec) -> Result<(Graph, AttachmentMeta)> {
    let n = spec.base.n();
    if spec.factors.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: spec.factors.len(),
        });
    }
    let mut parts = vec![spec.base.clone()];
    let mut ids = Vec::with_capacity(n);
    for (i, (h, root)) in spec.factors.iter().enumerate() {
        if *root >= h.n() {
            return Err(Error::VertexOutOfRange(*root));
        }
        parts.push(h.clone());
        ids.push(((0, i), (i + 1, *root)));
    }
    point_attach(&parts, &ids)
}

/// `K_1 + h`, with the apex at index 0.
pub fn cone(h: &Graph) -> Graph {
    complete(1).expect("order 1").join(h)
}

/// Join every vertex of the `i`-th factor to base vertex `i`; built by
/// attaching the cone over each factor at its apex.
pub fn corona(base: &Graph, factors: &[Graph]) -> Result<(Graph, AttachmentMeta)> {
    let n = base.n();
    if factors.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: factors.len(),
        });
    }
    let mut parts = vec![base.clone()];
    parts.extend(factors.iter().map(cone));
    let ids: Vec<_> = (0..n).map(|i| ((0, i), (i + 1, 0))).collect();
    point_attach(&parts, &ids)
}

/// Identify `roots[i]` of every part into a single vertex.
pub fn bouquet(parts: &[Graph], roots: &[usize]) -> Result<(Graph, AttachmentMeta)> {
    if parts.len() < 2 || roots.len() != parts.len() {
        return Err(Error::ArityMismatch {
            expected: parts.len().max(2),
            found: roots.len(),
        });
    }
    let ids: Vec<_> = (1..parts.len())
        .map(|j| ((0, roots[0]), (j, roots[j])))
        .collect();
    point_attach(parts, &ids)
}

/// Parts glued end to end.
///
/// `links[i] = (y, x)` identifies vertex `y` of part `i` with vertex `x` of
/// part `i + 1`, so there is one link per junction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSpec {
    pub parts: Vec<Graph>,
    pub links: Vec<(usize, usize)>,
}

impl ChainSpec {
    /// The vertex of part `j` glued to the previous part.
    pub fn entry(&self, j: usize) -> Option<usize> {
        j.checked_sub(1).map(|i| self.links[i].1)
    }

    /// The vertex of part `j` glued to the next part.
    pub fn exit(&self, j: usize) -> Option<usize> {
        self.links.get(j).map(|l| l.0)
    }

    fn validate(&self) -> Result<()> {
        let k = self.parts.len();
        if k < 2 {
            return Err(Error::BadSpec("a chain needs at least two parts".into()));
        }
        if self.links.len() != k - 1 {
            return Err(Error::BadSpec(format!(
                "{k} parts need {} links, found {}",
                k - 1,
                self.links.len()
            )));
        }
        for (i, &(y, x)) in self.links.iter().enumerate() {
            if y >= self.parts[i].n() || x >= self.parts[i + 1].n() {
                return Err(Error::BadSpec(format!("link {i} is out of range")));
            }
        }
        for j in 1..k - 1 {
            if self.entry(j) == self.exit(j) {
                return Err(Error::BadSpec(format!(
                    "part {j} uses the same vertex for both links"
                )));
            }
        }
        Ok(())
    }
}

pub fn chain(spec: &ChainSpec) -> Result<(Graph, AttachmentMeta)> {
    spec.validate()?;
    let ids: Vec<_> = spec
        .links
        .iter()
        .enumerate()
        .map(|(i, &(y, x))| ((i, y), (i + 1, x)))
        .collect();
    point_attach(&spec.parts, &ids)
}

fn bases_of(g: &Graph, cfg: &Config) -> Result<BasisFamily> {
    let limit = cfg.max_bases.min(cfg.exact_cap());
    if g.n() > limit {
        return Err(Error::TooLarge { n: g.n(), limit });
    }
    enumerate_local_metric_bases(g, cfg)
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Dimension of the rooted product of a base of order `n` with copies of
/// `h` rooted at `root`.
///
/// For non-bipartite `h` the value is `n * dim(h)` unless the root lies in
/// some local metric basis of `h`, in which case it is `n * (dim(h) - 1)`.
/// A bipartite `h` leaves the base's dimension unchanged, so `base` must be
/// supplied in that case.
pub fn closed_form_rooted_uniform(
    n: usize,
    h: &Graph,
    root: usize,
    base: Option<&Graph>,
    cfg: &Config,
) -> Result<usize> {
    if root >= h.n() {
        return Err(Error::VertexOutOfRange(root));
    }
    require_connected(h)?;
    if n == 0 {
        return Err(Error::BadOrder(0));
    }
    if h.is_bipartite() {
        let base = base.ok_or(Error::MissingBase)?;
        if base.n() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: base.n(),
            });
        }
        if n == 1 {
            return local_metric_dimension(h, cfg).map(|r| r.dimension);
        }
        return dim_via_decomposition(base, cfg).map(|r| r.dimension);
    }
    let fam = bases_of(h, cfg)?;
    Ok(if n >= 2 && fam.covers(root) {
        n * (fam.dimension - 1)
    } else {
        n * fam.dimension
    })
}

/// Per-factor sum for rooted products whose factors are either all
/// bipartite or all non-bipartite.
pub fn closed_form_rooted(spec: &RootedSpec, cfg: &Config) -> Result<usize> {
    let n = spec.base.n();
    if spec.factors.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: spec.factors.len(),
        });
    }
    if n < 2 {
        return Err(Error::NotApplicable("the base needs at least two vertices".into()));
    }
    let bipartite: Vec<bool> = spec.factors.iter().map(|(h, _)| h.is_bipartite()).collect();
    if bipartite.iter().all(|&b| b) {
        return dim_via_decomposition(&spec.base, cfg).map(|r| r.dimension);
    }
    if bipartite.iter().any(|&b| b) {
        return Err(Error::NotApplicable(
            "factors mix bipartite and non-bipartite graphs".into(),
        ));
    }
    spec.factors.iter().try_fold(0, |acc, (h, root)| {
        if *root >= h.n() {
            return Err(Error::VertexOutOfRange(*root));
        }
        require_connected(h)?;
        let fam = bases_of(h, cfg)?;
        Ok(acc + fam.dimension - usize::from(fam.covers(*root)))
    })
}

/// Bounds `(n, n(n' - 2))` for a rooted product with a non-bipartite factor
/// of order `n'`, with the upper bound lowered to `n(n' - 3)` when the
/// factor is not complete.
pub fn rooted_bounds(n: usize, h: &Graph) -> (usize, usize) {
    let order = h.n();
    let upper = if h.is_complete() {
        n * order.saturating_sub(2)
    } else {
        n * order.saturating_sub(3)
    };
    (n, upper)
}

fn require_edge(h: &Graph) -> Result<()> {
    if h.m() == 0 {
        return Err(Error::NotApplicable("corona factors need at least one edge".into()));
    }
    Ok(())
}

/// Dimension of `G ⊙ h` for a base of order `n`, decided by whether the
/// apex of `K_1 + h` lies in some local metric basis of the cone.
pub fn closed_form_corona_uniform(n: usize, h: &Graph, cfg: &Config) -> Result<usize> {
    require_edge(h)?;
    if n == 0 {
        return Err(Error::BadOrder(0));
    }
    let fam = bases_of(&cone(h), cfg)?;
    Ok(if n >= 2 && fam.covers(0) {
        n * (fam.dimension - 1)
    } else {
        n * fam.dimension
    })
}

/// Sum over factors of `dim(K_1 + h_j) - alpha_j`, with `alpha_j = 1`
/// exactly when the apex lies in a local metric basis of the cone.
pub fn closed_form_corona(factors: &[Graph], cfg: &Config) -> Result<usize> {
    if factors.is_empty() {
        return Err(Error::BadOrder(0));
    }
    let single = factors.len() == 1;
    factors.iter().try_fold(0, |acc, h| {
        require_edge(h)?;
        let fam = bases_of(&cone(h), cfg)?;
        let discount = usize::from(!single && fam.covers(0));
        Ok(acc + fam.dimension - discount)
    })
}

/// Shape of one clique block of a block graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlockShape {
    pub order: usize,
    pub cut_vertices: usize,
    pub all_vertices_cut: bool,
}

/// Block shapes of a block graph, or `NotApplicable` if some block is not a
/// clique.
pub fn block_shapes(g: &Graph) -> Result<Vec<BlockShape>> {
    let d = decompose(g)?;
    (0..d.block_count())
        .map(|j| {
            let view = d.block_view(g, j);
            if !view.subgraph.is_complete() {
                return Err(Error::NotApplicable(format!("block {j} is not a clique")));
            }
            let cuts = d.tree.block_cuts[j].len();
            Ok(BlockShape {
                order: view.subgraph.n(),
                cut_vertices: cuts,
                all_vertices_cut: cuts == view.subgraph.n(),
            })
        })
        .collect()
}

/// `sum (t_j - 1 - alpha_j)` over clique blocks of order at least 3, where
/// `alpha_j` is `t_j - 1` if every vertex of the block is a cut vertex and
/// the block's cut-vertex count otherwise.
pub fn closed_form_block_graph(blocks: &[BlockShape]) -> Result<usize> {
    blocks.iter().enumerate().try_fold(0, |acc, (index, b)| {
        if b.order < 3 {
            return Err(Error::BadBlockOrder {
                index,
                order: b.order,
            });
        }
        if b.cut_vertices > b.order || b.all_vertices_cut != (b.cut_vertices == b.order) {
            return Err(Error::NotApplicable(format!(
                "block {index} has inconsistent cut-vertex data"
            )));
        }
        let alpha = if b.all_vertices_cut {
            b.order - 1
        } else {
            b.cut_vertices
        };
        Ok(acc + b.order - 1 - alpha)
    })
}

/// Which replaceability case decided a chain part's contribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainRule {
    /// Bipartite part: contributes nothing.
    Bipartite,
    /// First or last part whose inner link vertex is replaceable.
    EndReplaceable,
    /// First or last part whose inner link vertex is not replaceable.
    EndNotReplaceable,
    /// Middle part with a basis containing both replaceable link vertices.
    Simultaneous,
    /// Middle part with one replaceable link vertex, or two that share no basis.
    SingleReplaceable,
    /// Middle part with neither link vertex replaceable; computed exactly.
    NeitherReplaceable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainPart {
    pub index: usize,
    pub nonbipartite: bool,
    pub dimension: Option<usize>,
    pub rule: ChainRule,
    pub rho: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainEvaluation {
    pub total: usize,
    pub parts: Vec<ChainPart>,
}

/// Replaceability case analysis for chains.
///
/// A link vertex of a non-bipartite part is replaceable when some local
/// metric basis of the part contains it and a non-bipartite part lies
/// beyond it. The middle-part case with neither vertex replaceable only
/// pins the contribution to `dim` or `dim - 1`, so it is computed directly.
pub fn closed_form_chain(spec: &ChainSpec, cfg: &Config) -> Result<ChainEvaluation> {
    spec.validate()?;
    let k = spec.parts.len();
    for p in &spec.parts {
        require_connected(p)?;
    }
    let nonbip: Vec<bool> = spec.parts.iter().map(|p| !p.is_bipartite()).collect();
    let mut parts = Vec::with_capacity(k);
    for j in 0..k {
        if !nonbip[j] {
            parts.push(ChainPart {
                index: j,
                nonbipartite: false,
                dimension: None,
                rule: ChainRule::Bipartite,
                rho: 0,
            });
            continue;
        }
        let part = &spec.parts[j];
        let fam = bases_of(part, cfg)?;
        let dim = fam.dimension;
        let before = nonbip[..j].iter().any(|&b| b);
        let after = nonbip[j + 1..].iter().any(|&b| b);
        let x = spec.entry(j).filter(|_| before);
        let y = spec.exit(j).filter(|_| after);
        let x_rep = x.is_some_and(|v| fam.covers(v));
        let y_rep = y.is_some_and(|v| fam.covers(v));
        let (rule, value) = if j == 0 || j == k - 1 {
            if x_rep || y_rep {
                (ChainRule::EndReplaceable, dim - 1)
            } else {
                (ChainRule::EndNotReplaceable, dim)
            }
        } else if x_rep
            && y_rep
            && fam
                .bases
                .iter()
                .any(|b| b.contains(x.unwrap()) && b.contains(y.unwrap()))
        {
            (ChainRule::Simultaneous, dim - 2)
        } else if x_rep || y_rep {
            (ChainRule::SingleReplaceable, dim - 1)
        } else {
            let c = x.into_iter().chain(y).collect();
            (ChainRule::NeitherReplaceable, rho(part, &c, cfg)?.0)
        };
        parts.push(ChainPart {
            index: j,
            nonbipartite: true,
            dimension: Some(dim),
            rule,
            rho: value,
        });
    }
    if nonbip.iter().all(|&b| !b) {
        return Err(Error::Bipartite);
    }
    Ok(ChainEvaluation {
        total: parts.iter().map(|p| p.rho).sum(),
        parts,
    })
}

/// Bouquet value under two readings of the per-part discount.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BouquetEvaluation {
    /// Discount only when the root is in a basis of its part AND some other
    /// part is non-bipartite (the attachment-set definition).
    pub total: usize,
    /// Discount whenever the root is in a basis of its part.
    pub literal_total: usize,
    pub readings_agree: bool,
}

pub fn closed_form_bouquet(parts: &[Graph], roots: &[usize], cfg: &Config) -> Result<BouquetEvaluation> {
    if parts.len() < 2 || roots.len() != parts.len() {
        return Err(Error::ArityMismatch {
            expected: parts.len().max(2),
            found: roots.len(),
        });
    }
    let nonbip: Vec<bool> = parts.iter().map(|p| !p.is_bipartite()).collect();
    let count = nonbip.iter().filter(|&&b| b).count();
    if count == 0 {
        return Err(Error::Bipartite);
    }
    let mut total = 0;
    let mut literal_total = 0;
    for (j, part) in parts.iter().enumerate() {
        if roots[j] >= part.n() {
            return Err(Error::VertexOutOfRange(roots[j]));
        }
        if !nonbip[j] {
            continue;
        }
        require_connected(part)?;
        let fam = bases_of(part, cfg)?;
        let in_basis = fam.covers(roots[j]);
        total += fam.dimension - usize::from(in_basis && count > 1);
        literal_total += fam.dimension - usize::from(in_basis);
    }
    Ok(BouquetEvaluation {
        total,
        literal_total,
        readings_agree: total == literal_total,
    })
}

/// A closed-form value checked against the engine and, for graphs within
/// the exact-search cap, against whole-graph search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triangulation {
    pub closed_form: usize,
    pub engine: usize,
    pub brute_force: Option<usize>,
}

impl Triangulation {
    pub fn agrees(&self) -> bool {
        self.closed_form == self.engine && self.brute_force.is_none_or(|b| b == self.engine)
    }
}

pub fn triangulate(closed_form: usize, g: &Graph, cfg: &Config) -> Result<Triangulation> {
    let engine = dim_via_decomposition(g, cfg)?.dimension;
    let brute_force = if g.n() <= cfg.exact_cap() {
        Some(local_metric_dimension(g, cfg)?.dimension)
    } else {
        None
    };
    Ok(Triangulation {
        closed_form,
        engine,
        brute_force,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    fn k(n: usize) -> Graph {
        complete(n).unwrap()
    }

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn point_attach_examples() {
        let (g, meta) = point_attach(&[k(3), k(3)], &[((0, 2), (1, 0))]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 6);
        assert_eq!(meta.attachment_vertices, vec![2]);
        assert_eq!(meta.origins[2], vec![(0, 2), (1, 0)]);
        assert_eq!(meta.part_maps[1], vec![2, 3, 4]);

        let (g, _) = point_attach(&[k(3), path(3).unwrap()], &[((0, 0), (1, 0))]).unwrap();
        assert_eq!((g.n(), g.m()), (5, 5));
    }

    #[test]
    fn point_attach_errors() {
        assert!(matches!(
            point_attach(&[k(3), k(3)], &[((0, 0), (1, 0)), ((0, 1), (1, 1))]),
            Err(Error::BadIdentification(_))
        ));
        assert_eq!(
            point_attach(&[k(3), k(3)], &[]),
            Err(Error::DisconnectedResult)
        );
        assert!(matches!(
            point_attach(&[k(3)], &[((0, 0), (0, 1))]),
            Err(Error::BadIdentification(_))
        ));
        assert!(matches!(
            point_attach(&[k(3), k(3)], &[((0, 5), (1, 0))]),
            Err(Error::BadIdentification(_))
        ));
    }

    #[test]
    fn rooted_product_examples() {
        let (g, _) = rooted_product(&RootedSpec {
            base: path(2).unwrap(),
            factors: vec![(k(3), 0), (k(3), 1)],
        })
        .unwrap();
        assert_eq!(g.n(), 6);
        let h = cycle(5).unwrap();
        let (g, _) = rooted_product(&RootedSpec::uniform(k(1), h.clone(), 0)).unwrap();
        assert_eq!(g, h);
        let (g, _) = rooted_product(&RootedSpec::uniform(path(3).unwrap(), h, 0)).unwrap();
        assert_eq!(g.n(), 15);
        assert_eq!(
            rooted_product(&RootedSpec {
                base: path(2).unwrap(),
                factors: vec![(k(3), 0)],
            }),
            Err(Error::ArityMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn corona_examples() {
        let h = k(2).disjoint_union(&k(2));
        let (g, _) = corona(&k(1), &[h.clone()]).unwrap();
        assert_eq!(g, cone(&h));
        let (g, _) = corona(&path(2).unwrap(), &[k(1), k(1)]).unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        assert!(!g.is_complete() && g.is_bipartite());
        assert_eq!(g.edges().filter(|&(u, v)| g.degree(u) == 2 && g.degree(v) == 2).count(), 1);
        let (g, _) = corona(&path(2).unwrap(), &[k(2), k(2)]).unwrap();
        assert_eq!((g.n(), g.m()), (6, 7));
    }

    #[test]
    fn bouquet_examples() {
        let (g, _) = bouquet(&[k(3), k(3)], &[0, 0]).unwrap();
        assert_eq!((g.n(), g.m()), (5, 6));
        let (g, _) = bouquet(&[k(2), k(2), k(2), k(2)], &[0, 0, 0, 0]).unwrap();
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.n(), 5);
        let (g, _) = bouquet(&[cycle(5).unwrap(), cycle(6).unwrap()], &[0, 0]).unwrap();
        assert_eq!(g.n(), 10);
        assert!(bouquet(&[k(3)], &[0]).is_err());
    }

    #[test]
    fn chain_examples() {
        let spec = ChainSpec {
            parts: vec![k(3), k(3), k(3)],
            links: vec![(1, 2), (1, 2)],
        };
        assert_eq!(chain(&spec).unwrap().0.n(), 7);
        let (g, _) = chain(&ChainSpec {
            parts: vec![k(2), k(2)],
            links: vec![(1, 0)],
        })
        .unwrap();
        assert_eq!(g, path(3).unwrap());
        let spec = ChainSpec {
            parts: vec![cycle(5).unwrap(), path(2).unwrap(), cycle(5).unwrap()],
            links: vec![(0, 0), (1, 0)],
        };
        assert_eq!(chain(&spec).unwrap().0.n(), 10);
        let bad = ChainSpec {
            parts: vec![k(3), k(3), k(3)],
            links: vec![(1, 2), (2, 0)],
        };
        assert!(matches!(chain(&bad), Err(Error::BadSpec(_))));
        let short = ChainSpec {
            parts: vec![k(3)],
            links: vec![],
        };
        assert!(matches!(chain(&short), Err(Error::BadSpec(_))));
    }

    #[test]
    fn rooted_closed_form_errors() {
        assert_eq!(
            closed_form_rooted_uniform(2, &path(3).unwrap(), 0, None, &cfg()),
            Err(Error::MissingBase)
        );
        assert_eq!(
            closed_form_rooted_uniform(2, &k(20), 0, None, &cfg()),
            Err(Error::TooLarge { n: 20, limit: 16 })
        );
    }

    #[test]
    fn block_formula_rejects_small_blocks() {
        let shapes = block_shapes(&path(3).unwrap()).unwrap();
        assert_eq!(
            closed_form_block_graph(&shapes),
            Err(Error::BadBlockOrder { index: 0, order: 2 })
        );
        assert!(matches!(
            block_shapes(&cycle(5).unwrap()),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn rooted_bounds_examples() {
        assert_eq!(rooted_bounds(3, &k(4)), (3, 6));
        assert_eq!(rooted_bounds(2, &cycle(5).unwrap()), (2, 4));
    }
}
