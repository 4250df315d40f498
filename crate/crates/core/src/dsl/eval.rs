use std::path::{Path, PathBuf};

use super::ast::{Expr, Family};
use crate::constructions::{bouquet, chain, corona, point_attach, rooted_product, AttachmentMeta, ChainSpec, RootedSpec};
use crate::error::{Error, Result};
use crate::graph::{complete, cycle, parse_edge_list, path, Graph};

/// Evaluation settings. Relative `file(...)` paths resolve against `base_dir`.
#[derive(Clone, Debug, Default)]
pub struct EvalContext {
    pub base_dir: Option<PathBuf>,
}

impl EvalContext {
    fn resolve(&self, p: &str) -> PathBuf {
        match &self.base_dir {
            Some(dir) if Path::new(p).is_relative() => dir.join(p),
            _ => PathBuf::from(p),
        }
    }
}

fn side_by_side(a: &Graph, b: &Graph) -> AttachmentMeta {
    let (na, nb) = (a.n(), b.n());
    AttachmentMeta {
        origins: (0..na).map(|v| vec![(0, v)]).chain((0..nb).map(|v| vec![(1, v)])).collect(),
        part_maps: vec![(0..na).collect(), (na..na + nb).collect()],
        attachment_vertices: Vec::new(),
    }
}

fn graphs(exprs: &[Expr], ctx: &EvalContext) -> Result<Vec<Graph>> {
    exprs.iter().map(|e| Ok(eval_in(e, ctx)?.0)).collect()
}

pub fn eval(expr: &Expr) -> Result<(Graph, AttachmentMeta)> {
    eval_in(expr, &EvalContext::default())
}

/// Build the graph an expression describes. The metadata refers to the
/// outermost construction's direct parts.
pub fn eval_in(expr: &Expr, ctx: &EvalContext) -> Result<(Graph, AttachmentMeta)> {
    let single = |g: Graph| {
        let meta = AttachmentMeta::identity(g.n());
        (g, meta)
    };
    match expr {
        Expr::Atom { family, order } => {
            let g = match family {
                Family::Complete => complete(*order)?,
                Family::Path => path(*order)?,
                Family::Cycle => cycle(*order)?,
            };
            Ok(single(g))
        }
        Expr::Inline { n, edges } => {
            if *n == 0 {
                return Err(Error::BadOrder(0));
            }
            Ok(single(Graph::from_edge_list(*n, edges)?))
        }
        Expr::File(p) => {
            let path = ctx.resolve(p);
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            Ok(single(parse_edge_list(&text)?))
        }
        Expr::Join(a, b) | Expr::Union(a, b) => {
            let (ga, _) = eval_in(a, ctx)?;
            let (gb, _) = eval_in(b, ctx)?;
            let meta = side_by_side(&ga, &gb);
            let g = if matches!(expr, Expr::Join(..)) {
                ga.join(&gb)
            } else {
                ga.disjoint_union(&gb)
            };
            Ok((g, meta))
        }
        Expr::RootedUniform { base, factor } => {
            let (base, _) = eval_in(base, ctx)?;
            let (h, _) = eval_in(&factor.expr, ctx)?;
            rooted_product(&RootedSpec::uniform(base, h, factor.root))
        }
        Expr::Rooted { base, factors } => {
            let (base, _) = eval_in(base, ctx)?;
            let factors = factors
                .iter()
                .map(|f| Ok((eval_in(&f.expr, ctx)?.0, f.root)))
                .collect::<Result<Vec<_>>>()?;
            rooted_product(&RootedSpec { base, factors })
        }
        Expr::Corona { base, factors } => {
            let (base, _) = eval_in(base, ctx)?;
            corona(&base, &graphs(factors, ctx)?)
        }
        Expr::Bouquet { parts, roots } => bouquet(&graphs(parts, ctx)?, roots),
        Expr::Chain { parts, links } => chain(&ChainSpec {
            parts: graphs(parts, ctx)?,
            links: links.clone(),
        }),
        Expr::Attach { parts, ids } => point_attach(&graphs(parts, ctx)?, ids),
    }
}
