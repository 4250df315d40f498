use std::fmt::Write as _;
use std::path::PathBuf;

use locdim::constructions::{
    block_shapes, closed_form_block_graph, closed_form_bouquet, closed_form_chain, closed_form_corona,
    closed_form_rooted, closed_form_rooted_uniform, rooted_bounds, triangulate, ChainSpec, RootedSpec,
};
use locdim::decomposition::{decompose, dim_via_decomposition, Decomposition};
use locdim::dsl::{self, EvalContext, Expr};
use locdim::graph::{parse_edge_list, write_edge_list};
use locdim::local_metric::{enumerate_local_metric_bases, local_metric_dimension, rho as rho_of};
use locdim::{Config, Graph, VertexSet};
use serde_json::json;

use crate::{CmdResult, Failure, Input, Kind, MethodArg};

fn read_text(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::Usage(format!("stdin: {e}")))
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn ctx() -> EvalContext {
    EvalContext {
        base_dir: std::env::current_dir().ok(),
    }
}

fn eval(expr: &Expr) -> Result<Graph, Failure> {
    Ok(dsl::eval_in(expr, &ctx())?.0)
}

pub fn read_graph(input: &Input) -> Result<Graph, Failure> {
    match (&input.input, &input.dsl) {
        (Some(path), _) => Ok(parse_edge_list(&read_text(path)?)?),
        (None, Some(text)) => eval(&dsl::parse(text)?),
        (None, None) => Err(Failure::Usage("one of --input or --dsl is required".into())),
    }
}

fn names(g: &Graph, s: &VertexSet) -> String {
    s.iter().map(|v| g.label(v)).collect::<Vec<_>>().join(" ")
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn dim(input: &Input, method: MethodArg, json: bool, cfg: &Config) -> CmdResult {
    let g = read_graph(input)?;
    let result = match method {
        MethodArg::Brute => local_metric_dimension(&g, cfg)?,
        MethodArg::Auto | MethodArg::Decomp => dim_via_decomposition(&g, cfg)?,
    };
    if json {
        return Ok(to_json(&result));
    }
    Ok(format!(
        "dimension: {}\nmethod: {}\nwitness: {}\n",
        result.dimension,
        result.method.as_str(),
        names(&g, &result.witness)
    ))
}

fn decomposition_text(g: &Graph, d: &Decomposition) -> String {
    let mut out = String::new();
    writeln!(out, "blocks: {}", d.block_count()).unwrap();
    for j in 0..d.block_count() {
        let kind = if d.nonbipartite[j] { "non-bipartite" } else { "bipartite" };
        writeln!(
            out,
            "block {j}: {{{}}} {kind} attachments {{{}}}",
            names(g, &d.blocks[j]),
            names(g, &d.attachments[j])
        )
        .unwrap();
    }
    writeln!(out, "cut vertices: {}", names(g, &d.cut_vertices)).unwrap();
    out
}

pub fn decompose_cmd(input: &Input, json: bool) -> CmdResult {
    let g = read_graph(input)?;
    let d = decompose(&g)?;
    if json {
        return Ok(to_json(&d));
    }
    Ok(decomposition_text(&g, &d))
}

pub fn bases(input: &Input, json: bool, cfg: &Config) -> CmdResult {
    let g = read_graph(input)?;
    let limit = cfg.max_bases.min(cfg.max_exact);
    if g.n() > limit {
        return Err(locdim::Error::TooLarge { n: g.n(), limit }.into());
    }
    let fam = enumerate_local_metric_bases(&g, cfg)?;
    if json {
        return Ok(to_json(&fam));
    }
    let mut out = format!("dimension: {}\nbases: {}\n", fam.dimension, fam.bases.len());
    for b in &fam.bases {
        writeln!(out, "{{{}}}", names(&g, b)).unwrap();
    }
    Ok(out)
}

pub fn rho(input: &Input, constraint: &[usize], json: bool, cfg: &Config) -> CmdResult {
    let g = read_graph(input)?;
    let c: VertexSet = constraint.iter().copied().collect();
    let (value, witness) = rho_of(&g, &c, cfg)?;
    if json {
        return Ok(to_json(&json!({ "rho": value, "witness": witness })));
    }
    Ok(format!("rho: {value}\nwitness: {}\n", names(&g, &witness)))
}

pub fn construct(dsl_text: Option<String>, file: Option<PathBuf>, json: bool) -> CmdResult {
    let text = match (dsl_text, file) {
        (Some(t), _) => t,
        (None, Some(p)) => read_text(&p)?,
        (None, None) => return Err(Failure::Usage("one of --dsl or --file is required".into())),
    };
    let (g, meta) = dsl::eval_in(&dsl::parse(&text)?, &ctx())?;
    if json {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        return Ok(to_json(&json!({ "n": g.n(), "m": g.m(), "edges": edges, "meta": meta })));
    }
    Ok(write_edge_list(&g))
}

fn wrong_kind(kind: Kind) -> Failure {
    let shape = match kind {
        Kind::Rooted => "rooted(...)",
        Kind::Corona => "corona(...)",
        Kind::Block => "any graph expression",
        Kind::Bouquet => "bouquet(...)",
        Kind::Chain => "chain(...)",
    };
    Failure::Usage(format!("--kind {kind:?} expects {shape}").to_lowercase())
}

fn graphs(exprs: &[Expr]) -> Result<Vec<Graph>, Failure> {
    exprs.iter().map(eval).collect()
}

pub fn closed_form(kind: Kind, text: &str, verify: bool, json_out: bool, cfg: &Config) -> CmdResult {
    let expr = dsl::parse(text)?;
    let built = eval(&expr)?;
    let mut lines: Vec<String> = Vec::new();
    let (value, details) = match (kind, &expr) {
        (Kind::Rooted, Expr::RootedUniform { base, factor }) => {
            let base = eval(base)?;
            let h = eval(&factor.expr)?;
            let value = closed_form_rooted_uniform(base.n(), &h, factor.root, Some(&base), cfg)?;
            let bounds = (!h.is_bipartite() && base.n() >= 2).then(|| rooted_bounds(base.n(), &h));
            if let Some((lo, hi)) = bounds {
                lines.push(format!("bounds: {lo}..={hi}"));
            }
            (value, json!({ "bounds": bounds }))
        }
        (Kind::Rooted, Expr::Rooted { base, factors }) => {
            let spec = RootedSpec {
                base: eval(base)?,
                factors: factors
                    .iter()
                    .map(|f| Ok((eval(&f.expr)?, f.root)))
                    .collect::<Result<_, Failure>>()?,
            };
            (closed_form_rooted(&spec, cfg)?, json!(null))
        }
        (Kind::Corona, Expr::Corona { factors, .. }) => (closed_form_corona(&graphs(factors)?, cfg)?, json!(null)),
        (Kind::Block, _) => {
            let shapes = block_shapes(&built)?;
            (closed_form_block_graph(&shapes)?, json!({ "blocks": shapes }))
        }
        (Kind::Bouquet, Expr::Bouquet { parts, roots }) => {
            let ev = closed_form_bouquet(&graphs(parts)?, roots, cfg)?;
            if !ev.readings_agree {
                lines.push(format!(
                    "note: discounting every root found in a basis would give {}",
                    ev.literal_total
                ));
            }
            (ev.total, json!(ev))
        }
        (Kind::Chain, Expr::Chain { parts, links }) => {
            let spec = ChainSpec {
                parts: graphs(parts)?,
                links: links.clone(),
            };
            let ev = closed_form_chain(&spec, cfg)?;
            for p in &ev.parts {
                let rule = serde_json::to_value(p.rule).unwrap();
                lines.push(format!("part {}: {} rho {}", p.index, rule.as_str().unwrap(), p.rho));
            }
            (ev.total, json!({ "parts": ev.parts }))
        }
        _ => return Err(wrong_kind(kind)),
    };

    let check = if verify { Some(triangulate(value, &built, cfg)?) } else { None };
    let out = if json_out {
        let kind_name = format!("{kind:?}").to_lowercase();
        to_json(&json!({ "kind": kind_name, "value": value, "details": details, "verify": check }))
    } else {
        let mut out = format!("value: {value}\n");
        for l in &lines {
            writeln!(out, "{l}").unwrap();
        }
        if let Some(t) = &check {
            let brute = t.brute_force.map_or("skipped".to_string(), |b| b.to_string());
            writeln!(out, "engine: {}\nbrute force: {brute}", t.engine).unwrap();
        }
        out
    };
    match check {
        Some(t) if !t.agrees() => Err(Failure::Compute(format!(
            "closed form {} disagrees with engine {} / brute force {:?}",
            t.closed_form, t.engine, t.brute_force
        ))),
        _ => Ok(out),
    }
}
