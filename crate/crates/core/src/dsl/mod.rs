//! A small expression language for graphs and point-attaching constructions.
//!
//! ```text
//! K(5)  P(3)  C(6)                      complete, path, cycle
//! graph{n=4; 0-1 1-2 2-3}               inline edge list
//! file("bowtie.edges")                  edge-list file
//! join(a, b)  union(a, b)
//! rooted(P(3), C(5)@0)                  same rooted factor on every base vertex
//! rooted(P(2), [K(3)@0, C(5)@1])        one rooted factor per base vertex
//! corona(P(2), [K(2), K(2)])
//! bouquet([K(3), K(3)], roots=[0, 0])
//! chain([K(3), K(3), K(3)], links=[(1, 2), (1, 2)])
//! attach([K(3), P(3)], ids=[((0, 2), (1, 0))])
//! ```
//!
//! `#` starts a comment. Chain links are `(exit of part i, entry of part i+1)`.

mod ast;
mod eval;
mod parser;
mod random;

pub use ast::{format, Expr, Family, PartVertex, RootedExpr};
pub use eval::{eval, eval_in, EvalContext};
pub use parser::parse;
pub use random::{random_expr, random_expr_seeded};

use crate::constructions::AttachmentMeta;
use crate::error::Result;
use crate::graph::Graph;

pub fn build(text: &str) -> Result<(Graph, AttachmentMeta)> {
    eval(&parse(text)?)
}
