use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Complete,
    Path,
    Cycle,
}

impl Family {
    pub fn letter(self) -> &'static str {
        match self {
            Family::Complete => "K",
            Family::Path => "P",
            Family::Cycle => "C",
        }
    }
}

/// A part expression together with a designated vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedExpr {
    pub expr: Expr,
    pub root: usize,
}

/// `(part, vertex)`.
pub type PartVertex = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Atom { family: Family, order: usize },
    Inline { n: usize, edges: Vec<(usize, usize)> },
    File(String),
    Join(Box<Expr>, Box<Expr>),
    Union(Box<Expr>, Box<Expr>),
    RootedUniform { base: Box<Expr>, factor: Box<RootedExpr> },
    Rooted { base: Box<Expr>, factors: Vec<RootedExpr> },
    Corona { base: Box<Expr>, factors: Vec<Expr> },
    Bouquet { parts: Vec<Expr>, roots: Vec<usize> },
    Chain { parts: Vec<Expr>, links: Vec<(usize, usize)> },
    Attach { parts: Vec<Expr>, ids: Vec<(PartVertex, PartVertex)> },
}

struct Seq<'a, T>(&'a [T]);

impl<T: fmt::Display> fmt::Display for Seq<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

struct Pair((usize, usize));

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0 .0, self.0 .1)
    }
}

struct Ident((PartVertex, PartVertex));

impl fmt::Display for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", Pair(self.0 .0), Pair(self.0 .1))
    }
}

impl fmt::Display for RootedExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.expr, self.root)
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Canonical text; parsing it gives back the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Atom { family, order } => write!(f, "{}({order})", family.letter()),
            Expr::Inline { n, edges } => {
                write!(f, "graph{{n={n};")?;
                for (u, v) in edges {
                    write!(f, " {u}-{v}")?;
                }
                f.write_str("}")
            }
            Expr::File(path) => write!(f, "file({})", quote(path)),
            Expr::Join(a, b) => write!(f, "join({a}, {b})"),
            Expr::Union(a, b) => write!(f, "union({a}, {b})"),
            Expr::RootedUniform { base, factor } => write!(f, "rooted({base}, {factor})"),
            Expr::Rooted { base, factors } => write!(f, "rooted({base}, {})", Seq(factors)),
            Expr::Corona { base, factors } => write!(f, "corona({base}, {})", Seq(factors)),
            Expr::Bouquet { parts, roots } => {
                write!(f, "bouquet({}, roots={})", Seq(parts), Seq(roots))
            }
            Expr::Chain { parts, links } => {
                let links: Vec<Pair> = links.iter().copied().map(Pair).collect();
                write!(f, "chain({}, links={})", Seq(parts), Seq(&links))
            }
            Expr::Attach { parts, ids } => {
                let ids: Vec<Ident> = ids.iter().copied().map(Ident).collect();
                write!(f, "attach({}, ids={})", Seq(parts), Seq(&ids))
            }
        }
    }
}

pub fn format(expr: &Expr) -> String {
    expr.to_string()
}
