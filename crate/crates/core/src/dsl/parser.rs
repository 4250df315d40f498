//! Recursive-descent parser for construction expressions.

use super::ast::{Expr, Family, PartVertex, RootedExpr};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(usize),
    Str(String),
    Punct(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(i) => format!("integer {i}"),
            Tok::Str(_) => "string".into(),
            Tok::Punct(c) => format!("`{c}`"),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    let syntax = |line, col, expected: &str| Error::Syntax {
        line,
        col,
        expected: expected.to_string(),
    };
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while chars.peek().is_some_and(char::is_ascii_digit) {
                s.push(bump(&mut chars).unwrap());
            }
            let value = s.parse().map_err(|_| syntax(tl, tc, "integer that fits in usize"))?;
            out.push(Spanned {
                tok: Tok::Int(value),
                line: tl,
                col: tc,
            });
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while chars.peek().is_some_and(|&c| c.is_alphanumeric() || c == '_') {
                s.push(bump(&mut chars).unwrap());
            }
            out.push(Spanned {
                tok: Tok::Ident(s),
                line: tl,
                col: tc,
            });
        } else if c == '"' {
            bump(&mut chars);
            let mut s = String::new();
            loop {
                match bump(&mut chars) {
                    None => return Err(syntax(line, col, "closing `\"`")),
                    Some('"') => break,
                    Some('\\') => match bump(&mut chars) {
                        Some(e @ ('"' | '\\')) => s.push(e),
                        _ => return Err(syntax(line, col, "`\\\"` or `\\\\` escape")),
                    },
                    Some(ch) => s.push(ch),
                }
            }
            out.push(Spanned {
                tok: Tok::Str(s),
                line: tl,
                col: tc,
            });
        } else if "()[]{},@=;-".contains(c) {
            bump(&mut chars);
            out.push(Spanned {
                tok: Tok::Punct(c),
                line: tl,
                col: tc,
            });
        } else {
            return Err(syntax(tl, tc, "token"));
        }
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        col,
    });
    Ok(out)
}

/// Argument shapes before they are matched against a call's signature.
#[derive(Debug)]
enum Value {
    Expr(Expr, Option<usize>),
    Int(usize),
    List(Vec<Value>),
    Tuple(Vec<Value>),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Expr(_, Some(_)) => "rooted expression",
            Value::Expr(_, None) => "expression",
            Value::Int(_) => "integer",
            Value::List(_) => "list",
            Value::Tuple(_) => "tuple",
        }
    }
}

struct Call {
    name: String,
    line: usize,
    col: usize,
    positional: Vec<Value>,
    keywords: Vec<(String, Value)>,
}

impl Call {
    fn arity(&self, message: impl Into<String>) -> Error {
        Error::Arity {
            name: self.name.clone(),
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }

    fn expect_shape(&self, positional: usize, keywords: &[&str]) -> Result<()> {
        if self.positional.len() != positional {
            return Err(self.arity(format!(
                "expected {positional} positional argument(s), found {}",
                self.positional.len()
            )));
        }
        let names: Vec<&str> = self.keywords.iter().map(|(k, _)| k.as_str()).collect();
        if names != keywords {
            return Err(self.arity(format!("expected keyword argument(s) {keywords:?}, found {names:?}")));
        }
        Ok(())
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

const CALLS: [&str; 7] = ["join", "union", "rooted", "corona", "bouquet", "chain", "attach"];

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> Error {
        let t = self.peek();
        Error::Syntax {
            line: t.line,
            col: t.col,
            expected: format!("{expected}, found {}", t.tok.describe()),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Punct(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("`{c}`")))
        }
    }

    fn int(&mut self) -> Result<usize> {
        match self.peek().tok {
            Tok::Int(i) => {
                self.next();
                Ok(i)
            }
            _ => Err(self.error("integer")),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let t = self.peek().clone();
        let Tok::Ident(name) = &t.tok else {
            return Err(self.error("expression"));
        };
        self.next();
        match name.as_str() {
            "K" | "P" | "C" => {
                let family = match name.as_str() {
                    "K" => Family::Complete,
                    "P" => Family::Path,
                    _ => Family::Cycle,
                };
                self.expect('(')?;
                let order = self.int()?;
                self.expect(')')?;
                Ok(Expr::Atom { family, order })
            }
            "graph" => self.inline(),
            "file" => {
                self.expect('(')?;
                let Tok::Str(path) = self.peek().tok.clone() else {
                    return Err(self.error("string"));
                };
                self.next();
                self.expect(')')?;
                Ok(Expr::File(path))
            }
            n if CALLS.contains(&n) => {
                let call = self.call(n.to_string(), t.line, t.col)?;
                build(call)
            }
            _ => Err(Error::UnknownIdentifier {
                name: name.clone(),
                line: t.line,
                col: t.col,
            }),
        }
    }

    fn inline(&mut self) -> Result<Expr> {
        self.expect('{')?;
        match &self.peek().tok {
            Tok::Ident(s) if s == "n" => {
                self.next();
            }
            _ => return Err(self.error("`n`")),
        }
        self.expect('=')?;
        let n = self.int()?;
        self.expect(';')?;
        let mut edges = Vec::new();
        while !self.eat('}') {
            let u = self.int().map_err(|_| self.error("edge `u-v` or `}`"))?;
            self.expect('-')?;
            let v = self.int()?;
            edges.push((u, v));
        }
        Ok(Expr::Inline { n, edges })
    }

    fn call(&mut self, name: String, line: usize, col: usize) -> Result<Call> {
        self.expect('(')?;
        let mut call = Call {
            name,
            line,
            col,
            positional: Vec::new(),
            keywords: Vec::new(),
        };
        if self.eat(')') {
            return Ok(call);
        }
        loop {
            let is_keyword = matches!(self.peek().tok, Tok::Ident(_))
                && self.toks.get(self.pos + 1).is_some_and(|t| t.tok == Tok::Punct('='));
            if is_keyword {
                let Tok::Ident(key) = self.next().tok else { unreachable!() };
                self.next();
                let value = self.value()?;
                call.keywords.push((key, value));
            } else if call.keywords.is_empty() {
                call.positional.push(self.value()?);
            } else {
                return Err(self.error("keyword argument"));
            }
            if self.eat(')') {
                return Ok(call);
            }
            self.expect(',')?;
        }
    }

    fn value(&mut self) -> Result<Value> {
        match self.peek().tok {
            Tok::Int(i) => {
                self.next();
                Ok(Value::Int(i))
            }
            Tok::Punct('[') => {
                self.next();
                Ok(Value::List(self.values(']')?))
            }
            Tok::Punct('(') => {
                self.next();
                Ok(Value::Tuple(self.values(')')?))
            }
            _ => {
                let e = self.expr()?;
                let root = if self.eat('@') { Some(self.int()?) } else { None };
                Ok(Value::Expr(e, root))
            }
        }
    }

    fn values(&mut self, close: char) -> Result<Vec<Value>> {
        let mut items = Vec::new();
        if self.eat(close) {
            return Ok(items);
        }
        loop {
            items.push(self.value()?);
            if self.eat(close) {
                return Ok(items);
            }
            self.expect(',')?;
        }
    }
}

fn plain(call: &Call, v: Value) -> Result<Expr> {
    match v {
        Value::Expr(e, None) => Ok(e),
        other => Err(call.arity(format!("expected an expression, found {}", other.kind()))),
    }
}

fn rooted(call: &Call, v: Value) -> Result<RootedExpr> {
    match v {
        Value::Expr(expr, Some(root)) => Ok(RootedExpr { expr, root }),
        other => Err(call.arity(format!("expected `expr@root`, found {}", other.kind()))),
    }
}

fn list(call: &Call, v: Value) -> Result<Vec<Value>> {
    match v {
        Value::List(items) => Ok(items),
        other => Err(call.arity(format!("expected a list, found {}", other.kind()))),
    }
}

fn int(call: &Call, v: Value) -> Result<usize> {
    match v {
        Value::Int(i) => Ok(i),
        other => Err(call.arity(format!("expected an integer, found {}", other.kind()))),
    }
}

fn pair(call: &Call, v: Value) -> Result<(usize, usize)> {
    match v {
        Value::Tuple(items) if items.len() == 2 => {
            let mut it = items.into_iter();
            Ok((int(call, it.next().unwrap())?, int(call, it.next().unwrap())?))
        }
        other => Err(call.arity(format!("expected a pair `(a, b)`, found {}", other.kind()))),
    }
}

fn identification(call: &Call, v: Value) -> Result<(PartVertex, PartVertex)> {
    match v {
        Value::Tuple(items) if items.len() == 2 => {
            let mut it = items.into_iter();
            Ok((pair(call, it.next().unwrap())?, pair(call, it.next().unwrap())?))
        }
        other => Err(call.arity(format!(
            "expected `((part, vertex), (part, vertex))`, found {}",
            other.kind()
        ))),
    }
}

fn each<T>(call: &Call, v: Value, f: fn(&Call, Value) -> Result<T>) -> Result<Vec<T>> {
    list(call, v)?.into_iter().map(|x| f(call, x)).collect()
}

fn build(mut call: Call) -> Result<Expr> {
    let name = call.name.clone();
    let (positional, keywords): (usize, &[&str]) = match name.as_str() {
        "bouquet" => (1, &["roots"]),
        "chain" => (1, &["links"]),
        "attach" => (1, &["ids"]),
        _ => (2, &[]),
    };
    call.expect_shape(positional, keywords)?;
    let mut pos = std::mem::take(&mut call.positional).into_iter();
    let kw = std::mem::take(&mut call.keywords).into_iter().next().map(|(_, v)| v);
    let first = pos.next().unwrap();
    Ok(match name.as_str() {
        "join" | "union" => {
            let a = Box::new(plain(&call, first)?);
            let b = Box::new(plain(&call, pos.next().unwrap())?);
            if name == "join" {
                Expr::Join(a, b)
            } else {
                Expr::Union(a, b)
            }
        }
        "rooted" => {
            let base = Box::new(plain(&call, first)?);
            match pos.next().unwrap() {
                Value::List(items) => Expr::Rooted {
                    base,
                    factors: items.into_iter().map(|x| rooted(&call, x)).collect::<Result<_>>()?,
                },
                other => Expr::RootedUniform {
                    base,
                    factor: Box::new(rooted(&call, other)?),
                },
            }
        }
        "corona" => Expr::Corona {
            base: Box::new(plain(&call, first)?),
            factors: each(&call, pos.next().unwrap(), plain)?,
        },
        "bouquet" => Expr::Bouquet {
            parts: each(&call, first, plain)?,
            roots: each(&call, kw.unwrap(), int)?,
        },
        "chain" => Expr::Chain {
            parts: each(&call, first, plain)?,
            links: each(&call, kw.unwrap(), pair)?,
        },
        _ => Expr::Attach {
            parts: each(&call, first, plain)?,
            ids: each(&call, kw.unwrap(), identification)?,
        },
    })
}

/// Parse a single expression.
pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().tok != Tok::End {
        return Err(p.error("end of input"));
    }
    Ok(e)
}
