//! A small construction language for fixtures on the command line.
//!
//! ```text
//! expr  := ident [ "(" arg { "," arg } ")" ]
//! arg   := integer | expr
//! ```
//!
//! | form                     | graph                                        |
//! |--------------------------|----------------------------------------------|
//! | `k1`                     | single vertex                                |
//! | `empty(n)`               | `n` isolated vertices                        |
//! | `complete(n)`            | `K_n`                                        |
//! | `cycle(n)`, `path(n)`    | `C_n`, `P_n`                                 |
//! | `star(k)`                | `K_{1,k}`, centre 0                          |
//! | `kmp(a,b,..)`            | complete multipartite with the given parts   |
//! | `union(g,h,..)`          | disjoint union, left to right                |
//! | `join(g,h,..)`           | join, left to right                          |
//! | `corona(g,p)`            | clique corona `g ∘ K_p`                      |
//! | `lex(g,h)`               | lexicographic product `g[h]`                 |
//! | `fig1`, `crossed_ladder` | the 6-vertex crossed ladder                  |
//! | `fig2(q)`, `ladder_clique(q)` | the ladder with a `K_q` on its far rung |
//!
//! Whitespace between tokens is ignored. Errors report a 1-based column.

use crate::construct::{clique_corona, disjoint_union, join, lexicographic};
use crate::error::{Error, Result};
use crate::families::{complete, complete_multipartite, crossed_ladder, cycle, ladder_clique, path, star};
use crate::graph::Graph;

#[derive(Debug)]
enum Arg {
    Int(usize, usize),
    Graph(Graph, usize),
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

fn err(pos: usize, reason: impl Into<String>) -> Error {
    Error::Expr { column: pos + 1, reason: reason.into() }
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &str {
        let start = self.pos;
        while self.pos < self.text.len() && f(self.text[self.pos]) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.text[start..self.pos]).expect("ascii")
    }

    fn arg(&mut self) -> Result<Arg> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let at = self.pos;
                let digits = self.take_while(|b| b.is_ascii_digit());
                let v = digits.parse().map_err(|_| err(at, "integer too large"))?;
                Ok(Arg::Int(v, at))
            }
            _ => {
                let at = self.pos;
                Ok(Arg::Graph(self.expr()?, at))
            }
        }
    }

    fn expr(&mut self) -> Result<Graph> {
        let at = match self.peek() {
            Some(b) if b.is_ascii_alphabetic() => self.pos,
            Some(b) => return Err(err(self.pos, format!("expected a name, found '{}'", b as char))),
            None => return Err(err(self.pos, "expected a name, found end of input")),
        };
        let name = self.take_while(|b| b.is_ascii_alphanumeric() || b == b'_').to_string();
        let mut args = Vec::new();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            loop {
                args.push(self.arg()?);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(err(self.pos, "expected ',' or ')'")),
                }
            }
        }
        build(&name, args, at)
    }
}

fn ints(name: &str, args: &[Arg], at: usize) -> Result<Vec<usize>> {
    args.iter()
        .map(|a| match a {
            Arg::Int(v, _) => Ok(*v),
            Arg::Graph(_, pos) => Err(err(*pos, format!("{name} takes integer arguments"))),
        })
        .collect::<Result<Vec<_>>>()
        .and_then(|v| if v.is_empty() { Err(err(at, format!("{name} needs arguments"))) } else { Ok(v) })
}

fn arity(name: &str, args: &[Arg], want: usize, at: usize) -> Result<()> {
    if args.len() == want {
        Ok(())
    } else {
        Err(err(at, format!("{name} takes {want} argument(s), got {}", args.len())))
    }
}

fn graph_arg(name: &str, arg: Arg) -> Result<Graph> {
    match arg {
        Arg::Graph(g, _) => Ok(g),
        Arg::Int(_, pos) => Err(err(pos, format!("{name} expects a graph here"))),
    }
}

fn int_arg(name: &str, arg: &Arg) -> Result<usize> {
    match arg {
        Arg::Int(v, _) => Ok(*v),
        Arg::Graph(_, pos) => Err(err(*pos, format!("{name} expects an integer here"))),
    }
}

fn build(name: &str, args: Vec<Arg>, at: usize) -> Result<Graph> {
    // construction errors carry the column of the offending name
    let locate = |e: Error| match e {
        Error::Expr { .. } => e,
        other => err(at, other.to_string()),
    };
    let single = |f: fn(usize) -> Result<Graph>, args: &[Arg]| -> Result<Graph> {
        arity(name, args, 1, at)?;
        f(int_arg(name, &args[0])?).map_err(locate)
    };
    match name {
        "k1" => {
            arity(name, &args, 0, at)?;
            Graph::empty(1)
        }
        "empty" => single(Graph::empty, &args),
        "complete" => single(complete, &args),
        "cycle" => single(cycle, &args),
        "path" => single(path, &args),
        "star" => single(star, &args),
        "fig2" | "ladder_clique" => single(ladder_clique, &args),
        "fig1" | "crossed_ladder" => {
            arity(name, &args, 0, at)?;
            Ok(crossed_ladder())
        }
        "kmp" => complete_multipartite(&ints(name, &args, at)?).map_err(locate),
        "union" | "join" => {
            if args.len() < 2 {
                return Err(err(at, format!("{name} takes at least 2 graphs")));
            }
            let op = if name == "union" { disjoint_union } else { join };
            let mut it = args.into_iter();
            let mut acc = graph_arg(name, it.next().expect("len checked"))?;
            for a in it {
                acc = op(&acc, &graph_arg(name, a)?).map_err(locate)?;
            }
            Ok(acc)
        }
        "corona" => {
            arity(name, &args, 2, at)?;
            let p = int_arg(name, &args[1])?;
            let g = graph_arg(name, args.into_iter().next().expect("len checked"))?;
            clique_corona(&g, p).map_err(locate)
        }
        "lex" => {
            arity(name, &args, 2, at)?;
            let mut it = args.into_iter();
            let g = graph_arg(name, it.next().expect("len checked"))?;
            let h = graph_arg(name, it.next().expect("len checked"))?;
            lexicographic(&g, &h).map_err(locate)
        }
        _ => Err(err(at, format!("unknown construction '{name}'"))),
    }
}

/// Parses and builds one construction expression.
pub fn parse_expr(text: &str) -> Result<Graph> {
    let mut p = Parser { text: text.as_bytes(), pos: 0 };
    let g = p.expr()?;
    if let Some(b) = p.peek() {
        return Err(err(p.pos, format!("trailing input starting at '{}'", b as char)));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indset::{alpha, independence_polynomial, max_wp};
    use crate::poly::Polynomial;

    #[test]
    fn builds_families() {
        assert_eq!(parse_expr("complete(7)").unwrap(), complete(7).unwrap());
        assert_eq!(parse_expr(" cycle( 5 ) ").unwrap(), cycle(5).unwrap());
        assert_eq!(parse_expr("k1").unwrap(), Graph::empty(1).unwrap());
        assert_eq!(parse_expr("fig1").unwrap(), crossed_ladder());
        assert_eq!(parse_expr("ladder_clique(6)").unwrap(), ladder_clique(6).unwrap());
        assert_eq!(parse_expr("kmp(2,2)").unwrap().m(), 4);
    }

    #[test]
    fn builds_compositions() {
        let g = parse_expr("corona(path(3),2)").unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(max_wp(&g).unwrap(), 2);
        let g = parse_expr("lex(complete(2),union(k1,k1))").unwrap();
        assert_eq!((g.n(), g.m()), (4, 4));
        let g = parse_expr("union(complete(3),complete(5))").unwrap();
        assert_eq!(alpha(&g), 2);
        let g = parse_expr("join(k1,cycle(4))").unwrap();
        assert_eq!(independence_polynomial(&g), Polynomial::from_u64s(&[1, 5, 2]));
        assert_eq!(parse_expr("union(k1,k1,k1)").unwrap(), Graph::empty(3).unwrap());
    }

    #[test]
    fn errors_carry_columns() {
        let col = |s: &str| match parse_expr(s) {
            Err(Error::Expr { column, .. }) => column,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(col("cycel(5)"), 1);
        assert_eq!(col("cycle(2)"), 1);
        assert_eq!(col("corona(path(3),k1)"), 16);
        assert_eq!(col("path(3"), 7);
        assert_eq!(col("path(3))"), 8);
        assert_eq!(col("union(k1)"), 1);
        assert_eq!(col(""), 1);
        assert_eq!(col("lex(2,k1)"), 5);
        assert_eq!(col("complete(99999999999999999999999)"), 10);
        assert_eq!(col("complete(600)"), 1);
    }
}
