use std::fs;
use std::io::{self, Read};
use std::path::Path;

use clap::ValueEnum;
use indpoly::edgelist::parse_edge_lists;
use indpoly::expr::parse_expr;
use indpoly::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
    Expr,
}

/// One input record: its 1-based line number and the parsed graph.
pub struct Record {
    pub line: usize,
    pub graph: Result<Graph, String>,
}

pub fn read_text(path: Option<&Path>) -> Result<String, String> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| format!("standard input: {e}"))?;
            Ok(s)
        }
    }
}

fn per_line(text: &str, parse: impl Fn(&str) -> Result<Graph, String>) -> Vec<Record> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| Record { line: i + 1, graph: parse(l.trim()) })
        .collect()
}

/// Splits `text` into records. Edge lists are parsed as a whole, so their
/// errors abort the read; the other formats fail per line.
pub fn records(text: &str, format: Format) -> Result<Vec<Record>, String> {
    Ok(match format {
        Format::Graph6 => per_line(text, |l| Graph::from_graph6(l).map_err(|e| e.to_string())),
        Format::Expr => per_line(text, |l| parse_expr(l).map_err(|e| e.to_string())),
        Format::Edgelist => parse_edge_lists(text)
            .map_err(|e| e.to_string())?
            .into_iter()
            .enumerate()
            .map(|(i, g)| Record { line: i + 1, graph: Ok(g) })
            .collect(),
    })
}

/// All graphs, or the first parse error with its line number.
pub fn graphs(records: Vec<Record>) -> Result<Vec<Graph>, String> {
    records
        .into_iter()
        .map(|r| r.graph.map_err(|e| format!("line {}: {e}", r.line)))
        .collect()
}
