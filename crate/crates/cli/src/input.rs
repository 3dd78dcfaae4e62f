//! Graph arguments: family expressions, graph6 strings and JSON documents.
//!
//! Family expressions nest: `cartesian(K3+e, P2)`, `sum(K3, P3)`,
//! `complement(C5)`, `subdivision(K4)`, or a product board name such as
//! `cartesianK3eP2`.

use std::fs;
use std::io::Read;

use avoid_core::game::{product_board, ProductBoard};
use avoid_core::graph::{
    cartesian, categorical, complement, lexicographic, make_family, subdivision, sum,
};
use avoid_core::{FamilySpec, Graph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{0}")]
    Graph(#[from] avoid_core::GraphError),
    #[error("malformed JSON graph at line {line}, column {column}: {reason}")]
    Json {
        line: usize,
        column: usize,
        reason: String,
    },
    #[error("cannot read `{path}`: {reason}")]
    Io { path: String, reason: String },
    #[error("bad family expression `{0}`")]
    Expression(String),
}

pub fn parse_family(expr: &str) -> Result<Graph, InputError> {
    let s = expr.trim();
    if let Ok(board) = s.parse::<ProductBoard>() {
        return Ok(product_board(board));
    }
    let Some((head, rest)) = s.split_once('(') else {
        return Ok(make_family(&s.parse::<FamilySpec>()?)?);
    };
    let body = rest
        .strip_suffix(')')
        .ok_or_else(|| InputError::Expression(s.into()))?;
    let args = split_args(body).ok_or_else(|| InputError::Expression(s.into()))?;
    let graphs = args
        .iter()
        .map(|a| parse_family(a))
        .collect::<Result<Vec<_>, _>>()?;
    let binary = |f: fn(&Graph, &Graph) -> Graph| match graphs.as_slice() {
        [a, b] => Ok(f(a, b)),
        _ => Err(InputError::Expression(s.into())),
    };
    let unary = |f: fn(&Graph) -> Graph| match graphs.as_slice() {
        [a] => Ok(f(a)),
        _ => Err(InputError::Expression(s.into())),
    };
    match head.trim().to_ascii_lowercase().as_str() {
        "cartesian" => binary(cartesian),
        "lexicographic" | "lexi" => binary(lexicographic),
        "categorical" | "tensor" => binary(categorical),
        "sum" => binary(sum),
        "complement" => unary(complement),
        "subdivision" => unary(subdivision),
        _ => Err(InputError::Expression(s.into())),
    }
}

/// Splits at top-level commas, gluing back the `3` of `K3,3`.
fn split_args(body: &str) -> Option<Vec<String>> {
    let mut parts: Vec<String> = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for c in body.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return None;
        }
        if c == ',' && depth == 0 {
            parts.push(std::mem::take(&mut current));
        } else {
            current.push(c);
        }
    }
    parts.push(current);
    let mut args: Vec<String> = Vec::new();
    for p in parts {
        let t = p.trim();
        let glue = t.trim_end_matches("-e").chars().all(|c| c.is_ascii_digit()) && !t.is_empty();
        match args.last_mut() {
            Some(prev) if glue => {
                prev.push(',');
                prev.push_str(t);
            }
            _ => args.push(t.to_string()),
        }
    }
    (depth == 0 && args.iter().all(|a| !a.is_empty())).then_some(args)
}

pub fn parse_graph6(text: &str) -> Result<Graph, InputError> {
    Ok(Graph::from_graph6(text.trim())?)
}

pub fn parse_json_graph(text: &str) -> Result<Graph, InputError> {
    let j: avoid_core::graph::JsonGraph =
        serde_json::from_str(text).map_err(|e| InputError::Json {
            line: e.line(),
            column: e.column(),
            reason: e.to_string(),
        })?;
    Ok(Graph::try_from(j)?)
}

/// Reads a file, or stdin for `-`.
pub fn read_source(path: &str) -> Result<String, InputError> {
    let io = |e: std::io::Error| InputError::Io {
        path: path.into(),
        reason: e.to_string(),
    };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io)
    }
}

/// A `--forbidden` argument: `none`, a family expression, or graph6.
pub fn parse_forbidden(text: &str) -> Result<Option<Graph>, InputError> {
    if text.eq_ignore_ascii_case("none") {
        return Ok(None);
    }
    match parse_family(text) {
        Ok(g) => Ok(Some(g)),
        Err(family_err) => parse_graph6(text).map(Some).map_err(|_| family_err),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        let g = parse_family("cartesian(K3+e, P2)").unwrap();
        assert_eq!((g.order(), g.size()), (12, 20));
        let g = parse_family("sum(K3,3, C4)").unwrap();
        assert_eq!((g.order(), g.size()), (10, 13));
        let g = parse_family("complement(sum(K2,K2))").unwrap();
        assert_eq!(g.size(), 4);
        assert_eq!(parse_family("lexiP2K3e").unwrap().size(), 44);
        assert!(parse_family("cartesian(K3)").is_err());
        assert!(parse_family("frob(K3,K3)").is_err());
        assert!(parse_family("sum(K3,(K2)").is_err());
    }

    #[test]
    fn json_errors_carry_positions() {
        let err = parse_json_graph("{\"order\": 3,\n \"edges\": [[0,1],]}").unwrap_err();
        match err {
            InputError::Json { line, .. } => assert_eq!(line, 2),
            other => panic!("{other}"),
        }
        assert!(parse_json_graph(r#"{"order": 2, "edges": [[0, 2]]}"#).is_err());
    }

    #[test]
    fn forbidden_arguments() {
        assert!(parse_forbidden("none").unwrap().is_none());
        assert_eq!(parse_forbidden("K3").unwrap().unwrap().size(), 3);
        assert_eq!(parse_forbidden("Bw").unwrap().unwrap().size(), 3);
    }
}
