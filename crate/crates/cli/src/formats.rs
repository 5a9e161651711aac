//! Edge-list and construction-sequence text formats.
//!
//! Edge list: one edge `u v` per line, 1-based vertex names. An optional
//! header `# shores: X=1,3 Y=2,4` fixes the bipartition; without it the
//! bipartition is found by 2-coloring. Other `#` lines and blank lines are
//! ignored.
//!
//! Sequence: a first line `1 X` (or `1 Y`) giving the shore of `v1`, then
//! one line `i P k` or `i F k` per added vertex, in order.

use std::collections::HashSet;

use bdh_core::{BipartiteGraph, ConstructionSequence, GraphError, Shore, StepKind, VertexId};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("input contains no data lines")]
    Empty,
}

fn line_err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        message: message.into(),
    }
}

/// A parsed input file of either kind.
#[derive(Debug, Clone)]
pub enum Input {
    Edges(BipartiteGraph),
    Sequence(ConstructionSequence),
}

/// Data lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn shores_header(text: &str) -> Option<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .find_map(|(i, l)| {
            l.strip_prefix('#')
                .map(str::trim_start)
                .and_then(|r| r.strip_prefix("shores:"))
                .map(|r| (i, r.trim()))
        })
}

/// Guesses the format from the first data line.
pub fn parse_input(text: &str) -> Result<Input, ParseError> {
    if shores_header(text).is_some() {
        return parse_edge_list(text).map(Input::Edges);
    }
    let (_, first) = data_lines(text).next().ok_or(ParseError::Empty)?;
    let tokens: Vec<&str> = first.split_whitespace().collect();
    if tokens.len() == 2 && matches!(tokens[1], "X" | "Y") {
        parse_sequence(text).map(Input::Sequence)
    } else {
        parse_edge_list(text).map(Input::Edges)
    }
}

fn parse_name(line: usize, tok: &str) -> Result<usize, ParseError> {
    match tok.parse::<usize>() {
        Ok(0) => Err(line_err(line, "vertex names start at 1")),
        Ok(k) => Ok(k),
        Err(_) => Err(line_err(line, format!("expected a vertex name, found `{tok}`"))),
    }
}

fn parse_header(line: usize, body: &str) -> Result<Vec<(usize, Shore)>, ParseError> {
    let mut out = Vec::new();
    for part in body.split_whitespace() {
        let (side, ids) = part
            .split_once('=')
            .ok_or_else(|| line_err(line, format!("malformed shore list `{part}`")))?;
        let shore = match side {
            "X" => Shore::X,
            "Y" => Shore::Y,
            _ => return Err(line_err(line, format!("unknown shore `{side}`"))),
        };
        for id in ids.split(',').filter(|s| !s.is_empty()) {
            out.push((parse_name(line, id)?, shore));
        }
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut n = 0;
    for (line, l) in data_lines(text) {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(line_err(line, "expected `u v`"));
        }
        let (u, v) = (parse_name(line, tokens[0])?, parse_name(line, tokens[1])?);
        if u == v {
            return Err(line_err(line, format!("self loop on {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(line_err(line, format!("duplicate edge {u} {v}")));
        }
        n = n.max(u).max(v);
        edges.push((line, u, v));
    }

    let header = match shores_header(text) {
        Some((line, body)) => Some((line, parse_header(line, body)?)),
        None => None,
    };
    if let Some((_, list)) = &header {
        n = n.max(list.iter().map(|&(k, _)| k).max().unwrap_or(0));
    }
    if n == 0 {
        return Err(ParseError::Empty);
    }
    let pairs = || {
        edges
            .iter()
            .map(|&(_, u, v)| (VertexId::from_one_based(u), VertexId::from_one_based(v)))
    };
    match header {
        None => Ok(BipartiteGraph::from_edges_colored(n, pairs())?),
        Some((hline, list)) => {
            let mut shores: Vec<Option<Shore>> = vec![None; n];
            for (k, s) in list {
                if shores[k - 1].replace(s).is_some_and(|old| old != s) {
                    return Err(line_err(hline, format!("vertex {k} listed on both shores")));
                }
            }
            let shores = shores
                .into_iter()
                .enumerate()
                .map(|(i, s)| s.ok_or_else(|| line_err(hline, format!("vertex {} has no shore", i + 1))))
                .collect::<Result<Vec<_>, _>>()?;
            for &(line, u, v) in &edges {
                if shores[u - 1] == shores[v - 1] {
                    return Err(line_err(line, format!("{u} and {v} are on the same shore")));
                }
            }
            Ok(BipartiteGraph::from_edges(shores, pairs())?)
        }
    }
}

fn join(ids: impl Iterator<Item = VertexId>) -> String {
    ids.map(|v| v.one_based().to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn write_edge_list(g: &BipartiteGraph) -> String {
    let mut out = format!(
        "# shores: X={} Y={}\n",
        join(g.shore_vertices(Shore::X).into_iter()),
        join(g.shore_vertices(Shore::Y).into_iter())
    );
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u.one_based(), v.one_based()));
    }
    out
}

pub fn parse_sequence(text: &str) -> Result<ConstructionSequence, ParseError> {
    let mut lines = data_lines(text);
    let (line, first) = lines.next().ok_or(ParseError::Empty)?;
    let tokens: Vec<&str> = first.split_whitespace().collect();
    let first_shore = match tokens.as_slice() {
        ["1", "X"] => Shore::X,
        ["1", "Y"] => Shore::Y,
        _ => return Err(line_err(line, "expected `1 X` or `1 Y`")),
    };
    let mut triples = Vec::new();
    for (line, l) in lines {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        let [i, kind, k] = tokens.as_slice() else {
            return Err(line_err(line, "expected `i P|F k`"));
        };
        let kind = match *kind {
            "P" => StepKind::Pending,
            "F" => StepKind::FalseTwin,
            "T" => return Err(line_err(line, "true twins cannot occur in a bipartite graph")),
            other => return Err(line_err(line, format!("unknown step kind `{other}`"))),
        };
        let (i, k) = (parse_name(line, i)?, parse_name(line, k)?);
        if i != triples.len() + 2 {
            return Err(line_err(line, format!("expected vertex {}, found {i}", triples.len() + 2)));
        }
        triples.push((i, kind, k));
    }
    let seq = ConstructionSequence::from_triples(first_shore, triples);
    seq.validate()?;
    Ok(seq)
}

pub fn write_sequence(seq: &ConstructionSequence) -> String {
    let mut out = format!("1 {}\n", seq.first_shore);
    for step in &seq.steps {
        let kind = match step.kind {
            StepKind::Pending => 'P',
            StepKind::FalseTwin => 'F',
        };
        out.push_str(&format!(
            "{} {} {}\n",
            step.vertex.one_based(),
            kind,
            step.anchor.one_based()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use bdh_core::{apply_sequence, generate_random_bdh};
    use proptest::prelude::*;

    #[test]
    fn edge_list_with_header() {
        let g = parse_edge_list("# shores: X=1,3 Y=2,4\n1 2\n3 2\n\n3 4\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 3);
        assert_eq!(g.shore_of(VertexId::from_one_based(3)), Shore::X);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let err = parse_edge_list("1 2\n# comment\n3 3\n").unwrap_err();
        assert!(matches!(err, ParseError::Line { line: 3, .. }), "{err}");
        let err = parse_edge_list("1 2\n2 1\n").unwrap_err();
        assert!(matches!(err, ParseError::Line { line: 2, .. }));
        let err = parse_edge_list("1 2 3\n").unwrap_err();
        assert!(matches!(err, ParseError::Line { line: 1, .. }));
        let err = parse_edge_list("# shores: X=1,2 Y=3\n1 2\n").unwrap_err();
        assert!(matches!(err, ParseError::Line { line: 2, .. }));
        let err = parse_edge_list("# shores: X=1 Y=2\n1 3\n").unwrap_err();
        assert!(matches!(err, ParseError::Line { line: 1, .. }));
        assert!(matches!(
            parse_edge_list("1 2\n2 3\n3 1\n"),
            Err(ParseError::Graph(GraphError::NotBipartite(_)))
        ));
        assert!(matches!(parse_edge_list("# nothing\n"), Err(ParseError::Empty)));
    }

    #[test]
    fn sequence_file() {
        let s = parse_sequence("1 X\n2 P 1\n3 P 2\n4 P 3\n").unwrap();
        assert_eq!(s.n(), 4);
        assert_eq!(write_sequence(&s), "1 X\n2 P 1\n3 P 2\n4 P 3\n");
        assert!(parse_sequence("1 X\n2 T 1\n").is_err());
        assert!(matches!(
            parse_sequence("1 X\n2 P 1\n4 P 1\n"),
            Err(ParseError::Line { line: 3, .. })
        ));
        assert!(matches!(
            parse_sequence("1 X\n2 P 1\n3 F 3\n"),
            Err(ParseError::Graph(GraphError::AnchorNotEarlier { step: 3, .. }))
        ));
    }

    #[test]
    fn detection() {
        assert!(matches!(parse_input("1 X\n2 P 1\n"), Ok(Input::Sequence(_))));
        assert!(matches!(parse_input("1 2\n"), Ok(Input::Edges(_))));
        assert!(matches!(parse_input("# shores: X=1 Y=2\n1 2\n"), Ok(Input::Edges(_))));
    }

    proptest! {
        #[test]
        fn round_trips(n in 2usize..40, p in 0.0f64..=1.0, seed: u64) {
            let s = generate_random_bdh(n, p, seed).unwrap();
            prop_assert_eq!(&parse_sequence(&write_sequence(&s)).unwrap(), &s);
            let g = apply_sequence(&s).unwrap();
            let text = write_edge_list(&g);
            let back = parse_edge_list(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(write_edge_list(&back), text);
        }
    }
}
