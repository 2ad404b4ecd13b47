//! Plain-text file formats shared by the whole toolkit. Everything is
//! 1-indexed on disk and 0-indexed in memory; lines whose first
//! non-whitespace character is `#` are comments.
//!
//! - graph:       `graph <n> <m>` then m lines `<u> <v>`
//! - model:       `perm <n>` then one line with n bottom ranks (the rank
//!   of the vertex with top rank i sits at position i)
//! - tree power:  `treepow <n> <k>` then n-1 edge lines
//! - coloring:    `colors <k>` then one line `<v> <c>` per vertex

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::oracle::VertexColoring;
use crate::perm::PermutationModel;
use crate::treepow::Tree;

/// Numbered, trimmed, non-comment lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("expected {what}, found {token:?}")))
}

fn split_tokens(l: &str) -> Vec<&str> {
    l.split_whitespace().collect()
}

fn expect_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
    arity: usize,
) -> Result<(usize, Vec<usize>)> {
    let (ln, header) = lines
        .next()
        .ok_or_else(|| parse_error(0, format!("missing `{keyword}` header")))?;
    let tokens = split_tokens(header);
    if tokens.first() != Some(&keyword) || tokens.len() != arity + 1 {
        return Err(parse_error(
            ln,
            format!("expected `{keyword}` header with {arity} argument(s)"),
        ));
    }
    let args = tokens[1..]
        .iter()
        .map(|t| parse_usize(ln, t, "a non-negative integer"))
        .collect::<Result<Vec<_>>>()?;
    Ok((ln, args))
}

fn parse_edge_line(ln: usize, l: &str, n: usize) -> Result<(VertexId, VertexId)> {
    let tokens = split_tokens(l);
    if tokens.len() != 2 {
        return Err(parse_error(ln, "expected an edge line `<u> <v>`"));
    }
    let u = parse_usize(ln, tokens[0], "a vertex id")?;
    let v = parse_usize(ln, tokens[1], "a vertex id")?;
    if u == 0 || u > n || v == 0 || v > n {
        return Err(parse_error(ln, format!("vertex id out of range 1..={n}")));
    }
    if u == v {
        return Err(parse_error(ln, "self-loops are not allowed"));
    }
    Ok((u - 1, v - 1))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_ln, args) = expect_header(&mut lines, "graph", 2)?;
    let (n, m) = (args[0], args[1]);
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (ln, l) in lines {
        if edges.len() == m {
            return Err(parse_error(ln, format!("more than {m} edge lines")));
        }
        let (u, v) = parse_edge_line(ln, l, n)?;
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_error(ln, "duplicate edge"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_error(
            header_ln,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_model(text: &str) -> Result<PermutationModel> {
    let mut lines = content_lines(text);
    let (header_ln, args) = expect_header(&mut lines, "perm", 1)?;
    let n = args[0];
    if n == 0 {
        return Err(parse_error(header_ln, "a model needs at least one vertex"));
    }
    let (ln, l) = lines
        .next()
        .ok_or_else(|| parse_error(header_ln, "missing the bottom-rank line"))?;
    let tokens = split_tokens(l);
    if tokens.len() != n {
        return Err(parse_error(
            ln,
            format!("expected {n} bottom ranks, found {}", tokens.len()),
        ));
    }
    let bottom = tokens
        .iter()
        .map(|t| parse_usize(ln, t, "a rank"))
        .collect::<Result<Vec<_>>>()?;
    if let Some((extra_ln, _)) = lines.next() {
        return Err(parse_error(extra_ln, "unexpected content after the ranks"));
    }
    PermutationModel::from_bottom_ranks(bottom)
        .map_err(|e| parse_error(ln, format!("invalid ranks: {e}")))
}

pub fn serialize_model(m: &PermutationModel) -> String {
    let ranks: Vec<String> = m.bottom_ranks().iter().map(usize::to_string).collect();
    format!("perm {}\n{}\n", m.n(), ranks.join(" "))
}

pub fn parse_treepow(text: &str) -> Result<(Tree, usize)> {
    let mut lines = content_lines(text);
    let (header_ln, args) = expect_header(&mut lines, "treepow", 2)?;
    let (n, k) = (args[0], args[1]);
    if k == 0 {
        return Err(parse_error(header_ln, "exponent must be at least 1"));
    }
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (ln, l) in lines {
        if n > 0 && edges.len() == n - 1 {
            return Err(parse_error(ln, format!("more than {} edge lines", n - 1)));
        }
        edges.push(parse_edge_line(ln, l, n)?);
    }
    let tree = Tree::from_edges(n, &edges)
        .map_err(|e| parse_error(header_ln, format!("not a tree: {e}")))?;
    Ok((tree, k))
}

pub fn serialize_treepow(t: &Tree, k: usize) -> String {
    let mut out = format!("treepow {} {}\n", t.n(), k);
    for (u, v) in t.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<VertexColoring> {
    let mut lines = content_lines(text);
    let (header_ln, args) = expect_header(&mut lines, "colors", 1)?;
    let k = args[0];
    let mut entries: Vec<(usize, usize, usize)> = Vec::new(); // (line, vertex, color)
    for (ln, l) in lines {
        let tokens = split_tokens(l);
        if tokens.len() != 2 {
            return Err(parse_error(ln, "expected a line `<v> <c>`"));
        }
        let v = parse_usize(ln, tokens[0], "a vertex id")?;
        let c = parse_usize(ln, tokens[1], "a color")?;
        entries.push((ln, v, c));
    }
    let n = entries.len();
    if n == 0 {
        return Err(parse_error(header_ln, "a coloring needs at least one vertex"));
    }
    let mut colors = vec![0usize; n];
    for &(ln, v, c) in &entries {
        if v == 0 || v > n {
            return Err(parse_error(
                ln,
                format!("vertex {v} out of range 1..={n} (one line per vertex)"),
            ));
        }
        if colors[v - 1] != 0 {
            return Err(parse_error(ln, format!("vertex {v} colored twice")));
        }
        if c == 0 || c > k {
            return Err(parse_error(ln, format!("color {c} outside 1..={k}")));
        }
        colors[v - 1] = c;
    }
    VertexColoring::new(k, colors)
}

pub fn serialize_coloring(c: &VertexColoring) -> String {
    let mut out = format!("colors {}\n", c.k());
    for v in 0..c.len() {
        out.push_str(&format!("{} {}\n", v + 1, c.color(v)));
    }
    out
}

/// Sidecar index map for a gadget instance: comment lines tying every
/// gadget vertex back to its (copy, source vertex) or (copy, source edge)
/// origin, 1-indexed like the graph file.
pub fn serialize_gadget_map(gi: &crate::gadget::GadgetInstance) -> String {
    let mut out = String::from(
        "# gadget index map: `u <copy> <source-vertex> -> <id>` and\n# `x <copy> <source-edge> -> <id>`, all 1-indexed\n",
    );
    for i in 0..gi.copies() {
        for t in 0..gi.source_n() {
            out.push_str(&format!(
                "# u {} {} -> {}\n",
                i + 1,
                t + 1,
                gi.clique_vertex(i, t) + 1
            ));
        }
    }
    for i in 0..gi.copies() {
        for e in 0..gi.source_edges().len() {
            out.push_str(&format!(
                "# x {} {} -> {}\n",
                i + 1,
                e + 1,
                gi.edge_vertex(i, e) + 1
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let text = "graph 4 4\n1 2\n2 3\n3 4\n4 1\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.edge_count(), 4);
        // Serialization is canonical (sorted edges); parsing it back gives
        // the same graph and the same bytes.
        let canonical = serialize_graph(&g);
        assert_eq!(parse_graph(&canonical).unwrap(), g);
        assert_eq!(serialize_graph(&parse_graph(&canonical).unwrap()), canonical);
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# a four-cycle\ngraph 4 4\n\n1 2\n# middle\n2 3\n3 4\n4 1\n";
        assert!(parse_graph(text).is_ok());
    }

    #[test]
    fn graph_errors_carry_line_numbers() {
        let err = parse_graph("graph 3 2\n1 2\n1 5\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected: {other}"),
        }
        assert!(parse_graph("graph 3 2\n1 2\n2 1\n").is_err()); // duplicate
        assert!(parse_graph("graph 3 3\n1 2\n2 3\n").is_err()); // count mismatch
    }

    #[test]
    fn model_round_trip_matches_known_graph() {
        let text = "perm 4\n2 4 1 3\n";
        let m = parse_model(text).unwrap();
        assert_eq!(m.to_graph().edges(), vec![(0, 2), (1, 2), (1, 3)]);
        assert_eq!(serialize_model(&m), text);
    }

    #[test]
    fn model_rejects_bad_ranks() {
        assert!(parse_model("perm 3\n1 1 2\n").is_err());
        assert!(parse_model("perm 3\n1 2\n").is_err());
    }

    #[test]
    fn treepow_round_trip() {
        let text = "treepow 5 2\n1 2\n2 3\n3 4\n4 5\n";
        let (t, k) = parse_treepow(text).unwrap();
        assert_eq!(k, 2);
        assert_eq!(t.edges().len(), 4);
        assert_eq!(serialize_treepow(&t, k), text);
    }

    #[test]
    fn coloring_round_trip_and_missing_vertex() {
        let text = "colors 2\n1 1\n2 2\n3 1\n";
        let c = parse_coloring(text).unwrap();
        assert_eq!(c.k(), 2);
        assert_eq!(serialize_coloring(&c), text);

        // Vertex 3 missing: vertex 4 is out of range for 3 lines.
        let err = parse_coloring("colors 2\n1 1\n2 2\n4 1\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 4),
            other => panic!("unexpected: {other}"),
        }
    }

    #[test]
    fn gadget_map_mentions_every_vertex() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let gi = crate::gadget::build_split_gadget(&g);
        let map = serialize_gadget_map(&gi);
        assert_eq!(
            map.lines().filter(|l| l.starts_with("# u ")).count(),
            6
        );
        assert_eq!(
            map.lines().filter(|l| l.starts_with("# x ")).count(),
            3
        );
    }
}
