//! Graph interchange formats: edge list, Matrix Market and GraphML.
//!
//! Writers are deterministic: edges in ascending `(u, v)` order, vertices in index order.

use std::io::{BufRead, Write};

use quick_xml::escape::escape;
use quick_xml::events::Event;
use quick_xml::Reader;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{VertexLabel, ZdGraph};

pub const MATRIX_MARKET_HEADER: &str = "%%MatrixMarket matrix coordinate pattern symmetric";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    Edgelist,
    MatrixMarket,
    Graphml,
}

impl GraphFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(GraphFormat::Edgelist),
            "matrixmarket" | "mtx" => Ok(GraphFormat::MatrixMarket),
            "graphml" => Ok(GraphFormat::Graphml),
            other => Err(crate::error::usage(format!(
                "unknown format {other:?}; expected edgelist, matrixmarket or graphml"
            ))),
        }
    }
}

pub fn write_graph(g: &ZdGraph, format: GraphFormat, out: &mut impl Write) -> Result<()> {
    match format {
        GraphFormat::Edgelist => write_edgelist(g, out),
        GraphFormat::MatrixMarket => write_matrix_market(g, out),
        GraphFormat::Graphml => write_graphml(g, out),
    }
}

/// Reads any format; an edge list takes its vertex count from the largest index.
pub fn read_graph(format: GraphFormat, input: impl BufRead) -> Result<ZdGraph> {
    match format {
        GraphFormat::Edgelist => read_edgelist(input, None),
        GraphFormat::MatrixMarket => read_matrix_market(input),
        GraphFormat::Graphml => read_graphml(input),
    }
}

/// One `u v` line per edge, `u < v`, 0-based.
pub fn write_edgelist(g: &ZdGraph, out: &mut impl Write) -> Result<()> {
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

/// Isolated vertices beyond the largest listed index need `num_vertices`.
pub fn read_edgelist(input: impl BufRead, num_vertices: Option<usize>) -> Result<ZdGraph> {
    let mut edges = Vec::new();
    let mut max = None;
    for (lineno, line) in input.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (u, v) = parse_pair(line, lineno + 1)?;
        max = max.max(Some(u.max(v)));
        edges.push((u, v));
    }
    let n = match (num_vertices, max) {
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => 0,
    };
    ZdGraph::from_edges(n, edges, None)
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut field = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::Parse(format!("line {lineno}: expected two indices")))?
            .parse()
            .map_err(|e| Error::Parse(format!("line {lineno}: {e}")))
    };
    let pair = (field()?, field()?);
    if it.next().is_some() {
        return Err(Error::Parse(format!("line {lineno}: trailing fields")));
    }
    Ok(pair)
}

/// Header, `|V| |V| |E|`, then 1-based lower-triangle pairs `i j` with `i > j`,
/// ascending by row then column.
pub fn write_matrix_market(g: &ZdGraph, out: &mut impl Write) -> Result<()> {
    let n = g.num_vertices();
    writeln!(out, "{MATRIX_MARKET_HEADER}")?;
    writeln!(out, "{n} {n} {}", g.num_edges())?;
    let adj = g.adjacency();
    for i in 0..n {
        for j in adj.ones(i).take_while(|&j| j < i) {
            writeln!(out, "{} {}", i + 1, j + 1)?;
        }
    }
    Ok(())
}

pub fn read_matrix_market(input: impl BufRead) -> Result<ZdGraph> {
    let mut lines = input.lines().enumerate();
    let header = match lines.next() {
        Some((_, l)) => l?,
        None => return Err(Error::Parse("empty Matrix Market input".into())),
    };
    if !header.trim().eq_ignore_ascii_case(MATRIX_MARKET_HEADER) {
        return Err(Error::Parse(format!(
            "unsupported Matrix Market header {header:?}"
        )));
    }
    let mut dims = None;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        let lineno = lineno + 1;
        match dims {
            None => {
                let f: Vec<&str> = line.split_whitespace().collect();
                let parsed: std::result::Result<Vec<usize>, _> =
                    f.iter().map(|x| x.parse::<usize>()).collect();
                match parsed.as_deref() {
                    Ok([r, c, nnz]) if r == c => dims = Some((*r, *nnz)),
                    _ => {
                        return Err(Error::Parse(format!(
                            "line {lineno}: expected a square dimension line, got {line:?}"
                        )))
                    }
                }
            }
            Some((n, _)) => {
                let (i, j) = parse_pair(line, lineno)?;
                if i == 0 || j == 0 || i > n || j > n {
                    return Err(Error::Parse(format!(
                        "line {lineno}: index outside 1..={n}"
                    )));
                }
                edges.push((i - 1, j - 1));
            }
        }
    }
    let (n, nnz) = dims.ok_or_else(|| Error::Parse("missing dimension line".into()))?;
    if edges.len() != nnz {
        return Err(Error::Parse(format!(
            "declared {nnz} entries, found {}",
            edges.len()
        )));
    }
    ZdGraph::from_edges(n, edges, None)
}

/// Undirected GraphML with a string `label` attribute per node; node ids are `n0, n1, ...`.
pub fn write_graphml(g: &ZdGraph, out: &mut impl Write) -> Result<()> {
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        out,
        r#"<graphml xmlns="http://graphml.graphdrawing.org/xmlns">"#
    )?;
    writeln!(
        out,
        r#"  <key id="label" for="node" attr.name="label" attr.type="string"/>"#
    )?;
    writeln!(out, r#"  <graph id="G" edgedefault="undirected">"#)?;
    for (v, label) in g.labels().iter().enumerate() {
        let text = label.to_string();
        writeln!(
            out,
            r#"    <node id="n{v}"><data key="label">{}</data></node>"#,
            escape(&text)
        )?;
    }
    for (u, v) in g.edges() {
        writeln!(out, r#"    <edge source="n{u}" target="n{v}"/>"#)?;
    }
    writeln!(out, "  </graph>")?;
    writeln!(out, "</graphml>")?;
    Ok(())
}

/// Nodes keep their document order; labels come back as text.
pub fn read_graphml(input: impl BufRead) -> Result<ZdGraph> {
    let mut reader = Reader::from_reader(input);
    reader.config_mut().trim_text(true);
    let mut buf = Vec::new();
    let mut ids: std::collections::HashMap<String, usize> = std::collections::HashMap::new();
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut raw_edges: Vec<(String, String)> = Vec::new();
    let mut label_key = "label".to_string();
    let mut current_node: Option<usize> = None;
    let mut in_label = false;
    let xml_err = |e: quick_xml::Error| Error::Parse(format!("GraphML: {e}"));
    loop {
        let event = reader.read_event_into(&mut buf).map_err(xml_err)?;
        match &event {
            Event::Start(e) | Event::Empty(e) => {
                let attr = |name: &str| -> Result<Option<String>> {
                    match e.try_get_attribute(name).map_err(|e| xml_err(e.into()))? {
                        Some(a) => Ok(Some(a.unescape_value().map_err(xml_err)?.into_owned())),
                        None => Ok(None),
                    }
                };
                let empty = matches!(event, Event::Empty(_));
                match e.local_name().as_ref() {
                    b"key" => {
                        if attr("attr.name")?.as_deref() == Some("label")
                            && attr("for")?.as_deref() != Some("edge")
                        {
                            if let Some(id) = attr("id")? {
                                label_key = id;
                            }
                        }
                    }
                    b"node" => {
                        let id = attr("id")?
                            .ok_or_else(|| Error::Parse("GraphML: node without id".into()))?;
                        let idx = labels.len();
                        if ids.insert(id.clone(), idx).is_some() {
                            return Err(Error::Parse(format!("GraphML: duplicate node id {id:?}")));
                        }
                        labels.push(None);
                        current_node = (!empty).then_some(idx);
                    }
                    b"edge" => {
                        let s = attr("source")?;
                        let t = attr("target")?;
                        match (s, t) {
                            (Some(s), Some(t)) => raw_edges.push((s, t)),
                            _ => {
                                return Err(Error::Parse("GraphML: edge without endpoints".into()))
                            }
                        }
                    }
                    b"data" => {
                        in_label = !empty
                            && current_node.is_some()
                            && attr("key")?.as_deref() == Some(label_key.as_str());
                    }
                    _ => {}
                }
            }
            Event::Text(t) if in_label => {
                if let Some(v) = current_node {
                    let text = t.unescape().map_err(xml_err)?.into_owned();
                    labels[v].get_or_insert_with(String::new).push_str(&text);
                }
            }
            Event::End(e) => match e.local_name().as_ref() {
                b"node" => current_node = None,
                b"data" => in_label = false,
                _ => {}
            },
            Event::Eof => break,
            _ => {}
        }
        buf.clear();
    }
    let lookup = |id: &str| {
        ids.get(id)
            .copied()
            .ok_or_else(|| Error::Parse(format!("GraphML: edge refers to unknown node {id:?}")))
    };
    let edges = raw_edges
        .iter()
        .map(|(s, t)| Ok((lookup(s)?, lookup(t)?)))
        .collect::<Result<Vec<_>>>()?;
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| VertexLabel::Text(l.unwrap_or_else(|| i.to_string())))
        .collect();
    ZdGraph::from_edges(ids.len(), edges, Some(labels))
}
