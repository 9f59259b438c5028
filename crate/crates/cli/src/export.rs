//! Graph serialization: flat edge lists, DIMACS, and graph6, plus the
//! edge-list reader used by the rank command.

use std::io::{self, BufRead, Write};

use bentsrg_core::pds::Graph;
use bentsrg_core::Error;

/// One `u v` pair per line, 0-based ids, u < v, ascending.
pub fn write_edge_list(graph: &Graph, mut out: impl Write) -> io::Result<()> {
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

/// DIMACS: a problem line followed by 1-based `e u v` lines.
pub fn write_dimacs(graph: &Graph, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "c {}", graph.provenance())?;
    writeln!(out, "p edge {} {}", graph.vertex_count(), graph.edge_count())?;
    for (u, v) in graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

/// graph6: size header, then the upper triangle in column order packed six
/// bits per printable byte.
pub fn write_graph6(graph: &Graph, mut out: impl Write) -> io::Result<()> {
    let n = graph.vertex_count() as usize;
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph6 long-size encoding not needed at desk scale");
        bytes.push(126);
        bytes.push(((n >> 12) & 63) as u8 + 63);
        bytes.push(((n >> 6) & 63) as u8 + 63);
        bytes.push((n & 63) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if graph.adjacent(i as u32, j as u32) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((group << (6 - filled)) + 63);
    }
    out.write_all(&bytes)?;
    writeln!(out)
}

/// Parse a flat edge list; `#` starts a comment. Vertex count defaults to
/// one past the largest id seen.
pub fn read_edge_list(
    input: impl BufRead,
    vertices: Option<u32>,
    provenance: &str,
) -> Result<Graph, Error> {
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut max_id = 0u32;
    for line in input.lines() {
        let line = line.map_err(|e| Error::BadConnectionSet(format!("read error: {e}")))?;
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<u32, Error> {
            tok.and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::BadConnectionSet(format!("bad edge line `{line}`")))
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        max_id = max_id.max(u).max(v);
        edges.push((u, v));
    }
    let v = vertices.unwrap_or(if edges.is_empty() { 0 } else { max_id + 1 });
    Graph::from_edges(v, edges, provenance)
}
