//! Combinatorial invariants of a built graph and checks of structural claims.

mod distance;
mod structure;

pub use distance::{diameter, find_triangle, girth, Girth, GirthResult};
pub use structure::{
    diagonal_partition, domination_number, locate_quaternions, universal_vertex, verify_clique,
    verify_equitable, CliqueCheck, Domination, EquitableViolation, DOMINATION_VERTEX_LIMIT,
};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::graph::ZdGraph;

/// Degree to number of vertices with that degree.
pub fn degree_histogram(g: &ZdGraph) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for v in 0..g.num_vertices() {
        *h.entry(g.degree(v)).or_insert(0) += 1;
    }
    h
}

pub fn edge_count(g: &ZdGraph) -> usize {
    g.num_edges()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantReport {
    pub degree_histogram: BTreeMap<usize, usize>,
    pub edge_count: usize,
    pub diameter: u32,
    pub girth: Girth,
    pub triangle: Option<[usize; 3]>,
    pub has_universal_vertex: bool,
    pub domination_number: Option<Domination>,
}

/// All invariants; the domination search runs only when `domination_cap` is given.
pub fn invariant_report(g: &ZdGraph, domination_cap: Option<u32>) -> Result<InvariantReport> {
    let gr = girth(g);
    Ok(InvariantReport {
        degree_histogram: degree_histogram(g),
        edge_count: edge_count(g),
        diameter: diameter(g)?,
        girth: gr.girth,
        triangle: gr.triangle,
        has_universal_vertex: universal_vertex(g).is_some(),
        domination_number: domination_cap.and_then(|cap| domination_number(g, cap)),
    })
}
