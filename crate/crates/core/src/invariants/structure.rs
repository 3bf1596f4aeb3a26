use serde::Serialize;

use crate::error::{usage, Result};
use crate::graph::{VertexLabel, ZdGraph};
use crate::linalg::IntMatrix;
use crate::model::{find_iso_params, phi, type_label};
use crate::ring::LipschitzQuaternion;

/// A vertex whose neighbor count into some cell differs from its cell's first vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquitableViolation {
    pub vertex: usize,
    pub cell: usize,
    pub target_cell: usize,
    pub expected: i64,
    pub found: i64,
}

/// The quotient matrix of `partition` if it is equitable.
///
/// Errors if the cells are not a disjoint cover of the vertex set.
pub fn verify_equitable(
    g: &ZdGraph,
    partition: &[Vec<usize>],
) -> Result<std::result::Result<IntMatrix, EquitableViolation>> {
    let n = g.num_vertices();
    let mut cell_of = vec![usize::MAX; n];
    for (c, cell) in partition.iter().enumerate() {
        if cell.is_empty() {
            return Err(usage(format!("partition cell {c} is empty")));
        }
        for &v in cell {
            if v >= n {
                return Err(usage(format!("vertex {v} outside 0..{n}")));
            }
            if cell_of[v] != usize::MAX {
                return Err(usage(format!("vertex {v} lies in two cells")));
            }
            cell_of[v] = c;
        }
    }
    if let Some(v) = cell_of.iter().position(|&c| c == usize::MAX) {
        return Err(usage(format!("vertex {v} is in no cell")));
    }
    let r = partition.len();
    let mut q = IntMatrix::zeros(r);
    for (c, cell) in partition.iter().enumerate() {
        for (k, &v) in cell.iter().enumerate() {
            let mut counts = vec![0i64; r];
            for w in g.neighbors(v) {
                counts[cell_of[w]] += 1;
            }
            for (target, &found) in counts.iter().enumerate() {
                if k == 0 {
                    q[(c, target)] = found;
                } else if q[(c, target)] != found {
                    return Ok(Err(EquitableViolation {
                        vertex: v,
                        cell: c,
                        target_cell: target,
                        expected: q[(c, target)],
                        found,
                    }));
                }
            }
        }
    }
    Ok(Ok(q))
}

/// Splits an odd-prime graph into diagonal-type and off-diagonal-type vertices.
///
/// Typed labels are read directly; quaternion labels are classified through `phi`.
pub fn diagonal_partition(g: &ZdGraph) -> Result<[Vec<usize>; 2]> {
    let mut params = None;
    let mut cells = [Vec::new(), Vec::new()];
    for (v, label) in g.labels().iter().enumerate() {
        let diagonal = match label {
            VertexLabel::Typed { class, .. } => class.is_diagonal(),
            VertexLabel::Quaternion(x) => {
                let p = x.modulus();
                if params.is_none() {
                    params = Some(find_iso_params(p)?);
                }
                let m = phi(x, params.as_ref().expect("set above"))?;
                type_label(&m)?.0.is_diagonal()
            }
            VertexLabel::Text(t) => {
                return Err(usage(format!("vertex {t} carries no ring or type label")))
            }
        };
        cells[usize::from(!diagonal)].push(v);
    }
    Ok(cells)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueCheck {
    pub is_clique: bool,
    /// First non-adjacent pair in index order.
    pub missing: Option<(usize, usize)>,
}

/// Whether `set` is pairwise adjacent; repeated entries are ignored.
pub fn verify_clique(g: &ZdGraph, set: &[usize]) -> Result<CliqueCheck> {
    let n = g.num_vertices();
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(usage(format!("vertex {v} outside 0..{n}")));
    }
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    for (i, &u) in s.iter().enumerate() {
        if let Some(&v) = s[i + 1..].iter().find(|&&v| !g.is_adjacent(u, v)) {
            return Ok(CliqueCheck {
                is_clique: false,
                missing: Some((u, v)),
            });
        }
    }
    Ok(CliqueCheck {
        is_clique: true,
        missing: None,
    })
}

/// Vertex indices of ring elements in `g`; errors on an element that is not a vertex.
pub fn locate_quaternions(g: &ZdGraph, xs: &[LipschitzQuaternion]) -> Result<Vec<usize>> {
    let index: std::collections::HashMap<&LipschitzQuaternion, usize> = g
        .labels()
        .iter()
        .enumerate()
        .filter_map(|(i, l)| match l {
            VertexLabel::Quaternion(x) => Some((x, i)),
            _ => None,
        })
        .collect();
    xs.iter()
        .map(|x| {
            index
                .get(x)
                .copied()
                .ok_or_else(|| usage(format!("{x} is not a vertex of this graph")))
        })
        .collect()
}

/// First vertex adjacent to every other vertex.
pub fn universal_vertex(g: &ZdGraph) -> Option<usize> {
    let n = g.num_vertices();
    (0..n).find(|&v| g.degree(v) + 1 == n)
}

/// Largest vertex count for the exhaustive domination search.
pub const DOMINATION_VERTEX_LIMIT: usize = 40;

/// Outcome of the domination search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Domination {
    Exact(u32),
    /// No dominating set of size at most the cap exists.
    ExceedsCap(u32),
}

/// Minimum dominating set size, by iterative deepening up to `size_cap`.
///
/// A universal vertex settles the answer at 1 for any order. Otherwise the
/// search needs at most [`DOMINATION_VERTEX_LIMIT`] vertices and returns
/// `None` above it.
pub fn domination_number(g: &ZdGraph, size_cap: u32) -> Option<Domination> {
    let n = g.num_vertices();
    if n == 0 {
        return Some(Domination::Exact(0));
    }
    if size_cap == 0 {
        return Some(Domination::ExceedsCap(0));
    }
    if universal_vertex(g).is_some() {
        return Some(Domination::Exact(1));
    }
    if n > DOMINATION_VERTEX_LIMIT {
        return None;
    }
    let closed: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(1u64 << v, |m, w| m | 1 << w))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let reach = closed.iter().map(|m| m.count_ones()).max().unwrap_or(1);
    for k in 1..=size_cap {
        if dominate(&closed, all, 0, k, reach) {
            return Some(Domination::Exact(k));
        }
    }
    Some(Domination::ExceedsCap(size_cap))
}

/// Whether `left` more closed neighborhoods can cover `all` starting from `covered`.
/// Branches on the lowest undominated vertex: one of its closed neighbors must be chosen.
fn dominate(closed: &[u64], all: u64, covered: u64, left: u32, reach: u32) -> bool {
    let missing = all & !covered;
    if missing == 0 {
        return true;
    }
    if left == 0 || missing.count_ones() > left * reach {
        return false;
    }
    let u = missing.trailing_zeros() as usize;
    let mut cands = closed[u];
    while cands != 0 {
        let w = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        if dominate(closed, all, covered | closed[w], left - 1, reach) {
            return true;
        }
    }
    false
}
