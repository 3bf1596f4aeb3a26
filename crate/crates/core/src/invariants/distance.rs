use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{twin_classes, BitMatrix, ZdGraph};

/// Greatest distance between two vertices.
///
/// Vertices with equal open neighborhoods are collapsed first: twins are at
/// distance 2 from each other and at the same distance from everyone else.
/// BFS then runs on one representative per class, testing each unvisited
/// vertex's row against the frontier, which exits early on dense graphs.
pub fn diameter(g: &ZdGraph) -> Result<u32> {
    let n = g.num_vertices();
    if n <= 1 {
        return Ok(0);
    }
    let adj = g.adjacency();
    let classes = twin_classes(g);
    let reps = &classes.representatives;
    let twins = classes.has_twins();
    let k = reps.len();
    let mut quotient = BitMatrix::new(k);
    for (a, &u) in reps.iter().enumerate() {
        for (b, &v) in reps.iter().enumerate().skip(a + 1) {
            if adj.get(u, v) {
                quotient.set_sym(a, b);
            }
        }
    }
    let mut diam = 0;
    for s in 0..k {
        match eccentricity(&quotient, s) {
            Ok(e) => diam = diam.max(e),
            Err(t) => return Err(disconnected(g, reps[s], reps[t])),
        }
    }
    if twins {
        // twins share a neighbor unless they are isolated
        if let Some(v) = (0..n).find(|&v| adj.row_count(v) == 0) {
            let other = if v == 0 { 1 } else { 0 };
            return Err(disconnected(g, v, other));
        }
        diam = diam.max(2);
    }
    Ok(diam)
}

/// BFS depth from `s`, or an unreachable vertex.
fn eccentricity(adj: &BitMatrix, s: usize) -> std::result::Result<u32, usize> {
    let k = adj.order();
    let words = k.div_ceil(64);
    let mut frontier = adj.row(s).to_vec();
    let mut unvisited: Vec<usize> = (0..k).filter(|&v| v != s && !adj.get(s, v)).collect();
    let mut depth = 1;
    if frontier.iter().all(|&w| w == 0) {
        return match unvisited.first() {
            Some(&t) => Err(t),
            None => Ok(0),
        };
    }
    let mut next = vec![0u64; words];
    while !unvisited.is_empty() {
        next.iter_mut().for_each(|w| *w = 0);
        let before = unvisited.len();
        unvisited.retain(|&v| {
            let hit = adj.row(v).iter().zip(&frontier).any(|(a, b)| a & b != 0);
            if hit {
                next[v / 64] |= 1 << (v % 64);
            }
            !hit
        });
        if unvisited.len() == before {
            return Err(unvisited[0]);
        }
        std::mem::swap(&mut frontier, &mut next);
        depth += 1;
    }
    Ok(depth)
}

fn disconnected(g: &ZdGraph, u: usize, v: usize) -> Error {
    Error::Domain(format!(
        "graph is disconnected: no path between {} and {}",
        g.label(u),
        g.label(v)
    ))
}

/// Length of a shortest cycle; `Infinite` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Girth {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Serialized as an integer, or the string `"inf"`.
impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u32(*g),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Shortest cycle together with a triangle witness when the girth is 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GirthResult {
    pub girth: Girth,
    pub triangle: Option<[usize; 3]>,
}

pub fn girth(g: &ZdGraph) -> GirthResult {
    if let Some(t) = find_triangle(g) {
        return GirthResult {
            girth: Girth::Finite(3),
            triangle: Some(t),
        };
    }
    GirthResult {
        girth: shortest_cycle_bfs(g),
        triangle: None,
    }
}

/// First triangle `u < v < w` in lexicographic order.
pub fn find_triangle(g: &ZdGraph) -> Option<[usize; 3]> {
    let adj = g.adjacency();
    for (u, v) in g.edges() {
        if adj.rows_intersect(u, v) {
            let w = adj
                .row(u)
                .iter()
                .zip(adj.row(v))
                .enumerate()
                .find_map(|(i, (a, b))| {
                    let m = a & b;
                    (m != 0).then(|| i * 64 + m.trailing_zeros() as usize)
                })?;
            let mut t = [u, v, w];
            t.sort_unstable();
            return Some(t);
        }
    }
    None
}

/// BFS from every vertex; a non-tree edge `(x, y)` closes a walk of length
/// `d(x) + d(y) + 1`, and the minimum over all roots is the girth.
fn shortest_cycle_bfs(g: &ZdGraph) -> Girth {
    let n = g.num_vertices();
    let mut best = u32::MAX;
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for y in g.neighbors(x) {
                if dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if best == u32::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}
