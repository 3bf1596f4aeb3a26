use super::{BitMatrix, BuildMethod, VertexLabel, ZdGraph};
use crate::error::{usage, Error, Result};
use crate::model::TypeClass;
use crate::ring::{enumerate_vertices, product_is_zero, LipschitzQuaternion, Modulus};

/// Flag name reported when a budget refuses a build.
pub const OVERRIDE_FLAG: &str = "--allow-large";

/// Default pair-test budget: all unordered pairs of `G_8` (2047 vertices).
const DEFAULT_PAIR_BUDGET: u64 = 2047 * 2046 / 2;

/// Ring elements enumerated before any pair test; `n <= 128`.
const MAX_RING_ORDER: u64 = 1 << 28;

/// Budget for brute-force construction.
#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub max_pair_tests: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_pair_tests: DEFAULT_PAIR_BUDGET,
        }
    }
}

impl BuildOptions {
    /// No pair-test limit.
    pub fn allow_large() -> Self {
        BuildOptions {
            max_pair_tests: u64::MAX,
        }
    }
}

fn brute_vertices(n: &Modulus, opts: &BuildOptions) -> Result<Vec<LipschitzQuaternion>> {
    let order = (n.value() as u64).pow(4);
    if order > MAX_RING_ORDER {
        return Err(Error::Resource {
            what: format!("enumerating L_{n}"),
            needed: order,
            limit: MAX_RING_ORDER,
            hint: OVERRIDE_FLAG,
        });
    }
    let verts = enumerate_vertices(n);
    let v = verts.len() as u64;
    let pairs = v * v.saturating_sub(1) / 2;
    if pairs > opts.max_pair_tests {
        return Err(Error::Resource {
            what: format!("brute-force G_{n} pair tests"),
            needed: pairs,
            limit: opts.max_pair_tests,
            hint: OVERRIDE_FLAG,
        });
    }
    Ok(verts)
}

fn stream_edges(coords: &[[u32; 4]], m: u32, mut edge: impl FnMut(usize, usize)) {
    for (u, x) in coords.iter().enumerate() {
        for (v, y) in coords.iter().enumerate().skip(u + 1) {
            if product_is_zero(x, y, m) || product_is_zero(y, x, m) {
                edge(u, v);
            }
        }
    }
}

fn raw_coords(verts: &[LipschitzQuaternion]) -> Vec<[u32; 4]> {
    verts.iter().map(LipschitzQuaternion::coords).collect()
}

/// Streams the edges of `G_n` as vertex-index pairs `(u, v)`, `u < v`, in
/// ascending order, without storing the adjacency matrix. Returns the vertices.
pub fn for_each_brute_edge(
    n: &Modulus,
    opts: &BuildOptions,
    edge: impl FnMut(usize, usize),
) -> Result<Vec<LipschitzQuaternion>> {
    let verts = brute_vertices(n, opts)?;
    stream_edges(&raw_coords(&verts), n.value(), edge);
    Ok(verts)
}

/// `G_n` by testing `uv = 0 or vu = 0` on every unordered vertex pair.
/// Vertices are in lexicographic `(a, b, c, d)` order.
pub fn build_brute(n: &Modulus, opts: &BuildOptions) -> Result<ZdGraph> {
    let verts = brute_vertices(n, opts)?;
    let mut adj = BitMatrix::new(verts.len());
    stream_edges(&raw_coords(&verts), n.value(), |u, v| adj.set_sym(u, v));
    let count = verts.len() as u64;
    let labels = verts.into_iter().map(VertexLabel::Quaternion).collect();
    Ok(ZdGraph::from_parts(
        Some(n.clone()),
        labels,
        adj,
        BuildMethod::Brute,
        count * count.saturating_sub(1) / 2,
    ))
}

/// `G_p` from type incidence: vertices labeled `(L, M, c)` in lexicographic
/// order, one block decision per ordered pair of types.
pub fn build_structured(p: u32) -> Result<ZdGraph> {
    let n = Modulus::odd_prime(p)?;
    let class = (p - 1) as usize;
    let types: Vec<TypeClass> = TypeClass::all(p).collect();
    let mut labels = Vec::with_capacity(types.len() * class);
    for t in &types {
        for c in 1..p {
            labels.push(VertexLabel::Typed {
                class: *t,
                scalar: c,
            });
        }
    }
    let mut adj = BitMatrix::new(labels.len());
    let mut tests = 0u64;
    for (a, ta) in types.iter().enumerate() {
        for (b, tb) in types.iter().enumerate() {
            tests += 1;
            let block = if a == b {
                if ta.is_diagonal() {
                    Block::CompleteMinusIdentity
                } else {
                    Block::Zero
                }
            } else if ta.incident(tb) {
                Block::Complete
            } else {
                Block::Zero
            };
            for i in 0..class {
                for j in 0..class {
                    let on = match block {
                        Block::Zero => false,
                        Block::Complete => true,
                        Block::CompleteMinusIdentity => i != j,
                    };
                    if on {
                        adj.set(a * class + i, b * class + j);
                    }
                }
            }
        }
    }
    Ok(ZdGraph::from_parts(
        Some(n),
        labels,
        adj,
        BuildMethod::Structured,
        tests,
    ))
}

enum Block {
    Zero,
    Complete,
    CompleteMinusIdentity,
}

/// Adjacency of `G_2` in the order `uv, u, u+uv, v, v+uv, u+v, u+v+uv` with `u = 1+i`, `v = 1+j`.
pub const G2_MATRIX: [[u8; 7]; 7] = [
    [0, 1, 1, 1, 1, 1, 1],
    [1, 0, 1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 1, 0, 0],
    [1, 0, 0, 1, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 1, 0],
];

/// The quaternions `uv, u, u+uv, v, v+uv, u+v, u+v+uv` modulo 2.
pub fn g2_labels() -> [LipschitzQuaternion; 7] {
    let two = Modulus::new(2).expect("2 is a valid modulus");
    let u = LipschitzQuaternion::new(&two, 1, 1, 0, 0);
    let v = LipschitzQuaternion::new(&two, 1, 0, 1, 0);
    let uv = u * v;
    [uv, u, u + uv, v, v + uv, u + v, u + v + uv]
}

/// The exact graph `G_2` (the friendship graph on three triangles).
pub fn build_g2() -> ZdGraph {
    let mut adj = BitMatrix::new(7);
    for (i, row) in G2_MATRIX.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if x == 1 {
                adj.set(i, j);
            }
        }
    }
    ZdGraph::from_parts(
        Some(Modulus::new(2).expect("2 is a valid modulus")),
        g2_labels()
            .into_iter()
            .map(VertexLabel::Quaternion)
            .collect(),
        adj,
        BuildMethod::ExactG2,
        0,
    )
}

/// `c_t = 2^(4 floor(t/2)) - 1`.
pub fn clique_size(t: u32) -> Result<u64> {
    if t < 2 {
        return Err(usage(format!("clique witness needs t >= 2, got {t}")));
    }
    if t > 31 {
        return Err(usage(format!(
            "clique size 2^(4 floor(t/2)) - 1 overflows u64 for t = {t}"
        )));
    }
    Ok((1u64 << (4 * (t / 2))) - 1)
}

/// Nonzero elements of `2^s L_{2^t}`, `s = ceil(t/2)`: a clique in `G_{2^t}`.
#[derive(Clone, Debug)]
pub struct CliqueWitness {
    pub t: u32,
    pub s: u32,
    pub vertex_set: Vec<LipschitzQuaternion>,
}

impl CliqueWitness {
    pub fn size(&self) -> usize {
        self.vertex_set.len()
    }

    /// Checks in the ring that every member is a vertex and all pairwise
    /// products vanish in both orders; returns the first failing pair.
    pub fn verify_algebraic(
        &self,
    ) -> std::result::Result<(), (LipschitzQuaternion, LipschitzQuaternion)> {
        for (i, x) in self.vertex_set.iter().enumerate() {
            if !x.is_vertex() {
                return Err((*x, *x));
            }
            for y in &self.vertex_set[i + 1..] {
                if !(*x * *y).is_zero() || !(*y * *x).is_zero() {
                    return Err((*x, *y));
                }
            }
        }
        Ok(())
    }
}

/// Largest `t` whose witness is materialized (`c_t` about a million).
const MAX_WITNESS_T: u32 = 11;

pub fn two_adic_clique(t: u32) -> Result<CliqueWitness> {
    let expected = clique_size(t)?;
    if t > MAX_WITNESS_T {
        return Err(Error::Resource {
            what: format!("materializing the clique witness for t = {t}"),
            needed: expected,
            limit: clique_size(MAX_WITNESS_T)?,
            hint: OVERRIDE_FLAG,
        });
    }
    let n = Modulus::new(1 << t)?;
    let s = t.div_ceil(2);
    let step = 1i64 << s;
    let k = 1i64 << (t - s);
    let mut vertex_set = Vec::with_capacity(expected as usize);
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                for d in 0..k {
                    let x = LipschitzQuaternion::new(&n, a * step, b * step, c * step, d * step);
                    if !x.is_zero() {
                        vertex_set.push(x);
                    }
                }
            }
        }
    }
    debug_assert_eq!(vertex_set.len() as u64, expected);
    Ok(CliqueWitness { t, s, vertex_set })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;

    fn degree_hist(g: &ZdGraph) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for v in 0..g.num_vertices() {
            *h.entry(g.degree(v)).or_default() += 1;
        }
        h
    }

    #[test]
    fn brute_small_cases() {
        let opts = BuildOptions::default();
        let g = build_brute(&Modulus::new(2).unwrap(), &opts).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (7, 9));
        let g = build_brute(&Modulus::new(3).unwrap(), &opts).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (32, 220));
        assert_eq!(g.decision_tests(), 496);
        assert!(g.is_simple());
        let g = build_brute(&Modulus::new(5).unwrap(), &opts).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (144, 3156));
    }

    #[test]
    fn brute_budget_names_flag() {
        let err = build_brute(&Modulus::new(9).unwrap(), &BuildOptions::default()).unwrap_err();
        assert!(err.to_string().contains("--allow-large"), "{err}");
        let tight = BuildOptions { max_pair_tests: 10 };
        assert!(build_brute(&Modulus::new(3).unwrap(), &tight).is_err());
    }

    #[test]
    fn streamed_edges_match_matrix() {
        let n = Modulus::new(4).unwrap();
        let mut edges = Vec::new();
        for_each_brute_edge(&n, &BuildOptions::default(), |u, v| edges.push((u, v))).unwrap();
        let g = build_brute(&n, &BuildOptions::default()).unwrap();
        assert_eq!(edges, g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn structured_examples() {
        let g = build_structured(3).unwrap();
        assert_eq!(g.num_vertices(), 32);
        assert_eq!(degree_hist(&g), BTreeMap::from([(13, 8), (14, 24)]));
        assert_eq!(g.decision_tests(), 256);
        assert!(g.is_simple());
        let g = build_structured(5).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (144, 3156));
        let g = build_structured(7).unwrap();
        assert_eq!(degree_hist(&g), BTreeMap::from([(89, 48), (90, 336)]));
        assert!(build_structured(6).is_err());
        assert!(build_structured(2).is_err());
    }

    #[test]
    fn structured_degree_and_edge_laws() {
        for p in [3usize, 5, 7, 11] {
            let g = build_structured(p as u32).unwrap();
            for v in 0..g.num_vertices() {
                let VertexLabel::Typed { class, .. } = g.label(v) else {
                    panic!("structured graphs carry type labels")
                };
                let expected = if class.is_diagonal() {
                    2 * p * p - p - 2
                } else {
                    2 * p * p - p - 1
                };
                assert_eq!(g.degree(v), expected);
            }
            assert_eq!(
                g.num_edges(),
                (p * p - 1) * (2 * p * p * p + p * p - 2 * p - 2) / 2
            );
        }
    }

    #[test]
    fn g2_examples() {
        let g = build_g2();
        assert!((1..7).all(|v| g.is_adjacent(0, v)));
        assert!(g.is_adjacent(1, 2));
        assert!(!g.is_adjacent(1, 3));
        assert_eq!(g.label(0).to_string(), "1+i+j+k");
        assert!(g.is_simple());
    }

    #[test]
    fn g2_matches_brute_under_relabeling() {
        let exact = build_g2();
        let brute = build_brute(&Modulus::new(2).unwrap(), &BuildOptions::default()).unwrap();
        let pos: Vec<usize> = exact
            .labels()
            .iter()
            .map(|l| brute.position(l).unwrap())
            .collect();
        for i in 0..7 {
            for j in 0..7 {
                assert_eq!(exact.is_adjacent(i, j), brute.is_adjacent(pos[i], pos[j]));
            }
        }
    }

    #[test]
    fn clique_witness_sizes() {
        assert!(two_adic_clique(1).is_err());
        for (t, size) in [(2, 15), (3, 15), (4, 255)] {
            let w = two_adic_clique(t).unwrap();
            assert_eq!(w.size(), size);
            assert_eq!(clique_size(t).unwrap(), size as u64);
            assert!(w.verify_algebraic().is_ok());
        }
        assert!(matches!(two_adic_clique(12), Err(Error::Resource { .. })));
    }
}
