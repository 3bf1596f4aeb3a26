use std::fmt;

use super::BitMatrix;
use crate::error::{usage, Result};
use crate::linalg::{IntMatrix, RealMatrix};
use crate::model::TypeClass;
use crate::ring::{LipschitzQuaternion, Modulus};

/// How a graph was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BuildMethod {
    /// Pairwise ring multiplication over all vertices.
    Brute,
    /// Type-level incidence on `P^1(F_p)`.
    Structured,
    /// Kronecker blow-up of the reduced model.
    Expanded,
    /// The hard-coded graph for `n = 2`.
    ExactG2,
    /// Read back from a file or assembled from an edge list.
    Imported,
}

impl fmt::Display for BuildMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BuildMethod::Brute => "brute",
            BuildMethod::Structured => "structured",
            BuildMethod::Expanded => "expanded",
            BuildMethod::ExactG2 => "exact_g2",
            BuildMethod::Imported => "imported",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    Quaternion(LipschitzQuaternion),
    /// Vertex `c` of the class `C_{L,M}`.
    Typed {
        class: TypeClass,
        scalar: u32,
    },
    Text(String),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Quaternion(q) => write!(f, "{q}"),
            VertexLabel::Typed { class, scalar } => write!(
                f,
                "({},{},{})",
                class.kernel.index(),
                class.image.index(),
                scalar
            ),
            VertexLabel::Text(s) => f.write_str(s),
        }
    }
}

/// A labeled simple graph with dense symmetric adjacency and zero diagonal.
#[derive(Clone, Debug)]
pub struct ZdGraph {
    modulus: Option<Modulus>,
    labels: Vec<VertexLabel>,
    adj: BitMatrix,
    method: BuildMethod,
    decision_tests: u64,
}

impl ZdGraph {
    pub(crate) fn from_parts(
        modulus: Option<Modulus>,
        labels: Vec<VertexLabel>,
        adj: BitMatrix,
        method: BuildMethod,
        decision_tests: u64,
    ) -> Self {
        debug_assert_eq!(labels.len(), adj.order());
        ZdGraph {
            modulus,
            labels,
            adj,
            method,
            decision_tests,
        }
    }

    /// A graph on `0..n` from undirected edges; labels default to the vertex index.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        labels: Option<Vec<VertexLabel>>,
    ) -> Result<Self> {
        let labels =
            labels.unwrap_or_else(|| (0..n).map(|i| VertexLabel::Text(i.to_string())).collect());
        if labels.len() != n {
            return Err(usage(format!("{} labels for {n} vertices", labels.len())));
        }
        let mut adj = BitMatrix::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(usage(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            if u == v {
                return Err(usage(format!("self-loop at vertex {u}")));
            }
            adj.set_sym(u, v);
        }
        Ok(Self::from_parts(
            None,
            labels,
            adj,
            BuildMethod::Imported,
            0,
        ))
    }

    pub fn modulus(&self) -> Option<&Modulus> {
        self.modulus.as_ref()
    }

    pub fn method(&self) -> BuildMethod {
        self.method
    }

    /// Adjacency decisions made by the builder: ring pair tests for brute
    /// force, ordered type-pair tests for the structured construction.
    pub fn decision_tests(&self) -> u64 {
        self.decision_tests
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.count_ones() / 2
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn position(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.row_count(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.ones(v)
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_vertices()).flat_map(move |u| {
            self.adj
                .ones(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        let n = self.num_vertices();
        let mut m = IntMatrix::zeros(n);
        for (u, v) in self.edges() {
            m[(u, v)] = 1;
            m[(v, u)] = 1;
        }
        m
    }

    pub fn to_real_matrix(&self) -> RealMatrix {
        self.to_int_matrix().to_real()
    }

    /// Same vertex count and identical adjacency bits; labels and provenance are ignored.
    pub fn same_adjacency(&self, other: &ZdGraph) -> bool {
        self.adj == other.adj
    }

    /// Whether the adjacency is symmetric with an empty diagonal.
    pub fn is_simple(&self) -> bool {
        let n = self.num_vertices();
        (0..n).all(|u| !self.adj.get(u, u) && self.adj.ones(u).all(|v| self.adj.get(v, u)))
    }
}
