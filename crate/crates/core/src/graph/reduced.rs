use super::{BitMatrix, BuildMethod, VertexLabel, ZdGraph};
use crate::error::Result;
use crate::linalg::IntMatrix;
use crate::model::TypeClass;
use crate::ring::Modulus;

/// The type-level matrices `H`, `D` and `B = (p-1) H - D` on the `(p+1)^2` types,
/// indexed in lexicographic (kernel, image) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedModel {
    pub p: u32,
    /// Type incidence: `h[(L,M),(L',M')] = 1` iff `M = L'` or `M' = L`.
    pub h: IntMatrix,
    /// Indicator of the diagonal types `(L, L)`.
    pub d: IntMatrix,
    /// Action of the adjacency matrix on class-constant vectors.
    pub b: IntMatrix,
}

pub fn build_reduced(p: u32) -> Result<ReducedModel> {
    Modulus::odd_prime(p)?;
    let types: Vec<TypeClass> = TypeClass::all(p).collect();
    let size = types.len();
    let mut h = IntMatrix::zeros(size);
    let mut d = IntMatrix::zeros(size);
    for (a, ta) in types.iter().enumerate() {
        for (b, tb) in types.iter().enumerate() {
            h[(a, b)] = ta.incident(tb) as i64;
        }
        d[(a, a)] = ta.is_diagonal() as i64;
    }
    let b = &h.scale(p as i64 - 1) - &d;
    Ok(ReducedModel { p, h, d, b })
}

/// The blow-up `H (x) J_{p-1} - D (x) I_{p-1}` as a graph, with the same
/// vertex order and labels as the structured construction.
pub fn expand_reduced(model: &ReducedModel) -> ZdGraph {
    let p = model.p;
    let k = (p - 1) as usize;
    let blown = &model.h.kron(&IntMatrix::ones(k)) - &model.d.kron(&IntMatrix::identity(k));
    let n = blown.order();
    let mut adj = BitMatrix::new(n);
    for i in 0..n {
        for (j, &x) in blown.row(i).iter().enumerate() {
            debug_assert!(x == 0 || x == 1);
            if x == 1 {
                adj.set(i, j);
            }
        }
    }
    let labels = TypeClass::all(p)
        .flat_map(|class| (1..p).map(move |scalar| VertexLabel::Typed { class, scalar }))
        .collect();
    ZdGraph::from_parts(Modulus::new(p).ok(), labels, adj, BuildMethod::Expanded, 0)
}
