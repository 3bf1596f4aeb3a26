use std::collections::HashMap;

use super::ZdGraph;

/// Partition of the vertices by open neighborhood. Twins are never adjacent,
/// since a vertex is not its own neighbor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClasses {
    /// Class index of every vertex; classes are numbered by first appearance.
    pub class_of: Vec<usize>,
    /// Smallest vertex of each class.
    pub representatives: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl TwinClasses {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Whether some class has at least two members.
    pub fn has_twins(&self) -> bool {
        self.sizes.iter().any(|&s| s > 1)
    }
}

pub fn twin_classes(g: &ZdGraph) -> TwinClasses {
    let adj = g.adjacency();
    let mut index: HashMap<&[u64], usize> = HashMap::new();
    let mut class_of = Vec::with_capacity(g.num_vertices());
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    for v in 0..g.num_vertices() {
        let next = representatives.len();
        let c = *index.entry(adj.row(v)).or_insert(next);
        if c == next {
            representatives.push(v);
            sizes.push(0);
        }
        sizes[c] += 1;
        class_of.push(c);
    }
    TwinClasses {
        class_of,
        representatives,
        sizes,
    }
}
