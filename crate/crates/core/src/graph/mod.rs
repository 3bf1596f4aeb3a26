//! Zero-divisor graphs and their constructions.

mod bits;
mod build;
mod reduced;
mod twins;
mod zdgraph;

pub use bits::BitMatrix;
pub use build::{
    build_brute, build_g2, build_structured, clique_size, for_each_brute_edge, g2_labels,
    two_adic_clique, BuildOptions, CliqueWitness, G2_MATRIX,
};
pub use reduced::{build_reduced, expand_reduced, ReducedModel};
pub use twins::{twin_classes, TwinClasses};
pub use zdgraph::{BuildMethod, VertexLabel, ZdGraph};
