//! Zero-divisor graphs of the Lipschitz quaternion rings `L_n = Z_n[i, j, k]`
//! and their adjacency spectra.
//!
//! ```
//! use zdq::graph::build_structured;
//! use zdq::spectral::spectral_radius_closed;
//!
//! let g = build_structured(3)?;
//! assert_eq!((g.num_vertices(), g.num_edges()), (32, 220));
//! assert_eq!(format!("{:.4}", spectral_radius_closed(3)?), "13.7614");
//! # Ok::<(), zdq::Error>(())
//! ```

pub mod error;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod model;
pub mod report;
pub mod ring;
pub mod spectral;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};

// The guide's snippets run as doctests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/ring.md")]
    mod ring {}
    #[doc = include_str!("../../../book/src/matrix_model.md")]
    mod matrix_model {}
    #[doc = include_str!("../../../book/src/construction.md")]
    mod construction {}
    #[doc = include_str!("../../../book/src/spectrum.md")]
    mod spectrum {}
    #[doc = include_str!("../../../book/src/energy.md")]
    mod energy {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
