//! Decision procedures for Artin groups defined by labeled simplicial
//! graphs.
//!
//! A finite simplicial graph with integer edge labels `m >= 2` presents an
//! Artin group: vertices generate, and each edge `{u, v}` labeled `m`
//! imposes the relation `u v u ... = v u v ...` (alternating words of
//! length `m`). This crate decides structural properties of the group
//! directly on the graph: coherence and freeness of the derived subgroup,
//! the abelianization, amalgam and direct-product decompositions with the
//! kernel of the associated tree action, and — for even FC-type groups —
//! centralizer structure, normalizer bounds, and acylindricity reports.
//!
//! Every operation is a pure function over immutable data and safe to call
//! concurrently. All set-valued output is ordered by the vertex order of
//! the input, and every search breaks ties canonically, so results are
//! deterministic byte for byte.
//!
//! ```rust
//! use artin_core::{classifier, decompose, presentation, LabeledGraph};
//!
//! # fn main() -> artin_core::Result<()> {
//! // A path with both labels 2: the right-angled group over x - c - y.
//! let g = LabeledGraph::parse_json(
//!     r#"{"vertices":["x","c","y"],
//!         "edges":[{"u":"x","v":"c","m":2},{"u":"c","v":"y","m":2}]}"#,
//! )?;
//! assert!(classifier::coherence(&g).coherent);
//! let tree = decompose::coherent_decomposition(&g)?;
//! assert_eq!(presentation::render_tree(&tree), "A{x,c} *_{A{c}} A{c,y}");
//! # Ok(())
//! # }
//! ```

#![forbid(unsafe_code)]
// Index loops over symmetric adjacency matrices read better than iterator
// chains here.
#![allow(clippy::needless_range_loop)]

pub mod abelianize;
pub mod classifier;
pub mod decompose;
pub mod error;
pub mod evenfc;
pub mod graph;
pub mod oracles;
pub mod presentation;
pub mod word;

pub use error::{Error, ErrorCategory, Result};
pub use graph::{LabeledGraph, VertexSet};
