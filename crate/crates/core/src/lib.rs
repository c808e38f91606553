//! Contextuality analysis of orthogonality hypergraphs.
//!
//! The pipeline runs from a context hypergraph to its two-valued states
//! ([`states`]), a faithful orthogonal representation in `R^3`
//! ([`geometry`]), the correlation polytope of a pair configuration and its
//! facets ([`polytope`]), and rainbow 3-colorings ([`chromatic`]).
//! [`report`] drives everything for the `contextuality` binary.
//!
//! ```
//! use contextuality::hypergraph::mep;
//! use contextuality::states::enumerate_states;
//!
//! let t = enumerate_states(&mep());
//! assert_eq!(t.state_count(), 12);
//! ```

pub mod chromatic;
pub mod error;
pub mod geometry;
pub mod golden;
pub mod hypergraph;
pub mod polytope;
pub mod report;
pub mod states;

pub use error::{Error, Result};
pub use hypergraph::{Builtin, Hypergraph, VertexId};
