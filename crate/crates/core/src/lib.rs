//! Split decomposition of distance-hereditary graphs and certified recognition
//! of graphs of linear rank-width at most one.
//!
//! A connected graph has linear rank-width 1 exactly when it is
//! distance-hereditary and its split decomposition tree is a path. The
//! pipeline in [`lrw::recognize`] follows that characterisation:
//!
//! 1. [`dh::pruning_sequence`] tests distance-heredity by pendant/twin
//!    elimination, falling back to [`dh::non_dh_obstruction`] on failure.
//! 2. [`split::canonical_decomposition_dh`] replays the elimination order
//!    backwards to build the canonical split decomposition.
//! 3. A path-shaped [`split::SplitTree`] yields a cutrank-1 ordering; a node of
//!    degree three or more yields a minimal induced obstruction.
//!
//! Every certificate can be re-checked with [`lrw::verify_certificate`], which
//! only relies on [`gf2`] and the brute-force references in [`oracle`].

mod bitset;
pub mod dh;
pub mod dot;
mod error;
pub mod gf2;
pub mod graph;
pub mod io;
pub mod lrw;
pub mod oracle;
pub mod split;

pub use bitset::BitSet;
pub use error::{Error, Location, Result};
pub use graph::Graph;
