//! Exact game values for the mixed vertex/edge deletion game on graphs.
//!
//! Left deletes a vertex with its incident edges, Right deletes an edge, and
//! no deletion may leave a vertex isolated. Three rule variants are
//! supported (see [`graphgames::VariantKind`]). Positions are evaluated to
//! canonical short-game values ([`cgt`]), atomic weights are computed for
//! all-small positions ([`atomic`]), and the [`verify`] module reproduces
//! the known winner and atomic-weight results for the standard graph
//! families.

pub mod atomic;
pub mod cgt;
pub mod engine;
pub mod error;
pub mod families;
pub mod graphgames;
pub mod input;
pub mod output;
pub mod verify;

pub use error::{Error, Result};
