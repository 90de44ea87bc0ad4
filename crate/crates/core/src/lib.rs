//! Exact computation of rainbow connection numbers and their list variants.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`families`], [`iso`]: graphs, named families, isomorphism;
//! * [`colour`], [`rainbow`]: colourings and their verdicts;
//! * [`search`], [`exact`]: backtracking search and `rc`/`src`;
//! * [`lists`], [`listsolve`], [`poly`], [`sdr`]: list assignments and the
//!   list parameters;
//! * [`constructions`]: explicit colouring procedures.

pub mod colour;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod iso;
pub mod lists;
pub mod listsolve;
pub mod poly;
pub mod rainbow;
pub mod sdr;
pub mod search;

pub use colour::{Colour, ColourSet, EdgeColouring, Property};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{DistanceMatrix, EdgeId, Graph, VertexId, INFINITY};
