//! Combinatorics of diagram-based handle structures for composite knots:
//! diagrams and their faces, the handle structure read off a diagram,
//! block vectors and their reconstruction, disjointness graphs, τ-point
//! moves, piece models with crossing budgets, and the end-to-end check
//! `c > S/16` for connected sums.

pub mod bound;
pub mod compat;
pub mod diagram;
pub mod disk;
pub mod fixtures;
pub mod handle;
pub mod models;
pub mod moves;

pub use diagram::{connected_sum, parse_gauss_code, parse_pd_code, Diagram};
pub use handle::{build_d_structure, DStructure, HandleId};
