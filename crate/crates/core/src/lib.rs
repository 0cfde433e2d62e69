//! Exact-arithmetic combinatorics of Schubert polynomials.
//!
//! The library constructs Schubert polynomials through several independent
//! routes — divided differences, rc-graph enumeration, key-polynomial
//! decomposition via crystals, Kohnert diagrams, and balanced labelings —
//! and exposes the underlying combinatorial objects as first-class data.
//! All arithmetic is exact over the integers.

pub mod error;
pub mod perm;
pub mod shapes;
pub mod poly;
pub mod demazure;
pub mod word;
pub mod tableau;
pub mod jdt;
pub mod biword;
pub mod wiring;
pub mod rcgraph;
pub mod nilplactic;
pub mod keys;
pub mod splitting;
pub mod kohnert;
pub mod balanced;
pub mod json;
pub mod render;
pub mod verify;

pub use biword::{Biword, Diagram};
pub use error::{Error, Result};
pub use nilplactic::StableRcGraph;
pub use perm::Permutation;
pub use poly::{IntPolynomial, Monomial};
pub use rcgraph::RcGraph;
pub use shapes::{Composition, Partition};
pub use tableau::Tableau;
