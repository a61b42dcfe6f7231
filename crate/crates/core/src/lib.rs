//! Homomorphisms of directed graphs and finite duals of infinite families.
//!
//! The crate decides `G -> H` for small digraphs, computes cores, encodes
//! oriented paths as words over `{+, -}`, decides membership queries for
//! path and tree families through automata and fixpoints, builds explicit
//! homomorphisms into known duals, and verifies duality pairs exhaustively
//! on all small digraphs.

pub mod automata;
pub(crate) mod bitset;
pub mod cli;
pub mod cores;
pub mod digraph;
pub mod error;
pub mod families;
pub mod pathwords;
pub mod verify;

pub use digraph::{hom_exists, is_homomorphism, DiGraph, GraphBuilder, Vertex, VertexMap};
pub use error::{Error, Result};
pub use pathwords::{word, Sign, Word};
