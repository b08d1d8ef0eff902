//! Multicolor Turán numbers.
//!
//! Given graphs `F` and `G`, a *copy system* is a family of pairwise
//! edge-disjoint copies of `F` on the ground set `0..n`, each copy carrying its
//! own color. The system contains a *multicolor* `G` when some copy of `G` in
//! the union takes every edge from a different copy of `F`. The multicolor
//! Turán number `ex_F(n, G)` is the largest number of copies a system can
//! hold without a multicolor `G`; for `F = K_2` this is the ordinary Turán
//! number `ex(n, G)`.
//!
//! The crate is organised as follows:
//!
//! * [`graph`]: the [`Graph`] type, generators, blow-ups, homomorphisms,
//!   subgraph enumeration, `α`/`χ`, exact `ex(n, G)` and graph I/O.
//! * [`packing`]: [`CopySystem`] and the multicolor detector.
//! * [`optimizer`]: exact `ex_F(n, G)`, maximum and fractional packings and
//!   the table of closed-form bounds.
//! * [`constructions`]: explicit lower-bound constructions, each emitted as a
//!   verified certificate.
//! * [`hypergraph`]: linear hypergraphs, Berge copies and the correspondence
//!   with `K_r` copy systems.

mod budget;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod hypergraph;
pub mod optimizer;
pub mod packing;

pub use budget::SearchBudget;
pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexMap};
pub use hypergraph::{contains_berge, BergeWitness, LinearHypergraph};
pub use packing::{CopySystem, MulticolorWitness};
