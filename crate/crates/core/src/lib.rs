//! Exact computation of Buchstaber-type invariants of finite simplicial
//! complexes.
//!
//! The central quantity is the minimal `l` admitting a characteristic map of a
//! complex `K` into the universal complex over `GF(2)^l` (the real case) or
//! over the integer lattice `Z^l`. The real Buchstaber number is then
//! `s_R(K) = m - r_R(K)` where `m` is the vertex count. Everything here is
//! exact: bitmask linear algebra over GF(2), arbitrary-precision integer
//! elimination on the lattice side, and pruned backtracking searches that
//! report `found / exhausted / out of budget` outcomes.
//!
//! Module map:
//! - [`complex`] — finite simplicial complexes, skeleton/join/link, simplicial
//!   maps, nondegeneracy, chromatic number;
//! - [`gf2`] — GF(2) vectors as bitmasks, rank, and GF(2^q) scalar arithmetic;
//! - [`lattice`] — primitivity, unimodular sets over `Z`, mod-2 reduction and
//!   0/1 lifting;
//! - [`universal`] — the universal complexes `RU_l` (explicit) and `U_l`
//!   (predicate-level), link equivalences and join embeddings;
//! - [`invariants`] — characteristic maps, `r_R`, `s_R`, integer `r` bounds,
//!   q-regular chromatic numbers, spread colorings, obstruction lower bounds,
//!   and the non-additivity counterexample pipeline;
//! - [`goodpair`] — good pairs of vector sets and their transformation
//!   calculus, plus join additivity for complete graphs;
//! - [`catalog`] — named example complexes (cycles, complete graphs, Petersen,
//!   Grötzsch, simplices and their skeletons).

pub mod budget;
pub mod catalog;
pub mod complex;
pub mod gf2;
pub mod goodpair;
pub mod invariants;
pub mod lattice;
pub mod universal;

pub use budget::{Budget, SearchOutcome};
pub use complex::{Simplex, SimplicialComplex, VertexMap};
pub use gf2::BitVector;
pub use lattice::IntVector;
