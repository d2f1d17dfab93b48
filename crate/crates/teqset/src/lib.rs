//! Exact computation on small tournaments: equilibrium sets, minimal
//! retentive sets, canonical forms, and structural censuses.
//!
//! A tournament is a complete directed graph — every pair of vertices
//! is joined by exactly one arc. The library holds tournaments on up to
//! 16 vertices in bit-packed form ([`Tournament`], [`VertexSet`]) and
//! computes on them exactly:
//!
//! - [`Solver`] finds the equilibrium set and every minimal retentive
//!   set of a tournament, with memoization keyed on canonical forms so
//!   repeated subtournaments are solved once.
//! - [`iso`] canonicalizes tournaments and enumerates one
//!   representative per isomorphism class ([`enumerate`],
//!   [`enumerate_irreducible`]).
//! - [`DominationGraph`] extracts each vertex's captain — the source of
//!   its in-neighborhood — and classifies the resulting digraph.
//! - [`analysis`] builds the retentive-tournament census
//!   ([`beta_census`]), exhaustive and randomized uniqueness sweeps,
//!   and a structural audit of computed minimal sets.
//!
//! # Quick start
//!
//! ```
//! use teqset::{Solver, Tournament};
//!
//! let t = Tournament::parse("101").unwrap(); // 3-cycle
//! let solver = Solver::new();
//! let analysis = solver.analyze(&t);
//! assert_eq!(analysis.teq, t.vertex_set());
//! assert!(analysis.schwartz_ok);
//! ```
//!
//! # Runnable examples
//!
//! Each major capability has a walkthrough under `examples/`; run them
//! with `cargo run --release --example <name>`:
//!
//! - `enumerate` — isomorph-free generation and the class counts.
//! - `analyze` — equilibrium sets and minimal retentive sets, step by
//!   step on small tournaments.
//! - `domination` — captains, domination graphs, brooms, and sibling
//!   queries.
//! - `census` — the retentive-tournament census with its filter
//!   stages.
//! - `schwartz` — exhaustive uniqueness sweeps by size.
//! - `theorems` — randomized checks of the locally-transitive and
//!   spanning-cycle laws.
//! - `conjectures` — counterexample sweeps for three open uniqueness
//!   claims.
//! - `canonical` — canonical keys, isomorphism tests, and key
//!   stability.
//!
//! The same capabilities are scriptable through the `teqset` binary
//! (`gen`, `teq`, `domgraph`, `beta`, `schwartz`, `conjecture`,
//! `verify`, `canon`), which reads and writes one upper-triangle code
//! per line.

pub mod analysis;
pub mod domination;
pub mod error;
pub mod iso;
pub mod teq;
pub mod tournament;

pub use analysis::{
    audit_minimal_set_structure, beta_census, check_conjectures, fast_3bounded_check,
    has_nonspanning_domination_cycle, has_proper_bounded_retentive_subset,
    is_locally_bounded_retentive, random_locally_transitive,
    schwartz_exhaustive, verify_hamiltonian_domcycle, verify_locally_transitive, CensusMode,
    CensusOptions, CoexistenceRecord, ConjectureSweep, FilterReport, SweepVerdict, Violation,
};
pub use domination::{arc_parity, tri_captain, ArcParity, Broom, DominationGraph, StructureVerdict};
pub use error::{Error, Result};
pub use iso::{canonical_key, canonicalize, enumerate, enumerate_irreducible, is_isomorphic, CanonicalKey};
pub use teq::{count_size3_minimal_sets, is_minimal_retentive_triple, RequirementDigraph, RetentiveAnalysis, Solver};
pub use tournament::{Tournament, VertexSet, MAX_VERTICES};
