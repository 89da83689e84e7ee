//! Exact combinatorics of matroid complexes of dimension at most one.
//!
//! Every rank-2 matroid complex on `n` vertices is, up to isomorphism, the
//! complete multipartite graph whose parts have sizes given by a partition
//! of `n`. This crate builds those complexes, recognises them, computes and
//! decides their h-vectors, counts them, writes down their Stanley–Reisner
//! ideals, and constructs pure (level) artinian monomial ideals realising
//! each h-vector as a Hilbert function. An exhaustive graph census in
//! [`oracle`] cross-checks all of it at small `n`.

pub mod classification;
pub mod complex;
pub mod error;
pub mod ideals;
pub mod matroid;
pub mod numbers;
pub mod oracle;
pub mod partition;
pub mod tables;

pub use classification::{HVectorMembership, MembershipMode, SanityReport};
pub use complex::{FVector, HVector, Relabeled, SimplicialComplex, VertexSet};
pub use error::{Error, Result};
pub use ideals::{Monomial, MonomialIdeal, SetPartition, SocleReport};
pub use matroid::{DegreeSequence, MSequence, MatroidTest};
pub use oracle::{CrosscheckReport, MatroidCensus};
pub use partition::Partition;
