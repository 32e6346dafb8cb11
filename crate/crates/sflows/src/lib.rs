//! Exact counting of nowhere-zero Z_q-flows on pure simplicial
//! complexes.
//!
//! A flow assigns a residue mod q to every facet so that the signed
//! ridge-by-facet boundary matrix maps the assignment to zero; it is
//! nowhere-zero when every residue is nonzero. This crate counts such
//! flows by three independent routes and studies the count as a
//! function of q:
//!
//! - [`flows::brute_force_count`] enumerates, either over the full
//!   residue space or over the kernel subgroup mod q read off the
//!   Smith normal form;
//! - [`flows::inclusion_exclusion_count`] sieves kernel counts over
//!   facet subsets, exact for every modulus;
//! - [`flows::flow_polynomial`] evaluates the Tutte polynomial of the
//!   boundary-column matroid at (0, 1-q) with the balancing sign,
//!   certified at primes above a subdeterminant bound.
//!
//! [`quasipoly::fit_flow_counts`] fits the count sequence as a
//! quasipolynomial in q, and [`homology`] classifies triangulated
//! pseudomanifolds to apply the closed-form counts that hold there.
//! All arithmetic is exact; there is no floating point in the crate.
//!
//! The `examples/` directory demonstrates each capability end to end;
//! the `sflows` binary exposes the same pipelines as subcommands.

pub mod boundary;
pub mod cli;
pub mod complex;
pub mod error;
pub mod fixtures;
pub mod flows;
pub mod homology;
pub mod linalg;
pub mod matroid;
pub mod poly;
pub mod quasipoly;

pub use boundary::{boundary_matrix, cone_ordering, BlockDescriptor, BoundaryMatrix};
pub use complex::{Face, SimplicialComplex};
pub use error::{Error, Result};
pub use flows::{FlowCount, FlowVector, Limits, Method};
pub use matroid::{BivariatePolynomial, ColumnMatroid};
pub use quasipoly::Quasipolynomial;
