//! Exact spectral graph theory for graphs with free cyclic symmetries.
//!
//! The crate computes Laplacian spectra and characteristic polynomials with
//! arbitrary-precision arithmetic (no floating point on any decision path),
//! builds graphs from free Z_k actions via the k-symmetric join, and ships a
//! verification harness that checks the algebraic identities behind those
//! constructions on finite parameter grids.
//!
//! Modules:
//! - [`graph`]: simple undirected graphs, generators, products, joins,
//!   connectivity and primality witnesses.
//! - [`exact`]: big-integer/rational matrices, fraction-free determinants,
//!   exact characteristic polynomials, polynomial arithmetic.
//! - [`symmetry`]: free cyclic actions, bases, derived actions, the
//!   k-symmetric join.
//! - [`spectra`]: Laplacian matrices and spectra, equitable partitions,
//!   divisor matrices, spanning-tree counts.
//! - [`families`]: the C(n,m) / C(n,k,m) families, closed-form
//!   characteristic polynomials, integrality searches, verification suites.

pub mod exact;
pub mod families;
pub mod graph;
pub mod spectra;
pub mod symmetry;
