//! Free crossed resolutions of finite groups given by presentations.
//!
//! Starting from `< X | R >`, the pipeline enumerates the group, chooses a
//! maximal tree of the Cayley graph and a logged filling `h1` of every
//! non-tree edge, and from these produces generators of the module of
//! identities among relations, a reduced generating set with an explicit
//! retraction, the relations among those generators, and further levels of
//! the resolution together with a contracting homotopy of its universal cover.
//!
//! Module arithmetic is generic over an exact integer [`Scalar`]; the aliases
//! below fix it to arbitrary precision, which is what the pipeline uses.

pub mod cli;
pub mod crossed;
pub mod error;
pub mod group;
pub mod lattice;
pub mod notation;
pub mod oracles;
pub mod rewriter;
pub mod ring;
pub mod scalar;
pub mod syzygy;
pub mod words;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Coefficient type used by the pipeline.
pub type Int = num_bigint::BigInt;
/// An element of `Z G` with arbitrary-precision coefficients.
pub type ZG = ring::GroupRingElt<Int>;
/// An element of a free `Z G`-module with arbitrary-precision coefficients.
pub type Module = ring::ModuleElt<Int>;
/// An integer lattice with arbitrary-precision entries.
pub type IntLattice = lattice::Lattice<Int>;
/// A `Z G`-orbit lattice with arbitrary-precision entries.
pub type ZGLattice = lattice::OrbitLattice<Int>;
