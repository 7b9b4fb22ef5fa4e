//! Cyclic elements of nilpotent orbits in semisimple Lie algebras.
//!
//! A nilpotent element e of a semisimple Lie algebra sits inside an
//! sl2-triple {e, h, f}; the ad h eigenspace decomposition is a Z-grading
//! of depth d, and elements e + F with F a non-zero element of the lowest
//! piece g_{-d} are the cyclic elements associated with e. This crate
//! classifies nilpotent orbits by the behaviour of their generic cyclic
//! elements (nilpotent / semisimple / regular semisimple / mixed), entirely
//! in exact arithmetic:
//!
//! - [`rootsys`]: root systems from Cartan matrices, extended and twisted
//!   affine diagrams, Dynkin-type recognition of subdiagrams.
//! - [`gradecalc`]: depth and grading dimensions from a weighted Dynkin
//!   diagram, the finite-order automorphism attached to a nilpotent, and
//!   partition-to-characteristic conversion.
//! - [`classical`]: the complete combinatorial classification for sl, so
//!   and sp in terms of Jordan-block partitions, with reducing subalgebras,
//!   projections and bushes.
//! - [`oracle`]: an independent ground truth built from exact rational
//!   matrix realizations; decides nilpotent/semisimple/regular for sampled
//!   cyclic elements with no floating point anywhere.
//! - [`kaccalc`]: finite-order automorphisms given by labeled affine
//!   diagrams, their fixed subalgebras, and regular Weyl-element data.
//! - [`catalog`]: bundled machine-readable tables for the exceptional
//!   algebras together with a verification suite cross-checking every
//!   recomputable entry.
//!
//! The `cyclotype` binary exposes all of this on the command line; the
//! `examples/` directory shows one runnable program per capability.

pub mod catalog;
pub mod crosscheck;
pub mod classical;
pub mod cli;
pub mod gradecalc;
pub mod kaccalc;
pub mod oracle;
pub mod ratmat;
pub mod rootsys;

pub use classical::{CyclicKind, CyclicType, Flavor, Partition};
pub use rootsys::{RootSystem, SimpleType};
