//! Exact computation of automorphism groups of hyperelliptic curves over
//! finite fields, together with the decision tables that say when such a
//! group lifts to characteristic zero.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: prime
//! and extension field arithmetic, integer and `Z[sqrt(d)]` polynomials, and
//! finite groups given by their Cayley tables.
//!
//! The layers, bottom up:
//!
//! * [`algebra`]: `F_{p^m}` with a canonical modulus, square roots,
//!   subfield embeddings and the quadratic ring `Z[sqrt(d)]`.
//! * [`poly`]: polynomials over `F_{p^m}` and over `Z[sqrt(d)]`, reduction
//!   mod p, squarefree decomposition and root finding.
//! * [`curve`]: the curve `y^2 = f(x)`, its branch locus, Moebius maps and
//!   the reduced and full automorphism groups.
//! * [`groups`]: Cayley tables, reference groups, isomorphism testing,
//!   presentations and subgroup enumeration.
//! * [`rules`]: liftability and Oort-group decisions.
//! * [`families`]: the explicit A4/S4/A5 invariant families and their
//!   reductions modulo 3 and 5.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod curve;
pub mod error;
pub mod families;
pub mod groups;
pub mod poly;
pub mod rules;

pub use error::{Error, Result};

pub use num_bigint::BigInt;
