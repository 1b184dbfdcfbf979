//! Crystal graphs for general linear Lie superalgebras over linearly
//! ordered Z2-graded alphabets: tableau models (quasi-ribbon, semistandard,
//! kite), insertion and super RSK, enriched P-partitions, and exact
//! quasi-symmetric characters.
//!
//! Entry points:
//! - [`alphabet::GradedAlphabet`] builds the alphabet families
//!   (`mn:4,2`, `half:2`, `mixed:1,2`, `perm:mn:4,2:omega`).
//! - [`crystal`] applies raising/lowering operators to words, explores
//!   components, decomposes closed sets, and tests crystal equivalence.
//! - [`tableau`] enumerates the tableau models and their highest elements.
//! - [`insertion`] implements quasi-ribbon and column insertion with P/Q
//!   correspondences.
//! - [`rsk`] implements the matrix bicrystal and the super RSK map.
//! - [`ppartition`] covers labeled posets, enriched partitions, shuffle
//!   and branching decompositions, and tensor multiplicities.
//! - [`character`] computes exact characters, hook Schur polynomials, and
//!   the quasi-symmetric membership and basis-expansion checks.
//! - [`verify`] runs the named verification suites; see also the
//!   `superqsym` binary and the `examples/` directory.

pub mod alphabet;
pub mod character;
pub mod cli;
pub mod crystal;
pub mod error;
pub mod insertion;
pub mod ppartition;
pub mod rsk;
pub mod shape;
pub mod tableau;
pub mod verify;
pub mod weight;
pub mod word;

pub use alphabet::{AlphabetSpec, GradedAlphabet, Letter, Parity, PermSpec, SimpleRoot};
pub use error::{Error, Result};
pub use weight::{weight_order_geq, Weight};
pub use word::Word;
