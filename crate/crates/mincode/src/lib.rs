//! Construction and exhaustive verification of minimal linear codes over
//! small finite fields.
//!
//! The crate builds families of linear codes over GF(q) (simplex,
//! Solomon-Stiffler, even-weight, dual-BCH trace codes), transforms them with
//! the generator-matrix extension that turns a code satisfying the
//! Ashikhmin-Barg condition into a minimal code violating it (plus a
//! self-orthogonal variant and a simplex-complement transform), and verifies
//! every claimed parameter, weight distribution and minimality property by
//! brute-force enumeration.
//!
//! Modules:
//!
//! - [`galois`]: exact arithmetic in GF(p^m), q <= 512, table-driven.
//! - [`linalg`]: vectors, matrices, reduced row echelon form, Gram matrices,
//!   weights and support masks.
//! - [`codes`]: the [`codes::LinearCode`] abstraction, codeword enumeration,
//!   weight distributions, projective representatives.
//! - [`constructions`]: the code families and transforms, closed-form
//!   parameter calculators for the named families.
//! - [`analysis`]: minimality oracle, Ashikhmin-Barg test, Griesmer bound,
//!   consolidated [`analysis::CodeReport`].
//! - [`cli`]: command-line surface, matrix file format, report rendering,
//!   reproduction fixtures.

pub mod analysis;
pub mod cli;
pub mod codes;
pub mod constructions;
pub mod galois;
pub mod linalg;

mod error;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Default cap on the number of messages q^k an operation may enumerate.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 22;
