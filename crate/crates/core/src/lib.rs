//! Exact symbolic computation in the q-shuffle algebra on two letters.
//!
//! The ambient space is the free algebra on the letters `x`, `y` over the
//! Laurent polynomial ring `Z[q, q^-1]`. On top of the free (concatenation)
//! product, the vector space carries the q-shuffle product `⋆`, under which
//! the letters generate a subalgebra `U` satisfying the q-Serre relations.
//!
//! Modules:
//! - [`coeff`]: the scalar ring of Laurent polynomials with arbitrary
//!   precision integer coefficients.
//! - [`words`]: words, free-algebra elements, the bilinear form, truncation
//!   operators, the alternating and doubly alternating word families, the
//!   word classifier and its ideal-orthogonality oracle.
//! - [`shuffle`]: the q-shuffle product (memoized recursion), an independent
//!   interleaving-enumeration oracle, q^k-commutators and ⋆-powers.
//! - [`relations`]: a registry of commutator and convolution identity
//!   families, instantiable at concrete parameters and verified exactly.
//! - [`series`]: truncated formal power series in `t` with element
//!   coefficients, and the generating-function identities.
//! - [`checks`]: bulk self-check sweeps (classification vs. oracle, shuffle
//!   vs. interleaving enumeration) shared by the test suite and the CLI.

pub mod checks;
pub mod coeff;
mod parse;
pub mod relations;
pub mod series;
pub mod shuffle;
pub mod words;

pub use coeff::LaurentInt;
pub use parse::ParseError;
pub use relations::{VerificationReport, RelationError};
pub use series::TruncatedSeries;
pub use words::{FreeElement, Letter, Side, Word, WordClass};
