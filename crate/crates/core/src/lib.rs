//! Binary Reed-Muller codes realised as radical powers `M^l` of the modular
//! algebra `F2[X1..Xm]/(X1^2-1, .., Xm^2-1)`, with a decoder that works by
//! taking remainders modulo a reduced Groebner basis of `M^l`.
//!
//! The crate is layered bottom-up:
//!
//! * [`polyring`]: sparse monomials and polynomials over F2 with lex/grlex orders.
//! * [`division`]: the multivariate division algorithm.
//! * [`groebner`]: S-polynomials, the Buchberger criterion, reduced bases and
//!   a plain Buchberger completion used as an oracle.
//! * [`gf2`]: dense bit matrices and row reduction over F2.
//! * [`rmcode`]: code parameters, the word/polynomial correspondence, the
//!   bases `G`, `H` and the Jennings basis, encoding and brute-force oracles.
//! * [`decoder`]: remainder-syndrome decoding and a maximum-likelihood oracle.

pub mod decoder;
pub mod division;
pub mod error;
pub mod gf2;
pub mod groebner;
pub mod polyring;
pub mod rmcode;

pub use decoder::{DecodeResult, DecodeStatus, Decoder, ErrorMode, HatSet, Syndrome};
pub use division::{divide, remainder, DivisionResult};
pub use error::{Error, Result};
pub use groebner::{BasisReport, FailingPair};
pub use polyring::{Monomial, MonomialOrder, Poly};
pub use rmcode::{CodeParams, IndexMap, SubsetIndex, Word};
