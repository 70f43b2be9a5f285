//! Exact k-th powers of semicirculant (upper-triangular Toeplitz) and
//! r-circulant matrices over arbitrary commutative rings with identity.
//!
//! The main route never divides: entries of `A^k` are built as formal sums
//! `Σ_p L(m, p) · a0^(k-p) · C(k, p)` by a key-shifting recursion and only
//! evaluated at a concrete `k` at the end, so zero divisors in the ring
//! (including a zero diagonal) need no special handling. r-circulant powers
//! are folded out of the semicirculant power of the defining row.
//!
//! Every fast path has a brute-force counterpart (dense multiplication,
//! multinomial expansion, the classical division recursion) that the test
//! suites and the `verify` subcommand compare against.

pub mod cli;
pub mod compositions;
pub mod dense;
mod error;
pub mod formal;
pub mod rcirculant;
pub mod ring;
pub mod semicirculant;

pub use error::{Error, Result};
pub use formal::{FormalEntry, FormalSequence};
pub use rcirculant::RCirculant;
pub use ring::{Integers, Modular, Ring};
pub use semicirculant::{PowerResult, Semicirculant};
