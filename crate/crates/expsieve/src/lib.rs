//! Search and verification engine for the purely exponential equation
//! a^x + b^y = c^z over coprime bases, specialized to prime triples.
//!
//! The crate has two halves:
//!
//! - **Exact enumeration** ([`enumerate`]): brute-force solution search with
//!   arbitrary-precision arithmetic, parity classification, and desk-scale
//!   verifiers for the classical side results (Pillai collisions, square vs
//!   power-of-two gaps, near-power pair counts).
//! - **Modular elimination** ([`sieve`]): for a prime b = 1 mod 12, every
//!   hypothetical extra solution pair forces a case split mod 24 and an odd
//!   exponent z2 > 1 dividing the class number of Q(sqrt(-b)). The sieve
//!   intersects exponent-residue constraints across small prime-power moduli
//!   until no candidate survives, emitting a machine-readable certificate
//!   per (b, case, z2).
//!
//! [`sweep`] drives the elimination over prime ranges with a work queue,
//! an append-only certificate log, and resume support; [`report`] aggregates
//! certificate files. The `expsieve` binary exposes all of it as subcommands.

pub mod classnum;
pub mod enumerate;
pub mod error;
pub mod modarith;
pub mod primes;
pub mod report;
pub mod sieve;
pub mod sweep;

pub mod cli;

pub use error::{Error, Result};
