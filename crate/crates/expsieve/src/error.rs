//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("2-adic valuation requires n >= 1")]
    ZeroValuation,

    #[error("{a} and {m} are not coprime")]
    NotCoprime { a: u64, m: u64 },

    #[error("residue {residue} is not reduced modulo {modulus}")]
    InvalidResidue { residue: u64, modulus: u64 },

    #[error("modulus must be >= 1")]
    ZeroModulus,

    #[error("{0} is not a negative discriminant (need d < 0 and d = 0 or 1 mod 4)")]
    NotDiscriminant(i64),

    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("b = {0} must be a prime with b = 1 mod 4")]
    BadClassNumberBase(u64),

    #[error("b = {0} is not eligible for sieving (need prime b = 1 mod 12)")]
    NotSieveEligible(u64),

    #[error("sieve modulus {q} shares a factor with 2b = {two_b}")]
    BadSieveModulus { q: u64, two_b: u64 },

    #[error("triple ({a}, {b}, {c}) is not pairwise coprime with min > 1")]
    InvalidTriple { a: u64, b: u64, c: u64 },

    #[error("c = {0} must be an odd prime")]
    CompositeOrEvenC(u64),

    #[error("bound {got} outside supported range [{min}, {max}]")]
    BoundOutOfRange { got: u64, min: u64, max: u64 },

    #[error("malformed certificate line {line}: {reason}")]
    MalformedCertificate { line: usize, reason: String },

    #[error("invalid sweep range: b_min {b_min} must be < b_max {b_max}")]
    InvalidRange { b_min: u64, b_max: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
