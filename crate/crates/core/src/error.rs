use thiserror::Error;

use crate::fields::Ring;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside the supported range")]
    OutOfRange { what: &'static str, value: i128 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{x} is not invertible modulo {p}")]
    NotInvertible { x: i128, p: u64 },

    #[error("invalid field parameters: {0}")]
    InvalidField(String),

    #[error("({r},{p}) is not a first-degree prime ideal of Z[{ring}]")]
    NotAnIdeal { ring: Ring, r: u64, p: u64 },

    #[error("ideals have different norms: {0} and {1}")]
    NormMismatch(u64, u64),

    #[error("expected an ideal of Z[{expected}], got one of Z[{found}]")]
    RingMismatch { expected: Ring, found: Ring },

    #[error("invalid principal ideal: {0}")]
    InvalidPrincipal(String),

    #[error("({r},{p}) of Z[{ring}] does not divide {ideal}")]
    NotADivisor {
        ring: Ring,
        r: u64,
        p: u64,
        ideal: String,
    },

    #[error("(0,{p}) has no zero-ideal classification: {reason}")]
    NotZeroCase { p: u64, reason: &'static str },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
