//! First-degree prime ideals of the quadratic orders `Z[α]`, `Z[β]` and of
//! their biquadratic compositum `Z[γ]`, `γ = α + β`.
//!
//! An ideal of norm `p` is represented by a root `r` of the ring's defining
//! polynomial modulo `p`. Ideals over α and β combine into ideals over γ by
//! adding roots, every ideal `(t, p)` with `p = 2` or `t ≢ 0` decomposes into
//! a unique source pair, and the same correspondence governs which ideals
//! divide principal ideals `⟨n + mγ⟩`.

pub mod combination;
pub mod divisibility;
pub mod error;
pub mod fields;
pub mod modular;
pub mod scan;
pub mod sieve;

pub use combination::{
    classify_zero, combine, decompose, Decomposition, DecompositionKind, IdealPair,
    ZeroClassification,
};
pub use divisibility::{
    combine_divisors, decompose_divisor, divides_biquad, divides_quad, intersect,
    CombineDivisorOutcome, PrincipalIdeal, QuadraticPrincipalIdeal,
};
pub use error::{Error, Result};
pub use fields::{eval_map, BiquadraticField, FdpIdeal, QuadraticField, Ring, Side, PARAM_BOUND};
pub use modular::{inv_mod, is_prime, quartic_roots, sqrt_mod, Prime};
pub use scan::{scan, scan_prime, scan_to_vec, BiRoot, ScanRow, PMAX_BOUND};
pub use sieve::{primes_up_to, SegmentedSieve};
