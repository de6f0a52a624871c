//! The quadratic orders `Z[α]`, `Z[β]` and their compositum `Z[γ]`, `γ = α + β`,
//! together with their first-degree prime ideals.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modular::{eval_quartic, quartic_roots, sqrt_mod, Prime};

/// Largest accepted magnitude of `a`, `b`, `n` and `m`. Keeps every
/// intermediate such as `m²(a−b)` or `(a−b)²` inside 127 bits.
pub const PARAM_BOUND: i64 = 1 << 31;

/// One of the two quadratic subrings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Alpha,
    Beta,
}

/// The ring an ideal lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    Alpha,
    Beta,
    Gamma,
}

impl From<Side> for Ring {
    fn from(side: Side) -> Ring {
        match side {
            Side::Alpha => Ring::Alpha,
            Side::Beta => Ring::Beta,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Ring::from(*self).fmt(f)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::Alpha => "α",
            Ring::Beta => "β",
            Ring::Gamma => "γ",
        })
    }
}

pub(crate) fn check_bound(what: &'static str, value: i64) -> Result<()> {
    if value.unsigned_abs() > PARAM_BOUND as u64 {
        return Err(Error::OutOfRange {
            what,
            value: value as i128,
        });
    }
    Ok(())
}

fn is_square(x: i128) -> bool {
    if x < 0 {
        return false;
    }
    let r = x.isqrt();
    r * r == x
}

/// `Z[α]` with `α² = a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticField {
    a: i64,
}

impl QuadraticField {
    pub fn new(a: i64) -> Result<Self> {
        check_bound("a", a)?;
        if a == 0 {
            return Err(Error::InvalidField("generator must be nonzero".into()));
        }
        if is_square(a as i128) {
            return Err(Error::InvalidField(format!(
                "{a} is a perfect square, x^2 - {a} is reducible"
            )));
        }
        Ok(QuadraticField { a })
    }

    #[inline]
    pub fn a(&self) -> i64 {
        self.a
    }

    /// Roots of `x² − a` modulo `p`, ascending.
    pub fn roots(&self, p: Prime) -> Vec<u64> {
        sqrt_mod(self.a as i128, p)
    }

    pub fn is_root(&self, r: u64, p: Prime) -> bool {
        r < p.get() && p.reduce(r as i128 * r as i128 - self.a as i128) == 0
    }
}

/// The compositum `Z[γ]` of `Z[α]` and `Z[β]`, with minimal polynomial
/// `x⁴ − 2(a+b)x² + (a−b)²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BiquadraticField {
    alpha: QuadraticField,
    beta: QuadraticField,
}

impl BiquadraticField {
    /// Fails unless `a`, `b` and `ab` are all non-squares, i.e. the two
    /// quadratic fields are distinct.
    pub fn new(a: i64, b: i64) -> Result<Self> {
        let alpha = QuadraticField::new(a)?;
        let beta = QuadraticField::new(b)?;
        if is_square(a as i128 * b as i128) {
            return Err(Error::InvalidField(format!(
                "{a}·{b} is a perfect square, Q(√{a}) = Q(√{b})"
            )));
        }
        Ok(BiquadraticField { alpha, beta })
    }

    #[inline]
    pub fn a(&self) -> i64 {
        self.alpha.a
    }

    #[inline]
    pub fn b(&self) -> i64 {
        self.beta.a
    }

    pub fn quadratic(&self, side: Side) -> &QuadraticField {
        match side {
            Side::Alpha => &self.alpha,
            Side::Beta => &self.beta,
        }
    }

    /// Minimal polynomial of γ, coefficients from the constant term upwards.
    pub fn min_poly(&self) -> [i128; 5] {
        let (a, b) = (self.a() as i128, self.b() as i128);
        [(a - b) * (a - b), 0, -2 * (a + b), 0, 1]
    }

    /// Roots of the defining polynomial of `ring` modulo `p`, ascending.
    pub fn roots(&self, ring: Ring, p: Prime) -> Vec<u64> {
        match ring {
            Ring::Alpha => self.alpha.roots(p),
            Ring::Beta => self.beta.roots(p),
            Ring::Gamma => quartic_roots(self.a(), self.b(), p),
        }
    }

    pub fn is_root(&self, ring: Ring, r: u64, p: Prime) -> bool {
        match ring {
            Ring::Alpha => self.alpha.is_root(r, p),
            Ring::Beta => self.beta.is_root(r, p),
            Ring::Gamma => r < p.get() && eval_quartic(self.a(), self.b(), r, p) == 0,
        }
    }

    /// All first-degree prime ideals of norm `p` in `ring`, ordered by root.
    pub fn ideals(&self, ring: Ring, p: Prime) -> Vec<FdpIdeal> {
        self.roots(ring, p)
            .into_iter()
            .map(|r| FdpIdeal::new_unchecked(ring, r, p))
            .collect()
    }

    /// Validates `(r, p)` as a first-degree prime ideal of `ring`. `r` is
    /// reduced modulo `p` first.
    pub fn ideal(&self, ring: Ring, r: i64, p: u64) -> Result<FdpIdeal> {
        let p = Prime::new(p)?;
        let r = p.reduce(r as i128);
        if !self.is_root(ring, r, p) {
            return Err(Error::NotAnIdeal {
                ring,
                r,
                p: p.get(),
            });
        }
        Ok(FdpIdeal::new_unchecked(ring, r, p))
    }

    /// Re-checks that `ideal` belongs to this field and to `ring`.
    pub fn check(&self, ring: Ring, ideal: &FdpIdeal) -> Result<()> {
        if ideal.ring != ring {
            return Err(Error::RingMismatch {
                expected: ring,
                found: ideal.ring,
            });
        }
        if !self.is_root(ring, ideal.r, ideal.prime()) {
            return Err(Error::NotAnIdeal {
                ring,
                r: ideal.r,
                p: ideal.p,
            });
        }
        Ok(())
    }
}

impl fmt::Display for BiquadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.a() as i128, self.b() as i128);
        write!(f, "x^4 - {}x^2 + {}", 2 * (a + b), (a - b) * (a - b))
    }
}

/// A first-degree prime ideal, identified with the pair `(r, p)` where
/// `r ∈ [0, p)` is a root of the ring's defining polynomial modulo `p`.
///
/// Ordered by `(p, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FdpIdeal {
    p: u64,
    r: u64,
    ring: Ring,
}

impl FdpIdeal {
    pub(crate) fn new_unchecked(ring: Ring, r: u64, p: Prime) -> Self {
        FdpIdeal { p: p.get(), r, ring }
    }

    #[inline]
    pub fn r(&self) -> u64 {
        self.r
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        Prime::new_unchecked(self.p)
    }

    #[inline]
    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Image of `c0 + c1·θ` under the evaluation map `θ ↦ r` into `Z/pZ`.
    /// The element lies in the ideal iff this is zero.
    pub fn eval(&self, c0: i128, c1: i128) -> u64 {
        eval_map(c0, c1, self)
    }
}

impl fmt::Display for FdpIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.p)
    }
}

/// `(c0 + c1·r) mod p` for the ideal `(r, p)`.
pub fn eval_map(c0: i128, c1: i128, ideal: &FdpIdeal) -> u64 {
    let p = ideal.prime();
    let c0 = p.reduce(c0);
    let c1 = p.reduce(c1);
    p.add(c0, p.mul(c1, ideal.r))
}
