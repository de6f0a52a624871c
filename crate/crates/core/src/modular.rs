//! Exact arithmetic modulo a prime below 2^63.
//!
//! Residues are canonical `u64` values in `[0, p)`. Every product is taken in
//! 128-bit arithmetic, so no intermediate value can overflow.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exclusive upper bound on supported moduli.
pub const MODULUS_BOUND: u64 = 1 << 63;

/// Below this bound square roots are found by scanning every residue.
const EXHAUSTIVE_SQRT_LIMIT: u64 = 64;

/// Deterministic for every n < 3.3 * 10^24, which covers all of `u64`.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// A prime modulus in `[2, 2^63)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p)? {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Caller guarantees primality (e.g. the value came out of a sieve).
    pub(crate) const fn new_unchecked(p: u64) -> Self {
        Prime(p)
    }

    #[inline]
    pub const fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_two(self) -> bool {
        self.0 == 2
    }

    /// Canonical representative of `x` in `[0, p)`.
    #[inline]
    pub fn reduce(self, x: i128) -> u64 {
        x.rem_euclid(self.0 as i128) as u64
    }

    #[inline]
    pub fn add(self, x: u64, y: u64) -> u64 {
        ((x as u128 + y as u128) % self.0 as u128) as u64
    }

    #[inline]
    pub fn sub(self, x: u64, y: u64) -> u64 {
        if x >= y {
            x - y
        } else {
            self.0 - (y - x)
        }
    }

    #[inline]
    pub fn neg(self, x: u64) -> u64 {
        if x == 0 {
            0
        } else {
            self.0 - x
        }
    }

    #[inline]
    pub fn mul(self, x: u64, y: u64) -> u64 {
        mul_mod(x, y, self.0)
    }

    #[inline]
    pub fn pow(self, base: u64, exp: u64) -> u64 {
        pow_mod(base, exp, self.0)
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[inline]
fn mul_mod(x: u64, y: u64, m: u64) -> u64 {
    ((x as u128 * y as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for `1 <= n < 2^63`.
pub fn is_prime(n: u64) -> Result<bool> {
    if n == 0 || n >= MODULUS_BOUND {
        return Err(Error::OutOfRange {
            what: "p",
            value: n as i128,
        });
    }
    if n < 2 {
        return Ok(false);
    }
    for &q in &MR_WITNESSES {
        if n.is_multiple_of(q) {
            return Ok(n == q);
        }
    }
    if n < 37 * 37 {
        return Ok(true);
    }

    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;

    'witness: for &w in &MR_WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Multiplicative inverse of `x` modulo `p`.
pub fn inv_mod(x: i128, p: Prime) -> Result<u64> {
    let r = p.reduce(x);
    if r == 0 {
        return Err(Error::NotInvertible { x, p: p.get() });
    }
    Ok(p.pow(r, p.get() - 2))
}

/// Square roots of `n` modulo `p`, ascending.
///
/// Returns `[]` for a non-residue, `[0]` when `p | n`, a single root when
/// `p = 2`, and `[x, p - x]` otherwise.
pub fn sqrt_mod(n: i128, p: Prime) -> Vec<u64> {
    let n = p.reduce(n);
    let m = p.get();
    if n == 0 {
        return vec![0];
    }
    if m == 2 {
        return vec![n];
    }
    let root = if m <= EXHAUSTIVE_SQRT_LIMIT {
        (1..m).find(|&x| x * x % m == n)
    } else {
        tonelli_shanks(n, p)
    };
    match root {
        Some(x) => {
            let y = m - x;
            vec![x.min(y), x.max(y)]
        }
        None => Vec::new(),
    }
}

/// `n` must be nonzero and `p` an odd prime.
fn tonelli_shanks(n: u64, p: Prime) -> Option<u64> {
    let m = p.get();
    if p.pow(n, (m - 1) / 2) != 1 {
        return None;
    }

    let s = (m - 1).trailing_zeros();
    let q = (m - 1) >> s;
    if s == 1 {
        return Some(p.pow(n, (m + 1) / 4));
    }

    // Any quadratic non-residue works; half the residues qualify.
    let z = (2..m)
        .find(|&z| p.pow(z, (m - 1) / 2) == m - 1)
        .expect("odd prime has a non-residue");

    let mut order = s;
    let mut c = p.pow(z, q);
    let mut t = p.pow(n, q);
    let mut r = p.pow(n, q.div_ceil(2));
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = p.mul(t2, t2);
            i += 1;
        }
        let b = p.pow(c, 1 << (order - i - 1));
        order = i;
        c = p.mul(b, b);
        t = p.mul(t, c);
        r = p.mul(r, b);
    }
    Some(r)
}

/// `x^4 - 2(a+b) x^2 + (a-b)^2` evaluated at `x` modulo `p`.
pub fn eval_quartic(a: i64, b: i64, x: u64, p: Prime) -> u64 {
    let x2 = p.mul(x % p.get(), x % p.get());
    let x4 = p.mul(x2, x2);
    let lin = p.reduce(2 * (a as i128 + b as i128));
    let diff = p.reduce(a as i128 - b as i128);
    p.add(p.sub(x4, p.mul(lin, x2)), p.mul(diff, diff))
}

/// All roots in `[0, p)` of `x^4 - 2(a+b) x^2 + (a-b)^2` modulo `p`, ascending.
///
/// For odd `p` the quartic is a quadratic in `y = x^2` with discriminant
/// `16ab`, so `y = (a+b) ± sqrt(4ab)` and `x = ± sqrt(y)`. Repeated roots
/// collapse in the set.
pub fn quartic_roots(a: i64, b: i64, p: Prime) -> Vec<u64> {
    if p.is_two() {
        return (0..2).filter(|&t| eval_quartic(a, b, t, p) == 0).collect();
    }
    let sum = p.reduce(a as i128 + b as i128);
    let mut roots = BTreeSet::new();
    for d in sqrt_mod(4 * a as i128 * b as i128, p) {
        let y = p.add(sum, d);
        roots.extend(sqrt_mod(y as i128, p));
    }
    roots.into_iter().collect()
}
