//! Brute-force reference computations.
//!
//! Everything here is recomputed from definitions by exhaustive search or
//! schoolbook arithmetic. The crate deliberately does not depend on
//! `fdpi-core`, so it can check that crate without sharing any code path.

use thiserror::Error;

/// Largest modulus accepted by the root enumerations.
pub const ROOT_SEARCH_BOUND: u64 = 1_000_000;
/// Largest modulus accepted by [`brute_divisor_pairs`].
pub const PAIR_SEARCH_BOUND: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("modulus {p} exceeds the exhaustive search bound {bound}")]
    TooLarge { p: u64, bound: u64 },
    #[error("arithmetic overflow in the reference ring")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, OracleError>;

fn bounded(p: u64, bound: u64) -> Result<()> {
    if p > bound {
        Err(OracleError::TooLarge { p, bound })
    } else {
        Ok(())
    }
}

/// Primality by trial division.
pub fn is_prime_trial(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Inverse of `x` modulo `p` by the extended Euclidean algorithm.
pub fn inv_egcd(x: i128, p: u64) -> Option<u64> {
    let p = p as i128;
    let (mut r0, mut r1) = (x.rem_euclid(p), p);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(p) as u64)
}

/// `f(x) mod p` by Horner's rule; coefficients from the constant term upwards.
pub fn eval_poly(coeffs: &[i128], x: u64, p: u64) -> u64 {
    let p = p as i128;
    coeffs
        .iter()
        .rev()
        .fold(0i128, |acc, &c| (acc * x as i128 + c.rem_euclid(p)).rem_euclid(p)) as u64
}

/// `{r ∈ [0, p) : f(r) ≡ 0 mod p}`, ascending.
pub fn brute_roots(coeffs: &[i128], p: u64) -> Result<Vec<u64>> {
    bounded(p, ROOT_SEARCH_BOUND)?;
    Ok((0..p).filter(|&r| eval_poly(coeffs, r, p) == 0).collect())
}

/// `x² − a`.
pub fn quadratic_poly(a: i128) -> [i128; 3] {
    [-a, 0, 1]
}

/// Minimal polynomial of `α + β`, obtained by squaring twice:
/// `(γ² − a − b)² = 4ab`.
pub fn quartic_poly(a: i128, b: i128) -> [i128; 5] {
    let s = a + b;
    [s * s - 4 * a * b, 0, -2 * s, 0, 1]
}

fn checked_sum(terms: &[(i128, i128)]) -> Result<i128> {
    terms.iter().try_fold(0i128, |acc, &(x, y)| {
        x.checked_mul(y)
            .and_then(|xy| acc.checked_add(xy))
            .ok_or(OracleError::Overflow)
    })
}

/// Product in `Z[α, β]` over the basis `{1, α, β, αβ}`, with `α² = a`, `β² = b`.
pub fn mul_basis(u: [i128; 4], v: [i128; 4], a: i128, b: i128) -> Result<[i128; 4]> {
    let ab = a.checked_mul(b).ok_or(OracleError::Overflow)?;
    let scaled = |k: i128, x: i128| k.checked_mul(x).ok_or(OracleError::Overflow);
    Ok([
        checked_sum(&[
            (u[0], v[0]),
            (scaled(a, u[1])?, v[1]),
            (scaled(b, u[2])?, v[2]),
            (scaled(ab, u[3])?, v[3]),
        ])?,
        checked_sum(&[
            (u[0], v[1]),
            (u[1], v[0]),
            (scaled(b, u[2])?, v[3]),
            (scaled(b, u[3])?, v[2]),
        ])?,
        checked_sum(&[
            (u[0], v[2]),
            (u[2], v[0]),
            (scaled(a, u[1])?, v[3]),
            (scaled(a, u[3])?, v[1]),
        ])?,
        checked_sum(&[(u[0], v[3]), (u[3], v[0]), (u[1], v[2]), (u[2], v[1])])?,
    ])
}

/// Generators of `⟨n + mγ⟩ ∩ Z[α]` and `∩ Z[β]` as basis vectors, computed as
/// `(n + mα + mβ)(n + mα − mβ)` and `(n + mα + mβ)(n − mα + mβ)`.
pub fn intersection_generators(n: i128, m: i128, a: i128, b: i128) -> Result<([i128; 4], [i128; 4])> {
    let g = [n, m, m, 0];
    let ga = mul_basis(g, [n, m, -m, 0], a, b)?;
    let gb = mul_basis(g, [n, -m, m, 0], a, b)?;
    Ok((ga, gb))
}

/// Every `(r, s)` with `r² ≡ a`, `s² ≡ b` and `r + s ≡ t (mod p)`.
pub fn brute_pairs(a: i128, b: i128, t: u64, p: u64) -> Result<Vec<(u64, u64)>> {
    let ra = brute_roots(&quadratic_poly(a), p)?;
    let sb = brute_roots(&quadratic_poly(b), p)?;
    let mut out = Vec::new();
    for &r in &ra {
        for &s in &sb {
            if (r + s) % p == t % p {
                out.push((r, s));
            }
        }
    }
    Ok(out)
}

/// The pairs of [`brute_pairs`] whose components divide the intersections of
/// `⟨n + mγ⟩` with `Z[α]` and `Z[β]`.
pub fn brute_divisor_pairs(n: i128, m: i128, a: i128, b: i128, t: u64, p: u64) -> Result<Vec<(u64, u64)>> {
    bounded(p, PAIR_SEARCH_BOUND)?;
    let (ga, gb) = if m == 0 {
        ([n, 0, 0, 0], [n, 0, 0, 0])
    } else {
        intersection_generators(n, m, a, b)?
    };
    Ok(brute_pairs(a, b, t, p)?
        .into_iter()
        .filter(|&(r, s)| eval_poly(&[ga[0], ga[1]], r, p) == 0 && eval_poly(&[gb[0], gb[2]], s, p) == 0)
        .collect())
}
