//! First-degree prime divisors of principal ideals `⟨n + mγ⟩ ⊆ Z[γ]`.
//!
//! An ideal `(t, p)` divides `⟨n + mγ⟩` when the generator lies in the kernel
//! of the evaluation map `γ ↦ t`, i.e. `n + mt ≡ 0 (mod p)`. No general ideal
//! arithmetic is involved.

use std::fmt;

use crate::combination::{classify_zero, combine, decompose, Decomposition, IdealPair};
use crate::error::{Error, Result};
use crate::fields::{check_bound, BiquadraticField, FdpIdeal, Ring, Side};
use crate::modular::Prime;

/// `⟨n + mγ⟩` with `gcd(n, m) = 1`, or `⟨n⟩` with `n ≠ 0` when `m = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrincipalIdeal {
    field: BiquadraticField,
    n: i64,
    m: i64,
}

impl PrincipalIdeal {
    pub fn new(field: BiquadraticField, n: i64, m: i64) -> Result<Self> {
        check_bound("n", n)?;
        check_bound("m", m)?;
        if m == 0 {
            if n == 0 {
                return Err(Error::InvalidPrincipal("the zero ideal has no divisors".into()));
            }
        } else if gcd(n.unsigned_abs(), m.unsigned_abs()) != 1 {
            return Err(Error::InvalidPrincipal(format!(
                "n = {n} and m = {m} are not coprime"
            )));
        }
        Ok(PrincipalIdeal { field, n, m })
    }

    #[inline]
    pub fn field(&self) -> &BiquadraticField {
        &self.field
    }

    #[inline]
    pub fn n(&self) -> i64 {
        self.n
    }

    #[inline]
    pub fn m(&self) -> i64 {
        self.m
    }

    /// Generator of the intersection with `Z[α]` or `Z[β]`.
    pub fn intersect(&self, side: Side) -> QuadraticPrincipalIdeal {
        intersect(self, side)
    }

    /// True when combining divisors of norm `p` into `(t, p)` may fail to
    /// yield a divisor: `p ≠ 2`, `n ≡ 0` and `t ≢ 0 (mod p)`.
    pub fn is_exceptional(&self, t: u64, p: Prime) -> bool {
        !p.is_two() && p.reduce(self.n as i128) == 0 && !t.is_multiple_of(p.get())
    }
}

impl fmt::Display for PrincipalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            0 => write!(f, "⟨{}⟩", self.n),
            1 => write!(f, "⟨{} + γ⟩", self.n),
            m => write!(f, "⟨{} + {}γ⟩", self.n, m),
        }
    }
}

fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

/// The principal ideal `⟨c0 + c1·θ⟩` of `Z[α]` or `Z[β]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticPrincipalIdeal {
    pub c0: i128,
    pub c1: i128,
    pub side: Side,
}

impl fmt::Display for QuadraticPrincipalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{} + {}{}⟩", self.c0, self.c1, self.side)
    }
}

/// `I ∩ Z[α] = ⟨(n + mα + mβ)(n + mα − mβ)⟩ = ⟨n² + m²(a−b) + 2nmα⟩`, and
/// symmetrically for β. For `m = 0` both intersections are `⟨n⟩`.
pub fn intersect(ideal: &PrincipalIdeal, side: Side) -> QuadraticPrincipalIdeal {
    let (n, m) = (ideal.n as i128, ideal.m as i128);
    if m == 0 {
        return QuadraticPrincipalIdeal { c0: n, c1: 0, side };
    }
    let (a, b) = (ideal.field.a() as i128, ideal.field.b() as i128);
    let diff = match side {
        Side::Alpha => a - b,
        Side::Beta => b - a,
    };
    QuadraticPrincipalIdeal {
        c0: n * n + m * m * diff,
        c1: 2 * n * m,
        side,
    }
}

/// Whether `(t, p)` of `Z[γ]` divides `I`, i.e. `n + mt ≡ 0 (mod p)`.
pub fn divides_biquad(ideal: &PrincipalIdeal, tc: &FdpIdeal) -> Result<bool> {
    ideal.field.check(Ring::Gamma, tc)?;
    Ok(tc.eval(ideal.n as i128, ideal.m as i128) == 0)
}

/// Whether `(r, p)` divides `⟨c0 + c1θ⟩` in the matching quadratic ring.
pub fn divides_quad(j: &QuadraticPrincipalIdeal, ideal: &FdpIdeal) -> Result<bool> {
    let expected = Ring::from(j.side);
    if ideal.ring() != expected {
        return Err(Error::RingMismatch {
            expected,
            found: ideal.ring(),
        });
    }
    Ok(ideal.eval(j.c0, j.c1) == 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CombineDivisorOutcome {
    pub ideal: FdpIdeal,
    pub divides: bool,
    pub exceptional: bool,
}

fn require_divisor(ideal: &PrincipalIdeal, side: Side, q: &FdpIdeal) -> Result<()> {
    let j = intersect(ideal, side);
    if !divides_quad(&j, q)? {
        return Err(Error::NotADivisor {
            ring: side.into(),
            r: q.r(),
            p: q.p(),
            ideal: j.to_string(),
        });
    }
    Ok(())
}

/// Combines divisors `(r, p) | I ∩ Z[α]` and `(s, p) | I ∩ Z[β]`. The result
/// divides `I` whenever the outcome is not exceptional.
pub fn combine_divisors(
    ideal: &PrincipalIdeal,
    ra: &FdpIdeal,
    sb: &FdpIdeal,
) -> Result<CombineDivisorOutcome> {
    let tc = combine(&ideal.field, ra, sb)?;
    require_divisor(ideal, Side::Alpha, ra)?;
    require_divisor(ideal, Side::Beta, sb)?;
    let divides = divides_biquad(ideal, &tc)?;
    let exceptional = ideal.is_exceptional(tc.r(), tc.prime());
    if !exceptional && !divides {
        return Err(Error::Invariant(format!(
            "{tc} combined from divisors does not divide {ideal}"
        )));
    }
    Ok(CombineDivisorOutcome {
        ideal: tc,
        divides,
        exceptional,
    })
}

/// Source pairs of a divisor `(t, p) | I`, each component dividing the
/// corresponding intersection.
///
/// One pair when `p = 2` or `t ≢ 0`; for `(0, p)`, `p` odd, every pair from
/// the zero classification (possibly none), sorted by the α root.
pub fn decompose_divisor(ideal: &PrincipalIdeal, tc: &FdpIdeal) -> Result<Vec<IdealPair>> {
    if !divides_biquad(ideal, tc)? {
        return Err(Error::NotADivisor {
            ring: Ring::Gamma,
            r: tc.r(),
            p: tc.p(),
            ideal: ideal.to_string(),
        });
    }
    let pairs = match decompose(&ideal.field, tc)? {
        Decomposition::Unique(pair) => vec![pair],
        Decomposition::Zero(_) => classify_zero(&ideal.field, tc.prime())?.pairs,
    };
    let ja = intersect(ideal, Side::Alpha);
    let jb = intersect(ideal, Side::Beta);
    for (r, s) in &pairs {
        if !divides_quad(&ja, r)? || !divides_quad(&jb, s)? {
            return Err(Error::Invariant(format!(
                "components {r}, {s} of divisor {tc} do not divide {ja}, {jb}"
            )));
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> (BiquadraticField, PrincipalIdeal) {
        let g = BiquadraticField::new(-4, 6).unwrap();
        (g, PrincipalIdeal::new(g, 5, 1).unwrap())
    }

    #[test]
    fn principal_validation() {
        let (g, _) = example();
        assert!(PrincipalIdeal::new(g, 4, 6).is_err());
        assert!(PrincipalIdeal::new(g, 0, 0).is_err());
        assert!(PrincipalIdeal::new(g, 0, 2).is_err());
        assert!(PrincipalIdeal::new(g, 0, -1).is_ok());
        assert!(PrincipalIdeal::new(g, 12, 0).is_ok());
        assert!(PrincipalIdeal::new(g, -7, 3).is_ok());
        assert!(matches!(
            PrincipalIdeal::new(g, 1, i64::MIN),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn intersections() {
        let (g, i) = example();
        let ja = i.intersect(Side::Alpha);
        assert_eq!((ja.c0, ja.c1), (15, 10));
        let jb = i.intersect(Side::Beta);
        assert_eq!((jb.c0, jb.c1), (35, 10));

        let i0 = PrincipalIdeal::new(g, 0, 1).unwrap();
        let j0 = i0.intersect(Side::Alpha);
        assert_eq!((j0.c0, j0.c1), (-10, 0));

        let in_ = PrincipalIdeal::new(g, 6, 0).unwrap();
        assert_eq!(in_.intersect(Side::Beta).c0, 6);
        assert_eq!(in_.intersect(Side::Beta).c1, 0);
    }

    #[test]
    fn intersection_at_parameter_bounds() {
        let g = BiquadraticField::new(-(1 << 31), (1 << 31) - 1).unwrap();
        let i = PrincipalIdeal::new(g, 1 << 31, -((1 << 31) - 1)).unwrap();
        let j = i.intersect(Side::Alpha);
        let (n, m) = (1i128 << 31, -((1i128 << 31) - 1));
        assert_eq!(j.c0, n * n + m * m * (-(1i128 << 32) + 1));
        assert_eq!(j.c1, 2 * n * m);
    }

    #[test]
    fn biquadratic_divisibility() {
        let (g, i) = example();
        assert!(divides_biquad(&i, &g.ideal(Ring::Gamma, 0, 5).unwrap()).unwrap());
        assert!(!divides_biquad(&i, &g.ideal(Ring::Gamma, 2, 5).unwrap()).unwrap());
        let n = PrincipalIdeal::new(g, 3, 0).unwrap();
        for t in g.ideals(Ring::Gamma, Prime::new(5).unwrap()) {
            assert!(!divides_biquad(&n, &t).unwrap());
        }
    }

    #[test]
    fn quadratic_divisibility() {
        let (g, i) = example();
        let ja = i.intersect(Side::Alpha);
        let jb = i.intersect(Side::Beta);
        assert!(divides_quad(&ja, &g.ideal(Ring::Alpha, 1, 5).unwrap()).unwrap());
        assert!(divides_quad(&jb, &g.ideal(Ring::Beta, 4, 5).unwrap()).unwrap());
        let f = BiquadraticField::new(50, 155).unwrap();
        assert!(!divides_quad(&ja, &f.ideal(Ring::Alpha, 1, 7).unwrap()).unwrap());
        assert!(matches!(
            divides_quad(&ja, &g.ideal(Ring::Beta, 1, 5).unwrap()),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn combine_divisor_table() {
        let (g, i) = example();
        let a = |r| g.ideal(Ring::Alpha, r, 5).unwrap();
        let b = |s| g.ideal(Ring::Beta, s, 5).unwrap();

        let o = combine_divisors(&i, &a(1), &b(4)).unwrap();
        assert_eq!((o.ideal.r(), o.divides, o.exceptional), (0, true, false));
        let o = combine_divisors(&i, &a(1), &b(1)).unwrap();
        assert_eq!((o.ideal.r(), o.divides, o.exceptional), (2, false, true));
        let o = combine_divisors(&i, &a(4), &b(4)).unwrap();
        assert_eq!((o.ideal.r(), o.divides, o.exceptional), (3, false, true));
    }

    #[test]
    fn combine_divisors_at_97() {
        let g = BiquadraticField::new(-4, 6).unwrap();
        let i = PrincipalIdeal::new(g, 1, 1).unwrap();
        let r = g.ideal(Ring::Alpha, 53, 97).unwrap();
        let s = g.ideal(Ring::Beta, 43, 97).unwrap();
        let o = combine_divisors(&i, &r, &s).unwrap();
        assert_eq!((o.ideal.r(), o.divides, o.exceptional), (96, true, false));
    }

    #[test]
    fn combine_divisors_rejects_non_divisors() {
        let g = BiquadraticField::new(-4, 6).unwrap();
        let i = PrincipalIdeal::new(g, 1, 1).unwrap();
        let r = g.ideal(Ring::Alpha, 1, 5).unwrap();
        let s = g.ideal(Ring::Beta, 1, 5).unwrap();
        assert!(matches!(
            combine_divisors(&i, &r, &s),
            Err(Error::NotADivisor { ring: Ring::Alpha, .. })
        ));
    }

    #[test]
    fn decompose_divisor_cases() {
        let (g, i) = example();
        let pairs = decompose_divisor(&i, &g.ideal(Ring::Gamma, 0, 5).unwrap()).unwrap();
        let rs: Vec<_> = pairs.iter().map(|(r, s)| (r.r(), s.r())).collect();
        assert_eq!(rs, vec![(1, 4), (4, 1)]);

        let i1 = PrincipalIdeal::new(g, 1, 1).unwrap();
        let pairs = decompose_divisor(&i1, &g.ideal(Ring::Gamma, 96, 97).unwrap()).unwrap();
        assert_eq!((pairs[0].0.r(), pairs[0].1.r()), (53, 43));
        assert_eq!(pairs.len(), 1);

        assert!(matches!(
            decompose_divisor(&i, &g.ideal(Ring::Gamma, 2, 5).unwrap()),
            Err(Error::NotADivisor { ring: Ring::Gamma, .. })
        ));
    }

    #[test]
    fn decompose_divisor_zero_case_without_roots() {
        // (0,3) of Z[γ] for a = 50, b = 155 divides ⟨3 + γ⟩ but has no source pair
        let f = BiquadraticField::new(50, 155).unwrap();
        let i = PrincipalIdeal::new(f, 3, 1).unwrap();
        let pairs = decompose_divisor(&i, &f.ideal(Ring::Gamma, 0, 3).unwrap()).unwrap();
        assert!(pairs.is_empty());
    }
}
