//! Combining first-degree prime ideals of `Z[α]` and `Z[β]` into ideals of
//! `Z[γ]`, and recovering the source pair from a biquadratic ideal.
//!
//! Given `(r, p)` over α and `(s, p)` over β, `(r + s, p)` is always an ideal
//! of `Z[γ]`. Conversely every `(t, p)` with `p = 2` or `t ≢ 0` comes from
//! exactly one pair. Ideals `(0, p)` for odd `p` arise from zero, one or two
//! pairs depending on how many square roots `a` has modulo `p`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::{BiquadraticField, FdpIdeal, Ring};
use crate::modular::{inv_mod, Prime};

/// Source pair `(ideal over α, ideal over β)`.
pub type IdealPair = (FdpIdeal, FdpIdeal);

/// How the ideal `(0, p)` of `Z[γ]`, `p` odd, arises from combinations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroClassification {
    pub p: u64,
    /// Number of roots of `x² − a` modulo `p` (0, 1 or 2).
    pub nu: u8,
    /// Ordered pairs combining to `(0, p)`, sorted by the α root.
    pub pairs: Vec<IdealPair>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    Unique(IdealPair),
    Zero(ZeroClassification),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DecompositionKind {
    Unique,
    Zero,
}

impl Decomposition {
    pub fn kind(&self) -> DecompositionKind {
        match self {
            Decomposition::Unique(_) => DecompositionKind::Unique,
            Decomposition::Zero(_) => DecompositionKind::Zero,
        }
    }

    /// Every source pair; one for `Unique`, zero to two for `Zero`.
    pub fn pairs(&self) -> Vec<IdealPair> {
        match self {
            Decomposition::Unique(pair) => vec![*pair],
            Decomposition::Zero(z) => z.pairs.clone(),
        }
    }
}

/// `((r + s) mod p, p)` as an ideal of `Z[γ]`.
pub fn combine(field: &BiquadraticField, ra: &FdpIdeal, sb: &FdpIdeal) -> Result<FdpIdeal> {
    if ra.p() != sb.p() {
        return Err(Error::NormMismatch(ra.p(), sb.p()));
    }
    field.check(Ring::Alpha, ra)?;
    field.check(Ring::Beta, sb)?;
    let p = ra.prime();
    let t = p.add(ra.r(), sb.r());
    debug_assert!(field.is_root(Ring::Gamma, t, p));
    Ok(FdpIdeal::new_unchecked(Ring::Gamma, t, p))
}

/// Splits `(t, p)` of `Z[γ]` into its source pair, or classifies `(0, p)`.
pub fn decompose(field: &BiquadraticField, tc: &FdpIdeal) -> Result<Decomposition> {
    field.check(Ring::Gamma, tc)?;
    let p = tc.prime();
    let t = tc.r();

    let (r, s) = if p.is_two() {
        // Every residue mod 2 is its own square, so r ≡ a and s ≡ b.
        (p.reduce(field.a() as i128), p.reduce(field.b() as i128))
    } else if t == 0 {
        return classify_zero(field, p).map(Decomposition::Zero);
    } else {
        // r = (t² + a − b) / 2t and s = (t² − a + b) / 2t. The candidates
        // (r, −s) and (−r, s) only sum to t when s = 0 or r = 0, in which
        // case they coincide with (r, s), so no separate branch is needed.
        let inv = inv_mod(2 * t as i128, p)?;
        let t2 = p.mul(t, t);
        let diff = p.reduce(field.a() as i128 - field.b() as i128);
        (
            p.mul(p.add(t2, diff), inv),
            p.mul(p.sub(t2, diff), inv),
        )
    };

    let alpha_ok = field.is_root(Ring::Alpha, r, p);
    let beta_ok = field.is_root(Ring::Beta, s, p);
    if !alpha_ok || !beta_ok || p.add(r, s) != t {
        return Err(Error::Invariant(format!(
            "decomposition of {tc} gave r = {r}, s = {s}"
        )));
    }
    Ok(Decomposition::Unique((
        FdpIdeal::new_unchecked(Ring::Alpha, r, p),
        FdpIdeal::new_unchecked(Ring::Beta, s, p),
    )))
}

/// Which pairs combine to `(0, p)` for odd `p`.
///
/// `(0, p)` is an ideal of `Z[γ]` exactly when `a ≡ b (mod p)`, and then
/// `x² − a` and `x² − b` share their roots, so each α root `r` pairs with
/// the β root `−r`.
pub fn classify_zero(field: &BiquadraticField, p: Prime) -> Result<ZeroClassification> {
    if p.is_two() {
        return Err(Error::NotZeroCase {
            p: 2,
            reason: "p = 2 always decomposes uniquely",
        });
    }
    if !field.is_root(Ring::Gamma, 0, p) {
        return Err(Error::NotZeroCase {
            p: p.get(),
            reason: "(0,p) is not an ideal of Z[γ]",
        });
    }
    let roots = field.roots(Ring::Alpha, p);
    let mut pairs = Vec::with_capacity(roots.len());
    for &r in &roots {
        let s = p.neg(r);
        if !field.is_root(Ring::Beta, s, p) {
            return Err(Error::Invariant(format!(
                "{s} is not a root of x^2 - {} mod {p}",
                field.b()
            )));
        }
        pairs.push((
            FdpIdeal::new_unchecked(Ring::Alpha, r, p),
            FdpIdeal::new_unchecked(Ring::Beta, s, p),
        ));
    }
    Ok(ZeroClassification {
        p: p.get(),
        nu: roots.len() as u8,
        pairs,
    })
}
