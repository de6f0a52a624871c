//! Factor-base scan: every first-degree prime ideal of `Z[α]`, `Z[β]` and
//! `Z[γ]` up to a norm bound, optionally annotated with divisibility of a
//! principal ideal.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::divisibility::PrincipalIdeal;
use crate::error::{Error, Result};
use crate::fields::{BiquadraticField, Ring};
use crate::modular::Prime;
use crate::sieve::SegmentedSieve;

/// Largest accepted norm bound.
pub const PMAX_BOUND: u64 = 1 << 40;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiRoot {
    pub t: u64,
    pub divides: Option<bool>,
    pub exceptional: Option<bool>,
}

/// All ideals of one norm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub p: u64,
    pub qa: Vec<u64>,
    pub qb: Vec<u64>,
    pub bi: Vec<BiRoot>,
}

pub fn scan_prime(field: &BiquadraticField, principal: Option<&PrincipalIdeal>, p: Prime) -> ScanRow {
    let bi = field
        .roots(Ring::Gamma, p)
        .into_iter()
        .map(|t| {
            let (divides, exceptional) = match principal {
                Some(i) => {
                    let v = p.add(p.reduce(i.n() as i128), p.mul(p.reduce(i.m() as i128), t));
                    (Some(v == 0), Some(i.is_exceptional(t, p)))
                }
                None => (None, None),
            };
            BiRoot {
                t,
                divides,
                exceptional,
            }
        })
        .collect();
    ScanRow {
        p: p.get(),
        qa: field.roots(Ring::Alpha, p),
        qb: field.roots(Ring::Beta, p),
        bi,
    }
}

/// Scans every prime `p <= pmax` and hands the rows to `sink` in ascending
/// order of `p`.
///
/// Rows within a sieve segment are computed on the current rayon pool; the
/// emitted sequence does not depend on the pool size.
pub fn scan<E, F>(
    field: &BiquadraticField,
    principal: Option<&PrincipalIdeal>,
    pmax: u64,
    mut sink: F,
) -> std::result::Result<(), E>
where
    F: FnMut(&ScanRow) -> std::result::Result<(), E>,
    E: From<Error>,
{
    if pmax > PMAX_BOUND {
        return Err(Error::OutOfRange {
            what: "pmax",
            value: pmax as i128,
        }
        .into());
    }
    if let Some(i) = principal {
        if i.field() != field {
            return Err(Error::InvalidPrincipal(
                "principal ideal belongs to a different field".into(),
            )
            .into());
        }
    }
    for segment in SegmentedSieve::new(pmax) {
        let rows: Vec<ScanRow> = segment
            .par_iter()
            .map(|&p| scan_prime(field, principal, p))
            .collect();
        for row in &rows {
            sink(row)?;
        }
    }
    Ok(())
}

/// Collects a whole scan in memory.
pub fn scan_to_vec(
    field: &BiquadraticField,
    principal: Option<&PrincipalIdeal>,
    pmax: u64,
) -> Result<Vec<ScanRow>> {
    let mut rows = Vec::new();
    scan(field, principal, pmax, |row: &ScanRow| -> Result<()> {
        rows.push(row.clone());
        Ok(())
    })?;
    Ok(rows)
}
