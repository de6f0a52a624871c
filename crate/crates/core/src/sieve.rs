//! Segmented sieve of Eratosthenes.

use crate::modular::Prime;

const SEGMENT_LEN: u64 = 1 << 18;

fn simple_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; limit as usize + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if composite[i as usize] {
            continue;
        }
        primes.push(i);
        let mut j = i * i;
        while j <= limit {
            composite[j as usize] = true;
            j += i;
        }
    }
    primes
}

/// Yields the primes `<= limit` in ascending blocks of one segment each.
#[derive(Debug)]
pub struct SegmentedSieve {
    limit: u64,
    base: Vec<u64>,
    next_lo: u64,
    marks: Vec<bool>,
}

impl SegmentedSieve {
    pub fn new(limit: u64) -> Self {
        SegmentedSieve {
            limit,
            base: simple_sieve(limit.isqrt()),
            next_lo: 2,
            marks: Vec::new(),
        }
    }
}

impl Iterator for SegmentedSieve {
    type Item = Vec<Prime>;

    fn next(&mut self) -> Option<Vec<Prime>> {
        if self.next_lo > self.limit {
            return None;
        }
        let lo = self.next_lo;
        // inclusive upper end of this segment
        let hi = self.limit.min(lo.saturating_add(SEGMENT_LEN - 1));
        self.next_lo = hi.saturating_add(1);

        let len = (hi - lo + 1) as usize;
        self.marks.clear();
        self.marks.resize(len, false);
        for &q in &self.base {
            if q * q > hi {
                break;
            }
            let mut j = (q * q).max(lo.div_ceil(q) * q);
            while j <= hi {
                self.marks[(j - lo) as usize] = true;
                j += q;
            }
        }
        Some(
            self.marks
                .iter()
                .enumerate()
                .filter(|(_, &m)| !m)
                .map(|(i, _)| Prime::new_unchecked(lo + i as u64))
                .collect(),
        )
    }
}

/// All primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<Prime> {
    SegmentedSieve::new(limit).flatten().collect()
}
