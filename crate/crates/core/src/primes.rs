//! Prime tables and the prime-interval data `Ω = {t prime : n/2 < t <= n}`.

use serde::{Deserialize, Serialize};

use crate::classes::{product_range, BigNat};
use crate::error::{domain, Result};

/// Window size of the segmented sieve.
pub const SEGMENT: usize = 1 << 20;

/// Relative slack demanded before a floating-point bound counts as satisfied.
pub const BOUND_MARGIN: f64 = 1e-9;

/// Exact primality for every integer up to `limit`, with O(1) prime counting.
#[derive(Clone, Debug)]
pub struct PrimeTable {
    limit: u64,
    bits: Vec<u64>,
    // primes strictly below word index w * 64
    prefix: Vec<u64>,
}

/// Sieve of Eratosthenes over `[0, limit]`, processed in windows of
/// [`SEGMENT`] integers.
pub fn sieve(limit: u64) -> PrimeTable {
    let words = (limit / 64 + 1) as usize;
    let mut bits = vec![0u64; words];

    let root = (limit as f64).sqrt() as u64 + 1;
    let base = simple_sieve(root.min(limit));

    let mut marks = vec![true; SEGMENT];
    let mut lo = 0u64;
    while lo <= limit {
        let hi = (lo + SEGMENT as u64 - 1).min(limit);
        let len = (hi - lo + 1) as usize;
        marks[..len].fill(true);
        for &p in &base {
            if p * p > hi {
                break;
            }
            let mut m = (p * p).max(lo.div_ceil(p) * p);
            while m <= hi {
                marks[(m - lo) as usize] = false;
                m += p;
            }
        }
        for (off, &is_p) in marks[..len].iter().enumerate() {
            let k = lo + off as u64;
            if is_p && k >= 2 {
                bits[(k / 64) as usize] |= 1 << (k % 64);
            }
        }
        lo = hi + 1;
    }

    let mut prefix = Vec::with_capacity(words);
    let mut acc = 0u64;
    for w in &bits {
        prefix.push(acc);
        acc += w.count_ones() as u64;
    }
    PrimeTable { limit, bits, prefix }
}

fn simple_sieve(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut is = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if is[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                is[j] = false;
                j += i;
            }
        }
    }
    out
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Panics when `k` exceeds the sieved range.
    pub fn is_prime(&self, k: u64) -> bool {
        assert!(k <= self.limit, "{k} is beyond the sieve limit {}", self.limit);
        self.bits[(k / 64) as usize] >> (k % 64) & 1 == 1
    }

    /// `π(x)`: number of primes `<= x`.
    pub fn pi(&self, x: u64) -> u64 {
        assert!(x <= self.limit, "{x} is beyond the sieve limit {}", self.limit);
        let w = (x / 64) as usize;
        let below = x % 64;
        let mask = if below == 63 { u64::MAX } else { (1u64 << (below + 1)) - 1 };
        self.prefix[w] + (self.bits[w] & mask).count_ones() as u64
    }

    /// Primes in `[lo, hi]`, ascending.
    pub fn primes_between(&self, lo: u64, hi: u64) -> impl Iterator<Item = u64> + '_ {
        let hi = hi.min(self.limit);
        (lo..=hi).filter(move |&k| self.is_prime(k))
    }

    /// Largest prime `<= x`.
    pub fn prev_prime(&self, x: u64) -> Option<u64> {
        (2..=x.min(self.limit)).rev().find(|&k| self.is_prime(k))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaData {
    pub n: u64,
    /// Primes `t` with `n/2 < t <= n`, ascending.
    pub omega: Vec<u64>,
    /// `max Ω`, the largest prime not exceeding `n`.
    pub p: u64,
    pub count: usize,
}

/// [`omega_set_with`] on a freshly sieved table.
pub fn omega_set(n: u64) -> Result<OmegaData> {
    omega_set_with(&sieve(n.max(2)), n)
}

/// `Ω` for degree `n >= 3`. The lower end is strict: `t = n/2` never belongs.
pub fn omega_set_with(table: &PrimeTable, n: u64) -> Result<OmegaData> {
    if n < 3 {
        return domain(format!("omega_set needs n >= 3, got {n}"));
    }
    if n > table.limit() {
        return domain(format!("n = {n} exceeds the sieve limit {}", table.limit()));
    }
    let omega: Vec<u64> = table.primes_between(n / 2 + 1, n).collect();
    let p = *omega.last().expect("Bertrand's postulate guarantees a prime in (n/2, n] for n >= 3");
    debug_assert_eq!(Some(p), table.prev_prime(n));
    Ok(OmegaData { n, count: omega.len(), omega, p })
}

/// `(|Ω|, max Ω)` from prefix counts, without listing `Ω`.
pub fn omega_count_with(table: &PrimeTable, n: u64) -> Result<(usize, u64)> {
    if n < 3 {
        return domain(format!("omega_set needs n >= 3, got {n}"));
    }
    if n > table.limit() {
        return domain(format!("n = {n} exceeds the sieve limit {}", table.limit()));
    }
    let count = (table.pi(n) - table.pi(n / 2)) as usize;
    let p = table.prev_prime(n).expect("n >= 3");
    Ok((count, p))
}

/// `n!/p!` exactly: the product `(p+1)(p+2)...n`.
pub fn factorial_ratio(n: u64, p: u64) -> Result<BigNat> {
    if p > n {
        return domain(format!("factorial_ratio needs p <= n, got n = {n}, p = {p}"));
    }
    Ok(product_range(p as usize + 1, n as usize))
}

/// Pointwise evaluation of the Chebyshev-type prime counting bounds
/// `0.921 x/ln x < π(x) < 1.106 x/ln x` and the gap bound `x - p < x^0.525`.
/// Diagnostic only.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub x: u64,
    pub pi_exact: u64,
    pub lower: f64,
    pub upper: f64,
    pub lower_holds: bool,
    pub upper_holds: bool,
    /// Largest prime `<= x`.
    pub p: u64,
    pub gap: u64,
    pub gap_bound: f64,
    pub gap_bound_holds: bool,
}

pub const CHEBYSHEV_LOWER: f64 = 0.921;
pub const CHEBYSHEV_UPPER: f64 = 1.106;
pub const GAP_EXPONENT: f64 = 0.525;

pub fn bound_report(x: u64) -> Result<BoundReport> {
    bound_report_with(&sieve(x.max(2)), x)
}

pub fn bound_report_with(table: &PrimeTable, x: u64) -> Result<BoundReport> {
    if x <= 10 {
        return domain(format!("the prime counting bounds are stated for x > 10, got {x}"));
    }
    let pi_exact = table.pi(x);
    let xf = x as f64;
    let base = xf / xf.ln();
    let lower = CHEBYSHEV_LOWER * base;
    let upper = CHEBYSHEV_UPPER * base;
    let pif = pi_exact as f64;
    let p = table.prev_prime(x).expect("x > 10");
    let gap = x - p;
    let gap_bound = xf.powf(GAP_EXPONENT);
    Ok(BoundReport {
        x,
        pi_exact,
        lower,
        upper,
        lower_holds: pif > lower * (1.0 + BOUND_MARGIN),
        upper_holds: pif < upper * (1.0 - BOUND_MARGIN),
        p,
        gap,
        gap_bound,
        gap_bound_holds: (gap as f64) < gap_bound * (1.0 - BOUND_MARGIN),
    })
}

/// Aggregate of [`bound_report`] over every `x` in `[from, to]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundSweep {
    pub from: u64,
    pub to: u64,
    pub checked: u64,
    pub lower_violations: u64,
    pub upper_violations: u64,
    pub gap_violations: u64,
    pub first_lower_violation: Option<u64>,
    pub first_upper_violation: Option<u64>,
    pub first_gap_violation: Option<u64>,
}

pub fn bound_sweep(from: u64, to: u64) -> Result<BoundSweep> {
    if from <= 10 || from > to {
        return domain(format!("bound sweep needs 10 < from <= to, got [{from}, {to}]"));
    }
    let table = sieve(to);
    let mut s = BoundSweep {
        from,
        to,
        checked: 0,
        lower_violations: 0,
        upper_violations: 0,
        gap_violations: 0,
        first_lower_violation: None,
        first_upper_violation: None,
        first_gap_violation: None,
    };
    // prev_prime per x would rescan; track it incrementally instead
    let mut p = table.prev_prime(from).expect("from > 10");
    for x in from..=to {
        if table.is_prime(x) {
            p = x;
        }
        let r = bound_report_with(&table, x)?;
        debug_assert_eq!(r.p, p);
        s.checked += 1;
        if !r.lower_holds {
            s.lower_violations += 1;
            s.first_lower_violation.get_or_insert(x);
        }
        if !r.upper_holds {
            s.upper_violations += 1;
            s.first_upper_violation.get_or_insert(x);
        }
        if !r.gap_bound_holds {
            s.gap_violations += 1;
            s.first_gap_violation.get_or_insert(x);
        }
    }
    Ok(s)
}
