//! Mechanical checks of the arithmetic behind the non-solvability argument.
//!
//! Three independent checks live here:
//!
//! * [`check_omega_lemma`]: the exact comparison `2^|Ω| > n!/p!` that drives
//!   the large-`n` case.
//! * [`hz_table`]: sums of chain heights over the families `R_i`.
//! * [`Verifier::check_case`]: for a single degree, the height of the
//!   divisibility digraph over the candidate class sizes `Ψ_{t*}`, compared
//!   against `|Ω|`, packaged as a [`Certificate`].
//!
//! Every verdict comes from exact integer arithmetic.

mod hz;
mod scan;

use std::fmt;
use std::time::Instant;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::classes::{class_size, psi_classes, BigNat, GroupKind};
use crate::divgraph::{height_of_sorted, is_chain, Convention};
use crate::error::{domain, Error, Result};
use crate::partition::CycleType;
use crate::primes::{factorial_ratio, omega_count_with, omega_set_with, sieve, PrimeTable};

pub use hz::{hz_table, key as hz_key, published_bound, HzTableRow, MovedHeights, PUBLISHED_HZ_BOUNDS};
pub use scan::{omega_sweep, CaseSummary, OmegaSweep, ScanReport, ScanSummary};

/// Smallest degree handled by [`Verifier::check_case`].
pub const MIN_CASE_DEGREE: u64 = 23;

/// Default bound on the residual support `n - t*` that a case check will enumerate.
pub const DEFAULT_SUPPORT_CAP: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Indeterminate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Indeterminate => "INDETERMINATE",
        }
    }

    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Strategy {
    /// Candidates are `Ψ_p` with `p = max Ω`.
    #[serde(rename = "direct-psi-p")]
    DirectPsiP,
    /// Candidates are `Ψ_{2r}` for a prime `r` with `p + 1 < 2r <= n`.
    #[serde(rename = "r-trick")]
    RTrick,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::DirectPsiP => "direct-psi-p",
            Strategy::RTrick => "r-trick",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of the exact comparison `2^|Ω| > n!/p!`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaCheck {
    pub n: u64,
    pub p: u64,
    pub omega_count: usize,
    /// Bit length of `2^|Ω|`.
    pub power_bits: u64,
    /// Bit length of `n!/p!`.
    pub ratio_bits: u64,
    #[serde(with = "crate::decimal")]
    pub ratio: BigNat,
    pub verdict: Verdict,
}

/// Checks `|Ω| > log₂(n!/p!)` as the integer inequality `2^|Ω| > n!/p!`.
pub fn check_omega_lemma(n: u64) -> Result<OmegaCheck> {
    check_omega_lemma_with(&sieve(n.max(2)), n)
}

pub fn check_omega_lemma_with(table: &PrimeTable, n: u64) -> Result<OmegaCheck> {
    let (count, p) = omega_count_with(table, n)?;
    let ratio = factorial_ratio(n, p)?;
    let power = BigNat::one() << count;
    Ok(OmegaCheck {
        n,
        p,
        omega_count: count,
        power_bits: power.bits(),
        ratio_bits: ratio.bits(),
        verdict: Verdict::from_bool(power > ratio),
        ratio,
    })
}

/// The prime `r` with `p + 1 < 2r <= n` maximising `2r`, if any.
pub fn select_r(n: u64) -> Result<Option<u64>> {
    select_r_with(&sieve(n.max(2)), n)
}

pub fn select_r_with(table: &PrimeTable, n: u64) -> Result<Option<u64>> {
    let (_, p) = omega_count_with(table, n)?;
    // p + 1 < 2r  <=>  r >= p/2 + 1 (p + 1 even or odd alike)
    let lo = p.div_ceil(2) + 1;
    Ok((lo..=n / 2).rev().find(|&r| table.is_prime(r)))
}

/// Per-degree record that `|Ω|` exceeds the longest divisibility chain among
/// the candidate class sizes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: u64,
    pub kind: GroupKind,
    pub strategy: Strategy,
    pub r: Option<u64>,
    pub p: u64,
    pub t_star: u64,
    pub support_m: u64,
    pub omega_count: usize,
    pub h_value: usize,
    pub h_value_edges: usize,
    pub h_sum_bound: usize,
    pub verdict: Verdict,
    #[serde(with = "crate::decimal::vec")]
    pub witness_chain: Vec<BigNat>,
    /// Cycle type (fixed points omitted) realising each witness value.
    pub witness_types: Vec<CycleType>,
    pub notes: Vec<String>,
    /// Wall-clock seconds; the only field that varies between reruns.
    pub elapsed: f64,
}

impl Certificate {
    pub fn margin(&self) -> i64 {
        self.omega_count as i64 - self.h_value.min(self.h_sum_bound) as i64
    }

    /// Re-derives every witness value from its cycle type and checks the
    /// chain, the heights and the verdict rule.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Invariant(format!("certificate n = {} {}: {msg}", self.n, self.kind)));
        if self.witness_chain.len() != self.witness_types.len() {
            return bad("witness values and cycle types differ in length".into());
        }
        if !is_chain(&self.witness_chain) {
            return bad("witness is not a divisibility chain".into());
        }
        if self.verdict != Verdict::Indeterminate && self.h_value != self.witness_chain.len() {
            return bad(format!("h_value {} != witness length {}", self.h_value, self.witness_chain.len()));
        }
        if self.h_value_edges != Convention::Edges.measure(self.h_value) {
            return bad("edge height inconsistent with vertex height".into());
        }
        let n = self.n as usize;
        for (value, ct) in self.witness_chain.iter().zip(&self.witness_types) {
            let m = ct.support() as u64;
            if ct.has_fixed_points() || m < 2 || m > self.support_m {
                return bad(format!("cycle type {ct} is outside Ψ_{}", self.t_star));
            }
            let sizes = class_size(self.kind, n, ct)?;
            if !sizes.contains(value) {
                return bad(format!("{value} is not a class size of type {ct}"));
            }
        }
        if self.verdict != Verdict::Indeterminate {
            let expect = Verdict::from_bool(self.omega_count > self.h_value.min(self.h_sum_bound));
            if expect != self.verdict {
                return bad(format!("verdict {} disagrees with the inequality", self.verdict));
            }
        }
        Ok(())
    }

    /// Same certificate with `elapsed` zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> Certificate {
        Certificate { elapsed: 0.0, ..self.clone() }
    }
}

/// Shared state for case checks: one prime table and memoised `h(R_i)` per kind.
#[derive(Debug)]
pub struct Verifier {
    table: PrimeTable,
    support_cap: usize,
    sym: MovedHeights,
    alt: MovedHeights,
}

impl Verifier {
    /// Covers every degree up to `max_n` with the default support cap.
    pub fn new(max_n: u64) -> Self {
        Self::with_support_cap(max_n, DEFAULT_SUPPORT_CAP)
    }

    pub fn with_support_cap(max_n: u64, support_cap: usize) -> Self {
        Verifier {
            table: sieve(max_n.max(2)),
            support_cap,
            sym: MovedHeights::new(GroupKind::Sym, support_cap),
            alt: MovedHeights::new(GroupKind::Alt, support_cap),
        }
    }

    pub fn table(&self) -> &PrimeTable {
        &self.table
    }

    pub fn support_cap(&self) -> usize {
        self.support_cap
    }

    pub fn moved_heights(&self, kind: GroupKind) -> &MovedHeights {
        match kind {
            GroupKind::Sym => &self.sym,
            GroupKind::Alt => &self.alt,
        }
    }

    /// Strategy, `t*` and `r` that [`Verifier::check_case`] will use for `n`.
    pub fn plan(&self, n: u64) -> Result<Plan> {
        if n < MIN_CASE_DEGREE {
            return domain(format!("case checks start at n = {MIN_CASE_DEGREE}, got {n}"));
        }
        let omega = omega_set_with(&self.table, n)?;
        let r = select_r_with(&self.table, n)?;
        let mut notes = Vec::new();
        let (strategy, t_star) = match r {
            Some(r) => {
                // n - 2r < n - p, so Ψ_{2r} ⊆ Ψ_p and its chains are never longer
                notes.push(format!(
                    "direct-psi-p (t* = {}, m = {}) not evaluated: Ψ_{} ⊆ Ψ_{} so its height is at least as large",
                    omega.p,
                    n - omega.p,
                    2 * r,
                    omega.p
                ));
                (Strategy::RTrick, 2 * r)
            }
            None => {
                notes.push(format!("no prime r with p + 1 < 2r <= n (p = {}); r-trick unavailable", omega.p));
                (Strategy::DirectPsiP, omega.p)
            }
        };
        Ok(Plan { n, p: omega.p, omega_count: omega.count, strategy, r, t_star, support_m: n - t_star, notes })
    }

    pub fn check_case(&self, n: u64, kind: GroupKind) -> Result<Certificate> {
        let start = Instant::now();
        let plan = self.plan(n)?;
        let mut cert = Certificate {
            n,
            kind,
            strategy: plan.strategy,
            r: plan.r,
            p: plan.p,
            t_star: plan.t_star,
            support_m: plan.support_m,
            omega_count: plan.omega_count,
            h_value: 0,
            h_value_edges: 0,
            h_sum_bound: 0,
            verdict: Verdict::Indeterminate,
            witness_chain: Vec::new(),
            witness_types: Vec::new(),
            notes: plan.notes,
            elapsed: 0.0,
        };
        let m = plan.support_m as usize;
        if m > self.support_cap {
            cert.notes.push(format!("residual support {m} exceeds the enumeration cap {}", self.support_cap));
            cert.elapsed = start.elapsed().as_secs_f64();
            return Ok(cert);
        }

        let classes = psi_classes(kind, n as usize, plan.t_star as usize, None);
        let values: Vec<BigNat> = classes.keys().cloned().collect();
        let chain = height_of_sorted(&values, Convention::Vertices);
        let h_sum_bound = self.moved_heights(kind).sum(m, Convention::Vertices);
        if chain.height > h_sum_bound {
            return Err(Error::Invariant(format!(
                "n = {n} {kind}: direct chain height {} exceeds Σ h(R_i) = {h_sum_bound}; the class-size \
                 computation is inconsistent",
                chain.height
            )));
        }

        cert.h_value = chain.height;
        cert.h_value_edges = chain.edges();
        cert.h_sum_bound = h_sum_bound;
        cert.witness_types = chain.witness.iter().map(|v| classes[v].clone()).collect();
        cert.witness_chain = chain.witness;
        cert.verdict = Verdict::from_bool(plan.omega_count > chain.height.min(h_sum_bound));
        cert.elapsed = start.elapsed().as_secs_f64();
        Ok(cert)
    }
}

/// How a degree will be checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plan {
    pub n: u64,
    pub p: u64,
    pub omega_count: usize,
    pub strategy: Strategy,
    pub r: Option<u64>,
    pub t_star: u64,
    pub support_m: u64,
    pub notes: Vec<String>,
}

/// One-off [`Verifier::check_case`].
pub fn check_case(n: u64, kind: GroupKind) -> Result<Certificate> {
    Verifier::new(n).check_case(n, kind)
}
