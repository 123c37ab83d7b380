use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check_omega_lemma_with, Certificate, Verdict, Verifier, MIN_CASE_DEGREE};
use crate::classes::{BigNat, GroupKind};
use crate::error::{domain, Error, Result};
use crate::primes::sieve;

/// Compact view of a certificate for listing failures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSummary {
    pub n: u64,
    pub kind: GroupKind,
    pub omega_count: usize,
    pub h_value: usize,
    pub h_sum_bound: usize,
    #[serde(with = "crate::decimal::vec")]
    pub witness_chain: Vec<BigNat>,
    pub notes: Vec<String>,
}

impl From<&Certificate> for CaseSummary {
    fn from(c: &Certificate) -> Self {
        CaseSummary {
            n: c.n,
            kind: c.kind,
            omega_count: c.omega_count,
            h_value: c.h_value,
            h_sum_bound: c.h_sum_bound,
            witness_chain: c.witness_chain.clone(),
            notes: c.notes.clone(),
        }
    }
}

/// Scheduling-independent aggregate of a scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub from: u64,
    pub to: u64,
    pub kinds: Vec<GroupKind>,
    pub certificates: usize,
    pub pass: usize,
    pub fail: usize,
    pub indeterminate: usize,
    pub by_strategy: BTreeMap<String, usize>,
    pub max_h_value: usize,
    pub max_support_m: u64,
    /// Smallest `|Ω| - h` over decided certificates.
    pub min_margin: Option<i64>,
    pub failures: Vec<CaseSummary>,
    pub indeterminate_cases: Vec<CaseSummary>,
}

impl ScanSummary {
    pub fn all_pass(&self) -> bool {
        self.fail == 0 && self.indeterminate == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub summary: ScanSummary,
    pub certificates: Vec<Certificate>,
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().map_err(|e| Error::Pool(e.to_string()))
}

impl Verifier {
    /// Runs [`Verifier::check_case`] for every `n` in `[from, to]` and every
    /// kind on up to `jobs` workers. Certificates come back ordered by
    /// `(n, kind)` position regardless of scheduling.
    pub fn scan(&self, from: u64, to: u64, kinds: &[GroupKind], jobs: usize) -> Result<ScanReport> {
        if from < MIN_CASE_DEGREE || from > to {
            return domain(format!("scan needs {MIN_CASE_DEGREE} <= from <= to, got [{from}, {to}]"));
        }
        if to > self.table().limit() {
            return domain(format!("scan end {to} exceeds the verifier's sieve limit {}", self.table().limit()));
        }
        let plans: Vec<_> = (from..=to).map(|n| self.plan(n)).collect::<Result<_>>()?;
        let max_m = plans.iter().map(|p| p.support_m as usize).max().unwrap_or(0).min(self.support_cap());

        let jobs_list: Vec<(u64, GroupKind)> = (from..=to).flat_map(|n| kinds.iter().map(move |&k| (n, k))).collect();
        let certificates = pool(jobs)?.install(|| -> Result<Vec<Certificate>> {
            for &k in kinds {
                self.moved_heights(k).warm(max_m);
            }
            jobs_list.par_iter().map(|&(n, k)| self.check_case(n, k)).collect()
        })?;

        let summary = summarize(from, to, kinds, &certificates);
        Ok(ScanReport { summary, certificates })
    }
}

fn summarize(from: u64, to: u64, kinds: &[GroupKind], certs: &[Certificate]) -> ScanSummary {
    let mut s = ScanSummary {
        from,
        to,
        kinds: kinds.to_vec(),
        certificates: certs.len(),
        pass: 0,
        fail: 0,
        indeterminate: 0,
        by_strategy: BTreeMap::new(),
        max_h_value: 0,
        max_support_m: 0,
        min_margin: None,
        failures: Vec::new(),
        indeterminate_cases: Vec::new(),
    };
    for c in certs {
        *s.by_strategy.entry(c.strategy.to_string()).or_insert(0) += 1;
        s.max_support_m = s.max_support_m.max(c.support_m);
        match c.verdict {
            Verdict::Pass => s.pass += 1,
            Verdict::Fail => {
                s.fail += 1;
                s.failures.push(c.into());
            }
            Verdict::Indeterminate => {
                s.indeterminate += 1;
                s.indeterminate_cases.push(c.into());
                continue;
            }
        }
        s.max_h_value = s.max_h_value.max(c.h_value);
        let margin = c.margin();
        s.min_margin = Some(s.min_margin.map_or(margin, |m| m.min(margin)));
    }
    s
}

/// Aggregate of `2^|Ω| > n!/p!` over a range of degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaSweep {
    pub from: u64,
    pub to: u64,
    pub checked: u64,
    pub pass: u64,
    pub fail: u64,
    /// Failing degrees, ascending.
    pub failures: Vec<u64>,
}

/// [`super::check_omega_lemma`] for every `n` in `[from, to]`, on up to `jobs` workers.
pub fn omega_sweep(from: u64, to: u64, jobs: usize) -> Result<OmegaSweep> {
    if from < 3 || from > to {
        return domain(format!("omega sweep needs 3 <= from <= to, got [{from}, {to}]"));
    }
    let table = sieve(to);
    let verdicts = pool(jobs)?.install(|| -> Result<Vec<(u64, Verdict)>> {
        (from..=to).into_par_iter().map(|n| check_omega_lemma_with(&table, n).map(|c| (n, c.verdict))).collect()
    })?;
    let failures: Vec<u64> = verdicts.iter().filter(|(_, v)| *v != Verdict::Pass).map(|&(n, _)| n).collect();
    Ok(OmegaSweep {
        from,
        to,
        checked: verdicts.len() as u64,
        pass: (verdicts.len() - failures.len()) as u64,
        fail: failures.len() as u64,
        failures,
    })
}
