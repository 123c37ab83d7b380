//! Conjugacy class size spectra of the symmetric and alternating groups.
//!
//! The crate computes exact class sizes from cycle types, longest chains in
//! the divisibility order on sets of class sizes, and the prime interval
//! `Ω = {t prime : n/2 < t <= n}`. The [`verify`] module combines these into
//! per-degree certificates showing that `|Ω|` exceeds every divisibility chain
//! among the class sizes an element of a Hall `Ω`-subgroup could have.
//!
//! ```
//! use class_spectrum::{spectrum, GroupKind};
//!
//! let a5 = spectrum(GroupKind::Alt, 5).unwrap();
//! let sizes: Vec<String> = a5.values().iter().map(|v| v.to_string()).collect();
//! assert_eq!(sizes, ["1", "12", "15", "20"]);
//! ```

pub mod classes;
pub mod decimal;
pub mod divgraph;
mod error;
pub mod partition;
pub mod primes;
pub mod verify;

pub use classes::{
    centralizer_order_sym, class_size, group_order, moved_class_sizes, phi_set, psi_set, spectrum, spectrum_capped,
    BigNat, Family, GroupKind, Spectrum, DEFAULT_SPECTRUM_CAP,
};
pub use divgraph::{height, ChainResult, Convention};
pub use error::{Error, Result};
pub use partition::{fixed_point_free_partitions, parity, partitions, CycleType, Parity};
pub use primes::{bound_report, factorial_ratio, omega_set, sieve, BoundReport, OmegaData, PrimeTable};
pub use verify::{check_case, check_omega_lemma, hz_table, select_r, Certificate, Verdict, Verifier};
