//! Exact conjugacy class sizes in `Sym_n` and `Alt_n`.
//!
//! A permutation of cycle type `λ` (padded with fixed points to degree `n`)
//! has centralizer order `z(λ) = ∏ k^{m_k} m_k!` in `Sym_n`, so its class has
//! `n!/z(λ)` elements. In `Alt_n` the class of an even permutation splits into
//! two classes of equal size exactly when all parts of the padded type are odd
//! and pairwise distinct.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::partition::{fixed_point_free_partitions, partitions, CycleType, Parity};

pub type BigNat = BigUint;

/// Largest degree for which [`spectrum`] enumerates every class by default.
pub const DEFAULT_SPECTRUM_CAP: usize = 45;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Sym,
    Alt,
}

impl GroupKind {
    pub const ALL: [GroupKind; 2] = [GroupKind::Sym, GroupKind::Alt];

    pub fn as_str(self) -> &'static str {
        match self {
            GroupKind::Sym => "sym",
            GroupKind::Alt => "alt",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sym" | "s" => Ok(GroupKind::Sym),
            "alt" | "a" => Ok(GroupKind::Alt),
            other => domain(format!("unknown group kind {other:?} (expected sym or alt)")),
        }
    }
}

pub fn factorial(n: usize) -> BigNat {
    falling_factorial(n, n)
}

/// `n (n-1) ... (n-m+1)`, i.e. `n!/(n-m)!`. Requires `m <= n`.
pub fn falling_factorial(n: usize, m: usize) -> BigNat {
    assert!(m <= n, "falling factorial needs m <= n");
    product_range(n - m + 1, n)
}

/// `lo * (lo+1) * ... * hi`, or 1 when the range is empty.
pub(crate) fn product_range(lo: usize, hi: usize) -> BigNat {
    if lo > hi {
        return BigNat::one();
    }
    // Split recursively so the multiplications stay balanced.
    if hi - lo < 16 {
        let mut acc = BigNat::one();
        let mut word: u64 = 1;
        for k in lo..=hi {
            match word.checked_mul(k as u64) {
                Some(w) => word = w,
                None => {
                    acc *= word;
                    word = k as u64;
                }
            }
        }
        return acc * word;
    }
    let mid = lo + (hi - lo) / 2;
    product_range(lo, mid) * product_range(mid + 1, hi)
}

/// `|V_n|`: `n!` for `Sym`, `n!/2` for `Alt` with `n >= 2`, and 1 for `Alt_0`, `Alt_1`.
pub fn group_order(kind: GroupKind, n: usize) -> BigNat {
    match kind {
        GroupKind::Sym => factorial(n),
        GroupKind::Alt if n < 2 => BigNat::one(),
        GroupKind::Alt => factorial(n) >> 1u32,
    }
}

/// `∏ k^{m_k} m_k!` over the parts actually present in `ct`.
fn centralizer_product(ct: &CycleType) -> BigNat {
    let mut z = BigNat::one();
    for (k, m) in ct.iter() {
        z *= BigNat::from(k).pow(m as u32);
        z *= factorial(m);
    }
    z
}

/// Order of the centralizer in `Sym_n` of a permutation of cycle type `λ`
/// padded with fixed points to degree `n`.
pub fn centralizer_order_sym(lambda: &CycleType, n: usize) -> Result<BigNat> {
    match lambda.padded(n) {
        Some(p) => Ok(centralizer_product(&p)),
        None => domain(format!("cycle type {lambda} has support {} > n = {n}", lambda.support())),
    }
}

/// Whether the `Sym_n` class of the (padded, even) type splits in `Alt_n`.
pub fn splits_in_alt(padded: &CycleType) -> bool {
    padded.iter().all(|(k, m)| k % 2 == 1 && m == 1)
}

/// Sizes of the `V_n` classes with cycle type `λ`. One entry for `Sym` and for
/// non-split `Alt` classes; two equal entries when the class splits in `Alt_n`.
pub fn class_size(kind: GroupKind, n: usize, lambda: &CycleType) -> Result<Vec<BigNat>> {
    let padded = match lambda.padded(n) {
        Some(p) => p,
        None => return domain(format!("cycle type {lambda} does not fit in degree {n}")),
    };
    if kind == GroupKind::Alt && lambda.parity() == Parity::Odd {
        return domain(format!("cycle type {lambda} is odd and has no class in Alt_{n}"));
    }
    if kind == GroupKind::Alt && n < 2 {
        return Ok(vec![BigNat::one()]);
    }
    let sym = factorial(n) / centralizer_product(&padded);
    Ok(alt_adjust(kind, &padded, sym))
}

fn alt_adjust(kind: GroupKind, padded: &CycleType, sym_size: BigNat) -> Vec<BigNat> {
    if kind == GroupKind::Alt && splits_in_alt(padded) {
        let half = sym_size >> 1u32;
        vec![half.clone(), half]
    } else {
        vec![sym_size]
    }
}

/// Which family of class sizes a [`Spectrum`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    /// All class sizes, `N(V_n)`.
    Full,
    /// Classes of `V_n` whose elements fix no point.
    Moved,
    /// Classes of elements containing a `t`-cycle.
    Phi { t: usize },
    /// Classes of elements with support in `[2, n - t]`.
    Psi { t: usize, support_cap: Option<usize> },
}

impl Family {
    pub fn label(&self) -> &'static str {
        match self {
            Family::Full => "full",
            Family::Moved => "moved",
            Family::Phi { .. } => "phi",
            Family::Psi { .. } => "psi",
        }
    }
}

/// A deduplicated, strictly increasing set of class sizes of `V_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    pub kind: GroupKind,
    pub n: usize,
    #[serde(flatten)]
    pub family: Family,
    #[serde(with = "crate::decimal::vec")]
    values: Vec<BigNat>,
}

impl Spectrum {
    pub fn new(kind: GroupKind, n: usize, family: Family, values: impl IntoIterator<Item = BigNat>) -> Self {
        let mut values: Vec<BigNat> = values.into_iter().collect();
        values.sort_unstable();
        values.dedup();
        if cfg!(debug_assertions) {
            let order = group_order(kind, n);
            debug_assert!(values.iter().all(|v| !v.is_zero() && order.is_multiple_of(v)));
        }
        Spectrum { kind, n, family, values }
    }

    pub fn values(&self) -> &[BigNat] {
        &self.values
    }

    pub fn into_values(self) -> Vec<BigNat> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, v: &BigNat) -> bool {
        self.values.binary_search(v).is_ok()
    }
}

/// `N(V_n)` with the default degree cap.
pub fn spectrum(kind: GroupKind, n: usize) -> Result<Spectrum> {
    spectrum_capped(kind, n, DEFAULT_SPECTRUM_CAP)
}

/// `N(V_n)`, refusing degrees above `cap`.
pub fn spectrum_capped(kind: GroupKind, n: usize, cap: usize) -> Result<Spectrum> {
    if n == 0 {
        return domain("spectrum needs n >= 1");
    }
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    let mut values = Vec::new();
    for lambda in partitions(n) {
        if kind == GroupKind::Alt && !lambda.parity().is_even() {
            continue;
        }
        values.extend(class_size(kind, n, &lambda)?);
    }
    Ok(Spectrum::new(kind, n, Family::Full, values))
}

/// `R_i`: class sizes in `V_i` of elements moving all `i` points.
pub fn moved_class_sizes(kind: GroupKind, i: usize) -> Spectrum {
    let values = fixed_point_free_partitions(i)
        .filter(|mu| kind == GroupKind::Sym || mu.parity().is_even())
        .flat_map(|mu| class_size(kind, i, &mu).expect("support equals degree"));
    Spectrum::new(kind, i, Family::Moved, values)
}

/// `Φ_t`: class sizes of elements made of one `t`-cycle and any permutation
/// of the remaining `n - t` points. Requires `n/2 < t <= n`; `t` need not be prime.
pub fn phi_set(kind: GroupKind, n: usize, t: usize) -> Result<Spectrum> {
    if t > n || 2 * t <= n {
        return domain(format!("phi_set needs n/2 < t <= n, got n = {n}, t = {t}"));
    }
    let mut values = Vec::new();
    for mu in partitions(n - t) {
        let mut combined = mu;
        combined.add_cycles(t, 1);
        if kind == GroupKind::Alt && !combined.parity().is_even() {
            continue;
        }
        values.extend(class_size(kind, n, &combined)?);
    }
    Ok(Spectrum::new(kind, n, Family::Phi { t }, values))
}

/// `Ψ_t` with one representative cycle type per class size.
///
/// Elements of support `m` with `2 <= m <= n - t` (optionally `m <= support_cap`),
/// moving every point of their support. In `Sym_n` their class size is
/// `n!/(n-m)! · m!/z(μ)`.
pub fn psi_classes(kind: GroupKind, n: usize, t: usize, support_cap: Option<usize>) -> BTreeMap<BigNat, CycleType> {
    let mut out = BTreeMap::new();
    let mut max_m = n.saturating_sub(t);
    if let Some(cap) = support_cap {
        max_m = max_m.min(cap);
    }
    for m in 2..=max_m {
        let ff = falling_factorial(n, m);
        for mu in fixed_point_free_partitions(m) {
            if kind == GroupKind::Alt && !mu.parity().is_even() {
                continue;
            }
            let sym = &ff / centralizer_product(&mu);
            let padded = mu.padded(n).expect("m <= n");
            for size in alt_adjust(kind, &padded, sym) {
                out.entry(size).or_insert_with(|| mu.clone());
            }
        }
    }
    out
}

/// `Ψ_t`: class sizes of `V_n` elements of support between 2 and `n - t`.
/// Empty when `n - t < 2`.
pub fn psi_set(kind: GroupKind, n: usize, t: usize, support_cap: Option<usize>) -> Result<Spectrum> {
    if t > n {
        return domain(format!("psi_set needs t <= n, got n = {n}, t = {t}"));
    }
    let classes = psi_classes(kind, n, t, support_cap);
    Ok(Spectrum::new(kind, n, Family::Psi { t, support_cap }, classes.into_keys()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> BigNat {
        BigNat::from(v)
    }

    fn vals(s: &Spectrum) -> Vec<u64> {
        s.values().iter().map(|v| u64::try_from(v).unwrap()).collect()
    }

    fn ct(parts: &[usize]) -> CycleType {
        CycleType::from_parts(parts.iter().copied())
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order(GroupKind::Sym, 4), nat(24));
        assert_eq!(group_order(GroupKind::Alt, 5), nat(60));
        assert_eq!(group_order(GroupKind::Alt, 1), nat(1));
        assert_eq!(group_order(GroupKind::Alt, 0), nat(1));
        assert_eq!(group_order(GroupKind::Alt, 2), nat(1));
        assert_eq!(factorial(25).to_string(), "15511210043330985984000000");
        assert_eq!(falling_factorial(10, 3), nat(720));
    }

    #[test]
    fn centralizers() {
        assert_eq!(centralizer_order_sym(&ct(&[2]), 4).unwrap(), nat(4));
        assert_eq!(centralizer_order_sym(&ct(&[]), 5).unwrap(), nat(120));
        assert_eq!(centralizer_order_sym(&ct(&[5]), 5).unwrap(), nat(5));
        // explicit fixed points merge with padding
        assert_eq!(centralizer_order_sym(&ct(&[2, 1]), 4).unwrap(), nat(4));
        assert!(matches!(centralizer_order_sym(&ct(&[3, 3]), 5), Err(Error::Domain(_))));
    }

    #[test]
    fn class_sizes_and_splitting() {
        assert_eq!(class_size(GroupKind::Sym, 4, &ct(&[2])).unwrap(), vec![nat(6)]);
        assert_eq!(class_size(GroupKind::Alt, 5, &ct(&[5])).unwrap(), vec![nat(12), nat(12)]);
        assert_eq!(class_size(GroupKind::Alt, 4, &ct(&[3])).unwrap(), vec![nat(4), nat(4)]);
        assert_eq!(class_size(GroupKind::Alt, 4, &ct(&[2, 2])).unwrap(), vec![nat(3)]);
        assert_eq!(class_size(GroupKind::Alt, 3, &ct(&[3])).unwrap(), vec![nat(1), nat(1)]);
        assert_eq!(class_size(GroupKind::Alt, 1, &ct(&[])).unwrap(), vec![nat(1)]);
        assert!(matches!(class_size(GroupKind::Alt, 5, &ct(&[2])), Err(Error::Domain(_))));
        assert!(class_size(GroupKind::Sym, 3, &ct(&[4])).is_err());
    }

    #[test]
    fn small_spectra() {
        assert_eq!(vals(&spectrum(GroupKind::Sym, 4).unwrap()), vec![1, 3, 6, 8]);
        assert_eq!(vals(&spectrum(GroupKind::Alt, 5).unwrap()), vec![1, 12, 15, 20]);
        assert_eq!(vals(&spectrum(GroupKind::Sym, 1).unwrap()), vec![1]);
        assert_eq!(vals(&spectrum(GroupKind::Alt, 2).unwrap()), vec![1]);
        assert_eq!(spectrum(GroupKind::Sym, 0).unwrap_err(), Error::Domain("spectrum needs n >= 1".into()));
        assert_eq!(spectrum(GroupKind::Sym, 46).unwrap_err(), Error::TooLarge { n: 46, cap: 45 });
        assert!(spectrum_capped(GroupKind::Alt, 46, 50).is_ok());
    }

    #[test]
    fn moved_sizes() {
        assert_eq!(vals(&moved_class_sizes(GroupKind::Sym, 4)), vec![3, 6]);
        assert!(moved_class_sizes(GroupKind::Sym, 1).is_empty());
        assert!(moved_class_sizes(GroupKind::Alt, 1).is_empty());
        assert_eq!(vals(&moved_class_sizes(GroupKind::Alt, 4)), vec![3]);
        assert!(moved_class_sizes(GroupKind::Alt, 2).is_empty());
        assert_eq!(vals(&moved_class_sizes(GroupKind::Alt, 3)), vec![1]);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(vals(&phi_set(GroupKind::Sym, 5, 5).unwrap()), vec![24]);
        assert_eq!(vals(&phi_set(GroupKind::Sym, 5, 4).unwrap()), vec![30]);
        assert_eq!(vals(&phi_set(GroupKind::Sym, 6, 4).unwrap()), vec![90]);
        assert!(phi_set(GroupKind::Sym, 6, 3).is_err());
        assert!(phi_set(GroupKind::Sym, 6, 7).is_err());
        // t = 4 is even, so the rest must be odd
        assert_eq!(vals(&phi_set(GroupKind::Alt, 6, 4).unwrap()), vec![90]);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(vals(&psi_set(GroupKind::Sym, 10, 7, None).unwrap()), vec![45, 240]);
        assert!(psi_set(GroupKind::Sym, 10, 9, None).unwrap().is_empty());
        assert!(psi_set(GroupKind::Alt, 10, 10, None).unwrap().is_empty());
        assert_eq!(vals(&psi_set(GroupKind::Sym, 6, 2, None).unwrap()), vec![15, 40, 45, 90]);
        assert_eq!(vals(&psi_set(GroupKind::Sym, 6, 2, Some(2)).unwrap()), vec![15]);
        assert!(psi_set(GroupKind::Sym, 6, 7, None).is_err());
    }

    #[test]
    fn spectrum_json_uses_decimal_strings() {
        let s = spectrum(GroupKind::Alt, 5).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"kind":"alt","n":5,"family":"full","values":["1","12","15","20"]}"#);
        let back: Spectrum = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        let psi = psi_set(GroupKind::Sym, 10, 7, Some(3)).unwrap();
        let json = serde_json::to_string(&psi).unwrap();
        assert_eq!(serde_json::from_str::<Spectrum>(&json).unwrap(), psi);
    }
}
