//! Sums of chain heights over the fixed-point-free class families `R_i`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::classes::{moved_class_sizes, GroupKind};
use crate::divgraph::{height_of_sorted, Convention};

/// Published upper bounds on `h(Ψ_t)` indexed by `m = n - t`.
pub const PUBLISHED_HZ_BOUNDS: [(usize, usize); 13] = [
    (2, 1),
    (3, 2),
    (4, 3),
    (5, 5),
    (6, 6),
    (7, 8),
    (8, 11),
    (9, 14),
    (10, 18),
    (11, 21),
    (12, 26),
    (13, 30),
    (18, 69),
];

pub fn published_bound(m: usize) -> Option<usize> {
    PUBLISHED_HZ_BOUNDS.iter().find(|&&(k, _)| k == m).map(|&(_, b)| b)
}

/// Lazily computed vertex heights `h(R_i)` for one group kind, shareable
/// across threads.
#[derive(Debug)]
pub struct MovedHeights {
    kind: GroupKind,
    cells: Vec<OnceLock<usize>>,
}

impl MovedHeights {
    pub fn new(kind: GroupKind, max_i: usize) -> Self {
        MovedHeights { kind, cells: (0..=max_i).map(|_| OnceLock::new()).collect() }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn max_i(&self) -> usize {
        self.cells.len() - 1
    }

    /// `h(R_i)` counted in vertices. Panics past `max_i`.
    pub fn height(&self, i: usize) -> usize {
        *self.cells[i].get_or_init(|| {
            let r = moved_class_sizes(self.kind, i);
            height_of_sorted(r.values(), Convention::Vertices).height
        })
    }

    /// `Σ_{i=1}^{m} h(R_i)` under `convention`.
    pub fn sum(&self, m: usize, convention: Convention) -> usize {
        (1..=m).map(|i| convention.measure(self.height(i))).sum()
    }

    /// Forces every entry up to `max_i`, in parallel.
    pub fn warm(&self, upto: usize) {
        use rayon::prelude::*;
        let order: Vec<usize> = (1..=upto.min(self.max_i())).rev().collect();
        order.into_par_iter().for_each(|i| {
            self.height(i);
        });
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HzTableRow {
    pub m: usize,
    pub published_bound: Option<usize>,
    /// Keyed `"<kind>/<convention>"`, e.g. `"alt/vertices"`.
    pub computed: BTreeMap<String, usize>,
}

impl HzTableRow {
    pub fn get(&self, kind: GroupKind, convention: Convention) -> Option<usize> {
        self.computed.get(&key(kind, convention)).copied()
    }

    /// Combinations whose sum exceeds the published bound for this row.
    pub fn exceeding(&self) -> Vec<(&str, usize)> {
        match self.published_bound {
            Some(b) => self.computed.iter().filter(|(_, &v)| v > b).map(|(k, &v)| (k.as_str(), v)).collect(),
            None => Vec::new(),
        }
    }

    /// Whether some combination stays within the published bound.
    pub fn reproduced(&self) -> Option<bool> {
        self.published_bound.map(|b| self.computed.values().any(|&v| v <= b))
    }
}

pub fn key(kind: GroupKind, convention: Convention) -> String {
    format!("{kind}/{convention}")
}

/// Rows `m = 2..=max_m` of `Σ_{i=1}^{m} h(R_i)` for each requested kind under
/// both conventions.
pub fn hz_table(max_m: usize, kinds: &[GroupKind]) -> Vec<HzTableRow> {
    let heights: Vec<MovedHeights> = kinds.iter().map(|&k| MovedHeights::new(k, max_m)).collect();
    for h in &heights {
        h.warm(max_m);
    }
    hz_table_with(max_m, &heights)
}

pub(crate) fn hz_table_with(max_m: usize, heights: &[MovedHeights]) -> Vec<HzTableRow> {
    (2..=max_m)
        .map(|m| {
            let mut computed = BTreeMap::new();
            for h in heights {
                for c in Convention::ALL {
                    computed.insert(key(h.kind(), c), h.sum(m, c));
                }
            }
            HzTableRow { m, published_bound: published_bound(m), computed }
        })
        .collect()
}
