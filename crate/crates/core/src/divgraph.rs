//! Longest chains in the divisibility digraph of a finite set of naturals.
//!
//! The digraph has an edge `a -> b` when `a` properly divides `b`. Sorting by
//! value is a topological order, so the longest path falls out of a single
//! dynamic-programming pass.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::classes::BigNat;
use crate::error::{domain, Error, Result};

/// How a path is measured: by the number of vertices on it or by its edges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    #[default]
    Vertices,
    Edges,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::Vertices, Convention::Edges];

    pub fn as_str(self) -> &'static str {
        match self {
            Convention::Vertices => "vertices",
            Convention::Edges => "edges",
        }
    }

    /// Converts a chain's vertex count to this convention.
    pub fn measure(self, vertices: usize) -> usize {
        match self {
            Convention::Vertices => vertices,
            Convention::Edges => vertices.saturating_sub(1),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "vertices" | "v" => Ok(Convention::Vertices),
            "edges" | "e" => Ok(Convention::Edges),
            other => domain(format!("unknown convention {other:?} (expected vertices or edges)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainResult {
    pub height: usize,
    #[serde(with = "crate::decimal::vec")]
    pub witness: Vec<BigNat>,
    pub convention: Convention,
}

impl ChainResult {
    pub fn vertices(&self) -> usize {
        self.witness.len()
    }

    pub fn edges(&self) -> usize {
        Convention::Edges.measure(self.witness.len())
    }
}

/// `h(Θ)`: the longest divisibility chain in `values`, plus one witness chain.
///
/// Order and duplicates in `values` do not matter. Zeros are rejected.
pub fn height(values: &[BigNat], convention: Convention) -> Result<ChainResult> {
    if values.iter().any(Zero::is_zero) {
        return domain("divisibility heights are defined for positive integers only");
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(height_of_sorted(&sorted, convention))
}

/// [`height`] for input that is already strictly increasing and positive,
/// such as [`crate::Spectrum::values`].
pub fn height_of_sorted(sorted: &[BigNat], convention: Convention) -> ChainResult {
    debug_assert!(sorted.windows(2).all(|w| w[0] < w[1]));
    let witness: Vec<BigNat> = longest_chain(sorted).into_iter().map(|i| sorted[i].clone()).collect();
    if let Some(max) = sorted.last() {
        // a | b with a < b forces b >= 2a, so a chain below max has at most bits(max) members.
        assert!(
            witness.len() as u64 <= max.bits(),
            "chain of {} elements below {} violates the doubling bound",
            witness.len(),
            max
        );
    }
    debug_assert!(is_chain(&witness));
    ChainResult { height: convention.measure(witness.len()), witness, convention }
}

/// Indices into `sorted` of a longest chain. Among longest chains the one
/// ending at the smallest value is chosen, and each predecessor is the
/// smallest value achieving the best height, so the result is deterministic.
fn longest_chain(sorted: &[BigNat]) -> Vec<usize> {
    // levels[h] holds indices whose longest chain ending there has h + 1 vertices
    let mut levels: Vec<Vec<usize>> = Vec::new();
    let mut pred: Vec<Option<usize>> = vec![None; sorted.len()];
    for (b, value) in sorted.iter().enumerate() {
        let mut level = 0;
        'search: for h in (0..levels.len()).rev() {
            for &a in &levels[h] {
                if value.is_multiple_of(&sorted[a]) {
                    pred[b] = Some(a);
                    level = h + 1;
                    break 'search;
                }
            }
        }
        if level == levels.len() {
            levels.push(Vec::new());
        }
        levels[level].push(b);
    }
    let Some(top) = levels.last() else {
        return Vec::new();
    };
    let mut chain = vec![top[0]];
    while let Some(p) = pred[*chain.last().unwrap()] {
        chain.push(p);
    }
    chain.reverse();
    chain
}

/// Whether `chain` is strictly increasing with each element dividing the next.
pub fn is_chain(chain: &[BigNat]) -> bool {
    chain.iter().all(|v| !v.is_zero()) && chain.windows(2).all(|w| w[0] < w[1] && w[1].is_multiple_of(&w[0]))
}
