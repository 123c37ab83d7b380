//! Brute-force reference implementations.
//!
//! Nothing in here shares code with `class-spectrum`: conjugacy classes are
//! found by conjugating representatives with every group element, parity by
//! counting inversions, partition numbers by Euler's pentagonal recurrence and
//! primality by trial division. Everything is sized for desk-scale inputs.

use std::collections::{BTreeSet, HashMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    Sym,
    Alt,
}

/// One group element with everything the predicates need.
#[derive(Clone, Debug)]
pub struct Element {
    pub perm: Vec<u8>,
    /// Size of the conjugacy class of `perm` inside the group.
    pub class_size: u64,
    /// Number of points moved.
    pub support: usize,
    /// Cycle lengths including fixed points, sorted in decreasing order.
    pub cycles: Vec<usize>,
    /// Class index, shared by conjugate elements.
    pub class_id: usize,
}

fn all_perms(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    heap_permute(n, &mut cur, &mut out);
    out.sort();
    out
}

fn heap_permute(k: usize, a: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, a, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permute(k - 1, a, out);
}

/// Even iff the inversion count is even.
pub fn is_even(perm: &[u8]) -> bool {
    let mut inv = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    inv.is_multiple_of(2)
}

fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    // (a ∘ b)(x) = a(b(x))
    b.iter().map(|&x| a[x as usize]).collect()
}

fn inverse(a: &[u8]) -> Vec<u8> {
    let mut r = vec![0u8; a.len()];
    for (i, &x) in a.iter().enumerate() {
        r[x as usize] = i as u8;
    }
    r
}

fn cycles_of(perm: &[u8]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x] as usize;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// All elements of the group of degree `n`, with conjugacy classes computed by
/// conjugating each new representative by every group element.
pub fn elements(group: Group, n: usize) -> Vec<Element> {
    assert!(n <= 9, "oracle is exponential; keep n small");
    let perms: Vec<Vec<u8>> = all_perms(n).into_iter().filter(|p| group == Group::Sym || is_even(p)).collect();
    let index: HashMap<Vec<u8>, usize> = perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let inverses: Vec<Vec<u8>> = perms.iter().map(|p| inverse(p)).collect();
    let mut class_of = vec![usize::MAX; perms.len()];
    let mut class_sizes = Vec::new();
    for g in 0..perms.len() {
        if class_of[g] != usize::MAX {
            continue;
        }
        let id = class_sizes.len();
        let mut orbit = BTreeSet::new();
        for (h, hinv) in perms.iter().zip(&inverses) {
            let c = compose(&compose(h, &perms[g]), hinv);
            orbit.insert(index[&c]);
        }
        for &e in &orbit {
            class_of[e] = id;
        }
        class_sizes.push(orbit.len() as u64);
    }
    perms
        .into_iter()
        .enumerate()
        .map(|(i, perm)| {
            let support = perm.iter().enumerate().filter(|&(k, &v)| k != v as usize).count();
            let cycles = cycles_of(&perm);
            Element { class_size: class_sizes[class_of[i]], class_id: class_of[i], perm, support, cycles }
        })
        .collect()
}

fn sizes<'a>(it: impl Iterator<Item = &'a Element>) -> BTreeSet<u64> {
    it.map(|e| e.class_size).collect()
}

/// N(V_n), given every element of V_n.
pub fn spectrum(elems: &[Element]) -> BTreeSet<u64> {
    sizes(elems.iter())
}

/// Class sizes of elements that fix no point, given every element of V_i.
pub fn moved(elems: &[Element]) -> BTreeSet<u64> {
    sizes(elems.iter().filter(|e| e.support == e.perm.len()))
}

/// Class sizes of elements containing a cycle of length `t`.
pub fn phi(elems: &[Element], t: usize) -> BTreeSet<u64> {
    sizes(elems.iter().filter(|e| e.cycles.contains(&t)))
}

/// Class sizes of elements whose support lies in `[2, n - t]`.
pub fn psi(elems: &[Element], t: usize) -> BTreeSet<u64> {
    let n = elems.first().map_or(0, |e| e.perm.len());
    let max = n.saturating_sub(t);
    sizes(elems.iter().filter(|e| e.support >= 2 && e.support <= max))
}

/// One entry per conjugacy class: (cycle lengths including fixed points, size).
pub fn classes(group: Group, n: usize) -> Vec<(Vec<usize>, u64)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for e in elements(group, n) {
        if seen.insert(e.class_id) {
            out.push((e.cycles, e.class_size));
        }
    }
    out
}

/// Counts permutations of S_n commuting with `perm`.
pub fn sym_centralizer_order(perm: &[u8]) -> u64 {
    all_perms(perm.len()).iter().filter(|h| compose(h, perm) == compose(perm, h)).count() as u64
}

/// Builds a permutation of degree `n` with the given disjoint cycle lengths
/// laid out on consecutive points.
pub fn perm_with_cycles(n: usize, lengths: &[usize]) -> Vec<u8> {
    let mut p: Vec<u8> = (0..n as u8).collect();
    let mut start = 0;
    for &len in lengths {
        for k in 0..len {
            p[start + k] = (start + (k + 1) % len) as u8;
        }
        start += len;
    }
    assert!(start <= n);
    p
}

/// Partition numbers p(0..=m) via Euler's pentagonal number recurrence.
pub fn partition_numbers(m: usize) -> Vec<u64> {
    let mut p = vec![0u64; m + 1];
    p[0] = 1;
    for k in 1..=m {
        let mut acc: i128 = 0;
        let mut j: i64 = 1;
        loop {
            let g1 = (j * (3 * j - 1) / 2) as usize;
            if g1 > k {
                break;
            }
            let sign: i128 = if j % 2 == 1 { 1 } else { -1 };
            acc += sign * p[k - g1] as i128;
            let g2 = (j * (3 * j + 1) / 2) as usize;
            if g2 <= k {
                acc += sign * p[k - g2] as i128;
            }
            j += 1;
        }
        p[k] = acc as u64;
    }
    p
}

pub fn is_prime_trial(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Longest divisibility chain (counted in vertices) by checking every subset.
pub fn chain_height_bruteforce(values: &[u64]) -> usize {
    let mut v: Vec<u64> = values.to_vec();
    v.sort_unstable();
    v.dedup();
    assert!(v.len() <= 20);
    let mut best = 0;
    for mask in 0u32..(1u32 << v.len()) {
        let chosen: Vec<u64> = (0..v.len()).filter(|&i| mask >> i & 1 == 1).map(|i| v[i]).collect();
        if chosen.windows(2).all(|w| w[1] % w[0] == 0) {
            best = best.max(chosen.len());
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_and_a5_by_hand() {
        let s4 = elements(Group::Sym, 4);
        assert_eq!(spectrum(&s4).into_iter().collect::<Vec<_>>(), vec![1, 3, 6, 8]);
        assert_eq!(moved(&s4).into_iter().collect::<Vec<_>>(), vec![3, 6]);
        let a5 = elements(Group::Alt, 5);
        assert_eq!(spectrum(&a5).into_iter().collect::<Vec<_>>(), vec![1, 12, 15, 20]);
        assert_eq!(elements(Group::Sym, 5).len(), 120);
    }

    #[test]
    fn euler_recurrence() {
        let p = partition_numbers(10);
        assert_eq!(p[4], 5);
        assert_eq!(p[10], 42);
    }

    #[test]
    fn centralizer_of_transposition_in_s4() {
        assert_eq!(sym_centralizer_order(&perm_with_cycles(4, &[2])), 4);
        assert_eq!(sym_centralizer_order(&perm_with_cycles(5, &[5])), 5);
    }
}
