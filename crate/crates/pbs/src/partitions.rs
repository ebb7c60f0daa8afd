//! Ordered set partitions with a bounded, possibly empty head block, and the
//! two independent ways of counting them.
//!
//! For `j ≥ 0` elements and a level `l ≥ 0`, the objects enumerated here are
//! ordered partitions `B₀ | B₁ | ⋯ | B_r` of `{1, …, j}` in which
//!
//! * the *head* `B₀` may be empty but carries at most `l` elements,
//! * the other blocks `B₁, …, B_r` are nonempty,
//! * if any non-head block exists, `#(B₀ ∪ B₁) ≥ l + 1`, and
//! * the *index* of the partition is `#B₀ + r`.
//!
//! The count of such partitions with index `i`, written `R(j, i, l)`, is the
//! `(i, j)` entry of the `f`-vector transform matrix of the `l`-th partial
//! barycentric subdivision (see [`crate::transform`]): a partition as above
//! is exactly the combinatorial shadow of a chain face of the subdivided
//! `(j−1)`-simplex — the head records the bottom set of the chain and the
//! blocks record its successive increments, which is where both the head
//! bound `#B₀ ≤ l` and the threshold `#(B₀ ∪ B₁) ≥ l + 1` come from.
//!
//! At `l = 0` the head is forced empty and `R(j, i, 0) = i! · S(j, i)`
//! (ordered partitions into `i` blocks, with `S` the Stirling partition
//! numbers).
//!
//! Counting is implemented twice, on purpose:
//!
//! * [`count_restricted`] literally enumerates the partitions
//!   ([`enumerate_restricted`]) and takes the length;
//! * [`count_formula`] evaluates a closed form that sums over the head size
//!   `p` and the chain of cumulative-union sizes `l + 1 ≤ s₁ < ⋯ < s_t = j`:
//!
//!   ```text
//!   R(j, k, l) = Σ_p Σ_{s} C(s₁, p) · ( j! / (s₁! (s₂−s₁)! ⋯ (j−s_{t−1})!) ),
//!   ```
//!
//!   plus the degenerate head-only term `1` when `j = k ≤ l`.
//!
//! The test suites insist the two routes agree on a full grid; nothing in the
//! crate ever collapses them into one.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::rational::{binomial, multinomial};

/// An ordered set partition `B₀ | B₁ | ⋯ | B_r` of `{1, …, j}` with a
/// possibly-empty bounded head, in canonical form (each block sorted).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RestrictedPartition {
    head: Vec<u32>,
    blocks: Vec<Vec<u32>>,
}

impl RestrictedPartition {
    /// The head block `B₀` (possibly empty).
    pub fn head(&self) -> &[u32] {
        &self.head
    }

    /// The nonempty blocks `B₁, …, B_r` in order.
    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// The index `#B₀ + r`.
    pub fn index(&self) -> usize {
        self.head.len() + self.blocks.len()
    }
}

impl fmt::Display for RestrictedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_block = |b: &[u32]| format!("{{{}}}", b.iter().join(","));
        write!(f, "{}", fmt_block(&self.head))?;
        for b in &self.blocks {
            write!(f, "|{}", fmt_block(b))?;
        }
        Ok(())
    }
}

/// Ordered partitions of `elements` into `r` nonempty blocks, the first of
/// size at least `min_first`.
fn ordered_blocks(elements: &[u32], r: usize, min_first: usize) -> Vec<Vec<Vec<u32>>> {
    if r == 0 {
        return if elements.is_empty() { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let max_first = elements.len().saturating_sub(r - 1);
    for size in min_first.max(1)..=max_first {
        for first in elements.iter().copied().combinations(size) {
            let rest: Vec<u32> =
                elements.iter().copied().filter(|v| !first.contains(v)).collect();
            for mut tail in ordered_blocks(&rest, r - 1, 1) {
                let mut blocks = Vec::with_capacity(r);
                blocks.push(first.clone());
                blocks.append(&mut tail);
                out.push(blocks);
            }
        }
    }
    out
}

/// All restricted partitions of `{1, …, j}` at level `l`, any index, sorted
/// by `(head, blocks)` lexicographically.
pub fn enumerate_all(j: usize, l: usize) -> Vec<RestrictedPartition> {
    let universe: Vec<u32> = (1..=j as u32).collect();
    let mut out = Vec::new();
    for p in 0..=l.min(j) {
        for head in universe.iter().copied().combinations(p) {
            let rest: Vec<u32> =
                universe.iter().copied().filter(|v| !head.contains(v)).collect();
            if rest.is_empty() {
                // Head-only partition (r = 0): covers everything, no
                // threshold constraint applies.
                out.push(RestrictedPartition { head: head.clone(), blocks: vec![] });
                continue;
            }
            let min_first = (l + 1).saturating_sub(p).max(1);
            for r in 1..=rest.len() {
                for blocks in ordered_blocks(&rest, r, min_first) {
                    out.push(RestrictedPartition { head: head.clone(), blocks });
                }
            }
        }
    }
    out.sort();
    out
}

/// The restricted partitions of `{1, …, j}` at level `l` with index exactly
/// `i`, sorted by `(head, blocks)` lexicographically.
pub fn enumerate_restricted(j: usize, i: usize, l: usize) -> Vec<RestrictedPartition> {
    enumerate_all(j, l).into_iter().filter(|p| p.index() == i).collect()
}

/// `R(j, i, l)` by literal enumeration.
pub fn count_restricted(j: usize, i: usize, l: usize) -> BigInt {
    BigInt::from(enumerate_restricted(j, i, l).len())
}

/// The whole column `(R(j, 0, l), …, R(j, j, l))` from one enumeration
/// sweep — the index of a partition of `{1, …, j}` never exceeds `j`.
pub fn counts_by_index(j: usize, l: usize) -> Vec<BigInt> {
    let mut histogram = vec![BigInt::zero(); j + 1];
    for partition in enumerate_all(j, l) {
        histogram[partition.index()] += 1;
    }
    histogram
}

/// `R(j, k, l)` by the closed form: a sum over head sizes
/// `p ≤ min(l, k)` and cumulative-size chains `l+1 ≤ s₁ < ⋯ < s_t = j` with
/// `t = k − p`, each chain contributing `C(s₁, p)` head choices times the
/// multinomial `j! / (s₁! (s₂−s₁)! ⋯ (j−s_{t−1})!)` ways to realize the
/// increments, plus the head-only term `1` exactly when `j = k ≤ l`.
pub fn count_formula(j: usize, k: usize, l: usize) -> BigInt {
    if k > j {
        return BigInt::zero();
    }
    let mut total = BigInt::zero();
    for p in 0..=l.min(k) {
        let t = k - p;
        if t == 0 {
            // Head-only: B₀ = {1, …, j} requires p = j (and p ≤ l held).
            if j == k {
                total += 1;
            }
            continue;
        }
        if j < l + 1 {
            continue; // s₁ ≥ l + 1 is impossible.
        }
        // Choose the strictly increasing interior sizes s₁ < ⋯ < s_{t−1}
        // from {l+1, …, j−1}; s_t = j is forced.
        for mut sizes in ((l + 1)..j).combinations(t - 1) {
            sizes.push(j);
            let mut parts = Vec::with_capacity(t);
            let mut prev = 0usize;
            for &s in &sizes {
                parts.push(s - prev);
                prev = s;
            }
            total += binomial(sizes[0], p) * multinomial(&parts);
        }
    }
    total
}
