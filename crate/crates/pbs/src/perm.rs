//! Permutations with a descending prefix, their level statistics, and the
//! prefix-straightening injection that transports excedances.
//!
//! For `1 ≤ l ≤ d`, the class `S_d^l` consists of the permutations of
//! `{1, …, d}` whose first `l` values are decreasing. It has `d!/l!` elements
//! (choose the prefix as a set, order the rest freely), matching the number of
//! facets of the `l`-th partial barycentric subdivision of a `(d−1)`-simplex —
//! these permutations index those facets, which is why their statistics govern
//! the subdivision's face enumeration.
//!
//! Two statistics on `σ ∈ S_d^l` are implemented.
//!
//! * The **level descent set** `D^l(σ)` contains the prefix positions
//!   `i ∈ {1, …, l}` with `σ(i) > σ(l+1)` and the ordinary descent positions
//!   `i ∈ {l+1, …, d−1}` with `σ(i) > σ(i+1)`; for `l = d` there is no
//!   position `l + 1` and the set is empty (the whole word is one decreasing
//!   prefix, which contributes nothing). Since the prefix is decreasing, its
//!   contribution is an initial run `{1, …, p}` — the values above `σ(l+1)`.
//! * The **level excedance count** is the ordinary excedance count of the
//!   straightened permutation `χ(σ)` (see [`Permutation::straighten`]): `χ`
//!   reverses the decreasing prefix — in the generic case in two pieces
//!   around the value `σ(l+1)` — producing an injection `S_d^l → S_d` under
//!   which the excedance statistic becomes equidistributed with the level
//!   descent statistic at the top two levels `l ∈ {d−1, d−2}`.
//!
//! The refined counts `A(d, i, j, l)` (class members with `i` level descents
//! and last value `j`, see [`count_descent_last`]) are exactly the entries of
//! the `h`-transform matrices built in [`crate::transform`].

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A permutation `σ` of `{1, …, d}`, stored as the word `(σ(1), …, σ(d))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u32>,
}

/// A permutation statistic selectable in distribution tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    /// The level descent count `des^l`.
    Descent,
    /// The level excedance count `ex^l`.
    Excedance,
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Descent => write!(f, "descent"),
            Statistic::Excedance => write!(f, "excedance"),
        }
    }
}

impl Permutation {
    /// Wraps a word after checking it is a permutation of `{1, …, d}`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidPermutation`] if any value is out of range or
    /// repeated.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let d = word.len();
        let mut seen = vec![false; d];
        for &v in &word {
            if v == 0 || v as usize > d || seen[v as usize - 1] {
                return Err(Error::InvalidPermutation {
                    reason: format!("{word:?} is not a permutation of 1..={d}"),
                });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { word })
    }

    /// The degree `d`.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// Whether this is the (unique) permutation of the empty set.
    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The word `(σ(1), …, σ(d))`.
    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// `σ(i)` for a one-based position `i`.
    ///
    /// # Panics
    ///
    /// Panics if `i` is `0` or exceeds `d`.
    pub fn value(&self, i: usize) -> u32 {
        assert!((1..=self.len()).contains(&i), "position {i} out of 1..={}", self.len());
        self.word[i - 1]
    }

    /// Whether the first `l` values are strictly decreasing.
    pub fn has_descending_prefix(&self, l: usize) -> bool {
        l <= self.len() && self.word[..l].windows(2).all(|w| w[0] > w[1])
    }

    fn require_class(&self, l: usize) -> Result<()> {
        let d = self.len();
        if l == 0 || l > d {
            return Err(Error::level_in(l, 1, d));
        }
        if !self.has_descending_prefix(l) {
            return Err(Error::InvalidPermutation {
                reason: format!(
                    "{self} is not in the descending-prefix class for level {l}"
                ),
            });
        }
        Ok(())
    }

    /// The ordinary excedance count `#{i : σ(i) > i}`.
    pub fn excedance_count(&self) -> usize {
        self.word.iter().enumerate().filter(|(i, &v)| v as usize > i + 1).count()
    }

    /// The level descent set `D^l(σ)` as one-based positions.
    ///
    /// # Errors
    ///
    /// Returns an error unless `1 ≤ l ≤ d` and `σ` has a decreasing
    /// `l`-prefix.
    pub fn level_descent_set(&self, l: usize) -> Result<BTreeSet<usize>> {
        self.require_class(l)?;
        let d = self.len();
        let mut set = BTreeSet::new();
        if l == d {
            // No position l + 1 exists: the prefix contributes nothing and
            // there are no suffix positions.
            return Ok(set);
        }
        let pivot = self.word[l];
        for i in 1..=l {
            if self.word[i - 1] > pivot {
                set.insert(i);
            }
        }
        for i in (l + 1)..d {
            if self.word[i - 1] > self.word[i] {
                set.insert(i);
            }
        }
        Ok(set)
    }

    /// `des^l(σ)`, the size of the level descent set.
    ///
    /// # Errors
    ///
    /// Same conditions as [`Self::level_descent_set`].
    pub fn level_descent_count(&self, l: usize) -> Result<usize> {
        Ok(self.level_descent_set(l)?.len())
    }

    /// The prefix-straightening injection `χ : S_d^l → S_d`.
    ///
    /// If the value `σ(l+1)` does not separate the prefix — it is larger than
    /// the whole prefix (`σ(l+1) > σ(1)`), smaller than the whole prefix
    /// (`σ(l) > σ(l+1)`), or absent (`l = d`) — the prefix is reversed in
    /// place. Otherwise there is a unique `p ∈ {1, …, l−1}` with
    /// `σ(p) > σ(l+1) > σ(p+1)`, and the two prefix pieces around it are
    /// reversed separately:
    ///
    /// ```text
    /// (σ(p), …, σ(1), σ(l), …, σ(p+1), σ(l+1), …, σ(d)).
    /// ```
    ///
    /// The map is injective (the original prefix can be recovered by sorting
    /// the first `l` values back into decreasing order; which piece was which
    /// is determined by `σ(l+1)`), and the excedance count of the image
    /// defines the level excedance statistic.
    ///
    /// # Errors
    ///
    /// Same conditions as [`Self::level_descent_set`].
    pub fn straighten(&self, l: usize) -> Result<Permutation> {
        self.require_class(l)?;
        let d = self.len();
        let w = &self.word;
        let mut out = Vec::with_capacity(d);
        let whole_prefix = l == d || w[l] > w[0] || w[l - 1] > w[l];
        if whole_prefix {
            out.extend(w[..l].iter().rev());
        } else {
            let p = (1..l)
                .find(|&p| w[p - 1] > w[l] && w[l] > w[p])
                .expect("a separating position exists when the pivot falls inside the prefix");
            out.extend(w[..p].iter().rev());
            out.extend(w[p..l].iter().rev());
        }
        out.extend(&w[l..]);
        Ok(Permutation { word: out })
    }

    /// `ex^l(σ)`, the excedance count of the straightened permutation.
    ///
    /// # Errors
    ///
    /// Same conditions as [`Self::level_descent_set`].
    pub fn level_excedance_count(&self, l: usize) -> Result<usize> {
        Ok(self.straighten(l)?.excedance_count())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.word.iter().join(","))
    }
}

/// The class `S_d^l` in lexicographic order of words.
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] unless `1 ≤ l ≤ d`.
pub fn descending_prefix_class(d: usize, l: usize) -> Result<Vec<Permutation>> {
    if l == 0 || l > d {
        return Err(Error::level_in(l, 1, d));
    }
    let mut out = Vec::new();
    for prefix_set in (1..=d as u32).combinations(l) {
        let prefix: Vec<u32> = prefix_set.iter().rev().copied().collect();
        let rest: Vec<u32> =
            (1..=d as u32).filter(|v| !prefix_set.contains(v)).collect();
        let rest_len = rest.len();
        for suffix in rest.into_iter().permutations(rest_len) {
            let mut word = prefix.clone();
            word.extend(suffix);
            out.push(Permutation { word });
        }
    }
    out.sort();
    Ok(out)
}

/// The refined count `A(d, i, j, l)`: permutations in `S_d^l` with exactly
/// `i` level descents and last value `σ(d) = j`.
///
/// An out-of-range descent count `i` (negative, or above `d − 1`) yields `0`
/// rather than an error, so the counts can be summed over unconstrained
/// index ranges.
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] unless `1 ≤ l ≤ d`, and
/// [`Error::InvalidPermutation`] unless `1 ≤ j ≤ d`.
pub fn count_descent_last(d: usize, l: usize, descents: i64, last: u32) -> Result<u64> {
    if last == 0 || last as usize > d {
        return Err(Error::InvalidPermutation {
            reason: format!("last value {last} out of 1..={d}"),
        });
    }
    if descents < 0 || descents as usize > d.saturating_sub(1) {
        // The level descent count always lies in 0..=d−1.
        descending_prefix_class(d, l)?; // still validate l
        return Ok(0);
    }
    let mut count = 0u64;
    for sigma in descending_prefix_class(d, l)? {
        if sigma.value(d) == last
            && sigma.level_descent_count(l)? as i64 == descents
        {
            count += 1;
        }
    }
    Ok(count)
}

/// The distribution of a level statistic over `S_d^l`: entry `k` counts the
/// class members with statistic value `k`, for `k = 0, …, d − 1`.
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] unless `1 ≤ l ≤ d`.
pub fn distribution(d: usize, l: usize, stat: Statistic) -> Result<Vec<u64>> {
    let mut table = vec![0u64; d.max(1)];
    for sigma in descending_prefix_class(d, l)? {
        let value = match stat {
            Statistic::Descent => sigma.level_descent_count(l)?,
            Statistic::Excedance => sigma.level_excedance_count(l)?,
        };
        table[value] += 1;
    }
    Ok(table)
}

/// The distribution table of a level statistic over `S_d^l` for every level
/// from `d − 1` down to `2`: one `(level, distribution)` pair per column,
/// finest-printed-last order (matching how the tables are usually displayed,
/// with `l` decreasing left to right).
///
/// Each column sums to `d!/l!`, and every column is palindromic — even for
/// the levels where the descent and excedance statistics have *different*
/// distributions (they agree exactly at `l = d−1` and `l = d−2`).
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] if `d < 3` (no level in `2..=d−1`
/// exists).
pub fn distribution_table(d: usize, stat: Statistic) -> Result<Vec<(usize, Vec<u64>)>> {
    if d < 3 {
        return Err(Error::InvalidLevel {
            level: d,
            requirement: "d with at least one level in 2..=d-1 (d ≥ 3)".into(),
        });
    }
    (2..d)
        .rev()
        .map(|l| Ok((l, distribution(d, l, stat)?)))
        .collect()
}

/// All derangements of `{1, …, d}` (permutations without fixed points), in
/// lexicographic order.
pub fn derangements(d: usize) -> Vec<Permutation> {
    (1..=d as u32)
        .permutations(d)
        .filter(|w| w.iter().enumerate().all(|(i, &v)| v as usize != i + 1))
        .map(|word| Permutation { word })
        .collect()
}
