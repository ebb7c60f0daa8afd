//! Finite abstract simplicial complexes on a ground set `{1, …, n}`, stored
//! by their facets, together with face vectors and the `f ↔ h` transforms.
//!
//! A complex is represented by its inclusion-maximal faces (facets) in a
//! canonical form: every facet sorted ascending, the facet list an antichain
//! sorted by cardinality and then lexicographically. Construction normalizes
//! arbitrary input into this form, so two representations of the same complex
//! compare equal. The set `{∅}` (the *void* complex, with the empty set as its
//! only face) is representable by a single empty facet; an empty facet *list*
//! is rejected, since the complex with no faces at all has no meaningful face
//! vector.
//!
//! Face counts use arbitrary-precision integers: iterated subdivision makes
//! face numbers grow factorially, and every computation downstream of a face
//! count must stay exact.
//!
//! The `f`-vector of a complex of dimension `d − 1` is indexed here as
//! `f[i] = f_{i−1}` (the number of faces with `i` vertices), so `f[0] = 1`
//! accounts for the empty face. The `h`-vector is the usual binomial
//! transform,
//!
//! ```text
//! h_j = Σ_{i=0}^{j} (−1)^{j−i} · C(d−i, j−i) · f_{i−1},
//! ```
//!
//! with inverse `f_{i−1} = Σ_{j=0}^{i} C(d−j, i−j) · h_j`. Entries of an
//! `h`-vector may be negative (for instance two disjoint triangles have
//! `h = (1, 3, −3, 1)`), which is exactly why the real-rootedness results for
//! subdivided face polynomials carry a nonnegativity hypothesis — see
//! [`crate::transform`].

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::binomial;

/// A set of vertex labels, kept sorted ascending without repeats.
pub type VertexSet = Vec<u32>;

/// Sorts and deduplicates a vertex list into canonical [`VertexSet`] form.
pub fn normalize_vertex_set(mut v: Vec<u32>) -> VertexSet {
    v.sort_unstable();
    v.dedup();
    v
}

/// `a ⊆ b` for canonical (sorted, deduplicated) vertex sets.
pub fn is_subset(a: &[u32], b: &[u32]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

/// A finite abstract simplicial complex on the ground set `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: u32,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from a list of generating faces.
    ///
    /// Input faces may be unsorted and contain repeats; faces contained in
    /// other faces are dropped, so the stored facet list is an antichain in
    /// canonical order. `ground` fixes the ground set size `n`; when absent,
    /// the largest label used is taken. Passing a ground set larger than the
    /// labels in use is allowed and meaningful (the extra vertices are
    /// non-faces, which matters to [`Self::minimal_nonfaces`]).
    ///
    /// # Errors
    ///
    /// * [`Error::EmptyFacetList`] if `facets` is empty (use one empty facet
    ///   for the void complex `{∅}`).
    /// * [`Error::InvalidVertex`] if a label is `0` or exceeds `ground`.
    pub fn from_facets(facets: Vec<Vec<u32>>, ground: Option<u32>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        let mut normalized: Vec<VertexSet> =
            facets.into_iter().map(normalize_vertex_set).collect();
        let max_label = normalized.iter().filter_map(|f| f.last().copied()).max().unwrap_or(0);
        let ground = ground.unwrap_or(max_label);
        for f in &normalized {
            for &v in f {
                if v == 0 || v > ground {
                    return Err(Error::InvalidVertex { label: v, ground });
                }
            }
        }
        normalized.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
        normalized.dedup();
        // Antichain reduction: keep a face only if no other kept face
        // strictly contains it. (After dedup, containment by a *distinct*
        // face is strict containment.)
        let kept: Vec<VertexSet> = normalized
            .iter()
            .filter(|f| {
                !normalized.iter().any(|g| g.len() > f.len() && is_subset(f, g))
            })
            .cloned()
            .collect();
        Ok(SimplicialComplex { ground, facets: kept })
    }

    /// Builds a complex from facets already known to be pairwise
    /// incomparable (each in any order). Skips the quadratic antichain
    /// reduction of [`Self::from_facets`]; the antichain property is still
    /// asserted in debug builds.
    pub(crate) fn from_maximal_facets(ground: u32, facets: Vec<Vec<u32>>) -> SimplicialComplex {
        let mut facets: Vec<VertexSet> = facets.into_iter().map(normalize_vertex_set).collect();
        facets.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
        facets.dedup();
        debug_assert!(
            !facets
                .iter()
                .any(|f| facets.iter().any(|g| g.len() > f.len() && is_subset(f, g))),
            "from_maximal_facets requires an antichain"
        );
        SimplicialComplex { ground, facets }
    }

    /// The full simplex `2^{[n]}` on `n` vertices; `n = 0` gives the void
    /// complex `{∅}`.
    pub fn simplex(n: u32) -> Self {
        let facet: Vec<u32> = (1..=n).collect();
        SimplicialComplex { ground: n, facets: vec![facet] }
    }

    /// The boundary of the `n`-vertex simplex: all proper subsets of `[n]`.
    /// For `n = 1` this is the void complex `{∅}`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::EmptyFacetList`] for `n = 0`, whose boundary (the
    /// complex with no faces) is not representable.
    pub fn boundary_of_simplex(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyFacetList);
        }
        let all: Vec<u32> = (1..=n).collect();
        let facets: Vec<VertexSet> = (0..n)
            .map(|skip| all.iter().copied().filter(|&v| v != skip + 1).collect())
            .collect();
        Self::from_facets(facets, Some(n))
    }

    /// Ground set size `n`.
    pub fn ground_size(&self) -> u32 {
        self.ground
    }

    /// The facets, in canonical order (by cardinality, then lexicographic).
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// The dimension (largest facet cardinality minus one); `−1` for `{∅}`.
    pub fn dim(&self) -> i64 {
        self.max_facet_size() as i64 - 1
    }

    /// Number of vertices of the largest facet (dimension plus one).
    pub fn max_facet_size(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    /// Whether `face` (given in any order) is a face of the complex.
    pub fn is_face(&self, face: &[u32]) -> bool {
        let face = normalize_vertex_set(face.to_vec());
        self.facets.iter().any(|f| is_subset(&face, f))
    }

    /// All faces, grouped by cardinality: entry `k` lists the faces with `k`
    /// vertices in lexicographic order. Entry `0` is always `[∅]`.
    pub fn all_faces(&self) -> Vec<Vec<VertexSet>> {
        let mut by_size: Vec<BTreeSet<VertexSet>> = vec![BTreeSet::new(); self.max_facet_size() + 1];
        for facet in &self.facets {
            // Every subset of a facet, via bitmask over its (≤ 64) vertices.
            assert!(facet.len() < 64, "facet too large to enumerate subsets");
            for mask in 0u64..(1u64 << facet.len()) {
                let sub: VertexSet = facet
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                by_size[sub.len()].insert(sub);
            }
        }
        by_size.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// The `f`-vector `(f_{−1}, f_0, …, f_{d−1})`, with `f[i]` counting the
    /// faces with `i` vertices.
    pub fn f_vector(&self) -> FVector {
        let entries =
            self.all_faces().iter().map(|faces| BigInt::from(faces.len())).collect();
        FVector::new(entries).expect("face counts always form a valid f-vector")
    }

    /// The `h`-vector, the binomial transform of the `f`-vector.
    pub fn h_vector(&self) -> HVector {
        self.f_vector().to_h()
    }

    /// The restriction (full subcomplex) `K_W = {F ∈ K : F ⊆ W}`, on the same
    /// ground set.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidVertex`] if `w` mentions a label that is `0`
    /// or outside the ground set.
    pub fn restriction(&self, w: &[u32]) -> Result<Self> {
        let w = normalize_vertex_set(w.to_vec());
        for &v in &w {
            if v == 0 || v > self.ground {
                return Err(Error::InvalidVertex { label: v, ground: self.ground });
            }
        }
        let candidates: Vec<VertexSet> = self
            .facets
            .iter()
            .map(|f| f.iter().copied().filter(|v| w.binary_search(v).is_ok()).collect())
            .collect();
        let mut restricted = Self::from_facets(candidates, Some(self.ground))?;
        restricted.ground = self.ground;
        Ok(restricted)
    }

    /// The cone over the complex: a new apex vertex `n + 1` joined to every
    /// facet.
    pub fn cone(&self) -> Self {
        let apex = self.ground + 1;
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let mut g = f.clone();
                g.push(apex);
                g
            })
            .collect();
        Self::from_facets(facets, Some(apex)).expect("coning preserves validity")
    }

    /// The inclusion-minimal non-faces, in canonical order, optionally
    /// truncated to sets of at most `max_size` vertices.
    ///
    /// Works by face extension: a minimal non-face `M` with `s ≥ 1` vertices
    /// has all of its `(s−1)`-subsets among the faces, so `M = F ∪ {v}` for a
    /// face `F` with `s − 1` vertices. Candidates are generated that way and
    /// kept when they are not faces but all their co-dimension-one subsets
    /// are. Since every face has at most `dim + 1` vertices, minimal
    /// non-faces have at most `dim + 2`, and the search stops there without
    /// ever enumerating subsets of the ground set.
    pub fn minimal_nonfaces(&self, max_size: Option<usize>) -> Vec<VertexSet> {
        let faces: BTreeSet<VertexSet> = self.all_faces().into_iter().flatten().collect();
        let size_cap = {
            let natural = self.max_facet_size() + 1;
            max_size.map_or(natural, |m| m.min(natural))
        };
        let mut result: Vec<VertexSet> = Vec::new();
        for s in 1..=size_cap {
            let mut candidates: BTreeSet<VertexSet> = BTreeSet::new();
            for f in faces.iter().filter(|f| f.len() == s - 1) {
                for v in 1..=self.ground {
                    if f.binary_search(&v).is_err() {
                        let mut m = f.clone();
                        m.push(v);
                        candidates.insert(normalize_vertex_set(m));
                    }
                }
            }
            for m in candidates {
                if faces.contains(&m) {
                    continue;
                }
                let all_proper_subsets_are_faces = (0..m.len()).all(|skip| {
                    let sub: VertexSet = m
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    faces.contains(&sub)
                });
                if all_proper_subsets_are_faces {
                    result.push(m);
                }
            }
        }
        result
    }
}

/// The `f`-vector of a simplicial complex: entry `i` counts the faces with
/// `i` vertices, so entry `0` (the empty face) is always `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(Vec<BigInt>);

impl FVector {
    /// Wraps raw face counts.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Parse`] if the vector is empty, its first entry is
    /// not `1`, or any entry is negative.
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.first() != Some(&BigInt::one()) {
            return Err(Error::Parse {
                reason: "an f-vector starts with f_{−1} = 1".into(),
            });
        }
        if entries.iter().any(|e| e.sign() == num_bigint::Sign::Minus) {
            return Err(Error::Parse { reason: "face counts cannot be negative".into() });
        }
        Ok(FVector(entries))
    }

    /// The entries `(f_{−1}, f_0, …, f_{d−1})`.
    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    /// Consumes the wrapper.
    pub fn into_inner(self) -> Vec<BigInt> {
        self.0
    }

    /// `d`, the number of vertices of a largest face (`len − 1`).
    pub fn top_size(&self) -> usize {
        self.0.len() - 1
    }

    /// The `h`-vector with the same top size.
    pub fn to_h(&self) -> HVector {
        HVector(f_to_h(&self.0))
    }
}

/// The `h`-vector of a simplicial complex. Entries may be negative; the
/// leading entry is always `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector(Vec<BigInt>);

impl HVector {
    /// Wraps raw entries `(h_0, …, h_d)`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Parse`] if the vector is empty or does not start
    /// with `h_0 = 1`.
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.first() != Some(&BigInt::one()) {
            return Err(Error::Parse { reason: "an h-vector starts with h_0 = 1".into() });
        }
        Ok(HVector(entries))
    }

    /// The entries `(h_0, …, h_d)`.
    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    /// Consumes the wrapper.
    pub fn into_inner(self) -> Vec<BigInt> {
        self.0
    }

    /// `d` (`len − 1`).
    pub fn top_size(&self) -> usize {
        self.0.len() - 1
    }

    /// Whether every entry is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|e| e.sign() != num_bigint::Sign::Minus)
    }

    /// The `f`-vector with the same top size.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Parse`] if the inverse transform produces a vector
    /// that is not a valid `f`-vector (possible when the `h`-entries do not
    /// come from a complex).
    pub fn to_f(&self) -> Result<FVector> {
        FVector::new(h_to_f(&self.0))
    }
}

/// The binomial transform taking `(f_{−1}, …, f_{d−1})` to `(h_0, …, h_d)`:
/// `h_j = Σ_{i≤j} (−1)^{j−i} C(d−i, j−i) f_{i−1}` with `d = f.len() − 1`.
pub fn f_to_h(f: &[BigInt]) -> Vec<BigInt> {
    let d = f.len().saturating_sub(1);
    (0..f.len())
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let c = binomial(d - i, j - i) * &f[i];
                    if (j - i) % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .sum()
        })
        .collect()
}

/// The inverse binomial transform taking `(h_0, …, h_d)` to
/// `(f_{−1}, …, f_{d−1})`: `f_{i−1} = Σ_{j≤i} C(d−j, i−j) h_j`.
pub fn h_to_f(h: &[BigInt]) -> Vec<BigInt> {
    let d = h.len().saturating_sub(1);
    (0..h.len())
        .map(|i| (0..=i).map(|j| binomial(d - j, i - j) * &h[j]).sum())
        .collect()
}
