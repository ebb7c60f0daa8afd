//! The `l`-th partial barycentric subdivision: chain faces, the explicit
//! subdivided complex with its vertex dictionary, and the order-complex
//! specialization at `l = 1`.
//!
//! Fix a complex `Δ` and a level `l ≥ 1`. The `l`-th partial barycentric
//! subdivision `sd_l(Δ)` barycentrically subdivides only the faces with more
//! than `l` vertices: faces with at most `l` vertices survive untouched,
//! while every face `G` with `#G ≥ l + 1` contributes a new barycenter
//! vertex `b_G`. At `l = 1` every edge and higher face is subdivided (the
//! classical barycentric subdivision); once `l` reaches the largest facet
//! size nothing is subdivided at all and `sd_l(Δ) = Δ`.
//!
//! # Chain faces
//!
//! A face of `sd_l(Δ)` is a *chain face*: a strictly increasing chain
//! `A₀ ⊂ A₁ ⊂ ⋯ ⊂ A_r` of faces of `Δ` such that
//!
//! * **(C1)** the bottom set `A₀` has at most `l` vertices (it may be empty),
//! * **(C2)** the chain face has `#A₀ + r` vertices: the vertices of `A₀`
//!   kept as original vertices, plus the barycenters `b_{A₁}, …, b_{A_r}`,
//! * **(C3)** if `r ≥ 1` then `#A₁ ≥ l + 1` (only faces above the threshold
//!   have barycenters),
//! * **(C4)** `A_r` is a face of `Δ` (then so is every `A_i ⊆ A_r`).
//!
//! The empty face of `sd_l(Δ)` is the chain `(∅)` with `r = 0`.
//! [`chain_faces`] enumerates all chain faces grouped by vertex count, which
//! is the enumeration route to the subdivision's `f`-vector.
//!
//! # Facets, without antichain reduction
//!
//! The facets of `sd_l(Δ)` are generated directly, one batch per facet `F`
//! of `Δ`: if `#F = m ≤ l` the facet `F` survives as the bare chain `(F)`;
//! otherwise the facets over `F` are exactly the chains with sizes
//! `l, l+1, …, m` ending at `A_r = F`, obtained by deleting one vertex of
//! `F` at a time down to size `l`. That gives `m·(m−1)⋯(l+1) = m!/l!` facets
//! over `F` — in particular `d!/l!` facets for the `(d−1)`-simplex. Each of
//! these chains is maximal in `sd_l(Δ)` (its sizes already form the longest
//! possible run ending at a facet, and its bottom set cannot shrink without
//! dropping below the run), and chains over different facets are distinct
//! (they contain different top barycenters, or are different bare facets),
//! so the construction never needs the quadratic antichain reduction.
//!
//! # Vertex labels
//!
//! The subdivided complex lives on the ground set `{1, …, n + b}` where `n`
//! is the original ground size and `b` the number of barycenters: original
//! vertices keep their labels, and barycenters are labeled `n+1, n+2, …` in
//! order of increasing face size, lexicographic within a size. The
//! [`SubdivisionDictionary`] records the meaning of every label.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::complex::{is_subset, normalize_vertex_set, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};

/// What a vertex label of a subdivided complex stands for.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum SubdivisionVertex {
    /// An original vertex of the base complex, keeping its label.
    Original(u32),
    /// The barycenter of a base face with at least `l + 1` vertices.
    Barycenter(VertexSet),
}

impl fmt::Display for SubdivisionVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubdivisionVertex::Original(v) => write!(f, "{v}"),
            SubdivisionVertex::Barycenter(set) => {
                write!(f, "b{{{}}}", set.iter().join(","))
            }
        }
    }
}

/// The label dictionary of a subdivided complex: entry `k` is the meaning of
/// label `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionDictionary {
    entries: Vec<SubdivisionVertex>,
    barycenter_labels: BTreeMap<VertexSet, u32>,
}

impl SubdivisionDictionary {
    fn new(entries: Vec<SubdivisionVertex>) -> Self {
        let barycenter_labels = entries
            .iter()
            .enumerate()
            .filter_map(|(k, e)| match e {
                SubdivisionVertex::Barycenter(set) => Some((set.clone(), k as u32 + 1)),
                SubdivisionVertex::Original(_) => None,
            })
            .collect();
        SubdivisionDictionary { entries, barycenter_labels }
    }

    /// Number of labels.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Whether the dictionary is empty (subdivision of a complex on zero
    /// vertices).
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The meaning of a label, or `None` if the label is out of range.
    pub fn get(&self, label: u32) -> Option<&SubdivisionVertex> {
        (label >= 1).then(|| self.entries.get(label as usize - 1)).flatten()
    }

    /// The label of the barycenter of `face`, if `face` has one.
    pub fn barycenter_label(&self, face: &[u32]) -> Option<u32> {
        self.barycenter_labels.get(&normalize_vertex_set(face.to_vec())).copied()
    }

    /// Iterates over `(label, meaning)` pairs in label order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &SubdivisionVertex)> {
        self.entries.iter().enumerate().map(|(k, e)| (k as u32 + 1, e))
    }
}

/// A chain face `A₀ ⊂ A₁ ⊂ ⋯ ⊂ A_r` of a partial barycentric subdivision.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ChainFace {
    sets: Vec<VertexSet>,
}

impl ChainFace {
    /// Builds and validates a chain face for the subdivision of `base` at
    /// level `level`. The sets may be given unnormalized; `sets[0]` is `A₀`
    /// and may be empty. The empty face of the subdivision is the chain
    /// `(∅)`.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidLevel`] for `level = 0`; [`Error::InvalidChain`]
    /// describing the violated condition otherwise.
    pub fn new(sets: Vec<Vec<u32>>, base: &SimplicialComplex, level: usize) -> Result<Self> {
        if level == 0 {
            return Err(Error::level_at_least_one(level));
        }
        let sets: Vec<VertexSet> = sets.into_iter().map(normalize_vertex_set).collect();
        if sets.is_empty() {
            return Err(Error::InvalidChain {
                reason: "a chain face has at least the bottom set (possibly empty)".into(),
            });
        }
        let chain = ChainFace { sets };
        chain.validate(base, level)?;
        Ok(chain)
    }

    /// Checks conditions (C1)–(C4) against a base complex and level.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidChain`] naming the violated condition.
    pub fn validate(&self, base: &SimplicialComplex, level: usize) -> Result<()> {
        let fail = |reason: String| Err(Error::InvalidChain { reason });
        if self.sets[0].len() > level {
            return fail(format!(
                "(C1) bottom set {:?} has more than {level} vertices",
                self.sets[0]
            ));
        }
        for w in self.sets.windows(2) {
            if w[0].len() >= w[1].len() || !is_subset(&w[0], &w[1]) {
                return fail(format!("chain is not strictly increasing: {:?} ⊄ {:?}", w[0], w[1]));
            }
        }
        if self.sets.len() > 1 && self.sets[1].len() < level + 1 {
            return fail(format!(
                "(C3) first barycenter set {:?} has fewer than {} vertices",
                self.sets[1],
                level + 1
            ));
        }
        let top = self.sets.last().expect("chains are nonempty");
        if !base.is_face(top) {
            return fail(format!("(C4) top set {top:?} is not a face of the base complex"));
        }
        Ok(())
    }

    /// The sets `A₀, A₁, …, A_r` in order.
    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    /// The bottom set `A₀` (possibly empty).
    pub fn bottom(&self) -> &VertexSet {
        &self.sets[0]
    }

    /// The top set `A_r`.
    pub fn top(&self) -> &VertexSet {
        self.sets.last().expect("chains are nonempty")
    }

    /// `r`, the number of barycenter entries.
    pub fn barycenter_count(&self) -> usize {
        self.sets.len() - 1
    }

    /// The number of vertices `#A₀ + r` of this face — condition (C2).
    pub fn cardinality(&self) -> usize {
        self.sets[0].len() + self.barycenter_count()
    }
}

impl fmt::Display for ChainFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.sets.iter().map(|s| format!("{{{}}}", s.iter().join(","))).collect();
        write!(f, "{}", parts.join(" ⊂ "))
    }
}

/// A subdivided complex together with its label dictionary and the data it
/// was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    complex: SimplicialComplex,
    dictionary: SubdivisionDictionary,
    level: usize,
}

impl Subdivision {
    /// The subdivided complex, on labels explained by [`Self::dictionary`].
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// The meaning of each vertex label.
    pub fn dictionary(&self) -> &SubdivisionDictionary {
        &self.dictionary
    }

    /// The subdivision level `l`.
    pub fn level(&self) -> usize {
        self.level
    }

    /// Translates a chain face into the vertex labels of the subdivided
    /// complex: the bottom set keeps its labels, each barycenter set maps to
    /// its label.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidChain`] if a chain set has no barycenter label (the
    /// chain does not belong to this subdivision).
    pub fn label_chain(&self, chain: &ChainFace) -> Result<VertexSet> {
        let mut labels: Vec<u32> = chain.bottom().clone();
        for set in &chain.sets()[1..] {
            let label = self.dictionary.barycenter_label(set).ok_or_else(|| {
                Error::InvalidChain {
                    reason: format!("{set:?} has no barycenter in this subdivision"),
                }
            })?;
            labels.push(label);
        }
        Ok(normalize_vertex_set(labels))
    }
}

/// All chain faces of `sd_l(base)`, grouped by vertex count: entry `c` lists
/// the chain faces with `c` vertices, sorted lexicographically by their set
/// sequences. Entry `0` is the empty chain `(∅)` alone.
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] for `level = 0`.
pub fn chain_faces(base: &SimplicialComplex, level: usize) -> Result<Vec<Vec<ChainFace>>> {
    if level == 0 {
        return Err(Error::level_at_least_one(level));
    }
    let faces: Vec<VertexSet> = base.all_faces().into_iter().flatten().collect();
    let mut grouped: Vec<Vec<ChainFace>> = vec![Vec::new(); base.max_facet_size() + 1];
    // Depth-first extension: start from each admissible bottom set, extend
    // by strict superset faces, the first extension jumping past the
    // threshold (C3).
    fn extend(
        chain: &mut Vec<VertexSet>,
        faces: &[VertexSet],
        level: usize,
        grouped: &mut [Vec<ChainFace>],
    ) {
        let cardinality = chain[0].len() + chain.len() - 1;
        grouped[cardinality].push(ChainFace { sets: chain.clone() });
        let last = chain.last().expect("chains are nonempty").clone();
        let min_next = if chain.len() == 1 { level + 1 } else { last.len() + 1 };
        for g in faces {
            if g.len() >= min_next && is_subset(&last, g) {
                chain.push(g.clone());
                extend(chain, faces, level, grouped);
                chain.pop();
            }
        }
    }
    for a0 in faces.iter().filter(|f| f.len() <= level) {
        let mut chain = vec![a0.clone()];
        extend(&mut chain, &faces, level, &mut grouped);
    }
    for group in &mut grouped {
        group.sort();
    }
    Ok(grouped)
}

/// The maximal chains over one base facet `F`: sizes `l, l+1, …, #F` ending
/// at `F`, generated by deleting one vertex at a time. For `#F ≤ l` the
/// single bare chain `(F)`.
fn maximal_chains_over(facet: &VertexSet, level: usize) -> Vec<Vec<VertexSet>> {
    if facet.len() <= level {
        return vec![vec![facet.clone()]];
    }
    // Chains are built top-down and reversed at the leaves.
    fn descend(current: &VertexSet, level: usize, stack: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
        stack.push(current.clone());
        if current.len() == level {
            out.push(stack.iter().rev().cloned().collect());
        } else {
            for skip in 0..current.len() {
                let smaller: VertexSet = current
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                descend(&smaller, level, stack, out);
            }
        }
        stack.pop();
    }
    let mut out = Vec::new();
    descend(facet, level, &mut Vec::new(), &mut out);
    out
}

/// Constructs `sd_l(base)` explicitly: the subdivided complex on labeled
/// vertices together with the dictionary explaining every label.
///
/// Original vertices keep their labels `1..=n` (including ground-set
/// vertices that are not faces); barycenters of the faces with at least
/// `l + 1` vertices get labels `n+1, n+2, …` ordered by face size, then
/// lexicographically. When `l` is at least the largest facet size there is
/// nothing to subdivide and the complex comes back unchanged (with a
/// dictionary mapping every label to itself).
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] for `level = 0`.
pub fn partial_subdivision(base: &SimplicialComplex, level: usize) -> Result<Subdivision> {
    if level == 0 {
        return Err(Error::level_at_least_one(level));
    }
    let n = base.ground_size();
    let mut entries: Vec<SubdivisionVertex> =
        (1..=n).map(SubdivisionVertex::Original).collect();
    // Barycenters: all faces above the threshold, in (size, lex) order —
    // which is exactly the order all_faces() yields them in.
    for face in base.all_faces().into_iter().flatten() {
        if face.len() >= level + 1 {
            entries.push(SubdivisionVertex::Barycenter(face));
        }
    }
    let dictionary = SubdivisionDictionary::new(entries);
    let ground = dictionary.len() as u32;

    let mut facets: Vec<Vec<u32>> = Vec::new();
    for facet in base.facets() {
        for chain in maximal_chains_over(facet, level) {
            let mut labels: Vec<u32> = chain[0].clone();
            for set in &chain[1..] {
                labels.push(
                    dictionary
                        .barycenter_label(set)
                        .expect("every face above the threshold has a barycenter"),
                );
            }
            facets.push(labels);
        }
    }
    let complex = SimplicialComplex::from_maximal_facets(ground, facets);
    Ok(Subdivision { complex, dictionary, level })
}

/// The order complex of the poset of nonempty faces — the classical
/// barycentric subdivision, built by an independent code path for use as an
/// oracle against [`partial_subdivision`] at level `1`.
///
/// Vertices are the nonempty faces of the base: singleton faces are
/// identified with the original vertices (keeping their labels, so the
/// labeling scheme matches `partial_subdivision`), and larger faces get
/// barycenter labels in `(size, lex)` order. Facets are the maximal flags
/// `F₁ ⊂ F₂ ⊂ ⋯ ⊂ F_m` with `#F_i = i` ending at a facet.
pub fn order_complex(base: &SimplicialComplex) -> Subdivision {
    let n = base.ground_size();
    let mut entries: Vec<SubdivisionVertex> =
        (1..=n).map(SubdivisionVertex::Original).collect();
    for face in base.all_faces().into_iter().flatten() {
        if face.len() >= 2 {
            entries.push(SubdivisionVertex::Barycenter(face));
        }
    }
    let dictionary = SubdivisionDictionary::new(entries);
    let ground = dictionary.len() as u32;

    // Maximal flags over a facet, by deleting one vertex at a time down to
    // singletons.
    fn flags(current: &VertexSet, stack: &mut Vec<VertexSet>, out: &mut Vec<Vec<VertexSet>>) {
        stack.push(current.clone());
        if current.len() == 1 {
            out.push(stack.iter().rev().cloned().collect());
        } else {
            for skip in 0..current.len() {
                let smaller: VertexSet = current
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                flags(&smaller, stack, out);
            }
        }
        stack.pop();
    }

    let mut facets: Vec<Vec<u32>> = Vec::new();
    for facet in base.facets() {
        if facet.is_empty() {
            facets.push(Vec::new());
            continue;
        }
        let mut flag_list = Vec::new();
        flags(facet, &mut Vec::new(), &mut flag_list);
        for flag in flag_list {
            let labels: Vec<u32> = flag
                .iter()
                .map(|set| {
                    if set.len() == 1 {
                        set[0]
                    } else {
                        dictionary
                            .barycenter_label(set)
                            .expect("every face with ≥ 2 vertices has a barycenter")
                    }
                })
                .collect();
            facets.push(labels);
        }
    }
    let complex = SimplicialComplex::from_maximal_facets(ground, facets);
    Subdivision { complex, dictionary, level: 1 }
}

/// The refinement witness taking a level-`l` chain face to a level-`(l+1)`
/// chain face: if the chain has a barycenter entry exactly at the threshold
/// (`#A₁ = l + 1`) that set moves down to become the new bottom set,
/// otherwise the chain is already valid one level up and is returned
/// unchanged. This realizes, face by face, the fact that `sd_l` refines
/// `sd_{l+1}`.
///
/// # Errors
///
/// Returns the validation error of the input chain against `(base, level)`
/// if it is not a genuine level-`l` chain face.
pub fn refinement_witness(
    base: &SimplicialComplex,
    chain: &ChainFace,
    level: usize,
) -> Result<ChainFace> {
    if level == 0 {
        return Err(Error::level_at_least_one(level));
    }
    chain.validate(base, level)?;
    let witness = if chain.barycenter_count() >= 1 && chain.sets()[1].len() == level + 1 {
        ChainFace { sets: chain.sets()[1..].to_vec() }
    } else {
        chain.clone()
    };
    witness
        .validate(base, level + 1)
        .map_err(|e| Error::internal(format!("refinement witness failed validation: {e}")))?;
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    use crate::rational::factorial_quotient;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn chain_face_validation() {
        let tetra = SimplicialComplex::simplex(4);
        // Valid: ({1,2}, {1,2,3}, {1,2,3,4}) at level 2.
        assert!(ChainFace::new(vec![vec![1, 2], vec![1, 2, 3], vec![1, 2, 3, 4]], &tetra, 2).is_ok());
        // (C1): bottom set too large.
        assert!(matches!(
            ChainFace::new(vec![vec![1, 2, 3]], &tetra, 2),
            Err(Error::InvalidChain { .. })
        ));
        // (C3): first barycenter set at the bottom-set scale.
        assert!(ChainFace::new(vec![vec![1], vec![1, 2]], &tetra, 2).is_err());
        // (C4): top set is not a face.
        let triangle = SimplicialComplex::simplex(3);
        assert!(ChainFace::new(vec![vec![1], vec![1, 2, 4]], &triangle, 1).is_err());
        // Not strictly increasing.
        assert!(ChainFace::new(vec![vec![1, 2], vec![1, 3, 4]], &tetra, 2).is_err());
        // Level 0 is rejected.
        assert!(matches!(
            ChainFace::new(vec![vec![]], &tetra, 0),
            Err(Error::InvalidLevel { .. })
        ));
        // The empty chain is the empty face.
        let empty = ChainFace::new(vec![vec![]], &tetra, 2).unwrap();
        assert_eq!(empty.cardinality(), 0);
    }

    #[test]
    fn chain_faces_of_triangle_level_1() {
        let triangle = SimplicialComplex::simplex(3);
        let grouped = chain_faces(&triangle, 1).unwrap();
        let counts: Vec<usize> = grouped.iter().map(|g| g.len()).collect();
        // Classical barycentric subdivision of a triangle: 7 vertices,
        // 12 edges, 6 triangles.
        assert_eq!(counts, vec![1, 7, 12, 6]);
    }

    #[test]
    fn chain_faces_of_tetrahedron_level_2() {
        let tetra = SimplicialComplex::simplex(4);
        let grouped = chain_faces(&tetra, 2).unwrap();
        let counts: Vec<usize> = grouped.iter().map(|g| g.len()).collect();
        assert_eq!(counts, vec![1, 9, 26, 30, 12]);
        // Every enumerated chain validates, and groups are sorted.
        for (c, group) in grouped.iter().enumerate() {
            for chain in group {
                chain.validate(&tetra, 2).unwrap();
                assert_eq!(chain.cardinality(), c);
            }
            assert!(group.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn construction_matches_chain_enumeration() {
        // The faces of the constructed complex are exactly the labeled
        // chain faces.
        for (base, level) in [
            (SimplicialComplex::simplex(4), 2),
            (SimplicialComplex::simplex(3), 1),
            (SimplicialComplex::boundary_of_simplex(4).unwrap(), 1),
            (
                SimplicialComplex::from_facets(vec![vec![1, 2, 3], vec![3, 4]], None).unwrap(),
                1,
            ),
        ] {
            let sd = partial_subdivision(&base, level).unwrap();
            let from_chains: Vec<Vec<VertexSet>> = chain_faces(&base, level)
                .unwrap()
                .into_iter()
                .map(|group| {
                    let mut labeled: Vec<VertexSet> =
                        group.iter().map(|c| sd.label_chain(c).unwrap()).collect();
                    labeled.sort();
                    labeled
                })
                .collect();
            let mut from_complex = sd.complex().all_faces();
            // The constructed complex may have isolated ground labels with
            // no faces; all_faces is grouped identically.
            for group in &mut from_complex {
                group.sort();
            }
            assert_eq!(from_complex, from_chains, "level {level}");
        }
    }

    #[test]
    fn simplex_facet_counts() {
        for d in 1..=5usize {
            let simplex = SimplicialComplex::simplex(d as u32);
            for l in 1..=d {
                let sd = partial_subdivision(&simplex, l).unwrap();
                assert_eq!(
                    BigInt::from(sd.complex().facets().len()),
                    factorial_quotient(d, l),
                    "d={d} l={l}"
                );
            }
        }
    }

    #[test]
    fn tetrahedron_level_2_explicitly() {
        let tetra = SimplicialComplex::simplex(4);
        let sd = partial_subdivision(&tetra, 2).unwrap();
        assert_eq!(sd.complex().facets().len(), 12);
        assert_eq!(sd.complex().f_vector().entries(), &big(&[1, 9, 26, 30, 12]));
        // Ground: 4 originals + 4 triangles + 1 tetrahedron = 9.
        assert_eq!(sd.complex().ground_size(), 9);
        assert_eq!(sd.dictionary().len(), 9);
        // Labels 5..8 are the four triangles in lex order, 9 the full set.
        assert_eq!(
            sd.dictionary().get(5),
            Some(&SubdivisionVertex::Barycenter(vec![1, 2, 3]))
        );
        assert_eq!(sd.dictionary().barycenter_label(&[1, 2, 3, 4]), Some(9));
        // A typical facet: {1,2} ∪ {b₁₂₃, b₁₂₃₄} = {1,2,5,9}.
        assert!(sd.complex().facets().contains(&vec![1, 2, 5, 9]));
    }

    #[test]
    fn hollow_square_subdivides_to_octagon() {
        let square =
            SimplicialComplex::from_facets(vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]], None)
                .unwrap();
        let sd = partial_subdivision(&square, 1).unwrap();
        assert_eq!(sd.complex().f_vector().entries(), &big(&[1, 8, 8]));
        // Every vertex lies on exactly two edges: an 8-cycle.
        for v in 1..=8u32 {
            let degree =
                sd.complex().facets().iter().filter(|f| f.contains(&v)).count();
            assert_eq!(degree, 2, "vertex {v}");
        }
    }

    #[test]
    fn high_level_is_identity() {
        let triangle = SimplicialComplex::simplex(3);
        for level in [3, 4, 10] {
            let sd = partial_subdivision(&triangle, level).unwrap();
            assert_eq!(sd.complex(), &triangle);
            assert!(sd
                .dictionary()
                .iter()
                .all(|(label, v)| v == &SubdivisionVertex::Original(label)));
        }
    }

    #[test]
    fn void_complex_subdivides_to_itself() {
        let void = SimplicialComplex::simplex(0);
        let sd = partial_subdivision(&void, 1).unwrap();
        assert_eq!(sd.complex(), &void);
        assert!(sd.dictionary().is_empty());
        let grouped = chain_faces(&void, 1).unwrap();
        assert_eq!(grouped.len(), 1);
        assert_eq!(grouped[0].len(), 1);
        assert_eq!(grouped[0][0].cardinality(), 0);
    }

    #[test]
    fn order_complex_agrees_with_level_1() {
        for base in [
            SimplicialComplex::simplex(3),
            SimplicialComplex::simplex(4),
            SimplicialComplex::boundary_of_simplex(4).unwrap(),
            SimplicialComplex::from_facets(vec![vec![1, 2, 3], vec![3, 4], vec![5]], None).unwrap(),
        ] {
            let via_chains = partial_subdivision(&base, 1).unwrap();
            let via_order = order_complex(&base);
            assert_eq!(via_order.complex(), via_chains.complex());
            assert_eq!(via_order.dictionary(), via_chains.dictionary());
        }
    }

    #[test]
    fn refinement_witnesses_step_up_one_level() {
        let tetra = SimplicialComplex::simplex(4);
        for l in 1..=3usize {
            let grouped = chain_faces(&tetra, l).unwrap();
            let upper: std::collections::BTreeSet<ChainFace> =
                chain_faces(&tetra, l + 1).unwrap().into_iter().flatten().collect();
            for chain in grouped.into_iter().flatten() {
                let w = refinement_witness(&tetra, &chain, l).unwrap();
                assert!(upper.contains(&w), "witness {w} of {chain} at level {l}");
            }
        }
    }

    #[test]
    fn refinement_witness_rejects_invalid_chains() {
        let tetra = SimplicialComplex::simplex(4);
        let chain = ChainFace::new(vec![vec![1], vec![1, 2, 3]], &tetra, 2).unwrap();
        // Valid at level 2, but handed in with the wrong level.
        assert!(refinement_witness(&tetra, &chain, 3).is_err());
    }

    #[test]
    fn level_zero_is_rejected_everywhere() {
        let triangle = SimplicialComplex::simplex(3);
        assert!(chain_faces(&triangle, 0).is_err());
        assert!(partial_subdivision(&triangle, 0).is_err());
    }
}
