//! Pinned worked examples: small instances whose values were checked by
//! hand (or by an obviously-correct independent path) and are frozen here
//! as regression oracles. Each section mirrors one module of the crate.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use pbs::complex::{f_to_h, h_to_f, SimplicialComplex, VertexSet};
use pbs::complex::{FVector, HVector};
use pbs::localh::{derangement_excedance_polynomial, local_h};
use pbs::matrix::RationalMatrix;
use pbs::partitions::{count_formula, count_restricted, enumerate_restricted};
use pbs::perm::{count_descent_last, derangements, descending_prefix_class, Permutation};
use pbs::poly::Polynomial;
use pbs::rational::{factorial_quotient, rat, ratio, Rational};
use pbs::spectral::{
    eigen_decompose, inner_unit_eigenspace_dimension, perron_vector, structured_unit_basis,
    VectorShape,
};
use pbs::subdivision::{order_complex, partial_subdivision};
use pbs::transform::{apply_h_transform, h_transform, iterate_h, TransformKind};
use pbs::verify::{run_suite, Suite};

fn perm(word: &[u32]) -> Permutation {
    Permutation::new(word.to_vec()).unwrap()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn complex(facets: &[&[u32]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec()).collect(), None).unwrap()
}

fn hollow_square() -> SimplicialComplex {
    complex(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
}

// ---------------------------------------------------------------------------
// Exact rationals and matrices
// ---------------------------------------------------------------------------

#[test]
fn rational_arithmetic_is_exact() {
    assert_eq!(ratio(1, 2) + ratio(1, 3), ratio(5, 6));
    assert_eq!(ratio(5, 3) * ratio(3, 5), rat(1));
    assert_eq!(ratio(7, 2) - ratio(7, 2), rat(0));
}

#[test]
fn nullspace_of_identity_and_zero() {
    assert!(RationalMatrix::identity(3).nullspace().is_empty());
    assert_eq!(RationalMatrix::zeros(2, 2).nullspace().len(), 2);
}

/// The eigenvalue-4 eigenspace of the level-3 transform in size 5 is
/// spanned by `(0, 1, 1, 1, 0)`.
#[test]
fn shifted_transform_nullspace_is_the_displayed_eigenvector() {
    let m = h_transform(4, 3).unwrap();
    let basis = m.matrix().minus_scalar_identity(&rat(4)).unwrap().nullspace();
    assert_eq!(basis, vec![vec![rat(0), rat(1), rat(1), rat(1), rat(0)]]);
}

// ---------------------------------------------------------------------------
// Sturm root counting
// ---------------------------------------------------------------------------

#[test]
fn sturm_counts_on_known_polynomials() {
    // x² − 2 has two real roots, x² + 1 none.
    assert_eq!(Polynomial::from_int_coeffs(&[-2, 0, 1]).count_real_roots().unwrap(), 2);
    assert_eq!(Polynomial::from_int_coeffs(&[1, 0, 1]).count_real_roots().unwrap(), 0);
    // t³ + 7t² + 12t + 6, the face polynomial of the subdivided triangle,
    // has three real roots.
    assert_eq!(Polynomial::from_int_coeffs(&[6, 12, 7, 1]).count_real_roots().unwrap(), 3);
}

// ---------------------------------------------------------------------------
// Simplicial complexes
// ---------------------------------------------------------------------------

#[test]
fn construction_normalizes_to_facet_antichains() {
    assert_eq!(complex(&[&[1, 2, 3]]).dim(), 2);
    assert_eq!(complex(&[&[1, 2], &[2, 3], &[1, 2, 3]]).facets(), &[vec![1, 2, 3]]);
    assert_eq!(hollow_square().dim(), 1);
}

#[test]
fn face_enumeration_counts() {
    let by_size = |k: &SimplicialComplex| -> Vec<usize> {
        k.all_faces().iter().map(Vec::len).collect()
    };
    assert_eq!(by_size(&SimplicialComplex::simplex(3)), vec![1, 3, 3, 1]);
    assert_eq!(by_size(&hollow_square()), vec![1, 4, 4]);
    assert_eq!(by_size(&complex(&[&[1]])), vec![1, 1]);
}

#[test]
fn f_vectors_of_small_complexes() {
    assert_eq!(SimplicialComplex::simplex(3).f_vector().entries(), &big(&[1, 3, 3, 1]));
    assert_eq!(
        SimplicialComplex::boundary_of_simplex(3).unwrap().f_vector().entries(),
        &big(&[1, 3, 3]),
    );
    let sd = partial_subdivision(&SimplicialComplex::simplex(3), 1).unwrap();
    assert_eq!(sd.complex().f_vector().entries(), &big(&[1, 7, 12, 6]));
}

#[test]
fn f_h_conversion_on_known_vectors() {
    assert_eq!(SimplicialComplex::simplex(3).h_vector().entries(), &big(&[1, 0, 0, 0]));
    assert_eq!(f_to_h(&big(&[1, 7, 12, 6])), big(&[1, 4, 1, 0]));
    assert_eq!(h_to_f(&big(&[1, 4, 1, 0])), big(&[1, 7, 12, 6]));
}

#[test]
fn restrictions_keep_labels() {
    let triangle = SimplicialComplex::simplex(3);
    assert_eq!(triangle.restriction(&[1, 2]).unwrap().facets(), &[vec![1, 2]]);
    assert_eq!(
        hollow_square().restriction(&[1, 3]).unwrap().facets(),
        &[vec![1], vec![3]],
    );
    // Restricting to the empty set leaves the complex {∅}: one empty facet.
    assert_eq!(triangle.restriction(&[]).unwrap().facets(), &[VertexSet::new()]);
}

#[test]
fn minimal_nonfaces_of_small_complexes() {
    assert_eq!(
        SimplicialComplex::boundary_of_simplex(3).unwrap().minimal_nonfaces(None),
        vec![vec![1, 2, 3]],
    );
    assert_eq!(hollow_square().minimal_nonfaces(None), vec![vec![1, 3], vec![2, 4]]);
    assert!(SimplicialComplex::simplex(4).minimal_nonfaces(None).is_empty());
}

// ---------------------------------------------------------------------------
// Permutations with descending prefixes
// ---------------------------------------------------------------------------

#[test]
fn small_descending_prefix_classes() {
    let class = descending_prefix_class(3, 2).unwrap();
    let words: Vec<&[u32]> = class.iter().map(Permutation::word).collect();
    assert_eq!(words, vec![&[2, 1, 3][..], &[3, 1, 2], &[3, 2, 1]]);
    assert_eq!(descending_prefix_class(4, 2).unwrap().len(), 12);
    let singleton = descending_prefix_class(5, 5).unwrap();
    assert_eq!(singleton.len(), 1);
    assert_eq!(singleton[0].word(), &[5, 4, 3, 2, 1]);
}

/// The three worked level-4 descent sets in `S_6`.
#[test]
fn level_descent_sets_of_the_worked_triple() {
    let cases: &[(&[u32], &[usize])] = &[
        (&[4, 3, 2, 1, 6, 5], &[5]),
        (&[6, 5, 2, 1, 3, 4], &[1, 2]),
        (&[6, 4, 3, 2, 5, 1], &[1, 5]),
    ];
    for &(word, expected) in cases {
        let sigma = perm(word);
        let set: BTreeSet<usize> = expected.iter().copied().collect();
        assert_eq!(sigma.level_descent_set(4).unwrap(), set, "descent set of {word:?}");
        assert_eq!(sigma.level_descent_count(4).unwrap(), expected.len());
    }
}

/// Spot values of the descent–last-value counts `A(d, i, j, l)`, against
/// brute force over the class; plus the declared zero range.
#[test]
fn descent_last_value_counts() {
    assert_eq!(count_descent_last(5, 3, 0, 5).unwrap(), 1);
    assert_eq!(count_descent_last(5, 2, 1, 4).unwrap(), 5);
    assert_eq!(count_descent_last(5, 3, 4, 1).unwrap(), 1);
    assert_eq!(count_descent_last(5, 2, -1, 3).unwrap(), 0);
    assert_eq!(count_descent_last(5, 2, 5, 3).unwrap(), 0);
}

#[test]
fn excedance_and_derangement_basics() {
    assert_eq!(perm(&[2, 3, 1]).excedance_count(), 2);
    assert_eq!(perm(&[3, 1, 2]).excedance_count(), 1);
    assert_eq!(derangements(4).len(), 9);
}

/// The straightening map on the worked examples: one whole-prefix
/// reversal, one split at the unique separating position, one small case.
#[test]
fn straightening_worked_examples() {
    let cases: &[(&[u32], usize, &[u32], usize)] = &[
        (&[4, 3, 2, 1, 6, 5], 4, &[1, 2, 3, 4, 6, 5], 1),
        (&[6, 5, 2, 1, 3, 4], 4, &[5, 6, 1, 2, 3, 4], 2),
        (&[3, 2, 1], 2, &[2, 3, 1], 2),
    ];
    for &(word, l, image, excedances) in cases {
        let sigma = perm(word);
        assert_eq!(sigma.straighten(l).unwrap().word(), image, "image of {word:?}");
        assert_eq!(sigma.level_excedance_count(l).unwrap(), excedances);
    }
}

// ---------------------------------------------------------------------------
// Restricted ordered set partitions
// ---------------------------------------------------------------------------

#[test]
fn restricted_partition_enumeration_spot_checks() {
    let only = enumerate_restricted(2, 1, 1);
    assert_eq!(only.len(), 1);
    assert!(only[0].head().is_empty());
    assert_eq!(only[0].blocks(), &[vec![1, 2]]);

    assert_eq!(enumerate_restricted(3, 2, 1).len(), 6);

    let top = enumerate_restricted(3, 3, 2);
    assert_eq!(top.len(), 3);
    for p in &top {
        assert_eq!(p.head().len(), 2, "head of {p:?}");
        assert_eq!(p.blocks().len(), 1);
    }
}

#[test]
fn restricted_partition_counts() {
    // Level 0 reduces to ordered set partitions: 2!·S(3,2) = 6.
    assert_eq!(count_restricted(3, 2, 0), BigInt::from(6));
    assert_eq!(count_restricted(4, 3, 2), BigInt::from(18));
    for j in 0..=6 {
        for l in 0..=4 {
            let expected =
                if j > l { factorial_quotient(j, l) } else { BigInt::from(1) };
            assert_eq!(count_restricted(j, j, l), expected, "diagonal at j = {j}, l = {l}");
        }
    }
}

#[test]
fn closed_form_counts_match_enumeration() {
    assert_eq!(count_formula(2, 1, 1), count_restricted(2, 1, 1));
    assert_eq!(count_formula(3, 2, 1), BigInt::from(6));
    assert_eq!(count_formula(4, 4, 2), BigInt::from(12));
}

// ---------------------------------------------------------------------------
// Subdivision construction
// ---------------------------------------------------------------------------

#[test]
fn subdivision_face_counts() {
    let triangle = SimplicialComplex::simplex(3);
    let sd1 = partial_subdivision(&triangle, 1).unwrap();
    assert_eq!(sd1.complex().f_vector().entries(), &big(&[1, 7, 12, 6]));

    let tetra = SimplicialComplex::simplex(4);
    let sd2 = partial_subdivision(&tetra, 2).unwrap();
    assert_eq!(sd2.complex().f_vector().entries(), &big(&[1, 9, 26, 30, 12]));
    assert_eq!(sd2.complex().facets().len(), 12);
}

/// At any level past the largest facet the subdivision is the complex
/// itself, label for label.
#[test]
fn trivial_levels_return_the_base_complex()
{
    for k in [SimplicialComplex::simplex(3), hollow_square()] {
        let d = k.max_facet_size();
        for level in [d, d + 1] {
            let sd = partial_subdivision(&k, level).unwrap();
            assert_eq!(sd.complex(), &k, "level {level} should not subdivide");
        }
    }
}

#[test]
fn subdividing_the_hollow_square_gives_the_octagon() {
    let sd = order_complex(&hollow_square());
    assert_eq!(sd.complex().f_vector().entries(), &big(&[1, 8, 8]));
    // An 8-cycle: every vertex lies in exactly two edges.
    let mut degree = vec![0u32; 9];
    for facet in sd.complex().facets() {
        for &v in facet {
            degree[v as usize] += 1;
        }
    }
    assert!(degree[1..].iter().all(|&c| c == 2));
}

#[test]
fn order_complexes_of_tiny_complexes() {
    let triangle = order_complex(&SimplicialComplex::simplex(3));
    assert_eq!(triangle.complex().f_vector().entries(), &big(&[1, 7, 12, 6]));
    let edge = order_complex(&SimplicialComplex::simplex(2));
    assert_eq!(edge.complex().f_vector().entries(), &big(&[1, 3, 2]));
    let point = order_complex(&SimplicialComplex::simplex(1));
    assert_eq!(point.complex().f_vector().entries(), &big(&[1, 1]));
}

// ---------------------------------------------------------------------------
// Transform matrices
// ---------------------------------------------------------------------------

#[test]
fn transform_application_spot_checks() {
    let simplex_h = HVector::new(big(&[1, 0, 0, 0, 0])).unwrap();
    assert_eq!(
        apply_h_transform(&simplex_h, 2).unwrap().entries(),
        &big(&[1, 5, 5, 1, 0]),
    );
    let h3 = HVector::new(big(&[1, 0, 0, 0])).unwrap();
    assert_eq!(apply_h_transform(&h3, 1).unwrap().entries(), &big(&[1, 4, 1, 0]));
    // Level d is the identity transform.
    let h = HVector::new(big(&[1, 4, 1, 0])).unwrap();
    assert_eq!(apply_h_transform(&h, 3).unwrap().entries(), h.entries());
}

#[test]
fn column_sums_and_totals() {
    let cases = [(4, 3, 4i64, 20i64), (4, 2, 12, 60), (5, 1, 120, 720)];
    for (d, level, column, total) in cases {
        let m = h_transform(d, level).unwrap();
        for j in 0..=d {
            assert_eq!(m.matrix().column_sum(j), rat(column), "column {j} of ({d},{level})");
        }
        assert_eq!(m.matrix().total_sum(), rat(total));
    }
}

#[test]
fn monotonicity_spot_entries() {
    let coarse = h_transform(4, 3).unwrap();
    let fine = h_transform(4, 2).unwrap();
    assert_eq!(coarse.entry(2, 2), BigInt::from(2));
    assert_eq!(fine.entry(2, 2), BigInt::from(6));
    assert_eq!(coarse.entry(0, 0), BigInt::from(1));
    assert_eq!(fine.entry(0, 0), BigInt::from(1));
}

#[test]
fn iteration_returns_the_whole_trajectory() {
    let start = HVector::new(big(&[1, 0, 0, 0, 0])).unwrap();
    let unchanged = iterate_h(&start, 2, 0).unwrap();
    assert_eq!(unchanged.len(), 1);
    assert_eq!(unchanged[0].entries(), start.entries());
    let one = iterate_h(&start, 2, 1).unwrap();
    assert_eq!(one.len(), 2);
    assert_eq!(one[1].entries(), &big(&[1, 5, 5, 1, 0]));
}

#[test]
fn real_rootedness_of_small_face_polynomials() {
    let subdivided = FVector::new(big(&[1, 7, 12, 6])).unwrap();
    let report = pbs::transform::real_root_report(&subdivided).unwrap();
    assert!(report.is_real_rooted());
    assert_eq!(report.distinct_real_roots, 3);

    // (t + 1)³: square-free part has degree 1 and one real root.
    let triangle = FVector::new(big(&[1, 3, 3, 1])).unwrap();
    let report = pbs::transform::real_root_report(&triangle).unwrap();
    assert!(report.is_real_rooted());
    assert_eq!(report.squarefree_degree, 1);
    assert_eq!(report.distinct_real_roots, 1);
}

// ---------------------------------------------------------------------------
// Spectra
// ---------------------------------------------------------------------------

#[test]
fn eigenvalue_multiplicities_of_small_transforms() {
    let shape = |d: usize, level: usize, kind: TransformKind| -> Vec<(Rational, usize)> {
        eigen_decompose(d, level, kind)
            .unwrap()
            .pairs
            .iter()
            .map(|p| (p.eigenvalue.clone(), p.vectors.len()))
            .collect()
    };
    assert_eq!(shape(4, 3, TransformKind::H), vec![(rat(1), 4), (rat(4), 1)]);
    assert_eq!(
        shape(4, 2, TransformKind::H),
        vec![(rat(1), 3), (rat(3), 1), (rat(12), 1)],
    );
    assert_eq!(shape(2, 1, TransformKind::F), vec![(rat(1), 2), (rat(2), 1)]);
}

#[test]
fn perron_vectors_match_the_displayed_tables() {
    assert_eq!(
        perron_vector(4, 2).unwrap(),
        vec![rat(0), rat(1), ratio(5, 3), rat(1), rat(0)],
    );
    assert_eq!(
        perron_vector(5, 2).unwrap(),
        vec![rat(0), rat(1), ratio(46, 11), ratio(46, 11), rat(1), rat(0)],
    );
    assert_eq!(
        perron_vector(6, 3).unwrap(),
        vec![
            rat(0),
            rat(1),
            ratio(1941, 437),
            ratio(2146, 437),
            ratio(1941, 437),
            rat(1),
            rat(0),
        ],
    );
}

/// The eigenvalue-1 eigenspace basis comes anchored: one vector per
/// boundary coordinate and `l − 1` vanishing at both ends.
#[test]
fn structured_unit_basis_shapes() {
    let basis = structured_unit_basis(4, 3).unwrap();
    assert_eq!(basis.len(), 4);
    let count = |shape: VectorShape| basis.iter().filter(|v| v.shape == shape).count();
    assert_eq!(count(VectorShape::FirstAnchored), 1);
    assert_eq!(count(VectorShape::LastAnchored), 1);
    assert_eq!(count(VectorShape::ZeroEnded), 2);
}

#[test]
fn inner_unit_eigenspace_dimension_is_level_minus_one() {
    assert_eq!(inner_unit_eigenspace_dimension(5, 4).unwrap(), 3);
}

// ---------------------------------------------------------------------------
// Local h-polynomials
// ---------------------------------------------------------------------------

#[test]
fn local_h_spot_values() {
    assert_eq!(local_h(3, 1).unwrap().coefficients(), &big(&[0, 1, 1, 0]));
    assert_eq!(local_h(2, 1).unwrap().coefficients(), &big(&[0, 1, 0]));
    for d in 1..=6 {
        for level in d..=d + 2 {
            assert!(local_h(d, level).unwrap().is_zero(), "nonzero at d = {d}, l = {level}");
        }
    }
}

#[test]
fn derangement_excedance_polynomials() {
    assert_eq!(derangement_excedance_polynomial(3), big(&[0, 1, 1, 0]));
    assert_eq!(derangement_excedance_polynomial(4), big(&[0, 1, 7, 1, 0]));
    assert_eq!(derangement_excedance_polynomial(1), big(&[0, 0]));
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

/// The full verification battery passes, and reports exactly the one
/// documented print discrepancy.
#[test]
fn full_verification_suite_is_clean() {
    let report = run_suite(Suite::All, 4).unwrap();
    assert!(report.passed(), "failed checks: {:#?}", report.checks);
    assert_eq!(report.errata.len(), 1);
    assert!(report.errata[0].location.contains("(1, 2)"));
}
