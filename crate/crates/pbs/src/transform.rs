//! The `f`- and `h`-vector transform matrices of partial barycentric
//! subdivision, their structural reports, and face-polynomial
//! real-rootedness.
//!
//! Subdivision acts linearly on face vectors: there are square matrices
//! `𝔉_d^l` and `ℌ_d^l` of size `(d+1) × (d+1)`, depending only on `d` and the
//! level `l`, with
//!
//! ```text
//! f(sd_l K) = 𝔉_d^l · f(K)   and   h(sd_l K) = ℌ_d^l · h(K)
//! ```
//!
//! for every complex `K` of dimension at most `d − 1` (face vectors padded to
//! length `d + 1`). The two matrices are built here from *different*
//! combinatorial data, and their consistency (`ℌ C = C 𝔉` for the binomial
//! change-of-basis `C`) is exactly the similarity invariant the verification
//! suites check — the routes are never merged:
//!
//! * **`𝔉_d^l`** has entry `(i, j)` equal to `R(j, i, l)`, the number of
//!   restricted ordered set partitions of `{1, …, j}` with index `i` (see
//!   [`crate::partitions`]): a `(j−1)`-face of `K` turns into chain faces of
//!   `sd_l K` whose combinatorial types are exactly those partitions. The
//!   matrix is upper triangular with diagonal `1, …, 1, (l+1), …, d!/l!`.
//! * **`ℌ_d^l`** has entry `(i, j)` equal to `A(d+1, i, d+1−j, l)`, the
//!   number of permutations in the descending-prefix class `S_{d+1}^l` with
//!   `i` level descents and last value `d+1−j` (see [`crate::perm`]). Each
//!   column therefore sums to `d!/l!` and the whole matrix to `(d+1)!/l!`,
//!   and the matrix has the central symmetry `ℌ[i][j] = ℌ[d−i][d−j]`.
//!
//! Matrices are cached per `(d, l, kind)`; all entries are exact integers
//! stored as rationals so they can flow into the eigenstructure routines of
//! [`crate::spectral`] unchanged.
//!
//! # Monotonicity in the level
//!
//! Entrywise, refining the subdivision can only create faces:
//! `ℌ_d^l ≥ ℌ_d^{l+1}` for `1 ≤ l ≤ d−1`. The comparison is strict on the
//! *inner rows* `2, …, d−2` (every entry, including the outer columns) once
//! `d ≥ 4`; rows `0` and `d` are the fixed unit rows, and rows `1` and
//! `d − 1` contain entries shared between consecutive levels.
//! [`check_monotonicity`] reports the full comparison.
//!
//! # Face polynomials
//!
//! For an `f`-vector `(f_{−1}, …, f_{d−1})` the face polynomial is
//! `f(t) = Σ_i f_{i−1} t^{d−i}`; substituting `t ↦ t + 1` turns it into the
//! `h`-polynomial, so one is real-rooted exactly when the other is. After a
//! single barycentric refinement (`l = 1`) the face polynomial of a complex
//! with nonnegative `h`-vector is real-rooted; the hypothesis matters (two
//! disjoint triangles, with `h = (1, 3, −3, 1)`, subdivide to a complex with
//! a non-real-rooted face polynomial), and at levels `l ≥ 2` real-rootedness
//! genuinely fails even for simplices — [`find_non_real_rooted`] locates the
//! smallest witness, `(d, l) = (3, 2)` with `f = (1, 4, 6, 3)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use once_cell::sync::Lazy;

use crate::complex::{FVector, HVector};
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::partitions;
use crate::perm;
use crate::poly::{Polynomial, RealRootReport};
use crate::rational::{factorial_quotient, Rational};

/// Which face-vector transform a matrix is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformKind {
    /// The `f`-vector transform `𝔉_d^l`.
    F,
    /// The `h`-vector transform `ℌ_d^l`.
    H,
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformKind::F => write!(f, "f"),
            TransformKind::H => write!(f, "h"),
        }
    }
}

/// One of the transform matrices `𝔉_d^l` / `ℌ_d^l`, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformMatrix {
    d: usize,
    level: usize,
    kind: TransformKind,
    matrix: RationalMatrix,
}

static CACHE: Lazy<Mutex<HashMap<(usize, usize, TransformKind), RationalMatrix>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn build_h(d: usize, level: usize) -> Result<RationalMatrix> {
    let mut m = RationalMatrix::zeros(d + 1, d + 1);
    // One pass over S_{d+1}^l: entry (i, j) counts members with i level
    // descents and last value d+1−j.
    for sigma in perm::descending_prefix_class(d + 1, level)? {
        let i = sigma.level_descent_count(level)?;
        let j = d + 1 - sigma.value(d + 1) as usize;
        let bumped = m.get(i, j) + Rational::from_integer(BigInt::from(1));
        m.set(i, j, bumped);
    }
    Ok(m)
}

fn build_f(d: usize, level: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(d + 1, d + 1);
    for j in 0..=d {
        for (i, count) in partitions::counts_by_index(j, level).into_iter().enumerate() {
            m.set(i, j, Rational::from_integer(count));
        }
    }
    m
}

fn transform(d: usize, level: usize, kind: TransformKind) -> Result<TransformMatrix> {
    if level == 0 || level > d {
        return Err(Error::level_in(level, 1, d.max(1)));
    }
    let key = (d, level, kind);
    if let Some(matrix) = CACHE.lock().expect("transform cache poisoned").get(&key) {
        return Ok(TransformMatrix { d, level, kind, matrix: matrix.clone() });
    }
    let matrix = match kind {
        TransformKind::H => build_h(d, level)?,
        TransformKind::F => build_f(d, level),
    };
    CACHE.lock().expect("transform cache poisoned").insert(key, matrix.clone());
    Ok(TransformMatrix { d, level, kind, matrix })
}

/// The `h`-vector transform `ℌ_d^l`, a `(d+1) × (d+1)` integer matrix.
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] unless `1 ≤ level ≤ d`.
pub fn h_transform(d: usize, level: usize) -> Result<TransformMatrix> {
    transform(d, level, TransformKind::H)
}

/// The `f`-vector transform `𝔉_d^l`, a `(d+1) × (d+1)` integer matrix.
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] unless `1 ≤ level ≤ d`.
pub fn f_transform(d: usize, level: usize) -> Result<TransformMatrix> {
    transform(d, level, TransformKind::F)
}

impl TransformMatrix {
    /// The face-vector length parameter `d` (matrix size `d + 1`).
    pub fn d(&self) -> usize {
        self.d
    }

    /// The subdivision level `l`.
    pub fn level(&self) -> usize {
        self.level
    }

    /// Which transform this is.
    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    /// The underlying rational matrix (all entries are integers).
    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    /// Entry `(i, j)` as an integer.
    pub fn entry(&self, i: usize, j: usize) -> BigInt {
        self.matrix.get(i, j).to_integer()
    }

    /// All entries as integer rows.
    pub fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..=self.d).map(|i| (0..=self.d).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// Applies the matrix to an integer vector of length `d + 1`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::DimensionMismatch`] on a length mismatch.
    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        let rational: Vec<Rational> =
            v.iter().map(|x| Rational::from_integer(x.clone())).collect();
        Ok(self.matrix.mul_vec(&rational)?.into_iter().map(|x| x.to_integer()).collect())
    }
}

/// `h(sd_l K) = ℌ_d^l · h(K)`, with `d` read off the vector length.
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] unless `1 ≤ level ≤ d`.
pub fn apply_h_transform(h: &HVector, level: usize) -> Result<HVector> {
    let d = h.top_size();
    let out = h_transform(d, level)?.apply(h.entries())?;
    HVector::new(out)
}

/// `f(sd_l K) = 𝔉_d^l · f(K)`, with `d` read off the vector length.
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] unless `1 ≤ level ≤ d`.
pub fn apply_f_transform(f: &FVector, level: usize) -> Result<FVector> {
    let d = f.top_size();
    let out = f_transform(d, level)?.apply(f.entries())?;
    FVector::new(out)
}

/// Iterated subdivision on the `h`-vector: returns the whole trajectory
/// `[h, ℌh, ℌ²h, …, ℌⁿh]` (`steps + 1` vectors, the input first).
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] unless `1 ≤ level ≤ d`.
pub fn iterate_h(start: &HVector, level: usize, steps: usize) -> Result<Vec<HVector>> {
    let matrix = h_transform(start.top_size(), level)?;
    let mut out = vec![start.clone()];
    for _ in 0..steps {
        let next = matrix.apply(out.last().expect("trajectory is nonempty").entries())?;
        out.push(HVector::new(next)?);
    }
    Ok(out)
}

/// The column-sum certificate of a transform matrix.
///
/// For `ℌ_d^l` every column sums to `d!/l!` (each last value is hit by that
/// many class members) and the total is `(d+1)!/l! = |S_{d+1}^l|`. The `𝔉`
/// matrix satisfies neither, so the report also records which kind it
/// describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnSumReport {
    /// Which matrix the report describes.
    pub kind: TransformKind,
    /// The expected per-column sum `d!/l!`.
    pub expected_column_sum: BigInt,
    /// The actual column sums.
    pub column_sums: Vec<BigInt>,
    /// The expected total `(d+1)!/l!`.
    pub expected_total: BigInt,
    /// The actual total.
    pub total: BigInt,
}

impl ColumnSumReport {
    /// Whether every column sum and the total match the expectations.
    pub fn passed(&self) -> bool {
        self.total == self.expected_total
            && self.column_sums.iter().all(|s| s == &self.expected_column_sum)
    }
}

/// Computes the column-sum certificate of a transform matrix (meaningful for
/// kind `H`; for kind `F` it records the mismatch).
pub fn column_sum_report(m: &TransformMatrix) -> ColumnSumReport {
    let column_sums: Vec<BigInt> =
        (0..=m.d()).map(|j| m.matrix().column_sum(j).to_integer()).collect();
    ColumnSumReport {
        kind: m.kind(),
        expected_column_sum: factorial_quotient(m.d(), m.level()),
        column_sums,
        expected_total: factorial_quotient(m.d() + 1, m.level()),
        total: m.matrix().total_sum().to_integer(),
    }
}

/// The entrywise comparison of `ℌ_d^l` against `ℌ_d^{l+1}` for one pair of
/// consecutive levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelComparison {
    /// The finer level `l`.
    pub finer_level: usize,
    /// The coarser level `l + 1`.
    pub coarser_level: usize,
    /// Whether `ℌ_d^l ≥ ℌ_d^{l+1}` holds in every entry.
    pub dominates: bool,
    /// Entries where domination fails (expected empty).
    pub violations: Vec<(usize, usize)>,
    /// Whether every inner-row entry (rows `2..=d−2`, all columns) is
    /// strictly larger at the finer level. Vacuously true for `d < 4`.
    pub inner_strict: bool,
    /// Inner-row entries where the two levels are merely equal (expected
    /// empty).
    pub inner_equalities: Vec<(usize, usize)>,
}

/// The full level-monotonicity report for one `d`: one comparison per pair
/// `(l, l+1)` with `1 ≤ l ≤ d−1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityReport {
    /// The face-vector length parameter.
    pub d: usize,
    /// Inclusive bounds of the inner-row band `2..=d−2` (empty for `d < 4`).
    pub inner_rows: (usize, usize),
    /// One comparison per consecutive level pair, finest first.
    pub comparisons: Vec<LevelComparison>,
}

impl MonotonicityReport {
    /// Whether every pair dominates entrywise.
    pub fn all_dominate(&self) -> bool {
        self.comparisons.iter().all(|c| c.dominates)
    }

    /// Whether every pair is strict on the inner rows.
    pub fn all_inner_strict(&self) -> bool {
        self.comparisons.iter().all(|c| c.inner_strict)
    }
}

/// Compares `ℌ_d^l` with `ℌ_d^{l+1}` entrywise for every `1 ≤ l ≤ d−1`.
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] if `d < 2` (no consecutive pair exists).
pub fn check_monotonicity(d: usize) -> Result<MonotonicityReport> {
    if d < 2 {
        return Err(Error::InvalidLevel {
            level: d,
            requirement: "d with at least two levels (d ≥ 2)".into(),
        });
    }
    let inner_rows = (2, d.saturating_sub(2));
    let mut comparisons = Vec::new();
    for l in 1..d {
        let finer = h_transform(d, l)?;
        let coarser = h_transform(d, l + 1)?;
        let mut violations = Vec::new();
        let mut inner_equalities = Vec::new();
        for i in 0..=d {
            for j in 0..=d {
                let a = finer.entry(i, j);
                let b = coarser.entry(i, j);
                if a < b {
                    violations.push((i, j));
                }
                if (inner_rows.0..=inner_rows.1).contains(&i) && a == b {
                    inner_equalities.push((i, j));
                }
            }
        }
        comparisons.push(LevelComparison {
            finer_level: l,
            coarser_level: l + 1,
            dominates: violations.is_empty(),
            violations,
            inner_strict: inner_equalities.is_empty(),
            inner_equalities,
        });
    }
    Ok(MonotonicityReport { d, inner_rows, comparisons })
}

/// The face polynomial `f(t) = Σ_i f_{i−1} t^{d−i}` of an `f`-vector.
pub fn f_polynomial(f: &FVector) -> Polynomial {
    let ascending: Vec<BigInt> = f.entries().iter().rev().cloned().collect();
    Polynomial::from_bigint_coeffs(&ascending)
}

/// The real-rootedness report of a face polynomial.
///
/// # Errors
///
/// Never fails for a genuine `f`-vector (the polynomial is nonzero since
/// `f_{−1} = 1`); errors are propagated from the underlying Sturm machinery.
pub fn real_root_report(f: &FVector) -> Result<RealRootReport> {
    f_polynomial(f).real_root_report()
}

/// A `(d, level)` pair whose subdivided-simplex face polynomial is not
/// real-rooted, with the polynomial's data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonRealRootedWitness {
    /// Number of vertices of the simplex.
    pub d: usize,
    /// The subdivision level (always `≥ 2`).
    pub level: usize,
    /// The `f`-vector of `sd_l` of the `(d−1)`-simplex.
    pub f: FVector,
    /// Degree, square-free degree, and real root count of its face
    /// polynomial.
    pub report: RealRootReport,
}

/// Searches `2 ≤ d ≤ max_d`, `2 ≤ level ≤ d − 1` (in lexicographic order)
/// for the first subdivided simplex whose face polynomial is not
/// real-rooted. The `f`-vectors come from the transform matrices applied to
/// the simplex `f`-vector.
///
/// # Errors
///
/// Propagates transform construction errors (none occur for valid ranges).
pub fn find_non_real_rooted(max_d: usize) -> Result<Option<NonRealRootedWitness>> {
    for d in 2..=max_d {
        // f-vector of the (d−1)-simplex: binomial coefficients.
        let simplex_f = FVector::new(
            (0..=d).map(|i| crate::rational::binomial(d, i)).collect(),
        )
        .expect("binomial coefficients form an f-vector");
        for level in 2..d {
            let f = FVector::new(f_transform(d, level)?.apply(simplex_f.entries())?)
                .map_err(|_| Error::internal("transform of an f-vector is an f-vector"))?;
            let report = real_root_report(&f)?;
            if !report.is_real_rooted() {
                return Ok(Some(NonRealRootedWitness { d, level, f, report }));
            }
        }
    }
    Ok(None)
}
