//! Exact eigenstructure of the subdivision transform matrices.
//!
//! Both `ℌ_d^l` and `𝔉_d^l` are diagonalizable over the rationals with the
//! same strikingly simple spectrum:
//!
//! ```text
//! eigenvalue 1        with multiplicity l + 1,
//! eigenvalue k!/l!    simple, for each k = l+1, …, d.
//! ```
//!
//! The multiplicities sum to `d + 1`, and [`eigen_decompose`] *certifies*
//! this: it computes each eigenspace as an exact rational nullspace and
//! aborts with [`Error::SpectrumMismatch`] if any dimension differs from the
//! predicted multiplicity — it never silently returns a partial answer.
//!
//! # The dominant eigenvector
//!
//! For `l < d` the top eigenvalue `d!/l!` is simple. Its eigenvector,
//! normalized so the second coordinate is `1`, is the limiting shape of
//! repeatedly subdivided `h`-vectors: it has the form `(0, +, …, +, 0)`
//! (zeros exactly at the ends, positive in between) and is palindromic,
//! `b_i = b_{d−i}`. [`perron_vector`] computes and validates it; for example
//! `d = 4, l = 2` gives `(0, 1, 5/3, 1, 0)` — which is why the ratio
//! `h_2/h_1` of the iterates in [`crate::transform::iterate_h`] converges to
//! `5/3`.
//!
//! # The unit eigenspace
//!
//! The `(l+1)`-dimensional eigenspace for eigenvalue `1` has a basis adapted
//! to the boundary coordinates: one vector of the form `(1, *, …, *, 0)`,
//! one of the form `(0, *, …, *, 1)`, and `l − 1` vectors vanishing at both
//! ends. [`structured_unit_basis`] produces exactly this basis. The zero-ended
//! part survives restriction to the *inner matrix* (rows and columns `0` and
//! `d` struck out), whose own unit eigenspace has dimension exactly `l − 1`
//! ([`inner_unit_eigenspace_dimension`]).
//!
//! Because every column of `ℌ_d^l` sums to `d!/l!`, an eigenvector for any
//! eigenvalue *other than* `d!/l!` has coordinate sum `0`; the reports record
//! the sums so this is visible.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{RationalMatrix, RationalVector};
use crate::rational::{factorial_quotient, rat, Rational};
use crate::transform::{f_transform, h_transform, TransformKind, TransformMatrix};

use num_traits::{One, Zero};

/// Predicted spectrum of `ℌ_d^l` (equivalently `𝔉_d^l`): eigenvalues in
/// increasing order with their algebraic multiplicities.
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] unless `1 ≤ level ≤ d`.
pub fn spectrum(d: usize, level: usize) -> Result<Vec<(Rational, usize)>> {
    if level == 0 || level > d {
        return Err(Error::level_in(level, 1, d.max(1)));
    }
    let mut out = vec![(rat(1), level + 1)];
    for k in level + 1..=d {
        out.push((Rational::from_integer(factorial_quotient(k, level)), 1));
    }
    Ok(out)
}

/// One eigenvalue of a transform matrix with its certified eigenspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenPair {
    /// The eigenvalue (an integer `k!/l!`, stored exactly).
    pub eigenvalue: Rational,
    /// Its predicted algebraic multiplicity.
    pub multiplicity: usize,
    /// An exact basis of the eigenspace, echelon-normalized; its length
    /// equals `multiplicity` (enforced, not assumed).
    pub vectors: Vec<RationalVector>,
    /// Coordinate sum of each basis vector (zero unless the eigenvalue is
    /// the column sum `d!/l!`).
    pub coordinate_sums: Vec<Rational>,
}

/// A full certified eigendecomposition of `ℌ_d^l` or `𝔉_d^l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenDecomposition {
    /// Face-vector length parameter (matrix size `d + 1`).
    pub d: usize,
    /// Subdivision level.
    pub level: usize,
    /// Which transform was decomposed.
    pub kind: TransformKind,
    /// Eigenpairs in increasing eigenvalue order.
    pub pairs: Vec<EigenPair>,
}

impl EigenDecomposition {
    /// Sum of the eigenspace dimensions (always `d + 1` for a value this
    /// crate returns).
    pub fn total_dimension(&self) -> usize {
        self.pairs.iter().map(|p| p.vectors.len()).sum()
    }
}

fn transform_of(d: usize, level: usize, kind: TransformKind) -> Result<TransformMatrix> {
    match kind {
        TransformKind::H => h_transform(d, level),
        TransformKind::F => f_transform(d, level),
    }
}

fn eigenspace(m: &RationalMatrix, lambda: &Rational) -> Result<Vec<RationalVector>> {
    Ok(m.minus_scalar_identity(lambda)?.nullspace())
}

/// Decomposes a transform matrix into exact eigenspaces, one per predicted
/// eigenvalue, verifying every dimension.
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] unless `1 ≤ level ≤ d`, and
/// [`Error::SpectrumMismatch`] if any computed eigenspace dimension differs
/// from the predicted multiplicity (which would disprove the predicted
/// spectrum — it never happens for these matrices, and the check is what
/// certifies that).
pub fn eigen_decompose(d: usize, level: usize, kind: TransformKind) -> Result<EigenDecomposition> {
    let matrix = transform_of(d, level, kind)?;
    let mut pairs = Vec::new();
    for (eigenvalue, multiplicity) in spectrum(d, level)? {
        let vectors = eigenspace(matrix.matrix(), &eigenvalue)?;
        if vectors.len() != multiplicity {
            return Err(Error::SpectrumMismatch {
                context: format!("{kind}-transform with d={d}, level={level}, eigenvalue {eigenvalue}"),
                found: vectors.len(),
                expected: multiplicity,
            });
        }
        let coordinate_sums =
            vectors.iter().map(|v| v.iter().fold(rat(0), |acc, x| acc + x)).collect();
        pairs.push(EigenPair { eigenvalue, multiplicity, vectors, coordinate_sums });
    }
    let decomposition = EigenDecomposition { d, level, kind, pairs };
    if decomposition.total_dimension() != d + 1 {
        return Err(Error::SpectrumMismatch {
            context: format!("{kind}-transform with d={d}, level={level}"),
            found: decomposition.total_dimension(),
            expected: d + 1,
        });
    }
    Ok(decomposition)
}

/// The dominant eigenvector of `ℌ_d^l` for the simple top eigenvalue
/// `d!/l!`, normalized so its second coordinate is `1`.
///
/// The result is validated to have the shape `(0, +, …, +, 0)` and to be
/// palindromic before it is returned.
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] unless `1 ≤ level < d` (at `level = d`
/// the matrix is the identity and no eigenvalue is simple).
pub fn perron_vector(d: usize, level: usize) -> Result<RationalVector> {
    if level == 0 || level >= d {
        return Err(Error::level_in(level, 1, d.saturating_sub(1).max(1)));
    }
    let top = Rational::from_integer(factorial_quotient(d, level));
    let matrix = h_transform(d, level)?;
    let basis = eigenspace(matrix.matrix(), &top)?;
    if basis.len() != 1 {
        return Err(Error::SpectrumMismatch {
            context: format!("h-transform with d={d}, level={level}, top eigenvalue {top}"),
            found: basis.len(),
            expected: 1,
        });
    }
    let raw = &basis[0];
    if raw[1].is_zero() {
        return Err(Error::internal("dominant eigenvector has zero second coordinate"));
    }
    let scale = raw[1].recip();
    let vector: RationalVector = raw.iter().map(|x| x * &scale).collect();
    // Shape (0, +, …, +, 0) and palindromicity are theorems about these
    // matrices; check them rather than trusting the derivation.
    let shape_ok = vector[0].is_zero()
        && vector[d].is_zero()
        && vector[1..d].iter().all(|x| x > &rat(0));
    let palindromic = (0..=d).all(|i| vector[i] == vector[d - i]);
    if !shape_ok || !palindromic {
        return Err(Error::internal("dominant eigenvector failed its shape validation"));
    }
    Ok(vector)
}

/// Shape class of a vector in the structured unit-eigenvalue basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorShape {
    /// `(1, *, …, *, 0)`: anchored at the first coordinate.
    FirstAnchored,
    /// `(0, *, …, *, 1)`: anchored at the last coordinate.
    LastAnchored,
    /// `(0, *, …, *, 0)`: vanishes at both ends.
    ZeroEnded,
}

impl fmt::Display for VectorShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VectorShape::FirstAnchored => write!(f, "first-anchored"),
            VectorShape::LastAnchored => write!(f, "last-anchored"),
            VectorShape::ZeroEnded => write!(f, "zero-ended"),
        }
    }
}

/// A unit-eigenspace basis vector with its boundary shape and coordinate
/// sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedVector {
    /// The eigenvector.
    pub vector: RationalVector,
    /// Its boundary shape.
    pub shape: VectorShape,
    /// Sum of its coordinates (zero whenever `1` is not the top eigenvalue,
    /// i.e. whenever `level < d`).
    pub coordinate_sum: Rational,
}

/// A basis of the `(l+1)`-dimensional eigenspace of `ℌ_d^l` for eigenvalue
/// `1`, adapted to the boundary coordinates: exactly one vector anchored at
/// each end and `l − 1` vectors vanishing at both ends.
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] unless `1 ≤ level ≤ d`, and
/// [`Error::SpectrumMismatch`] if the eigenspace dimension is not `l + 1`.
pub fn structured_unit_basis(d: usize, level: usize) -> Result<Vec<ClassifiedVector>> {
    let matrix = h_transform(d, level)?;
    let basis = eigenspace(matrix.matrix(), &rat(1))?;
    if basis.len() != level + 1 {
        return Err(Error::SpectrumMismatch {
            context: format!("h-transform with d={d}, level={level}, eigenvalue 1"),
            found: basis.len(),
            expected: level + 1,
        });
    }
    // Row-reduce the basis with the boundary coordinates moved to the front,
    // so the first two pivots land on coordinates 0 and d and every later
    // basis vector is eliminated against both.
    let order: Vec<usize> = std::iter::once(0).chain(std::iter::once(d)).chain(1..d).collect();
    let permuted = RationalMatrix::from_rows(
        basis.iter().map(|v| order.iter().map(|&c| v[c].clone()).collect()).collect(),
    )?;
    let (reduced, pivots) = permuted.rref();
    if pivots.first() != Some(&0) || pivots.get(1) != Some(&1) {
        return Err(Error::internal(
            "unit eigenspace does not project onto its boundary coordinates",
        ));
    }
    let mut out = Vec::new();
    for (row_index, _) in basis.iter().enumerate() {
        let mut vector = vec![rat(0); d + 1];
        for (permuted_col, &original_col) in order.iter().enumerate() {
            vector[original_col] = reduced.get(row_index, permuted_col).clone();
        }
        let shape = match row_index {
            0 => VectorShape::FirstAnchored,
            1 => VectorShape::LastAnchored,
            _ => VectorShape::ZeroEnded,
        };
        let shape_ok = match shape {
            VectorShape::FirstAnchored => vector[0].is_one() && vector[d].is_zero(),
            VectorShape::LastAnchored => vector[0].is_zero() && vector[d].is_one(),
            VectorShape::ZeroEnded => vector[0].is_zero() && vector[d].is_zero(),
        };
        if !shape_ok {
            return Err(Error::internal("structured unit basis failed its shape validation"));
        }
        let coordinate_sum = vector.iter().fold(rat(0), |acc, x| acc + x);
        out.push(ClassifiedVector { vector, shape, coordinate_sum });
    }
    Ok(out)
}

/// The inner matrix of a transform: rows and columns `0` and `d` struck out,
/// leaving a `(d−1) × (d−1)` matrix.
pub fn inner_matrix(m: &TransformMatrix) -> RationalMatrix {
    let d = m.d();
    let n = d.saturating_sub(1);
    let mut inner = RationalMatrix::zeros(n, n);
    for i in 1..d {
        for j in 1..d {
            inner.set(i - 1, j - 1, m.matrix().get(i, j).clone());
        }
    }
    inner
}

/// Dimension of the eigenvalue-`1` eigenspace of the *inner* `ℌ_d^l` (always
/// `l − 1`: striking the boundary rows and columns removes exactly the two
/// anchored directions of the structured basis).
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] unless `1 ≤ level ≤ d`.
pub fn inner_unit_eigenspace_dimension(d: usize, level: usize) -> Result<usize> {
    let inner = inner_matrix(&h_transform(d, level)?);
    Ok(inner.minus_scalar_identity(&rat(1))?.nullspace().len())
}
