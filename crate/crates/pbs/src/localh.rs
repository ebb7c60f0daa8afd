//! Local `h`-polynomials of partial barycentric subdivision.
//!
//! The local `h`-polynomial of a subdivision of the `(d−1)`-simplex measures
//! the part of its `h`-vector not forced by the boundary; for a subdivision
//! `Γ` of `Δ_{d−1}` it is defined by inclusion–exclusion over the faces of
//! the simplex:
//!
//! ```text
//! ℓ(Γ) = Σ_{W ⊆ [d]} (−1)^{d − #W} · h(Γ restricted to W)
//! ```
//!
//! For `Γ = sd_l Δ_{d−1}` the restriction to a `w`-subset is `sd_l Δ_{w−1}`,
//! whose `h`-vector is column `0` of the transform matrix acting on
//! `w`-vertex complexes — so the whole polynomial collapses to a sum over
//! `w = 0, …, d` weighted by `(−1)^{d−w} · C(d, w)`. [`local_h`] evaluates
//! it exactly.
//!
//! Structure (all visible in the computed values, and checked by the tests):
//!
//! * the coefficient vector is symmetric, `ℓ_i = ℓ_{d−i}`, and nonnegative;
//! * `ℓ_0 = ℓ_d = 0` for `d ≥ 1` (the extreme coefficients cancel);
//! * `ℓ ≡ 0` exactly when `l ≥ d` (the subdivision leaves `Δ_{d−1}` alone —
//!   note `sd_{d−1} Δ_{d−1}` is a *nontrivial* subdivision and its local `h`
//!   is the nonzero `(0, 1, …, 1, 0)`);
//! * at `l = 1` (full barycentric subdivision) the local `h`-polynomial is
//!   the excedance polynomial of derangements: `ℓ_i` counts derangements of
//!   `[d]` with exactly `i` excedances.
//!   [`derangement_excedance_polynomial`] computes that distribution by
//!   direct enumeration, giving an independent route to the same numbers.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm;
use crate::poly::Polynomial;
use crate::rational::binomial;
use crate::transform::h_transform;

/// The local `h`-polynomial of `sd_l Δ_{d−1}`, with coefficients
/// `ℓ_0, …, ℓ_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalHPolynomial {
    d: usize,
    level: usize,
    coefficients: Vec<BigInt>,
}

impl LocalHPolynomial {
    /// Number of vertices of the subdivided simplex.
    pub fn d(&self) -> usize {
        self.d
    }

    /// The subdivision level.
    pub fn level(&self) -> usize {
        self.level
    }

    /// The coefficients `ℓ_0, …, ℓ_d`.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Whether every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// Whether the coefficients are palindromic, `ℓ_i = ℓ_{d−i}`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.coefficients.len();
        (0..n).all(|i| self.coefficients[i] == self.coefficients[n - 1 - i])
    }

    /// Whether every coefficient is `≥ 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.coefficients.iter().all(|c| c >= &BigInt::zero())
    }

    /// The polynomial `Σ_i ℓ_i t^i`.
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_bigint_coeffs(&self.coefficients)
    }
}

/// `h`-vector of `sd_l Δ_{w−1}` padded with zeros to length `len`.
fn subdivided_simplex_h(w: usize, level: usize, len: usize) -> Result<Vec<BigInt>> {
    let mut h = vec![BigInt::zero(); len];
    if level >= w {
        // The subdivision leaves the simplex (and the void complex, w = 0)
        // unchanged: h = e_0.
        h[0] = BigInt::from(1);
        return Ok(h);
    }
    let matrix = h_transform(w, level)?;
    for i in 0..=w {
        h[i] = matrix.entry(i, 0);
    }
    Ok(h)
}

/// The local `h`-polynomial of `sd_l Δ_{d−1}`, computed by
/// inclusion–exclusion over the face sizes of the simplex.
///
/// # Errors
///
/// Returns [`Error::InvalidLevel`] if `level = 0`; every `level ≥ 1` is
/// accepted (levels `≥ d` give the zero polynomial).
pub fn local_h(d: usize, level: usize) -> Result<LocalHPolynomial> {
    if level == 0 {
        return Err(Error::level_at_least_one(level));
    }
    let mut coefficients = vec![BigInt::zero(); d + 1];
    for w in 0..=d {
        let h = subdivided_simplex_h(w, level, d + 1)?;
        let weight = binomial(d, w);
        let sign = if (d - w) % 2 == 0 { 1 } else { -1 };
        for (c, hv) in coefficients.iter_mut().zip(h) {
            *c += BigInt::from(sign) * &weight * hv;
        }
    }
    Ok(LocalHPolynomial { d, level, coefficients })
}

/// The excedance distribution of the derangements of `[d]`: entry `i` counts
/// derangements with exactly `i` excedances (positions `p` with
/// `σ(p) > p`). Length `d + 1`; for `d = 0` the empty permutation counts
/// once with zero excedances.
///
/// This equals the coefficient vector of [`local_h`]`(d, 1)` — by a
/// completely different computation.
pub fn derangement_excedance_polynomial(d: usize) -> Vec<BigInt> {
    let mut counts = vec![BigInt::zero(); d + 1];
    for sigma in perm::derangements(d) {
        counts[sigma.excedance_count()] += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(d: usize, level: usize) -> Vec<i64> {
        local_h(d, level)
            .unwrap()
            .coefficients()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn small_values() {
        assert_eq!(coeffs(1, 1), vec![0, 0]);
        assert_eq!(coeffs(2, 1), vec![0, 1, 0]);
        assert_eq!(coeffs(3, 1), vec![0, 1, 1, 0]);
        assert_eq!(coeffs(3, 2), vec![0, 1, 1, 0]);
        assert_eq!(coeffs(4, 1), vec![0, 1, 7, 1, 0]);
        assert_eq!(coeffs(4, 2), vec![0, 1, 1, 1, 0]);
        assert_eq!(coeffs(4, 3), vec![0, 1, 1, 1, 0]);
        assert_eq!(coeffs(5, 1), vec![0, 1, 21, 21, 1, 0]);
        assert_eq!(coeffs(5, 2), vec![0, 1, 11, 11, 1, 0]);
        assert_eq!(coeffs(5, 3), vec![0, 1, 1, 1, 1, 0]);
    }

    #[test]
    fn larger_values() {
        assert_eq!(coeffs(6, 1), vec![0, 1, 51, 161, 51, 1, 0]);
        assert_eq!(coeffs(6, 2), vec![0, 1, 36, 56, 36, 1, 0]);
        assert_eq!(coeffs(6, 3), vec![0, 1, 16, 16, 16, 1, 0]);
        assert_eq!(coeffs(6, 4), vec![0, 1, 1, 1, 1, 1, 0]);
        assert_eq!(coeffs(7, 1), vec![0, 1, 113, 813, 813, 113, 1, 0]);
        assert_eq!(coeffs(7, 2), vec![0, 1, 92, 372, 372, 92, 1, 0]);
        assert_eq!(coeffs(7, 3), vec![0, 1, 57, 92, 92, 57, 1, 0]);
        assert_eq!(coeffs(7, 4), vec![0, 1, 22, 22, 22, 22, 1, 0]);
    }

    #[test]
    fn vanishes_exactly_at_high_levels() {
        for d in 1..=6usize {
            for level in 1..=d + 1 {
                let p = local_h(d, level).unwrap();
                assert_eq!(p.is_zero(), level >= d, "d={d} l={level}");
            }
        }
        // The void case: ℓ of the (−1)-simplex is the constant 1.
        assert_eq!(local_h(0, 1).unwrap().coefficients(), &[BigInt::from(1)]);
    }

    #[test]
    fn symmetry_and_nonnegativity() {
        for d in 1..=6usize {
            for level in 1..=d {
                let p = local_h(d, level).unwrap();
                assert!(p.is_symmetric(), "d={d} l={level}");
                assert!(p.is_nonnegative(), "d={d} l={level}");
            }
        }
    }

    #[test]
    fn barycentric_case_counts_derangement_excedances() {
        for d in 0..=6usize {
            let via_transform = local_h(d, 1).unwrap().coefficients().to_vec();
            assert_eq!(via_transform, derangement_excedance_polynomial(d), "d={d}");
        }
    }

    #[test]
    fn level_zero_is_rejected() {
        assert!(local_h(3, 0).is_err());
    }

    #[test]
    fn polynomial_view() {
        let p = local_h(4, 2).unwrap();
        assert_eq!(p.polynomial(), Polynomial::from_int_coeffs(&[0, 1, 1, 1]));
        assert_eq!(p.polynomial().eval(&crate::rational::rat(1)), crate::rational::rat(3));
    }
}
