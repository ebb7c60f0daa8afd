//! Univariate polynomials over the exact rationals, with Sturm-chain real
//! root counting.
//!
//! The face-count generating polynomials studied in this crate have integer
//! coefficients, but Sturm chains need rational arithmetic (each step divides
//! by a leading coefficient), so the coefficient type is [`Rational`]
//! throughout. Coefficients are stored in ascending order of degree with
//! trailing zeros trimmed; the zero polynomial is the empty coefficient list.
//!
//! Root counting is exact and counts *distinct* real roots: the chain is built
//! on the square-free part `p / gcd(p, p′)`, and the count over an interval
//! `(a, b]` is the difference of generalized sign-variation counts at the two
//! endpoints (zeros are dropped before counting variations, which keeps the
//! half-open semantics correct even when an endpoint is itself a root).
//! Infinite endpoints take their signs from the leading coefficients, so the
//! default interval is all of `ℝ`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A univariate polynomial with exact rational coefficients, ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

/// One endpoint of a root-counting interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    /// `−∞`.
    NegInfinity,
    /// A finite endpoint.
    Finite(Rational),
    /// `+∞`.
    PosInfinity,
}

/// The real-rootedness summary of a nonzero polynomial: its degree, the
/// degree of its square-free part, and the number of distinct real roots.
///
/// The polynomial is real-rooted (all complex roots real) exactly when
/// `distinct_real_roots == squarefree_degree`, since the square-free part has
/// as many distinct complex roots as its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRootReport {
    /// Degree of the polynomial.
    pub degree: usize,
    /// Degree of its square-free part `p / gcd(p, p′)`.
    pub squarefree_degree: usize,
    /// Number of distinct real roots, counted by a Sturm chain over `ℝ`.
    pub distinct_real_roots: usize,
}

impl RealRootReport {
    /// Whether every root is real (with multiplicity): the square-free part
    /// has all its roots real.
    pub fn is_real_rooted(&self) -> bool {
        self.distinct_real_roots == self.squarefree_degree
    }
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from ascending machine-integer coefficients.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| crate::rational::rat(c)).collect())
    }

    /// Builds a polynomial from ascending big-integer coefficients.
    pub fn from_bigint_coeffs(coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Ascending coefficients with trailing zeros trimmed (empty for zero).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Evaluates at `x` by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// The sum `self + other`.
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                let b = other.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                a + b
            })
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    /// The difference `self − other`.
    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    /// The negation `−self`.
    pub fn neg(&self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// The product `self · other`.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// The `k`-th power (with `self⁰ = 1`).
    pub fn pow(&self, k: usize) -> Polynomial {
        let mut acc = Polynomial::from_int_coeffs(&[1]);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The formal derivative.
    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    /// Euclidean division: returns `(q, r)` with `self = q·divisor + r` and
    /// `deg r < deg divisor`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::DivisionByZero`] when `divisor` is the zero
    /// polynomial.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = Rational::one() / divisor.leading().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().expect("nonzero remainder") * &lead_inv;
            let shift = rd - dd;
            quot[shift] = factor.clone();
            // rem -= factor · x^shift · divisor
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem.coeffs[i + shift] -= &factor * c;
            }
            rem.trim();
        }
        Ok((Polynomial::from_coeffs(quot), rem))
    }

    /// Divides by the leading coefficient; the zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) => self.scale(&(Rational::one() / l)),
        }
    }

    /// The monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor in gcd loop");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The square-free part `self / gcd(self, self′)`, which has the same
    /// distinct roots as `self`, each with multiplicity one.
    ///
    /// # Errors
    ///
    /// Returns [`Error::ZeroPolynomial`] for the zero polynomial.
    pub fn squarefree_part(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return Ok(self.clone());
        }
        let (q, r) = self.div_rem(&g)?;
        debug_assert!(r.is_zero(), "gcd must divide the polynomial exactly");
        Ok(q)
    }

    /// The Sturm chain of the square-free part: `p₀` square-free, `p₁ = p₀′`,
    /// and `p_{k+1} = −(p_{k−1} mod p_k)` until the remainder vanishes.
    ///
    /// # Errors
    ///
    /// Returns [`Error::ZeroPolynomial`] for the zero polynomial.
    pub fn sturm_chain(&self) -> Result<Vec<Polynomial>> {
        let p0 = self.squarefree_part()?;
        let mut chain = vec![p0.clone()];
        if p0.degree() == Some(0) {
            return Ok(chain);
        }
        chain.push(p0.derivative());
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        Ok(chain)
    }

    /// Number of *distinct* real roots in the half-open interval `(lo, hi]`
    /// (all of `ℝ` for infinite bounds), by Sturm's theorem on the
    /// square-free part.
    ///
    /// # Errors
    ///
    /// Returns [`Error::ZeroPolynomial`] for the zero polynomial and
    /// [`Error::InvalidInterval`] when `lo > hi`.
    pub fn count_real_roots_in(&self, lo: &Bound, hi: &Bound) -> Result<usize> {
        if !bound_le(lo, hi) {
            return Err(Error::InvalidInterval);
        }
        let chain = self.sturm_chain()?;
        let v_lo = sign_variations(&chain, lo);
        let v_hi = sign_variations(&chain, hi);
        // With a square-free p₀ the variation count is non-increasing in the
        // evaluation point, so this subtraction cannot wrap.
        Ok(v_lo - v_hi)
    }

    /// Number of distinct real roots over all of `ℝ`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::ZeroPolynomial`] for the zero polynomial.
    pub fn count_real_roots(&self) -> Result<usize> {
        self.count_real_roots_in(&Bound::NegInfinity, &Bound::PosInfinity)
    }

    /// Degree, square-free degree, and distinct real root count in one
    /// report.
    ///
    /// # Errors
    ///
    /// Returns [`Error::ZeroPolynomial`] for the zero polynomial.
    pub fn real_root_report(&self) -> Result<RealRootReport> {
        let degree = self.degree().ok_or(Error::ZeroPolynomial)?;
        let squarefree_degree =
            self.squarefree_part()?.degree().expect("square-free part of nonzero is nonzero");
        let distinct_real_roots = self.count_real_roots()?;
        Ok(RealRootReport { degree, squarefree_degree, distinct_real_roots })
    }
}

/// `lo ≤ hi` in the extended real order.
fn bound_le(lo: &Bound, hi: &Bound) -> bool {
    match (lo, hi) {
        (Bound::NegInfinity, _) | (_, Bound::PosInfinity) => true,
        (Bound::PosInfinity, _) | (_, Bound::NegInfinity) => false,
        (Bound::Finite(a), Bound::Finite(b)) => a <= b,
    }
}

/// Sign of a chain member at a (possibly infinite) point: at a finite point
/// the sign of the value, at `±∞` the sign of the leading term.
fn sign_at(p: &Polynomial, at: &Bound) -> i8 {
    let sign = |r: &Rational| -> i8 {
        if r.is_zero() {
            0
        } else if r.is_positive() {
            1
        } else {
            -1
        }
    };
    match at {
        Bound::Finite(x) => sign(&p.eval(x)),
        Bound::PosInfinity => p.leading().map_or(0, |l| sign(l)),
        Bound::NegInfinity => match (p.leading(), p.degree()) {
            (Some(l), Some(d)) => {
                let s = sign(l);
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
            _ => 0,
        },
    }
}

/// Number of sign changes along the chain at a point, with zeros dropped
/// before adjacent signs are compared.
fn sign_variations(chain: &[Polynomial], at: &Bound) -> usize {
    let signs: Vec<i8> = chain.iter().map(|p| sign_at(p, at)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn construction_trims_and_reports_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0]).degree(), None);
        assert!(Polynomial::zero().is_zero());
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 1]); // 1 + t
        assert_eq!(a.mul(&a), p(&[1, 2, 1]));
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(a.sub(&a), Polynomial::zero());
        assert_eq!(p(&[0, 0, 3]).derivative(), p(&[0, 6]));
        assert_eq!(a.eval(&rat(4)), rat(5));
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]); // t² − 1
        let b = p(&[-1, 1]); // t − 1
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert!(a.div_rem(&Polynomial::zero()).is_err());
        // gcd(t² − 1, t³ − 1) = t − 1, monic.
        assert_eq!(a.gcd(&p(&[-1, 0, 0, 1])), b);
        assert_eq!(Polynomial::zero().gcd(&Polynomial::zero()), Polynomial::zero());
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        // (t − 1)²(t + 2) = t³ − 3t + 2
        let q = p(&[2, -3, 0, 1]);
        let sf = q.squarefree_part().unwrap();
        assert_eq!(sf.monic(), p(&[-2, 1, 1]).monic()); // (t − 1)(t + 2)
        assert!(Polynomial::zero().squarefree_part().is_err());
    }

    #[test]
    fn root_counts_match_known_cubics() {
        // t³ + 7t² + 12t + 6 has three distinct real roots.
        assert_eq!(p(&[6, 12, 7, 1]).count_real_roots().unwrap(), 3);
        // t² − 2 has two, exactly one of which lies in (1, 2].
        let q = p(&[-2, 0, 1]);
        assert_eq!(q.count_real_roots().unwrap(), 2);
        assert_eq!(
            q.count_real_roots_in(&Bound::Finite(rat(1)), &Bound::Finite(rat(2))).unwrap(),
            1
        );
        // t² + 1 has none.
        assert_eq!(p(&[1, 0, 1]).count_real_roots().unwrap(), 0);
    }

    #[test]
    fn half_open_semantics_at_vanishing_endpoints() {
        // t² − 4 on (−2, 2]: the root 2 is included, −2 is excluded.
        let q = p(&[-4, 0, 1]);
        assert_eq!(
            q.count_real_roots_in(&Bound::Finite(rat(-2)), &Bound::Finite(rat(2))).unwrap(),
            1
        );
        assert_eq!(
            q.count_real_roots_in(&Bound::Finite(rat(-3)), &Bound::Finite(rat(3))).unwrap(),
            2
        );
        assert_eq!(
            q.count_real_roots_in(&Bound::Finite(rat(-2)), &Bound::PosInfinity).unwrap(),
            1
        );
    }

    #[test]
    fn invalid_intervals_and_zero_polynomial_error() {
        let q = p(&[-2, 0, 1]);
        assert_eq!(
            q.count_real_roots_in(&Bound::Finite(rat(2)), &Bound::Finite(rat(1))),
            Err(Error::InvalidInterval)
        );
        assert_eq!(
            q.count_real_roots_in(&Bound::PosInfinity, &Bound::Finite(rat(1))),
            Err(Error::InvalidInterval)
        );
        assert_eq!(Polynomial::zero().count_real_roots(), Err(Error::ZeroPolynomial));
        // Degenerate interval (a, a] contains no roots.
        assert_eq!(
            q.count_real_roots_in(&Bound::Finite(rat(1)), &Bound::Finite(rat(1))).unwrap(),
            0
        );
    }

    #[test]
    fn report_distinguishes_multiplicity_from_nonreal_roots() {
        // (1 + t)³: degree 3, square-free degree 1, one distinct real root —
        // real-rooted.
        let cube = p(&[1, 3, 3, 1]);
        let rep = cube.real_root_report().unwrap();
        assert_eq!(rep, RealRootReport { degree: 3, squarefree_degree: 1, distinct_real_roots: 1 });
        assert!(rep.is_real_rooted());
        // t(t² + 1): degree 3, square-free, only one real root — not
        // real-rooted.
        let rep = p(&[0, 1, 0, 1]).real_root_report().unwrap();
        assert_eq!(rep, RealRootReport { degree: 3, squarefree_degree: 3, distinct_real_roots: 1 });
        assert!(!rep.is_real_rooted());
    }

    #[test]
    fn constant_polynomials_have_no_roots() {
        assert_eq!(p(&[5]).count_real_roots().unwrap(), 0);
        assert_eq!(p(&[5]).sturm_chain().unwrap().len(), 1);
    }
}
