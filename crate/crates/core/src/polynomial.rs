//! Exact univariate polynomials over the rationals.
//!
//! Coefficients are arbitrary-precision rationals, stored constant term
//! first with trailing zeros trimmed. Besides the usual ring operations the
//! module provides Newton interpolation through integer abscissas,
//! derivatives evaluated at 1, and conversion to the binomial basis
//! `B_k(s) = C(s+k-1, k)` used for human-readable output.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolynomialError {
    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(i64),
    #[error("interpolation needs at least one point")]
    NoPoints,
}

/// Dense univariate polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    /// Constant term first; no trailing zeros.
    coeffs: Vec<BigRational>,
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// Builds a polynomial from coefficients, constant term first.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| integer(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Leading coefficient; 0 for the zero polynomial.
    pub fn leading_coefficient(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn evaluate_int(&self, x: i64) -> BigRational {
        self.evaluate(&integer(x))
    }

    /// Value of the `i`-th derivative at `t = 1`: `sum_j j!/(j-i)! c_j`.
    pub fn derivative_at_one(&self, i: usize) -> BigRational {
        let mut total = BigRational::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            if j < i {
                continue;
            }
            let mut fall = BigInt::one();
            for t in 0..i {
                fall *= BigInt::from((j - t) as u64);
            }
            total += c * BigRational::from_integer(fall);
        }
        total
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by the linear factor `(x - a)`.
    fn mul_linear(&self, a: &BigRational) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] += c;
            out[k] -= c * a;
        }
        Self::from_coeffs(out)
    }

    /// Unique polynomial of degree `< points.len()` through the given
    /// points, by Newton divided differences. Abscissas must be distinct.
    pub fn interpolate(points: &[(i64, BigRational)]) -> Result<Self, PolynomialError> {
        if points.is_empty() {
            return Err(PolynomialError::NoPoints);
        }
        for (idx, (x, _)) in points.iter().enumerate() {
            if points[..idx].iter().any(|(other, _)| other == x) {
                return Err(PolynomialError::DuplicateAbscissa(*x));
            }
        }
        let xs: Vec<BigRational> = points.iter().map(|(x, _)| integer(*x)).collect();
        let mut diffs: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
        for j in 1..points.len() {
            for i in (j..points.len()).rev() {
                let num = &diffs[i] - &diffs[i - 1];
                diffs[i] = num / (&xs[i] - &xs[i - j]);
            }
        }
        let mut poly = Self::zero();
        let mut basis = Self::constant(BigRational::one());
        for (i, c) in diffs.iter().enumerate() {
            poly = &poly + &basis.scale(c);
            if i + 1 < points.len() {
                basis = basis.mul_linear(&xs[i]);
            }
        }
        Ok(poly)
    }

    /// Rewrites the polynomial in the basis `B_k(s) = C(s+k-1, k)`,
    /// peeling off leading terms from the top down.
    pub fn to_binomial_basis(&self) -> BinomialBasisForm {
        let Some(deg) = self.degree() else {
            return BinomialBasisForm { coeffs: Vec::new() };
        };
        let mut rem = self.clone();
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for k in (0..=deg).rev() {
            if rem.degree() != Some(k) {
                continue;
            }
            // B_k has leading coefficient 1/k!.
            let mut fact = BigInt::one();
            for t in 1..=k {
                fact *= BigInt::from(t as u64);
            }
            let c = rem.leading_coefficient() * BigRational::from_integer(fact);
            rem = &rem - &binomial_basis(k).scale(&c);
            coeffs[k] = c;
        }
        debug_assert!(rem.is_zero());
        BinomialBasisForm { coeffs }
    }
}

/// The expanded basis polynomial `B_k(s) = C(s+k-1, k)`.
pub fn binomial_basis(k: usize) -> RationalPolynomial {
    let mut poly = RationalPolynomial::constant(BigRational::one());
    let mut fact = BigInt::one();
    for i in 0..k {
        // multiply by (s + k-1-i)
        poly = poly.mul_linear(&integer(-((k - 1 - i) as i64)));
        fact *= BigInt::from((i + 1) as u64);
    }
    poly.scale(&BigRational::new(BigInt::one(), fact))
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        RationalPolynomial::from_coeffs(out)
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        RationalPolynomial::from_coeffs(out)
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::from_coeffs(out)
    }
}

/// A polynomial written as `sum_k c_k B_k(s)` with `B_k(s) = C(s+k-1, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialBasisForm {
    /// `coeffs[k]` multiplies `B_k`.
    coeffs: Vec<BigRational>,
}

impl BinomialBasisForm {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// True when every basis coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn expand(&self) -> RationalPolynomial {
        let mut out = RationalPolynomial::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &binomial_basis(k).scale(c);
            }
        }
        out
    }
}

/// Writes sign and magnitude; reports whether a magnitude was printed.
fn write_coeff(
    f: &mut fmt::Formatter<'_>,
    c: &BigRational,
    lead: bool,
    unit_blank: bool,
) -> Result<bool, fmt::Error> {
    let mag = c.abs();
    if lead {
        if c.is_negative() {
            write!(f, "-")?;
        }
    } else if c.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if mag.is_one() && unit_blank {
        return Ok(false);
    }
    if mag.is_integer() {
        write!(f, "{}", mag.numer())?;
    } else {
        write!(f, "({}/{})", mag.numer(), mag.denom())?;
    }
    Ok(true)
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut lead = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            write_coeff(f, c, lead, k > 0)?;
            match k {
                0 => {}
                1 => write!(f, "s")?,
                _ => write!(f, "s^{k}")?,
            }
            lead = false;
        }
        Ok(())
    }
}

impl fmt::Display for BinomialBasisForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.iter().all(Zero::is_zero) {
            return write!(f, "0");
        }
        let mut lead = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let printed = write_coeff(f, c, lead, k > 0)?;
            match k {
                0 => {}
                1 => write!(f, "s")?,
                _ => {
                    if printed {
                        write!(f, " ")?;
                    }
                    write!(f, "C(s+{}, {})", k - 1, k)?;
                }
            }
            lead = false;
        }
        Ok(())
    }
}
