//! Closed-form colengths in Stanley-Reisner rings.
//!
//! Everything here reduces to the piecewise parameter-ideal formula
//! [`param_colength`] through inclusion-exclusion over the minimal primes
//! of the face ideal: a sum of primes is again generated by variables, so
//! each subset `T` contributes the colength of a polynomial ring in
//! `d_T = |∩_{i∈T} facet_i|` variables. The subset sum is aggregated once
//! per complex into signed counts per `d_T` (see [`FaceRing`]); colength
//! queries then cost one [`param_colength`] call per distinct `d_T`.
//!
//! The binomial convention is the combinatorial one throughout: `binom(a, b)`
//! is zero unless `0 <= b <= a`, with `binom(0, 0) = 1`. Several small-index
//! edge cases of the Hilbert-Samuel and parameter formulas silently rely on
//! it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::homology::{is_cohen_macaulay, Characteristic};
use crate::polynomial::RationalPolynomial;
use crate::simplicial::{FhData, SimplicialComplex};

/// Nonempty subsets of more minimal primes than this are not enumerated.
pub const SUBSET_ENUMERATION_CAP: usize = 22;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum LengthError {
    #[error("invalid query: need s >= 1 and n >= 0, got s = {s}, n = {n}")]
    InvalidQuery { s: i64, n: i64 },
    #[error("{0} minimal primes exceed the subset enumeration cap {SUBSET_ENUMERATION_CAP}")]
    SubsetBlowup(usize),
    #[error("face ring is not Cohen-Macaulay over the rationals")]
    NotCohenMacaulay,
    #[error("a-invariant a_{0} is required but was not supplied")]
    MissingAInvariant(usize),
}

/// `binom(a, b)`: zero when `a < 0`, `b < 0` or `b > a`; the ordinary
/// binomial coefficient otherwise (so `binom(0, 0) = 1`).
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

fn check_query(s: i64, n: i64) -> Result<(), LengthError> {
    if s < 1 || n < 0 {
        return Err(LengthError::InvalidQuery { s, n });
    }
    Ok(())
}

/// `l(S/m^[s] m^n)` for a polynomial ring `S` in `d` variables.
///
/// Piecewise in `(s, n)`: for `d = 1` it is `s + n`; for `d = 2` it is
/// `s^2 + n^2 + n` up to `n = s` and `binom(n+s+1, 2)` beyond; for
/// `d >= 3` there are three branches. `d = 0` means `S = k`, so 1.
pub fn param_colength(d: usize, s: i64, n: i64) -> Result<BigInt, LengthError> {
    check_query(s, n)?;
    let value = match d {
        0 => BigInt::one(),
        1 => BigInt::from(s + n),
        2 => {
            if n <= s {
                BigInt::from(s * s + n * n + n)
            } else {
                binom(n + s + 1, 2)
            }
        }
        _ => {
            let d_i = d as i64;
            let s_pow_d = BigInt::from(s).pow(d as u32);
            if n <= s {
                s_pow_d + BigInt::from(d_i) * binom(n + d_i - 1, d_i)
            } else if n <= (d_i - 1) * s - 1 {
                let mut acc = s_pow_d;
                for i in 1..d_i {
                    let term = binom(d_i, i) * binom(n - (i - 1) * s + d_i - 1, d_i);
                    if i % 2 == 1 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                acc
            } else {
                binom(n + s + d_i - 1, d_i)
            }
        }
    };
    Ok(value)
}

/// A Stanley-Reisner ring with its colength machinery precomputed: f/h
/// data, Taylor coefficients of the h-polynomial at 1, and the signed
/// inclusion-exclusion profile over minimal primes.
///
/// Immutable after construction; all queries are pure.
#[derive(Clone, Debug)]
pub struct FaceRing {
    fh: FhData,
    vertex_count: usize,
    /// `(d_T, signed count)` aggregated over nonempty subsets `T` of the
    /// minimal primes, where `d_T` is the size of the facet intersection.
    profile: Vec<(usize, i64)>,
    /// `h^(i)(1) / i!` for `i = 0..=d`; always integers.
    taylor: Vec<BigInt>,
}

impl FaceRing {
    pub fn new(k: &SimplicialComplex) -> Result<Self, LengthError> {
        let alpha = k.facet_count();
        if alpha > SUBSET_ENUMERATION_CAP {
            return Err(LengthError::SubsetBlowup(alpha));
        }
        let fh = FhData::of(k);
        let taylor = taylor_at_one(&fh.h);
        let facets = k.facets();
        let mut counts = vec![0i64; k.vertex_count() + 1];
        walk_subsets(facets, 0, 0, crate::simplicial::VertexSet::EMPTY, &mut counts);
        let profile = counts
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .collect();
        Ok(FaceRing { fh, vertex_count: k.vertex_count(), profile, taylor })
    }

    pub fn fh(&self) -> &FhData {
        &self.fh
    }

    /// Krull dimension of the ring.
    pub fn dimension(&self) -> usize {
        self.fh.d
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// `l(S/(I + m^[s] m^n))` by inclusion-exclusion over minimal primes.
    pub fn sr_colength(&self, s: i64, n: i64) -> Result<BigInt, LengthError> {
        check_query(s, n)?;
        let mut total = BigInt::zero();
        for &(d_t, count) in &self.profile {
            total += param_colength(d_t, s, n)? * BigInt::from(count);
        }
        Ok(total)
    }

    /// Hilbert-Samuel function `l(R/n^n)`; zero for `n <= 0`.
    pub fn hilbert_samuel(&self, n: i64) -> BigInt {
        hs_from_taylor(&self.taylor, self.fh.d, n)
    }

    /// Conca's generalized Hilbert-Kunz function of the face ring itself:
    /// `l(R/n^[s]) = sum_i f_{i-1} (s-1)^i`.
    pub fn conca_hk(&self, s: i64) -> Result<BigInt, LengthError> {
        check_query(s, 0)?;
        Ok(conca_from_f(&self.fh.f, s))
    }
}

fn hs_from_taylor(taylor: &[BigInt], d: usize, n: i64) -> BigInt {
    if n <= 0 {
        return BigInt::zero();
    }
    let d = d as i64;
    let mut total = BigInt::zero();
    for (i, c) in taylor.iter().enumerate() {
        let term = c * binom(n - 1 + d - i as i64, d - i as i64);
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn conca_from_f(f: &[i64], s: i64) -> BigInt {
    let mut total = BigInt::zero();
    for (i, &fi) in f.iter().enumerate() {
        total += BigInt::from(fi) * BigInt::from(s - 1).pow(i as u32);
    }
    total
}

/// Signed subset walk with early cancellation: once an intersection is
/// empty every extension also lands on `d_T = 0`, and the alternating signs
/// cancel unless the subset cannot be extended at all.
fn walk_subsets(
    facets: &[crate::simplicial::VertexSet],
    idx: usize,
    size: usize,
    inter: crate::simplicial::VertexSet,
    counts: &mut [i64],
) {
    for j in idx..facets.len() {
        let ninter = if size == 0 { facets[j] } else { inter.intersection(facets[j]) };
        let sign = if size % 2 == 0 { 1 } else { -1 };
        if ninter.is_empty() {
            if j + 1 == facets.len() {
                counts[0] += sign;
            }
            continue;
        }
        counts[ninter.len()] += sign;
        walk_subsets(facets, j + 1, size + 1, ninter, counts);
    }
}

fn taylor_at_one(h: &[i64]) -> Vec<BigInt> {
    let poly = RationalPolynomial::from_integers(h);
    let mut fact = BigInt::one();
    (0..h.len())
        .map(|i| {
            if i > 0 {
                fact *= BigInt::from(i as u64);
            }
            let v = poly.derivative_at_one(i) / num_rational::BigRational::from_integer(fact.clone());
            debug_assert!(v.is_integer());
            v.to_integer()
        })
        .collect()
}

/// One-shot `l(S/(I_Δ + m^[s] m^n))`.
pub fn sr_colength(k: &SimplicialComplex, s: i64, n: i64) -> Result<BigInt, LengthError> {
    FaceRing::new(k)?.sr_colength(s, n)
}

/// One-shot Hilbert-Samuel function `l(R/n^n)`.
pub fn hilbert_samuel(k: &SimplicialComplex, n: i64) -> BigInt {
    let fh = FhData::of(k);
    hs_from_taylor(&taylor_at_one(&fh.h), fh.d, n)
}

/// One-shot Conca function `l(R/n^[s])`.
pub fn conca_hk(k: &SimplicialComplex, s: i64) -> Result<BigInt, LengthError> {
    check_query(s, 0)?;
    Ok(conca_from_f(&FhData::of(k).f, s))
}

/// Hilbert series of the face ring as `h(t) / (1-t)^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    /// The h-vector, `h_0..h_d` (trailing zeros kept).
    pub numerator: Vec<i64>,
    /// Exponent `d` of `(1-t)` in the denominator.
    pub denominator_power: usize,
}

/// Hilbert series via the h-vector, cross-checked against Stanley's face
/// count sum brought over the common denominator.
pub fn hilbert_series(k: &SimplicialComplex) -> HilbertSeries {
    let fh = FhData::of(k);
    // Stanley route: sum_i f_{i-1} t^i (1-t)^{d-i}.
    let one_minus_t = RationalPolynomial::from_integers(&[1, -1]);
    let mut stanley = RationalPolynomial::zero();
    for (i, &fi) in fh.f.iter().enumerate() {
        let mut term = RationalPolynomial::from_integers(
            &std::iter::repeat(0).take(i).chain([fi]).collect::<Vec<_>>(),
        );
        for _ in 0..fh.d - i {
            term = &term * &one_minus_t;
        }
        stanley = &stanley + &term;
    }
    let from_h = RationalPolynomial::from_integers(&fh.h);
    assert_eq!(stanley, from_h, "h-vector and Stanley sum disagree");
    HilbertSeries { numerator: fh.h.clone(), denominator_power: fh.d }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = String::new();
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if terms.is_empty() {
                if c < 0 {
                    terms.push('-');
                }
            } else {
                terms.push_str(if c < 0 { " - " } else { " + " });
            }
            let mag = c.unsigned_abs();
            if mag != 1 || i == 0 {
                terms.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => terms.push('t'),
                _ => terms.push_str(&format!("t^{i}")),
            }
        }
        if terms.is_empty() {
            terms.push('0');
        }
        match self.denominator_power {
            0 => write!(f, "{terms}"),
            1 => write!(f, "({terms})/(1 - t)"),
            d => write!(f, "({terms})/(1 - t)^{d}"),
        }
    }
}

pub(crate) fn postulation_from_h(h: &[i64], d: usize) -> i64 {
    let deg = h.iter().rposition(|&c| c != 0).expect("h_0 = 1") as i64;
    deg - d as i64
}

/// Postulation number `n(n) = deg h - d` of a Cohen-Macaulay face ring
/// (checked over the rationals).
pub fn postulation_number(k: &SimplicialComplex) -> Result<i64, LengthError> {
    if !is_cohen_macaulay(k, Characteristic::Zero) {
        return Err(LengthError::NotCohenMacaulay);
    }
    let fh = FhData::of(k);
    Ok(postulation_from_h(&fh.h, fh.d))
}

/// Reduction number of `n^s` for a Cohen-Macaulay face ring:
/// `floor(n(n)/s) + d`.
pub fn reduction_number_marley(k: &SimplicialComplex, s: i64) -> Result<i64, LengthError> {
    check_query(s, 0)?;
    let post = postulation_number(k)?;
    let fh = FhData::of(k);
    Ok(post.div_euclid(s) + fh.d as i64)
}

/// Stable reduction number of large powers from the a-invariants: the
/// analytic spread if `a_spread >= 0`, one less if negative. `a_i` values
/// that are minus infinity are simply absent from the map.
pub fn reduction_number_hoa(
    a_invariants: &BTreeMap<usize, i64>,
    spread: usize,
) -> Result<i64, LengthError> {
    let a_top = a_invariants
        .get(&spread)
        .ok_or(LengthError::MissingAInvariant(spread))?;
    if *a_top >= 0 {
        Ok(spread as i64)
    } else {
        Ok(spread as i64 - 1)
    }
}
