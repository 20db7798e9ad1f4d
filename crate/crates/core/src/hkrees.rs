//! The generalized Hilbert-Kunz function of the Rees algebra ideal
//! `(n, nt)` over a face ring, evaluated exactly and fitted to its
//! polynomial.
//!
//! The value at `s` comes from the graded decomposition of
//! `R(n)/(n, nt)^[s]`: writing `r(n^s) = d - j`,
//!
//! ```text
//! HK(s) = sum_{n=0}^{s-1} l(R/n^[s]n^n)
//!       + sum_{n=0}^{(d-j)s-1} l(R/n^[s]n^n)
//!       - sum_{n=1}^{(d-j+1)s-1} l(R/n^n)
//! ```
//!
//! which agrees with the usual display (two copies of the partial sum, a
//! middle block, and `2 l(R/n^[s])`) whenever `d - j >= 1`, and stays
//! correct in the degenerate `d - j = 0` case of a one-vertex complex.
//!
//! `j` depends on the mode: for Cohen-Macaulay rings `j(s) = -floor(n(n)/s)`
//! from the postulation number; otherwise `j` is 1 or 0 according to the
//! sign of the top a-invariant, and the caller must supply `delta`, the
//! largest finite `|a_i(R)|`, below which values are not certified.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::homology::{is_cohen_macaulay, Characteristic};
use crate::lengths::{postulation_from_h, FaceRing, LengthError};
use crate::oracle::{oracle_hk_rees, OracleConfig, OracleError};
use crate::polynomial::{BinomialBasisForm, RationalPolynomial};
use crate::simplicial::{FhData, SimplicialComplex};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum HkError {
    #[error("s = {s} is below the validity threshold s >= {s_min} for this mode")]
    BelowValidityThreshold { s: i64, s_min: i64 },
    #[error("ring is not Cohen-Macaulay; supply delta and the a_d sign")]
    MissingAInvariantData,
    #[error("delta must be nonnegative, got {0}")]
    InvalidDelta(i64),
    #[error("fitted polynomial fails to reproduce HK({s}); mode or threshold is wrong")]
    FitMismatch { s: i64 },
    #[error(transparent)]
    Length(#[from] LengthError),
}

/// Sign of the top a-invariant `a_d(R)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdSign {
    Negative,
    Zero,
}

/// User-supplied local cohomology data for rings that are not
/// Cohen-Macaulay: `delta = max |a_i(R)|` over the finite a-invariants,
/// plus the sign of `a_d(R)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonCmData {
    pub delta: i64,
    pub ad_sign: AdSign,
}

/// How `HK(s)` is to be computed for a given ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HkMode {
    /// Fully automatic: `j(s)` is derived from the postulation number.
    CohenMacaulay { postulation: i64 },
    /// Externally supplied a-invariant data; values certified for
    /// `s > delta` only.
    NonCohenMacaulay { delta: i64, ad_sign: AdSign },
}

impl HkMode {
    /// Smallest `s` at which values are certified.
    pub fn s_min(&self) -> i64 {
        match *self {
            HkMode::CohenMacaulay { postulation } => postulation.abs().max(1),
            HkMode::NonCohenMacaulay { delta, .. } => delta + 1,
        }
    }

    /// The `j` in `r(n^s) = d - j`.
    pub fn j_at(&self, s: i64) -> i64 {
        match *self {
            HkMode::CohenMacaulay { postulation } => -postulation.div_euclid(s),
            HkMode::NonCohenMacaulay { ad_sign: AdSign::Negative, .. } => 1,
            HkMode::NonCohenMacaulay { ad_sign: AdSign::Zero, .. } => 0,
        }
    }

    /// First sample abscissa for polynomial fitting, placed so every
    /// sample shares the same `j`.
    fn sample_start(&self) -> i64 {
        match *self {
            HkMode::CohenMacaulay { postulation } => self.s_min() + postulation.abs(),
            HkMode::NonCohenMacaulay { .. } => self.s_min(),
        }
    }
}

/// Picks the computation mode: Cohen-Macaulay rings (over the given
/// characteristic) run automatically off the postulation number; anything
/// else needs `overrides`. Explicit overrides always win.
pub fn determine_mode(
    k: &SimplicialComplex,
    ch: Characteristic,
    overrides: Option<NonCmData>,
) -> Result<HkMode, HkError> {
    if let Some(data) = overrides {
        if data.delta < 0 {
            return Err(HkError::InvalidDelta(data.delta));
        }
        return Ok(HkMode::NonCohenMacaulay { delta: data.delta, ad_sign: data.ad_sign });
    }
    if is_cohen_macaulay(k, ch) {
        let fh = FhData::of(k);
        let postulation = postulation_from_h(&fh.h, fh.d);
        debug_assert!(-(fh.d as i64) <= postulation && postulation <= 0);
        Ok(HkMode::CohenMacaulay { postulation })
    } else {
        Err(HkError::MissingAInvariantData)
    }
}

fn hk_value(ring: &FaceRing, s: i64, mode: &HkMode) -> Result<BigInt, HkError> {
    let d = ring.dimension() as i64;
    let j = mode.j_at(s);
    let mut total = BigInt::from(0u32);
    for n in 0..s {
        total += ring.sr_colength(s, n)?;
    }
    for n in 0..(d - j) * s {
        total += ring.sr_colength(s, n)?;
    }
    for n in 1..(d - j + 1) * s {
        total -= ring.hilbert_samuel(n);
    }
    Ok(total)
}

/// `HK(s)` for `s` at or above the mode's validity threshold.
pub fn hk_rees_at(k: &SimplicialComplex, s: i64, mode: &HkMode) -> Result<BigInt, HkError> {
    if s < mode.s_min() {
        return Err(HkError::BelowValidityThreshold { s, s_min: mode.s_min() });
    }
    let ring = FaceRing::new(k)?;
    hk_value(&ring, s, mode)
}

/// `HK(s)` for any `s >= 1`, including below the validity threshold.
/// Sub-threshold values use the same formula but come with no guarantee;
/// the test suite verifies them against the enumeration oracle.
pub fn hk_rees_at_experimental(
    k: &SimplicialComplex,
    s: i64,
    mode: &HkMode,
) -> Result<BigInt, HkError> {
    if s < 1 {
        return Err(HkError::Length(LengthError::InvalidQuery { s, n: 0 }));
    }
    let ring = FaceRing::new(k)?;
    hk_value(&ring, s, mode)
}

/// Verdict of the multiplicity bound `e_HK(R(n)) <= c(d) e(n)` with
/// `c(d) = d/2 + d/(d+1)!`; for face rings equality is the expected case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtoYoshidaVerdict {
    /// Leading coefficient of the fitted polynomial (degree `d+1`), i.e.
    /// the generalized Hilbert-Kunz multiplicity.
    pub leading: BigRational,
    /// The bound `c(d) * f_{d-1}`.
    pub bound: BigRational,
    pub equal: bool,
}

/// `c(d) = d/2 + d/(d+1)!`.
pub fn eto_yoshida_constant(d: usize) -> BigRational {
    let mut fact = BigInt::one();
    for i in 2..=(d as u64 + 1) {
        fact *= BigInt::from(i);
    }
    BigRational::new(BigInt::from(d as u64), BigInt::from(2u32))
        + BigRational::new(BigInt::from(d as u64), fact)
}

fn bound_verdict(d: usize, e: i64, leading: &BigRational) -> EtoYoshidaVerdict {
    let bound = eto_yoshida_constant(d) * BigRational::from_integer(BigInt::from(e));
    EtoYoshidaVerdict { leading: leading.clone(), bound: bound.clone(), equal: *leading == bound }
}

/// Recomputes the bound verdict for a finished report.
pub fn eto_yoshida_check(report: &HkReport) -> EtoYoshidaVerdict {
    bound_verdict(report.fh.d, report.fh.e, &report.polynomial.leading_coefficient())
}

/// Everything `hk_rees_polynomial` established about one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HkReport {
    pub vertex_count: usize,
    pub fh: FhData,
    pub mode: HkMode,
    pub s_min: i64,
    /// All evaluated points, fit and verification samples alike.
    pub samples: Vec<(i64, BigInt)>,
    pub polynomial: RationalPolynomial,
    pub binomial: BinomialBasisForm,
    /// Leading coefficient, the generalized Hilbert-Kunz multiplicity.
    pub multiplicity: BigRational,
    pub bound_check: EtoYoshidaVerdict,
    /// Filled by [`HkReport::verify_against_oracle`].
    pub oracle_agreement: Option<Vec<(i64, bool)>>,
}

impl HkReport {
    /// Compares the fitted polynomial against the enumeration oracle at
    /// the given points; records and returns whether all agree.
    pub fn verify_against_oracle(
        &mut self,
        k: &SimplicialComplex,
        s_values: &[i64],
        cfg: &OracleConfig,
    ) -> Result<bool, OracleError> {
        let mut flags = Vec::with_capacity(s_values.len());
        for &s in s_values {
            let enumerated = oracle_hk_rees(k, s, cfg)?;
            let fitted = self.polynomial.evaluate_int(s);
            let agree = fitted.is_integer() && fitted.to_integer() == enumerated;
            flags.push((s, agree));
        }
        let all = flags.iter().all(|&(_, ok)| ok);
        self.oracle_agreement = Some(flags);
        Ok(all)
    }
}

/// Samples `HK`, fits the degree-`d+1` polynomial, and verifies it on two
/// extra points. Samples start where `j` has stabilized, so one branch of
/// the piecewise function is fitted.
pub fn hk_rees_polynomial(k: &SimplicialComplex, mode: &HkMode) -> Result<HkReport, HkError> {
    let ring = FaceRing::new(k)?;
    let d = ring.dimension();
    let start = mode.sample_start();
    let fit_count = d + 2;
    let total = fit_count + 2;
    let mut samples: Vec<(i64, BigInt)> = Vec::with_capacity(total);
    for idx in 0..total {
        let s = start + idx as i64;
        samples.push((s, hk_value(&ring, s, mode)?));
    }
    let points: Vec<(i64, BigRational)> = samples[..fit_count]
        .iter()
        .map(|(s, v)| (*s, BigRational::from_integer(v.clone())))
        .collect();
    let polynomial = RationalPolynomial::interpolate(&points)
        .expect("sample abscissas are distinct");
    if polynomial.degree() != Some(d + 1) {
        return Err(HkError::FitMismatch { s: start });
    }
    for (s, v) in &samples[fit_count..] {
        if polynomial.evaluate_int(*s) != BigRational::from_integer(v.clone()) {
            return Err(HkError::FitMismatch { s: *s });
        }
    }
    let binomial = polynomial.to_binomial_basis();
    let multiplicity = polynomial.leading_coefficient();
    let bound_check = bound_verdict(d, ring.fh().e, &multiplicity);
    Ok(HkReport {
        vertex_count: ring.vertex_count(),
        fh: ring.fh().clone(),
        mode: *mode,
        s_min: mode.s_min(),
        samples,
        polynomial,
        binomial,
        multiplicity,
        bound_check,
        oracle_agreement: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::{integer, rational};
    use crate::simplicial::{
        complete_bipartite, cycle_complex, independence_complex, path_complex, rp2, simplex,
        SimplicialComplex,
    };

    fn complex(vertices: &[&str], facets: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(
            vertices.iter().map(|s| s.to_string()).collect(),
            facets.iter().map(|f| f.to_vec()).collect(),
        )
        .unwrap()
    }

    fn two_disjoint_edges() -> SimplicialComplex {
        complex(&["x1", "x2", "x3", "x4"], &[&["x1", "x2"], &["x3", "x4"]])
    }

    fn pendant_solid_triangle() -> SimplicialComplex {
        complex(&["x1", "x2", "x3", "x4"], &[&["x1", "x2"], &["x2", "x3", "x4"]])
    }

    fn pendant_hollow_triangle() -> SimplicialComplex {
        complex(
            &["x1", "x2", "x3", "x4"],
            &[&["x1", "x2"], &["x2", "x3"], &["x3", "x4"], &["x2", "x4"]],
        )
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn neg(delta: i64) -> Option<NonCmData> {
        Some(NonCmData { delta, ad_sign: AdSign::Negative })
    }

    #[test]
    fn mode_determination() {
        let mode = determine_mode(&pendant_hollow_triangle(), Characteristic::Zero, None).unwrap();
        assert_eq!(mode, HkMode::CohenMacaulay { postulation: 0 });
        assert_eq!(mode.s_min(), 1);

        let mode = determine_mode(&two_disjoint_edges(), Characteristic::Zero, neg(2)).unwrap();
        assert_eq!(mode.s_min(), 3);

        let k34 = independence_complex(&complete_bipartite(3, 4).unwrap());
        let mode = determine_mode(&k34, Characteristic::Zero, neg(4)).unwrap();
        assert_eq!(mode.s_min(), 5);

        assert_eq!(
            determine_mode(&two_disjoint_edges(), Characteristic::Zero, None),
            Err(HkError::MissingAInvariantData)
        );
        assert_eq!(
            determine_mode(&rp2(), Characteristic::Prime(2), None),
            Err(HkError::MissingAInvariantData)
        );
        assert_eq!(
            determine_mode(&rp2(), Characteristic::Zero, None),
            Ok(HkMode::CohenMacaulay { postulation: -1 })
        );
    }

    #[test]
    fn j_follows_reduction_number_casework() {
        let mode = HkMode::CohenMacaulay { postulation: -5 };
        assert_eq!(mode.j_at(1), 5);
        assert_eq!(mode.j_at(2), 3);
        assert_eq!(mode.j_at(5), 1);
        assert_eq!(mode.j_at(7), 1);
        let mode = HkMode::CohenMacaulay { postulation: 0 };
        assert_eq!(mode.j_at(1), 0);
        assert_eq!(HkMode::NonCohenMacaulay { delta: 3, ad_sign: AdSign::Negative }.j_at(9), 1);
        assert_eq!(HkMode::NonCohenMacaulay { delta: 3, ad_sign: AdSign::Zero }.j_at(9), 0);
    }

    #[test]
    fn projective_plane_point_values() {
        let k = rp2();
        let mode = determine_mode(&k, Characteristic::Zero, None).unwrap();
        let expected = [104, 759, 2806, 7475, 16386];
        for (i, s) in (2..=6).enumerate() {
            assert_eq!(hk_rees_at(&k, s, &mode).unwrap(), int(expected[i]));
        }
        assert_eq!(hk_rees_at(&k, 1, &mode).unwrap(), int(1));
    }

    #[test]
    fn point_values_of_other_examples() {
        let k = two_disjoint_edges();
        let mode = determine_mode(&k, Characteristic::Zero, neg(2)).unwrap();
        assert_eq!(hk_rees_at(&k, 3, &mode).unwrap(), int(69));
        assert_eq!(
            hk_rees_at(&k, 2, &mode),
            Err(HkError::BelowValidityThreshold { s: 2, s_min: 3 })
        );
        // Below threshold the formula still reproduces the oracle (19).
        assert_eq!(hk_rees_at_experimental(&k, 2, &mode).unwrap(), int(19));

        let k = pendant_hollow_triangle();
        let mode = determine_mode(&k, Characteristic::Zero, None).unwrap();
        assert_eq!(hk_rees_at(&k, 1, &mode).unwrap(), int(1));
        assert_eq!(hk_rees_at(&k, 2, &mode).unwrap(), int(25));

        let k34 = independence_complex(&complete_bipartite(3, 4).unwrap());
        let mode = determine_mode(&k34, Characteristic::Zero, neg(4)).unwrap();
        assert_eq!(hk_rees_at(&k34, 5, &mode).unwrap(), int(6828));
    }

    #[test]
    fn fitted_polynomials_match_closed_forms() {
        // Path on 4 vertices: 24 B3 - 28 B2 + 5 B1.
        let k = path_complex(4).unwrap();
        let mode = determine_mode(&k, Characteristic::Zero, None).unwrap();
        let report = hk_rees_polynomial(&k, &mode).unwrap();
        assert_eq!(
            report.binomial.coeffs(),
            &[integer(0), integer(5), integer(-28), integer(24)]
        );

        // Projective plane: 390 B4 - 720 B3 + 372 B2 - 41 B1.
        let report = hk_rees_polynomial(&rp2(), &HkMode::CohenMacaulay { postulation: -1 }).unwrap();
        assert_eq!(
            report.binomial.coeffs(),
            &[integer(0), integer(-41), integer(372), integer(-720), integer(390)]
        );

        // Pendant solid triangle, delta = 3, a_3 < 0:
        // (13/8)s^4 + (13/12)s^3 - (9/8)s^2 - (7/12)s.
        let k = pendant_solid_triangle();
        let mode = determine_mode(&k, Characteristic::Zero, neg(3)).unwrap();
        let report = hk_rees_polynomial(&k, &mode).unwrap();
        assert_eq!(
            report.polynomial.coeffs(),
            &[integer(0), rational(-7, 12), rational(-9, 8), rational(13, 12), rational(13, 8)]
        );
        assert_eq!(
            report.binomial.coeffs(),
            &[integer(0), integer(0), integer(14), integer(-52), integer(39)]
        );
    }

    #[test]
    fn multiplicity_matches_bound_in_examples() {
        let report =
            hk_rees_polynomial(&two_disjoint_edges(), &HkMode::NonCohenMacaulay {
                delta: 2,
                ad_sign: AdSign::Negative,
            })
            .unwrap();
        assert_eq!(report.multiplicity, rational(8, 3));
        assert_eq!(report.bound_check.bound, rational(8, 3));
        assert!(report.bound_check.equal);

        let report = hk_rees_polynomial(&rp2(), &HkMode::CohenMacaulay { postulation: -1 }).unwrap();
        assert_eq!(report.multiplicity, rational(65, 4));
        assert!(report.bound_check.equal);
        assert_eq!(eto_yoshida_check(&report), report.bound_check);

        let k34 = independence_complex(&complete_bipartite(3, 4).unwrap());
        let report = hk_rees_polynomial(&k34, &HkMode::NonCohenMacaulay {
            delta: 4,
            ad_sign: AdSign::Negative,
        })
        .unwrap();
        assert_eq!(report.multiplicity, rational(61, 30));
        assert_eq!(report.bound_check.bound, rational(61, 30));
        assert!(report.bound_check.equal);
    }

    #[test]
    fn eto_yoshida_constants() {
        assert_eq!(eto_yoshida_constant(2), rational(4, 3));
        assert_eq!(eto_yoshida_constant(3), rational(13, 8));
        assert_eq!(eto_yoshida_constant(4), rational(61, 30));
    }

    #[test]
    fn cm_examples_start_at_one() {
        for k in [
            pendant_hollow_triangle(),
            path_complex(5).unwrap(),
            cycle_complex(5).unwrap(),
            rp2(),
            simplex(3).unwrap(),
        ] {
            let mode = determine_mode(&k, Characteristic::Zero, None).unwrap();
            assert_eq!(hk_rees_at_experimental(&k, 1, &mode).unwrap(), int(1));
        }
    }

    #[test]
    fn middle_sum_empty_for_two_dimensional_negative_postulation() {
        // d = 2, j = 1: the middle block is empty and the cubic still fits.
        let k = path_complex(6).unwrap();
        let mode = determine_mode(&k, Characteristic::Zero, None).unwrap();
        assert_eq!(mode, HkMode::CohenMacaulay { postulation: -1 });
        assert_eq!(mode.j_at(4), 1);
        let report = hk_rees_polynomial(&k, &mode).unwrap();
        // 8(r-1) B3 - 2(5r-6) B2 + (2r-3) B1 at r = 6
        assert_eq!(
            report.binomial.coeffs(),
            &[integer(0), integer(9), integer(-48), integer(40)]
        );
    }

    #[test]
    fn oracle_agreement_flags() {
        let k = pendant_hollow_triangle();
        let mode = determine_mode(&k, Characteristic::Zero, None).unwrap();
        let mut report = hk_rees_polynomial(&k, &mode).unwrap();
        let ok = report
            .verify_against_oracle(&k, &[1, 2, 3], &OracleConfig::default())
            .unwrap();
        assert!(ok);
        assert_eq!(
            report.oracle_agreement,
            Some(vec![(1, true), (2, true), (3, true)])
        );
    }

    #[test]
    fn invalid_overrides() {
        assert_eq!(
            determine_mode(&rp2(), Characteristic::Zero, Some(NonCmData {
                delta: -1,
                ad_sign: AdSign::Zero,
            })),
            Err(HkError::InvalidDelta(-1))
        );
    }
}
