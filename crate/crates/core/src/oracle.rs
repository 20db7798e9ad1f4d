//! Brute-force verification by direct monomial enumeration.
//!
//! Nothing here knows a closed form. A monomial of the face ring is an
//! exponent vector whose support is a face; membership in the monomial
//! ideals of interest is decided entry by entry:
//!
//! * `x^a ∈ m^[s] m^n` iff some `a_i >= s` and `|a| - s >= n`.
//!
//! Monomials are streamed grouped by their exact support face, so each one
//! is generated once and no per-degree working set is ever materialized;
//! memory stays constant in the degree cap. A candidate budget guards
//! against oversized queries; exceeding it is a hard error, never a
//! truncated count.

use num_bigint::BigInt;
use thiserror::Error;

use crate::simplicial::SimplicialComplex;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration would visit ~{estimated} candidate monomials, over the budget {budget}")]
    BudgetExceeded { estimated: u128, budget: u64 },
}

/// Enumeration limits. The default budget of `10^8` candidates keeps
/// worst-case runs in seconds; raise it explicitly for bigger sweeps.
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { budget: 100_000_000 }
    }
}

/// Degree-capped enumeration request, chargeable against a budget ledger.
struct MonomialBound {
    degree_cap: i64,
}

impl MonomialBound {
    /// Exact count of generated candidates: positive exponent vectors of
    /// total degree at most the cap, per face, i.e.
    /// `sum_card f_card * C(cap, card)`.
    fn candidates(&self, k: &SimplicialComplex) -> u128 {
        if self.degree_cap < 0 {
            return 0;
        }
        let mut total: u128 = 0;
        for (card, count) in k.f_vector().iter().enumerate() {
            total = total
                .saturating_add((*count as u128).saturating_mul(choose_u128(self.degree_cap, card)));
        }
        total
    }

    fn charge(
        &self,
        k: &SimplicialComplex,
        remaining: &mut u128,
        cfg: &OracleConfig,
    ) -> Result<(), OracleError> {
        let need = self.candidates(k);
        if need > *remaining {
            return Err(OracleError::BudgetExceeded {
                estimated: cfg.budget as u128 - *remaining + need,
                budget: cfg.budget,
            });
        }
        *remaining -= need;
        Ok(())
    }
}

fn choose_u128(n: i64, k: usize) -> u128 {
    if n < 0 || (k as i64) > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc.saturating_mul(n as u128 - i) / (i + 1);
    }
    acc
}

/// Streams every face-supported monomial of total degree `0..=cap` exactly
/// once (grouped by exact support) and counts those accepted by
/// `keep(degree, any_exponent >= threshold)`.
///
/// Every ideal-membership predicate used here depends only on the total
/// degree and on whether some exponent reaches the Frobenius threshold, so
/// that is all the walk tracks.
fn count_face_monomials(
    k: &SimplicialComplex,
    cap: i64,
    threshold: i64,
    keep: impl Fn(i64, bool) -> bool + Copy,
) -> u64 {
    if cap < 0 {
        return 0;
    }
    let mut count = 0u64;
    for face in k.faces() {
        let slots = face.len() as i64;
        if slots == 0 {
            if keep(0, false) {
                count += 1;
            }
            continue;
        }
        count += walk_exponents(slots, 0, false, cap, threshold, &keep);
    }
    count
}

/// Positive exponents for `slots` remaining variables, degree `used` so
/// far, total capped at `cap`.
fn walk_exponents(
    slots: i64,
    used: i64,
    any_ge: bool,
    cap: i64,
    threshold: i64,
    keep: &(impl Fn(i64, bool) -> bool + Copy),
) -> u64 {
    if used + slots > cap {
        return 0;
    }
    if slots == 1 {
        let mut c = 0u64;
        for e in 1..=cap - used {
            if keep(used + e, any_ge || e >= threshold) {
                c += 1;
            }
        }
        return c;
    }
    let mut c = 0u64;
    for e in 1..=cap - used - (slots - 1) {
        c += walk_exponents(slots - 1, used + e, any_ge || e >= threshold, cap, threshold, keep);
    }
    c
}

/// `l(S/(I_Δ + m^[s] m^n))` by enumeration: count face monomials outside
/// `m^[s] m^n`. Their degree is at most `max(d(s-1), s+n-1)`.
pub fn oracle_sr_colength(
    k: &SimplicialComplex,
    s: i64,
    n: i64,
    cfg: &OracleConfig,
) -> Result<BigInt, OracleError> {
    assert!(s >= 1 && n >= 0, "oracle query needs s >= 1, n >= 0");
    let d = k.ring_dimension() as i64;
    let bound = MonomialBound { degree_cap: (d * (s - 1)).max(s + n - 1) };
    let mut remaining = cfg.budget as u128;
    bound.charge(k, &mut remaining, cfg)?;
    let count = count_face_monomials(k, bound.degree_cap, s, |degree, any_ge| {
        !(any_ge && degree - s >= n)
    });
    Ok(BigInt::from(count))
}

/// `l(R/n^n)`: face monomials of total degree below `n`.
pub fn oracle_hilbert_samuel(
    k: &SimplicialComplex,
    n: i64,
    cfg: &OracleConfig,
) -> Result<BigInt, OracleError> {
    assert!(n >= 0, "oracle query needs n >= 0");
    let bound = MonomialBound { degree_cap: n - 1 };
    let mut remaining = cfg.budget as u128;
    bound.charge(k, &mut remaining, cfg)?;
    Ok(BigInt::from(count_face_monomials(k, bound.degree_cap, 1, |_, _| true)))
}

/// `l(R/n^[s])`: face monomials with every exponent below `s`.
pub fn oracle_conca(
    k: &SimplicialComplex,
    s: i64,
    cfg: &OracleConfig,
) -> Result<BigInt, OracleError> {
    assert!(s >= 1, "oracle query needs s >= 1");
    let d = k.ring_dimension() as i64;
    let bound = MonomialBound { degree_cap: d * (s - 1) };
    let mut remaining = cfg.budget as u128;
    bound.charge(k, &mut remaining, cfg)?;
    let count = count_face_monomials(k, bound.degree_cap, s, |_, any_ge| !any_ge);
    Ok(BigInt::from(count))
}

/// `HK(s) = l(R(n)/(n, nt)^[s])` from the graded decomposition: the
/// t-degree-`n` piece is `n^n / n^[s] n^m` with `m = n` below `s` and
/// `m = n - s` from `s` on. Terms are summed until a zero term at
/// `n >= s`; zero persists from there, which is asserted on two further
/// terms.
pub fn oracle_hk_rees(
    k: &SimplicialComplex,
    s: i64,
    cfg: &OracleConfig,
) -> Result<BigInt, OracleError> {
    assert!(s >= 1, "oracle query needs s >= 1");
    let d = k.ring_dimension() as i64;
    let mut remaining = cfg.budget as u128;
    let mut total: BigInt = BigInt::from(0u32);
    let mut n = 0i64;
    loop {
        let piece = graded_piece(k, s, n, &mut remaining, cfg)?;
        total += BigInt::from(piece);
        if n >= s && piece == 0 {
            for extra in 1..=2 {
                let check = graded_piece(k, s, n + extra, &mut remaining, cfg)?;
                assert_eq!(check, 0, "zero term at n >= s must persist");
            }
            return Ok(total);
        }
        n += 1;
        // The reduction identity forces zero by n = (d+1)s at the latest.
        assert!(n <= (d + 2) * s + 2, "graded pieces failed to vanish");
    }
}

/// Length of `n^n / n^[s] n^m`: face monomials of degree at least `n` and
/// not inside `m^[s] m^m`.
fn graded_piece(
    k: &SimplicialComplex,
    s: i64,
    n: i64,
    remaining: &mut u128,
    cfg: &OracleConfig,
) -> Result<u64, OracleError> {
    let m = if n < s { n } else { n - s };
    let d = k.ring_dimension() as i64;
    let bound = MonomialBound { degree_cap: (d * (s - 1)).max(s + m - 1) };
    bound.charge(k, remaining, cfg)?;
    Ok(count_face_monomials(k, bound.degree_cap, s, |degree, any_ge| {
        degree >= n && !(any_ge && degree - s >= m)
    }))
}
