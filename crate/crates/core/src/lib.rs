//! Exact arithmetic for Stanley-Reisner rings and the generalized
//! Hilbert-Kunz function of the Rees algebra of their maximal ideal.
//!
//! The crate is organized around a pipeline:
//!
//! * [`simplicial`] — simplicial complexes, f/h-vectors, minimal primes,
//!   graphs and their independence complexes, plus the generators for the
//!   standard example families (paths, cycles, complete bipartite edge
//!   ideals, the 6-vertex projective plane).
//! * [`homology`] — integer boundary matrices, Smith normal form, reduced
//!   Betti numbers over a chosen characteristic, and the Reisner test for
//!   Cohen-Macaulayness.
//! * [`polynomial`] — exact univariate polynomials over the rationals:
//!   interpolation, derivatives at 1, and the binomial-basis view used for
//!   output.
//! * [`lengths`] — closed-form colengths: the piecewise parameter-ideal
//!   formula, inclusion-exclusion over minimal primes, Hilbert-Samuel and
//!   Conca functions, Hilbert series, postulation and reduction numbers.
//! * [`hkrees`] — evaluation and polynomial fitting of
//!   `HK(s) = l(R(n)/(n, nt)^[s])`, with the multiplicity bound check.
//! * [`oracle`] — an independent brute-force verifier that recomputes every
//!   length by direct monomial enumeration.
//!
//! Every computation is exact: integers are arbitrary precision and
//! polynomial coefficients are arbitrary-precision rationals.

pub mod hkrees;
pub mod homology;
pub mod lengths;
pub mod oracle;
pub mod polynomial;
pub mod simplicial;

pub use hkrees::{determine_mode, hk_rees_at, hk_rees_polynomial, AdSign, HkMode, HkReport};
pub use homology::{is_cohen_macaulay, reduced_betti, Characteristic};
pub use lengths::{conca_hk, hilbert_samuel, param_colength, postulation_number, sr_colength};
pub use polynomial::{BinomialBasisForm, RationalPolynomial};
pub use simplicial::{FhData, Graph, SimplicialComplex, VertexSet};