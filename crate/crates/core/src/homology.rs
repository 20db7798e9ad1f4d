//! Reduced simplicial homology over a chosen coefficient field, and the
//! Reisner test for Cohen-Macaulayness of the face ring.
//!
//! Boundary matrices are integer matrices brought to Smith normal form by
//! exact elimination; Betti numbers over characteristic `p` come from the
//! invariant factors (a factor divisible by `p` loses rank mod `p`). The
//! chain complex is the reduced one: the empty face spans degree -1.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::simplicial::{SimplicialComplex, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<String>),
    #[error("{0} is not 0 or a prime <= 2^31")]
    InvalidCharacteristic(u64),
}

/// Field characteristic for homology coefficients: 0 or a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Characteristic {
    Zero,
    Prime(u64),
}

impl Characteristic {
    pub fn new(p: u64) -> Result<Self, HomologyError> {
        if p == 0 {
            return Ok(Characteristic::Zero);
        }
        if p <= 1 << 31 && is_prime(p) {
            Ok(Characteristic::Prime(p))
        } else {
            Err(HomologyError::InvalidCharacteristic(p))
        }
    }
}

impl std::fmt::Display for Characteristic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Characteristic::Zero => write!(f, "0"),
            Characteristic::Prime(p) => write!(f, "{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The link of `face`: all `G` with `G ∩ face = ∅` and `G ∪ face ∈ K`.
///
/// `link(k, ∅) = k`; the link of a facet is the empty-face complex.
pub fn link(k: &SimplicialComplex, face: VertexSet) -> Result<SimplicialComplex, HomologyError> {
    if !k.contains_face(face) {
        let labels = face.iter().map(|i| k.label(i).to_string()).collect();
        return Err(HomologyError::NotAFace(labels));
    }
    let candidates: Vec<VertexSet> = k
        .facets()
        .iter()
        .filter(|f| face.is_subset_of(**f))
        .map(|f| f.difference(face))
        .collect();
    let mut maximal: Vec<VertexSet> = Vec::new();
    for &f in &candidates {
        if candidates.iter().any(|&g| f != g && f.is_subset_of(g)) {
            continue;
        }
        if !maximal.contains(&f) {
            maximal.push(f);
        }
    }
    if maximal.iter().all(|f| f.is_empty()) {
        return Ok(SimplicialComplex::empty());
    }
    // Reindex onto the vertices that actually appear.
    let mut support = VertexSet::EMPTY;
    for &f in &maximal {
        support = support.union(f);
    }
    let kept: Vec<usize> = support.iter().collect();
    let labels = kept.iter().map(|&i| k.label(i).to_string()).collect();
    let reindex: HashMap<usize, usize> =
        kept.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    let facets = maximal
        .iter()
        .map(|f| VertexSet::from_indices(f.iter().map(|v| reindex[&v])))
        .collect();
    Ok(SimplicialComplex::from_index_facets(labels, facets)
        .expect("link facets cover their own support"))
}

/// Integer boundary matrix from faces of cardinality `card` down to
/// cardinality `card - 1`, rows and columns in the complex's canonical
/// face order.
#[derive(Clone, Debug)]
pub struct BoundaryMatrix {
    pub rows: Vec<VertexSet>,
    pub cols: Vec<VertexSet>,
    /// Row-major; entries in {-1, 0, 1}.
    pub entries: Vec<Vec<BigInt>>,
}

impl BoundaryMatrix {
    pub fn of(faces_by_card: &[Vec<VertexSet>], card: usize) -> Self {
        let cols = faces_by_card.get(card).cloned().unwrap_or_default();
        let rows = if card == 0 {
            Vec::new()
        } else {
            faces_by_card.get(card - 1).cloned().unwrap_or_default()
        };
        let row_index: HashMap<VertexSet, usize> =
            rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut entries = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
        for (j, &face) in cols.iter().enumerate() {
            for (pos, v) in face.iter().enumerate() {
                let sub = face.without(v);
                let i = row_index[&sub];
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                entries[i][j] = BigInt::from(sign);
            }
        }
        BoundaryMatrix { rows, cols, entries }
    }
}

/// Nonzero invariant factors `d_1 | d_2 | ..` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfInvariants {
    pub factors: Vec<BigInt>,
}

impl SnfInvariants {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Rank over a field of the given characteristic: factors divisible by
    /// `p` vanish mod `p`.
    pub fn rank_over(&self, ch: Characteristic) -> usize {
        match ch {
            Characteristic::Zero => self.factors.len(),
            Characteristic::Prime(p) => {
                let p = BigInt::from(p);
                self.factors.iter().filter(|f| !(*f % &p).is_zero()).count()
            }
        }
    }
}

/// Smith normal form by exact elimination with minimal-absolute-value
/// pivoting, followed by a gcd/lcm sweep to restore the divisibility chain.
pub fn smith_normal_form(mut m: Vec<Vec<BigInt>>) -> SnfInvariants {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag: Vec<BigInt> = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs_pivot(&m, t) else { break };
        m.swap(t, pi);
        swap_cols(&mut m, t, pj);
        loop {
            let mut stable = true;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = &m[i][t] / &m[t][t];
                if !q.is_zero() {
                    for j in t..cols {
                        let delta = &q * &m[t][j];
                        m[i][j] -= delta;
                    }
                }
                if !m[i][t].is_zero() {
                    // remainder has smaller magnitude; promote it to pivot
                    m.swap(t, i);
                    stable = false;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = &m[t][j] / &m[t][t];
                if !q.is_zero() {
                    for i in t..rows {
                        let delta = &q * &m[i][t];
                        m[i][j] -= delta;
                    }
                }
                if !m[t][j].is_zero() {
                    swap_cols(&mut m, t, j);
                    stable = false;
                }
            }
            if stable {
                break;
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    // gcd/lcm sweep: invariant factors of a diagonal matrix
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = gcd(&diag[i], &diag[j]);
            let l = &diag[i] / &g * &diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    SnfInvariants { factors: diag }
}

fn min_abs_pivot(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if v.abs() < m[bi][bj].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Reduced Betti numbers of every degree at once, reusing one SNF per
/// boundary matrix.
fn betti_profile(k: &SimplicialComplex, ch: Characteristic) -> Vec<usize> {
    let faces = k.faces_by_card();
    let top = faces.len() - 1;
    // ranks[c] = rank of the boundary map leaving cardinality c
    let mut ranks = vec![0usize; top + 2];
    for card in 1..=top {
        let b = BoundaryMatrix::of(&faces, card);
        ranks[card] = smith_normal_form(b.entries).rank_over(ch);
    }
    // betti for homological degree i = card i+1
    (0..=top)
        .map(|card| faces[card].len() - ranks[card] - ranks[card + 1])
        .collect()
}

/// `dim_k H~_i(K; k)` for a field of the given characteristic.
pub fn reduced_betti(k: &SimplicialComplex, i: i64, ch: Characteristic) -> usize {
    if i < -1 || i > k.dim() {
        return 0;
    }
    let card = (i + 1) as usize;
    betti_profile(k, ch)[card]
}

/// Reisner's criterion: the face ring is Cohen-Macaulay over a field of
/// characteristic `ch` iff every face's link has vanishing reduced homology
/// below its dimension.
pub fn is_cohen_macaulay(k: &SimplicialComplex, ch: Characteristic) -> bool {
    for face in k.faces() {
        let lk = link(k, face).expect("faces of k have links");
        let ld = lk.dim();
        if ld < 0 {
            continue;
        }
        let profile = betti_profile(&lk, ch);
        for i in -1..ld {
            if profile[(i + 1) as usize] != 0 {
                return false;
            }
        }
    }
    true
}

/// Primes dividing some invariant factor of some link boundary matrix: the
/// characteristics where homology can differ from characteristic zero.
pub fn link_torsion_primes(k: &SimplicialComplex) -> BTreeSet<BigInt> {
    let mut primes = BTreeSet::new();
    for face in k.faces() {
        let lk = link(k, face).expect("faces of k have links");
        let faces = lk.faces_by_card();
        for card in 1..faces.len() {
            let b = BoundaryMatrix::of(&faces, card);
            for factor in smith_normal_form(b.entries).factors {
                for p in prime_factors(&factor) {
                    primes.insert(p);
                }
            }
        }
    }
    primes
}

fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            while (&n % &d).is_zero() {
                n = &n / &d;
            }
        }
        d += 1;
    }
    if n > BigInt::from(1) {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{path_complex, rp2, simplex, SimplicialComplex};

    fn big(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn complex(vertices: &[&str], facets: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(
            vertices.iter().map(|s| s.to_string()).collect(),
            facets.iter().map(|f| f.to_vec()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn snf_examples() {
        let inv = smith_normal_form(big(&[&[2, 0], &[0, 3]]));
        assert_eq!(inv.factors, vec![BigInt::from(1), BigInt::from(6)]);

        let inv = smith_normal_form(big(&[&[0, 0], &[0, 0]]));
        assert_eq!(inv.factors, Vec::<BigInt>::new());
        assert_eq!(inv.rank(), 0);

        let inv = smith_normal_form(big(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(inv.factors, vec![BigInt::from(1); 3]);
    }

    #[test]
    fn snf_divisibility_chain() {
        let inv = smith_normal_form(big(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]));
        for w in inv.factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        // invariant factors of this classic example: 2, 2, 156
        assert_eq!(
            inv.factors,
            vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]
        );
    }

    #[test]
    fn link_examples() {
        let k = rp2();
        assert_eq!(link(&k, VertexSet::EMPTY).unwrap(), k);

        let tri = complex(&["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["a", "c"]]);
        let lk = link(&tri, VertexSet::singleton(1)).unwrap();
        assert_eq!(lk.f_vector(), vec![1, 2]);
        assert_eq!(lk.labels(), &["a".to_string(), "c".to_string()]);

        let p = path_complex(4).unwrap();
        let lk = link(&p, VertexSet::singleton(1)).unwrap();
        assert_eq!(lk.f_vector(), vec![1, 2]);
        assert_eq!(lk.labels(), &["x1".to_string(), "x3".to_string()]);

        // link of a facet is the empty-face complex
        let lk = link(&p, VertexSet::from_indices([0, 1])).unwrap();
        assert!(lk.is_empty_complex());

        assert!(matches!(
            link(&p, VertexSet::from_indices([0, 2])),
            Err(HomologyError::NotAFace(_))
        ));
    }

    #[test]
    fn boundary_composition_is_zero() {
        let faces = rp2().faces_by_card();
        for card in 2..faces.len() {
            let hi = BoundaryMatrix::of(&faces, card);
            let lo = BoundaryMatrix::of(&faces, card - 1);
            for j in 0..hi.cols.len() {
                for i in 0..lo.rows.len() {
                    let mut acc = BigInt::zero();
                    for t in 0..hi.rows.len() {
                        acc += &lo.entries[i][t] * &hi.entries[t][j];
                    }
                    assert!(acc.is_zero());
                }
            }
        }
    }

    #[test]
    fn betti_of_projective_plane() {
        let k = rp2();
        assert_eq!(reduced_betti(&k, 1, Characteristic::Zero), 0);
        assert_eq!(reduced_betti(&k, 1, Characteristic::Prime(2)), 1);
        assert_eq!(reduced_betti(&k, 2, Characteristic::Zero), 0);
        assert_eq!(reduced_betti(&k, 2, Characteristic::Prime(2)), 1);
        assert_eq!(reduced_betti(&k, 1, Characteristic::Prime(3)), 0);
        assert_eq!(reduced_betti(&k, 0, Characteristic::Zero), 0);
    }

    #[test]
    fn betti_of_circle_and_simplex() {
        let c = crate::simplicial::cycle_complex(5).unwrap();
        for ch in [Characteristic::Zero, Characteristic::Prime(2), Characteristic::Prime(7)] {
            assert_eq!(reduced_betti(&c, 1, ch), 1);
            assert_eq!(reduced_betti(&c, 0, ch), 0);
        }
        let s = simplex(4).unwrap();
        for i in -1..=s.dim() {
            assert_eq!(reduced_betti(&s, i, Characteristic::Zero), 0);
            assert_eq!(reduced_betti(&s, i, Characteristic::Prime(2)), 0);
        }
    }

    #[test]
    fn cohen_macaulay_dichotomy() {
        let k = rp2();
        assert!(is_cohen_macaulay(&k, Characteristic::Zero));
        assert!(!is_cohen_macaulay(&k, Characteristic::Prime(2)));
        assert!(is_cohen_macaulay(&k, Characteristic::Prime(3)));

        // two disjoint edges: disconnected, never CM
        let k = complex(&["x1", "x2", "x3", "x4"], &[&["x1", "x2"], &["x3", "x4"]]);
        assert!(!is_cohen_macaulay(&k, Characteristic::Zero));
        assert!(!is_cohen_macaulay(&k, Characteristic::Prime(2)));

        // pendant edge plus hollow triangle: 2-dimensional CM ring
        let k = complex(
            &["x1", "x2", "x3", "x4"],
            &[&["x1", "x2"], &["x2", "x3"], &["x3", "x4"], &["x2", "x4"]],
        );
        assert!(is_cohen_macaulay(&k, Characteristic::Zero));

        // pendant edge plus solid triangle: depth 2 < dim 3
        let k = complex(&["x1", "x2", "x3", "x4"], &[&["x1", "x2"], &["x2", "x3", "x4"]]);
        assert!(!is_cohen_macaulay(&k, Characteristic::Zero));
    }

    #[test]
    fn torsion_primes_of_projective_plane() {
        let primes = link_torsion_primes(&rp2());
        assert!(primes.contains(&BigInt::from(2)));
        assert!(!primes.contains(&BigInt::from(3)));
    }

    #[test]
    fn characteristic_validation() {
        assert_eq!(Characteristic::new(0), Ok(Characteristic::Zero));
        assert_eq!(Characteristic::new(7), Ok(Characteristic::Prime(7)));
        assert!(Characteristic::new(6).is_err());
        assert!(Characteristic::new(1).is_err());
    }
}
