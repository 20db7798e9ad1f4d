//! Shared fixtures: the worked examples and the bundled verification
//! corpus of small complexes with their computation modes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use reeshk::hkrees::{determine_mode, AdSign, HkMode};
use reeshk::homology::Characteristic;
use reeshk::simplicial::{
    complete_bipartite, cycle_complex, cycle_graph, independence_complex, path_complex, rp2,
    simplex, SimplicialComplex, VertexSet,
};

pub fn complex(vertices: &[&str], facets: &[&[&str]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(
        vertices.iter().map(|s| s.to_string()).collect(),
        facets.iter().map(|f| f.to_vec()).collect(),
    )
    .unwrap()
}

/// Two disjoint edges on four vertices; depth 1, not Cohen-Macaulay,
/// a-invariants give delta = 2 with a_2 < 0.
pub fn two_disjoint_edges() -> SimplicialComplex {
    complex(&["x1", "x2", "x3", "x4"], &[&["x1", "x2"], &["x3", "x4"]])
}

/// Pendant edge plus solid triangle; 3-dimensional, depth 2, delta = 3
/// with a_3 < 0.
pub fn pendant_solid_triangle() -> SimplicialComplex {
    complex(&["x1", "x2", "x3", "x4"], &[&["x1", "x2"], &["x2", "x3", "x4"]])
}

/// Pendant edge plus hollow triangle; 2-dimensional Cohen-Macaulay.
pub fn pendant_hollow_triangle() -> SimplicialComplex {
    complex(
        &["x1", "x2", "x3", "x4"],
        &[&["x1", "x2"], &["x2", "x3"], &["x3", "x4"], &["x2", "x4"]],
    )
}

pub fn non_cm(delta: i64) -> HkMode {
    HkMode::NonCohenMacaulay { delta, ad_sign: AdSign::Negative }
}

pub struct CorpusEntry {
    pub name: String,
    pub complex: SimplicialComplex,
    /// `None` when the ring is not Cohen-Macaulay and no a-invariant data
    /// is on record; such entries still verify every plain length.
    pub mode: Option<HkMode>,
}

fn entry(name: &str, complex: SimplicialComplex, mode: Option<HkMode>) -> CorpusEntry {
    CorpusEntry { name: name.to_string(), complex, mode }
}

fn auto(name: &str, complex: SimplicialComplex) -> CorpusEntry {
    let mode = determine_mode(&complex, Characteristic::Zero, None).ok();
    CorpusEntry { name: name.to_string(), complex, mode }
}

/// Every bundled complex on at most 6 vertices, with modes: the worked
/// examples (hand-computed a-invariant data where the ring is not CM),
/// paths, cycles, simplices, complete bipartite edge-ideal complexes, and
/// a few seeded random complexes.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = vec![
        entry("two-disjoint-edges", two_disjoint_edges(), Some(non_cm(2))),
        entry("pendant-solid-triangle", pendant_solid_triangle(), Some(non_cm(3))),
        auto("pendant-hollow-triangle", pendant_hollow_triangle()),
        auto("rp2", rp2()),
        auto("five-cycle-edge-ideal", independence_complex(&cycle_graph(5).unwrap())),
    ];
    for r in 3..=6 {
        out.push(auto(&format!("path-{r}"), path_complex(r).unwrap()));
        out.push(auto(&format!("cycle-{r}"), cycle_complex(r).unwrap()));
    }
    for r in 1..=6 {
        out.push(auto(&format!("simplex-{r}"), simplex(r).unwrap()));
    }
    // K_{1,1} is two points, which is Cohen-Macaulay; the rest carry the
    // a-invariant data a_1 = 0, a_alpha = -alpha, a_beta = -beta.
    out.push(auto("bipartite-1-1", independence_complex(&complete_bipartite(1, 1).unwrap())));
    for (alpha, beta) in [(1, 2), (1, 3), (1, 4), (1, 5), (2, 2), (2, 3), (2, 4), (3, 3)] {
        let g = complete_bipartite(alpha, beta).unwrap();
        out.push(entry(
            &format!("bipartite-{alpha}-{beta}"),
            independence_complex(&g),
            Some(non_cm(beta as i64)),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xFACE);
    for i in 0..5 {
        let k = random_complex(&mut rng);
        out.push(auto(&format!("random-{i}"), k));
    }
    out
}

/// A small random complex: random facets on 3..=6 vertices, singletons
/// added for any vertex left uncovered.
pub fn random_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let r = rng.random_range(3..=6usize);
    let labels: Vec<String> = (1..=r).map(|i| format!("v{i}")).collect();
    let facet_count = rng.random_range(2..=4usize);
    let mut facets = Vec::new();
    let mut covered = VertexSet::EMPTY;
    for _ in 0..facet_count {
        let size = rng.random_range(1..=3usize.min(r));
        let mut f = VertexSet::EMPTY;
        while f.len() < size {
            f = f.with(rng.random_range(0..r));
        }
        covered = covered.union(f);
        facets.push(f);
    }
    for v in 0..r {
        if !covered.contains(v) {
            facets.push(VertexSet::singleton(v));
        }
    }
    SimplicialComplex::from_index_facets(labels, facets).unwrap()
}
