//! Simplicial complexes, face data, and the standard example families.
//!
//! A [`SimplicialComplex`] stores externally visible string labels and a
//! list of inclusion-maximal facets as bit sets over dense vertex indices.
//! All downstream math works on the indices; labels only matter at the I/O
//! boundary. Vertex counts are capped at [`MAX_VERTICES`]: face enumeration
//! iterates subsets of facets, which is exact and plenty fast at desk
//! scale.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Hard cap on vertex count; subset enumeration is exponential in facet
/// size, so the representation deliberately stays desk-scale.
pub const MAX_VERTICES: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("complex must have at least one nonempty facet")]
    EmptyComplex,
    #[error("vertex {0:?} is not covered by any facet")]
    GhostVertex(String),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("facet references unknown vertex {0:?}")]
    UnknownLabel(String),
    #[error("too many vertices: {0} exceeds the supported maximum {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("size out of range: {0}")]
    SizeOutOfRange(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("edge references unknown vertex {0:?}")]
    UnknownLabel(String),
    #[error("loop at vertex {0:?}")]
    Loop(String),
    #[error("duplicate edge {0:?}-{1:?}")]
    DuplicateEdge(String, String),
    #[error("too many vertices: {0} exceeds the supported maximum {MAX_VERTICES}")]
    TooManyVertices(usize),
}

/// A set of vertex indices, packed into a `u32`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < 32);
        VertexSet(1 << i)
    }

    /// The full set `{0, .., r-1}`.
    pub fn full(r: usize) -> Self {
        debug_assert!(r <= 32);
        if r == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << r) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for i in iter {
            s = s.with(i);
        }
        s
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        debug_assert!(i < 32);
        VertexSet(self.0 | (1 << i))
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        VertexSet(self.0 & !(1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    /// Iterates over every subset, the set itself and the empty set
    /// included.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut sub = mask;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = VertexSet(sub);
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & mask;
            }
            Some(out)
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A simplicial complex: labeled vertices plus inclusion-maximal facets.
///
/// The usual construction path is [`SimplicialComplex::from_facets`], which
/// validates, deduplicates and maximalizes its input. The degenerate
/// complex whose only face is the empty set (the link of a facet) is
/// representable via [`SimplicialComplex::empty`] and has `dim() == -1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from vertex labels and facets given as label lists.
    ///
    /// Facets are deduplicated and non-maximal ones dropped; the surviving
    /// facets keep their first-appearance order. Every vertex must occur in
    /// some facet.
    pub fn from_facets<S, T>(vertices: Vec<S>, facets: Vec<Vec<T>>) -> Result<Self, ComplexError>
    where
        S: Into<String>,
        T: AsRef<str>,
    {
        let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(ComplexError::DuplicateLabel(l.clone()));
            }
        }
        let mut sets = Vec::with_capacity(facets.len());
        for facet in &facets {
            let mut set = VertexSet::EMPTY;
            for v in facet {
                let idx = labels
                    .iter()
                    .position(|l| l == v.as_ref())
                    .ok_or_else(|| ComplexError::UnknownLabel(v.as_ref().to_string()))?;
                set = set.with(idx);
            }
            sets.push(set);
        }
        Self::from_index_facets(labels, sets)
    }

    /// Builds a complex whose vertex set is inferred from the facets
    /// themselves (labels sorted lexicographically).
    pub fn from_facet_labels<T: AsRef<str>>(facets: Vec<Vec<T>>) -> Result<Self, ComplexError> {
        let mut labels: Vec<String> = Vec::new();
        for facet in &facets {
            for v in facet {
                if !labels.iter().any(|l| l == v.as_ref()) {
                    labels.push(v.as_ref().to_string());
                }
            }
        }
        labels.sort();
        Self::from_facets(labels, facets)
    }

    /// Construction on pre-resolved index sets.
    pub fn from_index_facets(
        labels: Vec<String>,
        facets: Vec<VertexSet>,
    ) -> Result<Self, ComplexError> {
        if labels.len() > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(labels.len()));
        }
        if facets.iter().all(|f| f.is_empty()) {
            return Err(ComplexError::EmptyComplex);
        }
        // Drop duplicates and non-maximal facets, keeping first-seen order.
        let mut maximal: Vec<VertexSet> = Vec::new();
        for &f in &facets {
            if facets
                .iter()
                .any(|&g| f != g && f.is_subset_of(g))
            {
                continue;
            }
            if !maximal.contains(&f) {
                maximal.push(f);
            }
        }
        let mut covered = VertexSet::EMPTY;
        for &f in &maximal {
            covered = covered.union(f);
        }
        for (i, l) in labels.iter().enumerate() {
            if !covered.contains(i) {
                return Err(ComplexError::GhostVertex(l.clone()));
            }
        }
        if let Some(extra) = covered.iter().find(|&i| i >= labels.len()) {
            return Err(ComplexError::UnknownLabel(format!("#{extra}")));
        }
        Ok(SimplicialComplex { labels, facets: maximal })
    }

    /// The complex `{∅}` on zero vertices; it is the link of any facet.
    pub fn empty() -> Self {
        SimplicialComplex { labels: Vec::new(), facets: vec![VertexSet::EMPTY] }
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets == [VertexSet::EMPTY]
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Dimension of the complex; `-1` for the empty-face complex.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64).max().unwrap_or(0) - 1
    }

    /// Krull dimension `d` of the face ring, `dim() + 1`.
    pub fn ring_dimension(&self) -> usize {
        (self.dim() + 1) as usize
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|&f| face.is_subset_of(f))
    }

    /// All faces, the empty face included, grouped by cardinality and
    /// sorted within each group.
    pub fn faces_by_card(&self) -> Vec<Vec<VertexSet>> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for &f in &self.facets {
            for sub in f.subsets() {
                seen.insert(sub);
            }
        }
        let top = self.facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut out = vec![Vec::new(); top + 1];
        for face in seen {
            out[face.len()].push(face);
        }
        for group in &mut out {
            group.sort();
        }
        out
    }

    /// All faces in one flat list, by cardinality then bit pattern.
    pub fn faces(&self) -> Vec<VertexSet> {
        self.faces_by_card().into_iter().flatten().collect()
    }

    /// The f-vector `(f_{-1}, f_0, .., f_{d-1})`; entry `i` counts faces of
    /// cardinality `i`.
    pub fn f_vector(&self) -> Vec<i64> {
        self.faces_by_card().iter().map(|g| g.len() as i64).collect()
    }

    /// Generators of the minimal primes of the Stanley-Reisner ideal: one
    /// complement per facet, in facet order. A full simplex yields `[{}]`.
    pub fn minimal_primes(&self) -> Vec<VertexSet> {
        let full = VertexSet::full(self.vertex_count());
        self.facets.iter().map(|&f| full.difference(f)).collect()
    }

    /// Formats a face with the complex's labels, e.g. `{x1, x3}`.
    pub fn face_labels(&self, face: VertexSet) -> Vec<&str> {
        face.iter().map(|i| self.labels[i].as_str()).collect()
    }
}

/// The h-vector of a `d`-dimensional face ring from its f-vector:
/// `h_j = sum_i (-1)^{j-i} C(d-i, j-i) f_{i-1}`.
pub fn h_vector(f: &[i64], d: usize) -> Vec<i64> {
    assert_eq!(f.len(), d + 1, "f-vector must have d+1 entries");
    (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                    sign * comb_i64(d - i, j - i) * f[i]
                })
                .sum()
        })
        .collect()
}

fn comb_i64(a: usize, b: usize) -> i64 {
    if b > a {
        return 0;
    }
    let mut acc: i64 = 1;
    for i in 0..b.min(a - b) {
        acc = acc * (a - i) as i64 / (i + 1) as i64;
    }
    acc
}

/// f-vector, h-vector and the scalars derived from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FhData {
    /// `f[i]` counts faces of cardinality `i`; `f[0] = f_{-1} = 1`.
    pub f: Vec<i64>,
    /// `h_0, .., h_d`.
    pub h: Vec<i64>,
    /// Krull dimension of the face ring.
    pub d: usize,
    /// Multiplicity `e = f_{d-1}`.
    pub e: i64,
    /// `h(1) = sum h_i`; always equals `e`.
    pub h_at_1: i64,
}

impl FhData {
    pub fn of(complex: &SimplicialComplex) -> Self {
        let f = complex.f_vector();
        let d = f.len() - 1;
        let h = h_vector(&f, d);
        let e = f[d];
        let h_at_1 = h.iter().sum();
        debug_assert_eq!(f[0], 1);
        debug_assert_eq!(h[0], 1);
        debug_assert_eq!(h_at_1, e);
        if d >= 1 {
            debug_assert_eq!(h[1], complex.vertex_count() as i64 - d as i64);
        }
        FhData { f, h, d, e, h_at_1 }
    }
}

/// A finite simple graph with labeled vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn from_edges<S, T>(vertices: Vec<S>, edges: Vec<(T, T)>) -> Result<Self, GraphError>
    where
        S: Into<String>,
        T: AsRef<str>,
    {
        let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        let mut out: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (a, b) in &edges {
            let ia = labels
                .iter()
                .position(|l| l == a.as_ref())
                .ok_or_else(|| GraphError::UnknownLabel(a.as_ref().to_string()))?;
            let ib = labels
                .iter()
                .position(|l| l == b.as_ref())
                .ok_or_else(|| GraphError::UnknownLabel(b.as_ref().to_string()))?;
            if ia == ib {
                return Err(GraphError::Loop(a.as_ref().to_string()));
            }
            let e = (ia.min(ib), ia.max(ib));
            if out.contains(&e) {
                return Err(GraphError::DuplicateEdge(labels[e.0].clone(), labels[e.1].clone()));
            }
            out.push(e);
        }
        Ok(Graph { labels, edges: out })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn adjacency(&self) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::EMPTY; self.labels.len()];
        for &(a, b) in &self.edges {
            adj[a] = adj[a].with(b);
            adj[b] = adj[b].with(a);
        }
        adj
    }
}

/// The independence complex of a graph: facets are the maximal independent
/// sets, found by Bron-Kerbosch on the complement graph.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    let r = g.vertex_count();
    let adj = g.adjacency();
    let full = VertexSet::full(r);
    // Non-adjacency (complement graph, no self-loops).
    let nadj: Vec<VertexSet> =
        (0..r).map(|v| full.difference(adj[v]).without(v)).collect();
    let mut cliques = Vec::new();
    bron_kerbosch(VertexSet::EMPTY, full, VertexSet::EMPTY, &nadj, &mut cliques);
    cliques.sort();
    SimplicialComplex::from_index_facets(g.labels().to_vec(), cliques)
        .expect("maximal independent sets cover every vertex")
}

fn bron_kerbosch(
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    adj: &[VertexSet],
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| p.intersection(adj[u]).len())
        .expect("p or x nonempty");
    for v in p.difference(adj[pivot]).iter() {
        bron_kerbosch(
            r.with(v),
            p.intersection(adj[v]),
            x.intersection(adj[v]),
            adj,
            out,
        );
        p = p.without(v);
        x = x.with(v);
    }
}

/// All inclusion-minimal vertex covers, by branching on uncovered edges.
/// This route is independent of [`independence_complex`]; the two must
/// agree through complementation.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<VertexSet> {
    let mut found: HashSet<VertexSet> = HashSet::new();
    branch_covers(g.edges(), VertexSet::EMPTY, &mut found);
    let mut covers: Vec<VertexSet> = found
        .iter()
        .copied()
        .filter(|&c| !found.iter().any(|&o| o != c && o.is_subset_of(c)))
        .collect();
    covers.sort();
    covers
}

fn branch_covers(edges: &[(usize, usize)], chosen: VertexSet, out: &mut HashSet<VertexSet>) {
    match edges
        .iter()
        .find(|&&(a, b)| !chosen.contains(a) && !chosen.contains(b))
    {
        None => {
            out.insert(chosen);
        }
        Some(&(a, b)) => {
            branch_covers(edges, chosen.with(a), out);
            branch_covers(edges, chosen.with(b), out);
        }
    }
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Path on `r` vertices as a 1-dimensional complex: facets `{x_i, x_i+1}`.
pub fn path_complex(r: usize) -> Result<SimplicialComplex, ComplexError> {
    if r < 2 {
        return Err(ComplexError::SizeOutOfRange(format!("path needs r >= 2, got {r}")));
    }
    let facets = (0..r - 1).map(|i| VertexSet::from_indices([i, i + 1])).collect();
    SimplicialComplex::from_index_facets(numbered("x", r), facets)
}

/// Cycle on `r` vertices as a 1-dimensional complex (a circle).
pub fn cycle_complex(r: usize) -> Result<SimplicialComplex, ComplexError> {
    if r < 3 {
        return Err(ComplexError::SizeOutOfRange(format!("cycle needs r >= 3, got {r}")));
    }
    let facets = (0..r).map(|i| VertexSet::from_indices([i, (i + 1) % r])).collect();
    SimplicialComplex::from_index_facets(numbered("x", r), facets)
}

/// Cycle graph on `r` vertices.
pub fn cycle_graph(r: usize) -> Result<Graph, ComplexError> {
    if r < 3 {
        return Err(ComplexError::SizeOutOfRange(format!("cycle needs r >= 3, got {r}")));
    }
    let labels = numbered("x", r);
    let edges = (0..r)
        .map(|i| (labels[i].clone(), labels[(i + 1) % r].clone()))
        .collect();
    Graph::from_edges(labels, edges).map_err(|e| ComplexError::SizeOutOfRange(e.to_string()))
}

/// Complete bipartite graph `K_{alpha,beta}`, vertices `x1..xa, y1..yb`.
pub fn complete_bipartite(alpha: usize, beta: usize) -> Result<Graph, ComplexError> {
    if alpha < 1 || beta < alpha {
        return Err(ComplexError::SizeOutOfRange(format!(
            "complete bipartite needs 1 <= alpha <= beta, got ({alpha}, {beta})"
        )));
    }
    let mut labels = numbered("x", alpha);
    labels.extend(numbered("y", beta));
    let mut edges = Vec::with_capacity(alpha * beta);
    for i in 1..=alpha {
        for j in 1..=beta {
            edges.push((format!("x{i}"), format!("y{j}")));
        }
    }
    Graph::from_edges(labels, edges).map_err(|e| ComplexError::SizeOutOfRange(e.to_string()))
}

/// The 6-vertex triangulation of the real projective plane.
pub fn rp2() -> SimplicialComplex {
    let facets = ["abe", "ade", "acd", "bcd", "bdf", "abf", "acf", "cef", "bce", "def"]
        .iter()
        .map(|w| w.chars().map(|c| c.to_string()).collect())
        .collect();
    SimplicialComplex::from_facets(
        "abcdef".chars().map(|c| c.to_string()).collect(),
        facets,
    )
    .expect("projective plane facet list is valid")
}

/// The full simplex on `r` vertices (face ring is a polynomial ring).
pub fn simplex(r: usize) -> Result<SimplicialComplex, ComplexError> {
    if r < 1 {
        return Err(ComplexError::SizeOutOfRange("simplex needs r >= 1".into()));
    }
    SimplicialComplex::from_index_facets(numbered("x", r), vec![VertexSet::full(r)])
}
