//! Complex documents on disk: a whitespace facet-list text format and a
//! structured JSON format, both parsing to a validated complex.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use reeshk::simplicial::SimplicialComplex;

/// On-disk description of a simplicial complex.
///
/// Structured form: `{"name": .., "vertices": [..], "facets": [[..]]}`.
/// Text form: one facet per line, whitespace-separated vertex labels,
/// `#` comments; the vertex set is inferred (sorted).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComplexDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.reason)
    }
}

impl std::error::Error for ParseError {}

/// A facet from the input that did not survive validation.
#[derive(Debug, PartialEq, Eq)]
pub enum Dropped {
    Duplicate(Vec<String>),
    NonMaximal(Vec<String>),
}

impl fmt::Display for Dropped {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dropped::Duplicate(v) => write!(f, "duplicate facet {{{}}} ignored", v.join(", ")),
            Dropped::NonMaximal(v) => {
                write!(f, "facet {{{}}} dropped: contained in another facet", v.join(", "))
            }
        }
    }
}

impl ComplexDocument {
    pub fn from_complex(name: Option<String>, k: &SimplicialComplex) -> Self {
        ComplexDocument {
            name,
            vertices: k.labels().to_vec(),
            facets: k
                .facets()
                .iter()
                .map(|f| f.iter().map(|i| k.label(i).to_string()).collect())
                .collect(),
        }
    }

    /// Parses either format, sniffing JSON by a leading `{`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| ParseError {
                line: e.line(),
                reason: e.to_string(),
            })
        } else {
            Self::parse_facet_text(text)
        }
    }

    fn parse_facet_text(text: &str) -> Result<Self, ParseError> {
        let mut facets: Vec<Vec<String>> = Vec::new();
        let mut vertices: Vec<String> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut facet = Vec::new();
            for token in line.split_whitespace() {
                if facet.iter().any(|t| t == token) {
                    return Err(ParseError {
                        line: idx + 1,
                        reason: format!("vertex {token:?} repeated within a facet"),
                    });
                }
                facet.push(token.to_string());
                if !vertices.iter().any(|v| v == token) {
                    vertices.push(token.to_string());
                }
            }
            facets.push(facet);
        }
        if facets.is_empty() {
            return Err(ParseError { line: 1, reason: "no facets found".into() });
        }
        vertices.sort();
        Ok(ComplexDocument { name: None, vertices, facets })
    }

    /// Validates into a complex, reporting facets that were dropped.
    pub fn build(&self) -> anyhow::Result<(SimplicialComplex, Vec<Dropped>)> {
        let complex =
            SimplicialComplex::from_facets(self.vertices.clone(), self.facets.clone())?;
        let mut dropped = Vec::new();
        let mut seen: Vec<reeshk::simplicial::VertexSet> = Vec::new();
        for facet in &self.facets {
            let set = reeshk::simplicial::VertexSet::from_indices(
                facet.iter().map(|l| complex.index_of(l).expect("validated label")),
            );
            if complex.facets().contains(&set) {
                if seen.contains(&set) {
                    dropped.push(Dropped::Duplicate(facet.clone()));
                }
                seen.push(set);
            } else {
                dropped.push(Dropped::NonMaximal(facet.clone()));
            }
        }
        Ok((complex, dropped))
    }

    /// Serializes for the given path: JSON when it ends in `.json`,
    /// facet text otherwise.
    pub fn render_for(&self, path: &Path) -> String {
        if path.extension().is_some_and(|e| e == "json") {
            let mut s = serde_json::to_string_pretty(self).expect("document serializes");
            s.push('\n');
            s
        } else {
            let mut out = String::new();
            if let Some(name) = &self.name {
                out.push_str(&format!("# {name}\n"));
            }
            for facet in &self.facets {
                out.push_str(&facet.join(" "));
                out.push('\n');
            }
            out
        }
    }
}
