//! Pure simplicial complexes given by facet lists.
//!
//! A complex is stored by its facets only; lower faces (ridges in
//! particular) are derived on demand. Vertices are arbitrary
//! non-negative integers ordered numerically.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A single face: a strictly increasing, nonempty vertex list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    vertices: Vec<u32>,
}

impl Face {
    /// Builds a face from a vertex set. Input need not be sorted;
    /// duplicates are a caller bug.
    pub fn new(mut vertices: Vec<u32>) -> Self {
        vertices.sort_unstable();
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face { vertices }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn contains(&self, v: u32) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// True iff `self` is a subset of `other`.
    pub fn subset_of(&self, other: &Face) -> bool {
        let mut it = other.vertices.iter();
        self.vertices.iter().all(|v| it.any(|w| w == v))
    }

    /// The face with vertex at position `j` removed. Requires dim >= 1.
    pub fn omit(&self, j: usize) -> Face {
        let mut vs = self.vertices.clone();
        vs.remove(j);
        Face { vertices: vs }
    }

    /// The face with `v` removed, if present and not the only vertex.
    pub fn without(&self, v: u32) -> Option<Face> {
        let pos = self.vertices.binary_search(&v).ok()?;
        if self.vertices.len() == 1 {
            return None;
        }
        Some(self.omit(pos))
    }

    /// The face with `v` added. `v` must not already be a member.
    pub fn with_vertex(&self, v: u32) -> Face {
        let mut vs = self.vertices.clone();
        vs.push(v);
        Face::new(vs)
    }

    /// Canonical label: digits concatenated when every vertex is a
    /// single digit (matching the usual display of small complexes),
    /// dash-separated otherwise.
    pub fn label(&self) -> String {
        let join = if self.vertices.iter().all(|&v| v <= 9) { "" } else { "-" };
        self.vertices
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(join)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A pure simplicial complex: facets of equal cardinality, each a
/// strictly increasing vertex list, no duplicates, vertices the union
/// of the facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<u32>,
    facets: Vec<Face>,
    dimension: usize,
}

impl SimplicialComplex {
    /// Builds a complex from facet vertex lists, enforcing purity.
    pub fn from_facets(raw: Vec<Vec<u32>>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        let width = raw[0].len();
        let mut facets = Vec::with_capacity(raw.len());
        for (i, mut vs) in raw.into_iter().enumerate() {
            if vs.len() != width {
                return Err(Error::MixedDimension(width, vs.len()));
            }
            vs.sort_unstable();
            if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertexInFacet { line: i + 1, vertex: w[0] });
            }
            facets.push(Face { vertices: vs });
        }
        facets.sort();
        facets.dedup();
        let vertices: BTreeSet<u32> =
            facets.iter().flat_map(|f| f.vertices.iter().copied()).collect();
        Ok(SimplicialComplex {
            vertices: vertices.into_iter().collect(),
            dimension: width - 1,
            facets,
        })
    }

    /// Parses the facet-list text format: one facet per line, base-10
    /// vertex ids separated by whitespace, `#` lines are comments,
    /// blank lines ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut vs = Vec::new();
            for tok in line.split_whitespace() {
                let v: u32 = tok.parse().map_err(|_| Error::InvalidToken {
                    line: lineno + 1,
                    token: tok.to_string(),
                })?;
                vs.push(v);
            }
            raw.push(vs);
        }
        Self::from_facets(raw)
    }

    /// Canonical text form; `parse` of the result reproduces `self`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.facets {
            let line: Vec<String> = f.vertices.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn facet_labels(&self) -> Vec<String> {
        self.facets.iter().map(Face::label).collect()
    }

    /// All distinct codimension-one faces, in lexicographic order.
    /// A zero-dimensional complex has no ridges.
    pub fn ridges(&self) -> Vec<Face> {
        if self.dimension == 0 {
            return Vec::new();
        }
        let mut set = BTreeSet::new();
        for f in &self.facets {
            for j in 0..f.vertices.len() {
                set.insert(f.omit(j));
            }
        }
        set.into_iter().collect()
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if self.vertices.binary_search(&v).is_ok() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// The link of `v`: facets are `F \ {v}` for facets `F` containing `v`.
    pub fn link(&self, v: u32) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        let raw: Vec<Vec<u32>> = self
            .facets
            .iter()
            .filter(|f| f.contains(v))
            .map(|f| f.without(v).expect("facet of dim >= 1 contains v").vertices)
            .collect();
        // Every vertex lies in some facet, so raw is nonempty; a facet
        // cannot consist of v alone unless the complex is 0-dimensional.
        if raw.is_empty() || raw[0].is_empty() {
            return Err(Error::UnknownVertex(v));
        }
        SimplicialComplex::from_facets(raw)
    }

    /// The deletion of `v`: facets not containing `v`. Signals
    /// `ConeApex` when every facet contains `v`.
    pub fn deletion(&self, v: u32) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        let raw: Vec<Vec<u32>> = self
            .facets
            .iter()
            .filter(|f| !f.contains(v))
            .map(|f| f.vertices.clone())
            .collect();
        if raw.is_empty() {
            return Err(Error::ConeApex(v));
        }
        SimplicialComplex::from_facets(raw)
    }

    /// The smallest vertex contained in every facet, if any.
    pub fn cone_apex(&self) -> Option<u32> {
        let mut common: Vec<u32> = self.facets[0].vertices.clone();
        for f in &self.facets[1..] {
            common.retain(|v| f.contains(*v));
            if common.is_empty() {
                return None;
            }
        }
        common.first().copied()
    }

    pub fn max_vertex(&self) -> u32 {
        *self.vertices.last().expect("complex is nonempty")
    }

    /// The cone over this complex: a fresh vertex (max + 1) added to
    /// every facet.
    pub fn cone(&self) -> SimplicialComplex {
        let apex = self.max_vertex() + 1;
        let raw = self.facets.iter().map(|f| f.with_vertex(apex).vertices).collect();
        SimplicialComplex::from_facets(raw).expect("coning preserves validity")
    }

    /// Relabels by swapping `v` with the maximum vertex, so that `v`
    /// becomes the largest. Identity when `v` is already maximal.
    pub fn swap_to_max(&self, v: u32) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        let top = self.max_vertex();
        if v == top {
            return Ok(self.clone());
        }
        let raw = self
            .facets
            .iter()
            .map(|f| {
                f.vertices
                    .iter()
                    .map(|&w| if w == v { top } else if w == top { v } else { w })
                    .collect()
            })
            .collect();
        SimplicialComplex::from_facets(raw)
    }
}
