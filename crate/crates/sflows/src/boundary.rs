//! The signed ridge-by-facet boundary matrix and the block ordering
//! exposed by a vertex that lies in every facet.

use std::ops::Range;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Signed incidence matrix between ridges (rows) and facets (columns).
/// Entries are -1, 0 or +1: the entry for ridge `R` and facet `F` is
/// `(-1)^j` when `R` is `F` with its j-th vertex (0-indexed) omitted,
/// and 0 when `R` is not a subset of `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    rows: Vec<Face>,
    cols: Vec<Face>,
    entries: Vec<i32>, // row-major
}

impl BoundaryMatrix {
    fn build(rows: Vec<Face>, cols: Vec<Face>) -> Self {
        let mut entries = vec![0i32; rows.len() * cols.len()];
        for (j, facet) in cols.iter().enumerate() {
            for (omit, _) in facet.vertices().iter().enumerate() {
                let ridge = facet.omit(omit);
                let i = rows
                    .binary_search(&ridge)
                    .expect("every codimension-one face of a facet is a row");
                entries[i * cols.len() + j] = if omit % 2 == 0 { 1 } else { -1 };
            }
        }
        BoundaryMatrix { rows, cols, entries }
    }

    pub fn row_labels(&self) -> &[Face] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[Face] {
        &self.cols
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.entries[i * self.cols.len() + j]
    }

    /// Entry addressed by labels; None when either label is absent.
    pub fn entry_by_label(&self, ridge: &Face, facet: &Face) -> Option<i32> {
        let i = self.rows.iter().position(|r| r == ridge)?;
        let j = self.cols.iter().position(|c| c == facet)?;
        Some(self.entry(i, j))
    }

    /// Rows as signed integer vectors, for exact linear algebra.
    pub fn row_vectors(&self) -> Vec<Vec<i64>> {
        (0..self.n_rows())
            .map(|i| (0..self.n_cols()).map(|j| self.entry(i, j) as i64).collect())
            .collect()
    }

    /// Tab-separated dump: header of facet labels, then one line per
    /// ridge with its label and entries.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = self.cols.iter().map(Face::label).collect();
        out.push('\t');
        out.push_str(&header.join("\t"));
        out.push('\n');
        for i in 0..self.n_rows() {
            out.push_str(&self.rows[i].label());
            for j in 0..self.n_cols() {
                out.push('\t');
                out.push_str(&self.entry(i, j).to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Index ranges of the row and column bands produced by [`cone_ordering`].
///
/// Rows: ridges containing the apex, then ridges lying in its link,
/// then the rest. Columns: facets containing the apex, then the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDescriptor {
    pub rows_apex: Range<usize>,
    pub rows_link: Range<usize>,
    pub rows_rest: Range<usize>,
    pub cols_apex: Range<usize>,
    pub cols_rest: Range<usize>,
}

/// The boundary matrix with ridges and facets in lexicographic order.
pub fn boundary_matrix(c: &SimplicialComplex) -> BoundaryMatrix {
    BoundaryMatrix::build(c.ridges(), c.facets().to_vec())
}

/// The boundary matrix reordered around the maximum vertex `v`,
/// exhibiting the block structure used to show that cones carry no
/// nontrivial flows:
///
/// - rows with the apex x apex columns: the boundary matrix of the link,
/// - the band of link ridges x apex columns: `(-1)^d` times the identity,
/// - remaining rows x apex columns: zero,
/// - apex rows x non-apex columns: zero,
/// - the non-apex columns carry the boundary matrix of the deletion.
pub fn cone_ordering(
    c: &SimplicialComplex,
    v: u32,
) -> Result<(BoundaryMatrix, BlockDescriptor)> {
    if !c.vertices().contains(&v) {
        return Err(Error::UnknownVertex(v));
    }
    if v != c.max_vertex() {
        return Err(Error::NotMaxVertex(v));
    }
    let all_ridges = c.ridges();
    let mut rows_apex: Vec<Face> = Vec::new();
    let mut rows_link: Vec<Face> = Vec::new();
    let mut rows_rest: Vec<Face> = Vec::new();
    for r in all_ridges {
        if r.contains(v) {
            rows_apex.push(r);
        } else if r.with_vertex(v).dim() == c.dimension()
            && c.facets().binary_search(&r.with_vertex(v)).is_ok()
        {
            // A ridge not containing v lies in the link exactly when
            // adding v yields a face, which here must be a facet.
            rows_link.push(r);
        } else {
            rows_rest.push(r);
        }
    }
    let mut cols_apex: Vec<Face> = Vec::new();
    let mut cols_rest: Vec<Face> = Vec::new();
    for f in c.facets() {
        if f.contains(v) {
            cols_apex.push(f.clone());
        } else {
            cols_rest.push(f.clone());
        }
    }
    let desc = BlockDescriptor {
        rows_apex: 0..rows_apex.len(),
        rows_link: rows_apex.len()..rows_apex.len() + rows_link.len(),
        rows_rest: rows_apex.len() + rows_link.len()
            ..rows_apex.len() + rows_link.len() + rows_rest.len(),
        cols_apex: 0..cols_apex.len(),
        cols_rest: cols_apex.len()..cols_apex.len() + cols_rest.len(),
    };

    let mut rows = rows_apex;
    rows.extend(rows_link);
    rows.extend(rows_rest);
    let mut cols = cols_apex;
    cols.extend(cols_rest);

    // Entries are label-determined, so build directly on the reordered
    // labels rather than permuting the canonical matrix.
    let n_cols = cols.len();
    let mut entries = vec![0i32; rows.len() * n_cols];
    for (j, facet) in cols.iter().enumerate() {
        for (omit, _) in facet.vertices().iter().enumerate() {
            let ridge = facet.omit(omit);
            let i = rows.iter().position(|r| *r == ridge).expect("ridge present");
            entries[i * n_cols + j] = if omit % 2 == 0 { 1 } else { -1 };
        }
    }
    Ok((BoundaryMatrix { rows, cols, entries }, desc))
}
