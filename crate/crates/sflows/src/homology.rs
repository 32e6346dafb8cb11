//! Top-degree homology and the classification of triangulated
//! pseudomanifolds, with the closed-form flow counts that classification
//! unlocks.

use num_bigint::BigInt;
use serde::Serialize;

use crate::boundary::boundary_matrix;
use crate::complex::SimplicialComplex;
use crate::linalg::{self, ExactMatrix};

/// Ridge-degree and connectivity census of a pure complex.
///
/// `orientable_over_z` is defined only for closed connected complexes;
/// it holds exactly when the top Betti number is 1, which for genuine
/// manifold triangulations is the existence of a coherent orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifoldClass {
    pub pseudomanifold: bool,
    pub closed: bool,
    pub connected: bool,
    pub orientable_over_z: Option<bool>,
}

fn boundary_exact(c: &SimplicialComplex) -> ExactMatrix {
    ExactMatrix::from_i64_rows(&boundary_matrix(c).row_vectors())
}

/// Top Betti number: facets minus the rational rank of the boundary
/// matrix. With no higher-dimensional faces this is the dimension of
/// the top homology over Q.
pub fn betti_top(c: &SimplicialComplex) -> usize {
    c.facets().len() - linalg::rank_rational(&boundary_exact(c))
}

/// Integral top homology as (free rank, torsion). The kernel of an
/// integer matrix is free and nothing bounds in the top degree, so the
/// torsion list is always empty; it is returned for interface
/// uniformity with lower-degree homology elsewhere.
pub fn top_homology_z(c: &SimplicialComplex) -> (usize, Vec<BigInt>) {
    (betti_top(c), Vec::new())
}

/// Size and, for prime moduli, dimension of the top cycle space mod q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopHomologyModQ {
    pub q: u64,
    /// Number of Z_q-cycles, i.e. kernel vectors of the boundary mod q.
    pub cycle_count: BigInt,
    /// Dimension over F_q when q is prime.
    pub fq_dimension: Option<usize>,
}

pub fn top_homology_mod_q(c: &SimplicialComplex, q: u64) -> TopHomologyModQ {
    let m = boundary_exact(c);
    let cycle_count = linalg::kernel_count_mod_q(&m, q);
    let fq_dimension = if linalg::is_prime(q) {
        Some(c.facets().len() - linalg::rank_mod_p(&m, q).expect("q is prime"))
    } else {
        None
    };
    TopHomologyModQ { q, cycle_count, fq_dimension }
}

/// Ridge-degree census plus dual-graph connectivity.
pub fn classify_manifold(c: &SimplicialComplex) -> ManifoldClass {
    let ridges = c.ridges();
    let facets = c.facets();
    // Degree of each ridge = number of facets containing it.
    let mut max_degree = 0usize;
    let mut min_degree = usize::MAX;
    let mut ridge_facets: Vec<Vec<usize>> = Vec::with_capacity(ridges.len());
    for r in &ridges {
        let incident: Vec<usize> = facets
            .iter()
            .enumerate()
            .filter(|(_, f)| r.subset_of(f))
            .map(|(i, _)| i)
            .collect();
        max_degree = max_degree.max(incident.len());
        min_degree = min_degree.min(incident.len());
        ridge_facets.push(incident);
    }
    let pseudomanifold = ridges.is_empty() || max_degree <= 2;
    let closed = !ridges.is_empty() && min_degree == 2 && max_degree == 2;

    // Dual-graph connectivity: facets adjacent when they share a ridge.
    let mut seen = vec![false; facets.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(f) = stack.pop() {
        for incident in &ridge_facets {
            if !incident.contains(&f) {
                continue;
            }
            for &g in incident {
                if !seen[g] {
                    seen[g] = true;
                    reached += 1;
                    stack.push(g);
                }
            }
        }
    }
    let connected = reached == facets.len();

    let orientable_over_z =
        (closed && connected).then(|| betti_top(c) == 1);
    ManifoldClass { pseudomanifold, closed, connected, orientable_over_z }
}

/// Closed-form nowhere-zero flow count for connected pseudomanifolds:
/// 0 with boundary; q-1 closed and orientable; closed non-orientable
/// gives 1 at q = 2 and 0 otherwise. Returns None when the complex is
/// not a connected pseudomanifold, where no closed form applies.
pub fn manifold_flow_count(mc: &ManifoldClass, q: u64) -> Option<BigInt> {
    if !mc.pseudomanifold || !mc.connected {
        return None;
    }
    if !mc.closed {
        return Some(BigInt::from(0));
    }
    match mc.orientable_over_z {
        Some(true) => Some(BigInt::from(q - 1)),
        Some(false) if q == 2 => Some(BigInt::from(1)),
        Some(false) => Some(BigInt::from(0)),
        None => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TETRA: &str = "1 2 4\n1 3 4\n2 3 4\n1 2 3\n";
    const BIPYRAMID: &str = "0 1 2\n0 1 3\n0 2 3\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n";

    fn parse(text: &str) -> SimplicialComplex {
        SimplicialComplex::parse(text).unwrap()
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti_top(&parse(TETRA)), 1);
        assert_eq!(betti_top(&parse(BIPYRAMID)), 2);
        assert_eq!(betti_top(&parse("0 1 2")), 0);
    }

    #[test]
    fn betti_zero_for_cones() {
        for text in [TETRA, BIPYRAMID, "0 1\n1 2\n0 2"] {
            let coned = parse(text).cone();
            assert_eq!(betti_top(&coned), 0, "{text}");
        }
    }

    #[test]
    fn top_homology_z_examples() {
        assert_eq!(top_homology_z(&parse(TETRA)), (1, vec![]));
        assert_eq!(top_homology_z(&parse(BIPYRAMID)), (2, vec![]));
    }

    #[test]
    fn top_homology_mod_q_tetrahedron() {
        let h = top_homology_mod_q(&parse(TETRA), 5);
        assert_eq!(h.cycle_count, BigInt::from(5));
        assert_eq!(h.fq_dimension, Some(1));
        let h4 = top_homology_mod_q(&parse(TETRA), 4);
        assert_eq!(h4.cycle_count, BigInt::from(4));
        assert_eq!(h4.fq_dimension, None);
    }

    #[test]
    fn classify_tetrahedron_surface() {
        let mc = classify_manifold(&parse(TETRA));
        assert!(mc.pseudomanifold && mc.closed && mc.connected);
        assert_eq!(mc.orientable_over_z, Some(true));
    }

    #[test]
    fn classify_full_simplex_has_boundary() {
        let mc = classify_manifold(&parse("0 1 2"));
        assert!(mc.pseudomanifold);
        assert!(!mc.closed);
        assert!(mc.connected);
        assert_eq!(mc.orientable_over_z, None);
    }

    #[test]
    fn classify_bipyramid_not_pseudomanifold() {
        // Edge 12 lies in three facets.
        let mc = classify_manifold(&parse(BIPYRAMID));
        assert!(!mc.pseudomanifold);
        assert!(mc.connected);
        assert_eq!(manifold_flow_count(&mc, 5), None);
    }

    #[test]
    fn classify_disconnected() {
        let two = parse("0 1 2\n3 4 5");
        let mc = classify_manifold(&two);
        assert!(!mc.connected);
        assert_eq!(mc.orientable_over_z, None);
        assert_eq!(manifold_flow_count(&mc, 3), None);
    }

    #[test]
    fn closed_form_counts() {
        let sphere = classify_manifold(&parse(TETRA));
        assert_eq!(manifold_flow_count(&sphere, 7), Some(BigInt::from(6)));
        let disk = classify_manifold(&parse("0 1 2\n1 2 3\n2 3 4\n3 4 5"));
        assert_eq!(manifold_flow_count(&disk, 5), Some(BigInt::from(0)));
    }

    #[test]
    fn circle_is_closed_orientable() {
        let mc = classify_manifold(&parse("0 1\n1 2\n0 2"));
        assert!(mc.closed && mc.connected && mc.pseudomanifold);
        assert_eq!(mc.orientable_over_z, Some(true));
        assert_eq!(manifold_flow_count(&mc, 4), Some(BigInt::from(3)));
    }
}
