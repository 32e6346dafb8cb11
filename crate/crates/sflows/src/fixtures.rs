//! The fixture corpus shipped with the crate: small complexes with
//! known flow behavior, embedded at compile time and also available as
//! facet-list files under `fixtures/` for the CLI.

use crate::complex::SimplicialComplex;

macro_rules! fixture {
    ($name:ident, $file:literal, $doc:literal) => {
        #[doc = $doc]
        pub fn $name() -> SimplicialComplex {
            SimplicialComplex::parse(include_str!(concat!("../fixtures/", $file)))
                .expect("fixture parses")
        }
    };
}

fixture!(tetrahedron, "tetrahedron.sc", "The 2-sphere on four vertices.");
fixture!(
    bipyramid,
    "bipyramid.sc",
    "Two tetrahedron boundaries glued along a triangle; count (q-1)(q-2)."
);
fixture!(simplex2, "simplex2.sc", "The full 2-simplex, a cone.");
fixture!(simplex3, "simplex3.sc", "The full 3-simplex, a cone.");
fixture!(disk, "disk.sc", "A four-triangle strip: a disk with boundary.");
fixture!(klein_bottle, "klein_bottle.sc", "Klein bottle on eight vertices.");
fixture!(rp2, "rp2.sc", "Real projective plane on six vertices.");
fixture!(torus, "torus.sc", "Torus on seven vertices.");
fixture!(octahedron, "octahedron.sc", "The octahedral 2-sphere.");
fixture!(k4, "k4.sc", "Complete graph K4 as a 1-complex.");
fixture!(triangle, "triangle.sc", "The circle: boundary of a triangle.");

/// Every fixture with its name, for sweep-style tests.
pub fn all() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("tetrahedron", tetrahedron()),
        ("bipyramid", bipyramid()),
        ("simplex2", simplex2()),
        ("simplex3", simplex3()),
        ("disk", disk()),
        ("klein_bottle", klein_bottle()),
        ("rp2", rp2()),
        ("torus", torus()),
        ("octahedron", octahedron()),
        ("k4", k4()),
        ("triangle", triangle()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{betti_top, classify_manifold};

    #[test]
    fn corpus_shapes() {
        let euler = |c: &SimplicialComplex| match c.dimension() {
            1 => c.vertices().len() as i64 - c.facets().len() as i64,
            2 => {
                c.vertices().len() as i64 - c.ridges().len() as i64 + c.facets().len() as i64
            }
            d => panic!("no euler formula wired for dimension {d}"),
        };
        // (name, facets, euler, closed, orientable, betti_top)
        let expected: &[(&str, usize, i64, bool, Option<bool>, usize)] = &[
            ("tetrahedron", 4, 2, true, Some(true), 1),
            ("klein_bottle", 16, 0, true, Some(false), 0),
            ("rp2", 10, 1, true, Some(false), 0),
            ("torus", 14, 0, true, Some(true), 1),
            ("octahedron", 8, 2, true, Some(true), 1),
            ("triangle", 3, 0, true, Some(true), 1),
            ("disk", 4, 1, false, None, 0),
        ];
        for &(name, n_facets, chi, closed, orientable, betti) in expected {
            let c = all().into_iter().find(|(n, _)| *n == name).unwrap().1;
            let mc = classify_manifold(&c);
            assert_eq!(c.facets().len(), n_facets, "{name} facets");
            assert_eq!(euler(&c), chi, "{name} euler");
            assert_eq!(mc.closed, closed, "{name} closed");
            assert!(mc.connected, "{name} connected");
            assert_eq!(mc.orientable_over_z, orientable, "{name} orientable");
            assert_eq!(betti_top(&c), betti, "{name} betti");
        }
    }

    #[test]
    fn cones_have_apexes() {
        assert_eq!(simplex2().cone_apex(), Some(0));
        assert_eq!(simplex3().cone_apex(), Some(0));
        assert_eq!(tetrahedron().cone_apex(), None);
        assert_eq!(disk().cone_apex(), None);
    }
}
