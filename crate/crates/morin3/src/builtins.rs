//! Built-in triangulations of the five test manifolds.
//!
//! - `S3`: boundary of the 4-simplex.
//! - `T3`: 3-torus as the 3x3x3 periodic grid, each unit cube split into six
//!   tetrahedra along its main diagonal.
//! - `RP3`: the minimal 11-vertex, 40-tetrahedron triangulation.
//! - `S2xS1`, `RP2xS1`: products of a triangulated surface with a 3-vertex
//!   circle, each triangle prism split into three tetrahedra by the staircase
//!   rule (the diagonal of the square over an edge {a < b} runs from the
//!   lower vertex at level t to the higher vertex at level t+1, which makes
//!   neighbouring prisms agree).

use crate::complex::SimplicialComplex3;
use crate::error::{Error, Result};

/// Facets of the boundary of the 4-simplex.
pub fn s3_facets() -> Vec<[u32; 4]> {
    vec![
        [0, 1, 2, 3],
        [0, 1, 2, 4],
        [0, 1, 3, 4],
        [0, 2, 3, 4],
        [1, 2, 3, 4],
    ]
}

pub fn s3() -> SimplicialComplex3 {
    SimplicialComplex3::build(&s3_facets()).expect("S3 facets are valid")
}

fn t3_vertex(i: u32, j: u32, k: u32) -> u32 {
    9 * (i % 3) + 3 * (j % 3) + (k % 3)
}

/// Facets of the 27-vertex 3-torus: six tetrahedra per unit cube, one per
/// permutation of the axes, tracing a monotone vertex path through the cube.
pub fn t3_facets() -> Vec<[u32; 4]> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut facets = Vec::with_capacity(162);
    for i in 0..3u32 {
        for j in 0..3u32 {
            for k in 0..3u32 {
                for perm in PERMS {
                    let mut corner = [i, j, k];
                    let mut tet = [t3_vertex(i, j, k), 0, 0, 0];
                    for (step, &axis) in perm.iter().enumerate() {
                        corner[axis] += 1;
                        tet[step + 1] = t3_vertex(corner[0], corner[1], corner[2]);
                    }
                    tet.sort_unstable();
                    facets.push(tet);
                }
            }
        }
    }
    facets
}

pub fn t3() -> SimplicialComplex3 {
    SimplicialComplex3::build(&t3_facets()).expect("T3 facets are valid")
}

/// The x = 0 coordinate 2-torus inside the built-in `T3`, as triangles.
/// `axis` picks which coordinate is frozen to zero.
pub fn t3_coordinate_torus(axis: usize) -> Vec<[u32; 3]> {
    assert!(axis < 3);
    let mut tris = Vec::with_capacity(18);
    for a in 0..3u32 {
        for b in 0..3u32 {
            let v = |da: u32, db: u32| -> u32 {
                let (mut c0, mut c1, mut c2) = (0, 0, 0);
                match axis {
                    0 => {
                        c1 = a + da;
                        c2 = b + db;
                    }
                    1 => {
                        c0 = a + da;
                        c2 = b + db;
                    }
                    _ => {
                        c0 = a + da;
                        c1 = b + db;
                    }
                }
                t3_vertex(c0, c1, c2)
            };
            // Both triangles of the square, split along its main diagonal;
            // these are faces of the cube subdivision.
            tris.push([v(0, 0), v(1, 0), v(1, 1)]);
            tris.push([v(0, 0), v(0, 1), v(1, 1)]);
        }
    }
    tris
}

/// The coordinate circle of `T3` running in direction `axis` through the
/// origin vertex, as edges.
pub fn t3_coordinate_circle(axis: usize) -> Vec<[u32; 2]> {
    assert!(axis < 3);
    (0..3u32)
        .map(|t| {
            let mut a = [0, 0, 0];
            let mut b = [0, 0, 0];
            a[axis] = t;
            b[axis] = t + 1;
            [
                t3_vertex(a[0], a[1], a[2]),
                t3_vertex(b[0], b[1], b[2]),
            ]
        })
        .collect()
}

/// The minimal triangulation of RP^3: 11 vertices, 40 tetrahedra
/// (f-vector 11, 51, 80, 40).
pub fn rp3_facets() -> Vec<[u32; 4]> {
    vec![
        [0, 1, 4, 5],
        [0, 1, 4, 10],
        [0, 1, 5, 9],
        [0, 1, 9, 10],
        [0, 3, 4, 5],
        [0, 3, 4, 7],
        [0, 3, 5, 6],
        [0, 3, 6, 7],
        [0, 4, 7, 10],
        [0, 5, 6, 9],
        [0, 6, 7, 8],
        [0, 6, 8, 9],
        [0, 7, 8, 10],
        [0, 8, 9, 10],
        [1, 3, 6, 7],
        [1, 3, 6, 10],
        [1, 3, 7, 9],
        [1, 3, 9, 10],
        [1, 4, 5, 8],
        [1, 4, 6, 8],
        [1, 4, 6, 10],
        [1, 5, 7, 8],
        [1, 5, 7, 9],
        [1, 6, 7, 8],
        [2, 4, 6, 9],
        [2, 4, 6, 10],
        [2, 4, 7, 9],
        [2, 4, 7, 10],
        [2, 5, 6, 9],
        [2, 5, 6, 10],
        [2, 5, 7, 9],
        [2, 5, 7, 10],
        [3, 4, 5, 8],
        [3, 4, 7, 9],
        [3, 4, 8, 9],
        [3, 5, 6, 10],
        [3, 5, 8, 10],
        [3, 8, 9, 10],
        [4, 6, 8, 9],
        [5, 7, 8, 10],
    ]
}

pub fn rp3() -> SimplicialComplex3 {
    SimplicialComplex3::build(&rp3_facets()).expect("RP3 facets are valid")
}

/// Triangles of the 2-sphere as the boundary of a tetrahedron.
pub fn s2_triangles() -> Vec<[u32; 3]> {
    vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
}

/// Triangles of the 6-vertex projective plane (every pair of vertices is an
/// edge except the five "antipodal" ones).
pub fn rp2_triangles() -> Vec<[u32; 3]> {
    vec![
        [0, 1, 4],
        [0, 1, 5],
        [0, 2, 3],
        [0, 2, 5],
        [0, 3, 4],
        [1, 2, 3],
        [1, 2, 4],
        [1, 3, 5],
        [2, 4, 5],
        [3, 4, 5],
    ]
}

/// Product of a closed surface with a 3-vertex circle via the staircase
/// subdivision of each prism. Vertex (v, t) gets label 3v + t.
pub fn staircase_product(triangles: &[[u32; 3]], circle_len: u32) -> Vec<[u32; 4]> {
    assert!(circle_len >= 3);
    let vid = |v: u32, t: u32| -> u32 { v * circle_len + (t % circle_len) };
    let mut facets = Vec::with_capacity(triangles.len() * circle_len as usize * 3);
    for tri in triangles {
        let mut tri = *tri;
        tri.sort_unstable();
        let [a, b, c] = tri;
        for t in 0..circle_len {
            let mut push = |f: [u32; 4]| {
                let mut f = f;
                f.sort_unstable();
                facets.push(f);
            };
            push([vid(a, t), vid(b, t), vid(c, t), vid(c, t + 1)]);
            push([vid(a, t), vid(b, t), vid(b, t + 1), vid(c, t + 1)]);
            push([vid(a, t), vid(a, t + 1), vid(b, t + 1), vid(c, t + 1)]);
        }
    }
    facets
}

pub fn s2xs1_facets() -> Vec<[u32; 4]> {
    staircase_product(&s2_triangles(), 3)
}

pub fn s2xs1() -> SimplicialComplex3 {
    SimplicialComplex3::build(&s2xs1_facets()).expect("S2xS1 facets are valid")
}

pub fn rp2xs1_facets() -> Vec<[u32; 4]> {
    staircase_product(&rp2_triangles(), 3)
}

pub fn rp2xs1() -> SimplicialComplex3 {
    SimplicialComplex3::build(&rp2xs1_facets()).expect("RP2xS1 facets are valid")
}

/// The circle factor of a staircase product through surface vertex 0.
pub fn product_circle_edges(circle_len: u32) -> Vec<[u32; 2]> {
    (0..circle_len)
        .map(|t| [t, (t + 1) % circle_len])
        .collect()
}

/// Looks up a built-in by name.
pub fn by_name(name: &str) -> Result<SimplicialComplex3> {
    builtin_facets(name).map(|f| SimplicialComplex3::build(&f).expect("builtin facets are valid"))
}

/// Facet list of a built-in by name.
pub fn builtin_facets(name: &str) -> Result<Vec<[u32; 4]>> {
    match name {
        "S3" => Ok(s3_facets()),
        "T3" => Ok(t3_facets()),
        "RP3" => Ok(rp3_facets()),
        "S2xS1" => Ok(s2xs1_facets()),
        "RP2xS1" => Ok(rp2xs1_facets()),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

pub const BUILTIN_NAMES: [&str; 5] = ["S3", "T3", "RP3", "S2xS1", "RP2xS1"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_vectors() {
        let cases: [(&str, [usize; 4]); 5] = [
            ("S3", [5, 10, 10, 5]),
            ("T3", [27, 189, 324, 162]),
            ("RP3", [11, 51, 80, 40]),
            ("S2xS1", [12, 48, 72, 36]),
            ("RP2xS1", [18, 108, 180, 90]),
        ];
        for (name, expected) in cases {
            let c = by_name(name).unwrap();
            let got = [c.n(0), c.n(1), c.n(2), c.n(3)];
            assert_eq!(got, expected, "{name}");
        }
    }

    #[test]
    fn all_builtins_are_closed() {
        for name in BUILTIN_NAMES {
            assert!(
                by_name(name).unwrap().is_closed_pseudomanifold(),
                "{name}"
            );
        }
    }

    #[test]
    fn unknown_builtin_errors() {
        assert_eq!(
            builtin_facets("K3"),
            Err(Error::UnknownBuiltin("K3".into()))
        );
    }

    #[test]
    fn coordinate_torus_is_a_cycle_of_18_triangles() {
        let t3c = t3();
        let tris = t3_coordinate_torus(0);
        assert_eq!(tris.len(), 18);
        for t in &tris {
            assert!(t3c.index_of(t).is_some(), "missing triangle {t:?}");
        }
    }

    #[test]
    fn coordinate_circle_edges_exist() {
        let t3c = t3();
        for axis in 0..3 {
            for e in t3_coordinate_circle(axis) {
                assert!(t3c.index_of(&e).is_some(), "missing edge {e:?}");
            }
        }
    }
}
