//! Triangulated closed 3-manifold candidates and simplicial maps.
//!
//! A complex is given by its list of tetrahedra over nonnegative integer
//! vertex labels. Face tables for every dimension are derived once at build
//! time and indexed lexicographically; the integer order on labels is the
//! global vertex order used by every cup product downstream, so it is fixed
//! for the lifetime of the complex.
//!
//! Closedness is checked as the pseudomanifold condition (every triangle in
//! exactly two tetrahedra, strongly connected per component). Full link
//! conditions are *not* verified: inputs are trusted to be genuine manifolds,
//! and the built-in triangulations are.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

/// A pure 3-dimensional simplicial complex with derived face tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex3 {
    /// Sorted distinct vertex labels.
    vertices: Vec<u32>,
    /// Face tables by dimension; each simplex is a strictly increasing
    /// vertex tuple, tables sorted lexicographically.
    simplices: [Vec<Vec<u32>>; 4],
    /// Lexicographic index lookup per dimension.
    index: [BTreeMap<Vec<u32>, usize>; 4],
    /// `faces[k][i][j]` is the index of the k-face of the (k+1)-simplex `i`
    /// obtained by omitting its j-th vertex.
    faces: [Vec<Vec<usize>>; 3],
    /// `cofaces[k][i]` lists the (k+1)-simplices containing the k-simplex `i`.
    cofaces: [Vec<Vec<usize>>; 3],
}

impl SimplicialComplex3 {
    /// Builds the complex from its facet list.
    ///
    /// Facet tuples are normalized to increasing order; all face tables are
    /// deduplicated and sorted, so rebuilding from the same facets yields
    /// identical indexing.
    pub fn build(facets: &[[u32; 4]]) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        let mut normalized: BTreeSet<Vec<u32>> = BTreeSet::new();
        for facet in facets {
            let mut f = facet.to_vec();
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertexInFacet(*facet));
            }
            normalized.insert(f);
        }

        let mut tables: [BTreeSet<Vec<u32>>; 4] = Default::default();
        for f in &normalized {
            for (k, table) in tables.iter_mut().enumerate() {
                for combo in combinations(f, k + 1) {
                    table.insert(combo);
                }
            }
        }
        let simplices: [Vec<Vec<u32>>; 4] = tables.map(|t| t.into_iter().collect());
        let index: [BTreeMap<Vec<u32>, usize>; 4] = [0, 1, 2, 3].map(|k| {
            simplices[k]
                .iter()
                .enumerate()
                .map(|(i, s)| (s.clone(), i))
                .collect()
        });

        let mut faces: [Vec<Vec<usize>>; 3] = Default::default();
        let mut cofaces: [Vec<Vec<usize>>; 3] = [
            vec![Vec::new(); simplices[0].len()],
            vec![Vec::new(); simplices[1].len()],
            vec![Vec::new(); simplices[2].len()],
        ];
        for k in 0..3usize {
            for (i, s) in simplices[k + 1].iter().enumerate() {
                let mut fs = Vec::with_capacity(s.len());
                for omit in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(omit);
                    let fi = index[k][&face];
                    fs.push(fi);
                    cofaces[k][fi].push(i);
                }
                faces[k].push(fs);
            }
        }

        let vertices = simplices[0].iter().map(|s| s[0]).collect();
        Ok(SimplicialComplex3 {
            vertices,
            simplices,
            index,
            faces,
            cofaces,
        })
    }

    /// Number of distinct vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Number of k-simplices.
    pub fn n(&self, k: usize) -> usize {
        self.simplices[k].len()
    }

    /// The k-simplex at index `i` as its increasing vertex tuple.
    pub fn simplex(&self, k: usize, i: usize) -> &[u32] {
        &self.simplices[k][i]
    }

    /// Index of a simplex given by any ordering of its vertices.
    pub fn index_of(&self, vertices: &[u32]) -> Option<usize> {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        key.dedup();
        if key.len() != vertices.len() || key.is_empty() || key.len() > 4 {
            return None;
        }
        self.index[key.len() - 1].get(&key).copied()
    }

    /// Indices of the k-faces of the (k+1)-simplex `i`, in omitted-vertex
    /// order.
    pub fn faces_of(&self, k_plus_1: usize, i: usize) -> &[usize] {
        &self.faces[k_plus_1 - 1][i]
    }

    /// Indices of the (k+1)-simplices containing the k-simplex `i`.
    pub fn cofaces_of(&self, k: usize, i: usize) -> &[usize] {
        &self.cofaces[k][i]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.n(0) as i64 - self.n(1) as i64 + self.n(2) as i64 - self.n(3) as i64
    }

    /// Boundary matrix of k-chains: rows over (k-1)-simplices, columns over
    /// k-simplices.
    pub fn boundary_matrix(&self, k: usize) -> Gf2Matrix {
        assert!((1..=3).contains(&k));
        self.coboundary_matrix(k - 1).transpose()
    }

    /// Coboundary matrix on k-cochains: rows over (k+1)-simplices, columns
    /// over k-simplices. For k = 3 this is the zero map out of C^3.
    pub fn coboundary_matrix(&self, k: usize) -> Gf2Matrix {
        assert!(k <= 3);
        if k == 3 {
            return Gf2Matrix::zero(0, self.n(3));
        }
        let rows = self.faces[k]
            .iter()
            .map(|fs| {
                let mut r = fs.clone();
                r.sort_unstable();
                r
            })
            .collect();
        Gf2Matrix::from_rows(self.n(k), rows).expect("face indices are in range")
    }

    /// Closed-pseudomanifold test: every triangle lies in exactly two
    /// tetrahedra and the dual graph of every connected component of the
    /// complex is connected.
    pub fn is_closed_pseudomanifold(&self) -> bool {
        if self.cofaces[2].iter().any(|c| c.len() != 2) {
            return false;
        }
        // Components of the vertex graph vs components of the dual graph:
        // a wedge of two closed pieces at a vertex passes the coface count
        // but has more dual components than vertex components.
        let vertex_components = {
            let mut dsu = Dsu::new(self.n(0));
            for edge in &self.simplices[1] {
                let a = self.index[0][&vec![edge[0]]];
                let b = self.index[0][&vec![edge[1]]];
                dsu.union(a, b);
            }
            dsu.component_count()
        };
        let dual_components = {
            let mut dsu = Dsu::new(self.n(3));
            for cof in &self.cofaces[2] {
                dsu.union(cof[0], cof[1]);
            }
            dsu.component_count()
        };
        vertex_components == dual_components
    }

    /// The mod-2 fundamental cycle: the all-ones vector over facets.
    pub fn fundamental_cycle(&self) -> Result<Gf2Vector> {
        if !self.is_closed_pseudomanifold() {
            return Err(Error::NotClosed);
        }
        let z = Gf2Vector::ones(self.n(3));
        debug_assert!(self
            .boundary_matrix(3)
            .mul_vec(&z)
            .map(|b| b.is_zero())
            .unwrap_or(false));
        Ok(z)
    }

    /// Orientability, decided by propagating facet orientations over a
    /// spanning tree of the dual graph and checking the remaining dual edges.
    ///
    /// A facet with increasing vertices induces on the face omitting its
    /// i-th vertex the sign (-1)^i; two cofaces of a triangle are
    /// compatibly oriented when they induce opposite signs on it.
    pub fn is_orientable(&self) -> Result<bool> {
        if !self.is_closed_pseudomanifold() {
            return Err(Error::NotClosed);
        }
        let nt = self.n(3);
        let mut sign = vec![0i8; nt];
        for start in 0..nt {
            if sign[start] != 0 {
                continue;
            }
            sign[start] = 1;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for (omit_u, &tri) in self.faces[2][u].iter().enumerate() {
                    let cof = &self.cofaces[2][tri];
                    let v = if cof[0] == u { cof[1] } else { cof[0] };
                    let omit_v = self.faces[2][v]
                        .iter()
                        .position(|&t| t == tri)
                        .expect("coface lists are mutual");
                    // sign[u] * (-1)^omit_u = -sign[v] * (-1)^omit_v
                    let rel = if (omit_u + omit_v) % 2 == 0 { -1 } else { 1 };
                    let expected = sign[u] * rel;
                    if sign[v] == 0 {
                        sign[v] = expected;
                        stack.push(v);
                    } else if sign[v] != expected {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Triangles of the link of a vertex: for every facet containing `v`,
    /// the opposite triangle.
    pub fn vertex_link(&self, v: u32) -> Vec<[u32; 3]> {
        let mut out = Vec::new();
        for f in &self.simplices[3] {
            if let Some(pos) = f.iter().position(|&x| x == v) {
                let mut t = f.clone();
                t.remove(pos);
                out.push([t[0], t[1], t[2]]);
            }
        }
        out
    }
}

fn combinations(items: &[u32], size: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn rec(items: &[u32], size: usize, start: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            rec(items, size, i + 1, current, out);
            current.pop();
        }
    }
    rec(items, size, 0, &mut current, &mut out);
    out
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn component_count(&mut self) -> usize {
        let n = self.parent.len();
        (0..n).filter(|&i| self.find(i) == i).count()
    }
}

/// A simplicial map presented by its action on vertices.
#[derive(Clone, Debug)]
pub struct SimplicialMap<'a> {
    source: &'a SimplicialComplex3,
    target: &'a SimplicialComplex3,
    images: BTreeMap<u32, u32>,
}

impl<'a> SimplicialMap<'a> {
    /// Wraps a vertex assignment. The assignment must be total on the source
    /// vertices and land in the target vertices.
    pub fn new(
        source: &'a SimplicialComplex3,
        target: &'a SimplicialComplex3,
        images: BTreeMap<u32, u32>,
    ) -> Result<Self> {
        for &v in source.vertices() {
            let Some(&w) = images.get(&v) else {
                return Err(Error::InvalidInput(format!(
                    "vertex map is not total: source vertex {v} has no image"
                )));
            };
            if target.index_of(&[w]).is_none() {
                return Err(Error::InvalidInput(format!(
                    "vertex map sends {v} to {w}, which is not a target vertex"
                )));
            }
        }
        Ok(SimplicialMap {
            source,
            target,
            images,
        })
    }

    pub fn identity(complex: &'a SimplicialComplex3) -> Self {
        SimplicialMap {
            source: complex,
            target: complex,
            images: complex.vertices().iter().map(|&v| (v, v)).collect(),
        }
    }

    pub fn source(&self) -> &SimplicialComplex3 {
        self.source
    }

    pub fn target(&self) -> &SimplicialComplex3 {
        self.target
    }

    pub fn image_of_vertex(&self, v: u32) -> u32 {
        self.images[&v]
    }

    /// Image vertex set of a simplex, deduplicated and sorted. Collisions
    /// are allowed; the result can have lower dimension.
    pub fn image_vertices(&self, simplex: &[u32]) -> Vec<u32> {
        let mut img: Vec<u32> = simplex.iter().map(|&v| self.images[&v]).collect();
        img.sort_unstable();
        img.dedup();
        img
    }

    /// True when every source simplex maps into a simplex of the target.
    /// It suffices to check facets: faces of a facet map into faces of its
    /// image simplex.
    pub fn validate(&self) -> bool {
        self.first_invalid_simplex().is_none()
    }

    /// The first facet (in index order) whose image vertex set spans no
    /// simplex of the target, if any.
    pub fn first_invalid_simplex(&self) -> Option<Vec<u32>> {
        for i in 0..self.source.n(3) {
            let f = self.source.simplex(3, i);
            let img = self.image_vertices(f);
            if self.target.index_of(&img).is_none() {
                return Some(f.to_vec());
            }
        }
        None
    }
}
