//! Triangulations of a convex `N`-gon with vertices `0..N` labelled
//! clockwise, and the correspondence with structures on `P_{N-1}` given by
//! triangle counts at vertices `1..N`.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::bijections::plan::plan_from_structure;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind};
use crate::structure::ArithmeticalStructure;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangulation {
    size: usize,
    triangles: BTreeSet<[usize; 3]>,
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl Triangulation {
    /// Validates that `triangles` triangulate the `size`-gon.
    pub fn new(size: usize, triangles: impl IntoIterator<Item = [usize; 3]>) -> Result<Self> {
        if size < 3 {
            return Err(Error::Triangulation(format!("polygon needs 3 vertices, got {size}")));
        }
        let mut set = BTreeSet::new();
        let mut count = 0;
        for mut t in triangles {
            count += 1;
            t.sort_unstable();
            if t[2] >= size || t[0] == t[1] || t[1] == t[2] {
                return Err(Error::Triangulation(format!("bad triangle {t:?}")));
            }
            if !set.insert(t) {
                return Err(Error::Triangulation(format!("duplicate triangle {t:?}")));
            }
        }
        if count != size - 2 {
            return Err(Error::Triangulation(format!(
                "{count} triangles, a {size}-gon needs {}",
                size - 2
            )));
        }
        let tri = Triangulation { size, triangles: set };
        tri.check_geometry()?;
        Ok(tri)
    }

    fn check_geometry(&self) -> Result<()> {
        let edges: BTreeSet<(usize, usize)> = self
            .triangles
            .iter()
            .flat_map(|t| [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])])
            .collect();
        let edges: Vec<_> = edges.into_iter().collect();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                if crosses(e, f) {
                    return Err(Error::Triangulation(format!("edges {e:?} and {f:?} cross")));
                }
            }
        }
        let n = self.size;
        for v in 0..n {
            let (a, b) = if v + 1 < n { (v, v + 1) } else { (0, n - 1) };
            let covering = self.triangles.iter().filter(|t| t.contains(&a) && t.contains(&b)).count();
            if covering != 1 {
                return Err(Error::Triangulation(format!(
                    "boundary edge {a}-{b} lies in {covering} triangles"
                )));
            }
        }
        Ok(())
    }

    /// Number of polygon vertices.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn triangles(&self) -> impl Iterator<Item = &[usize; 3]> {
        self.triangles.iter()
    }

    /// Diagonals (non-boundary edges), each as `(low, high)`.
    pub fn diagonals(&self) -> BTreeSet<(usize, usize)> {
        let n = self.size;
        self.triangles
            .iter()
            .flat_map(|t| [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])])
            .filter(|&(a, b)| b - a != 1 && !(a == 0 && b == n - 1))
            .collect()
    }

    /// Quiddity sequence `(D_0, .., D_{N-1})`: triangles at each vertex.
    pub fn quiddity(&self) -> Vec<usize> {
        let mut q = vec![0; self.size];
        for t in &self.triangles {
            for &v in t {
                q[v] += 1;
            }
        }
        q
    }

    /// The fan from vertex 0, which corresponds to the Laplacian structure.
    pub fn fan(size: usize) -> Result<Self> {
        Triangulation::new(size, (1..size.saturating_sub(1)).map(|j| [0, j, j + 1]))
    }

    /// Glues a triangle on the boundary edge `(p - 1, p)`: the new vertex
    /// takes label `p` and old labels `>= p` move up by one.
    fn glue(&self, p: usize) -> Triangulation {
        let bump = |v: usize| if v >= p { v + 1 } else { v };
        let mut triangles: BTreeSet<[usize; 3]> =
            self.triangles.iter().map(|t| [bump(t[0]), bump(t[1]), bump(t[2])]).collect();
        triangles.insert([p - 1, p, p + 1]);
        Triangulation { size: self.size + 1, triangles }
    }
}

pub fn quiddity(t: &Triangulation) -> Vec<usize> {
    t.quiddity()
}

/// `(D_1, .., D_{N-1})` as a structure on `P_{N-1}`.
pub fn structure_from_triangulation(t: &Triangulation) -> Result<ArithmeticalStructure> {
    let q = t.quiddity();
    let d: Vec<BigUint> = q[1..].iter().map(|&x| BigUint::from(x)).collect();
    ArithmeticalStructure::from_d(Graph::path(t.size - 1)?, d)
}

/// Inverse of [`structure_from_triangulation`]: replays the structure's
/// subdivision plan as triangle gluings on the fan of the base polygon.
pub fn triangulation_from_structure(s: &ArithmeticalStructure) -> Result<Triangulation> {
    s.expect_kind(GraphKind::Path)?;
    let plan = plan_from_structure(s)?;
    let mut t = Triangulation::fan(plan.m() + 1)?;
    for &edge in plan.b() {
        t = t.glue(edge + 1);
    }
    debug_assert!(t.check_geometry().is_ok());
    Ok(t)
}

/// Clockwise rotation: vertex `v` becomes `v + 1 mod N`.
pub fn rotate_triangulation(t: &Triangulation) -> Triangulation {
    let n = t.size;
    let triangles = t
        .triangles
        .iter()
        .map(|tri| {
            let mut r = tri.map(|v| (v + 1) % n);
            r.sort_unstable();
            r
        })
        .collect();
    Triangulation { size: n, triangles }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every triangulation of the polygon on the given vertex labels, by
    /// choosing the apex of the triangle on the first-last edge.
    fn all_triangulations(vertices: &[usize]) -> Vec<Vec<[usize; 3]>> {
        if vertices.len() < 3 {
            return vec![vec![]];
        }
        let (first, last) = (vertices[0], *vertices.last().unwrap());
        let mut out = Vec::new();
        for k in 1..vertices.len() - 1 {
            for left in all_triangulations(&vertices[..=k]) {
                for right in all_triangulations(&vertices[k..]) {
                    let mut t = left.clone();
                    t.extend(right.iter().copied());
                    t.push([first, vertices[k], last]);
                    out.push(t);
                }
            }
        }
        out
    }

    fn pentagon() -> Triangulation {
        Triangulation::new(5, [[0, 1, 4], [1, 3, 4], [1, 2, 3]]).unwrap()
    }

    #[test]
    fn pentagon_example() {
        let t = pentagon();
        assert_eq!(t.quiddity(), vec![1, 3, 1, 2, 2]);
        assert_eq!(t.diagonals(), BTreeSet::from([(1, 3), (1, 4)]));
        assert_eq!(structure_from_triangulation(&t).unwrap().d_u64(), vec![3, 1, 2, 2]);
    }

    #[test]
    fn hexagon_example_by_gluing() {
        let glued = pentagon().glue(3);
        let expect = Triangulation::new(6, [[0, 1, 5], [1, 4, 5], [1, 2, 4], [2, 3, 4]]).unwrap();
        assert_eq!(glued, expect);
        assert_eq!(glued.quiddity(), vec![1, 3, 2, 1, 3, 2]);
        assert_eq!(structure_from_triangulation(&glued).unwrap().d_u64(), vec![3, 2, 1, 3, 2]);
    }

    #[test]
    fn triangle_is_p2() {
        let t = Triangulation::new(3, [[0, 1, 2]]).unwrap();
        assert_eq!(t.quiddity(), vec![1, 1, 1]);
        let s = structure_from_triangulation(&t).unwrap();
        assert_eq!(s.d_u64(), vec![1, 1]);
        assert_eq!(triangulation_from_structure(&s).unwrap(), t);
    }

    #[test]
    fn invalid_triangulations() {
        assert!(Triangulation::new(4, [[0, 1, 2], [1, 2, 3]]).is_err());
        assert!(Triangulation::new(4, [[0, 1, 2]]).is_err());
        assert!(Triangulation::new(4, [[0, 1, 2], [0, 1, 2]]).is_err());
        assert!(Triangulation::new(5, [[0, 1, 3], [0, 2, 4], [2, 3, 4]]).is_err());
        assert!(Triangulation::new(2, []).is_err());
    }

    #[test]
    fn bijection_with_structures_up_to_octagon() {
        for size in 3..=8 {
            let verts: Vec<usize> = (0..size).collect();
            let mut seen = std::collections::HashSet::new();
            let all = all_triangulations(&verts);
            for raw in &all {
                let t = Triangulation::new(size, raw.iter().copied()).unwrap();
                let q = t.quiddity();
                assert_eq!(q.iter().sum::<usize>(), 3 * (size - 2));
                let s = structure_from_triangulation(&t).unwrap();
                assert_eq!(triangulation_from_structure(&s).unwrap(), t);
                assert!(seen.insert(s));
                let rot = rotate_triangulation(&t);
                let rq = rot.quiddity();
                for v in 0..size {
                    assert_eq!(rq[(v + 1) % size], q[v]);
                }
            }
            let expected = crate::combinatorics::catalan(size as u64 - 2);
            assert_eq!(BigUint::from(seen.len()), expected);
        }
    }
}
