//! Named example complexes used by demos and tests: simplices and their
//! skeletons, complete graphs, paths and cycles, the Petersen graph, and the
//! Grötzsch graph (the Mycielskian of the 5-cycle).

use crate::complex::SimplicialComplex;

/// The full simplex on `m` vertices (dimension `m - 1`).
pub fn simplex(m: usize) -> SimplicialComplex {
    SimplicialComplex::new(m, vec![(0..m).collect()]).expect("m >= 1")
}

/// The boundary of the simplex on `m` vertices: all proper faces.
pub fn boundary_simplex(m: usize) -> SimplicialComplex {
    assert!(m >= 2, "boundary needs at least an edge");
    simplex(m).skeleton(m - 2)
}

/// The `d`-skeleton of the full simplex on `m` vertices.
pub fn simplex_skeleton(m: usize, d: usize) -> SimplicialComplex {
    simplex(m).skeleton(d)
}

/// `m` isolated points.
pub fn disjoint_points(m: usize) -> SimplicialComplex {
    SimplicialComplex::new(m, vec![]).expect("m >= 1")
}

/// The complete graph on `n` vertices, as a 1-dimensional complex.
pub fn complete_graph(n: usize) -> SimplicialComplex {
    if n == 1 {
        return simplex(1);
    }
    let mut facets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            facets.push(vec![i, j]);
        }
    }
    SimplicialComplex::new(n, facets).expect("n >= 1")
}

/// The path on `n` vertices.
pub fn path(n: usize) -> SimplicialComplex {
    let facets = (0..n.saturating_sub(1)).map(|i| vec![i, i + 1]).collect();
    SimplicialComplex::new(n, facets).expect("n >= 1")
}

/// The cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> SimplicialComplex {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let facets = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
    SimplicialComplex::new(n, facets).expect("n >= 3")
}

/// The Petersen graph (10 vertices, 15 edges, chromatic number 3).
pub fn petersen() -> SimplicialComplex {
    let mut facets = Vec::new();
    for i in 0..5 {
        facets.push(vec![i, (i + 1) % 5]); // outer pentagon
        facets.push(vec![i, i + 5]); // spokes
        facets.push(vec![5 + i, 5 + (i + 2) % 5]); // inner pentagram
    }
    SimplicialComplex::new(10, facets).expect("petersen")
}

/// The Grötzsch graph: the Mycielskian of the 5-cycle. Triangle-free on 11
/// vertices with 20 edges and chromatic number 4. Vertices 0..5 form the
/// cycle, 5..10 are the shadow copies, 10 is the apex.
pub fn grotzsch() -> SimplicialComplex {
    let mut facets = Vec::new();
    for i in 0..5 {
        facets.push(vec![i, (i + 1) % 5]);
    }
    for i in 0..5 {
        // shadow vertex 5+i is adjacent to the cycle neighbours of i
        facets.push(vec![5 + i, (i + 1) % 5]);
        facets.push(vec![5 + i, (i + 4) % 5]);
        facets.push(vec![5 + i, 10]);
    }
    SimplicialComplex::new(11, facets).expect("grotzsch")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Simplex;

    #[test]
    fn sizes_and_dimensions() {
        assert_eq!(simplex(5).dimension(), Some(4));
        assert_eq!(boundary_simplex(4).facets().len(), 4);
        assert_eq!(boundary_simplex(4).dimension(), Some(2));
        assert_eq!(complete_graph(7).facets().len(), 21);
        assert_eq!(cycle(5).facets().len(), 5);
        assert_eq!(path(4).facets().len(), 3);
        assert_eq!(disjoint_points(3).facets().len(), 3);
    }

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!(p.m(), 10);
        assert_eq!(p.facets().len(), 15);
        // 3-regular
        for v in 0..10 {
            let deg = p
                .edges()
                .iter()
                .filter(|&&(a, b)| a == v || b == v)
                .count();
            assert_eq!(deg, 3);
        }
    }

    #[test]
    fn grotzsch_shape() {
        let g = grotzsch();
        assert_eq!(g.m(), 11);
        assert_eq!(g.facets().len(), 20);
        // triangle-free: no 2-simplex is present
        for f in g.simplices_of_dimension(1) {
            let vs = f.vertices();
            for w in 0..11 {
                if vs.contains(&w) {
                    continue;
                }
                let tri = Simplex::new([vs[0], vs[1], w]);
                assert!(!g.contains(&tri));
            }
        }
    }
}
