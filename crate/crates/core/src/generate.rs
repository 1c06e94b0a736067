//! Generators for the standard graph families used throughout the crate.

use crate::graph::{Digraph, Graph, GraphError};

/// Edgeless graph on `n` vertices.
pub fn empty(n: usize) -> Graph {
    Graph::new(n, Vec::new()).expect("no edges to validate")
}

/// The symmetric digraph on `q` vertices with every ordered pair of
/// distinct vertices as an arc: the complete graph with each edge doubled.
/// `q` may be 0 or 1, giving an arcless digraph.
pub fn complete_symmetric_digraph(q: usize) -> Digraph {
    let arcs = (0..q).flat_map(|u| (0..q).filter(move |&v| v != u).map(move |v| (u, v)));
    Digraph::new(q, arcs).expect("distinct ordered pairs below q")
}

/// Complete graph `K_q` on vertices `0..q`, `q >= 1`.
pub fn complete_graph(q: usize) -> Result<Graph, GraphError> {
    if q == 0 {
        return Err(GraphError::InvalidParameter(
            "complete graph needs at least 1 vertex".into(),
        ));
    }
    let edges = (0..q).flat_map(|u| (u + 1..q).map(move |v| (u, v)));
    Ok(Graph::new(q, edges).expect("distinct pairs below q"))
}

/// Path on `n` vertices, `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let edges = (1..n).map(|v| (v - 1, v));
    Graph::new(n, edges).expect("consecutive pairs below n")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges = (0..n).map(|v| (v, (v + 1) % n));
    Graph::new(n, edges)
}

/// Complete bipartite graph `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::new(a + b, edges).expect("cross pairs below a+b")
}

/// The Petersen graph: vertices are the 2-element subsets of a 5-element
/// set, adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let mut edges = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::new(pairs.len(), edges).expect("subset indices are in range")
}

/// Hypercube graph `Q_d` on `2^d` vertices; vertices adjacent when their
/// labels differ in exactly one bit. `d <= 16` keeps the order sane.
pub fn hypercube(d: u32) -> Result<Graph, GraphError> {
    if d > 16 {
        return Err(GraphError::InvalidParameter(format!(
            "hypercube dimension {d} exceeds the supported maximum 16"
        )));
    }
    let n = 1usize << d;
    let edges = (0..n).flat_map(|u| {
        (0..d)
            .map(move |bit| (u, u ^ (1 << bit)))
            .filter(move |&(u, v)| u < v)
    });
    Graph::new(n, edges)
}

/// Circulant graph on `n` vertices: `u ~ v` when `|u - v| mod n` is one of
/// the given jumps. Jumps are taken modulo `n`; a jump of `0` or `n/2`'s
/// complementary duplicates are handled by edge normalization, but a jump
/// congruent to `0` is rejected since it would demand loops.
pub fn circulant(n: usize, jumps: &[usize]) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter(
            "circulant needs at least 1 vertex".into(),
        ));
    }
    let mut residues: Vec<usize> = Vec::new();
    for &j in jumps {
        let r = j % n;
        if r == 0 {
            return Err(GraphError::InvalidParameter(format!(
                "circulant jump {j} is congruent to 0 mod {n}"
            )));
        }
        // s and n - s give the same edge set.
        residues.push(r.min(n - r));
    }
    residues.sort_unstable();
    residues.dedup();
    let mut edges = Vec::new();
    for v in 0..n {
        for &r in &residues {
            let w = (v + r) % n;
            edges.push((v.min(w), v.max(w)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_regular_connected;

    #[test]
    fn complete_counts() {
        let k5 = complete_graph(5).unwrap();
        assert_eq!((k5.vertex_count(), k5.edge_count()), (5, 10));
        assert_eq!(validate_regular_connected(&k5), Ok((4, 5, 10)));
        assert_eq!(complete_graph(1).unwrap().edge_count(), 0);
        assert_eq!(complete_graph(6).unwrap().edge_count(), 15);
        assert!(complete_graph(0).is_err());
    }

    #[test]
    fn complete_symmetric_digraph_doubles() {
        let d3 = complete_symmetric_digraph(3);
        assert_eq!((d3.vertex_count(), d3.arc_count()), (3, 6));
        assert!(d3.has_arc(2, 0) && d3.has_arc(0, 2));
        assert_eq!(complete_symmetric_digraph(0).arc_count(), 0);
        assert_eq!(complete_symmetric_digraph(1).arc_count(), 0);
    }

    #[test]
    fn path_and_cycle() {
        let p4 = path(4);
        assert_eq!(p4.edges(), &[(0, 1), (1, 2), (2, 3)]);
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert!(cycle(2).is_err());
    }

    #[test]
    fn bipartite_structure() {
        let k23 = complete_bipartite(2, 3);
        assert_eq!((k23.vertex_count(), k23.edge_count()), (5, 6));
        assert!(!k23.has_edge(0, 1));
        assert!(!k23.has_edge(2, 3));
        assert!(k23.has_edge(0, 2) && k23.has_edge(1, 4));
    }

    #[test]
    fn petersen_is_cubic_and_triangle_free() {
        let p = petersen();
        assert_eq!(validate_regular_connected(&p), Ok((3, 10, 15)));
        for &(u, v) in p.edges() {
            for w in 0..10 {
                assert!(
                    !(p.has_edge(u, w) && p.has_edge(v, w)),
                    "triangle {u},{v},{w}"
                );
            }
        }
    }

    #[test]
    fn hypercube_structure() {
        let q3 = hypercube(3).unwrap();
        assert_eq!(validate_regular_connected(&q3), Ok((3, 8, 12)));
        // Bipartite by parity, so no odd cycles; check no triangles.
        for &(u, v) in q3.edges() {
            for w in 0..8 {
                assert!(!(q3.has_edge(u, w) && q3.has_edge(v, w)));
            }
        }
        assert_eq!(hypercube(0).unwrap().vertex_count(), 1);
        assert!(hypercube(17).is_err());
    }

    #[test]
    fn circulant_families() {
        // C5 as a circulant.
        assert_eq!(circulant(5, &[1]).unwrap(), cycle(5).unwrap());
        // K5 as a circulant.
        assert_eq!(circulant(5, &[1, 2]).unwrap(), complete_graph(5).unwrap());
        // 4-regular on 8 vertices.
        let c = circulant(8, &[1, 3]).unwrap();
        assert_eq!(validate_regular_connected(&c), Ok((4, 8, 16)));
        // Jump n/2 contributes a perfect matching, degree 1 from that jump.
        let m = circulant(6, &[3]).unwrap();
        assert!((0..6).all(|v| m.degree(v) == 1));
        assert!(circulant(6, &[6]).is_err());
        assert!(circulant(0, &[1]).is_err());
    }
}
