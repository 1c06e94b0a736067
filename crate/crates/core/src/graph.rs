//! Simple undirected graphs, simple digraphs, and signed graphs.
//!
//! Vertices are `0..n`. Undirected edges are stored as sorted `(u, v)` pairs
//! with `u < v`; arcs are ordered pairs. Loops and duplicate edges are
//! rejected at construction, so every value of these types is a valid graph.

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {vertices} vertices")]
    VertexOutOfRange { vertex: usize, vertices: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("duplicate edge ({u},{v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("duplicate arc ({u},{v})")]
    DuplicateArc { u: usize, v: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("sign count {found} does not match edge count {edges}")]
    SignCountMismatch { edges: usize, found: usize },
    #[error("sign must be +1 or -1, found {0}")]
    BadSign(i8),
}

/// Violated hypotheses of the regular connected validation.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RegularityError {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not regular: degrees range from {min} to {max}")]
    NotRegular { min: usize, max: usize },
    #[error("degree {degree} is below the required minimum of 3")]
    DegreeTooSmall { degree: usize },
}

/// An unlabeled simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoint order and edge order are
    /// normalized, so equal graphs compare equal.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: a,
                    vertices: n,
                });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: b,
                    vertices: n,
                });
            }
            if a == b {
                return Err(GraphError::Loop { vertex: a });
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge {
                u: w[0].0,
                v: w[0].1,
            });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: norm,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically, each with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of edge `{u, v}` in the sorted edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Symmetric 0/1 adjacency matrix with zero diagonal.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.n);
        for &(u, v) in &self.edges {
            m.set(u, v, BigInt::from(1));
            m.set(v, u, BigInt::from(1));
        }
        m
    }
}

/// Checks that a graph is connected and `d`-regular with `d >= 3`, returning
/// `(d, n, m)`.
pub fn validate_regular_connected(g: &Graph) -> Result<(usize, usize, usize), RegularityError> {
    if g.vertex_count() == 0 {
        return Err(RegularityError::Empty);
    }
    if !g.is_connected() {
        return Err(RegularityError::NotConnected);
    }
    let degrees: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let min = *degrees.iter().min().expect("nonempty");
    let max = *degrees.iter().max().expect("nonempty");
    if min != max {
        return Err(RegularityError::NotRegular { min, max });
    }
    if min < 3 {
        return Err(RegularityError::DegreeTooSmall { degree: min });
    }
    Ok((min, g.vertex_count(), g.edge_count()))
}

/// A simple directed graph on vertices `0..n`. Anti-parallel arc pairs are
/// allowed; loops and duplicate arcs are not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (a, b) in arcs {
            if a >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: a,
                    vertices: n,
                });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: b,
                    vertices: n,
                });
            }
            if a == b {
                return Err(GraphError::Loop { vertex: a });
            }
            norm.push((a, b));
        }
        norm.sort();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateArc {
                u: w[0].0,
                v: w[0].1,
            });
        }
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in &norm {
            out[u].push(v);
            inn[v].push(u);
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Digraph {
            n,
            arcs: norm,
            out,
            inn,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs sorted lexicographically.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u].binary_search(&v).is_ok()
    }

    /// The simple undirected graph obtained by forgetting directions.
    /// Anti-parallel pairs collapse to a single edge.
    pub fn underlying_graph(&self) -> Graph {
        let mut edges: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort();
        edges.dedup();
        Graph::new(self.n, edges).expect("arcs of a digraph form valid edges")
    }

    /// 0/1 matrix with entry (u,v) = 1 iff the arc (u,v) exists.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.n);
        for &(u, v) in &self.arcs {
            m.set(u, v, BigInt::from(1));
        }
        m
    }

    /// JSON arc list `[[u, v], ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        self.arcs
            .iter()
            .map(|&(u, v)| serde_json::Value::from(vec![u, v]))
            .collect::<Vec<_>>()
            .into()
    }
}

/// A graph with a `+1`/`-1` sign on every edge, indexed like the base edge
/// list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    base: Graph,
    signs: Vec<i8>,
}

impl SignedGraph {
    pub fn new(base: Graph, signs: Vec<i8>) -> Result<Self, GraphError> {
        if signs.len() != base.edge_count() {
            return Err(GraphError::SignCountMismatch {
                edges: base.edge_count(),
                found: signs.len(),
            });
        }
        if let Some(&s) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(GraphError::BadSign(s));
        }
        Ok(SignedGraph { base, signs })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<i8> {
        self.base.edge_index(u, v).map(|k| self.signs[k])
    }

    /// Symmetric adjacency matrix with signed entries.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.base.vertex_count());
        for (k, &(u, v)) in self.base.edges().iter().enumerate() {
            let s = BigInt::from(self.signs[k]);
            m.set(u, v, s.clone());
            m.set(v, u, s);
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_normalizes() {
        let g = Graph::new(4, vec![(3, 1), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (1, 3)]);
        assert_eq!(g.degree(1), 3);
        assert!(g.has_edge(1, 3) && g.has_edge(3, 1));
        assert_eq!(g.edge_index(3, 1), Some(2));
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(
            Graph::new(2, vec![(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
        assert!(matches!(
            Graph::new(2, vec![(1, 1)]),
            Err(GraphError::Loop { vertex: 1 })
        ));
        assert!(matches!(
            Graph::new(3, vec![(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        ));
    }

    #[test]
    fn handshake_holds() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        let degree_sum: usize = (0..5).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
    }

    #[test]
    fn connectivity() {
        let joined = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(joined.is_connected());
        let split = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
        assert!(Graph::new(0, vec![]).unwrap().is_connected());
        assert!(!Graph::new(2, vec![]).unwrap().is_connected());
    }

    #[test]
    fn regular_validation_verdicts() {
        let k4 = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(validate_regular_connected(&k4), Ok((3, 4, 6)));

        let c4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(
            validate_regular_connected(&c4),
            Err(RegularityError::DegreeTooSmall { degree: 2 })
        );

        // Triangle with a pendant vertex: connected but irregular.
        let pendant = Graph::new(4, vec![(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            validate_regular_connected(&pendant),
            Err(RegularityError::NotRegular { min: 1, max: 3 })
        );

        let two_triangles =
            Graph::new(6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(
            validate_regular_connected(&two_triangles),
            Err(RegularityError::NotConnected)
        );

        assert_eq!(
            validate_regular_connected(&Graph::new(0, vec![]).unwrap()),
            Err(RegularityError::Empty)
        );
    }

    #[test]
    fn digraph_antiparallel_allowed() {
        let d = Digraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(d.arc_count(), 2);
        assert!(d.has_arc(0, 1) && d.has_arc(1, 0));
        assert_eq!(d.underlying_graph().edges(), &[(0, 1)]);
        assert!(matches!(
            Digraph::new(2, vec![(0, 1), (0, 1)]),
            Err(GraphError::DuplicateArc { .. })
        ));
    }

    #[test]
    fn signed_graph_validation() {
        let base = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(SignedGraph::new(base.clone(), vec![1]).is_err());
        assert!(SignedGraph::new(base.clone(), vec![1, 2]).is_err());
        let s = SignedGraph::new(base, vec![1, -1]).unwrap();
        assert_eq!(s.sign(1, 0), Some(1));
        assert_eq!(s.sign(2, 1), Some(-1));
        assert_eq!(s.sign(0, 2), None);
        let m = s.adjacency_matrix();
        assert_eq!(*m.get(1, 2), BigInt::from(-1));
        assert!(m.is_symmetric());
    }
}
