//! The oriented line graph and its matrices.
//!
//! Doubling every edge of a graph G gives the symmetric digraph D(G). The
//! oriented line graph has the arcs of D(G) as its vertices, with an arc
//! from (u,v) to (v,w) whenever u != w, so its walks are exactly the
//! non-backtracking walks of G and its adjacency matrix B is the
//! non-backtracking matrix. This module builds that digraph together with
//! its underlying undirected graph, the ordinary line graph, the projection
//! sending an arc to its underlying edge, the orientation-induced partition
//! of arcs, and the signed line graph carrying the half of the underlying
//! graph's spectrum that the line graph misses. Vertex order everywhere is
//! the sorted arc order, so every matrix is reproducible entry for entry.

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::{GaussianInt, GaussianMatrix, IntMatrix};
use crate::graph::{validate_regular_connected, Digraph, Graph, RegularityError, SignedGraph};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("arc ({u},{v}) does not orient an edge of the base graph")]
    NotAnEdge { u: usize, v: usize },
    #[error("edge ({u},{v}) is oriented twice")]
    OrientedTwice { u: usize, v: usize },
    #[error("edge ({u},{v}) is left unoriented")]
    Unoriented { u: usize, v: usize },
    #[error("bit count {found} does not match edge count {edges}")]
    BitCountMismatch { edges: usize, found: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LineOpError {
    #[error("hypothesis violated: {0}")]
    Hypothesis(#[from] RegularityError),
    #[error("orientation belongs to a different graph")]
    OrientationMismatch,
    #[error("the signed operator needs an orientation")]
    MissingOrientation,
}

/// Dense indexing of the arcs of D(G): each edge {u,v} contributes the two
/// arcs (u,v) and (v,u), listed in sorted order. These indices are the
/// vertices of the oriented line graph.
#[derive(Clone, Debug)]
pub struct ArcIndex {
    arcs: Vec<(usize, usize)>,
    rev: Vec<usize>,
}

impl ArcIndex {
    pub fn new(g: &Graph) -> Self {
        let mut arcs = Vec::with_capacity(2 * g.edge_count());
        for &(u, v) in g.edges() {
            arcs.push((u, v));
            arcs.push((v, u));
        }
        arcs.sort_unstable();
        let rev: Vec<usize> = arcs
            .iter()
            .map(|&(u, v)| {
                arcs.binary_search(&(v, u))
                    .expect("both directions were inserted")
            })
            .collect();
        debug_assert!(rev.iter().enumerate().all(|(k, &r)| r != k && rev[r] == k));
        ArcIndex { arcs, rev }
    }

    /// Number of arcs, 2m.
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arc(&self, k: usize) -> (usize, usize) {
        self.arcs[k]
    }

    /// Arcs in index order (sorted lexicographically).
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn index_of(&self, u: usize, v: usize) -> Option<usize> {
        self.arcs.binary_search(&(u, v)).ok()
    }

    /// Index of the reversed arc; a fixed-point-free involution.
    pub fn reverse(&self, k: usize) -> usize {
        self.rev[k]
    }
}

/// A choice of one arc per edge of a base graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    base: Graph,
    chosen: Vec<(usize, usize)>,
}

impl Orientation {
    /// Orients every edge from its smaller endpoint to its larger one.
    pub fn lower_to_higher(g: &Graph) -> Self {
        Orientation {
            base: g.clone(),
            chosen: g.edges().to_vec(),
        }
    }

    /// One bit per edge in edge-list order: `false` keeps the stored
    /// direction (smaller to larger endpoint), `true` flips it.
    pub fn from_bits(g: &Graph, bits: &[bool]) -> Result<Self, OrientationError> {
        if bits.len() != g.edge_count() {
            return Err(OrientationError::BitCountMismatch {
                edges: g.edge_count(),
                found: bits.len(),
            });
        }
        let chosen = g
            .edges()
            .iter()
            .zip(bits)
            .map(|(&(u, v), &flip)| if flip { (v, u) } else { (u, v) })
            .collect();
        Ok(Orientation {
            base: g.clone(),
            chosen,
        })
    }

    /// Builds an orientation from explicit arcs, one per edge of `g`.
    pub fn from_arcs(g: &Graph, arcs: &[(usize, usize)]) -> Result<Self, OrientationError> {
        let mut chosen: Vec<Option<(usize, usize)>> = vec![None; g.edge_count()];
        for &(u, v) in arcs {
            let e = g
                .edge_index(u, v)
                .ok_or(OrientationError::NotAnEdge { u, v })?;
            if chosen[e].is_some() {
                let (a, b) = g.edges()[e];
                return Err(OrientationError::OrientedTwice { u: a, v: b });
            }
            chosen[e] = Some((u, v));
        }
        if let Some(e) = chosen.iter().position(Option::is_none) {
            let (u, v) = g.edges()[e];
            return Err(OrientationError::Unoriented { u, v });
        }
        Ok(Orientation {
            base: g.clone(),
            chosen: chosen
                .into_iter()
                .map(|a| a.expect("checked above"))
                .collect(),
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// Chosen arcs in base edge-list order.
    pub fn chosen(&self) -> &[(usize, usize)] {
        &self.chosen
    }

    pub fn chosen_arc(&self, edge: usize) -> (usize, usize) {
        self.chosen[edge]
    }

    /// The digraph with exactly the chosen arcs.
    pub fn to_digraph(&self) -> Digraph {
        Digraph::new(self.base.vertex_count(), self.chosen.iter().copied())
            .expect("one arc per edge of a simple graph")
    }
}

/// The projection sending each vertex of the underlying oriented line graph
/// (an arc of D(G)) to the vertex of the line graph it lies over (its
/// underlying edge). Every fiber has exactly two members, an arc and its
/// reverse.
#[derive(Clone, Debug)]
pub struct LineProjection {
    psi: Vec<usize>,
    fibers: Vec<[usize; 2]>,
}

impl LineProjection {
    fn new(g: &Graph, idx: &ArcIndex) -> Self {
        let psi: Vec<usize> = idx
            .arcs()
            .iter()
            .map(|&(u, v)| g.edge_index(u, v).expect("arc lies over an edge"))
            .collect();
        let mut fibers = vec![[usize::MAX; 2]; g.edge_count()];
        for (k, &e) in psi.iter().enumerate() {
            if fibers[e][0] == usize::MAX {
                fibers[e][0] = k;
            } else {
                assert_eq!(
                    fibers[e][1],
                    usize::MAX,
                    "fiber over edge {e} has more than two arcs"
                );
                fibers[e][1] = k;
            }
        }
        for (e, f) in fibers.iter().enumerate() {
            assert!(
                f[1] != usize::MAX,
                "fiber over edge {e} has fewer than two arcs"
            );
            assert_eq!(
                idx.reverse(f[0]),
                f[1],
                "fiber members over edge {e} are not reverses"
            );
        }
        LineProjection { psi, fibers }
    }

    /// Image of an arc: the index of its underlying edge.
    pub fn image(&self, arc: usize) -> usize {
        self.psi[arc]
    }

    pub fn psi(&self) -> &[usize] {
        &self.psi
    }

    /// The two arcs over an edge, smaller index first.
    pub fn fiber(&self, edge: usize) -> [usize; 2] {
        self.fibers[edge]
    }
}

/// D(G): every edge replaced by its two opposite arcs.
pub fn symmetric_digraph(g: &Graph) -> Digraph {
    let arcs = g.edges().iter().flat_map(|&(u, v)| [(u, v), (v, u)]);
    Digraph::new(g.vertex_count(), arcs).expect("doubling edges of a simple graph")
}

/// The oriented line graph: vertex k is the arc `idx.arc(k)` of D(G), and
/// (u,v) points to (v,w) whenever u != w.
pub fn oriented_line_graph(g: &Graph) -> (Digraph, ArcIndex) {
    let idx = ArcIndex::new(g);
    let mut arcs = Vec::new();
    for (k, &(u, v)) in idx.arcs().iter().enumerate() {
        for &w in g.neighbors(v) {
            if w != u {
                arcs.push((k, idx.index_of(v, w).expect("neighbor arc is indexed")));
            }
        }
    }
    let olg = Digraph::new(idx.arc_count(), arcs).expect("arc pairs are valid");
    (olg, idx)
}

/// The underlying undirected graph of the oriented line graph, the line
/// graph itself, and the projection between them.
pub fn underlying_and_line_graph(g: &Graph) -> (Graph, Graph, LineProjection) {
    let (olg, idx) = oriented_line_graph(g);
    let mut lstar_edges: Vec<(usize, usize)> = olg
        .arcs()
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    lstar_edges.sort_unstable();
    // An arc (u,v)->(v,w) and its opposite (v,w)->(u,v) would force u = w,
    // so the oriented line graph of a simple graph has no anti-parallel
    // pair and underlying edges are in bijection with its arcs.
    assert!(
        lstar_edges.windows(2).all(|w| w[0] != w[1]),
        "anti-parallel arcs in the oriented line graph of a simple graph"
    );
    let lstar = Graph::new(idx.arc_count(), lstar_edges).expect("valid underlying edges");

    let m = g.edge_count();
    let mut incident = vec![Vec::new(); g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(e);
        incident[v].push(e);
    }
    // Distinct edges share at most one endpoint, so each adjacent pair is
    // generated at exactly one vertex.
    let lg_edges = incident.iter().flat_map(|inc| {
        inc.iter()
            .enumerate()
            .flat_map(|(i, &e)| inc[i + 1..].iter().map(move |&f| (e.min(f), e.max(f))))
    });
    let lg = Graph::new(m, lg_edges).expect("edge indices are valid vertices");

    let proj = LineProjection::new(g, &idx);
    (lstar, lg, proj)
}

/// Splits the vertices of the oriented line graph into the chosen arcs (V0)
/// and their reverses (V1), both sorted. Each projection fiber has exactly
/// one member on each side.
pub fn orientation_partition(o: &Orientation, idx: &ArcIndex) -> (Vec<usize>, Vec<usize>) {
    let mut v0: Vec<usize> = o
        .chosen()
        .iter()
        .map(|&(u, v)| {
            idx.index_of(u, v)
                .expect("orientation arcs are arcs of the base graph")
        })
        .collect();
    let mut v1: Vec<usize> = v0.iter().map(|&k| idx.reverse(k)).collect();
    v0.sort_unstable();
    v1.sort_unstable();
    (v0, v1)
}

/// The signed line graph of a connected regular graph under an orientation.
///
/// An edge of the line graph joins base edges e and f sharing a vertex v,
/// and lifts to two edges of the underlying oriented line graph: the pair
/// {(u,v),(v,w)} and its reverse pair {(w,v),(v,u)}. Both lifts cross
/// between chosen arcs and reversed arcs, or neither does (asserted per
/// edge); they stay on one side exactly when the chosen arcs of e and f run
/// through v as a directed path. Such edges get sign +1, head-to-head and
/// tail-to-tail meetings get -1. With this convention the signed spectrum
/// is the part of the underlying oriented line graph's spectrum that the
/// plain line graph spectrum misses, for every orientation.
pub fn signed_line_graph(g: &Graph, o: &Orientation) -> Result<SignedGraph, LineOpError> {
    validate_regular_connected(g)?;
    if o.base() != g {
        return Err(LineOpError::OrientationMismatch);
    }
    let idx = ArcIndex::new(g);
    let mut in_v0 = vec![false; idx.arc_count()];
    for &(u, v) in o.chosen() {
        in_v0[idx.index_of(u, v).expect("chosen arc of a base edge")] = true;
    }
    let (_, lg, _) = underlying_and_line_graph(g);
    let signs = lg
        .edges()
        .iter()
        .map(|&(e, f)| {
            let (e0, e1) = g.edges()[e];
            let (f0, f1) = g.edges()[f];
            let v = if e0 == f0 || e0 == f1 { e0 } else { e1 };
            let u = if e0 == v { e1 } else { e0 };
            let w = if f0 == v { f1 } else { f0 };
            let uv = idx.index_of(u, v).expect("arc of base edge");
            let vw = idx.index_of(v, w).expect("arc of base edge");
            let crosses = in_v0[uv] != in_v0[vw];
            let reverse_crosses = in_v0[idx.reverse(vw)] != in_v0[idx.reverse(uv)];
            assert_eq!(
                crosses, reverse_crosses,
                "the two lifts of a line graph edge disagree"
            );
            if crosses {
                -1
            } else {
                1
            }
        })
        .collect();
    Ok(SignedGraph::new(lg, signs).expect("one sign per line graph edge"))
}

/// The matrices attached to the oriented line graph of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    /// B + Bt, the adjacency matrix of the underlying undirected graph.
    AdjacencyLstar,
    /// Adjacency matrix of the line graph.
    AdjacencyLine,
    /// B, the non-backtracking matrix.
    NonBacktracking,
    /// B - Bt.
    Skew,
    /// i(B - Bt): entry i per arc, -i per reversed arc.
    Hermitian,
    /// Signed adjacency of the signed line graph; needs an orientation.
    Signed,
}

#[derive(Clone, Debug)]
pub enum OperatorMatrix {
    Int(IntMatrix),
    Gaussian(GaussianMatrix),
}

impl OperatorMatrix {
    pub fn as_int(&self) -> Option<&IntMatrix> {
        match self {
            OperatorMatrix::Int(m) => Some(m),
            OperatorMatrix::Gaussian(_) => None,
        }
    }

    pub fn as_gaussian(&self) -> Option<&GaussianMatrix> {
        match self {
            OperatorMatrix::Gaussian(m) => Some(m),
            OperatorMatrix::Int(_) => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            OperatorMatrix::Int(m) => m.to_json(),
            OperatorMatrix::Gaussian(m) => m.to_json(),
        }
    }
}

/// Builds the requested operator matrix. The orientation is consulted only
/// for the signed kind, where it is mandatory.
pub fn operator_matrix(
    g: &Graph,
    kind: OperatorKind,
    o: Option<&Orientation>,
) -> Result<OperatorMatrix, LineOpError> {
    let matrix = match kind {
        OperatorKind::AdjacencyLine => {
            let (_, lg, _) = underlying_and_line_graph(g);
            OperatorMatrix::Int(lg.adjacency_matrix())
        }
        OperatorKind::Signed => {
            let o = o.ok_or(LineOpError::MissingOrientation)?;
            OperatorMatrix::Int(signed_line_graph(g, o)?.adjacency_matrix())
        }
        OperatorKind::NonBacktracking => {
            let (olg, _) = oriented_line_graph(g);
            OperatorMatrix::Int(olg.adjacency_matrix())
        }
        OperatorKind::AdjacencyLstar | OperatorKind::Skew | OperatorKind::Hermitian => {
            let (olg, _) = oriented_line_graph(g);
            let order = olg.vertex_count();
            match kind {
                OperatorKind::AdjacencyLstar => {
                    let mut m = IntMatrix::zero(order);
                    for &(a, b) in olg.arcs() {
                        m.set(a, b, BigInt::from(1));
                        m.set(b, a, BigInt::from(1));
                    }
                    OperatorMatrix::Int(m)
                }
                OperatorKind::Skew => {
                    let mut m = IntMatrix::zero(order);
                    for &(a, b) in olg.arcs() {
                        m.set(a, b, BigInt::from(1));
                        m.set(b, a, BigInt::from(-1));
                    }
                    OperatorMatrix::Int(m)
                }
                _ => {
                    let mut m = GaussianMatrix::zero(order);
                    for &(a, b) in olg.arcs() {
                        m.set(a, b, GaussianInt::i());
                        m.set(b, a, GaussianInt::i().neg());
                    }
                    OperatorMatrix::Gaussian(m)
                }
            }
        }
    };
    Ok(matrix)
}
