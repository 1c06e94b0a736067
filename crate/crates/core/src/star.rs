//! Star colorings, neighborhood-constrained homomorphisms, and the
//! divisibility consequence for underlying graphs of oriented line graphs.
//!
//! A star coloring is a proper coloring with no four-vertex path in only
//! two colors. Every star coloring converts to an out-neighbourhood
//! injective homomorphism from an orientation of the graph into a complete
//! symmetric digraph. The reverse conversion is attempted, not assumed:
//! out-neighbourhood injectivity guarantees a proper coloring but not a
//! star coloring (orienting a four-vertex path end to end and mapping its
//! vertices alternately is a counterexample), so the converter surfaces
//! any violation it finds. Locally bijective homomorphisms certify
//! characteristic polynomial divisibility, exercised here through the
//! divisor polynomial attached to complete graphs.

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::{charpoly_exact, poly_product_power, IntPolynomial, PolyDivError};
use crate::generate;
use crate::graph::{validate_regular_connected, Digraph, Graph, RegularityError};
use crate::identities::{formula_lstar, RegularSpectrumHandle};
use crate::lineops::Orientation;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {found} entries for {expected} vertices")]
    WrongLength { expected: usize, found: usize },
    #[error("vertex {vertex} has color {color}, outside 0..{q}")]
    ColorOutOfRange {
        vertex: usize,
        color: usize,
        q: usize,
    },
}

/// A total assignment of colors `0..q` to the vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    g: Graph,
    f: Vec<usize>,
    q: usize,
}

impl Coloring {
    pub fn new(g: &Graph, f: Vec<usize>, q: usize) -> Result<Self, ColoringError> {
        if f.len() != g.vertex_count() {
            return Err(ColoringError::WrongLength {
                expected: g.vertex_count(),
                found: f.len(),
            });
        }
        if let Some(vertex) = (0..f.len()).find(|&v| f[v] >= q) {
            return Err(ColoringError::ColorOutOfRange {
                vertex,
                color: f[vertex],
                q,
            });
        }
        Ok(Coloring { g: g.clone(), f, q })
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    /// The color of each vertex.
    pub fn f(&self) -> &[usize] {
        &self.f
    }

    /// Number of available colors.
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.f)
    }
}

/// Witness that a coloring is not a star coloring.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StarViolation {
    #[error("edge ({u},{v}) joins two vertices of the same color")]
    ImproperEdge { u: usize, v: usize },
    #[error("path {path:?} uses only two colors")]
    BicoloredPath { path: [usize; 4] },
}

/// Checks properness and the absence of a two-colored path on four
/// distinct vertices, returning the first offending edge or path.
pub fn is_star_coloring(c: &Coloring) -> Result<(), StarViolation> {
    let g = c.graph();
    let f = c.f();
    for &(u, v) in g.edges() {
        if f[u] == f[v] {
            return Err(StarViolation::ImproperEdge { u, v });
        }
    }
    // Every four-vertex path u-v-w-x is enumerated at its middle edge.
    for &(v, w) in g.edges() {
        for (a, b) in [(v, w), (w, v)] {
            for &u in g.neighbors(a) {
                if u == b || f[u] != f[b] {
                    continue;
                }
                for &x in g.neighbors(b) {
                    if x != a && x != u && f[x] == f[a] {
                        return Err(StarViolation::BicoloredPath { path: [u, a, b, x] });
                    }
                }
            }
        }
    }
    Ok(())
}

struct StarSolver<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    colors: Vec<Option<usize>>,
    q: usize,
}

impl StarSolver<'_> {
    /// True when the assignment at `v` creates no violation among colored
    /// vertices. Checking every path through `v` as each vertex is colored
    /// catches each violating structure when its last vertex arrives.
    fn consistent(&self, v: usize) -> bool {
        let fv = self.colors[v].expect("v was just assigned");
        for &u in self.g.neighbors(v) {
            if self.colors[u] == Some(fv) {
                return false;
            }
        }
        // v as an endpoint: v-a-b-c.
        for &a in self.g.neighbors(v) {
            let Some(fa) = self.colors[a] else { continue };
            for &b in self.g.neighbors(a) {
                if b == v || self.colors[b] != Some(fv) {
                    continue;
                }
                for &c in self.g.neighbors(b) {
                    if c != a && c != v && self.colors[c] == Some(fa) {
                        return false;
                    }
                }
            }
        }
        // v as an inner vertex: u-v-w-x, with the reversed path covered by
        // the symmetry of the forbidden pattern.
        for &w in self.g.neighbors(v) {
            let Some(fw) = self.colors[w] else { continue };
            for &u in self.g.neighbors(v) {
                if u == w || self.colors[u] != Some(fw) {
                    continue;
                }
                for &x in self.g.neighbors(w) {
                    if x != v && x != u && self.colors[x] == Some(fv) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn extend(&mut self, pos: usize) -> bool {
        let Some(&v) = self.order.get(pos) else {
            return true;
        };
        // Color classes may be permuted, so vertex 0 can be pinned to
        // color 0.
        let candidates = if v == 0 { 0..self.q.min(1) } else { 0..self.q };
        for color in candidates {
            self.colors[v] = Some(color);
            if self.consistent(v) && self.extend(pos + 1) {
                return true;
            }
        }
        self.colors[v] = None;
        false
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarSearchOutcome {
    Found { q: usize, coloring: Coloring },
    ExceedsMax { qmax: usize },
}

/// Smallest `q <= qmax` admitting a star q-coloring, by backtracking over
/// vertices in descending degree order. The witness is rechecked before it
/// is returned.
pub fn star_chromatic_number(g: &Graph, qmax: usize) -> StarSearchOutcome {
    assert!(qmax >= 1, "qmax must be at least 1");
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for q in 0..=qmax {
        let mut solver = StarSolver {
            g,
            order: order.clone(),
            colors: vec![None; n],
            q,
        };
        if solver.extend(0) {
            let f: Vec<usize> = solver
                .colors
                .iter()
                .map(|c| c.expect("search completed, so every vertex is colored"))
                .collect();
            let coloring = Coloring::new(g, f, q).expect("solver colors stay in range");
            assert!(
                is_star_coloring(&coloring).is_ok(),
                "solver returned a non-star coloring"
            );
            return StarSearchOutcome::Found { q, coloring };
        }
    }
    StarSearchOutcome::ExceedsMax { qmax }
}

/// A total mapping of source vertices to target vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    pub psi: Vec<usize>,
}

impl VertexMap {
    pub fn new(psi: Vec<usize>) -> Self {
        VertexMap { psi }
    }

    pub fn identity(n: usize) -> Self {
        VertexMap {
            psi: (0..n).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.psi)
    }
}

/// Witness that a map is not locally bijective.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LbhViolation {
    #[error("map has {found} entries for {expected} vertices")]
    WrongLength { expected: usize, found: usize },
    #[error("vertex {vertex} maps to {image}, not a target vertex")]
    ImageOutOfRange { vertex: usize, image: usize },
    #[error("vertex {vertex} has {src_size} neighbors but its image has {dst_size}")]
    SizeMismatch {
        vertex: usize,
        src_size: usize,
        dst_size: usize,
    },
    #[error("neighbor {neighbor} of vertex {vertex} maps outside the image's neighborhood")]
    ImageNotNeighbor { vertex: usize, neighbor: usize },
    #[error("neighbors {first} and {second} of vertex {vertex} share an image")]
    Collision {
        vertex: usize,
        first: usize,
        second: usize,
    },
}

/// Checks that the map restricts to a bijection from every neighborhood
/// onto the image vertex's neighborhood.
pub fn is_lbh(src: &Graph, dst: &Graph, map: &VertexMap) -> Result<(), LbhViolation> {
    let psi = &map.psi;
    if psi.len() != src.vertex_count() {
        return Err(LbhViolation::WrongLength {
            expected: src.vertex_count(),
            found: psi.len(),
        });
    }
    if let Some(vertex) = (0..psi.len()).find(|&v| psi[v] >= dst.vertex_count()) {
        return Err(LbhViolation::ImageOutOfRange {
            vertex,
            image: psi[vertex],
        });
    }
    for v in 0..src.vertex_count() {
        let nbrs = src.neighbors(v);
        if nbrs.len() != dst.degree(psi[v]) {
            return Err(LbhViolation::SizeMismatch {
                vertex: v,
                src_size: nbrs.len(),
                dst_size: dst.degree(psi[v]),
            });
        }
        for &u in nbrs {
            if !dst.has_edge(psi[v], psi[u]) {
                return Err(LbhViolation::ImageNotNeighbor {
                    vertex: v,
                    neighbor: u,
                });
            }
        }
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if psi[u] == psi[w] {
                    return Err(LbhViolation::Collision {
                        vertex: v,
                        first: u,
                        second: w,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Whether an out-neighborhood map must be injective or bijective.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OnhMode {
    Injective,
    Bijective,
}

/// Witness that a digraph map is not out-neighbourhood injective (or
/// bijective).
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OnhViolation {
    #[error("map has {found} entries for {expected} vertices")]
    WrongLength { expected: usize, found: usize },
    #[error("vertex {vertex} maps to {image}, not a target vertex")]
    ImageOutOfRange { vertex: usize, image: usize },
    #[error("vertex {vertex} has {src_size} out-neighbors but its image has {dst_size}")]
    SizeMismatch {
        vertex: usize,
        src_size: usize,
        dst_size: usize,
    },
    #[error("out-neighbor {target} of vertex {vertex} maps outside the image's out-neighborhood")]
    ImageNotOutNeighbor { vertex: usize, target: usize },
    #[error("out-neighbors {first} and {second} of vertex {vertex} share an image")]
    Collision {
        vertex: usize,
        first: usize,
        second: usize,
    },
}

/// Checks that the map sends every out-neighborhood into (injective) or
/// onto (bijective) the out-neighborhood of the image vertex, injectively.
pub fn is_onh(
    src: &Digraph,
    dst: &Digraph,
    map: &VertexMap,
    mode: OnhMode,
) -> Result<(), OnhViolation> {
    let psi = &map.psi;
    if psi.len() != src.vertex_count() {
        return Err(OnhViolation::WrongLength {
            expected: src.vertex_count(),
            found: psi.len(),
        });
    }
    if let Some(vertex) = (0..psi.len()).find(|&v| psi[v] >= dst.vertex_count()) {
        return Err(OnhViolation::ImageOutOfRange {
            vertex,
            image: psi[vertex],
        });
    }
    for v in 0..src.vertex_count() {
        let out = src.out_neighbors(v);
        if mode == OnhMode::Bijective && out.len() != dst.out_degree(psi[v]) {
            return Err(OnhViolation::SizeMismatch {
                vertex: v,
                src_size: out.len(),
                dst_size: dst.out_degree(psi[v]),
            });
        }
        for &w in out {
            if !dst.has_arc(psi[v], psi[w]) {
                return Err(OnhViolation::ImageNotOutNeighbor {
                    vertex: v,
                    target: w,
                });
            }
        }
        for (i, &u) in out.iter().enumerate() {
            for &w in &out[i + 1..] {
                if psi[u] == psi[w] {
                    return Err(OnhViolation::Collision {
                        vertex: v,
                        first: u,
                        second: w,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Converts a star coloring into an orientation plus an out-neighbourhood
/// injective map into the complete symmetric digraph on `q` vertices.
///
/// Each bicolored subgraph of a star coloring splits into stars, so every
/// edge has a well-defined center (its endpoint with two or more
/// same-colored-as-the-other-endpoint neighbors, or the smaller endpoint
/// of a bare edge) and is oriented leaf to center; the map is the coloring
/// itself. The output is checked before it is returned.
pub fn coloring_to_onih(c: &Coloring) -> Result<(Orientation, VertexMap), StarViolation> {
    is_star_coloring(c)?;
    let g = c.graph();
    let f = c.f();
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let du = g.neighbors(u).iter().filter(|&&w| f[w] == f[v]).count();
            let dv = g.neighbors(v).iter().filter(|&&w| f[w] == f[u]).count();
            assert!(
                du < 2 || dv < 2,
                "a bicolored component of a star coloring cannot contain a path on 4 vertices"
            );
            let center = if du >= 2 {
                u
            } else if dv >= 2 {
                v
            } else {
                u.min(v)
            };
            let leaf = u + v - center;
            (leaf, center)
        })
        .collect();
    let o = Orientation::from_arcs(g, &arcs).expect("one arc per edge of the base graph");
    let map = VertexMap::new(f.to_vec());
    let dst = generate::complete_symmetric_digraph(c.q());
    assert!(
        is_onh(&o.to_digraph(), &dst, &map, OnhMode::Injective).is_ok(),
        "conversion of a star coloring must be out-neighbourhood injective"
    );
    Ok((o, map))
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OnihToColoringError {
    #[error("input is not an out-neighbourhood injective homomorphism: {0}")]
    NotOnih(OnhViolation),
    /// The map genuinely is out-neighbourhood injective into the complete
    /// symmetric digraph, yet reading it as a coloring of the base graph
    /// gives a proper coloring that is not a star coloring. Such inputs
    /// exist (orient a four-vertex path end to end and map its vertices
    /// alternately), so the conversion reports them instead of guessing.
    #[error("valid homomorphism whose coloring is not a star coloring: {violation}")]
    EquivalenceCounterexample {
        coloring: Box<Coloring>,
        violation: StarViolation,
    },
}

/// Reads an out-neighbourhood injective map into the complete symmetric
/// digraph on `q` vertices back as a coloring, verifying the star
/// property rather than assuming it.
pub fn onih_to_coloring(
    o: &Orientation,
    q: usize,
    map: &VertexMap,
) -> Result<Coloring, OnihToColoringError> {
    let dst = generate::complete_symmetric_digraph(q);
    is_onh(&o.to_digraph(), &dst, map, OnhMode::Injective).map_err(OnihToColoringError::NotOnih)?;
    let coloring = Coloring::new(o.base(), map.psi.clone(), q)
        .expect("the homomorphism check bounds every image below q");
    match is_star_coloring(&coloring) {
        Ok(()) => Ok(coloring),
        Err(violation) => Err(OnihToColoringError::EquivalenceCounterexample {
            coloring: Box::new(coloring),
            violation,
        }),
    }
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        order.push(start);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                }
            }
        }
    }
    order
}

struct LbhSearch<'a> {
    src: &'a Graph,
    dst: &'a Graph,
    order: Vec<usize>,
    psi: Vec<usize>,
}

const UNMAPPED: usize = usize::MAX;

impl LbhSearch<'_> {
    fn feasible(&self, v: usize, t: usize) -> bool {
        if self.src.degree(v) != self.dst.degree(t) {
            return false;
        }
        for &u in self.src.neighbors(v) {
            if self.psi[u] != UNMAPPED && !self.dst.has_edge(t, self.psi[u]) {
                return false;
            }
            // u's neighborhood contains v, so the map must stay injective
            // on it.
            for &w in self.src.neighbors(u) {
                if w != v && self.psi[w] == t {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&mut self, pos: usize) -> bool {
        let Some(&v) = self.order.get(pos) else {
            return true;
        };
        for t in 0..self.dst.vertex_count() {
            if self.feasible(v, t) {
                self.psi[v] = t;
                if self.extend(pos + 1) {
                    return true;
                }
                self.psi[v] = UNMAPPED;
            }
        }
        false
    }
}

/// Exhaustive backtracking search for a locally bijective map, vertices in
/// breadth-first order, candidate images filtered by degree equality and
/// partial-map consistency. `None` means no such map exists.
pub fn find_lbh(src: &Graph, dst: &Graph) -> Option<VertexMap> {
    let mut search = LbhSearch {
        src,
        dst,
        order: bfs_order(src),
        psi: vec![UNMAPPED; src.vertex_count()],
    };
    if !search.extend(0) {
        return None;
    }
    let map = VertexMap::new(search.psi);
    assert!(
        is_lbh(src, dst, &map).is_ok(),
        "search result must be locally bijective"
    );
    Some(map)
}

struct OnhSearch<'a> {
    src: &'a Digraph,
    dst: &'a Digraph,
    mode: OnhMode,
    psi: Vec<usize>,
}

impl OnhSearch<'_> {
    fn feasible(&self, v: usize, t: usize) -> bool {
        let fits = match self.mode {
            OnhMode::Injective => self.src.out_degree(v) <= self.dst.out_degree(t),
            OnhMode::Bijective => self.src.out_degree(v) == self.dst.out_degree(t),
        };
        if !fits {
            return false;
        }
        for &w in self.src.out_neighbors(v) {
            if self.psi[w] != UNMAPPED && !self.dst.has_arc(t, self.psi[w]) {
                return false;
            }
        }
        for &u in self.src.in_neighbors(v) {
            if self.psi[u] != UNMAPPED && !self.dst.has_arc(self.psi[u], t) {
                return false;
            }
            // Injectivity on the out-neighborhood of u constrains v even
            // while u itself is unmapped.
            for &w in self.src.out_neighbors(u) {
                if w != v && self.psi[w] == t {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&mut self, v: usize) -> bool {
        if v == self.src.vertex_count() {
            return true;
        }
        for t in 0..self.dst.vertex_count() {
            if self.feasible(v, t) {
                self.psi[v] = t;
                if self.extend(v + 1) {
                    return true;
                }
                self.psi[v] = UNMAPPED;
            }
        }
        false
    }
}

/// Exhaustive backtracking search for an out-neighbourhood injective or
/// bijective map between digraphs. `None` means no such map exists.
pub fn find_onh(src: &Digraph, dst: &Digraph, mode: OnhMode) -> Option<VertexMap> {
    let mut search = OnhSearch {
        src,
        dst,
        mode,
        psi: vec![UNMAPPED; src.vertex_count()],
    };
    if !search.extend(0) {
        return None;
    }
    let map = VertexMap::new(search.psi);
    assert!(
        is_onh(src, dst, &map, mode).is_ok(),
        "search result must pass the checker"
    );
    Some(map)
}

/// Why a graph fails the 2p-regularity hypothesis.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RegularityFailure {
    #[error("{0}")]
    Base(RegularityError),
    #[error("graph is {found}-regular, not {expected}-regular")]
    WrongDegree { expected: usize, found: usize },
}

/// An induced star with `leaves.len()` leaves inside a neighborhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClawWitness {
    pub center: usize,
    pub leaves: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColorabilityVerdict {
    Colorable { coloring: Coloring },
    NotWithin { qmax: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisionResult {
    Divides { quotient: IntPolynomial },
    Remainder { remainder: IntPolynomial },
}

/// Hypothesis verdicts and the divisibility verdict for one graph and one
/// parameter p.
#[derive(Clone, Debug)]
pub struct StarDivisibilityReport {
    pub p: usize,
    pub regularity: Result<(), RegularityFailure>,
    pub claw_free: Result<(), ClawWitness>,
    pub colorable: ColorabilityVerdict,
    pub divisor: IntPolynomial,
    pub division: Option<DivisionResult>,
}

impl StarDivisibilityReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.regularity.is_ok()
            && self.claw_free.is_ok()
            && matches!(self.colorable, ColorabilityVerdict::Colorable { .. })
    }

    pub fn divides(&self) -> bool {
        matches!(self.division, Some(DivisionResult::Divides { .. }))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let regular = match &self.regularity {
            Ok(()) => serde_json::json!("ok"),
            Err(e) => serde_json::json!({ "failed": e.to_string() }),
        };
        let claw_free = match &self.claw_free {
            Ok(()) => serde_json::json!("ok"),
            Err(w) => serde_json::json!({
                "failed": { "center": w.center, "leaves": w.leaves }
            }),
        };
        let star_colorable = match &self.colorable {
            ColorabilityVerdict::Colorable { coloring } => serde_json::json!({
                "q": coloring.q(),
                "coloring": coloring.to_json(),
            }),
            ColorabilityVerdict::NotWithin { qmax } => serde_json::json!({
                "failed": format!("no star coloring with at most {qmax} colors")
            }),
        };
        let division = match &self.division {
            None => serde_json::json!("skipped"),
            Some(DivisionResult::Divides { quotient }) => serde_json::json!({
                "quotient": quotient.coeff_strings()
            }),
            Some(DivisionResult::Remainder { remainder }) => serde_json::json!({
                "remainder": remainder.coeff_strings()
            }),
        };
        serde_json::json!({
            "p": self.p,
            "hypotheses": {
                "regular": regular,
                "claw_free": claw_free,
                "star_colorable": star_colorable,
            },
            "divisor_coeffs": self.divisor.coeff_strings(),
            "division": division,
        })
    }
}

/// The divisor polynomial for parameter `p >= 2`:
/// (x-2p)(x+2)^((p-1)(p+2)/2)(x-2)^(p(p+1)/2)(x-(p-2))^(p+1)(x+p)^(p+1).
/// It equals the closed-form spectrum of the underlying graph of the
/// oriented line graph of K_(p+2), asserted on every call.
pub fn star_divisor(p: usize) -> IntPolynomial {
    assert!(p >= 2, "p must be at least 2");
    let pi = p as i64;
    let divisor = poly_product_power(&[
        (IntPolynomial::x_minus(&BigInt::from(2 * pi)), 1),
        (
            IntPolynomial::x_minus(&BigInt::from(-2)),
            (p - 1) * (p + 2) / 2,
        ),
        (IntPolynomial::x_minus(&BigInt::from(2)), p * (p + 1) / 2),
        (IntPolynomial::x_minus(&BigInt::from(pi - 2)), p + 1),
        (IntPolynomial::x_minus(&BigInt::from(-pi)), p + 1),
    ]);
    let k = generate::complete_graph(p + 2).expect("p + 2 >= 4");
    let h = RegularSpectrumHandle::new(&k).expect("complete graphs are regular and connected");
    assert_eq!(
        divisor,
        formula_lstar(&h),
        "divisor must match the closed form evaluated on the complete graph"
    );
    divisor
}

fn pick_independent(
    g: &Graph,
    pool: &[usize],
    from: usize,
    k: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == k {
        return true;
    }
    if pool.len().saturating_sub(from) + chosen.len() < k {
        return false;
    }
    for i in from..pool.len() {
        let v = pool[i];
        if chosen.iter().all(|&u| !g.has_edge(u, v)) {
            chosen.push(v);
            if pick_independent(g, pool, i + 1, k, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Finds an independent set of size `k` inside some open neighborhood, the
/// witness of an induced star with `k` leaves.
fn neighborhood_independent_set(g: &Graph, k: usize) -> Result<(), ClawWitness> {
    for center in 0..g.vertex_count() {
        let mut leaves = Vec::with_capacity(k);
        if pick_independent(g, g.neighbors(center), 0, k, &mut leaves) {
            return Err(ClawWitness { center, leaves });
        }
    }
    Ok(())
}

/// Checks the three hypotheses (connected 2p-regular, no induced star with
/// p+1 leaves, star (p+2)-colorable) and, when they hold or when
/// `force_divide` is set, divides the adjacency characteristic polynomial
/// by the divisor polynomial. Hypothesis failures are reported
/// individually, never silently.
pub fn star_divisibility(g: &Graph, p: usize, force_divide: bool) -> StarDivisibilityReport {
    let divisor = star_divisor(p);
    let regularity = match validate_regular_connected(g) {
        Ok((d, _, _)) if d == 2 * p => Ok(()),
        Ok((d, _, _)) => Err(RegularityFailure::WrongDegree {
            expected: 2 * p,
            found: d,
        }),
        // A too-small degree still means the graph is regular; report the
        // degree it has.
        Err(RegularityError::DegreeTooSmall { degree }) => Err(RegularityFailure::WrongDegree {
            expected: 2 * p,
            found: degree,
        }),
        Err(e) => Err(RegularityFailure::Base(e)),
    };
    let claw_free = neighborhood_independent_set(g, p + 1);
    let colorable = match star_chromatic_number(g, p + 2) {
        StarSearchOutcome::Found { coloring, .. } => ColorabilityVerdict::Colorable { coloring },
        StarSearchOutcome::ExceedsMax { qmax } => ColorabilityVerdict::NotWithin { qmax },
    };
    let mut report = StarDivisibilityReport {
        p,
        regularity,
        claw_free,
        colorable,
        divisor,
        division: None,
    };
    if report.hypotheses_hold() || force_divide {
        let char_a = charpoly_exact(&g.adjacency_matrix());
        report.division = Some(match char_a.exact_div(&report.divisor) {
            Ok(quotient) => DivisionResult::Divides { quotient },
            Err(PolyDivError::NotDivisible { remainder }) => {
                DivisionResult::Remainder { remainder }
            }
            Err(PolyDivError::ZeroDivisor) => unreachable!("the divisor is monic"),
        });
    }
    report
}
