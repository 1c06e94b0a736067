//! Exhaustive graph enumeration for small orders.
//!
//! Two corpora back the test suites: every graph up to isomorphism on at
//! most 6 vertices, and every connected cubic graph up to isomorphism on at
//! most 10 vertices. Both functions return one representative per class and
//! cross-check the class counts against the known censuses, so a bug in the
//! enumeration or the deduplication cannot pass silently.

use std::collections::BTreeMap;

use crate::graph::{Graph, GraphError};

/// Index of pair `(i, j)`, `i < j`, in row-major upper-triangle order.
fn pair_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// All permutations of `0..n` via Heap's algorithm.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = vec![items.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            out.push(items.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn apply_table(mask: u32, table: &[usize]) -> u32 {
    let mut out = 0;
    let mut m = mask;
    while m != 0 {
        let k = m.trailing_zeros() as usize;
        out |= 1 << table[k];
        m &= m - 1;
    }
    out
}

/// Class counts of simple graphs on 0..=6 vertices.
const GRAPH_CENSUS: [usize; 7] = [1, 1, 2, 4, 11, 34, 156];

/// One representative of every isomorphism class of simple graphs on `n`
/// vertices, `n <= 6`. A graph is kept when its edge bitmask is minimal over
/// all relabelings.
pub fn all_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > 6 {
        return Err(GraphError::InvalidParameter(format!(
            "exhaustive enumeration is supported for at most 6 vertices, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let tables: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|p| {
            pairs
                .iter()
                .map(|&(i, j)| pair_index(p[i].min(p[j]), p[i].max(p[j]), n))
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let minimal = tables.iter().all(|t| apply_table(mask, t) >= mask);
        if minimal {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e);
            out.push(Graph::new(n, edges).expect("pairs are valid edges"));
        }
    }
    assert_eq!(
        out.len(),
        GRAPH_CENSUS[n],
        "class count for graphs on {n} vertices disagrees with the known census"
    );
    Ok(out)
}

/// Canonical edge list of a graph on at most 8 vertices: the relabeling of
/// `g` whose edge bitmask is minimal over all permutations. Two such graphs
/// are isomorphic iff their canonical forms are equal.
pub fn canonical_form(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.vertex_count();
    if n > 8 {
        return Err(GraphError::InvalidParameter(format!(
            "canonical form by brute force is supported for at most 8 vertices, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut mask: u32 = 0;
    for &(u, v) in g.edges() {
        mask |= 1 << pair_index(u, v, n);
    }
    let mut best = u32::MAX;
    for p in permutations(n) {
        let table: Vec<usize> = pairs
            .iter()
            .map(|&(i, j)| pair_index(p[i].min(p[j]), p[i].max(p[j]), n))
            .collect();
        best = best.min(apply_table(mask, &table));
    }
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(k, _)| best >> k & 1 == 1)
        .map(|(_, &e)| e);
    Graph::new(n, edges)
}

/// Class counts of connected cubic graphs on 4, 6, 8, 10 vertices.
const CUBIC_CENSUS: [(usize, usize); 4] = [(4, 1), (6, 2), (8, 5), (10, 19)];

/// Traces of `A^3..A^n`. Isomorphic graphs agree on these; the census
/// assertion in `connected_cubic_graphs` rules out collisions between
/// distinct classes, so equality is a valid deduplication key there.
fn trace_key(g: &Graph) -> Vec<i64> {
    let n = g.vertex_count();
    let mut a = vec![0i64; n * n];
    for &(u, v) in g.edges() {
        a[u * n + v] = 1;
        a[v * n + u] = 1;
    }
    let mut power = a.clone();
    let mut key = Vec::new();
    for k in 2..=n {
        let mut next = vec![0i64; n * n];
        for i in 0..n {
            for l in 0..n {
                let p = power[i * n + l];
                if p != 0 {
                    for j in 0..n {
                        next[i * n + j] += p * a[l * n + j];
                    }
                }
            }
        }
        power = next;
        if k >= 3 {
            key.push((0..n).map(|i| power[i * n + i]).sum());
        }
    }
    key
}

struct CubicSearch {
    n: usize,
    adj: Vec<u16>,
    deg: Vec<u8>,
    edges: Vec<(usize, usize)>,
    found: BTreeMap<Vec<i64>, Graph>,
}

impl CubicSearch {
    fn connected(&self) -> bool {
        let mut seen: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen.count_ones() as usize == self.n
    }

    fn emit(&mut self) {
        if !self.connected() {
            return;
        }
        let g = Graph::new(self.n, self.edges.iter().copied()).expect("search adds valid edges");
        self.found.entry(trace_key(&g)).or_insert(g);
    }

    /// Extends the partial graph. The smallest unsaturated vertex receives
    /// its remaining neighbors in increasing order; `min_u` carries that
    /// lower bound while the vertex stays the same (`same`) and resets when
    /// the search moves on, so each labeled graph is built exactly once.
    fn extend(&mut self, same: usize, min_u: usize) {
        let Some(v) = (same..self.n).find(|&w| self.deg[w] < 3) else {
            self.emit();
            return;
        };
        let start = if v == same { min_u } else { v + 1 };
        let needed = (3 - self.deg[v]) as usize;
        let available = (start..self.n)
            .filter(|&u| self.deg[u] < 3 && self.adj[v] >> u & 1 == 0)
            .count();
        if needed > available {
            return;
        }
        for u in start..self.n {
            if self.deg[u] == 3 || self.adj[v] >> u & 1 == 1 {
                continue;
            }
            self.adj[v] |= 1 << u;
            self.adj[u] |= 1 << v;
            self.deg[v] += 1;
            self.deg[u] += 1;
            self.edges.push((v, u));
            self.extend(v, u + 1);
            self.edges.pop();
            self.deg[u] -= 1;
            self.deg[v] -= 1;
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }
}

/// One representative of every isomorphism class of connected cubic graphs
/// on `n` vertices, for even `4 <= n <= 10`.
///
/// The search fixes the neighborhood of vertex 0 to `{1, 2, 3}`, which every
/// cubic graph attains under some labeling, and then builds the rest by
/// orderly edge addition. Representatives are deduplicated by power traces
/// and the class count is checked against the census.
pub fn connected_cubic_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    let Some(&(_, expected)) = CUBIC_CENSUS.iter().find(|&&(k, _)| k == n) else {
        return Err(GraphError::InvalidParameter(format!(
            "connected cubic enumeration covers even orders 4 through 10, got {n}"
        )));
    };
    let mut search = CubicSearch {
        n,
        adj: vec![0; n],
        deg: vec![0; n],
        edges: vec![(0, 1), (0, 2), (0, 3)],
        found: BTreeMap::new(),
    };
    for u in 1..=3 {
        search.adj[0] |= 1 << u;
        search.adj[u] |= 1;
        search.deg[0] += 1;
        search.deg[u] += 1;
    }
    search.extend(1, 2);
    assert_eq!(
        search.found.len(),
        expected,
        "class count for connected cubic graphs on {n} vertices disagrees with the known census"
    );
    Ok(search.found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_regular_connected;

    #[test]
    fn graph_census_counts() {
        for (n, &expected) in GRAPH_CENSUS.iter().enumerate().take(6) {
            let reps = all_graphs_up_to_iso(n).unwrap();
            assert_eq!(reps.len(), expected, "n = {n}");
        }
        assert!(all_graphs_up_to_iso(7).is_err());
    }

    #[test]
    fn canonical_form_separates_classes() {
        // Two labelings of P4 agree; P4 and the claw differ.
        let p4 = crate::generate::path(4);
        let p4_relabeled = Graph::new(4, vec![(2, 0), (0, 3), (3, 1)]).unwrap();
        let claw = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            canonical_form(&p4).unwrap(),
            canonical_form(&p4_relabeled).unwrap()
        );
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&claw).unwrap());
        assert!(canonical_form(&crate::generate::cycle(9).unwrap()).is_err());
    }

    #[test]
    fn four_vertex_classes_by_edge_count() {
        let reps = all_graphs_up_to_iso(4).unwrap();
        let mut by_edges = [0usize; 7];
        for g in &reps {
            by_edges[g.edge_count()] += 1;
        }
        assert_eq!(by_edges, [1, 1, 2, 3, 2, 1, 1]);
    }

    #[test]
    fn cubic_counts_and_regularity() {
        for &(n, expected) in &CUBIC_CENSUS {
            if n == 10 {
                continue; // covered by the slower test below
            }
            let reps = connected_cubic_graphs(n).unwrap();
            assert_eq!(reps.len(), expected);
            for g in &reps {
                assert_eq!(validate_regular_connected(g), Ok((3, n, 3 * n / 2)));
            }
        }
        assert!(connected_cubic_graphs(5).is_err());
        assert!(connected_cubic_graphs(12).is_err());
    }

    #[test]
    fn cubic_ten_vertex_census() {
        let reps = connected_cubic_graphs(10).unwrap();
        assert_eq!(reps.len(), 19);
        for g in &reps {
            assert_eq!(validate_regular_connected(g), Ok((3, 10, 15)));
        }
    }

    #[test]
    fn six_vertex_cubic_classes_are_prism_and_k33() {
        let reps = connected_cubic_graphs(6).unwrap();
        let mut triangle_counts: Vec<usize> = reps
            .iter()
            .map(|g| {
                let mut t = 0;
                for u in 0..6 {
                    for v in u + 1..6 {
                        for w in v + 1..6 {
                            if g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w) {
                                t += 1;
                            }
                        }
                    }
                }
                t
            })
            .collect();
        triangle_counts.sort_unstable();
        // K_{3,3} is triangle free; the triangular prism has two triangles.
        assert_eq!(triangle_counts, vec![0, 2]);
    }
}
