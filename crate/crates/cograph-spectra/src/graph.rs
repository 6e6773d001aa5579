//! Dense undirected graphs on at most 64 vertices.
//!
//! Vertices carry ids `0..n`. Adjacency is stored as one `u64` bitmask per
//! vertex, so neighborhood-equality tests (`N(u) = N(v)`, `N[u] = N[v]`) are
//! single word comparisons. Graphs are immutable once built; every operation
//! returns a fresh value, which makes them safe to share across workers.

use std::fmt;

use thiserror::Error;

/// Largest supported order: one `u64` adjacency row per vertex.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("duplicate vertex {vertex} in selection")]
    DuplicateVertex { vertex: usize },
}

/// Simple undirected graph with bitmask adjacency rows.
///
/// Invariants: the adjacency relation is symmetric and irreflexive (no
/// self-loops), and rows never contain bits at or above `n`. The empty graph
/// (`n = 0`) is legal and has an empty spectrum.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
        Graph { n, rows: vec![0; n] }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        g
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.set_edge(0, n - 1);
        g
    }

    /// Star `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(0, v);
        }
        g
    }

    /// Graph from an explicit edge list. Panics on self-loops or ids `>= n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for order {n}");
            assert!(u != v, "self-loop at vertex {u}");
            g.set_edge(u, v);
        }
        g
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Iterator over vertex ids `0..n`.
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u] & (1 << v) != 0
    }

    /// Open neighborhood `N(v)` as a bitmask.
    pub fn open_neighborhood(&self, v: usize) -> u64 {
        debug_assert!(v < self.n);
        self.rows[v]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}` as a bitmask.
    pub fn closed_neighborhood(&self, v: usize) -> u64 {
        debug_assert!(v < self.n);
        self.rows[v] | (1 << v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.open_neighborhood(v);
        (0..self.n).filter(move |&u| row & (1 << u) != 0)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.open_neighborhood(v).count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, in column-major order
    /// `(0,1), (0,2), (1,2), (0,3), ...` — the graph6 bit order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 1..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `u ~ v` in the result iff `u != v` and not `u ~ v` here.
    pub fn complement(&self) -> Graph {
        let mask = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let rows = self
            .vertices()
            .map(|v| !self.rows[v] & mask & !(1 << v))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Vertices of `other` are shifted by `self.order()`; no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        assert!(n <= MAX_ORDER, "union order {n} exceeds {MAX_ORDER}");
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << self.n));
        Graph { n, rows }
    }

    /// Disjoint union plus all cross edges between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in self.n..g.n {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Induced subgraph on the given distinct vertex ids; vertex `i` of the
    /// result is `selection[i]`.
    pub fn induced_subgraph(&self, selection: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = 0u64;
        for &v in selection {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
            }
            if seen & (1 << v) != 0 {
                return Err(GraphError::DuplicateVertex { vertex: v });
            }
            seen |= 1 << v;
        }
        let mut g = Graph::empty(selection.len());
        for (i, &u) in selection.iter().enumerate() {
            for (j, &v) in selection.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Graph with vertex `v` removed; ids above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n);
        let keep: Vec<usize> = self.vertices().filter(|&u| u != v).collect();
        self.induced_subgraph(&keep).expect("kept ids are valid")
    }

    /// Connected components, ordered by minimum vertex id; vertices within
    /// each component are ascending.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut visited = 0u64;
        for start in self.vertices() {
            if visited & (1 << start) != 0 {
                continue;
            }
            // bitmask BFS: grow the component by whole neighborhood rows
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.rows[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            visited |= comp;
            out.push(self.vertices().filter(|&v| comp & (1 << v) != 0).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// True iff some vertex has empty open neighborhood.
    pub fn has_isolated_vertex(&self) -> bool {
        self.rows.contains(&0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
    }

    #[test]
    fn complement_is_involution() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4), (0, 4)]);
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_of_c4_is_two_disjoint_edges() {
        // C4 = 0-1-2-3-0; the complement pairs up the diagonals.
        let c4 = Graph::cycle(4);
        let expected = Graph::from_edges(4, &[(0, 2), (1, 3)]);
        assert_eq!(c4.complement(), expected);
    }

    #[test]
    fn disjoint_union_shifts_ids() {
        let g = Graph::complete(1).disjoint_union(&Graph::complete(1));
        assert_eq!(g, Graph::empty(2));

        let g = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);

        let g = Graph::path(3).disjoint_union(&Graph::empty(1));
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn join_builds_k2_star_k4() {
        let k1 = Graph::complete(1);
        assert_eq!(k1.join(&k1), Graph::complete(2));

        let star = k1.join(&Graph::empty(3));
        assert_eq!(star, Graph::star(4));

        assert_eq!(Graph::complete(2).join(&Graph::complete(2)), Graph::complete(4));
    }

    #[test]
    fn complement_swaps_union_and_join() {
        let g = Graph::path(3);
        let h = Graph::cycle(4);
        assert_eq!(
            g.disjoint_union(&h).complement(),
            g.complement().join(&h.complement())
        );
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.induced_subgraph(&[0, 1, 2]).unwrap(), Graph::complete(3));

        // Four consecutive vertices of C5 induce a path.
        let c5 = Graph::cycle(5);
        assert_eq!(c5.induced_subgraph(&[0, 1, 2, 3]).unwrap(), Graph::path(4));

        assert_eq!(c5.induced_subgraph(&[]).unwrap(), Graph::empty(0));

        let all: Vec<usize> = c5.vertices().collect();
        assert_eq!(c5.induced_subgraph(&all).unwrap(), c5);
    }

    #[test]
    fn induced_subgraph_rejects_bad_ids() {
        let g = Graph::path(3);
        assert_eq!(
            g.induced_subgraph(&[0, 3]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(
            g.induced_subgraph(&[1, 1]),
            Err(GraphError::DuplicateVertex { vertex: 1 })
        );
    }

    #[test]
    fn components_are_ordered_by_minimum() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(two_k2.connected_components(), vec![vec![0, 1], vec![2, 3]]);

        assert_eq!(Graph::complete(4).connected_components(), vec![vec![0, 1, 2, 3]]);

        let g = Graph::path(3).disjoint_union(&Graph::empty(1));
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn empty_graph_is_legal() {
        let g = Graph::empty(0);
        assert_eq!(g.order(), 0);
        assert_eq!(g.edge_count(), 0);
        assert!(g.connected_components().is_empty());
        assert!(!g.has_isolated_vertex());
    }

    #[test]
    fn isolated_vertex_detection() {
        assert!(Graph::empty(2).has_isolated_vertex());
        assert!(!Graph::complete(2).has_isolated_vertex());
        assert!(Graph::path(3).disjoint_union(&Graph::empty(1)).has_isolated_vertex());
    }
}
