//! Immutable simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` row per vertex, so every vertex subset is a
//! single machine word ([`VertexSet`]). All constructions return new graphs.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} exceeds the maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of the vertices of some graph, as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub const fn insert(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub const fn remove(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Least vertex, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, v) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An undirected edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes endpoint order. Panics on a self-loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "self-loop");
        Edge { u: a.min(b), v: a.max(b) }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

/// A simple undirected graph of order at most 64.
///
/// Invariants: rows are symmetric, no self-loops, and no bit `>= n` is set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        Ok(Graph { n, adj: [0; MAX_ORDER] })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Ok(Graph::empty(n)?.complement())
    }

    /// Builds a graph from an edge list; repeated edges collapse.
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for e in edges {
            let (u, v) = e.into();
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating the invariants.
    pub fn from_rows(rows: &[u64]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let mask = low_bits(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let v = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] = row;
        }
        // symmetrize
        for u in 0..n {
            for v in VertexSet(g.adj[u]) {
                g.adj[v] |= 1 << u;
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    /// Open neighbourhood of `u`.
    #[inline]
    pub fn neighbors(&self, u: usize) -> VertexSet {
        VertexSet(self.adj[u])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    /// Number of neighbours of `u` inside `s`.
    #[inline]
    pub fn degree_in(&self, u: usize, s: VertexSet) -> usize {
        (self.adj[u] & s.0).count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !low_bits(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mask = low_bits(self.n);
        let mut adj = [0u64; MAX_ORDER];
        for u in 0..self.n {
            adj[u] = !self.adj[u] & mask & !(1u64 << u);
        }
        Graph { n: self.n, adj }
    }

    /// `self` on vertices `0..n1` and `other` shifted to `n1..n1+n2`, no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n1 = self.n;
        let n = n1 + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut adj = self.adj;
        for v in 0..other.n {
            adj[n1 + v] = other.adj[v] << n1;
        }
        Ok(Graph { n, adj })
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = low_bits(self.n);
        let right = low_bits(g.n) & !left;
        for u in 0..self.n {
            g.adj[u] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Union of `copies` disjoint copies of `self`.
    pub fn copies(&self, copies: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(0)?;
        for _ in 0..copies {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    /// Subgraph induced by `s`, relabelled in increasing original order.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let s = s.intersection(self.vertices());
        let verts = s.to_vec();
        let mut adj = [0u64; MAX_ORDER];
        for (new_u, &u) in verts.iter().enumerate() {
            let mut row = 0u64;
            for (new_v, &v) in verts.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    row |= 1 << new_v;
                }
            }
            adj[new_u] = row;
        }
        Graph { n: verts.len(), adj }
    }

    /// Graph with vertex `v` deleted and the rest relabelled.
    pub fn without_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertices().remove(v))
    }

    /// Graph whose vertex `p` is vertex `perm[p]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut pos = [0usize; MAX_ORDER];
        for (p, &v) in perm.iter().enumerate() {
            pos[v] = p;
        }
        let mut adj = [0u64; MAX_ORDER];
        for (p, &v) in perm.iter().enumerate() {
            adj[p] = VertexSet(self.adj[v]).iter().fold(0u64, |acc, w| acc | 1 << pos[w]);
        }
        Graph { n: self.n, adj }
    }

    /// Same vertex set, with the listed edges toggled.
    pub fn with_toggled(&self, edges: &[Edge]) -> Graph {
        let mut g = self.clone();
        for e in edges {
            g.adj[e.u] ^= 1 << e.v;
            g.adj[e.v] ^= 1 << e.u;
        }
        g
    }

    /// Appends a vertex adjacent to exactly `nbrs`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Graph, GraphError> {
        let n = self.n + 1;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let nbrs = nbrs.intersection(self.vertices());
        let mut g = self.clone();
        g.n = n;
        g.adj[n - 1] = nbrs.0;
        for v in nbrs {
            g.adj[v] |= 1 << (n - 1);
        }
        Ok(g)
    }

    /// Connected components, each as a vertex set, sorted by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within.0;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0u64;
                for u in VertexSet(frontier) {
                    next |= self.adj[u];
                }
                next &= within.0 & !comp;
                comp |= next;
                frontier = next;
            }
            out.push(VertexSet(comp));
            rest &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Length of a shortest cycle, if the graph has one.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            // BFS from s; a non-tree edge closes a cycle through s of length <= d(u)+d(v)+1.
            let mut dist = [usize::MAX; MAX_ORDER];
            let mut parent = [usize::MAX; MAX_ORDER];
            let mut queue = std::collections::VecDeque::new();
            dist[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().into_iter().map(|e| (e.u, e.v)).collect();
        f.debug_struct("Graph").field("n", &self.n).field("edges", &edges).finish()
    }
}

/// Small named graphs used throughout tests and constructions.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path order")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle order")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::empty(a)
            .and_then(|ga| ga.join(&Graph::empty(b)?))
            .expect("complete bipartite order")
    }

    pub fn star(leaves: usize) -> Graph {
        complete_bipartite(1, leaves)
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn make_graph_examples() {
        let e0 = Graph::empty(0).unwrap();
        assert_eq!(e0.order(), 0);
        assert_eq!(e0.edge_count(), 0);

        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(c4, cycle(4));

        let k2 = g(2, &[(0, 1), (1, 0)]);
        assert_eq!(k2.edge_count(), 1);
    }

    #[test]
    fn make_graph_errors() {
        assert_eq!(
            Graph::from_edges(3, [(0usize, 3usize)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::empty(65), Err(GraphError::OrderTooLarge(65)));
        assert_eq!(Graph::from_edges(3, [(1usize, 1usize)]), Err(GraphError::SelfLoop(1)));
        assert!(Graph::from_rows(&[0b10, 0b00]).is_ok());
        assert!(Graph::from_rows(&[0b01]).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::empty(4).unwrap().complement(), Graph::complete(4).unwrap());
        let c5 = cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        let two_k2 = g(4, &[(0, 2), (1, 3)]);
        assert_eq!(cycle(4).complement(), two_k2);
    }

    #[test]
    fn union_examples() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k2.disjoint_union(&k2).unwrap(), g(4, &[(0, 1), (2, 3)]));
        let c5 = cycle(5);
        assert_eq!(c5.disjoint_union(&Graph::empty(0).unwrap()).unwrap(), c5);
        let u = cycle(4).disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!((u.order(), u.edge_count()), (5, 4));
        let big = Graph::empty(40).unwrap();
        assert_eq!(big.disjoint_union(&big), Err(GraphError::OrderTooLarge(80)));
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.join(&Graph::empty(3).unwrap()).unwrap(), star(3));
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k2.join(&k2).unwrap(), Graph::complete(4).unwrap());
        let k23 = Graph::empty(2).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(k23, complete_bipartite(2, 3));
    }

    #[test]
    fn induced_examples() {
        let c4 = cycle(4);
        assert_eq!(c4.induced(VertexSet::from_vertices([0, 1, 2])), path(3));
        assert_eq!(c4.induced(c4.vertices()), c4);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.induced(VertexSet::from_vertices([1, 3])), Graph::complete(2).unwrap());
    }

    #[test]
    fn degree_in_examples() {
        let k13 = star(3);
        assert_eq!(k13.degree_in(0, VertexSet::from_vertices([1, 2, 3])), 3);
        assert_eq!(k13.degree_in(2, VertexSet::EMPTY), 0);
        assert_eq!(cycle(4).degree_in(0, VertexSet::from_vertices([1, 2, 3])), 2);
    }

    #[test]
    fn components_examples() {
        let two_k2 = g(4, &[(0, 1), (2, 3)]);
        let comps = two_k2.components();
        assert_eq!(comps, vec![VertexSet::from_vertices([0, 1]), VertexSet::from_vertices([2, 3])]);
        assert_eq!(cycle(5).components(), vec![VertexSet::full(5)]);
        assert_eq!(Graph::empty(3).unwrap().components().len(), 3);
    }

    #[test]
    fn girth_values() {
        assert_eq!(cycle(6).girth(), Some(6));
        assert_eq!(Graph::complete(4).unwrap().girth(), Some(3));
        assert_eq!(path(5).girth(), None);
        assert_eq!(complete_bipartite(2, 3).girth(), Some(4));
    }

    #[test]
    fn permuted_preserves_structure() {
        let p = path(4);
        let q = p.permuted(&[3, 1, 0, 2]);
        assert_eq!(q.edge_count(), 3);
        assert!(q.has_edge(0, 3)); // 3-2 in p
        assert!(q.has_edge(1, 2)); // 1-0 in p
    }

    #[test]
    fn vertex_set_display() {
        assert_eq!(VertexSet::from_vertices([0, 2, 5]).to_string(), "{0,2,5}");
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
    }
}
