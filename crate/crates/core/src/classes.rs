//! Recognition of the five hereditary classes with certifying structure.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet, MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    Forest,
    Cactus,
    Bipartite,
    Split,
    Cograph,
    /// Every graph; used by oracles and enumeration cross-checks.
    #[serde(rename = "all")]
    AllGraphs,
}

impl GraphClass {
    /// The five classes a Ramsey query can target.
    pub const RESTRICTED: [GraphClass; 5] = [
        GraphClass::Forest,
        GraphClass::Cactus,
        GraphClass::Bipartite,
        GraphClass::Split,
        GraphClass::Cograph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Forest => "forest",
            GraphClass::Cactus => "cactus",
            GraphClass::Bipartite => "bipartite",
            GraphClass::Split => "split",
            GraphClass::Cograph => "cograph",
            GraphClass::AllGraphs => "all",
        }
    }

    /// Closed under complementation.
    pub fn is_self_complementary(self) -> bool {
        matches!(self, GraphClass::Split | GraphClass::Cograph | GraphClass::AllGraphs)
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown graph class `{0}` (expected forest, cactus, bipartite, split, cograph or all)")]
pub struct UnknownClass(pub String);

impl FromStr for GraphClass {
    type Err = UnknownClass;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "forest" => Ok(GraphClass::Forest),
            "cactus" | "cacti" => Ok(GraphClass::Cactus),
            "bipartite" => Ok(GraphClass::Bipartite),
            "split" => Ok(GraphClass::Split),
            "cograph" => Ok(GraphClass::Cograph),
            "all" | "allgraphs" => Ok(GraphClass::AllGraphs),
            _ => Err(UnknownClass(s.to_string())),
        }
    }
}

/// One biconnected block: a maximal 2-connected subgraph, a bridge, or an isolated vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: VertexSet,
    pub edges: usize,
}

impl Block {
    /// A block that is a chordless cycle.
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3 && self.edges == self.vertices.len()
    }
}

pub fn member(g: &Graph, class: GraphClass) -> bool {
    match class {
        GraphClass::Forest => is_forest(g),
        GraphClass::Cactus => is_cactus(g),
        GraphClass::Bipartite => bipartition(g).is_some(),
        GraphClass::Split => split_partition(g).is_some(),
        GraphClass::Cograph => is_cograph(g),
        GraphClass::AllGraphs => true,
    }
}

pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.order()
}

/// Every block is a vertex, an edge, or a cycle. Connectivity is not required.
pub fn is_cactus(g: &Graph) -> bool {
    // A cactus on n vertices has at most 3(n-1)/2 edges.
    if 2 * g.edge_count() > 3 * g.order().saturating_sub(1) {
        return false;
    }
    blocks(g).iter().all(|b| match b.vertices.len() {
        1 => b.edges == 0,
        2 => b.edges == 1,
        _ => b.is_cycle(),
    })
}

/// Block decomposition (Hopcroft–Tarjan). Isolated vertices form singleton blocks.
pub fn blocks(g: &Graph) -> Vec<Block> {
    rooted_blocks(g, &[]).into_iter().map(|(b, _)| b).collect()
}

/// Blocks paired with their attachment vertex: the block vertex nearest the
/// root of its component in the block-cut tree. Components are rooted at the
/// first listed vertex they contain, otherwise at their least vertex.
pub(crate) fn rooted_blocks(g: &Graph, roots: &[usize]) -> Vec<(Block, usize)> {
    struct State<'a> {
        g: &'a Graph,
        disc: [usize; MAX_ORDER],
        low: [usize; MAX_ORDER],
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<(Block, usize)>,
    }

    fn visit(st: &mut State<'_>, u: usize, parent: Option<usize>) {
        st.time += 1;
        st.disc[u] = st.time;
        st.low[u] = st.time;
        for w in st.g.neighbors(u) {
            if st.disc[w] == 0 {
                st.stack.push((u, w));
                visit(st, w, Some(u));
                st.low[u] = st.low[u].min(st.low[w]);
                if st.low[w] >= st.disc[u] {
                    let mut verts = VertexSet::EMPTY;
                    let mut edges = 0;
                    while let Some((a, b)) = st.stack.pop() {
                        verts = verts.insert(a).insert(b);
                        edges += 1;
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    st.out.push((Block { vertices: verts, edges }, u));
                }
            } else if Some(w) != parent && st.disc[w] < st.disc[u] {
                st.stack.push((u, w));
                st.low[u] = st.low[u].min(st.disc[w]);
            }
        }
    }

    let mut st = State {
        g,
        disc: [0; MAX_ORDER],
        low: [0; MAX_ORDER],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in roots.iter().copied().chain(0..g.order()) {
        if st.disc[v] == 0 {
            if g.degree(v) == 0 {
                st.disc[v] = usize::MAX;
                st.out.push((Block { vertices: VertexSet::singleton(v), edges: 0 }, v));
            } else {
                visit(&mut st, v, None);
            }
        }
    }
    st.out
}

/// A 2-colouring, BFS from the least vertex of each component; that vertex goes to `A`.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut a = VertexSet::EMPTY;
    let mut b = VertexSet::EMPTY;
    for comp in g.components() {
        let start = comp.first().expect("components are nonempty");
        let mut side_a = VertexSet::singleton(start);
        let mut side_b = VertexSet::EMPTY;
        let mut frontier = side_a;
        let mut frontier_is_a = true;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next = next.union(g.neighbors(u));
            }
            let (own, other) = if frontier_is_a { (side_a, side_b) } else { (side_b, side_a) };
            if !next.intersection(own).is_empty() {
                return None;
            }
            let fresh = next.difference(other);
            if frontier_is_a {
                side_b = side_b.union(fresh);
            } else {
                side_a = side_a.union(fresh);
            }
            frontier = fresh;
            frontier_is_a = !frontier_is_a;
        }
        a = a.union(side_a);
        b = b.union(side_b);
    }
    Some((a, b))
}

pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|u| g.neighbors(u).intersection(s).is_empty())
}

pub fn is_clique(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|u| s.remove(u).is_subset(g.neighbors(u)))
}

/// A partition into a clique `K` and an independent set `I`, if one exists.
///
/// Uses the degree-sequence criterion: with degrees sorted decreasingly and
/// `m = max{t : d_t >= t-1}`, the graph is split iff
/// `sum_{t<=m} d_t = m(m-1) + sum_{t>m} d_t`, and then the `m` largest-degree
/// vertices form a clique. Vertices of `I` complete to `K` are then moved into
/// `K`, lowest index first.
pub fn split_partition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.order();
    if n == 0 {
        return Some((VertexSet::EMPTY, VertexSet::EMPTY));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=n).filter(|&t| deg[t - 1] >= t - 1).max().unwrap_or(0);
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    if head != m * (m - 1) + tail {
        return None;
    }
    let mut clique = VertexSet::from_vertices(order[..m].iter().copied());
    let mut indep = g.vertices().difference(clique);
    for v in indep {
        if clique.is_subset(g.neighbors(v)) {
            clique = clique.insert(v);
            indep = indep.remove(v);
        }
    }
    debug_assert!(is_clique(g, clique) && is_independent(g, indep));
    (is_clique(g, clique) && is_independent(g, indep)).then_some((clique, indep))
}

/// P4-free test by complement reducibility: every induced subgraph on two or
/// more vertices must be disconnected or have a disconnected complement.
pub fn is_cograph(g: &Graph) -> bool {
    let co = g.complement();
    cograph_within(g, &co, g.vertices())
}

fn cograph_within(g: &Graph, co: &Graph, s: VertexSet) -> bool {
    if s.len() <= 3 {
        // every graph on at most three vertices is P4-free
        return true;
    }
    let comps = g.components_within(s);
    if comps.len() > 1 {
        return comps.into_iter().all(|c| cograph_within(g, co, c));
    }
    let co_comps = co.components_within(s);
    if co_comps.len() > 1 {
        return co_comps.into_iter().all(|c| cograph_within(g, co, c));
    }
    false
}

/// Brute-force scan for an induced P4. Oracle for [`is_cograph`].
pub fn has_induced_p4(g: &Graph) -> bool {
    let n = g.order();
    // An induced P4 a-b-c-d: ab, bc, cd edges; ac, bd, ad non-edges.
    for b in 0..n {
        for c in g.neighbors(b) {
            let a_cands = g.neighbors(b).difference(g.neighbors(c)).remove(c);
            let d_cands = g.neighbors(c).difference(g.neighbors(b)).remove(b);
            for a in a_cands {
                if !d_cands.difference(g.neighbors(a)).remove(a).is_empty() {
                    return true;
                }
            }
        }
    }
    false
}
