//! k-sparse and k-dense sets: membership, exact α_k, and the combined Ramsey check.

use serde::{Deserialize, Serialize};

use crate::classes::{self, GraphClass};
use crate::graph::{Edge, Graph, VertexSet};

/// Largest order accepted by [`alpha_k_oracle`].
pub const ORACLE_MAX_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SetsError {
    #[error("graph of order {0} is too large for the exhaustive oracle (limit {ORACLE_MAX_ORDER})")]
    OracleTooLarge(usize),
    #[error("no sparse lower bound is defined for class {class} with k = {k}")]
    UnsupportedBound { class: GraphClass, k: usize },
    #[error("graph is not a cactus")]
    NotCactus,
}

/// Every vertex of `s` has at most `k` neighbours inside `s`.
pub fn is_k_sparse(g: &Graph, s: VertexSet, k: usize) -> bool {
    s.iter().all(|u| g.degree_in(u, s) <= k)
}

/// Every vertex of `d` misses at most `k` other vertices of `d`.
pub fn is_k_dense(g: &Graph, d: VertexSet, k: usize) -> bool {
    let size = d.len();
    d.iter().all(|u| size - 1 - g.degree_in(u, d) <= k)
}

/// Outcome of [`ramsey_check`]. Witnesses have exactly the requested sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub has_dense: bool,
    pub has_sparse: bool,
    pub dense_witness: Option<VertexSet>,
    pub sparse_witness: Option<VertexSet>,
}

impl WitnessReport {
    /// Neither a dense nor a sparse set of the requested size exists.
    pub fn is_avoiding(&self) -> bool {
        !self.has_dense && !self.has_sparse
    }
}

/// Maximum size of a k-sparse set, with one optimal set.
pub fn alpha_k(g: &Graph, k: usize) -> (usize, VertexSet) {
    let mut total = VertexSet::EMPTY;
    for comp in g.components() {
        let best = Search::new(g, k, 0).run(comp).expect("the empty set is always feasible");
        total = total.union(best);
    }
    (total.len(), total)
}

/// A k-sparse set of size at least `target`, if one exists. Stops at the first hit.
pub fn find_k_sparse_set(g: &Graph, k: usize, target: usize) -> Option<VertexSet> {
    if target == 0 {
        return Some(VertexSet::EMPTY);
    }
    if target > g.order() {
        return None;
    }
    let comps = g.components();
    let mut found = VertexSet::EMPTY;
    let mut remaining: usize = g.order();
    for comp in comps {
        remaining -= comp.len();
        let need = target - found.len();
        if remaining == 0 {
            // the last component only has to make up the difference
            let part = Search::new(g, k, need).run(comp)?;
            found = found.union(part);
        } else {
            let part = Search::new(g, k, 0).run(comp).expect("the empty set is always feasible");
            found = found.union(part);
        }
        if found.len() >= target {
            return Some(found);
        }
        if found.len() + remaining < target {
            return None;
        }
    }
    None
}

/// A k-dense set of size at least `target`, if one exists.
pub fn find_k_dense_set(g: &Graph, k: usize, target: usize) -> Option<VertexSet> {
    find_k_sparse_set(&g.complement(), k, target)
}

/// Branch and bound for one component.
///
/// Nodes hold a k-sparse `chosen` set and the candidates that can still be
/// added to it one at a time. The branching vertex is a candidate of maximum
/// degree in `G[chosen + cand]`, included first.
struct Search<'a> {
    g: &'a Graph,
    k: usize,
    /// Size to beat; a solution must exceed this.
    best: usize,
    best_set: Option<VertexSet>,
    /// Stop as soon as a set of this size is found (0 = optimise fully).
    target: usize,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, target: usize) -> Self {
        Search { g, k, best: target.saturating_sub(1), best_set: None, target }
    }

    /// Returns the best set found; `None` only when `target` is unreachable.
    fn run(mut self, within: VertexSet) -> Option<VertexSet> {
        if self.target == 0 {
            self.best_set = Some(VertexSet::EMPTY);
        }
        self.visit(VertexSet::EMPTY, within);
        self.best_set
    }

    fn done(&self) -> bool {
        self.target > 0 && self.best_set.is_some()
    }

    fn record(&mut self, set: VertexSet) {
        if set.len() > self.best {
            self.best = set.len();
            self.best_set = Some(set);
        }
    }

    fn visit(&mut self, chosen: VertexSet, cand: VertexSet) {
        if self.done() || chosen.len() + cand.len() <= self.best {
            return;
        }
        let all = chosen.union(cand);
        if is_k_sparse(self.g, all, self.k) {
            self.record(all);
            return;
        }
        if self.clique_cover_bound(chosen, cand) <= self.best {
            return;
        }
        let mut pick = None;
        let mut pick_deg = 0;
        for v in cand {
            let d = self.g.degree_in(v, all);
            if pick.is_none() || d > pick_deg {
                pick = Some(v);
                pick_deg = d;
            }
        }
        let v = pick.expect("a non-sparse union has candidates");
        let rest = cand.remove(v);

        let grown = chosen.insert(v);
        let saturated: VertexSet =
            grown.iter().filter(|&u| self.g.degree_in(u, grown) == self.k).collect();
        let mut next = VertexSet::EMPTY;
        for w in rest {
            let nw = self.g.neighbors(w);
            if nw.intersection(grown).len() <= self.k && nw.intersection(saturated).is_empty() {
                next = next.insert(w);
            }
        }
        self.visit(grown, next);
        self.visit(chosen, rest);
    }

    /// A k-sparse set meets any clique in at most k+1 vertices, so a greedy
    /// partition of the candidates into cliques bounds what can still be added.
    fn clique_cover_bound(&self, chosen: VertexSet, cand: VertexSet) -> usize {
        let cap = self.k + 1;
        let mut left = cand;
        let mut bound = chosen.len();
        while let Some(v) = left.first() {
            let mut clique = VertexSet::singleton(v);
            let mut common = self.g.neighbors(v).intersection(left);
            while let Some(w) = common.first() {
                clique = clique.insert(w);
                common = common.intersection(self.g.neighbors(w));
            }
            bound += clique.len().min(cap);
            left = left.difference(clique);
        }
        bound
    }
}

/// Exhaustive α_k by depth-first subset search with hereditary pruning only.
pub fn alpha_k_oracle(g: &Graph, k: usize) -> Result<usize, SetsError> {
    if g.order() > ORACLE_MAX_ORDER {
        return Err(SetsError::OracleTooLarge(g.order()));
    }
    fn grow(g: &Graph, k: usize, set: VertexSet, next: usize, best: &mut usize) {
        *best = (*best).max(set.len());
        for v in next..g.order() {
            let bigger = set.insert(v);
            if is_k_sparse(g, bigger, k) {
                grow(g, k, bigger, v + 1, best);
            }
        }
    }
    let mut best = 0;
    grow(g, k, VertexSet::EMPTY, 0, &mut best);
    Ok(best)
}

/// Decide whether `g` has a k-dense `i`-set or a k-sparse `j`-set.
pub fn ramsey_check(g: &Graph, k: usize, i: usize, j: usize) -> WitnessReport {
    let sparse = find_k_sparse_set(g, k, j).map(|s| truncate(s, j));
    let dense = find_k_dense_set(g, k, i).map(|d| truncate(d, i));
    WitnessReport {
        has_dense: dense.is_some(),
        has_sparse: sparse.is_some(),
        dense_witness: dense,
        sparse_witness: sparse,
    }
}

/// Keep the `size` lowest vertices; both properties are hereditary.
fn truncate(s: VertexSet, size: usize) -> VertexSet {
    s.iter().take(size).collect()
}

/// Guaranteed α_k for every forest (k >= 1) or cactus (k >= 1) of order `n`.
pub fn class_sparse_lower_bound(class: GraphClass, n: usize, k: usize) -> Result<usize, SetsError> {
    let bound = match (class, k) {
        (_, 0) => return Err(SetsError::UnsupportedBound { class, k }),
        (GraphClass::Forest, _) => ((k + 1) * n).div_ceil(k + 2),
        (GraphClass::Cactus, 1) => n / 2 + cactus_r(n),
        (GraphClass::Cactus, _) => k * n / (k + 1) + 1,
        _ => return Err(SetsError::UnsupportedBound { class, k }),
    };
    Ok(bound.min(n))
}

/// 0 when `n` is a multiple of 4, otherwise 1.
pub fn cactus_r(n: usize) -> usize {
    usize::from(!n.is_multiple_of(4))
}

/// Pairwise disjoint edges, one per cycle block, whose removal leaves a forest.
///
/// Each component is rooted at its least cut vertex (or least vertex), and in
/// each cycle block the chosen edge avoids the block's attachment vertex, so
/// blocks meeting at a cut vertex never both use it. Edges missing every cut
/// vertex are preferred, then the least edge.
pub fn cactus_deforesting_matching(g: &Graph) -> Result<Vec<Edge>, SetsError> {
    if !classes::is_cactus(g) {
        return Err(SetsError::NotCactus);
    }
    let mut seen = VertexSet::EMPTY;
    let mut cut = VertexSet::EMPTY;
    for block in classes::blocks(g) {
        if block.vertices.len() >= 2 {
            cut = cut.union(seen.intersection(block.vertices));
            seen = seen.union(block.vertices);
        }
    }
    let rooted = classes::rooted_blocks(g, &cut.to_vec());
    let mut out = Vec::new();
    for (block, attach) in rooted {
        if !block.is_cycle() {
            continue;
        }
        let inner = block.vertices.remove(attach);
        let edge = inner
            .iter()
            .flat_map(|u| {
                g.neighbors(u)
                    .intersection(inner)
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| Edge::new(u, v))
            })
            .min_by_key(|e| (cut.contains(e.u) || cut.contains(e.v), *e))
            .expect("a cycle has an edge avoiding any one vertex");
        out.push(edge);
    }
    out.sort();
    Ok(out)
}
