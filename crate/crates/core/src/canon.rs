//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree is explored in full except for subtrees that an already
//! discovered automorphism maps onto an explored sibling. Among all leaves the
//! relabelled adjacency with the greatest row sequence is canonical.

use crate::graph::{Graph, VertexSet};

/// Labelling-independent encoding: order byte followed by the relabelled rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    fn from_rows(n: usize, rows: &[u64]) -> Self {
        let width = n.div_ceil(8).max(1);
        let mut bytes = Vec::with_capacity(1 + n * width);
        bytes.push(n as u8);
        for &r in rows {
            // big-endian so byte order matches numeric order of rows
            bytes.extend_from_slice(&r.to_be_bytes()[8 - width..]);
        }
        CanonicalForm(bytes)
    }
}

/// The canonical form and a labelling achieving it: `g.permuted(&perm)` is
/// the canonical representative.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    if n <= 1 {
        return (CanonicalForm::from_rows(n, &vec![0; n]), (0..n).collect());
    }
    let mut search = Search { g, best: None, automorphisms: Vec::new() };
    let root = refine(g, vec![g.vertices()]);
    search.visit(root, &mut Vec::new());
    let (rows, perm) = search.best.expect("the tree has at least one leaf");
    (CanonicalForm::from_rows(n, &rows), perm)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g).1)
}

type Partition = Vec<VertexSet>;

/// Refine an ordered partition until every cell has a uniform neighbour count
/// into every other cell. Split pieces are ordered by increasing count, which
/// depends only on the structure, so the result commutes with relabelling.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    let mut changed = true;
    while changed {
        changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(cells.len());
            for &cell in &cells {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut counts: Vec<(usize, usize)> =
                    cell.iter().map(|v| (g.degree_in(v, splitter), v)).collect();
                counts.sort_unstable();
                let mut start = 0;
                for idx in 1..=counts.len() {
                    if idx == counts.len() || counts[idx].0 != counts[start].0 {
                        next.push(counts[start..idx].iter().map(|&(_, v)| v).collect());
                        start = idx;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
                cells = next;
            }
            s += 1;
        }
    }
    cells
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Partition, prefix: &mut Vec<usize>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(idx, c)| (c.len(), *idx))
            .map(|(idx, _)| idx);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for v in cells[t] {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            let mut child = cells.clone();
            child[t] = cells[t].remove(v);
            child.insert(t, VertexSet::singleton(v));
            prefix.push(v);
            self.visit(refine(self.g, child), prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, cells: &Partition) {
        let perm: Vec<usize> = cells.iter().map(|c| c.first().expect("discrete cell")).collect();
        let rows = self.g.permuted(&perm).rows().to_vec();
        match &self.best {
            Some((best_rows, best_perm)) if *best_rows == rows => {
                // both labellings give the same graph: perm[p] <-> best_perm[p]
                let mut auto = vec![0; perm.len()];
                for (p, &v) in best_perm.iter().enumerate() {
                    auto[v] = perm[p];
                }
                self.automorphisms.push(auto);
            }
            Some((best_rows, _)) if *best_rows > rows => {}
            _ => self.best = Some((rows, perm)),
        }
    }

    /// Is `v` in the orbit of an explored vertex under the automorphisms
    /// found so far that fix `prefix` pointwise?
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for auto in &self.automorphisms {
            if prefix.iter().all(|&p| auto[p] == p) {
                any = true;
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, auto[x]));
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

/// Brute-force isomorphism test over all bijections. Oracle for small orders.
pub fn isomorphic_brute_force(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: VertexSet) -> bool {
        let u = map.len();
        if u == a.order() {
            return true;
        }
        for w in b.vertices().difference(used) {
            if b.degree(w) != a.degree(u) {
                continue;
            }
            if (0..u).all(|x| a.has_edge(x, u) == b.has_edge(map[x], w)) {
                map.push(w);
                if extend(a, b, map, used.insert(w)) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(a, b, &mut Vec::with_capacity(n), VertexSet::EMPTY)
}
