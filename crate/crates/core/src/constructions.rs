//! Extremal graphs: for each proved cell, a graph on R - 1 vertices in the
//! class with neither a k-dense i-set nor a k-sparse j-set.

use std::fmt;
use std::str::FromStr;

use crate::classes::{self, GraphClass};
use crate::formulas::{defective_ramsey, RamseyQuery};
use crate::graph::named::{complete_bipartite, cycle, path, star};
use crate::graph::{Graph, MAX_ORDER};
use crate::sets::ramsey_check;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("construction `{name}` is not defined for {detail}")]
    Domain { name: &'static str, detail: String },
    #[error("unknown named graph `{0}`")]
    UnknownName(String),
    #[error("witness for {query} failed validation: {property}")]
    Validation { query: RamseyQuery, property: String },
}

fn domain(name: &'static str, detail: impl Into<String>) -> ConstructionError {
    ConstructionError::Domain { name, detail: detail.into() }
}

fn empty(n: usize) -> Graph {
    Graph::empty(n).expect("order checked by caller")
}

fn complete(n: usize) -> Graph {
    Graph::complete(n).expect("order checked by caller")
}

fn union(a: &Graph, b: &Graph) -> Graph {
    a.disjoint_union(b).expect("order checked by caller")
}

/// `s` copies of K_{1,k+1} and `t` isolated vertices, where `j - 1 = (k+1)s + t`.
/// With `k = 0` this is a matching on `j - 1` edges.
pub fn forest_witness(k: usize, j: usize) -> Result<Graph, ConstructionError> {
    if j < k + 2 {
        return Err(domain("forest_witness", format!("k = {k}, j = {j} (need j >= k+2)")));
    }
    let (s, t) = ((j - 1) / (k + 1), (j - 1) % (k + 1));
    if (k + 2) * s + t > MAX_ORDER {
        return Err(domain("forest_witness", format!("order {} > {MAX_ORDER}", (k + 2) * s + t)));
    }
    Ok(union(&star(k + 1).copies(s).expect("order checked"), &empty(t)))
}

/// The chain of `l` four-cycles whose hubs carry pendant leaves: `k` on the
/// first hub, `k - 2` on interior hubs, `k - 1` on the last. Order
/// `(k+1)(l+1) + 1`; `G_{k,0}` is `K_{1,k+1}`.
///
/// Vertices: hubs `0..=l`, then the two middle vertices of each cycle, then leaves.
pub fn cactus_g(k: usize, l: usize) -> Result<Graph, ConstructionError> {
    if k < 2 {
        return Err(domain("cactus_g", format!("k = {k} (need k >= 2)")));
    }
    let order = (k + 1) * (l + 1) + 1;
    if order > MAX_ORDER {
        return Err(domain("cactus_g", format!("order {order} > {MAX_ORDER}")));
    }
    if l == 0 {
        return Ok(star(k + 1));
    }
    let mut edges = Vec::new();
    let mut next = l + 1;
    for c in 0..l {
        for _ in 0..2 {
            edges.push((c, next));
            edges.push((c + 1, next));
            next += 1;
        }
    }
    for hub in 0..=l {
        let leaves = match hub {
            0 => k,
            h if h == l => k - 1,
            _ => k - 2,
        };
        for _ in 0..leaves {
            edges.push((hub, next));
            next += 1;
        }
    }
    debug_assert_eq!(next, order);
    Ok(Graph::from_edges(order, edges).expect("order checked"))
}

/// A path `v_0 .. v_{l-3}` with an apex over each consecutive pair (so `l - 3`
/// triangles) and a pendant edge at each end. Order `2l - 3`.
///
/// Vertices: the path `0..=l-3`, apexes next, then the two pendants.
pub fn cactus_h(l: usize) -> Result<Graph, ConstructionError> {
    if l < 4 {
        return Err(domain("cactus_h", format!("l = {l} (need l >= 4)")));
    }
    let order = 2 * l - 3;
    if order > MAX_ORDER {
        return Err(domain("cactus_h", format!("order {order} > {MAX_ORDER}")));
    }
    let m = l - 3;
    let mut edges: Vec<(usize, usize)> = (0..m).map(|v| (v, v + 1)).collect();
    for t in 0..m {
        let apex = m + 1 + t;
        edges.push((t, apex));
        edges.push((t + 1, apex));
    }
    edges.push((0, 2 * m + 1));
    edges.push((m, 2 * m + 2));
    Ok(Graph::from_edges(order, edges).expect("order checked"))
}

/// Cactus witnesses for the cells the cactus formula marks exact.
pub fn cactus_witness(k: usize, i: usize, j: usize) -> Result<Graph, ConstructionError> {
    let refuse = || domain("cactus_witness", format!("k = {k}, i = {i}, j = {j}"));
    if let Some(g) = small_witness(GraphClass::Cactus, k, i, j) {
        return Ok(g);
    }
    match k {
        0 if i == 3 => {
            let c5s = cycle(5).copies((j - 1) / 2).map_err(|_| refuse())?;
            let tail = if (j - 1) % 2 == 1 { complete(2) } else { empty(0) };
            c5s.disjoint_union(&tail).map_err(|_| refuse())
        }
        0 => complete(3).copies(j - 1).map_err(|_| refuse()),
        1 if i == 4 && j == 3 => Ok(path(3)),
        1 if i == 4 => cactus_h(j),
        1 => {
            let c4s = cycle(4).copies((j - 1) / 2).map_err(|_| refuse())?;
            c4s.disjoint_union(&empty(usize::from(j.is_multiple_of(2)))).map_err(|_| refuse())
        }
        _ if k <= 3 || i >= k + 4 => {
            let (s, t) = ((j - 1) / k, (j - 1) % k);
            if t != 0 {
                cactus_g(k, s - 1)?.disjoint_union(&empty(t - 1)).map_err(|_| refuse())
            } else {
                cactus_g(k, s - 2)?.disjoint_union(&empty(k - 1)).map_err(|_| refuse())
            }
        }
        // i = k+3 with k >= 4: exact only where the star forest is optimal
        _ => forest_witness(k, j),
    }
}

/// Bipartite graphs on 14, 16, 24 and 26 vertices with no 1-dense 4-set, used for R_1(4, j).
///
/// `G1` (the Heawood graph) and `G2` are cycles `C14`, `C16` with chords from
/// each even vertex `v` to `v + 5`; `G4` is `C26` with chords from each even
/// `v` to `v + 7` and `v + 11`; `G3` is `G4` minus its last two vertices.
pub fn bipartite_gm(m: usize) -> Result<Graph, ConstructionError> {
    let circulant = |n: usize, offsets: &[usize]| {
        let mut edges: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        for v in (0..n).step_by(2) {
            for &o in offsets {
                edges.push((v, (v + o) % n));
            }
        }
        Graph::from_edges(n, edges).expect("order below 64")
    };
    match m {
        1 => Ok(circulant(14, &[5])),
        2 => Ok(circulant(16, &[5])),
        3 => Ok(circulant(26, &[7, 11]).induced(crate::graph::VertexSet::full(24))),
        4 => Ok(circulant(26, &[7, 11])),
        _ => Err(domain("bipartite_gm", format!("m = {m} (need 1..=4)"))),
    }
}

/// Lexicographically least nonnegative `(a, b, c, d)` with `7a + 8b + 12c + 13d = total`.
pub fn gm_decomposition(total: usize) -> Option<[usize; 4]> {
    for a in 0..=total / 7 {
        let r1 = total - 7 * a;
        for b in 0..=r1 / 8 {
            let r2 = r1 - 8 * b;
            for c in 0..=r2 / 12 {
                let r3 = r2 - 12 * c;
                if r3.is_multiple_of(13) {
                    return Some([a, b, c, r3 / 13]);
                }
            }
        }
    }
    None
}

pub fn bipartite_witness(k: usize, i: usize, j: usize) -> Result<Graph, ConstructionError> {
    let refuse = || domain("bipartite_witness", format!("k = {k}, i = {i}, j = {j}"));
    if let Some(g) = small_witness(GraphClass::Bipartite, k, i, j) {
        return Ok(g);
    }
    let kjj = || {
        if 2 * (j - 1) > MAX_ORDER {
            return Err(refuse());
        }
        Ok(complete_bipartite(j - 1, j - 1))
    };
    match k {
        0 => kjj(),
        1 if i >= 5 => kjj(),
        1 => match j {
            3 => Ok(star(2)),
            4 => Ok(star(3)),
            5 => Ok(cycle(6)),
            6 => Ok(cycle(8)),
            _ => {
                let [a, b, c, d] = gm_decomposition(j - 1).ok_or_else(refuse)?;
                if 2 * (j - 1) > MAX_ORDER {
                    return Err(refuse());
                }
                let parts = [(1, a), (2, b), (3, c), (4, d)];
                let mut out = empty(0);
                for (m, copies) in parts {
                    out = union(&out, &bipartite_gm(m)?.copies(copies).map_err(|_| refuse())?);
                }
                Ok(out)
            }
        },
        _ if i >= 2 * k + 3 && j <= 2 * k => Ok(complete_bipartite(j - k - 1, j - 1)),
        _ if i >= 2 * k + 3 => kjj(),
        _ => Err(refuse()),
    }
}

/// Clique `a_1..a_{i-1}` (vertices `0..i-1`) and independent `b_1..b_{j-1}`,
/// with `a_s` joined to `b_{(s-1)(k+1)+t}` for `t = 1..=k+1`, indices mod `j - 1`.
pub fn split_witness_general(k: usize, i: usize, j: usize) -> Result<Graph, ConstructionError> {
    if i < k + 3 || j < k + 3 || (i - k - 2) * (j - k - 2) < (k + 1).pow(2) {
        return Err(domain("split_witness_general", format!("k = {k}, i = {i}, j = {j}")));
    }
    let order = i + j - 2;
    if order > MAX_ORDER {
        return Err(domain("split_witness_general", format!("order {order} > {MAX_ORDER}")));
    }
    let mut edges = Vec::new();
    for a in 0..i - 1 {
        for b in a + 1..i - 1 {
            edges.push((a, b));
        }
        for t in 1..=k + 1 {
            // b_q sits at vertex i-2+q; q = 0 stands for q = j-1
            let q = (a * (k + 1) + t) % (j - 1);
            let q = if q == 0 { j - 1 } else { q };
            edges.push((a, i - 2 + q));
        }
    }
    Ok(Graph::from_edges(order, edges).expect("order checked"))
}

/// Clique `A + B + C` with `|A| = |B| = i-k-2`, `|C| = 2k+3-i`, independent
/// `D + E` with `|D| = |E| = i-k-2`, `A` complete to `D`, `B` complete to `E`.
pub fn split_witness_diagonal(k: usize, i: usize) -> Result<Graph, ConstructionError> {
    if !(k + 3..=2 * k + 2).contains(&i) {
        return Err(domain("split_witness_diagonal", format!("k = {k}, i = {i}")));
    }
    let p = i - k - 2;
    let clique = i - 1;
    let order = clique + 2 * p;
    let mut edges = Vec::new();
    for a in 0..clique {
        for b in a + 1..clique {
            edges.push((a, b));
        }
    }
    for x in 0..p {
        for y in 0..p {
            edges.push((x, clique + y));
            edges.push((p + x, clique + p + y));
        }
    }
    Ok(Graph::from_edges(order, edges).expect("order at most 3i - 2k - 5"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplitSmall {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
}

impl FromStr for SplitSmall {
    type Err = ConstructionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "s1" => SplitSmall::S1,
            "s2" => SplitSmall::S2,
            "s3" => SplitSmall::S3,
            "s4" => SplitSmall::S4,
            "s5" => SplitSmall::S5,
            "s6" => SplitSmall::S6,
            "s7" => SplitSmall::S7,
            _ => return Err(ConstructionError::UnknownName(s.to_string())),
        })
    }
}

impl fmt::Display for SplitSmall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// The small split graphs for k in {1, 2}. Clique vertices `x_1..` come first,
/// then `y_1..`. `extra_isolated` pads `S7` only.
pub fn split_small(name: SplitSmall, extra_isolated: usize) -> Result<Graph, ConstructionError> {
    if extra_isolated > 0 && name != SplitSmall::S7 {
        return Err(domain("split_small", format!("{name} with {extra_isolated} extra isolated vertices")));
    }
    // (clique size, order, x-to-y adjacency as (x, y) 1-based)
    let (clique, order, xy): (usize, usize, &[(usize, usize)]) = match name {
        SplitSmall::S1 => (2, 6, &[(1, 1), (1, 2), (2, 3), (2, 4)]),
        SplitSmall::S3 => (4, 10, &[(1, 1), (1, 2), (1, 3), (3, 1), (3, 2), (3, 3), (2, 4), (2, 5), (2, 6), (4, 4), (4, 5), (4, 6)]),
        SplitSmall::S5 => (4, 7, &[(1, 1), (2, 2), (3, 3)]),
        SplitSmall::S6 => (4, 8, &[(1, 1), (2, 2), (3, 3)]),
        SplitSmall::S7 => (4, 10, &[(1, 1), (1, 2), (2, 3), (2, 4), (3, 5), (3, 6)]),
        // S2 and S4 add one clique vertex adjacent to the old clique only
        SplitSmall::S2 => return Ok(with_clique_vertex(&split_small(SplitSmall::S1, 0)?, 2)),
        SplitSmall::S4 => return Ok(with_clique_vertex(&split_small(SplitSmall::S3, 0)?, 4)),
    };
    let mut edges = Vec::new();
    for a in 0..clique {
        for b in a + 1..clique {
            edges.push((a, b));
        }
    }
    edges.extend(xy.iter().map(|&(x, y)| (x - 1, clique + y - 1)));
    let g = Graph::from_edges(order, edges).expect("fixed small order");
    Ok(union(&g, &empty(extra_isolated)))
}

fn with_clique_vertex(g: &Graph, clique: usize) -> Graph {
    g.with_vertex(crate::graph::VertexSet::full(clique)).expect("fixed small order")
}

/// Cograph witnesses, built by the recursion on `j` (then `i` via complement).
pub fn cograph_witness(k: usize, i: usize, j: usize) -> Result<Graph, ConstructionError> {
    if i < k + 2 || j < k + 2 {
        return Err(domain("cograph_witness", format!("k = {k}, i = {i}, j = {j} (need i, j >= k+2)")));
    }
    let value = crate::formulas::cograph_formula(k, i, j).exact_value().expect("cograph values are exact");
    if value - 1 > MAX_ORDER {
        return Err(domain("cograph_witness", format!("order {} > {MAX_ORDER}", value - 1)));
    }
    Ok(cograph_build(k, i, j))
}

fn cograph_build(k: usize, i: usize, j: usize) -> Graph {
    if i == k + 2 {
        return empty(j - 1);
    }
    if j == k + 2 {
        return complete(i - 1);
    }
    if j >= 2 * k + 3 {
        let t = complete(i - k - 2).join(&empty(k + 1)).expect("small");
        return union(&t, &cograph_build(k, i, j - k - 1));
    }
    if i >= 2 * k + 3 {
        return cograph_build(k, j, i).complement();
    }
    complete(i - k - 2).join(&empty(j - 1)).expect("order checked")
}

/// Cells every class shares: tiny sizes, `i = k+2`, and (self-complementary
/// classes) `j = k+2`.
fn small_witness(class: GraphClass, k: usize, i: usize, j: usize) -> Option<Graph> {
    if i.min(j) <= k + 1 {
        Some(empty(i.min(j) - 1))
    } else if i == k + 2 {
        Some(empty(j - 1))
    } else if j == k + 2 && class.is_self_complementary() {
        Some(complete(i - 1))
    } else {
        None
    }
}

fn split_witness(k: usize, i: usize, j: usize) -> Result<Option<Graph>, ConstructionError> {
    if let Some(g) = small_witness(GraphClass::Split, k, i, j) {
        return Ok(Some(g));
    }
    if i > j {
        return Ok(split_witness(k, j, i)?.map(|g| g.complement()));
    }
    if (i - k - 2) * (j - k - 2) >= (k + 1).pow(2) {
        return split_witness_general(k, i, j).map(Some);
    }
    if i == j {
        return split_witness_diagonal(k, i).map(Some);
    }
    let g = match (k, i, j) {
        (1, 4, 5) => split_small(SplitSmall::S1, 0)?,
        (1, 4, 6) => split_small(SplitSmall::S2, 0)?,
        (2, 5, 6) => split_small(SplitSmall::S5, 0)?,
        (2, 5, 7) => split_small(SplitSmall::S6, 0)?,
        (2, 5, 8..=12) => split_small(SplitSmall::S7, j - 8)?,
        (2, 6, 7) => split_small(SplitSmall::S3, 0)?,
        (2, 6, 8) => split_small(SplitSmall::S4, 0)?,
        _ => return Ok(None),
    };
    Ok(Some(g))
}

/// A validated extremal graph for an exact cell, or `None` when the cell is
/// open, conjectured, has no construction, or would exceed 64 vertices.
pub fn witness_for(q: RamseyQuery) -> Result<Option<Graph>, ConstructionError> {
    let Some(value) = defective_ramsey(q).exact_value() else {
        return Ok(None);
    };
    let order = value - 1;
    if order > MAX_ORDER {
        return Ok(None);
    }
    let RamseyQuery { class, k, i, j } = q;
    let built = match class {
        GraphClass::Forest => match small_witness(class, k, i, j) {
            Some(g) => Ok(g),
            None => forest_witness(k, j),
        },
        GraphClass::Cactus => cactus_witness(k, i, j),
        GraphClass::Bipartite => bipartite_witness(k, i, j),
        GraphClass::Split => match split_witness(k, i, j) {
            Ok(Some(g)) => Ok(g),
            Ok(None) => return Ok(None),
            Err(e) => Err(e),
        },
        GraphClass::Cograph => match small_witness(class, k, i, j) {
            Some(g) => Ok(g),
            None => cograph_witness(k, i, j),
        },
        GraphClass::AllGraphs => unreachable!("queries never target the unrestricted class"),
    };
    let g = match built {
        Ok(g) => g,
        Err(ConstructionError::Domain { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    validate_witness(q, &g, order)?;
    Ok(Some(g))
}

/// Check order, class membership, and that neither defective set exists.
pub fn validate_witness(q: RamseyQuery, g: &Graph, order: usize) -> Result<(), ConstructionError> {
    let fail = |property: String| Err(ConstructionError::Validation { query: q, property });
    if g.order() != order {
        return fail(format!("order {} instead of {order}", g.order()));
    }
    if !classes::member(g, q.class) {
        return fail(format!("graph is not in class {}", q.class));
    }
    let report = ramsey_check(g, q.k, q.i, q.j);
    if let Some(d) = report.dense_witness {
        return fail(format!("{}-dense {}-set {d}", q.k, q.i));
    }
    if let Some(s) = report.sparse_witness {
        return fail(format!("{}-sparse {}-set {s}", q.k, q.j));
    }
    Ok(())
}

/// Graphs by stable tag: `g1`..`g4`, `s1`..`s7`, `gkl:K:L`, `hl:L`.
pub fn named_graph(tag: &str) -> Result<Graph, ConstructionError> {
    let unknown = || ConstructionError::UnknownName(tag.to_string());
    let lower = tag.to_ascii_lowercase();
    let mut parts = lower.split(':');
    let head = parts.next().unwrap_or_default();
    let nums: Vec<usize> = parts.map(|p| p.parse().map_err(|_| unknown())).collect::<Result<_, _>>()?;
    match (head, nums.as_slice()) {
        ("g1", []) => bipartite_gm(1),
        ("g2", []) => bipartite_gm(2),
        ("g3", []) => bipartite_gm(3),
        ("g4", []) => bipartite_gm(4),
        ("gkl", [k, l]) => cactus_g(*k, *l),
        ("hl", [l]) => cactus_h(*l),
        (s, []) if s.starts_with('s') => split_small(s.parse()?, 0),
        ("s7", [extra]) => split_small(SplitSmall::S7, *extra),
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use crate::sets::{alpha_k, is_k_sparse};

    fn q(class: GraphClass, k: usize, i: usize, j: usize) -> RamseyQuery {
        RamseyQuery::new(class, k, i, j).unwrap()
    }

    #[test]
    fn forest_witness_examples() {
        let g = forest_witness(1, 4).unwrap();
        assert_eq!((g.order(), alpha_k(&g, 1).0), (4, 3));
        let g = forest_witness(2, 7).unwrap();
        assert_eq!((g.order(), alpha_k(&g, 2).0), (8, 6));
        let g = forest_witness(1, 3).unwrap();
        assert_eq!((g.order(), alpha_k(&g, 1).0), (3, 2));
        assert!(forest_witness(2, 3).is_err());
    }

    #[test]
    fn cactus_g_examples() {
        let g = cactus_g(2, 0).unwrap();
        assert_eq!(g, star(3));
        let g = cactus_g(2, 3).unwrap();
        assert_eq!((g.order(), alpha_k(&g, 2).0), (13, 9));
        let g = cactus_g(3, 2).unwrap();
        assert_eq!((g.order(), alpha_k(&g, 3).0), (13, 10));
        assert!(classes::is_cactus(&g));
        assert!(cactus_g(1, 2).is_err());
        // the unique vertex of degree k+1 is the last hub
        let g = cactus_g(4, 3).unwrap();
        let hubs: Vec<_> = (0..g.order()).filter(|&v| g.degree(v) == 5).collect();
        assert_eq!(hubs, vec![3]);
    }

    #[test]
    fn cactus_h_examples() {
        assert_eq!(cactus_h(4).unwrap().order(), 5);
        let h5 = cactus_h(5).unwrap();
        assert_eq!((h5.order(), alpha_k(&h5, 1).0), (7, 4));
        let h6 = cactus_h(6).unwrap();
        assert!(classes::is_cactus(&h6));
        assert!(ramsey_check(&h6, 1, 4, 6).is_avoiding());
        assert!(cactus_h(3).is_err());
    }

    #[test]
    fn cactus_witness_examples() {
        let g = cactus_witness(1, 5, 5).unwrap();
        assert_eq!((g.order(), alpha_k(&g, 1).0), (8, 4));
        let g = cactus_witness(2, 6, 7).unwrap();
        assert_eq!(g, cactus_g(2, 1).unwrap().disjoint_union(&empty(1)).unwrap());
        assert_eq!((g.order(), alpha_k(&g, 2).0), (8, 6));
        assert_eq!(cactus_witness(1, 4, 6).unwrap(), cactus_h(6).unwrap());
    }

    #[test]
    fn gm_parameters() {
        let g1 = bipartite_gm(1).unwrap();
        assert_eq!((g1.order(), g1.edge_count(), g1.girth()), (14, 21, Some(6)));
        assert!((0..14).all(|v| g1.degree(v) == 3));
        let g2 = bipartite_gm(2).unwrap();
        assert!((0..16).all(|v| g2.degree(v) == 3));
        let g4 = bipartite_gm(4).unwrap();
        assert!((0..26).all(|v| g4.degree(v) == 4));
        let g3 = bipartite_gm(3).unwrap();
        assert_eq!(g3.order(), 24);
        for g in [&g1, &g2, &g3, &g4] {
            let (a, _) = classes::bipartition(g).unwrap();
            assert_eq!(a, VertexSet::from_vertices((0..g.order()).step_by(2)));
            assert!(g.girth().unwrap() >= 6, "C4-free");
        }
        assert!(bipartite_gm(5).is_err());
    }

    #[test]
    fn gm_alpha_values() {
        let expect = [7, 8, 12, 13];
        for (m, want) in (1..=4).zip(expect) {
            assert_eq!(alpha_k(&bipartite_gm(m).unwrap(), 1).0, want, "G{m}");
        }
    }

    #[test]
    fn decomposition() {
        assert_eq!(gm_decomposition(20), Some([0, 1, 1, 0]));
        assert_eq!(gm_decomposition(14), Some([2, 0, 0, 0]));
        for bad in [9, 10, 11, 17, 18] {
            assert_eq!(gm_decomposition(bad), None);
        }
        for total in (19..60).chain(14..=16) {
            let [a, b, c, d] = gm_decomposition(total).unwrap();
            assert_eq!(7 * a + 8 * b + 12 * c + 13 * d, total);
        }
    }

    #[test]
    fn bipartite_witness_examples() {
        assert_eq!(bipartite_witness(1, 5, 4).unwrap(), complete_bipartite(3, 3));
        assert_eq!(bipartite_witness(1, 4, 5).unwrap(), cycle(6));
        let g = bipartite_witness(1, 4, 21).unwrap();
        assert_eq!((g.order(), alpha_k(&g, 1).0), (40, 20));
        assert_eq!(bipartite_witness(2, 7, 4).unwrap(), star(3));
        assert!(bipartite_witness(1, 4, 7).is_err());
    }

    #[test]
    fn split_general_examples() {
        let g = split_witness_general(1, 5, 6).unwrap();
        assert_eq!(g.order(), 9);
        let indep = VertexSet::full(9).difference(VertexSet::full(4));
        for a in 0..4 {
            assert_eq!(g.degree_in(a, indep), 2);
        }
        let g = split_witness_general(2, 7, 7).unwrap();
        assert_eq!(g.order(), 12);
        assert!(ramsey_check(&g, 2, 7, 7).is_avoiding());
        let g = split_witness_general(0, 3, 3).unwrap();
        assert_eq!(g, Graph::from_edges(4, [(0, 1), (0, 2), (1, 3)]).unwrap());
        assert!(split_witness_general(2, 5, 6).is_err());
    }

    #[test]
    fn split_general_degree_balance() {
        for (k, i, j) in [(1, 5, 6), (2, 7, 9), (3, 9, 12), (1, 7, 5)] {
            let g = split_witness_general(k, i, j).unwrap();
            let degs: Vec<_> = (i - 1..g.order()).map(|b| g.degree(b)).collect();
            let (lo, hi) = (degs.iter().min().unwrap(), degs.iter().max().unwrap());
            assert!(hi - lo <= 1, "{degs:?}");
        }
    }

    #[test]
    fn split_diagonal_examples() {
        assert_eq!(split_witness_diagonal(1, 4).unwrap().order(), 5);
        let g = split_witness_diagonal(2, 6).unwrap();
        assert_eq!(g.order(), 9);
        assert!(ramsey_check(&g, 2, 6, 6).is_avoiding());
        let g = split_witness_diagonal(3, 8).unwrap();
        assert_eq!(g.order(), 13);
        assert!(classes::split_partition(&g).is_some());
        assert!(split_witness_diagonal(2, 7).is_err());
    }

    #[test]
    fn split_small_examples() {
        let s1 = split_small(SplitSmall::S1, 0).unwrap();
        assert!(ramsey_check(&s1, 1, 4, 5).is_avoiding());
        let s3 = split_small(SplitSmall::S3, 0).unwrap();
        assert_eq!(s3.order(), 10);
        assert!(ramsey_check(&s3, 2, 6, 7).is_avoiding());
        let (k, i) = classes::split_partition(&s3).unwrap();
        assert_eq!((k, i), (VertexSet::full(4), VertexSet::full(10).difference(VertexSet::full(4))));
        let s7 = split_small(SplitSmall::S7, 2).unwrap();
        assert_eq!(s7.order(), 12);
        assert!(ramsey_check(&s7, 2, 5, 10).is_avoiding());
        assert!(split_small(SplitSmall::S1, 1).is_err());
    }

    #[test]
    fn cograph_witness_examples() {
        assert_eq!(cograph_witness(1, 4, 4).unwrap(), star(3));
        let g = cograph_witness(1, 4, 6).unwrap();
        assert_eq!(g.order(), 7);
        assert!(ramsey_check(&g, 1, 4, 6).is_avoiding());
        let g = cograph_witness(2, 9, 5).unwrap();
        assert_eq!(g, cograph_witness(2, 5, 9).unwrap().complement());
        assert!(ramsey_check(&g, 2, 9, 5).is_avoiding());
    }

    #[test]
    fn witness_for_examples() {
        let g = witness_for(q(GraphClass::Forest, 1, 4, 4)).unwrap().unwrap();
        assert_eq!(g.order(), 4);
        assert!(witness_for(q(GraphClass::Bipartite, 1, 4, 10)).unwrap().is_none());
        let g = witness_for(q(GraphClass::Split, 2, 5, 9)).unwrap().unwrap();
        assert_eq!(g, split_small(SplitSmall::S7, 1).unwrap());
        // too large for the 64-vertex representation
        assert!(witness_for(q(GraphClass::Cograph, 0, 12, 12)).unwrap().is_none());
    }

    #[test]
    fn leaves_of_gkl_are_sparse() {
        let g = cactus_g(3, 2).unwrap();
        let leaves: VertexSet = (0..g.order()).filter(|&v| g.degree(v) == 1).collect();
        assert!(is_k_sparse(&g, leaves, 0));
    }

    #[test]
    fn validation_reports_failures() {
        let err = validate_witness(q(GraphClass::Forest, 1, 4, 4), &empty(4), 4).unwrap_err();
        assert!(matches!(err, ConstructionError::Validation { .. }));
    }

    #[test]
    fn named_tags() {
        assert_eq!(named_graph("g1").unwrap().order(), 14);
        assert_eq!(named_graph("gkl:2:3").unwrap().order(), 13);
        assert_eq!(named_graph("hl:6").unwrap().order(), 9);
        assert_eq!(named_graph("S4").unwrap().order(), 11);
        assert!(named_graph("k5").is_err());
    }
}
