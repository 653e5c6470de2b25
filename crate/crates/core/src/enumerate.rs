//! Isomorph-free generation of class members and exhaustive verification of values.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, canonical_labeling, CanonicalForm};
use crate::classes::{member, GraphClass};
use crate::formulas::{Provenance, RamseyValue};
use crate::graph::{Graph, VertexSet};
use crate::graph6;
use crate::sets::ramsey_check;

/// Environment variable overriding the default order budget.
pub const BUDGET_ENV: &str = "DEFECTIVE_RAMSEY_MAX_ORDER";

/// Default largest order the enumerator accepts for a class.
pub fn default_budget(class: GraphClass) -> usize {
    match class {
        GraphClass::Forest | GraphClass::Split => 12,
        _ => 10,
    }
}

/// The budget for `class`, honouring [`BUDGET_ENV`] when it holds a positive integer.
pub fn budget(class: GraphClass) -> usize {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&b| b >= 1)
        .unwrap_or_else(|| default_budget(class))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("order {requested} exceeds the enumeration budget {limit} for class {class}; set {BUDGET_ENV} to raise it")]
    BudgetExceeded { class: GraphClass, requested: usize, limit: usize },
}

fn check_budget(class: GraphClass, n: usize, limit: usize) -> Result<(), EnumerationError> {
    if n > limit {
        Err(EnumerationError::BudgetExceeded { class, requested: n, limit })
    } else {
        Ok(())
    }
}

/// One representative per isomorphism class of order-`n` members of `class`,
/// each in canonical labelling, sorted by canonical form.
pub fn enumerate_class(class: GraphClass, n: usize) -> Result<Vec<Graph>, EnumerationError> {
    Ok(enumerate_levels(class, n)?.pop().expect("levels include order n"))
}

/// Representatives for every order `0..=n`.
pub fn enumerate_levels(class: GraphClass, n: usize) -> Result<Vec<Vec<Graph>>, EnumerationError> {
    enumerate_levels_with_budget(class, n, budget(class))
}

pub fn enumerate_levels_with_budget(
    class: GraphClass,
    n: usize,
    limit: usize,
) -> Result<Vec<Vec<Graph>>, EnumerationError> {
    check_budget(class, n, limit)?;
    let mut levels = vec![vec![Graph::empty(0).expect("order 0")]];
    for _ in 1..=n {
        let next = extend_level(class, levels.last().expect("nonempty"));
        levels.push(next);
    }
    Ok(levels)
}

/// All accepted one-vertex extensions of the parents, deduplicated and sorted.
///
/// An extension by a new vertex `v` is accepted iff `v` has minimum degree
/// and deleting it gives the same isomorphism class as deleting the
/// canonically first minimum-degree vertex. Every class member therefore
/// arises from exactly one parent class; repeats within a parent are removed
/// by canonical form.
fn extend_level(class: GraphClass, parents: &[Graph]) -> Vec<Graph> {
    let mut children: Vec<(CanonicalForm, Graph)> = parents
        .par_iter()
        .flat_map_iter(|parent| extend_parent(class, parent))
        .collect();
    children.sort_by(|a, b| a.0.cmp(&b.0));
    children.into_iter().map(|(_, g)| g).collect()
}

fn extend_parent(class: GraphClass, parent: &Graph) -> Vec<(CanonicalForm, Graph)> {
    let m = parent.order();
    let parent_form = canonical_form(parent);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << m) {
        let nbrs = VertexSet(mask);
        let d = nbrs.len();
        // the new vertex must have minimum degree in the child
        if (0..m).any(|u| parent.degree(u) + usize::from(nbrs.contains(u)) < d) {
            continue;
        }
        let child = parent.with_vertex(nbrs).expect("order below 64");
        if !member(&child, class) {
            continue;
        }
        let (form, perm) = canonical_labeling(&child);
        let target = perm
            .iter()
            .copied()
            .find(|&v| child.degree(v) == d)
            .expect("the new vertex has minimum degree");
        if target != m && canonical_form(&child.without_vertex(target)) != parent_form {
            continue;
        }
        if seen.insert(form.clone()) {
            out.push((form, child.permuted(&perm)));
        }
    }
    out
}

/// Outcome of exhaustively testing a claimed value `R_k(i, j) = claimed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub class: GraphClass,
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub claimed: usize,
    /// Graphs checked at order `claimed`.
    pub examined: usize,
    /// Graphs checked at order `claimed - 1`.
    pub examined_below: usize,
    /// Order-`claimed` members with neither set, in graph6.
    pub counterexamples: Vec<String>,
    pub all_pass: bool,
    /// An order-`claimed - 1` member with neither set, in graph6.
    pub lower_witness: Option<String>,
    /// `all_pass` and a lower witness exists.
    pub confirmed: bool,
    pub elapsed_ms: u128,
}

fn avoiding(g: &Graph, k: usize, i: usize, j: usize) -> bool {
    ramsey_check(g, k, i, j).is_avoiding()
}

fn g6(g: &Graph) -> String {
    graph6::encode(g).expect("enumerated orders fit graph6")
}

pub fn verify_value(
    class: GraphClass,
    k: usize,
    i: usize,
    j: usize,
    claimed: usize,
) -> Result<EnumerationReport, EnumerationError> {
    let start = Instant::now();
    let levels = enumerate_levels(class, claimed)?;
    let top = &levels[claimed];
    let counterexamples: Vec<String> =
        top.par_iter().filter(|g| avoiding(g, k, i, j)).map(g6).collect();
    let (below_count, lower_witness) = if claimed == 0 {
        (0, None)
    } else {
        let below = &levels[claimed - 1];
        (below.len(), below.par_iter().find_first(|g| avoiding(g, k, i, j)).map(g6))
    };
    let all_pass = counterexamples.is_empty();
    Ok(EnumerationReport {
        class,
        k,
        i,
        j,
        claimed,
        examined: top.len(),
        examined_below: below_count,
        confirmed: all_pass && lower_witness.is_some(),
        all_pass,
        counterexamples,
        lower_witness,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// The least `n <= n_max` at which every member passes, found by enumeration.
pub fn compute_ramsey_exhaustive(
    class: GraphClass,
    k: usize,
    i: usize,
    j: usize,
    n_max: usize,
) -> Result<Option<RamseyValue>, EnumerationError> {
    check_budget(class, n_max, budget(class))?;
    let mut level = vec![Graph::empty(0).expect("order 0")];
    for n in 0..=n_max {
        if n > 0 {
            level = extend_level(class, &level);
        }
        // a hereditary class passing at n passes at every larger order
        if !level.par_iter().any(|g| avoiding(g, k, i, j)) {
            return Ok(Some(RamseyValue::exact(n, Provenance::Exhaustive)));
        }
    }
    Ok(None)
}
