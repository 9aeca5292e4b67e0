//! Property suite for embeddings of paths produced by the 2-colored construction.

use crate::bookembed::{gap_visibility, hook_gaps, item_visibility, BookEmbedding, Page, SpineItem};
use crate::error::{Error, Result};
use crate::report::{ValidationReport, Witness};

/// Path order implied by edges oriented `(v_i, v_{i+1})`.
fn oriented_path(be: &BookEmbedding) -> Result<Vec<usize>> {
    let n = be.vertex_colors.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if be.edges.len() + 1 != n {
        return Err(Error::Precondition("edge count does not match a path".into()));
    }
    let mut next = vec![usize::MAX; n];
    let mut has_pred = vec![false; n];
    for &(u, v) in &be.edges {
        if u >= n || v >= n || next[u] != usize::MAX || has_pred[v] {
            return Err(Error::Precondition("edges do not form an oriented path".into()));
        }
        next[u] = v;
        has_pred[v] = true;
    }
    let start = (0..n)
        .find(|&v| !has_pred[v])
        .ok_or_else(|| Error::Precondition("oriented edges form a cycle".into()))?;
    let mut order = vec![start];
    while let Some(&v) = order.last().map(|&v| &next[v]) {
        if v == usize::MAX {
            break;
        }
        order.push(v);
    }
    if order.len() != n {
        return Err(Error::Precondition("edges do not form a single path".into()));
    }
    Ok(order)
}

/// Checks properties (a)-(d) with the standard page roles.
pub fn check_lemma5_properties(be: &BookEmbedding) -> Result<ValidationReport> {
    check_lemma5_properties_on(be, Page::Bottom)
}

/// Checks properties (a)-(d) where `side` plays the role of the bottom page.
/// Use `Page::Top` for reflected embeddings.
pub fn check_lemma5_properties_on(be: &BookEmbedding, side: Page) -> Result<ValidationReport> {
    let order = oriented_path(be)?;
    let mut r = ValidationReport::new();
    let m = be.len();
    let spans = be.spans();

    let crossings = be.spine_crossings_per_edge()?;
    for (e, &c) in crossings.iter().enumerate() {
        if !(1..=2).contains(&c) {
            r.error("crossings-per-edge", format!("edge {e} has {c} spine crossings"), vec![Witness::Edge(e)]);
        }
    }

    let gaps = gap_visibility(m, &spans, side);
    let vpos: Vec<usize> = (0..m).filter(|&i| be.spine[i].vertex().is_some()).collect();
    for w in vpos.windows(2) {
        if !(w[0] + 1..=w[1]).any(|g| gaps[g]) {
            r.error(
                "inaccessible-pair",
                format!("no visible gap between spine vertices at items {} and {}", w[0], w[1]),
                vec![Witness::Item(w[0]), Witness::Item(w[1])],
            );
        }
    }

    let items = item_visibility(m, &spans, side);
    for (i, it) in be.spine.iter().enumerate() {
        if it.is_crossing() && !items[i] {
            r.error("hidden-crossing", format!("crossing item {i} is not visible"), vec![Witness::Item(i)]);
        }
    }

    if let (Some(&first), Some(&last)) = (order.first(), order.last()) {
        let pf = be.vertex_position(first).expect("vertex on spine");
        if !item_visibility(m, &spans, side.flip())[pf] {
            r.error("hidden-first-vertex", format!("first vertex {first} is not visible from the other page"), vec![Witness::Vertex(first)]);
        }
        let pl = be.vertex_position(last).expect("vertex on spine");
        let ok = hook_gaps(m, &spans, pl, side);
        let rider = |g: usize| {
            let right = &be.spine[g..];
            right.iter().filter(|s| s.vertex().is_some()).count() <= 1
                && !right.iter().any(SpineItem::is_crossing)
        };
        if !(pl + 1..=m).any(|g| ok[g] && rider(g)) {
            r.error(
                "no-last-access",
                format!("last vertex {last} has no access interval on its right with at most one vertex and no crossing beyond it"),
                vec![Witness::Vertex(last)],
            );
        }
    }
    Ok(r)
}
