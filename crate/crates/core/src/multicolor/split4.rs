//! Paths whose colors split into two disjoint pairs along the path.

use std::collections::BTreeSet;

use crate::bookembed::{gap_visibility, validate_book_embedding, BookEmbedding, Page, RawArc};
use crate::error::{Error, Result};
use crate::model::{Color, ColoredGraph, ColoredSequence, GraphClass};
use crate::twocolor::embed_two_colored_path;
use crate::verify::{exhaustive_embedding_search, SearchConfig};

/// Split index `h`: the first `h` path vertices and the rest use disjoint
/// color sets of at most two colors each. The smallest such `h >= 2` is
/// preferred, then `h = 1`.
pub fn split_index(colors: &[Color]) -> Result<usize> {
    let n = colors.len();
    let valid = |h: usize| {
        let a: BTreeSet<Color> = colors[..h].iter().copied().collect();
        let b: BTreeSet<Color> = colors[h..].iter().copied().collect();
        a.len() <= 2 && b.len() <= 2 && a.is_disjoint(&b)
    };
    (2..n).chain(1..2.min(n)).find(|&h| valid(h)).ok_or_else(|| {
        let mut seen = BTreeSet::new();
        let bad = colors
            .iter()
            .position(|&c| {
                seen.insert(c);
                seen.len() > 2
            })
            .unwrap_or(0);
        Error::Precondition(format!(
            "path does not split into two parts with disjoint pairs of colors (third color at path position {bad})"
        ))
    })
}

/// Cut gaps for an embedding whose vertices are consumed in runs of the
/// given lengths: one gap visible from `side` after each run except the last.
fn cuts(be: &BookEmbedding, runs: &[usize], side: Page) -> Result<Vec<usize>> {
    let m = be.len();
    let vpos: Vec<usize> = (0..m).filter(|&i| be.spine[i].vertex().is_some()).collect();
    let vis = gap_visibility(m, &be.spans(), side);
    let mut out = Vec::new();
    let mut taken = 0;
    for &r in &runs[..runs.len().saturating_sub(1)] {
        taken += r;
        let g = (vpos[taken - 1] + 1..=vpos[taken])
            .find(|&g| vis[g])
            .ok_or_else(|| Error::Invalid(format!("no visible gap after vertex item {}", vpos[taken - 1])))?;
        out.push(g);
    }
    Ok(out)
}

/// Embedding of a path with disjoint 2-colored halves, consistent with
/// `sigma`: both halves are embedded with at most 2 crossings per edge and
/// the edge between them crosses the spine once.
pub fn embed_split_four_colored_path(graph: &ColoredGraph, sigma: &ColoredSequence) -> Result<BookEmbedding> {
    if graph.class() != GraphClass::Path {
        return Err(Error::Precondition("graph is not a path".into()));
    }
    if !crate::model::sequence_compatible(graph, sigma) {
        return Err(Error::Incompatible("color counts of graph and sequence differ".into()));
    }
    let be = merge_split_halves(graph, sigma)?;
    let report = validate_book_embedding(&be, Some(sigma));
    if report.pass() {
        return Ok(be);
    }
    log::warn!("split construction failed validation, falling back to exhaustive search:\n{report}");
    exhaustive_embedding_search(graph, sigma, &SearchConfig::default())?
        .embedding
        .ok_or_else(|| Error::Invalid("no embedding found by exhaustive search".into()))
}

/// The split construction alone, without validation or fallback.
pub fn merge_split_halves(graph: &ColoredGraph, sigma: &ColoredSequence) -> Result<BookEmbedding> {
    let order = graph
        .path_order()
        .ok_or_else(|| Error::Precondition("graph is not a path".into()))?;
    let colors: Vec<Color> = order.iter().map(|&v| graph.color(v)).collect();
    let h = split_index(&colors)?;
    let n = order.len();
    let first: Vec<usize> = order[..h].iter().rev().copied().collect();
    let second: Vec<usize> = order[h..].to_vec();
    let set1: BTreeSet<Color> = first.iter().map(|&v| graph.color(v)).collect();
    let in_first = |c: &Color| set1.contains(c);
    let sigma1 = ColoredSequence(sigma.0.iter().copied().filter(in_first).collect());
    let sigma2 = ColoredSequence(sigma.0.iter().copied().filter(|c| !in_first(c)).collect());
    let g1 = embed_two_colored_path(&first.iter().map(|&v| graph.color(v)).collect::<Vec<_>>(), &sigma1)?;
    let g2 = embed_two_colored_path(&second.iter().map(|&v| graph.color(v)).collect::<Vec<_>>(), &sigma2)?.reflect();

    // Maximal runs of sigma by half, starting with whichever half comes first.
    let mut runs: Vec<(bool, usize)> = Vec::new();
    for c in sigma.as_slice() {
        let f = in_first(c);
        match runs.last_mut() {
            Some((g, len)) if *g == f => *len += 1,
            _ => runs.push((f, 1)),
        }
    }
    let lens = |want: bool| -> Vec<usize> { runs.iter().filter(|r| r.0 == want).map(|r| r.1).collect() };
    let cut1 = cuts(&g1, &lens(true), Page::Bottom)?;
    let cut2 = cuts(&g2, &lens(false), Page::Top)?;
    let pieces = |be: &BookEmbedding, cut: &[usize]| -> Vec<(usize, usize)> {
        let mut bounds = vec![0];
        bounds.extend_from_slice(cut);
        bounds.push(be.len());
        bounds.windows(2).map(|w| (w[0], w[1])).collect()
    };
    let (p1, p2) = (pieces(&g1, &cut1), pieces(&g2, &cut2));

    let mut items: Vec<Option<usize>> = Vec::new();
    let mut map1 = vec![0; g1.len()];
    let mut map2 = vec![0; g2.len()];
    let (mut i1, mut i2) = (0, 0);
    for &(is_first, _) in &runs {
        let (be, ids, map, piece) = if is_first {
            i1 += 1;
            (&g1, &first, &mut map1, p1[i1 - 1])
        } else {
            i2 += 1;
            (&g2, &second, &mut map2, p2[i2 - 1])
        };
        for (idx, slot) in map.iter_mut().enumerate().take(piece.1).skip(piece.0) {
            *slot = items.len();
            items.push(be.spine[idx].vertex().map(|v| ids[v]));
        }
    }
    let chi = items.len();
    items.push(None);

    let edge_id = |a: usize, b: usize| -> usize {
        graph
            .edges()
            .iter()
            .position(|&(u, v)| (u, v) == (a, b) || (v, u) == (a, b))
            .expect("path edge")
    };
    let mut raw = Vec::new();
    for (be, ids, map) in [(&g1, &first, &map1), (&g2, &second, &map2)] {
        for a in &be.arcs {
            raw.push(RawArc {
                a: map[a.left],
                b: map[a.right],
                page: a.page,
                edge: edge_id(ids[a.edge], ids[a.edge + 1]),
            });
        }
    }
    if n > 1 && h < n {
        let e = edge_id(order[h - 1], order[h]);
        let pos = |v: usize| items.iter().position(|&x| x == Some(v)).expect("placed");
        raw.push(RawArc {
            a: pos(order[h - 1]),
            b: chi,
            page: Page::Top,
            edge: e,
        });
        raw.push(RawArc {
            a: chi,
            b: pos(order[h]),
            page: Page::Bottom,
            edge: e,
        });
    }
    BookEmbedding::assemble(items, raw, graph.colors().to_vec(), graph.edges().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_prefers_two_or_more() {
        assert_eq!(split_index(&[0, 1, 2, 3]).unwrap(), 2);
        assert_eq!(split_index(&[0, 1, 0, 2, 3, 2]).unwrap(), 3);
        assert_eq!(split_index(&[0, 1, 2]).unwrap(), 2);
        assert_eq!(split_index(&[0, 1, 1]).unwrap(), 1);
        assert!(split_index(&[0, 1, 2, 0]).is_err());
    }
}
