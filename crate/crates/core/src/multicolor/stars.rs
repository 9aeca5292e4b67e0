//! Forests of at most two stars.

use crate::bookembed::{BookEmbedding, Page, RawArc};
use crate::error::{Error, Result};
use crate::model::{sequence_compatible, ColoredGraph, ColoredSequence};

/// Embedding without spine crossings: the vertices of each color fill that
/// color's positions of `sigma` in increasing id order, the first star's
/// edges use the top page and the second star's the bottom page.
pub fn embed_two_stars(graph: &ColoredGraph, sigma: &ColoredSequence) -> Result<BookEmbedding> {
    let stars = graph
        .stars()
        .filter(|s| s.len() <= 2)
        .ok_or_else(|| Error::Precondition("graph is not a forest of at most two stars".into()))?;
    if !sequence_compatible(graph, sigma) {
        return Err(Error::Incompatible("color counts of graph and sequence differ".into()));
    }
    let n = graph.vertex_count();
    let mut pools: Vec<Vec<usize>> = vec![Vec::new(); graph.k().max(1)];
    for v in (0..n).rev() {
        pools[graph.color(v)].push(v);
    }
    let items: Vec<Option<usize>> = sigma
        .as_slice()
        .iter()
        .map(|&c| pools[c].pop())
        .collect();
    let mut pos = vec![0; n];
    for (i, v) in items.iter().enumerate() {
        pos[v.expect("compatible colors")] = i;
    }
    let mut star_of = vec![0; n];
    for (s, (center, leaves)) in stars.iter().enumerate() {
        star_of[*center] = s;
        for &l in leaves {
            star_of[l] = s;
        }
    }
    let raw = graph
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| RawArc {
            a: pos[u],
            b: pos[v],
            page: if star_of[u] == 0 { Page::Top } else { Page::Bottom },
            edge: e,
        })
        .collect();
    BookEmbedding::assemble(items, raw, graph.colors().to_vec(), graph.edges().to_vec())
}
