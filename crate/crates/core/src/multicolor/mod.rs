//! Engines for paths and caterpillars with more than two colors.

pub mod contract;
pub mod reinsert;
pub mod split4;
pub mod stars;

pub use contract::{contract_third_color, ContractionMap, Reduced, RunVertex, Tree};
pub use reinsert::{insert_q_points, reinsert, ImageBlock, ImagePlan, QPlacement};
pub use split4::{embed_split_four_colored_path, merge_split_halves, split_index};
pub use stars::embed_two_stars;

use crate::bookembed::{BookEmbedding, Page, RawArc};
use crate::error::{Error, Result};
use crate::model::{sequence_compatible, ColoredGraph, ColoredSequence, GraphClass};

fn check_compatible(graph: &ColoredGraph, sigma: &ColoredSequence) -> Result<()> {
    if sequence_compatible(graph, sigma) {
        Ok(())
    } else {
        Err(Error::Incompatible("color counts of graph and sequence differ".into()))
    }
}

/// One-page embedding of a tree whose vertices all share a color: vertices in
/// DFS preorder, every edge a top arc.
pub fn embed_monochromatic_tree(graph: &ColoredGraph) -> Result<BookEmbedding> {
    let n = graph.vertex_count();
    let adj = graph.adjacency();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in adj[v].iter().rev() {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let raw = graph
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| RawArc {
            a: pos[u],
            b: pos[v],
            page: Page::Top,
            edge: e,
        })
        .collect();
    BookEmbedding::assemble(
        order.into_iter().map(Some).collect(),
        raw,
        graph.colors().to_vec(),
        graph.edges().to_vec(),
    )
}

fn all_one_color(graph: &ColoredGraph) -> bool {
    graph.color_counts().len() <= 1
}

/// Embedding of a path with at most 3 colors, consistent with `sigma`, with
/// at most 2 spine crossings per edge.
pub fn embed_three_colored_path(graph: &ColoredGraph, sigma: &ColoredSequence) -> Result<BookEmbedding> {
    if graph.class() != GraphClass::Path {
        return Err(Error::Precondition("graph is not a path".into()));
    }
    check_compatible(graph, sigma)?;
    if all_one_color(graph) {
        return embed_monochromatic_tree(graph);
    }
    let red = contract_third_color(graph, sigma)?;
    Ok(reinsert(graph, sigma, &red)?.0)
}

/// Embedding of a caterpillar whose leaves share one color, with at most 3
/// colors, consistent with `sigma`, with at most 2 spine crossings per edge.
pub fn embed_caterpillar_mono_leaves(graph: &ColoredGraph, sigma: &ColoredSequence) -> Result<BookEmbedding> {
    match graph.class() {
        GraphClass::Path => embed_three_colored_path(graph, sigma),
        GraphClass::Caterpillar => {
            check_compatible(graph, sigma)?;
            if all_one_color(graph) {
                return embed_monochromatic_tree(graph);
            }
            let red = contract_third_color(graph, sigma)?;
            Ok(reinsert(graph, sigma, &red)?.0)
        }
        _ => Err(Error::Precondition("graph is not a caterpillar".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Path3,
    Caterpillar3,
    Path4Split,
    TwoStars,
    Auto,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Path3 => "path3",
            Engine::Caterpillar3 => "caterpillar3",
            Engine::Path4Split => "path4split",
            Engine::TwoStars => "twostars",
            Engine::Auto => "auto",
        }
    }
}

/// Picks the engine for `graph`: paths, then caterpillars, then star forests.
pub fn select_engine(graph: &ColoredGraph) -> Result<Engine> {
    let colors = graph.color_counts().len();
    let two_stars = graph.stars().is_some_and(|s| s.len() <= 2);
    match graph.class() {
        GraphClass::Path if colors <= 3 => Ok(Engine::Path3),
        GraphClass::Path => {
            let order = graph.path_order().expect("path");
            let seq: Vec<_> = order.iter().map(|&v| graph.color(v)).collect();
            match split_index(&seq) {
                Ok(_) => Ok(Engine::Path4Split),
                Err(_) => Err(Error::Unsupported(format!(
                    "{colors}-colored path without a split into two 2-colored halves"
                ))),
            }
        }
        GraphClass::Caterpillar if colors <= 3 && contract::leaf_color(graph).is_ok() => Ok(Engine::Caterpillar3),
        _ if two_stars => Ok(Engine::TwoStars),
        GraphClass::Caterpillar if colors <= 3 => Err(Error::Unsupported(
            "lower bound applies: 3-colored caterpillars with leaves of several colors need a non-constant number of bends".into(),
        )),
        GraphClass::StarForest => Err(Error::Unsupported(
            "forests of more than two stars are not supported".into(),
        )),
        other => Err(Error::Unsupported(format!("{other:?} graph with {colors} colors"))),
    }
}

/// Runs `engine` (resolving `Auto`) and returns the engine used with its embedding.
pub fn embed_with(engine: Engine, graph: &ColoredGraph, sigma: &ColoredSequence) -> Result<(Engine, BookEmbedding)> {
    let engine = match engine {
        Engine::Auto => select_engine(graph)?,
        e => e,
    };
    let be = match engine {
        Engine::Path3 => embed_three_colored_path(graph, sigma)?,
        Engine::Caterpillar3 => embed_caterpillar_mono_leaves(graph, sigma)?,
        Engine::Path4Split => embed_split_four_colored_path(graph, sigma)?,
        Engine::TwoStars => embed_two_stars(graph, sigma)?,
        Engine::Auto => unreachable!(),
    };
    Ok((engine, be))
}
