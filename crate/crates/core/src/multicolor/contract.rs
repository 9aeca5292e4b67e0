//! Removal of one color class from a path or caterpillar.

use crate::error::{Error, Result};
use crate::model::{Color, ColoredGraph, ColoredSequence, GraphClass};

/// A rooted tree of removed vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    pub vertex: usize,
    pub children: Vec<Tree>,
}

impl Tree {
    pub fn leaf(vertex: usize) -> Tree {
        Tree {
            vertex,
            children: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Tree::size).sum::<usize>()
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut out = vec![self.vertex];
        for c in &self.children {
            out.extend(c.vertices());
        }
        out
    }
}

/// A removed backbone vertex inside a contracted run, with its removed leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunVertex {
    pub vertex: usize,
    pub leaves: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionMap {
    pub removed_color: Color,
    /// Original ids of the reduced path's vertices, in path order.
    pub kept: Vec<usize>,
    /// For reduced edge `i` (between `kept[i]` and `kept[i + 1]`), the removed
    /// backbone run it stands for; empty when the edge is an original edge.
    pub runs: Vec<Vec<RunVertex>>,
    /// For each kept vertex, removed trees hanging off it.
    pub pendants: Vec<Vec<Tree>>,
}

impl ContractionMap {
    /// Edges of the original graph recovered from the map.
    pub fn reassembled_edges(&self) -> Vec<(usize, usize)> {
        fn tree_edges(parent: usize, t: &Tree, out: &mut Vec<(usize, usize)>) {
            out.push((parent, t.vertex));
            for c in &t.children {
                tree_edges(t.vertex, c, out);
            }
        }
        let mut out = Vec::new();
        for (i, run) in self.runs.iter().enumerate() {
            let mut prev = self.kept[i];
            for rv in run {
                out.push((prev, rv.vertex));
                for &l in &rv.leaves {
                    out.push((rv.vertex, l));
                }
                prev = rv.vertex;
            }
            out.push((prev, self.kept[i + 1]));
        }
        for (i, ts) in self.pendants.iter().enumerate() {
            for t in ts {
                tree_edges(self.kept[i], t, &mut out);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    /// Colors of the reduced path in path order.
    pub colors: Vec<Color>,
    pub sigma: ColoredSequence,
    pub map: ContractionMap,
}

/// Removes the color class `c2` from a 3-colored path (c2 avoids both end
/// colors, smallest index on ties) or from a caterpillar whose leaves all
/// have color `c2`.
pub fn contract_third_color(graph: &ColoredGraph, sigma: &ColoredSequence) -> Result<Reduced> {
    if graph.color_counts().len() > 3 {
        return Err(Error::Precondition("graph uses more than 3 colors".into()));
    }
    let (backbone, c2) = match graph.class() {
        GraphClass::Path => {
            let order = graph.path_order().expect("path");
            let ends = [graph.color(order[0]), graph.color(*order.last().unwrap())];
            let present = graph.color_counts().into_keys();
            let c2 = present
                .chain(0..)
                .find(|c| !ends.contains(c))
                .expect("two end colors leave a third");
            (order, c2)
        }
        GraphClass::Caterpillar => {
            let c2 = leaf_color(graph)?;
            (graph.caterpillar_backbone().expect("caterpillar"), c2)
        }
        other => {
            return Err(Error::Unsupported(format!(
                "{other:?} graphs cannot be contracted to a path"
            )))
        }
    };
    let adj = graph.adjacency();
    let on_backbone: std::collections::HashSet<usize> = backbone.iter().copied().collect();
    let leaves_of = |b: usize| -> Vec<usize> {
        adj[b]
            .iter()
            .copied()
            .filter(|w| !on_backbone.contains(w))
            .collect()
    };
    let kept_idx: Vec<usize> = (0..backbone.len())
        .filter(|&i| graph.color(backbone[i]) != c2)
        .collect();
    if kept_idx.is_empty() {
        return Err(Error::Precondition("every vertex has the removed color".into()));
    }
    let kept: Vec<usize> = kept_idx.iter().map(|&i| backbone[i]).collect();
    let run_vertex = |b: usize| RunVertex {
        vertex: b,
        leaves: leaves_of(b),
    };
    let runs = kept_idx
        .windows(2)
        .map(|w| backbone[w[0] + 1..w[1]].iter().map(|&b| run_vertex(b)).collect())
        .collect();

    fn chain(run: &[RunVertex]) -> Option<Tree> {
        let (head, rest) = run.split_first()?;
        let mut children: Vec<Tree> = head.leaves.iter().map(|&l| Tree::leaf(l)).collect();
        children.extend(chain(rest));
        Some(Tree {
            vertex: head.vertex,
            children,
        })
    }
    let mut pendants: Vec<Vec<Tree>> = kept_idx
        .iter()
        .map(|&i| leaves_of(backbone[i]).into_iter().map(Tree::leaf).collect())
        .collect();
    let first = kept_idx[0];
    let prefix: Vec<RunVertex> = backbone[..first].iter().rev().map(|&b| run_vertex(b)).collect();
    pendants[0].extend(chain(&prefix));
    let last = *kept_idx.last().unwrap();
    let suffix: Vec<RunVertex> = backbone[last + 1..].iter().map(|&b| run_vertex(b)).collect();
    pendants.last_mut().unwrap().extend(chain(&suffix));

    Ok(Reduced {
        colors: kept.iter().map(|&v| graph.color(v)).collect(),
        sigma: ColoredSequence(sigma.0.iter().copied().filter(|&c| c != c2).collect()),
        map: ContractionMap {
            removed_color: c2,
            kept,
            runs,
            pendants,
        },
    })
}

/// The common color of all leaves of a caterpillar.
pub(crate) fn leaf_color(graph: &ColoredGraph) -> Result<Color> {
    let backbone = graph
        .caterpillar_backbone()
        .ok_or_else(|| Error::Precondition("graph is not a caterpillar".into()))?;
    let on: std::collections::HashSet<usize> = backbone.iter().copied().collect();
    let mut colors = (0..graph.vertex_count())
        .filter(|v| !on.contains(v))
        .map(|v| graph.color(v));
    let Some(c) = colors.next() else {
        return Err(Error::Precondition("caterpillar has no leaves".into()));
    };
    match colors.find(|&d| d != c) {
        Some(d) => Err(Error::Unsupported(format!(
            "caterpillar leaves use colors {c} and {d}; general 3-colored caterpillars need a non-constant number of bends"
        ))),
        None => Ok(c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_run_path() {
        let g = ColoredGraph::new(3, vec![0, 2, 1], vec![(0, 1), (1, 2)]).unwrap();
        let r = contract_third_color(&g, &ColoredSequence(vec![0, 2, 1])).unwrap();
        assert_eq!(r.map.removed_color, 2);
        assert_eq!(r.colors, vec![0, 1]);
        assert_eq!(r.sigma.0, vec![0, 1]);
        assert_eq!(r.map.runs, vec![vec![RunVertex { vertex: 1, leaves: vec![] }]]);
    }

    #[test]
    fn removed_color_is_taken_from_the_path() {
        let g = ColoredGraph::new(4, vec![0, 3, 2, 3], vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = contract_third_color(&g, &ColoredSequence(vec![3, 0, 2, 3])).unwrap();
        assert_eq!(r.map.removed_color, 2);
        assert_eq!(r.colors, vec![0, 3, 3]);
    }

    #[test]
    fn identity_without_removed_color() {
        let g = ColoredGraph::new(3, vec![0, 1, 1], vec![(0, 1), (1, 2)]).unwrap();
        let r = contract_third_color(&g, &ColoredSequence(vec![1, 0, 1])).unwrap();
        assert_eq!(r.map.removed_color, 2);
        assert_eq!(r.map.kept, vec![0, 1, 2]);
        assert!(r.map.runs.iter().all(Vec::is_empty));
    }

    #[test]
    fn equal_end_colors_pick_smallest_free_color() {
        let g = ColoredGraph::new(3, vec![1, 0, 2, 1], vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = contract_third_color(&g, &ColoredSequence(vec![0, 1, 1, 2])).unwrap();
        assert_eq!(r.map.removed_color, 0);
    }

    #[test]
    fn caterpillar_with_leaves_everywhere() {
        // Backbone 0-1-2 colored (0,2,1); leaves 3,4,5 of color 2 on each.
        let g = ColoredGraph::new(
            3,
            vec![0, 2, 1, 2, 2, 2],
            vec![(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let sigma = ColoredSequence(vec![2, 0, 2, 2, 1, 2]);
        let r = contract_third_color(&g, &sigma).unwrap();
        assert_eq!(r.map.kept, vec![0, 2]);
        assert_eq!(r.map.runs[0], vec![RunVertex { vertex: 1, leaves: vec![4] }]);
        assert_eq!(r.map.pendants, vec![vec![Tree::leaf(3)], vec![Tree::leaf(5)]]);
        let mut got: Vec<_> = r.map.reassembled_edges().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let mut want: Vec<_> = g.edges().iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn mixed_leaf_colors_are_rejected() {
        let g = ColoredGraph::new(3, vec![0, 1, 1, 2, 2], vec![(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert!(matches!(leaf_color(&g), Err(Error::Unsupported(_))));
    }
}
