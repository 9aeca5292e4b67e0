//! Puts a removed color class back into the embedding of the reduced path.

use std::collections::HashMap;

use super::contract::{Reduced, Tree};
use crate::bookembed::{Draft, DraftArc, NodeId, NodeKind};
use crate::bookembed::{gap_visibility, hook_gaps, BookEmbedding, Page, SpineItem};
use crate::error::{Error, Result};
use crate::model::{Color, ColoredGraph, ColoredSequence};
use crate::twocolor::embed_two_colored_path;

/// Where the removed vertices go: `(gap, count)` pairs on the reduced
/// embedding, in spine order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPlacement {
    pub gaps: Vec<(usize, usize)>,
}

impl QPlacement {
    pub fn total(&self) -> usize {
        self.gaps.iter().map(|g| g.1).sum()
    }
}

/// Chooses gaps of `reduced` for the vertices of color `removed` so that the
/// merged spine colors equal `sigma`. Runs between two spine vertices use the
/// leftmost gap between them that is visible from below.
pub fn insert_q_points(reduced: &BookEmbedding, sigma: &ColoredSequence, removed: Color) -> Result<QPlacement> {
    let m = reduced.len();
    let vpos: Vec<usize> = (0..m).filter(|&i| reduced.spine[i].vertex().is_some()).collect();
    let mut runs = vec![0usize; vpos.len() + 1];
    let mut seen = 0;
    for &c in sigma.as_slice() {
        if c == removed {
            runs[seen] += 1;
        } else {
            seen += 1;
            if seen > vpos.len() {
                return Err(Error::Incompatible("sequence has more kept vertices than the embedding".into()));
            }
        }
    }
    if seen != vpos.len() {
        return Err(Error::Incompatible("sequence has fewer kept vertices than the embedding".into()));
    }
    let below = gap_visibility(m, &reduced.spans(), Page::Bottom);
    let mut gaps = Vec::new();
    for (j, &count) in runs.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let g = if j == 0 {
            0
        } else if j == vpos.len() {
            m
        } else {
            (vpos[j - 1] + 1..=vpos[j]).find(|&g| below[g]).ok_or_else(|| {
                Error::Invalid(format!(
                    "no gap visible from below between items {} and {}",
                    vpos[j - 1],
                    vpos[j]
                ))
            })?
        };
        gaps.push((g, count));
    }
    Ok(QPlacement { gaps })
}

/// Removed vertices placed next to one spine item of the reduced embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageBlock {
    /// Kept vertex whose top arcs reach the block.
    pub owner: usize,
    /// Reduced-embedding item the block is attached to (`None`: the spine end).
    pub anchor: Option<usize>,
    /// Whether the block sits before (left of) the anchor.
    pub before: bool,
    /// Removed vertices in left-to-right order.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImagePlan {
    pub removed_color: Color,
    pub reduced: BookEmbedding,
    pub slots: QPlacement,
    pub blocks: Vec<ImageBlock>,
    /// Removed vertex carried by a crossing of the reduced embedding, with that item.
    pub on_crossings: Vec<(usize, usize)>,
}

fn preorder(t: &Tree, out: &mut Vec<usize>) {
    out.push(t.vertex);
    for c in &t.children {
        preorder(c, out);
    }
}

struct Builder<'a> {
    draft: Draft,
    edge_id: HashMap<(usize, usize), usize>,
    image: HashMap<usize, NodeId>,
    graph: &'a ColoredGraph,
}

impl Builder<'_> {
    fn eid(&self, a: usize, b: usize) -> Result<usize> {
        self.edge_id
            .get(&(a.min(b), a.max(b)))
            .copied()
            .ok_or_else(|| Error::Invalid(format!("({a}, {b}) is not an edge")))
    }

    fn top(&mut self, a: NodeId, b: NodeId, u: usize, v: usize) -> Result<()> {
        let edge = self.eid(u, v)?;
        self.draft.arcs.push(DraftArc {
            a,
            b,
            page: Page::Top,
            edge,
        });
        Ok(())
    }

    fn new_images(&mut self, vertices: &[usize]) -> Vec<NodeId> {
        vertices
            .iter()
            .map(|&v| {
                let id = self.draft.node(NodeKind::Image(v));
                self.image.insert(v, id);
                id
            })
            .collect()
    }

    fn tree_arcs(&mut self, parent: usize, parent_node: NodeId, t: &Tree) -> Result<()> {
        let node = self.image[&t.vertex];
        self.top(parent_node, node, parent, t.vertex)?;
        for c in &t.children {
            self.tree_arcs(t.vertex, node, c)?;
        }
        Ok(())
    }

    /// Replaces image `img` by one crossing per incident top arc, each joined
    /// to `slot` on the bottom page; bottom arcs at `img` move to `slot`.
    fn split(&mut self, img: NodeId, slot: NodeId) {
        let pos = self.draft.positions();
        let here = pos[img];
        let mut tops: Vec<(usize, usize)> = Vec::new();
        for (i, a) in self.draft.arcs.iter_mut().enumerate() {
            if a.a != img && a.b != img {
                continue;
            }
            if a.page == Page::Bottom {
                if a.a == img {
                    a.a = slot;
                } else {
                    a.b = slot;
                }
            } else {
                let other = if a.a == img { a.b } else { a.a };
                tops.push((i, pos[other]));
            }
        }
        // Left targets nearest first, then right targets farthest first.
        tops.sort_by_key(|&(_, p)| (p > here, std::cmp::Reverse(p)));
        let mut nodes = Vec::with_capacity(tops.len());
        for &(i, _) in &tops {
            let c = self.draft.node(NodeKind::Crossing);
            let a = &mut self.draft.arcs[i];
            if a.a == img {
                a.a = c;
            } else {
                a.b = c;
            }
            let edge = a.edge;
            self.draft.arcs.push(DraftArc {
                a: c,
                b: slot,
                page: Page::Bottom,
                edge,
            });
            nodes.push(c);
        }
        let at = here;
        self.draft.order.splice(at..at + 1, nodes);
    }
}

/// Embeds the graph behind `red` consistently with `sigma` by embedding the
/// reduced path and re-inserting the removed vertices.
pub fn reinsert(graph: &ColoredGraph, sigma: &ColoredSequence, red: &Reduced) -> Result<(BookEmbedding, ImagePlan)> {
    let map = &red.map;
    let c2 = map.removed_color;
    let reduced = embed_two_colored_path(&red.colors, &red.sigma)?;
    let slots = insert_q_points(&reduced, sigma, c2)?;
    let m = reduced.len();
    let n_kept = map.kept.len();

    let mut b = Builder {
        draft: Draft::from_embedding(&reduced),
        edge_id: graph
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| ((u.min(v), u.max(v)), i))
            .collect(),
        image: HashMap::new(),
        graph,
    };
    for k in b.draft.kinds.iter_mut() {
        if let NodeKind::Vertex(i) = k {
            *k = NodeKind::Vertex(map.kept[*i]);
        }
    }
    let kept_node: Vec<NodeId> = (0..n_kept)
        .map(|i| reduced.vertex_position(i).expect("reduced vertex on spine"))
        .collect();

    // First crossing of every reduced edge and the side its bottom arc leaves from.
    let mut chi = vec![(0usize, false); n_kept.saturating_sub(1)];
    for (idx, s) in reduced.spine.iter().enumerate() {
        if let SpineItem::Crossing { edge, ordinal: 1 } = *s {
            let bottom = reduced
                .arcs
                .iter()
                .find(|a| a.edge == edge && a.ordinal == 1)
                .expect("arc after first crossing");
            let other = if bottom.left == idx { bottom.right } else { bottom.left };
            chi[edge] = (idx, other > idx);
        }
    }

    // Relabel reduced arcs with original edges.
    for (ai, a) in reduced.arcs.iter().enumerate() {
        let (u, w) = (map.kept[a.edge], map.kept[a.edge + 1]);
        let run = &map.runs[a.edge];
        let edge = match (run.first(), run.last()) {
            (Some(first), _) if a.ordinal == 0 => b.eid(u, first.vertex)?,
            (_, Some(last)) => b.eid(last.vertex, w)?,
            _ => b.eid(u, w)?,
        };
        b.draft.arcs[ai].edge = edge;
    }

    let mut blocks = Vec::new();
    let mut on_crossings = Vec::new();

    // The last kept vertex hooks its pendant trees into a gap to its right.
    let z = n_kept - 1;
    if !map.pendants[z].is_empty() {
        let pz = kept_node[z];
        let hooks = hook_gaps(m, &reduced.spans(), pz, Page::Bottom);
        let a = (pz + 1..=m)
            .find(|&g| hooks[g])
            .ok_or_else(|| Error::Invalid("last vertex has no hook gap".into()))?;
        let mut vs = Vec::new();
        for t in &map.pendants[z] {
            preorder(t, &mut vs);
        }
        let nodes = b.new_images(&vs);
        if a < m {
            b.draft.insert_before(a, &nodes);
        } else {
            b.draft.order.extend_from_slice(&nodes);
        }
        for t in &map.pendants[z] {
            b.tree_arcs(map.kept[z], pz, t)?;
        }
        blocks.push(ImageBlock {
            owner: map.kept[z],
            anchor: (a < m).then_some(a),
            before: true,
            vertices: vs,
        });
    }

    // Every other kept vertex sends its trees and the following run towards
    // the first crossing of its outgoing edge.
    for i in 0..z {
        let u = map.kept[i];
        let (x, bottom_right) = chi[i];
        let run = &map.runs[i];
        let mut layout = Vec::new();
        for t in &map.pendants[i] {
            preorder(t, &mut layout);
        }
        for (j, rv) in run.iter().enumerate() {
            layout.extend(&rv.leaves);
            if j + 1 < run.len() {
                layout.push(rv.vertex);
            }
        }
        let nodes = b.new_images(&layout);
        if let Some(last) = run.last() {
            b.draft.kinds[x] = NodeKind::Image(last.vertex);
            b.image.insert(last.vertex, x);
            on_crossings.push((last.vertex, x));
        }
        if bottom_right {
            b.draft.insert_before(x, &nodes);
        } else {
            let rev: Vec<NodeId> = nodes.iter().rev().copied().collect();
            b.draft.insert_after(x, &rev);
        }
        let mut vs = layout.clone();
        if !bottom_right {
            vs.reverse();
        }
        if !layout.is_empty() {
            blocks.push(ImageBlock {
                owner: u,
                anchor: Some(x),
                before: bottom_right,
                vertices: vs,
            });
        }
        for t in &map.pendants[i] {
            b.tree_arcs(u, kept_node[i], t)?;
        }
        if !run.is_empty() {
            let first_img = b.image[&run[0].vertex];
            if first_img != x {
                let first_arc = reduced
                    .arcs
                    .iter()
                    .position(|a| a.edge == i && a.ordinal == 0)
                    .expect("first arc");
                let fa = &mut b.draft.arcs[first_arc];
                if fa.a == x {
                    fa.a = first_img;
                } else {
                    fa.b = first_img;
                }
            }
            for (j, rv) in run.iter().enumerate() {
                let node = b.image[&rv.vertex];
                if j + 1 < run.len() {
                    let next = run[j + 1].vertex;
                    b.top(node, b.image[&next], rv.vertex, next)?;
                }
                for &l in &rv.leaves {
                    b.top(b.image[&l], node, l, rv.vertex)?;
                }
            }
        }
    }

    // Slots for the removed vertices.
    let anchors: Vec<(Option<NodeId>, usize)> = slots
        .gaps
        .iter()
        .map(|&(g, c)| ((g < m).then_some(g), c))
        .collect();
    for (anchor, count) in anchors {
        let nodes: Vec<NodeId> = (0..count).map(|_| b.draft.node(NodeKind::Slot)).collect();
        match anchor {
            Some(a) => b.draft.insert_before(a, &nodes),
            None => b.draft.order.extend_from_slice(&nodes),
        }
    }

    // Non-crossing matching of images with slots.
    let mut stack: Vec<(NodeId, bool)> = Vec::new();
    let mut pairs = Vec::new();
    for &id in &b.draft.order {
        let is_image = match b.draft.kinds[id] {
            NodeKind::Image(_) => true,
            NodeKind::Slot => false,
            _ => continue,
        };
        match stack.last() {
            Some(&(top, top_image)) if top_image != is_image => {
                stack.pop();
                pairs.push(if is_image { (id, top) } else { (top, id) });
            }
            _ => stack.push((id, is_image)),
        }
    }
    if !stack.is_empty() {
        return Err(Error::Incompatible(format!(
            "{} removed vertices could not be matched to slots",
            stack.len()
        )));
    }
    for (img, slot) in pairs {
        let NodeKind::Image(v) = b.draft.kinds[img] else {
            unreachable!()
        };
        b.draft.kinds[slot] = NodeKind::Vertex(v);
        b.split(img, slot);
    }

    let be = b.draft.finish(b.graph.colors().to_vec(), b.graph.edges().to_vec())?;
    Ok((
        be,
        ImagePlan {
            removed_color: c2,
            reduced,
            slots,
            blocks,
            on_crossings,
        },
    ))
}
