//! Mutable embedding under construction, addressed by stable node ids.

use super::{BookEmbedding, Page, RawArc, SpineItem};
use crate::error::Result;
use crate::model::Color;

pub(crate) type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum NodeKind {
    Vertex(usize),
    Crossing,
    /// Stand-in for a vertex that will later live on a matched slot.
    Image(usize),
    /// Reserved spine location for a vertex of the removed color.
    Slot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct DraftArc {
    pub a: NodeId,
    pub b: NodeId,
    pub page: Page,
    pub edge: usize,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct Draft {
    pub kinds: Vec<NodeKind>,
    pub order: Vec<NodeId>,
    pub arcs: Vec<DraftArc>,
}

impl Draft {
    pub fn from_embedding(be: &BookEmbedding) -> Draft {
        Draft {
            kinds: be
                .spine
                .iter()
                .map(|s| match *s {
                    SpineItem::Vertex { id } => NodeKind::Vertex(id),
                    SpineItem::Crossing { .. } => NodeKind::Crossing,
                })
                .collect(),
            order: (0..be.len()).collect(),
            arcs: be
                .arcs
                .iter()
                .map(|a| DraftArc {
                    a: a.left,
                    b: a.right,
                    page: a.page,
                    edge: a.edge,
                })
                .collect(),
        }
    }

    pub fn node(&mut self, kind: NodeKind) -> NodeId {
        self.kinds.push(kind);
        self.kinds.len() - 1
    }

    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.kinds.len()];
        for (i, &id) in self.order.iter().enumerate() {
            pos[id] = i;
        }
        pos
    }

    pub fn position(&self, id: NodeId) -> usize {
        self.order
            .iter()
            .position(|&x| x == id)
            .expect("node is on the spine")
    }

    /// Inserts `nodes` (in order) into gap `g` of the current spine.
    pub fn insert_at_gap(&mut self, g: usize, nodes: &[NodeId]) {
        let tail = self.order.split_off(g);
        self.order.extend_from_slice(nodes);
        self.order.extend(tail);
    }

    pub fn insert_before(&mut self, anchor: NodeId, nodes: &[NodeId]) {
        let g = self.position(anchor);
        self.insert_at_gap(g, nodes);
    }

    pub fn insert_after(&mut self, anchor: NodeId, nodes: &[NodeId]) {
        let g = self.position(anchor) + 1;
        self.insert_at_gap(g, nodes);
    }

    pub fn finish(&self, vertex_colors: Vec<Color>, edges: Vec<(usize, usize)>) -> Result<BookEmbedding> {
        let pos = self.positions();
        let items = self
            .order
            .iter()
            .map(|&id| match self.kinds[id] {
                NodeKind::Vertex(v) => Ok(Some(v)),
                NodeKind::Crossing => Ok(None),
                other => Err(crate::error::Error::Invalid(format!(
                    "unresolved {other:?} node left on the spine"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        let raw = self
            .arcs
            .iter()
            .map(|a| RawArc {
                a: pos[a.a],
                b: pos[a.b],
                page: a.page,
                edge: a.edge,
            })
            .collect();
        BookEmbedding::assemble(items, raw, vertex_colors, edges)
    }
}
