//! Two-page topological book embeddings and the combinatorial predicates
//! the constructions rely on.
//!
//! Spine positions are discrete: an item index, or a gap. Gap `g` lies
//! immediately before item `g`, so a spine with `m` items has gaps
//! `0..=m` and the two outer gaps are `0` and `m`. An arc `(l, r)` spans
//! gap `g` iff `l < g <= r` and strictly contains item `i` iff `l < i < r`.

mod draft;
mod predicates;

pub(crate) use draft::{Draft, DraftArc, NodeId, NodeKind};
pub use predicates::{gap_visibility, hook_gaps, item_visibility, ArcSpan};

use crate::error::{Error, Result};
use crate::model::{Color, ColoredSequence};
use crate::report::{ValidationReport, Witness};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::ops::RangeInclusive;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Page {
    Top,
    Bottom,
}

impl Page {
    pub fn flip(self) -> Page {
        match self {
            Page::Top => Page::Bottom,
            Page::Bottom => Page::Top,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SpineItem {
    Vertex { id: usize },
    /// The `ordinal`-th spine crossing (1-based) of `edge`, counted from its first endpoint.
    Crossing { edge: usize, ordinal: usize },
}

impl SpineItem {
    pub fn vertex(&self) -> Option<usize> {
        match *self {
            SpineItem::Vertex { id } => Some(id),
            SpineItem::Crossing { .. } => None,
        }
    }

    pub fn is_crossing(&self) -> bool {
        matches!(self, SpineItem::Crossing { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub edge: usize,
    pub left: usize,
    pub right: usize,
    pub page: Page,
    /// Position of this arc along its edge's chain, starting at 0.
    pub ordinal: usize,
}

impl Arc {
    pub fn span(&self) -> ArcSpan {
        ArcSpan {
            left: self.left,
            right: self.right,
            page: self.page,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpinePosition {
    Item(usize),
    Gap(usize),
}

/// An arc given by its endpoints in any order, before chain ordinals are known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RawArc {
    pub a: usize,
    pub b: usize,
    pub page: Page,
    pub edge: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BookEmbedding {
    pub spine: Vec<SpineItem>,
    pub arcs: Vec<Arc>,
    pub vertex_colors: Vec<Color>,
    /// Graph edges; each chain runs from `.0` to `.1`.
    pub edges: Vec<(usize, usize)>,
}

impl BookEmbedding {
    /// Builds an embedding from spine items (crossings given by edge only) and
    /// unordered arcs; crossing and arc ordinals are derived by walking each
    /// edge chain from its first endpoint.
    pub fn assemble(
        items: Vec<Option<usize>>,
        raw: Vec<RawArc>,
        vertex_colors: Vec<Color>,
        edges: Vec<(usize, usize)>,
    ) -> Result<BookEmbedding> {
        let m = items.len();
        let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
        for (i, a) in raw.iter().enumerate() {
            if a.edge >= edges.len() || a.a >= m || a.b >= m || a.a == a.b {
                return Err(Error::Invalid(format!("malformed arc {a:?}")));
            }
            by_edge[a.edge].push(i);
        }
        let vpos: HashMap<usize, usize> = items
            .iter()
            .enumerate()
            .filter_map(|(i, it)| it.map(|v| (v, i)))
            .collect();
        let mut spine: Vec<SpineItem> = items
            .iter()
            .map(|it| match it {
                Some(v) => SpineItem::Vertex { id: *v },
                None => SpineItem::Crossing { edge: usize::MAX, ordinal: 0 },
            })
            .collect();
        let mut arcs = Vec::with_capacity(raw.len());
        for (e, &(u, v)) in edges.iter().enumerate() {
            let (Some(&start), Some(&end)) = (vpos.get(&u), vpos.get(&v)) else {
                return Err(Error::Invalid(format!("edge {e} endpoint missing from spine")));
            };
            let mut remaining = by_edge[e].clone();
            let mut cur = start;
            let mut ordinal = 0;
            loop {
                let Some(k) = remaining
                    .iter()
                    .position(|&i| raw[i].a == cur || raw[i].b == cur)
                else {
                    return Err(Error::Invalid(format!("edge {e} chain broken at item {cur}")));
                };
                let a = raw[remaining.swap_remove(k)];
                let next = if a.a == cur { a.b } else { a.a };
                arcs.push(Arc {
                    edge: e,
                    left: cur.min(next),
                    right: cur.max(next),
                    page: a.page,
                    ordinal,
                });
                ordinal += 1;
                if next == end {
                    break;
                }
                match spine[next] {
                    SpineItem::Crossing { edge, .. } if edge == usize::MAX => {
                        spine[next] = SpineItem::Crossing { edge: e, ordinal };
                    }
                    _ => {
                        return Err(Error::Invalid(format!(
                            "edge {e} chain passes through item {next} which is not a free crossing"
                        )))
                    }
                }
                cur = next;
            }
            if !remaining.is_empty() {
                return Err(Error::Invalid(format!("edge {e} has arcs off its chain")));
            }
        }
        if let Some(i) = spine
            .iter()
            .position(|s| matches!(s, SpineItem::Crossing { edge, .. } if *edge == usize::MAX))
        {
            return Err(Error::Invalid(format!("crossing item {i} belongs to no edge")));
        }
        Ok(BookEmbedding {
            spine,
            arcs,
            vertex_colors,
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.spine.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spine.is_empty()
    }

    pub fn spans(&self) -> Vec<ArcSpan> {
        self.arcs.iter().map(Arc::span).collect()
    }

    pub fn vertex_position(&self, v: usize) -> Option<usize> {
        self.spine.iter().position(|s| s.vertex() == Some(v))
    }

    /// Vertex ids in spine order.
    pub fn vertex_order(&self) -> Vec<usize> {
        self.spine.iter().filter_map(SpineItem::vertex).collect()
    }

    /// Colors of the spine vertices in spine order.
    pub fn spine_colors(&self) -> ColoredSequence {
        ColoredSequence(
            self.vertex_order()
                .into_iter()
                .map(|v| self.vertex_colors[v])
                .collect(),
        )
    }

    /// Number of crossing items per edge; fails on a broken chain.
    pub fn spine_crossings_per_edge(&self) -> Result<Vec<usize>> {
        let mut arcs = vec![0usize; self.edges.len()];
        for a in &self.arcs {
            arcs[a.edge] += 1;
        }
        let mut crossings = vec![0usize; self.edges.len()];
        for s in &self.spine {
            if let SpineItem::Crossing { edge, .. } = s {
                if *edge >= self.edges.len() {
                    return Err(Error::Invalid(format!("crossing of unknown edge {edge}")));
                }
                crossings[*edge] += 1;
            }
        }
        for e in 0..self.edges.len() {
            if arcs[e] != crossings[e] + 1 {
                return Err(Error::Invalid(format!(
                    "edge {e} has {} arcs but {} crossings",
                    arcs[e], crossings[e]
                )));
            }
        }
        Ok(crossings)
    }

    pub fn max_crossings_per_edge(&self) -> Result<usize> {
        Ok(self.spine_crossings_per_edge()?.into_iter().max().unwrap_or(0))
    }

    /// Whether `pos` is seen from the `side` page: no arc on that page strictly spans it.
    pub fn visible(&self, pos: SpinePosition, side: Page) -> bool {
        self.arcs.iter().filter(|a| a.page == side).all(|a| match pos {
            SpinePosition::Item(i) => !(a.left < i && i < a.right),
            SpinePosition::Gap(g) => !(a.left < g && g <= a.right),
        })
    }

    fn consecutive_vertices(&self, u: usize, v: usize) -> Result<(usize, usize)> {
        let pu = self
            .vertex_position(u)
            .ok_or_else(|| Error::Invalid(format!("vertex {u} not on spine")))?;
        let pv = self
            .vertex_position(v)
            .ok_or_else(|| Error::Invalid(format!("vertex {v} not on spine")))?;
        let (lo, hi) = (pu.min(pv), pu.max(pv));
        if lo == hi || self.spine[lo + 1..hi].iter().any(|s| s.vertex().is_some()) {
            return Err(Error::Precondition(format!(
                "vertices {u} and {v} are not consecutive on the spine"
            )));
        }
        Ok((lo, hi))
    }

    /// Some gap between consecutive vertices `u` and `v` is visible from below.
    pub fn accessible(&self, u: usize, v: usize) -> Result<bool> {
        self.accessible_from(u, v, Page::Bottom)
    }

    pub fn accessible_from(&self, u: usize, v: usize, side: Page) -> Result<bool> {
        let (lo, hi) = self.consecutive_vertices(u, v)?;
        let vis = gap_visibility(self.len(), &self.spans(), side);
        Ok((lo + 1..=hi).any(|g| vis[g]))
    }

    /// Maximal gap ranges visible from below into which a new top-page arc
    /// from `v` can be drawn without interleaving an existing top arc.
    pub fn hook_access_intervals(&self, v: usize) -> Vec<RangeInclusive<usize>> {
        self.hook_access_intervals_from(v, Page::Bottom)
    }

    /// As [`Self::hook_access_intervals`] with the roles of the pages given by
    /// `visible_side` (the hook arc is drawn on the opposite page).
    pub fn hook_access_intervals_from(&self, v: usize, visible_side: Page) -> Vec<RangeInclusive<usize>> {
        let Some(p) = self.vertex_position(v) else {
            return Vec::new();
        };
        let ok = hook_gaps(self.len(), &self.spans(), p, visible_side);
        ranges(&ok)
    }

    /// Flips the page of every arc.
    pub fn reflect(&self) -> BookEmbedding {
        let mut out = self.clone();
        for a in &mut out.arcs {
            a.page = a.page.flip();
        }
        out
    }

    /// Inserts new items; each `(gap, item)` is placed in the gap of the
    /// original spine, several insertions into one gap keep their given order.
    pub fn insert_items(&self, insertions: &[(usize, SpineItem)]) -> BookEmbedding {
        let m = self.len();
        let mut sorted: Vec<(usize, usize, SpineItem)> = insertions
            .iter()
            .enumerate()
            .map(|(i, &(g, it))| (g.min(m), i, it))
            .collect();
        sorted.sort_by_key(|&(g, i, _)| (g, i));
        let mut spine = Vec::with_capacity(m + sorted.len());
        let mut remap = vec![0usize; m];
        let mut next = sorted.iter().peekable();
        for (i, item) in self.spine.iter().enumerate() {
            while let Some(&&(g, _, it)) = next.peek() {
                if g > i {
                    break;
                }
                spine.push(it);
                next.next();
            }
            remap[i] = spine.len();
            spine.push(*item);
        }
        spine.extend(next.map(|&(_, _, it)| it));
        let arcs = self
            .arcs
            .iter()
            .map(|a| Arc {
                left: remap[a.left],
                right: remap[a.right],
                ..*a
            })
            .collect();
        BookEmbedding {
            spine,
            arcs,
            vertex_colors: self.vertex_colors.clone(),
            edges: self.edges.clone(),
        }
    }

    /// Removes items that no arc touches; returns `None` if an arc endpoint would be removed.
    pub fn remove_items(&self, indices: &[usize]) -> Option<BookEmbedding> {
        let drop: std::collections::HashSet<usize> = indices.iter().copied().collect();
        if self
            .arcs
            .iter()
            .any(|a| drop.contains(&a.left) || drop.contains(&a.right))
        {
            return None;
        }
        let mut remap = vec![usize::MAX; self.len()];
        let mut spine = Vec::new();
        for (i, it) in self.spine.iter().enumerate() {
            if !drop.contains(&i) {
                remap[i] = spine.len();
                spine.push(*it);
            }
        }
        let arcs = self
            .arcs
            .iter()
            .map(|a| Arc {
                left: remap[a.left],
                right: remap[a.right],
                ..*a
            })
            .collect();
        Some(BookEmbedding {
            spine,
            arcs,
            vertex_colors: self.vertex_colors.clone(),
            edges: self.edges.clone(),
        })
    }

    /// Number of same-page arcs strictly containing each arc's span.
    pub fn nesting_depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.arcs.len()];
        for page in [Page::Top, Page::Bottom] {
            let mut idx: Vec<usize> = (0..self.arcs.len())
                .filter(|&i| self.arcs[i].page == page)
                .collect();
            // Outer arcs first: by left ascending, then right descending.
            idx.sort_by(|&a, &b| {
                let (x, y) = (&self.arcs[a], &self.arcs[b]);
                x.left.cmp(&y.left).then(y.right.cmp(&x.right))
            });
            let mut stack: Vec<usize> = Vec::new();
            for i in idx {
                let a = &self.arcs[i];
                while let Some(&top) = stack.last() {
                    let t = &self.arcs[top];
                    if t.left <= a.left && a.right <= t.right {
                        break;
                    }
                    stack.pop();
                }
                depth[i] = stack.len();
                stack.push(i);
            }
        }
        depth
    }
}

pub(crate) fn ranges(ok: &[bool]) -> Vec<RangeInclusive<usize>> {
    let mut out = Vec::new();
    let mut start = None;
    for (g, &b) in ok.iter().enumerate() {
        match (b, start) {
            (true, None) => start = Some(g),
            (false, Some(s)) => {
                out.push(s..=g - 1);
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(s..=ok.len() - 1);
    }
    out
}

/// Checks every structural invariant and, if given, the spine color sequence.
pub fn validate_book_embedding(be: &BookEmbedding, sigma: Option<&ColoredSequence>) -> ValidationReport {
    let mut r = ValidationReport::new();
    let m = be.len();
    let n = be.vertex_colors.len();

    let mut vpos = vec![usize::MAX; n];
    let mut seen_cross = HashMap::new();
    for (i, it) in be.spine.iter().enumerate() {
        match *it {
            SpineItem::Vertex { id } => {
                if id >= n {
                    r.error("unknown-vertex", format!("item {i} is unknown vertex {id}"), vec![Witness::Item(i)]);
                } else if vpos[id] != usize::MAX {
                    r.error(
                        "duplicate-vertex",
                        format!("vertex {id} appears at items {} and {i}", vpos[id]),
                        vec![Witness::Item(vpos[id]), Witness::Item(i)],
                    );
                } else {
                    vpos[id] = i;
                }
            }
            SpineItem::Crossing { edge, ordinal } => {
                if edge >= be.edges.len() {
                    r.error("unknown-edge", format!("crossing item {i} of unknown edge {edge}"), vec![Witness::Item(i)]);
                }
                if let Some(prev) = seen_cross.insert((edge, ordinal), i) {
                    r.error(
                        "duplicate-crossing",
                        format!("crossing ({edge},{ordinal}) at items {prev} and {i}"),
                        vec![Witness::Item(prev), Witness::Item(i)],
                    );
                }
            }
        }
    }
    for (v, &p) in vpos.iter().enumerate() {
        if p == usize::MAX {
            r.error("missing-vertex", format!("vertex {v} is not on the spine"), vec![Witness::Vertex(v)]);
        }
    }

    let mut shape_ok = true;
    for (i, a) in be.arcs.iter().enumerate() {
        if a.left >= a.right || a.right >= m || a.edge >= be.edges.len() {
            r.error("arc-shape", format!("arc {i} ({}, {}) is malformed", a.left, a.right), vec![Witness::Arc(i)]);
            shape_ok = false;
        }
    }
    if !shape_ok {
        return r;
    }

    for page in [Page::Top, Page::Bottom] {
        let on: Vec<usize> = (0..be.arcs.len()).filter(|&i| be.arcs[i].page == page).collect();
        for (x, &i) in on.iter().enumerate() {
            for &j in &on[x + 1..] {
                let (a, b) = (&be.arcs[i], &be.arcs[j]);
                let inter = |p: &Arc, q: &Arc| p.left < q.left && q.left < p.right && p.right < q.right;
                if inter(a, b) || inter(b, a) {
                    r.error(
                        "interleave",
                        format!(
                            "{page:?} arcs {i} ({},{}) and {j} ({},{}) interleave",
                            a.left, a.right, b.left, b.right
                        ),
                        vec![Witness::Arc(i), Witness::Arc(j)],
                    );
                }
            }
        }
    }

    // Chains.
    let mut per_edge: Vec<Vec<usize>> = vec![Vec::new(); be.edges.len()];
    for (i, a) in be.arcs.iter().enumerate() {
        per_edge[a.edge].push(i);
    }
    let mut endpoint_count = vec![0usize; m];
    for a in &be.arcs {
        endpoint_count[a.left] += 1;
        endpoint_count[a.right] += 1;
    }
    for (e, &(u, v)) in be.edges.iter().enumerate() {
        if u >= n || v >= n || vpos[u] == usize::MAX || vpos[v] == usize::MAX {
            r.error("chain", format!("edge {e} has an endpoint off the spine"), vec![Witness::Edge(e)]);
            continue;
        }
        let mut arcs = per_edge[e].clone();
        arcs.sort_by_key(|&i| be.arcs[i].ordinal);
        if arcs.is_empty() {
            r.error("chain", format!("edge {e} has no arcs"), vec![Witness::Edge(e)]);
            continue;
        }
        let mut cur = vpos[u];
        let mut ok = true;
        for (k, &ai) in arcs.iter().enumerate() {
            let a = &be.arcs[ai];
            if a.ordinal != k {
                r.error("chain", format!("edge {e} arc ordinals are not 0..{}", arcs.len()), vec![Witness::Edge(e)]);
                ok = false;
                break;
            }
            if k > 0 && be.arcs[arcs[k - 1]].page == a.page {
                r.error(
                    "chain-page",
                    format!("edge {e} has consecutive arcs {} and {k} in the same page", k - 1),
                    vec![Witness::Edge(e), Witness::Arc(ai)],
                );
            }
            let next = if a.left == cur {
                a.right
            } else if a.right == cur {
                a.left
            } else {
                r.error("chain", format!("edge {e} arc {k} does not continue its chain"), vec![Witness::Edge(e), Witness::Arc(ai)]);
                ok = false;
                break;
            };
            if k + 1 < arcs.len() {
                match be.spine[next] {
                    SpineItem::Crossing { edge, ordinal } if edge == e && ordinal == k + 1 => {}
                    _ => {
                        r.error(
                            "chain",
                            format!("edge {e} arc {k} ends at item {next}, expected its crossing {}", k + 1),
                            vec![Witness::Edge(e), Witness::Item(next)],
                        );
                        ok = false;
                        break;
                    }
                }
            }
            cur = next;
        }
        if ok && cur != vpos[v] {
            r.error("chain", format!("edge {e} chain does not end at vertex {v}"), vec![Witness::Edge(e)]);
        }
    }
    let mut deg = vec![0usize; n];
    for &(u, v) in &be.edges {
        if u < n && v < n {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    for (i, it) in be.spine.iter().enumerate() {
        let want = match *it {
            SpineItem::Vertex { id } if id < n => deg[id],
            SpineItem::Vertex { .. } => continue,
            SpineItem::Crossing { .. } => 2,
        };
        if endpoint_count[i] != want {
            r.error(
                "degree",
                format!("item {i} is the endpoint of {} arcs, expected {want}", endpoint_count[i]),
                vec![Witness::Item(i)],
            );
        }
    }
    for (i, a) in be.arcs.iter().enumerate() {
        for end in [a.left, a.right] {
            if let SpineItem::Crossing { edge, .. } = be.spine[end] {
                if edge != a.edge {
                    r.error(
                        "foreign-crossing",
                        format!("arc {i} of edge {} ends at a crossing of edge {edge}", a.edge),
                        vec![Witness::Arc(i), Witness::Item(end)],
                    );
                }
            }
        }
    }

    if let Some(sigma) = sigma {
        let got = be.spine_colors();
        if got.0.len() == n && vpos.iter().all(|&p| p != usize::MAX) && &got != sigma {
            let at = got.0.iter().zip(&sigma.0).position(|(a, b)| a != b).unwrap_or(got.len().min(sigma.len()));
            r.error(
                "sigma",
                format!("spine vertex colors differ from the target sequence at vertex rank {at}"),
                vec![],
            );
        }
    }
    r
}
