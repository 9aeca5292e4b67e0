//! Exhaustive search for book embeddings with few spine crossings per edge.

use std::collections::BTreeSet;

use crate::bookembed::{BookEmbedding, Page, RawArc};
use crate::error::{Error, Result};
use crate::model::{sequence_compatible, ColoredGraph, ColoredSequence};
use crate::twocolor::BitPair;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest number of spine crossings allowed on one edge.
    pub budget: usize,
    /// Largest number of spine items (vertices plus crossings).
    pub cap: usize,
    /// Fixed left-to-right vertex order instead of all orders matching the sequence.
    pub frozen_order: Option<Vec<usize>>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: 2,
            cap: 14,
            frozen_order: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub embedding: Option<BookEmbedding>,
    /// Smallest per-edge crossing bound for which an embedding exists.
    pub crossings: Option<usize>,
    pub orders_tried: u64,
    pub states: u64,
}

struct State<'a> {
    graph: &'a ColoredGraph,
    cap: usize,
    limit: usize,
    order: Vec<usize>,
    /// `Some(v)` for vertices, `None` for crossings; indexed by node id.
    kinds: Vec<Option<usize>>,
    arcs: Vec<(usize, usize, Page, usize)>,
    node_of: Vec<usize>,
    states: u64,
}

impl State<'_> {
    fn fits(&self, a: usize, b: usize, page: Page) -> bool {
        let mut pos = vec![0; self.kinds.len()];
        for (i, &id) in self.order.iter().enumerate() {
            pos[id] = i;
        }
        let (l, r) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
        self.arcs.iter().filter(|x| x.2 == page).all(|x| {
            let (c, d) = (pos[x.0].min(pos[x.1]), pos[x.0].max(pos[x.1]));
            !((l < c && c < r && r < d) || (c < l && l < d && d < r))
        })
    }

    fn edge(&mut self, e: usize) -> bool {
        if e == self.graph.edges().len() {
            return true;
        }
        let (u, v) = self.graph.edges()[e];
        for h in 0..=self.limit {
            if self.order.len() + h > self.cap {
                break;
            }
            for page in [Page::Top, Page::Bottom] {
                if self.chain(e, self.node_of[u], self.node_of[v], h, page) {
                    return true;
                }
            }
        }
        false
    }

    fn chain(&mut self, e: usize, cur: usize, end: usize, left: usize, page: Page) -> bool {
        self.states += 1;
        if left == 0 {
            if !self.fits(cur, end, page) {
                return false;
            }
            self.arcs.push((cur, end, page, e));
            if self.edge(e + 1) {
                return true;
            }
            self.arcs.pop();
            return false;
        }
        let x = self.kinds.len();
        self.kinds.push(None);
        for g in 0..=self.order.len() {
            self.order.insert(g, x);
            if self.fits(cur, x, page) {
                self.arcs.push((cur, x, page, e));
                if self.chain(e, x, end, left - 1, page.flip()) {
                    return true;
                }
                self.arcs.pop();
            }
            self.order.remove(g);
        }
        self.kinds.pop();
        false
    }

    fn finish(&self) -> Result<BookEmbedding> {
        let mut pos = vec![0; self.kinds.len()];
        for (i, &id) in self.order.iter().enumerate() {
            pos[id] = i;
        }
        BookEmbedding::assemble(
            self.order.iter().map(|&id| self.kinds[id]).collect(),
            self.arcs
                .iter()
                .map(|&(a, b, page, edge)| RawArc {
                    a: pos[a],
                    b: pos[b],
                    page,
                    edge,
                })
                .collect(),
            self.graph.colors().to_vec(),
            self.graph.edges().to_vec(),
        )
    }
}

/// Vertex orders whose colors read `sigma`; among vertices with equal color
/// and equal neighborhood only increasing-id orders are produced.
fn vertex_orders(graph: &ColoredGraph, sigma: &[usize]) -> Vec<Vec<usize>> {
    let n = graph.vertex_count();
    let adj = graph.adjacency();
    let hoods: Vec<BTreeSet<usize>> = adj.iter().map(|a| a.iter().copied().collect()).collect();
    let twin_before: Vec<Option<usize>> = (0..n)
        .map(|v| {
            (0..v)
                .rev()
                .find(|&w| graph.color(w) == graph.color(v) && hoods[w] == hoods[v])
        })
        .collect();
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut cur = Vec::with_capacity(n);
    fn rec(
        i: usize,
        sigma: &[usize],
        graph: &ColoredGraph,
        twin_before: &[Option<usize>],
        used: &mut Vec<bool>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == sigma.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..graph.vertex_count() {
            if used[v] || graph.color(v) != sigma[i] || twin_before[v].is_some_and(|w| !used[w]) {
                continue;
            }
            used[v] = true;
            cur.push(v);
            rec(i + 1, sigma, graph, twin_before, used, cur, out);
            cur.pop();
            used[v] = false;
        }
    }
    rec(0, sigma, graph, &twin_before, &mut used, &mut cur, &mut out);
    out
}

/// Searches every vertex order consistent with `sigma` and every placement of
/// spine crossings, raising the per-edge bound from 0 to `cfg.budget`, and
/// returns the first embedding found at the smallest bound.
pub fn exhaustive_embedding_search(
    graph: &ColoredGraph,
    sigma: &ColoredSequence,
    cfg: &SearchConfig,
) -> Result<SearchOutcome> {
    let n = graph.vertex_count();
    if n > cfg.cap {
        return Err(Error::CapExceeded { needed: n, cap: cfg.cap });
    }
    if !sequence_compatible(graph, sigma) {
        return Err(Error::Incompatible("color counts of graph and sequence differ".into()));
    }
    let orders = match &cfg.frozen_order {
        Some(o) => {
            let ok = o.len() == n
                && o.iter().copied().collect::<BTreeSet<_>>().len() == n
                && o.iter().all(|&v| v < n)
                && o.iter().map(|&v| graph.color(v)).eq(sigma.as_slice().iter().copied());
            if !ok {
                return Err(Error::Precondition("frozen order does not match the sequence".into()));
            }
            vec![o.clone()]
        }
        None => vertex_orders(graph, sigma.as_slice()),
    };
    let mut outcome = SearchOutcome {
        embedding: None,
        crossings: None,
        orders_tried: 0,
        states: 0,
    };
    for limit in 0..=cfg.budget {
        for order in &orders {
            outcome.orders_tried += 1;
            let mut node_of = vec![0; n];
            for (i, &v) in order.iter().enumerate() {
                node_of[v] = i;
            }
            let mut st = State {
                graph,
                cap: cfg.cap,
                limit,
                order: (0..n).collect(),
                kinds: order.iter().map(|&v| Some(v)).collect(),
                arcs: Vec::new(),
                node_of,
                states: 0,
            };
            let found = st.edge(0);
            outcome.states += st.states;
            if found {
                outcome.embedding = Some(st.finish()?);
                outcome.crossings = Some(limit);
                return Ok(outcome);
            }
        }
    }
    Ok(outcome)
}

/// Shortest balanced prefix by direct recount of every prefix.
pub fn brute_force_min_balanced_prefix(pair: &BitPair) -> Option<usize> {
    let zeros = |b: &[u8]| b.iter().filter(|&&x| x == 0).count();
    (1..=pair.len()).find(|&k| zeros(&pair.p_bits[..k]) == zeros(&pair.s_bits[..k]))
}
