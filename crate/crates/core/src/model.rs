//! Colored graphs, colored sequences and colored point sets.

use crate::error::{Error, Result};
use crate::exact::{format_rational, orient, Orientation, Point, Rational};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashSet};

pub type Color = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Path,
    Caterpillar,
    StarForest,
    General,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    k: usize,
    colors: Vec<Color>,
    edges: Vec<(usize, usize)>,
    class: GraphClass,
}

impl ColoredGraph {
    pub fn new(k: usize, colors: Vec<Color>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = colors.len();
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(Error::Invalid(format!("vertex {v} has color {c}, expected < {k}")));
        }
        let mut seen = HashSet::new();
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::Invalid(format!("edge ({u},{v}) references a missing vertex")));
            }
            if u == v {
                return Err(Error::Invalid(format!("self-loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Invalid(format!("duplicate edge ({u},{v})")));
            }
        }
        let mut g = ColoredGraph {
            k,
            colors,
            edges,
            class: GraphClass::General,
        };
        g.class = g.classify();
        Ok(g)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn class(&self) -> GraphClass {
        self.class
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Connected components, each sorted, in order of smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut out = Vec::new();
        for s in 0..self.vertex_count() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Vertices in path order starting from the smaller-id endpoint, when the graph is a path.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n == 0 || self.edges.len() + 1 != n {
            return None;
        }
        if n == 1 {
            return Some(vec![0]);
        }
        let adj = self.adjacency();
        if adj.iter().any(|a| a.len() > 2 || a.is_empty()) {
            return None;
        }
        let start = (0..n).find(|&v| adj[v].len() == 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
            if order.len() == n {
                return None;
            }
            order.push(next);
            prev = cur;
            cur = next;
        }
        (order.len() == n).then_some(order)
    }

    /// Backbone (non-leaf vertices in path order) when the graph is a caterpillar.
    ///
    /// For trees with at most two vertices the backbone is the first vertex.
    pub fn caterpillar_backbone(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n == 0 || self.edges.len() + 1 != n || self.components().len() != 1 {
            return None;
        }
        if n <= 2 {
            return Some(vec![0]);
        }
        let adj = self.adjacency();
        let inner: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 2).collect();
        let inner_set: HashSet<usize> = inner.iter().copied().collect();
        let inner_deg = |v: usize| adj[v].iter().filter(|w| inner_set.contains(w)).count();
        if inner.len() == 1 {
            return Some(inner);
        }
        if inner.iter().any(|&v| inner_deg(v) > 2) {
            return None;
        }
        let start = *inner.iter().find(|&&v| inner_deg(v) == 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = adj[cur]
            .iter()
            .find(|&&w| w != prev && inner_set.contains(&w))
        {
            order.push(next);
            prev = cur;
            cur = next;
        }
        (order.len() == inner.len()).then_some(order)
    }

    /// Star components as `(center, leaves)` when every component is a star.
    pub fn stars(&self) -> Option<Vec<(usize, Vec<usize>)>> {
        let adj = self.adjacency();
        let mut out = Vec::new();
        for comp in self.components() {
            let edges_in = comp.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
            if edges_in + 1 != comp.len() {
                return None;
            }
            let center = match comp.len() {
                1 | 2 => comp[0],
                _ => *comp.iter().find(|&&v| adj[v].len() == comp.len() - 1)?,
            };
            let leaves = comp.iter().copied().filter(|&v| v != center).collect();
            out.push((center, leaves));
        }
        Some(out)
    }

    fn classify(&self) -> GraphClass {
        if self.path_order().is_some() {
            GraphClass::Path
        } else if self.caterpillar_backbone().is_some() {
            GraphClass::Caterpillar
        } else if self.stars().is_some() {
            GraphClass::StarForest
        } else {
            GraphClass::General
        }
    }

    pub fn color_counts(&self) -> BTreeMap<Color, usize> {
        count_colors(&self.colors)
    }
}

pub(crate) fn count_colors(colors: &[Color]) -> BTreeMap<Color, usize> {
    let mut m = BTreeMap::new();
    for &c in colors {
        *m.entry(c).or_insert(0) += 1;
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredSequence(pub Vec<Color>);

impl ColoredSequence {
    pub fn new(colors: Vec<Color>) -> Self {
        ColoredSequence(colors)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    pub fn validate(&self, k: usize) -> Result<()> {
        match self.0.iter().position(|&c| c >= k) {
            Some(i) => Err(Error::Invalid(format!("sequence entry {i} has color {}, expected < {k}", self.0[i]))),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredPoint {
    pub point: Point,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredPointSet {
    k: usize,
    points: Vec<ColoredPoint>,
}

impl ColoredPointSet {
    pub fn new(k: usize, points: Vec<ColoredPoint>) -> Result<Self> {
        if let Some((i, p)) = points.iter().enumerate().find(|(_, p)| p.color >= k) {
            return Err(Error::Invalid(format!("point {i} has color {}, expected < {k}", p.color)));
        }
        let mut idx: Vec<usize> = (0..points.len()).collect();
        idx.sort_by(|&a, &b| points[a].point.x.cmp(&points[b].point.x));
        for w in idx.windows(2) {
            if points[w[0]].point.x == points[w[1]].point.x {
                return Err(Error::DuplicateX {
                    x: format_rational(&points[w[0]].point.x),
                    first: w[0].min(w[1]),
                    second: w[0].max(w[1]),
                });
            }
        }
        Ok(ColoredPointSet { k, points })
    }

    pub fn from_triples(k: usize, pts: &[(Rational, Rational, Color)]) -> Result<Self> {
        Self::new(
            k,
            pts.iter()
                .map(|(x, y, c)| ColoredPoint {
                    point: Point::new(x.clone(), y.clone()),
                    color: *c,
                })
                .collect(),
        )
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn points(&self) -> &[ColoredPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Point indices sorted by increasing x.
    pub fn x_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.points.len()).collect();
        idx.sort_by(|&a, &b| self.points[a].point.x.cmp(&self.points[b].point.x));
        idx
    }
}

/// The colors of `points` read in increasing x order.
pub fn seq_of(points: &ColoredPointSet) -> ColoredSequence {
    ColoredSequence(
        points
            .x_order()
            .into_iter()
            .map(|i| points.points[i].color)
            .collect(),
    )
}

pub fn compatible(graph: &ColoredGraph, points: &ColoredPointSet) -> bool {
    graph.color_counts() == count_colors(&points.points.iter().map(|p| p.color).collect::<Vec<_>>())
}

pub fn sequence_compatible(graph: &ColoredGraph, sigma: &ColoredSequence) -> bool {
    graph.color_counts() == count_colors(&sigma.0)
}

/// Convex position (no collinear hull points) with the min-x and max-x points hull-adjacent.
pub fn is_one_sided_convex(points: &ColoredPointSet) -> bool {
    let order = points.x_order();
    let pts: Vec<&Point> = order.iter().map(|&i| &points.points[i].point).collect();
    if pts.len() <= 2 {
        return true;
    }
    let (first, last) = (pts[0], pts[pts.len() - 1]);
    let side = orient(first, last, pts[1]);
    if side == Orientation::Collinear {
        return false;
    }
    // Every inner point strictly on one side of the base chord, and the
    // x-sorted chain turning consistently towards the chord.
    let turn = match side {
        Orientation::CounterClockwise => Orientation::Clockwise,
        _ => Orientation::CounterClockwise,
    };
    pts[1..pts.len() - 1].iter().all(|p| orient(first, last, p) == side)
        && pts.windows(3).all(|w| orient(w[0], w[1], w[2]) == turn)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pset(pts: &[(i64, i64, Color)], k: usize) -> ColoredPointSet {
        ColoredPointSet::new(
            k,
            pts.iter()
                .map(|&(x, y, c)| ColoredPoint {
                    point: Point::from_ints(x, y),
                    color: c,
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn seq_of_examples() {
        assert_eq!(seq_of(&pset(&[(0, 0, 0)], 1)).0, vec![0]);
        assert_eq!(seq_of(&pset(&[(2, 0, 1), (1, 5, 0)], 2)).0, vec![0, 1]);
    }

    #[test]
    fn duplicate_x_is_rejected_with_hint() {
        let err = ColoredPointSet::new(
            1,
            vec![
                ColoredPoint { point: Point::from_ints(1, 0), color: 0 },
                ColoredPoint { point: Point::from_ints(1, 3), color: 0 },
            ],
        )
        .unwrap_err();
        assert!(err.to_string().contains("rotate"));
    }

    #[test]
    fn compatibility_examples() {
        let empty = ColoredGraph::new(1, vec![], vec![]).unwrap();
        assert!(compatible(&empty, &pset(&[], 1)));
        let two = ColoredGraph::new(2, vec![0, 0], vec![(0, 1)]).unwrap();
        assert!(!compatible(&two, &pset(&[(0, 0, 0), (1, 0, 1)], 2)));
        assert!(compatible(&two, &pset(&[(0, 0, 0), (1, 0, 0)], 2)));
        assert!(sequence_compatible(&empty, &ColoredSequence(vec![])));
        assert!(!sequence_compatible(&two, &ColoredSequence(vec![0, 1])));
        assert!(sequence_compatible(&two, &ColoredSequence(vec![0, 0])));
    }

    #[test]
    fn graph_validation() {
        assert!(ColoredGraph::new(2, vec![0, 1], vec![(0, 0)]).is_err());
        assert!(ColoredGraph::new(2, vec![0, 1], vec![(0, 1), (1, 0)]).is_err());
        assert!(ColoredGraph::new(2, vec![0, 2], vec![(0, 1)]).is_err());
    }

    #[test]
    fn classification() {
        let path = ColoredGraph::new(1, vec![0; 4], vec![(2, 0), (0, 1), (1, 3)]).unwrap();
        assert_eq!(path.class(), GraphClass::Path);
        assert_eq!(path.path_order().unwrap(), vec![2, 0, 1, 3]);
        let cat = ColoredGraph::new(1, vec![0; 5], vec![(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(cat.class(), GraphClass::Caterpillar);
        assert_eq!(cat.caterpillar_backbone().unwrap().len(), 2);
        let stars = ColoredGraph::new(1, vec![0; 5], vec![(0, 1), (0, 2), (3, 4)]).unwrap();
        assert_eq!(stars.class(), GraphClass::StarForest);
        let spider = ColoredGraph::new(
            1,
            vec![0; 7],
            vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)],
        )
        .unwrap();
        assert_eq!(spider.class(), GraphClass::General);
        assert_eq!(ColoredGraph::new(1, vec![0], vec![]).unwrap().class(), GraphClass::Path);
    }

    #[test]
    fn one_sided_convex_examples() {
        assert!(is_one_sided_convex(&pset(&[(0, 0, 0), (1, 2, 0), (3, 1, 0)], 1)));
        // Lower arc of a circle plus an interior point.
        let arc = [(-5, 0, 0), (-3, -4, 0), (0, -5, 0), (3, -4, 0), (5, 0, 0), (1, -1, 0)];
        assert!(!is_one_sided_convex(&pset(&arc, 1)));
        assert!(is_one_sided_convex(&pset(&arc[..5], 1)));
        // Collinear hull point.
        assert!(!is_one_sided_convex(&pset(&[(0, 0, 0), (1, 1, 0), (2, 2, 0), (3, 0, 0)], 1)));
        // Convex position but extremes not adjacent on the hull.
        assert!(!is_one_sided_convex(&pset(&[(0, 0, 0), (1, 2, 0), (2, -2, 0), (3, 0, 0)], 1)));
    }
}
