//! Turns a book embedding into a polyline drawing on a colored point set.
//!
//! Spine vertices go to the points in x-order and crossings are spread
//! evenly on the segments between them, so the spine is an x-monotone
//! polyline through the points. Every arc becomes a tent: a segment up to an
//! apex over the midpoint of its ends and a segment back down. Apex heights
//! are chosen innermost-out so that tents clear the spine polyline and
//! strictly contain the tents nested under them.

use num_traits::{Signed, Zero};

use crate::bookembed::{BookEmbedding, Page};
use crate::error::{Error, Result};
use crate::exact::{int, ratio, Point, Rational};
use crate::model::{seq_of, ColoredPointSet};
use crate::verify::check_planar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolylineDrawing {
    pub vertex_to_point: Vec<usize>,
    pub vertex_points: Vec<Point>,
    pub edges: Vec<(usize, usize)>,
    /// Per edge, from its first to its second endpoint, bends in between.
    pub edge_polylines: Vec<Vec<Point>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpineGeometry {
    /// Coordinates of every spine item.
    pub items: Vec<Point>,
    /// Apex of every arc, in the embedding's arc order.
    pub apexes: Vec<Point>,
    pub depths: Vec<usize>,
    /// Largest absolute slope of a spine polyline segment.
    pub lambda: Rational,
    /// Largest and smallest point y; top apexes lie above the first, bottom apexes below the second.
    pub max_y: Rational,
    pub min_y: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizeOptions {
    /// Replace innermost tents by straight chords when the chord clears the spine.
    pub straighten: bool,
    /// Extra height rounds tried when the planarity check fails.
    pub escalations: u32,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        RealizeOptions {
            straighten: false,
            escalations: 4,
        }
    }
}

/// Maps the i-th spine vertex to the i-th point in x-order and places the
/// crossings; returns the vertex-to-point map and all item coordinates.
pub fn assign_points(be: &BookEmbedding, points: &ColoredPointSet) -> Result<(Vec<usize>, Vec<Point>)> {
    if be.spine_colors() != seq_of(points) {
        return Err(Error::Incompatible(
            "spine colors differ from the point colors in x-order".into(),
        ));
    }
    let order = points.x_order();
    let pts = points.points();
    let vpos: Vec<usize> = (0..be.len()).filter(|&i| be.spine[i].vertex().is_some()).collect();
    let mut vertex_to_point = vec![0; be.vertex_colors.len()];
    let mut items = vec![Point::from_ints(0, 0); be.len()];
    for (j, &i) in vpos.iter().enumerate() {
        let v = be.spine[i].vertex().unwrap();
        vertex_to_point[v] = order[j];
        items[i] = pts[order[j]].point.clone();
    }
    let Some((&first, &last)) = vpos.first().zip(vpos.last()) else {
        return Err(Error::Invalid("spine has no vertex".into()));
    };
    for i in 0..first {
        let p = &items[first];
        items[i] = Point::new(&p.x - int((first - i) as i64), p.y.clone());
    }
    for i in last + 1..be.len() {
        let p = &items[last];
        items[i] = Point::new(&p.x + int((i - last) as i64), p.y.clone());
    }
    for w in vpos.windows(2) {
        let (a, b) = (items[w[0]].clone(), items[w[1]].clone());
        let slots = (w[1] - w[0]) as i64;
        for (i, item) in items.iter_mut().enumerate().take(w[1]).skip(w[0] + 1) {
            let t = ratio((i - w[0]) as i64, slots);
            *item = Point::new(&a.x + (&b.x - &a.x) * &t, &a.y + (&b.y - &a.y) * &t);
        }
    }
    Ok((vertex_to_point, items))
}

fn ceil_above(r: &Rational) -> Rational {
    r.floor() + int(1)
}

/// Apex heights for one page, measured upward (`sign = 1`) or downward (`sign = -1`).
fn page_heights(
    be: &BookEmbedding,
    items: &[Point],
    lambda: &Rational,
    base: &Rational,
    page: Page,
    extra: &Rational,
    heights: &mut [Rational],
) {
    let sign = if page == Page::Top { int(1) } else { int(-1) };
    let y = |i: usize| &items[i].y * &sign;
    let x = |i: usize| items[i].x.clone();
    let mut idx: Vec<usize> = (0..be.arcs.len()).filter(|&i| be.arcs[i].page == page).collect();
    idx.sort_by(|&a, &b| {
        let (p, q) = (&be.arcs[a], &be.arcs[b]);
        p.left.cmp(&q.left).then(q.right.cmp(&p.right))
    });
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); be.arcs.len()];
    let mut stack: Vec<usize> = Vec::new();
    for &i in &idx {
        let a = &be.arcs[i];
        while let Some(&t) = stack.last() {
            let o = &be.arcs[t];
            if o.left <= a.left && a.right <= o.right {
                children[t].push(i);
                break;
            }
            stack.pop();
        }
        stack.push(i);
    }
    // Children have shorter spans, so ascending span length is innermost-out.
    idx.sort_by_key(|&i| be.arcs[i].right - be.arcs[i].left);
    let two = int(2);
    for &i in &idx {
        let a = &be.arcs[i];
        let (xa, xb) = (x(a.left), x(a.right));
        let (ya, yb) = (y(a.left), y(a.right));
        let xm = (&xa + &xb) / &two;
        let hw = (&xb - &xa) / &two;
        let mut lb = base.clone();
        for cand in [&ya + lambda * &hw, &yb + lambda * &hw] {
            if cand > lb {
                lb = cand;
            }
        }
        for &c in &children[i] {
            let ca = &be.arcs[c];
            let xmc = (x(ca.left) + x(ca.right)) / &two;
            let hc = &heights[c];
            let left = &ya + (hc - &ya) * (&xm - &xa) / (&xmc - &xa);
            let right = &yb + (hc - &yb) * (&xb - &xm) / (&xb - &xmc);
            for cand in [left, right] {
                if cand > lb {
                    lb = cand;
                }
            }
        }
        heights[i] = ceil_above(&lb) + extra;
    }
}

/// Computes item coordinates and apexes; `round` adds `2^round - 1` to every height.
pub fn spine_geometry(be: &BookEmbedding, points: &ColoredPointSet, round: u32) -> Result<SpineGeometry> {
    let (_, items) = assign_points(be, points)?;
    let mut lambda = Rational::zero();
    for w in items.windows(2) {
        let s = ((&w[1].y - &w[0].y) / (&w[1].x - &w[0].x)).abs();
        if s > lambda {
            lambda = s;
        }
    }
    let ys = points.points().iter().map(|p| &p.point.y);
    let max_y = ys.clone().max().cloned().unwrap_or_else(Rational::zero);
    let min_y = ys.min().cloned().unwrap_or_else(Rational::zero);
    let extra = int((1i64 << round.min(40)) - 1);
    let mut heights = vec![Rational::zero(); be.arcs.len()];
    page_heights(be, &items, &lambda, &max_y, Page::Top, &extra, &mut heights);
    page_heights(be, &items, &lambda, &-&min_y, Page::Bottom, &extra, &mut heights);
    let apexes = be
        .arcs
        .iter()
        .zip(&heights)
        .map(|(a, h)| {
            let xm = (&items[a.left].x + &items[a.right].x) / int(2);
            Point::new(xm, if a.page == Page::Top { h.clone() } else { -h })
        })
        .collect();
    let geo = SpineGeometry {
        items,
        apexes,
        depths: be.nesting_depths(),
        lambda,
        max_y,
        min_y,
    };
    check_slopes(be, &geo)?;
    Ok(geo)
}

/// Every tent side must be steeper than any spine segment.
fn check_slopes(be: &BookEmbedding, geo: &SpineGeometry) -> Result<()> {
    for (i, a) in be.arcs.iter().enumerate() {
        let ap = &geo.apexes[i];
        for end in [a.left, a.right] {
            let p = &geo.items[end];
            let s = ((&ap.y - &p.y) / (&ap.x - &p.x)).abs();
            if s <= geo.lambda {
                return Err(Error::Realization(format!("arc {i} is not steeper than the spine")));
            }
        }
        let above = if a.page == Page::Top { ap.y > geo.max_y } else { ap.y < geo.min_y };
        if !above {
            return Err(Error::Realization(format!("apex of arc {i} is inside the point band")));
        }
    }
    Ok(())
}

/// Innermost arcs whose chord passes strictly on their page's side of every
/// spine item between the ends.
fn straight_arcs(be: &BookEmbedding, geo: &SpineGeometry) -> Vec<bool> {
    let mut has_child = vec![false; be.arcs.len()];
    for (i, a) in be.arcs.iter().enumerate() {
        for (j, b) in be.arcs.iter().enumerate() {
            if i != j && a.page == b.page && a.left <= b.left && b.right <= a.right {
                has_child[i] = true;
            }
        }
    }
    be.arcs
        .iter()
        .enumerate()
        .map(|(i, a)| {
            if has_child[i] || a.right - a.left < 2 {
                return false;
            }
            let (p, q) = (&geo.items[a.left], &geo.items[a.right]);
            (a.left + 1..a.right).all(|k| {
                let r = &geo.items[k];
                let chord = &p.y + (&q.y - &p.y) * (&r.x - &p.x) / (&q.x - &p.x);
                if a.page == Page::Top {
                    chord > r.y
                } else {
                    chord < r.y
                }
            })
        })
        .collect()
}

fn build(be: &BookEmbedding, points: &ColoredPointSet, geo: &SpineGeometry, straight: &[bool]) -> Result<PolylineDrawing> {
    let (vertex_to_point, _) = assign_points(be, points)?;
    let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); be.edges.len()];
    for (i, a) in be.arcs.iter().enumerate() {
        by_edge[a.edge].push(i);
    }
    let mut polylines = Vec::with_capacity(be.edges.len());
    for (e, &(u, _)) in be.edges.iter().enumerate() {
        by_edge[e].sort_by_key(|&i| be.arcs[i].ordinal);
        let mut cur = be
            .vertex_position(u)
            .ok_or_else(|| Error::Invalid(format!("vertex {u} not on spine")))?;
        let mut line = vec![geo.items[cur].clone()];
        for &i in &by_edge[e] {
            let a = &be.arcs[i];
            let next = if a.left == cur { a.right } else { a.left };
            if !straight[i] {
                line.push(geo.apexes[i].clone());
            }
            line.push(geo.items[next].clone());
            cur = next;
        }
        polylines.push(line);
    }
    Ok(PolylineDrawing {
        vertex_points: vertex_to_point.iter().map(|&p| points.points()[p].point.clone()).collect(),
        vertex_to_point,
        edges: be.edges.clone(),
        edge_polylines: polylines,
    })
}

/// Planar drawing with at most `2h + 1` bends on an edge with `h` spine crossings.
pub fn realize(be: &BookEmbedding, points: &ColoredPointSet) -> Result<PolylineDrawing> {
    Ok(realize_with(be, points, &RealizeOptions::default())?.0)
}

pub fn realize_with(
    be: &BookEmbedding,
    points: &ColoredPointSet,
    opts: &RealizeOptions,
) -> Result<(PolylineDrawing, SpineGeometry)> {
    let report = crate::bookembed::validate_book_embedding(be, Some(&seq_of(points)));
    if !report.pass() {
        return Err(Error::Invalid(format!("book embedding is not valid:\n{report}")));
    }
    for round in 0..=opts.escalations {
        let geo = spine_geometry(be, points, round)?;
        let none = vec![false; be.arcs.len()];
        if opts.straighten {
            let d = build(be, points, &geo, &straight_arcs(be, &geo))?;
            if check_planar(&d).pass() {
                return Ok((d, geo));
            }
            log::info!("straightened drawing is not planar, keeping tents");
        }
        let d = build(be, points, &geo, &none)?;
        let report = check_planar(&d);
        if report.pass() {
            return Ok((d, geo));
        }
        log::warn!("drawing failed the planarity check in round {round}:\n{report}");
    }
    Err(Error::Realization(format!(
        "no planar drawing after {} height escalations",
        opts.escalations
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bookembed::{RawArc, SpineItem};

    fn pts(v: &[(i64, i64, usize)]) -> ColoredPointSet {
        ColoredPointSet::from_triples(3, &v.iter().map(|&(x, y, c)| (int(x), int(y), c)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn crossing_at_segment_midpoint() {
        let be = BookEmbedding::assemble(
            vec![Some(0), None, Some(1)],
            vec![
                RawArc { a: 0, b: 1, page: Page::Top, edge: 0 },
                RawArc { a: 1, b: 2, page: Page::Bottom, edge: 0 },
            ],
            vec![0, 1],
            vec![(0, 1)],
        )
        .unwrap();
        let (_, items) = assign_points(&be, &pts(&[(0, 0, 0), (2, 2, 1)])).unwrap();
        assert_eq!(items[1], Point::from_ints(1, 1));
        assert!(be.spine[1] == SpineItem::Crossing { edge: 0, ordinal: 1 });
    }

    #[test]
    fn single_arc_has_one_bend() {
        let be = BookEmbedding::assemble(
            vec![Some(0), Some(1)],
            vec![RawArc { a: 0, b: 1, page: Page::Top, edge: 0 }],
            vec![0, 1],
            vec![(0, 1)],
        )
        .unwrap();
        let d = realize(&be, &pts(&[(0, 0, 0), (4, 1, 1)])).unwrap();
        assert_eq!(d.edge_polylines[0].len(), 3);
        assert_eq!(d.edge_polylines[0][1].x, int(2));
        assert!(d.edge_polylines[0][1].y > int(1));
    }

    #[test]
    fn crossings_outside_the_vertices_extend_horizontally() {
        let be = BookEmbedding::assemble(
            vec![None, Some(1), Some(0)],
            vec![
                RawArc { a: 0, b: 2, page: Page::Top, edge: 0 },
                RawArc { a: 0, b: 1, page: Page::Bottom, edge: 0 },
            ],
            vec![0, 1],
            vec![(0, 1)],
        )
        .unwrap();
        let (_, items) = assign_points(&be, &pts(&[(3, 5, 1), (7, 0, 0)])).unwrap();
        assert_eq!(items[0], Point::from_ints(2, 5));
    }
}
