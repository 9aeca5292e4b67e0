//! Exact planarity check and bend counts for polyline drawings.
//!
//! Segment tests use a floating-point filter and fall back to exact rational
//! arithmetic whenever the filter cannot decide.

use std::cmp::Ordering;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::exact::{format_rational, Point, Rational};
use crate::model::{ColoredGraph, ColoredPointSet};
use crate::realizer::PolylineDrawing;
use crate::report::{ValidationReport, Witness};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Owner {
    /// Segment `index` of edge `edge`, out of `count`.
    Seg { edge: usize, index: usize, count: usize },
    Vertex(usize),
}

struct Entry<'a> {
    owner: Owner,
    a: &'a Point,
    b: &'a Point,
    fa: (f64, f64),
    fb: (f64, f64),
    lo: (f64, f64),
    hi: (f64, f64),
}

enum Contact {
    None,
    Point(Point),
    Cross,
    Overlap,
}

fn approx(p: &Point) -> (f64, f64) {
    (p.x.to_f64().unwrap_or(f64::NAN), p.y.to_f64().unwrap_or(f64::NAN))
}

fn sign(r: &Rational) -> i8 {
    match r.cmp(&Rational::zero()) {
        Ordering::Greater => 1,
        Ordering::Less => -1,
        Ordering::Equal => 0,
    }
}

/// Sign of the turn a -> b -> c.
fn turn(a: &Entry, ia: bool, c: &Point, fc: (f64, f64)) -> i8 {
    let (p, q, fp, fq) = if ia { (a.a, a.b, a.fa, a.fb) } else { (a.b, a.a, a.fb, a.fa) };
    let det = (fq.0 - fp.0) * (fc.1 - fp.1) - (fq.1 - fp.1) * (fc.0 - fp.0);
    let mag = ((fq.0 - fp.0).abs() + fp.0.abs() + fq.0.abs()) * ((fc.1 - fp.1).abs() + fp.1.abs() + fc.1.abs())
        + ((fq.1 - fp.1).abs() + fp.1.abs() + fq.1.abs()) * ((fc.0 - fp.0).abs() + fp.0.abs() + fc.0.abs());
    if det.is_finite() && mag.is_finite() && det.abs() > 1e-9 * mag {
        return if det > 0.0 { 1 } else { -1 };
    }
    sign(&((&q.x - &p.x) * (&c.y - &p.y) - (&q.y - &p.y) * (&c.x - &p.x)))
}

fn lex(p: &Point, q: &Point) -> Ordering {
    p.x.cmp(&q.x).then_with(|| p.y.cmp(&q.y))
}

fn on_segment(s: &Entry, p: &Point, fp: (f64, f64)) -> bool {
    if s.a == s.b {
        return s.a == p;
    }
    turn(s, true, p, fp) == 0 && {
        let (lo, hi) = if lex(s.a, s.b) == Ordering::Less { (s.a, s.b) } else { (s.b, s.a) };
        lex(lo, p) != Ordering::Greater && lex(p, hi) != Ordering::Greater
    }
}

fn contact(s: &Entry, t: &Entry) -> Contact {
    let s_point = s.a == s.b;
    let t_point = t.a == t.b;
    if s_point || t_point {
        let (pt, seg, fp) = if s_point { (s.a, t, s.fa) } else { (t.a, s, t.fa) };
        return if on_segment(seg, pt, fp) { Contact::Point(pt.clone()) } else { Contact::None };
    }
    let o1 = turn(s, true, t.a, t.fa);
    let o2 = turn(s, true, t.b, t.fb);
    if o1 * o2 > 0 {
        return Contact::None;
    }
    let o3 = turn(t, true, s.a, s.fa);
    let o4 = turn(t, true, s.b, s.fb);
    if o3 * o4 > 0 {
        return Contact::None;
    }
    if o1 == 0 && o2 == 0 {
        let sort = |p: &'_ Point, q: &'_ Point| -> (Point, Point) {
            if lex(p, q) == Ordering::Less {
                (p.clone(), q.clone())
            } else {
                (q.clone(), p.clone())
            }
        };
        let (s0, s1) = sort(s.a, s.b);
        let (t0, t1) = sort(t.a, t.b);
        let lo = if lex(&s0, &t0) == Ordering::Greater { s0 } else { t0 };
        let hi = if lex(&s1, &t1) == Ordering::Less { s1 } else { t1 };
        return match lex(&lo, &hi) {
            Ordering::Greater => Contact::None,
            Ordering::Equal => Contact::Point(lo),
            Ordering::Less => Contact::Overlap,
        };
    }
    if o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        return Contact::Cross;
    }
    let p = if o1 == 0 {
        t.a
    } else if o2 == 0 {
        t.b
    } else if o3 == 0 {
        s.a
    } else {
        s.b
    };
    Contact::Point(p.clone())
}

fn entry<'a>(owner: Owner, a: &'a Point, b: &'a Point) -> Entry<'a> {
    let (fa, fb) = (approx(a), approx(b));
    let pad = |v: f64| 1e-9 * (1.0 + v.abs());
    let lo = (fa.0.min(fb.0), fa.1.min(fb.1));
    let hi = (fa.0.max(fb.0), fa.1.max(fb.1));
    Entry {
        owner,
        a,
        b,
        fa,
        fb,
        lo: (lo.0 - pad(lo.0), lo.1 - pad(lo.1)),
        hi: (hi.0 + pad(hi.0), hi.1 + pad(hi.1)),
    }
}

fn coord(p: &Point) -> Witness {
    Witness::Coordinate {
        x: format_rational(&p.x),
        y: format_rational(&p.y),
    }
}

fn owner_witness(o: Owner) -> Witness {
    match o {
        Owner::Seg { edge, index, .. } => Witness::Segment { edge, index },
        Owner::Vertex(v) => Witness::Vertex(v),
    }
}

/// Exact check that no two edges meet except at a shared end vertex, that no
/// edge passes through a vertex point or itself, and that every polyline
/// starts and ends at its vertices' points.
pub fn check_planar(d: &PolylineDrawing) -> ValidationReport {
    let mut r = ValidationReport::new();
    for (e, (line, &(u, v))) in d.edge_polylines.iter().zip(&d.edges).enumerate() {
        let ok = line.len() >= 2 && line[0] == d.vertex_points[u] && line[line.len() - 1] == d.vertex_points[v];
        if !ok {
            r.error(
                "polyline-endpoint",
                format!("polyline of edge {e} does not run from vertex {u} to vertex {v}"),
                vec![Witness::Edge(e)],
            );
        }
    }
    if !r.pass() {
        return r;
    }

    let mut entries: Vec<Entry> = Vec::new();
    for (e, line) in d.edge_polylines.iter().enumerate() {
        let count = line.len() - 1;
        for (index, w) in line.windows(2).enumerate() {
            entries.push(entry(Owner::Seg { edge: e, index, count }, &w[0], &w[1]));
        }
    }
    for (v, p) in d.vertex_points.iter().enumerate() {
        entries.push(entry(Owner::Vertex(v), p, p));
    }
    entries.sort_by(|a, b| a.lo.0.total_cmp(&b.lo.0));

    let allowed = |s: &Entry, t: &Entry, c: &Contact| -> bool {
        let Contact::Point(p) = c else {
            return false;
        };
        let at_end = |o: Owner, w: usize| -> bool {
            match o {
                Owner::Vertex(x) => x == w,
                Owner::Seg { edge, index, count } => {
                    let (a, b) = d.edges[edge];
                    (a == w && index == 0) || (b == w && index + 1 == count)
                }
            }
        };
        match (s.owner, t.owner) {
            (Owner::Seg { edge: e, index: i, .. }, Owner::Seg { edge: f, index: j, .. }) if e == f => {
                let (i, j, first, second) = if i < j { (i, j, s, t) } else { (j, i, t, s) };
                j == i + 1 && first.b == p && second.a == p
            }
            _ => (0..d.vertex_points.len()).any(|w| {
                d.vertex_points[w] == *p && at_end(s.owner, w) && at_end(t.owner, w)
            }),
        }
    };

    let mut active: Vec<usize> = Vec::new();
    for i in 0..entries.len() {
        let s = &entries[i];
        active.retain(|&j| entries[j].hi.0 >= s.lo.0);
        for &j in &active {
            let t = &entries[j];
            if t.hi.1 < s.lo.1 || s.hi.1 < t.lo.1 {
                continue;
            }
            let c = contact(s, t);
            if matches!(c, Contact::None) || allowed(s, t, &c) {
                continue;
            }
            let (code, what) = match &c {
                Contact::Cross => ("crossing", "cross"),
                Contact::Overlap => ("overlap", "overlap"),
                _ => ("touch", "touch"),
            };
            let mut w = vec![owner_witness(s.owner), owner_witness(t.owner)];
            if let Contact::Point(p) = &c {
                w.push(coord(p));
            }
            r.error(code, format!("{:?} and {:?} {what}", s.owner, t.owner), w);
        }
        active.push(i);
    }
    r
}

/// Checks a drawing against its instance: vertices on distinct points of
/// their own color, one polyline per graph edge, and planarity.
pub fn check_drawing(graph: &ColoredGraph, points: &ColoredPointSet, d: &PolylineDrawing) -> ValidationReport {
    let mut r = ValidationReport::new();
    if d.vertex_to_point.len() != graph.vertex_count() || d.vertex_points.len() != graph.vertex_count() {
        r.error("vertex-count", "drawing and graph have different vertex counts", vec![]);
        return r;
    }
    let mut used = vec![false; points.len()];
    for (v, &p) in d.vertex_to_point.iter().enumerate() {
        if p >= points.len() || used[p] {
            r.error("vertex-point", format!("vertex {v} has no point of its own"), vec![Witness::Vertex(v)]);
            continue;
        }
        used[p] = true;
        if points.points()[p].color != graph.color(v) || points.points()[p].point != d.vertex_points[v] {
            r.error("vertex-color", format!("vertex {v} is not on a point of its color"), vec![Witness::Vertex(v)]);
        }
    }
    if d.edges != graph.edges() || d.edge_polylines.len() != d.edges.len() {
        r.error("edges", "drawing edges differ from the graph's", vec![]);
    }
    if r.pass() {
        r.merge(check_planar(d));
    }
    r
}

/// Interior polyline points where the direction changes.
pub fn bends(line: &[Point]) -> usize {
    line.windows(3)
        .filter(|w| {
            let (a, b, c) = (&w[0], &w[1], &w[2]);
            let cross = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
            let forward = (&b.x - &a.x) * (&c.x - &b.x) + (&b.y - &a.y) * (&c.y - &b.y);
            !(cross.is_zero() && forward.is_positive())
        })
        .count()
}

/// Largest number of bends on an edge.
pub fn curve_complexity(d: &PolylineDrawing) -> usize {
    d.edge_polylines.iter().map(|l| bends(l)).max().unwrap_or(0)
}
