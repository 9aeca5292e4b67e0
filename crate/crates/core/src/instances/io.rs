use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bookembed::BookEmbedding;
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, to_f64, Point};
use crate::model::{ColoredGraph, ColoredPoint, ColoredPointSet};
use crate::realizer::PolylineDrawing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: ColoredGraph,
    pub points: ColoredPointSet,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    k: usize,
    graph: GraphFile,
    points: Vec<PointFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    n: usize,
    colors: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointFile {
    x: String,
    y: String,
    color: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DrawingFile {
    vertex_to_point: Vec<usize>,
    edges: Vec<(usize, usize)>,
    polylines: Vec<Vec<[String; 2]>>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

fn at(location: String, message: impl Into<String>) -> Error {
    Error::Parse {
        location,
        message: message.into(),
    }
}

fn rational_at(s: &str, location: impl Fn() -> String) -> Result<crate::exact::Rational> {
    parse_rational(s).map_err(|e| at(location(), e.to_string()))
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let f: InstanceFile = serde_json::from_str(text).map_err(json_error)?;
    if f.graph.colors.len() != f.graph.n {
        return Err(at(
            "graph.colors".into(),
            format!("{} colors for n = {}", f.graph.colors.len(), f.graph.n),
        ));
    }
    if let Some(i) = f.graph.colors.iter().position(|&c| c >= f.k) {
        return Err(at(format!("graph.colors[{i}]"), format!("color {} is not below k = {}", f.graph.colors[i], f.k)));
    }
    if let Some(i) = f.graph.edges.iter().position(|&(u, v)| u >= f.graph.n || v >= f.graph.n) {
        return Err(at(format!("graph.edges[{i}]"), "endpoint is not a vertex"));
    }
    let mut points = Vec::with_capacity(f.points.len());
    for (i, p) in f.points.iter().enumerate() {
        if p.color >= f.k {
            return Err(at(format!("points[{i}].color"), format!("color {} is not below k = {}", p.color, f.k)));
        }
        points.push(ColoredPoint {
            point: Point::new(
                rational_at(&p.x, || format!("points[{i}].x"))?,
                rational_at(&p.y, || format!("points[{i}].y"))?,
            ),
            color: p.color,
        });
    }
    Ok(Instance {
        graph: ColoredGraph::new(f.k, f.graph.colors, f.graph.edges)?,
        points: ColoredPointSet::new(f.k, points)?,
    })
}

pub fn instance_to_json(inst: &Instance) -> String {
    let f = InstanceFile {
        k: inst.graph.k(),
        graph: GraphFile {
            n: inst.graph.vertex_count(),
            colors: inst.graph.colors().to_vec(),
            edges: inst.graph.edges().to_vec(),
        },
        points: inst
            .points
            .points()
            .iter()
            .map(|p| PointFile {
                x: format_rational(&p.point.x),
                y: format_rational(&p.point.y),
                color: p.color,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&f).expect("serializable")
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<Instance> {
    parse_instance(&std::fs::read_to_string(path)?)
}

pub fn write_instance(path: impl AsRef<Path>, inst: &Instance) -> Result<()> {
    std::fs::write(path, instance_to_json(inst))?;
    Ok(())
}

pub fn drawing_to_json(d: &PolylineDrawing) -> String {
    let f = DrawingFile {
        vertex_to_point: d.vertex_to_point.clone(),
        edges: d.edges.clone(),
        polylines: d
            .edge_polylines
            .iter()
            .map(|l| l.iter().map(|p| [format_rational(&p.x), format_rational(&p.y)]).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&f).expect("serializable")
}

/// Reads a drawing; vertex coordinates come from `points`.
pub fn parse_drawing(text: &str, points: &ColoredPointSet) -> Result<PolylineDrawing> {
    let f: DrawingFile = serde_json::from_str(text).map_err(json_error)?;
    if let Some(v) = f.vertex_to_point.iter().position(|&p| p >= points.len()) {
        return Err(at(format!("vertex_to_point[{v}]"), "no such point"));
    }
    if f.polylines.len() != f.edges.len() {
        return Err(at("polylines".into(), "one polyline per edge expected"));
    }
    if let Some(i) = f
        .edges
        .iter()
        .position(|&(u, v)| u >= f.vertex_to_point.len() || v >= f.vertex_to_point.len())
    {
        return Err(at(format!("edges[{i}]"), "endpoint is not a vertex"));
    }
    let mut lines = Vec::with_capacity(f.polylines.len());
    for (e, l) in f.polylines.iter().enumerate() {
        let mut line = Vec::with_capacity(l.len());
        for (j, [x, y]) in l.iter().enumerate() {
            line.push(Point::new(
                rational_at(x, || format!("polylines[{e}][{j}][0]"))?,
                rational_at(y, || format!("polylines[{e}][{j}][1]"))?,
            ));
        }
        lines.push(line);
    }
    Ok(PolylineDrawing {
        vertex_points: f.vertex_to_point.iter().map(|&p| points.points()[p].point.clone()).collect(),
        vertex_to_point: f.vertex_to_point,
        edges: f.edges,
        edge_polylines: lines,
    })
}

pub fn read_drawing(path: impl AsRef<Path>, points: &ColoredPointSet) -> Result<PolylineDrawing> {
    parse_drawing(&std::fs::read_to_string(path)?, points)
}

pub fn write_drawing(path: impl AsRef<Path>, d: &PolylineDrawing) -> Result<()> {
    std::fs::write(path, drawing_to_json(d))?;
    Ok(())
}

pub fn embedding_to_json(be: &BookEmbedding) -> String {
    serde_json::to_string_pretty(be).expect("serializable")
}

pub fn write_embedding(path: impl AsRef<Path>, be: &BookEmbedding) -> Result<()> {
    std::fs::write(path, embedding_to_json(be))?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SvgStyle {
    /// Decimal places for coordinates in the output.
    pub decimals: usize,
    /// Width of the viewport in pixels; the height follows the aspect ratio.
    pub width: f64,
    pub margin: f64,
    /// Fill color per point color, cycled.
    pub palette: Vec<String>,
    pub stroke: String,
    pub stroke_width: f64,
    pub point_radius: f64,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            decimals: 2,
            width: 800.0,
            margin: 20.0,
            palette: ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e"].map(String::from).to_vec(),
            stroke: "#444444".into(),
            stroke_width: 1.0,
            point_radius: 4.0,
        }
    }
}

/// SVG picture of the drawing; coordinates are rounded for display only.
pub fn drawing_to_svg(d: &PolylineDrawing, points: &ColoredPointSet, style: &SvgStyle) -> String {
    let all: Vec<(f64, f64)> = d
        .edge_polylines
        .iter()
        .flatten()
        .chain(points.points().iter().map(|p| &p.point))
        .map(|p| (to_f64(&p.x), to_f64(&p.y)))
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &all {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if all.is_empty() {
        (x0, x1, y0, y1) = (0.0, 1.0, 0.0, 1.0);
    }
    let inner = style.width - 2.0 * style.margin;
    let scale = inner / (x1 - x0).max(y1 - y0).max(1e-9);
    let height = (y1 - y0) * scale + 2.0 * style.margin;
    let prec = style.decimals;
    let map = |x: f64, y: f64| {
        (
            style.margin + (x - x0) * scale,
            style.margin + (y1 - y) * scale,
        )
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.prec$}" height="{h:.prec$}" viewBox="0 0 {w:.prec$} {h:.prec$}">"#,
        w = style.width,
        h = height
    );
    for line in &d.edge_polylines {
        let pts: Vec<String> = line
            .iter()
            .map(|p| {
                let (x, y) = map(to_f64(&p.x), to_f64(&p.y));
                format!("{x:.prec$},{y:.prec$}")
            })
            .collect();
        let _ = writeln!(
            s,
            r#"  <polyline points="{}" fill="none" stroke="{}" stroke-width="{}"/>"#,
            pts.join(" "),
            style.stroke,
            style.stroke_width
        );
    }
    for p in points.points() {
        let (x, y) = map(to_f64(&p.point.x), to_f64(&p.point.y));
        let fill = &style.palette[p.color % style.palette.len().max(1)];
        let _ = writeln!(
            s,
            r#"  <circle cx="{x:.prec$}" cy="{y:.prec$}" r="{}" fill="{fill}"/>"#,
            style.point_radius
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn export_svg(path: impl AsRef<Path>, d: &PolylineDrawing, points: &ColoredPointSet, style: &SvgStyle) -> Result<()> {
    std::fs::write(path, drawing_to_svg(d, points, style))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"{"k": 2, "graph": {"n": 2, "colors": [0, 1], "edges": [[0, 1]]},
        "points": [{"x": "0", "y": "1/3", "color": 1}, {"x": "2.5", "y": "-1", "color": 0}]}"#;

    #[test]
    fn instance_round_trip() {
        let inst = parse_instance(SMALL).unwrap();
        assert_eq!(parse_instance(&instance_to_json(&inst)).unwrap(), inst);
    }

    #[test]
    fn bad_color_is_located() {
        let bad = SMALL.replace(r#""colors": [0, 1]"#, r#""colors": [0, 2]"#);
        match parse_instance(&bad) {
            Err(Error::Parse { location, .. }) => assert_eq!(location, "graph.colors[1]"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_error_has_line_and_column() {
        match parse_instance("{\"k\": 2,\n \"graph\": }") {
            Err(Error::Parse { location, .. }) => assert!(location.starts_with("line 2")),
            other => panic!("{other:?}"),
        }
    }
}
