//! Structured and random instance generators, file formats and SVG export.

mod io;

pub use io::{
    drawing_to_json, drawing_to_svg, embedding_to_json, export_svg, instance_to_json, parse_drawing, parse_instance,
    read_drawing, read_instance, write_drawing, write_embedding, write_instance, Instance, SvgStyle,
};

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{int, Point, Rational};
use crate::model::{Color, ColoredGraph, ColoredPoint, ColoredPointSet};

/// `3n` points on a concave parabola, colored `0, 1, 2` repeatedly by x.
#[derive(Debug, Clone)]
pub struct AlternatingPointSet {
    pub n: usize,
    pub radius: Rational,
    pub points: ColoredPointSet,
}

/// Cycle of `n` vertices of each color in color blocks, a hub per color joined
/// to every vertex of its color, and a triangle on the hubs.
#[derive(Debug, Clone)]
pub struct ThreeFan {
    pub n: usize,
    pub graph: ColoredGraph,
    pub hubs: [usize; 3],
}

/// Three monochromatic stars of `n` vertices, star `i` colored `i`.
#[derive(Debug, Clone)]
pub struct ThreeSky {
    pub n: usize,
    pub graph: ColoredGraph,
    pub roots: [usize; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PointMode {
    /// Distinct x, no three points collinear.
    #[default]
    General,
    /// Points on a concave arc.
    Convex,
}

/// Points `(i - c, -(i - c)^2 / radius)` for `i < 3n`, `c` the middle index.
pub fn gen_alternating_points(n: usize, radius: &Rational) -> Result<AlternatingPointSet> {
    if n == 0 {
        return Err(Error::Precondition("alternating set needs n >= 1".into()));
    }
    if *radius <= int(0) {
        return Err(Error::Precondition("radius must be positive".into()));
    }
    let m = 3 * n;
    let center = Rational::new((m as i64 - 1).into(), 2.into());
    let points = (0..m)
        .map(|i| {
            let x = int(i as i64) - &center;
            let y = -(&x * &x) / radius;
            ColoredPoint {
                point: Point::new(x, y),
                color: i % 3,
            }
        })
        .collect();
    Ok(AlternatingPointSet {
        n,
        radius: radius.clone(),
        points: ColoredPointSet::new(3, points)?,
    })
}

pub fn gen_three_fan(n: usize) -> Result<ThreeFan> {
    if n < 2 {
        return Err(Error::Precondition("3-fan needs n >= 2".into()));
    }
    let m = 3 * n;
    let colors: Vec<Color> = (0..m).map(|v| v / n).collect();
    let mut edges: Vec<(usize, usize)> = (0..m).map(|v| (v, (v + 1) % m)).collect();
    let hubs = [0, n, 2 * n];
    for (c, &h) in hubs.iter().enumerate() {
        // The hub's cycle neighbour of the same color is already adjacent.
        edges.extend((c * n + 2..(c + 1) * n).map(|v| (h, v)));
    }
    edges.extend([(hubs[0], hubs[1]), (hubs[1], hubs[2]), (hubs[2], hubs[0])]);
    Ok(ThreeFan {
        n,
        graph: ColoredGraph::new(3, colors, edges)?,
        hubs,
    })
}

pub fn gen_three_sky(n: usize) -> Result<ThreeSky> {
    if n < 2 {
        return Err(Error::Precondition("3-sky needs n >= 2".into()));
    }
    let colors: Vec<Color> = (0..3 * n).map(|v| v / n).collect();
    let roots = [0, n, 2 * n];
    let edges = roots
        .iter()
        .flat_map(|&r| (r + 1..r + n).map(move |v| (r, v)))
        .collect();
    Ok(ThreeSky {
        n,
        graph: ColoredGraph::new(3, colors, edges)?,
        roots,
    })
}

/// Path `0 - 1 - ... - n-1` with uniformly random colors below `k`.
pub fn gen_random_colored_path(n: usize, k: usize, seed: u64) -> Result<ColoredGraph> {
    if n == 0 || !(1..=4).contains(&k) {
        return Err(Error::Precondition("need n >= 1 and k in 1..=4".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colors = (0..n).map(|_| rng.gen_range(0..k)).collect();
    ColoredGraph::new(k, colors, (1..n).map(|i| (i - 1, i)).collect())
}

/// Caterpillar with `n` vertices and at most 3 colors whose degree-1
/// vertices share one color.
pub fn gen_random_caterpillar_mono_leaves(n: usize, seed: u64) -> Result<ColoredGraph> {
    if n == 0 {
        return Err(Error::Precondition("need n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let leaf_color = rng.gen_range(0..3);
    let spine = rng.gen_range(1..=n.div_ceil(2));
    let mut colors: Vec<Color> = (0..spine).map(|_| rng.gen_range(0..3)).collect();
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    for v in spine..n {
        colors.push(leaf_color);
        edges.push((rng.gen_range(0..spine), v));
    }
    let mut degree = vec![0; n];
    for &(a, b) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    for v in 0..n {
        if degree[v] == 1 {
            colors[v] = leaf_color;
        }
    }
    ColoredGraph::new(3, colors, edges)
}

/// Path whose first part uses two colors and the rest the other two.
pub fn gen_random_split_path(n: usize, seed: u64) -> Result<ColoredGraph> {
    if n < 2 {
        return Err(Error::Precondition("need n >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut palette = [0, 1, 2, 3];
    palette.shuffle(&mut rng);
    let h = rng.gen_range(1..n);
    let colors = (0..n)
        .map(|i| palette[rng.gen_range(0..2) + if i < h { 0 } else { 2 }])
        .collect();
    ColoredGraph::new(4, colors, (1..n).map(|i| (i - 1, i)).collect())
}

/// Two stars with between 1 and `max_size` vertices each, colors below `k`.
pub fn gen_random_two_stars(k: usize, max_size: usize, seed: u64) -> Result<ColoredGraph> {
    if k == 0 || max_size == 0 {
        return Err(Error::Precondition("need k >= 1 and max_size >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = rng.gen_range(1..=max_size);
    let b = rng.gen_range(1..=max_size);
    let colors = (0..a + b).map(|_| rng.gen_range(0..k)).collect();
    let mut edges: Vec<(usize, usize)> = (1..a).map(|v| (0, v)).collect();
    edges.extend((a + 1..a + b).map(|v| (a, v)));
    ColoredGraph::new(k, colors, edges)
}

/// Direction from `a` to `b` reduced to lowest terms (`b.0 > a.0`).
fn direction(a: (i128, i128), b: (i128, i128)) -> (i128, i128) {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let g = num_integer::gcd(dx, dy);
    (dx / g, dy / g)
}

/// Integer points with distinct x colored by a seeded shuffle of the
/// graph's colors.
pub fn gen_random_compatible_points(graph: &ColoredGraph, seed: u64, mode: PointMode) -> Result<ColoredPointSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colors = graph.colors().to_vec();
    colors.shuffle(&mut rng);
    let n = colors.len() as i128;
    let mut x: i128 = 0;
    let mut placed: Vec<(i128, i128)> = Vec::with_capacity(colors.len());
    // Directions from each placed point to the points placed after it.
    let mut dirs: Vec<HashSet<(i128, i128)>> = Vec::with_capacity(colors.len());
    for _ in 0..colors.len() {
        x += rng.gen_range(1..=3);
        let p = match mode {
            PointMode::Convex => (x, -x * x),
            PointMode::General => loop {
                let y = rng.gen_range(-4 * n * n - 4..=4 * n * n + 4);
                let cand = (x, y);
                let bad = placed
                    .iter()
                    .zip(&dirs)
                    .any(|(&a, d)| d.contains(&direction(a, cand)));
                if !bad {
                    break cand;
                }
            },
        };
        for (&a, d) in placed.iter().zip(dirs.iter_mut()) {
            d.insert(direction(a, p));
        }
        placed.push(p);
        dirs.push(HashSet::new());
    }
    let points = placed
        .iter()
        .zip(colors)
        .map(|(&(x, y), color)| ColoredPoint {
            point: Point::new(Rational::from_integer(x.into()), Rational::from_integer(y.into())),
            color,
        })
        .collect();
    ColoredPointSet::new(graph.k(), points)
}
