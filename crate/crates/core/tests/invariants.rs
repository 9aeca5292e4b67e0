use colored_embed::bookembed::{validate_book_embedding, SpineItem};
use colored_embed::exact::{Point, Rational};
use colored_embed::instances::{gen_random_caterpillar_mono_leaves, gen_random_colored_path, gen_random_compatible_points, PointMode};
use colored_embed::model::{
    compatible, is_one_sided_convex, seq_of, sequence_compatible, ColoredGraph, ColoredPoint, ColoredPointSet,
};
use colored_embed::multicolor::{embed_with, Engine};
use colored_embed::realizer::realize;
use colored_embed::verify::{check_planar, exhaustive_embedding_search, SearchConfig};
use proptest::prelude::*;

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Points with distinct x; `ys` supplies the heights and `colors` the colors.
fn point_set(xs: &[i64], ys: &[i64], colors: &[usize]) -> ColoredPointSet {
    let pts = xs
        .iter()
        .zip(ys)
        .zip(colors)
        .map(|((&x, &y), &c)| ColoredPoint { point: Point::new(int(x), int(y)), color: c })
        .collect();
    ColoredPointSet::new(3, pts).unwrap()
}

fn distinct_xs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(-50i64..50, 1..12).prop_map(|s| s.into_iter().collect())
}

/// A point set that is either random or on a concave parabola.
fn arb_points() -> impl Strategy<Value = ColoredPointSet> {
    distinct_xs().prop_flat_map(|xs| {
        let n = xs.len();
        (
            Just(xs),
            prop::collection::vec(-50i64..50, n),
            prop::collection::vec(0usize..3, n),
            any::<bool>(),
        )
            .prop_map(|(xs, ys, cs, arc)| {
                let ys: Vec<i64> = if arc { xs.iter().map(|x| -x * x).collect() } else { ys };
                point_set(&xs, &ys, &cs)
            })
    })
}

fn path_graph(colors: Vec<usize>) -> ColoredGraph {
    let n = colors.len();
    ColoredGraph::new(3, colors, (1..n).map(|i| (i - 1, i)).collect()).unwrap()
}

proptest! {
    #[test]
    fn sequence_ignores_point_order(s in arb_points(), seed in any::<u64>()) {
        let mut pts = s.points().to_vec();
        let n = pts.len();
        for i in (1..n).rev() {
            pts.swap(i, (seed as usize).wrapping_mul(i + 7) % (i + 1));
        }
        let shuffled = ColoredPointSet::new(3, pts).unwrap();
        prop_assert_eq!(seq_of(&s), seq_of(&shuffled));
    }

    #[test]
    fn compatibility_agrees_with_sequence(s in arb_points(), colors in prop::collection::vec(0usize..3, 1..12)) {
        let g = path_graph(colors);
        prop_assert_eq!(compatible(&g, &s), sequence_compatible(&g, &seq_of(&s)));
    }

    #[test]
    fn convexity_survives_translation_and_scaling(
        s in arb_points(), dx in -100i64..100, dy in -100i64..100, num in 1i64..20, den in 1i64..20,
    ) {
        let f = Rational::new(num.into(), den.into());
        let moved: Vec<ColoredPoint> = s
            .points()
            .iter()
            .map(|p| ColoredPoint {
                point: Point::new(&p.point.x * &f + int(dx), &p.point.y * &f + int(dy)),
                color: p.color,
            })
            .collect();
        let moved = ColoredPointSet::new(3, moved).unwrap();
        prop_assert_eq!(is_one_sided_convex(&s), is_one_sided_convex(&moved));
    }

    #[test]
    fn reflection_is_an_involution(n in 2usize..40, seed in any::<u64>()) {
        let g = gen_random_colored_path(n, 3, seed).unwrap();
        let s = gen_random_compatible_points(&g, seed ^ 1, PointMode::General).unwrap();
        let sigma = seq_of(&s);
        let (_, be) = embed_with(Engine::Auto, &g, &sigma).unwrap();
        let r = be.reflect();
        prop_assert!(validate_book_embedding(&r, Some(&sigma)).pass());
        prop_assert_eq!(r.reflect(), be);
    }

    #[test]
    fn inserted_free_items_remove_cleanly(n in 2usize..30, seed in any::<u64>(), gaps in prop::collection::vec(0usize..80, 1..6)) {
        let g = gen_random_colored_path(n, 3, seed).unwrap();
        let s = gen_random_compatible_points(&g, seed ^ 2, PointMode::General).unwrap();
        let (_, be) = embed_with(Engine::Auto, &g, &seq_of(&s)).unwrap();
        let marks: Vec<(usize, SpineItem)> = gaps
            .iter()
            .enumerate()
            .map(|(i, &gap)| (gap % (be.len() + 1), SpineItem::Crossing { edge: usize::MAX, ordinal: i }))
            .collect();
        let grown = be.insert_items(&marks);
        prop_assert_eq!(grown.len(), be.len() + marks.len());
        let at: Vec<usize> = (0..grown.len())
            .filter(|&i| matches!(grown.spine[i], SpineItem::Crossing { edge: usize::MAX, .. }))
            .collect();
        prop_assert_eq!(grown.remove_items(&at), Some(be));
    }

    #[test]
    fn searched_embeddings_realize_planar(n in 2usize..7, seed in any::<u64>(), caterpillar in any::<bool>(), convex in any::<bool>()) {
        let g = if caterpillar {
            gen_random_caterpillar_mono_leaves(n, seed).unwrap()
        } else {
            gen_random_colored_path(n, 3, seed).unwrap()
        };
        let mode = if convex { PointMode::Convex } else { PointMode::General };
        let s = gen_random_compatible_points(&g, seed ^ 3, mode).unwrap();
        let sigma = seq_of(&s);
        let out = exhaustive_embedding_search(&g, &sigma, &SearchConfig::default()).unwrap();
        let be = out.embedding.expect("small instances embed with two crossings per edge");
        prop_assert!(validate_book_embedding(&be, Some(&sigma)).pass());
        let d = realize(&be, &s).unwrap();
        let report = check_planar(&d);
        prop_assert!(report.pass(), "{}", report);
    }
}
