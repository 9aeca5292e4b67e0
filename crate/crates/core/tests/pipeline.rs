use std::time::Instant;

use colored_embed::instances::{gen_random_colored_path, gen_random_compatible_points, PointMode};
use colored_embed::model::seq_of;
use colored_embed::multicolor::{embed_with, Engine};
use colored_embed::realizer::realize;
use colored_embed::verify::{check_planar, curve_complexity};

#[test]
fn long_path_end_to_end() {
    for mode in [PointMode::General, PointMode::Convex] {
        let g = gen_random_colored_path(200, 3, 1).unwrap();
        let s = gen_random_compatible_points(&g, 2, mode).unwrap();
        let t = Instant::now();
        let (_, be) = embed_with(Engine::Auto, &g, &seq_of(&s)).unwrap();
        let t1 = t.elapsed();
        let d = realize(&be, &s).unwrap();
        let t2 = t.elapsed();
        assert!(check_planar(&d).pass());
        assert!(curve_complexity(&d) <= 5);
        eprintln!("{mode:?}: embed {t1:?}, realize {t2:?}, total {:?}", t.elapsed());
    }
}
