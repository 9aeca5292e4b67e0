use colored_embed::bookembed::{validate_book_embedding, Page};
use colored_embed::model::ColoredSequence;
use colored_embed::twocolor::{embed_two_colored_path, embed_two_colored_path_reflected};
use colored_embed::verify::{check_lemma5_properties, check_lemma5_properties_on};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> (Vec<usize>, ColoredSequence) {
    let colors: Vec<usize> = (0..n).map(|_| rng.gen_range(0..2)).collect();
    let mut sigma = colors.clone();
    sigma.shuffle(rng);
    (colors, ColoredSequence(sigma))
}

#[test]
fn exhaustive_small_pairs_satisfy_all_properties() {
    for n in 1..=8usize {
        for pmask in 0..(1u32 << n) {
            let colors: Vec<usize> = (0..n).map(|i| ((pmask >> i) & 1) as usize).collect();
            for smask in 0..(1u32 << n) {
                let sigma: Vec<usize> = (0..n).map(|i| ((smask >> i) & 1) as usize).collect();
                if sigma.iter().sum::<usize>() != colors.iter().sum::<usize>() {
                    continue;
                }
                let sigma = ColoredSequence(sigma);
                let be = embed_two_colored_path(&colors, &sigma).unwrap();
                let v = validate_book_embedding(&be, Some(&sigma));
                assert!(v.pass(), "{colors:?} {sigma:?}\n{v}\n{be:?}");
                let p = check_lemma5_properties(&be).unwrap();
                assert!(p.pass(), "{colors:?} {sigma:?}\n{p}\n{be:?}");
            }
        }
    }
}

#[test]
fn random_pairs_satisfy_all_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..300 {
        let n = rng.gen_range(1..=60);
        let (colors, sigma) = random_pair(&mut rng, n);
        let be = embed_two_colored_path(&colors, &sigma).unwrap();
        assert!(validate_book_embedding(&be, Some(&sigma)).pass());
        assert!(check_lemma5_properties(&be).unwrap().pass());
        let rb = embed_two_colored_path_reflected(&colors, &sigma).unwrap();
        assert!(validate_book_embedding(&rb, Some(&sigma)).pass());
        assert!(check_lemma5_properties_on(&rb, Page::Top).unwrap().pass());
    }
}
