//! Canonical forms: a label-independent fingerprint per tournament.
//!
//! The canonical key is the lexicographically smallest upper-triangle
//! code over all relabelings, so two tournaments are isomorphic exactly
//! when their keys match.
//!
//! Run with: cargo run --release --example canonical

use rand::SeedableRng;
use teqset::{canonical_key, canonicalize, is_isomorphic, Tournament};

fn main() {
    let t = Tournament::rotational(5);
    println!("rotational on 5:        {}", t.code());
    println!("canonical form:         {}", canonicalize(&t).code());

    // Scramble the labels; the canonical key does not move.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let mut scrambles = Vec::new();
    for _ in 0..3 {
        let order = random_order(5, &mut rng);
        scrambles.push(t.relabeled(&order));
    }
    for s in &scrambles {
        println!(
            "relabeled {} -> key {}  isomorphic: {}",
            s.code(),
            canonical_key(s).code(),
            is_isomorphic(s, &t)
        );
    }

    // A different 5-tournament gets a different key.
    let other = Tournament::transitive(5);
    println!(
        "transitive on 5 -> key {}  isomorphic to rotational: {}",
        canonical_key(&other).code(),
        is_isomorphic(&other, &t)
    );
}

fn random_order(n: usize, rng: &mut impl rand::Rng) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    order
}
