#![allow(dead_code)]

use ordlines_core::constructions::{gen_coplanar_heavy, gen_grid2d, gen_near_coplanar, gen_random, gen_two_skew};
use ordlines_core::oracle::boroczky_square;
use ordlines_core::{PointSet, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small instances of every rational generator.
pub fn small_catalogue() -> Vec<PointSet<Rational>> {
    vec![
        gen_two_skew(3).unwrap(),
        gen_two_skew(5).unwrap(),
        gen_near_coplanar(8, 1, 1).unwrap(),
        gen_near_coplanar(10, 2, 2).unwrap(),
        gen_coplanar_heavy(10, 1, 2, 3).unwrap(),
        gen_random(10, 3, 2, 4).unwrap(),
        gen_random(10, 2, 2, 5).unwrap(),
        gen_grid2d(3, 3).unwrap(),
        gen_grid2d(2, 4).unwrap(),
        boroczky_square(),
    ]
}
