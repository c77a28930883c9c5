//! Fixtures shared by the benchmarks.

use alphashape_core::{rng_from_seed, Domain, Point2};

pub fn corona() -> Domain {
    Domain::annulus(0.25, 1.0).expect("valid annulus")
}

pub fn corona_sample(n: usize, seed: u64) -> Vec<Point2> {
    corona().sample_uniform(n, &mut rng_from_seed(seed))
}
