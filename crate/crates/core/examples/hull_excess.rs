//! Scaling of the hull/shape perimeter excess with sample size on the corona.

use alphashape_core::{rng_from_seed, stream_seed, AlphaShape, Domain};

fn main() {
    let domain = Domain::annulus(0.25, 1.0).unwrap();
    for n in [1_000usize, 10_000, 100_000, 1_000_000] {
        let mut mean_excess = 0.0;
        let mut mean_max = 0.0;
        let reps = 10;
        for seed in 0..reps {
            let mut rng = rng_from_seed(stream_seed(7, &[n as u64, seed]));
            let shape = AlphaShape::build(domain.sample_uniform(n, &mut rng), 0.2).unwrap();
            mean_excess += shape.hull_perimeter() / shape.shape_perimeter() - 1.0;
            mean_max += shape.max_edge_length();
        }
        println!(
            "n={n} excess={:.3e} max_edge={:.4}",
            mean_excess / reps as f64,
            mean_max / reps as f64
        );
    }
}
