use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graded::{Point, SignatureRef};
use crate::scalar::Field;

/// Largest absolute value of a sampled coordinate.
pub const COORDINATE_BOUND: i64 = 5;

/// `count` points with integer coordinates in `[-5, 5]` (nonzero for
/// invertible generators), reproducible from `seed`.
pub fn sample_points<F: Field>(sig: &SignatureRef, count: usize, seed: u64) -> Vec<Point<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut p = Point::origin(sig);
            for g in sig.gens().filter(|&g| sig.degree(g) == 0) {
                let v = loop {
                    let v = rng.gen_range(-COORDINATE_BOUND..=COORDINATE_BOUND);
                    if v != 0 || !sig.is_invertible(g) {
                        break v;
                    }
                };
                p = p.with(sig.name(g), F::from_i64(v));
            }
            p
        })
        .collect()
}
