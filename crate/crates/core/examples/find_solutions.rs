//! Prints a few Hamiltonians satisfying the master equation for a shift.
//!
//! `cargo run --example find_solutions -- -4 1,1,1`

use darboux::darboux::{random_solution, DarbouxLayout};
use darboux::io::darboux_spec_to_json;
use darboux::darboux::DarbouxSpec;
use darboux::Q;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut args = std::env::args().skip(1);
    let k: i32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(-3);
    let m: Vec<usize> = args
        .next()
        .map(|s| s.split(',').filter_map(|x| x.parse().ok()).collect())
        .unwrap_or_else(|| vec![1, 2]);
    let layout = match DarbouxLayout::new(k, m) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..5 {
        let h: darboux::graded::Element<Q> = random_solution(&layout, &mut rng, 2000);
        println!("{}", darboux_spec_to_json(&DarbouxSpec::new(layout.clone(), h)));
    }
}
