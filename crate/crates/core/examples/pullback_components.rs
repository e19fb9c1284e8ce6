//! Components of a pullback of groupoids from double cosets, checked against
//! the materialized pullback.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use equisep::groupoid_calc::{brute_force_pullback, pullback_pi0, random_cospan};

fn main() -> equisep::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for round in 0..5 {
        let (f, g) = random_cospan(&mut rng, 3);
        let comps = pullback_pi0(&f, &g)?;
        let brute = brute_force_pullback(&f, &g)?;
        println!(
            "cospan {round}: {} components ({} by brute force)",
            comps.len(),
            brute.components.len()
        );
        for c in &comps {
            println!(
                "    over ({}, {}): eta={} {}/{} |Aut|={}",
                c.base_labels.0,
                c.base_labels.1,
                c.eta,
                c.fiber_index + 1,
                c.fiber_size,
                c.aut_order
            );
        }
    }
    Ok(())
}
