//! Visibility-intersection graph of a point set and its maximum independent set.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wskit::gen::{random_monotone_with_reflex, random_point_in};
use wskit::mis::{mis_chain, mis_exact};
use wskit::oracle::exhaustive_mis;
use wskit::region_graph::build_vig;
use wskit::solve::solve_disws;

fn main() -> wskit::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let p = random_monotone_with_reflex(&mut rng, 14, 4);
    let pts: Vec<_> = (0..16).map(|_| random_point_in(&mut rng, &p)).collect();

    let vig = build_vig(&p, &pts)?;
    println!("{} points, {} overlapping pairs", vig.len(), vig.edge_count());
    let chain = mis_chain(&vig)?;
    let exact = mis_exact(&vig)?;
    println!("chain dp {} / branch and bound {} / brute force {}", chain.size, exact.size, exhaustive_mis(&vig)?);

    let sol = solve_disws(&p, &pts)?;
    for q in &sol.chosen {
        println!("  witness {q}");
    }
    Ok(())
}
