//! Approximate witness sets for a few accuracy settings.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wskit::gen::random_monotone_with_reflex;
use wskit::geometry::ratio;
use wskit::solve::{approx_plan, solve_ws_approx};

fn main() -> wskit::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let p = random_monotone_with_reflex(&mut rng, 12, 3);
    for (n, d) in [(1, 1), (1, 2), (1, 3)] {
        let eps = ratio(n, d);
        let (iterations, _) = approx_plan(&eps)?;
        let ap = solve_ws_approx(&p, &eps)?;
        println!(
            "eps {eps}: Q_{iterations} has {} points, size {} with guarantee {}",
            ap.candidates, ap.solution.size, ap.guarantee
        );
    }
    Ok(())
}
