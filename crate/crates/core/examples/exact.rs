//! Maximum witness sets of comb polygons, with the proof of optimality.

use wskit::oracle::{comb_generator, dense_ws_lower_bound};
use wskit::solve::{solve_ws_exact, Optimality};

fn main() -> wskit::Result<()> {
    for g in 1..=3 {
        let p = comb_generator(g, 0);
        let ex = solve_ws_exact(&p, None)?;
        let proof = match &ex.proof {
            Optimality::StoppingRule { k } => format!("stopping rule at k = {k}"),
            Optimality::GuardCover { guards } => format!("{} guards cover the polygon", guards.len()),
        };
        println!("comb {g}: ws = {} ({proof}), dense lower bound {}", ex.solution.size, dense_ws_lower_bound(&p, 16)?);
        for r in &ex.rounds {
            println!("  k = {}: {} candidates, best {}", r.k, r.candidates, r.size);
        }
    }
    Ok(())
}
