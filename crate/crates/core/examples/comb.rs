//! Comb polygons with g notches and their pairwise-disjoint pocket witnesses.

use wskit::geometry::{is_x_monotone, reflex_vertices};
use wskit::io::{serialize_instance, Instance};
use wskit::oracle::{comb_generator, comb_witnesses};
use wskit::solve::verify_witnesses;

fn main() -> wskit::Result<()> {
    for seed in 0..3 {
        let p = comb_generator(3, seed);
        let w = comb_witnesses(3);
        verify_witnesses(&p, &w)?;
        println!("seed {seed}: n = {}, r = {}, monotone {}", p.len(), reflex_vertices(&p).len(), is_x_monotone(&p));
    }
    let inst = Instance { polygon: comb_generator(1, 0), points: Some(comb_witnesses(1)) };
    println!("{}", serialize_instance(&inst));
    Ok(())
}
