//! Candidate witness locations generated round by round.

use std::collections::BTreeMap;

use wskit::discretizer::{q_approx, r_mid, witgen, Provenance};
use wskit::geometry::reflex_vertices;
use wskit::oracle::comb_generator;

fn main() -> wskit::Result<()> {
    let p = comb_generator(2, 0);
    let (n, r) = (p.len(), reflex_vertices(&p).len());
    println!("n = {n}, r = {r}, |R_mid| = {}", r_mid(&p).len());
    for k in 1..=3 {
        let c = witgen(&p, k)?;
        let mut kinds: BTreeMap<&str, usize> = BTreeMap::new();
        for prov in c.provenance.values() {
            let kind = match prov {
                Provenance::Vertex => "vertex",
                Provenance::RMid => "r_mid",
                Provenance::HPoint => "h",
                Provenance::ChordHit(_) => "chord",
                Provenance::Midpoint(_) => "midpoint",
            };
            *kinds.entry(kind).or_default() += 1;
        }
        println!("C_{k} = Q_{}: {} points (bound {}) {kinds:?}", 2 * k, c.len(), n * (2 + r).pow(2 * k as u32));
    }
    for i in [1, 2, 4] {
        println!("approximation set after {i} rounds: {} points", q_approx(&p, i)?.len());
    }
    Ok(())
}
