//! Visibility region of a point in an L-shaped room, checked against the quadratic reference.

use wskit::geometry::{Point, Polygon};
use wskit::oracle::{naive_visibility, same_region};
use wskit::visibility::visibility_region;

fn main() -> wskit::Result<()> {
    let p = Polygon::from_ints(&[(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)])?;
    for q in [Point::from_ints(3, 1), Point::from_ints(1, 1), Point::from_ints(4, 0)] {
        let v = visibility_region(&p, &q)?;
        let corners: Vec<String> = v.region.vertices().iter().map(|c| c.to_string()).collect();
        println!("from {q}: {}", corners.join(" "));
        for (i, base, end) in v.windows() {
            println!("  window on edge {i}: {base} -> {end}");
        }
        assert!(same_region(&v, &naive_visibility(&p, &q)?));
    }
    Ok(())
}
