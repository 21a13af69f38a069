//! Outer-string representation of visibility regions.

use wskit::geometry::{int, ratio, Point, Polygon};
use wskit::region_graph::regions_intersect_general;
use wskit::string_model::{boundary_contacts, build_string_model, strings_intersect};
use wskit::visibility::visibility_region;

fn main() -> wskit::Result<()> {
    let p = Polygon::from_ints(&[(-1, -3), (2, -3), (3, 0), (4, -3), (6, -3), (6, 3), (3, 3), (2, 0), (1, 3), (-1, 3)])?;
    let f = vec![Point::from_ints(0, 0), Point::from_ints(5, 0), Point::new(int(1), ratio(5, 2)), Point::from_ints(6, 0)];
    let m = build_string_model(&p, &f)?;
    println!("epsilon {} delta {}", m.epsilon, m.delta);
    for (i, s) in m.strings.iter().enumerate() {
        println!("string {i}: {} points, {} boundary contact", s.len(), boundary_contacts(&m, i));
    }
    let regions: Vec<_> = f.iter().map(|q| visibility_region(&p, q)).collect::<wskit::Result<_>>()?;
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let s = strings_intersect(&m, i, j)?;
            assert_eq!(s, regions_intersect_general(&regions[i], &regions[j]));
            println!("{i} {j}: {}", if s { "cross" } else { "apart" });
        }
    }
    Ok(())
}
