//! Shortest paths and the anchor/image profile that drives the monotone disjointness test.

use wskit::geometry::{int, ratio, Point, Polygon};
use wskit::monotone::{shortest_path, triangulate_monotone, ProfileContext};

fn main() -> wskit::Result<()> {
    let h = ratio(1, 2);
    let p = Polygon::new(vec![
        Point::from_ints(0, 0),
        Point::from_ints(12, 0),
        Point::from_ints(12, 3),
        Point::from_ints(9, 3),
        Point::new(int(8), h.clone()),
        Point::from_ints(7, 3),
        Point::from_ints(5, 3),
        Point::new(int(4), h),
        Point::from_ints(3, 3),
        Point::from_ints(0, 3),
    ])?;
    println!("{} triangles", triangulate_monotone(&p)?.len());

    let ctx = ProfileContext::new(&p)?;
    let a = Point::new(int(1), ratio(5, 2));
    let b = Point::new(int(11), ratio(5, 2));
    let path = shortest_path(&p, &a, &b)?;
    println!("geodesic: {}", path.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(" -> "));

    for q in [&a, &b] {
        let pr = ctx.profile(q)?;
        println!("{q}: x-extent of region [{}, {}]", pr.x_min_vis, pr.x_max_vis);
        if let Some(s) = &pr.r_bdry {
            println!("  right boundary chord {} - {}", s.a, s.b);
        }
        if let Some(s) = &pr.l_bdry {
            println!("  left boundary chord {} - {}", s.a, s.b);
        }
    }
    Ok(())
}
