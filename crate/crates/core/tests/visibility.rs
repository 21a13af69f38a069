use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wskit::gen::{random_grazing_point, random_monotone_polygon, random_point_in, random_simple_polygon};
use wskit::geometry::{Point, Polygon};
use wskit::oracle::{naive_visibility, same_region};
use wskit::visibility::visibility_region;

fn check(p: &Polygon, q: &Point) {
    let fast = visibility_region(p, q).unwrap();
    let slow = naive_visibility(p, q).unwrap();
    assert!(
        same_region(&fast, &slow),
        "polygon {:?}\npoint {:?}\nsweep {:?} arms {:?}\nnaive {:?} arms {:?}",
        p.vertices(),
        q,
        fast.region.vertices(),
        fast.arms,
        slow.region.vertices(),
        slow.arms
    );
}

#[test]
fn sweep_matches_naive_on_simple_polygons() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(3..=14);
        let p = random_simple_polygon(&mut rng, n, 24);
        for _ in 0..3 {
            let q = random_point_in(&mut rng, &p);
            check(&p, &q);
        }
    }
}

#[test]
fn sweep_matches_naive_on_monotone_polygons() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let n = rng.gen_range(4..=14);
        let p = random_monotone_polygon(&mut rng, n);
        for _ in 0..3 {
            let q = random_point_in(&mut rng, &p);
            check(&p, &q);
        }
    }
}

#[test]
fn sweep_matches_naive_on_grazing_sources() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut arms = 0;
    for _ in 0..300 {
        let n = rng.gen_range(4..=14);
        let p = random_simple_polygon(&mut rng, n, 24);
        for _ in 0..3 {
            let q = random_grazing_point(&mut rng, &p);
            check(&p, &q);
            arms += visibility_region(&p, &q).unwrap().arms.len();
        }
    }
    assert!(arms > 10, "{arms} arms");
}

#[test]
fn every_vertex_as_source() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..60 {
        let n = rng.gen_range(4..=12);
        let p = random_simple_polygon(&mut rng, n, 16);
        for v in p.vertices() {
            check(&p, v);
        }
    }
}

#[test]
fn region_membership_matches_segment_probes() {
    use wskit::gen::random_interior_point;
    use wskit::geometry::segment_inside;
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut arms = 0;
    for _ in 0..150 {
        let n = rng.gen_range(4..=12);
        let p = random_simple_polygon(&mut rng, n, 16);
        let q = random_point_in(&mut rng, &p);
        let v = visibility_region(&p, &q).unwrap();
        arms += v.arms.len();
        for _ in 0..40 {
            let z = random_interior_point(&mut rng, &p);
            assert_eq!(v.contains(&z), segment_inside(&p, &q, &z), "{:?} {:?} {:?}", p.vertices(), q, z);
        }
        for z in p.vertices() {
            assert_eq!(v.contains(z), segment_inside(&p, &q, z), "{:?} {:?} {:?}", p.vertices(), q, z);
        }
        for arm in &v.arms {
            let mid = arm.midpoint();
            assert!(segment_inside(&p, &q, &mid));
        }
    }
    let _ = arms;
}

#[test]
fn staggered_teeth_produce_an_arm() {
    let p = Polygon::from_ints(&[(-1, -3), (2, -3), (3, 0), (4, -3), (6, -3), (6, 3), (3, 3), (2, 0), (1, 3), (-1, 3)])
        .unwrap();
    let src = Point::from_ints(0, 0);
    let v = visibility_region(&p, &src).unwrap();
    assert_eq!(v.arms.len(), 1);
    assert_eq!(v.arms[0].a, Point::from_ints(3, 0));
    assert_eq!(v.arms[0].b, Point::from_ints(6, 0));
    assert!(v.region.vertices().contains(&Point::from_ints(2, 0)));
    check(&p, &src);
    check(&p, &Point::from_ints(6, 0));
}
