use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wskit::gen::{random_grazing_point, random_point_in, random_simple_polygon};
use wskit::geometry::{int, ratio, Point, Polygon};
use wskit::region_graph::regions_intersect_general;
use wskit::string_model::{boundary_contacts, build_string_model, strings_intersect};
use wskit::visibility::visibility_region;
use wskit::Error;

fn check(p: &Polygon, f: &[Point]) {
    let m = build_string_model(p, f).unwrap_or_else(|e| panic!("{e} {:?} {:?}", p, f));
    let regions: Vec<_> = f.iter().map(|q| visibility_region(p, q).unwrap()).collect();
    for i in 0..f.len() {
        assert_eq!(boundary_contacts(&m, i), 1, "{:?} {:?} string {i}", p, f);
        for j in i + 1..f.len() {
            let want = regions_intersect_general(&regions[i], &regions[j]);
            let got = strings_intersect(&m, i, j).unwrap();
            assert_eq!(got, want, "{:?} {:?} pair {i},{j}", p, f);
        }
    }
}

#[test]
fn strings_mirror_regions() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for _ in 0..300 {
        let n = rng.gen_range(3..=12);
        let p = random_simple_polygon(&mut rng, n, 20);
        let k = rng.gen_range(1..=8);
        let f: Vec<Point> = (0..k)
            .map(|_| if rng.gen_bool(0.5) { random_grazing_point(&mut rng, &p) } else { random_point_in(&mut rng, &p) })
            .collect();
        check(&p, &f);
    }
}

#[test]
fn small_cases() {
    let sq = Polygon::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 4)]).unwrap();
    let m = build_string_model(&sq, &[Point::from_ints(1, 1), Point::from_ints(3, 3)]).unwrap();
    assert!(strings_intersect(&m, 0, 1).unwrap());
    assert!(matches!(strings_intersect(&m, 1, 1), Err(Error::IndexError(1, 1))));
    let y = ratio(5, 2);
    let a = Point::new(int(1), y.clone());
    let b = Point::new(int(11), y);
    let p2 = wskit::oracle::comb_generator(1, 0);
    let m = build_string_model(&p2, &[a.clone(), b.clone()]).unwrap();
    assert!(!strings_intersect(&m, 0, 1).unwrap());
    check(&p2, &[a, b, Point::new(int(6), ratio(5, 2))]);
    // arms: a source looking between two staggered teeth
    let teeth = Polygon::from_ints(&[(-1, -3), (2, -3), (3, 0), (4, -3), (6, -3), (6, 3), (3, 3), (2, 0), (1, 3), (-1, 3)])
        .unwrap();
    check(&teeth, &[Point::from_ints(0, 0), Point::from_ints(5, 2), Point::from_ints(5, -2), Point::from_ints(6, 0)]);
}
