use proptest::prelude::*;
use wskit::geometry::{int, ratio, Point, Polygon, Rational};
use wskit::io::{parse_instance, render_svg, serialize_instance, Instance, Overlays};
use wskit::visibility::visibility_region;

fn golden(name: &str, actual: &str) {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    if std::env::var_os("WSKIT_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap();
    assert_eq!(actual, expected, "{name} differs from golden");
}

#[test]
fn p2_with_two_witnesses() {
    let text = std::fs::read_to_string(format!("{}/tests/data/p2.json", env!("CARGO_MANIFEST_DIR"))).unwrap();
    let inst = parse_instance(&text).unwrap();
    let w = vec![Point::new(int(1), ratio(5, 2)), Point::new(int(11), ratio(5, 2))];
    let regions = w.iter().map(|q| visibility_region(&inst.polygon, q).unwrap()).collect();
    let svg = render_svg(&inst.polygon, &Overlays { regions, witnesses: w, ..Overlays::default() });
    assert_eq!(svg.matches("<path").count(), 3);
    assert_eq!(svg.matches("fill-opacity").count(), 2);
    assert_eq!(svg.matches("<circle").count(), 2);
    golden("p2_witnesses.svg", &svg);
}

#[test]
fn square_alone() {
    let sq = Polygon::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap();
    let svg = render_svg(&sq, &Overlays::default());
    assert_eq!(svg.matches("<path").count(), 1);
    assert_eq!(svg.matches("<circle").count(), 0);
    golden("square.svg", &svg);
}

fn coord() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..12).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #[test]
    fn instance_round_trip(
        x0 in coord(), y0 in coord(), w in 1i64..40, h in 1i64..40, dx in coord(),
        pts in proptest::collection::vec((0i64..=100, 0i64..=100), 0..6),
    ) {
        let a = Point::new(x0.clone(), y0.clone());
        let b = Point::new(&x0 + int(w), y0.clone());
        let c = Point::new(&x0 + &dx, &y0 + int(h));
        let polygon = Polygon::new(vec![a.clone(), b.clone(), c.clone()]).unwrap();
        // convex combinations keep the points inside
        let points: Vec<Point> = pts
            .iter()
            .map(|&(s, t)| {
                let (s, t) = (ratio(s.min(100 - t), 100), ratio(t, 100));
                let u = int(1) - &s - &t;
                Point::new(a.x() * &u + b.x() * &s + c.x() * &t, a.y() * &u + b.y() * &s + c.y() * &t)
            })
            .collect();
        let inst = Instance { polygon, points: Some(points) };
        let back = parse_instance(&serialize_instance(&inst)).unwrap();
        prop_assert_eq!(back, inst);
    }
}
