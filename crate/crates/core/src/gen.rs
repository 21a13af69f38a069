//! Random instance generators for fuzzing and the `gen` subcommand.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::geometry::{
    contains_closed, is_x_monotone, point_in_polygon, ratio, reflex_vertices, segments_touch, validate_polygon,
    Location, Point, Polygon, Rational,
};

/// Random simple polygon on an integer grid, untangled by 2-opt moves.
pub fn random_simple_polygon<R: Rng>(rng: &mut R, n: usize, grid: i64) -> Polygon {
    assert!(n >= 3);
    loop {
        let mut pts: Vec<Point> = Vec::with_capacity(n);
        while pts.len() < n {
            let q = Point::from_ints(rng.gen_range(0..grid), rng.gen_range(0..grid));
            if !pts.contains(&q) {
                pts.push(q);
            }
        }
        pts.shuffle(rng);
        if untangle(&mut pts) {
            if let Ok(poly) = validate_polygon(&pts) {
                return poly;
            }
        }
    }
}

fn untangle(pts: &mut [Point]) -> bool {
    let n = pts.len();
    for _ in 0..10 * n * n {
        let mut changed = false;
        'scan: for i in 0..n {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let (a, b) = (&pts[i], &pts[i + 1]);
                let (c, d) = (&pts[j], &pts[(j + 1) % n]);
                if segments_touch(a, b, c, d) {
                    pts[i + 1..=j].reverse();
                    changed = true;
                    break 'scan;
                }
            }
        }
        if !changed {
            return true;
        }
    }
    false
}

/// Random x-monotone polygon with `n` vertices. Upper and lower chains draw y values
/// from overlapping bands so deep notches occur; invalid draws are retried. The extreme
/// ends are sometimes vertical edges.
pub fn random_monotone_polygon<R: Rng>(rng: &mut R, n: usize) -> Polygon {
    assert!(n >= 3);
    let grid = 8 * n as i64 + 16;
    loop {
        let vertical_left = n >= 5 && rng.gen_bool(0.3);
        let vertical_right = n >= 6 && rng.gen_bool(0.3);
        let m = n - vertical_left as usize - vertical_right as usize;
        let mut xs: Vec<i64> = Vec::new();
        while xs.len() < m {
            let x = rng.gen_range(0..grid);
            if !xs.contains(&x) {
                xs.push(x);
            }
        }
        xs.sort();
        let band = rng.gen_range(0..=60);
        let (lo_max, up_min) = (50 + band / 2, 50 - band / 2);
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        for &x in &xs[1..m - 1] {
            if rng.gen_bool(0.5) {
                upper.push(Point::from_ints(x, rng.gen_range(up_min..=100)));
            } else {
                lower.push(Point::from_ints(x, rng.gen_range(0..=lo_max)));
            }
        }
        let (left_x, right_x) = (xs[0], xs[m - 1]);
        let mut pts: Vec<Point> = Vec::with_capacity(n);
        if vertical_left {
            pts.push(Point::from_ints(left_x, rng.gen_range(0..=45)));
        } else {
            pts.push(Point::from_ints(left_x, rng.gen_range(20..=80)));
        }
        pts.extend(lower);
        if vertical_right {
            pts.push(Point::from_ints(right_x, rng.gen_range(0..=45)));
            pts.push(Point::from_ints(right_x, rng.gen_range(55..=100)));
        } else {
            pts.push(Point::from_ints(right_x, rng.gen_range(20..=80)));
        }
        pts.extend(upper.into_iter().rev());
        if vertical_left {
            pts.push(Point::from_ints(left_x, rng.gen_range(55..=100)));
        }
        if let Ok(poly) = validate_polygon(&pts) {
            if is_x_monotone(&poly) {
                return poly;
            }
        }
    }
}

/// Random monotone polygon with `n` vertices and at most `max_reflex` reflex vertices.
pub fn random_monotone_with_reflex<R: Rng>(rng: &mut R, n: usize, max_reflex: usize) -> Polygon {
    loop {
        let p = random_monotone_polygon(rng, n);
        let r = reflex_vertices(&p).len();
        if r <= max_reflex && r >= 1.min(max_reflex) {
            return p;
        }
    }
}

/// Random point of the closed polygon with small denominators. Mixes interior points,
/// boundary points and vertices.
pub fn random_point_in<R: Rng>(rng: &mut R, p: &Polygon) -> Point {
    let roll = rng.gen_range(0..10);
    if roll == 0 {
        return p.vertex(rng.gen_range(0..p.len())).clone();
    }
    if roll == 1 {
        let i = rng.gen_range(0..p.len());
        let (a, b) = p.edge_points(i);
        let t = ratio(rng.gen_range(1..8), 8);
        return a.offset(&a.to(b), &t);
    }
    random_interior_point(rng, p)
}

/// Point of the closed polygon on a line through two vertices, outside the segment
/// between them. Such points look along the line and often see polygonal arms.
pub fn random_grazing_point<R: Rng>(rng: &mut R, p: &Polygon) -> Point {
    let n = p.len();
    let reflex = reflex_vertices(p);
    for _ in 0..200 {
        let i = match reflex.choose(rng) {
            Some(&r) if rng.gen_bool(0.8) => r,
            _ => rng.gen_range(0..n),
        };
        let j = match reflex.choose(rng) {
            Some(&r) if rng.gen_bool(0.8) => r,
            _ => rng.gen_range(0..n),
        };
        if i == j {
            continue;
        }
        let (u, v) = (p.vertex(i), p.vertex(j));
        let s = ratio(rng.gen_range(-16..=-1), 8);
        let q = u.offset(&u.to(v), &s);
        if contains_closed(p, &q) {
            return q;
        }
    }
    random_point_in(rng, p)
}

pub fn random_interior_point<R: Rng>(rng: &mut R, p: &Polygon) -> Point {
    let (lo, hi) = bbox(p);
    let den = 4i64;
    loop {
        let x = Rational::new(
            rng.gen_range((lo.0 * den)..=(hi.0 * den)).into(),
            den.into(),
        );
        let y = Rational::new(
            rng.gen_range((lo.1 * den)..=(hi.1 * den)).into(),
            den.into(),
        );
        let q = Point::new(x, y);
        if point_in_polygon(p, &q) == Location::Interior {
            return q;
        }
    }
}

/// Integer bounding box (floor/ceil of the vertex coordinates).
pub fn bbox(p: &Polygon) -> ((i64, i64), (i64, i64)) {
    use num_traits::ToPrimitive;
    let xs = p.vertices().iter().map(|v| v.x().clone());
    let ys = p.vertices().iter().map(|v| v.y().clone());
    let minx = xs.clone().min().unwrap().floor().to_integer().to_i64().unwrap();
    let maxx = xs.max().unwrap().ceil().to_integer().to_i64().unwrap();
    let miny = ys.clone().min().unwrap().floor().to_integer().to_i64().unwrap();
    let maxy = ys.max().unwrap().ceil().to_integer().to_i64().unwrap();
    ((minx, miny), (maxx, maxy))
}

/// True if `q` is in the closed polygon; re-exported for generator callers.
pub fn inside(p: &Polygon, q: &Point) -> bool {
    contains_closed(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_produce_valid_polygons() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 3..15 {
            let p = random_simple_polygon(&mut rng, n, 30);
            assert_eq!(p.len(), n);
        }
        for n in 3..31 {
            let p = random_monotone_polygon(&mut rng, n);
            assert_eq!(p.len(), n);
            assert!(is_x_monotone(&p));
            let q = random_point_in(&mut rng, &p);
            assert!(inside(&p, &q));
        }
    }
}
