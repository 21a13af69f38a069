//! Brute-force references. Each check here is built from the geometry predicates only,
//! never from the module it is used to check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{
    angle_cmp, contains_closed, int, is_x_monotone, line_intersection, normalize_cycle, on_segment, orientation,
    point_in_polygon, ratio, reflex_vertices, segment_inside, segment_on_boundary, sign, strictly_between_ccw, turn,
    Location, Orientation, Point, Polygon, Segment, Vector,
};
use crate::mis::mis_chain;
use crate::region_graph::{build_vig_monotone, regions_intersect_general, Vig};
use crate::visibility::{visibility_region, EdgeLabel, VisibilityRegion};

/// Quadratic visibility: for every vertex direction, the boundary points met by rays
/// leaning just clockwise and just counter-clockwise are found by scanning all edges, and
/// the visible stretch along the direction is found by `segment_inside` probes.
pub fn naive_visibility(p: &Polygon, src: &Point) -> Result<VisibilityRegion> {
    let loc = point_in_polygon(p, src);
    if loc == Location::Exterior {
        return Err(Error::PointOutside(src.to_string()));
    }
    let n = p.len();
    let through: Vec<bool> = p.edges().map(|(a, b)| on_segment(src, a, b)).collect();
    let wedge: Option<(Vector, Vector)> = if loc == Location::Boundary {
        let mut out = None;
        for i in 0..n {
            if p.vertex(i) == src {
                out = Some((src.to(p.vertex(i + 1)), src.to(p.vertex(i + n - 1))));
                break;
            }
        }
        if out.is_none() {
            let i = (0..n).find(|&i| through[i]).unwrap();
            out = Some((src.to(p.vertex(i + 1)), src.to(p.vertex(i))));
        }
        out
    } else {
        None
    };
    let in_wedge = |d: &Vector| match &wedge {
        None => true,
        Some((a, b)) => d.same_direction(a) || d.same_direction(b) || strictly_between_ccw(a, b, d),
    };
    let mut dirs: Vec<Vector> = p
        .vertices()
        .iter()
        .filter(|v| *v != src)
        .map(|v| src.to(v))
        .filter(|d| in_wedge(d))
        .collect();
    // rotate the angular order so a boundary source starts at its wedge start
    dirs.sort_by(angle_cmp);
    dirs.dedup_by(|x, y| x.same_direction(y));
    if let Some((a, _)) = &wedge {
        let k = dirs.iter().position(|d| d.same_direction(a)).unwrap();
        dirs.rotate_left(k);
    }

    let leaning_hit = |d: &Vector, clockwise: bool| -> Option<Point> {
        let mut best: Option<Point> = None;
        for i in 0..n {
            if through[i] {
                continue;
            }
            let (u, w) = p.edge_points(i);
            let (du, dw) = (src.to(u), src.to(w));
            let (lo, hi) = match turn(&du, &dw) {
                Orientation::Ccw => (du, dw),
                Orientation::Cw => (dw, du),
                Orientation::Collinear => continue,
            };
            let inside = strictly_between_ccw(&lo, &hi, d)
                || if clockwise { d.same_direction(&hi) } else { d.same_direction(&lo) };
            if !inside {
                continue;
            }
            let q = line_intersection(src, d, u, &u.to(w));
            if best.as_ref().is_none_or(|b| src.dist2(&q) < src.dist2(b)) {
                best = Some(q);
            }
        }
        best
    };

    let mut raw = Vec::new();
    let mut arms = Vec::new();
    let last = dirs.len() - 1;
    for (k, d) in dirs.iter().enumerate() {
        let h_minus = if wedge.is_some() && k == 0 { Some(src.clone()) } else { leaning_hit(d, true) };
        let h_plus = if wedge.is_some() && k == last { Some(src.clone()) } else { leaning_hit(d, false) };
        let (h_minus, h_plus) = match (h_minus, h_plus) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::Invariant("leaning ray hits nothing".into())),
        };
        let far = if src.dist2(&h_minus) >= src.dist2(&h_plus) { h_minus.clone() } else { h_plus.clone() };
        if let Some(end) = stretch_end(p, src, d) {
            if src.dist2(&end) > src.dist2(&far) {
                arms.push(Segment::new(far, end));
            }
        }
        raw.push(h_minus);
        raw.push(h_plus);
    }
    let (verts, _) = normalize_cycle(p, &raw);
    let region = Polygon::from_ccw_unchecked(verts);
    let mut min_pr2 = None;
    let labels = region
        .edges()
        .map(|(a, b)| {
            if segment_on_boundary(p, a, b) {
                let l = a.dist2(b);
                if min_pr2.as_ref().is_none_or(|m| &l < m) {
                    min_pr2 = Some(l);
                }
                EdgeLabel::Primary
            } else if src.dist2(a) <= src.dist2(b) {
                EdgeLabel::Window { base: a.clone(), end: b.clone() }
            } else {
                EdgeLabel::Window { base: b.clone(), end: a.clone() }
            }
        })
        .collect();
    arms.sort_by(|x, y| x.a.cmp(&y.a).then_with(|| x.b.cmp(&y.b)));
    arms.dedup();
    Ok(VisibilityRegion { source: src.clone(), region, arms, labels, min_pr2 })
}

/// Farthest boundary point along the ray that `src` still sees, by probing every
/// boundary contact in order of distance.
fn stretch_end(p: &Polygon, src: &Point, d: &Vector) -> Option<Point> {
    let far_probe = src.translate(d);
    let mut contacts: Vec<Point> = Vec::new();
    for (u, w) in p.edges() {
        let ou = orientation(src, &far_probe, u);
        let ow = orientation(src, &far_probe, w);
        if ou == Orientation::Collinear {
            contacts.push(u.clone());
        }
        if ou != Orientation::Collinear && ow != Orientation::Collinear && ou != ow {
            contacts.push(line_intersection(src, d, u, &u.to(w)));
        }
    }
    contacts.retain(|c| sign(&src.to(c).dot(d)) > 0);
    contacts.sort_by_key(|a| src.dist2(a));
    contacts.dedup();
    let mut end = None;
    for c in contacts {
        if segment_inside(p, src, &c) {
            end = Some(c);
        } else {
            break;
        }
    }
    end
}

/// Same region and arms, compared as exact vertex lists.
pub fn same_region(a: &VisibilityRegion, b: &VisibilityRegion) -> bool {
    a.region.vertices() == b.region.vertices() && a.arms == b.arms && a.labels == b.labels
}/// One-sided probe: a grid point of the closed polygon seen from both `a` and `b`.
/// `false` proves nothing.
pub fn sample_intersection(p: &Polygon, a: &Point, b: &Point, density: usize) -> bool {
    if a == b {
        return true;
    }
    let xs = p.vertices().iter().map(|v| v.x());
    let ys = p.vertices().iter().map(|v| v.y());
    let (x0, x1) = (xs.clone().min().unwrap().clone(), xs.max().unwrap().clone());
    let (y0, y1) = (ys.clone().min().unwrap().clone(), ys.max().unwrap().clone());
    let d = density.max(2) as i64 - 1;
    for i in 0..=d {
        let x = &x0 + (&x1 - &x0) * ratio(i, d);
        for j in 0..=d {
            let q = Point::new(x.clone(), &y0 + (&y1 - &y0) * ratio(j, d));
            if contains_closed(p, &q) && segment_inside(p, a, &q) && segment_inside(p, b, &q) {
                return true;
            }
        }
    }
    false
}

pub const EXHAUSTIVE_MIS_LIMIT: usize = 22;

/// Maximum independent set size by dynamic programming over all vertex subsets.
pub fn exhaustive_mis(vig: &Vig) -> Result<usize> {
    let n = vig.len();
    if n > EXHAUSTIVE_MIS_LIMIT {
        return Err(Error::TooLarge(n, EXHAUSTIVE_MIS_LIMIT));
    }
    let nbr: Vec<u32> = (0..n)
        .map(|i| (0..n).filter(|&j| vig.adjacent(i, j)).fold(0u32, |m, j| m | 1 << j))
        .collect();
    let mut best = vec![0u8; 1 << n];
    for mask in 1usize..(1 << n) {
        let v = mask.trailing_zeros() as usize;
        let skip = best[mask & !(1 << v)];
        let take = 1 + best[mask & !(nbr[v] as usize)];
        best[mask] = skip.max(take);
    }
    Ok(best[(1 << n) - 1] as usize)
}

/// Witness-set lower bound from `density` samples per edge plus reflex midpoints; the
/// returned set is re-checked pairwise with the general region predicate.
pub fn dense_ws_lower_bound(p: &Polygon, density: usize) -> Result<usize> {
    Ok(dense_ws_witnesses(p, density)?.len())
}

pub fn dense_ws_witnesses(p: &Polygon, density: usize) -> Result<Vec<Point>> {
    if !is_x_monotone(p) {
        return Err(Error::NotMonotone);
    }
    let pts = dense_samples(p, density);
    let vig = build_vig_monotone(p, &pts)?;
    let sol = mis_chain(&vig)?;
    let regions: Vec<VisibilityRegion> =
        sol.chosen.iter().map(|q| visibility_region(p, q)).collect::<Result<_>>()?;
    for i in 0..regions.len() {
        for j in i + 1..regions.len() {
            if regions_intersect_general(&regions[i], &regions[j]) {
                return Err(Error::Invariant("dense witness set is not pairwise disjoint".into()));
            }
        }
    }
    Ok(sol.chosen)
}

/// `density` evenly spaced points per edge (vertices included) and reflex-pair midpoints.
pub fn dense_samples(p: &Polygon, density: usize) -> Vec<Point> {
    let d = density.max(1) as i64;
    let mut pts = Vec::new();
    for (a, b) in p.edges() {
        for k in 0..d {
            pts.push(a.offset(&a.to(b), &ratio(k, d)));
        }
    }
    let r = reflex_vertices(p);
    for (k, &i) in r.iter().enumerate() {
        for &j in &r[k + 1..] {
            if segment_inside(p, p.vertex(i), p.vertex(j)) {
                pts.push(p.vertex(i).midpoint(p.vertex(j)));
            }
        }
    }
    pts.sort();
    pts.dedup();
    pts
}

/// Comb with `2g` downward teeth between a flat floor and a flat top. Pockets alternate
/// between witness pockets and filler pockets. Seed 0 with `g = 1` is the polygon with
/// floor (0,0)-(12,0) and tips (4,1/2), (8,1/2).
pub fn comb_generator(g: usize, seed: u64) -> Polygon {
    let g = g.max(1) as i64;
    let width = 8 * g + 4;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v = vec![Point::from_ints(0, 0), Point::from_ints(width, 0), Point::from_ints(width, 3)];
    for j in (1..=2 * g).rev() {
        // tips only move down, which narrows every witness's view of the floor
        let dip = if seed == 0 { 0 } else { rng.gen_range(0..4) };
        v.push(Point::from_ints(4 * j + 1, 3));
        v.push(Point::new(int(4 * j), ratio(1, 2) - ratio(dip, 16)));
        v.push(Point::from_ints(4 * j - 1, 3));
    }
    v.push(Point::from_ints(0, 3));
    Polygon::new(v).expect("comb is simple")
}

/// The `g + 1` pocket points certified pairwise disjoint for `comb_generator(g, _)`.
pub fn comb_witnesses(g: usize) -> Vec<Point> {
    let g = g.max(1) as i64;
    let y = ratio(5, 2);
    let mut w = vec![Point::new(int(1), y.clone())];
    w.extend((1..g).map(|j| Point::new(int(8 * j + 2), y.clone())));
    w.push(Point::new(int(8 * g + 3), y));
    w
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{is_x_monotone, reflex_vertices};
    use crate::region_graph::{build_vig, Vig};

    #[test]
    fn comb_shapes() {
        let p2 = comb_generator(1, 0);
        assert_eq!(p2.len(), 10);
        assert!(p2.vertices().contains(&Point::new(int(8), ratio(1, 2))));
        for g in 1..=4 {
            for seed in 0..3 {
                let c = comb_generator(g, seed);
                assert!(is_x_monotone(&c));
                assert_eq!(reflex_vertices(&c).len(), 2 * g);
                let w = comb_witnesses(g);
                assert_eq!(w.len(), g + 1);
                let vig = build_vig(&c, &w).unwrap();
                assert_eq!(vig.edge_count(), 0, "g={g} seed={seed}");
            }
        }
    }

    #[test]
    fn exhaustive_small() {
        let k5: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        assert_eq!(exhaustive_mis(&Vig::from_edges(5, &k5)).unwrap(), 1);
        assert_eq!(exhaustive_mis(&Vig::from_edges(7, &[])).unwrap(), 7);
        let c5: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        assert_eq!(exhaustive_mis(&Vig::from_edges(5, &c5)).unwrap(), 2);
        assert!(matches!(exhaustive_mis(&Vig::from_edges(23, &[])), Err(Error::TooLarge(23, 22))));
    }

    #[test]
    fn sampling_probe() {
        let sq = Polygon::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap();
        assert!(sample_intersection(&sq, &Point::from_ints(0, 0), &Point::from_ints(2, 2), 100));
        let p2 = comb_generator(1, 0);
        let w = comb_witnesses(1);
        assert!(!sample_intersection(&p2, &w[0], &w[1], 120));
        assert!(sample_intersection(&p2, &w[0], &Point::new(int(6), ratio(5, 2)), 100));
    }

    #[test]
    fn dense_bounds() {
        let sq = Polygon::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap();
        assert_eq!(dense_ws_lower_bound(&sq, 8).unwrap(), 1);
        let p2 = comb_generator(1, 0);
        let lo = dense_ws_lower_bound(&p2, 4).unwrap();
        assert!(lo >= 2);
        assert!(dense_ws_lower_bound(&p2, 8).unwrap() >= lo);
        assert!(dense_ws_lower_bound(&comb_generator(2, 0), 4).unwrap() >= 3);
    }
}
