//! Monotone-polygon structure: triangulation, geodesics, anchors, images and chords.

use std::collections::{HashMap, VecDeque};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::geometry::{
    contains_closed, is_x_monotone, orientation, ray_stretch, x_max_vertex, x_min_vertex,
    BoundaryPoint, Orientation, Point, Polygon, Rational, Segment, Vector,
};

/// Triangles as counter-clockwise vertex index triples.
pub fn triangulate_monotone(p: &Polygon) -> Result<Vec<[usize; 3]>> {
    if !is_x_monotone(p) {
        return Err(Error::NotMonotone);
    }
    if let Some(tris) = sweep_triangulation(p) {
        if tiles(p, &tris) {
            return Ok(tris);
        }
    }
    let tris = ear_clipping(p);
    if tiles(p, &tris) {
        Ok(tris)
    } else {
        Err(Error::Invariant("triangulation does not tile the polygon".into()))
    }
}

fn tiles(p: &Polygon, tris: &[[usize; 3]]) -> bool {
    if tris.len() + 2 != p.len() {
        return false;
    }
    let mut total = Rational::from_integer(0.into());
    for t in tris {
        let (a, b, c) = (p.vertex(t[0]), p.vertex(t[1]), p.vertex(t[2]));
        if orientation(a, b, c) != Orientation::Ccw {
            return false;
        }
        total += a.to(b).cross(&a.to(c));
    }
    total == p.area2()
}

/// Stack-based sweep in lexicographic (x, y) order. Returns `None` when the polygon is
/// only weakly monotone in a way the lexicographic order cannot follow.
fn sweep_triangulation(p: &Polygon) -> Option<Vec<[usize; 3]>> {
    let n = p.len();
    let lo = (0..n).min_by(|&i, &j| p.vertex(i).cmp(p.vertex(j)))?;
    let hi = (0..n).max_by(|&i, &j| p.vertex(i).cmp(p.vertex(j)))?;
    // chain: 0 lower (lo..hi counter-clockwise), 1 upper
    let mut chain = vec![0u8; n];
    let mut lower = vec![lo];
    let mut i = lo;
    while i != hi {
        i = p.next(i);
        lower.push(i);
    }
    let mut upper = Vec::new();
    while i != lo {
        i = p.next(i);
        if i != lo {
            upper.push(i);
            chain[i] = 1;
        }
    }
    if lower.windows(2).any(|w| p.vertex(w[0]) >= p.vertex(w[1])) {
        return None;
    }
    upper.reverse();
    if upper.windows(2).any(|w| p.vertex(w[0]) >= p.vertex(w[1])) {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| p.vertex(a).cmp(p.vertex(b)));

    let mut tris = Vec::with_capacity(n - 2);
    let push = |a: usize, b: usize, c: usize, tris: &mut Vec<[usize; 3]>| -> bool {
        match orientation(p.vertex(a), p.vertex(b), p.vertex(c)) {
            Orientation::Ccw => tris.push([a, b, c]),
            Orientation::Cw => tris.push([a, c, b]),
            Orientation::Collinear => return false,
        }
        true
    };
    let mut stack = vec![order[0], order[1]];
    for j in 2..n - 1 {
        let u = order[j];
        let top = *stack.last()?;
        if chain[u] != chain[top] {
            for w in stack.windows(2) {
                if !push(u, w[0], w[1], &mut tris) {
                    return None;
                }
            }
            stack = vec![top, u];
        } else {
            let mut last = stack.pop()?;
            while let Some(&t) = stack.last() {
                let o = orientation(p.vertex(t), p.vertex(last), p.vertex(u));
                let ok = if chain[u] == 0 { o == Orientation::Ccw } else { o == Orientation::Cw };
                if !ok {
                    break;
                }
                if !push(u, last, t, &mut tris) {
                    return None;
                }
                last = stack.pop()?;
            }
            stack.push(last);
            stack.push(u);
        }
    }
    let u = order[n - 1];
    for w in stack.windows(2) {
        if !push(u, w[0], w[1], &mut tris) {
            return None;
        }
    }
    Some(tris)
}

fn ear_clipping(p: &Polygon) -> Vec<[usize; 3]> {
    let mut idx: Vec<usize> = (0..p.len()).collect();
    let mut tris = Vec::new();
    let mut guard = 0;
    while idx.len() > 3 && guard < 4 * p.len() * p.len() {
        guard += 1;
        let m = idx.len();
        let mut clipped = false;
        for k in 0..m {
            let (a, b, c) = (idx[(k + m - 1) % m], idx[k], idx[(k + 1) % m]);
            let (pa, pb, pc) = (p.vertex(a), p.vertex(b), p.vertex(c));
            if orientation(pa, pb, pc) != Orientation::Ccw {
                continue;
            }
            let blocked = idx.iter().any(|&v| {
                if v == a || v == b || v == c {
                    return false;
                }
                let q = p.vertex(v);
                orientation(pa, pb, q) != Orientation::Cw
                    && orientation(pb, pc, q) != Orientation::Cw
                    && orientation(pc, pa, q) != Orientation::Cw
            });
            if !blocked {
                tris.push([a, b, c]);
                idx.remove(k);
                clipped = true;
                break;
            }
        }
        if !clipped {
            break;
        }
    }
    if idx.len() == 3 {
        tris.push([idx[0], idx[1], idx[2]]);
    }
    tris
}

/// Triangulation with dual adjacency, reusable across many geodesic queries.
pub struct Triangulated<'a> {
    pub polygon: &'a Polygon,
    pub triangles: Vec<[usize; 3]>,
    neighbors: Vec<Vec<(usize, usize, usize)>>,
}

impl<'a> Triangulated<'a> {
    pub fn new(p: &'a Polygon) -> Result<Self> {
        let triangles = triangulate_monotone(p)?;
        let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (t, tri) in triangles.iter().enumerate() {
            for k in 0..3 {
                let (a, b) = (tri[k], tri[(k + 1) % 3]);
                by_edge.entry((a.min(b), a.max(b))).or_default().push(t);
            }
        }
        let mut neighbors = vec![Vec::new(); triangles.len()];
        for ((a, b), ts) in by_edge {
            if ts.len() == 2 {
                neighbors[ts[0]].push((ts[1], a, b));
                neighbors[ts[1]].push((ts[0], a, b));
            }
        }
        for list in &mut neighbors {
            list.sort();
        }
        Ok(Triangulated { polygon: p, triangles, neighbors })
    }

    fn contains(&self, t: usize, q: &Point) -> bool {
        let tri = self.triangles[t];
        let (a, b, c) = (self.polygon.vertex(tri[0]), self.polygon.vertex(tri[1]), self.polygon.vertex(tri[2]));
        orientation(a, b, q) != Orientation::Cw
            && orientation(b, c, q) != Orientation::Cw
            && orientation(c, a, q) != Orientation::Cw
    }

    /// Euclidean geodesic between two points of the closed polygon, with straight
    /// pass-through vertices removed.
    pub fn shortest_path(&self, a: &Point, b: &Point) -> Result<Vec<Point>> {
        let p = self.polygon;
        if !contains_closed(p, a) {
            return Err(Error::PointOutside(a.to_string()));
        }
        if !contains_closed(p, b) {
            return Err(Error::PointOutside(b.to_string()));
        }
        if a == b {
            return Ok(vec![a.clone()]);
        }
        let starts: Vec<usize> = (0..self.triangles.len()).filter(|&t| self.contains(t, a)).collect();
        let goal: Vec<bool> = (0..self.triangles.len()).map(|t| self.contains(t, b)).collect();
        if starts.iter().any(|&t| goal[t]) {
            return Ok(vec![a.clone(), b.clone()]);
        }
        // breadth-first search over the dual tree from every triangle holding `a`
        let mut parent: Vec<Option<(usize, usize, usize)>> = vec![None; self.triangles.len()];
        let mut seen = vec![false; self.triangles.len()];
        let mut queue = VecDeque::new();
        for &s in &starts {
            seen[s] = true;
            queue.push_back(s);
        }
        let mut found = None;
        while let Some(t) = queue.pop_front() {
            if goal[t] {
                found = Some(t);
                break;
            }
            for &(u, x, y) in &self.neighbors[t] {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some((t, x, y));
                    queue.push_back(u);
                }
            }
        }
        let mut t = found.ok_or_else(|| Error::Invariant("dual graph disconnected".into()))?;
        let mut sleeve = Vec::new();
        while let Some((prev, x, y)) = parent[t] {
            sleeve.push((prev, x, y));
            t = prev;
        }
        sleeve.reverse();
        // portals as (left, right) seen when walking from a towards b
        let mut portals: Vec<(Point, Point)> = Vec::with_capacity(sleeve.len() + 2);
        portals.push((a.clone(), a.clone()));
        for &(tri, x, y) in &sleeve {
            let third = self.triangles[tri].iter().copied().find(|&v| v != x && v != y).unwrap();
            let (px, py, pw) = (p.vertex(x), p.vertex(y), p.vertex(third));
            if orientation(pw, px, py) == Orientation::Ccw {
                portals.push((py.clone(), px.clone()));
            } else {
                portals.push((px.clone(), py.clone()));
            }
        }
        portals.push((b.clone(), b.clone()));
        Ok(straighten(funnel(&portals)))
    }
}

pub fn shortest_path(p: &Polygon, a: &Point, b: &Point) -> Result<Vec<Point>> {
    Triangulated::new(p)?.shortest_path(a, b)
}

/// Simple stupid funnel over a portal sequence.
fn funnel(portals: &[(Point, Point)]) -> Vec<Point> {
    let mut path = vec![portals[0].0.clone()];
    let mut apex = portals[0].0.clone();
    let mut left = portals[0].0.clone();
    let mut right = portals[0].1.clone();
    let (mut left_idx, mut right_idx) = (0usize, 0usize);
    let mut i = 1;
    while i < portals.len() {
        let (l, r) = (&portals[i].0, &portals[i].1);
        // tighten the right side
        if orientation(&apex, &right, r) != Orientation::Cw {
            if apex == right || orientation(&apex, &left, r) == Orientation::Cw {
                right = r.clone();
                right_idx = i;
            } else {
                path.push(left.clone());
                apex = left.clone();
                right = apex.clone();
                right_idx = left_idx;
                i = left_idx + 1;
                continue;
            }
        }
        // tighten the left side
        if orientation(&apex, &left, l) != Orientation::Ccw {
            if apex == left || orientation(&apex, &right, l) == Orientation::Ccw {
                left = l.clone();
                left_idx = i;
            } else {
                path.push(right.clone());
                apex = right.clone();
                left = apex.clone();
                left_idx = right_idx;
                i = right_idx + 1;
                continue;
            }
        }
        i += 1;
    }
    let end = &portals[portals.len() - 1].0;
    if path.last() != Some(end) {
        path.push(end.clone());
    }
    path
}

/// Drops repeated points and vertices where the path goes straight on.
fn straighten(path: Vec<Point>) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(path.len());
    for q in path {
        if out.last() == Some(&q) {
            continue;
        }
        while out.len() >= 2 {
            let (a, b) = (&out[out.len() - 2], &out[out.len() - 1]);
            let straight = orientation(a, b, &q) == Orientation::Collinear && a.to(b).dot(&b.to(&q)).is_positive();
            if straight {
                out.pop();
            } else {
                break;
            }
        }
        out.push(q);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneProfile {
    pub point: Point,
    pub l_anchor: Option<usize>,
    pub r_anchor: Option<usize>,
    pub l_image: Option<BoundaryPoint>,
    pub r_image: Option<BoundaryPoint>,
    pub l_bdry: Option<Segment>,
    pub r_bdry: Option<Segment>,
    pub l_chord: Option<Segment>,
    pub r_chord: Option<Segment>,
    pub vchord: Segment,
    pub x_max_vis: Rational,
    pub x_min_vis: Rational,
}

/// End of the visible stretch from `origin` along `dir`, or `origin` when it has no length.
fn shoot_or_stay(p: &Polygon, origin: &Point, dir: &Vector) -> Point {
    ray_stretch(p, origin, dir).map(|(_, bp)| bp.point).unwrap_or_else(|| origin.clone())
}

pub fn vertical_chord(p: &Polygon, q: &Point) -> Result<Segment> {
    if !is_x_monotone(p) {
        return Err(Error::NotMonotone);
    }
    Ok(vchord(p, q))
}

fn vchord(p: &Polygon, q: &Point) -> Segment {
    let down = shoot_or_stay(p, q, &Vector::from_ints(0, -1));
    let up = shoot_or_stay(p, q, &Vector::from_ints(0, 1));
    Segment::new(down, up)
}

/// Precomputed per-polygon data for profile queries.
pub struct ProfileContext<'a> {
    tri: Triangulated<'a>,
    x_max: usize,
    x_min: usize,
}

impl<'a> ProfileContext<'a> {
    pub fn new(p: &'a Polygon) -> Result<Self> {
        if !is_x_monotone(p) {
            return Err(Error::NotMonotone);
        }
        Ok(ProfileContext { tri: Triangulated::new(p)?, x_max: x_max_vertex(p), x_min: x_min_vertex(p) })
    }

    pub fn polygon(&self) -> &Polygon {
        self.tri.polygon
    }

    pub fn profile(&self, q: &Point) -> Result<MonotoneProfile> {
        let p = self.tri.polygon;
        if !contains_closed(p, q) {
            return Err(Error::PointOutside(q.to_string()));
        }
        let side = |target: usize| -> Result<(Option<usize>, Option<BoundaryPoint>, Option<Segment>, Option<Segment>)> {
            let path = self.tri.shortest_path(q, p.vertex(target))?;
            if path.len() < 3 {
                return Ok((None, None, None, None));
            }
            let anchor_pt = &path[1];
            let anchor = p
                .index_of(anchor_pt)
                .ok_or_else(|| Error::Invariant("geodesic turns away from a vertex".into()))?;
            let dir = q.to(anchor_pt);
            let (_, image) = ray_stretch(p, q, &dir)
                .ok_or_else(|| Error::Invariant("anchor not visible from its point".into()))?;
            let back = shoot_or_stay(p, q, &dir.neg());
            let bdry = Segment::new(anchor_pt.clone(), image.point.clone());
            let chord = Segment::new(back, image.point.clone());
            Ok((Some(anchor), Some(image), Some(bdry), Some(chord)))
        };
        let (r_anchor, r_image, r_bdry, r_chord) = side(self.x_max)?;
        let (l_anchor, l_image, l_bdry, l_chord) = side(self.x_min)?;
        let x_max_vis = match &r_image {
            Some(img) => img.point.x().clone(),
            None => p.vertex(self.x_max).x().clone(),
        };
        let x_min_vis = match &l_image {
            Some(img) => img.point.x().clone(),
            None => p.vertex(self.x_min).x().clone(),
        };
        Ok(MonotoneProfile {
            point: q.clone(),
            l_anchor,
            r_anchor,
            l_image,
            r_image,
            l_bdry,
            r_bdry,
            l_chord,
            r_chord,
            vchord: vchord(p, q),
            x_max_vis,
            x_min_vis,
        })
    }
}

pub fn compute_profile(p: &Polygon, q: &Point) -> Result<MonotoneProfile> {
    ProfileContext::new(p)?.profile(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, ratio};

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    pub(crate) fn p2() -> Polygon {
        let coords = [(0, 0), (12, 0), (12, 3), (9, 3)];
        let mut v: Vec<Point> = coords.iter().map(|&(x, y)| pt(x, y)).collect();
        v.push(Point::new(int(8), ratio(1, 2)));
        v.extend([(7, 3), (5, 3)].iter().map(|&(x, y)| pt(x, y)));
        v.push(Point::new(int(4), ratio(1, 2)));
        v.extend([(3, 3), (0, 3)].iter().map(|&(x, y)| pt(x, y)));
        Polygon::new(v).unwrap()
    }

    fn l_shape() -> Polygon {
        Polygon::from_ints(&[(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]).unwrap()
    }

    fn area2(p: &Polygon, tris: &[[usize; 3]]) -> Rational {
        tris.iter()
            .map(|t| p.vertex(t[0]).to(p.vertex(t[1])).cross(&p.vertex(t[0]).to(p.vertex(t[2]))))
            .sum()
    }

    #[test]
    fn triangulations() {
        let tri = Polygon::from_ints(&[(0, 0), (1, 0), (0, 1)]).unwrap();
        assert_eq!(triangulate_monotone(&tri).unwrap().len(), 1);
        let sq = Polygon::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap();
        assert_eq!(triangulate_monotone(&sq).unwrap().len(), 2);
        let l = l_shape();
        let t = triangulate_monotone(&l).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(area2(&l, &t), int(24));
        let c = Polygon::from_ints(&[(0, 0), (3, 0), (3, 3), (0, 3), (0, 2), (2, 2), (2, 1), (0, 1)]).unwrap();
        assert!(matches!(triangulate_monotone(&c), Err(Error::NotMonotone)));
        // a downward step on the lower chain defeats the lexicographic sweep
        let step = Polygon::from_ints(&[(0, 0), (2, 0), (2, -1), (4, -1), (4, 3), (0, 3)]).unwrap();
        assert_eq!(triangulate_monotone(&step).unwrap().len(), 4);
    }

    #[test]
    fn geodesics() {
        let l = l_shape();
        let a = Point::new(ratio(1, 2), ratio(7, 2));
        assert_eq!(shortest_path(&l, &a, &pt(4, 2)).unwrap(), vec![a.clone(), pt(2, 2), pt(4, 2)]);
        assert_eq!(shortest_path(&l, &a, &a).unwrap(), vec![a.clone()]);
        let sq = Polygon::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap();
        assert_eq!(shortest_path(&sq, &pt(0, 0), &pt(2, 2)).unwrap(), vec![pt(0, 0), pt(2, 2)]);
        // passes straight through the reflex corner, so no turn is reported
        assert_eq!(shortest_path(&l, &pt(3, 1), &pt(1, 3)).unwrap(), vec![pt(3, 1), pt(1, 3)]);
    }

    #[test]
    fn p2_profiles() {
        let p = p2();
        let a = compute_profile(&p, &Point::new(int(1), ratio(5, 2))).unwrap();
        assert_eq!(a.r_anchor.map(|i| p.vertex(i).clone()), Some(Point::new(int(4), ratio(1, 2))));
        assert_eq!(a.r_image.as_ref().unwrap().point, Point::new(ratio(19, 4), int(0)));
        assert_eq!(a.r_bdry, Some(Segment::new(Point::new(int(4), ratio(1, 2)), Point::new(ratio(19, 4), int(0)))));
        assert_eq!(a.x_max_vis, ratio(19, 4));
        assert_eq!(a.l_anchor, None);
        assert_eq!(a.x_min_vis, int(0));
        let b = compute_profile(&p, &Point::new(int(11), ratio(5, 2))).unwrap();
        assert_eq!(b.l_anchor.map(|i| p.vertex(i).clone()), Some(Point::new(int(8), ratio(1, 2))));
        assert_eq!(b.l_image.as_ref().unwrap().point, Point::new(ratio(29, 4), int(0)));
        assert_eq!(b.x_min_vis, ratio(29, 4));
    }

    #[test]
    fn convex_profile_has_no_anchors() {
        let pent = Polygon::from_ints(&[(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]).unwrap();
        let pr = compute_profile(&pent, &pt(2, 2)).unwrap();
        assert_eq!((pr.l_anchor, pr.r_anchor), (None, None));
        assert_eq!(pr.x_max_vis, int(5));
        assert_eq!(pr.x_min_vis, int(-1));
    }

    #[test]
    fn vertical_chords() {
        let sq = Polygon::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap();
        assert_eq!(vertical_chord(&sq, &pt(1, 1)).unwrap(), Segment::new(pt(1, 0), pt(1, 2)));
        assert_eq!(vertical_chord(&sq, &pt(0, 0)).unwrap(), Segment::new(pt(0, 0), pt(0, 2)));
        let p = p2();
        let tip = Point::new(int(4), ratio(1, 2));
        assert_eq!(vertical_chord(&p, &tip).unwrap(), Segment::new(pt(4, 0), tip));
    }
}
