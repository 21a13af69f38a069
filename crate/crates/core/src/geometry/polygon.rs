use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::point::{orientation, Orientation, Point, Vector};
use super::rational::{half, sign, Rational};
use super::segment::{line_intersection, line_param, on_segment, segments_intersect, segments_touch, Segment, SegmentIntersection};
use crate::error::{Error, Result};

/// Simple polygon with counter-clockwise vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ValidateOptions {
    pub allow_collinear: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Location {
    Interior,
    Boundary,
    Exterior,
}

/// A point on the boundary given by edge index and parameter along the directed edge.
/// Vertices are always stored as `(i, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryPoint {
    pub edge: usize,
    pub t: Rational,
    pub point: Point,
}

impl BoundaryPoint {
    pub fn is_vertex(&self) -> bool {
        self.t.is_zero()
    }
}

impl Polygon {
    pub fn new(raw: Vec<Point>) -> Result<Polygon> {
        validate_polygon(&raw)
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Polygon> {
        validate_polygon(&coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect::<Vec<_>>())
    }

    /// Trusted constructor for cycles already known to be simple and counter-clockwise.
    pub(crate) fn from_ccw_unchecked(vertices: Vec<Point>) -> Polygon {
        Polygon { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i % self.vertices.len()]
    }

    pub fn next(&self, i: usize) -> usize {
        (i + 1) % self.vertices.len()
    }

    pub fn prev(&self, i: usize) -> usize {
        (i + self.vertices.len() - 1) % self.vertices.len()
    }

    pub fn edge_points(&self, i: usize) -> (&Point, &Point) {
        (self.vertex(i), self.vertex(i + 1))
    }

    pub fn edge(&self, i: usize) -> Segment {
        Segment::new(self.vertex(i).clone(), self.vertex(i + 1).clone())
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> + '_ {
        (0..self.len()).map(move |i| self.edge_points(i))
    }

    /// Twice the signed area.
    pub fn area2(&self) -> Rational {
        let mut acc = Rational::zero();
        for (a, b) in self.edges() {
            acc += a.x() * b.y() - a.y() * b.x();
        }
        acc
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }

    pub fn boundary_point(&self, edge: usize, t: Rational) -> BoundaryPoint {
        if t.is_one() {
            let e = self.next(edge);
            return BoundaryPoint { edge: e, t: Rational::zero(), point: self.vertex(e).clone() };
        }
        let (a, b) = self.edge_points(edge);
        let point = if t.is_zero() { a.clone() } else { a.offset(&a.to(b), &t) };
        BoundaryPoint { edge, t, point }
    }
}

pub fn validate_polygon(raw: &[Point]) -> Result<Polygon> {
    validate_polygon_with(raw, ValidateOptions::default())
}

pub fn validate_polygon_with(raw: &[Point], opts: ValidateOptions) -> Result<Polygon> {
    let n = raw.len();
    if n < 3 {
        return Err(Error::TooFewVertices);
    }
    let mut sorted: Vec<&Point> = raw.iter().collect();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateVertex(w[0].to_string()));
    }
    for i in 0..n {
        let (a, b, c) = (&raw[(i + n - 1) % n], &raw[i], &raw[(i + 1) % n]);
        if orientation(a, b, c) == Orientation::Collinear {
            if a.to(b).dot(&b.to(c)) <= Rational::zero() {
                return Err(Error::SelfIntersecting((i + n - 1) % n, i));
            }
            if !opts.allow_collinear {
                return Err(Error::CollinearVertices(i));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let (a, b) = (&raw[i], &raw[(i + 1) % n]);
            let (c, d) = (&raw[j], &raw[(j + 1) % n]);
            if adjacent {
                if let SegmentIntersection::Overlap(_) =
                    segments_intersect(&Segment::new(a.clone(), b.clone()), &Segment::new(c.clone(), d.clone()))
                {
                    return Err(Error::SelfIntersecting(i, j));
                }
            } else if segments_touch(a, b, c, d) {
                return Err(Error::SelfIntersecting(i, j));
            }
        }
    }
    let mut vertices = raw.to_vec();
    let poly = Polygon { vertices: vertices.clone() };
    if sign(&poly.area2()) < 0 {
        vertices[1..].reverse();
    }
    Ok(Polygon { vertices })
}

/// Index of the vertex with minimum x; ties go to the lower vertex.
pub fn x_min_vertex(p: &Polygon) -> usize {
    (0..p.len())
        .min_by(|&i, &j| p.vertex(i).cmp_x(p.vertex(j)).then_with(|| p.vertex(i).cmp_y(p.vertex(j))))
        .unwrap()
}

/// Index of the vertex with maximum x; ties go to the lower vertex.
pub fn x_max_vertex(p: &Polygon) -> usize {
    (0..p.len())
        .min_by(|&i, &j| p.vertex(j).cmp_x(p.vertex(i)).then_with(|| p.vertex(i).cmp_y(p.vertex(j))))
        .unwrap()
}

/// The x sequence along the boundary is unimodal: non-decreasing from xMin to xMax,
/// then non-increasing back.
pub fn is_x_monotone(p: &Polygon) -> bool {
    let n = p.len();
    let start = x_min_vertex(p);
    let mut rising = true;
    for k in 0..n {
        let a = p.vertex(start + k);
        let b = p.vertex(start + k + 1);
        match a.cmp_x(b) {
            Ordering::Greater => rising = false,
            Ordering::Less if !rising => return false,
            _ => {}
        }
    }
    true
}

pub fn is_reflex(p: &Polygon, i: usize) -> bool {
    orientation(p.vertex(p.prev(i)), p.vertex(i), p.vertex(p.next(i))) == Orientation::Cw
}

pub fn reflex_vertices(p: &Polygon) -> Vec<usize> {
    (0..p.len()).filter(|&i| is_reflex(p, i)).collect()
}

pub fn on_boundary(p: &Polygon, q: &Point) -> bool {
    p.edges().any(|(a, b)| on_segment(q, a, b))
}

pub fn point_in_polygon(p: &Polygon, q: &Point) -> Location {
    let mut winding = 0i64;
    for (a, b) in p.edges() {
        if on_segment(q, a, b) {
            return Location::Boundary;
        }
        if a.cmp_y(q) != Ordering::Greater {
            if b.cmp_y(q) == Ordering::Greater && orientation(a, b, q) == Orientation::Ccw {
                winding += 1;
            }
        } else if b.cmp_y(q) != Ordering::Greater && orientation(a, b, q) == Orientation::Cw {
            winding -= 1;
        }
    }
    if winding != 0 {
        Location::Interior
    } else {
        Location::Exterior
    }
}

pub fn contains_closed(p: &Polygon, q: &Point) -> bool {
    point_in_polygon(p, q) != Location::Exterior
}

/// Where the line `origin + t * dir` meets the boundary.
#[derive(Clone, Debug)]
pub(crate) struct LineEvent {
    pub t: Rational,
    pub edge: usize,
    /// Set when the contact is a polygon vertex.
    pub vertex: Option<usize>,
    /// Transversal crossing through the relative interior of an edge.
    pub proper: bool,
}

pub(crate) fn line_events(p: &Polygon, origin: &Point, dir: &Vector) -> Vec<LineEvent> {
    let q = origin.translate(dir);
    let n = p.len();
    let side: Vec<Orientation> = p.vertices().iter().map(|v| orientation(origin, &q, v)).collect();
    let mut out = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        let (su, sw) = (side[i], side[j]);
        if su == Orientation::Collinear {
            out.push(LineEvent { t: line_param(origin, dir, p.vertex(i)), edge: i, vertex: Some(i), proper: false });
        }
        if su != Orientation::Collinear && sw != Orientation::Collinear && su != sw {
            let (u, w) = p.edge_points(i);
            let e = u.to(w);
            let t = origin.to(u).cross(&e) / dir.cross(&e);
            out.push(LineEvent { t, edge: i, vertex: None, proper: true });
        }
    }
    out.sort_by(|a, b| a.t.cmp(&b.t));
    out
}

/// Closed containment of a segment: no transversal crossing, and every piece between
/// boundary contacts has its midpoint in the closed polygon.
pub fn segment_inside(p: &Polygon, a: &Point, b: &Point) -> bool {
    if a == b {
        return contains_closed(p, a);
    }
    let dir = a.to(b);
    let zero = Rational::zero();
    let one = Rational::one();
    let mut ts = vec![zero.clone(), one.clone()];
    for ev in line_events(p, a, &dir) {
        if ev.t < zero || ev.t > one {
            continue;
        }
        if ev.proper && ev.t > zero && ev.t < one {
            return false;
        }
        ts.push(ev.t);
    }
    ts.sort();
    ts.dedup();
    ts.windows(2).all(|w| {
        let mid = (&w[0] + &w[1]) * half();
        contains_closed(p, &a.offset(&dir, &mid))
    })
}

/// End parameter of the maximal closed-inside stretch of the ray from `origin`.
/// `None` when the stretch has zero length.
pub(crate) fn ray_stretch(p: &Polygon, origin: &Point, dir: &Vector) -> Option<(Rational, BoundaryPoint)> {
    let zero = Rational::zero();
    let events: Vec<LineEvent> = line_events(p, origin, dir).into_iter().filter(|e| e.t > zero).collect();
    if events.is_empty() {
        return None;
    }
    let mut groups: Vec<(usize, usize)> = Vec::new();
    let mut s = 0;
    while s < events.len() {
        let mut e = s + 1;
        while e < events.len() && events[e].t == events[s].t {
            e += 1;
        }
        groups.push((s, e));
        s = e;
    }
    let first = &events[groups[0].0].t;
    if !contains_closed(p, &origin.offset(dir, &(first * half()))) {
        return None;
    }
    let mut end = groups.len() - 1;
    for g in 0..groups.len() - 1 {
        let (s, e) = groups[g];
        let flips = e - s == 1 && events[s].proper;
        let inside_next = if flips {
            false
        } else {
            let mid = (&events[s].t + &events[groups[g + 1].0].t) * half();
            contains_closed(p, &origin.offset(dir, &mid))
        };
        if !inside_next {
            end = g;
            break;
        }
    }
    let (s, e) = groups[end];
    let t = events[s].t.clone();
    let group = &events[s..e];
    let bp = if let Some(v) = group.iter().find_map(|ev| ev.vertex) {
        BoundaryPoint { edge: v, t: Rational::zero(), point: p.vertex(v).clone() }
    } else {
        let ev = &group[0];
        let point = origin.offset(dir, &t);
        let (a, b) = p.edge_points(ev.edge);
        let te = line_param(a, &a.to(b), &point);
        BoundaryPoint { edge: ev.edge, t: te, point }
    };
    Some((t, bp))
}

/// First boundary point that closes the visible stretch of the ray.
pub fn ray_shoot(p: &Polygon, origin: &Point, dir: &Vector) -> Result<BoundaryPoint> {
    if dir.is_zero() {
        return Err(Error::NoHit);
    }
    ray_stretch(p, origin, dir).map(|(_, bp)| bp).ok_or(Error::NoHit)
}

/// Canonical boundary location of a point, if it lies on the boundary.
pub fn locate_boundary(p: &Polygon, q: &Point) -> Option<BoundaryPoint> {
    if let Some(i) = p.index_of(q) {
        return Some(BoundaryPoint { edge: i, t: Rational::zero(), point: q.clone() });
    }
    (0..p.len()).find_map(|i| {
        let (a, b) = p.edge_points(i);
        on_segment(q, a, b).then(|| BoundaryPoint { edge: i, t: line_param(a, &a.to(b), q), point: q.clone() })
    })
}

/// True iff the whole closed segment lies on the polygon boundary.
pub fn segment_on_boundary(p: &Polygon, a: &Point, b: &Point) -> bool {
    if a == b {
        return on_boundary(p, a);
    }
    let dir = a.to(b);
    let mut spans: Vec<(Rational, Rational)> = Vec::new();
    for (u, w) in p.edges() {
        if orientation(a, b, u) != Orientation::Collinear || orientation(a, b, w) != Orientation::Collinear {
            continue;
        }
        let (tu, tw) = (line_param(a, &dir, u), line_param(a, &dir, w));
        let (lo, hi) = if tu <= tw { (tu, tw) } else { (tw, tu) };
        spans.push((lo, hi));
    }
    spans.sort();
    let mut reach = Rational::zero();
    for (lo, hi) in spans {
        if lo > reach {
            break;
        }
        if hi > reach {
            reach = hi;
        }
    }
    reach >= Rational::one()
}

/// Intersection of the supporting line of edge `e` with the ray `origin + t * dir`.
pub(crate) fn ray_line_hit(origin: &Point, dir: &Vector, a: &Point, b: &Point) -> Point {
    line_intersection(origin, dir, a, &a.to(b))
}

/// Cleans a closed cycle of points lying in `p`: drops repeats, splits pieces at polygon
/// vertices, and merges straight runs whose pieces agree on lying along the boundary.
/// The result starts at its lexicographically smallest vertex. The flag per edge tells
/// whether the edge lies on the boundary of `p`.
pub fn normalize_cycle(p: &Polygon, raw: &[Point]) -> (Vec<Point>, Vec<bool>) {
    let mut pts: Vec<Point> = Vec::with_capacity(raw.len());
    for q in raw {
        if pts.last() != Some(q) {
            pts.push(q.clone());
        }
    }
    while pts.len() > 1 && pts.first() == pts.last() {
        pts.pop();
    }
    let m = pts.len();
    let mut split: Vec<Point> = Vec::new();
    for i in 0..m {
        let (a, b) = (&pts[i], &pts[(i + 1) % m]);
        split.push(a.clone());
        let dir = a.to(b);
        let mut inner: Vec<(Rational, &Point)> = p
            .vertices()
            .iter()
            .filter(|v| *v != a && *v != b && on_segment(v, a, b))
            .map(|v| (line_param(a, &dir, v), v))
            .collect();
        inner.sort_by(|x, y| x.0.cmp(&y.0));
        split.extend(inner.into_iter().map(|(_, v)| v.clone()));
    }
    let m = split.len();
    let flags: Vec<bool> = (0..m)
        .map(|i| {
            let (a, b) = (&split[i], &split[(i + 1) % m]);
            on_boundary(p, &a.midpoint(b))
        })
        .collect();
    // vertex i sits between piece i-1 and piece i
    let keep: Vec<bool> = (0..m)
        .map(|i| {
            let prev = (i + m - 1) % m;
            let straight = orientation(&split[prev], &split[i], &split[(i + 1) % m]) == Orientation::Collinear
                && sign(&split[prev].to(&split[i]).dot(&split[i].to(&split[(i + 1) % m]))) > 0;
            !(straight && flags[prev] == flags[i])
        })
        .collect();
    let mut verts = Vec::new();
    let mut out_flags = Vec::new();
    for i in 0..m {
        if keep[i] {
            verts.push(split[i].clone());
            out_flags.push(flags[i]);
        }
    }
    let start = (0..verts.len()).min_by(|&i, &j| verts[i].cmp(&verts[j])).unwrap_or(0);
    verts.rotate_left(start);
    out_flags.rotate_left(start);
    (verts, out_flags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::{int, ratio};

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn square2() -> Polygon {
        Polygon::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap()
    }

    fn l_shape() -> Polygon {
        Polygon::from_ints(&[(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Polygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).is_ok());
        assert!(matches!(
            Polygon::from_ints(&[(0, 0), (2, 2), (2, 0), (0, 2)]),
            Err(Error::SelfIntersecting(..))
        ));
        let cw = Polygon::from_ints(&[(0, 0), (0, 1), (1, 1), (1, 0)]).unwrap();
        assert_eq!(cw.vertices(), Polygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap().vertices());
        assert!(matches!(Polygon::from_ints(&[(0, 0), (1, 0)]), Err(Error::TooFewVertices)));
        assert!(matches!(
            Polygon::from_ints(&[(0, 0), (1, 0), (1, 1), (1, 0)]),
            Err(Error::DuplicateVertex(_))
        ));
        assert!(matches!(
            Polygon::from_ints(&[(0, 0), (1, 0), (2, 0), (2, 1)]),
            Err(Error::CollinearVertices(1))
        ));
        let opts = ValidateOptions { allow_collinear: true };
        let raw: Vec<Point> = [(0, 0), (1, 0), (2, 0), (2, 1)].iter().map(|&(x, y)| pt(x, y)).collect();
        assert!(validate_polygon_with(&raw, opts).is_ok());
    }

    #[test]
    fn monotonicity_and_reflex() {
        assert!(is_x_monotone(&square2()));
        assert!(is_x_monotone(&l_shape()));
        let c = Polygon::from_ints(&[(0, 0), (3, 0), (3, 3), (0, 3), (0, 2), (2, 2), (2, 1), (0, 1)]).unwrap();
        assert!(!is_x_monotone(&c));
        assert!(reflex_vertices(&square2()).is_empty());
        assert_eq!(reflex_vertices(&l_shape()), vec![3]);
    }

    #[test]
    fn locations() {
        let sq = Polygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(point_in_polygon(&sq, &Point::new(ratio(1, 2), ratio(1, 2))), Location::Interior);
        assert_eq!(point_in_polygon(&sq, &Point::new(int(0), ratio(1, 2))), Location::Boundary);
        assert_eq!(point_in_polygon(&sq, &pt(5, 5)), Location::Exterior);
        assert_eq!(point_in_polygon(&l_shape(), &pt(3, 3)), Location::Exterior);
        assert_eq!(point_in_polygon(&l_shape(), &pt(2, 3)), Location::Boundary);
    }

    #[test]
    fn segment_containment() {
        let l = l_shape();
        assert!(segment_inside(&square2(), &pt(0, 0), &pt(2, 2)));
        // grazes the reflex corner (2, 2) and stays in the closed polygon
        assert!(segment_inside(&l, &pt(3, 1), &pt(1, 3)));
        assert!(!segment_inside(&l, &pt(3, 1), &pt(1, 4)));
        assert!(segment_inside(&l, &pt(0, 0), &pt(4, 2)));
        assert!(!segment_inside(&l, &pt(4, 2), &pt(0, 4)));
        assert!(segment_inside(&l, &pt(2, 2), &pt(0, 4)));
        assert!(segment_inside(&l, &pt(0, 4), &pt(2, 4)));
        assert!(!segment_inside(&l, &pt(4, 2), &pt(2, 4)));
        assert!(!segment_inside(&l, &pt(3, 3), &pt(3, 3)));
    }

    #[test]
    fn rays() {
        let sq = square2();
        assert_eq!(ray_shoot(&sq, &pt(1, 1), &Vector::from_ints(1, 0)).unwrap().point, pt(2, 1));
        assert_eq!(ray_shoot(&sq, &pt(0, 1), &Vector::from_ints(1, 0)).unwrap().point, pt(2, 1));
        assert!(matches!(ray_shoot(&sq, &pt(0, 1), &Vector::from_ints(-1, 0)), Err(Error::NoHit)));
        let hit = ray_shoot(&l_shape(), &pt(3, 1), &Vector::from_ints(-1, 1)).unwrap();
        assert_eq!(hit.point, pt(0, 4));
        assert_eq!((hit.edge, hit.t.clone()), (5, int(0)));
        let along = ray_shoot(&sq, &pt(0, 0), &Vector::from_ints(1, 0)).unwrap();
        assert_eq!(along.point, pt(2, 0));
        assert_eq!(along.edge, 1);
    }

    #[test]
    fn boundary_segments() {
        let l = l_shape();
        assert!(segment_on_boundary(&l, &pt(1, 0), &pt(4, 0)));
        assert!(segment_on_boundary(&l, &pt(4, 1), &pt(4, 2)));
        assert!(!segment_on_boundary(&l, &pt(2, 2), &pt(0, 4)));
        assert!(!segment_on_boundary(&l, &pt(3, 2), &pt(1, 2)));
    }

    #[test]
    fn cycle_normalization() {
        let sq = square2();
        let raw = vec![pt(2, 0), pt(2, 1), pt(2, 2), pt(2, 2), pt(0, 2), pt(0, 0), pt(1, 0)];
        let (v, f) = normalize_cycle(&sq, &raw);
        assert_eq!(v, vec![pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)]);
        assert!(f.iter().all(|&b| b));
        let l = l_shape();
        let (v, f) = normalize_cycle(&l, &[pt(0, 0), pt(4, 0), pt(4, 2), pt(2, 2), pt(1, 3), pt(0, 4)]);
        assert_eq!(v, vec![pt(0, 0), pt(4, 0), pt(4, 2), pt(2, 2), pt(0, 4)]);
        assert_eq!(f, vec![true, true, true, false, true]);
    }
}
