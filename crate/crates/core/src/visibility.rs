//! Visibility regions by angular sweep around the source point.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geometry::{
    angle_cmp, contains_closed, normalize_cycle, on_segment, orientation, point_in_polygon, ray_line_hit,
    ray_stretch, segment_inside, segment_on_boundary, segments_touch, sign, strictly_between_ccw, turn, Location,
    Orientation, Point, Polygon, Rational, Segment, Vector,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeLabel {
    Primary,
    /// An edge not on the polygon boundary. `base` is the endpoint nearer the source.
    Window { base: Point, end: Point },
}

#[derive(Clone, Debug)]
pub struct VisibilityRegion {
    pub source: Point,
    /// Star-shaped part, counter-clockwise, starting at its lexicographically smallest vertex.
    pub region: Polygon,
    /// One-dimensional pieces, oriented base to end and sorted.
    pub arms: Vec<Segment>,
    /// Label of edge `i` = (vertex i, vertex i+1) of `region`.
    pub labels: Vec<EdgeLabel>,
    /// Squared length of the shortest primary edge.
    pub min_pr2: Option<Rational>,
}

impl VisibilityRegion {
    /// Closed membership in region or arms.
    pub fn contains(&self, q: &Point) -> bool {
        contains_closed(&self.region, q) || self.arms.iter().any(|s| on_segment(q, &s.a, &s.b))
    }

    pub fn windows(&self) -> impl Iterator<Item = (usize, &Point, &Point)> + '_ {
        self.labels.iter().enumerate().filter_map(|(i, l)| match l {
            EdgeLabel::Window { base, end } => Some((i, base, end)),
            EdgeLabel::Primary => None,
        })
    }

    pub fn primary_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == EdgeLabel::Primary)
            .map(|(i, _)| i)
    }
}

pub fn visible(p: &Polygon, a: &Point, b: &Point) -> bool {
    segment_inside(p, a, b)
}

/// Labels every region edge and returns the squared length of the shortest primary edge.
pub fn classify_edges(region: &Polygon, p: &Polygon, source: &Point) -> (Vec<EdgeLabel>, Option<Rational>) {
    let mut min_pr2: Option<Rational> = None;
    let labels = region
        .edges()
        .map(|(a, b)| {
            if segment_on_boundary(p, a, b) {
                let l2 = a.dist2(b);
                if min_pr2.as_ref().is_none_or(|m| l2 < *m) {
                    min_pr2 = Some(l2);
                }
                EdgeLabel::Primary
            } else if source.dist2(a) <= source.dist2(b) {
                EdgeLabel::Window { base: a.clone(), end: b.clone() }
            } else {
                EdgeLabel::Window { base: b.clone(), end: a.clone() }
            }
        })
        .collect();
    (labels, min_pr2)
}

/// Assembles a region from the raw boundary cycle and arm list of a sweep.
pub(crate) fn finish_region(p: &Polygon, source: &Point, raw: &[Point], mut arms: Vec<Segment>) -> VisibilityRegion {
    let (verts, _) = normalize_cycle(p, raw);
    let region = Polygon::from_ccw_unchecked(verts);
    let (labels, min_pr2) = classify_edges(&region, p, source);
    arms.sort_by(|x, y| x.a.cmp(&y.a).then_with(|| x.b.cmp(&y.b)));
    arms.dedup();
    VisibilityRegion { source: source.clone(), region, arms, labels, min_pr2 }
}

/// The sweep's interior wedge when the source is on the boundary: the directions from
/// `a` counter-clockwise to `b` (both inclusive).
pub(crate) fn boundary_wedge(p: &Polygon, src: &Point) -> Option<(Vector, Vector)> {
    if let Some(k) = p.index_of(src) {
        return Some((src.to(p.vertex(p.next(k))), src.to(p.vertex(p.prev(k)))));
    }
    (0..p.len()).find_map(|k| {
        let (u, w) = p.edge_points(k);
        on_segment(src, u, w).then(|| (src.to(w), src.to(u)))
    })
}

/// A direction strictly inside the counter-clockwise interval from `d1` to `d2`.
pub(crate) fn interior_direction(d1: &Vector, d2: &Vector) -> Vector {
    match turn(d1, d2) {
        Orientation::Ccw => d1.add(d2),
        Orientation::Cw => d1.add(d2).neg(),
        Orientation::Collinear => {
            if d1.same_direction(d2) {
                d1.neg()
            } else {
                d1.perp()
            }
        }
    }
}

struct SweepEdge {
    id: usize,
    a: Point,
    b: Point,
    /// Vertex index where the counter-clockwise span starts and ends.
    start: usize,
    end: usize,
}

/// Ordering of two non-crossing edges seen from `src` across a common direction.
fn closer(src: &Point, e1: &SweepEdge, e2: &SweepEdge) -> Ordering {
    if e1.id == e2.id {
        return Ordering::Equal;
    }
    let side_of = |e: &SweepEdge, q: &Point| orientation(&e.a, &e.b, q);
    let sp = side_of(e2, src);
    let (s1, s2) = (side_of(e2, &e1.a), side_of(e2, &e1.b));
    let near = |s: Orientation| s == sp || s == Orientation::Collinear;
    let far = |s: Orientation| s == sp.reverse() || s == Orientation::Collinear;
    if s1 == Orientation::Collinear && s2 == Orientation::Collinear {
        return e1.id.cmp(&e2.id);
    }
    if near(s1) && near(s2) {
        return Ordering::Less;
    }
    if far(s1) && far(s2) {
        return Ordering::Greater;
    }
    let sp1 = side_of(e1, src);
    let (t1, t2) = (side_of(e1, &e2.a), side_of(e1, &e2.b));
    let near1 = |s: Orientation| s == sp1 || s == Orientation::Collinear;
    if near1(t1) && near1(t2) {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

pub fn visibility_region(p: &Polygon, src: &Point) -> Result<VisibilityRegion> {
    let loc = point_in_polygon(p, src);
    if loc == Location::Exterior {
        return Err(Error::PointOutside(src.to_string()));
    }
    let wedge = if loc == Location::Boundary { boundary_wedge(p, src) } else { None };
    let n = p.len();
    let dirs: Vec<Vector> = p.vertices().iter().map(|v| src.to(v)).collect();

    // event directions, grouped
    let mut order: Vec<usize> = (0..n)
        .filter(|&i| !dirs[i].is_zero())
        .filter(|&i| match &wedge {
            None => true,
            Some((a, b)) => dirs[i].same_direction(a) || dirs[i].same_direction(b) || strictly_between_ccw(a, b, &dirs[i]),
        })
        .collect();
    match &wedge {
        None => order.sort_by(|&i, &j| angle_cmp(&dirs[i], &dirs[j])),
        Some((a, _)) => order.sort_by(|&i, &j| angle_from(a, &dirs[i], &dirs[j])),
    }
    let mut events: Vec<(Vector, Vec<usize>)> = Vec::new();
    for i in order {
        match events.last_mut() {
            Some((d, members)) if d.same_direction(&dirs[i]) => members.push(i),
            _ => events.push((dirs[i].clone(), vec![i])),
        }
    }
    if events.len() < 2 {
        return Err(Error::Invariant("fewer than two event directions".into()));
    }

    // edges that can block: not through the source, not radial
    let mut edges: Vec<Option<SweepEdge>> = Vec::with_capacity(n);
    for i in 0..n {
        let j = (i + 1) % n;
        let (u, w) = p.edge_points(i);
        if on_segment(src, u, w) {
            edges.push(None);
            continue;
        }
        let e = match turn(&dirs[i], &dirs[j]) {
            Orientation::Ccw => SweepEdge { id: i, a: u.clone(), b: w.clone(), start: i, end: j },
            Orientation::Cw => SweepEdge { id: i, a: u.clone(), b: w.clone(), start: j, end: i },
            Orientation::Collinear => {
                edges.push(None);
                continue;
            }
        };
        edges.push(Some(e));
    }

    let first_interval = match &wedge {
        Some(_) => interior_direction(&events[0].0, &events[1].0),
        None => interior_direction(&events[events.len() - 1].0, &events[0].0),
    };
    let mut status: Vec<usize> = edges
        .iter()
        .flatten()
        .filter(|e| strictly_between_ccw(&dirs[e.start], &dirs[e.end], &first_interval))
        .map(|e| e.id)
        .collect();
    status.sort_by(|&x, &y| closer(src, edges[x].as_ref().unwrap(), edges[y].as_ref().unwrap()));

    let hit = |status: &[usize], d: &Vector| -> Result<Point> {
        let e = status
            .first()
            .and_then(|&id| edges[id].as_ref())
            .ok_or_else(|| Error::Invariant("empty sweep status".into()))?;
        Ok(ray_line_hit(src, d, &e.a, &e.b))
    };

    let mut raw: Vec<Point> = Vec::with_capacity(2 * events.len());
    let mut arms = Vec::new();
    let last = events.len() - 1;
    for (k, (d, members)) in events.iter().enumerate() {
        let is_first = wedge.is_some() && k == 0;
        let is_last = wedge.is_some() && k == last;
        let h_minus = if is_first { src.clone() } else { hit(&status, d)? };
        if !is_first && !is_last {
            for &v in members {
                for id in [p.prev(v), v] {
                    if let Some(e) = &edges[id] {
                        if e.end == v {
                            if let Some(pos) = status.iter().position(|&s| s == id) {
                                status.remove(pos);
                            }
                        }
                    }
                }
            }
            for &v in members {
                for id in [p.prev(v), v] {
                    if let Some(e) = &edges[id] {
                        if e.start == v && !status.contains(&id) {
                            let pos = status.partition_point(|&s| closer(src, edges[s].as_ref().unwrap(), e) == Ordering::Less);
                            status.insert(pos, id);
                        }
                    }
                }
            }
        }
        let h_plus = if is_last { src.clone() } else { hit(&status, d)? };
        let base = if src.to(&h_minus).dot(d) >= src.to(&h_plus).dot(d) { &h_minus } else { &h_plus };
        if let Some((_, end)) = ray_stretch(p, src, d) {
            if src.to(&end.point).dot(d) > src.to(base).dot(d) {
                arms.push(Segment::new(base.clone(), end.point));
            }
        }
        raw.push(h_minus);
        raw.push(h_plus);
    }
    Ok(finish_region(p, src, &raw, arms))
}

/// Angle order measured counter-clockwise from `base`.
pub(crate) fn angle_from(base: &Vector, d1: &Vector, d2: &Vector) -> Ordering {
    let key = |v: &Vector| -> u8 {
        let c = base.cross(v);
        if sign(&c) > 0 || (sign(&c) == 0 && sign(&base.dot(v)) > 0) {
            0
        } else {
            1
        }
    };
    key(d1).cmp(&key(d2)).then_with(|| match turn(d1, d2) {
        Orientation::Ccw => Ordering::Less,
        Orientation::Cw => Ordering::Greater,
        Orientation::Collinear => Ordering::Equal,
    })
}

/// Closed-set test: does the segment meet the closed polygon?
pub(crate) fn segment_meets_polygon(poly: &Polygon, a: &Point, b: &Point) -> bool {
    contains_closed(poly, a) || poly.edges().any(|(u, w)| segments_touch(a, b, u, w))
}
