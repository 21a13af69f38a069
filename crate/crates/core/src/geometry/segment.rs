use std::cmp::Ordering;

use num_traits::Zero;

use super::point::{orientation, Orientation, Point, Vector};
use super::rational::{sign, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn direction(&self) -> Vector {
        self.a.to(&self.b)
    }

    pub fn midpoint(&self) -> Point {
        self.a.midpoint(&self.b)
    }

    pub fn contains(&self, p: &Point) -> bool {
        on_segment(p, &self.a, &self.b)
    }

    /// Endpoints in lexicographic order.
    pub fn normalized(&self) -> Segment {
        if self.b < self.a {
            Segment::new(self.b.clone(), self.a.clone())
        } else {
            self.clone()
        }
    }

    pub fn len2(&self) -> Rational {
        self.a.dist2(&self.b)
    }

    /// Parameter of a point of the supporting line, measured along the dominant axis.
    pub fn param(&self, p: &Point) -> Rational {
        line_param(&self.a, &self.direction(), p)
    }

    pub fn at(&self, t: &Rational) -> Point {
        self.a.offset(&self.direction(), t)
    }
}

/// Parameter `t` with `p = origin + t * dir` for `p` on that line.
pub fn line_param(origin: &Point, dir: &Vector, p: &Point) -> Rational {
    if dir.x.is_zero() {
        (p.y() - origin.y()) / &dir.y
    } else {
        (p.x() - origin.x()) / &dir.x
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentIntersection {
    Disjoint,
    Point(Point),
    Overlap(Segment),
}

impl SegmentIntersection {
    pub fn is_disjoint(&self) -> bool {
        matches!(self, SegmentIntersection::Disjoint)
    }
}

/// Closed point-on-segment test; a degenerate segment contains only its point.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if orientation(a, b, p) != Orientation::Collinear {
        return false;
    }
    within_box(p, a, b)
}

fn within_box(p: &Point, a: &Point, b: &Point) -> bool {
    let (lo_x, hi_x) = if a.cmp_x(b) == Ordering::Greater { (b, a) } else { (a, b) };
    let (lo_y, hi_y) = if a.cmp_y(b) == Ordering::Greater { (b, a) } else { (a, b) };
    p.cmp_x(lo_x) != Ordering::Less
        && p.cmp_x(hi_x) != Ordering::Greater
        && p.cmp_y(lo_y) != Ordering::Less
        && p.cmp_y(hi_y) != Ordering::Greater
}

/// True iff the closed segments share at least one point.
pub fn segments_touch(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    if !boxes_overlap(a, b, c, d) {
        return false;
    }
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if opposite(o1, o2) && opposite(o3, o4) {
        return true;
    }
    if o1 == Orientation::Collinear && within_box(c, a, b) {
        return true;
    }
    if o2 == Orientation::Collinear && within_box(d, a, b) {
        return true;
    }
    if o3 == Orientation::Collinear && within_box(a, c, d) {
        return true;
    }
    if o4 == Orientation::Collinear && within_box(b, c, d) {
        return true;
    }
    false
}

fn opposite(a: Orientation, b: Orientation) -> bool {
    matches!(
        (a, b),
        (Orientation::Ccw, Orientation::Cw) | (Orientation::Cw, Orientation::Ccw)
    )
}

fn boxes_overlap(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let (ax, ay) = a.approx();
    let (bx, by) = b.approx();
    let (cx, cy) = c.approx();
    let (dx, dy) = d.approx();
    // rounded coordinates are within a relative 2^-52 of the exact ones
    let slack = |v: f64| v.abs() * 1e-15 + 1e-300;
    let max1x = ax.max(bx);
    let min1x = ax.min(bx);
    let max2x = cx.max(dx);
    let min2x = cx.min(dx);
    let max1y = ay.max(by);
    let min1y = ay.min(by);
    let max2y = cy.max(dy);
    let min2y = cy.min(dy);
    let all = [ax, ay, bx, by, cx, cy, dx, dy];
    if all.iter().any(|v| !v.is_finite()) {
        return true;
    }
    !(max1x + slack(max1x) < min2x - slack(min2x)
        || max2x + slack(max2x) < min1x - slack(min1x)
        || max1y + slack(max1y) < min2y - slack(min2y)
        || max2y + slack(max2y) < min1y - slack(min1y))
}

/// Closed-set intersection of two segments.
pub fn segments_intersect(s1: &Segment, s2: &Segment) -> SegmentIntersection {
    let (a, b, c, d) = (&s1.a, &s1.b, &s2.a, &s2.b);
    if a == b {
        return if on_segment(a, c, d) {
            SegmentIntersection::Point(a.clone())
        } else {
            SegmentIntersection::Disjoint
        };
    }
    if c == d {
        return if on_segment(c, a, b) {
            SegmentIntersection::Point(c.clone())
        } else {
            SegmentIntersection::Disjoint
        };
    }
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        return collinear_overlap(s1, s2);
    }
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    let straddle = |x: Orientation, y: Orientation| {
        x == Orientation::Collinear || y == Orientation::Collinear || x != y
    };
    if !(straddle(o1, o2) && straddle(o3, o4)) {
        return SegmentIntersection::Disjoint;
    }
    if o1 == Orientation::Collinear {
        return SegmentIntersection::Point(c.clone());
    }
    if o2 == Orientation::Collinear {
        return SegmentIntersection::Point(d.clone());
    }
    if o3 == Orientation::Collinear {
        return SegmentIntersection::Point(a.clone());
    }
    if o4 == Orientation::Collinear {
        return SegmentIntersection::Point(b.clone());
    }
    SegmentIntersection::Point(line_intersection(a, &a.to(b), c, &c.to(d)))
}

/// Intersection of two non-parallel lines given by point and direction.
pub fn line_intersection(p: &Point, u: &Vector, q: &Point, v: &Vector) -> Point {
    let denom = u.cross(v);
    let t = p.to(q).cross(v) / denom;
    p.offset(u, &t)
}

fn collinear_overlap(s1: &Segment, s2: &Segment) -> SegmentIntersection {
    let lo1 = s1.a.clone().min(s1.b.clone());
    let hi1 = s1.a.clone().max(s1.b.clone());
    let lo2 = s2.a.clone().min(s2.b.clone());
    let hi2 = s2.a.clone().max(s2.b.clone());
    let lo = lo1.max(lo2);
    let hi = hi1.min(hi2);
    match lo.cmp(&hi) {
        Ordering::Greater => SegmentIntersection::Disjoint,
        Ordering::Equal => SegmentIntersection::Point(lo),
        Ordering::Less => SegmentIntersection::Overlap(Segment::new(lo, hi)),
    }
}

/// Squared distance from a point to a closed segment.
pub fn point_segment_dist2(p: &Point, a: &Point, b: &Point) -> Rational {
    let ab = a.to(b);
    let len2 = ab.norm2();
    if len2.is_zero() {
        return p.dist2(a);
    }
    let t = a.to(p).dot(&ab) / &len2;
    if sign(&t) <= 0 {
        p.dist2(a)
    } else if t >= Rational::from_integer(1.into()) {
        p.dist2(b)
    } else {
        p.dist2(&a.offset(&ab, &t))
    }
}

/// Squared distance between two closed segments.
pub fn segment_dist2(a: &Point, b: &Point, c: &Point, d: &Point) -> Rational {
    if segments_touch(a, b, c, d) {
        return Rational::zero();
    }
    [
        point_segment_dist2(a, c, d),
        point_segment_dist2(b, c, d),
        point_segment_dist2(c, a, b),
        point_segment_dist2(d, a, b),
    ]
    .into_iter()
    .min()
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::ratio;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn s(a: (i64, i64), b: (i64, i64)) -> Segment {
        Segment::new(p(a.0, a.1), p(b.0, b.1))
    }

    #[test]
    fn intersection_kinds() {
        assert_eq!(
            segments_intersect(&s((0, 0), (2, 2)), &s((0, 2), (2, 0))),
            SegmentIntersection::Point(p(1, 1))
        );
        assert_eq!(
            segments_intersect(&s((0, 0), (1, 0)), &s((2, 0), (3, 0))),
            SegmentIntersection::Disjoint
        );
        assert_eq!(
            segments_intersect(&s((0, 0), (2, 0)), &s((1, 0), (3, 0))),
            SegmentIntersection::Overlap(s((1, 0), (2, 0)))
        );
        assert_eq!(
            segments_intersect(&s((0, 0), (2, 0)), &s((2, 0), (3, 1))),
            SegmentIntersection::Point(p(2, 0))
        );
        assert_eq!(
            segments_intersect(&s((0, 0), (1, 0)), &s((1, 0), (3, 0))),
            SegmentIntersection::Point(p(1, 0))
        );
        assert_eq!(
            segments_intersect(&s((0, 0), (4, 0)), &s((1, 1), (2, 3))),
            SegmentIntersection::Disjoint
        );
    }

    #[test]
    fn touch_agrees_with_intersect() {
        let pts: Vec<Point> = (0..4)
            .flat_map(|x| (0..3).map(move |y| p(x, y)))
            .collect();
        for a in &pts {
            for b in &pts {
                for c in &pts {
                    for d in &pts {
                        let full = segments_intersect(
                            &Segment::new(a.clone(), b.clone()),
                            &Segment::new(c.clone(), d.clone()),
                        );
                        assert_eq!(
                            segments_touch(a, b, c, d),
                            !full.is_disjoint(),
                            "{a:?} {b:?} {c:?} {d:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn distances() {
        assert_eq!(point_segment_dist2(&p(0, 1), &p(-1, 0), &p(1, 0)), ratio(1, 1));
        assert_eq!(point_segment_dist2(&p(3, 4), &p(0, 0), &p(0, 0)), ratio(25, 1));
        assert_eq!(segment_dist2(&p(0, 0), &p(1, 0), &p(0, 2), &p(1, 3)), ratio(4, 1));
    }
}
