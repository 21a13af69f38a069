use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::Zero;

use super::rational::{format_rational, int, sign, to_f64, Rational};

/// Exact rational point. Keeps a rounded `f64` copy for filtered predicates.
#[derive(Clone)]
pub struct Point {
    x: Rational,
    y: Rational,
    fx: f64,
    fy: f64,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        let fx = to_f64(&x);
        let fy = to_f64(&y);
        Point { x, y, fx, fy }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn approx(&self) -> (f64, f64) {
        (self.fx, self.fy)
    }

    pub fn to(&self, other: &Point) -> Vector {
        Vector::new(&other.x - &self.x, &other.y - &self.y)
    }

    pub fn offset(&self, v: &Vector, t: &Rational) -> Point {
        Point::new(&self.x + &v.x * t, &self.y + &v.y * t)
    }

    pub fn translate(&self, v: &Vector) -> Point {
        Point::new(&self.x + &v.x, &self.y + &v.y)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let two = int(2);
        Point::new((&self.x + &other.x) / &two, (&self.y + &other.y) / &two)
    }

    pub fn dist2(&self, other: &Point) -> Rational {
        self.to(other).norm2()
    }

    pub fn cmp_x(&self, other: &Point) -> Ordering {
        filtered_cmp(self.fx, other.fx, &self.x, &other.x)
    }

    pub fn cmp_y(&self, other: &Point) -> Ordering {
        filtered_cmp(self.fy, other.fy, &self.y, &other.y)
    }
}

fn filtered_cmp(fa: f64, fb: f64, a: &Rational, b: &Rational) -> Ordering {
    let gap = fb - fa;
    let tol = 4.0 * f64::EPSILON * (fa.abs() + fb.abs());
    if gap.is_finite() && gap.abs() > tol && tol.is_finite() {
        if gap > 0.0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else {
        a.cmp(b)
    }
}

impl PartialEq for Point {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x && self.y == other.y
    }
}

impl Eq for Point {}

impl Hash for Point {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.x.hash(state);
        self.y.hash(state);
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic by (x, y).
impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_x(other).then_with(|| self.cmp_y(other))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    pub x: Rational,
    pub y: Rational,
}

impl Vector {
    pub fn new(x: Rational, y: Rational) -> Self {
        Vector { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Vector::new(int(x), int(y))
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn cross(&self, o: &Vector) -> Rational {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn dot(&self, o: &Vector) -> Rational {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    pub fn neg(&self) -> Vector {
        Vector::new(-&self.x, -&self.y)
    }

    pub fn add(&self, o: &Vector) -> Vector {
        Vector::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn scale(&self, t: &Rational) -> Vector {
        Vector::new(&self.x * t, &self.y * t)
    }

    /// Rotated a quarter turn counter-clockwise.
    pub fn perp(&self) -> Vector {
        Vector::new(-&self.y, self.x.clone())
    }

    /// Same direction (positive multiple).
    pub fn same_direction(&self, o: &Vector) -> bool {
        self.cross(o).is_zero() && sign(&self.dot(o)) > 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

impl Orientation {
    pub fn reverse(self) -> Orientation {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
            Orientation::Collinear => Orientation::Collinear,
        }
    }

    fn from_sign(s: i8) -> Orientation {
        match s {
            1 => Orientation::Ccw,
            -1 => Orientation::Cw,
            _ => Orientation::Collinear,
        }
    }
}

/// Exact sign of (q - p) x (r - p). A floating-point filter decides the easy cases.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    let (ax, ay) = (q.fx - p.fx, q.fy - p.fy);
    let (bx, by) = (r.fx - p.fx, r.fy - p.fy);
    let det = ax * by - ay * bx;
    let scale = (q.fx.abs() + p.fx.abs()) * (r.fy.abs() + p.fy.abs())
        + (q.fy.abs() + p.fy.abs()) * (r.fx.abs() + p.fx.abs());
    let bound = 4e-15 * scale;
    if det.is_finite() && scale.is_finite() && scale > 1e-200 && det.abs() > bound {
        return if det > 0.0 {
            Orientation::Ccw
        } else {
            Orientation::Cw
        };
    }
    orientation_exact(p, q, r)
}

pub(crate) fn orientation_exact(p: &Point, q: &Point, r: &Point) -> Orientation {
    let det = p.to(q).cross(&p.to(r));
    Orientation::from_sign(sign(&det))
}

/// Sign of the cross product of two direction vectors.
pub fn turn(u: &Vector, v: &Vector) -> Orientation {
    Orientation::from_sign(sign(&u.cross(v)))
}

/// Orders directions by angle in [0, 2pi) measured from the positive x axis.
pub fn angle_cmp(a: &Vector, b: &Vector) -> Ordering {
    fn half(v: &Vector) -> u8 {
        let sy = sign(&v.y);
        if sy > 0 || (sy == 0 && sign(&v.x) > 0) {
            0
        } else {
            1
        }
    }
    half(a).cmp(&half(b)).then_with(|| match turn(a, b) {
        Orientation::Ccw => Ordering::Less,
        Orientation::Cw => Ordering::Greater,
        Orientation::Collinear => Ordering::Equal,
    })
}

/// True when `d` lies strictly inside the counter-clockwise sweep from `from` to `to`.
/// `from == to` (same direction) denotes the full turn minus that direction.
pub fn strictly_between_ccw(from: &Vector, to: &Vector, d: &Vector) -> bool {
    if d.same_direction(from) {
        return false;
    }
    if to.same_direction(from) {
        return true;
    }
    if d.same_direction(to) {
        return false;
    }
    // 0 for angles in [0, pi) from `from`, 1 for [pi, 2pi)
    let half = |v: &Vector| -> u8 {
        let c = from.cross(v);
        if sign(&c) > 0 || (c.is_zero() && sign(&from.dot(v)) > 0) {
            0
        } else {
            1
        }
    };
    match half(d).cmp(&half(to)) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => turn(d, to) == Orientation::Ccw,
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn orientation_cases() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::Ccw);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)), Orientation::Collinear);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 1)), Orientation::Cw);
    }

    #[test]
    fn orientation_filter_falls_back_on_near_collinear() {
        use super::super::rational::ratio;
        let a = Point::new(ratio(1, 3), ratio(1, 3));
        let b = Point::new(ratio(2, 3), ratio(2, 3));
        let c = Point::new(ratio(1_000_000_000_001, 1_000_000_000_000), int(1));
        assert_eq!(orientation(&a, &b, &c), orientation_exact(&a, &b, &c));
        let d = Point::new(ratio(7, 3), ratio(7, 3));
        assert_eq!(orientation(&a, &b, &d), Orientation::Collinear);
    }

    #[test]
    fn angles() {
        let e = Vector::from_ints(1, 0);
        let n = Vector::from_ints(0, 1);
        let w = Vector::from_ints(-1, 0);
        let s = Vector::from_ints(0, -1);
        assert_eq!(angle_cmp(&e, &n), Ordering::Less);
        assert_eq!(angle_cmp(&w, &s), Ordering::Less);
        assert_eq!(angle_cmp(&s, &e), Ordering::Greater);
        assert_eq!(angle_cmp(&Vector::from_ints(2, 2), &Vector::from_ints(1, 1)), Ordering::Equal);
        assert!(strictly_between_ccw(&e, &w, &n));
        assert!(!strictly_between_ccw(&e, &w, &s));
        assert!(strictly_between_ccw(&w, &e, &s));
        assert!(strictly_between_ccw(&n, &e, &s));
        assert!(!strictly_between_ccw(&n, &e, &Vector::from_ints(1, 1)));
        assert!(strictly_between_ccw(&e, &e, &n));
    }
}
