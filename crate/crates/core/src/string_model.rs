//! Outerstring representation of visibility regions. Each region boundary is cut open
//! on a primary edge, tied to the boundary of a slightly inflated polygon, and its arms
//! are folded into the curve so that every region becomes one simple polyline.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{
    contains_closed, on_segment, point_in_polygon, segments_intersect, segments_touch, validate_polygon, Location,
    Point, Polygon, Rational, Segment, SegmentIntersection, Vector,
};
use crate::visibility::{visibility_region, VisibilityRegion};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapRecord {
    /// Index of the cut edge in the region polygon.
    pub region_edge: usize,
    /// Gap end nearer the edge start; the string finishes here.
    pub start: Point,
    /// Gap end where the string leaves the polygon boundary.
    pub end: Point,
}

#[derive(Clone, Debug)]
pub struct StringModel {
    pub inflated: Polygon,
    /// Per input point, a simple polyline starting at its origin on the inflated boundary.
    pub strings: Vec<Vec<Point>>,
    pub epsilon: Rational,
    pub delta: Rational,
    pub gap_records: Vec<GapRecord>,
}

impl StringModel {
    pub fn origin(&self, i: usize) -> &Point {
        &self.strings[i][0]
    }
}

fn linf(v: &Vector) -> Rational {
    let (x, y) = (v.x.abs(), v.y.abs());
    if x > y {
        x
    } else {
        y
    }
}

/// Points the gaps must keep clear of: polygon vertices, region vertices and arm ends.
fn special_points(p: &Polygon, regions: &[VisibilityRegion]) -> Vec<Point> {
    let mut s: Vec<Point> = p.vertices().to_vec();
    for r in regions {
        s.extend(r.region.vertices().iter().cloned());
        for arm in &r.arms {
            s.push(arm.a.clone());
            s.push(arm.b.clone());
        }
    }
    s.sort();
    s.dedup();
    s
}

/// Gap length: `B / (2(m+1))` where `B` is the smaller of the shortest primary edge over
/// `m` and the least distance between special points, both measured in the max norm.
pub fn choose_epsilon(p: &Polygon, regions: &[VisibilityRegion]) -> Result<Rational> {
    let m = regions.len();
    if m == 0 {
        return Err(Error::DegenerateRegion);
    }
    let mut bound: Option<Rational> = None;
    let mut lower = |v: Rational| {
        if bound.as_ref().is_none_or(|b| &v < b) {
            bound = Some(v);
        }
    };
    for r in regions {
        let shortest = r
            .primary_edges()
            .map(|e| {
                let (a, b) = r.region.edge_points(e);
                linf(&a.to(b))
            })
            .min()
            .ok_or(Error::DegenerateRegion)?;
        if shortest.is_zero() {
            return Err(Error::DegenerateRegion);
        }
        lower(shortest / Rational::from_integer(m.into()));
    }
    let s = special_points(p, regions);
    for (k, a) in s.iter().enumerate() {
        for b in &s[k + 1..] {
            lower(linf(&a.to(b)));
        }
    }
    let b = bound.ok_or(Error::DegenerateRegion)?;
    Ok(b / Rational::from_integer((2 * (m + 1)).into()))
}

/// Offsets every edge outward by `delta` in the max norm of its normal and joins
/// consecutive offset lines.
fn inflate(p: &Polygon, delta: &Rational) -> Option<Polygon> {
    let n = p.len();
    let lines: Vec<(Point, Vector)> = (0..n)
        .map(|i| {
            let (a, b) = p.edge_points(i);
            let d = a.to(b);
            let normal = Vector::new(d.y.clone(), -d.x.clone());
            let shift = normal.scale(&(delta / linf(&normal)));
            (a.translate(&shift), d)
        })
        .collect();
    let verts: Vec<Point> = (0..n)
        .map(|i| {
            let (pa, da) = &lines[(i + n - 1) % n];
            let (pb, db) = &lines[i];
            crate::geometry::line_intersection(pa, da, pb, db)
        })
        .collect();
    let q = validate_polygon(&verts).ok()?;
    let inside = p.vertices().iter().all(|v| point_in_polygon(&q, v) == Location::Interior);
    let apart = p.edges().all(|(a, b)| q.edges().all(|(c, d)| !segments_touch(a, b, c, d)));
    (inside && apart).then_some(q)
}

fn segments_of(poly: &[Point]) -> impl Iterator<Item = (&Point, &Point)> + '_ {
    poly.windows(2).map(|w| (&w[0], &w[1]))
}

fn polylines_touch(a: &[Point], b: &[Point]) -> bool {
    segments_of(a).any(|(p, q)| segments_of(b).any(|(r, s)| segments_touch(p, q, r, s)))
}

/// No two segments meet except consecutive ones at their shared point.
fn is_simple(poly: &[Point]) -> bool {
    let segs: Vec<Segment> = segments_of(poly).map(|(a, b)| Segment::new(a.clone(), b.clone())).collect();
    if segs.iter().any(Segment::is_degenerate) {
        return false;
    }
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let hit = segments_intersect(&segs[i], &segs[j]);
            let ok = match hit {
                SegmentIntersection::Disjoint => true,
                SegmentIntersection::Point(q) => j == i + 1 && q == segs[i].b,
                SegmentIntersection::Overlap(_) => false,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Cut string-like: region boundary from the far gap end around to the near one.
fn cut_boundary(r: &VisibilityRegion, slot: usize, eps: &Rational, special: &[Point]) -> Result<(Vec<Point>, GapRecord)> {
    let e = r.primary_edges().next().ok_or(Error::DegenerateRegion)?;
    let k = r.region.len();
    let (u, w) = r.region.edge_points(e);
    let d = u.to(w);
    let len = linf(&d);
    let at = |off: Rational| u.offset(&d, &(off / &len));
    let g0 = at(eps * Rational::from_integer((2 * slot + 1).into()));
    let g1 = at(eps * Rational::from_integer((2 * slot + 2).into()));
    // the closed gap must hold no special point
    if special.iter().any(|s| on_segment(s, &g0, &g1)) || g1.to(w).dot(&d) <= Rational::zero() {
        return Err(Error::CloneCollision);
    }
    let mut path = vec![g1.clone()];
    for step in 1..=k {
        path.push(r.region.vertex(e + step).clone());
    }
    path.push(g0.clone());
    Ok((path, GapRecord { region_edge: e, start: g0, end: g1 }))
}

/// Folds an arm `a-b` into the polyline by replacing the piece `a-c` of the curve next to
/// `a` with the detour `a, b, c` (or `c, b, a`). A choice of `c` is kept only if the
/// curve stays simple, stays off the inflated boundary, and meets exactly the same other
/// strings as before.
fn fold_arm(
    own: &[Point],
    arm: &Segment,
    own_pending: &[Segment],
    inflated: &Polygon,
    others: &[(Vec<Vec<Point>>, bool)],
) -> Option<Vec<Point>> {
    let (a, b) = (&arm.a, &arm.b);
    let mut curve = own.to_vec();
    let pos = match curve.iter().position(|q| q == a) {
        Some(i) => i,
        None => {
            let i = (0..curve.len() - 1).find(|&i| on_segment(a, &curve[i], &curve[i + 1]))?;
            curve.insert(i + 1, a.clone());
            i + 1
        }
    };
    let half = Rational::new(1.into(), 2.into());
    for forward in [true, false] {
        let nbr = if forward {
            curve.get(pos + 1)
        } else if pos > 1 {
            curve.get(pos - 1)
        } else {
            None
        };
        let Some(nbr) = nbr.cloned() else { continue };
        let dir = a.to(&nbr);
        let mut lambda = half.clone();
        for _ in 0..64 {
            let c = a.offset(&dir, &lambda);
            lambda = &lambda * &half;
            let mut cand = curve.clone();
            if forward {
                cand.splice(pos + 1..pos + 1, [b.clone(), c.clone()]);
            } else {
                cand.splice(pos..pos, [c.clone(), b.clone()]);
            }
            if !is_simple(&cand) {
                continue;
            }
            if own_pending.iter().any(|r| segments_touch(&c, b, &r.a, &r.b))
                || inflated.edges().any(|(u, w)| segments_touch(&c, b, u, w))
            {
                continue;
            }
            let mut mine = vec![cand.clone()];
            mine.extend(own_pending.iter().map(|r| vec![r.a.clone(), r.b.clone()]));
            let same = others
                .iter()
                .all(|(parts, want)| parts.iter().any(|x| mine.iter().any(|y| polylines_touch(x, y))) == *want);
            if same {
                return Some(cand);
            }
        }
    }
    None
}

pub fn build_string_model(p: &Polygon, f: &[Point]) -> Result<StringModel> {
    if f.is_empty() {
        return Err(Error::DegenerateRegion);
    }
    if let Some(q) = f.iter().find(|q| !contains_closed(p, q)) {
        return Err(Error::PointOutside(q.to_string()));
    }
    let regions: Vec<VisibilityRegion> = f.iter().map(|q| visibility_region(p, q)).collect::<Result<_>>()?;
    build_from_regions(p, &regions)
}

pub fn build_from_regions(p: &Polygon, regions: &[VisibilityRegion]) -> Result<StringModel> {
    let eps = choose_epsilon(p, regions)?;
    let special = special_points(p, regions);
    let mut cut = Vec::new();
    let mut gaps = Vec::new();
    for (i, r) in regions.iter().enumerate() {
        let (path, gap) = cut_boundary(r, i, &eps, &special)?;
        cut.push(path);
        gaps.push(gap);
    }

    // tether each cut end to the inflated boundary, shrinking delta until all is clean
    let mut delta = eps.clone();
    let half = Rational::new(1.into(), 2.into());
    let (inflated, tethered) = 'found: {
        for _ in 0..40 {
            if let Some(q) = inflate(p, &delta) {
                let mut strings = Vec::new();
                for (path, gap) in cut.iter().zip(&gaps) {
                    let t = &gap.end;
                    let e = (0..p.len()).find(|&e| {
                        let (a, b) = p.edge_points(e);
                        on_segment(t, a, b)
                    });
                    let Some(e) = e else { return Err(Error::Invariant("gap off the boundary".into())) };
                    let (a, b) = p.edge_points(e);
                    let d = a.to(b);
                    let normal = Vector::new(d.y.clone(), -d.x.clone());
                    let s = t.translate(&normal.scale(&(&delta / linf(&normal))));
                    let mut poly = vec![s];
                    poly.extend(path.iter().cloned());
                    strings.push(poly);
                }
                if tethers_ok(p, &q, &strings) {
                    break 'found (q, strings);
                }
            }
            delta = &delta * &half;
        }
        return Err(Error::Invariant("no valid inflation found".into()));
    };

    // fold arms, keeping the intersection pattern of the string-likes
    let mut strings = tethered;
    let pattern: Vec<Vec<bool>> = (0..regions.len())
        .map(|i| {
            (0..regions.len())
                .map(|j| i != j && string_like_touch(&strings[i], &regions[i].arms, &strings[j], &regions[j].arms))
                .collect()
        })
        .collect();
    let mut pending: Vec<Vec<Segment>> = regions.iter().map(|r| r.arms.clone()).collect();
    for i in 0..regions.len() {
        while let Some(arm) = pending[i].pop() {
            let others: Vec<(Vec<Vec<Point>>, bool)> = (0..regions.len())
                .filter(|&j| j != i)
                .map(|j| {
                    let mut parts = vec![strings[j].clone()];
                    parts.extend(pending[j].iter().map(|s| vec![s.a.clone(), s.b.clone()]));
                    (parts, pattern[i][j])
                })
                .collect();
            strings[i] = fold_arm(&strings[i], &arm, &pending[i], &inflated, &others)
                .ok_or_else(|| Error::Invariant(format!("cannot fold arm of string {i}")))?;
        }
    }
    Ok(StringModel { inflated, strings, epsilon: eps, delta, gap_records: gaps })
}

fn string_like_touch(a: &[Point], a_arms: &[Segment], b: &[Point], b_arms: &[Segment]) -> bool {
    let mut pa: Vec<Vec<Point>> = vec![a.to_vec()];
    pa.extend(a_arms.iter().map(|s| vec![s.a.clone(), s.b.clone()]));
    let mut pb: Vec<Vec<Point>> = vec![b.to_vec()];
    pb.extend(b_arms.iter().map(|s| vec![s.a.clone(), s.b.clone()]));
    pa.iter().any(|x| pb.iter().any(|y| polylines_touch(x, y)))
}

/// Each tether leaves the polygon only at its foot, reaches the inflated boundary only at
/// its origin, and tethers are pairwise disjoint.
fn tethers_ok(p: &Polygon, q: &Polygon, strings: &[Vec<Point>]) -> bool {
    for (i, s) in strings.iter().enumerate() {
        let (o, t) = (&s[0], &s[1]);
        if !q.edges().any(|(a, b)| on_segment(o, a, b)) {
            return false;
        }
        let hits_inflated = q.edges().filter(|(a, b)| segments_touch(o, t, a, b)).count();
        let at_vertex = q.vertices().contains(o);
        if hits_inflated != 1 || at_vertex {
            return false;
        }
        for (a, b) in p.edges() {
            if segments_touch(o, t, a, b) && !on_segment(t, a, b) {
                return false;
            }
        }
        let bad_foot = p.edges().filter(|(a, b)| segments_touch(o, t, a, b)).count() != 1;
        if bad_foot {
            return false;
        }
        for other in &strings[i + 1..] {
            if segments_touch(o, t, &other[0], &other[1]) {
                return false;
            }
        }
    }
    true
}

pub fn strings_intersect(m: &StringModel, i: usize, j: usize) -> Result<bool> {
    let n = m.strings.len();
    if i == j || i >= n || j >= n {
        return Err(Error::IndexError(i, j));
    }
    Ok(polylines_touch(&m.strings[i], &m.strings[j]))
}

/// Points where the string meets the inflated boundary.
pub fn boundary_contacts(m: &StringModel, i: usize) -> usize {
    let s = &m.strings[i];
    let mut hits: Vec<Point> = Vec::new();
    for (a, b) in segments_of(s) {
        for (c, d) in m.inflated.edges() {
            match segments_intersect(&Segment::new(a.clone(), b.clone()), &Segment::new(c.clone(), d.clone())) {
                SegmentIntersection::Disjoint => {}
                SegmentIntersection::Point(q) => hits.push(q),
                // a shared piece counts as many contacts
                SegmentIntersection::Overlap(o) => {
                    hits.push(o.a);
                    hits.push(o.b);
                }
            }
        }
    }
    hits.sort();
    hits.dedup();
    hits.len()
}
