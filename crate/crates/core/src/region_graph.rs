//! Disjointness of visibility regions and the visibility intersection graph.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{contains_closed, is_x_monotone, segments_intersect, segments_touch, Point, Polygon};
use crate::monotone::{MonotoneProfile, ProfileContext};
use crate::visibility::{segment_meets_polygon, visibility_region, VisibilityRegion};

/// Closed-set test on region plus arms.
pub fn regions_intersect_general(va: &VisibilityRegion, vb: &VisibilityRegion) -> bool {
    let (ra, rb) = (&va.region, &vb.region);
    if !bbox_overlap(va, vb) {
        return false;
    }
    if contains_closed(rb, ra.vertex(0)) || contains_closed(ra, rb.vertex(0)) {
        return true;
    }
    for (a0, a1) in ra.edges() {
        for (b0, b1) in rb.edges() {
            if segments_touch(a0, a1, b0, b1) {
                return true;
            }
        }
    }
    if va.arms.iter().any(|s| segment_meets_polygon(rb, &s.a, &s.b))
        || vb.arms.iter().any(|s| segment_meets_polygon(ra, &s.a, &s.b))
    {
        return true;
    }
    va.arms.iter().any(|s| vb.arms.iter().any(|t| segments_touch(&s.a, &s.b, &t.a, &t.b)))
}

fn bbox_overlap(va: &VisibilityRegion, vb: &VisibilityRegion) -> bool {
    let bb = |v: &VisibilityRegion| {
        let mut pts = v.region.vertices().iter().chain(v.arms.iter().flat_map(|s| [&s.a, &s.b]));
        let f = pts.next().unwrap().approx();
        pts.fold((f.0, f.0, f.1, f.1), |(x0, x1, y0, y1), p| {
            let (x, y) = p.approx();
            (x0.min(x), x1.max(x), y0.min(y), y1.max(y))
        })
    };
    let (a, b) = (bb(va), bb(vb));
    // f64 images of rationals are within one ulp, so a small pad keeps this conservative
    let pad = 1e-9 * (1.0 + a.1.abs().max(a.3.abs()).max(b.1.abs()).max(b.3.abs()));
    a.0 <= b.1 + pad && b.0 <= a.1 + pad && a.2 <= b.3 + pad && b.2 <= a.3 + pad
}

/// Constant-time test for two points of the same x-monotone polygon.
pub fn regions_intersect_monotone(pa: &MonotoneProfile, pb: &MonotoneProfile) -> bool {
    let (a, b) = if pa.point.x() <= pb.point.x() { (pa, pb) } else { (pb, pa) };
    if a.point.x() == b.point.x() {
        return true;
    }
    // a's region reaches the vertical chord of b, or b's reaches a's
    if b.point.x() <= &a.x_max_vis || a.point.x() >= &b.x_min_vis {
        return true;
    }
    match (&a.r_bdry, &b.l_bdry) {
        (Some(r), Some(l)) => !segments_intersect(r, l).is_disjoint(),
        _ => true,
    }
}

/// Symmetric adjacency stored as bit rows.
#[derive(Clone, Debug)]
pub struct Vig {
    pub points: Vec<Point>,
    pub monotone_mode: bool,
    rows: Vec<Vec<u64>>,
}

impl Vig {
    pub fn from_fn(points: Vec<Point>, monotone_mode: bool, f: impl Fn(usize, usize) -> bool + Sync) -> Vig {
        let n = points.len();
        let words = n.div_ceil(64).max(1);
        let rows: Vec<Vec<u64>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut row = vec![0u64; words];
                for j in 0..n {
                    if i == j || f(i.min(j), i.max(j)) {
                        row[j / 64] |= 1 << (j % 64);
                    }
                }
                row
            })
            .collect();
        Vig { points, monotone_mode, rows }
    }

    /// Graph on `n` anonymous vertices, for solver tests.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Vig {
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![vec![0u64; words]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i / 64] |= 1 << (i % 64);
        }
        for &(i, j) in edges {
            rows[i][j / 64] |= 1 << (j % 64);
            rows[j][i / 64] |= 1 << (i % 64);
        }
        let points = (0..n as i64).map(|i| Point::from_ints(i, 0)).collect();
        Vig { points, monotone_mode: false, rows }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i]
    }

    pub fn edge_count(&self) -> usize {
        let ones: usize = self.rows.iter().flatten().map(|w| w.count_ones() as usize).sum();
        (ones - self.len()) / 2
    }
}

fn check_inside(p: &Polygon, pts: &[Point]) -> Result<()> {
    match pts.iter().find(|q| !contains_closed(p, q)) {
        Some(q) => Err(Error::PointOutside(q.to_string())),
        None => Ok(()),
    }
}

pub fn build_vig(p: &Polygon, f: &[Point]) -> Result<Vig> {
    if is_x_monotone(p) {
        build_vig_monotone(p, f)
    } else {
        build_vig_general(p, f)
    }
}

pub fn build_vig_monotone(p: &Polygon, f: &[Point]) -> Result<Vig> {
    check_inside(p, f)?;
    let ctx = ProfileContext::new(p)?;
    let profiles: Vec<MonotoneProfile> = f.par_iter().map(|q| ctx.profile(q)).collect::<Result<_>>()?;
    Ok(Vig::from_fn(f.to_vec(), true, |i, j| regions_intersect_monotone(&profiles[i], &profiles[j])))
}

pub fn build_vig_general(p: &Polygon, f: &[Point]) -> Result<Vig> {
    check_inside(p, f)?;
    let regions: Vec<VisibilityRegion> = f.par_iter().map(|q| visibility_region(p, q)).collect::<Result<_>>()?;
    Ok(Vig::from_fn(f.to_vec(), false, |i, j| regions_intersect_general(&regions[i], &regions[j])))
}
