//! Candidate witness locations: reflex midpoints, the iterated chord-and-midpoint
//! arrangement, and the vertical-decomposition seeds used by the approximations.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{
    is_x_monotone, locate_boundary, ray_stretch, reflex_vertices, segment_inside, BoundaryPoint, Point, Polygon,
    Rational, Segment,
};
use crate::monotone::vertical_chord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    Vertex,
    RMid,
    /// End of a maximal chord added in the given iteration.
    ChordHit(usize),
    Midpoint(usize),
    HPoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSet {
    /// Per polygon edge, points with parameter in `[0, 1)`, sorted by parameter.
    pub boundary_points: Vec<Vec<BoundaryPoint>>,
    pub interior_points: Vec<Point>,
    /// First reason each point entered the set.
    pub provenance: BTreeMap<Point, Provenance>,
}

impl CandidateSet {
    pub fn new(p: &Polygon) -> Self {
        CandidateSet { boundary_points: vec![Vec::new(); p.len()], interior_points: Vec::new(), provenance: BTreeMap::new() }
    }

    pub fn with_vertices(p: &Polygon) -> Self {
        let mut c = CandidateSet::new(p);
        for i in 0..p.len() {
            c.insert_boundary(p.boundary_point(i, Rational::zero()), Provenance::Vertex);
        }
        c
    }

    pub fn len(&self) -> usize {
        self.provenance.len()
    }

    pub fn is_empty(&self) -> bool {
        self.provenance.is_empty()
    }

    pub fn contains(&self, q: &Point) -> bool {
        self.provenance.contains_key(q)
    }

    /// Returns false when the point was already present.
    pub fn insert_boundary(&mut self, bp: BoundaryPoint, prov: Provenance) -> bool {
        if self.provenance.contains_key(&bp.point) {
            return false;
        }
        self.provenance.insert(bp.point.clone(), prov);
        let list = &mut self.boundary_points[bp.edge];
        let at = list.partition_point(|q| q.t < bp.t);
        list.insert(at, bp);
        true
    }

    pub fn insert_point(&mut self, p: &Polygon, q: Point, prov: Provenance) -> bool {
        match locate_boundary(p, &q) {
            Some(bp) => self.insert_boundary(bp, prov),
            None => {
                if self.provenance.contains_key(&q) {
                    return false;
                }
                self.provenance.insert(q.clone(), prov);
                let at = self.interior_points.partition_point(|z| z < &q);
                self.interior_points.insert(at, q);
                true
            }
        }
    }

    /// All points: boundary points by (edge, parameter), then interior points.
    pub fn points(&self) -> Vec<Point> {
        self.boundary_points
            .iter()
            .flatten()
            .map(|bp| bp.point.clone())
            .chain(self.interior_points.iter().cloned())
            .collect()
    }

    pub fn boundary_len(&self) -> usize {
        self.boundary_points.iter().map(Vec::len).sum()
    }
}

/// Midpoints of mutually visible reflex vertex pairs.
pub fn r_mid(p: &Polygon) -> Vec<Point> {
    let r = reflex_vertices(p);
    let mut out = Vec::new();
    for (k, &i) in r.iter().enumerate() {
        for &j in &r[k + 1..] {
            if segment_inside(p, p.vertex(i), p.vertex(j)) {
                out.push(p.vertex(i).midpoint(p.vertex(j)));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The chord through `v` and `beta`, extended both ways to where it leaves the polygon.
pub fn maximal_chord(p: &Polygon, v: &Point, beta: &Point) -> Result<Segment> {
    if v == beta || !segment_inside(p, v, beta) {
        return Err(Error::NotVisible);
    }
    let (fwd, back) = chord_ends(p, v, beta);
    Ok(Segment::new(back.point, fwd.point))
}

fn chord_ends(p: &Polygon, v: &Point, beta: &Point) -> (BoundaryPoint, BoundaryPoint) {
    let d = v.to(beta);
    let stay = |q: &Point| locate_boundary(p, q).expect("chord end on boundary");
    let fwd = ray_stretch(p, v, &d).map(|(_, bp)| bp).unwrap_or_else(|| stay(beta));
    let back = ray_stretch(p, beta, &d.neg())
        .map(|(_, bp)| bp)
        .filter(|bp| bp.point != *beta)
        .unwrap_or_else(|| stay(v));
    (fwd, back)
}

/// New points from one arrangement round: midpoints between neighbours on each edge
/// and ends of maximal chords from every point through every visible reflex vertex.
fn round(
    p: &Polygon,
    prev: &CandidateSet,
    reflex: &[usize],
    midpoints: bool,
) -> (Vec<BoundaryPoint>, Vec<BoundaryPoint>) {
    let n = p.len();
    let mut mids = Vec::new();
    if midpoints {
        for e in 0..n {
            let list = &prev.boundary_points[e];
            for (k, bp) in list.iter().enumerate() {
                let next_t = list.get(k + 1).map(|q| q.t.clone()).unwrap_or_else(Rational::one);
                let t = (&bp.t + &next_t) / Rational::from_integer(2.into());
                mids.push(p.boundary_point(e, t));
            }
        }
    }
    let sources: Vec<&BoundaryPoint> = prev.boundary_points.iter().flatten().collect();
    let chords: Vec<BoundaryPoint> = sources
        .par_iter()
        .flat_map_iter(|bp| {
            let v = &bp.point;
            reflex
                .iter()
                .map(|&b| p.vertex(b))
                .filter(|beta| *beta != v && segment_inside(p, v, beta))
                .flat_map(|beta| {
                    let (f, b) = chord_ends(p, v, beta);
                    [f, b]
                })
                .collect::<Vec<_>>()
        })
        .collect();
    (mids, chords)
}

fn check_growth(prev: usize, next: usize, factor: usize, what: &str) -> Result<()> {
    if next > prev * factor {
        return Err(Error::BoundViolation(format!("{what}: {next} points from {prev}, factor {factor}")));
    }
    Ok(())
}

/// `Q_{2k}` of the arrangement generator, starting from the polygon vertices.
pub fn witgen(p: &Polygon, k: usize) -> Result<CandidateSet> {
    witgen_capped(p, k, usize::MAX)?.ok_or_else(|| Error::Invariant("uncapped generation stopped".into()))
}

/// As `witgen`, but gives up with `None` once a round exceeds `cap` points.
pub fn witgen_capped(p: &Polygon, k: usize, cap: usize) -> Result<Option<CandidateSet>> {
    if k < 1 {
        return Err(Error::KOutOfRange);
    }
    generate(p, 2 * k, cap)
}

/// `Q_i` itself, for any round count including odd ones.
pub fn witgen_rounds(p: &Polygon, rounds: usize) -> Result<CandidateSet> {
    generate(p, rounds, usize::MAX)?.ok_or_else(|| Error::Invariant("uncapped generation stopped".into()))
}

fn generate(p: &Polygon, rounds: usize, cap: usize) -> Result<Option<CandidateSet>> {
    if !is_x_monotone(p) {
        return Err(Error::NotMonotone);
    }
    let reflex = reflex_vertices(p);
    let factor = 2 + reflex.len();
    let mut q = CandidateSet::with_vertices(p);
    for i in 1..=rounds {
        let before = q.len();
        if before.saturating_mul(factor) > cap.saturating_mul(4) {
            return Ok(None);
        }
        let (mids, chords) = round(p, &q, &reflex, true);
        for bp in mids {
            q.insert_boundary(bp, Provenance::Midpoint(i));
        }
        for bp in chords {
            q.insert_boundary(bp, Provenance::ChordHit(i));
        }
        check_growth(before, q.len(), factor, "witgen round")?;
        if q.len() > cap {
            return Ok(None);
        }
    }
    Ok(Some(q))
}

/// Opposite ends of the vertical chords through the vertices.
pub fn vertical_decomposition(p: &Polygon) -> Result<Vec<Point>> {
    if !is_x_monotone(p) {
        return Err(Error::NotMonotone);
    }
    let mut h = Vec::new();
    for v in p.vertices() {
        let ch = vertical_chord(p, v)?;
        for end in [ch.a, ch.b] {
            if &end != v {
                h.push(end);
            }
        }
    }
    h.sort();
    h.dedup();
    h.retain(|q| p.index_of(q).is_none());
    Ok(h)
}

/// Approximation candidates: `V ∪ H` then `iterations` rounds, chords every round and
/// midpoints from the second round on.
pub fn q_approx(p: &Polygon, iterations: usize) -> Result<CandidateSet> {
    if iterations < 1 {
        return Err(Error::KOutOfRange);
    }
    let mut q = CandidateSet::with_vertices(p);
    for h in vertical_decomposition(p)? {
        q.insert_point(p, h, Provenance::HPoint);
    }
    let reflex = reflex_vertices(p);
    for i in 1..=iterations {
        let before = q.len();
        let (mids, chords) = round(p, &q, &reflex, i >= 2);
        for bp in mids {
            q.insert_boundary(bp, Provenance::Midpoint(i));
        }
        for bp in chords {
            q.insert_boundary(bp, Provenance::ChordHit(i));
        }
        let factor = if i == 1 { 1 + reflex.len() } else { 2 + reflex.len() };
        check_growth(before, q.len(), factor, "approximation round")?;
    }
    Ok(q)
}

/// Adds reflex midpoints to a candidate set.
pub fn add_r_mid(p: &Polygon, c: &mut CandidateSet) {
    for m in r_mid(p) {
        c.insert_point(p, m, Provenance::RMid);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, ratio};
    use crate::oracle::comb_generator;

    fn sq() -> Polygon {
        Polygon::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap()
    }

    fn l_shape() -> Polygon {
        Polygon::from_ints(&[(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn reflex_midpoints() {
        assert!(r_mid(&sq()).is_empty());
        assert!(r_mid(&l_shape()).is_empty());
        assert_eq!(r_mid(&comb_generator(1, 0)), vec![Point::new(int(6), ratio(1, 2))]);
    }

    #[test]
    fn chords() {
        let s = sq();
        assert_eq!(
            maximal_chord(&s, &Point::from_ints(0, 0), &Point::from_ints(2, 2)).unwrap(),
            Segment::new(Point::from_ints(0, 0), Point::from_ints(2, 2))
        );
        let p2 = comb_generator(1, 0);
        let c = maximal_chord(&p2, &Point::from_ints(0, 3), &Point::new(int(4), ratio(1, 2))).unwrap();
        // slope -5/8 from (0,3) reaches the floor at x = 24/5
        assert_eq!(c, Segment::new(Point::from_ints(0, 3), Point::new(ratio(24, 5), int(0))));
        // along an edge the chord is the whole edge line inside the polygon
        let l = l_shape();
        let c = maximal_chord(&l, &Point::from_ints(4, 2), &Point::from_ints(2, 2)).unwrap();
        assert_eq!(c, Segment::new(Point::from_ints(4, 2), Point::from_ints(0, 2)));
        assert!(matches!(
            maximal_chord(&l, &Point::from_ints(4, 0), &Point::from_ints(1, 4)),
            Err(Error::NotVisible)
        ));
    }

    #[test]
    fn square_witgen_doubles() {
        let q = witgen(&sq(), 1).unwrap();
        assert_eq!(q.len(), 16);
        assert_eq!(q.boundary_points[0].len(), 4);
        assert_eq!(q.provenance[&Point::new(int(1), int(0))], Provenance::Midpoint(1));
        assert_eq!(q.provenance[&Point::new(ratio(1, 2), int(0))], Provenance::Midpoint(2));
        assert!(matches!(witgen(&sq(), 0), Err(Error::KOutOfRange)));
    }

    #[test]
    fn l_shape_images_through_reflex_corner() {
        let q = witgen(&l_shape(), 1).unwrap();
        // (4,0) through (2,2) lands on (0,4); (0,0) through (2,2) is a vertex too
        for pt in [(0, 4), (0, 2), (2, 0)] {
            assert!(q.contains(&Point::from_ints(pt.0, pt.1)), "{pt:?}");
        }
        // (4,1) through (2,2) reaches x = 0 at y = 3
        assert!(q.contains(&Point::from_ints(0, 3)));
        assert!(q.interior_points.is_empty());
    }

    #[test]
    fn vertical_seeds() {
        assert!(vertical_decomposition(&sq()).unwrap().is_empty());
        let h = vertical_decomposition(&comb_generator(1, 0)).unwrap();
        assert!(h.contains(&Point::from_ints(4, 0)));
        assert!(h.contains(&Point::from_ints(5, 0)));
        let pent = Polygon::from_ints(&[(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]).unwrap();
        let q1 = q_approx(&pent, 1).unwrap();
        let seeds = 5 + vertical_decomposition(&pent).unwrap().len();
        assert_eq!(q1.len(), seeds);
        let p2 = comb_generator(1, 0);
        assert!(q_approx(&p2, 1).unwrap().contains(&Point::new(ratio(24, 5), int(0))));
    }
}
